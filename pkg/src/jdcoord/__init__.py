"""Coordinatization of join-distributive lattices by vectors of permutations."""

from .coordinates import (
    ChainedLattice,
    NotInCDF,
    NotInLat,
    PermVector,
    SizeLimitExceeded,
    coordinatize,
    enumerate_perm_vectors,
    eta,
    feet,
    is_eligible,
    is_L_maximal,
    roundtrip_lattice,
    roundtrip_perm,
    same_lattice_classes,
    suborbital_vectors,
    xi,
)
from .jd import JdReport, NotJoinDistributive, is_join_distributive, is_meet_distributive
from .lattice import FiniteLattice, LatticeError, boolean_lattice, chain_lattice, diamond, pentagon
from .perm import Permutation, compose, invert
from .setsystems import (
    Antimatroid,
    ConvexGeometry,
    SetSystem,
    amat,
    antimatroid_from_perms,
    convex_dimension,
    dualize,
    geom,
    halojd,
    halomd,
)
from .trajectories import jh_permutation, trajectories

__version__ = "0.1.0"
