import pytest
from hypothesis import given, settings

import oracles
from corpus import CHAINS, NEGATIVE, TRANSPOSITION, standard_lattices
from jdcoord.coordinates import PermVector, eta
from jdcoord.jd import (
    TAGS,
    ChainsDontCoverJir,
    NotJoinDistributive,
    cdf_violation,
    chain_length_range,
    distributive_embedding,
    embed_into_power_chain,
    find_cover_preserving_diamond,
    find_diamond,
    has_cover_preserving_diamond,
    has_diamond,
    has_unique_meet_decompositions,
    irredundant_meet_decompositions,
    is_join_distributive,
    is_meet_distributive,
    is_meet_semidistributive,
    is_semimodular,
    join_embedding_problem,
    maximal_chain_lengths_equal_mir,
    upstar_interval_is_boolean,
    upstar_interval_is_distributive,
)
from jdcoord.lattice import boolean_lattice, chain_lattice, diamond, diamond_with_tail, pentagon
from test_lattice import closure_lattices

B3, M3, N5 = boolean_lattice(3), diamond(), pentagon()
CHAIN = chain_lattice(4)


def test_semimodularity():
    assert is_semimodular(B3)
    assert not is_semimodular(N5)
    assert is_semimodular(M3)


def test_meet_semidistributivity():
    assert not is_meet_semidistributive(M3)
    assert is_meet_semidistributive(CHAIN)
    assert is_meet_semidistributive(B3)


def test_diamonds():
    assert has_diamond(M3) and has_cover_preserving_diamond(M3)
    assert not has_diamond(B3) and not has_cover_preserving_diamond(B3)
    assert has_diamond(diamond_with_tail())
    assert find_diamond(M3) == (0, 1, 2, 3, 4)


def test_diamond_that_is_not_cover_preserving():
    # M_3 with one atom stretched into a 2-chain: 0 < 1 < 5 < 4
    from jdcoord.lattice import FiniteLattice

    lat = FiniteLattice(6, [(0, 1), (1, 5), (5, 4), (0, 2), (0, 3), (2, 4), (3, 4)])
    assert has_diamond(lat)
    assert find_cover_preserving_diamond(lat) is None


def test_upstar_intervals():
    assert not upstar_interval_is_distributive(M3)
    assert not upstar_interval_is_boolean(M3)
    assert upstar_interval_is_distributive(B3) and upstar_interval_is_boolean(B3)
    assert upstar_interval_is_distributive(CHAIN) and upstar_interval_is_boolean(CHAIN)


def test_chain_lengths_against_mir():
    assert maximal_chain_lengths_equal_mir(B3)
    assert not maximal_chain_lengths_equal_mir(M3)
    assert chain_length_range(N5) == (2, 3)
    assert not maximal_chain_lengths_equal_mir(N5)


def test_meet_decompositions():
    assert has_unique_meet_decompositions(B3)
    assert has_unique_meet_decompositions(CHAIN)
    assert not has_unique_meet_decompositions(M3)
    decs = irredundant_meet_decompositions(M3, 0)
    assert len(decs) == 3 and all(len(d) == 2 for d in decs)
    assert irredundant_meet_decompositions(B3, 0) == [frozenset({3, 5, 6})]


def test_report_positive_and_negative():
    rep = is_join_distributive(B3)
    assert rep.verdicts == dict.fromkeys(TAGS, True) and rep.witness is None
    assert rep.embedding is not None
    rep = is_join_distributive(M3)
    assert rep.verdicts == dict.fromkeys(TAGS, False)
    assert "diamond" in rep.witness
    assert not is_join_distributive(N5)
    assert is_join_distributive(N5).to_json()["join_distributive"] is False


def test_eta_images_are_join_distributive():
    for perms in (TRANSPOSITION, ([2, 1, 3], [3, 2, 1]), ([1, 2], [2, 1], [2, 1])):
        assert is_join_distributive(eta(PermVector.of(*perms)).lattice)


def test_meet_distributivity_is_the_dual_notion():
    assert is_meet_distributive(B3)
    lat = eta(PermVector.of([3, 2, 1])).lattice
    assert is_join_distributive(lat)
    assert not is_meet_distributive(lat)
    assert is_meet_distributive(lat.dual())


def test_cdf_violation_names_the_problem():
    assert cdf_violation(B3) is None
    assert "diamond" in cdf_violation(M3)
    assert "semimodular" in cdf_violation(N5)


# embeddings


def test_chain_embeds_by_height():
    emb = embed_into_power_chain(CHAIN, [tuple(range(5)), tuple(range(5))])
    assert all(emb[u] == (u, u) for u in range(5))


def test_boolean_example_embedding():
    emb = embed_into_power_chain(B3, CHAINS)
    assert len(set(emb.values())) == 8
    assert emb[7] == (3, 3, 3) and emb[0] == (0, 0, 0)


def test_feet_map_preserves_meets_but_not_joins():
    emb = embed_into_power_chain(B3, CHAINS)
    a, b = 1, 2
    assert emb[a] == (1, 0, 0) and emb[b] == (0, 1, 0)
    # a v b sits on two chains at index 2, so its feet exceed the componentwise max
    assert emb[a | b] == (2, 2, 0)
    assert emb[B3.meet(3, 6)] == tuple(map(min, emb[3], emb[6]))


def test_transposition_embedding_image():
    cl = eta(PermVector.of(*TRANSPOSITION))
    emb = embed_into_power_chain(cl.lattice, cl.chains)
    assert set(emb.values()) == {(0, 0), (0, 1), (1, 0), (2, 2), (3, 3)}


def test_embedding_preconditions():
    with pytest.raises(NotJoinDistributive):
        embed_into_power_chain(M3, [(0, 1, 4), (0, 2, 4)])
    with pytest.raises(ChainsDontCoverJir):
        embed_into_power_chain(B3, [(0, 1, 3, 7), (0, 2, 3, 7)])


def test_distributive_embedding():
    for lat in (B3, CHAIN, eta(PermVector.of(*TRANSPOSITION)).lattice):
        emb = distributive_embedding(lat)
        assert join_embedding_problem(lat, emb) is None
    with pytest.raises(NotJoinDistributive):
        distributive_embedding(M3)


@pytest.mark.parametrize("name", sorted(standard_lattices()))
def test_standard_lattices_against_oracle(name):
    lat = standard_lattices()[name]
    o = oracles.Poset.from_covers(lat.size, lat.covers)
    assert is_semimodular(lat) == oracles.is_semimodular(o)
    assert is_meet_semidistributive(lat) == oracles.is_meet_semidistributive(o)
    assert has_diamond(lat) == oracles.has_diamond(o)
    assert bool(is_join_distributive(lat)) == (name not in NEGATIVE)


@settings(max_examples=80, deadline=None)
@given(closure_lattices())
def test_characterizations_agree_on_random_lattices(lat):
    # strict mode raises if any two characterizations disagree
    rep = is_join_distributive(lat)
    o = oracles.Poset(lat.size, lat.leq.tolist())
    expected = oracles.is_semimodular(o) and oracles.is_meet_semidistributive(o)
    assert rep.join_distributive == expected
    if expected:
        assert join_embedding_problem(lat, rep.embedding) is None
        lo, hi = chain_length_range(lat)
        assert lo == hi == len(lat.meet_irreducibles())
