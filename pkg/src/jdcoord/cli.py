"""Command-line interface: ``jdcoord <command> ...``.

Exit codes: 0 ok, 1 certification failure, 2 parse error, 3 precondition or
axiom violation, 4 negative check result.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import io
from .coordinates import (
    DEFAULT_MAX_CASES,
    ChainedLattice,
    PermVector,
    count_perm_vectors,
    enumerate_perm_vectors,
    eta,
    roundtrip_lattice,
    same_lattice_classes,
    xi,
)
from .jd import is_join_distributive
from .lattice import FiniteLattice, feet_table
from .setsystems import (
    Antimatroid,
    AxiomViolation,
    ConvexGeometry,
    SetSystem,
    amat,
    antimatroid_from_perms,
    check_antimatroid,
    check_convex_geometry,
    dualize,
    geom,
    halojd,
    halomd,
    point_label,
)

EXIT_OK = 0
EXIT_CERT = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_NEGATIVE = 4


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_lattice(path: str) -> tuple[FiniteLattice, list[tuple[int, ...]] | None]:
    data = io.read_json(path)
    if io.document_kind(data) != "lattice":
        raise io.ParseError(f"{path} is not a lattice document")
    return io.lattice_from_json(data)


def _load_chained(path: str) -> ChainedLattice:
    lat, chains = _load_lattice(path)
    if not chains:
        raise ValueError("the lattice file has no chains")
    return ChainedLattice(lat, tuple(chains))


# commands


def cmd_build(args) -> int:
    data = io.read_json(args.permfile)
    cl = eta(io.perm_vector_from_json(data))
    _emit(io.dumps(io.chained_to_json(cl)), args.out)
    return EXIT_OK


def cmd_decode(args) -> int:
    cl = _load_chained(args.latticefile)
    cl.check_cdf()
    _emit(io.dumps(io.perm_vector_to_json(xi(cl))), args.out)
    return EXIT_OK


def _certify(v: PermVector) -> bool:
    cl = eta(v)
    return xi(cl) == v and roundtrip_lattice(cl)


def cmd_roundtrip(args) -> int:
    if args.file is not None:
        data = io.read_json(args.file)
        if io.document_kind(data) == "perms":
            cases = [io.perm_vector_from_json(data)]
            total = 1
        else:
            cl = _load_chained(args.file)
            cl.check_lat()
            ok = roundtrip_lattice(cl)
            _emit(f"{int(ok)}/1 {'PASS' if ok else 'FAIL'}\n", args.out)
            return EXIT_OK if ok else EXIT_CERT
    else:
        if args.n is None or args.k is None:
            raise io.ParseError("roundtrip needs a file or both --n and --k")
        cases = enumerate_perm_vectors(args.n, args.k, args.max_cases)
        total = count_perm_vectors(args.n, args.k)
    failures = [v for v in cases if not _certify(v)]
    passed = total - len(failures)
    for v in failures:
        print(f"roundtrip failed for {v.to_lists()}", file=sys.stderr)
    _emit(f"{passed}/{total} {'FAIL' if failures else 'PASS'}\n", args.out)
    return EXIT_CERT if failures else EXIT_OK


def cmd_enumerate(args) -> int:
    doc: dict = {"n": args.n, "k": args.k}
    if args.classes:
        classes = same_lattice_classes(args.n, args.k, args.max_cases)
        doc["classes"] = [[v.to_lists() for v in members] for members in classes]
    else:
        doc["vectors"] = [v.to_lists() for v in enumerate_perm_vectors(args.n, args.k, args.max_cases)]
    _emit(io.dumps(doc), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    lat, _ = _load_lattice(args.latticefile)
    report = is_join_distributive(lat)
    _emit(io.dumps(report.to_json()), args.out)
    return EXIT_OK if report.join_distributive else EXIT_NEGATIVE


def _as_set_system(data) -> SetSystem:
    s = io.set_system_from_json(data)
    if isinstance(s, (Antimatroid, ConvexGeometry)):
        return s
    # no declared kind: read it as whichever structure it satisfies
    verdict = check_antimatroid(s)
    if verdict:
        return Antimatroid(s.ground, s.family)
    if check_convex_geometry(s):
        return ConvexGeometry(s.ground, s.family)
    raise AxiomViolation(verdict)


def convert(data, target: str) -> dict:
    """Convert a parsed document to ``target`` (antimatroid, convexgeom or lattice)."""
    kind = io.document_kind(data)
    if kind == "perms":
        v = io.perm_vector_from_json(data)
        if target == "lattice":
            return io.chained_to_json(eta(v))
        a = antimatroid_from_perms(v)
        return io.set_system_to_json(a if target == "antimatroid" else dualize(a))
    if kind == "lattice":
        lat, chains = io.lattice_from_json(data)
        if target == "lattice":
            return io.lattice_to_json(lat, chains)
        if target == "antimatroid":
            return io.set_system_to_json(amat(lat))
        return io.set_system_to_json(geom(lat))
    s = _as_set_system(data)
    if target == "lattice":
        return io.lattice_to_json(halojd(s) if isinstance(s, Antimatroid) else halomd(s))
    wanted = Antimatroid if target == "antimatroid" else ConvexGeometry
    return io.set_system_to_json(s if isinstance(s, wanted) else dualize(s))


def cmd_convert(args) -> int:
    _emit(io.dumps(convert(io.read_json(args.infile), args.to)), args.out)
    return EXIT_OK


def to_dot(lat: FiniteLattice, chains: Sequence[Sequence[int]] | None = None) -> str:
    """Hasse diagram in DOT, bottom to top, one rank per height."""
    if chains:
        for c in chains:
            if not lat.is_maximal_chain(c):
                raise ValueError(f"{list(c)} is not a maximal chain")
        F = feet_table(lat, chains)
        names = [point_label(tuple(int(x) for x in row)) for row in F]
    else:
        names = [str(u) for u in range(lat.size)]
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=plaintext];"]
    lines += [f'  {u} [label="{names[u]}"];' for u in range(lat.size)]
    lines += [f"  {a} -> {b};" for a, b in sorted(lat.covers)]
    ranks: dict[int, list[int]] = {}
    for u in range(lat.size):
        ranks.setdefault(lat.height(u), []).append(u)
    for h in sorted(ranks):
        lines.append("  { rank=same; " + " ".join(f"{u};" for u in ranks[h]) + " }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args) -> int:
    lat, chains = _load_lattice(args.latticefile)
    _emit(to_dot(lat, chains), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jdcoord", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--out", help="output file (default stdout)")
        return p

    p = add("build", cmd_build, "lattice with chains from a permutation vector")
    p.add_argument("permfile", help="permutation vector JSON, or - for stdin")

    p = add("decode", cmd_decode, "permutation vector of a lattice with chains")
    p.add_argument("latticefile")

    p = add("roundtrip", cmd_roundtrip, "certify that decode(build(v)) = v")
    p.add_argument("file", nargs="?", help="single permutation vector or chained lattice")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--max-cases", type=int, default=DEFAULT_MAX_CASES)

    p = add("enumerate", cmd_enumerate, "list all permutation vectors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--classes", action="store_true", help="group by isomorphism type of the lattice")
    p.add_argument("--max-cases", type=int, default=DEFAULT_MAX_CASES)

    p = add("check", cmd_check, "report on join-distributivity")
    p.add_argument("latticefile")

    p = add("convert", cmd_convert, "translate between lattices and set systems")
    p.add_argument("infile")
    p.add_argument("--to", required=True, choices=("antimatroid", "convexgeom", "lattice"))

    p = add("export-dot", cmd_export_dot, "Hasse diagram in DOT")
    p.add_argument("latticefile")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except io.ParseError as exc:
        print(f"jdcoord: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"jdcoord: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
