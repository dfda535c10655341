"""Command-line interface: classification runs, orbit queries, subgroup analysis.

Commands
    classify    admissible subsets of one type, checked against the closed form
    check       admissibility verdict for one index set, with witness root
    two-number  maximal antipodal cardinality for an admissible index set
    orbit       Weyl orbit of xi_I: order formula, enumeration, element dumps
    subgroups   triple analysis for subgroups of the involution group
    verify-all  every published claim at desk scale; nonzero exit on failure

Index sets are 1-based comma lists in Bourbaki numbering, matching all output.
Exit codes: 0 success, 1 internal discrepancy, 2 usage error, 3 enumeration
budget exceeded under --strict.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import admissible as adm
from . import antipodal as ant
from . import gamma as gam
from .admissible import IndexSet
from .roots import RootSystem, RootSystemError, RootSystemType, build, to_json
from .verify import run_all, standard_types

FIXTURE_TYPES = ("A3", "B3", "C3", "D4", "BC2", "F4", "G2", "E6")


def _emit_json(payload: dict | list) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def _parse_type(parser: argparse.ArgumentParser, family: str, rank: int) -> RootSystemType:
    try:
        return RootSystemType(family.upper(), rank)
    except RootSystemError as exc:
        parser.error(str(exc))


def _parse_set(parser: argparse.ArgumentParser, raw: str, rank: int) -> IndexSet:
    try:
        indices = [int(tok) for tok in raw.split(",") if tok.strip()]
        I = IndexSet.from_iterable(indices)
    except ValueError as exc:
        parser.error(f"invalid index set {raw!r}: {exc}")
    if not I:
        parser.error("index set must be non-empty")
    if I.mask >> rank:
        parser.error(f"index set {I} exceeds rank {rank}")
    return I


def _cmd_classify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    rst = _parse_type(parser, args.family, args.rank)
    report = adm.verify_classification(rst)
    if args.format == "json":
        _emit_json(report.to_dict())
    elif args.format == "markdown":
        sys.stdout.write(report.to_markdown())
    else:
        agrees = "agrees" if report.closed_form_agrees else "DISAGREES"
        print(f"{rst}: {len(report.admissible_sets)} admissible sets (closed form {agrees})")
        for I in report.admissible_sets:
            print(f"  {I}")
        for I, expected, got in report.witness_discrepancies:
            print(f"  discrepancy at {I}: closed form {expected}, brute force {got}")
    return 0 if report.closed_form_agrees else 1


def _cmd_check(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    rst = _parse_type(parser, args.family, args.rank)
    I = _parse_set(parser, args.set, rst.rank)
    system = build(rst)
    verdict = adm.is_admissible(system, I)
    witness = None if verdict else adm.admissibility_witness(system, I)
    if args.format == "json":
        _emit_json(
            {
                "family": rst.family,
                "rank": rst.rank,
                "set": list(I),
                "admissible": verdict,
                "witness": list(witness) if witness else None,
            }
        )
    else:
        if verdict:
            print(f"{I} is admissible for {rst}")
        else:
            print(f"{I} is NOT admissible for {rst}: root {witness} is even and nonzero on it")
    return 0


def _orbit_payload(
    system: RootSystem, I: IndexSet, res: ant.OrbitResult, include_elements: bool
) -> dict:
    admissible = adm.is_admissible(system, I)
    payload = {
        "family": system.type.family,
        "rank": system.type.rank,
        "set": list(I),
        "admissible": admissible,
        "two_number": res.size if admissible else None,
        "size": res.size,
        "weyl_order": res.weyl_order,
        "stabilizer_order": res.stabilizer_order,
        "method": res.method,
        "budget_exceeded": res.budget_exceeded,
    }
    if include_elements and res.elements is not None:
        payload["elements"] = [list(v) for v in res.elements]
    return payload


def _cmd_two_number(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    rst = _parse_type(parser, args.family, args.rank)
    I = _parse_set(parser, args.set, rst.rank)
    system = build(rst)
    try:
        value = ant.two_number(system, I)
    except ValueError as exc:
        parser.error(str(exc))
    res = ant.orbit(system, I)
    if args.format == "json":
        _emit_json(_orbit_payload(system, I, res, include_elements=False))
    else:
        print(f"two-number of X_{I} in {rst}: {value}")
        print(f"  = |W| / |stabilizer| = {res.weyl_order} / {res.stabilizer_order}")
    return 0


def _cmd_orbit(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    rst = _parse_type(parser, args.family, args.rank)
    I = _parse_set(parser, args.set, rst.rank)
    system = build(rst)
    want_elements = args.elements or args.dump is not None
    res = ant.orbit(
        system,
        I,
        enumerate=args.enumerate or want_elements,
        keep_elements=want_elements,
        budget=args.budget,
    )
    if res.budget_exceeded:
        print(
            f"orbit size {res.size} exceeds enumeration budget {args.budget}; "
            "reporting the order formula only",
            file=sys.stderr,
        )
    if args.dump is not None and res.elements is not None:
        Path(args.dump).write_bytes(ant.elements_to_bytes(res.elements))
    if args.format == "json":
        _emit_json(_orbit_payload(system, I, res, include_elements=args.elements))
    else:
        print(f"orbit of xi_{I} in {rst}: {res.size} points ({res.method})")
        print(f"  weyl order {res.weyl_order}, stabilizer {res.stabilizer_order}")
        if args.elements and res.elements is not None:
            for v in res.elements:
                print("  " + " ".join(f"{c:3d}" for c in v))
    if res.budget_exceeded and args.strict:
        return 3
    return 0


def _subgroup_analysis(system: RootSystem, I: IndexSet, sub: gam.GammaSubgroup) -> dict:
    triple = gam.is_triple(system, I, sub)
    witness = None if triple else gam.triple_witness(system, I, sub)
    return {
        "family": system.type.family,
        "rank": system.type.rank,
        "set": list(I),
        "subgroup_basis": [list(IndexSet(b)) for b in sub.basis],
        "subgroup_order": sub.order,
        "is_triple": triple,
        "fixed_roots": len(gam.fixed_root_set(system, sub)),
        "witness": list(witness) if witness else None,
    }


def _cmd_subgroups(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    rst = _parse_type(parser, args.family, args.rank)
    system = build(rst)
    if args.preset is not None:
        if args.preset != "a-r-flag-example":
            parser.error(f"unknown preset {args.preset!r}")
        if rst.family != "A":
            parser.error("preset a-r-flag-example requires family A")
        if not args.params:
            parser.error("preset a-r-flag-example requires --params i1,i2,i3")
        i = _parse_set(parser, args.params, rst.rank)
        if len(i) != 3:
            parser.error("--params must name three distinct indices i1<i2<i3")
        i1, i2, i3 = i.indices
        I = i
        sub = gam.subgroup_span([IndexSet.of(i1, i3), IndexSet.of(i2)], rst.rank)
        payload = _subgroup_analysis(system, I, sub)
        payload["preset"] = args.preset
    elif args.gens is not None:
        if not args.set:
            parser.error("--gens requires --set")
        I = _parse_set(parser, args.set, rst.rank)
        gens = [_parse_set(parser, chunk, rst.rank) for chunk in args.gens.split(";") if chunk]
        sub = gam.subgroup_span(gens, rst.rank)
        payload = _subgroup_analysis(system, I, sub)
    else:
        if not args.set:
            parser.error("subgroups requires --set (or --preset)")
        I = _parse_set(parser, args.set, rst.rank)
        if not adm.is_admissible(system, I):
            parser.error(f"{I} is not admissible for {rst}; no subgroup forms a triple")
        minimal = gam.minimal_triple_subgroups(system, I)
        payload = {
            "family": rst.family,
            "rank": rst.rank,
            "set": list(I),
            "gamma_full_order": gam.gamma_full(I, rst.rank).order,
            "minimal_triple_subgroups": [
                {
                    "basis": [list(IndexSet(b)) for b in sub.basis],
                    "order": sub.order,
                    "proper": sub.order < gam.gamma_full(I, rst.rank).order,
                }
                for sub in minimal
            ],
            "exploratory": True,
        }
    if args.format == "json":
        _emit_json(payload)
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return 0


def _write_fixtures(directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    lines = ["# Admissible subsets per irreducible type", ""]
    for rst in standard_types():
        lines.append(adm.verify_classification(rst).to_markdown())
    (directory / "classification.md").write_text("\n".join(lines))
    roots_dir = directory / "roots"
    roots_dir.mkdir(exist_ok=True)
    for name in FIXTURE_TYPES:
        fam, rank = name.rstrip("0123456789"), int(name.lstrip("ABCDEFG"))
        system = build(RootSystemType(fam, rank))
        (roots_dir / f"{name}.json").write_text(to_json(system) + "\n")


def _cmd_verify_all(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    results = run_all()
    if args.format == "json":
        _emit_json(
            [
                {
                    "criterion": r.number,
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                }
                for r in results
            ]
        )
    else:
        for r in results:
            print(r.line())
    if args.fixtures_dir is not None:
        _write_fixtures(Path(args.fixtures_dir))
    return 0 if all(r.passed for r in results) else 1


def _add_type_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("family", help="root-system family: A, B, C, D, E, F, G or BC")
    sub.add_argument("rank", type=int, help="rank of the system")
    sub.add_argument(
        "--format", choices=("plain", "json", "markdown"), default="plain", help="output format"
    )


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rspaces",
        description="classify symmetric-structure-admitting R-spaces and compute antipodal sets",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("classify", help="admissible subsets of one type")
    _add_type_args(p)
    p.set_defaults(fn=_cmd_classify)

    p = commands.add_parser("check", help="admissibility of one index set")
    _add_type_args(p)
    p.add_argument("--set", required=True, help="comma list of 1-based indices, e.g. 1,3")
    p.set_defaults(fn=_cmd_check)

    p = commands.add_parser("two-number", help="maximal antipodal cardinality")
    _add_type_args(p)
    p.add_argument("--set", required=True, help="admissible index set")
    p.set_defaults(fn=_cmd_two_number)

    p = commands.add_parser("orbit", help="Weyl orbit of the canonical element")
    _add_type_args(p)
    p.add_argument("--set", required=True, help="index set defining xi_I")
    p.add_argument("--enumerate", action="store_true", help="run the BFS enumeration")
    p.add_argument("--elements", action="store_true", help="include sorted orbit points")
    p.add_argument("--dump", metavar="PATH", help="write points as little-endian int16 rows")
    p.add_argument("--budget", type=int, default=ant.default_budget(), help="orbit element cap")
    p.add_argument("--strict", action="store_true", help="exit 3 when the budget is exceeded")
    p.set_defaults(fn=_cmd_orbit)

    p = commands.add_parser("subgroups", help="triple analysis for involution subgroups")
    _add_type_args(p)
    p.add_argument("--set", help="index set I")
    p.add_argument("--gens", help="semicolon-separated generator sets, e.g. '1,3;2'")
    p.add_argument("--preset", help="named scenario: a-r-flag-example")
    p.add_argument("--params", help="preset parameters, e.g. 1,2,3")
    p.set_defaults(fn=_cmd_subgroups)

    p = commands.add_parser("verify-all", help="run every published-claim check")
    p.add_argument(
        "--format", choices=("plain", "json", "markdown"), default="plain", help="output format"
    )
    p.add_argument("--fixtures-dir", help="regenerate golden files into this directory")
    p.set_defaults(fn=_cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    return args.fn(parser, args)


if __name__ == "__main__":
    sys.exit(main())
