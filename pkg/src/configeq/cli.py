"""Command-line front end.

Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
3 resource cap or inconclusive search.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .configs import (ONE_SIDED, TWO_SIDED, ConfigurationPair, block_stabilizer, carrier,
                      configuration_set, is_normal_subgroup, normal_subset_check)
from .equivalence import (DISTINGUISHED, INCONCLUSIVE, MATCHED, SearchBounds, equivalent_finite,
                          load_certificate, replay_certificate, save_certificate)
from .golden import (GoldenSystem, QuotientMap, direct_product_golden, finite_golden_system,
                     finite_series, polycyclic_golden_system, polynomial_type_golden,
                     subnormal_series_golden, verify_axioms, verify_golden_property)
from .groups import BallCapExceeded, FiniteGroup, Group, PolycyclicGroup, group_from_document, load_group
from .partitions import partition_from_document, summarize
from .words import evaluate, format_pair, parse_pair

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load_json(path) -> dict:
    """A JSON file, or inline JSON when the argument starts with '{' or '['."""
    if str(path).lstrip()[:1] in "{[" and str(path).strip():
        try:
            return json.loads(path)
        except json.JSONDecodeError as exc:
            raise UsageError(f"inline JSON not valid ({exc})") from None
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from None


def _gens(G: Group, text: str | None) -> tuple:
    """Comma-separated words over the group's own generators, e.g. "1, 2^-1 1"."""
    if text is None:
        return tuple(G.generators)
    return tuple(evaluate(parse_pair(w), G.generators, G) for w in text.split(","))


def _elements(G: Group, text: str) -> list:
    try:
        values = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--elements must be a JSON list ({exc})") from None
    if not isinstance(values, list):
        raise UsageError("--elements must be a JSON list")
    return [G.parse_element(v) for v in values]


def _emit(out, args, lines: list[str], doc: dict) -> None:
    if args.format == "structured":
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


# -- con / tcon ---------------------------------------------------------------------------------

def cmd_configs(args, out) -> int:
    G = load_group(args.group)
    P = ConfigurationPair(G, _gens(G, args.gens), partition_from_document(G, _load_json(args.partition)))
    C = configuration_set(P, args.command, args.radius, jobs=args.jobs)
    if not C.exact:
        print(f"note: witnessed at radius {C.radius}; not a complete configuration set", file=sys.stderr)
    _emit(out, args, [C.header()] + C.lines(), C.to_document())
    return EXIT_OK


# -- golden ----------------------------------------------------------------------------------------

def _system_for(G: Group) -> GoldenSystem:
    if isinstance(G, PolycyclicGroup):
        return polycyclic_golden_system(G)
    if isinstance(G, FiniteGroup):
        return finite_golden_system(G)
    raise UsageError(f"no default golden system for a {G.kind} group")


def _build_system(args) -> GoldenSystem:
    kind = args.construction
    if kind == "poly-type":
        if not args.polynomial or not args.factor:
            raise UsageError("poly-type needs --polynomial and --factor NAME=FILE")
        systems = {}
        for spec in args.factor:
            name, _, path = spec.partition("=")
            if not path:
                raise UsageError(f"--factor expects NAME=FILE, got {spec!r}")
            systems[name] = _system_for(load_group(path))
        return polynomial_type_golden(args.polynomial, systems)
    if args.group is None:
        raise UsageError(f"{kind} construction needs a group file")
    G = load_group(args.group)
    if kind == "polycyclic":
        if not isinstance(G, PolycyclicGroup):
            raise UsageError("polycyclic construction needs a polycyclic group")
        return polycyclic_golden_system(G)
    if kind == "finite":
        q = None
        if args.quotient:
            doc = _load_json(args.quotient)
            Q = group_from_document(doc["target"])
            q = QuotientMap.from_images(G, Q, [Q.parse_element(v) for v in doc["images"]])
            problems = q.check()
            if problems:
                raise UsageError("quotient map: " + "; ".join(problems[:3]))
        return finite_golden_system(G, q)
    if kind == "series":
        if not isinstance(G, FiniteGroup) or not args.series:
            raise UsageError("series construction needs a finite group and --series FILE")
        chain = [[G.parse_element(v) for v in sub] for sub in _load_json(args.series)["chain"]]
        return subnormal_series_golden(finite_series(G, chain))
    if kind == "product":
        return direct_product_golden([_system_for(F) for F in getattr(G, "factors", [G])])
    raise UsageError(f"unknown construction {kind!r}")


def cmd_golden(args, out) -> int:
    sys_ = _build_system(args)
    G, Q = sys_.group, sys_.target
    pts = carrier(G, args.radius)
    axioms = verify_axioms(sys_, args.radius)
    pairs = {}
    for x in pts:
        y = sys_.quotient(x)
        if y != Q.identity and y not in pairs:
            pairs[y] = sys_.pair_of(y)
    scope = "exact" if axioms.exact else f"radius {args.radius}"
    lines = [f"construction {sys_.kind}", f"generators {len(sys_.gens)}",
             f"sigma range {len(sys_.sigma_range)}"]
    lines += [f"  {i}: {v!r}" for i, v in enumerate(sys_.sigma_range, start=1)]
    lines.append(f"golden pairs ({len(pairs)} non-identity cosets, {scope})")
    lines += [f"  {Q.format_element(y)}: {format_pair(p)}" for y, p in pairs.items()]
    lines.append("partition")
    lines += ["  " + s for s in summarize(sys_.partition(), pts, G)]
    lines.append(f"axioms {'ok' if axioms.ok else 'violated'} ({axioms.checked} elements, {scope})")
    lines += ["  " + v for v in axioms.word_violations + axioms.kernel_violations]
    doc = {"construction": sys_.kind, "generators": [G.format_element(g) for g in sys_.gens],
           "sigma_range": [repr(v) for v in sys_.sigma_range],
           "pairs": {Q.format_element(y): format_pair(p) for y, p in pairs.items()},
           "axioms_ok": axioms.ok, "exact": axioms.exact}
    _emit(out, args, lines, doc)
    return EXIT_OK if axioms.ok else EXIT_NEGATIVE


def cmd_golden_verify(args, out) -> int:
    sys_ = _build_system(args)
    if args.counterpart:
        doc = _load_json(args.counterpart)
        H = group_from_document(doc["group"])
        gens = _gens(H, ",".join(doc["gens"]) if "gens" in doc else None)
        cp = ConfigurationPair(H, gens, partition_from_document(H, doc["partition"]))
    else:
        cp = sys_.config_pair()
    rep = verify_golden_property(sys_, cp, args.radius)
    scope = "exact" if rep.exact else f"radius {args.radius}"
    if not rep.gate_passed:
        lines = [f"gate failed: {rep.note} ({scope})"]
    else:
        lines = [f"golden property {'holds' if rep.ok else 'violated'} ({rep.checked} checks, {scope})"]
        lines += ["  " + v for v in rep.inclusion_violations + rep.disjointness_violations]
        if rep.note:
            lines.append("note: " + rep.note)
    lines.append("note: only the supplied counterpart is checked")
    doc = {"gate_passed": rep.gate_passed, "ok": rep.ok, "checked": rep.checked, "exact": rep.exact,
           "inclusion_violations": rep.inclusion_violations,
           "disjointness_violations": rep.disjointness_violations}
    _emit(out, args, lines, doc)
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


# -- compare --------------------------------------------------------------------------------------

def cmd_compare(args, out) -> int:
    if args.replay:
        V = load_certificate(args.replay)
        G = load_group(args.groups[0]) if len(args.groups) > 0 else None
        H = load_group(args.groups[1]) if len(args.groups) > 1 else None
        ok = replay_certificate(V, G, H)
        _emit(out, args, [f"replay {'ok' if ok else 'failed'}: {V.status}"], {"replay": ok, "status": V.status})
        return EXIT_OK if ok else EXIT_NEGATIVE
    if len(args.groups) != 2:
        raise UsageError("compare needs two group files (or --replay CERT)")
    G, H = (load_group(p) for p in args.groups)
    bounds = SearchBounds(max_word_len=args.max_word_len, max_blocks=args.max_blocks,
                          max_gens=args.max_gens)
    V = equivalent_finite(G, H, bounds, args.mode, jobs=args.jobs)
    if args.certificate and V.certificate is not None:
        save_certificate(V, args.certificate)
    lines = [V.status]
    if V.certificate is not None:
        lines += json.dumps(V.certificate, sort_keys=True, indent=1).splitlines()
    else:
        lines.append(json.dumps(V.stats, sort_keys=True))
    _emit(out, args, lines, V.to_document())
    return {MATCHED: EXIT_OK, DISTINGUISHED: EXIT_NEGATIVE, INCONCLUSIVE: EXIT_CAP}[V.status]


# -- normal subsets and stabilizers -------------------------------------------------------------------

def cmd_normal(args, out) -> int:
    G = load_group(args.group)
    E = _elements(G, args.elements)
    ok = normal_subset_check(G, E, _gens(G, args.gens))
    _emit(out, args, ["normal" if ok else "not normal"], {"normal": ok})
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_stabilizer(args, out) -> int:
    G = load_group(args.group)
    if not G.is_finite:
        raise UsageError("stabilizer needs a finite group")
    M = _elements(G, args.elements)
    stab = block_stabilizer(G, M)
    normal = is_normal_subgroup(G, stab)
    lines = [f"order {len(stab)}", "elements " + " ".join(G.format_element(x) for x in stab),
             f"normal subgroup {'yes' if normal else 'no'}"]
    _emit(out, args, lines, {"elements": [G.format_element(x) for x in stab], "normal": normal})
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    from .selftest import run
    ok = run(args.seed, out=lambda s: out.write(s + "\n"))
    return EXIT_OK if ok else EXIT_NEGATIVE


# -- parser -----------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="configeq", description="Configuration sets and golden systems of groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("lines", "structured"), default="lines")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("con", "tcon"):
        s = sub.add_parser(name, parents=[common], help=f"{'two' if name == 'tcon' else 'one'}-sided configuration set")
        s.add_argument("group")
        s.add_argument("partition")
        s.add_argument("--gens", help='comma-separated words over the group generators, e.g. "1, 2^-1"')
        s.add_argument("--radius", type=int, default=None)
        s.set_defaults(func=cmd_configs)

    for name, func in (("golden", cmd_golden), ("golden-verify", cmd_golden_verify)):
        s = sub.add_parser(name, parents=[common],
                           help="build a golden system" if name == "golden" else "check the golden property")
        s.add_argument("group", nargs="?")
        s.add_argument("--construction", default="finite",
                       choices=("finite", "polycyclic", "poly-type", "series", "product"))
        s.add_argument("--quotient", help="JSON file with 'target' group document and 'images'")
        s.add_argument("--series", help="JSON file with 'chain': subgroup element lists")
        s.add_argument("--polynomial")
        s.add_argument("--factor", action="append", help="NAME=GROUPFILE for poly-type")
        s.add_argument("--radius", type=int, default=4)
        if name == "golden-verify":
            s.add_argument("--counterpart", help="JSON pair file: group, gens, partition (default: own pair)")
        s.set_defaults(func=func)

    s = sub.add_parser("compare", parents=[common], help="bounded equivalence search between finite groups")
    s.add_argument("groups", nargs="*")
    s.add_argument("--mode", choices=("con", "tcon"), default="con")
    s.add_argument("--max-word-len", type=int, default=None)
    s.add_argument("--max-blocks", type=int, default=3)
    s.add_argument("--max-gens", type=int, default=2)
    s.add_argument("--certificate", help="write the certificate to this file")
    s.add_argument("--replay", help="replay a certificate file instead of searching")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("normal-check", parents=[common], help="is a subset normal (E g = g E)?")
    s.add_argument("group")
    s.add_argument("--elements", required=True, help="JSON list of elements")
    s.add_argument("--gens")
    s.set_defaults(func=cmd_normal)

    s = sub.add_parser("stabilizer", parents=[common], help="block stabilizer {h : hM = M}")
    s.add_argument("group")
    s.add_argument("--elements", required=True, help="JSON list of elements")
    s.set_defaults(func=cmd_stabilizer)

    s = sub.add_parser("selftest", parents=[common], help="run the built-in invariant checks")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    if argv[:2] == ["golden", "verify"]:
        argv = ["golden-verify"] + argv[2:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (BallCapExceeded, MemoryError) as exc:
        print(f"error: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
