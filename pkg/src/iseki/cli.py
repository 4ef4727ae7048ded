"""Command-line surface.

Verbs: validate, ideals, spectrum, topology, morphisms, sweep,
export-dot.  Reports are JSON on stdout (``--out`` writes a file
instead); exit code 0 means every universal oracle passed, 1 means some
oracle failed, 2 means the input was unusable.
"""

import argparse
import sys

from .catalog import builtin_catalog
from .dot import export_dot
from .errors import AxiomViolation, IsekiError, ParseError
from .ideals import all_ideals, classified_ideals
from .morphisms import enumerate_homomorphisms
from .serialize import canonical_json, ingest, semiring_to_json
from .sweep import DEFAULT_CLASSES, morphism_report, sweep, topology_instance_report
from .topology import parse_class, spectrum

CHECK_GROUPS = {
    "t0": ("t0", "t0_witness"),
    "t1": ("t1", "t1_predicate"),
    "sober": ("sober", "sober_criterion"),
    "compact": (
        "quasi_compact",
        "quasi_compact_sum_identity",
        "quasi_compact_maximal_rule",
    ),
    "connected": ("connected", "zero_ideal_in_points"),
    "upset-laws": ("upset_laws", "generator_upset_identity"),
    "irreducible-upsets": ("irreducible_upsets",),
    "disconnection": ("disconnection_witness", "idempotent", "idempotent_status"),
}

UNIVERSAL_KEYS = (
    ("t0", True),
    ("irreducible_upsets", True),
    ("quasi_compact_sum_identity", True),
    ("quasi_compact_maximal_rule", True),
    ("generator_upset_identity", True),
)


def _emit(args, payload):
    text = canonical_json(payload)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_validate(args):
    try:
        s = ingest(args.file)
    except AxiomViolation as exc:
        _emit(args, {"valid": False, "axiom": exc.axiom, "witness": list(exc.witness)})
        return 1
    _emit(args, {"valid": True, "id": s.id, "n": s.n, "one": s.one})
    return 0


def _cmd_ideals(args):
    s = ingest(args.file)
    rows = []
    for ideal, classification in classified_ideals(s):
        rows.append({"members": list(ideal.members), **classification.to_json()})
    _emit(args, {"semiring": s.id, "n": s.n, "ideals": rows})
    return 0


def _cmd_spectrum(args):
    s = ingest(args.file)
    spec = spectrum(s, parse_class(args.cls))
    _emit(args, spec.to_json())
    return 0


def _cmd_topology(args):
    s = ingest(args.file)
    rep = topology_instance_report(s, args.cls)
    if "skipped" in rep:
        _emit(args, rep)
        return 1
    wanted = (
        [c.strip() for c in args.checks.split(",") if c.strip()]
        if args.checks
        else list(CHECK_GROUPS)
    )
    unknown = [c for c in wanted if c not in CHECK_GROUPS]
    if unknown:
        print(f"unknown checks: {', '.join(unknown)}", file=sys.stderr)
        return 2
    out = {
        "semiring": rep["semiring"],
        "class": rep["class"],
        "points": rep["points"],
        "closed_set_count": rep["closed_set_count"],
    }
    for group in wanted:
        for key in CHECK_GROUPS[group]:
            out[key] = rep[key]
    _emit(args, out)
    ok = all(rep[k] == v for k, v in UNIVERSAL_KEYS)
    ok = ok and rep["t1"] == rep["t1_predicate"]
    ok = ok and rep["sober"] == rep["sober_criterion"]
    ok = ok and rep["upset_laws"] == "pass"
    if rep["zero_ideal_in_points"]:
        ok = ok and rep["connected"] is True
    if rep["idempotent_status"].startswith("mechanism-failure"):
        ok = False
    return 0 if ok else 1


def _cmd_morphisms(args):
    src = ingest(args.src)
    dst = ingest(args.dst)
    parse_class(args.cls)
    reports = [
        morphism_report(src, dst, hom, args.cls)
        for hom in enumerate_homomorphisms(src, dst)
    ]
    _emit(args, {"source": src.id, "target": dst.id, "class": args.cls, "homs": reports})
    if args.cls == "prime":
        for rep in reports:
            if not rep["contraction"]:
                return 1
            if rep["continuous"] is not True or not rep["density_biconditional"]:
                return 1
            if not rep["closure_image_equals_kernel_upset"]:
                return 1
    return 0


def _cmd_sweep(args):
    corpus = None
    if args.files:
        corpus = [ingest(path) for path in args.files]
    report = sweep(
        corpus=corpus,
        classes=args.classes,
        enumerate_n=[args.enumerate] if args.enumerate else (),
        jobs=args.jobs,
    )
    _emit(args, report)
    return 0 if report["failures"] == 0 else 1


def _cmd_export_dot(args):
    s = ingest(args.file)
    spec = spectrum(s, parse_class(args.cls))
    text = export_dot(spec)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_catalog(args):
    entries = builtin_catalog()
    _emit(
        args,
        {
            "entries": [
                {"id": e.id, "n": e.semiring.n, "semiring": semiring_to_json(e.semiring)}
                for e in entries
            ]
        },
    )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="iseki",
        description="Finite semiring spectra under the coarse lower topology: "
        "construct, check, and sweep.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a semiring JSON document")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("ideals", help="list and classify every proper ideal")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_ideals)

    p = sub.add_parser("spectrum", help="points of one ideal class")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", default="prime")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("topology", help="full topology report for one spectrum")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", default="prime")
    p.add_argument(
        "--checks",
        default="",
        help="comma list: " + ",".join(CHECK_GROUPS),
    )
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_topology)

    p = sub.add_parser("morphisms", help="homomorphisms and induced maps")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--class", dest="cls", default="prime")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_morphisms)

    p = sub.add_parser("sweep", help="run every oracle over a corpus")
    p.add_argument("files", nargs="*", help="semiring JSON files (default: builtin catalog)")
    p.add_argument("--enumerate", type=int, default=0, metavar="N")
    p.add_argument("--classes", nargs="+", default=None, choices=DEFAULT_CLASSES)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("export-dot", help="Hasse diagram of the specialization order")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", default="prime")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_export_dot)

    p = sub.add_parser("catalog", help="dump the builtin corpus")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_catalog)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except IsekiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
