"""Command-line front end.

Exit codes: 0 success, 2 input or validation error, 3 file or parse error,
4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import __version__
from .cfrac import CoprimePair, is_odd_lens, neg_cfrac, q_sequence
from .exactmath import InputError
from .lens import (
    enumerate_tight,
    lens_space,
    noncontractible_certificate,
    survey,
    tight_count,
)
from .seifert import brieskorn
from .surgery import (
    diagram_from_dict,
    diagram_to_dict,
    validate_diagram,
    weinstein_verdict,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_FILE = 3
EXIT_INVARIANT = 4


class ParseError(Exception):
    pass


class InvariantViolation(Exception):
    pass


def _seq(xs) -> str:
    return "[" + ",".join(str(x) for x in xs) + "]"


def _tup(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _yes(b) -> str:
    if b is None:
        return "n/a"
    return "yes" if b else "no"


def table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    cells = [list(header)] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join(
        "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells
    )


def keyvals(pairs: Sequence[tuple[str, str]]) -> str:
    w = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(w)}  {v}" for k, v in pairs)


# Each command builds a JSON-compatible payload; the machine format is the
# payload itself and the text format is rendered from it.


def cfrac_payload(p: int, q: int) -> dict:
    cf = neg_cfrac(CoprimePair(p, q))
    return {
        "p": p,
        "q": q,
        "cfrac": list(cf.coefficients),
        "qseq": list(q_sequence(cf).values),
        "odd": is_odd_lens(cf),
    }


def cfrac_text(d: dict) -> str:
    return keyvals([
        ("lens", f"L({d['p']},{d['q']})"),
        ("cfrac", _seq(d["cfrac"])),
        ("qseq", _seq(d["qseq"])),
        ("odd", _yes(d["odd"])),
    ])


def lens_enumerate_payload(p: int, q: int) -> dict:
    L = lens_space(p, q)
    structures = []
    for r in enumerate_tight(L):
        structures.append(noncontractible_certificate(L, r).to_dict())
    return {
        "p": p,
        "q": q,
        "cfrac": list(L.coefficients),
        "odd": L.odd,
        "count": tight_count(L),
        "structures": structures,
    }


def lens_enumerate_text(d: dict) -> str:
    head = (
        f"L({d['p']},{d['q']})  cfrac {_seq(d['cfrac'])}  odd {_yes(d['odd'])}  "
        f"tight structures {d['count']}"
    )
    rows = [
        (i, _tup(s["rotations"]), s["reeb_class"], _yes(s["certified"]), s["conjugation"])
        for i, s in enumerate(d["structures"], start=1)
    ]
    return head + "\n" + table(
        ("index", "rotations", "reeb_class", "certified", "conjugation"), rows
    )


def lens_count_payload(p: int, q: int) -> dict:
    L = lens_space(p, q)
    return {"p": p, "q": q, "cfrac": list(L.coefficients), "count": tight_count(L)}


def lens_count_text(d: dict) -> str:
    return str(d["count"])


def survey_payload(pmax: int, parallel: bool) -> dict:
    rep = survey(pmax, parallel=parallel)
    return {"rows": [r.to_dict() for r in rep.rows], "summary": rep.summary()}


def survey_text(d: dict) -> str:
    rows = [
        (
            r["p"], r["q"], _seq(r["cfrac"]), _yes(r["odd"]), r["tight_count"],
            r["tuples_checked"], r["min_abs_class"],
            f"{r['max_weighted_rotation']}/{r['bound']}",
            r["class_violations"] + r["bound_violations"],
        )
        for r in d["rows"]
    ]
    s = d["summary"]
    body = table(
        ("p", "q", "cfrac", "odd", "tight", "checked", "min|class|", "weighted/bound",
         "violations"),
        rows,
    )
    capped = " ".join(f"L({p},{q})" for p, q in s["capped_cells"]) or "none"
    return body + "\n" + (
        f"summary: pmax {s['pmax']}, lens spaces {s['lens_spaces']}, "
        f"odd {s['odd_lens_spaces']}, tuples checked {s['tuples_checked']}, "
        f"violations {s['violations']}, capped {capped}"
    )


def brieskorn_payload(n: int) -> dict:
    return brieskorn(n).to_dict()


def brieskorn_text(d: dict) -> str:
    return keyvals([
        ("manifold", d["manifold"]),
        ("seifert", "M(" + ", ".join(d["seifert"]) + ")"),
        ("euler sum", d["euler_sum"]),
        ("h1 order", d["h1_order_indicator"]),
        ("homology sphere", _yes(d["homology_sphere"])),
        ("milnor b2+", str(d["milnor_b2_plus"])),
        ("tight structures", "n/a" if d["tight_count"] is None else str(d["tight_count"])),
        ("weinstein", {True: "holds", False: "open", None: "n/a"}[d["weinstein_holds"]]),
        ("universally tight", _yes(d["universally_tight"])),
        ("poincare sphere", _yes(d["poincare_sphere"])),
    ] + [("note", note) for note in d["notes"]])


def shipped_diagram(name: str) -> Path | None:
    res = resources.files("reebcert").joinpath("diagrams", name)
    return Path(str(res)) if res.is_file() else None


def resolve_diagram_path(path: str) -> Path:
    """Existing paths win; otherwise ``examples/<name>`` names a shipped diagram."""
    p = Path(path)
    if p.exists():
        return p
    if p.parent.name in ("examples", "") and p.suffix == ".diagram":
        shipped = shipped_diagram(p.name)
        if shipped is not None:
            return shipped
    return p


def load_diagram(path: str):
    p = resolve_diagram_path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return diagram_from_dict(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed diagram file {path}: {exc}") from exc


def diagram_payload(path: str) -> dict:
    d = validate_diagram(load_diagram(path))
    v = weinstein_verdict(d)
    if v.chen1_applies and not v.chen2_applies:
        raise InvariantViolation("contact criterion fired without the filling criterion")
    if not (v.reeb_link_class + v.c1_contact_class).is_zero:
        raise InvariantViolation("Reeb link class is not -c1(xi)")
    return {"diagram": diagram_to_dict(d), "verdict": v.to_dict()}


def _class_text(c: dict) -> str:
    if not c["factors"]:
        return "0"
    return " ".join(f"{r} mod {f}" if f else str(r) for f, r in zip(c["factors"], c["residues"]))


def diagram_text(d: dict) -> str:
    v = d["verdict"]
    knots = table(
        ("knot", "tb", "rot", "unknot"),
        [(k["id"], k["tb"], k["rot"], _yes(k["unknot"])) for k in d["diagram"]["knots"]],
    )
    h1 = v["boundary_h1"]
    summary = keyvals([
        ("linking", _seq(_seq(r) for r in d["diagram"]["linking"])),
        ("H1(boundary)", h1["description"]),
        ("c1(W) (cocore basis)", _seq(v["c1_filling"])),
        ("c1(xi)", _class_text(v["c1_contact"])),
        ("reeb link class", _class_text(v["reeb_link_class"])),
        ("chen1 (contact)", _yes(v["chen1_applies"])),
        ("chen2 (filling)", _yes(v["chen2_applies"])),
        ("non-null-homologous", _yes(v["non_null_homologous"])),
    ] + [("note", n) for n in v["notes"]])
    return knots + "\n" + summary


def render(payload: dict, text_fn, fmt: str) -> str:
    if fmt == "machine":
        return json.dumps(payload, indent=2) + "\n"
    return text_fn(payload) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")

    parser = argparse.ArgumentParser(
        prog="reebcert",
        description="Exact certificates for closed Reeb orbits on surgery diagrams.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("cfrac", parents=[common], help="negative continued fraction of -p/q")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)

    sp = sub.add_parser("lens", parents=[common], help="tight structures on L(p,q)")
    sp.add_argument("action", choices=("enumerate", "count"))
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)

    sp = sub.add_parser("survey", parents=[common], help="exhaustive lens-space check")
    sp.add_argument("n", type=int, nargs="?", metavar="PMAX")
    sp.add_argument("--pmax", type=int)
    sp.add_argument("--parallel", choices=("on", "off"), default="off")

    sp = sub.add_parser("diagram", parents=[common], help="Weinstein verdict for a diagram file")
    sp.add_argument("path")

    sp = sub.add_parser("brieskorn", parents=[common], help="Sigma(2,3,6n-1) record")
    sp.add_argument("n", type=int)
    return parser


def run(args: argparse.Namespace) -> str:
    fmt = args.format
    if args.command == "cfrac":
        return render(cfrac_payload(args.p, args.q), cfrac_text, fmt)
    if args.command == "lens":
        if args.action == "count":
            return render(lens_count_payload(args.p, args.q), lens_count_text, fmt)
        return render(lens_enumerate_payload(args.p, args.q), lens_enumerate_text, fmt)
    if args.command == "survey":
        if args.n is not None and args.pmax is not None and args.n != args.pmax:
            raise InputError("conflicting PMAX and --pmax")
        pmax = args.pmax if args.pmax is not None else args.n
        if pmax is None:
            raise InputError("survey needs PMAX (or --pmax N)")
        return render(survey_payload(pmax, args.parallel == "on"), survey_text, fmt)
    if args.command == "diagram":
        return render(diagram_payload(args.path), diagram_text, fmt)
    if args.command == "brieskorn":
        return render(brieskorn_payload(args.n), brieskorn_text, fmt)
    raise AssertionError(args.command)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
