"""Command line entry point ``verify``.

    verify list-claims
    verify run --claim seifert-type --param family=pretzel-335-t1 --param n=1
    verify sweep --family pretzel-335-t1 --range -100..100 --format json
    verify link "M(0; 2/5, -3/4, 1/3)"
    verify sfs "SFS(-1; 2/1, 3/1, 5/1)"
    verify surgery "L{ lk=[[0,1],[1,0]], slopes=[0/1, 0/1] }"
    verify word xxyyy

Exit status is 0 iff no report failed, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import heegaard, montesinos, seifert, surgery, verify
from .errors import ClaimError, TopologyError

_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def _parse_range(text: str) -> tuple[int, int]:
    m = _RANGE_RE.match(text)
    if m is None:
        raise argparse.ArgumentTypeError(f"expected <min>..<max>, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _parse_param(text: str) -> tuple[str, str]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    return key.strip(), value.strip()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="verify", description="Replay Seifert-surgery computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list-claims", help="list registered claim ids")

    run = sub.add_parser("run", help="run one claim")
    run.add_argument("--claim", required=True)
    run.add_argument("--param", action="append", type=_parse_param, default=[], metavar="K=V")
    run.add_argument("--format", choices=("json", "text"), default="json")

    sweep = sub.add_parser("sweep", help="check a twist family over a range of n")
    sweep.add_argument("--family", required=True, choices=sorted(verify.FAMILIES))
    sweep.add_argument("--range", required=True, type=_parse_range, dest="n_range", metavar="MIN..MAX")
    sweep.add_argument("--format", choices=("json", "text"), default="json")
    sweep.add_argument("--workers", type=int, default=1)

    for name, helptext in (
        ("link", "invariants of a Montesinos link M(e0; b1/a1, ...)"),
        ("sfs", "invariants of a Seifert space SFS(b; a1/b1, ...)"),
        ("surgery", "first homology of L{ lk=[[...]], slopes=[...] }"),
        ("word", "primitivity of a word in F(x, y)"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("text")
    return parser


def _glue_range(argv: list[str]) -> list[str]:
    # "--range -100..100" would otherwise be read as an option
    out = []
    it = iter(argv)
    for arg in it:
        if arg == "--range":
            out.append("--range=" + next(it, ""))
        else:
            out.append(arg)
    return out


def _describe_link(text: str) -> dict:
    link = montesinos.parse_link(text)
    info = {"link": str(link), "determinant": montesinos.determinant(link)}
    if len(link.tangles) >= 3:
        info["normalized"] = str(montesinos.normalize(link))
        cover = montesinos.double_branched_cover(link)
        info["double_branched_cover"] = _describe_sfs_obj(cover)
    return info


def _describe_sfs_obj(s: seifert.SeifertInvariants) -> dict:
    n = seifert.normalize(s)
    info = {"invariants": str(s), "normalized": str(n),
            "euler_number": str(seifert.euler_number(s)), "h1": str(seifert.h1(s))}
    if len(n.fibers) == 3:
        info["type"] = list(seifert.type_of(n).indices)
    return info


def _describe_word(text: str) -> dict:
    w = heegaard.FreeWord.parse(text)
    return {
        "word": str(w),
        "cyclically_reduced": str(heegaard.cyclically_reduce(w)),
        "exponent_gcd": heegaard.abelianization_test(w),
        "minimal_representative": str(heegaard.minimal_representative(w)),
        "primitive": heegaard.is_primitive(w),
    }


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(_glue_range(list(sys.argv[1:] if argv is None else argv)))
    try:
        if args.command == "list-claims":
            print("\n".join(verify.list_claims()))
            return 0
        if args.command in ("run", "sweep"):
            if args.command == "run":
                reports = [verify.run_claim(args.claim, dict(args.param))]
            else:
                lo, hi = args.n_range
                reports = verify.sweep_family(args.family, lo, hi, workers=args.workers)
            print(verify.to_json(reports) if args.format == "json" else verify.render_text(reports))
            return 0 if verify.all_passed(reports) else 1
        if args.command == "link":
            info = _describe_link(args.text)
        elif args.command == "sfs":
            info = _describe_sfs_obj(seifert.parse_sfs(args.text))
        elif args.command == "surgery":
            link = surgery.parse_surgery_link(args.text)
            info = {"link": str(link), "h1": str(surgery.h1_of_surgery(link))}
        else:
            info = _describe_word(args.text)
        print(json.dumps(info, indent=2))
        return 0
    except (ClaimError, TopologyError) as exc:
        print(f"verify: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
