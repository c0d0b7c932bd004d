"""Command-line interface.

    wresbd verify --family {dirac|signature} [--seeds 1,2,3]
                  [--format {text|json}] [--case ID] [--out PATH]

Runs the exact boundary computation for the chosen operator family,
cross-checks every tabulated quantity against the independent numeric
oracle at the given seeds, and writes the verification ledger.  The exit
status is 0 exactly when every entry agrees with the oracle.

Seeds default to the WRESBD_SEEDS environment variable (comma-separated)
and then to "1,2,3".
"""

import argparse
import os
import sys

from .boundary import CASES
from .ledger import build_ledger, render_json, render_text

__all__ = ["main"]

_CASE_IDS = tuple(c.case_id for c in CASES)


def _parse_seeds(text):
    try:
        seeds = [int(s) for s in text.split(",") if s.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "seeds must be a comma-separated list of integers: %r" % text)
    if not seeds:
        raise argparse.ArgumentTypeError("at least one seed is required")
    return seeds


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="wresbd",
        description="Exact boundary-term engine for residue pairings of "
                    "twisted Dirac-type operators, with numeric "
                    "cross-checking.")
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser(
        "verify", help="evaluate all boundary cases and verify against "
                       "the numeric oracle")
    verify.add_argument("--family", required=True,
                        choices=("dirac", "signature"))
    verify.add_argument("--seeds", type=_parse_seeds, default=None,
                        help="comma-separated integer seeds "
                             "(default: WRESBD_SEEDS or 1,2,3)")
    verify.add_argument("--format", choices=("text", "json"),
                        default="text")
    verify.add_argument("--case", choices=_CASE_IDS, default=None,
                        help="restrict to one boundary case")
    verify.add_argument("--out", default=None,
                        help="write the report to this path instead of "
                             "standard output")
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    seeds = args.seeds
    if seeds is None:
        env = os.environ.get("WRESBD_SEEDS", "").strip()
        seeds = _parse_seeds(env) if env else [1, 2, 3]
    case_ids = {args.case} if args.case else None
    ledger = build_ledger(args.family, seeds, case_ids=case_ids)
    report = (render_json(ledger) if args.format == "json"
              else render_text(ledger))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)
    return 0 if ledger["all_match_oracle"] else 1


if __name__ == "__main__":
    sys.exit(main())
