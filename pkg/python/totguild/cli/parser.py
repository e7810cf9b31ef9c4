"""Argument parser for the ``totguild`` command."""

from __future__ import annotations

import argparse
from typing import List


def parse_degrees(text: str) -> List[int]:
    """``"0..4"``, ``"1,3,5"`` or a single degree."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a degree list: {text!r}")


def _filtration(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--filtration", choices=("columns", "rows"), default="columns",
        help="filter the totalization by column (default) or by row",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totguild",
        description="Exact rational homological algebra: totalizations, "
                    "Toda bracket obstructions, spectral sequences and "
                    "cyclic homology.",
    )
    parser.add_argument("--format", choices=("json", "text"), default=None)
    parser.add_argument("--log-level", default=None)
    parser.add_argument("--log-file", default=None)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("homology", help="homology dimensions of a complex")
    p.add_argument("--input", required=True)
    p.add_argument("--degree", type=int, default=None)

    p = sub.add_parser("cone", help="mapping cone of a chain map")
    p.add_argument("--map", required=True)

    p = sub.add_parser("tot", help="totalize a bicomplex or simplicial object")
    p.add_argument("--input", required=True)
    _filtration(p)

    p = sub.add_parser("gr", help="the subquotient Gr^k_n of the totalization")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, required=True, help="filtration index n")
    _filtration(p)

    for name, text in (
        ("toda", "decide a Toda bracket T(k,n)"),
        ("extend", "extend a homotopy simplicial map over k columns from n"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--map", required=True)
        p.add_argument("--order", type=int, required=True)
        p.add_argument("--position", type=int, default=0)

    p = sub.add_parser("bntower", help="totalization tower of a homotopy chain complex")
    p.add_argument("--input", required=True)

    p = sub.add_parser("ss", help="spectral sequence pages against a probe")
    p.add_argument("--input", required=True)
    p.add_argument("--probe", default=None)
    p.add_argument("--variance", choices=("co", "contra"), default=None)
    p.add_argument("--pages", type=int, default=None)
    p.add_argument("--degrees", type=parse_degrees, default=None)
    _filtration(p)

    p = sub.add_parser("group", help="Hochschild, cyclic and Burghelea data of a finite group")
    p.add_argument("action", choices=("hh", "hc", "burghelea"))
    p.add_argument("--table", required=True, help="a .tbl file, or z2, z3, s3")
    p.add_argument("--degrees", type=parse_degrees, default=None)
    p.add_argument("--truncation", type=int, default=None)

    p = sub.add_parser("gamma", help="ranks and identities of the truncated Γ(m)")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--degrees", type=parse_degrees, default=None)
    p.add_argument("--truncation", type=int, default=None)

    p = sub.add_parser("example", help="the windowed pair or the finite surrogate")
    p.add_argument("action", choices=("window", "surrogate"))
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--truncation", type=int, default=None)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--rows", type=int, default=2)
    p.add_argument("--scan", type=int, default=None, metavar="L_MAX")
    return parser
