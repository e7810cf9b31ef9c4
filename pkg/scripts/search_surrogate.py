"""Enumerate the surrogate family and validate the committed fixture.

    poetry run python scripts/search_surrogate.py --values -1 0 1
"""

import argparse
import sys

from totguild.formats import dump, simplicial_map_file
from totguild.freesimp import (SURROGATE_FILE, check_surrogate, family_member,
                               search_surrogates, surrogate_counterexample)
from totguild.logs import logger
from totguild.utils import dump_canonical, sanitize_fields


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--values", type=int, nargs="+", default=[-1, 0, 1])
    parser.add_argument(
        "--write", action="store_true",
        help="rewrite the fixture from the first counterexample found",
    )
    args = parser.parse_args()

    found = search_surrogates(args.values)
    if not found:
        logger.error("no counterexample in the family")
        return 1
    logger.info(f"first counterexample: f0, f2, h1, h2 = {found[0]}")

    if args.write:
        SURROGATE_FILE.write_text(
            dump(simplicial_map_file(family_member(*found[0]))), encoding="utf-8"
        )
        logger.info(f"wrote {SURROGATE_FILE}")

    check = check_surrogate(surrogate_counterexample())
    sys.stdout.write(dump_canonical(sanitize_fields(check.to_dict())))
    return 0 if check.is_counterexample else 1


if __name__ == "__main__":
    sys.exit(main())
