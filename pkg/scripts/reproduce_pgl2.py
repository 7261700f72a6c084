"""Reproduce every table of the PGL(2) worked example and check it against the fixtures.

    python scripts/reproduce_pgl2.py [--out report.txt]
"""

import argparse
import io
import sys

from orbitmethod.cli import execute, verify_checks


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", help="also write the report here")
    args = ap.parse_args()
    buf = io.StringIO()
    code = execute(["report", "pgl2", "--all"], buf, sys.stderr)
    text = buf.getvalue()
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    failed = [name for name, ok in verify_checks() if not ok]
    print("\nfixture checks:", "all pass" if not failed else "FAILED " + ", ".join(failed))
    return code or bool(failed)


if __name__ == "__main__":
    sys.exit(main())
