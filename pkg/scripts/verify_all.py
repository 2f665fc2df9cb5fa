#!/usr/bin/env python3
"""Run every claim verification and write the JSON report next to a table."""

import argparse
import contextlib
import io
import json
import sys
from pathlib import Path

from hylag.cli import main


def run() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="verification.json")
    ap.add_argument("--budget", type=int, default=64)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    common = ["verify", "--claim", "all", "--budget", str(args.budget), "--seed", str(args.seed)]
    code = main(common + ["--format", "table"])
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        main(common)
    Path(args.out).write_text(buf.getvalue())
    print(f"wrote {args.out} ({len(json.loads(buf.getvalue())['claims'])} claims)", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(run())
