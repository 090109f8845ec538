#!/usr/bin/env python3
"""Run the full corpus scan and write the JSON report.

Equivalent to `absorbing-ideals corpus-scan`, importable without
installing the package first.

    python3 scripts/run_corpus_scan.py --seed 7 --out corpus_report.json
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from absorbing_ideals.cli import main  # noqa: E402


if __name__ == "__main__":
    raise SystemExit(main(["corpus-scan", *sys.argv[1:]]))
