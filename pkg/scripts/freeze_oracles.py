#!/usr/bin/env python3
"""Run the brute-force oracles once and store their outputs under tests/golden.

Tests read these files instead of recomputing the slow partition and matrix
enumerations; the acceptance suite re-derives a prefix live to check them.
"""

import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from spectre.oracle import alt_mu_oracle, psl2_mu_oracle  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "tests" / "golden"
PSL2_Q = [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]


def dump(name, data):
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / name).write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


def main():
    t0 = time.time()
    dump("alt_mu.json", {str(n): [str(x) for x in alt_mu_oracle(n)] for n in range(5, 61)})
    print("alt_mu done in %.1fs" % (time.time() - t0))
    t0 = time.time()
    dump("psl2_mu.json", {str(q): [str(x) for x in psl2_mu_oracle(q)] for q in PSL2_Q})
    print("psl2_mu done in %.1fs" % (time.time() - t0))


if __name__ == "__main__":
    main()
