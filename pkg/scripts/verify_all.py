"""Run every applicable cross-check over a list of (n, k) and summarize.

    python3 scripts/verify_all.py                 # the ten standard pairs
    python3 scripts/verify_all.py --pairs 2,9 4,9
"""
import argparse
import time

from torushomfly.cli import verify_rows

PAIRS = ["2,3", "2,5", "2,7", "3,4", "3,5", "3,7", "4,5", "4,7", "5,6", "5,7"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", nargs="*", default=PAIRS)
    args = ap.parse_args()
    failures = 0
    for pair in args.pairs:
        n, k = (int(x) for x in pair.split(","))
        t0 = time.time()
        rows = verify_rows(n, k)
        bad = [name for name, ok, _ in rows if not ok]
        failures += bool(bad)
        status = "PASS" if not bad else "FAIL " + ", ".join(bad)
        print(f"({n},{k})  {len(rows)} checks  {time.time() - t0:6.2f}s  {status}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
