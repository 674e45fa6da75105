"""Print superpolynomials for a range of coprime (n, k).

    python3 scripts/table.py --n 2..4 --k 3..9 [--format json]
"""
import argparse
import time
from math import gcd

from torushomfly.cli import parse_range, render
from torushomfly.series import superpoly


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", default="2..4")
    ap.add_argument("--k", default="3..9")
    ap.add_argument("--format", default="text", choices=("text", "json", "latex"))
    args = ap.parse_args()
    for n in parse_range(args.n):
        for k in parse_range(args.k):
            if n < 2 or n >= k or gcd(n, k) != 1:
                continue
            t0 = time.time()
            S = superpoly(n, k)
            print(f"({n},{k})  delta={S.delta}  terms={len(S.spp.terms)}  {time.time() - t0:.2f}s")
            print("   ", render(S.spp, args.format))


if __name__ == "__main__":
    main()
