"""Command line front end.

Exit codes: 0 success, 2 usage error, 3 internal assertion, 4 conjecture mismatch.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass
from math import gcd
from pathlib import Path

from . import __version__
from .polyalg import InexactDivision, LaurentPoly
from .series import (METHODS, CalibrationError, Superpoly, TailError, check_blowup,
                     check_stable, qt_dual, run_checks, stable_series, superpoly)

log = logging.getLogger("torushomfly")

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_MISMATCH = 0, 2, 3, 4
CACHE_ENV = "TORUSHOMFLY_CACHE"


class UsageError(ValueError):
    pass


class Mismatch(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    k: int | None = None
    method: str = "cells"
    fmt: str = "text"
    cache_dir: Path | None = None
    jobs: int = 1
    verbose: int = 0

    def validate(self):
        if self.n is not None and self.k is not None:
            if self.n < 2 or self.k < 2:
                raise UsageError("n and k must be at least 2")
            if gcd(self.n, self.k) != 1:
                raise UsageError("n and k must be coprime")


# ---------------------------------------------------------------- cache


def default_cache_dir():
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "torushomfly"


def _cache_path(cache_dir, n, k):
    n, k = min(n, k), max(n, k)
    return Path(cache_dir) / f"spp_{n}_{k}.json"


def cache_load(cache_dir, n, k):
    p = _cache_path(cache_dir, n, k)
    if not p.exists():
        return None
    try:
        data = json.loads(p.read_text())
        spp = LaurentPoly.from_json_list(data["spp"])
    except (ValueError, KeyError, TypeError):
        log.warning("ignoring unreadable cache file %s", p)
        return None
    if qt_dual(spp) != spp:
        log.warning("cache entry %s fails the symmetry check; recomputing", p)
        return None
    return Superpoly(data["n"], data["k"], spp, "cache")


def cache_store(cache_dir, S: Superpoly, methods_checked=()):
    p = _cache_path(cache_dir, S.n, S.k)
    p.parent.mkdir(parents=True, exist_ok=True)
    data = {
        "n": S.n, "k": S.k, "delta": S.delta, "mu": S.mu,
        "spp": S.spp.to_json_list(),
        "methods_checked": sorted(set(methods_checked) | {S.method}),
        "engine_version": __version__,
    }
    tmp = p.with_suffix(".tmp")
    tmp.write_text(json.dumps(data, sort_keys=True))
    tmp.replace(p)


def get_superpoly(cfg: RunConfig):
    n, k = min(cfg.n, cfg.k), max(cfg.n, cfg.k)
    if cfg.method == "cells" and cfg.cache_dir is not None:
        hit = cache_load(cfg.cache_dir, n, k)
        if hit is not None:
            return hit
    if cfg.method == "localization" and k % n not in (1, n - 1):
        raise UsageError("localization needs k = +-1 mod n")
    if cfg.method == "closed" and n not in (2, 3):
        raise UsageError("closed forms exist for n in {2, 3} only")
    S = superpoly(n, k, cfg.method, jobs=cfg.jobs)
    if cfg.method == "cells" and cfg.cache_dir is not None:
        cache_store(cfg.cache_dir, S)
    return S


# ---------------------------------------------------------------- rendering


def render(p: LaurentPoly, fmt):
    if fmt == "json":
        return json.dumps(p.to_json_list())
    if fmt == "latex":
        return p.to_latex()
    return p.to_text()


# ---------------------------------------------------------------- commands


def cmd_superpoly(cfg: RunConfig, uspp=False):
    S = get_superpoly(cfg)
    print(render(S.spp, cfg.fmt))
    if uspp:
        print(render(S.uspp_num, cfg.fmt))
    return EXIT_OK


def verify_rows(n, k):
    """(name, passed, detail) for every applicable check."""
    from .catalan import hook_formula, catalan_to_main, spp_full_diagrams, spp_min_diagrams
    from .localization import superpoly_localization
    from .polyalg import aqt

    rows = []
    S = superpoly(n, k)
    n, k = S.n, S.k
    rows.append(("beta agrees with cells", superpoly(n, k, "beta").spp == S.spp, ""))
    for r in run_checks(S):
        rows.append((r.name, r.passed, r.detail))
    b = check_blowup(n, k)
    rows.append((b.name, b.passed, b.detail))
    st = check_stable(n, k)
    rows.append((st.name, st.passed, st.detail))
    shift = aqt(q=-S.mu)
    rows.append(("diagram a=0 sum", spp_min_diagrams(n, k) * shift == S.spp_min, ""))
    rows.append(("diagram full sum", spp_full_diagrams(n, k) * shift == S.spp, ""))
    if n in (2, 3):
        rows.append(("closed form", superpoly(n, k, "closed").spp == S.spp, ""))
    if k % n in (1, n - 1):
        rows.append(("localization", superpoly_localization(n, k) == S.spp, ""))
    if k == n + 1:
        h = catalan_to_main(hook_formula(n)) * (LaurentPoly.one() + aqt(a=2, t=1)) * aqt(t=S.mu)
        rows.append(("hook formula", h == S.spp, ""))
    return rows


def cmd_verify(cfg: RunConfig):
    t0 = time.time()
    rows = verify_rows(cfg.n, cfg.k)
    width = max(len(r[0]) for r in rows)
    ok = True
    for name, passed, detail in rows:
        ok &= bool(passed)
        line = f"{name.ljust(width)}  {'PASS' if passed else 'FAIL'}"
        if detail:
            line += f"  {detail}"
        print(line)
    print(f"runtime {time.time() - t0:.2f}s")
    if not ok:
        raise Mismatch("some checks failed")
    return EXIT_OK


def cmd_catalan(cfg: RunConfig, m):
    from .catalan import qt_catalan

    print(render(qt_catalan(cfg.n, m), cfg.fmt))
    return EXIT_OK


def cmd_stable(cfg: RunConfig, order):
    s = stable_series(cfg.n, order)
    print(render(s.poly, cfg.fmt) + ("" if cfg.fmt == "json" else f" + O(q^{s.order})"))
    return EXIT_OK


def parse_range(text):
    if ".." in text:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    return [int(x) for x in text.split(",")]


def cmd_table(cfg: RunConfig, ns, ks):
    rows = []
    for n in ns:
        for k in ks:
            if n >= k or n < 2 or gcd(n, k) != 1:
                continue
            S = get_superpoly(RunConfig("superpoly", n, k, "cells", cfg.fmt, cfg.cache_dir, cfg.jobs))
            rows.append((n, k, S))
    if cfg.fmt == "json":
        print(json.dumps([{"n": n, "k": k, "spp": S.spp.to_json_list()} for n, k, S in rows]))
    else:
        for n, k, S in rows:
            print(f"({n},{k}): {render(S.spp, cfg.fmt)}")
    return EXIT_OK


# ---------------------------------------------------------------- entry point


def build_parser():
    p = argparse.ArgumentParser(prog="torushomfly", description="Superpolynomials of torus knots from plane curve singularities.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--cache-dir", type=Path, default=None, help=f"cache directory (env {CACHE_ENV})")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", dest="fmt", choices=("text", "json", "latex"), default="text")

    sp = sub.add_parser("superpoly", parents=[fmt])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--method", choices=METHODS, default="cells")
    sp.add_argument("--uspp", action="store_true", help="also print the numerator q*spp")

    vp = sub.add_parser("verify")
    vp.add_argument("--n", type=int, required=True)
    vp.add_argument("--k", type=int, required=True)

    cp = sub.add_parser("catalan", parents=[fmt])
    cp.add_argument("--n", type=int, required=True)
    cp.add_argument("--m", type=int, default=1)

    st = sub.add_parser("stable", parents=[fmt])
    st.add_argument("--n", type=int, required=True)
    st.add_argument("--order", type=int, default=10)

    tp = sub.add_parser("table", parents=[fmt])
    tp.add_argument("--n", required=True, help="range like 2..4 or list 2,3")
    tp.add_argument("--k", required=True)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    cache_dir = None if args.no_cache else (args.cache_dir or default_cache_dir())
    cfg = RunConfig(args.command, getattr(args, "n", None) if args.command != "table" else None,
                    getattr(args, "k", None) if args.command != "table" else None,
                    getattr(args, "method", "cells"), getattr(args, "fmt", "text"),
                    cache_dir, args.jobs, args.verbose)
    try:
        cfg.validate()
        if args.command == "superpoly":
            return cmd_superpoly(cfg, args.uspp)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "catalan":
            if args.n < 1 or args.m < 1:
                raise UsageError("n and m must be positive")
            return cmd_catalan(cfg, args.m)
        if args.command == "stable":
            if args.n < 1 or args.order < 0:
                raise UsageError("need n >= 1 and order >= 0")
            return cmd_stable(cfg, args.order)
        if args.command == "table":
            return cmd_table(cfg, parse_range(args.n), parse_range(args.k))
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (Mismatch, CalibrationError) as e:
        print(f"mismatch: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except (TailError, InexactDivision, ArithmeticError, AssertionError) as e:
        from .localization import ConjectureFailure

        if isinstance(e, ConjectureFailure):
            print(f"mismatch: {e}", file=sys.stderr)
            return EXIT_MISMATCH
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
