"""Run a claim suite and write the structured report plus a CSV summary.

    python scripts/run_suite.py --suite all --max-n 4 --out results/
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from fintopo import claims as C


@dataclass
class SuiteConfig:
    suite: str = "all"
    max_n: int = 4
    max_map_size: int = 3
    max_pair_size: int = 3
    lenient_def21: bool = False
    workers: int = 0
    out: Path = Path("results")


def parse_args() -> SuiteConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", default=SuiteConfig.suite)
    ap.add_argument("--max-n", type=int, default=SuiteConfig.max_n)
    ap.add_argument("--max-map-size", type=int, default=SuiteConfig.max_map_size)
    ap.add_argument("--max-pair-size", type=int, default=SuiteConfig.max_pair_size)
    ap.add_argument("--lenient-def21", action="store_true")
    ap.add_argument("--workers", type=int, default=0, help="0 = all CPUs")
    ap.add_argument("--out", type=Path, default=SuiteConfig.out)
    a = ap.parse_args()
    return SuiteConfig(a.suite, a.max_n, a.max_map_size, a.max_pair_size, a.lenient_def21,
                       a.workers, a.out)


def main() -> None:
    cfg = parse_args()
    bounds = C.Bounds(cfg.max_n, cfg.max_map_size, cfg.max_pair_size, cfg.lenient_def21)
    workers = cfg.workers or C.default_workers()
    start = time.perf_counter()
    report = C.run_suite(cfg.suite, bounds, workers)
    elapsed = time.perf_counter() - start

    cfg.out.mkdir(parents=True, exist_ok=True)
    tag = f"{cfg.suite.replace(',', '_')}_n{cfg.max_n}_m{cfg.max_map_size}_p{cfg.max_pair_size}"
    if cfg.lenient_def21:
        tag += "_lenient"
    (cfg.out / f"{tag}.json").write_text(report.to_json())
    (cfg.out / f"{tag}.csv").write_text(report.to_table())
    print(report.to_text(), end="")
    print(f"wrote {cfg.out / tag}.json/.csv in {elapsed:.1f}s")
    raise SystemExit(0 if report.ok else 2)


if __name__ == "__main__":
    main()
