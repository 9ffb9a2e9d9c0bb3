"""Search every converse target and summarise what was (not) found within bounds."""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from fintopo import claims as C


@dataclass
class MineConfig:
    max_n: int = 4
    max_map_size: int = 3
    limit: int = 3
    lenient_def21: bool = False


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=MineConfig.max_n)
    ap.add_argument("--max-map-size", type=int, default=MineConfig.max_map_size)
    ap.add_argument("--limit", type=int, default=MineConfig.limit,
                    help="witnesses kept per target")
    ap.add_argument("--lenient-def21", action="store_true")
    ap.add_argument("--json", action="store_true", help="print a structured summary")
    a = ap.parse_args()
    cfg = MineConfig(a.max_n, a.max_map_size, a.limit, a.lenient_def21)
    bounds = C.Bounds(max_n=cfg.max_n, max_map_size=cfg.max_map_size,
                      lenient_def21=cfg.lenient_def21)

    summary = {"config": asdict(cfg), "targets": {}}
    for target in C.MINE_TARGETS:
        found = C.mine(target, bounds, limit=cfg.limit)
        summary["targets"][target] = [w.to_dict() for w in found]
        if not a.json:
            print(f"{target}:")
            if not found:
                print("  not found within bounds")
            for w in found:
                print("  " + C.witness_summary(w))
    if a.json:
        print(json.dumps(summary, indent=2))


if __name__ == "__main__":
    main()
