"""Recompute the F4 and E6 cross-tables and compare them box by box with the
published values embedded in rootcone.published.

    python scripts/reproduce_tables.py            # both tables
    python scripts/reproduce_tables.py --type E6 --depth-limit 11
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from rootcone.ell import AtLeast, ell_table
from rootcone.published import DATASET, E6_COLS, E6_LIMIT, E6_ROWS, parse_label
from rootcone.rootsystem import build


@dataclass(frozen=True)
class TableConfig:
    type: str
    rows: Tuple[str, ...]
    cols: Tuple[str, ...]
    depth_limit: Optional[int] = None


F4 = TableConfig("F4", ("w1", "w2", "w3", "w4", "rho"), ("w1", "w2", "w3", "w4", "rho"))
E6 = TableConfig("E6", tuple(E6_ROWS), tuple(E6_COLS), E6_LIMIT)


def printed_boxes(cfg: TableConfig) -> Dict[Tuple[str, str], str]:
    source = f"{cfg.type} table"
    out = {}
    for r in DATASET:
        if r.source != source:
            continue
        if r.kind == "box":
            out[(r.lam, r.h)] = str(r.expected)
        elif r.kind == "at_least":
            out[(r.lam, r.h)] = f">={r.expected}"
    return out


def run(cfg: TableConfig) -> int:
    rs = build(cfg.type)
    rows = [(l, parse_label(rs, l)) for l in cfg.rows]
    cols = [(l, parse_label(rs, l)) for l in cfg.cols]
    t0 = time.perf_counter()
    table = ell_table(rs, rows, cols, cfg.depth_limit)
    elapsed = time.perf_counter() - t0
    printed = printed_boxes(cfg)

    width = 7
    print(f"{cfg.type}: rows lambda, columns h; '*' marks a disagreement with the printed value")
    print("".ljust(width) + "".join(c.rjust(width) for c in cfg.cols))
    mismatches: List[str] = []
    for lab, entries in zip(cfg.rows, table.entries):
        cells = []
        for col, e in zip(cfg.cols, entries):
            got = str(e)
            want = printed.get((lab, col))
            # an empty printed box only claims a lower bound
            if want is not None and want.startswith(">="):
                same = isinstance(e, AtLeast) or e >= int(want[2:])
            else:
                same = want is None or want == got
            if not same:
                mismatches.append(f"({lab}, {col}): printed {want}, computed {got}")
            cells.append((got + ("*" if not same else "")).rjust(width))
        print(lab.ljust(width) + "".join(cells))
    print(f"{len(printed) - len(mismatches)}/{len(printed)} printed boxes agree ({elapsed:.2f} s)")
    for m in mismatches:
        print("  " + m)
    return len(mismatches)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--type", choices=("F4", "E6", "both"), default="both")
    p.add_argument("--depth-limit", type=int, help="override the search depth for E6")
    args = p.parse_args()
    configs = {"F4": [F4], "E6": [E6], "both": [F4, E6]}[args.type]
    bad = 0
    for cfg in configs:
        if args.depth_limit is not None and cfg.type == "E6":
            cfg = TableConfig(cfg.type, cfg.rows, cfg.cols, args.depth_limit)
        bad += run(cfg)
        print()
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
