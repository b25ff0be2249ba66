"""Exhaustive computation of ell for E8 over all 64 fundamental pairs.

Prints the full 8x8 profile ell^-_{w_j}(w_k), the minimum with its witness,
and optionally writes the result as JSON.

    python scripts/compute_e8.py --json e8.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import List, Optional

from rootcone.ell import compute_profile
from rootcone.rootsystem import build
from rootcone.weyl import format_word

LOWER, UPPER = 7, 29


@dataclass(frozen=True)
class E8Result:
    ell: int
    h: int
    lam: int
    witness: str
    profile: List[List[int]]
    seconds: float


@dataclass(frozen=True)
class RunConfig:
    json_path: Optional[Path] = None


def compute() -> E8Result:
    rs = build("E8")
    t0 = time.perf_counter()
    prof = compute_profile(rs)
    elapsed = time.perf_counter() - t0
    value, j, k = min((prof.values[j][k], j, k) for j in range(8) for k in range(8))
    return E8Result(
        ell=value,
        h=j + 1,
        lam=k + 1,
        witness=format_word(prof.witnesses[j][k], 8),
        profile=[list(r) for r in prof.values],
        seconds=round(elapsed, 3),
    )


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--json", type=Path, help="write the result here")
    cfg = RunConfig(p.parse_args().json)

    res = compute()
    print("ell^-_{w_j}(w_k), row j = h, column k = lambda")
    for j, row in enumerate(res.profile, 1):
        print(f"  w{j}: " + " ".join(f"{v:3d}" for v in row))
    print(f"ell(E8) = {res.ell} at h = w{res.h}, lambda = w{res.lam}, witness {res.witness}")
    print(f"bounds {LOWER}..{UPPER}: {'satisfied' if LOWER <= res.ell <= UPPER else 'VIOLATED'}; {res.seconds:.2f} s")
    if cfg.json_path:
        cfg.json_path.write_text(json.dumps(asdict(res), indent=2) + "\n")


if __name__ == "__main__":
    main()
