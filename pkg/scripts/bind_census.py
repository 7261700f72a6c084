"""Census of birational induction in GL(n): rigid orbits, minimal data, induction in stages.

    python scripts/bind_census.py --max-n 6
"""

import argparse
import time

from orbitmethod.orbits import (
    all_nilpotent_data,
    bind,
    induction_in_stages_holds,
    is_birationally_rigid,
    nilpotent,
)
from orbitmethod.partitions import partition_count, partitions


def census(n: int) -> dict:
    data = list(all_nilpotent_data(n))
    minimal = {d.conjugacy_key(): d for d in data if d.is_minimal()}
    images = {bind(d) for d in minimal.values()}
    return {
        "n": n,
        "p(n)": partition_count(n),
        "rigid": [str(p) for p in partitions(n) if is_birationally_rigid(p)],
        "data": len(data),
        "minimal classes": len(minimal),
        "bijective": images == {nilpotent(p) for p in partitions(n)} and len(images) == len(minimal),
        "stages": all(induction_in_stages_holds(d) for d in data),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    print(f"{'n':>2} {'p(n)':>5} {'data':>6} {'min':>4} {'bij':>5} {'stages':>6}  rigid       sec")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        c = census(n)
        dt = time.perf_counter() - t0
        print(f"{n:>2} {c['p(n)']:>5} {c['data']:>6} {c['minimal classes']:>4} {str(c['bijective']):>5} "
              f"{str(c['stages']):>6}  {','.join(c['rigid']):<10} {dt:.2f}")


if __name__ == "__main__":
    main()
