"""Run the duality map over the enumerated grid of GL(n) Arthur parameters.

    python scripts/duality_grid.py --max-n 3 [--show]
"""

import argparse
from collections import Counter

from orbitmethod import arthur as art
from orbitmethod.cli import describe_cover


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--show", action="store_true", help="print every parameter and its image")
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        grid = art.arthur_grid(n)
        images = [art.duality_map(p) for p in grid]
        kinds = Counter(art.classify_arthur(p) for p in grid)
        unip_ok = all(d.is_nilpotent() for p, d in zip(grid, images) if art.classify_arthur(p) == "unipotent")
        print(f"GL({n}): {len(grid)} classes, {len(set(images))} distinct images, "
              f"injective={len(set(images)) == len(grid)}, unipotent->nilpotent={unip_ok}, {dict(kinds)}")
        if args.show:
            for p, d in zip(grid, images):
                print(f"  q={p.sl2_partition} cx={[(str(h), str(a)) for h, a in zip(p.lambda_hol, p.lambda_anti)]}"
                      f" -> {describe_cover(d)}")


if __name__ == "__main__":
    main()
