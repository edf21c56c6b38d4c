"""Count isomorphism classes of A(V, *, phi) over GF(2) with the twisted-triple test."""
import argparse
import time
from dataclasses import dataclass

from vidinli import GF
from vidinli.algebra import iter_unital_isomorphisms
from vidinli.char2 import all_presentations, center_char2, iso_test_char2


@dataclass
class CensusConfig:
    dim_v: int = 2
    brute: bool = False  # confirm every class split with the brute-force isomorphism search


def census(cfg: CensusConfig) -> list[list]:
    reps: list[list] = []
    for P in all_presentations(GF(2), cfg.dim_v):
        for cls in reps:
            if iso_test_char2(cls[0], P) is not None:
                cls.append(P)
                break
        else:
            reps.append([P])
    if cfg.brute:
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                assert next(iter_unital_isomorphisms(a[0].algebra, b[0].algebra), None) is None
    return reps


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dim-v", type=int, default=2)
    ap.add_argument("--brute", action="store_true")
    args = ap.parse_args()
    cfg = CensusConfig(args.dim_v, args.brute)
    t0 = time.perf_counter()
    reps = census(cfg)
    total = sum(map(len, reps))
    print(f"dim V = {cfg.dim_v}: {total} presentations, {len(reps)} classes ({time.perf_counter() - t0:.1f}s)")
    for cls in sorted(reps, key=len, reverse=True):
        P = cls[0]
        branch = center_char2(P.algebra).branch
        print(f"  size {len(cls):>4}  center {branch:<12} phi={[list(r) for r in P.phi]}")


if __name__ == "__main__":
    main()
