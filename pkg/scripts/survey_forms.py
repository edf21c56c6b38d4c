"""Tabulate structure invariants over every bilinear form on a small V over GF(p)."""
import argparse
from collections import Counter
from dataclasses import dataclass
from itertools import product

from vidinli import GF, from_bilinear_form, lie_mult_algebra_report, structure_report


@dataclass
class SurveyConfig:
    p: int = 3
    dim_v: int = 2


def survey(cfg: SurveyConfig) -> Counter:
    F = GF(cfg.p)
    m = cfg.dim_v
    table = Counter()
    for entries in product(range(cfg.p), repeat=m * m):
        B = [list(entries[i * m:(i + 1) * m]) for i in range(m)]
        P = from_bilinear_form(F, B)
        rep = structure_report(P).to_json()
        lie = lie_mult_algebra_report(P)
        d = rep["dims"]
        table[(rep["quotient_class"], len(rep["rad_basis"]), d["der"], d["mult"], d["lie_mult"],
               lie.match)] += 1
    return table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--dim-v", type=int, default=2)
    cfg = SurveyConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})
    table = survey(cfg)
    print(f"GF({cfg.p}), dim V = {cfg.dim_v}: {sum(table.values())} forms")
    print(f"{'quotient':<18}{'rad':>4}{'der':>5}{'mult':>6}{'lie':>5}{'pred ok':>9}{'count':>7}")
    for (cls, rad, der, mult, lie, ok), n in sorted(table.items()):
        print(f"{cls:<18}{rad:>4}{der:>5}{mult:>6}{lie:>5}{str(ok):>9}{n:>7}")


if __name__ == "__main__":
    main()
