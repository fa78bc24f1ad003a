"""Survey d_3 over every in-range degree combination of three classes.

For each combination, prints how many random words give a nonzero d_3 and
how many d-values change when the divergence gauge is switched.
"""

import argparse
import itertools
from dataclasses import dataclass
from fractions import Fraction

from heisenberg_ce.sampling import SampleConfig, Sampler
from heisenberg_ce.transfer import TransferTable, formality_step


@dataclass(frozen=True)
class SurveyConfig:
    seed: int = 0
    words_per_combo: int = 5
    a: Fraction = Fraction(0)
    order: int = 2


def survey(cfg: SurveyConfig):
    n = cfg.order + 1
    smp = Sampler(cfg.seed, SampleConfig(max_degree=2, max_terms=3))
    tx, ty = TransferTable(a=cfg.a, gauge="x"), TransferTable(a=cfg.a, gauge="y")
    rows = []
    for degs in itertools.combinations_with_replacement(range(4), n):
        target = sum(degs) - 2 * n + 3
        if not 0 <= target <= 3:
            continue
        nonzero = gauge_changes = cocycles = 0
        example = None
        for _ in range(cfg.words_per_combo):
            word = [smp.cls(k, nonzero=True) for k in degs]
            rep = formality_step(cfg.order, word, tx)
            cocycles += rep.is_cocycle
            if rep.obstructed:
                nonzero += 1
                example = example or (word, rep.d_value)
            gauge_changes += tx.d(word) != ty.d(word)
        rows.append((degs, target, cocycles, nonzero, gauge_changes, example))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--words", type=int, default=5)
    ap.add_argument("--a", default="0")
    ap.add_argument("--order", type=int, default=2)
    ap.add_argument("--examples", action="store_true", help="print one nonzero word per combination")
    args = ap.parse_args()
    cfg = SurveyConfig(args.seed, args.words, Fraction(args.a), args.order)
    print(f"{'degrees':14s} target  cocycle  nonzero  gauge-dependent")
    for degs, target, coc, nz, gc, example in survey(cfg):
        print(f"{str(degs):14s} {target:6d}  {coc:3d}/{cfg.words_per_combo:<3d}  {nz:3d}/{cfg.words_per_combo:<3d}  {gc:3d}/{cfg.words_per_combo}")
        if args.examples and example:
            word, d = example
            print("    " + " . ".join(str(c) for c in word) + f"  ->  {d}")


if __name__ == "__main__":
    main()
