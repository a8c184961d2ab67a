#!/usr/bin/env python3
"""Randomized property sweep beyond the test suite's fixed budgets.

Checks, on freshly sampled instances:
  * the composed weighted boundary is exactly zero in every degree,
  * the prism boundary identity holds for every regular path,
  * the Smith-normal-form pipeline agrees with the independent
    rational-elimination oracle.

    python3 scripts/property_sweep.py --count 100 --seed 1
"""
import argparse
import random
import sys

sys.path.insert(0, "tests")

from wph.algebra import QQ, ZZ
from wph.chain import ChainVector, build_omega, homology
from wph.homotopy import verify_prism_identity
from wph.oracle import homology_dimensions

from helpers import random_complex, random_unit_weight_complex


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    for i in range(args.count):
        pc = random_complex(rng, ring=ZZ)
        om = build_omega(pc, 4)
        for n in range(1, 4):
            assert om.boundary(n).matmul(om.boundary(n + 1)).is_zero(), (i, n)

        pq = random_unit_weight_complex(rng)
        for n in range(4):
            for p in pq.regular_paths(n):
                rep = verify_prism_identity(ChainVector.basis(p, QQ), pq)
                assert rep.ok, (i, p.render(), rep.problems)

        pq2 = random_complex(rng, ring=QQ, max_vertices=6, maxlen=3)
        dims = homology_dimensions(pq2, 3)
        ranks = [g.free_rank for g in homology(pq2, 3).groups]
        assert dims == ranks, (i, dims, ranks)

        if (i + 1) % 10 == 0:
            print(f"{i + 1}/{args.count} instances checked")
    print("all properties hold")


if __name__ == "__main__":
    main()
