import random
from fractions import Fraction

from wph.algebra import QQ
from wph.chain import homology
from wph.oracle import homology_dimensions, kernel_vectors, rank, row_reduce

from helpers import random_complex


def test_row_reduce_and_rank():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert rank(rows) == 1


def test_kernel_vectors_annihilate():
    rows = [[Fraction(1), Fraction(1), Fraction(0)], [Fraction(0), Fraction(1), Fraction(1)]]
    for v in kernel_vectors(rows, 3):
        for row in rows:
            assert sum(x * y for x, y in zip(row, v)) == 0


def test_oracle_matches_snf_pipeline_on_random_complexes():
    rng = random.Random(31)
    for _ in range(30):
        pc = random_complex(rng, ring=QQ, max_vertices=6, maxlen=3)
        dims = homology_dimensions(pc, 3)
        res = homology(pc, 3)
        assert dims == [g.free_rank for g in res.groups], pc
