"""Shared random-instance generators used across the test suite."""
from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path as FsPath

from wph.algebra import QQ, ZZ
from wph.pathcx import Path, PathComplex, Vertex, complex_from_paths

FIXTURES = FsPath(__file__).resolve().parent.parent / "fixtures"


def fixture_paths(prefix: str) -> list:
    found = sorted(FIXTURES.glob(f"{prefix}*.json"))
    assert found, f"no fixtures matching {prefix}*"
    return found


def random_complex(
    rng: random.Random,
    ring=ZZ,
    max_vertices: int = 8,
    maxlen: int = 4,
    nonzero: bool = False,
) -> PathComplex:
    """A random weighted path complex: random walks closed under truncation.

    Weights over Z are small integers including zero unless `nonzero`;
    weights over Q are nonzero small rationals.
    """
    n = rng.randint(2, max_vertices)
    verts = [Vertex(chr(ord("a") + i)) for i in range(n)]
    paths = []
    for _ in range(rng.randint(1, 2 * n)):
        length = rng.randint(1, maxlen)
        walk = [rng.choice(verts)]
        while len(walk) < length + 1:
            walk.append(rng.choice(verts))
        paths.append(Path(tuple(walk)))
    weights = {}
    for v in verts:
        if ring == QQ:
            num = rng.choice([x for x in range(-4, 5) if x != 0]) if nonzero else rng.randint(-4, 4)
            weights[v] = Fraction(num, rng.randint(1, 4)) if num else Fraction(0)
        else:
            w = rng.randint(1, 4) if nonzero else rng.randint(-3, 3)
            weights[v] = w
    return complex_from_paths(paths, weights=weights, ring=ring)


def random_unit_weight_complex(rng: random.Random, max_vertices: int = 6, maxlen: int = 3) -> PathComplex:
    """A random complex over Q whose weights are all nonzero (hence units)."""
    return random_complex(rng, ring=QQ, max_vertices=max_vertices, maxlen=maxlen, nonzero=True)
