"""Independent rational homology oracle via plain Gaussian elimination.

Deliberately shares no code with the Smith-normal-form pipeline: ranks and
kernels here come from textbook row reduction over Fraction, so the two
routes cross-check each other.
"""
from __future__ import annotations

from fractions import Fraction

from .pathcx import PathComplex


def row_reduce(rows: list) -> tuple:
    """In-place-free RREF; returns (reduced rows, pivot column list)."""
    rows = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows: list) -> int:
    if not rows or not rows[0]:
        return 0
    _, pivots = row_reduce(rows)
    return len(pivots)


def kernel_vectors(rows: list, ncols: int) -> list:
    """A basis of the rational kernel of the matrix given by rows."""
    if not rows:
        return [
            [Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)
        ]
    reduced, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][fc]
        basis.append(vec)
    return basis


def homology_dimensions(pc: PathComplex, max_degree: int) -> list:
    """dim H_n over Q for n in [0, max_degree), by rank-nullity only.

    dim H_n = dim Omega_n - rank(d_n on Omega_n) - rank(d_{n+1} on Omega_{n+1}).
    """
    weights = {v: Fraction(w) for v, w in pc.weight_map().items()}
    reg = [pc.regular_paths(n) for n in range(max_degree + 1)]

    def boundary_rows(n):
        """Rows: coefficient vector of d(e_p) over regular (n-1)-paths on V."""
        if n == 0:
            return [{} for _ in reg[0]]
        out = []
        for p in reg[n]:
            coeffs = {}
            for s in range(len(p.vertices)):
                face = p.drop(s)
                if not face.is_regular():
                    continue
                sign = -1 if s % 2 else 1
                coeffs[face] = coeffs.get(face, Fraction(0)) + sign * weights[p.vertices[s]]
            out.append(coeffs)
        return out

    bnd = [boundary_rows(n) for n in range(max_degree + 1)]

    # Omega_n: kernel of the projection of the boundary onto paths outside P
    omega_bases = []
    for n in range(max_degree + 1):
        outside = sorted(
            {p for coeffs in bnd[n] for p in coeffs if p not in pc.paths}
        )
        if not outside:
            omega_bases.append(
                [[Fraction(int(i == j)) for i in range(len(reg[n]))] for j in range(len(reg[n]))]
            )
            continue
        col_of = {p: i for i, p in enumerate(outside)}
        rows = [[Fraction(0)] * len(reg[n]) for _ in outside]
        for j, coeffs in enumerate(bnd[n]):
            for p, c in coeffs.items():
                if p in col_of:
                    rows[col_of[p]][j] = c
        omega_bases.append(kernel_vectors(rows, len(reg[n])))

    def boundary_rank(n):
        """Rank of d_n restricted to Omega_n, expressed over regular (n-1)-paths."""
        if n < 1 or n > max_degree or not omega_bases[n]:
            return 0
        col_of = {p: i for i, p in enumerate(reg[n - 1])}
        rows = []
        for gen in omega_bases[n]:
            acc = [Fraction(0)] * len(reg[n - 1])
            for coeff, coeffs in zip(gen, bnd[n]):
                if coeff == 0:
                    continue
                for p, c in coeffs.items():
                    if p in col_of:
                        acc[col_of[p]] += coeff * c
            rows.append(acc)
        if not rows or not rows[0]:
            return 0
        return rank(rows)

    dims = []
    for n in range(max_degree):
        dims.append(len(omega_bases[n]) - boundary_rank(n) - boundary_rank(n + 1))
    return dims
