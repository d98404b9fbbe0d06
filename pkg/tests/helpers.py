"""Independent oracles used by the test suite.

Everything here is deliberately naive (dense dict convolution, textbook row
reduction) and shares no code path with the production series/lattice
machinery it is checking.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Dict, List, Optional, Sequence, Tuple

Vec = Tuple[int, ...]
Dense = Dict[Vec, Q]


def gauss_solve(rows: Sequence[Sequence[Q]], rhs: Sequence[Q]) -> Optional[List[Q]]:
    """Solve a square exact linear system by plain row reduction."""
    n = len(rows)
    a = [list(map(Q, row)) + [Q(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                g = a[r][col]
                a[r] = [x - g * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def dense_unit(n: int) -> Dense:
    return {tuple([0] * n): Q(1)}


def dense_add(a: Dense, b: Dense, scale: Q = Q(1)) -> Dense:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, Q(0)) + v * scale
        if nv:
            out[k] = nv
        elif k in out:
            del out[k]
    return out


def dense_mul(a: Dense, b: Dense, height_cap: int) -> Dense:
    out: Dense = {}
    for x, cx in a.items():
        for y, cy in b.items():
            z = tuple(i + j for i, j in zip(x, y))
            if sum(z) > height_cap:
                continue
            nv = out.get(z, Q(0)) + cx * cy
            if nv:
                out[z] = nv
            elif z in out:
                del out[z]
    return out


def dense_factor(shift: Vec, sign: int, exponent: int, height_cap: int) -> Dense:
    """(1 + sign * x^shift)^exponent expanded to the height cap."""
    h = sum(shift)
    assert h > 0
    out: Dense = {}
    j = 0
    while j * h <= height_cap and (exponent < 0 or j <= exponent):
        num = 1
        for t in range(j):
            num *= exponent - t
        den = 1
        for t in range(2, j + 1):
            den *= t
        c = Q(num, den) * (sign ** (j % 2))
        if c:
            out[tuple(v * j for v in shift)] = c
        j += 1
    return out


def series_to_dense(series) -> Dense:
    """Offset-vector view of a TruncatedSeries."""
    frame = series.frame
    return {frame.unpack(k): Q(v) for k, v in series.terms.items()}
