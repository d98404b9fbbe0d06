"""Exact weight arithmetic over the basis {eps_1..eps_k, del_1..del_l, delta, Lambda0}.

All coordinates are `fractions.Fraction`; there is no floating point anywhere
in this package.  Weights are immutable sparse maps in canonical form (zero
coordinates are never stored), so equality and hashing are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Rat = Fraction

_KIND_ORDER = {"eps": 0, "del": 1, "delta": 2, "Lambda0": 3}


@dataclass(frozen=True)
class BasisSymbol:
    """One basis direction of the dual Cartan space."""

    kind: str  # "eps" | "del" | "delta" | "Lambda0"
    index: int = 0

    def sort_key(self) -> Tuple[int, int]:
        return (_KIND_ORDER[self.kind], self.index)

    def __str__(self) -> str:
        if self.kind == "eps":
            return f"e{self.index}"
        if self.kind == "del":
            return f"d{self.index}"
        return self.kind


def eps(i: int) -> BasisSymbol:
    return BasisSymbol("eps", i)


def dl(j: int) -> BasisSymbol:
    return BasisSymbol("del", j)


DELTA = BasisSymbol("delta")
LAMBDA0 = BasisSymbol("Lambda0")


@dataclass(frozen=True)
class Weight:
    """Sparse rational vector over BasisSymbols, canonical (no zero entries)."""

    terms: Tuple[Tuple[BasisSymbol, Rat], ...]

    @staticmethod
    def of(coords: Mapping[BasisSymbol, Rat] | Iterable[Tuple[BasisSymbol, Rat]]) -> "Weight":
        if isinstance(coords, Mapping):
            items = coords.items()
        else:
            items = coords
        acc: Dict[BasisSymbol, Rat] = {}
        for sym, c in items:
            c = Rat(c)
            if c:
                acc[sym] = acc.get(sym, Rat(0)) + c
        cleaned = tuple(sorted(((s, c) for s, c in acc.items() if c), key=lambda t: t[0].sort_key()))
        return Weight(cleaned)

    def coords(self) -> Dict[BasisSymbol, Rat]:
        return dict(self.terms)

    def get(self, sym: BasisSymbol) -> Rat:
        for s, c in self.terms:
            if s == sym:
                return c
        return Rat(0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> Tuple[BasisSymbol, ...]:
        return tuple(s for s, _ in self.terms)

    def __add__(self, other: "Weight") -> "Weight":
        acc = dict(self.terms)
        for s, c in other.terms:
            acc[s] = acc.get(s, Rat(0)) + c
        return Weight.of(acc)

    def __sub__(self, other: "Weight") -> "Weight":
        acc = dict(self.terms)
        for s, c in other.terms:
            acc[s] = acc.get(s, Rat(0)) - c
        return Weight.of(acc)

    def __neg__(self) -> "Weight":
        return Weight(tuple((s, -c) for s, c in self.terms))

    def scale(self, factor) -> "Weight":
        f = Rat(factor)
        if not f:
            return ZERO
        return Weight(tuple((s, c * f) for s, c in self.terms))

    def __rmul__(self, factor) -> "Weight":
        return self.scale(factor)

    def finite_part(self) -> "Weight":
        return Weight(tuple((s, c) for s, c in self.terms if s.kind in ("eps", "del")))

    def delta_coeff(self) -> Rat:
        return self.get(DELTA)

    def lambda0_coeff(self) -> Rat:
        return self.get(LAMBDA0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"{c}*{s}" for s, c in self.terms]
        return (" + ".join(parts)).replace("+ -", "- ")


ZERO = Weight(())


def wt(*pairs: Tuple[BasisSymbol, int | Rat]) -> Weight:
    """Convenience constructor: wt((eps(1), 1), (dl(1), -1))."""
    return Weight.of([(s, Rat(c)) for s, c in pairs])


@dataclass(frozen=True)
class BilinearForm:
    """Diagonal pairing on the finite block plus the standard delta/Lambda0 block.

    (delta,delta)=0, (Lambda0,Lambda0)=0, (Lambda0,delta)=1 and both pair to
    zero with every finite symbol.
    """

    eps_diag: Tuple[Rat, ...]
    del_diag: Tuple[Rat, ...]

    def diagonal(self, sym: BasisSymbol) -> Rat:
        if sym.kind == "eps":
            return self.eps_diag[sym.index - 1]
        if sym.kind == "del":
            return self.del_diag[sym.index - 1]
        return Rat(0)

    def value(self, x: Weight, y: Weight) -> Rat:
        ycoords = dict(y.terms)
        total = Rat(0)
        for s, c in x.terms:
            if s.kind in ("eps", "del"):
                yc = ycoords.get(s)
                if yc is not None:
                    total += self.diagonal(s) * c * yc
            elif s.kind == "delta":
                yc = ycoords.get(LAMBDA0)
                if yc is not None:
                    total += c * yc
            else:  # Lambda0
                yc = ycoords.get(DELTA)
                if yc is not None:
                    total += c * yc
        return total


class SingularMatrixError(ValueError):
    pass


def invert_matrix(rows: Sequence[Sequence[Rat]]) -> Tuple[Tuple[Rat, ...], ...]:
    """Exact inverse of a square rational matrix by Gauss-Jordan elimination."""
    n = len(rows)
    aug = [[Rat(v) for v in row] + [Rat(1) if i == j else Rat(0) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Rat(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class ExactSolver:
    """Writes weights as rational combinations of a fixed independent family.

    The family must be a basis of the span of `span_symbols`; weights with a
    component outside that span are not in the span and solve() returns None.
    """

    def __init__(self, vectors: Sequence[Weight], span_symbols: Sequence[BasisSymbol]):
        if len(vectors) != len(span_symbols):
            raise SingularMatrixError(
                f"need a square system: {len(vectors)} vectors over {len(span_symbols)} symbols")
        self.vectors = tuple(vectors)
        self.symbols = tuple(span_symbols)
        self._sym_index = {s: i for i, s in enumerate(self.symbols)}
        matrix = [[v.get(s) for v in vectors] for s in span_symbols]
        self._inverse = invert_matrix(matrix)

    def solve(self, target: Weight) -> Optional[Tuple[Rat, ...]]:
        vec = [Rat(0)] * len(self.symbols)
        for s, c in target.terms:
            i = self._sym_index.get(s)
            if i is None:
                return None
            vec[i] = c
        return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in self._inverse)


def form(spec, x: Weight, y: Weight) -> Rat:
    """Invariant bilinear form of the family, extended by the delta/Lambda0 block."""
    return spec.form.value(x, y)


def decompose_in_simple_roots(spec, nu: Weight) -> Optional[Tuple[Rat, ...]]:
    """Coefficients of `nu` over the simple roots of the affine system, or None."""
    return spec.solver.solve(nu)


def height(coeffs: Sequence[Rat]) -> Rat:
    return sum(coeffs, Rat(0))


def is_nonneg_integral(coeffs: Optional[Sequence[Rat]]) -> bool:
    return coeffs is not None and all(c.denominator == 1 and c >= 0 for c in coeffs)


def dominates(spec, mu: Weight, nu: Weight) -> bool:
    """mu >= nu in the standard partial order: mu - nu is a nonnegative
    integral combination of simple roots."""
    return is_nonneg_integral(decompose_in_simple_roots(spec, mu - nu))
