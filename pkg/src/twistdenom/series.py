"""Height-truncated formal character series.

A series is a finite sum of terms  c * e^(anchor - nu)  where nu runs over
nonnegative integral combinations of the frame's simple roots with height at
most H.  Exponent offsets are packed into a single integer key (one bit field
per simple-root coordinate, plus the height in the top field) so that adding
offsets is a single integer addition.

Multiplication by a factor (1 + sign*e^(-gamma))^e follows the geometric-series
localization: when gamma is a *negative* root combination the factor is first
rewritten as sign^e * e^(-e*gamma) * (1 + sign*e^(gamma))^e, which moves the
anchor and leaves a factor that only lowers exponents.  Loss of terms above the
anchor is an error, never silent; loss below the height bound is truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .lattice import Rat, Weight

OUTSIDE = None  # sentinel returned by coefficient() for points outside the window


class TruncationOverflowError(RuntimeError):
    """A term landed above the window anchor during a rebase."""


class FrameError(ValueError):
    pass


class Frame:
    """Exponent bookkeeping for one computation: a simple-root list and the
    packing of offset vectors into integer keys."""

    __slots__ = ("simples", "names", "n", "bits", "ht_shift", "_solver", "_mask", "height_cap")

    def __init__(self, simples: Sequence[Weight], solver, names: Sequence[str], height_cap: int):
        self.simples = tuple(simples)
        self.names = tuple(names)
        self.n = len(self.simples)
        self.height_cap = height_cap
        self.bits = max(6, (2 * height_cap + 2).bit_length() + 1)
        self.ht_shift = self.bits * self.n
        self._mask = (1 << self.bits) - 1
        self._solver = solver

    def int_offset(self, diff: Weight) -> Optional[Tuple[int, ...]]:
        """`diff` as a nonnegative integer offset vector, or None."""
        c = self._solver.solve(diff)
        if c is None:
            return None
        out = []
        for v in c:
            if v.denominator != 1 or v < 0:
                return None
            out.append(int(v))
        return tuple(out)

    def signed_int_offset(self, diff: Weight) -> Optional[Tuple[int, ...]]:
        c = self._solver.solve(diff)
        if c is None:
            return None
        out = []
        for v in c:
            if v.denominator != 1:
                return None
            out.append(int(v))
        return tuple(out)

    def pack(self, offset: Sequence[int]) -> int:
        key = 0
        ht = 0
        for i, c in enumerate(offset):
            key |= c << (i * self.bits)
            ht += c
        return key | (ht << self.ht_shift)

    def unpack(self, key: int) -> Tuple[int, ...]:
        return tuple((key >> (i * self.bits)) & self._mask for i in range(self.n))

    def key_height(self, key: int) -> int:
        return key >> self.ht_shift

    def weight_of(self, anchor: Weight, key: int) -> Weight:
        w = anchor
        for c, s in zip(self.unpack(key), self.simples):
            if c:
                w = w - s.scale(c)
        return w


@dataclass(frozen=True)
class FactorForm:
    """One multiplicative factor (1 + sign*e^(-gamma))^(exponent*multiplicity)."""

    gamma: Weight
    sign: int           # +1 for odd-root factors, -1 for even
    exponent: int       # negative exponents expand by geometric series
    multiplicity: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise FrameError("factor sign must be +1 or -1")
        if self.exponent == 0 or self.multiplicity <= 0:
            raise FrameError("factor exponent must be nonzero, multiplicity positive")
        if self.gamma.is_zero:
            raise FrameError("factor root must be nonzero")


def _binom_general(e: int, j: int) -> int:
    """binom(e, j) for integer e (negative allowed), j >= 0."""
    num = 1
    for t in range(j):
        num *= e - t
    den = 1
    for t in range(2, j + 1):
        den *= t
    q, r = divmod(num, den)
    assert r == 0
    return q


class TruncatedSeries:
    """Immutable-by-convention sparse series; all operations return new objects."""

    __slots__ = ("frame", "anchor", "H", "terms")

    def __init__(self, frame: Frame, anchor: Weight, H: int, terms: Dict[int, Rat]):
        self.frame = frame
        self.anchor = anchor
        self.H = H
        self.terms = terms

    # -- constructors -----------------------------------------------------

    @staticmethod
    def unit(frame: Frame, anchor: Weight, H: int) -> "TruncatedSeries":
        if H < 0:
            return TruncatedSeries(frame, anchor, 0, {})
        return TruncatedSeries(frame, anchor, H, {0: 1})

    # -- ring operations ---------------------------------------------------

    def scale(self, c) -> "TruncatedSeries":
        if c == 0:
            return TruncatedSeries(self.frame, self.anchor, self.H, {})
        if c == 1:
            return self
        return TruncatedSeries(self.frame, self.anchor, self.H,
                               {k: v * c for k, v in self.terms.items()})

    def add(self, other: "TruncatedSeries", scalar=1) -> "TruncatedSeries":
        self._check_compatible(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, 0) + v * scalar
            if nv:
                out[k] = nv
            elif k in out:
                del out[k]
        return TruncatedSeries(self.frame, self.anchor, self.H, out)

    def sub(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self.add(other, -1)

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated at H; anchors add."""
        if self.frame is not other.frame:
            raise FrameError("cannot multiply series from different frames")
        if self.H != other.H:
            raise FrameError("cannot multiply series with different height bounds")
        small, big = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        H = self.H
        hs = self.frame.ht_shift
        out: Dict[int, Rat] = {}
        for ks, vs in small.terms.items():
            for kb, vb in big.terms.items():
                nk = ks + kb
                if (nk >> hs) <= H:
                    nv = out.get(nk, 0) + vs * vb
                    if nv:
                        out[nk] = nv
                    elif nk in out:
                        del out[nk]
        return TruncatedSeries(self.frame, self.anchor + other.anchor, H, out)

    def mul_factor(self, factor: FactorForm) -> "TruncatedSeries":
        """Multiply by (1 + sign*e^(-gamma))^(exponent*multiplicity)."""
        frame = self.frame
        e = factor.exponent * factor.multiplicity
        sign = factor.sign
        off = frame.int_offset(factor.gamma)
        anchor = self.anchor
        prefix = 1
        if off is not None and any(off):
            down = off
        else:
            neg = frame.int_offset(-factor.gamma)
            if neg is None or not any(neg):
                raise FrameError(
                    f"factor root {factor.gamma} is not a (+/-) integral root combination")
            # (1+s*e^(-g))^e = s^e * e^(-e*g) * (1+s*e^(g))^e with g negative:
            # the anchor moves by -e*g, offsets are unchanged.
            anchor = anchor - factor.gamma.scale(e)
            prefix = sign ** (abs(e) & 1)
            down = neg
        step = frame.pack(down)
        step_ht = frame.key_height(step)
        jmax = self.H // step_ht
        if e > 0:
            jmax = min(jmax, e)
        shifts: List[Tuple[int, int]] = []
        for j in range(jmax + 1):
            c = _binom_general(e, j) * (sign ** (j & 1))
            if c:
                shifts.append((step * j, c))
        hs = frame.ht_shift
        H = self.H
        out: Dict[int, Rat] = {}
        for k, v in self.terms.items():
            for sk, sc in shifts:
                nk = k + sk
                if (nk >> hs) <= H:
                    nv = out.get(nk, 0) + v * sc
                    if nv:
                        out[nk] = nv
                    elif nk in out:
                        del out[nk]
        if prefix == -1:
            out = {k: -v for k, v in out.items()}
        return TruncatedSeries(frame, anchor, H, out)

    def mul_factors(self, factors: Iterable[FactorForm]) -> "TruncatedSeries":
        s = self
        for f in factors:
            s = s.mul_factor(f)
        return s

    # -- window management ---------------------------------------------------

    def rebase(self, new_anchor: Weight, new_H: int) -> "TruncatedSeries":
        """Re-anchor; terms above the new anchor raise, terms below the new
        height bound are truncated away."""
        frame = self.frame
        if new_anchor == self.anchor and new_H == self.H:
            return self
        shift_vec = frame.signed_int_offset(new_anchor - self.anchor)
        if shift_vec is None:
            raise TruncationOverflowError(
                f"anchor shift {new_anchor - self.anchor} is not integral over the frame")
        hs = frame.ht_shift
        out: Dict[int, Rat] = {}
        if all(v >= 0 for v in shift_vec):
            shift = frame.pack(shift_vec)
            for k, v in self.terms.items():
                nk = k + shift
                if (nk >> hs) <= new_H:
                    out[nk] = v
        else:
            for k, v in self.terms.items():
                vec = [a + b for a, b in zip(frame.unpack(k), shift_vec)]
                if any(c < 0 for c in vec):
                    raise TruncationOverflowError(
                        f"term above the target anchor (offset {vec}); rebuild with a larger anchor")
                nk = frame.pack(vec)
                if (nk >> hs) <= new_H:
                    out[nk] = v
        return TruncatedSeries(frame, new_anchor, new_H, out)

    def truncate(self, new_H: int) -> "TruncatedSeries":
        if new_H >= self.H:
            return self
        hs = self.frame.ht_shift
        return TruncatedSeries(self.frame, self.anchor, new_H,
                               {k: v for k, v in self.terms.items() if (k >> hs) <= new_H})

    # -- queries ---------------------------------------------------------------

    def coefficient(self, mu: Weight):
        """Stored coefficient at exponent mu; OUTSIDE (=None) when mu is not in
        the window."""
        off = self.frame.int_offset(self.anchor - mu)
        if off is None:
            return OUTSIDE
        key = self.frame.pack(off)
        if self.frame.key_height(key) > self.H:
            return OUTSIDE
        return self.terms.get(key, 0)

    def nterms(self) -> int:
        return len(self.terms)

    def support(self) -> List[Weight]:
        return [self.frame.weight_of(self.anchor, k) for k in self.sorted_keys()]

    def sorted_keys(self) -> List[int]:
        return sorted(self.terms.keys(), key=self.frame.unpack)

    def max_support(self) -> List[Weight]:
        """The dominance-maximal exponents: Pareto-minimal offset vectors."""
        if not self.terms:
            raise FrameError("max_support of an empty series")
        vecs = sorted(self.frame.unpack(k) for k in self.terms)
        minimal: List[Tuple[int, ...]] = []
        for v in vecs:
            if not any(all(m[i] <= v[i] for i in range(len(v))) for m in minimal):
                minimal.append(v)
        return [self.frame.weight_of(self.anchor, self.frame.pack(v)) for v in minimal]

    def dump(self) -> str:
        """One line per term: offset coordinates TAB coefficient, lex sorted."""
        lines = []
        for k in self.sorted_keys():
            vec = self.frame.unpack(k)
            lines.append(" ".join(str(c) for c in vec) + "\t" + str(self.terms[k]))
        return "\n".join(lines)

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.frame is not other.frame:
            raise FrameError("series frames differ")
        if self.anchor != other.anchor:
            raise FrameError("series anchors differ (re-anchor explicitly)")
        if self.H != other.H:
            raise FrameError("series height bounds differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.frame is other.frame and self.anchor == other.anchor
                and self.H == other.H and self.terms == other.terms)

    def __repr__(self) -> str:
        return f"TruncatedSeries(anchor={self.anchor}, H={self.H}, nterms={len(self.terms)})"


def unit(frame: Frame, anchor: Weight, H: int) -> TruncatedSeries:
    return TruncatedSeries.unit(frame, anchor, H)


def product(frame: Frame, lead: Weight, factors: Iterable[FactorForm], H: int) -> TruncatedSeries:
    """e^lead times the given factors, truncated at height H below the running
    anchor (which factor normalization may move)."""
    return TruncatedSeries.unit(frame, lead, H).mul_factors(factors)
