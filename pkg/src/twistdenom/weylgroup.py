"""Affine Weyl group elements in (translation, linear) normal form.

An element g = t_mu . y acts on a weight x (finite part x_f, delta-coefficient
c, Lambda0-coefficient d) by

    g(x) = y(x_f) + c*delta + d*Lambda0 + d*mu - ((y(x_f),mu) + (mu,mu)/2 * d)*delta.

The sign is det of the linear part; for the two extended families the diagram
automorphism is adjoined with sign +1, which makes the sign of a translation
by a single lattice letter -1.  Concretely the correction exponent is

    p(g) = (coordinate sum of mu over the extension letters
            + number of sign changes of the linear part on those letters) mod 2.

Enumeration of the translation group is certified: l1-shells of the lattice
are scanned until a full shell of elements falls entirely below the window,
with a monotonicity check of the height drop along rays and a hard shell cap
at the contribution bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .lattice import (DELTA, LAMBDA0, BasisSymbol, Rat, Weight, height, is_nonneg_integral, wt)
from .algebra import EVEN, AlgebraSpec, SpecError


class CertificationError(RuntimeError):
    """The bounded enumeration could not certify completeness."""


@dataclass(frozen=True)
class GroupElement:
    linear: Tuple[Tuple[Rat, ...], ...]   # matrix over the finite letter basis
    translation: Tuple[Rat, ...]          # finite letter coordinates of mu
    sign: int
    p_bit: int                            # extension parity; 0 unless extended


def _finite_syms(spec: AlgebraSpec) -> Tuple[BasisSymbol, ...]:
    return spec.finite_symbols


def _coords(spec: AlgebraSpec, w: Weight) -> Tuple[Rat, ...]:
    syms = _finite_syms(spec)
    c = dict(w.terms)
    for s in c:
        if s not in syms:
            raise SpecError(f"weight {w} is not in the finite span")
    return tuple(c.get(s, Rat(0)) for s in syms)


def _weight(spec: AlgebraSpec, coords: Sequence[Rat]) -> Weight:
    return Weight.of({s: c for s, c in zip(_finite_syms(spec), coords)})


def _identity_matrix(n: int) -> Tuple[Tuple[Rat, ...], ...]:
    return tuple(tuple(Rat(1) if i == j else Rat(0) for j in range(n)) for i in range(n))


def _mat_vec(m: Tuple[Tuple[Rat, ...], ...], v: Sequence[Rat]) -> Tuple[Rat, ...]:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _mat_mul(a, b) -> Tuple[Tuple[Rat, ...], ...]:
    n = len(a)
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n))
                 for i in range(n))


def _det(m) -> Rat:
    n = len(m)
    rows = [list(r) for r in m]
    det = Rat(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return Rat(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = Rat(1) / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] * inv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det


def _letter_indices(spec: AlgebraSpec) -> Tuple[int, ...]:
    """Positions of the extension letters within the finite symbol basis."""
    syms = _finite_syms(spec)
    kind = "eps" if spec.mprime_letters == "eps" else "del"
    return tuple(i for i, s in enumerate(syms) if s.kind == kind)


def _p_bit(spec: AlgebraSpec, linear, translation) -> int:
    if not spec.extended_sign:
        return 0
    idx = _letter_indices(spec)
    total = Rat(0)
    for i in idx:
        total += translation[i]
    if total.denominator != 1:
        raise SpecError("extension parity needs integral letter coordinates")
    flips = 0
    for i in idx:
        col = [linear[r][i] for r in idx]
        nonzero = [(r, v) for r, v in zip(idx, col) if v]
        if len(nonzero) != 1 or abs(nonzero[0][1]) != 1:
            raise SpecError("extension parity needs a signed-permutation letter block")
        if nonzero[0][1] == -1:
            flips += 1
    return (int(total) + flips) % 2


def identity(spec: AlgebraSpec) -> GroupElement:
    n = len(_finite_syms(spec))
    return GroupElement(_identity_matrix(n), tuple(Rat(0) for _ in range(n)), 1, 0)


def make_element(spec: AlgebraSpec, linear, translation, sign: int) -> GroupElement:
    return GroupElement(linear, translation, sign, _p_bit(spec, linear, translation))


def apply(spec: AlgebraSpec, g: GroupElement, x: Weight) -> Weight:
    syms = _finite_syms(spec)
    fin = [Rat(0)] * len(syms)
    c = Rat(0)
    d = Rat(0)
    index = {s: i for i, s in enumerate(syms)}
    for s, v in x.terms:
        if s == DELTA:
            c = v
        elif s == LAMBDA0:
            d = v
        else:
            fin[index[s]] = v
    yf = _mat_vec(g.linear, fin)
    mu = g.translation
    form = spec.form
    yf_w = _weight(spec, yf)
    mu_w = _weight(spec, mu)
    pairing = form.value(yf_w, mu_w)
    mu_norm = form.value(mu_w, mu_w)
    out = {s: yf[i] for i, s in enumerate(syms)}
    if d:
        for i, s in enumerate(syms):
            out[s] = out.get(s, Rat(0)) + d * mu[i]
    coeff_delta = c - (pairing + mu_norm / 2 * d)
    out[DELTA] = coeff_delta
    out[LAMBDA0] = d
    return Weight.of(out)


def compose(spec: AlgebraSpec, g: GroupElement, h: GroupElement) -> GroupElement:
    """(t_mu y)(t_nu z) = t_{mu + y nu} (y z)."""
    ynu = _mat_vec(g.linear, h.translation)
    translation = tuple(a + b for a, b in zip(g.translation, ynu))
    return GroupElement(_mat_mul(g.linear, h.linear), translation,
                        g.sign * h.sign, (g.p_bit + h.p_bit) % 2)


def reflection(spec: AlgebraSpec, alpha: Weight) -> GroupElement:
    """s_alpha for a real root alpha = alpha_f + n*delta with (alpha,alpha) != 0."""
    norm = spec.form.value(alpha, alpha)
    if norm == 0:
        raise SpecError(f"cannot reflect by isotropic root {alpha}")
    if alpha.lambda0_coeff() != 0:
        raise SpecError(f"reflection root {alpha} must have no Lambda0 component")
    n_level = alpha.delta_coeff()
    alpha_f = alpha.finite_part()
    syms = _finite_syms(spec)
    af = _coords(spec, alpha_f)
    basis_w = [wt((s, 1)) for s in syms]
    cols = []
    for j, bw in enumerate(basis_w):
        coeff = 2 * spec.form.value(bw, alpha_f) / norm
        col = [basis_w[j].get(s) - coeff * alpha_f.get(s) for s in syms]
        cols.append(col)
    linear = tuple(tuple(cols[j][i] for j in range(len(syms))) for i in range(len(syms)))
    mu = tuple(-2 * n_level / norm * a for a in af)
    return make_element(spec, linear, mu, -1)


def translation(spec: AlgebraSpec, mu: Weight) -> GroupElement:
    coords = _coords(spec, mu)
    n = len(coords)
    sign = 1
    if spec.extended_sign:
        idx = _letter_indices(spec)
        total = sum((coords[i] for i in idx), Rat(0))
        if total.denominator != 1:
            raise SpecError("translation coordinates must be integral for extended families")
        sign = -1 if int(total) % 2 else 1
    return make_element(spec, _identity_matrix(n), coords, sign)


def sign_of(spec: AlgebraSpec, g: GroupElement) -> int:
    """Sign from the normal form: det of the linear part, corrected by the
    extension parity for the extended families."""
    d = _det(g.linear)
    if abs(d) != 1:
        raise SpecError("linear part is not orthogonal: |det| != 1")
    base = 1 if d == 1 else -1
    if spec.extended_sign:
        base *= -1 if _p_bit(spec, g.linear, g.translation) else 1
    return base


def enumerate_finite_group(spec: AlgebraSpec, generators: Iterable[GroupElement],
                           cap: int = 200000) -> Tuple[GroupElement, ...]:
    """Closure of the generators under composition (finite groups only)."""
    gens = list(generators)
    seen: Dict[Tuple, GroupElement] = {}

    def keyof(g: GroupElement):
        return (g.linear, g.translation)

    ident = identity(spec)
    seen[keyof(ident)] = ident
    frontier = [ident]
    while frontier:
        nxt: List[GroupElement] = []
        for g in frontier:
            for h in gens:
                gh = compose(spec, g, h)
                k = keyof(gh)
                if k not in seen:
                    seen[k] = gh
                    nxt.append(gh)
                    if len(seen) > cap:
                        raise CertificationError(
                            f"group closure exceeded cap {cap}: generators are not finite")
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda g: (g.translation, g.linear)))


def finite_weyl_group(spec: AlgebraSpec, block: str,
                      level_zero_only: bool = False) -> Tuple[GroupElement, ...]:
    """Finite Weyl group attached to a block.

    block = "prime" / "doubleprime": the linear parts of the affine Weyl group
    of that subsystem (reflections by the finite parts of all its real roots);
    with level_zero_only=True only reflections by level-0 roots, which is the
    subgroup that preserves every fixed-level class.
    block = "sharp": the Weyl group of the level-0 part of the sharp block.
    """
    if block == "sharp":
        lines = set()
        for w in spec.class_table.get((0, EVEN), ()):
            if set(w.support()) <= spec.sharp_syms:
                lines.add(_primitive_line(w))
    else:
        sub = spec.delta_prime if block == "prime" else spec.delta_doubleprime
        lines = {_primitive_line(w) for w, residues in sub.real_pattern
                 if not level_zero_only or 0 in residues}
    gens = [reflection(spec, Weight(line)) for line in sorted(lines, key=str)]
    return enumerate_finite_group(spec, gens)


def _primitive_line(w: Weight) -> Tuple:
    lead = w.terms[0][1]
    scaled = w.scale(Rat(1) / lead)
    return scaled.terms


# ---------------------------------------------------------------------------
# max-support formulas

def translation_image_max_support(spec: AlgebraSpec, t: GroupElement) -> Weight:
    """Dominance-maximal exponent of t(e^rho_hat R) from the closed form:
    flipped even factors raise by -t(alpha), flipped odd factors lower by
    +t(beta)."""
    top = apply(spec, t, spec.rho_hat)
    for rd in spec.finite_positive:
        img = apply(spec, t, rd.root)
        if _is_negative_root_weight(spec, img):
            top = top - img if rd.parity == EVEN else top + img
    return top


def iso_image_max_support(spec: AlgebraSpec, g: GroupElement) -> Weight:
    """Dominance-maximal exponent of g(e^rho_hat / prod_{beta in S}(1+e^-beta))."""
    top = apply(spec, g, spec.rho_hat)
    for beta in spec.S:
        img = apply(spec, g, beta)
        if _is_negative_root_weight(spec, img):
            top = top + img
    return top


def _is_negative_root_weight(spec: AlgebraSpec, w: Weight) -> bool:
    c = spec.solver.solve(w)
    if c is None:
        raise SpecError(f"group image {w} left the root span")
    if all(v.denominator == 1 and v >= 0 for v in c):
        return False
    if all(v.denominator == 1 and v <= 0 for v in c):
        return True
    raise SpecError(f"group image {w} is neither positive nor negative")


# ---------------------------------------------------------------------------
# certified bounded enumeration

class _DropModel:
    """Exact height drop of a moved term as a function of the lattice
    coordinates, in pre-scaled integer arithmetic.

    drop(n) * scale = base + lin . n + n^T quad n
                      + sum over conditional terms t of (t.const + t.coeff . n)
                        when t fires (its pairing with mu is positive, or zero
                        with the fallback flag set).

    This is the same closed formula the slow Weight-based path evaluates; the
    enumeration cross-checks both on every element it keeps.
    """

    __slots__ = ("rank", "scale", "base", "lin", "quad", "terms")

    def __init__(self, spec: AlgebraSpec, basis: Sequence[Weight], anchor: Weight,
                 top: Weight, moved: Sequence[Tuple[Weight, int, Rat, bool]]):
        # top: the image of rho_hat under the coset representative;
        # moved: (root image w, sign of its drop contribution when fired,
        #         firing threshold = delta-level of w, fires-at-threshold flag)
        # per closed-form factor; the factor fires when the pairing of its
        # finite part with mu exceeds the level (the moved root goes negative)
        form = spec.form.value
        ht = _height_functional(spec)
        rank = len(basis)
        h_dual = spec.h_dual
        htd = ht(wt((DELTA, 1)))
        base = ht(anchor) - ht(top)
        lin = [-h_dual * ht(b) + form(top.finite_part(), b) * htd for b in basis]
        quad = [[Rat(1, 2) * h_dual * htd * form(basis[i], basis[j]) for j in range(rank)]
                for i in range(rank)]
        terms = []
        for w, sgn, threshold, fire_at_eq in moved:
            const = -sgn * ht(w)
            coeff = [sgn * form(w, b) * htd for b in basis]
            test = [form(w, b) for b in basis]
            terms.append((test, threshold, fire_at_eq, const, coeff))
        denoms = [base.denominator]
        denoms += [v.denominator for v in lin]
        denoms += [v.denominator for row in quad for v in row]
        for _test, _thr, _f, const, coeff in terms:
            denoms.append(const.denominator)
            denoms += [v.denominator for v in coeff]
        scale = 1
        for d in denoms:
            scale = scale * d // gcd(scale, d)
        self.rank = rank
        self.scale = scale
        self.base = int(base * scale)
        self.lin = tuple(int(v * scale) for v in lin)
        self.quad = tuple(tuple(int(v * scale) for v in row) for row in quad)
        self.terms = tuple(
            (tuple(Rat(v) for v in test), Rat(thr), fire, int(const * scale),
             tuple(int(v * scale) for v in coeff))
            for test, thr, fire, const, coeff in terms)

    def scaled_drop(self, n: Sequence[int]) -> int:
        total = self.base
        lin = self.lin
        for i in range(self.rank):
            ni = n[i]
            if ni:
                total += lin[i] * ni
                row = self.quad[i]
                for j in range(self.rank):
                    if n[j]:
                        total += row[j] * ni * n[j]
        for test, thr, fire_at_eq, const, coeff in self.terms:
            pairing = sum(test[i] * n[i] for i in range(self.rank))
            if pairing == thr and fire_at_eq is None:
                raise SpecError("moved root landed at level zero without being "
                                "a level-zero root; translation is not an automorphism")
            if pairing > thr or (pairing == thr and fire_at_eq):
                total += const + sum(coeff[i] * n[i] for i in range(self.rank))
        return total



def _height_functional(spec: AlgebraSpec):
    """ht as a linear functional on the root span (rational on the refined
    lattice of G(3)^(2))."""
    table: Dict[BasisSymbol, Rat] = {}
    for s in spec.finite_symbols + (DELTA,):
        c = spec.solver.solve(wt((s, 1)))
        table[s] = sum(c, Rat(0))

    def ht(w: Weight) -> Rat:
        total = Rat(0)
        for s, v in w.terms:
            if s != LAMBDA0:
                total += table[s] * v
        return total

    return ht


def translation_drop_model(spec: AlgebraSpec, basis: Sequence[Weight],
                           anchor: Weight) -> _DropModel:
    # a fired even factor contributes -t_mu(alpha) to the max support, a fired
    # odd factor contributes +t_mu(beta)
    moved = []
    for rd in spec.finite_positive:
        sgn = -1 if rd.parity == EVEN else 1
        moved.append((rd.root, sgn, Rat(0), False))
    return _DropModel(spec, basis, anchor, spec.rho_hat, moved)


def iso_drop_model(spec: AlgebraSpec, basis: Sequence[Weight], anchor: Weight,
                   rep: GroupElement) -> _DropModel:
    top = apply(spec, rep, spec.rho_hat)
    moved = []
    for beta in spec.S:
        img = apply(spec, rep, beta)
        level = img.delta_coeff()
        try:
            at_level_neg = _is_negative_root_weight(spec, img.finite_part())
        except SpecError:
            # the finite part alone is not a root, so the image can never be
            # brought to level zero by an honest T' translation
            at_level_neg = None
        moved.append((img, 1, level, at_level_neg))
    return _DropModel(spec, basis, anchor, top, moved)


@dataclass(frozen=True)
class BoundedElement:
    coords: Tuple[int, ...]
    element: GroupElement
    max_support: Weight
    drop: int


@dataclass
class Enumeration:
    elements: List[BoundedElement]
    certified_early: bool
    monotone: bool
    shells_scanned: int
    note: str


def _shell(rank: int, radius: int) -> Iterable[Tuple[int, ...]]:
    """All integer vectors of l1 norm == radius."""
    if rank == 0:
        if radius == 0:
            yield ()
        return
    for first in range(-radius, radius + 1):
        for rest in _shell(rank - 1, radius - abs(first)):
            yield (first,) + rest


def _predecessor(coords: Tuple[int, ...], center: Tuple[int, ...]) -> Tuple[int, ...]:
    rel = [c - z for c, z in zip(coords, center)]
    j = max(range(len(rel)), key=lambda i: abs(rel[i]))
    step = 1 if rel[j] > 0 else -1
    return coords[:j] + (coords[j] - step,) + coords[j + 1:]


def enumerate_bounded(spec: AlgebraSpec, basis: Sequence[Weight], bound: int,
                      model: _DropModel,
                      materialize: Callable[[Weight, Tuple[int, ...]],
                                            Tuple[GroupElement, Weight, int]]
                      ) -> Enumeration:
    """Scan l1-shells of the lattice spanned by `basis`; keep elements whose
    height drop is <= bound.

    Dead points are rejected with the pre-scaled integer drop model; live
    points are materialized through the exact Weight path and the two drops
    are cross-checked.  The shells are centered on a greedily descended local
    minimum of the drop (coset representatives can push the minimum away from
    the origin).  The scan stops early once the live region has been entered
    and left again (two consecutive dead shells) with the drop nondecreasing
    along rays from the center; otherwise it falls back to the hard cap
    radius = bound (widened by the center's norm) and errors if the cap is
    still alive."""
    rank = len(basis)
    if rank == 0:
        element, max_supp, drop = materialize(Weight(()), ())
        elements = [BoundedElement((), element, max_supp, drop)] if drop <= bound else []
        return Enumeration(elements, True, True, 1, "rank-0 lattice")

    scaled_bound = bound * model.scale
    cache: Dict[Tuple[int, ...], int] = {}

    def scaled(coords: Tuple[int, ...]) -> int:
        got = cache.get(coords)
        if got is None:
            got = cache[coords] = model.scaled_drop(coords)
        return got

    center = tuple([0] * rank)
    best = scaled(center)
    for _ in range(4 * (bound + 1)):
        move = None
        for j in range(rank):
            for step in (1, -1):
                cand = center[:j] + (center[j] + step,) + center[j + 1:]
                d = scaled(cand)
                if d < best:
                    best, move = d, cand
        if move is None:
            break
        center = move

    elements: List[BoundedElement] = []
    monotone = True
    seen_alive = False
    dead_streak = 0
    radius = 0
    cap = bound + sum(abs(c) for c in center)
    while True:
        shell_alive = False
        for rel in _shell(rank, radius):
            coords = tuple(c + z for c, z in zip(rel, center))
            sdrop = scaled(coords)
            if radius >= 1:
                pred = _predecessor(coords, center)
                if pred in cache and cache[pred] > sdrop:
                    monotone = False
            if sdrop <= scaled_bound:
                mu = Weight(())
                for c, b in zip(coords, basis):
                    if c:
                        mu = mu + b.scale(c)
                element, max_supp, drop = materialize(mu, coords)
                if drop * model.scale != sdrop:
                    raise CertificationError(
                        f"drop model disagrees with the exact drop at {coords}: "
                        f"{sdrop} vs {drop * model.scale}")
                elements.append(BoundedElement(coords, element, max_supp, drop))
                shell_alive = True
        if shell_alive:
            seen_alive = True
            dead_streak = 0
        else:
            dead_streak += 1
        if seen_alive and dead_streak >= 2 and monotone:
            return Enumeration(elements, True, True, radius + 1,
                               f"certified at shell {radius} around {center}")
        if radius >= cap:
            if shell_alive:
                raise CertificationError(
                    f"shell {radius} still contributes at the hard cap; manual bound review needed")
            return Enumeration(elements, False, monotone, radius + 1,
                               f"hard cap {cap} reached")
        radius += 1


def default_anchor(spec: AlgebraSpec) -> Weight:
    """Window anchor rho_hat + sum of the positive odd finite roots."""
    return spec.rho_hat + spec.positive_odd_sum


def enumerate_T_prime(spec: AlgebraSpec, contribution_bound: int,
                      anchor: Optional[Weight] = None) -> Enumeration:
    """Translations t_mu, mu in M', whose image of e^rho_hat R can reach the
    window (max support at height <= contribution_bound below the anchor)."""
    if contribution_bound < 0:
        raise SpecError("contribution bound must be >= 0")
    if anchor is None:
        anchor = default_anchor(spec)
    basis = spec.t_prime_basis

    def materialize(mu: Weight, coords: Tuple[int, ...]):
        t = translation(spec, mu)
        max_supp = translation_image_max_support(spec, t)
        c = spec.solver.solve(anchor - max_supp)
        if not is_nonneg_integral(c):
            raise SpecError(f"max support {max_supp} is not below the anchor {anchor}")
        return t, max_supp, int(height(c))

    model = translation_drop_model(spec, basis, anchor)
    return enumerate_bounded(spec, basis, contribution_bound, model, materialize)


def _affine_weyl_coset_reps(spec: AlgebraSpec) -> Tuple[GroupElement, ...]:
    """One representative of each T'-coset of the affine Weyl group of Delta'.

    The group need not split over its translation lattice (the G(3)^(2)
    subsystem has long roots at odd levels only, whose reflections carry
    forced fractional translations), so representatives are found by a
    breadth-first walk over low-level reflections, keyed by linear part.
    """
    gens: List[GroupElement] = []
    for w, residues in spec.delta_prime.real_pattern:
        for lev in range(0, spec.m + 1):
            if lev % spec.m in residues:
                gens.append(reflection(spec, w + wt((DELTA, lev))))
    reps: Dict[Tuple, GroupElement] = {}
    ident = identity(spec)
    reps[ident.linear] = ident
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = compose(spec, g, h)
                if gh.linear not in reps:
                    reps[gh.linear] = gh
                    nxt.append(gh)
                    if len(reps) > 100000:
                        raise CertificationError("linear parts of the Delta' Weyl group "
                                                 "did not close; bad generator set")
        frontier = nxt
    return tuple(sorted(reps.values(), key=lambda g: (g.translation, g.linear)))


def enumerate_iso_group(spec: AlgebraSpec, contribution_bound: int,
                        anchor: Optional[Weight] = None) -> Tuple[List[BoundedElement], bool]:
    """Elements w = t_mu . r of the affine Weyl group of Delta' (for the
    extended families: of the extension by the diagram automorphism, to be
    summed with weight 1/2) that can reach the window.

    Returns the elements and a flag telling whether the 1/2 convention is in
    force (extended families)."""
    if anchor is None:
        anchor = default_anchor(spec)
    basis = spec.t_prime_basis
    if spec.extended_sign:
        # the full signed-permutation group of the extension letters; the
        # single-letter flips are diagram automorphisms, not root reflections,
        # so every cached sign is recomputed from the normal form (det times
        # the extension parity) rather than trusted from the generators
        letters = [s for s in _finite_syms(spec) if s.kind == spec.mprime_letters]
        lines = [wt((s, 2)) for s in letters] + \
            [wt((a, 1), (b, sb)) for i, a in enumerate(letters)
             for b in letters[i + 1:] for sb in (1, -1)]
        gens = [reflection(spec, w) for w in lines]
        reps = tuple(GroupElement(y.linear, y.translation, sign_of(spec, y), y.p_bit)
                     for y in enumerate_finite_group(spec, gens))
    else:
        reps = _affine_weyl_coset_reps(spec)
    out: List[BoundedElement] = []
    for rep in reps:
        def materialize(mu: Weight, coords: Tuple[int, ...], rep=rep):
            g = compose(spec, translation(spec, mu), rep)
            max_supp = iso_image_max_support(spec, g)
            c = spec.solver.solve(anchor - max_supp)
            if not is_nonneg_integral(c):
                raise SpecError(f"iso max support {max_supp} above the anchor {anchor}")
            return g, max_supp, int(height(c))

        model = iso_drop_model(spec, basis, anchor, rep)
        out.extend(enumerate_bounded(spec, basis, contribution_bound,
                                     model, materialize).elements)
    return out, spec.extended_sign
