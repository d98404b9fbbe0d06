"""Root data for every twisted affine Lie superalgebra family.

Each family is encoded as: the multiset of real roots organized by congruence
class of the delta-level and by parity, the simple-root choice (with the
distinguished alpha_0 = delta - theta), the isotropic set S, the two even
subsystems with their translation lattices, and the imaginary-root
multiplicity table.  Everything degenerate (printed ellipses, highest weights,
lattices, multiplicities) is recomputed and cross-checked at build time by
``validate_spec``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .lattice import (DELTA, LAMBDA0, BasisSymbol, BilinearForm, ExactSolver, Rat, Weight,
                      dl, eps, height, is_nonneg_integral, wt)

EVEN = "even"
ODD = "odd"

DELTA_W = wt((DELTA, 1))
LAMBDA0_W = wt((LAMBDA0, 1))


class SpecError(ValueError):
    """A family table failed a structural check at construction time."""


# ---------------------------------------------------------------------------
# root-pattern helpers

def _pairs(letter, n: int) -> Tuple[Weight, ...]:
    """{±L_i ± L_j : i < j}"""
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for si in (1, -1):
                for sj in (1, -1):
                    out.append(wt((letter(i), si), (letter(j), sj)))
    return tuple(out)


def _singles(letter, n: int, scale: int = 1) -> Tuple[Weight, ...]:
    return tuple(wt((letter(i), s * scale)) for i in range(1, n + 1) for s in (1, -1))


def _cross(n_e: int, n_d: int) -> Tuple[Weight, ...]:
    """{±eps_i ± del_g}"""
    out = []
    for i in range(1, n_e + 1):
        for g in range(1, n_d + 1):
            for si in (1, -1):
                for sg in (1, -1):
                    out.append(wt((eps(i), si), (dl(g), sg)))
    return tuple(out)


def _interleave(a: Sequence[Weight], b: Sequence[Weight]) -> List[Weight]:
    out: List[Weight] = []
    for x, y in itertools.zip_longest(a, b):
        if x is not None:
            out.append(x)
        if y is not None:
            out.append(y)
    return out


def _chain_eps_del(l: int) -> List[Weight]:
    """eps_1-del_1, del_1-eps_2, ..., eps_l-del_l, del_l-eps_{l+1}"""
    return _interleave([wt((eps(i), 1), (dl(i), -1)) for i in range(1, l + 1)],
                       [wt((dl(i), 1), (eps(i + 1), -1)) for i in range(1, l + 1)])


def _eps_tail(start: int, k: int) -> List[Weight]:
    """eps_start - eps_{start+1}, ..., eps_{k-1} - eps_k"""
    return [wt((eps(j), 1), (eps(j + 1), -1)) for j in range(start, k)]


# ---------------------------------------------------------------------------
# family recipes

@dataclass(frozen=True)
class _Recipe:
    family: str
    label: str
    k: int
    l: int
    m: int
    n_eps: int
    n_del: int
    form: BilinearForm
    # ((weights, residues mod m, parity), ...)
    class_entries: Tuple[Tuple[Tuple[Weight, ...], Tuple[int, ...], str], ...]
    pi: Tuple[Weight, ...]
    alpha0_expected: Weight
    S: Tuple[Weight, ...]
    defect: int
    prime_syms: FrozenSet[BasisSymbol]
    doubleprime_syms: FrozenSet[BasisSymbol]
    sharp_syms: FrozenSet[BasisSymbol]
    extended_sign: bool
    mprime_letters: str          # "eps" or "del"; only meaningful when extended
    fq_selector: str             # one | A_odd_square_inv | A_quarter_inv | D_plain
    dim_g0: int
    dim_g1: int
    finite_label: str
    prime_type: str
    doubleprime_type: str


def _std_form(n_eps: int, n_del: int, h_dual_zero: bool) -> BilinearForm:
    s = Rat(-1) if h_dual_zero else Rat(1)
    return BilinearForm(eps_diag=(s,) * n_eps, del_diag=(-s,) * n_del)


def _eps_syms(n: int) -> FrozenSet[BasisSymbol]:
    return frozenset(eps(i) for i in range(1, n + 1))


def _del_syms(n: int) -> FrozenSet[BasisSymbol]:
    return frozenset(dl(g) for g in range(1, n + 1))


_ALL2 = (0, 1)
_EVEN2 = (0,)
_ODD2 = (1,)
_E02 = (0, 2)
_O13 = (1, 3)
_R0 = (0,)
_R2 = (2,)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise SpecError(msg)


def _recipe_A_2k_2lm1_2(k: int, l: int) -> _Recipe:
    _require(k >= l >= 1, f"A(2k,2l-1)^(2) requires k >= l >= 1, got k={k}, l={l}")
    entries = (
        (_pairs(eps, k), _ALL2, EVEN),
        (_singles(eps, k), _ALL2, EVEN),
        (_singles(eps, k, 2), _ODD2, EVEN),
        (_pairs(dl, l), _ALL2, EVEN),
        (_singles(dl, l, 2), _EVEN2, EVEN),
        (_cross(k, l), _ALL2, ODD),
        (_singles(dl, l), _ALL2, ODD),
    )
    if k > l:
        pi = _chain_eps_del(l) + _eps_tail(l + 1, k) + [wt((eps(k), 1))]
        alpha0 = DELTA_W - wt((eps(1), 2))
        S = tuple(wt((eps(i), 1), (dl(i), -1)) for i in range(1, l + 1))
    else:
        pi = _interleave([wt((dl(i), 1), (eps(i), -1)) for i in range(1, k + 1)],
                         [wt((eps(i), 1), (dl(i + 1), -1)) for i in range(1, k)])
        pi = pi + [wt((eps(k), 1))]
        alpha0 = DELTA_W - wt((eps(1), 1), (dl(1), 1))
        S = tuple(wt((dl(i), 1), (eps(i), -1)) for i in range(1, k + 1))
    return _Recipe(
        family="A_2k_2l-1_2", label=f"A({2*k},{2*l-1})^(2)", k=k, l=l, m=2,
        n_eps=k, n_del=l, form=_std_form(k, l, False),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=l,
        prime_syms=_eps_syms(k), doubleprime_syms=_del_syms(l), sharp_syms=_eps_syms(k),
        extended_sign=False, mprime_letters="eps", fq_selector="one",
        dim_g0=(2 * k + 1) ** 2 + (2 * l) ** 2 - 1, dim_g1=2 * (2 * k + 1) * (2 * l),
        finite_label=f"B({k},{l})", prime_type=f"A_{2*k}^(2)", doubleprime_type=f"A_{2*l-1}^(2)")


def _recipe_A_2l_2km1_2(k: int, l: int) -> _Recipe:
    _require(k >= l + 1 and l >= 1, f"A(2l,2k-1)^(2) requires k >= l+1 >= 2, got k={k}, l={l}")
    entries = (
        (_pairs(dl, l), _ALL2, EVEN),
        (_singles(dl, l), _ALL2, EVEN),
        (_singles(dl, l, 2), _ODD2, EVEN),
        (_pairs(eps, k), _ALL2, EVEN),
        (_singles(eps, k, 2), _EVEN2, EVEN),
        (_cross(k, l), _ALL2, ODD),
        (_singles(eps, k), _ALL2, ODD),
    )
    if k >= l + 2:
        pi = [wt((eps(1), 1), (eps(2), -1))]
        pi += _interleave([wt((eps(i + 1), 1), (dl(i), -1)) for i in range(1, l + 1)],
                          [wt((dl(i), 1), (eps(i + 2), -1)) for i in range(1, l + 1)])
        pi += _eps_tail(l + 2, k) + [wt((eps(k), 1))]
        alpha0 = DELTA_W - wt((eps(1), 1), (eps(2), 1))
        S = tuple(wt((eps(i + 1), 1), (dl(i), -1)) for i in range(1, l + 1))
    else:  # k == l + 1
        pi = _chain_eps_del(l) + [wt((eps(l + 1), 1))]
        alpha0 = DELTA_W - wt((dl(1), 1), (eps(1), 1))
        S = tuple(wt((dl(i), 1), (eps(i + 1), -1)) for i in range(1, l + 1))
    return _Recipe(
        family="A_2l_2k-1_2", label=f"A({2*l},{2*k-1})^(2)", k=k, l=l, m=2,
        n_eps=k, n_del=l, form=_std_form(k, l, False),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=l,
        prime_syms=_eps_syms(k), doubleprime_syms=_del_syms(l), sharp_syms=_eps_syms(k),
        extended_sign=False, mprime_letters="eps", fq_selector="one",
        dim_g0=(2 * l + 1) ** 2 + (2 * k) ** 2 - 1, dim_g1=2 * (2 * l + 1) * (2 * k),
        finite_label=f"B({l},{k})", prime_type=f"A_{2*k-1}^(2)", doubleprime_type=f"A_{2*l}^(2)")


def _recipe_A_2km1_2lm1_2(k: int, l: int) -> _Recipe:
    _require(k >= l + 1 and l >= 1, f"A(2k-1,2l-1)^(2) requires k >= l+1 >= 2, got k={k}, l={l}")
    entries = (
        (_pairs(eps, k), _ALL2, EVEN),
        (_pairs(dl, l), _ALL2, EVEN),
        (_singles(dl, l, 2), _EVEN2, EVEN),
        (_singles(eps, k, 2), _ODD2, EVEN),
        (_cross(k, l), _ALL2, ODD),
    )
    if k >= l + 2:
        pi = _chain_eps_del(l) + _eps_tail(l + 1, k) + [wt((eps(k - 1), 1), (eps(k), 1))]
    else:  # k == l + 1
        pi = _chain_eps_del(l) + [wt((dl(l), 1), (eps(l + 1), 1))]
    alpha0 = DELTA_W - wt((eps(1), 2))
    S = tuple(wt((eps(i), 1), (dl(i), -1)) for i in range(1, l + 1))
    return _Recipe(
        family="A_2k-1_2l-1_2", label=f"A({2*k-1},{2*l-1})^(2)", k=k, l=l, m=2,
        n_eps=k, n_del=l, form=_std_form(k, l, False),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=l,
        prime_syms=_eps_syms(k), doubleprime_syms=_del_syms(l), sharp_syms=_eps_syms(k),
        extended_sign=True, mprime_letters="eps", fq_selector="one",
        dim_g0=(2 * k) ** 2 + (2 * l) ** 2 - 1, dim_g1=8 * k * l,
        finite_label=f"D({k},{l})", prime_type=f"A_{2*k-1}^(2)", doubleprime_type=f"A_{2*l-1}^(2)")


def _recipe_A_2lm1_2km1_2(k: int, l: int) -> _Recipe:
    _require(k >= l + 1 and l >= 1, f"A(2l-1,2k-1)^(2) requires k >= l+1 >= 2, got k={k}, l={l}")
    entries = (
        (_pairs(dl, l), _ALL2, EVEN),
        (_pairs(eps, k), _ALL2, EVEN),
        (_singles(eps, k, 2), _EVEN2, EVEN),
        (_singles(dl, l, 2), _ODD2, EVEN),
        (_cross(k, l), _ALL2, ODD),
    )
    if k >= l + 2:
        pi = [wt((eps(1), 1), (eps(2), -1))]
        pi += _interleave([wt((eps(i + 1), 1), (dl(i), -1)) for i in range(1, l + 1)],
                          [wt((dl(i), 1), (eps(i + 2), -1)) for i in range(1, l + 1)])
        pi += _eps_tail(l + 2, k) + [wt((eps(k), 2))]
    else:  # k == l + 1
        pi = [wt((eps(1), 1), (eps(2), -1))]
        pi += _interleave([wt((eps(i + 1), 1), (dl(i), -1)) for i in range(1, l + 1)],
                          [wt((dl(i), 1), (eps(i + 2), -1)) for i in range(1, l)])
        pi += [wt((eps(l + 1), 1), (dl(l), 1))]
    alpha0 = DELTA_W - wt((eps(1), 1), (eps(2), 1))
    S = tuple(wt((eps(i + 1), 1), (dl(i), -1)) for i in range(1, l + 1))
    return _Recipe(
        family="A_2l-1_2k-1_2", label=f"A({2*l-1},{2*k-1})^(2)", k=k, l=l, m=2,
        n_eps=k, n_del=l, form=_std_form(k, l, False),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=l,
        prime_syms=_eps_syms(k), doubleprime_syms=_del_syms(l), sharp_syms=_eps_syms(k),
        extended_sign=False, mprime_letters="eps", fq_selector="one",
        dim_g0=(2 * l) ** 2 + (2 * k) ** 2 - 1, dim_g1=8 * k * l,
        finite_label=f"D({l},{k})", prime_type=f"A_{2*k-1}^(2)", doubleprime_type=f"A_{2*l-1}^(2)")


def _recipe_A_odd_diag(k: int) -> _Recipe:
    _require(k >= 2, f"A(2k-1,2k-1)^(2) requires k >= 2, got k={k}")
    entries = (
        (_pairs(dl, k), _ALL2, EVEN),
        (_pairs(eps, k), _ALL2, EVEN),
        (_singles(eps, k, 2), _EVEN2, EVEN),
        (_singles(dl, k, 2), _ODD2, EVEN),
        (_cross(k, k), _ALL2, ODD),
    )
    pi = _interleave([wt((eps(i), 1), (dl(i), -1)) for i in range(1, k + 1)],
                     [wt((dl(i), 1), (eps(i + 1), -1)) for i in range(1, k)])
    pi += [wt((eps(k), 1), (dl(k), 1))]
    alpha0 = DELTA_W - wt((eps(1), 1), (dl(1), 1))
    S = tuple(wt((eps(i), 1), (dl(i), -1)) for i in range(1, k + 1))
    return _Recipe(
        family="A_2k-1_2k-1_2", label=f"A({2*k-1},{2*k-1})^(2)", k=k, l=k, m=2,
        n_eps=k, n_del=k, form=_std_form(k, k, True),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=k,
        prime_syms=_del_syms(k), doubleprime_syms=_eps_syms(k), sharp_syms=_eps_syms(k),
        extended_sign=True, mprime_letters="del", fq_selector="A_odd_square_inv",
        dim_g0=2 * (2 * k) ** 2 - 2, dim_g1=2 * (2 * k) ** 2,
        finite_label=f"D({k},{k})", prime_type=f"A_{2*k-1}^(2)", doubleprime_type=f"A_{2*k-1}^(2)")


def _recipe_A_2k_2l_4(k: int, l: int) -> _Recipe:
    _require(k >= l + 1 and l >= 1, f"A(2k,2l)^(4) requires k >= l+1 >= 2, got k={k}, l={l}")
    entries = (
        (_pairs(eps, k), _E02, EVEN),
        (_singles(eps, k), _E02, EVEN),
        (_singles(eps, k, 2), _R2, EVEN),
        (_pairs(dl, l), _E02, EVEN),
        (_singles(dl, l), _O13, EVEN),
        (_singles(dl, l, 2), _R0, EVEN),
        (_singles(eps, k), _O13, ODD),
        (_singles(dl, l), _E02, ODD),
        (_cross(k, l), _E02, ODD),
    )
    pi = _chain_eps_del(l) + _eps_tail(l + 1, k) + [wt((eps(k), 1))]
    alpha0 = DELTA_W - wt((eps(1), 1))
    S = tuple(wt((eps(i), 1), (dl(i), -1)) for i in range(1, l + 1))
    return _Recipe(
        family="A_2k_2l_4", label=f"A({2*k},{2*l})^(4)", k=k, l=l, m=4,
        n_eps=k, n_del=l, form=_std_form(k, l, False),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=l,
        prime_syms=_eps_syms(k), doubleprime_syms=_del_syms(l), sharp_syms=_eps_syms(k),
        extended_sign=False, mprime_letters="eps", fq_selector="one",
        dim_g0=(2 * k + 1) ** 2 + (2 * l + 1) ** 2 - 1, dim_g1=2 * (2 * k + 1) * (2 * l + 1),
        finite_label=f"B({k},{l})", prime_type=f"A_{2*k}^(2)", doubleprime_type=f"A_{2*l}^(2)")


def _recipe_A_2l_2k_4(k: int, l: int) -> _Recipe:
    _require(k >= l + 1 and l >= 1, f"A(2l,2k)^(4) requires k >= l+1 >= 2, got k={k}, l={l}")
    entries = (
        (_pairs(dl, l), _E02, EVEN),
        (_singles(dl, l), _E02, EVEN),
        (_singles(dl, l, 2), _R2, EVEN),
        (_pairs(eps, k), _E02, EVEN),
        (_singles(eps, k), _O13, EVEN),
        (_singles(eps, k, 2), _R0, EVEN),
        (_singles(dl, l), _O13, ODD),
        (_singles(eps, k), _E02, ODD),
        (_cross(k, l), _E02, ODD),
    )
    pi = _chain_eps_del(l) + _eps_tail(l + 1, k) + [wt((eps(k), 1))]
    alpha0 = DELTA_W - wt((eps(1), 1))
    S = tuple(wt((eps(i), 1), (dl(i), -1)) for i in range(1, l + 1))
    return _Recipe(
        family="A_2l_2k_4", label=f"A({2*l},{2*k})^(4)", k=k, l=l, m=4,
        n_eps=k, n_del=l, form=_std_form(k, l, False),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=l,
        prime_syms=_eps_syms(k), doubleprime_syms=_del_syms(l), sharp_syms=_eps_syms(k),
        extended_sign=False, mprime_letters="eps", fq_selector="one",
        dim_g0=(2 * l + 1) ** 2 + (2 * k + 1) ** 2 - 1, dim_g1=2 * (2 * l + 1) * (2 * k + 1),
        finite_label=f"B({l},{k})", prime_type=f"A_{2*k}^(2)", doubleprime_type=f"A_{2*l}^(2)")


def _recipe_A_quarter_diag(k: int) -> _Recipe:
    _require(k >= 1, f"A(2k,2k)^(4) requires k >= 1, got k={k}")
    entries = (
        (_pairs(dl, k), _E02, EVEN),
        (_singles(dl, k), _E02, EVEN),
        (_singles(dl, k, 2), _R2, EVEN),
        (_pairs(eps, k), _E02, EVEN),
        (_singles(eps, k), _O13, EVEN),
        (_singles(eps, k, 2), _R0, EVEN),
        (_singles(dl, k), _O13, ODD),
        (_singles(eps, k), _E02, ODD),
        (_cross(k, k), _E02, ODD),
    )
    pi = _chain_eps_del(k - 1) + [wt((eps(k), 1), (dl(k), -1)), wt((dl(k), 1))]
    alpha0 = DELTA_W - wt((eps(1), 1))
    S = tuple(wt((eps(i), 1), (dl(i), -1)) for i in range(1, k + 1))
    return _Recipe(
        family="A_2k_2k_4", label=f"A({2*k},{2*k})^(4)", k=k, l=k, m=4,
        n_eps=k, n_del=k, form=_std_form(k, k, True),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=k,
        prime_syms=_del_syms(k), doubleprime_syms=_eps_syms(k), sharp_syms=_del_syms(k),
        extended_sign=False, mprime_letters="del", fq_selector="A_quarter_inv",
        dim_g0=2 * (2 * k + 1) ** 2 - 2, dim_g1=2 * (2 * k + 1) ** 2,
        finite_label=f"B({k},{k})", prime_type=f"A_{2*k}^(2)", doubleprime_type=f"A_{2*k}^(2)")


def _recipe_D_kp1_l_2(k: int, l: int) -> _Recipe:
    _require(k >= l + 1 and l >= 1, f"D(k+1,l)^(2) requires k >= l+1 >= 2, got k={k}, l={l}")
    entries = (
        (_pairs(eps, k), _EVEN2, EVEN),
        (_singles(eps, k), _ALL2, EVEN),
        (_pairs(dl, l), _EVEN2, EVEN),
        (_singles(dl, l, 2), _EVEN2, EVEN),
        (_cross(k, l), _EVEN2, ODD),
        (_singles(dl, l), _ALL2, ODD),
    )
    pi = _chain_eps_del(l) + _eps_tail(l + 1, k) + [wt((eps(k), 1))]
    alpha0 = DELTA_W - wt((eps(1), 1))
    S = tuple(wt((eps(i), 1), (dl(i), -1)) for i in range(1, l + 1))
    return _Recipe(
        family="D_k+1_l_2", label=f"D({k+1},{l})^(2)", k=k, l=l, m=2,
        n_eps=k, n_del=l, form=_std_form(k, l, False),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=l,
        prime_syms=_eps_syms(k), doubleprime_syms=_del_syms(l), sharp_syms=_eps_syms(k),
        extended_sign=False, mprime_letters="eps", fq_selector="one",
        dim_g0=(k + 1) * (2 * k + 1) + l * (2 * l + 1), dim_g1=4 * (k + 1) * l,
        finite_label=f"B({k},{l})", prime_type=f"D_{k+1}^(2)", doubleprime_type=f"C_{l}^(1)")


def _recipe_D_lp1_k_2(k: int, l: int, family: str = "D_l+1_k_2",
                      label: Optional[str] = None) -> _Recipe:
    _require(k >= l + 1 and l >= 0, f"D(l+1,k)^(2) requires k >= l+1 >= 1, got k={k}, l={l}")
    entries = (
        (_pairs(dl, l), _EVEN2, EVEN),
        (_singles(dl, l), _ALL2, EVEN),
        (_pairs(eps, k), _EVEN2, EVEN),
        (_singles(eps, k, 2), _EVEN2, EVEN),
        (_cross(k, l), _EVEN2, ODD),
        (_singles(eps, k), _ALL2, ODD),
    )
    pi = _chain_eps_del(l) + _eps_tail(l + 1, k) + [wt((eps(k), 1))]
    alpha0 = DELTA_W - wt((eps(1), 1))
    S = tuple(wt((eps(i), 1), (dl(i), -1)) for i in range(1, l + 1))
    return _Recipe(
        family=family, label=label or f"D({l+1},{k})^(2)", k=k, l=l, m=2,
        n_eps=k, n_del=l, form=_std_form(k, l, False),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=l,
        prime_syms=_eps_syms(k), doubleprime_syms=_del_syms(l), sharp_syms=_eps_syms(k),
        extended_sign=False, mprime_letters="eps", fq_selector="one",
        dim_g0=(l + 1) * (2 * l + 1) + k * (2 * k + 1), dim_g1=4 * (l + 1) * k,
        finite_label=f"B({l},{k})", prime_type=f"C_{k}^(1)", doubleprime_type=f"D_{l+1}^(2)")


def _recipe_D_diag(k: int) -> _Recipe:
    _require(k >= 1, f"D(k+1,k)^(2) requires k >= 1, got k={k}")
    entries = (
        (_pairs(dl, k), _EVEN2, EVEN),
        (_singles(dl, k), _ALL2, EVEN),
        (_pairs(eps, k), _EVEN2, EVEN),
        (_singles(eps, k, 2), _EVEN2, EVEN),
        (_cross(k, k), _EVEN2, ODD),
        (_singles(eps, k), _ALL2, ODD),
    )
    pi = _chain_eps_del(k - 1) + [wt((eps(k), 1), (dl(k), -1)), wt((dl(k), 1))]
    alpha0 = DELTA_W - wt((eps(1), 1))
    S = tuple(wt((eps(i), 1), (dl(i), -1)) for i in range(1, k + 1))
    return _Recipe(
        family="D_k+1_k_2", label=f"D({k+1},{k})^(2)", k=k, l=k, m=2,
        n_eps=k, n_del=k, form=_std_form(k, k, True),
        class_entries=entries, pi=tuple(pi), alpha0_expected=alpha0, S=S, defect=k,
        prime_syms=_del_syms(k), doubleprime_syms=_eps_syms(k), sharp_syms=_del_syms(k),
        extended_sign=False, mprime_letters="del", fq_selector="D_plain",
        dim_g0=(2 * k + 1) ** 2, dim_g1=4 * k * (k + 1),
        finite_label=f"B({k},{k})", prime_type=f"D_{k+1}^(2)", doubleprime_type=f"C_{k}^(1)")


def _recipe_G3_2() -> _Recipe:
    g_even0 = tuple(wt((eps(i), s)) for i in (1, 2, 3) for s in (2, -2))
    g_even1 = tuple(wt((eps(2), 3 * s), (eps(1), t)) for s in (1, -1) for t in (1, -1)) + \
        tuple(wt((eps(2), s), (eps(1), t)) for s in (1, -1) for t in (1, -1))
    g_odd0 = tuple(wt((eps(1), a), (eps(2), b), (eps(3), c))
                   for a in (1, -1) for b in (1, -1) for c in (1, -1))
    g_odd1 = tuple(wt((eps(2), 2 * s), (eps(3), t)) for s in (1, -1) for t in (1, -1)) + \
        tuple(wt((eps(3), s)) for s in (1, -1))
    entries = (
        (g_even0, _EVEN2, EVEN),
        (g_even1, _ODD2, EVEN),
        (g_odd0, _EVEN2, ODD),
        (g_odd1, _ODD2, ODD),
    )
    pi = (wt((eps(3), 1), (eps(2), -1), (eps(1), -1)), wt((eps(1), 2)), wt((eps(2), 2)))
    alpha0 = DELTA_W - wt((eps(3), 1), (eps(2), 2))
    form = BilinearForm(eps_diag=(Rat(3, 2), Rat(1, 2), Rat(-2)), del_diag=())
    return _Recipe(
        family="G3_2", label="G(3)^(2)", k=3, l=0, m=2,
        n_eps=3, n_del=0, form=form,
        class_entries=entries, pi=pi, alpha0_expected=alpha0,
        S=(wt((eps(3), 1), (eps(2), -1), (eps(1), -1)),), defect=1,
        prime_syms=frozenset((eps(1), eps(2))), doubleprime_syms=frozenset((eps(3),)),
        sharp_syms=frozenset((eps(1), eps(2))),
        extended_sign=False, mprime_letters="eps", fq_selector="one",
        dim_g0=17, dim_g1=14,
        finite_label="D(2,1;-3/4)", prime_type="G_2^(1)", doubleprime_type="A_1^(1)")


FAMILY_TOKENS: Tuple[str, ...] = (
    "A_2k_2l-1_2", "A_2l_2k-1_2", "A_2k-1_2l-1_2", "A_2l-1_2k-1_2", "A_2k-1_2k-1_2",
    "A_2k_2l_4", "A_2l_2k_4", "A_2k_2k_4",
    "D_k+1_l_2", "D_l+1_k_2", "D_k+1_k_2", "C_l+1_2", "G3_2",
)


def _recipe(family: str, k: Optional[int], l: Optional[int]) -> _Recipe:
    def need(name, v):
        if v is None:
            raise SpecError(f"family {family} requires --{name}")
        if v < 0:
            raise SpecError(f"--{name} must be nonnegative, got {v}")
        return v

    if family == "A_2k_2l-1_2":
        return _recipe_A_2k_2lm1_2(need("k", k), need("l", l))
    if family == "A_2l_2k-1_2":
        return _recipe_A_2l_2km1_2(need("k", k), need("l", l))
    if family == "A_2k-1_2l-1_2":
        return _recipe_A_2km1_2lm1_2(need("k", k), need("l", l))
    if family == "A_2l-1_2k-1_2":
        return _recipe_A_2lm1_2km1_2(need("k", k), need("l", l))
    if family == "A_2k-1_2k-1_2":
        return _recipe_A_odd_diag(need("k", k))
    if family == "A_2k_2l_4":
        return _recipe_A_2k_2l_4(need("k", k), need("l", l))
    if family == "A_2l_2k_4":
        return _recipe_A_2l_2k_4(need("k", k), need("l", l))
    if family == "A_2k_2k_4":
        return _recipe_A_quarter_diag(need("k", k))
    if family == "D_k+1_l_2":
        return _recipe_D_kp1_l_2(need("k", k), need("l", l))
    if family == "D_l+1_k_2":
        return _recipe_D_lp1_k_2(need("k", k), need("l", l))
    if family == "D_k+1_k_2":
        return _recipe_D_diag(need("k", k))
    if family == "C_l+1_2":
        lv = need("l", l)
        _require(lv >= 1, f"C(l+1)^(2) requires l >= 1, got l={lv}")
        return _recipe_D_lp1_k_2(lv, 0, family="C_l+1_2", label=f"C({lv+1})^(2)")
    if family == "G3_2":
        return _recipe_G3_2()
    raise SpecError(f"unknown family {family!r}; valid tokens: {', '.join(FAMILY_TOKENS)}")


# ---------------------------------------------------------------------------
# algebra spec

@dataclass(frozen=True)
class RootDatum:
    root: Weight
    parity: str
    mult: int = 1


@dataclass(frozen=True)
class SubsystemData:
    letters: Tuple[BasisSymbol, ...]
    type_label: str
    # real-root descriptors: (finite weight, residues of allowed delta-levels)
    real_pattern: Tuple[Tuple[Weight, Tuple[int, ...]], ...]
    lattice_basis: Tuple[Weight, ...]


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    label: str
    k: int
    l: int
    m: int
    n_eps: int
    n_del: int
    form: BilinearForm
    class_entries: Tuple[Tuple[Tuple[Weight, ...], Tuple[int, ...], str], ...]
    pi: Tuple[Weight, ...]
    pi_parities: Tuple[str, ...]
    alpha0: Weight
    alpha0_parity: str
    theta: Weight
    rho: Weight
    h_dual: Rat
    rho_hat: Weight
    S: Tuple[Weight, ...]
    defect: int
    extended_sign: bool
    mprime_letters: str
    fq_selector: str
    imaginary_mults: Tuple[Tuple[Tuple[int, str], int], ...]
    delta_prime: SubsystemData
    delta_doubleprime: SubsystemData
    sharp_syms: FrozenSet[BasisSymbol]
    dim_g0: int
    dim_g1: int
    finite_label: str

    # -- derived views ------------------------------------------------------

    @cached_property
    def pi_hat(self) -> Tuple[Weight, ...]:
        return (self.alpha0,) + self.pi

    @cached_property
    def finite_symbols(self) -> Tuple[BasisSymbol, ...]:
        return tuple(eps(i) for i in range(1, self.n_eps + 1)) + \
            tuple(dl(g) for g in range(1, self.n_del + 1))

    @cached_property
    def solver(self) -> ExactSolver:
        return ExactSolver(self.pi_hat, self.finite_symbols + (DELTA,))

    @cached_property
    def finite_solver(self) -> ExactSolver:
        return ExactSolver(self.pi, self.finite_symbols)

    @cached_property
    def class_table(self) -> Dict[Tuple[int, str], Tuple[Weight, ...]]:
        table: Dict[Tuple[int, str], List[Weight]] = {}
        for weights, residues, parity in self.class_entries:
            for j in residues:
                bucket = table.setdefault((j, parity), [])
                bucket.extend(weights)
        return {key: tuple(v) for key, v in table.items()}

    @cached_property
    def imaginary_table(self) -> Dict[Tuple[int, str], int]:
        return dict(self.imaginary_mults)

    @cached_property
    def t_prime_basis(self) -> Tuple[Weight, ...]:
        """Basis of the lattice of the identity's translation group T'.

        For the extended families the affine Weyl group is extended by a
        diagram automorphism and T' is the full integer span of the letters;
        otherwise T' is exactly the translation part of the Delta' Weyl group.
        """
        if self.extended_sign:
            return tuple(wt((s, 1)) for s in self.finite_symbols
                         if s.kind == self.mprime_letters)
        return self.delta_prime.lattice_basis

    @cached_property
    def delta_height(self) -> Rat:
        """Height of delta over the simple roots (rational for G(3)^(2))."""
        c = self.solver.solve(DELTA_W)
        assert c is not None
        return height(c)

    @cached_property
    def finite_positive(self) -> Tuple["RootDatum", ...]:
        out = []
        for parity in (EVEN, ODD):
            for w in self.class_table.get((0, parity), ()):
                c = self.finite_solver.solve(w)
                if is_nonneg_integral(c):
                    out.append(RootDatum(w, parity, 1))
        return tuple(out)

    @cached_property
    def positive_odd_sum(self) -> Weight:
        total = Weight(())
        for rd in self.finite_positive:
            if rd.parity == ODD:
                total = total + rd.root
        return total

    def is_h_dual_zero(self) -> bool:
        return self.h_dual == 0


def _solve_rho(recipe: _Recipe) -> Weight:
    syms = tuple(eps(i) for i in range(1, recipe.n_eps + 1)) + \
        tuple(dl(g) for g in range(1, recipe.n_del + 1))
    n = len(syms)
    if len(recipe.pi) != n:
        raise SpecError(f"{recipe.label}: {len(recipe.pi)} simple roots over {n} finite symbols")
    from .lattice import invert_matrix
    rows = []
    rhs = []
    for alpha in recipe.pi:
        rows.append([recipe.form.value(wt((s, 1)), alpha) for s in syms])
        rhs.append(recipe.form.value(alpha, alpha) / 2)
    try:
        inv = invert_matrix(rows)
    except Exception as exc:
        raise SpecError(f"{recipe.label}: finite simple roots are degenerate ({exc})") from exc
    coords = [sum(inv[i][j] * rhs[j] for j in range(n)) for i in range(n)]
    return Weight.of({s: c for s, c in zip(syms, coords)})


def _compute_theta(recipe: _Recipe) -> Tuple[Weight, str]:
    """Unique maximum of the level-1 class under the finite dominance order."""
    syms = tuple(eps(i) for i in range(1, recipe.n_eps + 1)) + \
        tuple(dl(g) for g in range(1, recipe.n_del + 1))
    solver = ExactSolver(recipe.pi, syms)
    candidates: List[Tuple[Weight, str]] = []
    for weights, residues, parity in recipe.class_entries:
        if 1 in residues:
            candidates.extend((w, parity) for w in weights)
    if not candidates:
        raise SpecError(f"{recipe.label}: empty level-1 class, no highest weight")

    def geq(a: Weight, b: Weight) -> bool:
        c = solver.solve(a - b)
        return c is not None and all(v >= 0 for v in c)

    maxima = [(w, p) for (w, p) in candidates if all(geq(w, x) for x, _ in candidates)]
    if len(maxima) != 1:
        raise SpecError(f"{recipe.label}: level-1 class has {len(maxima)} maxima, expected 1")
    return maxima[0]


def _solve_imaginary(recipe: _Recipe) -> Tuple[Tuple[Tuple[int, str], int], ...]:
    """Imaginary multiplicities from the dimension bookkeeping of the finite
    algebra: for each parity, dim of the underlying algebra equals the sum of
    the nonzero class sizes plus the imaginary multiplicities (with the
    level-0 even slot counting the Cartan)."""
    m = recipe.m
    counts: Dict[Tuple[int, str], int] = {(j, p): 0 for j in range(m) for p in (EVEN, ODD)}
    for weights, residues, parity in recipe.class_entries:
        for j in residues:
            counts[(j, parity)] += len(weights)
    dim_h = recipe.n_eps + recipe.n_del
    mults: Dict[Tuple[int, str], int] = {(j, p): 0 for j in range(m) for p in (EVEN, ODD)}
    mults[(0, EVEN)] = dim_h
    even_gap = recipe.dim_g0 - sum(counts[(j, EVEN)] for j in range(m)) - dim_h
    odd_gap = recipe.dim_g1 - sum(counts[(j, ODD)] for j in range(m))
    if m == 2:
        if even_gap < 0 or odd_gap != 0:
            raise SpecError(f"{recipe.label}: imaginary bookkeeping infeasible "
                            f"(even gap {even_gap}, odd gap {odd_gap})")
        mults[(1, EVEN)] = even_gap
    else:
        if even_gap < 0 or odd_gap < 0 or odd_gap % 2:
            raise SpecError(f"{recipe.label}: imaginary bookkeeping infeasible "
                            f"(even gap {even_gap}, odd gap {odd_gap})")
        mults[(2, EVEN)] = even_gap
        mults[(1, ODD)] = mults[(3, ODD)] = odd_gap // 2
    return tuple(sorted(mults.items(), key=lambda t: (t[0][0], t[0][1])))


def _lattice_basis(vectors: List[Tuple[Rat, ...]]) -> List[Tuple[Rat, ...]]:
    """Canonical (Hermite-style) basis of the lattice generated by the vectors."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return []
    n = len(vectors[0])
    scale = 1
    for v in vectors:
        for c in v:
            scale = scale * c.denominator // gcd(scale, c.denominator)
    rows = [[int(c * scale) for c in v] for v in vectors]
    basis: List[List[int]] = []
    for col in range(n):
        while True:
            live = [r for r in rows if r[col]]
            if len(live) <= 1:
                break
            live.sort(key=lambda r: abs(r[col]))
            a = live[0]
            for r in live[1:]:
                q = r[col] // a[col]
                if q:
                    for i in range(n):
                        r[i] -= q * a[i]
        live = [r for r in rows if r[col]]
        if not live:
            continue
        piv = live[0]
        rows = [r for r in rows if r is not piv and any(r)]
        if piv[col] < 0:
            piv = [-x for x in piv]
        for b in basis:
            q = b[col] // piv[col]
            if q:
                for i in range(n):
                    b[i] -= q * piv[i]
        basis.append(list(piv))
    return [tuple(Rat(x, scale) for x in b) for b in basis]


def _block_real_pattern(recipe: _Recipe, syms: FrozenSet[BasisSymbol]
                        ) -> Tuple[Tuple[Weight, Tuple[int, ...]], ...]:
    out = []
    for weights, residues, parity in recipe.class_entries:
        if parity != EVEN:
            continue
        for w in weights:
            if set(w.support()) <= syms:
                out.append((w, residues))
    return tuple(out)


def _m_lattice(recipe: _Recipe, syms: FrozenSet[BasisSymbol]) -> Tuple[Weight, ...]:
    """Translation lattice of the affine Weyl group of the block.

    Parallel reflections s_{n delta - beta} s_{n' delta - beta} translate by
    (2(n-n')/(beta,beta)) beta, so every root family on a line contributes its
    level-period multiple; when the line carries a level-0 root the reflection
    s_beta itself exists and single levels contribute (2n/(beta,beta)) beta.
    """
    letters = sorted(syms, key=lambda s: s.sort_key())
    idx = {s: i for i, s in enumerate(letters)}
    pattern = _block_real_pattern(recipe, syms)

    def line_key(w: Weight) -> Tuple:
        lead = w.terms[0][1]
        return tuple((s, c / lead) for s, c in w.terms)

    lines_with_zero = {line_key(w) for w, residues in pattern if 0 in residues}
    gens: List[Tuple[Rat, ...]] = []
    for w, residues in pattern:
        norm = recipe.form.value(w, w)
        if norm == 0:
            raise SpecError(f"{recipe.label}: isotropic even root {w} in a definite block")
        steps = [recipe.m]
        if line_key(w) in lines_with_zero:
            g = recipe.m
            for j in residues:
                g = gcd(g, j)
            steps.append(g)
        for g in steps:
            coeff = Rat(2 * g) / norm
            vec = [Rat(0)] * len(letters)
            for s, c in w.terms:
                vec[idx[s]] = c * coeff
            gens.append(tuple(vec))
    basis = _lattice_basis(gens)
    return tuple(Weight.of({letters[i]: c for i, c in enumerate(row)}) for row in basis)


def _subsystem_data(recipe: _Recipe, syms: FrozenSet[BasisSymbol], label: str) -> SubsystemData:
    return SubsystemData(
        letters=tuple(sorted(syms, key=lambda s: s.sort_key())),
        type_label=label,
        real_pattern=_block_real_pattern(recipe, syms),
        lattice_basis=_m_lattice(recipe, syms))


@lru_cache(maxsize=None)
def build_spec(family: str, k: Optional[int] = None, l: Optional[int] = None) -> AlgebraSpec:
    recipe = _recipe(family, k, l)
    rho = _solve_rho(recipe)
    theta, theta_parity = _compute_theta(recipe)
    alpha0 = DELTA_W - theta
    if alpha0 != recipe.alpha0_expected:
        raise SpecError(f"{recipe.label}: computed alpha0 {alpha0} differs from "
                        f"the tabulated {recipe.alpha0_expected}")
    h_dual = recipe.form.value(theta, theta) / 2 + recipe.form.value(rho, theta)
    rho_hat = LAMBDA0_W.scale(h_dual) + rho
    imag = _solve_imaginary(recipe)
    pi_parities = tuple(_finite_root_parity(recipe, a) for a in recipe.pi)
    spec = AlgebraSpec(
        family=recipe.family, label=recipe.label, k=recipe.k, l=recipe.l, m=recipe.m,
        n_eps=recipe.n_eps, n_del=recipe.n_del, form=recipe.form,
        class_entries=recipe.class_entries, pi=recipe.pi, pi_parities=pi_parities,
        alpha0=alpha0, alpha0_parity=theta_parity, theta=theta, rho=rho,
        h_dual=h_dual, rho_hat=rho_hat, S=recipe.S, defect=recipe.defect,
        extended_sign=recipe.extended_sign, mprime_letters=recipe.mprime_letters,
        fq_selector=recipe.fq_selector, imaginary_mults=imag,
        delta_prime=_subsystem_data(recipe, recipe.prime_syms, recipe.prime_type),
        delta_doubleprime=_subsystem_data(recipe, recipe.doubleprime_syms,
                                          recipe.doubleprime_type),
        sharp_syms=recipe.sharp_syms,
        dim_g0=recipe.dim_g0, dim_g1=recipe.dim_g1, finite_label=recipe.finite_label)
    report = validate_spec(spec)
    if report.failures:
        raise SpecError(f"{recipe.label}: validation failed: " + "; ".join(report.failures))
    return spec


def _finite_root_parity(recipe: _Recipe, w: Weight) -> str:
    for weights, residues, parity in recipe.class_entries:
        if 0 in residues and w in weights:
            return parity
    raise SpecError(f"{recipe.label}: simple root {w} is not a level-0 root of the family")


# ---------------------------------------------------------------------------
# operations

def h_dual(spec: AlgebraSpec) -> Rat:
    return spec.form.value(spec.rho_hat, DELTA_W)


def finite_positive_roots(spec: AlgebraSpec) -> List[RootDatum]:
    """Positive roots of the finite part (level 0), via the dominance test."""
    return list(spec.finite_positive)


def positive_roots(spec: AlgebraSpec, max_delta: int) -> List[RootDatum]:
    """All positive roots with delta-coefficient <= max_delta, real roots with
    multiplicity 1 and imaginary levels carrying the family's multiplicity."""
    if max_delta < 0:
        raise SpecError("max_delta must be >= 0")
    out: List[RootDatum] = []
    for lev in range(max_delta + 1):
        j = lev % spec.m
        shift = DELTA_W.scale(lev)
        for parity in (EVEN, ODD):
            if lev == 0:
                continue
            mult = spec.imaginary_table.get((j, parity), 0)
            if mult:
                out.append(RootDatum(shift, parity, mult))
        for parity in (EVEN, ODD):
            for w in spec.class_table.get((j, parity), ()):
                root = w + shift
                c = spec.solver.solve(root)
                if lev == 0:
                    if is_nonneg_integral(c):
                        out.append(RootDatum(root, parity, 1))
                else:
                    if not is_nonneg_integral(c):
                        raise SpecError(f"{spec.label}: level-{lev} root {root} is not a "
                                        "nonnegative integral combination of simple roots")
                    out.append(RootDatum(root, parity, 1))
    return out


def imaginary_mults(spec: AlgebraSpec) -> Dict[Tuple[int, str], int]:
    return dict(spec.imaginary_table)


def subsystem(spec: AlgebraSpec, which: str) -> SubsystemData:
    if which == "prime":
        return spec.delta_prime
    if which == "doubleprime":
        return spec.delta_doubleprime
    raise SpecError(f"unknown subsystem {which!r} (use 'prime' or 'doubleprime')")


# ---------------------------------------------------------------------------
# validation

@dataclass
class ValidationReport:
    failures: List[str]
    notes: List[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _alpha0_zero_norm_permitted(spec: "AlgebraSpec") -> bool:
    # exceptions where (alpha0, alpha0) = 0 is expected: A(2k,2k-1)^(2),
    # A(2k,2k+1)^(2) and G(3)^(2)
    if spec.family == "A_2k_2l-1_2" and spec.k == spec.l:
        return True
    if spec.family == "A_2l_2k-1_2" and spec.k == spec.l + 1:
        return True
    return spec.family == "G3_2"


def _minimal_imaginary_level(spec: AlgebraSpec) -> int:
    for lev in range(1, spec.m + 1):
        j = lev % spec.m
        if any(spec.imaginary_table.get((j, p), 0) for p in (EVEN, ODD)):
            return lev
    raise SpecError(f"{spec.label}: no imaginary roots at all")


def validate_spec(spec: AlgebraSpec) -> ValidationReport:
    fails: List[str] = []
    notes: List[str] = []
    form = spec.form.value

    # simple roots independent and delta integral over them
    try:
        solver = spec.solver
    except Exception as exc:
        return ValidationReport([f"simple roots are not independent: {exc}"], notes)
    m_im = _minimal_imaginary_level(spec)
    c = solver.solve(DELTA_W.scale(m_im))
    if c is None or not all(v.denominator == 1 and v > 0 for v in c):
        fails.append(f"minimal imaginary root {m_im}*delta is not a positive integral "
                     "combination of simple roots")
    if m_im != 1:
        notes.append(f"minimal imaginary root is {m_im}*delta (delta itself is not a root)")

    # each simple root is a root of the family multiset with the right parity
    for alpha, parity in zip(spec.pi, spec.pi_parities):
        if alpha not in spec.class_table.get((0, parity), ()):
            fails.append(f"simple root {alpha} missing from the level-0 {parity} class")
    if spec.theta not in spec.class_table.get((1 % spec.m, spec.alpha0_parity), ()):
        fails.append(f"theta {spec.theta} missing from the level-1 {spec.alpha0_parity} class")

    # (rho, alpha) = (alpha, alpha)/2 on the finite simple roots
    for alpha in spec.pi:
        if form(spec.rho, alpha) != form(alpha, alpha) / 2:
            fails.append(f"(rho, {alpha}) != (alpha,alpha)/2")
    if form(spec.rho_hat, spec.alpha0) != form(spec.alpha0, spec.alpha0) / 2:
        fails.append("(rho_hat, alpha0) != (alpha0,alpha0)/2")

    # S: subset of pi, isotropic, pairwise orthogonal, odd, of size = defect
    for beta in spec.S:
        if beta not in spec.pi:
            fails.append(f"S member {beta} is not a simple root")
        i = spec.pi.index(beta) if beta in spec.pi else None
        if i is not None and spec.pi_parities[i] != ODD:
            fails.append(f"S member {beta} is not odd")
    for a in spec.S:
        for b in spec.S:
            if form(a, b) != 0:
                fails.append("S not isotropic")
    if len(spec.S) != spec.defect:
        fails.append(f"|S| = {len(spec.S)} differs from the defect {spec.defect}")
    for beta in spec.S:
        if form(spec.rho_hat, beta) != 0:
            fails.append(f"(rho_hat, {beta}) != 0")

    # dual Coxeter number computed two ways
    recomputed = form(spec.alpha0, spec.alpha0) / 2 + form(spec.rho, spec.theta)
    if recomputed != form(spec.rho_hat, DELTA_W):
        fails.append("h_dual mismatch between (rho_hat,delta) and (alpha0,alpha0)/2+(rho,theta)")

    # Prop 4.1 conditions for h_dual != 0
    if spec.h_dual != 0:
        for alpha in spec.pi_hat:
            if form(alpha, alpha) < 0:
                fails.append(f"(alpha,alpha) < 0 for simple root {alpha}")
        a0norm = form(spec.alpha0, spec.alpha0)
        if a0norm <= 0:
            if a0norm == 0 and _alpha0_zero_norm_permitted(spec):
                notes.append("(alpha0,alpha0) = 0 is permitted for this family")
            else:
                fails.append(f"(alpha0,alpha0) = {a0norm} violates the positivity table")

    # imaginary bookkeeping (recheck) and symmetry under j <-> m-j
    counts: Dict[str, int] = {EVEN: 0, ODD: 0}
    for parity in (EVEN, ODD):
        for j in range(spec.m):
            counts[parity] += len(spec.class_table.get((j, parity), ()))
            counts[parity] += spec.imaginary_table.get((j, parity), 0)
    if counts[EVEN] != spec.dim_g0 or counts[ODD] != spec.dim_g1:
        fails.append(f"dimension bookkeeping off: even {counts[EVEN]} vs {spec.dim_g0}, "
                     f"odd {counts[ODD]} vs {spec.dim_g1}")
    for (j, parity), mult in spec.imaginary_table.items():
        if mult != spec.imaginary_table.get(((spec.m - j) % spec.m, parity), 0) and j != 0:
            fails.append(f"imaginary multiplicity not symmetric at class {j}")

    # no duplicate weight within one class multiset (real roots have mult 1)
    for key, weights in spec.class_table.items():
        if len(set(weights)) != len(weights):
            fails.append(f"duplicate real root in class {key}")

    # every level 1..m root decomposes integrally (ellipsis interpolation guard)
    try:
        positive_roots(spec, spec.m)
    except SpecError as exc:
        fails.append(str(exc))

    # pinned closed forms of the diagonal families' translation lattices
    expected_tprime = None
    if spec.family == "A_2k-1_2k-1_2":
        expected_tprime = tuple(wt((dl(g), 1)) for g in range(1, spec.k + 1))
    elif spec.family in ("A_2k_2k_4", "D_k+1_k_2"):
        expected_tprime = tuple(wt((dl(g), 2)) for g in range(1, spec.k + 1))
    if expected_tprime is not None and spec.t_prime_basis != expected_tprime:
        fails.append(f"T' lattice basis {spec.t_prime_basis} differs from the tabulated one")

    # every T' translation must be an automorphism of the root multiset:
    # level shifts (w, mu) integral and compatible with the class residues
    for mu in spec.t_prime_basis:
        for weights, residues, parity in spec.class_entries:
            rset = set(residues)
            for w in weights:
                shift = spec.form.value(w, mu)
                if shift.denominator != 1:
                    fails.append(f"T' basis {mu} pairs non-integrally with root {w}")
                    break
                if {(j - int(shift)) % spec.m for j in rset} != rset:
                    fails.append(f"T' basis {mu} moves root {w} off its level classes")
                    break

    return ValidationReport(fails, notes)


# ---------------------------------------------------------------------------
# data sheets

def data_sheet(spec: AlgebraSpec) -> str:
    lines = [
        f"family: {spec.label}   token: {spec.family}   k={spec.k} l={spec.l} m={spec.m}",
        f"finite part: {spec.finite_label}   defect: {spec.defect}",
        f"form: eps diag {tuple(str(c) for c in spec.form.eps_diag)} "
        f"del diag {tuple(str(c) for c in spec.form.del_diag)}",
        f"h_dual: {spec.h_dual}",
        f"rho: {spec.rho}",
        f"rho_hat: {spec.rho_hat}",
        f"theta: {spec.theta}",
        "simple roots:",
        f"  alpha0 = {spec.alpha0}  [{spec.alpha0_parity}]",
    ]
    for i, (alpha, parity) in enumerate(zip(spec.pi, spec.pi_parities), start=1):
        lines.append(f"  alpha{i} = {alpha}  [{parity}]")
    lines.append("S: " + (", ".join(str(b) for b in spec.S) if spec.S else "(empty)"))
    lines.append(f"delta height: {spec.delta_height}")
    lines.append(f"Delta' type {spec.delta_prime.type_label}; M' basis: " +
                 (", ".join(str(w) for w in spec.delta_prime.lattice_basis) or "(trivial)"))
    lines.append(f"Delta'' type {spec.delta_doubleprime.type_label}; M'' basis: " +
                 (", ".join(str(w) for w in spec.delta_doubleprime.lattice_basis) or "(trivial)"))
    lines.append(f"extended sign function: {'yes' if spec.extended_sign else 'no'}")
    lines.append(f"f(q) selector: {spec.fq_selector}")
    mults = ", ".join(f"({j} mod {spec.m}, {p}) -> {v}"
                      for (j, p), v in spec.imaginary_mults if v)
    lines.append("imaginary multiplicities: " + (mults or "(none)"))
    return "\n".join(lines)
