"""Acceptance suite: one test per criterion, exact tolerances, one printed
pass/fail line each.  Build products are shared through the module-level
caches, so later criteria reuse the series computed by earlier ones."""

import time
from fractions import Fraction as Q

import pytest

from twistdenom import build_spec
from twistdenom.algebra import EVEN, ODD
from twistdenom.denominator import (UnsupportedFormError, build_rhs_isotropic_sum,
                                    casimir_check_series, build_lhs,
                                    build_rhs_translation_sum, f_q, finite_identity_check,
                                    ratio_invariant, root_count_report, verify,
                                    _bare_translation_sum, _series_mismatches)

import test_properties

H_NONZERO = [
    ("A_2k_2l-1_2", 1, 1),    # A(2,1)^(2)
    ("A_2k-1_2l-1_2", 2, 1),  # A(3,1)^(2)
    ("A_2l_2k-1_2", 2, 1),    # A(2,3)^(2)
    ("A_2k_2l_4", 2, 1),      # A(4,2)^(4)
    ("D_k+1_l_2", 2, 1),      # D(3,1)^(2)
    ("C_l+1_2", None, 1),     # C(2)^(2)
    ("G3_2", None, None),     # G(3)^(2)
]

H_ZERO = [
    ("A_2k-1_2k-1_2", 2, None),  # A(3,3)^(2)
    ("A_2k_2k_4", 2, None),      # A(4,4)^(4)
    ("D_k+1_k_2", 2, None),      # D(3,2)^(2)
]


def _zero_depth(spec):
    # criterion 2: depth covering q-degree 3 exactly as specified
    return 3 * int(spec.delta_height) + 2


def _announce(n, ok, detail):
    print(f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_identity_nonzero_dual_coxeter():
    lines = []
    for fam, k, l in H_NONZERO:
        spec = build_spec(fam, k, l)
        t0 = time.monotonic()
        rep = verify(spec, 8)
        dt = time.monotonic() - t0
        assert rep.status == "match", f"{spec.label}: {rep.checks}"
        assert not rep.mismatches
        lhs = build_lhs(spec, 8)
        rhs = build_rhs_translation_sum(spec, 8)
        for series in (lhs, rhs):
            for v in series.terms.values():
                assert Q(v).denominator == 1, f"{spec.label}: non-integer coefficient {v}"
        assert dt < 60, f"{spec.label} took {dt:.1f}s"
        lines.append(f"{spec.label} D=8 match in {dt:.1f}s")
    _announce(1, True, "; ".join(lines))


def test_criterion_2_identity_zero_dual_coxeter():
    lines = []
    for fam, k, l in H_ZERO:
        spec = build_spec(fam, k)
        depth = _zero_depth(spec)
        rep = verify(spec, depth)
        assert rep.status == "match", f"{spec.label}: {rep.checks}"
        assert not rep.mismatches
        assert rep.q_depth >= 3
        # the q^3 coefficient of each f(q) row is confirmed through the match
        # and through the ratio check; pin the expected values here
        q3 = {"A_2k-1_2k-1_2": 6, "A_2k_2k_4": -2, "D_k+1_k_2": -1}[fam]
        assert f_q(spec, 3).coefficient(3) == q3
        assert rep.checks["ratio_invariant"].passed
        lines.append(f"{spec.label} D={depth} match, q_depth={rep.q_depth}")
    _announce(2, True, "; ".join(lines))


def test_criterion_3_casimir_support():
    count = 0
    for fam, k, l in H_NONZERO + H_ZERO:
        spec = build_spec(fam, k, l)
        depth = 8 if spec.h_dual != 0 else _zero_depth(spec)
        lhs = build_lhs(spec, depth)
        rhs = build_rhs_translation_sum(spec, depth)
        assert casimir_check_series(spec, lhs).passed, spec.label
        assert casimir_check_series(spec, rhs).passed, spec.label
        count += lhs.nterms() + rhs.nterms()
    _announce(3, True, f"100% of {count} support points on the Casimir shell")


def test_criterion_4_alternate_form_agreement():
    lines = []
    for fam, k, l in H_NONZERO + [("A_2k_2k_4", 2, None), ("D_k+1_k_2", 2, None)]:
        spec = build_spec(fam, k, l)
        iso = build_rhs_isotropic_sum(spec, 6)
        bare = _bare_translation_sum(spec, 6)
        bad = _series_mismatches(bare, iso)
        assert not bad, f"{spec.label}: {len(bad)} mismatches"
        lines.append(spec.label)
    a33 = build_spec("A_2k-1_2k-1_2", 2)
    with pytest.raises(UnsupportedFormError):
        build_rhs_isotropic_sum(a33, 6)
    rep = verify(a33, 8)
    assert rep.checks["isotropic_agreement"].passed
    assert rep.checks["isotropic_agreement"].detail.startswith("unsupported")
    _announce(4, True, "agreement at D=6 for " + ", ".join(lines) +
              "; unsupported reported for A(3,3)^(2)")


def test_criterion_5_finite_identity():
    cases = [("B(1,1)", "A_2k_2l-1_2", 1, 1), ("B(2,1)", "A_2k_2l_4", 2, 1),
             ("B(1,2)", "A_2l_2k-1_2", 2, 1), ("D(2,1)", "A_2k-1_2l-1_2", 2, 1),
             ("D(2,2)", "A_2k-1_2k-1_2", 2, None), ("B(2,2)", "A_2k_2k_4", 2, None)]
    lines = []
    for name, fam, k, l in cases:
        spec = build_spec(fam, k, l)
        check = finite_identity_check(spec, 10)
        assert check.passed, f"{name}: {check.detail}"
        lines.append(name)
    _announce(5, True, "finite identity exact at height 10 for " + ", ".join(lines) +
              " (dense oracle cross-check in test_denominator)")


def test_criterion_6_rho_hat_coefficient():
    for fam, k, l in H_NONZERO:
        spec = build_spec(fam, k, l)
        rhs = build_rhs_translation_sum(spec, 8)
        assert rhs.coefficient(spec.rho_hat) == 1, spec.label
    _announce(6, True, "coefficient of e^rho_hat equals 1 on the summed side "
                       "for all h_dual != 0 families")


def test_criterion_7_ratio_property():
    lines = []
    for fam, k, l in H_ZERO:
        spec = build_spec(fam, k)
        depth = _zero_depth(spec)
        res = ratio_invariant(spec, depth)
        assert res.check.passed, f"{spec.label}: {res.check.detail}"
        assert res.q_depth >= 3
        assert res.f_hat.equals(f_q(spec, res.q_depth))
        lines.append(f"{spec.label} f(q) confirmed to q^{res.q_depth}")
    _announce(7, True, "; ".join(lines))


def test_criterion_8_root_counts():
    for fam, k, l in H_NONZERO + H_ZERO:
        spec = build_spec(fam, k, l)
        check = root_count_report(spec)
        assert check.passed, f"{spec.label}: {check.detail}"
    for fam, _k, _l in H_ZERO:
        spec3 = build_spec(fam, 3)
        check = root_count_report(spec3)
        assert check.passed, f"{spec3.label}: {check.detail}"
    _announce(8, True, "all printed cardinalities at k=2,3 and the dimension "
                       "bookkeeping balance exactly")


def test_criterion_9_property_suites():
    total = test_properties.run_all_suites()
    _announce(9, total >= 10 ** 4, f"{total} randomized structural cases passed")


def test_criterion_10_negative_controls():
    d32 = build_spec("D_k+1_k_2", 2)
    depth = _zero_depth(d32)
    r1 = verify(d32, depth, mutate_fq_degree=3)
    assert r1.status == "mismatch" and r1.mismatches
    a21 = build_spec("A_2k_2l-1_2", 1, 1)
    r2 = verify(a21, 8, drop_element=1)
    assert r2.status == "mismatch" and r2.mismatches
    r3 = verify(a21, 8, flip_sign_element=1)
    assert r3.status == "mismatch" and r3.mismatches
    g32 = build_spec("G3_2")
    r4 = verify(g32, 8, flip_sign_element=1)
    assert r4.status == "mismatch" and r4.mismatches
    _announce(10, True, "mutated f(q), dropped element and flipped sign each "
                        "produce a witnessed mismatch")
