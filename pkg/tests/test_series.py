import random
from fractions import Fraction as Q

import pytest

from twistdenom import build_spec
from twistdenom.lattice import Weight, eps, dl, wt
from twistdenom.series import (FactorForm, Frame, FrameError, TruncatedSeries,
                               TruncationOverflowError, unit)

from helpers import dense_add, dense_factor, dense_mul, dense_unit, series_to_dense

SPEC = build_spec("A_2k_2l-1_2", 1, 1)
ZERO = Weight(())


def make_frame(cap=8):
    return Frame(SPEC.pi, SPEC.finite_solver, ["a1", "a2"], cap)


def affine_frame(cap=10):
    return Frame(SPEC.pi_hat, SPEC.solver, ["a0", "a1", "a2"], cap)


ALPHA = SPEC.pi[0]   # d1 - e1 (isotropic)
BETA = SPEC.pi[1]    # e1 (even single)


def test_unit_coefficients():
    f = make_frame()
    s = unit(f, ZERO, 3)
    assert s.coefficient(ZERO) == 1
    assert s.coefficient(-ALPHA) == 0
    assert s.nterms() == 1


def test_coefficient_outside_window():
    f = make_frame()
    s = unit(f, ZERO, 3)
    assert s.coefficient(ALPHA) is None              # above the anchor
    assert s.coefficient(-ALPHA.scale(4)) is None    # deeper than H
    assert s.coefficient(wt((eps(1), Q(1, 2)))) is None


def test_geometric_expansion_matches_dense_oracle():
    f = make_frame(6)
    s = unit(f, ZERO, 6).mul_factor(FactorForm(BETA, 1, -1))
    shift = f.int_offset(BETA)
    expected = dense_factor(shift, 1, -1, 6)
    assert series_to_dense(s) == expected
    # spec example: 1 - e^-b + e^-2b - e^-3b ...
    assert s.coefficient(-BETA) == -1
    assert s.coefficient(-BETA.scale(2)) == 1
    assert s.coefficient(-BETA.scale(3)) == -1


def test_inverse_pair_is_identity():
    f = make_frame(5)
    s = unit(f, ZERO, 5)
    t = s.mul_factor(FactorForm(BETA, -1, -1)).mul_factor(FactorForm(BETA, -1, 1))
    assert t == s


def test_negative_root_factor_normalizes_anchor():
    # (1 - e^{beta})^{-1} = -e^{beta} (1 - e^{-beta})^{-1}: the anchor moves up
    # (1 - e^{b})^{-1} = -e^{-b} (1 - e^{-b})^{-1}: anchor moves down to -b and
    # the remaining factor descends
    f = make_frame(4)
    s = unit(f, ZERO, 4).mul_factor(FactorForm(-BETA, -1, -1))
    assert s.anchor == -BETA
    dense = dense_factor(f.int_offset(BETA), -1, -1, 4)
    assert series_to_dense(s) == {k: -v for k, v in dense.items()}
    assert s.coefficient(-BETA) == -1 and s.coefficient(-BETA.scale(3)) == -1


def test_mul_unit_and_commutativity():
    rng = random.Random(1)
    f = make_frame(4)
    for _ in range(30):
        a = random_series(rng, f, 4)
        one = unit(f, ZERO, 4)
        assert a.mul(one) == a
        b = random_series(rng, f, 4)
        assert a.mul(b) == b.mul(a)


def random_series(rng, frame, H, density=4):
    terms = {}
    for _ in range(density):
        vec = [0] * frame.n
        budget = rng.randint(0, H)
        for _ in range(budget):
            vec[rng.randrange(frame.n)] += 1
        if sum(vec) <= H:
            terms[frame.pack(tuple(vec))] = rng.randint(-3, 3)
    return TruncatedSeries(frame, ZERO, H, {k: v for k, v in terms.items() if v})


def test_mul_associativity_against_dense():
    rng = random.Random(2)
    f = make_frame(4)
    for _ in range(40):
        a, b, c = (random_series(rng, f, 4) for _ in range(3))
        left = a.mul(b).mul(c)
        right = a.mul(b.mul(c))
        assert left == right
        dense = dense_mul(dense_mul(series_to_dense(a), series_to_dense(b), 4),
                          series_to_dense(c), 4)
        assert series_to_dense(left) == dense


def test_add_requires_same_anchor():
    f = make_frame(4)
    a = unit(f, ZERO, 4)
    b = unit(f, -BETA, 4)
    with pytest.raises(FrameError):
        a.add(b)


def test_rebase_drops_deep_terms_and_detects_overflow():
    f = make_frame(8)
    s = unit(f, ZERO, 8).mul_factor(FactorForm(BETA, 1, -1))
    shallow = s.rebase(ZERO, 2)
    assert shallow.nterms() == 3
    lifted = s.rebase(BETA.scale(2), 8)
    assert lifted.coefficient(-BETA) == -1
    with pytest.raises(TruncationOverflowError):
        s.rebase(-BETA, 8)   # the constant term would sit above the new anchor


def test_truncation_coherence():
    rng = random.Random(3)
    f = make_frame(6)
    factors = [FactorForm(BETA, -1, 1), FactorForm(ALPHA, 1, -1), FactorForm(BETA, 1, -2)]
    for H2 in (0, 1, 3, 5):
        full = unit(f, ZERO, 6).mul_factors(factors)
        direct = unit(f, ZERO, H2).mul_factors(factors)
        assert full.truncate(H2) == direct.rebase(ZERO, H2) == direct


def test_max_support_antichain():
    f = make_frame(4)
    a = TruncatedSeries(f, ZERO, 4, {
        f.pack((1, 0)): 1,
        f.pack((0, 1)): 1,
        f.pack((1, 1)): 5,
    })
    tops = a.max_support()
    assert set(map(str, tops)) == {str(-ALPHA), str(-BETA)}
    assert unit(f, ZERO, 4).max_support() == [ZERO]
    lam = unit(f, ZERO, 4).mul_factor(FactorForm(ALPHA, -1, 1))
    assert lam.max_support() == [ZERO]


def test_max_support_empty_raises():
    f = make_frame(4)
    with pytest.raises(FrameError):
        TruncatedSeries(f, ZERO, 4, {}).max_support()


def test_dump_format():
    f = make_frame(4)
    s = TruncatedSeries(f, ZERO, 4, {f.pack((0, 1)): Q(-1, 2), f.pack((1, 0)): 3})
    assert s.dump() == "0 1\t-1/2\n1 0\t3"


def test_factor_validation():
    with pytest.raises(FrameError):
        FactorForm(ZERO, 1, 1)
    with pytest.raises(FrameError):
        FactorForm(BETA, 2, 1)
    with pytest.raises(FrameError):
        FactorForm(BETA, 1, 0)
    f = make_frame(4)
    mixed = wt((dl(1), 1), (eps(1), -2))  # pi_1 - pi_2: neither cone
    with pytest.raises(FrameError):
        unit(f, ZERO, 4).mul_factor(FactorForm(mixed, 1, 1))


def test_affine_frame_packing_roundtrip():
    f = affine_frame(9)
    rng = random.Random(4)
    for _ in range(200):
        vec = tuple(rng.randint(0, 3) for _ in range(f.n))
        key = f.pack(vec)
        assert f.unpack(key) == vec
        assert f.key_height(key) == sum(vec)
