"""Identity verification on the table rows not exercised by the acceptance
list: the generic (non-smallest-rank) simple-root variants of the mirror
families, the second order-4 row, the second D row, and rank-3 diagonals."""

import pytest

from twistdenom import build_spec, verify

CASES = [
    ("A_2k_2l-1_2", 2, 1, 7),    # A(4,1)^(2): k > l variant of the first row
    ("A_2l_2k-1_2", 3, 1, 5),    # A(2,5)^(2): k >= l+2 variant with eps_1-eps_2
    ("A_2k-1_2l-1_2", 3, 1, 6),  # A(5,1)^(2): extended, k >= l+2 variant
    ("A_2l-1_2k-1_2", 2, 1, 7),  # A(1,3)^(2): k = l+1 variant
    ("A_2l-1_2k-1_2", 3, 1, 5),  # A(1,5)^(2): k >= l+2 variant with 2*eps_k
    ("A_2l_2k_4", 2, 1, 6),      # A(2,4)^(4): mirror order-4 row
    ("D_l+1_k_2", 2, 1, 7),      # D(2,2)^(2): second D row off the diagonal
    ("C_l+1_2", None, 2, 6),     # C(3)^(2): higher rank C member
    ("A_2k-1_2k-1_2", 3, None, 7),  # A(5,5)^(2): rank-3 diagonal, h_dual = 0
]


@pytest.mark.parametrize("family,k,l,depth", CASES,
                         ids=[f"{c[0]}-k{c[1]}-l{c[2]}" for c in CASES])
def test_identity_on_remaining_table_rows(family, k, l, depth):
    spec = build_spec(family, k, l)
    rep = verify(spec, depth)
    assert rep.status == "match", (spec.label, rep.checks)
    assert not rep.mismatches
    assert all(c.passed for c in rep.checks.values()), (spec.label, rep.checks)
