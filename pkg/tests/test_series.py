"""q-series engine: arithmetic, closed forms, and the finitized identities.

The Gaussian-binomial oracle is the Pascal-style recurrence
gauss(a, b) = gauss(a-1, b-1) + q^b * gauss(a-1, b), which never touches the
library's multiply/divide path.
"""

import pytest
from hypothesis import given, strategies as st

from colorpartitions import (
    IdentityParams,
    QPolynomial,
    TruncatedSeries,
    bosonic_sum,
    fermionic_multisum,
    finitized_box,
    finitized_lhs,
    finitized_rhs,
    gaussian_binomial,
    partition_series,
    restricted_product,
)
from colorpartitions.series import (
    EVEN_OFFSET_TABLES,
    even_offset,
    first_difference,
    odd_offset,
)


def pascal_gauss(a, b):
    """Recurrence oracle for the Gaussian binomial, as a coefficient tuple."""
    if b < 0 or b > a:
        return ()
    table = {(0, 0): (1,)}

    def get(i, j):
        if j < 0 or j > i:
            return ()
        if (i, j) not in table:
            left = get(i - 1, j - 1)
            right = get(i - 1, j)
            shifted = (0,) * j + right
            size = max(len(left), len(shifted))
            table[(i, j)] = tuple(
                (left[t] if t < len(left) else 0) + (shifted[t] if t < len(shifted) else 0)
                for t in range(size)
            )
        return table[(i, j)]

    out = get(a, b)
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def geometric_factor(m, order):
    """The polynomial 1 - q^m as a truncated series."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    if m <= order:
        coeffs[m] = -1
    return TruncatedSeries(coeffs)


# ---------------------------------------------------------------- QPolynomial


def test_qpolynomial_normalizes_trailing_zeros():
    assert QPolynomial((1, 0, 0)).coefficients == (1,)
    assert QPolynomial(()).coefficients == ()
    assert not QPolynomial((0, 0))
    assert QPolynomial((0, 3)).degree == 1


def test_qpolynomial_arithmetic():
    p = QPolynomial((1, 1))
    q = QPolynomial((1, -1))
    assert (p * q).coefficients == (1, 0, -1)
    assert (p + q).coefficients == (2,)
    assert (p - p).coefficients == ()
    assert p.shifted(2).coefficients == (0, 0, 1, 1)


def test_qpolynomial_division_round_trip():
    p = QPolynomial((1, 2, 1))
    assert p.times_one_minus(3).divided_by_one_minus(3) == p
    with pytest.raises(ValueError):
        QPolynomial((1, 1)).divided_by_one_minus(2)  # not divisible


def test_qpolynomial_inflated():
    assert QPolynomial((1, 2, 3)).inflated(2).coefficients == (1, 0, 2, 0, 3)


# ------------------------------------------------------------ TruncatedSeries


def test_series_arithmetic_closes_over_min_order():
    a = TruncatedSeries([1, 1, 1])
    b = TruncatedSeries([1, -1])
    assert (a * b).order == 1
    assert (a + b).order == 1
    assert (a * b).coefficients == (1, 0)


def test_partition_series_low_coefficients():
    # p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
    assert partition_series(10).coefficients == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


# ---------------------------------------------------------- Gaussian binomial


def test_gauss_frozen_values():
    assert gaussian_binomial(2, 1).coefficients == (1, 1)
    assert gaussian_binomial(4, 2).coefficients == (1, 1, 2, 1, 1)
    assert gaussian_binomial(3, 1).coefficients == (1, 1, 1)
    assert gaussian_binomial(0, 0).coefficients == (1,)
    assert gaussian_binomial(3, 5).coefficients == ()
    assert gaussian_binomial(3, -1).coefficients == ()


def test_gauss_matches_recurrence_oracle():
    for a in range(9):
        for b in range(-1, a + 2):
            assert gaussian_binomial(a, b).coefficients == pascal_gauss(a, b)


def test_gauss_symmetry_and_degree():
    for a in range(1, 9):
        for b in range(a + 1):
            g = gaussian_binomial(a, b)
            assert g == gaussian_binomial(a, a - b)
            assert g.degree == b * (a - b)


def test_gauss_at_one_is_binomial():
    from math import comb

    for a in range(9):
        for b in range(a + 1):
            assert sum(gaussian_binomial(a, b).coefficients) == comb(a, b)


def test_gauss_base_inflation():
    assert gaussian_binomial(2, 1, base=2).coefficients == (1, 0, 1)
    assert gaussian_binomial(4, 2, base=2) == gaussian_binomial(4, 2).inflated(2)


# ------------------------------------------------------------- offset tables


def test_offset_tables_match_closed_form():
    for k, table in EVEN_OFFSET_TABLES.items():
        assert len(table) == k
        for i, row in enumerate(table, start=1):
            assert len(row) == k - 2
            for j, entry in enumerate(row, start=1):
                expected = min(k - max(i, 2), k - 1 - j) if k > 2 else 0
                assert entry == expected == even_offset(k, i, j)


def test_offset_closed_form_beyond_tables():
    assert even_offset(7, 1, 1) == 5
    assert even_offset(7, 3, 2) == 4
    assert even_offset(7, 7, 3) == 0
    assert even_offset(7, 6, 1) == 1


def test_odd_offsets():
    # row r of the upper-triangular pattern: 0 ... 0 1 2 ... (k-r)
    assert [odd_offset(4, 1, j) for j in (1, 2, 3)] == [1, 2, 3]
    assert [odd_offset(4, 2, j) for j in (1, 2, 3)] == [0, 1, 2]
    assert [odd_offset(4, 4, j) for j in (1, 2, 3)] == [0, 0, 0]
    with pytest.raises(ValueError):
        odd_offset(4, 5, 1)
    with pytest.raises(ValueError):
        even_offset(4, 1, 3)


# ------------------------------------------------------------- closed forms


def test_restricted_product_frozen_example():
    assert restricted_product(IdentityParams(5, 2), 4).coefficients == (1, 1, 1, 1, 2)


def test_restricted_product_completion():
    # multiplying back the excluded residue classes restores all partitions
    order = 30
    for m, r in ((5, 2), (7, 1), (8, 3), (4, 1), (9, 4)):
        series = restricted_product(IdentityParams(m, r), order)
        excluded = sorted({0, r % m, (m - r) % m})
        # product over included classes times product over excluded classes
        # equals the unrestricted partition series
        complement = TruncatedSeries([1] + [0] * order)
        for j in range(1, order + 1):
            if j % m in excluded:
                complement = complement * _geometric_inverse(j, order)
        assert (series * complement).coefficients == partition_series(order).coefficients


def _geometric_inverse(m, order):
    coeffs = [1 if i % m == 0 else 0 for i in range(order + 1)]
    return TruncatedSeries(coeffs)


def test_bosonic_equals_product_where_product_form_exists():
    order = 25
    for m in range(3, 10):
        for r in range(1, m // 2 + 1):
            params = IdentityParams(m, r)
            if not params.has_product_form:
                continue
            assert (
                bosonic_sum(params, order).coefficients
                == restricted_product(params, order).coefficients
            )


def test_bosonic_at_half_modulus_keeps_theta_factor():
    # at 2r = M the theta quotient equals the avoided-residue product times
    # the leftover numerator (1-q^(M/2))(1-q^(3M/2))...
    order = 24
    for m in (4, 6, 8):
        params = IdentityParams(m, m // 2)
        expected = restricted_product(params, order)
        for n in range(order + 1):
            if n % m == m // 2:
                expected = expected * geometric_factor(n, order)
        assert bosonic_sum(params, order).coefficients == expected.coefficients


def test_fermionic_trivial_and_small():
    assert fermionic_multisum(IdentityParams(3, 1), 12).coefficients == (1,) + (0,) * 12
    # (5,2) is the classic single-sum with quadratic exponents
    assert fermionic_multisum(IdentityParams(5, 2), 10).coefficients == (
        1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6,
    )


def test_fermionic_double_sum_reduction():
    params = IdentityParams(7, 3)
    assert (
        fermionic_multisum(params, 20).coefficients
        == restricted_product(params, 20).coefficients
    )


def test_three_forms_agree_on_grid():
    order = 20
    for m in range(3, 10):
        for r in range(1, m // 2 + 1):
            params = IdentityParams(m, r)
            bos = bosonic_sum(params, order)
            ferm = fermionic_multisum(params, order)
            assert first_difference(bos.coefficients, ferm.coefficients) is None


# -------------------------------------------------------- finitized identity


def test_finitized_box_parameters():
    assert finitized_box(IdentityParams(7, 1), 12) == (7, 5)
    assert finitized_box(IdentityParams(5, 2), 9) == (5, 4)
    assert finitized_box(IdentityParams(8, 3), 10) == (11, 10)
    # odd case can go negative at tiny sizes; the caller treats that as an
    # empty family
    assert finitized_box(IdentityParams(7, 1), 0) == (1, -1)


def test_finitized_identity_small_grid():
    for k in (1, 2, 3):
        for r in range(1, k + 1):
            for m in (2 * k + 1, 2 * k):
                if m < 4:
                    continue
                params = IdentityParams(m, r)
                for size in range(8):
                    lhs = finitized_lhs(params, size)
                    rhs = finitized_rhs(params, size)
                    assert lhs == rhs, (m, r, size)


def test_finitized_odd_k1_collapses_to_single_binomial_sum():
    # k=1 has no multisum variables at all: the right side is the constant 1
    params = IdentityParams(3, 1)
    for size in range(10):
        assert finitized_rhs(params, size).coefficients == (1,)
        assert finitized_lhs(params, size).coefficients == (1,)


def test_finitized_stabilizes_to_infinite_series():
    # low-order coefficients of the polynomial match the infinite closed form
    for m, r in ((5, 2), (7, 1), (4, 1), (6, 2), (8, 4)):
        params = IdentityParams(m, r)
        infinite = bosonic_sum(params, 10)
        poly = finitized_lhs(params, 20 if params.is_odd else 12)
        head = tuple(poly.padded(10))
        assert head == infinite.coefficients


def test_finitized_rejects_bad_parameters():
    with pytest.raises(ValueError):
        finitized_lhs(IdentityParams(5, 2), -1)


def test_first_difference():
    assert first_difference((1, 2), (1, 2)) is None
    assert first_difference((1, 2), (1, 3)) == 1
    assert first_difference((1,), (1, 0, 5)) == 2


@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
def test_gauss_pascal_identity(a, b):
    # gauss(a+1, b+1) = gauss(a, b) + q^(b+1) gauss(a, b+1)
    lhs = gaussian_binomial(a + 1, b + 1)
    rhs = gaussian_binomial(a, b) + gaussian_binomial(a, b + 1).shifted(b + 1)
    assert lhs == rhs
