import pytest
from hypothesis import given, settings, strategies as st

from gf2count import (
    BitMatrix,
    BudgetError,
    CodePair,
    ConsistencyError,
    DimensionError,
    IndexSetError,
    RankError,
    WeightEnumerator,
    ZeroCodeError,
    dual_of,
    effective_distance,
    macwilliams,
    min_weight,
    parse_matrix,
    rank,
    systematic_form,
    weight_enumerator,
)
from naive import naive_dual_basis, naive_weight_counts


@st.composite
def full_rank_matrices(draw, max_rows=5, max_cols=8):
    """Random full-row-rank matrix, built by rejection."""
    k = draw(st.integers(1, max_rows))
    n = draw(st.integers(k, max_cols))
    rows = draw(
        st.lists(st.integers(0, (1 << n) - 1), min_size=k, max_size=k).filter(
            lambda rs: rank(BitMatrix(k, n, tuple(rs))) == k
        )
    )
    return BitMatrix(k, n, tuple(rows))


def test_enumerator_validation():
    with pytest.raises(DimensionError):
        WeightEnumerator(3, (1, 0, 0))
    with pytest.raises(ConsistencyError):
        WeightEnumerator(2, (0, 1, 1))
    with pytest.raises(ConsistencyError):
        WeightEnumerator(2, (1, -1, 1))


def test_enumerator_json_roundtrip():
    we = WeightEnumerator(7, (1, 0, 0, 0, 7, 0, 0, 0))
    assert WeightEnumerator.from_json_dict(we.to_json_dict()) == we
    assert we.to_json_dict() == {"n": 7, "coeffs": [1, 0, 0, 0, 7, 0, 0, 0]}


def test_polynomial_rendering():
    assert WeightEnumerator(7, (1, 0, 0, 0, 7, 0, 0, 0)).polynomial_str() == (
        "x^7 + 7x^3y^4"
    )
    assert WeightEnumerator(2, (1, 2, 1)).polynomial_str() == "x^2 + 2xy + y^2"
    assert WeightEnumerator(1, (1, 1)).polynomial_str() == "x + y"


def test_weight_enumerator_single_entry():
    assert weight_enumerator(parse_matrix("1")).coeffs == (1, 1)


def test_weight_enumerator_known_code(g74):
    assert weight_enumerator(g74).coeffs == (1, 0, 0, 7, 7, 0, 0, 1)


def test_weight_enumerator_rejects_rank_deficient():
    with pytest.raises(RankError):
        weight_enumerator(parse_matrix("11\n11"))


def test_weight_enumerator_dimension_guard():
    wide = BitMatrix.identity(12)
    with pytest.raises(BudgetError):
        weight_enumerator(wide, max_enum_dim=10)


def test_weight_enumerator_zero_row_matrix():
    # dual of a full [n, n] code: only the zero word
    we = weight_enumerator(BitMatrix(0, 3, ()))
    assert we.coeffs == (1, 0, 0, 0)


@given(full_rank_matrices())
@settings(max_examples=60)
def test_weight_enumerator_matches_naive(m):
    counts = naive_weight_counts([m.row_list(i) for i in range(m.rows)])
    assert list(weight_enumerator(m).coeffs) == counts


def test_min_weight(g74):
    assert min_weight(weight_enumerator(g74)) == 3
    with pytest.raises(ZeroCodeError):
        min_weight(WeightEnumerator(2, (1, 0, 0)))


def test_dual_of_known_pair(g74_sys, h74):
    assert dual_of(systematic_form(g74_sys)) == h74


def test_dual_of_square_matrix_is_empty():
    sf = systematic_form(BitMatrix.identity(4))
    d = dual_of(sf)
    assert d.rows == 0 and d.cols == 4


@given(full_rank_matrices(max_rows=4, max_cols=7))
@settings(max_examples=40)
def test_dual_of_spans_the_orthogonal_complement(m):
    sf = systematic_form(m)
    h = dual_of(sf)
    # compare against a basis found by exhaustive filtering
    naive = naive_dual_basis([sf.matrix.row_list(i) for i in range(sf.k)])
    assert rank(h) == len(naive) == sf.n - sf.k
    stacked = BitMatrix(
        h.rows + len(naive),
        sf.n,
        h.bits + BitMatrix.from_lists(naive).bits if naive else h.bits,
    )
    assert rank(stacked) == sf.n - sf.k


def test_macwilliams_known_pair(g74, h74):
    primal = weight_enumerator(g74)
    dual = weight_enumerator(h74)
    assert macwilliams(primal, 4) == dual
    assert macwilliams(dual, 3) == primal


def test_macwilliams_rejects_bad_size():
    with pytest.raises(ConsistencyError):
        macwilliams(WeightEnumerator(3, (1, 1, 0, 0)), 3)


def test_macwilliams_rejects_impossible_distribution():
    # 7 words of weight 6 in length 10 force total weight 42, but any
    # 3-dimensional code has total weight divisible by 4
    fake = WeightEnumerator(10, (1, 0, 0, 0, 0, 0, 7, 0, 0, 0, 0))
    with pytest.raises(ConsistencyError):
        macwilliams(fake, 3)


@given(full_rank_matrices(max_rows=5, max_cols=9))
@settings(max_examples=60)
def test_macwilliams_involution(m):
    k, n = m.rows, m.cols
    we = weight_enumerator(m)
    assert macwilliams(macwilliams(we, k), n - k) == we


def test_code_pair_accepts_valid(g74_sys, h74):
    pair = CodePair(systematic_form(g74_sys), h74)
    assert pair.h == h74


def test_code_pair_rejects_flipped_bit(g74_sys, h74):
    bad = BitMatrix(3, 7, (h74.bits[0] ^ 1, h74.bits[1], h74.bits[2]))
    with pytest.raises((ConsistencyError, RankError)):
        CodePair(systematic_form(g74_sys), bad)


def test_code_pair_rejects_rank_deficient_dual(g74_sys, h74):
    bad = BitMatrix(3, 7, (h74.bits[0], h74.bits[0], h74.bits[0] ^ h74.bits[0]))
    with pytest.raises((ConsistencyError, RankError)):
        CodePair(systematic_form(g74_sys), bad)


def test_effective_distance_values(effdist36):
    p = systematic_form(effdist36).parity_block()
    cases = {
        (0,): 4,
        (1,): 3,
        (2,): 3,
        (0, 1): 3,
        (0, 2): 3,
        (1, 2): 4,
        (0, 1, 2): 4,
    }
    for t, expected in cases.items():
        assert effective_distance(p, t) == expected


def test_effective_distance_validation(effdist36):
    p = systematic_form(effdist36).parity_block()
    with pytest.raises(IndexSetError):
        effective_distance(p, ())
    with pytest.raises(IndexSetError):
        effective_distance(p, (2, 1))
    with pytest.raises(IndexSetError):
        effective_distance(p, (0, 3))


@given(full_rank_matrices(max_rows=4, max_cols=7))
@settings(max_examples=40)
def test_effective_distance_equals_dual_word_weight(m):
    sf = systematic_form(m)
    if sf.k == sf.n:
        return
    p = sf.parity_block()
    h = dual_of(sf)
    from itertools import combinations

    for size in range(1, sf.n - sf.k + 1):
        for t in combinations(range(sf.n - sf.k), size):
            word = 0
            for j in t:
                word ^= h.bits[j]
            assert effective_distance(p, t) == word.bit_count()
