from __future__ import annotations

import pytest

from zetacode.gf import GF
from zetacode.linear_code import (
    BudgetExceededError,
    LinearCode,
    Matrix,
    WeightDistribution,
    distance_distribution,
    dual,
    format_matrix_text,
    genus,
    is_degenerate,
    is_formally_self_dual,
    is_self_dual,
    is_self_orthogonal,
    min_distance,
    parse_matrix_text,
    puncture_degenerate,
    rref,
    weight_distribution,
)

F2 = GF(2)
F3 = GF(3)


def code(q, rows) -> LinearCode:
    return LinearCode(Matrix.from_indices(GF(q), rows))


I2 = [[1, 1]]
TETRA = [[1, 1, 1, 0], [0, 1, 2, 1]]
HAMMING8 = [
    [1, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 1, 1, 1, 0],
]
FSD10 = [
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    [1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 1, 0, 0, 1, 1, 0, 1, 0, 0],
    [0, 0, 1, 0, 1, 0, 1, 0, 1, 0],
]


# -- rref ------------------------------------------------------------------


def test_rref_identity_fixed_point():
    m = Matrix.from_indices(F2, [[1, 0], [0, 1]])
    red, rank, pivots = rref(m)
    assert red.index_rows() == [[1, 0], [0, 1]]
    assert rank == 2 and pivots == (0, 1)


def test_rref_rank_deficient():
    m = Matrix.from_indices(F2, [[1, 1], [1, 1]])
    red, rank, pivots = rref(m)
    assert red.index_rows() == [[1, 1], [0, 0]]
    assert rank == 1 and pivots == (0,)


def test_rref_tetra_rank():
    _, rank, _ = rref(Matrix.from_indices(F3, TETRA))
    assert rank == 2


def test_dependent_generator_rows_rejected():
    with pytest.raises(ValueError, match="dependent"):
        code(2, [[1, 1], [1, 1]])


# -- distributions -----------------------------------------------------------


def test_weight_distribution_i2():
    assert weight_distribution(code(2, I2)).counts == (1, 0, 1)


def test_weight_distribution_tetra():
    assert weight_distribution(code(3, TETRA)).counts == (1, 0, 0, 8, 0)


def test_weight_distribution_formally_self_dual_10():
    c = code(2, FSD10)
    expected = (1, 0, 0, 0, 15, 0, 15, 0, 0, 0, 1)
    assert weight_distribution(c).counts == expected
    assert weight_distribution(dual(c)).counts == expected
    assert is_formally_self_dual(c)
    assert not is_self_dual(c)


def test_distance_distribution_examples():
    assert distance_distribution(code(2, I2)).counts == (1, 0, 1)
    assert distance_distribution(code(3, TETRA)).counts == (1, 0, 0, 8, 0)


def test_distance_equals_weight_on_corpus(unit_corpus):
    for c in unit_corpus:
        if c.spec.q ** (2 * c.k) <= 2**22:
            assert distance_distribution(c, 2**22) == weight_distribution(c)


def test_counts_sum_to_qk(unit_corpus):
    for c in unit_corpus:
        assert weight_distribution(c).total() == c.spec.q**c.k


def test_budget_enforced():
    c = code(2, HAMMING8)
    with pytest.raises(BudgetExceededError):
        weight_distribution(c, budget=8)
    with pytest.raises(BudgetExceededError):
        distance_distribution(c, budget=255)


# -- parameters --------------------------------------------------------------


def test_hamming_parameters():
    c = code(2, HAMMING8)
    assert weight_distribution(c).counts == (1, 0, 0, 0, 14, 0, 0, 0, 1)
    assert min_distance(c) == 4
    assert genus(c) == 1


def test_tetra_is_mds():
    c = code(3, TETRA)
    assert min_distance(c) == 3
    assert genus(c) == 0


def test_repetition_genus_zero():
    for n in (2, 3, 5):
        c = code(2, [[1] * n])
        assert min_distance(c) == n
        assert genus(c) == 0


def test_singleton_bound_on_corpus(unit_corpus):
    for c in unit_corpus:
        assert min_distance(c) <= c.n - c.k + 1


def test_mds_iff_dual_mds(unit_corpus):
    for c in unit_corpus:
        dc = dual(c)
        if dc.is_zero:
            continue
        assert (genus(c) == 0) == (genus(dc) == 0)


# -- dual --------------------------------------------------------------------


def test_i2_self_dual():
    c = code(2, I2)
    assert is_self_dual(c)
    assert dual(c).gen.index_rows() == [[1, 1]]


def test_dual_of_full_space_is_zero_code():
    c = code(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    z = dual(c)
    assert z.is_zero and z.k == 0 and z.n == 3
    back = dual(z)
    assert back.k == 3


def test_zero_code_rejected_by_distribution_ops():
    z = LinearCode.zero(F2, 3)
    with pytest.raises(ValueError, match="zero code"):
        weight_distribution(z)
    with pytest.raises(ValueError, match="zero code"):
        min_distance(z)


def test_hamming_dual_is_itself():
    c = code(2, HAMMING8)
    assert is_self_dual(c)
    assert is_self_orthogonal(c)
    assert weight_distribution(dual(c)).counts == weight_distribution(c).counts


def test_dual_dual_row_space(unit_corpus):
    for c in unit_corpus:
        dd = dual(dual(c))
        assert dd.rref_matrix().index_rows() == c.rref_matrix().index_rows()


def test_pairwise_self_dual_example():
    c = code(2, [[1, 1, 0, 0], [0, 0, 1, 1]])
    assert is_self_dual(c)


# -- degeneracy ---------------------------------------------------------------


def test_degenerate_code_punctured():
    c = code(2, [[1, 1, 0]])
    assert is_degenerate(c)
    p = puncture_degenerate(c)
    assert (p.n, p.k) == (2, 1)
    assert weight_distribution(p).counts == (1, 0, 1)


def test_non_degenerate_cases():
    assert not is_degenerate(code(2, I2))
    assert not is_degenerate(code(2, HAMMING8))
    # dual of the extended Hamming code has no weight-1 word
    assert weight_distribution(dual(code(2, HAMMING8))).counts[1] == 0


def test_puncture_zero_code_rejected():
    with pytest.raises(ValueError):
        puncture_degenerate(LinearCode.zero(F2, 3))


def test_puncture_preserves_enumerator_shape():
    c = code(2, [[1, 1, 0, 0], [0, 1, 1, 0]])
    assert is_degenerate(c)
    p = puncture_degenerate(c)
    wc, wp = weight_distribution(c), weight_distribution(p)
    # x^r scaling: counts agree index by index up to the removed columns
    assert wc.counts[: p.n + 1] == wp.counts


# -- matrix text format --------------------------------------------------------


def test_matrix_round_trip():
    c = code(3, TETRA)
    text = format_matrix_text(c)
    back = parse_matrix_text(text)
    assert back.gen.index_rows() == c.gen.index_rows()
    assert (back.n, back.k, back.spec.q) == (4, 2, 3)


def test_matrix_parse_errors_name_position():
    with pytest.raises(ValueError, match="line 1"):
        parse_matrix_text("2 4\n")
    with pytest.raises(ValueError, match="line 2"):
        parse_matrix_text("2 4 2\n1 0 1\n0 1 1 1\n")
    with pytest.raises(ValueError, match="line 3, column 2"):
        parse_matrix_text("2 4 2\n1 0 1 1\n0 x 1 1\n")
    with pytest.raises(ValueError, match="line 2, column 4"):
        parse_matrix_text("3 4 1\n1 0 1 3\n")
    with pytest.raises(ValueError, match="line 3"):
        parse_matrix_text("2 2 2\n1 0\n")


def test_weight_distribution_type_checks():
    with pytest.raises(ValueError):
        WeightDistribution(2, (1, 0))
    with pytest.raises(ValueError):
        WeightDistribution(1, (1, -1))
