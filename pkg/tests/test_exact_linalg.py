from fractions import Fraction

import pytest

from exact_linalg import ExactMatrix, integer_row, sparse_rank


def test_integer_row_is_primitive():
    assert integer_row({"a": Fraction(1, 2), "b": Fraction(3, 4)}) == {"a": 2, "b": 3}
    assert integer_row({"a": 6, "b": -4, "c": 0}) == {"a": 3, "b": -2}


def test_sparse_rank_detects_dependency():
    order = {"x": 0, "y": 1, "z": 2}
    rows = [{"x": 1, "y": 2}, {"y": 1, "z": 1}, {"x": 1, "y": 3, "z": 1}]
    assert sparse_rank(rows, order) == 2
    assert sparse_rank([{"x": Fraction(1, 3)}, {"x": 5}], order) == 1


def test_rank_and_nullity():
    m = ExactMatrix(["r1", "r2", "r3"], ["c1", "c2", "c3"], {"r1": {"c1": 2, "c2": 1}, "r2": {"c2": 3}, "r3": {"c1": 4, "c2": 5}})
    assert m.rank() == 2
    assert m.nullity() == 1
    assert ExactMatrix(["r1"], ["c1", "c2"]).nullity() == 2


def test_add_cancels_entries():
    m = ExactMatrix([0], [0])
    m.add(0, 0, 3)
    m.add(0, 0, -3)
    assert m.is_zero() and m.nnz == 0
    with pytest.raises(KeyError):
        m.add(1, 0, 1)


def test_matmul():
    a = ExactMatrix([0, 1], ["u", "v"], {0: {"u": 1}, 1: {"v": Fraction(1, 2)}})
    b = ExactMatrix(["u", "v"], ["w"], {"u": {"w": 2}, "v": {"w": 4}})
    product = a @ b
    assert product.entries == {0: {"w": 2}, 1: {"w": 2}}
    assert (a @ ExactMatrix(["u", "v"], ["w"])).is_zero()


def test_vstack_requires_same_columns():
    top = ExactMatrix([0], ["a", "b"], {0: {"a": 1}})
    bottom = ExactMatrix([0], ["a", "b"], {0: {"a": 2}})
    stacked = top.vstack(bottom)
    assert stacked.shape == (2, 2) and stacked.rank() == 1
    with pytest.raises(ValueError):
        top.vstack(ExactMatrix([0], ["a"]))


def test_from_columns_and_inclusion():
    m = ExactMatrix.from_columns([0, 1], ["a", "b"], {"a": {0: 1}, "b": {1: 1}})
    assert m.rank() == 2
    iota = ExactMatrix.inclusion(["a", "b", "c"], ["b", "c"])
    assert iota.entries == {"b": {"b": 1}, "c": {"c": 1}}
    assert (m @ ExactMatrix.inclusion(["a", "b"], ["b"])).entries == {1: {"b": 1}}
    with pytest.raises(KeyError):
        ExactMatrix.inclusion(["a"], ["z"])
