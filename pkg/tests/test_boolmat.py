import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pbnf.boolmat import (
    IDENTITY,
    ONES,
    ZERO,
    Mat2,
    classify_boolean_matrices,
    det,
    is_idempotent,
    mat_add,
    mat_mul,
    mat_of,
    selector_generation,
    transpose,
)
from pbnf.opspace import BINARY_OPERATORS, operator

matrices = st.tuples(*[st.integers(0, 1)] * 4).map(Mat2)


@pytest.mark.parametrize("op,entries", [
    ("&", (1, 0, 0, 0)),
    ("->", (1, 0, 1, 1)),
    ("<->", (1, 0, 0, 1)),
    ("p", (1, 1, 0, 0)),
    ("q", (1, 0, 1, 0)),
])
def test_mat_of(op, entries):
    assert mat_of(op).entries == entries


def test_mat_of_rejects_singular():
    with pytest.raises(ValueError):
        mat_of("negation")


def test_text_and_json():
    m = mat_of("->")
    assert str(m) == "[1 0 / 1 1]"
    assert m.to_json() == [1, 0, 1, 1]
    assert m.bits == "1011" and m.operator() is operator("->")


def test_transpose_and_det():
    assert transpose(mat_of("p")) == mat_of("q")
    assert mat_of("->").T == mat_of("<-")
    assert det(IDENTITY) == 1 and det(ONES) == 0
    assert det(mat_of("->")) == 1


def test_matrix_products():
    assert mat_mul(mat_of("q"), mat_of("p")) == ONES
    assert mat_add(mat_of("p"), ONES) == mat_of("p'")
    assert mat_of("^") * mat_of("^") == IDENTITY


@pytest.mark.parametrize("op,idem", [
    ("&", True), ("<->", True), ("nor", True), ("iota0", True), ("p", True),
    ("|", False), ("^", False), ("nand", False), ("iota1", False), ("->", False),
])
def test_idempotency(op, idem):
    assert is_idempotent(mat_of(op)) is idem


@given(matrices, matrices, matrices)
def test_matrix_algebra(a, b, c):
    assert a + a == ZERO
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * IDENTITY == a == IDENTITY * a
    assert (a * b).T == b.T * a.T
    assert det(a * b) == det(a) & det(b)


def test_idempotent_matrices_have_det_rule():
    # an idempotent 2x2 matrix is 0, I or has rank one, so det is 1 only for I
    for m in map(Mat2, itertools.product((0, 1), repeat=4)):
        if m.is_idempotent():
            assert (det(m) == 1) == (m == IDENTITY)


def test_boolean_matrix_report():
    rep = classify_boolean_matrices()
    assert set(rep.members) == {operator(k) for k in ("iota0", "&", "nor", "p", "p'", "q", "q'", "<->")}
    assert len(rep.members) == 8
    assert rep.claimed_not_idempotent == ("↑",)
    assert rep.idempotent_not_claimed == ("↓",)
    assert not rep.closed
    assert ("p", "q", "|") in rep.add_failures
    assert ("q", "p", "ι₁") in rep.mul_failures
    assert rep.transpose_failures == ()
    assert rep.to_json()["members"][:2] == ["∧", "⇔"]


def test_members_match_brute_force():
    rep = classify_boolean_matrices()
    brute = [op for op in BINARY_OPERATORS if mat_of(op) * mat_of(op) == mat_of(op)]
    assert list(rep.members) == brute


def test_selector_generation():
    gen = selector_generation()
    assert gen.complete
    assert len(gen.closure) == 8
    assert {op.name for op in gen.operators()} == {
        "biconditional", "exclusive disjunction", "iota1", "iota0", "p", "q", "p'", "q'"}
    assert gen.to_json()["required"]["identity"] is True
    assert len(gen.closure) <= 16


def test_generation_from_a_non_selector():
    gen = selector_generation("&")
    assert mat_of("&") in gen.closure
    assert not gen.complete
