import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import formulas
from pbnf.errors import MissingLetterError
from pbnf.formula import Binary, BinaryKind, Letter, parse
from pbnf.opspace import BINARY_OPERATORS, TERNARY_BITS
from pbnf.oracle import eval_formula, truth_table


@pytest.mark.parametrize("text,t,value", [
    ("p -> q", {"p": True, "q": False}, False),
    ("p -> q", {"p": False, "q": False}, True),
    ("cd(p, q, r)", {"p": False, "q": False, "r": True}, True),
    ("cd(p, q, r)", {"p": False, "q": True, "r": True}, False),
    ("maj(p, q, r)", {"p": True, "q": False, "r": True}, True),
    ("xor3(p, q, r)", {"p": True, "q": True, "r": True}, True),
    ("T & !F", {}, True),
])
def test_eval(text, t, value):
    assert eval_formula(parse(text), t) is value


def test_eval_missing_letter():
    with pytest.raises(MissingLetterError) as info:
        eval_formula(parse("p & q"), {"p": True})
    assert info.value.letter == "q"


@pytest.mark.parametrize("text,order,bits", [
    ("p -> q", None, "1011"),
    ("q -> p", ("p", "q"), "1101"),
    ("p", ("p", "q"), "1100"),
    ("p & (p -> q) -> q", None, "1111"),
])
def test_truth_table_bits(text, order, bits):
    assert truth_table(parse(text), order).bits == bits


def test_truth_table_missing_letter():
    with pytest.raises(MissingLetterError):
        truth_table(parse("p & r"), ("p", "q"))


def test_render_and_json():
    table = truth_table(parse("p -> q"))
    assert table.render().splitlines() == ["p q | value", "1 1 | 1", "1 0 | 0", "0 1 | 1", "0 0 | 1"]
    data = json.loads(json.dumps(table.to_json()))
    assert data[1] == {"assignment": {"p": 1, "q": 0}, "value": 0}
    assert table.satisfying() == [(True, True), (False, True), (False, False)]
    assert table.classify() == "contingent"


def test_catalog_vectors():
    p, q = Letter("p"), Letter("q")
    for op in BINARY_OPERATORS:
        assert truth_table(Binary(op.kind, p, q), ("p", "q")).bits == op.bits
    for kind, bits in TERNARY_BITS.items():
        assert truth_table(parse("%s(p, q, r)" % kind.value)).bits == bits


@given(formulas(names=st.sampled_from(["p", "q"])))
def test_negation_flips_every_row(f):
    order = ("p", "q")
    a, b = truth_table(f, order).values, truth_table(~f, order).values
    assert all(x != y for x, y in zip(a, b))
