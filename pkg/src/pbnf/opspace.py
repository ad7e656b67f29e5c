"""The operator space: truth vectors, the operator catalog, selectors and
the transforms between truth vectors, polynomials and disjunctive normal
form.

Column convention.  A truth vector over letters ``(x0, ..., x{n-1})`` has
``2**n`` columns; column ``j`` is the assignment in which ``xi`` is
``1 - bit i of j`` (bit 0 being the most significant of ``n``).  Columns
therefore run through assignments in descending lexicographic order, and
over ``(p, q)`` the selectors read ``p = 1100`` and ``q = 1010``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from . import oracle
from .errors import MissingLetterError
from .formula import (
    Binary,
    BinaryKind,
    Const,
    Formula,
    Letter,
    Singular,
    SingularKind,
    TernaryKind,
    letters as formula_letters,
)
from .gf2poly import ONE, ZERO, Polynomial, var


@dataclass(frozen=True)
class TruthVector:
    order: Tuple[str, ...]
    bits: str

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if len(self.bits) != 1 << len(self.order):
            raise ValueError("%d letters need %d bits, got %r"
                             % (len(self.order), 1 << len(self.order), self.bits))
        if set(self.bits) - {"0", "1"}:
            raise ValueError("bits must be 0/1, got %r" % self.bits)

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def weight(self) -> int:
        return self.bits.count("1")

    def columns(self) -> Iterator[Dict[str, int]]:
        return iter(assignments(self.order))

    def __xor__(self, other: "TruthVector") -> "TruthVector":
        self._check(other)
        return TruthVector(self.order, "".join("1" if a != b else "0" for a, b in zip(self.bits, other.bits)))

    def __and__(self, other: "TruthVector") -> "TruthVector":
        """Componentwise product."""
        self._check(other)
        return TruthVector(self.order, "".join("1" if a == b == "1" else "0" for a, b in zip(self.bits, other.bits)))

    __add__ = __xor__
    __mul__ = __and__

    def complement(self) -> "TruthVector":
        return TruthVector(self.order, self.bits.translate(_FLIP))

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("letter orders differ: %r vs %r" % (self.order, other.order))

    def to_json(self) -> dict:
        return {"order": list(self.order), "bits": self.bits}

    @classmethod
    def from_json(cls, data) -> "TruthVector":
        return cls(tuple(data["order"]), data["bits"])

    def __str__(self):
        return self.bits


_FLIP = str.maketrans("01", "10")


def assignments(order: Sequence[str]) -> List[Dict[str, int]]:
    """All assignments over ``order`` in column order."""
    return [dict(zip(order, values)) for values in itertools.product((1, 0), repeat=len(order))]


# Over (p, q, r) the areas of the unit cube are numbered by descending weight
# (111; 110, 101, 011; 100, 010, 001; 000).  AREA_ORDER_3[k] is the column of
# area k+1; it differs from lexicographic order only at areas 4 and 5.
AREA_ORDER_3 = (0, 1, 2, 4, 3, 5, 6, 7)


def to_area_order(tv: TruthVector) -> str:
    if tv.n != 3:
        raise ValueError("area order is defined for 3 letters")
    return "".join(tv.bits[c] for c in AREA_ORDER_3)


def from_area_order(bits: str, order: Sequence[str] = ("p", "q", "r")) -> TruthVector:
    out = ["0"] * 8
    for k, c in enumerate(AREA_ORDER_3):
        out[c] = bits[k]
    return TruthVector(tuple(order), "".join(out))


# -- the catalog --------------------------------------------------------------

@dataclass(frozen=True)
class OperatorDescriptor:
    id: int
    name: str
    symbol: str
    arity: int
    bits: Optional[str]
    group: str
    kind: Union[SingularKind, BinaryKind, None] = None
    aliases: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def weight(self) -> Optional[int]:
        return None if self.bits is None else self.bits.count("1")

    @property
    def vector(self) -> Optional[TruthVector]:
        if self.bits is None:
            return None
        return TruthVector(("p", "q")[: self.arity], self.bits)

    def __str__(self):
        return self.symbol


def _op(id, kind, name, symbol, arity, bits, group, *aliases):
    return OperatorDescriptor(id, name, symbol, arity, bits, group, kind, aliases)


S, B = SingularKind, BinaryKind

# Rows 1-24 of the operator-space table.  Singular vectors are over (p):
# identity 10, negation 01.  The trivial rows follow the weight lattice,
# iota_1 = 1111 and iota_0 = 0000.
CATALOG: Tuple[OperatorDescriptor, ...] = (
    _op(1, S.IDENTITY, "identity", "=", 1, "10", "singular", "id"),
    _op(2, S.TO_FALSE, "to-false", "−", 1, "00", "singular", "-", "falsum"),
    _op(3, S.NEGATION, "negation", "¬", 1, "01", "singular", "!", "not", "~"),
    _op(4, S.TO_TRUE, "to-true", "+", 1, "11", "singular", "verum"),
    _op(5, B.AND, "conjunction", "∧", 2, "1000", "binary", "&", "and"),
    _op(6, B.OR, "disjunction", "∨", 2, "1110", "binary", "|", "or"),
    _op(7, B.IMP, "conditional", "⇒", 2, "1011", "binary", "->", "imp"),
    _op(8, B.RIMP, "converse", "⇐", 2, "1101", "binary", "<-", "rimp"),
    _op(9, B.NIMP, "non-implication", "⇏", 2, "0100", "binary", "nimp"),
    _op(10, B.NRIMP, "converse non-implication", "⇍", 2, "0010", "binary", "nrimp"),
    _op(11, B.IFF, "biconditional", "⇔", 2, "1001", "binary", "<->", "iff"),
    _op(12, B.XOR, "exclusive disjunction", "|", 2, "0110", "binary", "^", "xor"),
    _op(13, B.NOR, "joint denial", "↓", 2, "0001", "binary", "nor"),
    _op(14, B.NAND, "alternative denial", "↑", 2, "0111", "binary", "nand"),
    _op(15, B.TRUE, "iota1", "ι₁", 2, "1111", "trivial", "true", "one", "i1"),
    _op(16, B.FALSE, "iota0", "ι₀", 2, "0000", "trivial", "false", "zero", "i0"),
    _op(17, B.PROJ_P, "p", "p", 2, "1100", "bi-constant", "proj_p"),
    _op(18, B.PROJ_Q, "q", "q", 2, "1010", "bi-constant", "proj_q"),
    _op(19, B.NPROJ_P, "p'", "p′", 2, "0011", "bi-constant", "nproj_p"),
    _op(20, B.NPROJ_Q, "q'", "q′", 2, "0101", "bi-constant", "nproj_q"),
    _op(21, None, "membership", "∈", 0, None, "constant"),
    _op(22, None, "equality", "=", 0, None, "constant"),
    _op(23, None, "for all", "(·)", 0, None, "constant", "forall"),
    _op(24, None, "exists", "[·]", 0, None, "constant"),
)
del S, B

_BY_KIND = {op.kind: op for op in CATALOG if op.kind is not None}
_BY_BITS = {(op.arity, op.bits): op for op in CATALOG if op.bits is not None}
_BY_KEY: Dict[str, OperatorDescriptor] = {}
for _o in reversed(CATALOG):
    for _key in (_o.name, _o.symbol, *_o.aliases, *(() if _o.kind is None else (_o.kind.name.lower(),))):
        _BY_KEY[_key] = _o
del _o, _key

BINARY_OPERATORS = tuple(op for op in CATALOG if op.arity == 2)
SINGULAR_OPERATORS = tuple(op for op in CATALOG if op.arity == 1)

# named ternaries over (p, q, r)
TERNARY_BITS = {
    TernaryKind.CD: "11100010",
    TernaryKind.MAJ: "11101000",
    TernaryKind.PARITY: "10010110",
}
TERNARY_NAMES = {
    TernaryKind.CD: "conditioned disjunction",
    TernaryKind.MAJ: "majority",
    TernaryKind.PARITY: "parity",
}


def operator(key) -> OperatorDescriptor:
    """Look up a catalog entry by kind, id, name, symbol or ASCII alias."""
    if isinstance(key, OperatorDescriptor):
        return key
    if isinstance(key, (SingularKind, BinaryKind)):
        return _BY_KIND[key]
    if isinstance(key, int):
        return CATALOG[key - 1]
    try:
        return _BY_KEY[key]
    except KeyError:
        raise KeyError("unknown operator %r" % (key,)) from None


def operator_by_bits(bits: str) -> OperatorDescriptor:
    arity = {2: 1, 4: 2}.get(len(bits))
    if arity is None or (arity, bits) not in _BY_BITS:
        raise KeyError("no singular or binary operator has vector %r" % bits)
    return _BY_BITS[arity, bits]


def ternary_by_bits(bits: str) -> Optional[TernaryKind]:
    for kind, b in TERNARY_BITS.items():
        if b == bits:
            return kind
    return None


def numberstring(op) -> str:
    op = operator(op)
    if op.bits is None:
        raise ValueError("%s has no number string" % op.name)
    return op.bits


# -- formula / polynomial / vector transforms ---------------------------------

def _check_order(needed, order):
    have = set(order)
    for v in needed:
        if v not in have:
            raise MissingLetterError(v)


def vector_of_formula(f: Formula, order: Optional[Sequence[str]] = None) -> TruthVector:
    """Truth vector of ``f``, each column evaluated directly from connective
    semantics."""
    order = tuple(formula_letters(f) if order is None else order)
    _check_order(formula_letters(f), order)
    bits = "".join("1" if oracle.eval_formula(f, {v: bool(a[v]) for v in order}) else "0"
                   for a in assignments(order))
    return TruthVector(order, bits)


def anf_mobius(tv: TruthVector) -> Polynomial:
    """Algebraic normal form by the in-place butterfly (Moebius) transform."""
    n, size = tv.n, len(tv.bits)
    # coeff[a]: a's bit (n-1-i) set <=> letter i is 1; column = size-1-a
    coeff = [int(tv.bits[size - 1 - a]) for a in range(size)]
    step = 1
    while step < size:
        for a in range(size):
            if a & step:
                coeff[a] ^= coeff[a ^ step]
        step <<= 1
    monos = []
    for a, c in enumerate(coeff):
        if c:
            monos.append([tv.order[i] for i in range(n) if a >> (n - 1 - i) & 1])
    return Polynomial(monos)


def anf_minterm_sum(tv: TruthVector) -> Polynomial:
    """Algebraic normal form as the sum, over true columns, of products of
    ``v`` or ``v+1`` particles."""
    total = ZERO
    for bit, a in zip(tv.bits, assignments(tv.order)):
        if bit == "1":
            term = ONE
            for v in tv.order:
                term = term * (var(v) if a[v] else var(v) + ONE)
            total = total + term
    return total


def anf_from_vector(tv: TruthVector, verify: bool = False) -> Polynomial:
    """The unique multilinear polynomial with truth vector ``tv``.

    With ``verify`` the minterm-sum construction is run as well and the two
    are required to agree.
    """
    p = anf_mobius(tv)
    if verify:
        q = anf_minterm_sum(tv)
        if p != q:
            raise AssertionError("ANF paths disagree on %s: %s vs %s" % (tv.bits, p, q))
    return p


@lru_cache(maxsize=16)
def _column_masks(n: int) -> Tuple[int, ...]:
    size = 1 << n
    return tuple(sum(1 << j for j in range(size) if not (j >> (n - 1 - i)) & 1) for i in range(n))


def vector_from_anf(p: Polynomial, order: Sequence[str]) -> TruthVector:
    """Evaluate ``p`` on every column of ``order``."""
    order = tuple(order)
    _check_order(sorted(p.letters()), order)
    n = len(order)
    size = 1 << n
    full = (1 << size) - 1
    masks = dict(zip(order, _column_masks(n)))
    acc = 0
    for mono in p.monomials:
        m = full
        for v in mono:
            m &= masks[v]
        acc ^= m
    return TruthVector(order, "".join("1" if acc >> j & 1 else "0" for j in range(size)))


def dbnf_from_vector(tv: TruthVector) -> Formula:
    """Disjunction of one minterm per true column, in column order.

    The minterms are not simplified, so the vector ``11`` over ``(p,)``
    gives ``p | !p``.  An all-zero vector has no minterms and gives ``F``.
    """
    if tv.n == 0:
        return Const(tv.bits == "1")
    terms = []
    for bit, a in zip(tv.bits, assignments(tv.order)):
        if bit == "1":
            lits = [Letter(v) if a[v] else Singular(SingularKind.NEGATION, Letter(v)) for v in tv.order]
            terms.append(reduce(lambda x, y: Binary(BinaryKind.AND, x, y), lits))
    if not terms:
        return Const(False)
    return reduce(lambda x, y: Binary(BinaryKind.OR, x, y), terms)


# -- selectors ----------------------------------------------------------------

@dataclass(frozen=True)
class Selector:
    name: str
    bits: str

    @property
    def vector(self) -> TruthVector:
        return TruthVector(("p", "q"), self.bits)

    def __str__(self):
        return "%s(%s)" % (self.name, self.bits)


@dataclass(frozen=True)
class ConstantFlag:
    """Result of a selector sum that is homogeneous (0000 or 1111) and so
    cannot serve as a selector."""

    bits: str

    def __str__(self):
        return "constant(%s)" % self.bits


SELECTORS: Tuple[Selector, ...] = (
    Selector("p1", "1100"),
    Selector("p2", "0110"),
    Selector("p3", "0011"),
    Selector("p4", "1001"),
    Selector("q1", "1010"),
    Selector("q2", "0101"),
)
_SELECTOR_BY = {s.name: s for s in SELECTORS}
_SELECTOR_BY.update({s.bits: s for s in SELECTORS})
_SELECTOR_BY.update({"p": _SELECTOR_BY["p1"], "q": _SELECTOR_BY["q1"]})


def selector(key) -> Selector:
    if isinstance(key, Selector):
        return key
    try:
        return _SELECTOR_BY[key]
    except KeyError:
        raise KeyError("%r is not a selector" % (key,)) from None


def _xor_bits(a, b):
    return "".join("1" if x != y else "0" for x, y in zip(a, b))


def selector_add(s, t) -> Union[Selector, ConstantFlag]:
    """Componentwise sum of two selectors; a homogeneous result is flagged."""
    bits = _xor_bits(selector(s).bits, selector(t).bits)
    if bits in _SELECTOR_BY:
        return _SELECTOR_BY[bits]
    return ConstantFlag(bits)


def _apply_bits(op_bits: str, a: int, b: int) -> int:
    return int(op_bits[(1 - a) * 2 + (1 - b)])


def op_on_selectors(op, s, t) -> TruthVector:
    """Feed two selectors columnwise into a binary operator."""
    op_bits = numberstring(op)
    if len(op_bits) != 4:
        raise ValueError("%s is not binary" % operator(op).name)
    sb, tb = selector(s).bits, selector(t).bits
    bits = "".join(str(_apply_bits(op_bits, int(x), int(y))) for x, y in zip(sb, tb))
    return TruthVector(("p", "q"), bits)


# -- duality and taxonomy -----------------------------------------------------

def dual_bits(bits: str) -> str:
    """Complement of the reversed vector: the vector of not-op(not-a, not-b)."""
    return bits[::-1].translate(_FLIP)


def dual_of(op):
    """Dual operator; returns the same kind of value it is given."""
    desc = operator(op)
    dual = operator_by_bits(dual_bits(numberstring(desc)))
    if isinstance(op, (BinaryKind, SingularKind)):
        return dual.kind
    return dual


def is_self_dual(op) -> bool:
    bits = numberstring(op)
    return dual_bits(bits) == bits


_TAXONOMY = {
    BinaryKind.AND: ("normal-form", "OP_NF"),
    BinaryKind.OR: ("normal-form", "OP_NF"),
    SingularKind.NEGATION: ("normal-form", "OP_NF"),
    BinaryKind.PROJ_P: ("selector", "OP_S1"),
    BinaryKind.PROJ_Q: ("selector", "OP_S1"),
    BinaryKind.NPROJ_P: ("selector", "OP_S1"),
    BinaryKind.NPROJ_Q: ("selector", "OP_S1"),
    BinaryKind.IFF: ("selector", "OP_S2"),
    BinaryKind.XOR: ("selector", "OP_S2"),
    BinaryKind.IMP: ("derived", "OP_D"),
    BinaryKind.NIMP: ("derived", "OP_D"),
    BinaryKind.RIMP: ("derived", "OP_D"),
    BinaryKind.NRIMP: ("derived", "OP_D"),
    BinaryKind.NAND: ("derived", "OP_D"),
    BinaryKind.NOR: ("derived", "OP_D"),
    BinaryKind.TRUE: ("trivial", "OP_T1"),
    BinaryKind.FALSE: ("trivial", "OP_T0"),
}


@dataclass(frozen=True)
class Classification:
    group: str
    taxonomy: str
    subgroup: Optional[str]
    weight: Optional[int]
    level: Optional[str]


def classify(op) -> Classification:
    """Catalog group, taxonomy class and weight-lattice level of an operator.

    >>> classify("<->").subgroup, classify("<->").level
    ('OP_S2', 'op_2')
    """
    desc = operator(op)
    taxonomy, subgroup = _TAXONOMY.get(desc.kind, (desc.group, None))
    level = "op_%d" % desc.weight if desc.arity == 2 else None
    return Classification(desc.group, taxonomy, subgroup, desc.weight, level)
