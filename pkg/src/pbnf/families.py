"""Polynomial families and the formula -> polynomial transform.

A family fixes two readings.  Input polarity says, per letter, whether the
polynomial variable ``v`` stands for "v is true" (normal) or "v is false"
(complemented).  Output polarity says whether the polynomial value 1 means
true or false.  The four named families are::

    H*   g(p,q,1)     normal inputs,      1 = true
    H'   g(p,q,0)     normal inputs,      0 = true
    H''  g(p',q',1)   complemented p, q,  1 = true
    H**  g(p',q',0)   complemented p, q,  0 = true

Any other choice of complemented letters is a hybrid family.

Compound formulas are transformed by substitution into per-connective
templates.  The template depends only on the output polarity; leaves absorb
the input polarity, becoming ``v`` when the letter's polarity agrees with
the output reading and ``v + 1`` otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import MissingLetterError, ParseError
from .formula import (
    Binary,
    BinaryKind,
    Const,
    Formula,
    Letter,
    Singular,
    SingularKind,
    Ternary,
    TernaryKind,
)
from .gf2poly import ONE, ZERO, Polynomial, var
from .opspace import (
    SELECTORS,
    TERNARY_BITS,
    TERNARY_NAMES,
    OperatorDescriptor,
    TruthVector,
    anf_from_vector,
    assignments,
    dual_bits,
    dual_of,
    numberstring,
    operator,
    operator_by_bits,
    ternary_by_bits,
)

PLACEHOLDERS = ("X", "Y", "Z")


@dataclass(frozen=True)
class Family:
    complemented: FrozenSet[str] = frozenset()
    true_is: int = 1

    def __post_init__(self):
        object.__setattr__(self, "complemented", frozenset(self.complemented))
        if self.true_is not in (0, 1):
            raise ValueError("true_is must be 0 or 1")
        object.__setattr__(self, "_hash", hash((self.complemented, self.true_is)))

    # families key every transform cache lookup, so the hash is computed once
    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (Family, (self.complemented, self.true_is))

    def is_complemented(self, letter: str) -> bool:
        return letter in self.complemented

    def encode_in(self, letter: str, truth: bool) -> int:
        """Value of the polynomial variable ``letter`` when it has ``truth``."""
        return int(bool(truth)) ^ int(letter in self.complemented)

    def encode_out(self, truth: bool) -> int:
        return int(bool(truth) == bool(self.true_is))

    def decode_out(self, bit: int) -> bool:
        return bool(bit) == bool(self.true_is)

    def leaf(self, letter: str) -> Polynomial:
        v = var(letter)
        matches = (letter in self.complemented) != bool(self.true_is)
        return v if matches else v.complement()

    def encode_assignment(self, truths) -> dict:
        return {v: self.encode_in(v, t) for v, t in truths.items()}

    @property
    def true_constant(self) -> Polynomial:
        return ONE if self.true_is else ZERO

    @property
    def false_constant(self) -> Polynomial:
        return ZERO if self.true_is else ONE

    def with_reading(self, true_is: int) -> "Family":
        return Family(self.complemented, true_is)

    @property
    def name(self) -> str:
        for label, fam in NAMED_SYMBOLS.items():
            if fam == self:
                return label
        return self.spec()

    def spec(self) -> str:
        shown = ["p", "q"] + sorted(self.complemented - {"p", "q"})
        items = [v + "'" if v in self.complemented else v for v in shown]
        return "g(%s,%d)" % (",".join(items), self.true_is)

    def to_json(self) -> dict:
        return {"complemented": sorted(self.complemented), "trueIs": self.true_is}

    @classmethod
    def from_json(cls, data) -> "Family":
        return cls(frozenset(data.get("complemented", ())), int(data["trueIs"]))

    def __str__(self):
        return self.spec()


NORMAL = Family(frozenset(), 1)
COMPLEMENT = Family(frozenset(), 0)
PULLBACK = Family(frozenset({"p", "q"}), 1)
PULLBACK_COMPLEMENT = Family(frozenset({"p", "q"}), 0)

NAMED_SYMBOLS = {"H*": NORMAL, "H'": COMPLEMENT, "H''": PULLBACK, "H**": PULLBACK_COMPLEMENT}
NAMED = {
    "normal": NORMAL,
    "complement": COMPLEMENT,
    "pullback": PULLBACK,
    "pullback-complement": PULLBACK_COMPLEMENT,
}
NAMED_FAMILIES = (NORMAL, COMPLEMENT, PULLBACK, PULLBACK_COMPLEMENT)

_FAMILY_RE = re.compile(r"\s*g\s*\((.*)\)\s*\Z")
_ITEM_RE = re.compile(r"([a-z][a-z0-9_]*)\s*(['′]?)\Z")
_READING = {"1": 1, "0": 0, "1'": 0, "0'": 1, "1′": 0, "0′": 1}


def family_parse(spec: str) -> Family:
    """Parse ``g(p,q',1)``-style text or a named alias.

    >>> family_parse("g(p',q',0)") == PULLBACK_COMPLEMENT
    True
    """
    key = spec.strip()
    alias = key.replace("′", "'")
    if key in NAMED:
        return NAMED[key]
    if alias in NAMED_SYMBOLS:
        return NAMED_SYMBOLS[alias]
    m = _FAMILY_RE.match(spec)
    if not m:
        raise ParseError("malformed family %r" % spec, spec, 0, {"g(", *NAMED})
    items = [s.strip() for s in m.group(1).split(",")]
    if len(items) < 2:
        raise ParseError("family needs letters and a reading", spec, 0)
    reading = _READING.get(items[-1].replace(" ", ""))
    if reading is None:
        raise ParseError("reading must be 0 or 1, got %r" % items[-1], spec, spec.rfind(items[-1]), {"0", "1"})
    complemented = set()
    seen = set()
    for item in items[:-1]:
        im = _ITEM_RE.match(item)
        if not im:
            raise ParseError("bad family letter %r" % item, spec, max(spec.find(item), 0), {"letter"})
        if im.group(1) in seen:
            raise ParseError("letter %r listed twice" % im.group(1), spec, spec.find(item))
        seen.add(im.group(1))
        if im.group(2):
            complemented.add(im.group(1))
    return Family(frozenset(complemented), reading)


# -- templates and the transform ----------------------------------------------

OperatorKind = Union[SingularKind, BinaryKind, TernaryKind]


def _kind_bits(kind) -> str:
    if isinstance(kind, TernaryKind):
        return TERNARY_BITS[kind]
    return numberstring(kind)


@lru_cache(maxsize=None)
def connective_template(kind: OperatorKind, true_is: int = 1) -> Polynomial:
    """Polynomial in placeholders X, Y, Z computing ``kind`` under a reading.

    For ``true_is=1`` this is the operator's ANF.  For ``true_is=0`` inputs
    and output are all flipped, which reverses and complements the vector.
    """
    if isinstance(kind, OperatorDescriptor):
        kind = kind.kind
    bits = _kind_bits(kind)
    if not true_is:
        bits = dual_bits(bits)
    arity = {2: 1, 4: 2, 8: 3}[len(bits)]
    return anf_from_vector(TruthVector(PLACEHOLDERS[:arity], bits))


def transform(f: Formula, fam: Family = NORMAL) -> Polynomial:
    """The reduced polynomial of ``f`` in family ``fam``.

    For every truth assignment ``t`` the result, evaluated at the encoded
    inputs ``fam.encode_in(v, t[v])``, equals ``fam.encode_out`` of the
    truth value of ``f`` under ``t``.

    >>> from pbnf.formula import parse
    >>> str(transform(parse("p -> q")))
    'pq+p+1'
    """
    return _transform(f, fam)


# shared subformulas are common in enumerations, so results are memoised
@lru_cache(maxsize=1 << 16)
def _transform(f: Formula, fam: Family) -> Polynomial:
    if isinstance(f, Letter):
        return fam.leaf(f.name)
    if isinstance(f, Const):
        return ONE if fam.encode_out(f.truth) else ZERO
    if isinstance(f, Singular):
        args = (f.child,)
    elif isinstance(f, Binary):
        args = (f.left, f.right)
    elif isinstance(f, Ternary):
        args = (f.a, f.b, f.c)
    else:
        raise TypeError("not a formula: %r" % (f,))
    return _apply(f.op, fam.true_is, tuple(_transform(a, fam) for a in args))


# different subformulas often reduce to the same polynomials
@lru_cache(maxsize=1 << 16)
def _apply(kind, true_is: int, args: Tuple[Polynomial, ...]) -> Polynomial:
    return connective_template(kind, true_is).compose(dict(zip(PLACEHOLDERS, args)))


def ternary_pbnf(kind: TernaryKind, fam: Family = NORMAL, names: Sequence[str] = ("p", "q", "r")) -> Polynomial:
    a, b, c = (Letter(v) for v in names)
    return transform(Ternary(kind, a, b, c), fam)


def dual_formula(f: Formula) -> Formula:
    """Replace every connective by its dual and swap the constants.

    The normal polynomial of the dual equals the polynomial of ``f`` in the
    family that complements every letter and reads 0 as true (H** when
    ``f`` only uses p and q).  The dual of ``cd(a, b, c)`` is ``cd(c, b, a)``; majority
    and parity are self-dual.

    >>> from pbnf.formula import parse, to_text
    >>> to_text(dual_formula(parse("p & !q -> r")))
    'p | !q nrimp r'
    """
    if isinstance(f, Letter):
        return f
    if isinstance(f, Const):
        return Const(not f.truth)
    if isinstance(f, Singular):
        return Singular(dual_of(f.op), dual_formula(f.child))
    if isinstance(f, Binary):
        return Binary(dual_of(f.op), dual_formula(f.left), dual_formula(f.right))
    if isinstance(f, Ternary):
        a, b, c = dual_formula(f.a), dual_formula(f.b), dual_formula(f.c)
        if f.op is TernaryKind.CD:
            a, c = c, a
        return Ternary(f.op, a, b, c)
    raise TypeError("not a formula: %r" % (f,))


# -- the atomic table ---------------------------------------------------------

_p, _q = Letter("p"), Letter("q")


def _bin(kind, a=_p, b=_q):
    return Binary(kind, a, b)


def _neg(x):
    return Singular(SingularKind.NEGATION, x)


ATOMIC_ROWS: Tuple[Tuple[str, Formula], ...] = (
    ("p", _bin(BinaryKind.PROJ_P)),
    ("p'", _bin(BinaryKind.NPROJ_P)),
    ("q", _bin(BinaryKind.PROJ_Q)),
    ("q'", _bin(BinaryKind.NPROJ_Q)),
    ("¬p", _neg(_p)),
    ("p ∨ q", _bin(BinaryKind.OR)),
    ("p ∧ q", _bin(BinaryKind.AND)),
    ("p ⇒ q", _bin(BinaryKind.IMP)),
    ("p ⇏ q", _bin(BinaryKind.NIMP)),
    ("¬p ⇒ ¬q", _bin(BinaryKind.IMP, _neg(_p), _neg(_q))),
    ("p ⇐ q", _bin(BinaryKind.RIMP)),
    ("p ⇍ q", _bin(BinaryKind.NRIMP)),
    ("¬p ⇐ ¬q", _bin(BinaryKind.RIMP, _neg(_p), _neg(_q))),
    ("p ↓ q", _bin(BinaryKind.NOR)),
    ("p ↑ q", _bin(BinaryKind.NAND)),
    ("p ⇔ q", _bin(BinaryKind.IFF)),
    ("p | q", _bin(BinaryKind.XOR)),
    ("ι₁", _bin(BinaryKind.TRUE)),
    ("ι₀", _bin(BinaryKind.FALSE)),
)


class TableRow(NamedTuple):
    label: str
    formula: Formula
    polynomial: Polynomial


def atomic_table(fam: Family = NORMAL) -> List[TableRow]:
    """The one-connective table rows transformed into ``fam``."""
    return [TableRow(label, f, transform(f, fam)) for label, f in ATOMIC_ROWS]


# -- the fiber (pull-back) ----------------------------------------------------

@dataclass(frozen=True)
class CompoundReport:
    """Fiber result over three or more letters: the vector, and a name when
    it is one of the named ternary operators."""

    vector: TruthVector
    name: Optional[str] = None
    kind: Optional[TernaryKind] = None

    def __str__(self):
        return "%s%s" % (self.vector.bits, " (%s)" % self.name if self.name else "")


def decoded_vector(p: Polynomial, fam: Family, order: Sequence[str]) -> TruthVector:
    """Truth vector of ``p`` read through the family's encodings."""
    order = tuple(order)
    for v in p.letters():
        if v not in order:
            raise MissingLetterError(v)
    bits = []
    for a in assignments(order):
        value = p.evaluate({v: fam.encode_in(v, a[v]) for v in order})
        bits.append("1" if fam.decode_out(value) else "0")
    return TruthVector(order, "".join(bits))


def fiber(p: Polynomial, fam: Family = NORMAL, context: Sequence[str] = ("p", "q")):
    """Pull a polynomial back to the operator it encodes.

    Over one letter this is a singular operator and over two a binary one
    (always found, the correspondence being a bijection).  Over three or more
    a CompoundReport carries the vector, named only for the named ternaries.
    """
    if isinstance(context, str):
        context = (context,)
    tv = decoded_vector(p, fam, context)
    if len(context) in (1, 2):
        return operator_by_bits(tv.bits)
    kind = ternary_by_bits(tv.bits) if len(context) == 3 else None
    return CompoundReport(tv, TERNARY_NAMES[kind] if kind else None, kind)


# -- counting dual spaces -----------------------------------------------------

class DualSpace(NamedTuple):
    first: str
    second: str
    true_is: int


def dual_spaces() -> List[DualSpace]:
    """Every usable (selector, selector, reading) choice.

    Two selectors work together unless they are equal or complementary;
    each usable ordered pair then splits the four columns into the four
    areas, and can be read with 1 or with 0 as true.
    """
    out = []
    for s in SELECTORS:
        for t in SELECTORS:
            comp = "".join("1" if b == "0" else "0" for b in t.bits)
            if s.bits == t.bits or s.bits == comp:
                continue
            if len(set(zip(s.bits, t.bits))) != 4:
                raise AssertionError("%s, %s do not partition the square" % (s.name, t.name))
            for reading in (1, 0):
                out.append(DualSpace(s.name, t.name, reading))
    return out
