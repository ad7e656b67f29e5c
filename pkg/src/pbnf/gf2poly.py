"""Multilinear polynomials over GF(2).

A polynomial is a set of monomials and a monomial is a set of letters; the
empty monomial is the constant 1 and the empty set of monomials is 0.
Because x + x = 0 and x * x = x, set semantics is the whole reduction:
addition is symmetric difference of monomial sets and multiplication
unions letter sets pairwise, cancelling monomials that appear twice.

Internally each monomial is stored as an int bitmask over letters interned
in a process-wide table, which keeps the hot paths to integer ops.
"""

from __future__ import annotations

import re
import threading
from typing import Dict, FrozenSet, Iterable, List, Mapping

from .errors import MissingLetterError, ParseError

_LETTER_BIT: Dict[str, int] = {}
_BIT_LETTER: List[str] = []
_INTERN_LOCK = threading.Lock()


def _bit(letter: str) -> int:
    try:
        return _LETTER_BIT[letter]
    except KeyError:
        with _INTERN_LOCK:
            if letter not in _LETTER_BIT:
                _LETTER_BIT[letter] = 1 << len(_BIT_LETTER)
                _BIT_LETTER.append(letter)
        return _LETTER_BIT[letter]


def _mask(letters: Iterable[str]) -> int:
    m = 0
    for v in letters:
        m |= _bit(v)
    return m


def _names(mask: int) -> FrozenSet[str]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(_BIT_LETTER[i])
        mask >>= 1
        i += 1
    return frozenset(out)


def _toggle(acc: set, m: int):
    if m in acc:
        acc.remove(m)
    else:
        acc.add(m)


class Polynomial:
    """An immutable element of the Boolean ring GF(2)[letters]/(x^2 - x).

    Build one from monomials given as iterables of letter names::

        >>> Polynomial([["p", "q"], ["p"], []])
        Polynomial('pq+p+1')
        >>> var("p") * (var("p") + 1)
        Polynomial('0')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, monomials: Iterable[Iterable[str]] = ()):
        acc: set = set()
        for mono in monomials:
            _toggle(acc, _mask(mono))
        self._terms = frozenset(acc)
        self._hash = None

    @classmethod
    def _from_terms(cls, terms) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms if isinstance(terms, frozenset) else frozenset(terms)
        p._hash = None
        return p

    # -- views --------------------------------------------------------------

    @property
    def monomials(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(_names(m) for m in self._terms)

    def letters(self) -> FrozenSet[str]:
        mask = 0
        for m in self._terms:
            mask |= m
        return _names(mask)

    def degree(self) -> int:
        return max((bin(m).count("1") for m in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == _ONE_TERMS

    def is_constant(self) -> bool:
        return not self._terms or self._terms == _ONE_TERMS

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = as_polynomial(other)
        return Polynomial._from_terms(self._terms ^ other._terms)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other) -> "Polynomial":
        other = as_polynomial(other)
        if len(self._terms) > len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        acc: set = set()
        for x in a:
            for y in b:
                _toggle(acc, x | y)
        return Polynomial._from_terms(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        return ONE if n == 0 else self

    def complement(self) -> "Polynomial":
        """P + 1; the complement of the truth vector."""
        return Polynomial._from_terms(self._terms ^ _ONE_TERMS)

    def substitute(self, letter: str, q: "Polynomial") -> "Polynomial":
        """Replace ``letter`` by ``q`` everywhere and reduce."""
        return self.compose({letter: q})

    def compose(self, mapping: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Substitute several letters simultaneously.

        Letters not named in ``mapping`` are left alone.  Substitution is
        simultaneous, so ``compose({"x": y, "y": x})`` swaps the two.
        """
        subs = [(_bit(v), as_polynomial(q)._terms) for v, q in mapping.items()]
        sub_mask = 0
        for b, _ in subs:
            sub_mask |= b
        acc: set = set()
        for m in self._terms:
            if not m & sub_mask:
                _toggle(acc, m)
                continue
            partial = {m & ~sub_mask}
            for b, terms in subs:
                if m & b:
                    nxt: set = set()
                    for x in partial:
                        for y in terms:
                            _toggle(nxt, x | y)
                    partial = nxt
                    if not partial:
                        break
            for x in partial:
                _toggle(acc, x)
        return Polynomial._from_terms(acc)

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        """Value in GF(2) under ``assignment`` (letter -> 0/1)."""
        true_mask = 0
        needed = 0
        for m in self._terms:
            needed |= m
        i = 0
        rest = needed
        while rest:
            if rest & 1:
                name = _BIT_LETTER[i]
                if name not in assignment:
                    raise MissingLetterError(name)
                if assignment[name]:
                    true_mask |= 1 << i
            rest >>= 1
            i += 1
        value = 0
        for m in self._terms:
            if m & true_mask == m:
                value ^= 1
        return value

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def sorted_monomials(self) -> List[List[str]]:
        """Monomials in canonical order, each a sorted list of letters."""
        monos = [sorted(_names(m)) for m in self._terms]
        monos.sort(key=lambda mono: (-len(mono), "".join(mono), mono))
        return monos

    def canonical_text(self) -> str:
        return canonical_text(self)

    def to_json(self) -> List[List[str]]:
        return sorted(sorted(_names(m)) for m in self._terms)

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        return cls(data)

    def __str__(self):
        return canonical_text(self)

    def __repr__(self):
        return "Polynomial(%r)" % canonical_text(self)


_ONE_TERMS = frozenset({0})
ZERO = Polynomial._from_terms(frozenset())
ONE = Polynomial._from_terms(_ONE_TERMS)


def var(name: str) -> Polynomial:
    return Polynomial._from_terms(frozenset({_bit(name)}))


def const(bit: int) -> Polynomial:
    return ONE if bit else ZERO


def as_polynomial(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool) and x in (0, 1):
        return const(x)
    if isinstance(x, bool):
        return const(int(x))
    if isinstance(x, str):
        return parse_polynomial(x)
    raise TypeError("cannot convert %r to a Polynomial" % (x,))


def add(p, q) -> Polynomial:
    return as_polynomial(p) + q


def mul(p, q) -> Polynomial:
    return as_polynomial(p) * q


def complement(p) -> Polynomial:
    return as_polynomial(p).complement()


def substitute(p, letter: str, q) -> Polynomial:
    return as_polynomial(p).substitute(letter, as_polynomial(q))


def evaluate(p, assignment: Mapping[str, int]) -> int:
    return as_polynomial(p).evaluate(assignment)


def canonical_text(p: Polynomial) -> str:
    """Render as e.g. ``pq+p+q+1``.

    Monomials go by degree descending, then lexicographically on the joined
    letter names; letters within a monomial are sorted and juxtaposed.  The
    text parses back only when every letter is a single alphabetic character
    optionally followed by digits; the JSON form has no such restriction.
    """
    if not p._terms:
        return "0"
    parts = []
    for mono in p.sorted_monomials():
        parts.append("".join(mono) if mono else "1")
    return "+".join(parts)


# -- polynomial text parser ---------------------------------------------------
#
#   expr   := term ("+" term)*
#   term   := factor ([.*·]? factor)*
#   factor := ("0" | "1" | letter | "(" expr ")") "'"*
#   letter := [a-zA-Z][0-9_]*    ("pq" is p times q; "p1q2" is p1 times q2)
#
# A trailing prime complements its factor, so p' = p+1.

_POLY_TOKEN = re.compile(r"\s*(?:(?P<num>[01])|(?P<letter>[a-zA-Z][0-9_]*)|(?P<sym>[-+().*'·]))")


def parse_polynomial(text: str) -> Polynomial:
    """Parse polynomial text, including factored forms like ``(p+1)(q+1)+1``."""
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _POLY_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character %r" % text[pos], text, len(text[:pos].encode()))
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    if not toks:
        raise ParseError("empty polynomial", text, 0, {"0", "1", "letter", "("})
    toks.append(("eof", "", len(text)))
    i = 0

    def fail(message, expected):
        raise ParseError(message, text, len(text[:toks[i][2]].encode()), expected)

    def expr():
        nonlocal i
        acc = term()
        while toks[i][1] in ("+", "-"):
            i += 1
            acc = acc + term()
        return acc

    def starts_factor():
        kind, val, _ = toks[i]
        return kind in ("num", "letter") or val == "("

    def term():
        nonlocal i
        acc = factor()
        while True:
            if toks[i][1] in (".", "*", "·"):
                i += 1
                acc = acc * factor()
            elif starts_factor():
                acc = acc * factor()
            else:
                return acc

    def factor():
        nonlocal i
        kind, val, _ = toks[i]
        if kind == "num":
            i += 1
            out = const(int(val))
        elif kind == "letter":
            i += 1
            out = var(val)
        elif val == "(":
            i += 1
            out = expr()
            if toks[i][1] != ")":
                fail("unbalanced parenthesis", {")"})
            i += 1
        else:
            fail("unexpected %s" % (repr(val) if val else "end of input"), {"0", "1", "letter", "("})
        while toks[i][1] == "'":
            i += 1
            out = out.complement()
        return out

    result = expr()
    if toks[i][0] != "eof":
        fail("unexpected %r" % toks[i][1], {"+", "end of input"})
    return result
