"""Formula syntax trees, the ASCII grammar, a parser and a printer.

Grammar, loosest binding first::

    formula := iff
    iff     := imp ( "<->" imp )*                      left-assoc
    imp     := orx ( ("->"|"nimp"|"<-"|"nrimp") orx )*  "->"/"nimp" right-assoc,
                                                        "<-"/"nrimp" left-assoc
    orx     := andx ( ("|"|"^"|"nor") andx )*          left-assoc
    andx    := unary ( ("&"|"nand") unary )*           left-assoc
    unary   := "!" unary | atom
    atom    := letter | "T" | "F" | "(" formula ")" | func
    func    := ("cd"|"maj"|"xor3") "(" formula "," formula "," formula ")"
    letter  := [a-z][a-z0-9_]*  (keywords excluded)

Mixing right- and left-associating implication operators at one level
without parentheses is a parse error.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, List, Union

from .errors import ParseError


class SingularKind(enum.Enum):
    IDENTITY = "="
    NEGATION = "¬"
    TO_TRUE = "+"
    TO_FALSE = "−"


class BinaryKind(enum.Enum):
    AND = "∧"
    OR = "∨"
    IMP = "⇒"
    RIMP = "⇐"
    NIMP = "⇏"
    NRIMP = "⇍"
    IFF = "⇔"
    XOR = "|"
    NAND = "↑"
    NOR = "↓"
    PROJ_P = "p"
    PROJ_Q = "q"
    NPROJ_P = "p′"
    NPROJ_Q = "q′"
    TRUE = "ι₁"
    FALSE = "ι₀"


class TernaryKind(enum.Enum):
    CD = "cd"
    MAJ = "maj"
    PARITY = "xor3"


# ascii token -> (kind, grammar level); levels: 1 iff, 2 imp, 3 or, 4 and
BINARY_TOKENS = {
    "<->": (BinaryKind.IFF, 1),
    "->": (BinaryKind.IMP, 2),
    "nimp": (BinaryKind.NIMP, 2),
    "<-": (BinaryKind.RIMP, 2),
    "nrimp": (BinaryKind.NRIMP, 2),
    "|": (BinaryKind.OR, 3),
    "^": (BinaryKind.XOR, 3),
    "nor": (BinaryKind.NOR, 3),
    "&": (BinaryKind.AND, 4),
    "nand": (BinaryKind.NAND, 4),
}
TOKEN_OF = {kind: tok for tok, (kind, _) in BINARY_TOKENS.items()}
LEVEL_OF = {kind: level for _, (kind, level) in BINARY_TOKENS.items()}
RIGHT_ASSOC = frozenset({BinaryKind.IMP, BinaryKind.NIMP})
LEFT_IMP = frozenset({BinaryKind.RIMP, BinaryKind.NRIMP})

FUNCTIONS = {kind.value: kind for kind in TernaryKind}
KEYWORDS = frozenset({"nand", "nor", "nimp", "nrimp"}) | frozenset(FUNCTIONS)

LETTER_RE = re.compile(r"[a-z][a-z0-9_]*")


class Formula:
    """Base class of all syntax tree nodes.

    The Python operators ``&``, ``|``, ``^`` and ``~`` build the matching
    connectives, and ``a >> b`` builds ``a -> b``.
    """

    __slots__ = ()

    def __and__(self, other):
        return Binary(BinaryKind.AND, self, other)

    def __or__(self, other):
        return Binary(BinaryKind.OR, self, other)

    def __xor__(self, other):
        return Binary(BinaryKind.XOR, self, other)

    def __rshift__(self, other):
        return Binary(BinaryKind.IMP, self, other)

    def __invert__(self):
        return Singular(SingularKind.NEGATION, self)

    def __str__(self):
        return to_text(self)

    # structural equality with a cached hash; trees are hashed a lot when
    # transforms are memoised, and rehashing whole subtrees each time is slow
    def _key(self):
        return tuple(self.__dict__[f] for f in self.__dataclass_fields__)

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((type(self).__name__,) + self._key())
            object.__setattr__(self, "_hash", h)
        return h

    def __getstate__(self):
        # string hashes differ between processes, so never ship the cache
        return {k: v for k, v in self.__dict__.items() if k != "_hash"}

    def __setstate__(self, state):
        for k, v in state.items():
            object.__setattr__(self, k, v)

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self):
            return NotImplemented
        return hash(self) == hash(other) and self._key() == other._key()


@dataclass(frozen=True, eq=False, repr=False)
class Const(Formula):
    truth: bool

    def __repr__(self):
        return "Const(%s)" % ("T" if self.truth else "F")


@dataclass(frozen=True, eq=False, repr=False)
class Letter(Formula):
    name: str

    def __repr__(self):
        return "Letter(%s)" % self.name


@dataclass(frozen=True, eq=False)
class Singular(Formula):
    op: SingularKind
    child: Formula


@dataclass(frozen=True, eq=False)
class Binary(Formula):
    op: BinaryKind
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False)
class Ternary(Formula):
    op: TernaryKind
    a: Formula
    b: Formula
    c: Formula


AnyFormula = Union[Const, Letter, Singular, Binary, Ternary]


def children(f: Formula):
    if isinstance(f, Singular):
        return (f.child,)
    if isinstance(f, Binary):
        return (f.left, f.right)
    if isinstance(f, Ternary):
        return (f.a, f.b, f.c)
    return ()


def walk(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal, children left to right."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def letters(f: Formula) -> List[str]:
    """Distinct letters of ``f`` in first-occurrence order."""
    seen = {}
    for node in walk(f):
        if isinstance(node, Letter):
            seen.setdefault(node.name, None)
    return list(seen)


def connective_count(f: Formula) -> int:
    return sum(1 for node in walk(f) if isinstance(node, (Singular, Binary, Ternary)))


def depth(f: Formula) -> int:
    kids = children(f)
    return 1 + max(map(depth, kids)) if kids else 0


# -- lexer ------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""\s*(?:
        (?P<sym><->|->|<-|[!&|^(),])
      | (?P<word>[A-Za-z][A-Za-z0-9_]*)
    )""",
    re.VERBOSE,
)


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(text):
    pos = 0
    out = []
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError("unexpected character %r" % text[pos], text,
                             _byte_offset(text, pos))
        start = m.start("sym") if m.group("sym") else m.start("word")
        if m.group("sym"):
            out.append(_Token("sym", m.group("sym"), start))
        else:
            word = m.group("word")
            if word in ("T", "F"):
                out.append(_Token("const", word, start))
            elif word in KEYWORDS:
                out.append(_Token("kw", word, start))
            elif LETTER_RE.fullmatch(word):
                out.append(_Token("letter", word, start))
            else:
                raise ParseError("invalid identifier %r" % word, text,
                                 _byte_offset(text, start), {"letter"})
        pos = m.end()
    out.append(_Token("eof", "", n))
    return out


def _byte_offset(text, index):
    return len(text[:index].encode("utf-8"))


# -- parser -----------------------------------------------------------------

_ATOM_START = frozenset({"letter", "T", "F", "(", "!", "cd", "maj", "xor3"})


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, message, expected=()):
        raise ParseError(message, self.text, _byte_offset(self.text, self.tok.pos), expected)

    def take(self, text):
        if self.tok.text != text or self.tok.kind not in ("sym", "kw"):
            self.error("unexpected %s" % (repr(self.tok.text) if self.tok.text else "end of input"),
                       {text})
        self.i += 1

    def binary_op(self, level):
        tok = self.tok
        if tok.kind in ("sym", "kw") and tok.text in BINARY_TOKENS:
            kind, lvl = BINARY_TOKENS[tok.text]
            if lvl == level:
                return kind
        return None

    def parse(self):
        f = self.iff()
        if self.tok.kind != "eof":
            self.error("unexpected %r" % self.tok.text, set(BINARY_TOKENS) | {"end of input"})
        return f

    def left_chain(self, level, operand):
        f = operand()
        while True:
            kind = self.binary_op(level)
            if kind is None:
                return f
            self.i += 1
            f = Binary(kind, f, operand())

    def iff(self):
        return self.left_chain(1, self.imp)

    def imp(self):
        first = self.orx()
        ops, operands = [], [first]
        direction = None
        while True:
            kind = self.binary_op(2)
            if kind is None:
                break
            this = "right" if kind in RIGHT_ASSOC else "left"
            if direction is not None and this != direction:
                allowed = {TOKEN_OF[k] for k in (RIGHT_ASSOC if direction == "right" else LEFT_IMP)}
                self.error("mixing %s- and %s-associative implications needs parentheses"
                           % (direction, this), allowed)
            direction = this
            self.i += 1
            ops.append(kind)
            operands.append(self.orx())
        if not ops:
            return first
        if direction == "right":
            f = operands[-1]
            for kind, lhs in zip(reversed(ops), reversed(operands[:-1])):
                f = Binary(kind, lhs, f)
            return f
        f = operands[0]
        for kind, rhs in zip(ops, operands[1:]):
            f = Binary(kind, f, rhs)
        return f

    def orx(self):
        return self.left_chain(3, self.andx)

    def andx(self):
        return self.left_chain(4, self.unary)

    def unary(self):
        if self.tok.kind == "sym" and self.tok.text == "!":
            self.i += 1
            return Singular(SingularKind.NEGATION, self.unary())
        return self.atom()

    def atom(self):
        tok = self.tok
        if tok.kind == "letter":
            if self.tokens[self.i + 1].text == "(":
                self.error("unknown function %r" % tok.text, set(FUNCTIONS))
            self.i += 1
            return Letter(tok.text)
        if tok.kind == "const":
            self.i += 1
            return Const(tok.text == "T")
        if tok.kind == "sym" and tok.text == "(":
            self.i += 1
            f = self.iff()
            self.take(")")
            return f
        if tok.kind == "kw" and tok.text in FUNCTIONS:
            kind = FUNCTIONS[tok.text]
            self.i += 1
            self.take("(")
            args = [self.iff()]
            while self.tok.kind == "sym" and self.tok.text == ",":
                self.i += 1
                args.append(self.iff())
            if len(args) != 3:
                raise ParseError("%s takes 3 arguments, got %d" % (kind.value, len(args)),
                                 self.text, _byte_offset(self.text, tok.pos))
            self.take(")")
            return Ternary(kind, *args)
        if tok.kind == "eof":
            self.error("unexpected end of input", _ATOM_START)
        self.error("unexpected %r" % tok.text, _ATOM_START)


def parse(text: str) -> Formula:
    """Parse formula text into a syntax tree.

    >>> parse("p & (p -> q) -> q")
    Binary(op=<BinaryKind.IMP: '⇒'>, left=Binary(op=<BinaryKind.AND: '∧'>, left=Letter(p), right=Binary(op=<BinaryKind.IMP: '⇒'>, left=Letter(p), right=Letter(q))), right=Letter(q))
    """
    if not text or not text.strip():
        raise ParseError("empty formula", text or "", 0, _ATOM_START)
    return _Parser(text).parse()


# -- printer ----------------------------------------------------------------

_ATOM_PREC = 6
_NEG_PREC = 5


def _prec(f):
    if isinstance(f, Binary) and f.op in LEVEL_OF:
        return LEVEL_OF[f.op]
    if isinstance(f, Singular):
        return _NEG_PREC
    return _ATOM_PREC


def _wrap(f, paren):
    s = to_text(f)
    return "(" + s + ")" if paren else s


def to_text(f: Formula) -> str:
    """Render ``f`` in the ASCII grammar with as few parentheses as possible.

    Raises ValueError for nodes the grammar cannot express (the projection and
    constant binary operators, and singular operators other than negation).
    """
    if isinstance(f, Const):
        return "T" if f.truth else "F"
    if isinstance(f, Letter):
        return f.name
    if isinstance(f, Singular):
        if f.op is not SingularKind.NEGATION:
            raise ValueError("singular operator %s has no concrete syntax" % f.op.name)
        return "!" + _wrap(f.child, _prec(f.child) < _NEG_PREC)
    if isinstance(f, Ternary):
        return "%s(%s, %s, %s)" % (f.op.value, to_text(f.a), to_text(f.b), to_text(f.c))
    if isinstance(f, Binary):
        if f.op not in LEVEL_OF:
            raise ValueError("binary operator %s has no concrete syntax" % f.op.name)
        level = LEVEL_OF[f.op]
        lp, rp = _prec(f.left), _prec(f.right)
        if level != 2:
            left_paren, right_paren = lp < level, rp <= level
        elif f.op in RIGHT_ASSOC:
            left_paren = lp <= level
            right_paren = rp < level or (rp == level and f.right.op in LEFT_IMP)
        else:
            left_paren = lp < level or (lp == level and f.left.op in RIGHT_ASSOC)
            right_paren = rp <= level
        return "%s %s %s" % (_wrap(f.left, left_paren), TOKEN_OF[f.op], _wrap(f.right, right_paren))
    raise TypeError("not a formula: %r" % (f,))


# alternative name
print_formula = to_text
