"""2x2 matrices over GF(2) as pictures of binary operators.

An operator's number string ``x1 x2 x3 x4`` is laid out row-major as
``[x1 x2 / x3 x4]``.  A matrix is called Boolean when it is idempotent,
m * m = m.  (The other condition one might ask for, m + m = 0, holds for
every matrix mod 2 and so excludes nothing.)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from .opspace import BINARY_OPERATORS, OperatorDescriptor, operator, operator_by_bits


@dataclass(frozen=True)
class Mat2:
    entries: Tuple[int, int, int, int]

    def __post_init__(self):
        e = tuple(int(x) & 1 for x in self.entries)
        if len(e) != 4:
            raise ValueError("a 2x2 matrix has 4 entries")
        object.__setattr__(self, "entries", e)

    @classmethod
    def from_bits(cls, bits: str) -> "Mat2":
        return cls(tuple(int(b) for b in bits))

    @property
    def bits(self) -> str:
        return "".join(map(str, self.entries))

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(tuple(a ^ b for a, b in zip(self.entries, other.entries)))

    def __mul__(self, other: "Mat2") -> "Mat2":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Mat2(((a & e) ^ (b & g), (a & f) ^ (b & h), (c & e) ^ (d & g), (c & f) ^ (d & h)))

    def transpose(self) -> "Mat2":
        a, b, c, d = self.entries
        return Mat2((a, c, b, d))

    @property
    def T(self) -> "Mat2":
        return self.transpose()

    def det(self) -> int:
        a, b, c, d = self.entries
        return (a & d) ^ (b & c)

    def is_idempotent(self) -> bool:
        return self * self == self

    def operator(self) -> OperatorDescriptor:
        return operator_by_bits(self.bits)

    def to_json(self) -> List[int]:
        return list(self.entries)

    def __str__(self):
        a, b, c, d = self.entries
        return "[%d %d / %d %d]" % (a, b, c, d)


ZERO = Mat2((0, 0, 0, 0))
ONES = Mat2((1, 1, 1, 1))
IDENTITY = Mat2((1, 0, 0, 1))


def mat_of(op) -> Mat2:
    desc = operator(op)
    if desc.arity != 2:
        raise ValueError("%s is not a binary operator" % desc.name)
    return Mat2.from_bits(desc.bits)


def mat_add(m: Mat2, n: Mat2) -> Mat2:
    return m + n


def mat_mul(m: Mat2, n: Mat2) -> Mat2:
    return m * n


def transpose(m: Mat2) -> Mat2:
    return m.transpose()


def det(m: Mat2) -> int:
    return m.det()


def is_idempotent(m: Mat2) -> bool:
    return m.is_idempotent()


# the operators usually listed as having Boolean matrices; the report shows
# where this list and the computed set disagree
CLAIMED_BOOLEAN = ("p", "p'", "q", "q'", "<->", "&", "nand", "iota0")


@dataclass(frozen=True)
class BooleanMatrixReport:
    members: Tuple[OperatorDescriptor, ...]
    add_failures: Tuple[Tuple[str, str, str], ...]
    mul_failures: Tuple[Tuple[str, str, str], ...]
    transpose_failures: Tuple[str, ...]
    claimed_not_idempotent: Tuple[str, ...]
    idempotent_not_claimed: Tuple[str, ...]

    @property
    def closed(self) -> bool:
        return not (self.add_failures or self.mul_failures or self.transpose_failures)

    def to_json(self) -> dict:
        return {
            "members": [m.symbol for m in self.members],
            "addFailures": [list(x) for x in self.add_failures],
            "mulFailures": [list(x) for x in self.mul_failures],
            "transposeFailures": list(self.transpose_failures),
            "claimedNotIdempotent": list(self.claimed_not_idempotent),
            "idempotentNotClaimed": list(self.idempotent_not_claimed),
        }


def classify_boolean_matrices() -> BooleanMatrixReport:
    """Which of the 16 binary operators have idempotent matrices, whether
    that set is closed under +, * and transpose, and where it disagrees
    with the list claimed for it."""
    members = tuple(op for op in BINARY_OPERATORS if mat_of(op).is_idempotent())
    mats = {mat_of(op): op for op in members}
    add_fail, mul_fail = [], []
    for x, y in itertools.product(members, repeat=2):
        mx, my = mat_of(x), mat_of(y)
        if x.id < y.id and mx + my not in mats:
            add_fail.append((x.symbol, y.symbol, (mx + my).operator().symbol))
        if mx * my not in mats:
            mul_fail.append((x.symbol, y.symbol, (mx * my).operator().symbol))
    t_fail = tuple(op.symbol for op in members if mat_of(op).T not in mats)
    claimed = {operator(k) for k in CLAIMED_BOOLEAN}
    return BooleanMatrixReport(
        members,
        tuple(add_fail),
        tuple(mul_fail),
        t_fail,
        tuple(op.symbol for op in BINARY_OPERATORS if op in claimed and op not in members),
        tuple(op.symbol for op in members if op not in claimed),
    )


@dataclass(frozen=True)
class GenerationReport:
    start: Mat2
    closure: FrozenSet[Mat2]
    rounds: int
    required: Tuple[Tuple[str, bool], ...]

    @property
    def complete(self) -> bool:
        return all(ok for _, ok in self.required)

    def operators(self) -> List[OperatorDescriptor]:
        return sorted((m.operator() for m in self.closure), key=lambda op: op.id)

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "closure": sorted(m.bits for m in self.closure),
            "rounds": self.rounds,
            "required": dict(self.required),
            "complete": self.complete,
        }


def selector_generation(start="p") -> GenerationReport:
    """Close ``{mat_of(start)}`` under transpose, + and *.

    Starting from the selector p the closure must reach q (its transpose),
    p', q', the zero and all-ones matrices and the identity, which between
    them generate every polynomial in p and q.
    """
    first = mat_of(start)
    seen = {first}
    rounds = 0
    while True:
        rounds += 1
        new = set(seen)
        for m in seen:
            new.add(m.T)
        for m, n in itertools.product(seen, repeat=2):
            new.add(m + n)
            new.add(m * n)
        if new == seen:
            break
        seen = new
    required: Dict[str, Mat2] = {
        "q": mat_of("q"),
        "p'": mat_of("p'"),
        "q'": mat_of("q'"),
        "zero": ZERO,
        "ones": ONES,
        "identity": IDENTITY,
    }
    return GenerationReport(first, frozenset(seen), rounds,
                            tuple((k, m in seen) for k, m in required.items()))
