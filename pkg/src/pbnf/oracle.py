"""Brute-force truth-table semantics.

This is the reference against which the polynomial engine is tested, so it
deliberately shares nothing with it: every connective is written out as a
plain Python truth function and tables are enumerated directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

from .errors import MissingLetterError
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
    letters,
)

SINGULAR = {
    SingularKind.IDENTITY: lambda a: a,
    SingularKind.NEGATION: lambda a: not a,
    SingularKind.TO_TRUE: lambda a: True,
    SingularKind.TO_FALSE: lambda a: False,
}

BINARY = {
    BinaryKind.AND: lambda a, b: a and b,
    BinaryKind.OR: lambda a, b: a or b,
    BinaryKind.IMP: lambda a, b: (not a) or b,
    BinaryKind.RIMP: lambda a, b: a or not b,
    BinaryKind.NIMP: lambda a, b: a and not b,
    BinaryKind.NRIMP: lambda a, b: b and not a,
    BinaryKind.IFF: lambda a, b: a == b,
    BinaryKind.XOR: lambda a, b: a != b,
    BinaryKind.NAND: lambda a, b: not (a and b),
    BinaryKind.NOR: lambda a, b: not (a or b),
    BinaryKind.PROJ_P: lambda a, b: a,
    BinaryKind.PROJ_Q: lambda a, b: b,
    BinaryKind.NPROJ_P: lambda a, b: not a,
    BinaryKind.NPROJ_Q: lambda a, b: not b,
    BinaryKind.TRUE: lambda a, b: True,
    BinaryKind.FALSE: lambda a, b: False,
}

TERNARY = {
    # if b then a else c
    TernaryKind.CD: lambda a, b, c: a if b else c,
    TernaryKind.MAJ: lambda a, b, c: (a + b + c) >= 2,
    TernaryKind.PARITY: lambda a, b, c: (a + b + c) % 2 == 1,
}


def eval_formula(f: Formula, t: Mapping[str, bool]) -> bool:
    if isinstance(f, Const):
        return f.truth
    if isinstance(f, Letter):
        try:
            return bool(t[f.name])
        except KeyError:
            raise MissingLetterError(f.name) from None
    if isinstance(f, Singular):
        return SINGULAR[f.op](eval_formula(f.child, t))
    if isinstance(f, Binary):
        return BINARY[f.op](eval_formula(f.left, t), eval_formula(f.right, t))
    if isinstance(f, Ternary):
        return TERNARY[f.op](eval_formula(f.a, t), eval_formula(f.b, t), eval_formula(f.c, t))
    raise TypeError("not a formula: %r" % (f,))


@dataclass(frozen=True)
class TruthTable:
    order: Tuple[str, ...]
    rows: Tuple[Tuple[Tuple[bool, ...], bool], ...]

    @property
    def values(self) -> Tuple[bool, ...]:
        return tuple(v for _, v in self.rows)

    @property
    def bits(self) -> str:
        return "".join("1" if v else "0" for v in self.values)

    def satisfying(self) -> List[Tuple[bool, ...]]:
        return [a for a, v in self.rows if v]

    def is_tautology(self) -> bool:
        return all(self.values)

    def is_contradiction(self) -> bool:
        return not any(self.values)

    def classify(self) -> str:
        if self.is_tautology():
            return "tautology"
        if self.is_contradiction():
            return "contradiction"
        return "contingent"

    def render(self) -> str:
        header = " ".join(self.order + ("|",)) + " value"
        lines = [header]
        for a, v in self.rows:
            cells = [("1" if x else "0").center(len(name)) for x, name in zip(a, self.order)]
            lines.append(" ".join(cells + ["|"]) + " " + ("1" if v else "0"))
        return "\n".join(lines)

    def to_json(self) -> List[Dict]:
        return [{"assignment": {k: int(x) for k, x in zip(self.order, a)}, "value": int(v)}
                for a, v in self.rows]


def truth_table(f: Formula, order: Sequence[str] = None) -> TruthTable:
    """Full table of ``f``, rows in descending lexicographic order."""
    order = tuple(letters(f) if order is None else order)
    for v in letters(f):
        if v not in order:
            raise MissingLetterError(v)
    rows = []
    for values in itertools.product((True, False), repeat=len(order)):
        rows.append((values, eval_formula(f, dict(zip(order, values)))))
    return TruthTable(order, tuple(rows))
