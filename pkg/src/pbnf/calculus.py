"""Deciding formulas through their polynomials.

Everything here goes through :func:`pbnf.families.transform`; truth tables
are never consulted.  A formula is a tautology when its polynomial reduces
to the family's true constant and a contradiction when it reduces to the
false one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .families import NORMAL, PULLBACK_COMPLEMENT, Family, transform
from .formula import Binary, BinaryKind, Formula, Letter, Singular, SingularKind, letters
from .gf2poly import Polynomial

TAUTOLOGY = "tautology"
CONTRADICTION = "contradiction"
CONTINGENT = "contingent"


@dataclass(frozen=True)
class Verdict:
    kind: str
    polynomial: Polynomial
    family: Family = NORMAL
    # first falsifying / satisfying assignment for contingent formulas, over
    # the letters the polynomial actually depends on
    witness: Optional[Dict[str, bool]] = field(default=None, compare=False)
    model: Optional[Dict[str, bool]] = field(default=None, compare=False)

    @property
    def is_tautology(self) -> bool:
        return self.kind == TAUTOLOGY

    @property
    def is_contradiction(self) -> bool:
        return self.kind == CONTRADICTION

    def to_json(self) -> dict:
        out = {"verdict": self.kind, "family": self.family.spec(), "polynomial": str(self.polynomial)}
        if self.witness is not None:
            out["witness"] = {k: int(v) for k, v in self.witness.items()}
        if self.model is not None:
            out["model"] = {k: int(v) for k, v in self.model.items()}
        return out


def _truth_at(p: Polynomial, fam: Family, truths: Dict[str, bool]) -> bool:
    return fam.decode_out(p.evaluate(fam.encode_assignment(truths)))


def _search(p: Polynomial, fam: Family, order: Sequence[str], want: bool):
    for values in itertools.product((True, False), repeat=len(order)):
        truths = dict(zip(order, values))
        if _truth_at(p, fam, truths) == want:
            return truths
    return None


def decide(f: Formula, fam: Family = NORMAL) -> Verdict:
    """Classify ``f`` as tautology, contradiction or contingent.

    >>> from pbnf.formula import parse
    >>> decide(parse("p & (p -> q) -> q")).kind
    'tautology'
    """
    p = transform(f, fam)
    if p == fam.true_constant:
        return Verdict(TAUTOLOGY, p, fam)
    if p == fam.false_constant:
        return Verdict(CONTRADICTION, p, fam)
    used = p.letters()
    order = [v for v in letters(f) if v in used] + sorted(used - set(letters(f)))
    witness = _search(p, fam, order, False)
    model = _search(p, fam, order, True)
    if witness is None or model is None or _truth_at(p, fam, witness) or not _truth_at(p, fam, model):
        raise AssertionError("non-constant polynomial %s without both witnesses" % p)
    return Verdict(CONTINGENT, p, fam, witness, model)


def is_tautology(f: Formula, fam: Family = NORMAL) -> bool:
    return decide(f, fam).is_tautology


def is_contradiction(f: Formula, fam: Family = NORMAL) -> bool:
    return decide(f, fam).is_contradiction


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    left: Polynomial
    right: Polynomial

    @property
    def difference(self) -> Polynomial:
        """left + right; zero exactly when the formulas are equivalent."""
        return self.left + self.right

    def __bool__(self):
        return self.equivalent

    def to_json(self) -> dict:
        return {"equivalent": self.equivalent, "left": str(self.left), "right": str(self.right),
                "difference": str(self.difference)}


def equivalent(f: Formula, g: Formula, fam: Family = NORMAL) -> Equivalence:
    """Compare canonical polynomials; equal polynomials iff equivalent."""
    left, right = transform(f, fam), transform(g, fam)
    return Equivalence(left == right, left, right)


@dataclass(frozen=True)
class Entailment:
    holds: bool
    implication: Polynomial
    certificate: Optional[Polynomial] = None
    countermodel: Optional[Dict[str, bool]] = None

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        out = {"entails": self.holds, "implication": str(self.implication)}
        if self.certificate is not None:
            out["certificate"] = str(self.certificate)
        if self.countermodel is not None:
            out["countermodel"] = {k: int(v) for k, v in self.countermodel.items()}
        return out


def entails(f: Formula, g: Formula, fam: Family = NORMAL) -> Entailment:
    """``f |- g`` iff ``f -> g`` is a tautology.

    When it holds the certificate is the polynomial of ``f & g``, which then
    coincides with that of ``f`` (the premise already carries the
    conclusion).  Otherwise a countermodel makes ``f`` true and ``g`` false.
    """
    verdict = decide(Binary(BinaryKind.IMP, f, g), fam)
    if verdict.is_tautology:
        certificate = transform(Binary(BinaryKind.AND, f, g), fam)
        return Entailment(True, verdict.polynomial, certificate)
    # a contradictory implication has a constant polynomial, so every
    # assignment (the empty one included) is a countermodel
    witness = {} if verdict.witness is None else verdict.witness
    return Entailment(False, verdict.polynomial, countermodel=witness)


# -- conjugate sentences ------------------------------------------------------

CONJUGATE_NAMES = ("conditional", "inverse", "converse", "contrapositive")
_FLIP = {BinaryKind.IMP: BinaryKind.RIMP, BinaryKind.RIMP: BinaryKind.IMP}


def _neg(x):
    return Singular(SingularKind.NEGATION, x)


@dataclass(frozen=True)
class ConjugateSentence:
    name: str
    formula: Formula
    polynomials: Tuple[Tuple[str, Polynomial], ...]

    def polynomial(self, fam: Family) -> Polynomial:
        return dict(self.polynomials)[fam.name]


@dataclass(frozen=True)
class ConjugateReport:
    sentences: Tuple[ConjugateSentence, ...]
    families: Tuple[Family, ...]
    pairings_hold: bool

    def __getitem__(self, name) -> ConjugateSentence:
        for s in self.sentences:
            if s.name == name:
                return s
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "families": [f.name for f in self.families],
            "sentences": [{"name": s.name, "formula": str(s.formula),
                           "polynomials": {k: str(v) for k, v in s.polynomials}} for s in self.sentences],
            "pairingsHold": self.pairings_hold,
        }


def conjugates(f: Formula, families: Sequence[Family] = (NORMAL, PULLBACK_COMPLEMENT)) -> ConjugateReport:
    """Conditional, inverse, converse and contrapositive of ``a -> b``
    (or ``a <- b``), with their polynomials.

    The inverse negates both sides, the converse flips the arrow, and the
    contrapositive does both; conditional = contrapositive and
    inverse = converse are checked in every family.
    """
    if not (isinstance(f, Binary) and f.op in _FLIP):
        raise ValueError("principal operator must be -> or <-, got %s" % f)
    op, a, b = f.op, f.left, f.right
    forms = (
        f,
        Binary(op, _neg(a), _neg(b)),
        Binary(_FLIP[op], a, b),
        Binary(_FLIP[op], _neg(a), _neg(b)),
    )
    families = tuple(families)
    sentences = tuple(
        ConjugateSentence(name, g, tuple((fam.name, transform(g, fam)) for fam in families))
        for name, g in zip(CONJUGATE_NAMES, forms)
    )
    ok = all(sentences[0].polynomial(fam) == sentences[3].polynomial(fam)
             and sentences[1].polynomial(fam) == sentences[2].polynomial(fam) for fam in families)
    return ConjugateReport(sentences, families, ok)


@dataclass(frozen=True)
class Decomposition:
    name: str
    formula: Formula
    verdict: Verdict


def biconditional_decompositions(p: str = "p", q: str = "q") -> List[Decomposition]:
    """The four ways of writing ``p <-> q`` as a conjunction of two conjugate
    conditionals, each checked as a tautologous biconditional."""
    a, b = Letter(p), Letter(q)
    conditional = Binary(BinaryKind.IMP, a, b)
    converse = Binary(BinaryKind.RIMP, a, b)
    inverse = Binary(BinaryKind.IMP, _neg(a), _neg(b))
    contrapositive = Binary(BinaryKind.RIMP, _neg(a), _neg(b))
    bicond = Binary(BinaryKind.IFF, a, b)
    parts = (
        ("Conditional-Converse", conditional, converse),
        ("Conditional-Inverse", conditional, inverse),
        ("Contrapositive-Converse", contrapositive, converse),
        ("Contrapositive-Inverse", contrapositive, inverse),
    )
    out = []
    for name, x, y in parts:
        stmt = Binary(BinaryKind.IFF, bicond, Binary(BinaryKind.AND, x, y))
        out.append(Decomposition(name, stmt, decide(stmt)))
    return out
