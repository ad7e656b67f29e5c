"""Shared enumerations, strategies and reference helpers for the tests."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from hypothesis import strategies as st

from pbnf.families import NAMED_FAMILIES, Family
from pbnf.formula import Binary, BinaryKind, Const, Letter, Singular, SingularKind, Ternary, TernaryKind
from pbnf.gf2poly import Polynomial
from pbnf.oracle import BINARY, TERNARY

LETTERS3 = ("p", "q", "r")

# the ten standard binaries used by the exhaustive enumerations
STANDARD_BINARIES = (
    BinaryKind.AND, BinaryKind.OR, BinaryKind.IMP, BinaryKind.RIMP, BinaryKind.NIMP,
    BinaryKind.NRIMP, BinaryKind.IFF, BinaryKind.XOR, BinaryKind.NAND, BinaryKind.NOR,
)

# binaries the text grammar can express
GRAMMAR_BINARIES = STANDARD_BINARIES


def _layer(prev, atoms):
    out = list(atoms)
    out += [Singular(SingularKind.NEGATION, f) for f in prev]
    out += [Binary(k, a, b) for k in STANDARD_BINARIES for a in prev for b in prev]
    return out


@lru_cache(maxsize=None)
def formulas_up_to_depth(depth: int, names=LETTERS3):
    """Every formula over ``names`` built from the ten binaries and negation
    with nesting depth at most ``depth``."""
    atoms = [Letter(v) for v in names]
    level = atoms
    for _ in range(depth):
        level = _layer(level, atoms)
    return tuple(level)


def hybrid_families(n=4, seed=20240611, names=LETTERS3):
    """Seeded random families that are not among the four named ones."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        comp = frozenset(v for v in names if rng.random() < 0.5)
        fam = Family(comp, rng.choice((0, 1)))
        if fam not in NAMED_FAMILIES and fam not in out:
            out.append(fam)
    return out


def all_test_families():
    return list(NAMED_FAMILIES) + hybrid_families()


# -- reference truth vectors ----------------------------------------------------

ROWS3 = tuple(itertools.product((True, False), repeat=3))


def oracle_vectors(formulas, names=LETTERS3):
    """Map each formula to its tuple of truth values over ``names`` (rows in
    descending order), built bottom-up with the oracle's truth functions so
    shared subformulas are evaluated once."""
    rows = tuple(itertools.product((True, False), repeat=len(names)))
    memo = {}

    def vec(f):
        hit = memo.get(f)
        if hit is not None:
            return hit
        if isinstance(f, Letter):
            i = names.index(f.name)
            out = tuple(r[i] for r in rows)
        elif isinstance(f, Const):
            out = (f.truth,) * len(rows)
        elif isinstance(f, Singular):
            out = tuple(not x for x in vec(f.child)) if f.op is SingularKind.NEGATION else None
            if out is None:
                raise NotImplementedError(f.op)
        elif isinstance(f, Binary):
            fn = BINARY[f.op]
            out = tuple(fn(a, b) for a, b in zip(vec(f.left), vec(f.right)))
        elif isinstance(f, Ternary):
            fn = TERNARY[f.op]
            out = tuple(fn(a, b, c) for a, b, c in zip(vec(f.a), vec(f.b), vec(f.c)))
        else:
            raise TypeError(f)
        memo[f] = out
        return out

    return {f: vec(f) for f in formulas}


def encoded_vector(bits: str, fam: Family, names=LETTERS3):
    """Truth values a family reads off the plain vector ``bits`` of a
    polynomial: complemented letters permute the columns, reading 0 flips
    every entry."""
    n = len(names)
    flip = 0
    for i, v in enumerate(names):
        if fam.is_complemented(v):
            flip |= 1 << (n - 1 - i)
    out = []
    for j in range(1 << n):
        bit = bits[j ^ flip] == "1"
        out.append(bit if fam.true_is else not bit)
    return tuple(out)


# -- hypothesis strategies --------------------------------------------------------

letter_names = st.sampled_from(["p", "q", "r", "s", "x1", "y_2"])


def formulas(names=letter_names, max_leaves=12, ternary=True, constants=True):
    leaves = names.map(Letter)
    if constants:
        leaves = leaves | st.booleans().map(Const)

    def extend(children):
        parts = [
            children.map(lambda c: Singular(SingularKind.NEGATION, c)),
            st.builds(Binary, st.sampled_from(GRAMMAR_BINARIES), children, children),
        ]
        if ternary:
            parts.append(st.builds(Ternary, st.sampled_from(list(TernaryKind)), children, children, children))
        return st.one_of(parts)

    return st.recursive(leaves, extend, max_leaves=max_leaves)


# formulas that also use the non-grammar singulars and binaries
def wide_formulas(names=st.sampled_from(["p", "q", "r"]), max_leaves=10):
    leaves = names.map(Letter) | st.booleans().map(Const)

    def extend(children):
        return st.one_of(
            st.builds(Singular, st.sampled_from(list(SingularKind)), children),
            st.builds(Binary, st.sampled_from(list(BinaryKind)), children, children),
            st.builds(Ternary, st.sampled_from(list(TernaryKind)), children, children, children),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


monomials = st.frozensets(st.sampled_from(["p", "q", "r", "s"]), max_size=4)
polynomials = st.frozensets(monomials, max_size=8).map(Polynomial)

families = st.builds(Family, st.frozensets(st.sampled_from(["p", "q", "r", "s"])), st.sampled_from([0, 1]))

assignments4 = st.fixed_dictionaries({v: st.booleans() for v in ("p", "q", "r", "s", "x1", "y_2")})
