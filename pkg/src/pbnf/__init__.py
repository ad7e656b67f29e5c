"""Propositional calculus through multilinear polynomials over GF(2).

Formulas are parsed, transformed into reduced polynomials in a chosen
family, and decided by inspecting the polynomial.
"""

from .calculus import Verdict, conjugates, decide, entails, equivalent
from .errors import MissingLetterError, ParseError, PBNFError
from .families import (
    COMPLEMENT,
    NORMAL,
    PULLBACK,
    PULLBACK_COMPLEMENT,
    Family,
    atomic_table,
    family_parse,
    fiber,
    transform,
)
from .formula import Formula, letters, parse, to_text
from .gf2poly import ONE, ZERO, Polynomial, parse_polynomial, var
from .opspace import TruthVector, anf_from_vector, vector_from_anf, vector_of_formula

__version__ = "0.1.0"

__all__ = [
    "COMPLEMENT", "NORMAL", "PULLBACK", "PULLBACK_COMPLEMENT", "Family", "Formula",
    "MissingLetterError", "ONE", "ParseError", "PBNFError", "Polynomial", "TruthVector",
    "Verdict", "ZERO", "anf_from_vector", "atomic_table", "conjugates", "decide", "entails",
    "equivalent", "family_parse", "fiber", "letters", "parse", "parse_polynomial", "to_text",
    "transform", "var", "vector_from_anf", "vector_of_formula",
]
