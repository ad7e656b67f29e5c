"""Exception types shared across the package."""


class PBNFError(Exception):
    """Base class for all errors raised by pbnf."""


class ParseError(PBNFError, ValueError):
    """Raised when formula or polynomial text cannot be parsed.

    ``offset`` is the byte offset into the input where parsing failed and
    ``expected`` is the set of tokens that would have been accepted there.
    """

    def __init__(self, message, text="", offset=0, expected=()):
        self.text = text
        self.offset = offset
        self.expected = frozenset(expected)
        detail = message
        if self.expected:
            detail += " (expected one of: %s)" % ", ".join(sorted(self.expected))
        super().__init__("%s at offset %d" % (detail, offset))


class MissingLetterError(PBNFError, KeyError):
    """Raised when an assignment or letter order does not cover a letter."""

    def __init__(self, letter):
        self.letter = letter
        super().__init__(letter)

    def __str__(self):
        return "no value for letter %r" % self.letter
