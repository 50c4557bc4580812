"""Exception types shared across the library."""


class SynchrolabError(Exception):
    """Base class for all library errors."""


class EmptyShift(SynchrolabError):
    """No bi-infinite sequence satisfies the constraints."""


class NotIrreducible(SynchrolabError):
    """Operation requires an irreducible shift."""


class NotSFT(SynchrolabError):
    """Operation requires a shift of finite type."""


class NotInLanguage(SynchrolabError):
    """Word is not admissible for the shift."""


class NotInShift(SynchrolabError):
    """Point does not belong to the shift."""


class WindowExceeded(SynchrolabError):
    """Oracle query exceeds the oracle's window bound."""


class NotAgreeing(SynchrolabError):
    """Bracket arguments do not agree on the required central window."""


class Unverified(SynchrolabError):
    """An oracle-backed check cannot be settled within the window bound."""


class NotHomoclinic(SynchrolabError):
    """Points are not homoclinic."""


class NotSynchronizing(SynchrolabError):
    """Point is not synchronizing (or its witness window is too large)."""


class NotInRectangle(SynchrolabError):
    """Point lies outside the required rectangle neighborhood."""


class NotInDomain(SynchrolabError):
    """Point lies outside a germ's domain cylinder."""


class NotConstructive(SynchrolabError):
    """No constructive germ is available for the requested pair."""


class BracketUndefined(SynchrolabError):
    """A bracket value required by an algorithm is undefined."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class NoConvergence(SynchrolabError):
    """Iteration failed to converge within its cap."""


class SearchExhausted(SynchrolabError):
    """A bounded search failed to produce a witness."""

    def __init__(self, message, depth=None):
        super().__init__(message)
        self.depth = depth


class WindowTooSmall(SynchrolabError):
    """Requested enumeration window cannot hold any representatives."""


class NotResolving(SynchrolabError):
    """Cover map is neither right- nor left-resolving."""


class ParseError(SynchrolabError):
    """Malformed spec file."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class SemanticError(SynchrolabError):
    """Well-formed spec file with inconsistent content."""


class UsageError(SynchrolabError):
    """Bad command-line invocation."""
