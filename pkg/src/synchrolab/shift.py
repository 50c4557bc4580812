"""Shift spaces: SFTs, sofic shifts, and membership oracles.

A shift is one of three variants:

* ``SFT`` -- all bi-infinite sequences avoiding a finite set of forbidden
  words; carries a deterministic higher-block presentation.
* ``Sofic`` -- the bi-infinite label sequences of a finite labeled graph.
* ``OracleShift`` -- a word-membership predicate with a hard window
  bound, for shifts with no finite presentation.

Words are tuples of symbols; symbols are non-empty strings.
"""

from dataclasses import dataclass, field
from functools import cache, cached_property
from itertools import product as iproduct

from synchrolab.errors import EmptyShift, NotIrreducible, WindowExceeded
from synchrolab.presentation import Presentation, minimal_cover, structure_flags, trim


@dataclass(frozen=True)
class Alphabet:
    """An ordered finite set of distinct symbol identifiers."""

    symbols: tuple

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("alphabet must be non-empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet has duplicate symbols")
        for s in self.symbols:
            if not isinstance(s, str) or not s:
                raise ValueError(f"bad symbol {s!r}")

    def __contains__(self, symbol):
        return symbol in self.symbols

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def check_word(self, word):
        for s in word:
            if s not in self.symbols:
                raise ValueError(f"symbol {s!r} not in alphabet {self.symbols}")
        return tuple(word)


def word(text):
    """Builds a word (tuple of single-character symbols) from a string."""
    return tuple(text)


def format_word(w):
    """Renders a word for display; multi-character symbols are comma-joined."""
    if not w:
        return "ε"
    if all(len(s) == 1 for s in w):
        return "".join(w)
    return ",".join(w)


class Shift:
    """Base class of the tagged union; see the variants below."""

    alphabet: Alphabet

    @property
    def name(self):
        return getattr(self, "_name", type(self).__name__.lower())

    def with_name(self, name):
        object.__setattr__(self, "_name", name)
        return self


@dataclass(frozen=True)
class SFT(Shift):
    """Shift of finite type given by finitely many forbidden words."""

    alphabet: Alphabet
    forbidden: frozenset
    presentation: Presentation = field(compare=False)

    @property
    def memory(self):
        """Window length within which every constraint is visible."""
        return max((len(w) for w in self.forbidden), default=1)

    def window_admissible(self, w):
        """True iff the finite word ``w`` contains no forbidden factor."""
        for f in self.forbidden:
            lf = len(f)
            for i in range(len(w) - lf + 1):
                if tuple(w[i:i + lf]) == f:
                    return False
        return True


@dataclass(frozen=True)
class Sofic(Shift):
    """Sofic shift presented by a finite labeled graph (trimmed)."""

    alphabet: Alphabet
    presentation: Presentation


@dataclass(frozen=True)
class OracleShift(Shift):
    """Shift known only through a word-membership predicate.

    The predicate must be factorial (a word with an inadmissible factor
    is inadmissible) and bi-extendable within the window; both are
    sampled at construction and violations raise.  Answers are trusted
    only up to ``window_bound``.
    """

    alphabet: Alphabet
    admits: callable = field(compare=False)
    window_bound: int
    oracle_name: str = "oracle"

    def __post_init__(self):
        if self.window_bound < 1:
            raise ValueError("window bound must be >= 1")
        depth = min(3, self.window_bound - 1)
        words = [()]
        for _ in range(depth):
            words = [w + (a,) for w in words for a in self.alphabet]
            for w in words:
                admissible = self.admits(w)
                for a in self.alphabet:
                    if not admissible:
                        if self.admits(w + (a,)) or self.admits((a,) + w):
                            raise ValueError(
                                f"oracle is not factorial at {w + (a,)}")
                if admissible and not any(self.admits(w + (a,))
                                          for a in self.alphabet):
                    raise ValueError(f"oracle word {w} is not right-extendable")
                if admissible and not any(self.admits((a,) + w)
                                          for a in self.alphabet):
                    raise ValueError(f"oracle word {w} is not left-extendable")


def build_sft(alphabet, forbidden):
    """Builds an SFT together with its higher-block presentation.

    States are the admissible words of length ``m - 1`` where ``m`` is
    the maximum forbidden length; the edge ``u -a-> v`` exists when
    ``u + a`` is admissible and ends with ``v``.  The presentation is
    deterministic and trimmed.

    Raises
    ------
    EmptyShift
        If no bi-infinite sequence avoids the forbidden words.
    """
    forbidden = frozenset(alphabet.check_word(w) for w in forbidden)
    for w in forbidden:
        if len(w) == 0:
            raise ValueError("forbidden words must have length >= 1")
    m = max((len(w) for w in forbidden), default=1)
    if m == 1:
        allowed = [s for s in alphabet if (s,) not in forbidden]
        states = [()]
        edges = [((), s, ()) for s in allowed]
    else:
        def admissible(w):
            for f in forbidden:
                lf = len(f)
                for i in range(len(w) - lf + 1):
                    if w[i:i + lf] == f:
                        return False
            return True

        states = [w for w in iproduct(alphabet.symbols, repeat=m - 1) if admissible(w)]
        edges = []
        for u in states:
            for a in alphabet:
                block = u + (a,)
                if admissible(block):
                    edges.append((u, a, block[1:]))
    p = trim(Presentation.build(states, edges))
    if not p.states:
        raise EmptyShift("all bi-infinite sequences contain a forbidden word")
    return SFT(alphabet, forbidden, p)


def full_shift(alphabet):
    """The full shift over ``alphabet`` (no constraints)."""
    return build_sft(alphabet, set())


def build_sofic(alphabet, presentation):
    """Wraps a labeled graph as a sofic shift, trimming it first."""
    p = trim(presentation)
    if not p.states:
        raise EmptyShift("presentation has no bi-infinite path")
    for (_, a, _) in p.edges:
        if a not in alphabet:
            raise ValueError(f"edge label {a!r} not in alphabet")
    return Sofic(alphabet, p)


def contains_word(s, w):
    """True iff ``w`` occurs in some point of the shift.

    For an oracle shift the predicate is consulted; queries longer than
    the window bound raise ``WindowExceeded``.
    """
    w = s.alphabet.check_word(w)
    if isinstance(s, SFT):
        return s.window_admissible(w)
    if isinstance(s, Sofic):
        return s.presentation.accepts(w)
    if isinstance(s, OracleShift):
        if len(w) > s.window_bound:
            raise WindowExceeded(f"|w| = {len(w)} exceeds window bound {s.window_bound}")
        return bool(s.admits(w))
    raise TypeError(f"unknown shift {s!r}")


def enumerate_words(s, max_len):
    """All admissible words of length <= ``max_len``, in canonical order.

    Canonical order is by length, then lexicographically in alphabet
    order.
    """
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for a in s.alphabet:
                candidate = w + (a,)
                if contains_word(s, candidate):
                    nxt.append(candidate)
        out.extend(nxt)
        frontier = nxt
    return out


@cache
def fischer_cover(s):
    """The minimal deterministic irreducible presentation of ``s``.

    Available for irreducible SFT and sofic shifts; unique up to state
    renaming, and used as the decision automaton for synchronizing
    words.

    Raises
    ------
    NotIrreducible
        If the shift fails the irreducibility check.
    """
    if not isinstance(s, (SFT, Sofic)):
        raise NotIrreducible("fischer_cover requires an SFT or sofic shift")
    return minimal_cover(s.presentation)


def shift_flags(s):
    """Structural flags of the shift, computed on its Fischer cover.

    Falls back to the raw presentation's flags when the cover does not
    exist (reducible shift).
    """
    if isinstance(s, OracleShift):
        return {"irreducible": None, "mixing": None, "period": None}
    try:
        return structure_flags(fischer_cover(s))
    except NotIrreducible:
        return structure_flags(s.presentation)


def product_symbol(a, b):
    return f"{a}|{b}"


def split_product_symbol(symbol):
    left, _, right = symbol.partition("|")
    return left, right


def product(s1, s2):
    """The product shift, presented over paired states and paired labels.

    Points are coordinate-wise pairs of points; the paired symbol
    ``a|b`` reads ``a`` in the first factor and ``b`` in the second.
    """
    if not isinstance(s1, (SFT, Sofic)) or not isinstance(s2, (SFT, Sofic)):
        raise TypeError("product requires SFT or sofic factors")
    alphabet = Alphabet(tuple(product_symbol(a, b)
                              for a in s1.alphabet for b in s2.alphabet))
    p1, p2 = s1.presentation, s2.presentation
    states = [(q1, q2) for q1 in p1.states for q2 in p2.states]
    edges = []
    for (u1, a, v1) in p1.edges:
        for (u2, b, v2) in p2.edges:
            edges.append(((u1, u2), product_symbol(a, b), (v1, v2)))
    return build_sofic(alphabet, Presentation.build(states, edges))
