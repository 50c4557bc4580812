"""Local conjugacy germs and groupoid sampling.

A germ is a finite rewrite rule on a cylinder: replace a block, or
splice in the past/future of a fixed point.  Two-sided germs witness
local conjugacy, one-sided germs witness the stable (rule on unstable
cylinders) and unstable (rule on stable cylinders) variants.

Constructions follow the shift type: on an SFT, homoclinic points are
locally conjugate via a central block rewrite, and one-sided tail swaps
are sound behind a memory buffer.  On a sofic shift germs are lifted
through the canonical cover: lift the endpoints to the edge shift,
build the SFT germ there, and conjugate by the labeling map.  Lifting
fails exactly where it should (ambiguous or unrelated lifts), so the
sampler emits only sound arrows.
"""

from dataclasses import dataclass
from functools import lru_cache

from synchrolab.errors import (BracketUndefined, NotAgreeing, NotConstructive,
                               NotHomoclinic, NotInDomain, NotInRectangle,
                               NotInShift, NotSFT, NotSynchronizing,
                               SearchExhausted, Unverified)
from synchrolab.factor import CoverMap, preimage_count
from synchrolab.points import (BiSeq, agree_on, alignment_bound, bracket,
                               decide_relation, enumerate_points, future_splice,
                               past_splice, point_in_shift, replace_window, shift_by,
                               splice)
from synchrolab.shift import SFT, Sofic, fischer_cover, shift_flags
from synchrolab.sync import (cylinder_representatives, central_word_synchronizes,
                             classify_point)

KINDS = ("lc", "lcs", "lcu")
_REQUIRED_RELATION = {"lc": "homoclinic", "lcs": "stable", "lcu": "unstable"}


# -- rules -------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityRule:
    def apply(self, s, z):
        return z


@dataclass(frozen=True)
class BlockRule:
    """Replace coordinates [lo, lo + |pattern|) by a fixed pattern."""

    lo: int
    pattern: tuple

    def apply(self, s, z):
        return replace_window(z, self.lo, self.pattern)


@dataclass(frozen=True)
class PastRule:
    """Replace everything below ``cut`` by the pattern of a fixed point."""

    point: BiSeq
    cut: int

    def apply(self, s, z):
        return past_splice(z, self.point, self.cut)


@dataclass(frozen=True)
class FutureRule:
    """Replace everything from ``cut`` on by the pattern of a fixed point."""

    point: BiSeq
    cut: int

    def apply(self, s, z):
        return future_splice(z, self.point, self.cut)


@dataclass(frozen=True)
class ChainRule:
    """Apply a tuple of germs in order."""

    germs: tuple

    def apply(self, s, z):
        for g in self.germs:
            z = g.apply(z)
        return z


@dataclass(frozen=True)
class ShiftRule:
    """Conjugation of a germ by a power of the shift."""

    base: object  # Germ
    k: int

    def apply(self, s, z):
        return shift_by(self.base.apply(shift_by(z, -self.k)), self.k)


@dataclass(frozen=True)
class ComposeRule:
    """The rectangle composition z -> [gu([z,x]), gs([x,z])]."""

    gu: object
    gs: object
    base: BiSeq
    window: int

    def apply(self, s, z):
        n = self.window
        try:
            to_unstable = bracket(s, z, self.base, n)
            to_stable = bracket(s, self.base, z, n)
        except (NotAgreeing, NotInShift, Unverified) as exc:
            raise BracketUndefined(f"rectangle projection failed: {exc}") from exc
        a = self.gu.apply(to_unstable)
        b = self.gs.apply(to_stable)
        out = splice(a, b)
        if point_in_shift(s, out) != "yes":
            raise BracketUndefined("composed bracket value leaves the shift")
        return out


@dataclass(frozen=True)
class LiftedRule:
    """An SFT germ between cover lifts, conjugated by the labeling map."""

    cover: CoverMap
    inner: object  # Germ on the cover's edge shift

    def apply(self, s, z):
        lifts = preimage_count(self.cover, z)["preimages"]
        outputs = {self.cover.project(self.inner.apply(w))
                   for w in lifts if self.inner.contains(w)}
        if len(outputs) != 1:
            raise NotInDomain(
                f"{len(outputs)} projected values over the lifts (need exactly 1)")
        return outputs.pop()


# -- germs -------------------------------------------------------------------

@dataclass(frozen=True)
class Germ:
    """A partial map between cylinder sets witnessing local conjugacy.

    The domain is the set of shift points agreeing with ``source`` on
    ``[dom_lo, dom_hi]`` (``None`` bounds are unconstrained): a central
    cylinder for kind ``lc``, an unstable cylinder (past frozen) for
    ``lcs``, a stable cylinder (future frozen) for ``lcu``.
    """

    shift: object
    kind: str
    source: BiSeq
    target: BiSeq
    dom_lo: object  # int or None
    dom_hi: object  # int or None
    rule: object

    @property
    def window(self):
        """The cylinder radius exponent N of the domain."""
        if self.kind == "lc":
            return max(abs(self.dom_lo), abs(self.dom_hi)) + 1
        if self.kind == "lcs":
            return self.dom_hi + 1
        return 1 - self.dom_lo

    def contains(self, z):
        lo = self.dom_lo
        hi = self.dom_hi
        if lo is None:
            lo = -alignment_bound(z, self.source)
        if hi is None:
            hi = alignment_bound(z, self.source)
        return agree_on(z, self.source, lo, hi + 1)

    def apply(self, z, verify=True):
        """The germ's value at ``z``.

        Raises ``NotInDomain`` off the cylinder and ``NotInShift`` when
        a rule image escapes the shift (never the case for the shipped
        constructions, but checked).
        """
        if not self.contains(z):
            raise NotInDomain(f"{z} does not agree with the source on the window")
        out = self.rule.apply(self.shift, z)
        if verify and point_in_shift(self.shift, out) == "no":
            raise NotInShift(f"germ image {out} leaves the shift")
        return out

    def inverse(self):
        inv_rule, lo, hi = self._inverted()
        return Germ(self.shift, self.kind, self.target, self.source, lo, hi, inv_rule)

    def _inverted(self):
        rule = self.rule
        lo, hi = self.dom_lo, self.dom_hi
        if isinstance(rule, IdentityRule):
            return rule, lo, hi
        if isinstance(rule, BlockRule):
            span = self.source.window(rule.lo, rule.lo + len(rule.pattern))
            return BlockRule(rule.lo, span), lo, hi
        if isinstance(rule, PastRule):
            return PastRule(self.source, rule.cut), lo, hi
        if isinstance(rule, FutureRule):
            return FutureRule(self.source, rule.cut), lo, hi
        if isinstance(rule, ChainRule):
            return ChainRule(tuple(g.inverse() for g in reversed(rule.germs))), lo, hi
        if isinstance(rule, ShiftRule):
            inv = rule.base.inverse().conjugate(rule.k)
            return inv.rule, inv.dom_lo, inv.dom_hi
        if isinstance(rule, ComposeRule):
            return (ComposeRule(rule.gu.inverse(), rule.gs.inverse(),
                                self.target, rule.window), lo, hi)
        if isinstance(rule, LiftedRule):
            return LiftedRule(rule.cover, rule.inner.inverse()), lo, hi
        raise TypeError(f"cannot invert rule {rule!r}")

    def conjugate(self, k):
        """The germ between the shifted endpoints, sigma^k g sigma^-k."""
        lo = None if self.dom_lo is None else self.dom_lo - k
        hi = None if self.dom_hi is None else self.dom_hi - k
        return Germ(self.shift, self.kind, shift_by(self.source, k),
                    shift_by(self.target, k), lo, hi, ShiftRule(self, k))

    def compose(self, other):
        """``other`` after ``self``; endpoints must chain."""
        if self.target != other.source or self.kind != other.kind:
            raise ValueError("germs do not chain")

        def merge(a, b, pick):
            if a is None:
                return b
            if b is None:
                return a
            return pick(a, b)

        return Germ(self.shift, self.kind, self.source, other.target,
                    merge(self.dom_lo, other.dom_lo, min),
                    merge(self.dom_hi, other.dom_hi, max),
                    ChainRule((self, other)))


def domain_samples(germ, budget=6):
    """Representatives of a germ's domain for verification sweeps."""
    s = germ.shift
    x = germ.source
    if germ.kind == "lcs":
        return cylinder_representatives(s, x, germ.dom_hi + 1, germ.dom_hi + 1 + 2, 2, "u")[:budget]
    if germ.kind == "lcu":
        return cylinder_representatives(s, x, 1 - germ.dom_lo, 1 - germ.dom_lo + 2, 2, "s")[:budget]
    futures = cylinder_representatives(s, x, germ.dom_hi + 1, germ.dom_hi + 3, 2, "u")[:budget]
    out = []
    for y in futures:
        pasts = cylinder_representatives(s, y, 1 - germ.dom_lo, 1 - germ.dom_lo + 2, 2, "s")
        out.extend(pasts[:2])
    return out[:budget] if out else [x]


def verify_germ(germ, budget=6):
    """Asserts the germ invariants on domain representatives.

    Checks that the source maps to the target, values stay in the
    shift, the rule never edits coordinates outside the window in the
    directions the kind controls, and the rule is injective on the
    sample.  Returns the number of representatives exercised.
    """
    assert germ.kind in KINDS
    assert germ.apply(germ.source) == germ.target
    samples = domain_samples(germ, budget)
    images = []
    for z in samples:
        if not germ.contains(z):
            continue
        out = germ.apply(z)
        images.append(out)
        bound = max(alignment_bound(z, out), abs(germ.window)) + 1
        if germ.kind in ("lc", "lcs"):
            # forward defect vanishes beyond the window
            hi = germ.window if germ.kind == "lc" else germ.dom_hi + 1
            assert agree_on(z, out, hi + 1, bound), (germ.kind, z, out)
        if germ.kind in ("lc", "lcu"):
            lo = -germ.window if germ.kind == "lc" else germ.dom_lo - 1
            assert agree_on(z, out, -bound, lo), (germ.kind, z, out)
    assert len(set(images)) == len(images), "rule is not injective on the sample"
    return len(images)


# -- germ constructors -------------------------------------------------------

def identity_germ(s, x, kind="lc", window=2):
    lo = None if kind == "lcs" else -window
    hi = None if kind == "lcu" else window
    return Germ(s, kind, x, x, lo, hi, IdentityRule())


def _disagreement_radius(x, y):
    """Least K with x_i == y_i for all |i| >= K (homoclinic pair)."""
    bound = alignment_bound(x, y)
    radius = 0
    for i in range(-bound, bound + 1):
        if x.at(i) != y.at(i):
            radius = max(radius, abs(i) + 1)
    return radius


def ruelle_germ(s, x, y, verify=True):
    """The central-block local conjugacy between homoclinic SFT points.

    With K the disagreement radius and m the SFT memory, the rule
    rewrites the block [-W, W], W = K + m, from x's pattern to y's;
    membory buffering makes every junction window a window of the
    input, so images stay in the shift.
    """
    if not isinstance(s, SFT):
        raise NotSFT("ruelle_germ needs an SFT; use compose_lcs_lcu on sofic shifts")
    if not decide_relation(x, y, "homoclinic"):
        raise NotHomoclinic(f"{x} and {y} are not homoclinic")
    if x == y:
        return identity_germ(s, x, "lc", 2)
    w = _disagreement_radius(x, y) + s.memory
    germ = Germ(s, "lc", x, y, -w, w, BlockRule(-w, y.window(-w, w + 1)))
    if verify:
        verify_germ(germ)
    return germ


def _sft_one_sided_germ(s, x, y, kind, verify=True):
    """Tail-swap germs between stable/unstable equivalent SFT points."""
    if not isinstance(s, SFT):
        raise NotSFT("one-sided tail swaps need the SFT memory bound")
    m = s.memory
    if kind == "lcs":
        bound = alignment_bound(x, y)
        agree_from = bound
        while agree_from > -bound and x.at(agree_from - 1) == y.at(agree_from - 1):
            agree_from -= 1
        cut = agree_from + m
        germ = Germ(s, "lcs", x, y, None, cut + m, PastRule(y, cut))
    else:
        bound = alignment_bound(x, y)
        agree_to = -bound
        while agree_to < bound and x.at(agree_to + 1) == y.at(agree_to + 1):
            agree_to += 1
        cut = agree_to - m + 1
        germ = Germ(s, "lcu", x, y, cut - m, None, FutureRule(y, cut))
    if verify:
        verify_germ(germ)
    return germ


@lru_cache(maxsize=None)
def canonical_cover(s):
    return CoverMap.of_shift(s)


@lru_cache(maxsize=None)
def _lifts(s, x):
    return preimage_count(canonical_cover(s), x)["preimages"]


def _past_pin(s, x, upto):
    """Cover states compatible at position ``upto`` with x's whole past."""
    g = fischer_cover(s)
    anchor = min(x.origin, upto)
    pattern = x.left_pattern_at(anchor)
    alive = frozenset(g.states)
    while True:
        nxt = g.run(alive, pattern)
        if nxt == alive:
            break
        alive = nxt
    return g.run(alive, x.window(anchor, upto))


def _future_pin(s, x, start):
    """Cover states at ``start`` admitting a run of x's whole future."""
    g = fischer_cover(s)
    anchor = max(x.right_start, start)
    pattern = x.right_pattern_at(anchor)
    alive = set(g.states)
    while True:
        nxt = {q for q in alive if g.run({q}, pattern) & alive}
        if nxt == alive:
            break
        alive = nxt
    mid = x.window(start, anchor)
    return {q for q in g.states if g.run({q}, mid) & alive}


def lifted_germ(s, x, y, kind, verify=True):
    """A sofic germ obtained by lifting to the canonical cover.

    Searches the (finitely many) lift pairs for one in the relation the
    kind requires, builds the SFT germ upstairs, and conjugates by the
    labeling map.  The frozen part of the domain must pin the lift --
    a synchronizing central word for two-sided germs, a singleton tail
    state set for one-sided ones -- so that the projected rule is a
    genuine map of cylinders, not a partial map.  ``NotConstructive``
    signals a sound refusal (no related lift pair, or no pinning).
    """
    cover = canonical_cover(s)
    relation = _REQUIRED_RELATION[kind]
    witness = 0
    if kind == "lc":
        vx = classify_point(s, x)
        vy = classify_point(s, y)
        if vx.status != "synchronizing" or vy.status != "synchronizing":
            raise NotConstructive("two-sided sofic germs need synchronizing endpoints")
        witness = max(vx.window_used, vy.window_used)
    from synchrolab.sync import is_sync_word
    for xh in _lifts(s, x):
        for yh in _lifts(s, y):
            if not decide_relation(xh, yh, relation):
                continue
            if kind == "lc":
                inner = ruelle_germ(cover.source, xh, yh, verify=False)
            else:
                inner = _sft_one_sided_germ(cover.source, xh, yh, kind, verify=False)
            lo, hi = inner.dom_lo, inner.dom_hi
            slack = len(cover.presentation.states) + 1
            lo = None if lo is None else min(lo - slack, -witness)
            hi = None if hi is None else max(hi + slack, witness)
            if kind == "lc":
                if not (is_sync_word(s, x.window(lo, hi + 1))
                        and is_sync_word(s, y.window(lo, hi + 1))):
                    continue
            elif kind == "lcs":
                if len(_past_pin(s, x, hi + 1)) != 1 or len(_past_pin(s, y, hi + 1)) != 1:
                    continue
            else:
                if len(_future_pin(s, x, lo)) != 1 or len(_future_pin(s, y, lo)) != 1:
                    continue
            germ = Germ(s, kind, x, y, lo, hi, LiftedRule(cover, inner))
            try:
                if verify:
                    verify_germ(germ)
                else:
                    germ.apply(x)
            except (NotInDomain, AssertionError):
                continue
            return germ
    raise NotConstructive(f"no {kind} germ between the lifts of {x} and {y}")


def construct_germ(s, x, y, kind, verify=True):
    """Builds a germ of the requested kind, or raises ``NotConstructive``.

    Dispatches on the shift type: identity, SFT block/tail rules, or
    cover-lifted rules for sofic shifts.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown germ kind {kind!r}")
    if x == y:
        return identity_germ(s, x, kind)
    if not decide_relation(x, y, _REQUIRED_RELATION[kind]):
        raise NotConstructive(
            f"points are not {_REQUIRED_RELATION[kind]}-equivalent")
    if isinstance(s, SFT):
        if kind == "lc":
            return ruelle_germ(s, x, y, verify)
        return _sft_one_sided_germ(s, x, y, kind, verify)
    if isinstance(s, Sofic):
        return lifted_germ(s, x, y, kind, verify)
    raise NotConstructive("no germ construction for oracle shifts")


def rectangle_germs(s, x, y, N, verify=True):
    """The germ chain of a rectangle neighborhood: y ~lcu [x,y] ~lcs x.

    Requires ``x`` synchronizing with its witness inside radius ``N``
    and ``y`` in the rectangle (central agreement with ``x``).  Returns
    ``(gu, gs)`` where ``gu : z -> [x, z]`` maps y to [x,y] (kind lcu,
    on the stable cylinder of y) and ``gs : z -> [z, x]`` maps [x,y]
    to x (kind lcs, on the unstable cylinder of [x,y]).
    """
    if not central_word_synchronizes(s, x, N):
        raise NotSynchronizing(f"no synchronizing central word at radius {N}")
    if not agree_on(x, y, 1 - N, N):
        raise NotInRectangle("y does not agree with x on the central window")
    corner = bracket(s, x, y, N)
    gu = Germ(s, "lcu", y, corner, 1 - N, None, FutureRule(x, 0))
    gs = Germ(s, "lcs", corner, x, None, N - 1, PastRule(x, 0))
    if verify:
        verify_germ(gu)
        verify_germ(gs)
    return gu, gs


def compose_lcs_lcu(s, gu, gs, x, y, verify=True):
    """Builds the two-sided germ from one-sided germs at sync points.

    ``gu`` must realize x ~lcs y on an unstable cylinder of x and
    ``gs`` must realize x ~lcu y on a stable cylinder of x; both
    endpoints must synchronize.  The composed rule is
    ``z -> [gu([z, x]), gs([x, z])]`` on a rectangle around x.
    """
    if gu.kind != "lcs" or gs.kind != "lcu":
        raise ValueError("compose_lcs_lcu needs (lcs, lcu) germs")
    if gu.source != x or gs.source != x or gu.target != y or gs.target != y:
        raise ValueError("germ endpoints do not match the requested pair")
    vx = classify_point(s, x)
    vy = classify_point(s, y)
    if vx.status != "synchronizing" or vy.status != "synchronizing":
        raise NotSynchronizing("both endpoints must synchronize")
    n = max(vx.window_used + 1, vy.window_used + 1, gu.window, gs.window, 2)
    germ = Germ(s, "lc", x, y, -n, n, ComposeRule(gu, gs, x, n))
    if verify:
        assert germ.apply(x) == y
        verify_germ(germ, budget=4)
    return germ


# -- bridges -----------------------------------------------------------------

def _is_periodic(p):
    return not p.core and p.left == p.right


def _require_sync_periodic(s, p):
    if not _is_periodic(p):
        raise NotSynchronizing(f"{p} is not periodic")
    if classify_point(s, p).status != "synchronizing":
        raise NotSynchronizing(f"{p} is not synchronizing")


def _join_left_tail(s, p, tail, boundary, depth=6):
    """A point of ``X^u(p)`` equal to ``tail`` from ``boundary`` on.

    Searches connector words by length, over all phases of p's cycle.
    """
    from itertools import product as iproduct
    b = max(boundary, tail.right_start)
    suffix = tail.window(boundary, b)
    for n in range(depth + 1):
        for rot in range(len(p.left)):
            pattern = p.left[rot:] + p.left[:rot]
            for u in iproduct(s.alphabet.symbols, repeat=n):
                candidate = BiSeq(pattern, u + suffix,
                                  tail.right_pattern_at(b), boundary - n)
                if (point_in_shift(s, candidate) == "yes"
                        and decide_relation(candidate, p, "unstable")):
                    return candidate
    raise SearchExhausted("no left join found", depth=depth)


def _join_right_tail(s, head, boundary, q, depth=6):
    """A point of ``X^s(q)`` equal to ``head`` below ``boundary``."""
    from itertools import product as iproduct
    a = min(boundary, head.origin)
    prefix = head.window(a, boundary)
    for n in range(depth + 1):
        for rot in range(len(q.right)):
            pattern = q.right[rot:] + q.right[:rot]
            for u in iproduct(s.alphabet.symbols, repeat=n):
                candidate = BiSeq(head.left_pattern_at(a), prefix + u, pattern, a)
                if (point_in_shift(s, candidate) == "yes"
                        and decide_relation(candidate, q, "stable")):
                    return candidate
    raise SearchExhausted("no right join found", depth=depth)


def heteroclinic_bridge(s, z, p, q, depth=6):
    """Bridge points x ~lcs z ~lcu y with x unstably tied to p and y
    stably tied to q.

    Searches the rectangle of ``z`` for a point with p's past and one
    with q's future, then brackets them onto ``z``.  Returns
    ``(x, y, germ_x_to_z, germ_y_to_z)``.
    """
    if not shift_flags(s)["mixing"]:
        raise NotSynchronizing("bridges need a mixing shift")
    _require_sync_periodic(s, p)
    _require_sync_periodic(s, q)
    verdict = classify_point(s, z)
    if verdict.status != "synchronizing":
        raise NotSynchronizing("bridge base must synchronize")
    n = max(verdict.window_used + 1, 2)
    x = _join_left_tail(s, p, z, 1 - n, depth)
    y = _join_right_tail(s, z, n, q, depth)
    # x agrees with z from 1-n on, so [x, z] = z: x ~lcs z directly
    gx = Germ(s, "lcs", x, z, None, n - 1, PastRule(z, 0))
    gy = Germ(s, "lcu", y, z, 1 - n, None, FutureRule(z, 0))
    verify_germ(gx, budget=4)
    verify_germ(gy, budget=4)
    return x, y, gx, gy


def sync_bridge(s, x, y, p, q, depth=6):
    """A synchronizing point z with x ~lcs z ~lcu y.

    ``x`` must lie in the unstable class of ``p`` and ``y`` in the
    stable class of ``q`` (both synchronizing periodic).  The bridge
    point carries y's past and x's far future, glued inside a rectangle
    of y, with germ witnesses constructed and verified.
    """
    if not shift_flags(s)["mixing"]:
        raise NotSynchronizing("bridges need a mixing shift")
    _require_sync_periodic(s, p)
    _require_sync_periodic(s, q)
    if not decide_relation(x, p, "unstable"):
        raise NotSynchronizing("x is not in the unstable class of p")
    if not decide_relation(y, q, "stable"):
        raise NotSynchronizing("y is not in the stable class of q")
    if x == y:
        return x
    verdict = classify_point(s, y)
    if verdict.status != "synchronizing":
        raise NotSynchronizing("y must synchronize")
    n = max(verdict.window_used + 1, 2)
    # bridge candidate: y's pattern through the rectangle window, then a
    # connector, then x's far future
    from itertools import product as iproduct
    a = min(1 - n, y.origin)
    head = y.window(a, n)
    for m in range(depth + 1):
        for shift_amount in range(x.right_start, x.right_start + len(x.right)):
            tail_pattern = x.right_pattern_at(shift_amount)
            for u in iproduct(s.alphabet.symbols, repeat=m):
                z = BiSeq(y.left_pattern_at(a), head + u, tail_pattern, a)
                if point_in_shift(s, z) != "yes":
                    continue
                if not decide_relation(z, x, "stable"):
                    continue
                try:
                    g_zx = construct_germ(s, x, z, "lcs")
                except NotConstructive:
                    continue
                g_zy = Germ(s, "lcu", z, y, 1 - n, None, FutureRule(y, 0))
                verify_germ(g_zy, budget=4)
                if classify_point(s, z).status != "synchronizing":
                    continue
                return z
    raise SearchExhausted("no bridge point found", depth=depth)


# -- groupoid sampling -------------------------------------------------------

@dataclass(frozen=True)
class GroupoidArrow:
    source: BiSeq
    target: BiSeq
    germ: Germ
    groupoid: str


def groupoid_sample(s, selector, P=(), bound=6, verify=False):
    """Arrows of the requested groupoid between small-description points.

    Selectors: ``lc`` (local conjugacy), ``lcsync`` (both endpoints
    synchronizing), ``lcs``/``lcu`` (one-sided relations over the
    unstable/stable classes of the synchronizing periodic base set P).
    Arrows carry constructed germs, so the sampled relation is a sound
    under-approximation; identities and inverses are always included.
    """
    if selector not in ("lc", "lcsync", "lcs", "lcu"):
        raise ValueError(f"unknown groupoid selector {selector!r}")
    points = [x for x in enumerate_points(s, cycle_len=2, core_len=2)
              if x.description_size() <= bound and point_in_shift(s, x) == "yes"]
    arrows = []
    if selector in ("lc", "lcsync"):
        if selector == "lcsync":
            points = [x for x in points
                      if classify_point(s, x).status == "synchronizing"]
        for i, x in enumerate(points):
            arrows.append(GroupoidArrow(x, x, identity_germ(s, x, "lc"), selector))
            for y in points[i + 1:]:
                if not decide_relation(x, y, "homoclinic"):
                    continue
                try:
                    germ = construct_germ(s, x, y, "lc", verify=verify)
                except NotConstructive:
                    continue
                arrows.append(GroupoidArrow(x, y, germ, selector))
                arrows.append(GroupoidArrow(y, x, germ.inverse(), selector))
        return arrows
    kind = selector
    for base in P:
        _require_sync_periodic(s, base)
    side = "unstable" if kind == "lcs" else "stable"
    units = [x for x in points
             if any(decide_relation(x, base, side) for base in P)]
    relation = _REQUIRED_RELATION[kind]
    for i, x in enumerate(units):
        arrows.append(GroupoidArrow(x, x, identity_germ(s, x, kind), selector))
        for y in units[i + 1:]:
            if not decide_relation(x, y, relation):
                continue
            try:
                germ = construct_germ(s, x, y, kind, verify=verify)
            except NotConstructive:
                continue
            arrows.append(GroupoidArrow(x, y, germ, selector))
            arrows.append(GroupoidArrow(y, x, germ.inverse(), selector))
    return arrows
