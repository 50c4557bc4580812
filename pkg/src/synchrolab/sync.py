"""Synchronizing words and points.

A word is synchronizing when every run of it in the minimal
deterministic cover ends at the same state; a point is synchronizing
when some central word of it is synchronizing.  Synchronizing points
are exactly the points with a local product (rectangle) neighborhood,
and the non-synchronizing points form a subshift presented by the
size->=2 part of the subset automaton.
"""

from dataclasses import dataclass
from itertools import product as iproduct

from synchrolab.errors import (NotInLanguage, NotInShift, NotSynchronizing,
                               SearchExhausted, WindowTooSmall)
from synchrolab.points import (BiSeq, CylinderS, CylinderU, point_in_shift,
                               try_bracket)
from synchrolab.presentation import Presentation, trim
from synchrolab.shift import OracleShift, enumerate_words, fischer_cover


@dataclass(frozen=True)
class SyncVerdict:
    """Outcome of classifying one point.

    ``status`` is ``"synchronizing"``, ``"nonSynchronizing"``, or
    ``"unverified"``; a synchronizing verdict carries a central witness
    word ``x[-N..N]`` that is intrinsically synchronizing, with
    ``window_used = N``.
    """

    status: str
    witness: tuple = None
    window_used: int = 0


@dataclass(frozen=True)
class NonSyncReport:
    """The subshift of non-synchronizing points.

    ``finiteness`` is ``"finite"`` or ``"infinite"``; when finite,
    ``points`` lists every non-synchronizing point (all periodic) and
    ``count`` is the paper-facing cardinality m.
    """

    presentation: Presentation
    finiteness: str
    points: tuple = ()

    @property
    def count(self):
        return len(self.points) if self.finiteness == "finite" else None


def is_sync_word(s, w):
    """True iff all runs of ``w`` in the Fischer cover end at one state."""
    cover = fischer_cover(s)
    terminal = cover.run(cover.states, w)
    if not terminal:
        raise NotInLanguage(f"word {w!r} is not in the language")
    return len(terminal) == 1


def _limit_state_set(cover, x):
    """The stabilized state set after reading x's infinite past.

    Reading ever more of the left tail gives a decreasing chain of
    state sets; the limit is the fixpoint under reading one left cycle,
    pushed through the core.  Returns (limit set at the core boundary,
    number of cycle reads consumed to stabilize).
    """
    left_word = x.left_pattern_at(x.origin)
    alive = frozenset(cover.states)
    reads = 0
    while True:
        nxt = cover.run(alive, left_word)
        if nxt == alive:
            break
        alive = nxt
        reads += 1
    return cover.run(alive, x.core), reads


def classify_point(s, x, max_window=None):
    """Classifies a point as synchronizing or not, exactly.

    The limit state set along x stabilizes into a periodic subset orbit
    while reading the right tail; the point is synchronizing iff the
    orbit reaches a singleton.  When it does, the verdict carries the
    smallest central word ``x[-N..N]`` that is synchronizing.

    Oracle shifts return ``unverified``.
    """
    if isinstance(s, OracleShift):
        if point_in_shift(s, x) == "no":
            raise NotInShift("point has an inadmissible factor")
        return SyncVerdict("unverified")
    if point_in_shift(s, x) != "yes":
        raise NotInShift("point is not in the shift")
    cover = fischer_cover(s)
    current, reads = _limit_state_set(cover, x)
    pos = x.right_start
    period = len(x.right)
    seen = {(current, 0)}
    cap = pos + (max_window if max_window is not None
                 else (2 ** len(cover.states) + 1) * period + 1)
    while len(current) > 1 and pos < cap:
        current = cover.step(current, x.at(pos))
        pos += 1
        key = (current, (pos - x.right_start) % period)
        if key in seen:
            return SyncVerdict("nonSynchronizing")
        seen.add(key)
    if len(current) > 1:
        return SyncVerdict("nonSynchronizing")
    # Singleton certified within [origin - reads*|left|, pos); report the
    # smallest synchronizing central word.
    left_reach = abs(x.origin - reads * len(x.left))
    for n in range(max(abs(pos), left_reach) + 1):
        word = x.window(-n, n + 1)
        if len(cover.run(cover.states, word)) == 1:
            return SyncVerdict("synchronizing", word, n)
    raise AssertionError("synchronizing limit set without central witness")


def central_word_synchronizes(s, x, N):
    """True iff the central word ``x[1-N..N-1]`` is synchronizing."""
    if N < 2:
        return False
    return is_sync_word(s, x.window(1 - N, N))


def unstable_representatives(s, x, N, L, cycle_len=2):
    """Points of ``X^u(x, 2**-N)`` whose free future fits in window L.

    Each representative equals ``x`` on coordinates <= N-1 and continues
    with an arbitrary admissible word then a cycle; exhaustive over that
    description class.
    """
    return cylinder_representatives(s, x, N, L, cycle_len, side="u")


def stable_representatives(s, x, N, L, cycle_len=2):
    """Points of ``X^s(x, 2**-N)`` whose free past fits in window L."""
    return cylinder_representatives(s, x, N, L, cycle_len, side="s")


def cylinder_representatives(s, x, N, L, cycle_len, side):
    """Exhaustive small-description points of one cylinder of ``x``.

    ``side`` "u" freezes coordinates <= N-1 (unstable cylinder) and
    varies the future; "s" freezes coordinates >= 1-N and varies the
    past.  Free words fit in window L and close into short cycles.
    """
    symbols = tuple(s.alphabet)
    free = max(0, L - N)
    cycles = [w for n in range(1, cycle_len + 1) for w in iproduct(symbols, repeat=n)]
    words = [w for n in range(free + 1) for w in iproduct(symbols, repeat=n)]
    out = []
    seen = set()
    for u in words:
        for c in cycles:
            if side == "u":
                a = min(x.origin, N)
                y = BiSeq(x.left_pattern_at(a), x.window(a, N) + u, c, a)
            else:
                b = max(x.right_start, 1 - N)
                y = BiSeq(c, u + x.window(1 - N, b), x.right_pattern_at(b), 1 - N - len(u))
            if y in seen:
                continue
            seen.add(y)
            if point_in_shift(s, y) == "yes":
                out.append(y)
    out.sort(key=lambda p: (p.description_size(), str(p)))
    return out


def rectangle_check(s, x, N, L):
    """Verifies the local product structure at a synchronizing point.

    Brute-forces representatives of ``X^u(x, 2**-N)`` and
    ``X^s(x, 2**-N)`` with descriptions in window ``L`` and checks that
    (i) every pair brackets to a point of the shift, landing in the
    right cylinders, and (ii) ``h_x(w) = ([w,x], [x,w])`` inverts the
    bracket on the sample.

    Returns a report dict; raises on precondition failures.
    """
    verdict = classify_point(s, x)
    if verdict.status != "synchronizing":
        raise NotSynchronizing(f"point classifies {verdict.status}")
    if not central_word_synchronizes(s, x, N):
        raise NotSynchronizing(f"central word at radius {N} is not synchronizing")
    unstable = unstable_representatives(s, x, N, L)
    stable = stable_representatives(s, x, N, L)
    if not unstable or not stable:
        raise WindowTooSmall(f"no representatives fit in window {L}")
    failures = []
    pairs = 0
    for y in unstable:
        for z in stable:
            pairs += 1
            r = try_bracket(s, y, z, N)
            if r is None:
                failures.append(("bracket undefined", y, z))
                continue
            if not (CylinderS(y, N).contains(r) and CylinderU(z, N).contains(r)):
                failures.append(("bracket outside cylinders", y, z))
                continue
            back_u = try_bracket(s, r, x, N)
            back_s = try_bracket(s, x, r, N)
            if back_u != y or back_s != z:
                failures.append(("h_x does not invert", y, z))
    return {
        "point": str(x),
        "N": N,
        "L": L,
        "unstable_samples": len(unstable),
        "stable_samples": len(stable),
        "pairs": pairs,
        "failures": failures,
        "passed": not failures,
    }


def nonsync_subshift(s):
    """Presents the subshift of non-synchronizing points.

    The subset automaton of the Fischer cover restricted to state sets
    of size >= 2 reachable from the full set presents exactly the
    points none of whose factors synchronize.  The subshift is finite
    iff the trimmed graph is a disjoint union of cycles, in which case
    all its points are periodic and are enumerated.
    """
    cover = fischer_cover(s)
    full = frozenset(cover.states)
    states = set()
    edges = []
    if len(full) >= 2:
        queue = [full]
        states.add(full)
        while queue:
            current = queue.pop(0)
            for a in cover.alphabet:
                nxt = cover.step(current, a)
                if len(nxt) < 2:
                    continue
                edges.append((_name(current), a, _name(nxt)))
                if nxt not in states:
                    states.add(nxt)
                    queue.append(nxt)
    p = trim(Presentation.build([_name(v) for v in states], edges))
    if not p.states:
        return NonSyncReport(p, "finite", ())
    out_degree = {q: len(p.out_edges[q]) for q in p.states}
    in_degree = {q: len(p.in_edges[q]) for q in p.states}
    if any(out_degree[q] != 1 or in_degree[q] != 1 for q in p.states):
        return NonSyncReport(p, "infinite")
    points = set()
    remaining = set(p.states)
    while remaining:
        q0 = sorted(remaining, key=str)[0]
        labels = []
        q = q0
        while True:
            (_, a, nxt) = p.out_edges[q][0]
            labels.append(a)
            remaining.discard(q)
            q = nxt
            if q == q0:
                break
        for phase in range(len(labels)):
            points.add(BiSeq.periodic(tuple(labels), phase))
    ordered = tuple(sorted(points, key=lambda pt: (pt.description_size(), str(pt))))
    return NonSyncReport(p, "finite", ordered)


def _name(subset):
    return tuple(sorted(subset, key=str))


def close_orbit_through(cover, word):
    """A periodic point whose orbit reads ``word`` starting at 0.

    Finds a run of ``word`` and a return path in the cover, producing a
    point of the shift passing through the cylinder [word].
    """
    starts = [q for q in cover.states if cover.run({q}, word)]
    if not starts:
        raise NotInLanguage(f"no run of {word!r}")
    for q0 in sorted(starts, key=str):
        ends = sorted(cover.run({q0}, word), key=str)
        for qe in ends:
            path = _shortest_path(cover, qe, q0, allow_empty=bool(word))
            if path is not None:
                return BiSeq.periodic(word + tuple(path), 0)
    raise SearchExhausted(f"no cycle closes through {word!r}")


def _shortest_path(cover, source, target, allow_empty=True):
    """Labels of a shortest path source -> target; () if equal."""
    if source == target and allow_empty:
        return ()
    queue = [(source, ())]
    seen = {source} if allow_empty else set()
    while queue:
        q, labels = queue.pop(0)
        for (_, a, nxt) in cover.out_edges[q]:
            if nxt == target:
                return labels + (a,)
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, labels + (a,)))
    return None


def _sync_extension(cover, word):
    """Shortest ``u`` with ``word + u`` synchronizing; BFS over subsets."""
    start = cover.run(cover.states, word)
    if not start:
        raise NotInLanguage(f"no run of {word!r}")
    queue = [(start, ())]
    seen = {start}
    while queue:
        current, u = queue.pop(0)
        if len(current) == 1:
            return u
        for a in cover.alphabet:
            nxt = cover.step(current, a)
            if nxt and nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, u + (a,)))
    raise SearchExhausted(f"no synchronizing extension of {word!r}")


def sync_density_check(s, L):
    """Exhibits synchronizing points through every cylinder of length <= L.

    For each admissible word the check produces a point containing it
    whose central word is synchronizing; for oracle shifts the witness
    point is constructed by a bounded search and reported unverified.
    Returns a report with one entry per word and an overall pass flag.
    """
    entries = []
    if isinstance(s, OracleShift):
        for w in enumerate_words(s, min(L, s.window_bound)):
            entries.append(oracle_density_entry(s, w, want_sync=True))
    else:
        cover = fischer_cover(s)
        for w in enumerate_words(s, L):
            u = _sync_extension(cover, w)
            point = close_orbit_through(cover, w + u)
            verdict = classify_point(s, point)
            ok = (verdict.status == "synchronizing"
                  and point.window(0, len(w)) == tuple(w))
            entries.append({"word": w, "point": str(point), "status":
                            "yes" if ok else "no", "witness": w + u})
    return {"L": L, "entries": entries,
            "passed": all(e["status"] != "no" for e in entries)}


def oracle_density_entry(s, w, want_sync):
    """Bounded witness search for oracle shifts.

    Looks for a wrap ``u + w + v`` whose periodization is admissible in
    the oracle's window (and, when ``want_sync``, whose central word
    passes a bounded intrinsic-synchronization test).  Candidates using
    more of the alphabet are tried first, since synchronizing words in
    practice pin the presentation with rare symbols.  Status is
    ``unverified`` on success; a word is never refuted, only left
    without a witness.
    """
    candidates = []
    prefixes = [u for n in range(3) for u in iproduct(s.alphabet.symbols, repeat=n)
                if s.admits(u + w)]
    for u in prefixes:
        for v in _admissible_suffixes(s, u + w, len(w) + 2):
            cycle = u + w + v
            if cycle:
                candidates.append((u, cycle))
    candidates.sort(key=lambda c: (-len(set(c[1])), len(c[1]), c[1]))
    for u, cycle in candidates:
        point = BiSeq.periodic(cycle, -len(u) % len(cycle))
        if point_in_shift(s, point) == "no":
            continue
        if want_sync and not _apparently_sync(s, cycle):
            continue
        return {"word": w, "point": str(point), "status": "unverified",
                "witness": cycle}
    return {"word": w, "point": None, "status": "no witness found", "witness": None}


def _admissible_suffixes(s, base, depth):
    """All v with |v| <= depth and base + v admissible, shortest first."""
    queue = [()]
    while queue:
        v = queue.pop(0)
        yield v
        if len(v) < depth:
            for a in s.alphabet:
                if s.admits(base + v + (a,)):
                    queue.append(v + (a,))


def _apparently_sync(s, word, depth=4):
    """Bounded intrinsic-synchronization test for oracle shifts.

    Checks that every admissible bounded left/right extension of
    ``word`` glues: ``p + word`` and ``word + q`` admissible implies
    ``p + word + q`` admissible.  Sound only as a refutation; success
    is reported as unverified elsewhere.
    """
    lefts = [p for n in range(depth + 1) for p in iproduct(s.alphabet.symbols, repeat=n)
             if s.admits(p + word)]
    rights = [q for n in range(depth + 1) for q in iproduct(s.alphabet.symbols, repeat=n)
              if s.admits(word + q)]
    for p in lefts:
        for q in rights:
            if len(p + word + q) <= s.window_bound and not s.admits(p + word + q):
                return False
    return True
