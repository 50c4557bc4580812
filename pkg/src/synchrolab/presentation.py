"""Finite labeled-graph presentations of shift spaces.

A presentation is a finite directed multigraph whose edges carry symbol
labels.  The shift it presents is the set of bi-infinite label sequences
read along bi-infinite paths.  This module supplies the graph-level
machinery: trimming to the essential part, structural flags
(deterministic, irreducible, period, mixing), the subset-construction
determinization, follower-set reduction, and the minimal deterministic
irreducible cover of an irreducible sofic shift.

All functions are pure; presentations are immutable values with a
canonical state order so that outputs are reproducible across runs.
"""

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from synchrolab.errors import NotIrreducible


def _state_key(state):
    # Canonical sort key for possibly-heterogeneous state names.
    return (repr(type(state)), repr(state))


@dataclass(frozen=True)
class Presentation:
    """A finite labeled directed multigraph.

    Parameters
    ----------
    states : tuple
        Hashable state names in canonical (sorted) order.
    edges : tuple of (source, label, target) triples
        Multi-edges are allowed; parallel equal triples collapse.
    """

    states: tuple
    edges: tuple

    @staticmethod
    def build(states, edges):
        """Normalizes ``states``/``edges`` into canonical order."""
        states = tuple(sorted(set(states), key=_state_key))
        known = set(states)
        for (p, a, q) in edges:
            if p not in known or q not in known:
                raise ValueError(f"edge {(p, a, q)} uses an undeclared state")
        edges = tuple(sorted(set(edges), key=lambda e: (_state_key(e[0]), str(e[1]), _state_key(e[2]))))
        return Presentation(states, edges)

    @cached_property
    def alphabet(self):
        return tuple(sorted({a for (_, a, _) in self.edges}))

    @cached_property
    def out_edges(self):
        table = {q: [] for q in self.states}
        for e in self.edges:
            table[e[0]].append(e)
        return table

    @cached_property
    def in_edges(self):
        table = {q: [] for q in self.states}
        for e in self.edges:
            table[e[2]].append(e)
        return table

    @cached_property
    def deterministic(self):
        """True iff no state has two out-edges with an equal label."""
        for q in self.states:
            labels = [a for (_, a, _) in self.out_edges[q]]
            if len(labels) != len(set(labels)):
                return False
        return True

    @cached_property
    def transitions(self):
        """For deterministic presentations: ``{(state, label): target}``."""
        table = {}
        for (p, a, q) in self.edges:
            table[(p, a)] = q
        return table

    def step(self, state_set, label):
        """Image of ``state_set`` under one transition on ``label``."""
        out = set()
        for q in state_set:
            for (_, a, r) in self.out_edges[q]:
                if a == label:
                    out.add(r)
        return frozenset(out)

    def run(self, state_set, word):
        """Image of ``state_set`` after reading ``word``."""
        current = frozenset(state_set)
        for a in word:
            current = self.step(current, a)
            if not current:
                break
        return current

    def accepts(self, word):
        """True iff some path in the graph reads ``word``."""
        return bool(self.run(self.states, word))

    @cached_property
    def sccs(self):
        """Strongly connected components (Tarjan), canonically ordered."""
        index = {}
        low = {}
        on_stack = set()
        stack = []
        counter = [0]
        components = []

        successors = {q: sorted({e[2] for e in self.out_edges[q]}, key=_state_key)
                      for q in self.states}

        def connect(root):
            # Iterative Tarjan: (node, iterator position) work stack.
            work = [(root, 0)]
            while work:
                node, pos = work.pop()
                if pos == 0:
                    index[node] = low[node] = counter[0]
                    counter[0] += 1
                    stack.append(node)
                    on_stack.add(node)
                recurse = False
                succ = successors[node]
                for i in range(pos, len(succ)):
                    nxt = succ[i]
                    if nxt not in index:
                        work.append((node, i + 1))
                        work.append((nxt, 0))
                        recurse = True
                        break
                    if nxt in on_stack:
                        low[node] = min(low[node], index[nxt])
                if recurse:
                    continue
                if low[node] == index[node]:
                    component = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        component.append(w)
                        if w == node:
                            break
                    components.append(frozenset(component))
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[node])

        for q in self.states:
            if q not in index:
                connect(q)
        return tuple(sorted(components, key=lambda c: sorted(map(_state_key, c))))

    def _nontrivial_scc_states(self):
        # States lying on some cycle: member of an SCC with an internal edge.
        cyclic = set()
        for component in self.sccs:
            if any(p in component and q in component for (p, _, q) in self.edges):
                cyclic.update(component)
        return cyclic

    @cached_property
    def irreducible(self):
        """True iff the graph is strongly connected (and non-empty)."""
        return len(self.sccs) == 1 and bool(self.states)

    @cached_property
    def period(self):
        """gcd of all cycle lengths; 0 for an acyclic graph.

        Computed per SCC by the standard level-gcd argument and combined
        across SCCs, so it divides the length of every cycle.
        """
        overall = 0
        for component in self.sccs:
            inner = [(p, q) for (p, _, q) in self.edges if p in component and q in component]
            if not inner:
                continue
            adjacency = {}
            for (p, q) in inner:
                adjacency.setdefault(p, set()).add(q)
            root = min(component, key=_state_key)
            level = {root: 0}
            queue = [root]
            g = 0
            while queue:
                p = queue.pop(0)
                for q in sorted(adjacency.get(p, ()), key=_state_key):
                    if q not in level:
                        level[q] = level[p] + 1
                        queue.append(q)
                    else:
                        g = gcd(g, level[p] + 1 - level[q])
            overall = gcd(overall, abs(g))
        return overall

    @cached_property
    def mixing(self):
        return self.irreducible and self.period == 1

    def renamed(self, mapping=None):
        """Canonically renames states to ``s0, s1, ...`` (sorted order)."""
        if mapping is None:
            mapping = {q: f"s{i}" for i, q in enumerate(self.states)}
        return Presentation.build(
            [mapping[q] for q in self.states],
            [(mapping[p], a, mapping[q]) for (p, a, q) in self.edges],
        )


def trim(p):
    """Restricts ``p`` to states lying on some bi-infinite path.

    A state survives iff it both reaches a cycle and is reached from a
    cycle; one-sided dead ends present no bi-infinite sequences.
    """
    cyclic = p._nontrivial_scc_states()
    forward = set(cyclic)
    changed = True
    while changed:
        changed = False
        for (src, _, dst) in p.edges:
            if dst in forward and src not in forward:
                forward.add(src)
                changed = True
    backward = set(cyclic)
    changed = True
    while changed:
        changed = False
        for (src, _, dst) in p.edges:
            if src in backward and dst not in backward:
                backward.add(dst)
                changed = True
    alive = forward & backward
    return Presentation.build(
        [q for q in p.states if q in alive],
        [e for e in p.edges if e[0] in alive and e[2] in alive],
    )


def structure_flags(p):
    """Structural flags of a trimmed presentation.

    Returns
    -------
    dict with keys ``irreducible``, ``mixing``, ``period``.
    """
    return {"irreducible": p.irreducible, "mixing": p.mixing, "period": p.period}


def determinize(p):
    """Subset-construction determinization, preserving the language.

    States of the result are the non-empty subsets of ``p``'s states
    reachable from the full state set; the result is trimmed.  Membership
    of every finite word agrees between input and output.
    """
    if not p.states:
        return p
    start = frozenset(p.states)
    alphabet = p.alphabet
    seen = {start}
    queue = [start]
    edges = []
    while queue:
        current = queue.pop(0)
        for a in alphabet:
            nxt = p.step(current, a)
            if not nxt:
                continue
            edges.append((_subset_name(current), a, _subset_name(nxt)))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    out = Presentation.build([_subset_name(s) for s in seen], edges)
    return trim(out)


def _subset_name(subset):
    return tuple(sorted(subset, key=_state_key))


def follower_partition(p):
    """Partition of states by equality of follower languages.

    Works on a deterministic (partial) presentation by Moore refinement
    against an implicit dead state.
    """
    if not p.deterministic:
        raise ValueError("follower_partition requires a deterministic presentation")
    alphabet = p.alphabet
    block = {q: 0 for q in p.states}
    while True:
        signatures = {}
        for q in p.states:
            sig = (block[q],)
            for a in alphabet:
                target = p.transitions.get((q, a))
                sig += ((a, None if target is None else block[target]),)
            signatures[q] = sig
        relabel = {}
        new_block = {}
        for q in p.states:
            sig = signatures[q]
            if sig not in relabel:
                relabel[sig] = len(relabel)
            new_block[q] = relabel[sig]
        if new_block == block:
            break
        block = new_block
    classes = {}
    for q in p.states:
        classes.setdefault(block[q], []).append(q)
    return [tuple(sorted(members, key=_state_key)) for members in classes.values()]


def merge_followers(p):
    """Merges follower-equivalent states of a deterministic presentation."""
    classes = follower_partition(p)
    representative = {}
    for members in classes:
        name = members if len(members) > 1 else members[0]
        for q in members:
            representative[q] = name
    return Presentation.build(
        set(representative.values()),
        {(representative[src], a, representative[dst]) for (src, a, dst) in p.edges},
    )


def terminal_component(p):
    """The unique terminal SCC of ``p``.

    Raises
    ------
    NotIrreducible
        If the SCC condensation has more than one sink.
    """
    terminal = []
    for component in p.sccs:
        if all(dst in component for (src, _, dst) in p.edges if src in component):
            terminal.append(component)
    if len(terminal) != 1:
        raise NotIrreducible(f"{len(terminal)} terminal components; shift is not irreducible")
    keep = terminal[0]
    return Presentation.build(
        [q for q in p.states if q in keep],
        [e for e in p.edges if e[0] in keep and e[2] in keep],
    )


def minimal_cover(p):
    """Minimal deterministic irreducible presentation of ``p``'s language.

    Determinize, trim, merge equal-follower states, then restrict to the
    unique terminal strongly-connected component.  For an irreducible
    sofic shift this is its Fischer cover, unique up to state renaming.
    Raises ``NotIrreducible`` when the shift fails the construction's
    sanity checks (multiple terminal components, or a terminal component
    presenting a strictly smaller language).
    """
    det = determinize(p)
    merged = merge_followers(det)
    core = terminal_component(trim(merged))
    if not same_language(det, core, bound=2 * (len(det.states) + len(core.states)) + 2):
        raise NotIrreducible("terminal component presents a proper sublanguage")
    return core.renamed()


def same_language(p1, p2, bound):
    """True iff ``p1`` and ``p2`` accept the same words of length <= bound."""
    pair = (frozenset(p1.states), frozenset(p2.states))
    seen = {pair}
    queue = [(pair, 0)]
    alphabet = sorted(set(p1.alphabet) | set(p2.alphabet))
    while queue:
        (s1, s2), depth = queue.pop(0)
        if bool(s1) != bool(s2):
            return False
        if depth >= bound:
            continue
        for a in alphabet:
            nxt = (p1.step(s1, a), p2.step(s2, a))
            if nxt == (frozenset(), frozenset()):
                continue
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, depth + 1))
    return True


def graph_isomorphic(p1, p2):
    """Label-respecting graph isomorphism by brute force over small graphs."""
    if len(p1.states) != len(p2.states) or len(p1.edges) != len(p2.edges):
        return False
    from itertools import permutations

    targets = list(p2.states)
    for perm in permutations(targets):
        mapping = dict(zip(p1.states, perm))
        mapped = {(mapping[p], a, mapping[q]) for (p, a, q) in p1.edges}
        if mapped == set(p2.edges):
            return True
    return False
