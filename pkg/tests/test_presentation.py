"""Graph-level machinery: trimming, flags, determinization, covers."""

import pytest

from synchrolab.errors import EmptyShift, NotIrreducible, WindowExceeded
from synchrolab.presentation import (Presentation, determinize, graph_isomorphic,
                                     minimal_cover, same_language, structure_flags, trim)
from synchrolab.shift import (Alphabet, build_sft, contains_word, enumerate_words,
                              fischer_cover, full_shift, product, word)

BINARY = Alphabet(("0", "1"))


def brute_language(p, max_len):
    """Independent language oracle: BFS over explicit paths."""
    words = {()}
    frontier = [(q, ()) for q in p.states]
    for _ in range(max_len):
        nxt = []
        for (q, w) in frontier:
            for (_, a, r) in p.out_edges[q]:
                nxt.append((r, w + (a,)))
        frontier = nxt
        words.update(w for (_, w) in frontier)
    return words


def test_build_sft_golden_mean_matches_two_state_graph(golden_mean):
    p = golden_mean.presentation
    assert len(p.states) == 2
    v, w_ = ("0",), ("1",)
    assert set(p.edges) == {(v, "0", v), (v, "1", w_), (w_, "0", v)}


def test_build_sft_full_shift_single_state(full_two):
    p = full_two.presentation
    assert len(p.states) == 1
    assert len(p.edges) == 2


def test_build_sft_all_length_two_words_forbidden_is_empty():
    with pytest.raises(EmptyShift):
        build_sft(BINARY, {word("00"), word("01"), word("10"), word("11")})


def test_trim_removes_one_sided_dead_ends():
    p = Presentation.build(
        ["a", "b", "c"],
        [("a", "0", "a"), ("a", "1", "b"), ("b", "1", "c")])
    trimmed = trim(p)
    assert trimmed.states == ("a",)


def test_structure_flags_golden_and_even(golden_mean, even_shift):
    for s in (golden_mean, even_shift):
        flags = structure_flags(fischer_cover(s))
        assert flags == {"irreducible": True, "mixing": True, "period": 1}


def test_structure_flags_pure_two_cycle():
    p = Presentation.build(["a", "b"], [("a", "x", "b"), ("b", "y", "a")])
    assert structure_flags(p) == {"irreducible": True, "mixing": False, "period": 2}


def test_period_divides_every_cycle_length(even_shift, golden_mean, period_two):
    for s in (even_shift, golden_mean, period_two):
        p = fischer_cover(s)
        period = p.period
        # closed walks of length n exist only when period | n
        reach = {q: {q} for q in p.states}
        for n in range(1, 9):
            reach = {q: {r for u in reach[q] for (_, _, r) in p.out_edges[u]}
                     for q in p.states}
            if any(q in reach[q] for q in p.states):
                assert n % period == 0


def test_determinize_identity_on_deterministic(even_shift):
    p = even_shift.presentation
    d = determinize(p)
    assert d.deterministic
    assert same_language(p, d, bound=10)


def test_determinize_preserves_language_on_nondeterministic():
    # two states both carrying out-label 0 to different targets
    p = Presentation.build(
        ["a", "b"],
        [("a", "0", "a"), ("a", "0", "b"), ("b", "1", "a")])
    d = determinize(p)
    assert d.deterministic
    lang_p = brute_language(p, 8)
    lang_d = brute_language(d, 8)
    assert lang_p == lang_d


def test_determinize_full_shift_one_state(full_two):
    d = determinize(full_two.presentation)
    assert len(d.states) == 1


def test_fischer_cover_even_shift_two_states(even_shift):
    cover = fischer_cover(even_shift)
    assert len(cover.states) == 2
    # A-1->A, A-0->B, B-0->A up to renaming
    expected = Presentation.build(
        ["A", "B"], [("A", "1", "A"), ("A", "0", "B"), ("B", "0", "A")])
    assert graph_isomorphic(cover, expected)


def test_fischer_cover_golden_mean_two_states(golden_mean):
    assert len(fischer_cover(golden_mean).states) == 2


def test_fischer_cover_idempotent(even_shift, golden_mean):
    for s in (even_shift, golden_mean):
        cover = fischer_cover(s)
        again = minimal_cover(cover)
        assert graph_isomorphic(cover, again)


def test_fischer_cover_requires_irreducible():
    # two disjoint loops: reducible as a shift
    p = Presentation.build(
        ["a", "b"], [("a", "0", "a"), ("b", "1", "b")])
    with pytest.raises(NotIrreducible):
        minimal_cover(p)


def test_irreducible_cover_has_all_pairs_reachable(even_shift):
    p = fischer_cover(even_shift)
    for u in p.states:
        reached = {u}
        frontier = [u]
        while frontier:
            q = frontier.pop()
            for (_, _, r) in p.out_edges[q]:
                if r not in reached:
                    reached.add(r)
                    frontier.append(r)
        assert reached == set(p.states)


def test_contains_word_examples(golden_mean, even_shift):
    assert not contains_word(golden_mean, word("0110"))
    assert contains_word(even_shift, word("1001"))
    assert not contains_word(even_shift, word("101"))
    assert contains_word(golden_mean, ())
    assert contains_word(even_shift, ())


def test_sft_membership_agrees_with_presentation_route(golden_mean):
    # both routes: forbidden-factor scan vs cover run
    cover = fischer_cover(golden_mean)
    for w in enumerate_words(full_shift(BINARY), 8):
        by_scan = golden_mean.window_admissible(w)
        by_cover = bool(cover.run(cover.states, w))
        assert by_scan == by_cover


def test_oracle_window_exceeded(ray_oracle):
    with pytest.raises(WindowExceeded):
        contains_word(ray_oracle, word("a" * 40))


def test_product_full_shifts(full_two):
    p = product(full_two, full_two)
    assert len(p.alphabet) == 4
    assert len(fischer_cover(p).states) == 1


def test_product_flags(even_shift, golden_mean, period_two):
    from synchrolab.shift import shift_flags
    assert shift_flags(product(even_shift, golden_mean))["mixing"] is True
    mixed = shift_flags(product(even_shift, period_two))
    assert mixed["mixing"] is False


def test_product_language_is_pairwise_zip(even_shift, golden_mean, even_times_golden):
    for w in enumerate_words(even_times_golden, 4):
        left = tuple(sym.split("|")[0] for sym in w)
        right = tuple(sym.split("|")[1] for sym in w)
        assert contains_word(even_shift, left)
        assert contains_word(golden_mean, right)
    # converse spot checks
    from itertools import product as iproduct
    for lw in enumerate_words(even_shift, 3):
        for rw in enumerate_words(golden_mean, 3):
            if len(lw) != len(rw):
                continue
            zipped = tuple(f"{a}|{b}" for a, b in zip(lw, rw))
            assert contains_word(even_times_golden, zipped)
