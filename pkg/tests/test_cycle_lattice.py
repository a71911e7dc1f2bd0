import json
from functools import lru_cache

import pytest

import tubelat as tl
from tubelat import cycle_lattice as cl
from tubelat import gtree as gt
from helpers import closure_leq, graph, load_fixture, poset, tubings


def tubing_from(obj) -> tl.Tubing:
    return tl.tubing_from_json(json.dumps(obj))


@lru_cache(maxsize=None)
def order_trio():
    fx = load_fixture("cycle8_order_trio.json")
    c8 = graph("cycle", 8)
    return {name: tl.tubing_of(c8, gt.gtree_from_json(json.dumps(fx[name])))
            for name in ("j", "k", "l")}, fx["relations"]


# --- order tests --------------------------------------------------------------

def test_leq_cycle_trio():
    trio, rel = order_trio()
    assert cl.leq_cycle(trio["k"], trio["j"]) == rel["k_leq_j"]
    assert cl.leq_cycle(trio["j"], trio["k"]) == rel["j_leq_k"]
    assert cl.leq_cycle(trio["l"], trio["j"]) == rel["l_leq_j"]
    assert cl.leq_cycle(trio["j"], trio["l"]) == rel["j_leq_l"]
    assert cl.leq_cycle(trio["l"], trio["k"]) == rel["l_leq_k"]
    assert cl.leq_cycle(trio["k"], trio["l"]) == rel["k_leq_l"]


def test_leq_cycle_is_reflexive():
    for t in tubings("cycle", 5):
        assert cl.leq_cycle(t, t)


def test_leq_cycle_equals_flip_closure():
    for n in (3, 4, 5):
        elems, leq = closure_leq("cycle", n)
        for a in elems:
            for b in elems:
                assert cl.leq_cycle(a, b) == leq(a, b)


def test_leq_path_minimum_below_everything():
    lo = tl.minimum_tubing(graph("path", 5))
    for t in tubings("path", 5):
        assert cl.leq_path(lo, t)


def test_leq_path_equals_flip_closure():
    elems, leq = closure_leq("path", 5)
    for a in elems:
        for b in elems:
            assert cl.leq_path(a, b) == leq(a, b)


def test_leq_path_direction_on_the_pentagon():
    p3 = graph("path", 3)
    lower = tl.Tubing.of(p3, [{2}, {2, 3}, {1, 2, 3}])
    upper = tl.Tubing.of(p3, [{3}, {2, 3}, {1, 2, 3}])
    assert cl.leq_path(lower, upper)
    assert not cl.leq_path(upper, lower)
    # cross-check against the flip closure
    elems, leq = closure_leq("path", 3)
    assert leq(lower, upper) and not leq(upper, lower)


def test_leq_path_antisymmetry_via_inversions():
    elems = tubings("path", 5)
    for a in elems:
        for b in elems:
            both = cl.leq_path(a, b) and cl.leq_path(b, a)
            assert both == (a == b)


def test_order_rejects_mismatched_inputs():
    with pytest.raises(ValueError):
        cl.leq_cycle(tubings("cycle", 4)[0], tubings("cycle", 5)[0])
    with pytest.raises(ValueError):
        cl.leq_cycle(tubings("path", 4)[0], tubings("path", 4)[0])


# --- cut ------------------------------------------------------------------------

def test_cut_nine_vertex_example():
    fx = load_fixture("cycle9_cut_sew.json")
    j = tubing_from(fx["tubing"])
    assert tl.tubing_to_json(cl.cut(j)) == json.dumps(
        fx["cut_tubing"], sort_keys=True, separators=(",", ":"))


def test_cut_six_vertex_example():
    fx = load_fixture("cycle6_cut_example.json")
    j = tubing_from(fx["tubing"])
    assert tl.tubing_to_json(cl.cut(j)) == json.dumps(
        fx["cut_tubing"], sort_keys=True, separators=(",", ":"))


def test_cut_of_minimum_is_minimum():
    for n in (3, 5, 7):
        assert cl.cut(tl.minimum_tubing(graph("cycle", n))) == \
            tl.minimum_tubing(graph("path", n))


def test_cut_tree_is_the_unzipping():
    for n in (4, 5, 6):
        cg, pg = graph("cycle", n), graph("path", n)
        for j in tubings("cycle", n):
            tree = tl.gtree_of(cg, j)
            m = tree.root
            unzipped = tl.gtree_of(pg, cl.cut(j))
            for v in range(1, n + 1):
                if v == m:
                    continue
                p = tree.parent[v]
                while p != m and (p < m) != (v < m):
                    p = tree.parent[p]
                assert unzipped.parent[v] == p


def test_cut_maps_down_sets_to_down_sets():
    for n in (4, 5):
        cg = graph("cycle", n)
        for j in tubings("cycle", n):
            x = cl.cut(j)
            m = j.top(cg.full_mask)
            low = (1 << (m - 1)) - 1
            high = cg.full_mask & ~((1 << m) - 1)
            for v in range(1, n + 1):
                dj = j.down(v)
                want = dj if v == m else dj & (low if v < m else high)
                assert x.down(v) == want


def test_cut_is_order_preserving():
    for n in (4, 5):
        elems = tubings("cycle", n)
        for a in elems:
            for b in elems:
                if cl.leq_cycle(a, b):
                    assert cl.leq_path(cl.cut(a), cl.cut(b))


def test_cut_commutes_with_reversal():
    for n in (4, 5, 6):
        for j in tubings("cycle", n):
            assert cl.cut(tl.relabel_reverse(j)) == \
                tl.relabel_reverse(cl.cut(j))


# --- sew and fibers -------------------------------------------------------------

def test_sew_round_trip_example():
    fx = load_fixture("cycle9_cut_sew.json")
    x = tubing_from(fx["cut_tubing"])
    j = cl.sew(x, cl.parse_word(fx["sew_word"]))
    assert tl.tubing_to_json(j) == json.dumps(
        fx["tubing"], sort_keys=True, separators=(",", ":"))
    assert cl.word_of(j).serialize() == fx["sew_word"]


def test_fiber_words_example():
    fx = load_fixture("cycle9_cut_sew.json")
    x = tubing_from(fx["cut_tubing"])
    assert [w.serialize() for w in cl.fiber_words(x)] == fx["fiber_words"]
    assert len(cl.fiber(x)) == 6


def test_singleton_fiber_when_a_zipper_is_empty():
    n = 5
    pg = graph("path", n)
    chain = tl.minimum_tubing(pg)  # rooted at n, right zipper empty
    words = cl.fiber_words(chain)
    assert len(words) == 1 and words[0].word == tuple(range(1, n))
    assert cl.cut(cl.sew(chain, words[0])) == chain


def test_cut_after_sew_is_identity_everywhere():
    import math
    for n in (3, 4, 5):
        total = 0
        for x in tubings("path", n):
            left, right = tl.zippers(tl.gtree_of(x.graph, x))
            words = cl.fiber_words(x)
            assert len(words) == math.comb(len(left) + len(right), len(left))
            for w in words:
                assert cl.cut(cl.sew(x, w)) == x
            total += len(words)
        assert total == math.comb(2 * n - 2, n - 1)


def test_sew_maps_down_sets_to_down_sets():
    for n in (4, 5):
        for x in tubings("path", n):
            for w in cl.fiber_words(x):
                j = cl.sew(x, w)
                prefix = 0
                image = {}
                for v in w.word:
                    prefix |= x.down(v)
                    image[v] = prefix
                for v in range(1, n + 1):
                    assert j.down(v) == image.get(v, x.down(v))


def test_sew_tree_extends_base_relations_by_the_word_chain():
    for x in tubings("path", 5):
        base_tree = tl.gtree_of(x.graph, x)
        for w in cl.fiber_words(x):
            tree = tl.gtree_of(graph("cycle", 5), cl.sew(x, w))
            for v in range(1, 6):
                assert tree.down_masks[v] & base_tree.down_masks[v] == \
                    base_tree.down_masks[v]
            for a, b in zip(w.word, w.word[1:]):
                assert tree.below(a, b)


def test_fiber_order_is_the_weak_order_on_words():
    # covers inside a fiber are exactly adjacent left/right transpositions
    c5 = graph("cycle", 5)
    for x in tubings("path", 5):
        left, _ = tl.zippers(tl.gtree_of(x.graph, x))
        leftset = set(left)
        words = cl.fiber_words(x)
        elems = [cl.sew(x, w) for w in words]
        for a, wa in zip(elems, words):
            for b, wb in zip(elems, words):
                is_cover = tl.covers(c5, a, b)
                swaps = [i for i in range(len(wa.word) - 1)
                         if wa.word[i] in leftset
                         and wb.word[i] == wa.word[i + 1]
                         and wb.word[i + 1] == wa.word[i]
                         and wa.word[:i] == wb.word[:i]
                         and wa.word[i + 2:] == wb.word[i + 2:]]
                assert is_cover == bool(swaps)


def test_shuffle_word_validation():
    fx = load_fixture("cycle9_cut_sew.json")
    x = tubing_from(fx["cut_tubing"])
    with pytest.raises(ValueError):
        cl.ShuffleWord.of(x, (1, 3, 9))  # not all letters
    with pytest.raises(ValueError):
        cl.ShuffleWord.of(x, (3, 1, 9, 7))  # left letters out of order
    with pytest.raises(ValueError):
        cl.ShuffleWord.of(x, (1, 3, 7, 9))  # right letters out of order
    assert cl.parse_word("9,13,7") == (9, 13, 7)
    assert cl.parse_word("9137") == (9, 1, 3, 7)


# --- lift ------------------------------------------------------------------------

def test_lift_at_the_base_is_identity():
    for j in tubings("cycle", 5):
        assert cl.lift(j, cl.cut(j)) == j


def test_lift_is_least_fiber_element_above():
    for n in (4, 5):
        for j in tubings("cycle", n):
            cj = cl.cut(j)
            for x in tubings("path", n):
                if not cl.leq_path(cj, x):
                    continue
                lifted = cl.lift(j, x)
                above = [k for k in cl.fiber(x) if cl.leq_cycle(j, k)]
                least = [k for k in above
                         if all(cl.leq_cycle(k, o) for o in above)]
                assert least == [lifted]


def test_lift_is_independent_of_the_chain():
    # every saturated chain of cover steps produces the same element
    def lifts_over_all_chains(j, base, x, target_inv):
        if base == x:
            return {j.tube_masks}
        out = set()
        word = cl._word_over(j, base).word
        g = tl.gtree_of(base.graph, base)
        for g2, u, v, _ in cl._cover_moves(base):
            inv2, _ = gt.inversion_masks(g2)
            if inv2 & ~target_inv:
                continue
            upper = tl.tubing_of(base.graph, g2)
            nxt = cl.sew(upper, cl._surgered_word(word, u, v, base, g))
            out |= lifts_over_all_chains(nxt, upper, x, target_inv)
        return out

    for n in (4, 5):
        for j in tubings("cycle", n):
            cj = cl.cut(j)
            for x in tubings("path", n):
                if not cl.leq_path(cj, x):
                    continue
                target_inv, _ = gt.inversion_masks(tl.gtree_of(x.graph, x))
                results = lifts_over_all_chains(j, cj, x, target_inv)
                assert results == {cl.lift(j, x).tube_masks}


def test_lift_requires_comparable_cut():
    c5 = graph("cycle", 5)
    hi = tl.relabel_reverse(tl.minimum_tubing(c5))
    lo_path = tl.minimum_tubing(graph("path", 5))
    with pytest.raises(ValueError):
        cl.lift(hi, lo_path)


# --- shuffle joins ---------------------------------------------------------------

def test_shuffle_join_examples():
    fx = load_fixture("cycle9_cut_sew.json")
    x = tubing_from(fx["cut_tubing"])
    w = {s: cl.ShuffleWord.of(x, cl.parse_word(s)) for s in fx["fiber_words"]}
    assert cl.shuffle_join(x, w["1937"], w["9137"]) == w["9137"]
    assert cl.shuffle_join(x, w["1973"], w["9137"]) == w["9173"]
    for s, word in w.items():
        assert cl.shuffle_join(x, word, word) == word
        assert cl.shuffle_meet(x, word, word) == word


def test_shuffle_join_and_meet_match_the_fiber_order():
    for x in tubings("path", 5):
        words = cl.fiber_words(x)
        elems = {w: cl.sew(x, w) for w in words}
        for w1 in words:
            for w2 in words:
                jw = cl.shuffle_join(x, w1, w2)
                ubs = [w for w in words
                       if cl.leq_cycle(elems[w1], elems[w])
                       and cl.leq_cycle(elems[w2], elems[w])]
                least = [w for w in ubs
                         if all(cl.leq_cycle(elems[w], elems[o]) for o in ubs)]
                assert least == [jw]
                mw = cl.shuffle_meet(x, w1, w2)
                lbs = [w for w in words
                       if cl.leq_cycle(elems[w], elems[w1])
                       and cl.leq_cycle(elems[w], elems[w2])]
                greatest = [w for w in lbs
                            if all(cl.leq_cycle(elems[o], elems[w])
                                   for o in lbs)]
                assert greatest == [mw]


# --- joins and meets --------------------------------------------------------------

def test_join_path_identities():
    lo = tl.minimum_tubing(graph("path", 5))
    for y in tubings("path", 5):
        assert cl.join_path(lo, y) == y
        assert cl.meet_path(lo, y) == lo


def test_join_path_matches_poset_oracle():
    from tubelat import lattice_analysis as la
    for n in (4, 5, 6):
        p = poset("path", n)
        elems = p.objects
        for a in range(len(elems)):
            for b in range(a, len(elems)):
                j = cl.join_path(elems[a], elems[b])
                m = cl.meet_path(elems[a], elems[b])
                assert p.keys.index(j.key()) == p.join_table[a][b]
                assert p.keys.index(m.key()) == p.meet_table[a][b]


def test_path_meet_is_reversed_join():
    for n in (4, 5):
        elems = tubings("path", n)
        for a in elems:
            for b in elems:
                assert cl.meet_path(a, b) == tl.relabel_reverse(
                    cl.join_path(tl.relabel_reverse(a), tl.relabel_reverse(b)))


def test_join_cycle_identities():
    c5 = graph("cycle", 5)
    lo = tl.minimum_tubing(c5)
    for k in tubings("cycle", 5):
        assert cl.join_cycle(lo, k) == k
        assert cl.join_cycle(k, k) == k
        assert cl.meet_cycle(lo, k) == lo


def test_join_cycle_matches_poset_oracle():
    for n in (3, 4, 5):
        p = poset("cycle", n)
        elems = p.objects
        index = {t.tube_masks: i for i, t in enumerate(elems)}
        for a in range(len(elems)):
            for b in range(a, len(elems)):
                j = cl.join_cycle(elems[a], elems[b])
                m = cl.meet_cycle(elems[a], elems[b])
                assert index[j.tube_masks] == p.join_table[a][b]
                assert index[m.tube_masks] == p.meet_table[a][b]


def test_cut_is_a_quotient_of_joins_and_meets():
    for n in (4, 5):
        elems = tubings("cycle", n)
        for a in elems:
            for b in elems:
                assert cl.cut(cl.join_cycle(a, b)) == \
                    cl.join_path(cl.cut(a), cl.cut(b))
                assert cl.cut(cl.meet_cycle(a, b)) == \
                    cl.meet_path(cl.cut(a), cl.cut(b))
