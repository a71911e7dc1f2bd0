"""Shared test utilities: independent brute-force oracles and cached posets.

The oracles here deliberately avoid the production code paths they check:
flip replacements are found by exhaustive search over all tubes, maximality
by literal extension search, and order relations by breadth-first closure
of the cover predicate evaluated on every ordered pair.
"""

import json
from functools import lru_cache
from pathlib import Path

import tubelat as tl
from tubelat import graph_core as gc
from tubelat import lattice_analysis as la

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str):
    with open(FIXTURES / name, "r", encoding="utf-8") as fh:
        return json.load(fh)


@lru_cache(maxsize=None)
def graph(kind: str, n: int):
    return tl.make_graph(kind, n)


@lru_cache(maxsize=None)
def tubings(kind: str, n: int):
    return tl.enumerate_maximal_tubings(graph(kind, n))


@lru_cache(maxsize=None)
def poset(kind: str, n: int) -> la.FinitePoset:
    return la.build_poset(graph(kind, n))


def oracle_flip_replacements(g, t, xmask):
    """Every tube y != x making (t minus x) plus y a maximal tubing."""
    out = []
    rest = [m for m in t.tube_masks if m != xmask]
    for y in gc.all_tubes(g):
        if y != xmask and tl.is_maximal_tubing(g, rest + [y]):
            out.append(y)
    return out


def oracle_is_maximal(g, masks):
    """Literal maximality: pairwise compatible and no tube can be added."""
    masks = list(masks)
    if len(set(masks)) != len(masks):
        return False
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not gc.compatible(g, masks[i], masks[j]):
                return False
    for y in gc.all_tubes(g):
        if y not in masks and all(gc.compatible(g, y, m) for m in masks):
            return False
    return True


@lru_cache(maxsize=None)
def closure_order(kind: str, n: int):
    """Reachability of the cover relation, built from the covers predicate.

    Returns (elements, up) with up[i] a bit mask over element indices.
    """
    g = graph(kind, n)
    elems = tubings(kind, n)
    size = len(elems)
    succ = [[] for _ in range(size)]
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if i != j and tl.covers(g, a, b):
                succ[i].append(j)
    up = [1 << i for i in range(size)]
    changed = True
    while changed:
        changed = False
        for i in range(size):
            m = up[i]
            for j in succ[i]:
                m |= up[j]
            if m != up[i]:
                up[i] = m
                changed = True
    return elems, up


def closure_leq(kind: str, n: int):
    elems, up = closure_order(kind, n)
    index = {t.tube_masks: i for i, t in enumerate(elems)}

    def leq(a, b):
        return bool(up[index[a.tube_masks]] & (1 << index[b.tube_masks]))

    return elems, leq
