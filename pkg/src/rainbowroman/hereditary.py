"""Forbidden-induced-subgraph recognition and hereditary parameter checks.

Two characterizations drive this module.  A graph and all of its induced
subgraphs have equal 2-rainbow and Roman weights exactly when the graph
contains no induced P5, C5, or C4.  And every induced subgraph H with
2-rainbow weight at least 3 attains the extreme ratio 2*gamma_R = 3*gamma_r2
exactly when the graph contains no induced empty triple or K2 + K1; the
non-complete graphs in that family all have 2-rainbow weight exactly 2.
The *_direct functions check the defining property by sheer enumeration
of induced subgraphs, so they are the oracle side of each equivalence.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .domination import (RainbowAssignment, SolveResult, all_min_2rdf,
                         gamma_r2, gamma_roman)
from .graph import (Graph, bits, canonical_form, complete_graph, cycle_graph,
                    disjoint_union, empty_graph, from_edge_mask, graph_from_edges,
                    induced_subgraph, path_graph)

HAS_INDUCED_PATTERN_CAP = 6
DIRECT_CHECK_ORDER_CAP = 8

# Hereditary equality of the two parameters <=> none of these induced.
EQUALITY_FAMILY: tuple[tuple[str, Graph], ...] = (
    ("P5", path_graph(5)),
    ("C5", cycle_graph(5)),
    ("C4", cycle_graph(4)),
)

# Hereditary 3/2 ratio above weight 2 <=> none of these induced.
THREE_HALVES_FAMILY: tuple[tuple[str, Graph], ...] = (
    ("K3bar", empty_graph(3)),
    ("K2+K1", disjoint_union(complete_graph(2), complete_graph(1))),
)

PRESET_FAMILIES = {
    "theorem2": EQUALITY_FAMILY,
    "theorem3": THREE_HALVES_FAMILY,
}


@lru_cache(maxsize=None)
def _canonical_by_mask(order: int, mask: int) -> bytes:
    return canonical_form(from_edge_mask(order, mask))


@lru_cache(maxsize=None)
def _solved_by_mask(order: int, mask: int) -> tuple[SolveResult, SolveResult]:
    g = from_edge_mask(order, mask)
    return gamma_r2(g), gamma_roman(g)


def solve_both_cached(g: Graph) -> tuple[SolveResult, SolveResult]:
    """(2-rainbow, Roman) solves memoized by labelled structure.

    The cache pays off when many graphs share induced subgraphs, as in
    the exhaustive scans; isolated calls go straight to the solvers.
    """
    return _solved_by_mask(g.order, _mask_key(g))


def _mask_key(g: Graph) -> int:
    mask = 0
    i = 0
    for u in range(g.order):
        row = g.adjacency[u]
        for v in range(u + 1, g.order):
            if (row >> v) & 1:
                mask |= 1 << i
            i += 1
    return mask


def _induced_mask(g: Graph, subset: tuple[int, ...]) -> int:
    mask = 0
    i = 0
    for a in range(len(subset)):
        row = g.adjacency[subset[a]]
        for b in range(a + 1, len(subset)):
            if (row >> subset[b]) & 1:
                mask |= 1 << i
            i += 1
    return mask


def has_induced(g: Graph, h: Graph) -> bool:
    """True iff some induced subgraph of g is isomorphic to h (order(h) <= 6)."""
    k = h.order
    if k > HAS_INDUCED_PATTERN_CAP:
        raise ValueError(f"pattern order is capped at {HAS_INDUCED_PATTERN_CAP}")
    if k > g.order:
        return False
    target = canonical_form(h)
    for subset in itertools.combinations(range(g.order), k):
        if _canonical_by_mask(k, _induced_mask(g, subset)) == target:
            return True
    return False


def is_free(g: Graph, family) -> bool:
    """True iff g has no induced copy of any pattern in the family.

    ``family`` is an iterable of (name, Graph) pairs or bare Graphs.
    """
    return find_induced_member(g, family) is None


def find_induced_member(g: Graph, family) -> str | None:
    """Name of the first family pattern appearing induced in g, else None."""
    for entry in family:
        name, h = entry if isinstance(entry, tuple) else (None, entry)
        if has_induced(g, h):
            return name if name is not None else f"order-{h.order} pattern"
    return None


def hereditary_equality_direct(g: Graph) -> bool:
    """True iff every induced subgraph has equal 2-rainbow and Roman weights.

    All 2^n vertex subsets are enumerated, so the order is capped at 8.
    """
    n = g.order
    if n > DIRECT_CHECK_ORDER_CAP:
        raise ValueError(f"direct hereditary check is capped at order {DIRECT_CHECK_ORDER_CAP}")
    verts = list(range(n))
    for k in range(n + 1):
        for subset in itertools.combinations(verts, k):
            r2, roman = _solved_by_mask(k, _induced_mask(g, subset))
            if r2.value != roman.value:
                return False
    return True


def hereditary_three_halves_direct(g: Graph, k: int) -> bool:
    """True iff every induced subgraph with 2-rainbow weight >= k attains
    the extreme ratio 2*gamma_R == 3*gamma_r2.  Order capped at 8."""
    n = g.order
    if n > DIRECT_CHECK_ORDER_CAP:
        raise ValueError(f"direct hereditary check is capped at order {DIRECT_CHECK_ORDER_CAP}")
    verts = list(range(n))
    for size in range(n + 1):
        for subset in itertools.combinations(verts, size):
            r2, roman = _solved_by_mask(size, _induced_mask(g, subset))
            if r2.value >= k and 2 * roman.value != 3 * r2.value:
                return False
    return True


_SOLVER_CODE_RANK = {3: 0, 1: 1, 2: 2, 0: 3}


def canonical_min_2rdf(g: Graph) -> RainbowAssignment:
    """The distinguished minimum 2-rainbow function: maximize the number
    of {1,2} codes, break ties by the solver's code preference order
    {1,2} < {1} < {2} < {}.

    On a graph with no induced P5, C5, or C4, reading this function as
    {} -> 0, singleton -> 1, {1,2} -> 2 always yields a Roman dominating
    function of the same weight.
    """
    funcs = all_min_2rdf(g)
    best_count = max(sum(1 for c in f.codes if c == 3) for f in funcs)
    pool = [f for f in funcs if sum(1 for c in f.codes if c == 3) == best_count]
    return min(pool, key=lambda f: tuple(_SOLVER_CODE_RANK[c] for c in f.codes))


def rainbow_as_roman_codes(f: RainbowAssignment) -> tuple[int, ...]:
    """The {}->0, singleton->1, {1,2}->2 reading of a rainbow assignment."""
    return tuple(0 if c == 0 else 1 if c in (1, 2) else 2 for c in f.codes)
