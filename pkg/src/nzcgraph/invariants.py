"""Exact graph invariants, each paired with its closed-form claim."""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field as dc_field

from .errors import CapExceeded
from .ffield import FiniteField
from .graph import (
    ClassGraph,
    ExplicitGraph,
    bit_indices,
    class_graph,
    degree_formula,
    degree_histogram,
    edge_count_formula,
    explicit_graph,
)
from .vspace import EXPLICIT_CAP, rank

INDEPENDENCE_CAP = 255
DOMINATION_CAP = 16
ENUMERATION_CAP = 64
CLASS_BFS_CAP = 1023

INFINITE = math.inf

PASS, FAIL, SKIPPED, NOT_APPLICABLE = "pass", "fail", "skipped", "not-applicable"


# -- diameter ---------------------------------------------------------------

def _explicit_diameter(g: ExplicitGraph):
    size = g.vertex_count
    if size <= 1:
        return 0
    everything = g.all_vertices
    worst = 0
    for s in range(size):
        seen = 1 << s
        frontier = seen
        dist = 0
        while seen != everything:
            reach = seen
            for v in bit_indices(frontier):
                reach |= g.rows[v]
                if reach == everything:
                    break
            frontier = reach & ~seen
            if not frontier:
                return INFINITE
            seen |= frontier
            dist += 1
        worst = max(worst, dist)
    return worst


def _class_diameter(cg: ClassGraph):
    classes = cg.classes
    if cg.vertex_count <= 1:
        return 0
    if len(classes) > CLASS_BFS_CAP:
        # Every non-empty mask is a class, so disjoint S, T are joined through S|T.
        singletons = [m for m, _ in classes if m.bit_count() == 1]
        return 2 if len(singletons) >= 2 else 1
    count = len(classes)
    nbrs = []
    for mask, _ in classes:
        bits = 0
        for j, (other, _) in enumerate(classes):
            if other & mask:
                bits |= 1 << j
        nbrs.append(bits)
    everything = (1 << count) - 1
    worst = 0
    for s in range(count):
        seen = frontier = 1 << s
        dist = 0
        # distinct members of one class are adjacent
        if classes[s][1] >= 2:
            worst = max(worst, 1)
        while seen != everything:
            reach = 0
            for v in bit_indices(frontier):
                reach |= nbrs[v]
            frontier = reach & ~seen
            if not frontier:
                return INFINITE
            seen |= frontier
            dist += 1
        worst = max(worst, dist)
    return worst


def diameter(g: ExplicitGraph | ClassGraph):
    """Largest distance between two vertices; ``math.inf`` if disconnected."""
    if isinstance(g, ClassGraph):
        return _class_diameter(g)
    return _explicit_diameter(g)


# -- completeness -----------------------------------------------------------

def is_complete(g: ExplicitGraph | ClassGraph) -> bool:
    if isinstance(g, ClassGraph):
        masks = [m for m, _ in g.classes]
        singletons = [m for m in masks if m.bit_count() == 1]
        if len(singletons) >= 2:
            return False
        return all(a & b for a, b in itertools.combinations(masks, 2))
    full = g.vertex_count - 1
    return all(d == full for d in g.degrees())


# -- independence -----------------------------------------------------------

def _clique_cover_bound(g: ExplicitGraph, candidates: int) -> int:
    """Number of cliques in a greedy partition of ``candidates``."""
    cliques = 0
    while candidates:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        pool = candidates & g.rows[v]
        while pool:
            low = pool & -pool
            u = low.bit_length() - 1
            candidates ^= low
            pool &= g.rows[u]
            pool &= ~low
        cliques += 1
    return cliques


def _greedy_independent(g: ExplicitGraph) -> list[int]:
    chosen, candidates = [], g.all_vertices
    while candidates:
        low = candidates & -candidates
        v = low.bit_length() - 1
        chosen.append(v)
        candidates &= ~(g.rows[v] | low)
    return chosen


def maximum_independent_set(g: ExplicitGraph, cap: int = INDEPENDENCE_CAP) -> list[int]:
    """Branch and bound; returns the lexicographically first maximum set found."""
    if g.vertex_count > cap:
        raise CapExceeded("independence", cap, g.vertex_count)
    best = _greedy_independent(g)

    def search(chosen: list[int], candidates: int):
        nonlocal best
        if not candidates:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + _clique_cover_bound(g, candidates) <= len(best):
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        chosen.append(v)
        search(chosen, candidates & ~(g.rows[v] | low))
        chosen.pop()
        search(chosen, candidates ^ low)

    search([], g.all_vertices)
    return sorted(best)


def independence_number(g: ExplicitGraph | ClassGraph, cap: int = INDEPENDENCE_CAP) -> int:
    if isinstance(g, ClassGraph):
        # Same-support vertices are adjacent, so an independent set takes at most one
        # vertex per class, from classes with pairwise disjoint masks; the singleton
        # masks are such a family and no family of disjoint non-empty masks is larger.
        return sum(1 for m, _ in g.classes if m.bit_count() == 1)
    return len(maximum_independent_set(g, cap))


def is_independent(g: ExplicitGraph, vertices) -> bool:
    vs = list(vertices)
    return all(not g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


def enumerate_independent_sets(
    g: ExplicitGraph, max_size: int | None = None, cap: int = ENUMERATION_CAP
) -> list[tuple[int, ...]]:
    """Every independent set, ordered by size and then lexicographically."""
    if g.vertex_count > cap:
        raise CapExceeded("enumeration", cap, g.vertex_count)
    found: list[tuple[int, ...]] = []

    def extend(current: tuple[int, ...], candidates: int):
        found.append(current)
        if max_size is not None and len(current) >= max_size:
            return
        for v in bit_indices(candidates):
            later = candidates >> (v + 1) << (v + 1)
            extend(current + (v,), later & ~g.rows[v])

    extend((), g.all_vertices)
    found.sort(key=lambda s: (len(s), s))
    return found


def verify_independence_implies_linear(g: ExplicitGraph, cap: int = ENUMERATION_CAP):
    """First graph-independent set that is linearly dependent, or None."""
    for ind in enumerate_independent_sets(g, cap=cap):
        if rank(g.field, [g.labels[v] for v in ind]) != len(ind):
            return ind
    return None


# -- domination -------------------------------------------------------------

def _closed(g: ExplicitGraph, v: int) -> int:
    return g.rows[v] | 1 << v


def dominates(g: ExplicitGraph, vertices) -> bool:
    cover = 0
    for v in vertices:
        cover |= _closed(g, v)
    return cover == g.all_vertices


def domination_number(g: ExplicitGraph | ClassGraph) -> tuple[int, object]:
    """(gamma, witness).  Tries the full-support vertex first, then searches."""
    if isinstance(g, ClassGraph):
        full = (1 << g.n) - 1
        if all(m & full for m, _ in g.classes):
            return 1, tuple([1] * g.n)
        raise AssertionError("class graph without a full-support class")
    full = (1 << g.n) - 1
    hub = next((v for v, m in enumerate(g.masks) if m == full), None)
    if hub is not None and dominates(g, [hub]):
        return 1, (hub,)
    for size in range(1, g.vertex_count + 1):
        for combo in itertools.combinations(range(g.vertex_count), size):
            if dominates(g, combo):
                return size, combo
    return 0, ()


def empty_set_dominates(g: ExplicitGraph) -> bool:
    return dominates(g, [])


def max_minimal_dominating_set(
    g: ExplicitGraph, cap: int = DOMINATION_CAP
) -> tuple[int, ...]:
    """Largest minimal dominating set by full subset scan (lowest ids on ties)."""
    size = g.vertex_count
    if size > cap:
        raise CapExceeded("domination", cap, size)
    everything = g.all_vertices
    closed = [_closed(g, v) for v in range(size)]
    cover = [0] * (1 << size)
    for subset in range(1, 1 << size):
        low = subset & -subset
        cover[subset] = cover[subset ^ low] | closed[low.bit_length() - 1]
    for k in range(size, 0, -1):
        for combo in itertools.combinations(range(size), k):
            subset = sum(1 << v for v in combo)
            if cover[subset] != everything:
                continue
            if all(cover[subset ^ (1 << v)] != everything for v in combo):
                return combo
    return ()


def max_minimal_dominating_size(g: ExplicitGraph, cap: int = DOMINATION_CAP) -> int:
    return len(max_minimal_dominating_set(g, cap))


def is_minimal_dominating(g: ExplicitGraph, vertices) -> bool:
    vs = list(vertices)
    if not dominates(g, vs):
        return False
    return all(not dominates(g, vs[:i] + vs[i + 1:]) for i in range(len(vs)))


# -- report -----------------------------------------------------------------

@dataclass
class InvariantReport:
    q: int
    n: int
    vertex_count: int
    edge_count: int
    diameter: object
    is_complete: bool
    independence_number: int | None
    domination_number: int
    max_minimal_dominating_size: int | None
    degree_histogram: dict[int, int]
    theorem_checks: dict[str, str] = dc_field(default_factory=dict)
    witnesses: dict[str, object] = dc_field(default_factory=dict)

    @property
    def failures(self) -> dict[str, object]:
        return {k: self.witnesses.get(k) for k, v in self.theorem_checks.items() if v == FAIL}

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        diam = "infinite" if self.diameter == INFINITE else self.diameter
        return {
            "q": self.q,
            "n": self.n,
            "vertexCount": self.vertex_count,
            "edgeCount": self.edge_count,
            "diameter": diam,
            "isComplete": self.is_complete,
            "independenceNumber": self.independence_number,
            "dominationNumber": self.domination_number,
            "maxMinimalDominatingSize": self.max_minimal_dominating_size,
            "degreeHistogram": {str(d): c for d, c in self.degree_histogram.items()},
            "theoremChecks": dict(self.theorem_checks),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def degree_mismatch(g: ExplicitGraph | ClassGraph):
    """First vertex (or class mask) whose degree differs from the formula."""
    q, n = g.q, g.n
    if isinstance(g, ClassGraph):
        for mask, d in g.class_degrees().items():
            if d != degree_formula(q, n, mask.bit_count()):
                return mask
        return None
    for v, row in enumerate(g.rows):
        if row.bit_count() != degree_formula(q, n, g.masks[v].bit_count()):
            return v
    return None


def build_report(
    f: FiniteField,
    n: int,
    basis=None,
    explicit_cap: int = EXPLICIT_CAP,
    independence_cap: int = INDEPENDENCE_CAP,
    domination_cap: int = DOMINATION_CAP,
    enumeration_cap: int = ENUMERATION_CAP,
) -> InvariantReport:
    """Compute every invariant and check it against its closed form.

    Uses the explicit graph when it fits under ``explicit_cap`` and falls back
    to the class graph otherwise; checks that need the explicit graph are then
    marked skipped.
    """
    q = f.q
    if q ** n - 1 <= explicit_cap:
        g = explicit_graph(f, n, basis, cap=explicit_cap)
    else:
        g = class_graph(f, n)
    explicit = isinstance(g, ExplicitGraph)
    checks: dict[str, str] = {}
    witnesses: dict[str, object] = {}

    bad = degree_mismatch(g)
    checks["degrees"] = _verdict(bad is None)
    if bad is not None:
        witnesses["degrees"] = bad

    edges = g.edge_count()
    checks["handshake"] = _verdict(edges == edge_count_formula(q, n))

    diam = diameter(g)
    if n >= 2:
        checks["diameter"] = _verdict(diam == 2)
    else:
        checks["diameter"] = NOT_APPLICABLE

    complete = is_complete(g)
    checks["complete"] = _verdict(complete == (n == 1))

    gamma, hub = domination_number(g)
    ok = gamma == 1
    if explicit:
        ok = ok and dominates(g, hub) and not empty_set_dominates(g)
    checks["domination"] = _verdict(ok)
    if not ok:
        witnesses["domination"] = hub

    mmd = None
    if explicit and g.vertex_count <= domination_cap:
        witness = max_minimal_dominating_set(g, domination_cap)
        mmd = len(witness)
        checks["minimalDominating"] = _verdict(mmd == n)
        witnesses["minimalDominating"] = witness
    else:
        checks["minimalDominating"] = SKIPPED

    alpha = None
    if not explicit:
        alpha = independence_number(g)
        checks["independence"] = _verdict(alpha == n)
    elif g.vertex_count <= independence_cap:
        mis = maximum_independent_set(g, independence_cap)
        alpha = len(mis)
        closed_form = independence_number(class_graph(f, n))
        checks["independence"] = _verdict(alpha == n == closed_form)
        witnesses["independence"] = mis
    else:
        alpha = independence_number(class_graph(f, n))
        checks["independence"] = _verdict(alpha == n)

    if explicit and g.vertex_count <= enumeration_cap:
        bad = verify_independence_implies_linear(g, enumeration_cap)
        checks["linearIndependence"] = _verdict(bad is None)
        if bad is not None:
            witnesses["linearIndependence"] = bad
    else:
        checks["linearIndependence"] = SKIPPED

    hist = degree_histogram(g)
    if n >= 2:
        checks["notVertexTransitive"] = _verdict(len(hist) >= 2)
    else:
        checks["notVertexTransitive"] = NOT_APPLICABLE

    return InvariantReport(
        q=q,
        n=n,
        vertex_count=g.vertex_count,
        edge_count=edges,
        diameter=diam,
        is_complete=complete,
        independence_number=alpha,
        domination_number=gamma,
        max_minimal_dominating_size=mmd,
        degree_histogram=hist,
        theorem_checks=checks,
        witnesses=witnesses,
    )
