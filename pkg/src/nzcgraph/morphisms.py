"""Isomorphisms, automorphisms and linearity of vertex maps."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, FieldMismatch, TheoremDiscrepancy
from .ffield import FiniteField
from .graph import ExplicitGraph, degree_histogram, explicit_graph
from .invariants import is_complete
from .vspace import Basis, add, expand_in_basis, scale, vertex_id

AUTOMORPHISM_CAP = 16
ISO_SEARCH_CAP = 16


@dataclass(frozen=True)
class AutomorphismRecord:
    mapping: tuple[int, ...]
    sigma: tuple[int, ...] | None
    is_linear: bool

    def to_dict(self) -> dict:
        return {
            "mapping": list(self.mapping),
            "sigma": None if self.sigma is None else list(self.sigma),
            "isLinear": self.is_linear,
        }


@dataclass(frozen=True)
class FormCheck:
    ok: bool
    sigma: tuple[int, ...] | None = None
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: tuple[int, ...] | None
    searched: bool

    def __bool__(self) -> bool:
        return self.isomorphic


def is_isomorphism(g1: ExplicitGraph, g2: ExplicitGraph, mapping) -> bool:
    """Bijection that preserves adjacency and non-adjacency."""
    size = g1.vertex_count
    if size != g2.vertex_count or sorted(mapping) != list(range(size)):
        return False
    for u in range(size):
        image = 0
        for v in g1.neighbors(u):
            image |= 1 << mapping[v]
        if image != g2.rows[mapping[u]]:
            return False
    return True


def _isomorphisms(g1: ExplicitGraph, g2: ExplicitGraph, first_only: bool):
    """Backtracking over vertex images; candidates ordered by degree class then id."""
    size = g1.vertex_count
    if size != g2.vertex_count:
        return
    deg1, deg2 = g1.degrees(), g2.degrees()
    if sorted(deg1) != sorted(deg2):
        return
    by_degree: dict[int, list[int]] = {}
    for v in sorted(range(size), key=lambda v: (deg2[v], v)):
        by_degree.setdefault(deg2[v], []).append(v)
    mapping = [-1] * size
    used = 0

    def extend(u: int):
        nonlocal used
        if u == size:
            yield tuple(mapping)
            return
        for c in by_degree[deg1[u]]:
            if used >> c & 1:
                continue
            row1, row2 = g1.rows[u], g2.rows[c]
            if any((row1 >> w & 1) != (row2 >> mapping[w] & 1) for w in range(u)):
                continue
            mapping[u] = c
            used |= 1 << c
            yield from extend(u + 1)
            used &= ~(1 << c)
            mapping[u] = -1

    for found in extend(0):
        yield found
        if first_only:
            return


def find_isomorphism(g1: ExplicitGraph, g2: ExplicitGraph):
    return next(_isomorphisms(g1, g2, first_only=True), None)


def are_isomorphic(g1, g2, search_cap: int = ISO_SEARCH_CAP) -> IsoResult:
    """Decide by dimension; cross-check by brute-force search when small.

    Accepts explicit or class graphs.  Raises TheoremDiscrepancy if the
    search disagrees with the dimension test.
    """
    if g1.q != g2.q:
        raise FieldMismatch(f"graphs over GF({g1.q}) and GF({g2.q})")
    decision = g1.n == g2.n
    small = (
        isinstance(g1, ExplicitGraph)
        and isinstance(g2, ExplicitGraph)
        and g1.vertex_count <= search_cap
        and g2.vertex_count <= search_cap
    )
    if not small:
        return IsoResult(decision, None, False)
    witness = find_isomorphism(g1, g2)
    if (witness is not None) != decision:
        raise TheoremDiscrepancy("iso-dim", (g1.n, g2.n), "search disagrees with dimension test")
    return IsoResult(decision, witness, True)


def basis_change_map(f: FiniteField, n: int, b: Basis, labels) -> tuple[int, ...]:
    """Vertex map sending sum(a_i e_i) to sum(a_i b_i)."""
    return tuple(vertex_id(expand_in_basis(v, b), f.q) for v in labels)


def basis_change_iso_check(f: FiniteField, n: int, b: Basis):
    """None if the basis-change map is an isomorphism, else a witness pair."""
    g_alpha = explicit_graph(f, n)
    g_beta = explicit_graph(f, n, b)
    mapping = basis_change_map(f, n, b, g_alpha.labels)
    if sorted(mapping) != list(range(g_alpha.vertex_count)):
        return ("not a bijection", mapping)
    for u in range(g_alpha.vertex_count):
        for v in range(u + 1, g_alpha.vertex_count):
            if g_alpha.has_edge(u, v) != g_beta.has_edge(mapping[u], mapping[v]):
                return (u, v)
    return None


def recover_sigma(g: ExplicitGraph, mapping) -> FormCheck:
    """Permutation of coordinates induced on singleton-support vertices."""
    sigma: dict[int, int] = {}
    for v, mask in enumerate(g.masks):
        if mask.bit_count() != 1:
            continue
        image = g.masks[mapping[v]]
        if image.bit_count() != 1:
            return FormCheck(False, witness=v)
        i, j = mask.bit_length() - 1, image.bit_length() - 1
        if sigma.setdefault(i, j) != j:
            return FormCheck(False, witness=v)
    if sorted(sigma) != list(range(g.n)) or sorted(sigma.values()) != list(range(g.n)):
        return FormCheck(False)
    return FormCheck(True, tuple(sigma[i] for i in range(g.n)))


def check_automorphism_form(mapping, g: ExplicitGraph) -> FormCheck:
    """Singletons go to singletons via some sigma, and every support is permuted by it."""
    if isinstance(mapping, AutomorphismRecord):
        mapping = mapping.mapping
    form = recover_sigma(g, mapping)
    if not form:
        return form
    sigma = form.sigma
    for v, mask in enumerate(g.masks):
        moved = 0
        for i in range(g.n):
            if mask >> i & 1:
                moved |= 1 << sigma[i]
        if g.masks[mapping[v]] != moved:
            return FormCheck(False, sigma, v)
    return form


def linearity_witness(mapping, g: ExplicitGraph):
    """First failure of homogeneity or additivity, or None for a linear map.

    The map is extended by sending the null vector to itself.
    """
    f, q, labels = g.field, g.q, g.labels

    def image(vec):
        if not any(vec):
            return vec
        return labels[mapping[vertex_id(vec, q)]]

    for v, vec in enumerate(labels):
        for c in range(2, q):
            if image(scale(f, c, vec)) != scale(f, c, image(vec)):
                return ("scale", v, c)
    for u, a in enumerate(labels):
        for v in range(u + 1, len(labels)):
            b = labels[v]
            if image(add(f, a, b)) != add(f, image(a), image(b)):
                return ("add", u, v)
    return None


def is_linear_map(mapping, g: ExplicitGraph) -> bool:
    if isinstance(mapping, AutomorphismRecord):
        mapping = mapping.mapping
    return linearity_witness(mapping, g) is None


def automorphisms(g: ExplicitGraph, cap: int = AUTOMORPHISM_CAP) -> list[AutomorphismRecord]:
    """All automorphisms, sorted by mapping array."""
    if g.vertex_count > cap:
        raise CapExceeded("automorphism", cap, g.vertex_count)
    maps = sorted(_isomorphisms(g, g, first_only=False))
    records = []
    for m in maps:
        form = recover_sigma(g, m)
        records.append(AutomorphismRecord(m, form.sigma, is_linear_map(m, g)))
    return records


def orbits(g: ExplicitGraph, autos) -> list[list[int]]:
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rec in autos:
        m = rec.mapping if isinstance(rec, AutomorphismRecord) else rec
        for v, w in enumerate(m):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def vertex_transitivity(g: ExplicitGraph, cap: int = AUTOMORPHISM_CAP) -> tuple[bool, object]:
    """(transitive, evidence).

    Evidence is a pair of distinct degrees when degrees alone split the
    vertices, otherwise the orbit list.
    """
    hist = degree_histogram(g)
    if len(hist) >= 2:
        low, high = min(hist), max(hist)
        return False, {"degrees": (low, high)}
    if is_complete(g):
        return True, {"complete": g.vertex_count}
    if g.vertex_count > cap:
        raise CapExceeded("automorphism", cap, g.vertex_count)
    orb = orbits(g, automorphisms(g, cap))
    return len(orb) == 1, {"orbits": orb}
