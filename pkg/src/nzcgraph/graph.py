"""The non-zero component graph in two representations.

:class:`ExplicitGraph` materialises every non-zero vector as a vertex and
stores adjacency as one int bitset per vertex.  :class:`ClassGraph` keeps one
node per non-empty support; all vectors with the same support have the same
neighbourhood, so the support alone decides adjacency.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .errors import BadSupportSize, CapExceeded, DimensionCap, NullVector
from .ffield import FiniteField
from .vspace import (
    EXPLICIT_CAP,
    Basis,
    Vector,
    coords_in_basis,
    enumerate_vectors,
    support,
    vertex_id,
)

CLASS_DIM_CAP = 24


def adjacent(a: Vector, b: Vector) -> bool:
    """Distinct vectors sharing a coordinate where both are non-zero."""
    if len(a) != len(b):
        raise ValueError("vectors of different dimension")
    return a != b and bool(support(a) & support(b))


@dataclass(frozen=True)
class ExplicitGraph:
    field: FiniteField
    n: int
    labels: tuple[Vector, ...]
    masks: tuple[int, ...]
    rows: tuple[int, ...]
    basis: Basis | None = None

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def all_vertices(self) -> int:
        return (1 << len(self.labels)) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bit_indices(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self):
        """Edges (u, v) with u < v in increasing order."""
        for u, row in enumerate(self.rows):
            for v in bit_indices(row >> (u + 1) << (u + 1)):
                yield u, v

    def vertex(self, v: Vector) -> int:
        return vertex_id(tuple(v), self.q)

    def adjacency_matrix(self) -> list[list[bool]]:
        size = self.vertex_count
        return [[bool(row >> v & 1) for v in range(size)] for row in self.rows]


def bit_indices(bits: int) -> list[int]:
    """Positions of the set bits, ascending."""
    digits = bin(bits)[:1:-1]
    return [i for i, c in enumerate(digits) if c == "1"]


def _rows_from_masks(masks) -> tuple[int, ...]:
    """Neighbour bitsets: union of the per-coordinate vertex sets, minus self."""
    width = max(masks).bit_length() if masks else 0
    by_coord = [0] * width
    for v, mask in enumerate(masks):
        for i in range(width):
            if mask >> i & 1:
                by_coord[i] |= 1 << v
    rows = []
    for v, mask in enumerate(masks):
        row = 0
        for i in range(width):
            if mask >> i & 1:
                row |= by_coord[i]
        rows.append(row & ~(1 << v))
    return tuple(rows)


def explicit_graph(
    f: FiniteField, n: int, basis: Basis | None = None, cap: int = EXPLICIT_CAP
) -> ExplicitGraph:
    """Materialise the graph on all non-zero vectors of GF(q)^n.

    Vertex labels are always canonical coordinates.  With ``basis`` given,
    adjacency is decided on the coordinates re-expressed in that basis.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if basis is not None and (basis.n != n or basis.field != f):
        raise ValueError("basis does not match field and dimension")
    labels = tuple(enumerate_vectors(f, n, cap))
    if basis is None:
        masks = tuple(support(v) for v in labels)
    else:
        masks = tuple(support(coords_in_basis(v, basis)) for v in labels)
    return ExplicitGraph(f, n, labels, masks, _rows_from_masks(masks), basis)


@dataclass(frozen=True)
class ClassGraph:
    """One node per non-empty support mask, in increasing mask order."""

    field: FiniteField
    n: int
    classes: tuple[tuple[int, int], ...]

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def vertex_count(self) -> int:
        return sum(w for _, w in self.classes)

    def weight(self, mask: int) -> int:
        return self.classes[mask - 1][1]

    def degree_of_mask(self, mask: int) -> int:
        """Total weight of classes meeting ``mask``, minus the vertex itself."""
        full = (1 << self.n) - 1
        total = self.vertex_count
        rest = full & ~mask
        sub, disjoint = rest, 0
        while sub:
            disjoint += self.weight(sub)
            sub = (sub - 1) & rest
        return total - disjoint - 1

    def class_degrees(self) -> dict[int, int]:
        """Degree of a member of every class, via one subset-sum table."""
        full = (1 << self.n) - 1
        # below[M] = total weight of classes whose mask lies inside M
        below = [0] + [w for _, w in self.classes]
        for i in range(self.n):
            bit = 1 << i
            for m in range(full + 1):
                if m & bit:
                    below[m] += below[m ^ bit]
        total = below[full]
        return {mask: total - below[full ^ mask] - 1 for mask, _ in self.classes}

    def degree_histogram(self) -> dict[int, int]:
        degrees = self.class_degrees()
        hist = Counter()
        for mask, w in self.classes:
            hist[degrees[mask]] += w
        return dict(sorted(hist.items()))

    def edge_count(self) -> int:
        return sum(d * c for d, c in self.degree_histogram().items()) // 2


def class_graph(f: FiniteField, n: int, dim_cap: int = CLASS_DIM_CAP) -> ClassGraph:
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if n > dim_cap:
        raise DimensionCap("dimension", dim_cap, n)
    base = f.q - 1
    classes = tuple((mask, base ** mask.bit_count()) for mask in range(1, 1 << n))
    return ClassGraph(f, n, classes)


def expand(cg: ClassGraph, cap: int = EXPLICIT_CAP) -> ExplicitGraph:
    """Explicit graph reconstructed from class membership alone."""
    q, n = cg.q, cg.n
    count = q ** n - 1
    if count > cap:
        raise CapExceeded("explicit", cap, count)
    labels = tuple(enumerate_vectors(cg.field, n, cap))
    masks = tuple(support(v) for v in labels)
    members: dict[int, int] = {}
    for v, mask in enumerate(masks):
        members[mask] = members.get(mask, 0) | 1 << v
    if any(members.get(m, 0).bit_count() != w for m, w in cg.classes):
        raise AssertionError("class weights do not match the enumeration")
    closed = {
        mask: _union(bits for other, bits in members.items() if other & mask)
        for mask in members
    }
    rows = tuple(closed[mask] & ~(1 << v) for v, mask in enumerate(masks))
    return ExplicitGraph(cg.field, n, labels, masks, rows)


def _union(bitsets) -> int:
    out = 0
    for b in bitsets:
        out |= b
    return out


def degree_formula(q: int, n: int, k: int) -> int:
    """Degree of a vertex whose support has k elements."""
    if not 1 <= k <= n:
        raise BadSupportSize(f"support size {k} outside 1..{n}")
    return (q ** k - 1) * q ** (n - k) - 1


def edge_count_formula(q: int, n: int) -> int:
    twice = sum(comb(n, k) * (q - 1) ** k * degree_formula(q, n, k) for k in range(1, n + 1))
    return twice // 2


def degree_of(g: ExplicitGraph | ClassGraph, v: Vector) -> int:
    v = tuple(v)
    if not any(v):
        raise NullVector("the null vector is not a vertex")
    if isinstance(g, ClassGraph):
        return g.degree_of_mask(support(v))
    return g.degree(g.vertex(v))


def degree_histogram(g: ExplicitGraph | ClassGraph) -> dict[int, int]:
    if isinstance(g, ClassGraph):
        return g.degree_histogram()
    return dict(sorted(Counter(g.degrees()).items()))


def vertex_label(g: ExplicitGraph, v: int) -> str:
    return ",".join(g.field.name(c) for c in g.labels[v])


def to_dot(g: ExplicitGraph) -> str:
    lines = [f"graph nzc_q{g.q}_n{g.n} {{"]
    for v in range(g.vertex_count):
        lines.append(f'  {v} [label="{vertex_label(g, v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: ExplicitGraph) -> dict:
    return {
        "q": g.q,
        "n": g.n,
        "vertexCount": g.vertex_count,
        "edgeCount": g.edge_count(),
        "vertices": [vertex_label(g, v) for v in range(g.vertex_count)],
        "edges": [list(e) for e in g.edges()],
    }
