"""Hypercube density: averaged degree against log2 of the vertex count.

Works on explicit vertex/edge data when graphs are small enough to
build, and on closed-form (vertices, edges) counts otherwise, since the
density of a graph depends on nothing else. Includes the Cartesian
product machinery used to manufacture families with prescribed density.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .cube import CubeGraph, edge_count, vertex_count
from .numeric import _CTX, log2_int, to_decimal
from .words import BitWord, WordClass


@dataclass(frozen=True)
class ExplicitGraph:
    """A concrete hypercube subgraph: labeled vertices plus an edge list.

    Vertices are equal-length distinct words; edges are index pairs
    (i, j) with i < j whose endpoint labels differ in exactly one
    position. The constructor enforces all of that, so holding an
    ExplicitGraph is holding a hypercube-subgraph witness.
    """

    vertices: tuple[BitWord, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a graph needs at least one vertex")
        length = self.vertices[0].n
        seen = set()
        for w in self.vertices:
            if w.n != length:
                raise ValueError("vertex labels must share one length")
            if w.bits in seen:
                raise ValueError(f"duplicate vertex label {w!s}")
            seen.add(w.bits)
        edge_set = set()
        for i, j in self.edges:
            if not (0 <= i < j < len(self.vertices)):
                raise ValueError(f"bad edge indices ({i}, {j})")
            if (i, j) in edge_set:
                raise ValueError(f"duplicate edge ({i}, {j})")
            edge_set.add((i, j))
            if (self.vertices[i].bits ^ self.vertices[j].bits).bit_count() != 1:
                raise ValueError(
                    f"edge {self.vertices[i]!s} -- {self.vertices[j]!s} "
                    "does not flip exactly one position"
                )

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @classmethod
    def from_cube(cls, g: CubeGraph) -> "ExplicitGraph":
        bits = g.vertex_bits
        index = {b: i for i, b in enumerate(bits)}
        edges = []
        for i, b in enumerate(bits):
            for j in range(g.n):
                if not (b >> j) & 1:
                    k = index.get(b | (1 << j))
                    if k is not None:
                        edges.append((i, k))
        edges.sort()
        verts = tuple(BitWord(g.n, b) for b in bits)
        return cls(verts, tuple(edges))

    @classmethod
    def hypercube(cls, k: int) -> "ExplicitGraph":
        return cls.from_cube(CubeGraph(WordClass.UNRESTRICTED, k))


def rho(graph: ExplicitGraph | tuple[int, int]) -> Decimal:
    """Average degree divided by log2 of the vertex count.

    Accepts an ExplicitGraph or a bare (vertices, edges) pair, since the
    value only depends on the two counts.
    """
    if isinstance(graph, ExplicitGraph):
        nv, ne = graph.num_vertices, graph.num_edges
    else:
        nv, ne = graph
    if nv <= 1:
        raise ValueError("density undefined for graphs with fewer than two vertices")
    with localcontext(_CTX):
        return to_decimal(Fraction(2 * ne, nv)) / log2_int(nv)


def density_lemma_check(nv: int, ne: int) -> tuple[bool, bool]:
    """Exact check of 2*E <= V*log2(V) as the integer comparison 4**E <= V**V.

    Returns (holds, is_equality); equality characterizes full hypercubes.
    """
    if nv < 1 or ne < 0:
        raise ValueError("need at least one vertex and a non-negative edge count")
    lhs = 1 << (2 * ne)
    rhs = nv**nv
    return lhs <= rhs, lhs == rhs


def subdivided_complete(k: int) -> tuple[int, int]:
    """Vertex and edge counts of the complete graph on k vertices with
    every edge subdivided once: k + C(k,2) vertices, 2*C(k,2) edges."""
    if k < 2:
        raise ValueError("need k >= 2")
    pairs = k * (k - 1) // 2
    return k + pairs, 2 * pairs


def cartesian_product(g: ExplicitGraph, h: ExplicitGraph) -> ExplicitGraph:
    """Box product: vertex labels concatenate; an edge moves along exactly
    one factor. |V| and |E| obey |Vg||Vh| and |Vg||Eh| + |Vh||Eg|."""
    nh = h.num_vertices
    verts = tuple(u.concat(v) for u in g.vertices for v in h.vertices)
    edges = []
    for a, b in g.edges:
        for iv in range(nh):
            edges.append((a * nh + iv, b * nh + iv))
    for iu in range(g.num_vertices):
        base = iu * nh
        for a, b in h.edges:
            edges.append((base + a, base + b))
    edges.sort()
    return ExplicitGraph(verts, tuple(edges))


def cartesian_power(g: ExplicitGraph, k: int) -> ExplicitGraph:
    if k < 1:
        raise ValueError("need k >= 1")
    out = g
    for _ in range(k - 1):
        out = cartesian_product(out, g)
    return out


@dataclass(frozen=True)
class GraphFamily:
    """An increasing family given by closed-form counts per index."""

    name: str
    first_index: int
    counts: Callable[[int], tuple[int, int]]


def fibonacci_cube_family() -> GraphFamily:
    return GraphFamily(
        "fibonacci-cubes",
        1,
        lambda n: (vertex_count(n, WordClass.FIBONACCI), edge_count(n, WordClass.FIBONACCI)),
    )


def lucas_cube_family() -> GraphFamily:
    # starts at 2: the length-1 cube has a single vertex, so no density
    return GraphFamily(
        "lucas-cubes",
        2,
        lambda n: (vertex_count(n, WordClass.LUCAS), edge_count(n, WordClass.LUCAS)),
    )


def subdivided_complete_family() -> GraphFamily:
    return GraphFamily("subdivided-complete", 2, subdivided_complete)


def even_cycle_family() -> GraphFamily:
    """Cycles on 2k vertices: max degree 2, so the density drains to zero."""
    return GraphFamily("even-cycles", 2, lambda k: (2 * k, 2 * k))


def power_family(base_vertices: int, base_edges: int, name: str = "powers") -> GraphFamily:
    """Cartesian powers of a fixed base graph, by counts alone."""
    if base_vertices < 2:
        raise ValueError("the base graph needs at least two vertices")
    return GraphFamily(
        name,
        1,
        lambda k: (base_vertices**k, k * base_vertices ** (k - 1) * base_edges),
    )


@dataclass(frozen=True)
class RhoRow:
    k: int
    num_vertices: int
    num_edges: int
    rho: Decimal


@dataclass(frozen=True)
class RhoTable:
    family: str
    rows: tuple[RhoRow, ...]
    # running max over the last quarter of the rows; reported, never
    # asserted to have converged
    limsup_estimate: Decimal


def rho_limit(family: GraphFamily, k_max: int, step: int = 1) -> RhoTable:
    """Densities along the family up to k_max (always including k_max),
    sampling every ``step`` indices counted down from k_max."""
    if k_max < family.first_index:
        raise ValueError(f"k_max below the family's first index {family.first_index}")
    if step < 1:
        raise ValueError("step must be >= 1")
    ks = []
    k = k_max
    while k >= family.first_index:
        ks.append(k)
        k -= step
    ks.reverse()
    rows = []
    prev_nv = 0
    for k in ks:
        nv, ne = family.counts(k)
        if nv <= prev_nv:
            raise ArithmeticError(f"family {family.name} is not increasing at k={k}")
        prev_nv = nv
        rows.append(RhoRow(k, nv, ne, rho((nv, ne))))
    tail = rows[-max(1, len(rows) // 4):]
    return RhoTable(family.name, tuple(rows), max(r.rho for r in tail))


def bounded_degree_rho(family: GraphFamily, max_degree: int, ks: Iterable[int]) -> list[RhoRow]:
    """Density rows for a family promised to have max degree <= max_degree.

    The handshake bound 2E <= V*max_degree is asserted for every row, so
    the densities necessarily sink as the vertex counts grow.
    """
    rows = []
    for k in ks:
        nv, ne = family.counts(k)
        if 2 * ne > max_degree * nv:
            raise ArithmeticError(
                f"family {family.name} violates the degree bound {max_degree} at k={k}"
            )
        rows.append(RhoRow(k, nv, ne, rho((nv, ne))))
    return rows


def cesaro_product_mean(values: Sequence):
    """Mean of a_i * a_(n+1-i) over i = 1..n for the given a_1..a_n.

    Works on any numeric type; with Fractions the result is exact, with
    Decimals it is computed at package precision. Converges to the
    square of the limit when the sequence converges.
    """
    vals = list(values)
    n = len(vals)
    if n == 0:
        raise ValueError("need at least one value")
    with localcontext(_CTX):
        total = vals[0] * vals[n - 1]
        for i in range(1, n):
            total += vals[i] * vals[n - 1 - i]
        return total / n
