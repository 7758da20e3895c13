"""Non-commuting graphs of finite groups, with structural self-checks.

The non-commuting graph of a non-abelian group has the non-central
elements as vertices and an edge between x and y exactly when xy != yx.
Common-neighbor counts can be computed two independent ways (adjacency
intersection on the graph side, centralizer unions on the group side);
`tau` cross-asserts them by default because that identity is the
backbone of everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .graphs import Graph, lexicographic_product, edgeless_graph
from .groups import Group, cyclic, direct_product


class AbelianGroup(Exception):
    """The non-commuting graph of an abelian group has no vertices."""


class BoundViolated(Exception):
    """A structural identity that must hold failed; indicates a bug."""


@dataclass(frozen=True)
class NonCommutingGraph:
    graph: Graph
    group: Group
    vertex_to_element: tuple[int, ...]

    @cached_property
    def element_to_vertex(self) -> dict[int, int]:
        return {e: v for v, e in enumerate(self.vertex_to_element)}

    def centralizer_mask(self, vertex: int) -> int:
        """Centralizer of the underlying element, as a mask over group elements."""
        return self.group.centralizer_mask(self.vertex_to_element[vertex])


def noncommuting_graph(group: Group) -> NonCommutingGraph:
    """Graph on the non-central elements, joined when they do not commute."""
    if group.is_abelian:
        raise AbelianGroup(f"{group.name} is abelian")
    center_mask = group.center().mask
    vertices = [e for e in range(group.order) if not center_mask >> e & 1]
    index_of = {e: v for v, e in enumerate(vertices)}
    table = group.table
    adj = [0] * len(vertices)
    for i, x in enumerate(vertices):
        row = table[x]
        for j in range(i + 1, len(vertices)):
            y = vertices[j]
            if row[y] != table[y][x]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    labels = tuple(group.names[e] for e in vertices)
    g = Graph(len(vertices), labels, tuple(adj))
    return NonCommutingGraph(g, group, tuple(vertices))


def tau(ncg: NonCommutingGraph, x: int, y: int, cross_check: bool = True) -> int:
    """Number of common neighbors of vertices x and y.

    With cross_check, also computes |G| - |C(x) ∪ C(y)| on the group side
    and asserts agreement.
    """
    if x == y:
        raise ValueError("tau requires two distinct vertices")
    g = ncg.graph
    graph_side = (g.adj[x] & g.adj[y]).bit_count()
    if cross_check:
        union = ncg.centralizer_mask(x) | ncg.centralizer_mask(y)
        group_side = ncg.group.order - union.bit_count()
        if group_side != graph_side:
            raise BoundViolated(
                f"tau mismatch at ({x},{y}): graph {graph_side}, group {group_side}"
            )
    return graph_side


@dataclass(frozen=True)
class CommonNeighborReport:
    group_name: str
    order: int
    min_tau: int
    min_ratio: Fraction
    witness: tuple[str, str]


def common_neighbor_floor_check(group: Group) -> CommonNeighborReport:
    """Verify 6*tau(x,y) >= |G| over all vertex pairs; report the minimum.

    The floor holds for every non-commuting graph, so a violation is
    raised as BoundViolated (it would indicate a bug) rather than reported.
    """
    ncg = noncommuting_graph(group)
    n = ncg.graph.vertex_count
    best = None
    for x in range(n):
        for y in range(x + 1, n):
            t = tau(ncg, x, y)
            if best is None or t < best[0]:
                best = (t, x, y)
    t, x, y = best
    if 6 * t < group.order:
        raise BoundViolated(
            f"{group.name}: 6*tau({ncg.graph.labels[x]},{ncg.graph.labels[y]})"
            f" = {6 * t} < {group.order}"
        )
    return CommonNeighborReport(
        group_name=group.name,
        order=group.order,
        min_tau=t,
        min_ratio=Fraction(t * 6, group.order),
        witness=(ncg.graph.labels[x], ncg.graph.labels[y]),
    )


@dataclass(frozen=True)
class EdgeCountReport:
    group_name: str
    edge_count: int
    centralizer_sum_halved: Fraction
    lower_bound: Fraction

    @property
    def meets_bound(self) -> bool:
        return self.edge_count >= self.lower_bound


def edge_count_identity_check(group: Group) -> EdgeCountReport:
    """Assert |E| = (1/2) * sum over vertices of (|G| - |C(x)|), and the
    quarter bound |E| >= |G| * (|G| - |Z|) / 4."""
    ncg = noncommuting_graph(group)
    n = group.order
    total = sum(n - ncg.centralizer_mask(v).bit_count()
                for v in range(ncg.graph.vertex_count))
    halved = Fraction(total, 2)
    edges = ncg.graph.edge_count
    if halved != edges:
        raise BoundViolated(
            f"{group.name}: edge count {edges} != centralizer sum/2 = {halved}"
        )
    bound = Fraction(n * (n - len(group.center())), 4)
    if edges < bound:
        raise BoundViolated(f"{group.name}: |E| = {edges} below bound {bound}")
    return EdgeCountReport(group.name, edges, halved, bound)


@dataclass(frozen=True)
class FiberExpansionReport:
    group_name: str
    fiber_size: int
    vertex_count: int


def abelian_extension_check(group: Group, n: int) -> FiberExpansionReport:
    """Extending by the cyclic group of order n blows each vertex into an
    edgeless n-fiber: the graph of G x Z_n equals the lexicographic product
    of the graph of G with n isolated vertices, under the natural
    (element, fiber) correspondence. Checked positionally, no search."""
    if n < 1:
        raise ValueError("fiber size must be positive")
    big = noncommuting_graph(direct_product(group, cyclic(n)))
    base = noncommuting_graph(group)
    product = lexicographic_product(base.graph, edgeless_graph(n))
    if big.graph.adj != product.adj:
        raise BoundViolated(
            f"{group.name} x Z{n}: graph differs from the fiber expansion"
        )
    return FiberExpansionReport(group.name, n, product.vertex_count)
