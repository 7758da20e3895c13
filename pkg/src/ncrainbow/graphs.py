"""Simple undirected graphs with bitset adjacency.

Vertices are 0..n-1; ``adj[v]`` is an int whose set bits are the
neighbors of v. Everything here targets graphs of at most a few hundred
vertices, where bitset intersection makes common-neighbor counting,
isomorphism refinement, and flow computations cheap. Graphs are
immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterator, Sequence


class SearchBudgetExceeded(Exception):
    """Isomorphism search ran out of nodes; the answer is unknown, not refuted."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.vertex_count):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in iter_bits(rest))
        return tuple(out)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_complete(self) -> bool:
        n = self.vertex_count
        return self.edge_count == n * (n - 1) // 2

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << n) - 1

    def diameter(self) -> int:
        """Longest BFS eccentricity; raises on disconnected graphs."""
        n = self.vertex_count
        best = 0
        for s in range(n):
            dist = 0
            seen = 1 << s
            frontier = seen
            while seen != (1 << n) - 1:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~seen
                if not frontier:
                    raise ValueError("diameter of a disconnected graph")
                seen |= frontier
                dist += 1
            best = max(best, dist)
        return best


def graph_from_edges(
    n: int,
    edges: Sequence[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    if n < 0:
        raise ValueError("negative vertex count")
    if labels is None:
        labels = [f"v{i}" for i in range(n)]
    if len(labels) != n:
        raise ValueError(f"{len(labels)} labels for {n} vertices")
    if len(set(labels)) != n:
        raise ValueError("labels are not distinct")
    adj = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range")
        if u == v:
            raise ValueError(f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(labels), tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(f"v{i}" for i in range(n)),
                 tuple(full ^ (1 << v) for v in range(n)))


def edgeless_graph(n: int) -> Graph:
    return Graph(n, tuple(f"v{i}" for i in range(n)), (0,) * n)


def complement(g: Graph) -> Graph:
    n = g.vertex_count
    full = (1 << n) - 1
    return Graph(n, g.labels, tuple(full & ~g.adj[v] & ~(1 << v) for v in range(n)))


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; vertex labels are p<part>_<index>, 1-based."""
    if not part_sizes:
        raise ValueError("need at least one part")
    if any(s < 1 for s in part_sizes):
        raise ValueError("part sizes must be positive")
    n = sum(part_sizes)
    full = (1 << n) - 1
    labels = []
    part_masks = []
    start = 0
    for p, s in enumerate(part_sizes, start=1):
        labels.extend(f"p{p}_{j}" for j in range(1, s + 1))
        part_masks.append(((1 << s) - 1) << start)
        start += s
    adj = []
    for pm in part_masks:
        block = full & ~pm
        adj.extend(block for _ in range(pm.bit_count()))
    return Graph(n, tuple(labels), tuple(adj))


def lexicographic_product(base: Graph, fiber: Graph) -> Graph:
    """(b1,f1) ~ (b2,f2) iff b1 ~ b2, or b1 = b2 and f1 ~ f2. Base-major order."""
    nb, nf = base.vertex_count, fiber.vertex_count
    fiber_full = (1 << nf) - 1
    adj = []
    labels = []
    for b in range(nb):
        expanded = 0
        for b2 in iter_bits(base.adj[b]):
            expanded |= fiber_full << (b2 * nf)
        for f in range(nf):
            adj.append(expanded | (fiber.adj[f] << (b * nf)))
            labels.append(f"({base.labels[b]},{fiber.labels[f]})")
    return Graph(nb * nf, tuple(labels), tuple(adj))


def johnson(n: int, k: int) -> Graph:
    """k-subsets of {1..n} in colexicographic order, adjacent when meeting in k-1 points."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    subsets = sorted(combinations(range(1, n + 1), k), key=lambda c: c[::-1])
    sets = [frozenset(c) for c in subsets]
    labels = ["{" + ",".join(str(x) for x in c) + "}" for c in subsets]
    m = len(sets)
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if len(sets[i] & sets[j]) == k - 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(m, tuple(labels), tuple(adj))


def complement_cliques(g: Graph) -> list[list[int]] | None:
    """The parts of g if it is complete multipartite, else None.

    g is complete multipartite exactly when its complement is a disjoint
    union of cliques; the parts are the complement's components, returned
    in order of their smallest vertex.
    """
    co = complement(g)
    n = g.vertex_count
    unseen = (1 << n) - 1
    parts = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= co.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        size = comp.bit_count()
        for v in iter_bits(comp):
            if (co.adj[v] & comp).bit_count() != size - 1:
                return None
        parts.append(list(iter_bits(comp)))
        unseen &= ~comp
    return parts


def detect_complete_multipartite(g: Graph) -> list[int] | None:
    """Part sizes (ascending) if g is complete multipartite, else None."""
    parts = complement_cliques(g)
    if parts is None:
        return None
    return sorted(len(p) for p in parts)


# --- isomorphism -----------------------------------------------------------

def _refine_classes(g1: Graph, g2: Graph, rounds: int = 4) -> tuple[list[int], list[int]] | None:
    """Joint iterated neighbor-class refinement; None when class histograms split."""
    n = g1.vertex_count
    colors = [g1.degree(v) for v in range(n)] + [g2.degree(v) for v in range(n)]
    adj = list(g1.adj) + [m << n for m in g2.adj]

    def histogram(cols):
        h1, h2 = {}, {}
        for v in range(n):
            h1[cols[v]] = h1.get(cols[v], 0) + 1
            h2[cols[n + v]] = h2.get(cols[n + v], 0) + 1
        return h1, h2

    for _ in range(rounds):
        h1, h2 = histogram(colors)
        if h1 != h2:
            return None
        table: dict[tuple, int] = {}
        nxt = []
        for v in range(2 * n):
            sig = (colors[v], tuple(sorted(colors[w] for w in iter_bits(adj[v]))))
            nxt.append(table.setdefault(sig, len(table)))
        if len(set(nxt)) == len(set(colors)):
            colors = nxt
            break
        colors = nxt
    h1, h2 = histogram(colors)
    if h1 != h2:
        return None
    return colors[:n], colors[n:]


def are_isomorphic(g1: Graph, g2: Graph, node_budget: int = 2_000_000) -> list[int] | None:
    """Explicit vertex bijection g1 -> g2, or None when refuted.

    Backtracking over a connectivity-first vertex order with class
    refinement for candidate pruning. Raises SearchBudgetExceeded after
    node_budget search nodes, distinguishing "unknown" from "refuted".
    """
    n = g1.vertex_count
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    if n == 0:
        return []
    refined = _refine_classes(g1, g2)
    if refined is None:
        return None
    c1, c2 = refined

    class_sizes: dict[int, int] = {}
    for c in c1:
        class_sizes[c] = class_sizes.get(c, 0) + 1
    # Order: rarest class first, then keep the mapped set connected.
    order: list[int] = []
    placed_mask = 0
    for _ in range(n):
        best, best_key = -1, None
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            attach = (g1.adj[v] & placed_mask).bit_count()
            key = (-attach, class_sizes[c1[v]], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        order.append(best)
        placed_mask |= 1 << best

    candidates_by_class: dict[int, list[int]] = {}
    for u in range(n):
        candidates_by_class.setdefault(c2[u], []).append(u)

    mapping = [-1] * n
    used = [False] * n
    budget = node_budget

    def extend(depth: int, mapped1: int, mapped2: int) -> bool:
        nonlocal budget
        if depth == n:
            return True
        v = order[depth]
        required = 0
        for w in iter_bits(g1.adj[v] & mapped1):
            required |= 1 << mapping[w]
        for u in candidates_by_class.get(c1[v], ()):
            if used[u]:
                continue
            budget -= 1
            if budget < 0:
                raise SearchBudgetExceeded(f"exceeded {node_budget} nodes")
            if g2.adj[u] & mapped2 != required:
                continue
            mapping[v] = u
            used[u] = True
            if extend(depth + 1, mapped1 | (1 << v), mapped2 | (1 << u)):
                return True
            mapping[v] = -1
            used[u] = False
        return False

    if extend(0, 0, 0):
        return list(mapping)
    return None


# --- vertex connectivity ---------------------------------------------------

def _max_vertex_disjoint(g: Graph, s: int, t: int, limit: int) -> int:
    """Internally vertex-disjoint s-t paths for non-adjacent s, t, capped at limit.

    Unit-capacity max-flow on the split digraph (v_in -> v_out per inner
    vertex), one BFS augmentation per path.
    """
    n = g.vertex_count
    # Node ids: 2v = v_in, 2v+1 = v_out. Source = 2s+1, sink = 2t.
    size = 2 * n
    succ: list[list[int]] = [[] for _ in range(size)]
    cap: dict[tuple[int, int], int] = {}

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            succ[a].append(b)
            succ[b].append(a)
            cap[a, b] = 0
            cap[b, a] = 0
        cap[a, b] += c

    for v in range(n):
        if v not in (s, t):
            add(2 * v, 2 * v + 1, 1)
    for u, v in g.edges:
        add(2 * u + 1, 2 * v, limit)
        add(2 * v + 1, 2 * u, limit)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = [-1] * size
        prev[source] = source
        queue = [source]
        while queue and prev[sink] == -1:
            nxt = []
            for a in queue:
                for b in succ[a]:
                    if prev[b] == -1 and cap[a, b] > 0:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if prev[sink] == -1:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[a, b] -= 1
            cap[b, a] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph, at_most: int | None = None) -> int:
    """Minimum number of vertex deletions disconnecting g; n-1 for complete graphs.

    Menger's theorem: the minimum over non-adjacent pairs of the maximum
    number of internally disjoint paths. With ``at_most`` the computation
    is capped, returning min(kappa, at_most).
    """
    n = g.vertex_count
    if n <= 1:
        return 0
    cap_limit = n - 1 if at_most is None else min(at_most, n - 1)
    if not g.is_connected():
        return 0
    if g.is_complete():
        return cap_limit if at_most is not None else n - 1
    best = cap_limit
    for u in range(n):
        rest = ~g.adj[u] & ~((1 << (u + 1)) - 1) & ((1 << n) - 1)
        for v in iter_bits(rest):
            best = min(best, _max_vertex_disjoint(g, u, v, best))
            if best == 0:
                return 0
    return best


def connectivity_at_least(g: Graph, k: int) -> bool:
    return vertex_connectivity(g, at_most=k) >= k


# --- file format ------------------------------------------------------------

def read_graph_file(path: str | Path) -> Graph:
    """Read the `graph` text format."""
    path = Path(path)
    lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("graph"):
        raise ValueError(f"{path}: expected leading 'graph <n> <m>' line")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError(f"{path}: malformed header {lines[0]!r}")
    n, m = int(head[1]), int(head[2])
    pos = 1
    labels = None
    if pos < len(lines) and lines[pos].startswith("labels"):
        labels = lines[pos].split()[1:]
        pos += 1
    edges = []
    for ln in lines[pos:]:
        u, v = (int(tok) for tok in ln.split())
        if not u < v:
            raise ValueError(f"{path}: edge line {ln!r} must satisfy u < v")
        edges.append((u, v))
    if len(edges) != m:
        raise ValueError(f"{path}: header promises {m} edges, found {len(edges)}")
    return graph_from_edges(n, edges, labels)


def write_graph_file(g: Graph, path: str | Path) -> None:
    for lab in g.labels:
        if any(c.isspace() for c in lab):
            raise ValueError(f"label {lab!r} contains whitespace")
    out = [f"graph {g.vertex_count} {g.edge_count}"]
    if g.vertex_count:
        out.append("labels " + " ".join(g.labels))
    out.extend(f"{u} {v}" for u, v in g.edges)
    Path(path).write_text("\n".join(out) + "\n")
