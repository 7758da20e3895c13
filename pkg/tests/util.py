"""Brute-force reference implementations used as independent oracles."""

from itertools import combinations, permutations

from ncrainbow.graphs import Graph, iter_bits


def brute_center(table):
    n = len(table)
    return [z for z in range(n)
            if all(table[z][g] == table[g][z] for g in range(n))]


def group_isomorphism(g, h):
    """Bijection preserving products, found by backtracking with closure.

    Maps elements in index order; every forced product image is propagated
    immediately, so the search only branches on generators.
    """
    n = g.order
    if h.order != n:
        return None
    ord_g = [g.element_order(x) for x in range(n)]
    ord_h = [h.element_order(x) for x in range(n)]
    if sorted(ord_g) != sorted(ord_h):
        return None
    candidates = [[y for y in range(n) if ord_h[y] == ord_g[x]] for x in range(n)]
    mapping = [-1] * n
    used = [False] * n
    mapping[0] = 0
    used[0] = True

    def close_over(x, trail):
        queue = [x]
        while queue:
            a = queue.pop()
            for b in [i for i in range(n) if mapping[i] != -1]:
                for p, q in ((a, b), (b, a)):
                    prod = g.table[p][q]
                    image = h.table[mapping[p]][mapping[q]]
                    if mapping[prod] == -1:
                        if used[image]:
                            return False
                        mapping[prod] = image
                        used[image] = True
                        trail.append(prod)
                        queue.append(prod)
                    elif mapping[prod] != image:
                        return False
        return True

    def extend():
        x = next((i for i in range(n) if mapping[i] == -1), None)
        if x is None:
            return True
        for y in candidates[x]:
            if used[y]:
                continue
            mapping[x] = y
            used[y] = True
            trail = [x]
            if close_over(x, trail) and extend():
                return True
            for p in trail:
                used[mapping[p]] = False
                mapping[p] = -1
        return False

    return list(mapping) if extend() else None


def brute_vertex_connectivity(g: Graph) -> int:
    n = g.vertex_count
    if n <= 1:
        return 0
    for size in range(n - 1):
        for cut in combinations(range(n), size):
            keep = set(range(n)) - set(cut)
            if len(keep) < 2:
                continue
            start = next(iter(keep))
            seen = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in iter_bits(g.adj[v]):
                    if w in keep and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen != keep:
                return size
    return n - 1


def brute_simple_paths(g: Graph, x: int, y: int, max_len: int):
    """All simple x-y paths with at most max_len edges, as vertex tuples."""
    out = []

    def walk(path):
        v = path[-1]
        if v == y:
            out.append(tuple(path))
            return
        if len(path) > max_len:
            return
        for w in range(g.vertex_count):
            if g.adjacent(v, w) and w not in path:
                walk(path + [w])

    walk([x])
    return [p for p in out if len(p) >= 2]


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Permutation-by-permutation isomorphism test; only for tiny graphs."""
    n = g1.vertex_count
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    for perm in permutations(range(n)):
        if all((g2.adj[perm[u]] >> perm[v] & 1) == (g1.adj[u] >> v & 1)
               for u in range(n) for v in range(n) if u != v):
            return True
    return False
