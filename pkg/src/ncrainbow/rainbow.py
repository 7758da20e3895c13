"""Rainbow-k-connectivity: verification, certificates, and coloring search.

A rainbow path repeats no edge color, so under c colors it has at most c
edges. For two colors that means length <= 2, and every rainbow path is
either the direct edge or a 2-path through a common neighbor whose two
edge colors differ; such paths are automatically pairwise internally
disjoint, so verification is a count per vertex pair. Three or more
colors fall back to enumeration plus backtracking selection, intended
only for small exhaustive studies.

Certificates returned by the verifier are always re-checked by an
independent validator that shares no code with the path selector.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .colorings import EdgeColoring, random_two_coloring
from .graphs import Graph, connectivity_at_least, iter_bits


class PreconditionKappa(Exception):
    """Requested k exceeds the vertex connectivity of the graph."""


class ColoringRejected(Exception):
    """A coloring offered for certification failed verification."""


Path_ = tuple[int, ...]


@dataclass(frozen=True)
class RainbowCertificate:
    k: int
    per_pair: dict[tuple[int, int], tuple[Path_, ...]]


@dataclass(frozen=True)
class FailureWitness:
    pair: tuple[int, int]
    k: int
    found: int


@dataclass(frozen=True)
class Rc2Certificate:
    lower_bound: int
    certificate: RainbowCertificate
    rc2: int
    rc: int


def enumerate_rainbow_paths(g: Graph, col: EdgeColoring, x: int, y: int,
                            max_len: int) -> list[Path_]:
    """All simple x-y paths of <= max_len edges with distinct edge colors.

    Output is lexicographic by vertex sequence (depth-first extension in
    ascending neighbor order).
    """
    if x == y:
        raise ValueError("endpoints must differ")
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    out: list[Path_] = []
    path = [x]

    def dfs(v: int, visited: int, colors_used: frozenset[int], length: int) -> None:
        if length == max_len:
            return
        for w in g.neighbors(v):
            c = col.color_of(v, w)
            if c in colors_used:
                continue
            if w == y:
                out.append(tuple(path) + (y,))
                continue
            if visited >> w & 1:
                continue
            path.append(w)
            dfs(w, visited | (1 << w), colors_used | {c}, length + 1)
            path.pop()

    dfs(x, 1 << x, frozenset(), 0)
    return out


def short_rainbow_paths(g: Graph, col: EdgeColoring, x: int, y: int) -> list[Path_]:
    """The complete set of rainbow x-y paths of length <= 2.

    Direct edge first, then one 2-path per common neighbor whose two edge
    colors differ; all of these are pairwise internally disjoint.
    """
    paths: list[Path_] = []
    if g.adjacent(x, y):
        paths.append((x, y))
    masks = col.color_masks()
    bichromatic = 0
    for c1 in range(1, col.color_count + 1):
        for c2 in range(1, col.color_count + 1):
            if c1 != c2:
                bichromatic |= masks[c1][x] & masks[c2][y]
    paths.extend((x, w, y) for w in iter_bits(bichromatic))
    return paths


def _internal_mask(path: Path_) -> int:
    m = 0
    for v in path[1:-1]:
        m |= 1 << v
    return m


def select_disjoint_paths(paths: Sequence[Path_], k: int) -> list[Path_] | None:
    """Pick k pairwise internally-disjoint paths, or None if impossible."""
    if k == 0:
        return []
    p = len(paths)
    if p < k:
        return None
    internals = [_internal_mask(path) for path in paths]
    conflict = [0] * p
    for i in range(p):
        for j in range(i + 1, p):
            if internals[i] & internals[j]:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i

    chosen: list[int] = []

    def bt(avail: int, need: int) -> bool:
        if need == 0:
            return True
        if avail.bit_count() < need:
            return False
        low = avail & -avail
        i = low.bit_length() - 1
        chosen.append(i)
        if bt(avail & ~low & ~conflict[i], need - 1):
            return True
        chosen.pop()
        return bt(avail & ~low, need)

    if bt((1 << p) - 1, k):
        return [paths[i] for i in chosen]
    return None


def max_disjoint_paths(paths: Sequence[Path_]) -> int:
    """Largest number of pairwise internally-disjoint paths in the list."""
    best = 0
    k = len(paths)
    while k > best:
        if select_disjoint_paths(paths, k) is not None:
            return k
        k -= 1
    return k


def _pair_paths(g: Graph, col: EdgeColoring, x: int, y: int, k: int) -> list[Path_] | None:
    if col.color_count <= 2:
        shorts = short_rainbow_paths(g, col, x, y)
        return shorts[:k] if len(shorts) >= k else None
    paths = enumerate_rainbow_paths(g, col, x, y, max_len=col.color_count)
    return select_disjoint_paths(paths, k)


def two_color_failure_pair(g: Graph, col: EdgeColoring, k: int) -> tuple[int, int] | None:
    """First vertex pair (in index order) lacking k disjoint rainbow paths.

    Count-only fast path for 2-colorings; used by the random search inner
    loop. None means the coloring passes.
    """
    if col.color_count != 2:
        raise ValueError("fast counting is defined for 2-colorings only")
    masks = col.color_masks()
    m1, m2 = masks[1], masks[2]
    n = g.vertex_count
    for x in range(n):
        ax = g.adj[x]
        for y in range(x + 1, n):
            count = ((m1[x] & m2[y]) | (m2[x] & m1[y])).bit_count() + (ax >> y & 1)
            if count < k:
                return (x, y)
    return None


def is_rainbow_k_connected(g: Graph, col: EdgeColoring, k: int
                           ) -> RainbowCertificate | FailureWitness:
    """Certificate with k disjoint rainbow paths per pair, or the first failure."""
    if k < 1:
        raise ValueError("k must be positive")
    if col.graph is not g and col.graph.adj != g.adj:
        raise ValueError("coloring belongs to a different graph")
    n = g.vertex_count
    per_pair: dict[tuple[int, int], tuple[Path_, ...]] = {}
    for x in range(n):
        for y in range(x + 1, n):
            paths = _pair_paths(g, col, x, y, k)
            if paths is None:
                if col.color_count <= 2:
                    found = len(short_rainbow_paths(g, col, x, y))
                else:
                    found = max_disjoint_paths(
                        enumerate_rainbow_paths(g, col, x, y, col.color_count))
                return FailureWitness((x, y), k, found)
            per_pair[(x, y)] = tuple(paths)
    cert = RainbowCertificate(k, per_pair)
    validate_certificate(g, col, cert)
    return cert


def validate_certificate(g: Graph, col: EdgeColoring, cert: RainbowCertificate) -> None:
    """Independent re-check of a certificate; raises ValueError on any defect.

    Deliberately shares no code with the selector: path validity, rainbow
    condition, pairwise internal disjointness, and pair coverage are all
    rederived from the graph and coloring alone.
    """
    n = g.vertex_count
    expected_pairs = {(x, y) for x in range(n) for y in range(x + 1, n)}
    if set(cert.per_pair) != expected_pairs:
        raise ValueError("certificate does not cover every vertex pair")
    for (x, y), paths in cert.per_pair.items():
        if len(paths) < cert.k:
            raise ValueError(f"pair ({x},{y}) lists {len(paths)} < {cert.k} paths")
        if len(set(paths)) != len(paths):
            raise ValueError(f"pair ({x},{y}) lists a path twice")
        internal_sets: list[set[int]] = []
        for p in paths:
            if p[0] != x or p[-1] != y:
                raise ValueError(f"path {p} does not join ({x},{y})")
            if len(set(p)) != len(p):
                raise ValueError(f"path {p} repeats a vertex")
            colors = []
            for a, b in zip(p, p[1:]):
                if not g.adjacent(a, b):
                    raise ValueError(f"path {p} uses non-edge ({a},{b})")
                colors.append(col.color_of(a, b))
            if len(set(colors)) != len(colors):
                raise ValueError(f"path {p} repeats a color")
            internal_sets.append(set(p[1:-1]))
        for i in range(len(internal_sets)):
            for j in range(i + 1, len(internal_sets)):
                if internal_sets[i] & internal_sets[j]:
                    raise ValueError(
                        f"paths for ({x},{y}) share internal vertices"
                    )


def _search_chunk(args) -> int | None:
    g, k, seed, start, stop = args
    for i in range(start, stop):
        col = random_two_coloring(g, seed + i)
        if two_color_failure_pair(g, col, k) is None:
            return i
    return None


def search_two_coloring(g: Graph, k: int, attempts: int, seed: int,
                        workers: int = 1) -> EdgeColoring | None:
    """Seeded random search for a rainbow-k-connecting 2-coloring.

    Attempt i draws random_two_coloring(g, seed + i). Single-worker runs
    return the lowest-index success; with workers > 1 attempt blocks are
    distributed and any verified success may be returned. None after the
    budget is exhausted.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not connectivity_at_least(g, k):
        raise PreconditionKappa(f"k={k} exceeds the vertex connectivity")
    if attempts < 1:
        return None

    winner: int | None = None
    if workers <= 1:
        for i in range(attempts):
            col = random_two_coloring(g, seed + i)
            if two_color_failure_pair(g, col, k) is None:
                winner = i
                break
    else:
        chunk = max(1, attempts // (workers * 8))
        jobs = [(g, k, seed, lo, min(lo + chunk, attempts))
                for lo in range(0, attempts, chunk)]
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            for res in pool.imap_unordered(_search_chunk, jobs):
                if res is not None:
                    winner = res
                    pool.terminate()
                    break
    if winner is None:
        return None
    col = random_two_coloring(g, seed + winner)
    result = is_rainbow_k_connected(g, col, k)
    if isinstance(result, FailureWitness):  # fast path and verifier disagree
        raise AssertionError(f"search accepted a failing coloring at {result.pair}")
    return col


def rc_lower_bound(g: Graph, k: int) -> int:
    """Colors provably required for rainbow-k-connectivity.

    One color admits only single-edge rainbow paths and a simple graph
    has at most one edge per pair, so k >= 2 forces two colors; so does
    k = 1 on a non-complete graph, where some pair needs a path of
    length >= 2. Complete graphs with k = 1 need just one color.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1 and g.is_complete():
        return 1
    return 2


def certify_rc2(g: Graph, col: EdgeColoring) -> Rc2Certificate:
    """Exact rainbow-2-connectivity 2: matching lower bound plus a verified
    2-coloring certificate. Also settles plain rainbow connectivity via the
    k=1 projection of the same certificate."""
    if col.color_count > 2 or len(col.colors_used() | {1}) > 2:
        raise ColoringRejected("certification needs a coloring on at most 2 colors")
    result = is_rainbow_k_connected(g, col, 2)
    if isinstance(result, FailureWitness):
        raise ColoringRejected(
            f"pair {result.pair} has only {result.found} disjoint rainbow paths"
        )
    lower = rc_lower_bound(g, 2)
    rc = 1 if g.is_complete() else 2
    return Rc2Certificate(lower_bound=lower, certificate=result, rc2=2, rc=rc)


def certificate_to_dict(cert: RainbowCertificate, col: EdgeColoring) -> dict:
    pairs = []
    for (x, y), paths in sorted(cert.per_pair.items()):
        pairs.append({
            "pair": [x, y],
            "paths": [list(p) for p in paths],
            "colors_used": [
                [col.color_of(a, b) for a, b in zip(p, p[1:])] for p in paths
            ],
        })
    return {"k": cert.k, "pairs": pairs}


def write_certificate(cert: RainbowCertificate, col: EdgeColoring,
                      path: str | Path) -> None:
    Path(path).write_text(json.dumps(certificate_to_dict(cert, col), indent=1) + "\n")


def read_certificate(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())
