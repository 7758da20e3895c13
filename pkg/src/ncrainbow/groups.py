"""Finite groups as validated Cayley tables.

Elements are indices 0..order-1 with the identity pinned at index 0.
Every constructor routes through the same exhaustive validation (Latin
square, identity, inverses, O(n^3) associativity), so a `Group` instance
can be assumed lawful everywhere downstream. Groups are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Sequence


class GroupError(Exception):
    """Base class for Cayley-table validation failures."""


class NotLatinSquare(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class AssociativityViolation(GroupError):
    pass


class InvalidTwist(GroupError):
    pass


class NotAutomorphism(GroupError):
    pass


class NotHomomorphism(GroupError):
    pass


class NotCentral(GroupError):
    pass


class OrderMismatch(GroupError):
    pass


@dataclass(frozen=True)
class Group:
    """Finite group given by its full multiplication table.

    ``table[i][j]`` is the index of the product i*j, ``names[i]`` the
    display name of element i, and ``name`` an identifier for reports.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    name: str = "G"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(0)

    def element_order(self, a: int) -> int:
        t, power = 1, a
        while power != 0:
            power = self.table[power][a]
            t += 1
        return t

    @cached_property
    def is_abelian(self) -> bool:
        return len(self.center().members) == self.order

    def centralizer(self, g: int) -> "ElementSet":
        """Elements commuting with g; always a subgroup containing the center."""
        if not 0 <= g < self.order:
            raise IndexError(f"element {g} out of range for order {self.order}")
        row = self.table[g]
        members = tuple(x for x in range(self.order) if self.table[x][g] == row[x])
        return ElementSet(self, members)

    def centralizer_mask(self, g: int) -> int:
        return self._centralizer_masks[g]

    @cached_property
    def _centralizer_masks(self) -> tuple[int, ...]:
        masks = []
        for g in range(self.order):
            row = self.table[g]
            m = 0
            for x in range(self.order):
                if self.table[x][g] == row[x]:
                    m |= 1 << x
            masks.append(m)
        return tuple(masks)

    def center(self) -> "ElementSet":
        """Elements commuting with everything; contains index 0."""
        members = tuple(
            z
            for z in range(self.order)
            if all(self.table[z][g] == self.table[g][z] for g in range(self.order))
        )
        return ElementSet(self, members)


@dataclass(frozen=True)
class ElementSet:
    """Sorted set of element indices of a fixed group."""

    group: Group
    members: tuple[int, ...]

    @property
    def mask(self) -> int:
        m = 0
        for x in self.members:
            m |= 1 << x
        return m

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in set(self.members)


def _validate_table(table: list[list[int]], name: str) -> None:
    n = len(table)
    expected = list(range(n))
    for i, row in enumerate(table):
        if sorted(row) != expected:
            raise NotLatinSquare(f"{name}: row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        col = sorted(table[i][j] for i in range(n))
        if col != expected:
            raise NotLatinSquare(f"{name}: column {j} is not a permutation of 0..{n - 1}")
    if list(table[0]) != expected or any(table[i][0] != i for i in range(n)):
        raise NoIdentity(f"{name}: index 0 is not a two-sided identity")
    for i in range(n):
        if 0 not in table[i]:
            raise NoInverse(f"{name}: element {i} has no inverse")
    # (i*j)*k == i*(j*k) for all k collapses to a row comparison per (i, j).
    for i in range(n):
        row_i = table[i]
        for j in range(n):
            lhs = table[row_i[j]]
            rhs = [row_i[x] for x in table[j]]
            if lhs != rhs:
                k = next(k for k in range(n) if lhs[k] != rhs[k])
                raise AssociativityViolation(
                    f"{name}: ({i}*{j})*{k} = {lhs[k]} but {i}*({j}*{k}) = {rhs[k]}"
                )


def _finish(table: list[list[int]], names: Sequence[str], name: str) -> Group:
    _validate_table(table, name)
    return Group(
        order=len(table),
        table=tuple(tuple(row) for row in table),
        names=tuple(names),
        name=name,
    )


def group_from_cayley_table(
    table: Sequence[Sequence[int]],
    names: Sequence[str] | None = None,
    name: str = "imported",
) -> Group:
    """Validate an arbitrary table, relocating its identity to index 0."""
    n = len(table)
    if n == 0:
        raise ValueError("empty table")
    rows = [list(row) for row in table]
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not isinstance(x, int) or not 0 <= x < n:
                raise ValueError(f"row {i} contains out-of-range entry {x!r}")
    if names is None:
        names = [f"x{i}" for i in range(n)]
    if len(names) != n:
        raise ValueError(f"{len(names)} names for {n} elements")
    if len(set(names)) != n:
        raise ValueError("element names are not distinct")

    identities = [
        e
        for e in range(n)
        if rows[e] == list(range(n)) and all(rows[i][e] == i for i in range(n))
    ]
    if len(identities) != 1:
        raise NoIdentity(f"{name}: found {len(identities)} two-sided identities")
    e = identities[0]
    if e != 0:
        # Swap labels 0 <-> e so the identity lands at index 0.
        perm = list(range(n))
        perm[0], perm[e] = e, 0
        rows = [[perm[rows[perm[a]][perm[b]]] for b in range(n)] for a in range(n)]
        names = [names[perm[i]] for i in range(n)]
    return _finish(rows, names, name)


def cyclic(n: int) -> Group:
    """Additive group of integers mod n."""
    if n < 1:
        raise ValueError("order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return _finish(table, [str(i) for i in range(n)], f"Z{n}")


def dihedral(n: int) -> Group:
    """Symmetries of the regular n-gon, order 2n: r^n = s^2 = 1, s r s = r^-1.

    Indices 0..n-1 are r^i, indices n..2n-1 are r^i * s.
    """
    if n < 3:
        raise ValueError("dihedral requires n >= 3")
    return _finish(*_two_generator_table(n, twist=n - 1, flip_power=0))


def metacyclic(m: int, t: int) -> Group:
    """Order-2m group r^m = s^2 = 1, s r s = r^t. Requires t^2 = 1 (mod m)."""
    if m < 1:
        raise ValueError("m must be positive")
    t %= m
    if (t * t) % m != 1 % m:
        raise InvalidTwist(f"t={t} is not an involution exponent mod {m}")
    table, names, _ = _two_generator_table(m, twist=t, flip_power=0)
    return _finish(table, names, f"M({m},{t})")


def dicyclic(m: int) -> Group:
    """Generalized quaternion-type group of order 4m: a^2m = 1, b^2 = a^m, b a b^-1 = a^-1.

    Indices 0..2m-1 are a^i, indices 2m..4m-1 are a^i * b.
    """
    if m < 2:
        raise ValueError("dicyclic requires m >= 2")
    return _finish(*_two_generator_table(2 * m, twist=2 * m - 1, flip_power=m,
                                         letters=("a", "b"), name=f"Q{4 * m}"))


def _two_generator_table(
    n: int,
    twist: int,
    flip_power: int,
    letters: tuple[str, str] = ("r", "s"),
    name: str | None = None,
):
    """Table for <r, s | r^n = 1, s^2 = r^flip_power, s r s^-1 = r^twist>.

    Covers dihedral (twist = n-1, flip_power = 0), metacyclic split
    extensions, and dicyclic groups (flip_power = m on a 2m-cycle).
    """
    size = 2 * n
    table = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            table[i][j] = (i + j) % n  # r^i r^j
            table[i][n + j] = n + (i + j) % n  # r^i (r^j s)
            table[n + i][j] = n + (i + twist * j) % n  # (r^i s) r^j
            table[n + i][n + j] = (i + twist * j + flip_power) % n  # (r^i s)(r^j s)
    a, b = letters
    names = [f"{a}^{i}" for i in range(n)] + [f"{a}^{i}*{b}" for i in range(n)]
    return table, names, name or f"D{size}"


def direct_product(g: Group, h: Group) -> Group:
    """Componentwise product on pairs, indexed (x, y) -> x*|H| + y."""
    nh = h.order
    size = g.order * nh
    table = [[0] * size for _ in range(size)]
    for x1 in range(g.order):
        for y1 in range(nh):
            row = table[x1 * nh + y1]
            gr, hr = g.table[x1], h.table[y1]
            for x2 in range(g.order):
                base = gr[x2] * nh
                for y2 in range(nh):
                    row[x2 * nh + y2] = base + hr[y2]
    names = [f"({gn},{hn})" for gn in g.names for hn in h.names]
    return _finish(table, names, f"{g.name}x{h.name}")


def semidirect_product(n: Group, h: Group, action: Sequence[Sequence[int]]) -> Group:
    """Split extension of n by h, with h acting through automorphisms of n.

    ``action[y]`` is the automorphism applied by h-element y, given as a
    permutation of n's element indices. The product rule is
    (x1, y1)(x2, y2) = (x1 * action[y1](x2), y1 y2).
    """
    if len(action) != h.order:
        raise ValueError(f"need {h.order} automorphisms, got {len(action)}")
    perms = [list(p) for p in action]
    ident = list(range(n.order))
    for y, p in enumerate(perms):
        if sorted(p) != ident:
            raise NotAutomorphism(f"action[{y}] is not a permutation of N")
        for a in range(n.order):
            for b in range(n.order):
                if p[n.table[a][b]] != n.table[p[a]][p[b]]:
                    raise NotAutomorphism(
                        f"action[{y}] breaks the product at ({a},{b})"
                    )
    for y1 in range(h.order):
        for y2 in range(h.order):
            composed = [perms[y1][perms[y2][x]] for x in range(n.order)]
            if composed != perms[h.table[y1][y2]]:
                raise NotHomomorphism(
                    f"action({y1}*{y2}) differs from action({y1})∘action({y2})"
                )
    nh = h.order
    size = n.order * nh
    table = [[0] * size for _ in range(size)]
    for x1 in range(n.order):
        for y1 in range(nh):
            row = table[x1 * nh + y1]
            act = perms[y1]
            for x2 in range(n.order):
                base = n.table[x1][act[x2]] * nh
                for y2 in range(nh):
                    row[x2 * nh + y2] = base + h.table[y1][y2]
    names = [f"({gn},{hn})" for gn in n.names for hn in h.names]
    return _finish(table, names, f"({n.name}):({h.name})")


def central_product(g: Group, h: Group, zg: int, zh: int) -> Group:
    """Quotient of g x h identifying the central elements zg and zh.

    zg and zh must be central and of the same order k; the result is
    (g x h) / <(zg, zh^-1)> of order |g||h|/k. Cosets are enumerated
    explicitly and represented by their lexicographically least member,
    so the output table is canonical.
    """
    if zg not in g.center():
        raise NotCentral(f"element {zg} is not central in {g.name}")
    if zh not in h.center():
        raise NotCentral(f"element {zh} is not central in {h.name}")
    k = g.element_order(zg)
    if k != h.element_order(zh):
        raise OrderMismatch(
            f"orders differ: |{g.names[zg]}| = {k}, |{h.names[zh]}| = {h.element_order(zh)}"
        )
    prod = direct_product(g, h)
    nh = h.order
    gen = zg * nh + h.inverse(zh)

    coset_of = [-1] * prod.order
    reps: list[int] = []
    for d in range(prod.order):
        if coset_of[d] != -1:
            continue
        orbit = [d]
        cur = prod.table[d][gen]
        while cur != d:
            orbit.append(cur)
            cur = prod.table[cur][gen]
        rep = min(orbit)
        idx = len(reps)
        reps.append(rep)
        for x in orbit:
            coset_of[x] = idx
    if len(reps) * k != prod.order:
        raise OrderMismatch("coset enumeration produced an unexpected order")
    table = [
        [coset_of[prod.table[a][b]] for b in reps]
        for a in reps
    ]
    names = [prod.names[r] for r in reps]
    return _finish(table, names, f"({g.name})o({h.name})")


def load_cayley_table(path: str | Path, name: str | None = None) -> Group:
    """Read the `cayley` text format and return a validated Group."""
    path = Path(path)
    lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("cayley"):
        raise ValueError(f"{path}: expected leading 'cayley <n>' line")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"{path}: malformed header {lines[0]!r}")
    n = int(head[1])
    pos = 1
    names: list[str] | None = None
    if pos < len(lines) and lines[pos].startswith("names"):
        names = lines[pos].split()[1:]
        if len(names) != n:
            raise ValueError(f"{path}: names line has {len(names)} tokens, expected {n}")
        pos += 1
    if len(lines) - pos != n:
        raise ValueError(f"{path}: expected {n} table rows, found {len(lines) - pos}")
    table = []
    for ln in lines[pos:]:
        row = [int(tok) for tok in ln.split()]
        if len(row) != n:
            raise ValueError(f"{path}: row {ln!r} has {len(row)} entries, expected {n}")
        table.append(row)
    return group_from_cayley_table(table, names, name or path.stem)


def write_cayley_table(group: Group, path: str | Path) -> None:
    """Write the `cayley` text format (round-trips through load_cayley_table)."""
    for nm in group.names:
        if any(c.isspace() for c in nm):
            raise ValueError(f"element name {nm!r} contains whitespace")
    out = [f"cayley {group.order}", "names " + " ".join(group.names)]
    out.extend(" ".join(str(x) for x in row) for row in group.table)
    Path(path).write_text("\n".join(out) + "\n")
