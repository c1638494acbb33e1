"""Exact perfect Roman domination on trees and forests.

A perfect Roman dominating function (PRDF) labels every vertex 0, 1, or 2
so that each 0-vertex has exactly one neighbor labeled 2; the domination
number is the minimum possible label sum. The linear-time route is a rooted
dynamic program with four states per vertex:

  A  label 0, already satisfied by exactly one child labeled 2
     (the parent must then avoid label 2)
  B  label 0, not yet satisfied inside the subtree
     (the parent must be labeled 2)
  C  label 1
  D  label 2

Admissible child states given the vertex state:

  D: children from {B, C, D}   (an A-child would see a second 2)
  A: exactly one D-child, the rest from {A, C}
  B: no D-child, all children from {A, C}
  C: children from {A, C, D}

State costs are 0, 0, 1, 2 plus the children minima; state A is the usual
"sum of min(A, C) plus the cheapest swap of one child to D". At a root only
A, C, D are valid. The exponential routes (a literal scan of all 3^n
labelings, and a scan over all 2^n placements of the 2s with the forced
minimal completion) exist as independent ground truth for small graphs.

The set returned by ``forced_zero_set`` contains the vertices labeled 0 by
every minimum-weight PRDF; "any" in the usual phrasing of that set is read
as "every".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from collections.abc import Iterable, Sequence

import numpy as np

from .graphs import Forest, Graph, Tree

INFEASIBLE = 1 << 60
BRUTE_FORCE_MAX_N = 16

_Adjacency = Sequence[Sequence[int]]


class SizeLimitError(ValueError):
    """Input too large for an exhaustive routine."""


@dataclass(frozen=True)
class Assignment:
    """Vertex labels in {0, 1, 2}, candidate perfect Roman dominating function."""

    values: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.values)

    def is_valid_on(self, g: Graph | Tree | Forest) -> bool:
        adj = g.adjacency
        if len(self.values) != len(adj):
            return False
        for v, val in enumerate(self.values):
            if val == 0:
                twos = sum(1 for u in adj[v] if self.values[u] == 2)
                if twos != 1:
                    return False
            elif val not in (1, 2):
                return False
        return True


def is_valid_prdf(g: Graph | Tree | Forest, values: Sequence[int]) -> bool:
    """Definitional check: every 0-vertex has exactly one 2-neighbor."""
    return Assignment(tuple(values)).is_valid_on(g)


def _adjacency_of(x: Graph | Tree | Forest) -> _Adjacency:
    return x.adjacency


def _bfs_forest(adj: _Adjacency) -> tuple[list[int], list[int]]:
    """BFS order and parent array over every component (parent -1 at roots)."""
    n = len(adj)
    parent = [-1] * n
    order = [0] * n
    seen = bytearray(n)
    k = 0
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = 1
        order[k] = s
        k += 1
        head = k - 1
        while head < k:
            v = order[head]
            head += 1
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = 1
                    parent[u] = v
                    order[k] = u
                    k += 1
    return order, parent


def _gamma(adj: _Adjacency) -> int:
    """Domination number of a forest given as adjacency lists. O(n)."""
    n = len(adj)
    if n == 0:
        return 0
    order, parent = _bfs_forest(adj)
    sum_ac = [0] * n
    swap = [INFEASIBLE] * n
    sum_bcd = [0] * n
    sum_acd = [0] * n
    total = 0
    for v in reversed(order):
        b = sum_ac[v]
        a = b + swap[v]
        c = 1 + sum_acd[v]
        d = 2 + sum_bcd[v]
        p = parent[v]
        if p < 0:
            m = c if c < d else d
            if a < m:
                m = a
            total += m
        else:
            mac = a if a < c else c
            sum_ac[p] += mac
            delta = d - mac
            if delta < swap[p]:
                swap[p] = delta
            mbcd = b if b < c else c
            if d < mbcd:
                mbcd = d
            sum_bcd[p] += mbcd
            sum_acd[p] += mac if mac < d else d
    return total


@dataclass(frozen=True)
class StateTable:
    """Per-vertex costs of the four root-directed states, for one component.

    ``order`` is a BFS order from ``root``; ``parent[root]`` is -1. Costs at
    or above INFEASIBLE mean the state cannot be completed (a leaf cannot be
    satisfied from below, so its A entry is always INFEASIBLE).
    """

    root: int
    order: tuple[int, ...]
    parent: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]


def _tables(adj: _Adjacency, root: int) -> StateTable:
    """Run the DP rooted at ``root`` over its component, keeping all states."""
    n = len(adj)
    parent = [-1] * n
    order = [root]
    seen = bytearray(n)
    seen[root] = 1
    for v in order:
        for u in adj[v]:
            if not seen[u]:
                seen[u] = 1
                parent[u] = v
                order.append(u)
    a = [0] * n
    b = [0] * n
    c = [0] * n
    d = [0] * n
    sum_ac = [0] * n
    swap = [INFEASIBLE] * n
    sum_bcd = [0] * n
    sum_acd = [0] * n
    for v in reversed(order):
        bv = sum_ac[v]
        av = bv + swap[v]
        cv = 1 + sum_acd[v]
        dv = 2 + sum_bcd[v]
        a[v], b[v], c[v], d[v] = av, bv, cv, dv
        p = parent[v]
        if p >= 0:
            mac = av if av < cv else cv
            sum_ac[p] += mac
            delta = dv - mac
            if delta < swap[p]:
                swap[p] = delta
            mbcd = bv if bv < cv else cv
            if dv < mbcd:
                mbcd = dv
            sum_bcd[p] += mbcd
            sum_acd[p] += mac if mac < dv else dv
    return StateTable(
        root=root,
        order=tuple(order),
        parent=tuple(parent),
        a=tuple(a),
        b=tuple(b),
        c=tuple(c),
        d=tuple(d),
    )


def prd_number(x: Tree | Forest) -> int:
    """Perfect Roman domination number of a tree or forest (0 when empty)."""
    return _gamma(_adjacency_of(x))


def _reconstruct(table: StateTable, adj: _Adjacency, root_state: str) -> dict[int, int]:
    """Walk one component's table back into labels, deterministically.

    Ties prefer the earlier state letter, then the lower child label (the
    adjacency order is ascending, so first-found wins).
    """
    a, b, c, d = table.a, table.b, table.c, table.d
    parent = table.parent
    values: dict[int, int] = {}
    stack = [(table.root, root_state)]
    while stack:
        v, state = stack.pop()
        children = [u for u in adj[v] if parent[u] == v]
        if state == "A":
            values[v] = 0
            best = None
            for u in children:
                mac = a[u] if a[u] < c[u] else c[u]
                delta = d[u] - mac
                if best is None or delta < best[0]:
                    best = (delta, u)
            chosen = best[1]
            for u in children:
                if u == chosen:
                    stack.append((u, "D"))
                else:
                    stack.append((u, "A" if a[u] <= c[u] else "C"))
        elif state == "B":
            values[v] = 0
            for u in children:
                stack.append((u, "A" if a[u] <= c[u] else "C"))
        elif state == "C":
            values[v] = 1
            for u in children:
                if a[u] <= c[u] and a[u] <= d[u]:
                    stack.append((u, "A"))
                elif c[u] <= d[u]:
                    stack.append((u, "C"))
                else:
                    stack.append((u, "D"))
        else:
            values[v] = 2
            for u in children:
                if b[u] <= c[u] and b[u] <= d[u]:
                    stack.append((u, "B"))
                elif c[u] <= d[u]:
                    stack.append((u, "C"))
                else:
                    stack.append((u, "D"))
    return values


def _component_roots(adj: _Adjacency) -> list[int]:
    n = len(adj)
    seen = bytearray(n)
    roots = []
    for s in range(n):
        if seen[s]:
            continue
        roots.append(s)
        seen[s] = 1
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = 1
                    stack.append(u)
    return roots


def optimal_assignment(x: Tree | Forest) -> Assignment:
    """One minimum-weight PRDF, reconstructed from the DP tables.

    Deterministic: each component is rooted at its smallest vertex and ties
    break toward the earlier state letter, then the lower child label.
    """
    adj = _adjacency_of(x)
    values = [0] * len(adj)
    for root in _component_roots(adj):
        table = _tables(adj, root)
        best = None
        for state, cost in (("A", table.a[root]), ("C", table.c[root]), ("D", table.d[root])):
            if best is None or cost < best[1]:
                best = (state, cost)
        part = _reconstruct(table, adj, best[0])
        for v, val in part.items():
            values[v] = val
    return Assignment(tuple(values))


def prd_number_forced(t: Tree, v: int, allowed: Iterable[int]) -> int | float:
    """Minimum PRDF weight subject to the label of ``v`` lying in ``allowed``.

    Rooting at ``v`` turns the constraint into a root-state restriction
    (0 -> A, 1 -> C, 2 -> D). Returns ``math.inf`` when no PRDF complies,
    which happens only for label 0 on an isolated vertex.
    """
    wanted = frozenset(allowed)
    if not wanted:
        raise ValueError("allowed label set must be nonempty")
    if not wanted <= {0, 1, 2}:
        raise ValueError(f"labels must lie in {{0, 1, 2}}, got {sorted(wanted)}")
    if not (0 <= v < t.n):
        raise ValueError(f"vertex {v} outside 0..{t.n - 1}")
    table = _tables(t.adjacency, v)
    best = INFEASIBLE
    if 0 in wanted and table.a[v] < best:
        best = table.a[v]
    if 1 in wanted and table.c[v] < best:
        best = table.c[v]
    if 2 in wanted and table.d[v] < best:
        best = table.d[v]
    return best if best < INFEASIBLE else float("inf")


def forced_zero_set(t: Tree) -> frozenset[int]:
    """Vertices labeled 0 by every minimum-weight PRDF.

    A vertex qualifies exactly when forcing any positive label on it costs
    strictly more than the unconstrained optimum. One rerooted DP per
    vertex, O(n^2) total.
    """
    adj = t.adjacency
    base = _gamma(adj)
    forced = []
    for v in range(t.n):
        table = _tables(adj, v)
        positive = table.c[v] if table.c[v] < table.d[v] else table.d[v]
        if positive > base:
            forced.append(v)
    return frozenset(forced)


# ---------------------------------------------------------------------------
# Exhaustive ground truth.

_POPCOUNT16: np.ndarray | None = None


def _popcount16() -> np.ndarray:
    global _POPCOUNT16
    if _POPCOUNT16 is None:
        table = np.zeros(1 << 16, dtype=np.uint8)
        for i in range(1, 1 << 16):
            table[i] = table[i >> 1] + (i & 1)
        _POPCOUNT16 = table
    return _POPCOUNT16


def _brute_ternary(adj: _Adjacency) -> tuple[int, list[tuple[int, ...]]]:
    n = len(adj)
    best: int | None = None
    found: list[tuple[int, ...]] = []
    for values in itertools.product((0, 1, 2), repeat=n):
        ok = True
        for v in range(n):
            if values[v] == 0:
                twos = 0
                for u in adj[v]:
                    if values[u] == 2:
                        twos += 1
                if twos != 1:
                    ok = False
                    break
        if not ok:
            continue
        w = sum(values)
        if best is None or w < best:
            best = w
            found = [values]
        elif w == best:
            found.append(values)
    return best if best is not None else 0, found


def _brute_two_sets(adj: _Adjacency) -> tuple[int, list[tuple[int, ...]]]:
    """Scan the 2^n placements of the label-2 set.

    For a fixed 2-set S the cheapest completion is forced: vertices outside
    S with exactly one S-neighbor take 0, every other outside vertex takes
    1. Any minimum-weight PRDF arises this way, so scanning all S recovers
    both the optimum and the complete set of optimal labelings.
    """
    n = len(adj)
    if n == 0:
        return 0, [()]
    nbr = np.zeros(n, dtype=np.int64)
    for v in range(n):
        mask = 0
        for u in adj[v]:
            mask |= 1 << u
        nbr[v] = mask
    pop = _popcount16()
    subsets = np.arange(1 << n, dtype=np.int64)
    weights = 2 * pop[subsets].astype(np.int64)
    for v in range(n):
        outside = ((subsets >> v) & 1) == 0
        hits = pop[subsets & nbr[v]]
        weights += outside & (hits != 1)
    best = int(weights.min())
    out = []
    for s in np.flatnonzero(weights == best):
        s = int(s)
        values = []
        for v in range(n):
            if (s >> v) & 1:
                values.append(2)
            elif bin(s & int(nbr[v])).count("1") == 1:
                values.append(0)
            else:
                values.append(1)
        out.append(tuple(values))
    return best, out


def brute_force(
    g: Graph | Tree | Forest,
    enumerate_all: bool = False,
    method: str = "auto",
) -> tuple[int, list[Assignment] | None]:
    """Exhaustive minimum over every labeling of any graph, n <= 16.

    ``method`` picks the route: "ternary" walks all 3^n labelings and keeps
    the valid ones, "subsets" scans the 2^n possible label-2 sets with the
    forced cheapest completion, and "auto" chooses by size. Both routes
    return identical results; with ``enumerate_all`` the full list of
    minimum-weight labelings comes back sorted.
    """
    adj = _adjacency_of(g)
    n = len(adj)
    if n > BRUTE_FORCE_MAX_N:
        raise SizeLimitError(f"brute force capped at n={BRUTE_FORCE_MAX_N}, got {n}")
    if method == "auto":
        method = "ternary" if n <= 7 else "subsets"
    if method == "ternary":
        best, found = _brute_ternary(adj)
    elif method == "subsets":
        best, found = _brute_two_sets(adj)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not enumerate_all:
        return best, None
    return best, [Assignment(v) for v in sorted(found)]
