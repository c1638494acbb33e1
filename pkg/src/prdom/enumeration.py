"""Exhaustive generation of trees.

``enumerate_free_trees`` yields one representative per isomorphism class
using the level-sequence successor method for rooted trees, filtered to
centroid-rooted representatives and deduplicated by canonical form. The
independent cross-check path, generating every labeled tree from its Prufer
sequence, lives here too; it is exponentially slower and exists so the two
generators can be compared on small orders.
"""

from __future__ import annotations

import heapq
import itertools
import random
from collections.abc import Iterator, Sequence

from .canonical import canonical_form
from .graphs import Graph, Tree, make_path

FREE_TREE_MAX_N = 18


def _level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of all rooted trees on n vertices.

    Root has level 1; a sequence is canonical when every vertex's child
    sequences appear in non-increasing lexicographic order. Successor rule:
    truncate at the rightmost level > 2 and tile the block starting at that
    vertex's parent.
    """
    if n == 1:
        yield [1]
        return
    seq = list(range(1, n + 1))
    while True:
        yield seq
        p = -1
        for i in range(n - 1, -1, -1):
            if seq[i] > 2:
                p = i
                break
        if p < 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        nxt = seq[:p]
        block = seq[q:p]
        while len(nxt) < n:
            nxt.extend(block[: n - len(nxt)])
        seq = nxt


def _sequence_parents(seq: Sequence[int]) -> list[int]:
    parent = [-1] * len(seq)
    last_at_level: list[int] = []
    for v, lev in enumerate(seq):
        if lev > 1:
            parent[v] = last_at_level[lev - 2]
        if lev - 1 < len(last_at_level):
            last_at_level[lev - 1] = v
            del last_at_level[lev:]
        else:
            last_at_level.append(v)
    return parent


def _root_is_centroid(parent: list[int]) -> bool:
    n = len(parent)
    size = [1] * n
    widest = [0] * n
    for v in range(n - 1, 0, -1):  # children always follow their parent
        p = parent[v]
        size[p] += size[v]
        if size[v] > widest[p]:
            widest[p] = size[v]
    best = n
    for v in range(n):
        w = widest[v]
        up = n - size[v]
        if up > w:
            w = up
        if w < best:
            best = w
    return widest[0] == best  # root has no "up" part


def _parents_to_tree(parent: list[int]) -> Tree:
    n = len(parent)
    adj: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        adj[parent[v]].append(v)
        adj[v].append(parent[v])
    g = Graph._from_adjacency(n, tuple(tuple(sorted(a)) for a in adj))
    return Tree._wrap(g)


def enumerate_free_trees(n: int) -> Iterator[Tree]:
    """One tree per isomorphism class, in a fixed deterministic order."""
    if not (1 <= n <= FREE_TREE_MAX_N):
        raise ValueError(f"supported range is 1..{FREE_TREE_MAX_N}, got {n}")
    if n <= 2:
        yield make_path(n)
        return
    seen: set[bytes] = set()
    for seq in _level_sequences(n):
        parent = _sequence_parents(seq)
        if not _root_is_centroid(parent):
            continue
        t = _parents_to_tree(parent)
        key = canonical_form(t)
        if key in seen:
            continue
        seen.add(key)
        yield t


def tree_from_prufer(seq: Sequence[int]) -> Tree:
    """The labeled tree on len(seq)+2 vertices with the given Prufer sequence.

    Inverse of the classic encoding: repeatedly join the smallest leaf to
    the next sequence entry.
    """
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        if not (0 <= x < n):
            raise ValueError(f"label {x} outside 0..{n - 1}")
        degree[x] += 1
    adj: list[list[int]] = [[] for _ in range(n)]
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        adj[leaf].append(x)
        adj[x].append(leaf)
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    adj[u].append(v)
    adj[v].append(u)
    g = Graph._from_adjacency(n, tuple(tuple(sorted(a)) for a in adj))
    return Tree._wrap(g)


def all_labeled_trees(n: int) -> Iterator[Tree]:
    """Every labeled tree on n vertices (n^(n-2) of them). Small n only."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n <= 2:
        yield make_path(n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_prufer(seq)


def random_labeled_tree(n: int, rng: random.Random) -> Tree:
    """Uniform random labeled tree via a random Prufer sequence."""
    if n <= 2:
        return make_path(n)
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)])
