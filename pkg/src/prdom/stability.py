"""Vertex-deletion stability and pendant attachments.

A tree is stable when deleting any single vertex leaves the perfect Roman
domination number unchanged. ``stability_report`` measures that directly,
one forest solve per vertex. ``attach_pendant_path`` hangs a short pendant
path off a chosen vertex; the weight deltas those attachments produce are
the subject of the attachment-delta sweep. ``optima_report`` enumerates all
minimum-weight labelings of a small tree and examines their structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Graph, Tree, remove_vertex
from .solver import SizeLimitError, brute_force, prd_number

OPTIMA_SCAN_MAX_N = 14


@dataclass(frozen=True)
class StabilityReport:
    """Deletion deltas for one tree: deltas[v] = number(T - v) - number(T)."""

    base: int
    deltas: tuple[int, ...]

    @property
    def stable(self) -> bool:
        return all(d == 0 for d in self.deltas)


def stability_report(t: Tree) -> StabilityReport:
    """Solve T and every T - v. O(n) solves, O(n^2) total."""
    base = prd_number(t)
    deltas = tuple(prd_number(remove_vertex(t, v)) - base for v in range(t.n))
    return StabilityReport(base=base, deltas=deltas)


def attach_pendant_path(t: Tree, u: int, length: int) -> Tree:
    """Hang a pendant path of 1, 2, or 3 new vertices off vertex u.

    New labels are appended: the vertex adjacent to u gets label n and the
    chain continues outward, so the far endpoint always carries the largest
    label n + length - 1.
    """
    if length not in (1, 2, 3):
        raise ValueError(f"pendant length must be 1, 2, or 3, got {length}")
    if not (0 <= u < t.n):
        raise ValueError(f"vertex {u} outside 0..{t.n - 1}")
    n = t.n
    edges = t.graph.edges()
    edges.append((u, n))
    for i in range(length - 1):
        edges.append((n + i, n + i + 1))
    return Tree(Graph(n + length, edges))


class BranchSite(NamedTuple):
    """Two leaves sharing a degree-3 support whose third branch is a 2-chain.

    ``center`` carries the two ``leaves``; its remaining neighbor ``chain``
    has degree 2 and continues to ``anchor``.
    """

    center: int
    chain: int
    anchor: int
    leaves: tuple[int, int]


def branch_sites(t: Tree) -> list[BranchSite]:
    """All occurrences of the two-leaf branch pattern, in label order."""
    adj = t.adjacency
    out = []
    for center in range(t.n):
        if len(adj[center]) != 3:
            continue
        leaves = [u for u in adj[center] if len(adj[u]) == 1]
        if len(leaves) != 2:
            continue
        chain = next(u for u in adj[center] if len(adj[u]) != 1)
        if len(adj[chain]) != 2:
            continue
        anchor = next(u for u in adj[chain] if u != center)
        out.append(BranchSite(center, chain, anchor, (leaves[0], leaves[1])))
    return out


@dataclass(frozen=True)
class OptimaReport:
    """Structure of all minimum-weight labelings of one tree.

    ``one_vertices`` lists vertices that take label 1 in some optimum and
    ``two_leaves`` lists leaves that take label 2 in some optimum; for a
    stable tree both are expected empty. Each branch-site violation pairs
    the site with one offending optimal labeling.
    """

    optima_count: int
    one_vertices: tuple[int, ...]
    two_leaves: tuple[int, ...]
    sites: tuple[BranchSite, ...]
    site_violations: tuple[tuple[BranchSite, tuple[int, ...]], ...]

    @property
    def passed(self) -> bool:
        return not self.one_vertices and not self.two_leaves and not self.site_violations


def optima_report(t: Tree, include_sites: bool = True) -> OptimaReport:
    """Enumerate every optimum of a small tree and inspect its labels.

    The stability hypothesis is the caller's: running this on an unstable
    tree is allowed and simply reports the violations it finds. Capped at
    n=14 by the exhaustive enumeration.
    """
    if t.n > OPTIMA_SCAN_MAX_N:
        raise SizeLimitError(f"optima scan capped at n={OPTIMA_SCAN_MAX_N}, got {t.n}")
    adj = t.adjacency
    _, optima = brute_force(t, enumerate_all=True)
    leaves = [v for v in range(t.n) if len(adj[v]) == 1]
    ones: set[int] = set()
    two_leaves: set[int] = set()
    for opt in optima:
        for v, val in enumerate(opt.values):
            if val == 1:
                ones.add(v)
        for v in leaves:
            if opt.values[v] == 2:
                two_leaves.add(v)
    sites = tuple(branch_sites(t)) if include_sites else ()
    violations = []
    for site in sites:
        for opt in optima:
            vals = opt.values
            ok = (
                vals[site.center] == 2
                and vals[site.chain] == 0
                and vals[site.anchor] == 0
                and vals[site.leaves[0]] == 0
                and vals[site.leaves[1]] == 0
            )
            if not ok:
                violations.append((site, vals))
                break
    return OptimaReport(
        optima_count=len(optima),
        one_vertices=tuple(sorted(ones)),
        two_leaves=tuple(sorted(two_leaves)),
        sites=sites,
        site_violations=tuple(violations),
    )
