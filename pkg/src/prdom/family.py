"""The constructive family of stable trees.

Members are exactly the trees reachable from the 3-vertex path by repeatedly
hanging a pendant 3-vertex path off a vertex that every minimum-weight
labeling forces to 0 (``grow``). The recognizer inverts the construction:
starting from a deterministic longest path it peels the pendant 3-chain at
the far end, demands the two inner path vertices have degree 2, and checks
that the anchor the chain hung from is forced-zero in the peeled tree. An
accepted tree comes with a replayable build certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .canonical import CanonicalForm, canonical_form
from .graphs import Tree, delete_vertices, diameter, longest_path, make_path
from .solver import SizeLimitError, forced_zero_set, prd_number
from .stability import attach_pendant_path, stability_report

FAMILY_MAX_N = 18


class InvalidStepError(ValueError):
    """A certificate step that the construction rules reject."""


class Step(NamedTuple):
    """One growth step: attach at ``u``, creating labels ``added``.

    ``added`` is (v3, v2, v1): v3 is the new neighbor of u, v1 the new leaf.
    Labels refer to the tree as it stands when the step applies, so a step
    that grows an n-vertex tree always has added == (n, n+1, n+2).
    """

    u: int
    added: tuple[int, int, int]


@dataclass(frozen=True)
class Certificate:
    """Build recipe for a family member: steps applied in order to P3."""

    steps: tuple[Step, ...]

    @property
    def order(self) -> int:
        return 3 + 3 * len(self.steps)


class RecognitionResult(NamedTuple):
    accepted: bool
    certificate: Certificate | None
    reason: str | None = None


def grow(t: Tree, u: int) -> Tree:
    """Attach a pendant 3-path at a forced-zero vertex of t.

    Raises InvalidStepError when some optimal labeling gives u a positive
    label, since only forced-zero attachment points keep the tree stable.
    """
    if not (0 <= u < t.n):
        raise ValueError(f"vertex {u} outside 0..{t.n - 1}")
    if u not in forced_zero_set(t):
        raise InvalidStepError(f"vertex {u} is not forced to 0 by every optimum")
    return attach_pendant_path(t, u, 3)


def replay_certificate(c: Certificate, check_stability: bool = True) -> Tree:
    """Rebuild the tree a certificate describes, re-validating every step.

    Each step must attach at a forced-zero vertex with the expected fresh
    labels; with ``check_stability`` every intermediate tree is also checked
    to be deletion-stable.
    """
    t = make_path(3)
    for i, step in enumerate(c.steps):
        n = t.n
        if step.added != (n, n + 1, n + 2):
            raise InvalidStepError(
                f"step {i}: expected new labels {(n, n + 1, n + 2)}, got {step.added}"
            )
        if not (0 <= step.u < n):
            raise InvalidStepError(f"step {i}: vertex {step.u} outside 0..{n - 1}")
        try:
            t = grow(t, step.u)
        except InvalidStepError as exc:
            raise InvalidStepError(f"step {i}: {exc}") from None
        if check_stability and not stability_report(t).stable:
            raise InvalidStepError(f"step {i}: intermediate tree is not stable")
    return t


def serialize_certificate(c: Certificate) -> str:
    """Text form: base line "P3", then one "u: v3 v2 v1" line per step."""
    lines = ["P3"]
    for step in c.steps:
        v3, v2, v1 = step.added
        lines.append(f"{step.u}: {v3} {v2} {v1}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != "P3":
        raise InvalidStepError('certificate must start with the base line "P3"')
    steps = []
    for idx, line in enumerate(lines[1:], start=1):
        head, sep, tail = line.partition(":")
        parts = tail.split()
        if not sep or len(parts) != 3:
            raise InvalidStepError(f'step line {idx}: expected "u: v3 v2 v1", got {line!r}')
        try:
            u = int(head)
            added = tuple(int(p) for p in parts)
        except ValueError:
            raise InvalidStepError(f"step line {idx}: non-integer label in {line!r}") from None
        steps.append(Step(u=u, added=added))
    return Certificate(steps=tuple(steps))


def recognize(t: Tree) -> RecognitionResult:
    """Decide family membership, with a build certificate on acceptance.

    Iterative peeling: reject orders not divisible by 3 up front (no member
    has one), accept the 3-vertex base, and otherwise require diameter at
    least 4, degree 2 on the second and third vertices of the deterministic
    longest path, and a forced-zero anchor after removing that 3-chain.
    """
    if t.n % 3 != 0:
        return RecognitionResult(False, None, "order not a multiple of 3")
    peels: list[tuple[tuple[int, int, int], int, tuple[int, ...]]] = []
    current = t
    while current.n > 3:
        if diameter(current) < 4:
            return RecognitionResult(False, None, "diameter below 4")
        path = longest_path(current)
        x1, x2, x3, x4 = path[0], path[1], path[2], path[3]
        if current.degree(x2) != 2:
            return RecognitionResult(False, None, "second path vertex degree is not 2")
        if current.degree(x3) != 2:
            return RecognitionResult(False, None, "third path vertex degree is not 2")
        peeled_graph, old_to_new = delete_vertices(current.graph, (x1, x2, x3))
        smaller = Tree._wrap(peeled_graph)
        anchor = old_to_new[x4]
        if anchor not in forced_zero_set(smaller):
            return RecognitionResult(False, None, "anchor is not forced-zero after peeling")
        peels.append(((x1, x2, x3), x4, old_to_new))
        current = smaller
    # Rebuild in construction coordinates, tracking the isomorphism from the
    # peeled snapshots into the replayed tree.
    base = current
    center = next(v for v in range(3) if base.degree(v) == 2)
    leaves = sorted(v for v in range(3) if v != center)
    iso = {center: 1, leaves[0]: 0, leaves[1]: 2}
    steps: list[Step] = []
    size = 3
    for (x1, x2, x3), x4, old_to_new in reversed(peels):
        new_iso = {
            old: iso[old_to_new[old]]
            for old in range(len(old_to_new))
            if old_to_new[old] >= 0
        }
        steps.append(Step(u=iso[old_to_new[x4]], added=(size, size + 1, size + 2)))
        new_iso[x3] = size
        new_iso[x2] = size + 1
        new_iso[x1] = size + 2
        iso = new_iso
        size += 3
    return RecognitionResult(True, Certificate(steps=tuple(steps)), None)


@dataclass(frozen=True)
class FamilyIndex:
    """Every family member of one order, keyed by canonical form.

    ``members`` maps each canonical form to the first build certificate the
    breadth-first closure finds; iteration order is sorted by key.
    """

    order: int
    members: dict[CanonicalForm, Certificate] = field(default_factory=dict)

    def __contains__(self, key: CanonicalForm) -> bool:
        return key in self.members

    def __len__(self) -> int:
        return len(self.members)


def enumerate_family(n: int) -> FamilyIndex:
    """Breadth-first closure of the construction up to order n.

    Levels step by 3 from the base path; each level attaches at every
    forced-zero vertex of every member and deduplicates by canonical form.
    """
    if n < 3 or n % 3 != 0:
        raise ValueError(f"family orders are positive multiples of 3, got {n}")
    if n > FAMILY_MAX_N:
        raise SizeLimitError(f"family enumeration capped at n={FAMILY_MAX_N}, got {n}")
    base = make_path(3)
    level: dict[CanonicalForm, tuple[Tree, Certificate]] = {
        canonical_form(base): (base, Certificate(steps=()))
    }
    size = 3
    while size < n:
        nxt: dict[CanonicalForm, tuple[Tree, Certificate]] = {}
        for key in sorted(level):
            tree, cert = level[key]
            for u in sorted(forced_zero_set(tree)):
                grown = attach_pendant_path(tree, u, 3)
                grown_key = canonical_form(grown)
                if grown_key not in nxt:
                    step = Step(u=u, added=(size, size + 1, size + 2))
                    nxt[grown_key] = (grown, Certificate(steps=cert.steps + (step,)))
        level = nxt
        size += 3
    return FamilyIndex(order=n, members={k: level[k][1] for k in sorted(level)})


def check_stable_profile(t: Tree) -> bool:
    """True when the order is a multiple of 3 and the domination number is
    exactly two thirds of it, the profile every stable tree must have."""
    return t.n % 3 == 0 and 3 * prd_number(t) == 2 * t.n
