"""Right congruences on finite acts.

The engine computes monocyclic congruences by union-find closure and decides
subdirect irreducibility, irreducibility and uniformity from them.  An
independent exhaustive enumeration of all compatible partitions is kept for
differential testing.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .acts import (
    RightAct,
    is_subact,
    minimal_nonzero_subact_candidates,
    regular_act,
)
from .errors import ActMismatch, NotASubact, SizeLimit
from .semigroup import FiniteSemigroup

BRUTEFORCE_MAX_STATES = 8
SUMMARY_MAX_STATES = 64


def normalize(labels: Sequence[int]) -> tuple[int, ...]:
    """Renumber class ids in order of first occurrence."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(c, len(seen)) for c in labels)


@dataclass(frozen=True)
class Congruence:
    act: RightAct = field(repr=False)
    class_of: tuple[int, ...]

    @classmethod
    def from_labels(cls, act: RightAct, labels: Sequence[int]) -> "Congruence":
        return cls(act, normalize(labels))

    @classmethod
    def from_classes(cls, act: RightAct, classes: Iterable[Iterable[int]]) -> "Congruence":
        labels = list(range(len(act)))
        for cls_members in classes:
            members = sorted(cls_members)
            for q in members:
                labels[q] = members[0]
        return cls.from_labels(act, labels)

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for q, c in enumerate(self.class_of):
            out.setdefault(c, []).append(q)
        return list(out.values())

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1

    def is_diagonal(self) -> bool:
        return self.num_classes == len(self.class_of)

    def is_universal(self) -> bool:
        return self.num_classes == 1

    def pair_count(self) -> int:
        """Number of unordered non-diagonal pairs in the relation."""
        return sum(len(c) * (len(c) - 1) // 2 for c in self.classes())

    def __le__(self, other: "Congruence") -> bool:
        image: dict[int, int] = {}
        for c, d in zip(self.class_of, other.class_of):
            if image.setdefault(c, d) != d:
                return False
        return True

    def is_right_compatible(self) -> bool:
        return is_compatible_partition(self.act, self.class_of)


def delta(act: RightAct) -> Congruence:
    return Congruence(act, tuple(range(len(act))))


def nabla(act: RightAct) -> Congruence:
    return Congruence(act, (0,) * len(act))


def is_compatible_partition(act: RightAct, class_of: Sequence[int]) -> bool:
    rep: dict[int, tuple[int, ...]] = {}
    for q, c in enumerate(class_of):
        img = tuple(class_of[v] for v in act.action[q])
        if rep.setdefault(c, img) != img:
            return False
    return True


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True


def closure(act: RightAct, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least right congruence containing ``pairs``.

    Each pair that merges two classes pushes its translates (x*s, y*s) for all
    s; pairs that merge nothing are already implied by earlier merges, and so
    are their translates.
    """
    uf = _UnionFind(len(act))
    action = act.action
    queue = deque(pairs)
    while queue:
        x, y = queue.popleft()
        if uf.union(x, y):
            queue.extend(zip(action[x], action[y]))
    return Congruence.from_labels(act, [uf.find(q) for q in range(len(act))])


def monocyclic(act: RightAct, x: int, y: int) -> Congruence:
    return closure(act, [(x, y)])


def rees_congruence(act: RightAct, b: Iterable[int]) -> Congruence:
    b = sorted(set(b))
    if not is_subact(act, b):
        raise NotASubact(f"{b} is not closed under the action")
    labels = list(range(len(act)))
    for q in b:
        labels[q] = b[0]
    return Congruence.from_labels(act, labels)


def intersect(r1: Congruence, r2: Congruence) -> Congruence:
    if r1.act is not r2.act and r1.act != r2.act:
        raise ActMismatch("congruences live on different acts")
    return Congruence.from_labels(r1.act, list(zip(r1.class_of, r2.class_of)))  # type: ignore[arg-type]


def _meets_subset(rho: Congruence, b: frozenset[int]) -> bool:
    """Whether rho identifies two distinct states of b (rho_B cap rho != Delta)."""
    seen = set()
    for q in b:
        c = rho.class_of[q]
        if c in seen:
            return True
        seen.add(c)
    return False


def principal_congruences(act: RightAct) -> dict[tuple[int, int], Congruence]:
    """Monocyclic congruence of every unordered pair x < y, in pair order."""
    return {
        (x, y): monocyclic(act, x, y)
        for x, y in itertools.combinations(range(len(act)), 2)
    }


def is_large(
    act: RightAct,
    b: Iterable[int],
    principal: Optional[dict[tuple[int, int], Congruence]] = None,
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether subact b is large; on failure, the generating pair of a witness."""
    b = frozenset(b)
    if not is_subact(act, b):
        raise NotASubact(f"{sorted(b)} is not closed under the action")
    if principal is None:
        principal = principal_congruences(act)
    for pair, rho in principal.items():
        if not _meets_subset(rho, b):
            return False, pair
    return True, None


def minimal_congruences(congs: Iterable[Congruence]) -> list[Congruence]:
    """Containment-minimal members of a family of congruences."""
    ordered = sorted(congs, key=lambda r: (r.pair_count(), r.class_of))
    minimal: list[Congruence] = []
    for r in ordered:
        if not any(m <= r for m in minimal):
            minimal.append(r)
    return minimal


@dataclass(frozen=True)
class CongruenceSummary:
    principal_nondiagonal: tuple[Congruence, ...]
    least_nondiagonal: Optional[Congruence]
    si: bool
    irreducible: bool
    uniform: bool


def summarize(act: RightAct, max_states: int = SUMMARY_MAX_STATES) -> CongruenceSummary:
    """Decide SI, irreducibility and uniformity from monocyclic congruences.

    Every non-diagonal congruence contains a non-diagonal monocyclic one, so
    the least non-diagonal congruence exists exactly when the monocyclic ones
    have a single containment-minimal member, and two non-diagonal congruences
    meet diagonally exactly when two minimal monocyclic ones do.  Uniformity
    only needs largeness of the minimal subacts with >= 2 states, since
    supersets of large subacts are large.
    """
    n = len(act)
    if n > max_states:
        raise SizeLimit(f"summarize limited to {max_states} states, act has {n}")
    if n == 1:
        return CongruenceSummary((), None, False, False, True)
    principal = principal_congruences(act)
    unique: dict[tuple[int, ...], Congruence] = {}
    for rho in principal.values():
        unique.setdefault(rho.class_of, rho)
    deduped = tuple(unique.values())
    minimal = minimal_congruences(deduped)
    least = minimal[0] if len(minimal) == 1 else None
    irreducible = all(
        not intersect(r1, r2).is_diagonal() for r1, r2 in itertools.combinations(minimal, 2)
    )
    uniform = all(
        is_large(act, b, principal)[0] for b in minimal_nonzero_subact_candidates(act)
    )
    return CongruenceSummary(deduped, least, least is not None, irreducible, uniform)


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length n."""
    if n == 0:
        yield ()
        return

    def extend(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(top + 2):
            prefix.append(c)
            yield from extend(prefix, max(top, c))
            prefix.pop()

    yield from extend([0], 0)


def all_congruences_bruteforce(act: RightAct) -> list[Congruence]:
    if len(act) > BRUTEFORCE_MAX_STATES:
        raise SizeLimit(f"partition enumeration limited to {BRUTEFORCE_MAX_STATES} states")
    return [
        Congruence(act, p) for p in set_partitions(len(act)) if is_compatible_partition(act, p)
    ]


def two_sided_check(s: FiniteSemigroup, r: Congruence) -> bool:
    """Left compatibility of a right congruence on S_S."""
    t = s.table
    c = r.class_of
    n = len(s)
    for x, y in itertools.combinations(range(n), 2):
        if c[x] == c[y] and any(c[t[u][x]] != c[t[u][y]] for u in range(n)):
            return False
    return True


def summarize_semigroup(s: FiniteSemigroup) -> CongruenceSummary:
    return summarize(regular_act(s))
