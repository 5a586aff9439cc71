"""Right S-acts given by action tables, and their subact structure."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import IncompatibleAction, IndexOutOfRange, ShapeMismatch, SizeLimit
from .semigroup import FiniteSemigroup

DEFAULT_MAX_STATES = 12


@dataclass(frozen=True)
class RightAct:
    """``action[a][s]`` is the index of the state a*s."""

    semigroup: FiniteSemigroup
    states: tuple[str, ...]
    action: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.states)

    def act(self, a: int, s: int) -> int:
        return self.action[a][s]

    def index(self, label: str) -> int:
        return self.states.index(label)


def incompatibility_witness(s: FiniteSemigroup, action: Sequence[Sequence[int]]) -> Optional[tuple[int, int, int]]:
    t = s.table
    m = len(s)
    for a in range(len(action)):
        row = action[a]
        for x in range(m):
            row_ax = action[row[x]]
            for y in range(m):
                if row_ax[y] != row[t[x][y]]:
                    return a, x, y
    return None


def validate_act(s: FiniteSemigroup, states: Sequence[str], action: Sequence[Sequence[int]]) -> RightAct:
    n, m = len(states), len(s)
    if n == 0:
        raise ShapeMismatch("an act needs at least one state")
    if len(action) != n:
        raise ShapeMismatch(f"action has {len(action)} rows, expected {n}")
    rows = []
    for a, row in enumerate(action):
        if len(row) != m:
            raise ShapeMismatch(f"action row {a} has {len(row)} entries, expected {m}")
        for x, v in enumerate(row):
            if not 0 <= v < n:
                raise IndexOutOfRange(f"action[{a}][{x}] = {v} not in range({n})")
        rows.append(tuple(int(v) for v in row))
    witness = incompatibility_witness(s, rows)
    if witness is not None:
        raise IncompatibleAction(*witness)
    return RightAct(s, tuple(str(q) for q in states), tuple(rows))


def regular_act(s: FiniteSemigroup) -> RightAct:
    return RightAct(s, s.elements, s.table)


def zeros(a: RightAct) -> list[int]:
    return [q for q in range(len(a)) if all(v == q for v in a.action[q])]


def orbit(a: RightAct, x: int) -> frozenset[int]:
    """x*S."""
    return frozenset(a.action[x])


def cyclic_subact(a: RightAct, x: int) -> tuple[frozenset[int], frozenset[int]]:
    """(x*S, x*S^1)."""
    xs = orbit(a, x)
    return xs, xs | {x}


def image(a: RightAct) -> frozenset[int]:
    """A*S."""
    return frozenset(v for row in a.action for v in row)


def is_subact(a: RightAct, b: Iterable[int]) -> bool:
    b = set(b)
    return bool(b) and all(v in b for q in b for v in a.action[q])


def separates(a: RightAct, x: int, y: int) -> bool:
    """Whether some s in S has x*s != y*s."""
    return a.action[x] != a.action[y]


def is_separated(a: RightAct, subset: Optional[Iterable[int]] = None) -> bool:
    states = range(len(a)) if subset is None else sorted(set(subset))
    return all(separates(a, x, y) for x, y in itertools.combinations(states, 2))


def minimal_nonzero_subact_candidates(a: RightAct) -> set[frozenset[int]]:
    """Subacts of >= 2 states from which every such subact can be built.

    Every subact with at least two states contains either some x*S^1 of size
    >= 2 or a pair of zeros, so this set is cofinal from below.
    """
    cands = {sub for x in range(len(a)) if len(sub := cyclic_subact(a, x)[1]) >= 2}
    cands |= {frozenset(p) for p in itertools.combinations(zeros(a), 2)}
    return cands


def kernel(a: RightAct) -> Optional[frozenset[int]]:
    """The least subact with >= 2 states under containment, if there is one."""
    cands = minimal_nonzero_subact_candidates(a)
    if not cands:
        return None
    common = frozenset.intersection(*cands)
    return common if len(common) >= 2 else None


def all_subacts(a: RightAct, max_states: int = DEFAULT_MAX_STATES) -> list[frozenset[int]]:
    """Every subact, as unions of cyclic subacts x*S^1, sorted by (size, members)."""
    if len(a) > max_states:
        raise SizeLimit(f"subact enumeration limited to {max_states} states, act has {len(a)}")
    cyclic = {cyclic_subact(a, x)[1] for x in range(len(a))}
    found = set(cyclic)
    frontier = list(found)
    while frontier:
        b = frontier.pop()
        for c in cyclic:
            u = b | c
            if u not in found:
                found.add(u)
                frontier.append(u)
    return sorted(found, key=lambda b: (len(b), sorted(b)))


@dataclass(frozen=True)
class ActAnalysis:
    zeros: tuple[int, ...]
    subacts: tuple[frozenset[int], ...]
    kernel: Optional[frozenset[int]]
    is_separated: bool


def analyze(a: RightAct, max_states: int = DEFAULT_MAX_STATES) -> ActAnalysis:
    subs = all_subacts(a, max_states)
    big = [b for b in subs if len(b) >= 2]
    ker = None
    if big:
        common = frozenset.intersection(*big)
        if len(common) >= 2:
            ker = common
    return ActAnalysis(tuple(zeros(a)), tuple(subs), ker, is_separated(a))
