"""Finite semigroups given by Cayley tables."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import IndexOutOfRange, NonAssociative, ShapeMismatch

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteSemigroup:
    """A semigroup on ``range(len(elements))``; ``table[x][y]`` is the index of x*y.

    Build instances through :func:`validate_semigroup`, which checks the table
    and fills in ``identity``.
    """

    elements: tuple[str, ...]
    table: Table
    identity: Optional[int] = field(default=None)

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def index(self, label: str) -> int:
        return self.elements.index(label)

    @property
    def order(self) -> int:
        return len(self.elements)

    def idempotents(self) -> list[int]:
        return [x for x in range(len(self)) if self.table[x][x] == x]


def _check_shape(n_rows: int, n_cols: int, table: Sequence[Sequence[int]], what: str) -> Table:
    if len(table) != n_rows:
        raise ShapeMismatch(f"{what} has {len(table)} rows, expected {n_rows}")
    rows = []
    for r, row in enumerate(table):
        if len(row) != n_cols:
            raise ShapeMismatch(f"{what} row {r} has {len(row)} entries, expected {n_cols}")
        rows.append(tuple(int(v) for v in row))
    return tuple(rows)


def find_identity(table: Table) -> Optional[int]:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def associativity_witness(table: Table) -> Optional[tuple[int, int, int]]:
    """First triple (x, y, z) in lexicographic order breaking associativity."""
    n = len(table)
    for x, y in itertools.product(range(n), repeat=2):
        xy = table[x][y]
        row_x = table[x]
        for z in range(n):
            if table[xy][z] != row_x[table[y][z]]:
                return x, y, z
    return None


def validate_semigroup(elements: Sequence[str], table: Sequence[Sequence[int]]) -> FiniteSemigroup:
    n = len(elements)
    if n == 0:
        raise ShapeMismatch("a semigroup needs at least one element")
    rows = _check_shape(n, n, table, "table")
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if not 0 <= v < n:
                raise IndexOutOfRange(f"table[{r}][{c}] = {v} not in range({n})")
    witness = associativity_witness(rows)
    if witness is not None:
        raise NonAssociative(*witness)
    return FiniteSemigroup(tuple(str(e) for e in elements), rows, find_identity(rows))


def rectangular_band(i_size: int, lambda_size: int) -> FiniteSemigroup:
    """I x Lambda with (i, l)(j, m) = (i, m), elements listed row-major."""
    if i_size < 1 or lambda_size < 1:
        raise ShapeMismatch("rectangular band dimensions must be positive")
    pairs = list(itertools.product(range(i_size), range(lambda_size)))
    table = [[i * lambda_size + mu for (_, mu) in pairs] for (i, _) in pairs]
    labels = [f"({i},{lam})" for i, lam in pairs]
    return validate_semigroup(labels, table)


def right_zero(n: int) -> FiniteSemigroup:
    return rectangular_band(1, n)


def left_zero(n: int) -> FiniteSemigroup:
    return rectangular_band(n, 1)


def is_rectangular_band(s: FiniteSemigroup) -> bool:
    # idempotent plus xyx = x characterizes rectangular bands
    t = s.table
    n = len(s)
    return all(t[x][x] == x for x in range(n)) and all(
        t[t[x][y]][x] == x for x in range(n) for y in range(n)
    )


def band_shape(s: FiniteSemigroup) -> tuple[int, int]:
    """(|I|, |Lambda|) of a rectangular band: the number of L- and R-classes."""
    t = s.table
    rows = {frozenset(t[x][y] for y in range(len(s))) for x in range(len(s))}
    cols = {frozenset(t[y][x] for y in range(len(s))) for x in range(len(s))}
    # x S = R-class of x (same I-coordinate), S x = L-class (same Lambda-coordinate)
    return len(rows), len(cols)


LEFT_IDENTITY = "left-identity"
LEFT_ZERO = "left-zero"
BOTH = "both"
NEITHER = "neither"


def classify_idempotents(s: FiniteSemigroup) -> dict[int, str]:
    tags = {}
    n = len(s)
    for e in s.idempotents():
        row = s.table[e]
        is_left_identity = all(row[x] == x for x in range(n))
        is_left_zero = all(v == e for v in row)
        if is_left_identity and is_left_zero:
            tags[e] = BOTH
        elif is_left_identity:
            tags[e] = LEFT_IDENTITY
        elif is_left_zero:
            tags[e] = LEFT_ZERO
        else:
            tags[e] = NEITHER
    return tags


def find_isomorphism(s: FiniteSemigroup, t: FiniteSemigroup) -> Optional[tuple[int, ...]]:
    """Brute-force bijection phi with phi(xy) = phi(x)phi(y); None when absent."""
    n = len(s)
    if n != len(t):
        return None
    for perm in itertools.permutations(range(n)):
        if all(
            perm[s.table[x][y]] == t.table[perm[x]][perm[y]]
            for x in range(n)
            for y in range(n)
        ):
            return perm
    return None
