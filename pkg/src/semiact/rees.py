"""Rees matrix semigroups M[G; I, Lambda; P] and M0[G; I, Lambda; P]."""
from __future__ import annotations

import itertools
import re
from functools import lru_cache
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (
    IndexOutOfRange,
    IrregularSandwich,
    ShapeMismatch,
    ZeroEntryWithoutZeroFlag,
)
from .groups import FiniteGroup
from .semigroup import FiniteSemigroup, validate_semigroup

ZERO = None
"""Sandwich entry standing for the adjoined zero of G^0."""

ZERO_LABEL = "0"

Entry = Optional[int]
Triple = tuple[int, int, int]


@dataclass(frozen=True)
class ReesMatrixSpec:
    """Blueprint of a completely (0-)simple semigroup.

    ``sandwich[lam][i]`` is a group element index or ZERO; rows are indexed by
    Lambda and columns by I.
    """

    group: FiniteGroup
    i_size: int
    lambda_size: int
    sandwich: tuple[tuple[Entry, ...], ...]
    with_zero: bool

    @property
    def order(self) -> int:
        return self.i_size * len(self.group) * self.lambda_size + int(self.with_zero)

    def entry(self, lam: int, i: int) -> Entry:
        return self.sandwich[lam][i]


def make_spec(
    group: FiniteGroup,
    sandwich: Sequence[Sequence[Entry]],
    with_zero: bool,
) -> ReesMatrixSpec:
    """Build and check a spec; sizes are read off the Lambda x I sandwich."""
    lambda_size = len(sandwich)
    if lambda_size == 0 or len(sandwich[0]) == 0:
        raise ShapeMismatch("sandwich matrix must be non-empty")
    i_size = len(sandwich[0])
    rows = []
    for lam, row in enumerate(sandwich):
        if len(row) != i_size:
            raise ShapeMismatch(f"sandwich row {lam} has {len(row)} entries, expected {i_size}")
        rows.append(tuple(row))
    spec = ReesMatrixSpec(group, i_size, lambda_size, tuple(rows), with_zero)
    check_spec(spec)
    return spec


def check_spec(spec: ReesMatrixSpec) -> None:
    n = len(spec.group)
    for lam, row in enumerate(spec.sandwich):
        for i, p in enumerate(row):
            if p is ZERO:
                if not spec.with_zero:
                    raise ZeroEntryWithoutZeroFlag(f"sandwich[{lam}][{i}] is zero")
            elif not 0 <= p < n:
                raise IndexOutOfRange(f"sandwich[{lam}][{i}] = {p} not a group element")
    if spec.with_zero and not is_regular(spec.sandwich):
        raise IrregularSandwich("every row and column of P needs a nonzero entry")


def is_regular(sandwich: Sequence[Sequence[Entry]]) -> bool:
    rows_ok = all(any(p is not ZERO for p in row) for row in sandwich)
    cols_ok = all(any(row[i] is not ZERO for row in sandwich) for i in range(len(sandwich[0])))
    return rows_ok and cols_ok


def triple_label(i: int, g: int, lam: int) -> str:
    return f"({i},{g},{lam})"


def decode_label(label: str) -> Optional[Triple]:
    """(i, g, lam) from an element label, None for the zero."""
    if label == ZERO_LABEL:
        return None
    m = re.fullmatch(r"\((\d+),(\d+),(\d+)\)", label)
    if not m:
        raise ValueError(f"not a Rees element label: {label!r}")
    return int(m.group(1)), int(m.group(2)), int(m.group(3))


def triples(spec: ReesMatrixSpec) -> list[Triple]:
    return list(
        itertools.product(range(spec.i_size), range(len(spec.group)), range(spec.lambda_size))
    )


def element_index(spec: ReesMatrixSpec, t: Optional[Triple]) -> int:
    """Index of a triple (or the zero, passed as None) in rees_matrix(spec)."""
    offset = int(spec.with_zero)
    if t is None:
        if not spec.with_zero:
            raise ValueError("spec has no zero")
        return 0
    i, g, lam = t
    return offset + (i * len(spec.group) + g) * spec.lambda_size + lam


@lru_cache(maxsize=256)
def rees_matrix(spec: ReesMatrixSpec) -> FiniteSemigroup:
    """The zero (when present) comes first, then triples in (i, g, lam) order."""
    check_spec(spec)
    g = spec.group
    elems = triples(spec)
    labels = ([ZERO_LABEL] if spec.with_zero else []) + [triple_label(*t) for t in elems]
    offset = int(spec.with_zero)
    n = len(labels)
    table = [[0] * n for _ in range(n)]
    for x, (i, a, lam) in enumerate(elems, start=offset):
        for y, (j, b, mu) in enumerate(elems, start=offset):
            p = spec.sandwich[lam][j]
            if p is ZERO:
                table[x][y] = 0
            else:
                table[x][y] = element_index(spec, (i, g.mul(g.mul(a, p), b), mu))
    return validate_semigroup(labels, table)
