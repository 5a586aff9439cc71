"""Finite groups, the bundled group catalog and subgroup enumeration."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Optional

from .errors import NotAGroup, SizeLimit, UnknownGroup
from .semigroup import FiniteSemigroup, validate_semigroup

MAX_SUBGROUP_ORDER = 16


@dataclass(frozen=True)
class FiniteGroup:
    base: FiniteSemigroup
    identity: int
    inverse: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.base)

    @property
    def order(self) -> int:
        return len(self.base)

    @property
    def elements(self) -> tuple[str, ...]:
        return self.base.elements

    def mul(self, x: int, y: int) -> int:
        return self.base.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse[x], -k
        result = self.identity
        for _ in range(k):
            result = self.mul(result, x)
        return result

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def cyclic_subgroup(self, x: int) -> list[int]:
        """[e, x, x^2, ...] up to the order of x."""
        powers = [self.identity]
        y = x
        while y != self.identity:
            powers.append(y)
            y = self.mul(y, x)
        return powers


def group_from_semigroup(s: FiniteSemigroup) -> FiniteGroup:
    if s.identity is None:
        raise NotAGroup("no two-sided identity")
    e = s.identity
    inverse = []
    for x in range(len(s)):
        for y in range(len(s)):
            if s.table[x][y] == e and s.table[y][x] == e:
                inverse.append(y)
                break
        else:
            raise NotAGroup(f"element {s.elements[x]!r} has no inverse")
    return FiniteGroup(s, e, tuple(inverse))


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise UnknownGroup(f"cyclic group of order {n}")
    labels = ["e"] + ["g" if k == 1 else f"g^{k}" for k in range(1, n)]
    table = [[(x + y) % n for y in range(n)] for x in range(n)]
    return group_from_semigroup(validate_semigroup(labels, table))


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    pairs = list(itertools.product(range(len(g)), range(len(h))))
    index = {p: k for k, p in enumerate(pairs)}
    table = [
        [index[(g.mul(a, c), h.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs
    ]
    labels = [f"({g.elements[a]},{h.elements[b]})" for a, b in pairs]
    return group_from_semigroup(validate_semigroup(labels, table))


def symmetric_group_3() -> FiniteGroup:
    perms = sorted(itertools.permutations(range(3)))
    index = {p: k for k, p in enumerate(perms)}
    # product x*y: apply x first, then y
    table = [[index[tuple(y[x[i]] for i in range(3))] for y in perms] for x in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return group_from_semigroup(validate_semigroup(labels, table))


def quaternion_group() -> FiniteGroup:
    units = ["1", "i", "j", "k"]
    # unit products as (sign, unit)
    unit_mul = {
        ("1", u): (1, u) for u in units
    } | {
        (u, "1"): (1, u) for u in units
    } | {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    elems = [(sign, u) for sign in (1, -1) for u in units]
    index = {x: k for k, x in enumerate(elems)}
    table = []
    for sa, ua in elems:
        row = []
        for sb, ub in elems:
            sign, u = unit_mul[(ua, ub)]
            row.append(index[(sa * sb * sign, u)])
        table.append(row)
    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return group_from_semigroup(validate_semigroup(labels, table))


CATALOG_NAMES = tuple(f"Z{n}" for n in range(1, 13)) + ("V4", "S3", "Q8")


def catalog_group(name: str) -> FiniteGroup:
    """Resolve Z1..Z12, V4 (= Z2 x Z2), S3 and Q8."""
    m = re.fullmatch(r"Z(\d+)", name)
    if m and 1 <= int(m.group(1)) <= 12:
        return cyclic_group(int(m.group(1)))
    if name == "V4":
        return direct_product(cyclic_group(2), cyclic_group(2))
    if name == "S3":
        return symmetric_group_3()
    if name == "Q8":
        return quaternion_group()
    raise UnknownGroup(name)


def parse_group_list(spec: str) -> list[str]:
    """Expand ``"Z2..Z8,Q8,V4"`` into catalog names."""
    names: list[str] = []
    for part in filter(None, (p.strip() for p in spec.split(","))):
        m = re.fullmatch(r"Z(\d+)\.\.Z(\d+)", part)
        if m:
            names.extend(f"Z{n}" for n in range(int(m.group(1)), int(m.group(2)) + 1))
        else:
            names.append(part)
    for name in names:
        if name not in CATALOG_NAMES:
            raise UnknownGroup(name)
    return names


def _generate(g: FiniteGroup, gens: frozenset[int]) -> frozenset[int]:
    # closure under product suffices in a finite group
    elems = set(gens) | {g.identity}
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for y in list(elems):
            for z in (g.mul(x, y), g.mul(y, x)):
                if z not in elems:
                    elems.add(z)
                    frontier.append(z)
    return frozenset(elems)


def subgroups(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups, sorted by size and then lexicographically."""
    if len(g) > MAX_SUBGROUP_ORDER:
        raise SizeLimit(f"subgroup enumeration limited to order {MAX_SUBGROUP_ORDER}")
    found = {frozenset([g.identity])}
    frontier = list(found)
    while frontier:
        h = frontier.pop()
        for x in range(len(g)):
            if x in h:
                continue
            k = _generate(g, h | {x})
            if k not in found:
                found.add(k)
                frontier.append(k)
    return sorted((tuple(sorted(h)) for h in found), key=lambda h: (len(h), h))


def minimal_subgroups(g: FiniteGroup) -> list[tuple[int, ...]]:
    nontrivial = [set(h) for h in subgroups(g) if len(h) > 1]
    return [
        tuple(sorted(h))
        for h in nontrivial
        if not any(k < h for k in nontrivial)
    ]


def is_cocyclic(g: FiniteGroup) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Whether g has a least nontrivial subgroup, and that subgroup.

    The trivial group has no nontrivial subgroup and so is not cocyclic.
    """
    minimal = minimal_subgroups(g)
    if len(minimal) == 1:
        return True, minimal[0]
    return False, None


def nontrivial_subgroups_pairwise_intersect(g: FiniteGroup) -> bool:
    nontrivial = [set(h) for h in subgroups(g) if len(h) > 1]
    return all(len(h & k) >= 2 for h, k in itertools.combinations(nontrivial, 2))
