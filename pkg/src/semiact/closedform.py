"""Explicit formulas and characterizations, computed without the congruence engine.

Everything here reads structure directly off multiplication and action
tables so it can be checked against :mod:`semiact.congruence`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .acts import (
    RightAct,
    image,
    is_separated,
    kernel,
    orbit,
    regular_act,
    separates,
    zeros,
)
from .congruence import Congruence, nabla, summarize
from .errors import NotARectangularBand, PreconditionViolated
from .groups import is_cocyclic, nontrivial_subgroups_pairwise_intersect
from .rees import ZERO, ReesMatrixSpec, Triple, element_index, rees_matrix
from .semigroup import band_shape, is_rectangular_band

# ---------------------------------------------------------------------------
# monocyclic right congruences of M0[G; {i}, Lambda; P]


@dataclass(frozen=True)
class MonocyclicDescriptor:
    x_element: int
    generator_pair: tuple[Triple, Triple]
    cyclic_order: int


def monocyclic_descriptor(spec: ReesMatrixSpec, m: Triple, n: Triple) -> MonocyclicDescriptor:
    """X = a p_{lam,i} (b p_{mu,i})^-1 for m = (i, a, lam), n = (i, b, mu)."""
    g = spec.group
    i, a, lam = m
    _, b, mu = n
    ap = g.mul(a, spec.entry(lam, i))
    bp = g.mul(b, spec.entry(mu, i))
    x = g.mul(ap, g.inv(bp))
    return MonocyclicDescriptor(x, (m, n), g.element_order(x))


def monocyclic_closed_form(
    spec: ReesMatrixSpec, m: Optional[Triple], n: Optional[Triple]
) -> Congruence:
    """rho(m, n) on the regular act of M0[G; {i}, Lambda; P]; None stands for the zero."""
    if not spec.with_zero or spec.i_size != 1:
        raise PreconditionViolated("closed form needs a zero and |I| = 1")
    if m == n:
        raise PreconditionViolated("generator pair must be two distinct elements")
    act = regular_act(rees_matrix(spec))
    if m is None or n is None:
        return nabla(act)
    g = spec.group
    desc = monocyclic_descriptor(spec, m, n)
    powers = g.cyclic_subgroup(desc.x_element)

    def coset(z: int) -> list[int]:
        return [g.mul(xk, z) for xk in powers]

    i, a, lam = m
    _, b, mu = n
    labels = [0] * len(act)  # the zero keeps class id 0
    next_id = 1
    # every nonzero (i, z, theta) sits in {(i, X^k z, theta)}
    for theta in range(spec.lambda_size):
        for z in range(len(g)):
            q = element_index(spec, (i, z, theta))
            if labels[q]:
                continue
            for w in coset(z):
                labels[element_index(spec, (i, w, theta))] = next_id
            next_id += 1
    # the generator class fuses the cosets of a (row lam) and b (row mu)
    fused = labels[element_index(spec, (i, b, mu))]
    absorbed = labels[element_index(spec, (i, a, lam))]
    labels = [fused if c == absorbed else c for c in labels]
    return Congruence.from_labels(act, labels)


# ---------------------------------------------------------------------------
# predictions for completely (0-)simple semigroups


@dataclass(frozen=True)
class Prediction:
    si: Optional[bool]
    irreducible: Optional[bool]
    uniform: bool
    source: str  # "closed-form" or "brute-force"


def predict_completely_0_simple(spec: ReesMatrixSpec) -> Prediction:
    if not spec.with_zero:
        raise PreconditionViolated("spec must carry a zero")
    if spec.order <= 2:
        summary = summarize(regular_act(rees_matrix(spec)))
        return Prediction(summary.si, summary.irreducible, summary.uniform, "brute-force")
    single_i = spec.i_size == 1
    group_like = single_i and spec.lambda_size == 1
    si = group_like and is_cocyclic(spec.group)[0]
    irreducible = group_like and nontrivial_subgroups_pairwise_intersect(spec.group)
    return Prediction(si, irreducible, single_i, "closed-form")


def predict_completely_simple(spec: ReesMatrixSpec) -> Prediction:
    if spec.with_zero:
        raise PreconditionViolated("spec must not carry a zero")
    if spec.order <= 2:
        summary = summarize(regular_act(rees_matrix(spec)))
        return Prediction(None, None, summary.uniform, "brute-force")
    return Prediction(None, None, spec.i_size == 1, "closed-form")


def predict_rectangular_band_uniform(i_size: int, lambda_size: int) -> Optional[bool]:
    """Right uniformity of a band with more than two elements; None otherwise."""
    if i_size * lambda_size <= 2:
        return None
    return i_size == 1


# ---------------------------------------------------------------------------
# acts over rectangular bands

SI = "SI"
UNIFORM_NOT_SI = "uniform-not-SI"
NEITHER = "neither"

NO_ZERO = "no-zero-simple-pair"
ONE_ZERO = "one-zero-kernel"
TWO_ZERO = "two-zero-separated"
NOT_CLASSIFIED = "not-classified"


@dataclass(frozen=True)
class RectBandClassification:
    verdict: str
    case_tag: str
    si: bool
    uniform: bool
    lambda_partition: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    kernel_states: Optional[tuple[int, int]] = None
    witnesses: dict = field(default_factory=dict, compare=False)


def _verdict(si: bool, uniform: bool) -> str:
    if si:
        return SI
    return UNIFORM_NOT_SI if uniform else NEITHER


def _band_points(a: RightAct) -> tuple[int, int, dict[tuple[int, int], int]]:
    """|I|, |Lambda| and the element index of each (i, lam).

    Coordinates are recovered structurally: i indexes the distinct x*S and
    lam the distinct S*x, so isomorphic tables are accepted.
    """
    s = a.semigroup
    if not is_rectangular_band(s):
        raise NotARectangularBand("semigroup is not a rectangular band")
    t = s.table
    n = len(s)
    row_ids: dict[frozenset, int] = {}
    col_ids: dict[frozenset, int] = {}
    coords = {}
    for x in range(n):
        r = row_ids.setdefault(frozenset(t[x][y] for y in range(n)), len(row_ids))
        c = col_ids.setdefault(frozenset(t[y][x] for y in range(n)), len(col_ids))
        coords[(r, c)] = x
    return len(row_ids), len(col_ids), coords


def _lambda_partition(
    a: RightAct, coords: dict[tuple[int, int], int], x: int, y: int, i_size: int, lambda_size: int
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Split Lambda by which of x, y the nonzero values of A(I x {lam}) hit."""
    lam1, lam2 = [], []
    for lam in range(lambda_size):
        hits = {
            a.action[q][coords[(i, lam)]]
            for q in range(len(a))
            for i in range(i_size)
        } - set(zeros(a))
        if hits == {x}:
            lam1.append(lam)
        elif hits == {y}:
            lam2.append(lam)
        else:
            return None
    if not lam1 or not lam2:
        return None
    return tuple(lam1), tuple(lam2)


def classify_act_rect_band(a: RightAct) -> RectBandClassification:
    i_size, lambda_size, coords = _band_points(a)
    n = len(a)
    zs = zeros(a)
    if n == 1:
        # one-element acts: not SI, vacuously uniform
        return RectBandClassification(UNIFORM_NOT_SI, NOT_CLASSIFIED, False, True)
    if len(zs) == 0:
        return _classify_no_zero(a, coords, i_size, lambda_size)
    if len(zs) == 1:
        return _classify_one_zero(a, zs[0], coords, i_size, lambda_size)
    if len(zs) == 2:
        return _classify_two_zero(a, zs[0], zs[1])
    # three singleton zero subacts pairwise meet in one state, so not uniform
    return RectBandClassification(NEITHER, NOT_CLASSIFIED, False, False, witnesses={"zeros": zs})


def _classify_no_zero(a, coords, i_size, lambda_size) -> RectBandClassification:
    n = len(a)
    orbits = {orbit(a, q) for q in range(n)}
    uniform = False
    ker = None
    if len(orbits) == 1:
        ker = next(iter(orbits))
        uniform = all(
            separates(a, x, y)
            for x, y in itertools.combinations(range(n), 2)
            if not (x in ker and y in ker)
        )
    si = n == 2 and all(orbit(a, q) | {q} == frozenset(range(n)) for q in range(n))
    partition = kernel_pair = None
    if si:
        x, y = 0, 1
        partition = _lambda_partition(a, coords, x, y, i_size, lambda_size)
        kernel_pair = (x, y)
    return RectBandClassification(
        _verdict(si, uniform), NO_ZERO, si, uniform, partition, kernel_pair,
        {"kernel": sorted(ker) if ker is not None else None},
    )


def _classify_one_zero(a, theta, coords, i_size, lambda_size) -> RectBandClassification:
    n = len(a)
    nonzero = [q for q in range(n) if q != theta]
    partition = kernel_pair = None

    # SI: either {a, theta}, or a two-element kernel {x, y} with a Lambda split
    si = False
    if n == 2:
        si = True
    else:
        xy = sorted(image(a) - {theta})
        if len(xy) == 2:
            x, y = xy
            ker_ok = (
                orbit(a, x) == {x, y}
                and orbit(a, y) == {x, y}
                and all({x, y} <= orbit(a, q) for q in nonzero)
            )
            part = _lambda_partition(a, coords, x, y, i_size, lambda_size)
            if ker_ok and part is not None:
                lam1, lam2 = part
                shape_ok = True
                for q in nonzero:
                    vals1 = {a.action[q][coords[(i, l)]] for i in range(i_size) for l in lam1}
                    vals2 = {a.action[q][coords[(i, l)]] for i in range(i_size) for l in lam2}
                    if q in (x, y):
                        shape_ok &= vals1 <= {x, theta} and vals2 <= {y, theta}
                    else:
                        shape_ok &= vals1 == {x, theta} and vals2 == {y, theta}
                sep_ok = all(
                    separates(a, p, q)
                    for p, q in itertools.combinations(range(n), 2)
                    if {p, q} != {x, y}
                )
                if shape_ok and sep_ok:
                    si = True
                    partition, kernel_pair = part, (x, y)

    # uniform: {a, theta} with aS = {theta}, or every nonzero aS is Ker or Ker + theta
    uniform = False
    ker = kernel(a)
    if n == 2 and orbit(a, nonzero[0]) == {theta}:
        uniform = True
    elif ker is not None:
        orbits_ok = all(orbit(a, q) in (ker, ker | {theta}) for q in nonzero)
        sep_ok = all(
            separates(a, p, q)
            for p, q in itertools.combinations(range(n), 2)
            if not (p in ker and q in ker)
        )
        uniform = orbits_ok and sep_ok
    return RectBandClassification(
        _verdict(si, uniform), ONE_ZERO, si, uniform, partition, kernel_pair,
        {"zero": theta, "kernel": sorted(ker) if ker is not None else None},
    )


def _classify_two_zero(a, t1, t2) -> RectBandClassification:
    n = len(a)
    target = {t1, t2}
    si = all(
        any({a.action[p][s], a.action[q][s]} == target for s in range(len(a.semigroup)))
        for p, q in itertools.combinations(range(n), 2)
    )
    uniform = image(a) == target and is_separated(a)
    return RectBandClassification(
        _verdict(si, uniform), TWO_ZERO, si, uniform, None, (t1, t2), {"zeros": [t1, t2]},
    )


@dataclass(frozen=True)
class BoundReport:
    holds: bool
    violations: tuple[str, ...]


def two_zero_bound_check(a: RightAct, zero_states: Optional[tuple[int, ...]] = None) -> BoundReport:
    """For an SI act with two zeros: a*S = {t1, t2} for nonzero a and |A| <= 2^|I|."""
    i_size, _, _ = _band_points(a)
    zs = tuple(zeros(a)) if zero_states is None else tuple(zero_states)
    if len(zs) != 2:
        return BoundReport(False, (f"expected two zeros, found {len(zs)}",))
    violations = []
    for q in range(len(a)):
        if q not in zs and orbit(a, q) != set(zs):
            violations.append(f"state {a.states[q]} has orbit {sorted(orbit(a, q))}")
    if len(a) > 2 ** i_size:
        violations.append(f"|A| = {len(a)} exceeds 2^{i_size}")
    return BoundReport(not violations, tuple(violations))


def band_dimensions(a: RightAct) -> tuple[int, int]:
    return band_shape(a.semigroup)
