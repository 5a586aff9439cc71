"""Instance checks and verification suites pairing closed forms with brute force."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

from .acts import RightAct, analyze, regular_act, zeros
from .closedform import (
    _band_points,
    classify_act_rect_band,
    monocyclic_closed_form,
    predict_completely_0_simple,
    predict_completely_simple,
    two_zero_bound_check,
)
from .congruence import CongruenceSummary, closure, monocyclic, summarize, two_sided_check
from .enumeration import EnumerationBounds, act_id, enumerate_rees, iter_band_acts
from .groups import catalog_group
from .rees import ReesMatrixSpec, element_index, rees_matrix, triples
from .semigroup import FiniteSemigroup, classify_idempotents, rectangular_band


@dataclass
class SuiteResult:
    name: str
    rows: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, row: dict, ok: bool) -> None:
        row = dict(row, ok=ok)
        self.rows.append(row)
        if not ok:
            self.failures.append(row)

    def summary(self) -> dict:
        return {
            "suite": self.name,
            "instances": len(self.rows),
            "failures": len(self.failures),
            "passed": self.passed,
        }


def spec_name(spec: ReesMatrixSpec, group_name: str) -> str:
    p = ";".join(",".join("-" if e is None else str(e) for e in row) for row in spec.sandwich)
    z = "0" if spec.with_zero else ""
    return f"M{z}[{group_name};{spec.i_size},{spec.lambda_size};{p}]"


@lru_cache(maxsize=None)
def rees_summary(spec: ReesMatrixSpec) -> CongruenceSummary:
    return summarize(regular_act(rees_matrix(spec)))


# ---------------------------------------------------------------------------
# per-instance checks; each returns a list of problems (empty when fine)


def check_idempotent_split(s: FiniteSemigroup, summary: Optional[CongruenceSummary] = None) -> list[str]:
    """In a right uniform semigroup, xy = y forces x left identity or y left zero."""
    if summary is None:
        summary = summarize(regular_act(s))
    if not summary.uniform:
        return []
    problems = []
    n = len(s)
    for x, y in itertools.product(range(n), repeat=2):
        if s.table[x][y] != y:
            continue
        left_identity = all(s.table[x][z] == z for z in range(n))
        left_zero = all(s.table[y][z] == y for z in range(n))
        if not (left_identity or left_zero):
            problems.append(f"x={s.elements[x]} y={s.elements[y]}")
    # idempotents are then left zeros or left identities
    problems += [
        f"idempotent {s.elements[e]} is neither"
        for e, tag in classify_idempotents(s).items()
        if tag == "neither"
    ]
    return problems


def check_subact_intersection(act: RightAct, summary: CongruenceSummary) -> list[str]:
    """Two subacts with >= 2 states of a uniform act share >= 2 states."""
    if not summary.uniform:
        return []
    big = [b for b in analyze(act).subacts if len(b) >= 2]
    return [
        f"{sorted(b)} & {sorted(c)}"
        for b, c in itertools.combinations(big, 2)
        if len(b & c) < 2
    ]


def check_separated_or_kernel(act: RightAct, summary: CongruenceSummary) -> list[str]:
    if not summary.uniform:
        return []
    info = analyze(act)
    if not info.is_separated and info.kernel is None:
        return ["uniform, not separated and no kernel"]
    return []


def check_simple_pair(act: RightAct, summary: CongruenceSummary) -> list[str]:
    """SI acts without zeros over a band have exactly two states."""
    if summary.si and not zeros(act) and len(act) != 2:
        return [f"SI zero-free act with {len(act)} states"]
    return []


def check_two_zero(act: RightAct, summary: CongruenceSummary) -> list[str]:
    """SI acts with two zeros: orbit and size bound, plus the pair-separation criterion."""
    zs = zeros(act)
    if not summary.si or len(zs) != 2:
        return []
    problems = list(two_zero_bound_check(act).violations)
    target = set(zs)
    for p, q in itertools.combinations(range(len(act)), 2):
        if not any({act.action[p][s], act.action[q][s]} == target for s in range(len(act.semigroup))):
            problems.append(f"pair {p},{q} never maps onto the zeros")
    return problems


def check_kernel_pair(act: RightAct, summary: CongruenceSummary) -> list[str]:
    """In an SI act over a band, x = a(i,l) != y = a(i,m) generates the least congruence."""
    if not summary.si:
        return []
    i_size, lambda_size, coords = _band_points(act)
    problems = []
    for a in range(len(act)):
        for i in range(i_size):
            for l, m in itertools.combinations(range(lambda_size), 2):
                x, y = act.action[a][coords[(i, l)]], act.action[a][coords[(i, m)]]
                if x == y:
                    continue
                rho = monocyclic(act, x, y)
                big = [c for c in rho.classes() if len(c) > 1]
                if big != [sorted((x, y))]:
                    problems.append(f"rho({x},{y}) has classes {rho.classes()}")
                elif not all(rho <= r for r in summary.principal_nondiagonal):
                    problems.append(f"rho({x},{y}) is not the least")
    return problems


BAND_CHECKS: dict[str, Callable[[RightAct, CongruenceSummary], list[str]]] = {
    "simple-pair": check_simple_pair,
    "two-zero-bound": check_two_zero,
    "kernel-pair": check_kernel_pair,
    "separated-or-kernel": check_separated_or_kernel,
    "subact-intersection": check_subact_intersection,
}


# ---------------------------------------------------------------------------
# suites


def monocyclic_suite(groups: Iterable[str], max_lambda: int = 3, samples: int = 50, seed: Optional[int] = None) -> SuiteResult:
    """Closed-form monocyclic classes vs closure on every nonzero generator pair.

    Sandwich matrices are exhaustive when |G| <= 4 and sampled otherwise.
    """
    result = SuiteResult("monocyclic-closed-form")
    for name in groups:
        order = len(catalog_group(name))
        kwargs = {} if seed is None else {"seed": seed}
        bounds = EnumerationBounds(
            groups=(name,), band_i=1, band_lambda=max_lambda,
            max_sandwich_samples=order**max_lambda if order <= 4 else samples, **kwargs,
        )
        for spec in enumerate_rees(bounds):
            act = regular_act(rees_matrix(spec))
            bad = []
            nonzero = triples(spec)
            for m, n in itertools.permutations(nonzero, 2):
                closed = monocyclic_closed_form(spec, m, n)
                engine = closure(act, [(element_index(spec, m), element_index(spec, n))])
                if closed.class_of != engine.class_of:
                    bad.append([list(m), list(n)])
            result.record({"spec": spec_name(spec, name), "pairs": len(nonzero) * (len(nonzero) - 1), "mismatches": bad}, not bad)
    return result


def rees_specs(groups: Iterable[str], max_i: int, max_lambda: int, samples: int = 64,
               with_zero: bool = True, seed: Optional[int] = None) -> Iterator[tuple[str, ReesMatrixSpec]]:
    for name in groups:
        kwargs = {} if seed is None else {"seed": seed}
        bounds = EnumerationBounds(
            groups=(name,), band_i=max_i, band_lambda=max_lambda,
            max_sandwich_samples=samples, **kwargs,
        )
        for spec in enumerate_rees(bounds, with_zero=with_zero):
            yield name, spec


def _prediction_suite(suite: str, key: str, specs) -> SuiteResult:
    result = SuiteResult(suite)
    for name, spec in specs:
        predicted = getattr(predict_completely_0_simple(spec), key)
        brute = getattr(rees_summary(spec), key)
        result.record(
            {"spec": spec_name(spec, name), "order": spec.order, "predicted": predicted, "brute_force": brute},
            predicted == brute,
        )
    return result


def rees_si_suite(specs) -> SuiteResult:
    return _prediction_suite("rees-si", "si", specs)


def rees_irreducible_suite(specs) -> SuiteResult:
    return _prediction_suite("rees-irreducible", "irreducible", specs)


def rees_uniform_suite(groups: Iterable[str] = ("Z1", "Z2", "Z3"), max_i: int = 3, max_lambda: int = 3,
                       samples: int = 64) -> SuiteResult:
    result = SuiteResult("rees-uniform")
    for with_zero in (True, False):
        for name, spec in rees_specs(groups, max_i, max_lambda, samples, with_zero):
            if with_zero:
                predicted = predict_completely_0_simple(spec).uniform
            else:
                predicted = predict_completely_simple(spec).uniform
            brute = rees_summary(spec).uniform
            result.record(
                {"spec": spec_name(spec, name), "order": spec.order, "predicted": predicted, "brute_force": brute},
                predicted == brute,
            )
    return result


def two_sided_suite(specs) -> SuiteResult:
    """Least non-diagonal right congruences of SI instances are two-sided."""
    result = SuiteResult("two-sided")
    for name, spec in specs:
        summary = rees_summary(spec)
        if summary.least_nondiagonal is None:
            continue
        ok = two_sided_check(rees_matrix(spec), summary.least_nondiagonal)
        result.record({"spec": spec_name(spec, name)}, ok)
    return result


def idempotent_split_suite(semigroups: Iterable[tuple[str, FiniteSemigroup]]) -> SuiteResult:
    result = SuiteResult("idempotent-split")
    for name, s in semigroups:
        problems = check_idempotent_split(s)
        result.record({"semigroup": name, "problems": problems}, not problems)
    return result


def band_suite(band: tuple[int, int], bounds: EnumerationBounds,
               checks: Iterable[str] = tuple(BAND_CHECKS),
               compare: Iterable[str] = ("si", "uniform"),
               idempotents: bool = True) -> SuiteResult:
    """Closed-form band classification vs brute force, plus instance checks."""
    result = SuiteResult(f"band-{band[0]}x{band[1]}")
    for act in iter_band_acts(band, bounds):
        summary = summarize(act)
        closed = classify_act_rect_band(act)
        problems = [
            f"{key}: closed form {getattr(closed, key)}, brute force {getattr(summary, key)}"
            for key in compare
            if getattr(closed, key) != getattr(summary, key)
        ]
        for check in checks:
            problems += [f"{check}: {p}" for p in BAND_CHECKS[check](act, summary)]
        result.record(
            {"id": act_id(act.action), "si": summary.si, "uniform": summary.uniform,
             "case": closed.case_tag, "problems": problems},
            not problems,
        )
    if idempotents:
        problems = check_idempotent_split(rectangular_band(*band))
        result.record({"semigroup": f"band {band[0]}x{band[1]}", "problems": problems}, not problems)
    return result
