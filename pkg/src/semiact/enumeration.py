"""Exhaustive supply of small instances: acts over a fixed semigroup and Rees specs."""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .acts import RightAct, zeros
from .closedform import classify_act_rect_band
from .congruence import summarize
from .errors import BudgetExceeded, DisagreementFound
from .groups import catalog_group
from .rees import ZERO, ReesMatrixSpec, is_regular
from .semigroup import FiniteSemigroup, rectangular_band

DEFAULT_BUDGET = 10**8
DEFAULT_SEED = 20240517


@dataclass(frozen=True)
class EnumerationBounds:
    max_states: int = 3
    band_i: int = 1
    band_lambda: int = 1
    groups: tuple[str, ...] = ("Z2",)
    max_sandwich_samples: int = 64
    dedup: bool = True
    budget: int = DEFAULT_BUDGET
    override_budget: bool = False
    seed: int = DEFAULT_SEED


def raw_table_count(n_states: int, n_elements: int) -> int:
    return n_states ** (n_states * n_elements)


def check_budget(n_states: int, n_elements: int, bounds: EnumerationBounds) -> int:
    raw = raw_table_count(n_states, n_elements)
    if raw > bounds.budget and not bounds.override_budget:
        raise BudgetExceeded(raw, bounds.budget)
    return raw


# ---------------------------------------------------------------------------
# acts


def _search(
    s: FiniteSemigroup, n: int, rng: Optional[random.Random] = None
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Backtracking over action cells with propagation of a(xy) = (ax)y.

    Whenever two of the three cells of an instance are known the third is
    forced, so conflicts surface as soon as they exist.  -1 marks an
    unassigned cell.
    """
    m = len(s)
    t = s.table
    rows = [[-1] * m for _ in range(n)]
    users: list[list[tuple[int, int]]] = [[] for _ in range(n)]  # cells (b, u) with b*u = a
    factors = [[(u, y) for u in range(m) for y in range(m) if t[u][y] == x] for x in range(m)]
    trail: list[tuple[int, int]] = []
    cells = [(a, x) for a in range(n) for x in range(m)]

    def assign(a0: int, x0: int, v0: int) -> bool:
        queue = [(a0, x0, v0)]
        while queue:
            a, x, v = queue.pop()
            cur = rows[a][x]
            if cur >= 0:
                if cur != v:
                    return False
                continue
            rows[a][x] = v
            trail.append((a, x))
            users[v].append((a, x))
            row_a, row_v, tx = rows[a], rows[v], t[x]
            for y in range(m):
                w = row_v[y]
                if w >= 0:
                    queue.append((a, tx[y], w))
                elif row_a[tx[y]] >= 0:
                    queue.append((v, y, row_a[tx[y]]))
            for b, u in users[a]:
                queue.append((b, t[u][x], v))
            for u, y in factors[x]:
                w = row_a[u]
                if w >= 0:
                    queue.append((w, y, v))
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            a, x = trail.pop()
            users[rows[a][x]].pop()
            rows[a][x] = -1

    def step(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        while k < len(cells) and rows[cells[k][0]][cells[k][1]] >= 0:
            k += 1
        if k == len(cells):
            yield tuple(tuple(r) for r in rows)
            return
        a, x = cells[k]
        values = list(range(n))
        if rng is not None:
            rng.shuffle(values)
        for v in values:
            mark = len(trail)
            if assign(a, x, v):
                yield from step(k + 1)
            undo(mark)

    yield from step(0)


def canonical_form(action: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least action matrix over all relabelings of the states."""
    n = len(action)
    best = None
    for perm in itertools.permutations(range(n)):
        # perm maps old state -> new state
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        cand = tuple(tuple(perm[v] for v in action[inv[q]]) for q in range(n))
        if best is None or cand < best:
            best = cand
    return best


def act_id(action: Sequence[Sequence[int]]) -> str:
    return f"n{len(action)}:" + "|".join("".join(map(str, row)) for row in action)


def _make_act(s: FiniteSemigroup, action) -> RightAct:
    return RightAct(s, tuple(str(q) for q in range(len(action))), tuple(tuple(r) for r in action))


def enumerate_acts(s: FiniteSemigroup, n: int, bounds: EnumerationBounds) -> Iterator[RightAct]:
    """Every compatible action on n states; with dedup, canonical representatives."""
    check_budget(n, len(s), bounds)
    seen: set = set()
    for action in _search(s, n):
        if bounds.dedup:
            action = canonical_form(action)
            if action in seen:
                continue
            seen.add(action)
        yield _make_act(s, action)


def random_act(s: FiniteSemigroup, n: int, rng: random.Random) -> RightAct:
    """A compatible act found by randomized backtracking (always exists: constant zero)."""
    return _make_act(s, next(_search(s, n, rng)))


# ---------------------------------------------------------------------------
# Rees matrix specs


def _sandwiches(
    group_order: int, lambda_size: int, i_size: int, with_zero: bool,
    max_samples: int, rng: random.Random,
) -> Iterator[tuple[tuple, ...]]:
    entries: list = list(range(group_order)) + ([ZERO] if with_zero else [])
    cells = lambda_size * i_size

    def shape(flat) -> tuple[tuple, ...]:
        return tuple(tuple(flat[r * i_size:(r + 1) * i_size]) for r in range(lambda_size))

    if group_order**cells <= max_samples:
        for flat in itertools.product(entries, repeat=cells):
            p = shape(flat)
            if not with_zero or is_regular(p):
                yield p
        return
    identity = shape([0] * cells)
    chosen = [identity]
    seen = {identity}
    attempts = 0
    while len(chosen) < max_samples and attempts < 100 * max_samples:
        attempts += 1
        p = shape([rng.choice(entries) for _ in range(cells)])
        if p in seen or (with_zero and not is_regular(p)):
            continue
        seen.add(p)
        chosen.append(p)
    yield from chosen


def enumerate_rees(bounds: EnumerationBounds, with_zero: bool = True) -> Iterator[ReesMatrixSpec]:
    """Specs over the catalog groups in ``bounds.groups`` and every I x Lambda within bounds.

    Sandwich matrices are exhaustive when |G|^(|Lambda| |I|) <= max_sandwich_samples
    and otherwise a seeded sample that always contains the all-identity matrix.
    The identity element of each catalog group has index 0.
    """
    for name in bounds.groups:
        g = catalog_group(name)
        for i_size in range(1, bounds.band_i + 1):
            for lambda_size in range(1, bounds.band_lambda + 1):
                rng = random.Random(f"{bounds.seed}:{name}:{i_size}:{lambda_size}:{with_zero}")
                for p in _sandwiches(
                    len(g), lambda_size, i_size, with_zero, bounds.max_sandwich_samples, rng
                ):
                    yield ReesMatrixSpec(g, i_size, lambda_size, p, with_zero)


# ---------------------------------------------------------------------------
# atlas


@dataclass
class AtlasReport:
    band: tuple[int, int]
    max_states: int
    rows: list[dict] = field(default_factory=list)
    disagreements: list[dict] = field(default_factory=list)

    @property
    def census(self) -> dict[str, int]:
        counts = Counter(
            f"states={r['states']} zeros={r['zero_count']} {r['verdict']}" for r in self.rows
        )
        return dict(sorted(counts.items()))

    def summary(self) -> dict:
        return {
            "band": list(self.band),
            "max_states": self.max_states,
            "instances": len(self.rows),
            "census": self.census,
            "disagreements": len(self.disagreements),
        }


def atlas_row(act: RightAct) -> tuple[dict, Optional[dict]]:
    brute = summarize(act)
    closed = classify_act_rect_band(act)
    row = {
        "id": act_id(act.action),
        "states": len(act),
        "zero_count": len(zeros(act)),
        "si": brute.si,
        "irreducible": brute.irreducible,
        "uniform": brute.uniform,
        "case": closed.case_tag,
        "verdict": closed.verdict,
    }
    disagreement = None
    if (closed.si, closed.uniform) != (brute.si, brute.uniform):
        disagreement = {
            "id": row["id"],
            "action": [list(r) for r in act.action],
            "brute": {"si": brute.si, "uniform": brute.uniform},
            "closed_form": {"si": closed.si, "uniform": closed.uniform, "case": closed.case_tag},
        }
    return row, disagreement


def iter_band_acts(band: tuple[int, int], bounds: EnumerationBounds) -> Iterator[RightAct]:
    s = rectangular_band(*band)
    for n in range(1, bounds.max_states + 1):
        yield from enumerate_acts(s, n, bounds)


def build_atlas(
    band: tuple[int, int], bounds: EnumerationBounds, strict: bool = True
) -> AtlasReport:
    """Compare brute-force and closed-form verdicts on every act with <= max_states states."""
    report = AtlasReport(band, bounds.max_states)
    for act in iter_band_acts(band, bounds):
        row, disagreement = atlas_row(act)
        report.rows.append(row)
        if disagreement is not None:
            if strict:
                raise DisagreementFound(f"verdicts differ on {row['id']}", disagreement)
            report.disagreements.append(disagreement)
    return report
