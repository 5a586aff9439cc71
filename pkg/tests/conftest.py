import itertools

import pytest

from semiact.acts import validate_act
from semiact.groups import group_from_semigroup
from semiact.semigroup import left_zero, right_zero, validate_semigroup

# Explicit Cayley tables, independent of the constructions in semiact.groups.
Z4_TABLE = [
    [0, 1, 2, 3],
    [1, 2, 3, 0],
    [2, 3, 0, 1],
    [3, 0, 1, 2],
]
V4_TABLE = [
    [0, 1, 2, 3],
    [1, 0, 3, 2],
    [2, 3, 0, 1],
    [3, 2, 1, 0],
]
# S3 as e, (12), (13), (23), (123), (132)
S3_TABLE = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 4, 5, 2, 3],
    [2, 5, 0, 4, 3, 1],
    [3, 4, 5, 0, 1, 2],
    [4, 3, 1, 2, 5, 0],
    [5, 2, 3, 1, 0, 4],
]
# Q8 as 1, i, j, k, -1, -i, -j, -k
Q8_TABLE = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 4, 3, 6, 5, 0, 7, 2],
    [2, 7, 4, 1, 6, 3, 0, 5],
    [3, 2, 5, 4, 7, 6, 1, 0],
    [4, 5, 6, 7, 0, 1, 2, 3],
    [5, 0, 7, 2, 1, 4, 3, 6],
    [6, 3, 0, 5, 2, 7, 4, 1],
    [7, 6, 1, 0, 3, 2, 5, 4],
]

EXPLICIT_TABLES = {"Z4": Z4_TABLE, "V4": V4_TABLE, "S3": S3_TABLE, "Q8": Q8_TABLE}


def explicit_group(name):
    table = EXPLICIT_TABLES[name]
    return group_from_semigroup(validate_semigroup([str(k) for k in range(len(table))], table))


@pytest.fixture
def rz2():
    return right_zero(2)


@pytest.fixture
def lz2():
    return left_zero(2)


@pytest.fixture
def lz_si_act(lz2):
    """{t1, t2, a} over the left-zero band {u, v}: a*u = t1, a*v = t2."""
    return validate_act(lz2, ["t1", "t2", "a"], [[0, 0], [1, 1], [0, 1]])


def subsets(n):
    for r in range(1, n + 1):
        yield from (frozenset(c) for c in itertools.combinations(range(n), r))


def small_band_acts(max_states=3):
    """Every act (up to relabeling) with <= max_states states over the small bands."""
    from semiact.enumeration import EnumerationBounds, enumerate_acts
    from semiact.semigroup import rectangular_band

    acts = []
    for i, l in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2)]:
        s = rectangular_band(i, l)
        for n in range(1, max_states + 1):
            acts.extend(enumerate_acts(s, n, EnumerationBounds(max_states=n)))
    return acts


def seeded_random_acts(count, max_states=6, seed=7):
    import random

    from semiact.enumeration import random_act
    from semiact.groups import catalog_group
    from semiact.rees import make_spec, rees_matrix
    from semiact.semigroup import rectangular_band

    pool = [
        right_zero(3),
        left_zero(3),
        rectangular_band(2, 3),
        catalog_group("Z4").base,
        catalog_group("S3").base,
        rees_matrix(make_spec(catalog_group("Z2"), [[0], [1]], True)),
    ]
    rng = random.Random(seed)
    return [random_act(rng.choice(pool), rng.randint(1, max_states), rng) for _ in range(count)]


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
