import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiact.acts import regular_act, validate_act
from semiact.congruence import (
    Congruence,
    all_congruences_bruteforce,
    closure,
    delta,
    intersect,
    is_large,
    monocyclic,
    nabla,
    rees_congruence,
    set_partitions,
    summarize,
    two_sided_check,
)
from semiact.errors import ActMismatch, NotASubact, SizeLimit
from semiact.groups import catalog_group, cyclic_group
from semiact.rees import element_index, make_spec, rees_matrix
from semiact.semigroup import rectangular_band, right_zero

from conftest import seeded_random_acts, small_band_acts, subsets

ACTS = [a for a in small_band_acts() if len(a) <= 6] + seeded_random_acts(60, max_states=6, seed=11)


def related_pairs(r):
    return {(x, y) for x, y in itertools.combinations(range(len(r.class_of)), 2) if r.class_of[x] == r.class_of[y]}


def least_containing(congs, pairs):
    want = {tuple(sorted(p)) for p in pairs if p[0] != p[1]}
    holders = [r for r in congs if want <= related_pairs(r)]
    least = [r for r in holders if all(related_pairs(r) <= related_pairs(o) for o in holders)]
    assert len(least) == 1
    return least[0]


def lattice_verdicts(a):
    """SI / irreducible / uniform straight from the full congruence lattice."""
    n = len(a)
    if n == 1:
        return False, False, True
    congs = all_congruences_bruteforce(a)
    nondiag = [related_pairs(r) for r in congs if related_pairs(r)]
    si = bool(set.intersection(*nondiag))
    irreducible = all(p & q for p, q in itertools.combinations(nondiag, 2))
    m = len(a.semigroup)
    subs = [b for b in subsets(n) if len(b) >= 2 and all(a.action[q][s] in b for q in b for s in range(m))]
    uniform = all(
        any(x in b and y in b for x, y in p) for b in subs for p in nondiag
    )
    return si, irreducible, uniform


def z4_two_lambda():
    spec = make_spec(cyclic_group(4), [[0], [0]], True)
    return spec, regular_act(rees_matrix(spec))


# --- closure ----------------------------------------------------------------------


def test_closure_reflexive_seed(lz_si_act):
    assert closure(lz_si_act, [(2, 2)]) == delta(lz_si_act)


def test_closure_right_zero(rz2):
    assert monocyclic(regular_act(rz2), 0, 1).is_universal()


def test_closure_z4_two_lambda():
    spec, a = z4_two_lambda()
    m = element_index(spec, (0, 0, 0))
    n = element_index(spec, (0, 1, 1))
    r = monocyclic(a, m, n)
    assert sorted(map(sorted, r.classes())) == [[0], list(range(1, 9))]
    assert r.is_right_compatible()


@pytest.mark.parametrize("idx", range(len(ACTS)))
def test_closure_matches_bruteforce_on_pair_sets(idx):
    a = ACTS[idx]
    congs = all_congruences_bruteforce(a)
    pairs = list(itertools.combinations(range(len(a)), 2))
    singles = [[p] for p in pairs]
    doubles = [list(q) for q in itertools.combinations(pairs, 2)]
    for ps in [[]] + singles + doubles:
        r = closure(a, ps)
        assert r.is_right_compatible()
        assert related_pairs(r) == related_pairs(least_containing(congs, ps))


@pytest.mark.parametrize("idx", range(0, len(ACTS), 3))
def test_closure_monotone(idx):
    a = ACTS[idx]
    pairs = list(itertools.combinations(range(len(a)), 2))
    for p, q in itertools.product(pairs, repeat=2):
        assert closure(a, [p]) <= closure(a, [p, q])


# --- Rees congruence, intersection ---------------------------------------------------


def test_rees_congruence_examples(lz_si_act):
    assert rees_congruence(lz_si_act, [0, 1, 2]) == nabla(lz_si_act)
    assert rees_congruence(lz_si_act, [0]) == delta(lz_si_act)
    assert sorted(map(sorted, rees_congruence(lz_si_act, [0, 1]).classes())) == [[0, 1], [2]]
    with pytest.raises(NotASubact):
        rees_congruence(lz_si_act, [2])


def test_intersect_examples(lz_si_act):
    r = monocyclic(lz_si_act, 0, 1)
    assert intersect(r, delta(lz_si_act)) == delta(lz_si_act)
    assert intersect(r, nabla(lz_si_act)) == r
    a = validate_act(rectangular_band(1, 1), ["x", "y", "z"], [[0], [1], [2]])
    assert intersect(Congruence.from_classes(a, [[0, 1], [2]]), Congruence.from_classes(a, [[0, 2], [1]])).is_diagonal()


def test_intersect_needs_same_act(lz_si_act, rz2):
    with pytest.raises(ActMismatch):
        intersect(delta(lz_si_act), delta(regular_act(rz2)))


# --- largeness ------------------------------------------------------------------------


def test_large_whole_act(lz_si_act):
    assert is_large(lz_si_act, [0, 1, 2]) == (True, None)


def test_large_zero_pair(lz_si_act):
    assert is_large(lz_si_act, [0, 1]) == (True, None)


def test_not_large_with_disjoint_subact():
    s = right_zero(2)
    a = validate_act(s, ["b1", "b2", "c1", "c2"], [[0, 1], [0, 1], [2, 3], [2, 3]])
    ok, witness = is_large(a, [0, 1])
    assert not ok
    rho = monocyclic(a, *witness)
    assert intersect(rho, rees_congruence(a, [0, 1])).is_diagonal()
    assert is_large(a, [0, 1, 2, 3]) == (True, None)


def test_large_needs_subact(lz_si_act):
    with pytest.raises(NotASubact):
        is_large(lz_si_act, [1, 2])


# --- summarize --------------------------------------------------------------------------


def test_summary_right_zero(rz2):
    s = summarize(regular_act(rz2))
    assert s.si and s.least_nondiagonal.is_universal()


def test_summary_left_zero_example(lz_si_act):
    s = summarize(lz_si_act)
    assert s.si
    assert s.least_nondiagonal == rees_congruence(lz_si_act, [0, 1])


def test_summary_z6_not_si():
    a = regular_act(rees_matrix(make_spec(cyclic_group(6), [[0]], True)))
    s = summarize(a)
    assert not s.si
    assert (s.si, s.irreducible, s.uniform) == lattice_verdicts(a)


def test_summary_one_state(rz2):
    s = summarize(validate_act(rz2, ["z"], [[0, 0]]))
    assert (s.si, s.irreducible, s.uniform) == (False, False, True)


def test_summary_size_limit():
    a = validate_act(rectangular_band(1, 1), [str(k) for k in range(5)], [[k] for k in range(5)])
    with pytest.raises(SizeLimit):
        summarize(a, max_states=4)


@pytest.mark.parametrize("idx", range(len(ACTS)))
def test_summary_matches_lattice_definitions(idx):
    a = ACTS[idx]
    s = summarize(a)
    assert (s.si, s.irreducible, s.uniform) == lattice_verdicts(a)
    assert not s.si or s.irreducible
    assert not s.irreducible or s.uniform or len(a) == 1
    keys = [r.class_of for r in s.principal_nondiagonal]
    assert len(keys) == len(set(keys))


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "V4", "S3"])
def test_summary_of_rees_1x1(name):
    a = regular_act(rees_matrix(make_spec(catalog_group(name), [[0]], True)))
    s = summarize(a)
    assert (s.si, s.irreducible, s.uniform) == lattice_verdicts(a)


# --- brute force oracle -------------------------------------------------------------------


def test_set_partition_counts():
    assert [sum(1 for _ in set_partitions(n)) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_bruteforce_small(rz2):
    one = validate_act(rz2, ["z"], [[0, 0]])
    assert all_congruences_bruteforce(one) == [delta(one)]
    a = regular_act(rz2)
    assert set(r.class_of for r in all_congruences_bruteforce(a)) == {(0, 0), (0, 1)}


def test_bruteforce_rees_z4_matches_subgroups():
    # Delta, nabla, the {e, g^2} and full nonzero blocks, each with zero apart or joined
    a = regular_act(rees_matrix(make_spec(cyclic_group(4), [[0]], True)))
    congs = all_congruences_bruteforce(a)
    assert all(r.is_right_compatible() for r in congs)
    nonzero_parts = {tuple(r.class_of[1:]) for r in congs if len(set(r.class_of[1:]) & {r.class_of[0]}) == 0}
    assert len(nonzero_parts) == 3  # one per subgroup of Z4


def test_bruteforce_limit():
    a = validate_act(rectangular_band(1, 1), [str(k) for k in range(9)], [[k] for k in range(9)])
    with pytest.raises(SizeLimit):
        all_congruences_bruteforce(a)


# --- two-sided check ------------------------------------------------------------------------


def test_two_sided_trivial(rz2):
    a = regular_act(rz2)
    assert two_sided_check(rz2, delta(a)) and two_sided_check(rz2, nabla(a))


def test_two_sided_detects_non_normal_subgroup():
    # in S3 the pair (e, (12)) generates the coset partition of a non-normal subgroup
    g = catalog_group("S3")
    a = regular_act(g.base)
    r = monocyclic(a, g.identity, next(x for x in range(6) if x != g.identity and g.mul(x, x) == g.identity))
    assert r.num_classes == 3
    assert not two_sided_check(g.base, r)


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z5", "Q8"])
def test_two_sided_on_si_groups(name):
    sg = rees_matrix(make_spec(catalog_group(name), [[0]], True))
    s = summarize(regular_act(sg))
    assert s.si and two_sided_check(sg, s.least_nondiagonal)


# --- property tests -----------------------------------------------------------------------


@st.composite
def act_and_pairs(draw):
    import random

    from semiact.enumeration import random_act

    s = draw(st.sampled_from([right_zero(2), rectangular_band(2, 1), rectangular_band(2, 2), cyclic_group(3).base]))
    n = draw(st.integers(1, 5))
    a = random_act(s, n, random.Random(draw(st.integers(0, 10**6))))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    return a, draw(st.lists(pair, max_size=3)), draw(st.lists(pair, max_size=3))


@given(act_and_pairs())
@settings(max_examples=150, deadline=None)
def test_closure_properties(data):
    a, p1, p2 = data
    r1 = closure(a, p1)
    r12 = closure(a, p1 + p2)
    assert r1.is_right_compatible()
    assert r1 <= r12
    assert all(r1.related(x, y) for x, y in p1)
    # idempotent: closing over its own pairs changes nothing
    assert closure(a, related_pairs(r1)) == r1
