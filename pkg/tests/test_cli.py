import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiact import serialize
from semiact.acts import regular_act
from semiact.cli import main, parse_pairs
from semiact.congruence import Congruence, monocyclic
from semiact.errors import AlgebraError
from semiact.groups import catalog_group, cyclic_group
from semiact.rees import ZERO, make_spec, rees_matrix
from semiact.semigroup import rectangular_band

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# --- round trips ---------------------------------------------------------------------------


@pytest.mark.parametrize("s", [rectangular_band(2, 3), catalog_group("Q8").base, rees_matrix(make_spec(cyclic_group(2), [[0, ZERO], [ZERO, 1]], True))])
def test_semigroup_round_trip(s):
    d = json.loads(serialize.dumps(serialize.semigroup_to_dict(s)))
    assert serialize.semigroup_from_dict(d) == s


@pytest.mark.parametrize("spec", [
    make_spec(cyclic_group(4), [[0], [1]], True),
    make_spec(catalog_group("S3"), [[0, 3], [2, 1]], False),
    make_spec(catalog_group("V4"), [[0, ZERO], [ZERO, 2]], True),
])
def test_spec_round_trip(spec):
    d = json.loads(serialize.dumps(serialize.spec_to_dict(spec)))
    back = serialize.spec_from_dict(d)
    assert rees_matrix(back) == rees_matrix(spec)
    assert back.sandwich == spec.sandwich


def test_act_and_congruence_round_trip(lz_si_act):
    d = json.loads(serialize.dumps(serialize.act_to_dict(lz_si_act)))
    act = serialize.act_from_dict(d)
    assert act == lz_si_act
    r = monocyclic(act, 0, 2)
    d = json.loads(serialize.dumps(serialize.congruence_to_dict(r)))
    assert serialize.congruence_from_dict(act, d) == r


@given(st.lists(st.integers(0, 4), min_size=1, max_size=6))
@settings(max_examples=100, deadline=None)
def test_congruence_round_trip_on_partitions(labels):
    s = rectangular_band(1, 1)
    act = serialize.act_from_dict({"semigroup": serialize.semigroup_to_dict(s), "states": [f"q{k}" for k in range(len(labels))], "action": [[k] for k in range(len(labels))]})
    r = Congruence.from_labels(act, labels)
    assert serialize.congruence_from_dict(act, serialize.congruence_to_dict(r)) == r


def test_congruence_json_unknown_label(lz_si_act):
    with pytest.raises(serialize.FormatError):
        serialize.congruence_from_dict(lz_si_act, {"classes": [["nope"]]})


def test_load_kinds():
    assert serialize.load(FIXTURES / "right_zero2.json")[0] == "semigroup"
    assert serialize.load(FIXTURES / "two_zero_act.json")[0] == "act"
    assert serialize.load(FIXTURES / "z6_group.json")[0] == "rees"


def test_missing_fields():
    with pytest.raises(serialize.FormatError):
        serialize.semigroup_from_dict({"elements": []})
    with pytest.raises(serialize.FormatError):
        serialize.kind_of({"states": []})


# --- pairs flag ---------------------------------------------------------------------------


def test_parse_pairs_with_commas_in_labels():
    labels = ["0", "(0,1,0)", "(0,2,1)"]
    assert parse_pairs("(0,1,0),(0,2,1); 0,(0,1,0)", labels) == [(1, 2), (0, 1)]
    with pytest.raises(AlgebraError):
        parse_pairs("x,y", labels)
    with pytest.raises(AlgebraError):
        parse_pairs(";", labels)


# --- commands -----------------------------------------------------------------------------


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", FIXTURES / "two_zero_act.json")
    assert code == 0 and "3 states" in out


def test_validate_non_associative(capsys):
    code, out, err = run(capsys, "validate", FIXTURES / "bad_nonassociative.json")
    assert code == 2 and out == ""
    assert "x=0, y=0, z=1" in err


@pytest.mark.parametrize("name", ["bad_incompatible_act.json", "bad_irregular.json", "bad_syntax.json"])
def test_input_errors(capsys, name):
    code, _, err = run(capsys, "validate", FIXTURES / name)
    assert code == 2 and name in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", tmp_path / "none.json")
    assert code == 2 and "no such file" in err


def test_rees_expansion(capsys, tmp_path):
    target = tmp_path / "s.json"
    code, _, _ = run(capsys, "rees", FIXTURES / "z4_two_lambda.json", "--out", target)
    assert code == 0
    s = serialize.semigroup_from_dict(json.loads(target.read_text()))
    assert s == rees_matrix(serialize.load(FIXTURES / "z4_two_lambda.json")[1])


def test_rees_rejects_semigroup(capsys):
    assert run(capsys, "rees", FIXTURES / "right_zero2.json")[0] == 2


def test_classify_semigroup_z6(capsys):
    code, out, _ = run(capsys, "classify-semigroup", FIXTURES / "z6_group.json", "--json")
    d = json.loads(out)
    assert code == 0 and d["agree"]
    assert d["brute_force"] == {"si": False, "irreducible": False, "uniform": True}


def test_classify_semigroup_band(capsys):
    code, out, _ = run(capsys, "classify-semigroup", FIXTURES / "band_2x2.json", "--json")
    d = json.loads(out)
    assert code == 0 and d["predicted"]["uniform"] is False


def test_classify_act(capsys):
    code, out, _ = run(capsys, "classify-act", FIXTURES / "two_zero_act.json", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["zeros"] == ["t1", "t2"] and d["kernel"] == ["t1", "t2"]
    assert d["closed_form"]["case"] == "two-zero-separated" and d["brute_force"]["si"]


def test_congruence_closed_form(capsys):
    code, out, _ = run(capsys, "congruence", FIXTURES / "z4_two_lambda.json", "--pairs", "(0,0,0),(0,1,1)", "--closed-form")
    assert code == 0
    first, second = out.splitlines()
    assert first.startswith("{0} | {(0,0,0), ") and second == "cross-check OK"


def test_congruence_json(capsys):
    code, out, _ = run(capsys, "congruence", FIXTURES / "two_zero_act.json", "--pairs", "t1,t2", "--json")
    assert code == 0
    assert json.loads(out) == {"version": 1, "classes": [["t1", "t2"], ["a"]]}


def test_congruence_closed_form_needs_rees(capsys):
    code, _, err = run(capsys, "congruence", FIXTURES / "two_zero_act.json", "--pairs", "t1,t2", "--closed-form")
    assert code == 2 and "closed-form" in err


def test_atlas(capsys):
    code, out, _ = run(capsys, "atlas", "--band", "2x1", "--max-states", "3", "--json")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert lines[-1]["instances"] == len(lines) - 1 and lines[-1]["disagreements"] == []


def test_atlas_budget(capsys):
    code, _, err = run(capsys, "atlas", "--band", "2x2", "--max-states", "4")
    assert code == 2 and "BudgetExceeded" in err


def test_verify_small_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rees-si", "--groups", "Z2..Z4,V4", "--max-i", "1", "--max-lambda", "1")
    assert code == 0
    assert out.splitlines()[-1] == "suite rees-si: 13 instances, 0 failures"  # every 1x1 sandwich: 2 + 3 + 4 + 4


def test_verify_reports_violation(capsys):
    # the trivial group with two Lambda rows is the known counterexample
    code, out, _ = run(capsys, "verify", "--suite", "rees-si", "--groups", "Z1", "--max-i", "1", "--max-lambda", "2", "--json")
    assert code == 1
    assert json.loads(out.splitlines()[-1])["failures"] == 1


def test_verify_band_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "two-zero-bound", "--max-i", "2", "--max-lambda", "1")
    assert code == 0 and "0 failures" in out


def test_output_is_deterministic(capsys):
    args = ("verify", "--suite", "monocyclic-closed-form", "--groups", "Z2,Z3", "--max-lambda", "2", "--json")
    assert run(capsys, *args) == run(capsys, *args)
