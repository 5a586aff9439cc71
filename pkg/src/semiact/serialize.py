"""JSON forms of semigroups, Rees specs, acts and congruences (schema version 1)."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Union

from .acts import RightAct, validate_act
from .congruence import Congruence
from .errors import AlgebraError, ShapeMismatch
from .groups import FiniteGroup, catalog_group, cyclic_group, group_from_semigroup
from .rees import ZERO, ReesMatrixSpec, make_spec
from .semigroup import FiniteSemigroup, validate_semigroup

VERSION = 1


class FormatError(AlgebraError):
    pass


def _require(d: dict, *keys: str) -> None:
    missing = [k for k in keys if k not in d]
    if missing:
        raise FormatError(f"missing field(s): {', '.join(missing)}")


def semigroup_to_dict(s: FiniteSemigroup) -> dict:
    return {"version": VERSION, "elements": list(s.elements), "table": [list(r) for r in s.table]}


def semigroup_from_dict(d: dict) -> FiniteSemigroup:
    _require(d, "elements", "table")
    return validate_semigroup(d["elements"], d["table"])


def group_from_dict(d: Any) -> FiniteGroup:
    if isinstance(d, str):
        return catalog_group(d)
    if not isinstance(d, dict):
        raise FormatError("group must be a catalog name or an object")
    if "cyclic" in d:
        return cyclic_group(int(d["cyclic"]))
    if "name" in d:
        return catalog_group(d["name"])
    return group_from_semigroup(semigroup_from_dict(d))


def spec_to_dict(spec: ReesMatrixSpec) -> dict:
    group = semigroup_to_dict(spec.group.base)
    del group["version"]
    return {
        "version": VERSION,
        "group": group,
        "i_size": spec.i_size,
        "lambda_size": spec.lambda_size,
        "sandwich": [["0" if p is ZERO else p for p in row] for row in spec.sandwich],
        "with_zero": spec.with_zero,
    }


def spec_from_dict(d: dict) -> ReesMatrixSpec:
    _require(d, "group", "sandwich", "with_zero")
    group = group_from_dict(d["group"])
    sandwich = [[ZERO if p == "0" else int(p) for p in row] for row in d["sandwich"]]
    spec = make_spec(group, sandwich, bool(d["with_zero"]))
    for key, have in (("i_size", spec.i_size), ("lambda_size", spec.lambda_size)):
        if key in d and int(d[key]) != have:
            raise ShapeMismatch(f"{key} = {d[key]} but the sandwich implies {have}")
    return spec


def act_to_dict(a: RightAct) -> dict:
    s = semigroup_to_dict(a.semigroup)
    del s["version"]
    return {
        "version": VERSION,
        "semigroup": s,
        "states": list(a.states),
        "action": [list(r) for r in a.action],
    }


def act_from_dict(d: dict, base_dir: Optional[Path] = None) -> RightAct:
    _require(d, "semigroup", "states", "action")
    sd = d["semigroup"]
    if isinstance(sd, dict) and "file" in sd:
        path = Path(sd["file"])
        if not path.is_absolute():
            path = (base_dir or Path.cwd()) / path
        sd = json.loads(path.read_text())
    return validate_act(semigroup_from_dict(sd), d["states"], d["action"])


def congruence_to_dict(r: Congruence) -> dict:
    classes = sorted(r.classes(), key=min)
    return {"version": VERSION, "classes": [[r.act.states[q] for q in c] for c in classes]}


def congruence_from_dict(act: RightAct, d: dict) -> Congruence:
    _require(d, "classes")
    index = {label: q for q, label in enumerate(act.states)}
    try:
        classes = [[index[label] for label in c] for c in d["classes"]]
    except KeyError as err:
        raise FormatError(f"unknown state label {err.args[0]!r}") from None
    return Congruence.from_classes(act, classes)


Artifact = Union[FiniteSemigroup, ReesMatrixSpec, RightAct]


def kind_of(d: dict) -> str:
    if "sandwich" in d:
        return "rees"
    if "action" in d:
        return "act"
    if "table" in d:
        return "semigroup"
    raise FormatError("cannot tell whether the file holds a semigroup, act or Rees spec")


def load(path: Union[str, Path]) -> tuple[str, Artifact]:
    path = Path(path)
    try:
        d = json.loads(path.read_text())
    except json.JSONDecodeError as err:
        raise FormatError(f"line {err.lineno}: {err.msg}") from None
    if not isinstance(d, dict):
        raise FormatError("top level must be an object")
    kind = kind_of(d)
    if kind == "rees":
        return kind, spec_from_dict(d)
    if kind == "act":
        return kind, act_from_dict(d, path.parent)
    return kind, semigroup_from_dict(d)


def dumps(d: dict) -> str:
    return json.dumps(d, indent=None, separators=(",", ":"))
