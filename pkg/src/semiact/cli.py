"""Command-line front end.

Exit status: 0 on success or agreement, 1 when a checked property fails or two
computations disagree, 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import closedform, serialize
from .acts import RightAct, analyze, regular_act
from .congruence import closure, summarize
from .enumeration import DEFAULT_BUDGET, DEFAULT_SEED, EnumerationBounds, atlas_row, iter_band_acts
from .errors import AlgebraError
from .groups import parse_group_list
from .rees import decode_label, rees_matrix
from .semigroup import FiniteSemigroup, band_shape, is_rectangular_band, rectangular_band
from . import suites

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2

SUITE_DEFAULTS = {
    "monocyclic-closed-form": {"groups": "Z2..Z6,S3", "max_i": 1, "max_lambda": 3, "samples": 50},
    "rees-si": {"groups": "Z1..Z8,V4,S3,Q8", "max_i": 2, "max_lambda": 2, "samples": 64},
    "rees-irreducible": {"groups": "Z1..Z8,V4,S3,Q8", "max_i": 2, "max_lambda": 2, "samples": 64},
    "rees-uniform": {"groups": "Z1..Z3", "max_i": 3, "max_lambda": 3, "samples": 64},
    "two-sided": {"groups": "Z1..Z8,V4,S3,Q8", "max_i": 2, "max_lambda": 2, "samples": 64},
    "idempotent-split": {"groups": "Z1..Z4", "max_i": 2, "max_lambda": 2, "samples": 16},
}
BAND_SUITES = {
    "band-si": {"compare": ("si",), "checks": ()},
    "band-uniform": {"compare": ("uniform",), "checks": ()},
    "two-zero-bound": {"compare": (), "checks": ("two-zero-bound",)},
    "kernel-pair": {"compare": (), "checks": ("kernel-pair",)},
    "separated-or-kernel": {"compare": (), "checks": ("separated-or-kernel",)},
    "simple-pair": {"compare": (), "checks": ("simple-pair",)},
    "subact-intersection": {"compare": (), "checks": ("subact-intersection",)},
}
for _name in BAND_SUITES:
    SUITE_DEFAULTS[_name] = {"groups": "", "max_i": 2, "max_lambda": 2, "samples": 0}
SUITE_NAMES = tuple(SUITE_DEFAULTS)


class Output:
    def __init__(self) -> None:
        self.lines: list[str] = []

    def __call__(self, line: str = "") -> None:
        self.lines.append(line)

    def json(self, obj: dict) -> None:
        self.lines.append(serialize.dumps(obj))

    def text(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _labels(a: RightAct, states) -> str:
    return "{" + ", ".join(a.states[q] for q in sorted(states)) + "}"


def parse_pairs(text: str, labels: Sequence[str]) -> list[tuple[int, int]]:
    """Parse ``"a,b;c,d"``; labels may contain commas, so every split point is tried."""
    index = {label: q for q, label in enumerate(labels)}
    pairs = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        found = None
        for k, ch in enumerate(chunk):
            if ch != ",":
                continue
            left, right = chunk[:k].strip(), chunk[k + 1:].strip()
            if left in index and right in index:
                found = (index[left], index[right])
                break
        if found is None:
            raise AlgebraError(f"cannot read {chunk!r} as a pair of state labels")
        pairs.append(found)
    if not pairs:
        raise AlgebraError("no pairs given")
    return pairs


def _act_of(kind: str, obj) -> RightAct:
    if kind == "act":
        return obj
    if kind == "rees":
        return regular_act(rees_matrix(obj))
    return regular_act(obj)


def _summary_dict(summary) -> dict:
    return {"si": summary.si, "irreducible": summary.irreducible, "uniform": summary.uniform}


def cmd_validate(args, out: Output) -> int:
    kind, obj = serialize.load(args.input)
    if args.json:
        out.json({"kind": kind, "valid": True})
        return EXIT_OK
    if kind == "semigroup":
        ident = "none" if obj.identity is None else obj.elements[obj.identity]
        out(f"valid semigroup: {len(obj)} elements, identity {ident}")
    elif kind == "act":
        out(f"valid act: {len(obj)} states over a semigroup of order {len(obj.semigroup)}")
    else:
        out(f"valid Rees spec: |G| = {len(obj.group)}, |I| = {obj.i_size}, "
            f"|Lambda| = {obj.lambda_size}, zero = {str(obj.with_zero).lower()}")
    return EXIT_OK


def cmd_rees(args, out: Output) -> int:
    kind, spec = serialize.load(args.input)
    if kind != "rees":
        raise AlgebraError(f"{args.input}: not a Rees spec")
    out(json.dumps(serialize.semigroup_to_dict(rees_matrix(spec)), indent=1))
    return EXIT_OK


def cmd_classify_semigroup(args, out: Output) -> int:
    kind, obj = serialize.load(args.input)
    if kind == "act":
        raise AlgebraError(f"{args.input}: expected a semigroup or Rees spec")
    s: FiniteSemigroup = rees_matrix(obj) if kind == "rees" else obj
    brute = summarize(regular_act(s))
    result = {"order": len(s), "brute_force": _summary_dict(brute)}
    predicted: Optional[dict] = None
    if kind == "rees":
        if obj.with_zero:
            p = closedform.predict_completely_0_simple(obj)
            predicted = {"si": p.si, "irreducible": p.irreducible, "uniform": p.uniform, "source": p.source}
        else:
            p = closedform.predict_completely_simple(obj)
            predicted = {"uniform": p.uniform, "source": p.source}
    elif is_rectangular_band(s):
        u = closedform.predict_rectangular_band_uniform(*band_shape(s))
        if u is not None:
            predicted = {"uniform": u, "source": "closed-form"}
    agree = True
    if predicted is not None:
        agree = all(predicted[k] == result["brute_force"][k] for k in ("si", "irreducible", "uniform") if k in predicted)
        result["predicted"] = predicted
        result["agree"] = agree
    if args.json:
        out.json(result)
    else:
        out(f"order {len(s)}")
        out("brute force: " + " ".join(f"{k}={str(v).lower()}" for k, v in result["brute_force"].items()))
        if predicted is not None:
            out("closed form: " + " ".join(f"{k}={str(v).lower()}" for k, v in predicted.items()))
            out("agreement: " + ("yes" if agree else "NO"))
    return EXIT_OK if agree else EXIT_VIOLATION


def cmd_classify_act(args, out: Output) -> int:
    kind, obj = serialize.load(args.input)
    act = _act_of(kind, obj)
    info = analyze(act, max_states=args.max_states)
    brute = summarize(act)
    result = {
        "states": len(act),
        "zeros": [act.states[q] for q in info.zeros],
        "kernel": None if info.kernel is None else [act.states[q] for q in sorted(info.kernel)],
        "separated": info.is_separated,
        "subacts": len(info.subacts),
        "brute_force": _summary_dict(brute),
    }
    agree = True
    if is_rectangular_band(act.semigroup):
        c = closedform.classify_act_rect_band(act)
        agree = (c.si, c.uniform) == (brute.si, brute.uniform)
        result["closed_form"] = {
            "si": c.si,
            "irreducible": None,
            "uniform": c.uniform,
            "case": c.case_tag,
            "lambda_partition": None if c.lambda_partition is None else [list(p) for p in c.lambda_partition],
            "kernel": None if c.kernel_states is None else [act.states[q] for q in c.kernel_states],
        }
        result["agree"] = agree
    if args.json:
        out.json(result)
    else:
        out(f"{len(act)} states; zeros {result['zeros']}; kernel {result['kernel']}; "
            f"separated {str(info.is_separated).lower()}")
        out("brute force: " + " ".join(f"{k}={str(v).lower()}" for k, v in result["brute_force"].items()))
        if "closed_form" in result:
            cf = result["closed_form"]
            out(f"closed form: si={str(cf['si']).lower()} uniform={str(cf['uniform']).lower()} case={cf['case']}")
            out("agreement: " + ("yes" if agree else "NO"))
    return EXIT_OK if agree else EXIT_VIOLATION


def cmd_congruence(args, out: Output) -> int:
    kind, obj = serialize.load(args.input)
    act = _act_of(kind, obj)
    pairs = parse_pairs(args.pairs, act.states)
    rho = closure(act, pairs)
    status = EXIT_OK
    check = None
    if args.closed_form:
        if kind != "rees" or len(pairs) != 1:
            raise AlgebraError("--closed-form needs a Rees spec input and exactly one pair")
        x, y = pairs[0]
        closed = closedform.monocyclic_closed_form(
            obj, decode_label(act.states[x]), decode_label(act.states[y])
        )
        check = closed.class_of == rho.class_of
        status = EXIT_OK if check else EXIT_VIOLATION
    if args.json:
        d = serialize.congruence_to_dict(rho)
        if check is not None:
            d["cross_check"] = check
        out.json(d)
    else:
        out(" | ".join(_labels(act, c) for c in sorted(rho.classes(), key=min)))
        if check is not None:
            out("cross-check " + ("OK" if check else "FAILED"))
    return status


def _bounds(args, max_states: int) -> EnumerationBounds:
    return EnumerationBounds(
        max_states=max_states,
        budget=args.budget,
        override_budget=args.override_budget,
        seed=args.seed,
    )


def cmd_atlas(args, out: Output) -> int:
    band = tuple(int(v) for v in args.band.lower().split("x"))
    if len(band) != 2:
        raise AlgebraError("--band must look like 2x1")
    bounds = _bounds(args, args.max_states or 3)
    rows, disagreements = [], []
    for act in iter_band_acts(band, bounds):
        row, bad = atlas_row(act)
        rows.append(row)
        if bad is not None:
            disagreements.append(bad)
    report = {
        "band": list(band),
        "max_states": bounds.max_states,
        "seed": bounds.seed,
        "instances": len(rows),
        "disagreements": disagreements,
    }
    census: dict[str, int] = {}
    for r in rows:
        key = f"states={r['states']} zeros={r['zero_count']} {r['verdict']}"
        census[key] = census.get(key, 0) + 1
    report["census"] = dict(sorted(census.items()))
    if args.json:
        for r in rows:
            out.json(r)
        out.json(report)
    else:
        for r in rows:
            out(f"{r['id']:<24} zeros={r['zero_count']} {r['verdict']:<15} case={r['case']}")
        for k, v in report["census"].items():
            out(f"census {k}: {v}")
        out(f"{len(rows)} acts, {len(disagreements)} disagreements")
    return EXIT_OK if not disagreements else EXIT_VIOLATION


def _run_suite(name: str, args) -> suites.SuiteResult:
    d = SUITE_DEFAULTS[name]
    groups = parse_group_list(args.groups or d["groups"]) if (args.groups or d["groups"]) else []
    max_i = args.max_i or d["max_i"]
    max_lambda = args.max_lambda or d["max_lambda"]
    samples = args.samples or d["samples"]
    seed = args.seed
    if name == "monocyclic-closed-form":
        return suites.monocyclic_suite(groups, max_lambda, samples, seed)
    if name in ("rees-si", "rees-irreducible", "two-sided"):
        specs = list(suites.rees_specs(groups, max_i, max_lambda, samples, True, seed))
        return {
            "rees-si": suites.rees_si_suite,
            "rees-irreducible": suites.rees_irreducible_suite,
            "two-sided": suites.two_sided_suite,
        }[name](specs)
    if name == "rees-uniform":
        return suites.rees_uniform_suite(groups, max_i, max_lambda, samples)
    if name == "idempotent-split":
        semigroups = [
            (suites.spec_name(spec, g), rees_matrix(spec))
            for zero in (True, False)
            for g, spec in suites.rees_specs(groups, max_i, max_lambda, samples, zero, seed)
        ]
        semigroups += [
            (f"band {i}x{l}", rectangular_band(i, l))
            for i in range(1, max_i + 1)
            for l in range(1, max_lambda + 1)
        ]
        return suites.idempotent_split_suite(semigroups)
    opts = BAND_SUITES[name]
    result = suites.SuiteResult(name)
    bounds = _bounds(args, args.max_states or 3)
    for i in range(1, max_i + 1):
        for l in range(1, max_lambda + 1):
            part = suites.band_suite((i, l), bounds, opts["checks"], opts["compare"], idempotents=False)
            for row in part.rows:
                result.record(dict(row, band=f"{i}x{l}"), row["ok"])
    return result


def _row_text(row: dict) -> str:
    flag = "ok  " if row["ok"] else "FAIL"
    rest = " ".join(f"{k}={json.dumps(v)}" for k, v in row.items() if k != "ok")
    return f"{flag} {rest}"


def cmd_verify(args, out: Output) -> int:
    result = _run_suite(args.suite, args)
    if args.json:
        for row in result.rows:
            out.json(row)
        out.json(result.summary())
    else:
        for row in result.rows:
            out(_row_text(row))
        s = result.summary()
        out(f"suite {s['suite']}: {s['instances']} instances, {s['failures']} failures")
    return EXIT_OK if result.passed else EXIT_VIOLATION


COMMANDS = {
    "validate": cmd_validate,
    "rees": cmd_rees,
    "classify-semigroup": cmd_classify_semigroup,
    "classify-act": cmd_classify_act,
    "congruence": cmd_congruence,
    "atlas": cmd_atlas,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semiact", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", type=Path, help="write the report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("validate", "rees", "classify-semigroup"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("input", type=Path)
    p = sub.add_parser("classify-act", parents=[common])
    p.add_argument("input", type=Path)
    p.add_argument("--max-states", type=int, default=12, help="subact enumeration bound")
    p = sub.add_parser("congruence", parents=[common])
    p.add_argument("input", type=Path)
    p.add_argument("--pairs", required=True, help='state label pairs, "a,b;c,d"')
    p.add_argument("--closed-form", action="store_true")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--max-states", type=int)
    search.add_argument("--seed", type=int, default=DEFAULT_SEED)
    search.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    search.add_argument("--override-budget", action="store_true")
    p = sub.add_parser("atlas", parents=[common, search])
    p.add_argument("--band", required=True, help="I x Lambda, e.g. 2x1")
    p = sub.add_parser("verify", parents=[common, search])
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)
    p.add_argument("--groups", help="catalog groups, e.g. Z2..Z8,Q8,V4")
    p.add_argument("--max-i", type=int)
    p.add_argument("--max-lambda", type=int)
    p.add_argument("--samples", type=int, help="sandwich sample size when not exhaustive")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    source = getattr(args, "input", None)
    if source is not None and not source.exists():
        print(f"error: {source}: no such file", file=sys.stderr)
        return EXIT_INPUT
    out = Output()
    try:
        status = COMMANDS[args.command](args, out)
    except (AlgebraError, OSError) as err:
        where = f"{source}: " if source is not None else ""
        print(f"error: {where}{type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_INPUT
    if args.out is not None:
        args.out.write_text(out.text())
    else:
        sys.stdout.write(out.text())
    return status


if __name__ == "__main__":
    sys.exit(main())
