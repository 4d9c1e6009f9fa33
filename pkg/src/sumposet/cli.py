"""Command-line front end: parse a problem file, compute, emit JSON or tables.

Exit codes: 0 on success, 1 when a computation is refused for the given
input (for example D-module length over non-prime components), 2 on malformed
input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .decomp import (decomposition_json, hilbert_series, mult_M, regularity)
from .errors import InputError, RefusalError
from .exactlin import FieldSpec
from .ideals import (AmbientRing, Ideal, LinearIdeal, PurePowerIdeal, label)
from .oracle import compare
from .poset import build_poset, poset_to_json
from .roos import derived_lim_dims, limit_check, quotient_system, roos_cochain

DEFAULT_MAX_DEGREE = 6


@dataclass(frozen=True)
class ProblemSpec:
    field: FieldSpec
    ambient: AmbientRing
    kind: str
    components: tuple[Ideal, ...]


def _schema_error(path: str, msg: str) -> InputError:
    return InputError(f"{path}: {msg}")


def _parse_field(path: str, data) -> FieldSpec:
    if not isinstance(data, dict) or "kind" not in data:
        raise _schema_error(path, "field must be an object with a 'kind' key")
    kind = data["kind"]
    if kind == "rational":
        if set(data) != {"kind"}:
            raise _schema_error(path, "rational field takes no extra keys")
        return FieldSpec()
    if kind == "prime":
        if set(data) != {"kind", "p"} or not isinstance(data.get("p"), int):
            raise _schema_error(path, "prime field needs an integer 'p'")
        return FieldSpec("prime", data["p"])
    raise _schema_error(path, f"unknown field kind {kind!r}")


def _parse_coefficient(path: str, x):
    if isinstance(x, bool) or isinstance(x, float):
        raise _schema_error(path, f"coefficients must be integers or 'a/b' strings, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise _schema_error(path, f"bad rational literal {x!r}")
    raise _schema_error(path, f"coefficients must be integers or 'a/b' strings, got {x!r}")


def parse_input(path: str) -> ProblemSpec:
    """Load and validate a problem file; canonicalize its components."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}")
    if not isinstance(data, dict):
        raise _schema_error(path, "top level must be an object")
    for key in ("field", "variables", "kind", "components"):
        if key not in data:
            raise _schema_error(path, f"missing required key {key!r}")
    extra = set(data) - {"field", "variables", "kind", "components"}
    if extra:
        raise _schema_error(path, f"unknown keys: {sorted(extra)}")
    field = _parse_field(path, data["field"])
    variables = data["variables"]
    if (not isinstance(variables, list) or not variables
            or not all(isinstance(v, str) for v in variables)
            or len(set(variables)) != len(variables)):
        raise _schema_error(path, "variables must be a nonempty list of distinct names")
    ambient = AmbientRing(len(variables), tuple(variables), field)
    kind = data["kind"]
    if kind not in ("linear", "monomial"):
        raise _schema_error(path, f"kind must be 'linear' or 'monomial', got {kind!r}")
    raw = data["components"]
    if not isinstance(raw, list) or not raw:
        raise _schema_error(path, "components must be a nonempty list")
    components: list[Ideal] = []
    for cidx, comp in enumerate(raw):
        where = f"{path}: components[{cidx}]"
        if kind == "linear":
            if not isinstance(comp, list) or not comp:
                raise _schema_error(where, "must be a nonempty list of coefficient vectors")
            rows = []
            for ridx, row in enumerate(comp):
                if not isinstance(row, list) or len(row) != ambient.d:
                    raise _schema_error(
                        where, f"vector {ridx} must have length {ambient.d}")
                rows.append([_parse_coefficient(where, x) for x in row])
            try:
                components.append(LinearIdeal.from_generators(ambient, rows))
            except InputError as exc:
                raise _schema_error(where, str(exc))
        else:
            if not isinstance(comp, dict) or not comp:
                raise _schema_error(where, "must be a nonempty exponent map")
            exps = {}
            for name, e in comp.items():
                if name not in variables:
                    raise _schema_error(where, f"unknown variable {name!r}")
                if not isinstance(e, int) or isinstance(e, bool) or e < 1:
                    raise _schema_error(where, f"exponent of {name!r} must be an integer >= 1")
                exps[variables.index(name)] = e
            components.append(PurePowerIdeal.from_exponents(ambient, exps))
    dups = sorted({label(c) for i, c in enumerate(components)
                   if c in components[:i]})
    if dups:
        raise _schema_error(path, "duplicate components: " + ", ".join(dups))
    return ProblemSpec(field, ambient, kind, tuple(components))


def _field_json(field: FieldSpec) -> dict:
    out = {"kind": field.kind}
    if field.p is not None:
        out["p"] = field.p
    return out


def _emit_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _table_poset(payload: dict) -> str:
    lines = [f"{'idx':>3}  {'h':>2}  {'d':>2}  element"]
    for e in payload["elements"]:
        lines.append(f"{e['index']:>3}  {e['h']:>2}  {e['d']:>2}  {e['label']}")
    lines.append("cover edges: " + ", ".join(f"{p}<{q}" for p, q in payload["cover_edges"]))
    lines.append("components: " + ", ".join(str(i) for i in payload["components"]))
    return "\n".join(lines) + "\n"


def _table_decompose(payload: dict) -> str:
    lines = [f"{payload['kind']} multiplicities",
             f"{'i':>3}  {'mult':>4}  element"]
    for e in payload["entries"]:
        lines.append(f"{e['i']:>3}  {e['multiplicity']:>4}  {e['element']}")
    lines.append(f"regularity: {payload['regularity']}")
    flags = payload["validity_flags"]
    lines.append("limit defect zero up to degree "
                 f"{flags['max_degree_checked']}: {flags['limit_defect_zero_up_to_degree']}")
    return "\n".join(lines) + "\n"


def _table_hilbert(payload: dict) -> str:
    lines = []
    for row in payload["series"]:
        lines.append(f"i={row['i']}: {row['text']}")
    if not lines:
        lines.append("zero series at every index")
    return "\n".join(lines) + "\n"


def _table_limit(payload: dict) -> str:
    lines = [f"{'j':>3}  {'dim A/I':>8}  {'dim lim':>8}  {'defect':>6}  higher"]
    for row in payload["table"]:
        higher = ",".join(str(x) for x in row["higher"])
        lines.append(f"{row['j']:>3}  {row['dim_quotient']:>8}  {row['dim_lim']:>8}  "
                     f"{row['defect']:>6}  [{higher}]")
    if payload["distributive"]:
        lines.append("distributivity: holds up to the tested degree")
    else:
        w = payload["witnesses"][0]
        lines.append(f"distributivity: FAILS at degree {payload['failure_degree']}, "
                     f"e.g. ({w['p']} + {w['q']}) cap {w['r']}")
        lines.append(f"failing triples: {len(payload['witnesses'])}")
    return "\n".join(lines) + "\n"


def _table_roos(payload: dict) -> str:
    lines = [f"{'j':>3}  spot dims        derived lim dims"]
    for row in payload["degrees"]:
        spots = ",".join(str(x) for x in row["spot_dims"])
        lims = ",".join(str(x) for x in row["derived_lim"])
        lines.append(f"{row['j']:>3}  [{spots}]  [{lims}]")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumposet",
        description="Local cohomology decompositions over the sum-closed poset "
                    "of an ideal decomposition.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("input", help="problem file (JSON)")
        p.add_argument("--output", choices=("json", "table"), default="table")
        return p

    add("poset", help="elements, labels and cover edges of the sum-closed poset")
    p = add("decompose", help="decomposition multiplicity table")
    p.add_argument("--functor", choices=("hochster", "terai"), default="hochster")
    p = add("hilbert", help="local cohomology Hilbert series")
    p.add_argument("--index", type=int, default=None,
                   help="cohomological index (default: all nonzero)")
    add("regularity", help="Castelnuovo-Mumford regularity")
    p = add("limit-check", help="degree-wise limit diagnostics")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p = add("roos", help="Roos cochain dimensions of the quotient system")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    add("oracle-compare", help="cross-validate against the link-based oracle")
    return parser


def run(args: argparse.Namespace) -> str:
    spec = parse_input(args.input)
    command = args.command
    if command == "poset":
        payload = poset_to_json(build_poset(spec.components))
        return _emit_json(payload) if args.output == "json" else _table_poset(payload)
    if command == "decompose":
        poset = build_poset(spec.components)
        payload = decomposition_json(poset, kind=args.functor,
                                     max_degree=DEFAULT_MAX_DEGREE)
        return _emit_json(payload) if args.output == "json" else _table_decompose(payload)
    if command == "hilbert":
        poset = build_poset(spec.components)
        report = mult_M(poset)
        indices = [args.index] if args.index is not None else report.nonzero_indices()
        rows = []
        for i in indices:
            series = hilbert_series(poset, i=i, report=report)
            rows.append({"i": i, "series": {str(e): c for e, c in series.coeffs},
                         "text": str(series)})
        payload = {"field": _field_json(spec.field), "series": rows}
        return _emit_json(payload) if args.output == "json" else _table_hilbert(payload)
    if command == "regularity":
        poset = build_poset(spec.components)
        reg = regularity(poset)
        limit = limit_check(list(spec.components), DEFAULT_MAX_DEGREE)
        applies = "A/I" if limit.max_defect == 0 else "lim A/I_p"
        payload = {"regularity": reg, "applies_to": applies,
                   "max_degree_checked": DEFAULT_MAX_DEGREE}
        if args.output == "json":
            return _emit_json(payload)
        return f"regularity = {reg} (applies to {applies})\n"
    if command == "limit-check":
        report = limit_check(list(spec.components), args.max_degree)
        payload = report.to_json()
        return _emit_json(payload) if args.output == "json" else _table_limit(payload)
    if command == "roos":
        poset = build_poset(spec.components)
        system = quotient_system(poset, args.max_degree)
        degrees = []
        for j in range(args.max_degree + 1):
            inst = roos_cochain(system, j)
            degrees.append({"j": j, "spot_dims": list(inst.spot_dims),
                            "derived_lim": derived_lim_dims(system, j)})
        payload = {"degrees": degrees}
        return _emit_json(payload) if args.output == "json" else _table_roos(payload)
    if command == "oracle-compare":
        verdict = compare(list(spec.components))
        payload = verdict.to_json()
        if args.output == "json":
            return _emit_json(payload)
        status = "EQUAL" if payload["equal"] else f"MISMATCH: {payload['first_mismatch']}"
        return (f"oracle comparison: {status}\n"
                f"regularity: poset {payload['poset_regularity']}, "
                f"oracle {payload['oracle_regularity']}\n")
    raise InputError(f"unknown command {command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        sys.stdout.write(run(args))
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except RefusalError as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
