"""Command-line interface.  Exit codes: 0 success, 1 violation found, 2 input error."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .catalog import (
    FAMILIES,
    FamilyError,
    SuperidentityError,
    default_odd_dimension,
    make_family,
    param_names,
    random_family_params,
)
from .core import check_superidentity, is_lie, right_annihilator
from .corpus import CorpusConfig, build_corpus
from .invariants import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    STRATEGIES,
    NotNilpotentError,
    central_series,
    char_sequence,
    invariant_fingerprint,
    natural_gradation,
    series_report_json,
)
from .scalars import ScalarParseError, parse_scalar
from .symbolic import constraints_report, emit_constraints, symbolic_family
from .theorems import THEOREMS, verify_theorem

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


def _vec(v) -> list[str]:
    return [str(c) for c in v]


def _emit(data) -> None:
    sys.stdout.write(io.dumps(data))


def parse_params(text: str | None) -> dict[str, object]:
    """``"a4=1/2,theta=z^2"`` -> {"a4": "1/2", "theta": "z^2"} (values parsed later)."""
    out: dict[str, object] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise io.InputError(f"parameter {item!r} is not of the form name=value")
        k, v = (s.strip() for s in item.split("=", 1))
        if k in out:
            raise io.InputError(f"parameter {k} given twice")
        out[k] = v
    return out


# -- commands ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    A = io.load_algebra(args.file)
    violations = check_superidentity(A)
    _emit(
        {
            "n": A.n,
            "m": A.m,
            "triples_checked": A.dim**3,
            "leibniz": not violations,
            "violations": [v.to_json() for v in violations],
        }
    )
    return VIOLATION if violations else OK


def cmd_series(args) -> int:
    A = io.load_algebra(args.file)
    _emit(series_report_json(A, central_series(A)))
    return OK


def cmd_nilindex(args) -> int:
    A = io.load_algebra(args.file)
    s = central_series(A).nilindex
    if s is None:
        print("not nilpotent")
        return VIOLATION
    print(s)
    return OK


def cmd_charseq(args) -> int:
    A = io.load_algebra(args.file)
    if A.n == 0:
        raise io.InputError("the characteristic sequence needs a nonzero even part")
    try:
        cs = char_sequence(A, args.strategy, args.samples, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATION
    _emit(
        {
            "char_sequence": cs.display(),
            "c0": list(cs.c0),
            "c1": list(cs.c1),
            "witness_c0": _vec(cs.witness0),
            "witness_c1": _vec(cs.witness1),
            "strategy": cs.strategy,
            "samples": cs.samples,
            "seed": cs.seed,
            "candidates_checked": cs.candidates_checked,
        }
    )
    return OK


def cmd_gradation(args) -> int:
    A = io.load_algebra(args.file)
    try:
        gr = natural_gradation(A)
    except NotNilpotentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATION
    _emit(
        {
            "layers": list(gr.layers),
            "layer_of": {gr.algebra.name(i): layer for i, layer in enumerate(gr.layer_of)},
            "is_lie": is_lie(gr.algebra),
            "basis": {gr.algebra.name(i): _vec(v) for i, v in enumerate(gr.basis)},
            "algebra": io.algebra_to_json(gr.algebra, metadata=False),
        }
    )
    return OK


def cmd_annihilator(args) -> int:
    A = io.load_algebra(args.file)
    R = right_annihilator(A)
    _emit({"dim": R.dim, "even_dim": R.even_part().dim, "odd_dim": R.odd_part().dim, "basis": [_vec(v) for v in R.rows]})
    return OK


def cmd_fingerprint(args) -> int:
    A = io.load_algebra(args.file)
    try:
        fp = invariant_fingerprint(A, args.samples, args.seed)
    except NotNilpotentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATION
    _emit(dict(fp.to_json(), samples=args.samples, seed=args.seed))
    return OK


def cmd_family(args) -> int:
    params: dict[str, object] = {}
    if args.seed is not None:
        m = args.m if args.m is not None else _default_m(args.name, args.n)
        params.update(random_family_params(args.name, args.n, m, args.seed))
    given = parse_params(args.params)
    allowed = set(param_names(args.name, args.n, args.m))
    unknown = set(given) - allowed
    if unknown:
        raise io.InputError(
            f"unknown parameter(s) {', '.join(sorted(unknown))} for {args.name}; expected {', '.join(sorted(allowed))}"
        )
    for k, v in given.items():
        if "z" in v and not args.conductor:
            raise io.InputError(f"{k}={v} uses z; pass --conductor N to fix the field Q(z)")
        try:
            params[k] = parse_scalar(v, args.conductor or 1)
        except ScalarParseError as exc:
            raise io.InputError(f"{k}: {exc}") from None
    try:
        A = make_family(args.name, args.n, args.m, params, verify=not args.no_verify, conductor=args.conductor)
    except SuperidentityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"violations": [v.to_json() for v in exc.violations]})
        return VIOLATION
    data = io.algebra_to_json(A)
    if args.output:
        Path(args.output).write_text(io.dumps(data))
    else:
        _emit(data)
    return VIOLATION if A.metadata.get("violations") else OK


def _default_m(name, n):
    m = default_odd_dimension(name, n)
    if m is None:
        raise io.InputError(f"{name} needs --m")
    return m


def cmd_constraints(args) -> int:
    P = symbolic_family(args.name, args.n, args.m)
    cons = emit_constraints(P)
    _emit(
        {
            "family": args.name,
            "n": P.n,
            "m": P.m,
            "variables": list(P.variables),
            "constraints": constraints_report(cons),
        }
    )
    return VIOLATION if cons else OK


def cmd_corpus_verify(args) -> int:
    config = CorpusConfig()
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise io.InputError(f"cannot read corpus config {args.config}: {exc}") from None
        if not isinstance(data, dict):
            raise io.InputError("corpus config must be a JSON object")
        try:
            config = CorpusConfig.from_mapping(data)
        except (TypeError, ValueError) as exc:
            raise io.InputError(str(exc)) from None
    corpus = build_corpus(config)
    report = verify_theorem(args.theorem, corpus, samples=args.samples, seed=args.seed)
    out = report.to_json()
    out["config"] = config.to_json()
    out["samples"], out["seed"] = args.samples, args.seed
    out["rejected_specs"] = corpus.rejected
    _emit(out)
    return OK if report.passed and report.control_detected else VIOLATION


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superleib", description="Nilpotent Leibniz superalgebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def file_cmd(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file", help="algebra JSON file")
        sp.set_defaults(func=func)
        return sp

    file_cmd("check", cmd_check, "exhaustive Leibniz superidentity check")
    file_cmd("series", cmd_series, "descending central series dimensions")
    file_cmd("nilindex", cmd_nilindex, "print the nilindex")
    sp = file_cmd("charseq", cmd_charseq, "characteristic sequence")
    sp.add_argument("--strategy", choices=STRATEGIES, default="combined")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    file_cmd("gradation", cmd_gradation, "natural gradation gr(A)")
    file_cmd("annihilator", cmd_annihilator, "right annihilator")
    sp = file_cmd("fingerprint", cmd_fingerprint, "isomorphism-invariant fingerprint")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)

    sp = sub.add_parser("family", help="instantiate a catalog family")
    sp.add_argument("--name", required=True, choices=FAMILIES)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--params", help='e.g. "a4=1/2,theta=z^2"; unnamed parameters are 0')
    sp.add_argument("--seed", type=int, help="draw seeded random rational parameters first")
    sp.add_argument("--conductor", type=int, help="field Q(z) with z a primitive N-th root of unity")
    sp.add_argument("--no-verify", action="store_true", help="skip the strict identity check (typo investigation)")
    sp.add_argument("--output", "-o", help="write the algebra JSON here instead of stdout")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("constraints", help="polynomial constraints of a family with symbolic parameters")
    sp.add_argument("--name", required=True, choices=FAMILIES)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int)
    sp.set_defaults(func=cmd_constraints)

    sp = sub.add_parser("corpus-verify", help="check a structural statement over the corpus")
    sp.add_argument("--theorem", required=True, choices=THEOREMS)
    sp.add_argument("--config", help="JSON object with corpus settings (max_n, param_samples, mutations, ...)")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sp.set_defaults(func=cmd_corpus_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # usage errors exit with code 2
    try:
        return args.func(args)
    except (io.InputError, FamilyError, ScalarParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
