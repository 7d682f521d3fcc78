"""Command-line front end: ``isogsieve <command> [options]``.

Every command builds one report document with the fields
``command, config, results, warnings, timings``.  ``--json`` prints it as
JSON with all integers written as decimal strings; otherwise a plain
text rendering goes to stdout.

Exit codes: 0 success, 2 usage error, 3 resource or verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import ecurve, quadfield, sieve
from .exactmath import FactorizationError, factorize, is_prime

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3

ENV_PREFIX = "ISOGSIEVE_"


class UsageError(Exception):
    pass


def _stringify(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_stringify(v) for v in items]
    return str(obj)


def make_document(command, config, results, warnings=(), timings=None) -> dict:
    return {
        "command": command,
        "config": config,
        "results": results,
        "warnings": list(warnings),
        "timings": timings or {},
    }


def to_json(doc: dict, include_timings: bool = True) -> str:
    doc = dict(doc)
    if not include_timings:
        doc.pop("timings", None)
    return json.dumps(_stringify(doc), indent=2)


def _is_scalar(v) -> bool:
    return not isinstance(v, (dict, list))


def _numeric(v) -> bool:
    if isinstance(v, list):
        return all(map(_numeric, v))
    return isinstance(v, str) and v.lstrip("-").isdigit()


def _render_text(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, dict) and not all(map(_is_scalar, v.values())):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            elif isinstance(v, list) and v and not _numeric(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, dict) and not all(map(_is_scalar, v.values())):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(f"{pad}{_inline(value)}")
    return lines


def _inline(v) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{k}={_inline(x)}" for k, x in v.items())
    if isinstance(v, list):
        return ", ".join(f"({_inline(x)})" if isinstance(x, list) else _inline(x) for x in v)
    return str(v)


def render_text(doc: dict) -> str:
    body = {k: v for k, v in _stringify(doc).items() if k != "timings"}
    return "\n".join(_render_text(body))


# -- argument parsing helpers -------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of integers, got {text!r}")


def _coeffs(text: str) -> list[int]:
    vals = _int_list(text)
    if len(vals) != 5:
        raise argparse.ArgumentTypeError("--coeffs needs exactly five integers a1,a2,a3,a4,a6")
    return vals


def _odd_prime(n: int, name: str) -> int:
    if n < 3 or not is_prime(n):
        raise UsageError(f"{name} = {n} must be an odd prime")
    return n


def _prime_3_mod_4(p: int) -> int:
    if not is_prime(p) or p % 4 != 3:
        raise UsageError(f"p = {p} must be a prime congruent to 3 mod 4")
    return p


def _signature(s: int) -> int:
    if s not in sieve.ADMISSIBLE_SIGNATURES:
        raise UsageError(f"signature {s} not in {list(sieve.ADMISSIBLE_SIGNATURES)}")
    return s


# -- commands -------------------------------------------------------------------


def cmd_signatures(args) -> tuple[dict, int]:
    t0 = time.perf_counter()
    table = sieve.derive_signature_set()
    results = {
        "admissible_s": list(table.admissible_s),
        "entries": [{"e": x.e, "r": x.r, "s": x.s} for x in table.entries],
        "excluded": [{"e": e, "r": r, "reason": why} for e, r, why in table.excluded],
        "multiplicative_branch": list(table.multiplicative),
        "sources_of_6": [{"e": e, "r": r} for e, r in table.sources(6)],
    }
    return make_document("signatures", {}, results, timings={"total": time.perf_counter() - t0}), EXIT_OK


def cmd_rbound(args) -> tuple[dict, int]:
    q = _odd_prime(args.aux_prime, "q")
    s = _signature(args.signature)
    t0 = time.perf_counter()
    bound = sieve.resultant_bound(q, s)
    results = {
        "q": q,
        "s": s,
        "value": bound.value,
        "factorization": [{"prime": p, "exponent": e} for p, e in bound.factorization.factors]
        if bound.factorization
        else None,
        "factored": str(bound.factorization) if bound.factorization else None,
        "per_a": [{"a": a, "resultant": r} for a, r in bound.per_a],
    }
    if bound.value == 0:
        zeros = [a for a, r in bound.per_a if r == 0]
        results["explanation"] = (
            f"shared root: X^2 - aX + {q} and X^12 - {q}^{s} have a common root for a in {zeros}"
        )
    doc = make_document("rbound", {"q": q, "s": s}, results, timings={"total": time.perf_counter() - t0})
    return doc, EXIT_OK


def _env_default(name: str, parse, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return fallback
    try:
        return parse(raw)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        raise UsageError(f"bad value for {ENV_PREFIX}{name}: {raw!r}") from exc


def cmd_mazur(args) -> tuple[dict, int]:
    defaults = sieve.SieveConfig()
    aux = args.aux_primes if args.aux_primes is not None else _env_default("AUX_PRIMES", _int_list, list(defaults.aux_primes))
    ceiling = args.ceiling if args.ceiling is not None else _env_default("CEILING", int, defaults.class_search_ceiling)
    cutoff = args.cutoff if args.cutoff is not None else defaults.cutoff
    for q in aux:
        _odd_prime(q, "auxiliary prime")
    if not aux:
        raise UsageError("at least one auxiliary prime is required")
    config = sieve.SieveConfig(tuple(aux), cutoff, ceiling)
    t0 = time.perf_counter()
    report = sieve.mazur_prime_list(config)
    elapsed = time.perf_counter() - t0
    results = {
        "final_list": report.final_list,
        "per_signature": {str(s): sorted(ps) for s, ps in sorted(report.per_signature.items())},
        "bounds": [
            {"q": q, "s": s, "value": b.value, "factored": str(b.factorization) if b.factorization else None}
            for (q, s), b in sorted(report.bounds.items())
        ],
    }
    cfg = {"aux_primes": list(config.aux_primes), "cutoff": config.cutoff, "ceiling": config.class_search_ceiling}
    return make_document("mazur", cfg, results, report.warnings, {"total": elapsed}), EXIT_OK


def cmd_classnumber(args) -> tuple[dict, int]:
    p = _prime_3_mod_4(args.prime)
    t0 = time.perf_counter()
    data = quadfield.class_number(p)
    mink = quadfield.minkowski_bound(p)
    results = {
        "p": p,
        "discriminant": data.discriminant,
        "class_number": data.class_number,
        "reduced_forms": [list(f) for f in data.reduced_forms],
        "minkowski_bound": {
            "lower": str(float(mink.lower)),
            "upper": str(float(mink.upper)),
            "below_quarter_p": mink.below_quarter_p,
        },
    }
    return make_document("classnumber", {"p": p}, results, timings={"total": time.perf_counter() - t0}), EXIT_OK


def cmd_inert_window(args) -> tuple[dict, int]:
    p = _prime_3_mod_4(args.prime)
    t0 = time.perf_counter()
    window = quadfield.inertness_window(p)
    results = {
        "p": p,
        "verdict": all(sym == -1 for _, sym in window),
        "primes_checked": len(window),
        "symbols": [{"q": q, "kronecker": sym, "inert": sym == -1} for q, sym in window],
    }
    return make_document("inert-window", {"p": p}, results, timings={"total": time.perf_counter() - t0}), EXIT_OK


def _trace_row(rec: ecurve.TraceRecord) -> dict:
    return {"q": rec.q, "count": rec.count, "trace": rec.trace}


def cmd_curve(args) -> tuple[dict, int]:
    coeffs = args.coeffs
    cfg = {"action": args.action, "coeffs": coeffs}
    t0 = time.perf_counter()
    try:
        E = ecurve.curve_from_coeffs(*coeffs)
    except ecurve.SingularCurveError as exc:
        doc = make_document("curve", cfg, {"error": str(exc), "disc": 0})
        return doc, EXIT_USAGE

    action = args.action
    if action == "info":
        results = {
            "ainvs": list(E.ainvs),
            "b2": E.b2, "b4": E.b4, "b6": E.b6, "b8": E.b8,
            "c4": E.c4, "c6": E.c6,
            "disc": E.disc,
            "j": str(E.j),
        }
    elif action == "trace":
        if args.q is not None:
            q = _odd_prime(args.q, "q")
            cfg["q"] = q
            if ecurve.reduction_type(E, q) is not ecurve.ReductionType.GOOD:
                raise UsageError(f"bad reduction at q = {q}")
            rows = [_trace_row(ecurve.count_points(E, q))]
        else:
            cfg["qmax"] = args.qmax
            rows = [
                _trace_row(ecurve.count_points(E, q))
                for q in ecurve.primes_up_to(args.qmax)
                if q > 2 and E.disc % q
            ]
        results = {"traces": rows}
    elif action == "isotest":
        if args.prime is None:
            raise UsageError("isotest needs -p")
        if not is_prime(args.prime):
            raise UsageError(f"p = {args.prime} is not prime")
        cfg.update(p=args.prime, qmax=args.qmax)
        verdict, records = ecurve.isogeny_trace_test(E, args.prime, args.qmax)
        results = {
            "verdict": "PASS" if verdict else "FAIL",
            "meaning": "necessary condition holds" if verdict else f"no rational {args.prime}-isogeny",
            "witness": None if verdict else _trace_row(records[-1]),
            "checked": len(records),
        }
    elif action == "redtype":
        if args.q is not None:
            if not is_prime(args.q):
                raise UsageError(f"q = {args.q} is not prime")
            qs = [args.q]
        else:
            qs = factorize(abs(E.disc)).primes()
        cfg["primes"] = qs
        results = {"types": [{"q": q, "type": ecurve.reduction_type(E, q).value} for q in qs]}
        if args.prime is not None:
            ok, offenders = ecurve.check_potential_good_everywhere(E, args.prime)
            results["potentially_good_outside_2_p"] = ok
            results["offending_primes"] = offenders
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(action)
    return make_document("curve", cfg, results, timings={"total": time.perf_counter() - t0}), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the structured JSON document")

    parser = argparse.ArgumentParser(prog="isogsieve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("signatures", parents=[common], help="admissible isogeny signatures")
    p.set_defaults(func=cmd_signatures)

    p = sub.add_parser("rbound", parents=[common], help="the resultant bound R_{q,s}")
    p.add_argument("-q", "--aux-prime", type=int, required=True)
    p.add_argument("-s", "--signature", type=int, required=True)
    p.set_defaults(func=cmd_rbound)

    p = sub.add_parser("mazur", parents=[common], help="run the full prime-degree sieve")
    p.add_argument("--aux-primes", type=_int_list, default=None)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--ceiling", type=int, default=None)
    p.set_defaults(func=cmd_mazur)

    p = sub.add_parser("classnumber", parents=[common], help="class number of Q(sqrt(-p))")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.set_defaults(func=cmd_classnumber)

    p = sub.add_parser("inert-window", parents=[common], help="inertness of odd primes q < p/4")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.set_defaults(func=cmd_inert_window)

    p = sub.add_parser("curve", parents=[common], help="elliptic curve checks")
    p.add_argument("action", choices=["info", "trace", "isotest", "redtype"])
    p.add_argument("--coeffs", type=_coeffs, required=True)
    p.add_argument("-q", type=int, default=None)
    p.add_argument("-p", "--prime", type=int, default=None)
    p.add_argument("--qmax", type=int, default=200)
    p.set_defaults(func=cmd_curve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        doc, code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"isogsieve: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FactorizationError as exc:
        print(f"isogsieve: factorization resource limit: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    print(to_json(doc) if args.json else render_text(doc))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
