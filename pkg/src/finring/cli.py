"""Command-line frontend.

Verbs: axioms, describe, classify, ideals, check, verify, example41, search.
Reports go to stdout (text table or line-delimited JSON records), errors to
stderr.  Exit codes: 0 on success, 1 under --strict when a predicate is
false or a claim inconsistent, 2 on errors.

Identical inputs produce byte-identical reports regardless of --threads:
all aggregation is sorted canonically before emission, and only the `check`
verb reports wall-clock time (in its JSON form, for completeness).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import expr as ex
from .build import elaborate, resolve_ideal
from .elements import classify_all, is_dedekind_finite
from .errors import FinringError, RingSyntaxError
from .predicates import IDEAL_PREDICATES, RING_PREDICATES, PredicateResult
from .rings import DEFAULT_MAX_SIZE, Ideal, RingTable, verify_axioms
from .structure import (
    all_ideals,
    idempotent_indices,
    is_commutative,
    jacobson_radical,
    unit_indices,
)
from .theorems import (
    ALL_IDS,
    DEFAULT_CORPUS,
    THEOREM_IDS,
    TheoremVerdict,
    run_corpus,
    search_counterexamples,
    verify,
    verify_example_41,
)


def _common_flags(p: argparse.ArgumentParser):
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE,
                   help="element-count cap for ring construction (default 4096)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker threads for corpus runs (output is identical either way)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--strict", action="store_true",
                   help="exit 1 when a predicate is false or a claim inconsistent")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="finring",
        description="Exhaustive structure checks for finite rings given as Cayley tables.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("axioms", help="verify the ring axioms exhaustively")
    p.add_argument("--ring", required=True, help="ring expression, e.g. 'M(2,Z(2))'")
    _common_flags(p)

    p = sub.add_parser("describe", help="summary of units, idempotents, radical, ideals")
    p.add_argument("--ring", required=True)
    _common_flags(p)

    p = sub.add_parser("classify", help="per-element classification with witnesses")
    p.add_argument("--ring", required=True)
    p.add_argument("--element", help="classify a single element literal")
    _common_flags(p)

    p = sub.add_parser("ideals", help="enumerate all two-sided ideals")
    p.add_argument("--ring", required=True)
    _common_flags(p)

    p = sub.add_parser("check", help="decide one predicate on a (ring, ideal)")
    p.add_argument("predicate", choices=sorted(IDEAL_PREDICATES) + sorted(RING_PREDICATES))
    p.add_argument("--ring", required=True)
    p.add_argument("--ideal", default="all", help="zero | all | jacobson | gen(elem,...)")
    _common_flags(p)

    p = sub.add_parser("verify", help="verify theorem claims on an instance or corpus")
    p.add_argument("ids", help="'all' or comma-separated claim ids, e.g. T33,C43")
    p.add_argument("--ring", help="single ring expression (default: corpus run)")
    p.add_argument("--ideal", help="restrict to one ideal of --ring")
    p.add_argument("--corpus", help="corpus file (TOML), or 'default'")
    _common_flags(p)

    p = sub.add_parser("example41", help="hunt a nonzero square stable regular ideal of Zi(n)")
    p.add_argument("--n", type=int, required=True)
    _common_flags(p)

    p = sub.add_parser("search", help="mine a parametric family for predicate gaps")
    p.add_argument("--family", required=True, help="template with parameter n, e.g. 'T(2,Z(n))'")
    p.add_argument("--range", required=True, dest="span",
                   help="'lo..hi' inclusive or comma-separated values")
    p.add_argument("--holds", required=True, choices=sorted(IDEAL_PREDICATES))
    p.add_argument("--fails", required=True, choices=sorted(IDEAL_PREDICATES))
    _common_flags(p)

    return ap


# ---------------------------------------------------------------------------
# serialization


def _emit(line: str):
    sys.stdout.write(line + "\n")


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _elem(ring: RingTable, index: int) -> dict:
    return {"index": int(index), "name": ring.names[int(index)]}


def _roles(ring: RingTable, roles: dict | None):
    if not roles:
        return None
    return {k: (_elem(ring, v) if isinstance(v, int) else v) for k, v in roles.items()}


def _roles_text(ring: RingTable, roles: dict | None) -> str:
    if not roles:
        return "-"
    return " ".join(
        f"{k}={ring.names[v] if isinstance(v, int) else v}" for k, v in roles.items()
    )


def _ideal_json(ideal: Ideal) -> dict:
    return {
        "size": ideal.size,
        "members": [ideal.ring.names[m] for m in ideal.members],
        "spec": ex.render_ideal(ideal.spec) if ideal.spec is not None else None,
    }


def _predicate_json(ring: RingTable, ideal: Ideal | None, res: PredicateResult) -> dict:
    return {
        "type": "predicate",
        "ring": ring.expr_str,
        "ideal": _ideal_json(ideal) if ideal is not None else None,
        "predicate": res.predicate,
        "holds": res.holds,
        "witness": _roles(ring, res.witness),
        "counterexample": _roles(ring, res.counterexample),
        "checked": res.checked,
        "elapsed_ms": round(res.elapsed * 1000, 3),
        "fault": res.fault,
    }


def _verdict_json(v: TheoremVerdict) -> dict:
    detail = {
        clause: _roles(v.ring, roles) for clause, roles in sorted(v.detail.items())
    }
    return {
        "type": "verdict",
        "ring": v.ring.expr_str,
        "ideal": _ideal_json(v.ideal),
        "theorem": v.theorem,
        "hypotheses": v.hypotheses,
        "hypotheses_hold": v.hypotheses_hold,
        "clauses": list(v.clause_values),
        "consistent": v.consistent,
        "detail": detail,
        "witness": v.witness,
    }


def _verdict_text(v: TheoremVerdict) -> str:
    if v.vacuous:
        status, clauses = "vacuous", "-"
    else:
        status = "consistent" if v.consistent else "INCONSISTENT"
        clauses = "".join("T" if c else "F" for c in v.clause_values)
    return " | ".join([
        v.ring.expr_str,
        v.ideal.label(),
        v.theorem,
        clauses,
        status,
    ])


# ---------------------------------------------------------------------------
# verbs


def _cmd_axioms(args) -> int:
    ring = elaborate(args.ring, max_size=args.max_size)
    report = verify_axioms(ring)
    if args.format == "json":
        _emit(_json({
            "type": "axioms",
            "ring": ring.expr_str,
            "ok": report.ok,
            "violations": [
                {"law": v.law, "indices": list(v.indices), "message": v.message}
                for v in report.violations
            ],
        }))
    else:
        if report.ok:
            _emit(f"{ring.expr_str}: all ring axioms hold ({ring.n} elements)")
        else:
            for v in report.violations:
                _emit(f"{ring.expr_str}: {v.law} fails at {v.indices}: {v.message}")
    return 1 if (args.strict and not report.ok) else 0


def _cmd_describe(args) -> int:
    ring = elaborate(args.ring, max_size=args.max_size)
    units = unit_indices(ring)
    idems = idempotent_indices(ring)
    rad = jacobson_radical(ring)
    ideals = all_ideals(ring)
    profiles = classify_all(ring)
    nilpotents = [p.index for p in profiles if p.is_nilpotent]
    df, _ = is_dedekind_finite(ring)
    info = {
        "type": "describe",
        "ring": ring.expr_str,
        "size": ring.n,
        "zero": ring.names[ring.zero],
        "one": ring.names[ring.one],
        "commutative": is_commutative(ring),
        "dedekind_finite": df,
        "units": {"count": len(units), "members": [ring.names[u] for u in units]},
        "idempotents": {"count": len(idems), "members": [ring.names[e] for e in idems]},
        "nilpotents": {"count": len(nilpotents), "members": [ring.names[x] for x in nilpotents]},
        "jacobson_radical": _ideal_json(rad),
        "ideal_count": len(ideals),
    }
    if args.format == "json":
        _emit(_json(info))
    else:
        def listing(d):
            names = d["members"]
            shown = ",".join(names[:8]) + (",..." if len(names) > 8 else "")
            return f"{d['count']} {{{shown}}}"

        _emit(f"ring            {info['ring']}")
        _emit(f"elements        {info['size']} (zero={info['zero']}, one={info['one']})")
        _emit(f"commutative     {str(info['commutative']).lower()}")
        _emit(f"dedekind-finite {str(info['dedekind_finite']).lower()}")
        _emit(f"units           {listing(info['units'])}")
        _emit(f"idempotents     {listing(info['idempotents'])}")
        _emit(f"nilpotents      {listing(info['nilpotents'])}")
        rj = info["jacobson_radical"]
        shown = ",".join(rj["members"][:8]) + (",..." if len(rj["members"]) > 8 else "")
        _emit(f"jacobson        {rj['size']} {{{shown}}}")
        _emit(f"ideals          {info['ideal_count']}")
    return 0


def _profile_json(ring: RingTable, p) -> dict:
    name = lambda i: None if i is None else ring.names[i]
    return {
        "type": "profile",
        "ring": ring.expr_str,
        "element": ring.names[p.index],
        "index": p.index,
        "unit": p.is_unit,
        "inverse": name(p.inverse),
        "idempotent": p.is_idempotent,
        "nilpotency_index": p.nilpotency_index,
        "regular": p.is_regular,
        "regular_witness": name(p.regular_witness),
        "unit_regular": p.is_unit_regular,
        "unit_regular_witness": name(p.unit_regular_witness),
        "strongly_regular": p.is_strongly_regular,
        "square_right_witness": name(p.square_right_witness),
        "square_left_witness": name(p.square_left_witness),
    }


def _cmd_classify(args) -> int:
    from .elements import classify
    from .rings import element_index

    ring = elaborate(args.ring, max_size=args.max_size)
    if args.element is not None:
        profiles = [classify(ring, element_index(ring, args.element))]
    else:
        profiles = classify_all(ring)
    for p in profiles:
        if args.format == "json":
            _emit(_json(_profile_json(ring, p)))
        else:
            flags = []
            if p.is_unit:
                flags.append(f"unit(inv={ring.names[p.inverse]})")
            if p.is_idempotent:
                flags.append("idempotent")
            if p.is_nilpotent:
                flags.append(f"nilpotent({p.nilpotency_index})")
            if p.is_strongly_regular:
                flags.append(
                    f"strongly-regular(x={ring.names[p.square_right_witness]},"
                    f"y={ring.names[p.square_left_witness]})"
                )
            if p.is_unit_regular:
                flags.append(f"unit-regular(u={ring.names[p.unit_regular_witness]})")
            if p.is_regular:
                flags.append(f"regular(x={ring.names[p.regular_witness]})")
            _emit(f"{ring.names[p.index]}: " + (", ".join(flags) if flags else "-"))
    return 0


def _cmd_ideals(args) -> int:
    ring = elaborate(args.ring, max_size=args.max_size)
    ideals = all_ideals(ring)
    for i, ideal in enumerate(ideals):
        if args.format == "json":
            _emit(_json({"type": "ideal", "ring": ring.expr_str, "index": i, **_ideal_json(ideal)}))
        else:
            members = ",".join(ring.names[m] for m in ideal.members)
            _emit(f"#{i} size={ideal.size} {{{members}}}")
    return 0


def _cmd_check(args) -> int:
    ring = elaborate(args.ring, max_size=args.max_size)
    if args.predicate in RING_PREDICATES:
        ideal = None
        res = RING_PREDICATES[args.predicate](ring)
    elif args.predicate == "square-stable-matrix":
        ideal = resolve_ideal(ring, args.ideal)
        res = IDEAL_PREDICATES[args.predicate](ring, ideal, max_size=args.max_size)
    else:
        ideal = resolve_ideal(ring, args.ideal)
        res = IDEAL_PREDICATES[args.predicate](ring, ideal)
    if args.format == "json":
        _emit(_json(_predicate_json(ring, ideal, res)))
    else:
        _emit(f"ring       {ring.expr_str}")
        if ideal is not None:
            _emit(f"ideal      {ideal.label()} ({ideal.size} elements)")
        _emit(f"predicate  {res.predicate}")
        _emit(f"holds      {str(res.holds).lower()}")
        if res.counterexample:
            _emit(f"counterexample  {_roles_text(ring, res.counterexample)}")
        _emit(f"checked    {res.checked}")
        if res.fault:
            _emit(f"FAULT      {res.fault}")
    if res.fault:
        return 2
    return 1 if (args.strict and not res.holds) else 0


def _load_corpus(path: str) -> tuple[tuple[str, ...], tuple[str, ...] | None]:
    """Corpus file: TOML with `rings = [...]` and optional `theorems = [...]`."""
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    rings = tuple(data.get("rings", ()))
    if not rings:
        raise FinringError(f"corpus file {path} lists no rings")
    theorems = data.get("theorems")
    return rings, tuple(theorems) if theorems else None


def _summary_json(report) -> dict:
    acc = report.accounting()
    return {
        "type": "summary",
        "rings_failed": [list(t) for t in report.errors],
        "axiom_failures": [list(t) for t in report.axiom_failures],
        "verdicts": len(report.verdicts),
        "inconsistencies": len(report.inconsistencies),
        "theorems": {
            tid: {
                "instances": a.instances,
                "vacuous": a.vacuous,
                "consistent": a.consistent,
                "inconsistent": a.inconsistent,
                "clause1_true": a.clause1_true,
                "clause1_false": a.clause1_false,
            }
            for tid, a in sorted(acc.items())
        },
    }


def _cmd_verify(args) -> int:
    ids = THEOREM_IDS if args.ids == "all" else tuple(s.strip() for s in args.ids.split(","))
    for tid in ids:
        if tid not in ALL_IDS:
            raise FinringError(f"unknown theorem id {tid!r}; known: {', '.join(ALL_IDS)}")

    if args.ring is not None:
        ring = elaborate(args.ring, max_size=args.max_size)
        ideals = (
            [resolve_ideal(ring, args.ideal)] if args.ideal is not None else all_ideals(ring)
        )
        verdicts = [verify(tid, ring, ideal) for ideal in ideals for tid in ids]
        verdicts.sort(key=lambda v: (v.ring.expr_str, v.ideal.size, v.ideal.members, v.theorem))
        inconsistent = [v for v in verdicts if v.consistent is False]
        for v in verdicts:
            _emit(_json(_verdict_json(v)) if args.format == "json" else _verdict_text(v))
        if args.format == "text":
            _emit(f"verdicts: {len(verdicts)}, inconsistent: {len(inconsistent)}")
        return 1 if (args.strict and inconsistent) else 0

    expressions = DEFAULT_CORPUS
    if args.corpus and args.corpus != "default":
        expressions, file_ids = _load_corpus(args.corpus)
        if file_ids and args.ids == "all":
            ids = file_ids
    report = run_corpus(expressions, ids, max_size=args.max_size, threads=args.threads)
    if args.format == "json":
        for v in report.verdicts:
            _emit(_json(_verdict_json(v)))
        _emit(_json(_summary_json(report)))
    else:
        for v in report.verdicts:
            _emit(_verdict_text(v))
        acc = report.accounting()
        _emit("")
        _emit("summary:")
        for tid in sorted(acc):
            a = acc[tid]
            _emit(
                f"  {tid:6s} instances={a.instances} vacuous={a.vacuous} "
                f"consistent={a.consistent} inconsistent={a.inconsistent} "
                f"clause1 true/false={a.clause1_true}/{a.clause1_false}"
            )
        for text, msg in report.errors:
            _emit(f"  error: {text}: {msg}")
        for text, msg in report.axiom_failures:
            _emit(f"  axiom failure: {text}: {msg}")
        _emit(f"  inconsistencies: {len(report.inconsistencies)}")
    return 1 if (args.strict and report.inconsistencies) else 0


def _cmd_example41(args) -> int:
    v = verify_example_41(args.n, max_size=args.max_size)
    if args.format == "json":
        _emit(_json(_verdict_json(v)))
    else:
        if v.vacuous:
            _emit(f"n={args.n} does not qualify (needs an odd prime factor of multiplicity 1)")
        elif v.consistent:
            members = ",".join(v.witness["ideal-members"][:8])
            more = ",..." if v.witness["ideal-size"] > 8 else ""
            _emit(
                f"Zi({args.n}): found a nonzero square stable regular ideal "
                f"of size {v.witness['ideal-size']}: {{{members}{more}}}"
            )
        else:
            _emit(f"Zi({args.n}): NO nonzero square stable regular ideal found")
    if v.vacuous:
        return 0
    return 1 if (args.strict and not v.consistent) else 0


def _parse_span(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(s) for s in text.split(",")]


def _cmd_search(args) -> int:
    report = search_counterexamples(
        args.family, _parse_span(args.span), args.holds, args.fails, max_size=args.max_size
    )
    if args.format == "json":
        for hit in report.hits:
            _emit(_json({
                "type": "search-hit",
                "family": report.family,
                "ring": hit.expression,
                "ideal": _ideal_json(hit.ideal),
                "holds": report.holds,
                "fails": report.fails,
            }))
        _emit(_json({
            "type": "search-summary",
            "family": report.family,
            "values": report.values,
            "hits": len(report.hits),
            "errors": [list(t) for t in report.errors],
        }))
    else:
        for hit in report.hits:
            _emit(f"{hit.expression} | {hit.ideal.label()} | {report.holds} holds, {report.fails} fails")
        for text, msg in report.errors:
            _emit(f"error: {text}: {msg}")
        _emit(f"hits: {len(report.hits)} over {report.family}, n in {report.values}")
    return 1 if (args.strict and report.hits) else 0


_COMMANDS = {
    "axioms": _cmd_axioms,
    "describe": _cmd_describe,
    "classify": _cmd_classify,
    "ideals": _cmd_ideals,
    "check": _cmd_check,
    "verify": _cmd_verify,
    "example41": _cmd_example41,
    "search": _cmd_search,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.verb](args)
    except RingSyntaxError as e:
        print(f"finring: {e}", file=sys.stderr)
        return 2
    except FinringError as e:
        print(f"finring: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"finring: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
