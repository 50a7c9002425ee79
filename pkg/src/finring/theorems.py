"""Claim-by-claim verification of the square-stability theory on concrete
rings, plus corpus aggregation and counterexample mining.

Each claim id names a statement about a ring R and a two-sided ideal I.
Every clause of a claim is evaluated independently and the claimed logical
relation (implication, biconditional, or plain truth) is then checked; the
suite never assumes a claim to shortcut its own verification.  A run over
the default corpus with zero inconsistencies is the package's primary
self-check: any inconsistency would mean an implementation fault.

Claim ids and the statements they verify:

* L31  square stable I: a in I with a^2 in J(R) forces a in J(R).
* L32  a*x + b = 1 with a unit-regular admits y with a + b*y a unit.
* T33  exchange I: square stable <=> (a in I, a^2 in J(R) => a in J(R)).
* C34  exchange I: square stable <=> a*e - e*a in J(R) for all a in I and
       idempotents e.
* T35  exchange I: square stable <=> every regular a in I maps to a
       strongly regular element of R/J(R).
* C36  exchange ring: square stable range one <=> every regular element
       maps to a strongly regular element of R/J(R).
* T37  exchange I: square stable <=> (regular a in I: a in a^2 R and the
       corner at a's regular idempotent is Dedekind-finite) <=> every
       regular a in I is strongly regular.
* T42  regular I: square stable <=> eRe is a strongly regular ring for
       every idempotent e in I.
* C43  regular I: square stable <=> I is reduced.
* C44sr regular ring R: strongly regular <=> (I square stable, R/I strongly
       regular, units of R/I lift to units of R).
* T44  regular I: square stable <=> every comaximal pair (a in 1+I, b)
       admits y with a^2 + b*y a unit.
* C45  regular I: square stable <=> every member of I strongly regular
       <=> every member of 1+I strongly regular.
* X41  Z_n[i] with an odd prime factor of multiplicity one has a nonzero
       square stable regular ideal.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import expr as ex
from .build import elaborate
from .elements import classify_all, is_dedekind_finite
from .errors import FinringError
from .predicates import (
    exchange_ideal,
    regular_ideal,
    reduced_ideal,
    square_stable_fast,
)
from .rings import DEFAULT_MAX_SIZE, Ideal, RingTable, verify_axioms
from .structure import (
    all_ideals,
    comaximal_mask,
    corner_at,
    full_ideal,
    idempotent_indices,
    jacobson_radical,
    one_minus,
    quotient_by,
    units_lift,
    units_mask,
)

THEOREM_IDS = (
    "L31", "L32", "T33", "C34", "T35", "C36", "T37",
    "T42", "C43", "C44sr", "T44", "C45",
)

ALL_IDS = THEOREM_IDS + ("X41",)


@dataclass
class TheoremVerdict:
    theorem: str
    ring: RingTable
    ideal: Ideal
    hypotheses: dict[str, bool]
    clause_values: tuple[bool, ...]
    consistent: bool | None          # None when the hypotheses fail (vacuous)
    detail: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def vacuous(self) -> bool:
        return self.consistent is None


def _relation_consistent(relation: str, clauses: tuple[bool, ...]) -> bool:
    if relation == "implies":
        return (not clauses[0]) or clauses[1]
    if relation == "iff":
        return len(set(clauses)) <= 1
    if relation == "holds":
        return all(clauses)
    raise ValueError(relation)


def _verdict(theorem, ring, ideal, hypotheses, relation, clause_evals, witness=None):
    """Assemble a verdict; clause_evals yield (value, counterexample-or-None)."""
    if not all(hypotheses.values()):
        return TheoremVerdict(theorem, ring, ideal, hypotheses, (), None)
    values, infos = [], []
    for value, info in clause_evals:
        values.append(bool(value))
        infos.append(info)
    values = tuple(values)
    consistent = _relation_consistent(relation, values)
    detail = {}
    if not consistent:
        for i, info in enumerate(infos, start=1):
            if info:
                detail[f"clause{i}"] = info
    return TheoremVerdict(
        theorem, ring, ideal, hypotheses, values, consistent, detail, witness or {}
    )


# ---------------------------------------------------------------------------
# clause evaluators


def _radical_condition(ring, ideal):
    """a in I with a^2 in J(R) but a outside J(R) falsifies the clause."""
    jmask = jacobson_radical(ring).mask
    for a in ideal.members:
        if jmask[ring.mul[a, a]] and not jmask[a]:
            return False, {"a": int(a)}
    return True, None


def _commutator_condition(ring, ideal):
    jmask = jacobson_radical(ring).mask
    mul, add, neg = ring.mul, ring.add, ring.neg
    for a in ideal.members:
        for e in idempotent_indices(ring):
            if not jmask[add[mul[a, e], neg[mul[e, a]]]]:
                return False, {"a": int(a), "e": int(e)}
    return True, None


def _strongly_regular_in(ring, a) -> bool:
    mul = ring.mul
    a2 = mul[a, a]
    return bool((mul[a2, :] == a).any() and (mul[:, a2] == a).any())


def _regulars_strongly_regular_mod_radical(ring, ideal):
    quotient, proj = quotient_by(ring, jacobson_radical(ring))
    profiles = classify_all(ring)
    for a in ideal.members:
        if profiles[a].regular_witness is None:
            continue
        if not _strongly_regular_in(quotient, int(proj[a])):
            return False, {"a": int(a)}
    return True, None


def _regulars_in_a2r_with_df_corner(ring, ideal):
    profiles = classify_all(ring)
    mul = ring.mul
    for a in ideal.members:
        c = profiles[a].regular_witness
        if c is None:
            continue
        a2 = mul[a, a]
        if not (mul[a2, :] == a).any():
            return False, {"a": int(a)}
        corner, embed = corner_at(ring, int(mul[a, c]))   # e = a*c spans aR = eR
        df, pair = is_dedekind_finite(corner)
        if not df:
            return False, {"a": int(a), "x": int(embed[pair[0]]), "y": int(embed[pair[1]])}
    return True, None


def _regulars_strongly_regular(ring, ideal):
    profiles = classify_all(ring)
    for a in ideal.members:
        p = profiles[a]
        if p.regular_witness is not None and not p.is_strongly_regular:
            return False, {"a": int(a)}
    return True, None


def _members_strongly_regular(ring, members):
    for a in members:
        if not _strongly_regular_in(ring, int(a)):
            return False, {"a": int(a)}
    return True, None


def _corners_strongly_regular(ring, ideal):
    for e in ideal.members:
        if ring.mul[e, e] != e:
            continue
        corner, _ = corner_at(ring, int(e))
        ok, bad = _members_strongly_regular(corner, range(corner.n))
        if not ok:
            return False, {"e": int(e), "x": int(corner._memo["corner_of"][1][bad["a"]])}
    return True, None


def _unit_completion_on_shifted(ring, ideal):
    """Comaximal (a in 1+I, b) admits y with a^2 + b*y a unit."""
    un = units_mask(ring)
    mul, add = ring.mul, ring.add
    shifted = sorted(int(add[ring.one, i]) for i in ideal.members)
    for a in shifted:
        comax = comaximal_mask(ring, a)
        a2 = mul[a, a]
        exists_y = un[add[a2, mul]].any(axis=1)
        bad = comax & ~exists_y
        if bad.any():
            return False, {"a": int(a), "b": int(np.argmax(bad))}
    return True, None


def _lemma_completion(ring):
    """Every a*x + b = 1 with a unit-regular admits y with a + b*y a unit."""
    un = units_mask(ring)
    om = one_minus(ring)
    mul, add = ring.mul, ring.add
    profiles = classify_all(ring)
    checked = 0
    for a in range(ring.n):
        if profiles[a].unit_regular_witness is None:
            continue
        b_of_x = om[mul[a, :]]                 # b is forced by (a, x)
        vals = add[a, mul[b_of_x, :]]          # vals[x, y] = a + b*y
        ok = un[vals].any(axis=1)
        checked += ring.n
        if not ok.all():
            x = int(np.argmin(ok))
            return False, {"a": int(a), "x": x, "b": int(b_of_x[x])}, checked
    return True, None, checked


def _is_exchange(ring, ideal) -> bool:
    return exchange_ideal(ring, ideal).holds


def _is_regular(ring, ideal) -> bool:
    return regular_ideal(ring, ideal).holds


def _sqstable(ring, ideal):
    res = square_stable_fast(ring, ideal)
    return res.holds, res.counterexample


# ---------------------------------------------------------------------------
# per-claim verification


def verify(theorem_id: str, ring: RingTable, ideal: Ideal) -> TheoremVerdict:
    """Evaluate one claim on a (ring, ideal) instance."""
    if theorem_id not in ALL_IDS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    return _VERIFIERS[theorem_id](ring, ideal)


def _verify_L31(ring, ideal):
    return _verdict(
        "L31", ring, ideal, {}, "implies",
        [_sqstable(ring, ideal), _radical_condition(ring, ideal)],
    )


def _verify_L32(ring, ideal):
    def compute():
        ok, info, _ = _lemma_completion(ring)
        return ok, info

    ok, info = ring.memo("lemma-completion", compute)
    return _verdict("L32", ring, ideal, {}, "holds", [(ok, info)])


def _verify_T33(ring, ideal):
    return _verdict(
        "T33", ring, ideal, {"exchange": _is_exchange(ring, ideal)}, "iff",
        [_sqstable(ring, ideal), _radical_condition(ring, ideal)],
    )


def _verify_C34(ring, ideal):
    return _verdict(
        "C34", ring, ideal, {"exchange": _is_exchange(ring, ideal)}, "iff",
        [_sqstable(ring, ideal), _commutator_condition(ring, ideal)],
    )


def _verify_T35(ring, ideal):
    return _verdict(
        "T35", ring, ideal, {"exchange": _is_exchange(ring, ideal)}, "iff",
        [_sqstable(ring, ideal), _regulars_strongly_regular_mod_radical(ring, ideal)],
    )


def _verify_C36(ring, ideal):
    hyp = {
        "full-ideal": ideal.size == ring.n,
        "exchange": _is_exchange(ring, ideal) if ideal.size == ring.n else False,
    }
    return _verdict(
        "C36", ring, ideal, hyp, "iff",
        [_sqstable(ring, ideal), _regulars_strongly_regular_mod_radical(ring, ideal)]
        if all(hyp.values()) else [],
    )


def _verify_T37(ring, ideal):
    return _verdict(
        "T37", ring, ideal, {"exchange": _is_exchange(ring, ideal)}, "iff",
        [
            _sqstable(ring, ideal),
            _regulars_in_a2r_with_df_corner(ring, ideal),
            _regulars_strongly_regular(ring, ideal),
        ],
    )


def _verify_T42(ring, ideal):
    return _verdict(
        "T42", ring, ideal, {"regular": _is_regular(ring, ideal)}, "iff",
        [_sqstable(ring, ideal), _corners_strongly_regular(ring, ideal)],
    )


def _verify_C43(ring, ideal):
    red = reduced_ideal(ring, ideal)
    return _verdict(
        "C43", ring, ideal, {"regular": _is_regular(ring, ideal)}, "iff",
        [_sqstable(ring, ideal), (red.holds, red.counterexample)],
    )


def _verify_C44sr(ring, ideal):
    hyp = {"regular-ring": _is_regular(ring, full_ideal(ring))}
    if not hyp["regular-ring"]:
        return _verdict("C44sr", ring, ideal, hyp, "iff", [])
    sr_ring, bad = _members_strongly_regular(ring, range(ring.n))
    ss, ss_info = _sqstable(ring, ideal)
    quotient, _ = quotient_by(ring, ideal)
    sr_quot, bad_q = _members_strongly_regular(quotient, range(quotient.n))
    lift = units_lift(ring, ideal)
    conj = ss and sr_quot and lift.holds
    conj_info = None
    if not conj:
        # cosets are named, not indexed, so the detail stays unambiguous
        if ss_info:
            conj_info = ss_info
        elif not sr_quot:
            conj_info = {"quotient-element": quotient.names[bad_q["a"]]}
        elif not lift.holds:
            conj_info = {"missing-unit-coset": quotient.names[lift.missing]}
    return _verdict(
        "C44sr", ring, ideal, hyp, "iff",
        [(sr_ring, bad), (conj, conj_info)],
    )


def _verify_T44(ring, ideal):
    return _verdict(
        "T44", ring, ideal, {"regular": _is_regular(ring, ideal)}, "iff",
        [_sqstable(ring, ideal), _unit_completion_on_shifted(ring, ideal)],
    )


def _verify_C45(ring, ideal):
    shifted = sorted(int(ring.add[ring.one, i]) for i in ideal.members)
    return _verdict(
        "C45", ring, ideal, {"regular": _is_regular(ring, ideal)}, "iff",
        [
            _sqstable(ring, ideal),
            _members_strongly_regular(ring, ideal.members),
            _members_strongly_regular(ring, shifted),
        ],
    )


def qualifies_for_example41(n: int) -> bool:
    """n has an odd prime factor of multiplicity exactly one."""
    if n < 3:
        return False
    rest = n
    while rest % 2 == 0:
        rest //= 2
    p = 3
    while p * p <= rest:
        if rest % p == 0:
            k = 0
            while rest % p == 0:
                rest //= p
                k += 1
            if k == 1:
                return True
        p += 2
    return rest > 1   # leftover prime has multiplicity one


def _verify_X41(ring, ideal):
    prov = ring.provenance
    hyp = {
        "gaussian-ring": isinstance(prov, ex.Gaussian),
        "full-ideal": ideal.size == ring.n,
        "qualifying-n": isinstance(prov, ex.Gaussian) and qualifies_for_example41(prov.n),
    }
    if not all(hyp.values()):
        return _verdict("X41", ring, ideal, hyp, "holds", [])
    found = None
    for cand in all_ideals(ring):
        if cand.size == 1:
            continue
        if regular_ideal(ring, cand).holds and square_stable_fast(ring, cand).holds:
            found = cand
            break
    witness = {}
    info = None
    if found is not None:
        witness = {
            "ideal-size": found.size,
            "ideal-members": [ring.names[m] for m in found.members],
        }
    else:
        info = {"searched-ideals": str(len(all_ideals(ring)))}
    return _verdict("X41", ring, ideal, hyp, "holds", [(found is not None, info)], witness)


def verify_example_41(n: int, max_size: int = DEFAULT_MAX_SIZE) -> TheoremVerdict:
    """Build Z_n[i] and hunt for a nonzero square stable regular ideal."""
    ring = elaborate(ex.Gaussian(n), max_size=max_size)
    return _verify_X41(ring, full_ideal(ring))


_VERIFIERS = {
    "L31": _verify_L31,
    "L32": _verify_L32,
    "T33": _verify_T33,
    "C34": _verify_C34,
    "T35": _verify_T35,
    "C36": _verify_C36,
    "T37": _verify_T37,
    "T42": _verify_T42,
    "C43": _verify_C43,
    "C44sr": _verify_C44sr,
    "T44": _verify_T44,
    "C45": _verify_C45,
    "X41": _verify_X41,
}


# ---------------------------------------------------------------------------
# corpus runs

DEFAULT_CORPUS = tuple(
    [f"Z({n})" for n in range(1, 13)]
    + [f"Zi({n})" for n in range(2, 8)]
    + ["M(2,Z(2))", "M(2,Z(3))"]
    + [f"T(2,Z({n}))" for n in (2, 3, 4)]
    + [
        "prod(Z(2),Z(3))",
        "quot(Z(4),jacobson)",
        "quot(T(2,Z(2)),jacobson)",
        "quot(T(2,Z(3)),jacobson)",
        "corner(M(2,Z(2)),[1,0,0,0])",
        "corner(M(2,Z(3)),[1,0,0,0])",
    ]
)


@dataclass
class IdAccounting:
    instances: int = 0
    vacuous: int = 0
    consistent: int = 0
    inconsistent: int = 0
    clause1_true: int = 0    # hypotheses met and first clause true
    clause1_false: int = 0   # hypotheses met and first clause false


@dataclass
class CorpusReport:
    verdicts: list[TheoremVerdict]
    errors: list[tuple[str, str]]            # (expression, error message)
    axiom_failures: list[tuple[str, str]]
    elapsed: float

    @property
    def inconsistencies(self) -> list[TheoremVerdict]:
        return [v for v in self.verdicts if v.consistent is False]

    def accounting(self) -> dict[str, IdAccounting]:
        acc: dict[str, IdAccounting] = {}
        for v in self.verdicts:
            a = acc.setdefault(v.theorem, IdAccounting())
            a.instances += 1
            if v.vacuous:
                a.vacuous += 1
                continue
            if v.consistent:
                a.consistent += 1
            else:
                a.inconsistent += 1
            if v.clause_values:
                if v.clause_values[0]:
                    a.clause1_true += 1
                else:
                    a.clause1_false += 1
        return acc


def run_corpus(
    expressions=DEFAULT_CORPUS,
    theorem_ids=THEOREM_IDS,
    max_size: int = DEFAULT_MAX_SIZE,
    threads: int = 1,
) -> CorpusReport:
    """Verify the requested claims on every ideal of every corpus ring.

    Construction or size errors are collected per expression, not fatal.
    Rings whose tables fail the axiom check are excluded from the theorem
    stage and reported.  Verdicts come back sorted by (ring expression,
    ideal size, ideal members, theorem id) independent of thread count."""
    start = time.perf_counter()
    for tid in theorem_ids:
        if tid not in ALL_IDS:
            raise ValueError(f"unknown theorem id {tid!r}")

    def one_ring(text):
        verdicts, errors, axiom_failures = [], [], []
        try:
            ring = elaborate(text, max_size=max_size)
        except FinringError as e:
            errors.append((text if isinstance(text, str) else ex.render(text), str(e)))
            return verdicts, errors, axiom_failures
        report = verify_axioms(ring)
        if not report.ok:
            v = report.violations[0]
            axiom_failures.append((ring.expr_str, f"{v.law}: {v.message}"))
            return verdicts, errors, axiom_failures
        for ideal in all_ideals(ring):
            for tid in theorem_ids:
                verdicts.append(verify(tid, ring, ideal))
        return verdicts, errors, axiom_failures

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one_ring, expressions))
    else:
        results = [one_ring(t) for t in expressions]

    verdicts: list[TheoremVerdict] = []
    errors: list[tuple[str, str]] = []
    axiom_failures: list[tuple[str, str]] = []
    for vs, es, afs in results:
        verdicts.extend(vs)
        errors.extend(es)
        axiom_failures.extend(afs)
    verdicts.sort(key=lambda v: (v.ring.expr_str, v.ideal.size, v.ideal.members, v.theorem))
    errors.sort()
    axiom_failures.sort()
    return CorpusReport(verdicts, errors, axiom_failures, time.perf_counter() - start)


def cross_validate_square_stable(
    expressions=DEFAULT_CORPUS, max_size: int = DEFAULT_MAX_SIZE
) -> list[tuple[str, Ideal, str]]:
    """Compare the three square-stability procedures over a corpus.

    Returns one record per disagreement: the definitional and quadratic
    procedures must agree on every (ring, ideal); the GL_2 procedure is
    additionally compared on commutative rings small enough to square."""
    from .predicates import square_stable_def, square_stable_matrix
    from .structure import is_commutative

    disagreements = []
    for text in expressions:
        ring = elaborate(text, max_size=max_size)
        for ideal in all_ideals(ring):
            fast = square_stable_fast(ring, ideal)
            by_def = square_stable_def(ring, ideal)
            if fast.holds != by_def.holds:
                disagreements.append((ring.expr_str, ideal, "fast vs def"))
            if is_commutative(ring) and ring.n**4 <= max_size:
                by_matrix = square_stable_matrix(ring, ideal, max_size=max_size)
                if fast.holds != by_matrix.holds:
                    disagreements.append((ring.expr_str, ideal, "fast vs matrix"))
    return disagreements


@dataclass
class SearchHit:
    expression: str
    ideal: Ideal


@dataclass
class SearchReport:
    family: str
    values: list[int]
    holds: str
    fails: str
    hits: list[SearchHit]
    errors: list[tuple[str, str]]


def search_counterexamples(
    family: str,
    values,
    holds: str,
    fails: str,
    max_size: int = DEFAULT_MAX_SIZE,
) -> SearchReport:
    """List every (ring, ideal) in a parametric family where the first
    predicate holds and the second fails."""
    from .predicates import IDEAL_PREDICATES

    template = ex.parse_family(family) if isinstance(family, str) else family
    pred_a = IDEAL_PREDICATES[holds]
    pred_b = IDEAL_PREDICATES[fails]
    hits, errors = [], []
    for value in values:
        instance = ex.substitute(template, value)
        text = ex.render(instance)
        try:
            ring = elaborate(instance, max_size=max_size)
        except FinringError as e:
            errors.append((text, str(e)))
            continue
        for ideal in all_ideals(ring):
            if pred_a(ring, ideal).holds and not pred_b(ring, ideal).holds:
                hits.append(SearchHit(text, ideal))
    return SearchReport(
        ex.render(template), list(values), holds, fails, hits, errors
    )
