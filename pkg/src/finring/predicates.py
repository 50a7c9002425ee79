"""Decidable ideal- and ring-level predicates: square stability (three
procedures), stable range one, exchange (both characterizations), regular,
reduced, nil, and abelian-ness.

Each decision returns a PredicateResult whose counterexample, when present,
is the minimal failing tuple in canonical scan order.  The quadratic
reformulation (square_stable_fast) is the default square-stability test;
the definitional and GL_2 procedures exist for cross-validation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .elements import classify_all
from .errors import NotCommutative
from .rings import Ideal, RingTable, require_ideal
from .structure import (
    comaximal_mask,
    full_ideal,
    idempotent_indices,
    is_commutative,
    jacobson_radical,
    matrix_ring_over,
    one_minus,
    units_mask,
)


@dataclass
class PredicateResult:
    predicate: str
    holds: bool
    witness: dict[str, int] | None
    counterexample: dict[str, int] | None
    checked: int
    elapsed: float
    fault: str | None = None


def _memo_predicate(name):
    """Cache results per (ring, ideal members) so theorem clauses can share them."""

    def wrap(fn):
        def inner(ring: RingTable, ideal: Ideal) -> PredicateResult:
            key = ("pred", name, ideal.members)
            return ring.memo(key, lambda: fn(ring, ideal))

        inner.__name__ = fn.__name__
        inner.__doc__ = fn.__doc__
        return inner

    return wrap


@_memo_predicate("square-stable")
def square_stable_fast(ring: RingTable, ideal: Ideal) -> PredicateResult:
    """For every a in I and r in R some x makes a^2 + (1-a*r)*x a unit."""
    require_ideal(ring, ideal)
    start = time.perf_counter()
    un = units_mask(ring)
    om = one_minus(ring)
    mul, add = ring.mul, ring.add
    checked = 0
    for a in ideal.members:
        a2 = mul[a, a]
        c = om[mul[a, :]]                   # c[r] = 1 - a*r
        vals = add[a2, mul[c, :]]           # vals[r, x] = a^2 + c[r]*x
        ok = un[vals].any(axis=1)
        if not ok.all():
            r = int(np.argmin(ok))
            checked += r + 1
            return PredicateResult(
                "square-stable", False, None, {"a": int(a), "r": r},
                checked, time.perf_counter() - start,
            )
        checked += ring.n
    return PredicateResult("square-stable", True, None, None, checked, time.perf_counter() - start)


@_memo_predicate("square-stable-def")
def square_stable_def(ring: RingTable, ideal: Ideal) -> PredicateResult:
    """For every comaximal pair (a in I, b) some y makes a^2 + b*y a unit."""
    require_ideal(ring, ideal)
    start = time.perf_counter()
    un = units_mask(ring)
    mul, add = ring.mul, ring.add
    checked = 0
    for a in ideal.members:
        comax = comaximal_mask(ring, a)
        a2 = mul[a, a]
        exists_y = un[add[a2, mul]].any(axis=1)   # row b: some y with a^2 + b*y a unit
        bad = comax & ~exists_y
        if bad.any():
            b = int(np.argmax(bad))
            checked += b + 1
            return PredicateResult(
                "square-stable-def", False, None, {"a": int(a), "b": b},
                checked, time.perf_counter() - start,
            )
        checked += ring.n
    return PredicateResult("square-stable-def", True, None, None, checked, time.perf_counter() - start)


def square_stable_matrix(ring: RingTable, ideal: Ideal, max_size: int | None = None) -> PredicateResult:
    """Commutative rings only: every comaximal pair (a in I, b) admits
    Y in M_2(R) with a*I_2 + b*Y invertible in M_2(R)."""
    from .rings import DEFAULT_MAX_SIZE

    if max_size is None:
        max_size = DEFAULT_MAX_SIZE
    require_ideal(ring, ideal)
    if not is_commutative(ring):
        raise NotCommutative(f"{ring.expr_str} is not commutative")
    key = ("pred", "square-stable-matrix", ideal.members)
    if key in ring._memo:
        return ring._memo[key]
    start = time.perf_counter()
    m2 = matrix_ring_over(ring, max_size)
    un2 = units_mask(m2)
    s = ring.n
    scalar = np.arange(s) * s**3 + np.arange(s)   # c -> diag(c, c)
    checked = 0
    result = None
    for a in ideal.members:
        comax = comaximal_mask(ring, a)
        ea = int(scalar[a])
        for b in np.flatnonzero(comax):
            vals = m2.add[ea, m2.mul[int(scalar[b]), :]]
            checked += 1
            if not un2[vals].any():
                result = PredicateResult(
                    "square-stable-matrix", False, None, {"a": int(a), "b": int(b)},
                    checked, time.perf_counter() - start,
                )
                break
        if result:
            break
    if result is None:
        result = PredicateResult(
            "square-stable-matrix", True, None, None, checked, time.perf_counter() - start
        )
    ring._memo[key] = result
    return result


@_memo_predicate("stable-range-one")
def stable_range_one(ring: RingTable, ideal: Ideal) -> PredicateResult:
    """Every comaximal pair (a in 1+I, b) admits y with a + b*y a unit."""
    require_ideal(ring, ideal)
    start = time.perf_counter()
    un = units_mask(ring)
    mul, add = ring.mul, ring.add
    shifted = sorted(int(add[ring.one, i]) for i in ideal.members)
    checked = 0
    for a in shifted:
        comax = comaximal_mask(ring, a)
        exists_y = un[add[a, mul]].any(axis=1)
        bad = comax & ~exists_y
        if bad.any():
            b = int(np.argmax(bad))
            checked += b + 1
            return PredicateResult(
                "stable-range-one", False, None, {"a": int(a), "b": b},
                checked, time.perf_counter() - start,
            )
        checked += ring.n
    return PredicateResult("stable-range-one", True, None, None, checked, time.perf_counter() - start)


@_memo_predicate("exchange")
def exchange_ideal(ring: RingTable, ideal: Ideal) -> PredicateResult:
    """Both exchange characterizations, member by member:

    (def)  some idempotent e in I and x, y in I with e = a*x = a + y - a*y;
    (char) some idempotent e in R with e in aR and 1-e in (1-a)R.

    The two must agree; a disagreement is surfaced as a fault, never merged.
    """
    require_ideal(ring, ideal)
    start = time.perf_counter()
    mul, add, neg = ring.mul, ring.add, ring.neg
    om = one_minus(ring)
    idems = np.asarray(idempotent_indices(ring))
    idem_mask = np.zeros(ring.n, dtype=bool)
    idem_mask[idems] = True
    members = np.asarray(ideal.members)
    checked = 0
    fault = None
    first_fail = None
    for a in ideal.members:
        checked += 1
        ax = mul[a, members]                       # a*x over x in I
        ay = add[add[a, members], neg[mul[a, members]]]   # a + y - a*y over y in I
        cand = np.zeros(ring.n, dtype=bool)
        cand[ax] = True
        cand &= idem_mask & ideal.mask
        hit = np.zeros(ring.n, dtype=bool)
        hit[ay] = True
        by_def = bool((cand & hit).any())

        in_ar = np.zeros(ring.n, dtype=bool)
        in_ar[mul[a, :]] = True
        in_bar = np.zeros(ring.n, dtype=bool)
        in_bar[mul[om[a], :]] = True
        by_char = bool((idem_mask & in_ar & in_bar[om]).any())

        if by_def != by_char:
            fault = (
                f"exchange characterizations disagree at a={ring.names[a]}: "
                f"definition={by_def}, idempotent-splitting={by_char}"
            )
        if not (by_def and by_char) and first_fail is None:
            first_fail = int(a)
    holds = first_fail is None
    return PredicateResult(
        "exchange", holds, None,
        None if holds else {"a": first_fail},
        checked, time.perf_counter() - start, fault=fault,
    )


@_memo_predicate("regular")
def regular_ideal(ring: RingTable, ideal: Ideal) -> PredicateResult:
    """Every member has a von Neumann regular witness."""
    require_ideal(ring, ideal)
    start = time.perf_counter()
    profiles = classify_all(ring)
    checked = 0
    for a in ideal.members:
        checked += 1
        if profiles[a].regular_witness is None:
            return PredicateResult(
                "regular", False, None, {"a": int(a)}, checked, time.perf_counter() - start,
            )
    return PredicateResult("regular", True, None, None, checked, time.perf_counter() - start)


@_memo_predicate("reduced")
def reduced_ideal(ring: RingTable, ideal: Ideal) -> PredicateResult:
    """No nonzero member squares to zero.

    Square-zero elements suffice: a nonzero nilpotent a of minimal index k
    yields the nonzero square-zero element a^(k-1) (or a^(k/2) power) still
    inside the ideal, so scanning squares loses nothing."""
    require_ideal(ring, ideal)
    start = time.perf_counter()
    checked = 0
    for x in ideal.members:
        checked += 1
        if x != ring.zero and ring.mul[x, x] == ring.zero:
            return PredicateResult(
                "reduced", False, None, {"x": int(x)}, checked, time.perf_counter() - start,
            )
    return PredicateResult("reduced", True, None, None, checked, time.perf_counter() - start)


@_memo_predicate("nil")
def nil_ideal(ring: RingTable, ideal: Ideal) -> PredicateResult:
    """Every member is nilpotent."""
    require_ideal(ring, ideal)
    start = time.perf_counter()
    profiles = classify_all(ring)
    checked = 0
    for a in ideal.members:
        checked += 1
        if profiles[a].nilpotency_index is None:
            return PredicateResult(
                "nil", False, None, {"a": int(a)}, checked, time.perf_counter() - start,
            )
    return PredicateResult("nil", True, None, None, checked, time.perf_counter() - start)


@_memo_predicate("units-lift")
def units_lift_predicate(ring: RingTable, ideal: Ideal) -> PredicateResult:
    """Every unit of R/I is the image of a unit of R."""
    from .structure import quotient_by, units_lift

    require_ideal(ring, ideal)
    start = time.perf_counter()
    res = units_lift(ring, ideal)
    quotient, _ = quotient_by(ring, ideal)
    counterexample = None
    if not res.holds:
        # the non-liftable coset lives in R/I, so it is reported by name
        counterexample = {"coset": quotient.names[res.missing]}
    return PredicateResult(
        "units-lift", res.holds, None, counterexample,
        len(res.lifts) + (0 if res.holds else 1), time.perf_counter() - start,
    )


@_memo_predicate("in-jacobson")
def in_jacobson(ring: RingTable, ideal: Ideal) -> PredicateResult:
    """I is contained in J(R)."""
    require_ideal(ring, ideal)
    start = time.perf_counter()
    jmask = jacobson_radical(ring).mask
    checked = 0
    for a in ideal.members:
        checked += 1
        if not jmask[a]:
            return PredicateResult(
                "in-jacobson", False, None, {"a": int(a)}, checked, time.perf_counter() - start,
            )
    return PredicateResult("in-jacobson", True, None, None, checked, time.perf_counter() - start)


def ring_square_stable_range_one(ring: RingTable) -> PredicateResult:
    """Whole-ring square stability: the full ideal case."""
    res = square_stable_fast(ring, full_ideal(ring))
    return PredicateResult(
        "square-stable-ring", res.holds, res.witness, res.counterexample,
        res.checked, res.elapsed, res.fault,
    )


def abelian_ring(ring: RingTable) -> PredicateResult:
    """Every idempotent is central."""
    start = time.perf_counter()
    checked = 0
    for e in idempotent_indices(ring):
        row, col = ring.mul[e, :], ring.mul[:, e]
        checked += ring.n
        if not np.array_equal(row, col):
            x = int(np.argwhere(row != col)[0][0])
            return PredicateResult(
                "abelian", False, None, {"e": int(e), "x": x},
                checked, time.perf_counter() - start,
            )
    return PredicateResult("abelian", True, None, None, checked, time.perf_counter() - start)


IDEAL_PREDICATES = {
    "square-stable": square_stable_fast,
    "square-stable-def": square_stable_def,
    "square-stable-matrix": square_stable_matrix,
    "stable-range-one": stable_range_one,
    "exchange": exchange_ideal,
    "regular": regular_ideal,
    "reduced": reduced_ideal,
    "nil": nil_ideal,
    "in-jacobson": in_jacobson,
    "units-lift": units_lift_predicate,
}

RING_PREDICATES = {
    "square-stable-ring": ring_square_stable_range_one,
    "abelian": abelian_ring,
}
