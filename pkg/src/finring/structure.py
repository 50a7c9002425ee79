"""Derived structure of a finite ring: units, idempotents, the Jacobson
radical, two-sided ideals, comaximality, unit lifting, and enclosing
idempotents inside regular ideals.

Everything is a pure function of immutable ring tables; expensive results
are cached on the ring behind a write-once memo.  All searches run in
canonical index order so the reported witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import expr as ex
from .errors import NotFound, PreconditionFailed, SizeExceeded
from .rings import Ideal, RingTable, make_corner, make_matrix, make_quotient

IDEAL_COUNT_CAP = 65536


def units_mask(ring: RingTable) -> np.ndarray:
    """Boolean mask of two-sided units."""
    return _units(ring)[0]


def inverse_map(ring: RingTable) -> np.ndarray:
    """inverse_map[a] is a's two-sided inverse, or -1."""
    return _units(ring)[1]


def _units(ring: RingTable):
    def compute():
        two_sided = (ring.mul == ring.one) & (ring.mul.T == ring.one)
        mask = two_sided.any(axis=1)
        inv = np.where(mask, two_sided.argmax(axis=1), -1)
        for arr in (mask, inv):
            arr.setflags(write=False)
        return mask, inv

    return ring.memo("units", compute)


def unit_indices(ring: RingTable) -> list[int]:
    return [int(i) for i in np.flatnonzero(units_mask(ring))]


def idempotent_indices(ring: RingTable) -> list[int]:
    def compute():
        idx = np.arange(ring.n)
        return [int(i) for i in np.flatnonzero(ring.mul[idx, idx] == idx)]

    return ring.memo("idempotents", compute)


def one_minus(ring: RingTable) -> np.ndarray:
    """one_minus[x] = 1 - x."""

    def compute():
        arr = ring.add[ring.one, ring.neg]
        arr.setflags(write=False)
        return arr

    return ring.memo("one-minus", compute)


def is_commutative(ring: RingTable) -> bool:
    return ring.memo("commutative", lambda: bool(np.array_equal(ring.mul, ring.mul.T)))


def jacobson_radical(ring: RingTable) -> Ideal:
    """J(R) = {a : 1 - r*a is a unit for every r} (quasi-regularity test).

    In a finite ring one-sided invertibility of 1 - r*a already suffices,
    but the unit mask used here is two-sided, so nothing is assumed."""

    def compute():
        un = units_mask(ring)
        om = one_minus(ring)
        in_j = un[om[ring.mul]].all(axis=0)
        return Ideal(ring, np.flatnonzero(in_j), spec=ex.JacobsonIdeal())

    return ring.memo("jacobson", compute)


def zero_ideal(ring: RingTable) -> Ideal:
    return Ideal(ring, [ring.zero], spec=ex.ZeroIdeal())


def full_ideal(ring: RingTable) -> Ideal:
    return Ideal(ring, range(ring.n), spec=ex.AllIdeal())


def ideal_generated_by(ring: RingTable, generators) -> Ideal:
    """Smallest two-sided ideal containing the generators (fixpoint closure)."""
    mask = np.zeros(ring.n, dtype=bool)
    mask[ring.zero] = True
    for g in generators:
        mask[int(g)] = True
    while True:
        idx = np.flatnonzero(mask)
        new = np.zeros(ring.n, dtype=bool)
        new[ring.add[np.ix_(idx, idx)].ravel()] = True
        new[ring.neg[idx]] = True
        new[ring.mul[:, idx].ravel()] = True
        new[ring.mul[idx, :].ravel()] = True
        if not (new & ~mask).any():
            break
        mask |= new
    gens = tuple(ring.names[int(g)] for g in sorted(set(int(g) for g in generators)))
    spec = ex.GeneratedIdeal(gens) if gens else ex.ZeroIdeal()
    return Ideal(ring, np.flatnonzero(mask), spec=spec)


def right_set(ring: RingTable, a: int) -> np.ndarray:
    """Membership mask of aR."""
    mask = np.zeros(ring.n, dtype=bool)
    mask[ring.mul[a, :]] = True
    return mask


def left_set(ring: RingTable, a: int) -> np.ndarray:
    """Membership mask of Ra."""
    mask = np.zeros(ring.n, dtype=bool)
    mask[ring.mul[:, a]] = True
    return mask


def sum_set(ring: RingTable, mask_a: np.ndarray, mask_b: np.ndarray) -> np.ndarray:
    """Elementwise sum set {p+q : p in A, q in B}."""
    ia = np.flatnonzero(mask_a)
    ib = np.flatnonzero(mask_b)
    mask = np.zeros(ring.n, dtype=bool)
    if ia.size and ib.size:
        mask[ring.add[np.ix_(ia, ib)].ravel()] = True
    return mask


def right_set_table(ring: RingTable) -> np.ndarray:
    """Boolean table B with B[b, t] true iff t lies in bR."""

    def compute():
        table = np.zeros((ring.n, ring.n), dtype=bool)
        table[np.arange(ring.n)[:, None], ring.mul] = True
        table.setflags(write=False)
        return table

    return ring.memo("right-set-table", compute)


def is_comaximal(ring: RingTable, a: int, b: int) -> bool:
    """aR + bR = R, decided by 1 in the sum set."""
    need = one_minus(ring)[np.unique(ring.mul[a, :])]
    return bool(right_set_table(ring)[b, need].any())


def comaximal_mask(ring: RingTable, a: int) -> np.ndarray:
    """All b with aR + bR = R, in one sweep."""
    need = one_minus(ring)[np.unique(ring.mul[a, :])]
    return right_set_table(ring)[:, need].any(axis=1)


def all_ideals(ring: RingTable, cap: int = IDEAL_COUNT_CAP) -> list[Ideal]:
    """Every two-sided ideal, via join-closure of the principal ideals.

    Ideal sum of ideals is the elementwise sum set, so the closure of the
    principal ideals under binary sums reaches every ideal.  Sorted by
    (size, member tuple)."""

    def compute():
        known: dict[bytes, np.ndarray] = {}
        queue = []

        def record(mask):
            key = mask.tobytes()
            if key in known:
                return
            if len(known) >= cap:
                raise SizeExceeded(f"more than {cap} ideals in {ring.expr_str}")
            known[key] = mask
            queue.append(mask)

        record(zero_ideal(ring).mask)
        principals = {}
        for a in range(ring.n):
            mask = ideal_generated_by(ring, [a]).mask
            principals[mask.tobytes()] = mask
            record(mask)
        while queue:
            cur = queue.pop()
            for p in principals.values():
                record(sum_set(ring, cur, p))
        ideals = [Ideal(ring, np.flatnonzero(m)) for m in known.values()]
        for ideal in ideals:
            if ideal.size == 1:
                ideal.spec = ex.ZeroIdeal()
            elif ideal.size == ring.n:
                ideal.spec = ex.AllIdeal()
        ideals.sort(key=lambda i: (i.size, i.members))
        return ideals

    return ring.memo(("all-ideals", cap), compute)


@dataclass
class LiftResult:
    holds: bool
    lifts: dict[int, int]  # unit coset index -> smallest lifting unit of R
    missing: int | None    # first unit coset with no unit preimage


def units_lift(ring: RingTable, ideal: Ideal) -> LiftResult:
    """Does every unit of R/I lift to a unit of R?"""
    quotient, proj = quotient_by(ring, ideal)
    q_units = unit_indices(quotient)
    lifts: dict[int, int] = {}
    r_units = unit_indices(ring)
    for u in r_units:
        q = int(proj[u])
        lifts.setdefault(q, u)
    for q in q_units:
        if q not in lifts:
            return LiftResult(False, {k: lifts[k] for k in sorted(lifts)}, q)
    return LiftResult(True, {q: lifts[q] for q in q_units}, None)


def enclosing_corner_idempotent(ring: RingTable, ideal: Ideal, xs) -> int:
    """First idempotent e in I (canonical order) with e*x = x*e = x for all
    the given members; existence is guaranteed when I is a regular ideal."""
    xs = [int(x) for x in xs]
    for x in xs:
        if not ideal.mask[x]:
            raise PreconditionFailed(f"{ring.names[x]} is not in the ideal")
    mul = ring.mul
    for e in ideal.members:
        if mul[e, e] != e:
            continue
        if all(mul[e, x] == x and mul[x, e] == x for x in xs):
            return int(e)
    raise NotFound("no enclosing idempotent; the ideal is not regular or the tables are corrupt")


def quotient_by(ring: RingTable, ideal: Ideal) -> tuple[RingTable, np.ndarray]:
    """Cached make_quotient."""
    def compute():
        return make_quotient(ring, ideal)

    return ring.memo(("quotient", ideal.members), compute)


def corner_at(ring: RingTable, e: int) -> tuple[RingTable, np.ndarray]:
    """Cached make_corner."""
    def compute():
        return make_corner(ring, int(e))

    return ring.memo(("corner", int(e)), compute)


def matrix_ring_over(ring: RingTable, max_size: int) -> RingTable:
    """Cached M(2, ring); used by the GL_2 square-stability procedure."""
    def compute():
        return make_matrix(2, ring, max_size=max_size)

    return ring.memo(("m2", max_size), compute)
