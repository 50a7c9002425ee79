"""Per-element classification: units, idempotents, nilpotency, and the
regular / unit-regular / strongly regular hierarchy, with explicit witnesses.

Witness searches scan canonical index order and keep the first hit, so a
profile is a deterministic function of the ring.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotFound, PreconditionFailed
from .rings import Ideal, RingTable
from .structure import inverse_map, quotient_by, units_mask


@dataclass
class ElementProfile:
    """Classification flags for one element, each backed by a witness.

    regular_witness x satisfies a = a*x*a; unit_regular_witness u is a unit
    with a = a*u*a; square witnesses (x, y) satisfy a = a^2*x and a = y*a^2.
    nilpotency_index is the least k >= 1 with a^k = 0, or None.
    """

    index: int
    is_unit: bool
    inverse: int | None
    is_idempotent: bool
    nilpotency_index: int | None
    regular_witness: int | None
    unit_regular_witness: int | None
    square_right_witness: int | None
    square_left_witness: int | None

    @property
    def is_regular(self) -> bool:
        return self.regular_witness is not None

    @property
    def is_unit_regular(self) -> bool:
        return self.unit_regular_witness is not None

    @property
    def is_strongly_regular(self) -> bool:
        return self.square_right_witness is not None and self.square_left_witness is not None

    @property
    def is_nilpotent(self) -> bool:
        return self.nilpotency_index is not None


def classify(ring: RingTable, a: int) -> ElementProfile:
    """Exhaustively classify one element."""
    a = int(a)
    mul = ring.mul
    un = units_mask(ring)
    inv = inverse_map(ring)

    # nilpotency: powers of a nilpotent element reach zero within n steps
    nil = None
    p, k = a, 1
    while k <= ring.n:
        if p == ring.zero:
            nil = k
            break
        p = int(mul[p, a])
        k += 1

    axa = mul[mul[a, :], a]
    hits = np.flatnonzero(axa == a)
    regular = int(hits[0]) if hits.size else None

    unit_regular = None
    if regular is not None:
        for u in np.flatnonzero(un):
            if axa[u] == a:
                unit_regular = int(u)
                break

    a2 = int(mul[a, a])
    right = np.flatnonzero(mul[a2, :] == a)
    left = np.flatnonzero(mul[:, a2] == a)
    return ElementProfile(
        index=a,
        is_unit=bool(un[a]),
        inverse=int(inv[a]) if un[a] else None,
        is_idempotent=bool(mul[a, a] == a),
        nilpotency_index=nil,
        regular_witness=regular,
        unit_regular_witness=unit_regular,
        square_right_witness=int(right[0]) if right.size else None,
        square_left_witness=int(left[0]) if left.size else None,
    )


def classify_all(ring: RingTable) -> list[ElementProfile]:
    return ring.memo("profiles", lambda: [classify(ring, a) for a in range(ring.n)])


def is_dedekind_finite(ring: RingTable) -> tuple[bool, tuple[int, int] | None]:
    """x*y = 1 forces y*x = 1; returns the first violating pair otherwise."""
    viol = (ring.mul == ring.one) & (ring.mul.T != ring.one)
    if viol.any():
        x, y = np.argwhere(viol)[0]
        return False, (int(x), int(y))
    return True, None


def complete_unit_regular(ring: RingTable, a: int, x: int, b: int) -> int:
    """Given a*x + b = 1 with a unit-regular, the first y making a + b*y a unit."""
    a, x, b = int(a), int(x), int(b)
    if ring.add[ring.mul[a, x], b] != ring.one:
        raise PreconditionFailed("a*x + b != 1")
    if classify(ring, a).unit_regular_witness is None:
        raise PreconditionFailed(f"{ring.names[a]} is not unit-regular")
    vals = ring.add[a, ring.mul[b, :]]
    hits = np.flatnonzero(units_mask(ring)[vals])
    if not hits.size:
        raise NotFound("no completion exists; this contradicts unit-regularity of a")
    return int(hits[0])


def classify_in_quotient(ring: RingTable, ideal: Ideal, a: int) -> ElementProfile:
    """Profile of the image coset of a in R/I."""
    quotient, proj = quotient_by(ring, ideal)
    return classify(quotient, int(proj[int(a)]))


def strongly_regular_ring(ring: RingTable) -> tuple[bool, int | None]:
    """Every element strongly regular; returns the first failure otherwise."""
    for p in classify_all(ring):
        if not p.is_strongly_regular:
            return False, p.index
    return True, None
