"""Finite unital rings as dense Cayley tables over element indices 0..n-1.

Every ring here is a pair of n x n index tables (addition, multiplication)
plus the distinguished indices for zero and one.  Elements of every
constructor are laid out in a fixed canonical order so that all searches
and witness selections are reproducible:

* cyclic residues ascending;
* Gaussian pairs a+bi ordered by (a, b);
* 2x2 matrix and triangular entries ordered by columns, i.e. by the digit
  sequence (m00, m10, m01, m11) resp. (a, b, d) for [[a, b], [0, d]];
* product tuples ordered with the first factor most significant;
* quotient cosets by their minimal representative; corners by the ambient
  index of their members.

Display names stay row-major (``[m00,m01,m10,m11]``) and double as the
element literals accepted back on the command line.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import expr as ex
from .errors import NotAnIdeal, NotIdempotent, SizeExceeded

DEFAULT_MAX_SIZE = 4096

_TABLE_DTYPE = np.int32


class RingTable:
    """A finite unital ring given by explicit addition/multiplication tables."""

    __slots__ = ("n", "add", "mul", "neg", "zero", "one", "names", "provenance", "_memo")

    def __init__(self, add, mul, names, one, provenance, zero=0):
        add = np.ascontiguousarray(add, dtype=_TABLE_DTYPE)
        mul = np.ascontiguousarray(mul, dtype=_TABLE_DTYPE)
        n = len(names)
        if add.shape != (n, n) or mul.shape != (n, n):
            raise ValueError("table shape does not match the element count")
        if not (0 <= zero < n and 0 <= one < n):
            raise ValueError("zero/one index out of range")
        self.n = n
        self.add = add
        self.mul = mul
        # additive inverse: the unique b with a + b = zero (validated by verify_axioms)
        self.neg = np.argmax(add == zero, axis=1).astype(_TABLE_DTYPE)
        self.zero = int(zero)
        self.one = int(one)
        self.names = list(names)
        self.provenance = provenance
        self._memo = {}
        for t in (self.add, self.mul, self.neg):
            t.setflags(write=False)

    def __repr__(self):
        label = ex.render(self.provenance) if self.provenance is not None else "?"
        return f"<RingTable {label} n={self.n}>"

    @property
    def expr_str(self) -> str:
        return ex.render(self.provenance) if self.provenance is not None else f"<anonymous n={self.n}>"

    def memo(self, key, factory):
        """Per-ring write-once cache; values must be pure functions of the ring."""
        m = self._memo
        if key not in m:
            m[key] = factory()
        return m[key]


class Ideal:
    """A two-sided ideal as a membership set of element indices."""

    __slots__ = ("ring", "members", "mask", "spec")

    def __init__(self, ring: RingTable, members, spec=None):
        self.ring = ring
        self.members = tuple(sorted(int(m) for m in set(members)))
        mask = np.zeros(ring.n, dtype=bool)
        mask[list(self.members)] = True
        mask.setflags(write=False)
        self.mask = mask
        self.spec = spec

    @property
    def size(self) -> int:
        return len(self.members)

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and other.ring is self.ring
            and other.members == self.members
        )

    def __hash__(self):
        return hash((id(self.ring), self.members))

    def __repr__(self):
        return f"<Ideal size={self.size} of {self.ring.expr_str}>"

    def label(self) -> str:
        if self.spec is not None:
            return ex.render_ideal(self.spec)
        names = [self.ring.names[m] for m in self.members]
        if len(names) > 6:
            names = names[:6] + ["..."]
        return "{" + ",".join(names) + "}"


def ideal_violations(ring: RingTable, members) -> list[str]:
    """Closure laws a membership set must satisfy to be a two-sided ideal."""
    idx = np.asarray(sorted(set(int(m) for m in members)), dtype=_TABLE_DTYPE)
    mask = np.zeros(ring.n, dtype=bool)
    if idx.size:
        if idx.min() < 0 or idx.max() >= ring.n:
            return ["member index out of range"]
        mask[idx] = True
    out = []
    if not mask[ring.zero]:
        out.append("does not contain zero")
    if idx.size:
        if not mask[ring.add[np.ix_(idx, idx)]].all():
            out.append("not closed under addition")
        if not mask[ring.neg[idx]].all():
            out.append("not closed under negation")
        if not mask[ring.mul[:, idx]].all():
            out.append("not closed under left multiplication")
        if not mask[ring.mul[idx, :]].all():
            out.append("not closed under right multiplication")
    return out


def require_ideal(ring: RingTable, ideal: Ideal):
    if ideal.ring is not ring:
        raise NotAnIdeal("ideal belongs to a different ring")
    problems = ideal_violations(ring, ideal.members)
    if problems:
        raise NotAnIdeal("; ".join(problems))


# ---------------------------------------------------------------------------
# constructors


def _guard_size(size: int, max_size: int, what: str):
    if size > max_size:
        raise SizeExceeded(f"{what} has {size} elements, over the cap {max_size}")


def make_cyclic(n: int, max_size: int = DEFAULT_MAX_SIZE) -> RingTable:
    """Z_n with residues named by their value."""
    if n < 1:
        raise ValueError("n must be positive")
    _guard_size(n, max_size, f"Z({n})")
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    names = [str(i) for i in range(n)]
    return RingTable(add, mul, names, one=1 % n, provenance=ex.Cyclic(n))


def make_gaussian(n: int, max_size: int = DEFAULT_MAX_SIZE) -> RingTable:
    """Z_n[i]: pairs a+bi with i^2 = -1, componentwise addition mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    _guard_size(n * n, max_size, f"Zi({n})")
    size = n * n
    idx = np.arange(size)
    a, b = idx // n, idx % n
    ai, bi = a[:, None], b[:, None]
    aj, bj = a[None, :], b[None, :]
    add = ((ai + aj) % n) * n + (bi + bj) % n
    mul = ((ai * aj - bi * bj) % n) * n + (ai * bj + bi * aj) % n
    names = [f"{v // n}+{v % n}i" for v in range(size)]
    return RingTable(add, mul, names, one=(1 % n) * n, provenance=ex.Gaussian(n))


def make_matrix(k: int, base: RingTable, max_size: int = DEFAULT_MAX_SIZE) -> RingTable:
    """Full 2x2 matrix ring over base; other dimensions are rejected."""
    if k != 2:
        raise SizeExceeded(f"matrix dimension is fixed at 2, got {k}")
    s = base.n
    _guard_size(s**4, max_size, f"M(2,{base.expr_str})")
    size = s**4
    idx = np.arange(size)
    # index digits are column-major: (m00, m10, m01, m11), m00 most significant
    m00 = idx // s**3
    m10 = (idx // s**2) % s
    m01 = (idx // s) % s
    m11 = idx % s
    ba, bm = base.add, base.mul

    def pairwise(table, di, dj):
        return table[di[:, None], dj[None, :]].astype(np.int64)

    add = pairwise(ba, m00, m00)
    add = add * s + pairwise(ba, m10, m10)
    add = add * s + pairwise(ba, m01, m01)
    add = add * s + pairwise(ba, m11, m11)

    def dot(r0, r1, c0, c1):
        # row (r0, r1) of the left factor against column (c0, c1) of the right
        return ba[bm[r0[:, None], c0[None, :]], bm[r1[:, None], c1[None, :]]].astype(np.int64)

    c00 = dot(m00, m01, m00, m10)
    c10 = dot(m10, m11, m00, m10)
    c01 = dot(m00, m01, m01, m11)
    c11 = dot(m10, m11, m01, m11)
    mul = ((c00 * s + c10) * s + c01) * s + c11

    bn = base.names
    names = [
        f"[{bn[idx // s**3]},{bn[(idx // s) % s]},{bn[(idx // s**2) % s]},{bn[idx % s]}]"
        for idx in range(size)
    ]
    one = base.one * s**3 + base.one
    t = RingTable(add, mul, names, one=one, provenance=ex.Matrix(2, base.provenance))
    t._memo["entry-ring"] = base
    return t


def make_triangular(k: int, base: RingTable, max_size: int = DEFAULT_MAX_SIZE) -> RingTable:
    """Upper triangular 2x2 matrices [[a, b], [0, d]] over base."""
    if k != 2:
        raise SizeExceeded(f"triangular dimension is fixed at 2, got {k}")
    s = base.n
    _guard_size(s**3, max_size, f"T(2,{base.expr_str})")
    size = s**3
    idx = np.arange(size)
    a = idx // s**2
    b = (idx // s) % s
    d = idx % s
    ba, bm = base.add, base.mul

    def pairwise(table, di, dj):
        return table[di[:, None], dj[None, :]].astype(np.int64)

    add = pairwise(ba, a, a)
    add = add * s + pairwise(ba, b, b)
    add = add * s + pairwise(ba, d, d)

    c_a = pairwise(bm, a, a)
    c_b = ba[bm[a[:, None], b[None, :]], bm[b[:, None], d[None, :]]].astype(np.int64)
    c_d = pairwise(bm, d, d)
    mul = (c_a * s + c_b) * s + c_d

    bn = base.names
    z = bn[base.zero]
    names = [f"[{bn[i // s**2]},{bn[(i // s) % s]},{z},{bn[i % s]}]" for i in range(size)]
    one = base.one * s**2 + base.one
    t = RingTable(add, mul, names, one=one, provenance=ex.Triangular(2, base.provenance))
    t._memo["entry-ring"] = base
    return t


def make_product(rings: list[RingTable], max_size: int = DEFAULT_MAX_SIZE) -> RingTable:
    """Componentwise product; element names are tuples of component names."""
    if not rings:
        raise ValueError("product needs at least one factor")
    size = 1
    for r in rings:
        size *= r.n
    _guard_size(size, max_size, "prod(" + ",".join(r.expr_str for r in rings) + ")")
    idx = np.arange(size)
    digits = []
    rest = idx
    for r in reversed(rings):
        digits.append(rest % r.n)
        rest = rest // r.n
    digits.reverse()

    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    for r, d in zip(rings, digits):
        add = add * r.n + r.add[d[:, None], d[None, :]]
        mul = mul * r.n + r.mul[d[:, None], d[None, :]]

    names = []
    for v in range(size):
        parts = []
        rest = v
        for r in reversed(rings):
            parts.append(r.names[rest % r.n])
            rest //= r.n
        names.append("(" + ",".join(reversed(parts)) + ")")
    one = 0
    for r in rings:
        one = one * r.n + r.one
    prov = ex.Product(tuple(r.provenance for r in rings))
    t = RingTable(add, mul, names, one=one, provenance=prov)
    t._memo["factor-rings"] = list(rings)
    return t


def make_quotient(ring: RingTable, ideal: Ideal) -> tuple[RingTable, np.ndarray]:
    """Quotient by a verified two-sided ideal; returns (R/I, projection map)."""
    require_ideal(ring, ideal)
    members = np.asarray(ideal.members, dtype=_TABLE_DTYPE)
    rep = ring.add[:, members].min(axis=1)
    reps = np.unique(rep)
    cls = {int(r): i for i, r in enumerate(reps)}
    proj = np.array([cls[int(r)] for r in rep], dtype=_TABLE_DTYPE)
    add = proj[ring.add[np.ix_(reps, reps)]]
    mul = proj[ring.mul[np.ix_(reps, reps)]]
    names = [f"{ring.names[int(r)]}+I" for r in reps]
    spec = ideal.spec
    if spec is None:
        spec = ex.GeneratedIdeal(tuple(ring.names[m] for m in ideal.members))
    prov = ex.Quotient(ring.provenance, spec)
    q = RingTable(add, mul, names, one=int(proj[ring.one]), provenance=prov)
    q._memo["quotient_of"] = (ring, proj)
    return q, proj


def make_corner(ring: RingTable, e: int) -> tuple[RingTable, np.ndarray]:
    """Corner ring eRe with identity e; returns (corner, embedding into ring)."""
    e = int(e)
    if ring.mul[e, e] != e:
        raise NotIdempotent(f"{ring.names[e]} is not idempotent")
    elems = np.unique(ring.mul[ring.mul[e, :], e])
    pos = {int(x): i for i, x in enumerate(elems)}
    add = np.array([[pos[int(ring.add[x, y])] for y in elems] for x in elems])
    mul = np.array([[pos[int(ring.mul[x, y])] for y in elems] for x in elems])
    names = [ring.names[int(x)] for x in elems]
    prov = ex.Corner(ring.provenance, ring.names[e])
    c = RingTable(add, mul, names, one=pos[e], provenance=prov)
    c._memo["corner_of"] = (ring, elems.astype(_TABLE_DTYPE))
    return c, elems.astype(_TABLE_DTYPE)


# ---------------------------------------------------------------------------
# axiom verification


@dataclass
class AxiomViolation:
    law: str
    indices: tuple[int, ...]
    message: str


@dataclass
class AxiomReport:
    violations: list[AxiomViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


_CHUNK_CELLS = 1 << 22


def verify_axioms(ring: RingTable) -> AxiomReport:
    """Exhaustively check the ring axioms; reports the first violating
    instance of each law (instances are scanned in canonical triple order)."""
    rep = AxiomReport()
    n, add, mul = ring.n, ring.add, ring.mul

    def bad(law, indices, message):
        rep.violations.append(AxiomViolation(law, tuple(int(i) for i in indices), message))

    if add.min() < 0 or add.max() >= n:
        bad("closure", (), "addition table entry out of range")
        return rep
    if mul.min() < 0 or mul.max() >= n:
        bad("closure", (), "multiplication table entry out of range")
        return rep
    if len(set(ring.names)) != n:
        bad("names", (), "element names are not pairwise distinct")

    if not np.array_equal(add, add.T):
        a, b = np.argwhere(add != add.T)[0]
        bad("add-commutative", (a, b), f"{a}+{b} != {b}+{a}")
    zrow = add[ring.zero]
    if not np.array_equal(zrow, np.arange(n)):
        a = int(np.argwhere(zrow != np.arange(n))[0][0])
        bad("add-zero", (a,), f"0+{a} != {a}")
    if not np.array_equal(add[np.arange(n), ring.neg], np.full(n, ring.zero)):
        a = int(np.argwhere(add[np.arange(n), ring.neg] != ring.zero)[0][0])
        bad("add-inverse", (a,), f"{a} has no additive inverse")

    orow, ocol = mul[ring.one], mul[:, ring.one]
    if not np.array_equal(orow, np.arange(n)):
        a = int(np.argwhere(orow != np.arange(n))[0][0])
        bad("mul-one", (a,), f"1*{a} != {a}")
    elif not np.array_equal(ocol, np.arange(n)):
        a = int(np.argwhere(ocol != np.arange(n))[0][0])
        bad("mul-one", (a,), f"{a}*1 != {a}")

    all_idx = np.arange(n)
    mul_t = np.ascontiguousarray(mul.T)
    rows_per = max(1, _CHUNK_CELLS // (n * n)) if n else 1

    def first_triple(law, lhs_of, rhs_of, message):
        # lhs/rhs are (block, n, n) arrays over triples (a in block, b, c)
        for start in range(0, n, rows_per):
            block = all_idx[start : start + rows_per]
            lhs = lhs_of(block)
            rhs = rhs_of(block)
            if not np.array_equal(lhs, rhs):
                i, b, c = np.argwhere(lhs != rhs)[0]
                bad(law, (block[i], b, c), message.format(a=block[i], b=b, c=c))
                return

    first_triple(
        "add-associative",
        lambda blk: add[add[blk, :], :],
        lambda blk: add[blk][:, add],
        "({a}+{b})+{c} != {a}+({b}+{c})",
    )
    first_triple(
        "mul-associative",
        lambda blk: mul[mul[blk, :], :],
        lambda blk: mul[blk][:, mul],
        "({a}*{b})*{c} != {a}*({b}*{c})",
    )
    first_triple(
        "left-distributive",
        lambda blk: mul[blk][:, add],
        lambda blk: add[mul[blk][:, :, None], mul[blk][:, None, :]],
        "{a}*({b}+{c}) != {a}*{b}+{a}*{c}",
    )
    first_triple(
        "right-distributive",
        lambda blk: mul_t[blk][:, add],
        lambda blk: add[mul_t[blk][:, :, None], mul_t[blk][:, None, :]],
        "({b}+{c})*{a} != {b}*{a}+{c}*{a}",
    )
    return rep


# ---------------------------------------------------------------------------
# element literals


def _split_top(text: str) -> list[str]:
    """Split on commas at bracket depth zero."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def element_index(ring: RingTable, literal: str) -> int:
    """Resolve a constructor-native element literal to its index.

    Canonical display names always resolve to their own index; residues may
    be written with any representative (e.g. "-1" in Z_6 is 5)."""
    lit = "".join(ch for ch in literal if not ch.isspace())
    name_map = ring.memo("name-map", lambda: {nm: i for i, nm in enumerate(ring.names)})
    if lit in name_map:
        return name_map[lit]
    prov = ring.provenance
    try:
        if isinstance(prov, ex.Cyclic):
            return int(lit) % ring.n
        if isinstance(prov, ex.Gaussian):
            n = prov.n
            body = lit[:-1] if lit.endswith("i") else None
            if body is None:
                return (int(lit) % n) * n  # bare residue means a+0i
            a_txt, _, b_txt = body.rpartition("+")
            if not a_txt:
                raise ValueError(lit)
            return (int(a_txt) % n) * n + int(b_txt) % n
        if isinstance(prov, (ex.Matrix, ex.Triangular)):
            base = ring._memo["entry-ring"]
            if not (lit.startswith("[") and lit.endswith("]")):
                raise ValueError(lit)
            parts = _split_top(lit[1:-1])
            s = base.n
            if isinstance(prov, ex.Matrix):
                if len(parts) != 4:
                    raise ValueError(lit)
                m00, m01, m10, m11 = (element_index(base, p) for p in parts)
                return ((m00 * s + m10) * s + m01) * s + m11
            if len(parts) == 4:
                a, b, z, d = (element_index(base, p) for p in parts)
                if z != base.zero:
                    raise ValueError(f"lower-left entry must be zero: {lit}")
            elif len(parts) == 3:
                a, b, d = (element_index(base, p) for p in parts)
            else:
                raise ValueError(lit)
            return (a * s + b) * s + d
        if isinstance(prov, ex.Product):
            bases = ring._memo["factor-rings"]
            if not (lit.startswith("(") and lit.endswith(")")):
                raise ValueError(lit)
            parts = _split_top(lit[1:-1])
            if len(parts) != len(bases):
                raise ValueError(lit)
            v = 0
            for b, p in zip(bases, parts):
                v = v * b.n + element_index(b, p)
            return v
        if isinstance(prov, ex.Quotient):
            base, proj = ring._memo["quotient_of"]
            inner = lit[:-2] if lit.endswith("+I") else lit
            return int(proj[element_index(base, inner)])
        if isinstance(prov, ex.Corner):
            base, embed = ring._memo["corner_of"]
            target = element_index(base, lit)
            pos = np.searchsorted(embed, target)
            if pos < embed.size and embed[pos] == target:
                return int(pos)
            raise ValueError(f"{lit} is not in the corner")
    except (ValueError, KeyError):
        pass
    raise ValueError(f"not an element literal of {ring.expr_str}: {literal!r}")
