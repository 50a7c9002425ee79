"""Ideal predicates: square stability (three routes), stable range one,
exchange, regular, reduced, nil, abelian; plus the family-level laws the
corpus must exhibit."""

import pytest

import finring as fr
from finring.errors import NotCommutative, SizeExceeded
from finring.structure import full_ideal, zero_ideal


def members(ring, ideal):
    return [ring.names[m] for m in ideal.members]


# --- square stability ------------------------------------------------------


def test_square_stable_zero_ideal_always(corpus_rings):
    for ring in corpus_rings:
        assert fr.square_stable_fast(ring, zero_ideal(ring)).holds
        assert fr.square_stable_def(ring, zero_ideal(ring)).holds


def test_square_stable_z6_full(z6):
    assert fr.square_stable_def(z6, full_ideal(z6)).holds
    assert fr.square_stable_fast(z6, full_ideal(z6)).holds


def test_square_stable_z4_radical(z4):
    assert fr.square_stable_fast(z4, fr.jacobson_radical(z4)).holds


def test_square_stable_matrix_ring_counterexamples(m2z2):
    full = full_ideal(m2z2)
    fast = fr.square_stable_fast(m2z2, full)
    assert not fast.holds
    assert {k: m2z2.names[v] for k, v in fast.counterexample.items()} == {
        "a": "[0,1,0,0]",   # e12
        "r": "[0,0,1,0]",   # e21
    }
    by_def = fr.square_stable_def(m2z2, full)
    assert not by_def.holds
    assert {k: m2z2.names[v] for k, v in by_def.counterexample.items()} == {
        "a": "[0,1,0,0]",   # e12
        "b": "[0,0,0,1]",   # 1 - e12*e21 = e22
    }


def test_square_stable_trivial(trivial):
    assert fr.square_stable_fast(trivial, full_ideal(trivial)).holds
    assert fr.square_stable_matrix(trivial, full_ideal(trivial)).holds


def test_square_stable_matrix_procedure(z4, z6):
    assert fr.square_stable_matrix(z6, full_ideal(z6)).holds
    assert fr.square_stable_matrix(z4, fr.jacobson_radical(z4)).holds


def test_square_stable_matrix_rejects_noncommutative(m2z2):
    with pytest.raises(NotCommutative):
        fr.square_stable_matrix(m2z2, full_ideal(m2z2))


def test_square_stable_matrix_size_guard():
    z12 = fr.make_cyclic(12)
    with pytest.raises(SizeExceeded):  # 12^4 = 20736 > 4096
        fr.square_stable_matrix(z12, full_ideal(z12))


def test_ring_square_stable_range_one(z4, m2z2):
    assert fr.ring_square_stable_range_one(z4).holds
    assert not fr.ring_square_stable_range_one(m2z2).holds
    z3i = fr.make_gaussian(3)
    assert fr.ring_square_stable_range_one(z3i).holds


# --- stable range one ------------------------------------------------------


def test_stable_range_one(z6, m2z2, corpus_rings):
    assert fr.stable_range_one(m2z2, full_ideal(m2z2)).holds
    assert fr.stable_range_one(z6, fr.ideal_generated_by(z6, [2])).holds
    for ring in corpus_rings:
        assert fr.stable_range_one(ring, zero_ideal(ring)).holds


# --- exchange --------------------------------------------------------------


def test_exchange_instances(z4, m2z2, corpus_rings):
    assert fr.exchange_ideal(z4, fr.jacobson_radical(z4)).holds
    assert fr.exchange_ideal(m2z2, full_ideal(m2z2)).holds
    for ring in corpus_rings:
        assert fr.exchange_ideal(ring, zero_ideal(ring)).holds


def test_every_corpus_ideal_is_exchange(corpus_rings):
    # finite rings are exchange rings; asserted, not assumed
    for ring in corpus_rings:
        for ideal in fr.all_ideals(ring):
            res = fr.exchange_ideal(ring, ideal)
            assert res.holds, (ring.expr_str, ideal.members)
            assert res.fault is None


# --- regular / reduced / nil ----------------------------------------------


def test_regular_reduced_facts(z4, z6, m2z2):
    full = full_ideal(m2z2)
    assert fr.regular_ideal(m2z2, full).holds
    red = fr.reduced_ideal(m2z2, full)
    assert not red.holds
    assert m2z2.names[red.counterexample["x"]] == "[0,1,0,0]"  # e12 squares to 0

    rad = fr.jacobson_radical(z4)
    reg = fr.regular_ideal(z4, rad)
    assert not reg.holds and reg.counterexample["a"] == 2
    assert not fr.reduced_ideal(z4, rad).holds

    assert fr.regular_ideal(z6, full_ideal(z6)).holds
    assert fr.reduced_ideal(z6, full_ideal(z6)).holds


def test_nil_ideal(z4, t2z2):
    assert fr.nil_ideal(z4, fr.jacobson_radical(z4)).holds
    assert fr.nil_ideal(t2z2, fr.jacobson_radical(t2z2)).holds
    assert not fr.nil_ideal(z4, full_ideal(z4)).holds


def test_nil_ideals_are_square_stable_exchange(corpus_rings):
    seen = 0
    for ring in corpus_rings:
        for ideal in fr.all_ideals(ring):
            if fr.nil_ideal(ring, ideal).holds:
                seen += 1
                assert fr.square_stable_fast(ring, ideal).holds
                assert fr.exchange_ideal(ring, ideal).holds
    assert seen > len(corpus_rings)  # zero ideals qualify everywhere, and more


# --- abelian ---------------------------------------------------------------


def test_abelian_rings(z6, m2z2, t2z2):
    for n in range(1, 8):
        assert fr.abelian_ring(fr.make_cyclic(n)).holds
    res = fr.abelian_ring(m2z2)
    assert not res.holds
    assert not fr.abelian_ring(t2z2).holds


def test_abelian_implies_all_ideals_square_stable(corpus_rings):
    for ring in corpus_rings:
        if fr.abelian_ring(ring).holds:
            for ideal in fr.all_ideals(ring):
                assert fr.square_stable_fast(ring, ideal).holds, ring.expr_str


# --- cross-procedure agreement and the radical family ----------------------


def test_dual_square_stability_procedures_agree(corpus_rings):
    for ring in corpus_rings:
        for ideal in fr.all_ideals(ring):
            assert (
                fr.square_stable_fast(ring, ideal).holds
                == fr.square_stable_def(ring, ideal).holds
            ), (ring.expr_str, ideal.members)


def test_radical_contained_ideals_square_stable_exchange(corpus_rings):
    for ring in corpus_rings:
        jmask = fr.jacobson_radical(ring).mask
        for ideal in fr.all_ideals(ring):
            if all(jmask[m] for m in ideal.members):
                assert fr.square_stable_fast(ring, ideal).holds
                assert fr.exchange_ideal(ring, ideal).holds


def test_predicate_counterexamples_revalidate(m2z2, z4):
    # fast: (a, r) really admits no x
    res = fr.square_stable_fast(m2z2, full_ideal(m2z2))
    a, r = res.counterexample["a"], res.counterexample["r"]
    un = fr.units_mask(m2z2)
    a2 = m2z2.mul[a, a]
    c = fr.structure.one_minus(m2z2)[m2z2.mul[a, r]]
    assert not any(un[m2z2.add[a2, m2z2.mul[c, x]]] for x in range(m2z2.n))
    # def: (a, b) is comaximal yet admits no y
    res = fr.square_stable_def(m2z2, full_ideal(m2z2))
    a, b = res.counterexample["a"], res.counterexample["b"]
    assert fr.is_comaximal(m2z2, a, b)
    assert not any(un[m2z2.add[a2, m2z2.mul[b, y]]] for y in range(m2z2.n))
