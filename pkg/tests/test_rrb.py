import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import actions, small_groups
from rrbgroups import catalog
from rrbgroups.core import cyclic, direct_product, group_from_table, symmetric
from rrbgroups.errors import NotAnIdeal, NotExactFactorization, NotRotaBaxter, NotRRBHom, SearchBudgetExceeded
from rrbgroups.rrb import (
    adjoint_action,
    center,
    descendent_group,
    enumerate_rb_operators,
    from_exact_factorization,
    from_opposite,
    image,
    is_bijective,
    is_ideal,
    kernel,
    quotient,
    rota_baxter_group,
    rrb_hom,
    rrb_isomorphisms,
    rrb_new,
    trivial_rrb,
)

EXAMPLES = {
    "s3_exact": catalog.s3_exact_factorization(),
    "z6_exact": catalog.z6_exact_factorization(),
    "opposite_s3": catalog.opposite_s3(),
    "opposite_z5": catalog.opposite_cyclic(5),
    "hom_z4_z2": catalog.hom_operator(4, 2),
}


def _check(r):
    return oracles.rrb_axioms_hold(r.H.table, r.G.table, r.phi.perms, r.R.tolist())


@pytest.mark.parametrize("name", EXAMPLES)
def test_examples_satisfy_the_axioms(name):
    assert _check(EXAMPLES[name])


def test_exact_factorization_operator():
    r = catalog.s3_exact_factorization()
    S3 = r.H
    rot = [x for x in S3.elements() if S3.element_order(x) != 2]
    L = [S3.identity, catalog._perm_index((1, 0, 2))]
    for h, l in itertools.product(rot, L):
        assert r.r(S3.mul(h, l)) == S3.inv(l)
    assert r.R.tolist() == [0, 2, 2, 0, 0, 2]
    with pytest.raises(NotExactFactorization):
        from_exact_factorization(S3, rot, [S3.identity])
    with pytest.raises(NotExactFactorization):
        from_exact_factorization(S3, rot, rot)


def test_opposite_construction():
    r = from_opposite(symmetric(3))
    assert r.R.tolist() == list(range(6))
    assert is_bijective(r)
    for x, y in itertools.product(range(6), repeat=2):
        assert r.act(x, y) == r.H.prod(r.H.inv(x), y, x)


def test_descendent_group():
    for r in EXAMPLES.values():
        D = descendent_group(r)
        assert oracles.is_group(D.table.tolist())
        for x, y in itertools.product(r.H.elements(), repeat=2):
            assert r.r(D.mul(x, y)) == r.G.mul(r.r(x), r.r(y))
    # the opposite construction descends to x o y = y x
    r = EXAMPLES["opposite_s3"]
    D = r.descendent()
    assert all(D.mul(x, y) == r.H.mul(y, x) for x in range(6) for y in range(6))


def test_violation_witness():
    S3 = symmetric(3)
    with pytest.raises(NotRotaBaxter) as exc:
        rota_baxter_group(S3, [0, 1, 1, 1, 1, 1])
    h1, h2 = exc.value.witness
    R = [0, 1, 1, 1, 1, 1]
    P = adjoint_action(S3).perms
    assert S3.mul(R[h1], R[h2]) != R[S3.mul(h1, P[R[h1], h2])]
    with pytest.raises(NotRotaBaxter):
        trivial_rrb(cyclic(2), cyclic(2), [0, 5])


@pytest.mark.parametrize("G", small_groups(), ids=lambda g: g.label or str(g.order))
def test_rota_baxter_operators_match_exhaustive_search(G):
    P = adjoint_action(G).perms
    mine = [tuple(r.tolist()) for r in enumerate_rb_operators(G, G, P)]
    assert mine == sorted(mine)
    assert mine == oracles.rb_operators(G.table, G.table, P)


def test_relative_operators_with_nontrivial_actions():
    Z2, Z3, Z4 = cyclic(2), cyclic(3), cyclic(4)
    V = direct_product(Z2, Z2)
    cases = [(Z3, Z2), (Z4, Z2), (V, Z2), (V, Z3), (Z3, Z4), (symmetric(3), Z2)]
    total = 0
    for H, G in cases:
        for P in actions(H, G):
            mine = [tuple(r.tolist()) for r in enumerate_rb_operators(H, G, P)]
            assert mine == oracles.rb_operators(H.table, G.table, P)
            total += len(mine)
    assert total > 0


def test_rb_operator_counts():
    # adjoint action: Z/n has n operators, V4 has 16, S3 has 8
    counts = [len(enumerate_rb_operators(g, g, adjoint_action(g))) for g in small_groups()]
    assert counts == [1, 2, 3, 4, 16, 5, 6, 8]


def test_enumeration_budget():
    S3 = symmetric(3)
    with pytest.raises(SearchBudgetExceeded):
        enumerate_rb_operators(S3, S3, adjoint_action(S3), budget=3)


def test_quotient_by_ideal():
    r = catalog.hom_operator(4, 2)
    ok, bad = is_ideal(r, [0, 1, 2, 3], [0])
    assert not ok and bad == ["R(K) is not inside L"]
    q, proj = quotient(r, [0, 2], [0])
    assert (q.H.order, q.G.order) == (2, 2) and _check(q)
    q, proj = quotient(r, [0, 2], [0, 1])
    assert (q.H.order, q.G.order) == (2, 1) and _check(q)
    K, L = kernel(proj)
    assert sorted(K) == [0, 2] and sorted(L) == [0, 1]
    with pytest.raises(NotAnIdeal) as exc:
        quotient(r, [0, 1, 2, 3], [0])
    assert exc.value.witness


def test_ideal_reports_every_failure():
    r = catalog.opposite_s3()
    swap = next(x for x in range(6) if r.H.element_order(x) == 2)
    ok, bad = is_ideal(r, [0, swap], [0])
    assert not ok and len(bad) >= 3


def test_quotient_of_opposite_s3():
    r = catalog.opposite_s3()
    rot = [x for x in range(6) if r.H.element_order(x) != 2]
    ok, _ = is_ideal(r, rot, rot)
    assert ok
    q, proj = quotient(r, rot, rot)
    assert (q.H.order, q.G.order) == (2, 2)
    assert _check(q)


def test_center_properties():
    for r in EXAMPLES.values():
        left, kerphi = center(r)
        ident = list(r.H.elements())
        for k in left:
            assert all(r.H.mul(k, h) == r.H.mul(h, k) for h in r.H.elements())
            assert all(r.act(g, k) == k for g in r.G.elements())
            assert r.phi.perms[r.r(k)].tolist() == ident
        for g in kerphi:
            assert r.phi.perms[g].tolist() == ident
    left, kerphi = center(catalog.hom_operator(4, 2))
    assert left == [0, 1, 2, 3] and kerphi == [0, 1]


def test_homomorphisms_kernel_image():
    r = catalog.hom_operator(4, 2)
    t = trivial_rrb(cyclic(2), cyclic(2), [0, 1])
    h = rrb_hom(r, t, [0, 1, 0, 1], [0, 1])
    K, L = kernel(h)
    assert K == [0, 2] and L == [0]
    im = image(h)
    assert im.H.order == 2 and _check(im)
    with pytest.raises(NotRRBHom):
        rrb_hom(r, t, [0, 1, 0, 1], [0, 0])


def test_isomorphisms():
    a = catalog.s3_exact_factorization()
    isos = list(rrb_isomorphisms(a, a))
    assert any(np.array_equal(p, np.arange(6)) and np.array_equal(e, np.arange(6)) for p, e in isos)
    assert not list(rrb_isomorphisms(a, catalog.opposite_s3()))


@given(st.sampled_from(list(EXAMPLES.values())), st.randoms(use_true_random=False))
def test_relabelled_rrb_is_isomorphic(r, rnd):
    ph = list(range(r.H.order))
    rnd.shuffle(ph)
    pg = list(range(r.G.order))
    rnd.shuffle(pg)
    ph, pg = np.array(ph), np.array(pg)
    ih, ig = np.argsort(ph), np.argsort(pg)
    H = ph[r.H.table[ih][:, ih]]
    G = pg[r.G.table[ig][:, ig]]
    perms = ph[r.phi.perms[ig][:, ih]]
    R = pg[r.R[ih]]
    s = rrb_new(group_from_table(H), group_from_table(G), perms, R)
    assert rrb_hom(r, s, ph, pg) is not None
