import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import small_groups
from rrbgroups import catalog
from rrbgroups.braces import (
    BraceCocyclePair,
    brace_d1,
    brace_d2,
    brace_extension_cocycle,
    brace_extension_from_cocycle,
    brace_h2,
    brace_hom,
    brace_hom_from_rrb_hom,
    brace_isomorphic,
    brace_new,
    brace_spaces,
    good_triplet_verify,
    induced_brace,
    lambda_map,
    rrb_from_brace,
    triplet_from_extension,
    trivial_brace,
    trivial_triplet,
    ybe_check,
    ybe_solution,
)
from rrbgroups.core import cyclic, direct_product, symmetric
from rrbgroups.errors import NotABrace, NotGoodTriplet, NotRRBHom, SolutionCheckFailed
from rrbgroups.rrb import adjoint_action, enumerate_rb_operators, rota_baxter_group, rrb_hom, trivial_rrb


def all_rb_braces():
    for G in small_groups():
        for R in enumerate_rb_operators(G, G, adjoint_action(G)):
            yield induced_brace(rota_baxter_group(G, R))


BRACES = list(all_rb_braces())


def test_every_operator_gives_a_brace():
    assert len(BRACES) == 1 + 2 + 3 + 4 + 16 + 5 + 6 + 8
    for b in BRACES:
        assert oracles.brace_axioms_hold(b.dot.table, b.circ.table)


def test_z4_brace_and_misprinted_formula():
    b = catalog.z4_brace()
    assert not b.is_trivial()
    assert oracles.brace_axioms_hold(b.dot.table, b.circ.table)
    # the misprinted rule x o y = x + x + 2xy is not even a group law
    with pytest.raises(NotABrace):
        brace_new(cyclic(4), [[(2 * x + 2 * x * y) % 4 for y in range(4)] for x in range(4)])


def test_rejects_non_braces():
    Z6, S3 = cyclic(6), symmetric(3)
    with pytest.raises(NotABrace):
        brace_new(Z6, S3)
    assert not oracles.brace_axioms_hold(Z6.table, S3.table)
    # additive Z/4 with multiplicative Klein group does form a brace
    V = direct_product(cyclic(2), cyclic(2))
    assert oracles.brace_axioms_hold(cyclic(4).table, V.table)
    assert not brace_new(cyclic(4), V).is_trivial()


@pytest.mark.parametrize("b", BRACES[:12] + BRACES[-8:], ids=lambda b: f"{b.order}")
def test_lambda_is_an_action_by_automorphisms(b):
    lam = lambda_map(b).perms
    for x, y in itertools.product(range(b.order), repeat=2):
        assert np.array_equal(lam[b.circ.mul(x, y)], lam[x][lam[y]])
        assert lam[x, y] == b.dot.mul(b.dot.inv(x), b.circ.mul(x, y))


def test_ybe_on_every_rb_brace():
    for b in BRACES:
        sol = ybe_solution(b)
        assert oracles.ybe_holds(sol.left, sol.right)


def test_ybe_check_catches_failures():
    n = 3
    left = np.array([[(x + y) % n for y in range(n)] for x in range(n)])
    right = np.zeros((n, n), dtype=int)
    assert ybe_check(left, right) is not None
    assert not oracles.ybe_holds(left, right)
    flip_l = np.array([[y for y in range(n)] for x in range(n)])
    flip_r = np.array([[x for y in range(n)] for x in range(n)])
    assert ybe_check(flip_l, flip_r) is None
    assert oracles.ybe_holds(flip_l, flip_r)
    with pytest.raises(SolutionCheckFailed):
        raise SolutionCheckFailed(ybe_check(left, right))


def test_trivial_brace_solution_is_the_flip():
    b = trivial_brace(cyclic(5))
    sol = ybe_solution(b)
    assert sol.left.tolist() == [list(range(5))] * 5


def test_brace_round_trip_through_rrb():
    for b in BRACES[::5]:
        r = rrb_from_brace(b)
        b2 = induced_brace(r)
        assert np.array_equal(b2.dot.table, b.dot.table) and np.array_equal(b2.circ.table, b.circ.table)


def test_brace_homs():
    r = catalog.hom_operator(4, 2)
    t = trivial_rrb(cyclic(2), cyclic(2), [0, 1])
    h = brace_hom_from_rrb_hom(rrb_hom(r, t, [0, 1, 0, 1], [0, 1]))
    assert h.image.tolist() == [0, 1, 0, 1]
    with pytest.raises(NotRRBHom):
        brace_hom(catalog.z4_brace(), trivial_brace(cyclic(2)), [0, 0, 0, 1])
    assert brace_isomorphic(catalog.z4_brace(), catalog.z4_brace())
    assert not brace_isomorphic(catalog.z4_brace(), trivial_brace(cyclic(4)))


def test_good_triplet_validation():
    M = catalog.z4_brace()
    I = cyclic(3)
    t = trivial_triplet(M, I)
    assert t.xi.is_trivial()
    inv = [[0, 1, 2], [0, 2, 1], [0, 1, 2], [0, 2, 1]]
    ident = [[0, 1, 2]] * 4
    # eps alone inverting breaks the compatibility identities
    with pytest.raises(NotGoodTriplet):
        good_triplet_verify(M, I, ident, ident, inv)
    # all three equal to the parity action is fine
    t = good_triplet_verify(M, I, inv, inv, inv)
    assert not t.eps.is_trivial()


def _triplets():
    Z2, Z3 = cyclic(2), cyclic(3)
    inv = [[0, 1, 2], [0, 2, 1]]
    out = {
        "z2_on_z4": trivial_triplet(trivial_brace(Z2), cyclic(4)),
        "z2_on_v4": trivial_triplet(trivial_brace(Z2), direct_product(Z2, Z2)),
        "z3_on_z2": trivial_triplet(trivial_brace(Z3), Z2),
        "z3_on_z3": trivial_triplet(trivial_brace(Z3), Z3),
        "z2_inverting_z3": good_triplet_verify(trivial_brace(Z2), Z3, inv, inv, inv),
        "z2_half_inverting_z3": good_triplet_verify(trivial_brace(Z2), Z3, [[0, 1, 2]] * 2, inv, inv),
    }
    small = set(out)
    M = catalog.z4_brace()
    parity = [[0, 1, 2], [0, 2, 1], [0, 1, 2], [0, 2, 1]]
    out["z4_on_z2"] = trivial_triplet(M, Z2)
    out["z4_parity_z3"] = good_triplet_verify(M, Z3, parity, parity, parity)
    out["s3_exact_on_z2"] = trivial_triplet(induced_brace(catalog.s3_exact_factorization()), Z2)
    return out, small


TRIPLETS, SMALL = _triplets()


@pytest.mark.parametrize("name", sorted(SMALL))
def test_brace_h2_against_extension_count(name):
    t = TRIPLETS[name]
    res = brace_h2(t, "both")
    ncoc, nclasses = oracles.brace_h2_order(t)
    assert res.order == nclasses
    assert ncoc % res.order == 0


def test_brace_h2_values():
    assert brace_h2(TRIPLETS["z3_on_z3"]).factors == [3, 3]
    assert brace_h2(TRIPLETS["z2_on_v4"]).order == 16
    assert brace_h2(TRIPLETS["z2_inverting_z3"]).order == 1


@pytest.mark.parametrize("name", TRIPLETS)
def test_brace_coboundaries_are_cocycles(name):
    t = TRIPLETS[name]
    c1, c2, c3 = brace_spaces(t)
    rng = np.random.default_rng(1)
    for _ in range(10):
        (theta,) = c1.from_vector(c1.random_vector(rng))
        g, f = brace_d1(t, theta)
        assert c3.is_zero(brace_d2(t, g, f))


def test_brace_extension_round_trip():
    for t in TRIPLETS.values():
        res = brace_h2(t)
        for c in res.quotient.all_classes():
            pair = res.representative(c)
            e = brace_extension_from_cocycle(t, pair)
            assert oracles.brace_axioms_hold(e.total.dot.table, e.total.circ.table)
            back = brace_extension_cocycle(e)
            assert np.array_equal(back.g, pair.g) and np.array_equal(back.f, pair.f)
            assert res.class_of(back) == tuple(c)
            t2 = triplet_from_extension(e)
            for a, b in ((t.xi, t2.xi), (t.zeta, t2.zeta), (t.eps, t2.eps)):
                assert np.array_equal(a.perms, b.perms)


@given(st.data())
def test_sections_change_cocycle_by_coboundary(data):
    t = TRIPLETS["z4_on_z2"]
    res = brace_h2(t)
    c = data.draw(st.sampled_from(list(res.quotient.all_classes())))
    e = brace_extension_from_cocycle(t, res.representative(c))
    k = t.I.order
    s = [m * k + (0 if m == t.brace.identity else data.draw(st.integers(0, k - 1))) for m in range(t.brace.order)]
    p1, p2 = brace_extension_cocycle(e), brace_extension_cocycle(e, s)
    assert res.class_of(p1) == res.class_of(p2)


def test_non_cocycle_does_not_give_a_brace():
    t = TRIPLETS["z3_on_z2"]
    c2 = brace_spaces(t)[1]
    bad = [v for v in c2.iter_vectors()
           if not brace_spaces(t)[2].is_zero(brace_d2(t, *c2.from_vector(v)))]
    assert bad
    g, f = c2.from_vector(bad[0])
    with pytest.raises(NotABrace):
        brace_extension_from_cocycle(t, BraceCocyclePair(g, f))
