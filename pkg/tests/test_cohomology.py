import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import actions, module_zoo
from rrbgroups import catalog
from rrbgroups.cohomology import (
    RRBCochain1,
    RRBModule,
    _derivations,
    c0_fixed_set,
    cochain2_from_vector,
    d0,
    d1,
    d1_central,
    d2,
    d2_central,
    enumerate_modules,
    group_d1,
    group_d2,
    h0,
    h1,
    h2,
    h2_central,
    is_central,
    module_new,
    module_violation,
    random_cocycle,
    spaces,
    trivial_module,
)
from rrbgroups.core import GroupAction, aut_as_group, cyclic, homomorphisms, opposite
from rrbgroups.errors import NotAModule, NotCentralModule, NotInC0
from rrbgroups.rrb import enumerate_rb_operators, rrb_new, trivial_rrb

ZOO = module_zoo()
SMALL = [k for k, m in ZOO.items() if spaces(m)[1].size <= 6000]


def _random_cochain1(m, rng):
    c1 = spaces(m)[0]
    return RRBCochain1(*c1.from_vector(c1.random_vector(rng)))


@pytest.mark.parametrize("name", ZOO)
def test_zoo_modules_are_modules(name):
    assert module_violation(ZOO[name]) is None


@pytest.mark.parametrize("name", ZOO)
def test_coboundary_squares_to_zero(name):
    m = ZOO[name]
    rng = np.random.default_rng(7)
    for _ in range(15):
        assert d2(m, d1(m, _random_cochain1(m, rng))).is_zero(m)
    c1 = spaces(m)[0]
    for k, l in c0_fixed_set(m):
        assert c1.is_zero(d1(m, d0(m, k, l)).parts())


@given(st.sampled_from(sorted(ZOO)), st.integers(0, 2**32 - 1))
def test_coboundary_squares_to_zero_property(name, seed):
    m = ZOO[name]
    rng = np.random.default_rng(seed)
    assert d2(m, d1(m, _random_cochain1(m, rng))).is_zero(m)


def test_d0_outside_fixed_set():
    m = catalog.z3_inversion_module()
    assert (1, 0) not in c0_fixed_set(m)
    with pytest.raises(NotInC0):
        d0(m, 1, 0)


def test_group_coboundaries_square_to_zero():
    # right action of Z/2 on Z/3 by inversion
    X, M = cyclic(2), cyclic(3)
    act = np.array([[0, 1, 2], [0, 2, 1]])
    for theta in itertools.product(range(3), repeat=2):
        th = np.array((0,) + theta[1:])
        tau = group_d1(X, M, act, th)
        assert not group_d2(X, M, act, tau).any()


@pytest.mark.parametrize("name", SMALL)
def test_h2_snf_matches_enumeration(name):
    res = h2(ZOO[name], "both")
    assert res.order == int(np.prod(res.factors))
    for rep in res.representatives:
        assert d2(ZOO[name], rep).is_zero(ZOO[name])


@pytest.mark.parametrize("name", SMALL)
def test_h1_snf_matches_enumeration(name):
    res = h1(ZOO[name], "both")
    for rep in res.representatives:
        assert d2(ZOO[name], d1(ZOO[name], rep)).is_zero(ZOO[name])
        assert spaces(ZOO[name])[1].is_zero(d1(ZOO[name], rep).parts())


def test_known_values():
    got = {k: h2(m).factors for k, m in catalog.example_modules().items()}
    assert got == {"z2_trivial": [2, 2], "z2_bilinear": [2, 2], "z3_inversion": [], "z3_mu": [],
                   "klein_swap": [2]}


@pytest.mark.parametrize("nB,nL", [(2, 2), (3, 3), (2, 4), (4, 2), (4, 4), (3, 2)])
def test_degenerate_base_gives_classical_cohomology(nB, nL):
    m = catalog.degenerate_module(nB, nL)
    assert h2(m).factors == oracles.classical_h2_cyclic(nB, nL)


def test_h0():
    m = catalog.z2_trivial_module()
    assert h0(m).order == 4
    m = catalog.z3_inversion_module()
    assert h0(m).order == 1


def test_class_of_is_additive():
    for name in SMALL:
        m = ZOO[name]
        res = h2(m)
        c2 = spaces(m)[1]
        rng = np.random.default_rng(3)
        for _ in range(5):
            z1, z2 = random_cocycle(m, rng), random_cocycle(m, rng)
            s = c2.add(z1.parts(), z2.parts())
            want = tuple((a + b) % d for a, b, d in zip(res.class_of(z1), res.class_of(z2), res.factors))
            assert res.class_of(cochain2_from_vector(m, c2.to_vector(s))) == want


def test_coboundaries_have_trivial_class():
    for name in SMALL:
        m = ZOO[name]
        res = h2(m)
        rng = np.random.default_rng(5)
        for _ in range(5):
            assert not any(res.class_of(d1(m, _random_cochain1(m, rng))))


def test_central_variant():
    m = catalog.z2_trivial_module()
    assert is_central(m)
    assert h2_central(m, "both").factors == h2(m).factors
    rng = np.random.default_rng(0)
    for _ in range(10):
        c = _random_cochain1(m, rng)
        assert d2_central(m, d1_central(m, c)).is_zero(m)
    with pytest.raises(NotCentralModule):
        h2_central(catalog.z3_inversion_module())


def _bad(m, **changes):
    parts = dict(nu=m.nu.perms, mu=m.mu.perms, sigma=m.sigma.perms, f=m.f)
    parts.update(changes)
    return RRBModule(m.base, m.coeff,
                     GroupAction(m.B, m.K, np.asarray(parts["nu"]), "hom"),
                     GroupAction(m.A, m.K, np.asarray(parts["mu"]), "anti"),
                     GroupAction(m.B, m.L, np.asarray(parts["sigma"]), "anti"),
                     np.asarray(parts["f"]))


def test_module_conditions_are_reported_by_number():
    m = catalog.z3_inversion_module()
    assert module_violation(_bad(m, mu=[[0, 1, 2], [0, 1, 1]]))[0] == 1
    assert module_violation(_bad(m, sigma=[[0, 1, 2], [0, 1, 1]]))[0] == 2
    assert module_violation(_bad(m, f=[[0, 0], [0, 1], [0, 1]]))[0] == 3
    # S = id forces sigma to follow mu
    assert module_violation(_bad(m, sigma=[[0, 1, 2], [0, 1, 2]]))[0] == 4
    with pytest.raises(NotAModule) as exc:
        module_new(m.base, m.coeff, m.nu.perms, m.mu.perms, [[0, 1, 2], [0, 1, 2]], m.f)
    assert exc.value.witness[0] == 4
    # a non-abelian coefficient group is refused up front
    S3 = catalog.s3_exact_factorization().H
    with pytest.raises(NotAModule):
        trivial_module(catalog.base_z2(), trivial_rrb(S3, cyclic(1), [0] * 6))


def _only_condition_six_fails():
    """Quadruples over A = Z/3, B = Z/2 (inverting), K = L = Z/3, S = 0 passing 1-5 but not 6."""
    Z2, Z3 = cyclic(2), cyclic(3)
    inv = actions(Z3, Z2)[1]
    base = rrb_new(Z3, Z2, inv, enumerate_rb_operators(Z3, Z2, inv)[0])
    coeff = trivial_rrb(Z3, Z3, [0, 0, 0])
    autK, pK = aut_as_group(Z3)
    out = []
    nus = [np.array([pK[i] for i in h]) for h in homomorphisms(Z2, autK)]
    mus = [np.array([pK[i] for i in h]) for h in homomorphisms(opposite(Z3), autK)]
    sigmas = [np.array([pK[i] for i in h]) for h in homomorphisms(opposite(Z2), autK)]
    for mu in mus:
        for f in _derivations(Z3, Z3, Z3, mu, 10**6):
            for nu, sg in itertools.product(nus, sigmas):
                m = RRBModule(base, coeff, GroupAction(Z2, Z3, nu, "hom"), GroupAction(Z3, Z3, mu, "anti"),
                              GroupAction(Z2, Z3, sg, "anti"), f)
                # conditions are checked in order, so a 6 means 1-5 held
                v = module_violation(m)
                if v is not None and v[0] == 6:
                    out.append(m)
    return out


def test_condition_six_is_needed_for_the_semidirect_product():
    bad = _only_condition_six_fails()
    assert bad
    empty = {"tau1": {}, "tau2": {}, "rho": {}, "chi": {}}
    for m in bad:
        raw = oracles.RawModule(m)
        assert not oracles.rrb_axioms_hold(*raw.total(empty))


def _key(m):
    return (m.nu.perms.tobytes(), m.mu.perms.tobytes(), m.sigma.perms.tobytes(), np.asarray(m.f).tobytes())


@pytest.mark.parametrize("n", [2, 3])
def test_enumerate_modules_is_exhaustive(n):
    base = catalog.base_z2()
    coeff = trivial_rrb(cyclic(n), cyclic(n), list(range(n)))
    A, B, K = base.H, base.G, coeff.H
    autK, pK = aut_as_group(K)
    acts = lambda X: [np.array([pK[i] for i in h]) for h in homomorphisms(X, autK)]
    want = set()
    for nu, mu, sg in itertools.product(acts(B), acts(opposite(A)), acts(opposite(B))):
        for vals in itertools.product(range(n), repeat=A.order * n):
            f = np.array(vals, dtype=np.int64).reshape(n, A.order)
            m = RRBModule(base, coeff, GroupAction(B, K, nu, "hom"), GroupAction(A, K, mu, "anti"),
                          GroupAction(B, K, sg, "anti"), f)
            if module_violation(m) is None:
                want.add(_key(m))
    got = enumerate_modules(base, coeff)
    assert all(module_violation(m) is None for m in got)
    assert {_key(m) for m in got} == want
