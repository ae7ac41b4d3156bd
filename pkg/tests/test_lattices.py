"""Even lattices: discriminant groups, roots, orbits, overlattices."""

from fractions import Fraction
import random

import pytest

from epw.lattices import (
    EvenLattice,
    hyperbolic_plane, rank_one, e8_minus, direct_sum,
    lambda_tilde, lambda_lattice, gamma_tilde, gamma_lattice,
    phi_tilde, phi_lattice, orth_complement,
    disc_group, divisibility_and_star, is_root, is_root_by_divisibility,
    eichler_equivalent, classify_negative_root, reflection, iota_swap,
    overlattices, sublattice_index_and_discr, disc_autos_preserving_q,
    is_isometry, induced_disc_action,
    S2_STAR, S2_PRIME, S2_DPRIME, S4,
)


def unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


# -- building blocks ----------------------------------------------------------

def test_e8_minus_is_even_unimodular_negative():
    l = e8_minus()
    assert l.det() == 1
    assert l.signature() == (0, 8)
    assert all(l.gram[i][i] % 2 == 0 for i in range(8))


def test_lambda_tilde_invariants():
    lt = lambda_tilde()
    assert lt.rank == 23
    assert lt.det() == 2
    assert lt.signature() == (3, 20)
    assert lt.square(lt.vector("v1")) == 2
    assert lt.square(lt.vector("e1")) == -2
    assert lt.square(lt.vector("e2")) == -2
    assert lt.square(lt.vector("e3")) == -2
    assert lt.square(lt.vector("v3")) == 2
    assert lt.pair(lt.vector("v1"), lt.vector("e1")) == 0


def test_odd_diagonal_rejected():
    with pytest.raises(ValueError):
        EvenLattice([[1]])


# -- discriminant groups ---------------------------------------------------------

def test_disc_group_unimodular_trivial():
    d = disc_group(e8_minus())
    assert d.invariants == []
    assert d.order == 1


def test_disc_group_lambda_tuttosudi():
    lam = lambda_lattice()
    assert lam.rank == 22
    d = disc_group(lam)
    assert d.invariants == [2, 2]
    _, e1s = divisibility_and_star(lam.vector("e1"), lam, d)
    _, e2s = divisibility_and_star(lam.vector("e2"), lam, d)
    assert e1s != d.zero() and e2s != d.zero() and e1s != e2s
    # q-values mod 2Z: -1/2, -1/2, -1
    assert d.q_value(e1s) == Fraction(3, 2)
    assert d.q_value(e2s) == Fraction(3, 2)
    assert d.q_value(d.add(e1s, e2s)) == 1


def test_disc_group_gamma_tilde():
    gt = gamma_tilde()
    assert gt.rank == 22
    assert gt.det() == -4
    d = disc_group(gt)
    assert d.invariants == [2, 2]
    vals = sorted(d.q_value(e) for e in d.elements() if e != d.zero())
    assert vals == [0, Fraction(1, 2), Fraction(3, 2)]


def test_disc_order_equals_det():
    for build in (lambda_tilde, lambda_lattice, gamma_tilde, gamma_lattice):
        l = build()
        assert disc_group(l).order == abs(l.det())


# -- divisibility -----------------------------------------------------------------

def test_divisibility_examples():
    lam = lambda_lattice()
    assert divisibility_and_star(lam.vector("e1"), lam)[0] == 2
    assert divisibility_and_star(lam.vector("e2"), lam)[0] == 2
    lt = lambda_tilde()
    assert divisibility_and_star(lt.vector("e1"), lt)[0] == 1
    assert divisibility_and_star(lt.vector("e2"), lt)[0] == 2


def test_divisibility_hyperbolic_sum():
    lt = lambda_tilde()
    v = [0] * 23
    v[0] = v[1] = 1  # u + u' of square 2
    assert lt.square(v) == 2
    d, star = divisibility_and_star(v, lt)
    assert d == 1
    assert star == disc_group(lt).zero()


def test_divisibility_rejects_non_primitive():
    lt = lambda_tilde()
    with pytest.raises(ValueError):
        divisibility_and_star([2] + [0] * 22, lt)


# -- roots -------------------------------------------------------------------------

def test_square_pm2_always_root():
    lt = lambda_tilde()
    assert is_root(lt.vector("v1"), lt)
    assert is_root(lt.vector("e1"), lt)


def test_e1_plus_e2_is_minus4_root():
    lam = lambda_lattice()
    v = [a + b for a, b in zip(lam.vector("e1"), lam.vector("e2"))]
    assert lam.square(v) == -4
    assert is_root(v, lam)


def test_u_minus_2uprime_not_root():
    lt = lambda_tilde()
    v = [0] * 23
    v[0], v[1] = 1, -2
    assert lt.square(v) == -4
    assert not is_root(v, lt)


def test_root_tests_agree():
    rng = random.Random(5)
    lam = lambda_lattice()
    tested = 0
    while tested < 60:
        v = [rng.randint(-2, 2) for _ in range(22)]
        if not any(v):
            continue
        from math import gcd
        g = 0
        for x in v:
            g = gcd(g, x)
        if g != 1:
            continue
        if lam.square(v) == 0 or lam.square(v) % 2:
            continue
        assert is_root(v, lam) == is_root_by_divisibility(v, lam)
        tested += 1


# -- reflections and the swap involution ----------------------------------------------

def test_reflection_integral_involutive_stable():
    lt = lambda_tilde()
    m, stable = reflection(lt.vector("v1"), lt)
    assert stable
    n = lt.rank
    sq = [[sum(m[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    assert sq == [[int(i == j) for j in range(n)] for i in range(n)]
    assert is_isometry(m, lt)
    img = [sum(lt.vector("v1")[i] * m[i][j] for i in range(n)) for j in range(n)]
    assert img == [-x for x in lt.vector("v1")]


def test_reflection_requires_square_two():
    lt = lambda_tilde()
    with pytest.raises(ValueError):
        reflection(lt.vector("e1"), lt)


def test_iota_swaps_and_is_not_stable():
    lam = lambda_lattice()
    m, stable = iota_swap(lam)
    assert not stable
    assert is_isometry(m, lam)
    n = lam.rank
    e1, e2 = lam.vector("e1"), lam.vector("e2")
    img1 = [sum(e1[i] * m[i][j] for i in range(n)) for j in range(n)]
    assert img1 == e2
    sq = [[sum(m[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    assert sq == [[int(i == j) for j in range(n)] for i in range(n)]


def test_disc_auto_group_has_order_two():
    lam = lambda_lattice()
    d = disc_group(lam)
    autos = disc_autos_preserving_q(d)
    assert len(autos) == 2
    # iota realizes the nontrivial one; reflections realize the identity
    m, _ = iota_swap(lam)
    act = induced_disc_action(m, lam, d)
    assert any(act[k] != k for k in act)


# -- Eichler criterion ------------------------------------------------------------------

def test_eichler_two_square2_vectors_in_different_u_summands():
    lt = lambda_tilde()
    v = [0] * 23
    v[0] = v[1] = 1
    w = [0] * 23
    w[2] = w[3] = 1
    assert eichler_equivalent(v, w, lt)


def test_eichler_e1_vs_e2_in_lambda():
    lam = lambda_lattice()
    assert not eichler_equivalent(lam.vector("e1"), lam.vector("e2"), lam)


def test_eichler_reflexive():
    lam = lambda_lattice()
    assert eichler_equivalent(lam.vector("e3"), lam.vector("e3"), lam)


def test_eichler_requires_certificate():
    gam = gamma_lattice()
    assert len(gam.u2_pairs) < 2
    with pytest.raises(ValueError):
        eichler_equivalent(unit(21, 0), unit(21, 0), gam)


def test_eichler_equivalence_relation_on_sample():
    rng = random.Random(11)
    lam = lambda_lattice()
    d = disc_group(lam)
    sample = []
    while len(sample) < 12:
        v = [rng.randint(-1, 1) for _ in range(22)]
        if not any(v) or not lam.is_primitive(v):
            continue
        sample.append(v)
    rel = {}
    for i, v in enumerate(sample):
        for j, w in enumerate(sample):
            rel[i, j] = eichler_equivalent(v, w, lam)
    for i in range(len(sample)):
        assert rel[i, i]
        for j in range(len(sample)):
            assert rel[i, j] == rel[j, i]
            for k in range(len(sample)):
                if rel[i, j] and rel[j, k]:
                    assert rel[i, k]


# -- the four orbit tags --------------------------------------------------------------------

def test_classify_named_roots():
    lam = lambda_lattice()
    assert classify_negative_root(lam.vector("e3"), lam) == S2_STAR
    assert classify_negative_root(lam.vector("e1"), lam) == S2_PRIME
    assert classify_negative_root(lam.vector("e2"), lam) == S2_DPRIME
    v = [a + b for a, b in zip(lam.vector("e1"), lam.vector("e2"))]
    assert classify_negative_root(v, lam) == S4


def test_classify_sampled_roots_exhaustive():
    """Every sampled negative root of square -2 or -4 lands in exactly one
    of the four orbits."""
    rng = random.Random(71)
    lam = lambda_lattice()
    d = disc_group(lam)
    seen = set()
    found = 0
    while found < 120:
        v = [0] * 22
        for _ in range(rng.randint(1, 4)):
            v[rng.randrange(22)] = rng.randint(-2, 2)
        if not any(v) or not lam.is_primitive(v):
            continue
        sq = lam.square(v)
        if sq not in (-2, -4):
            continue
        if not is_root(v, lam):
            continue
        tag = classify_negative_root(v, lam, d)
        seen.add(tag)
        found += 1
    assert seen >= {S2_STAR, S2_DPRIME}
    # make sure all four tags actually occur: add the named representatives
    for v, tag in [
        (lam.vector("e1"), S2_PRIME),
        (lam.vector("e2"), S2_DPRIME),
        (lam.vector("e3"), S2_STAR),
        ([a + b for a, b in zip(lam.vector("e1"), lam.vector("e2"))], S4),
    ]:
        assert classify_negative_root(v, lam, d) == tag
        seen.add(tag)
    assert seen == {S2_STAR, S2_PRIME, S2_DPRIME, S4}


def test_classify_rejects_positive_root():
    lam = lambda_lattice()
    v3 = lam.vector("v3")
    with pytest.raises(ValueError):
        classify_negative_root(v3, lam)


# -- overlattices ---------------------------------------------------------------------------

def test_gamma_tilde_unique_overlattice_is_k3():
    gt = gamma_tilde()
    ovs = overlattices(gt)
    assert len(ovs) == 1
    ov = ovs[0]
    assert ov.index == 2
    k3 = ov.lattice
    assert k3.rank == 22
    assert abs(k3.det()) == 1
    assert k3.signature() == (3, 19)
    assert all(k3.gram[i][i] % 2 == 0 for i in range(22))


def test_unimodular_has_no_overlattices():
    assert overlattices(e8_minus()) == []


def test_minus2_minus2_no_isotropic():
    l = direct_sum(rank_one(-2), rank_one(-2))
    d = disc_group(l)
    vals = sorted(d.q_value(e) for e in d.elements() if e != d.zero())
    assert vals == [1, Fraction(3, 2), Fraction(3, 2)]
    assert overlattices(l) == []


def test_sublattice_index_and_discr():
    gt = gamma_tilde()
    ov = overlattices(gt)[0]
    index, ok = sublattice_index_and_discr(ov.lattice, ov.sub_in_super)
    assert (index, ok) == (2, True)
    # L inside L has index 1
    n = gt.rank
    ident = [unit(n, i) for i in range(n)]
    assert sublattice_index_and_discr(gt, ident)[0] == 1
    # 2L inside L has index 2^n (small example)
    u = hyperbolic_plane()
    assert sublattice_index_and_discr(u, [[2, 0], [0, 2]])[0] == 4


# -- orthogonal complements -------------------------------------------------------------------

def test_orth_complement_of_v1_is_lambda():
    lt = lambda_tilde()
    lam = orth_complement(lt, lt.vector("v1"))
    assert lam.rank == 22
    assert abs(lam.det()) == 4
    assert lam.signature() == (2, 20)
    d = disc_group(lam)
    assert d.invariants == [2, 2]


def test_orth_complement_of_e3_gives_gamma():
    lam = lambda_lattice()
    gam = orth_complement(lam, lam.vector("e3"))
    assert gam.rank == 21
    assert abs(gam.det()) == 8
    assert gam.signature() == (2, 19)


def test_orth_complement_rank1_summand():
    l = direct_sum(rank_one(-2), hyperbolic_plane())
    c = orth_complement(l, unit(3, 0))
    assert c.rank == 2
    assert c.det() == -1  # the hyperbolic plane


# -- the Phi tower ------------------------------------------------------------------------------

def test_phi_tilde_is_k3_lattice():
    pt = phi_tilde()
    assert pt.rank == 22
    assert abs(pt.det()) == 1
    assert pt.signature() == (3, 19)
    assert pt.square(pt.vector("v1")) == 2


def test_phi_lattice_invariants():
    ph = phi_lattice()
    assert ph.rank == 21
    assert abs(ph.det()) == 2
    assert ph.signature() == (2, 19)
    d = disc_group(ph)
    assert d.invariants == [2]
