import random
from fractions import Fraction

import pytest

from monsterlie.lattice import (
    FockState,
    HAT_IDENTITY,
    HatLatticeElement,
    LatticeVector,
    cocycle_sign,
    conformal_vector,
    hat_inverse,
    hat_multiply,
    heisenberg_apply,
    is_primary,
    pairing,
    schur_apply,
    section,
    vertex_iota_coeff,
    virasoro_apply,
    weight_of,
    weyl_reflect,
)

ALPHA = LatticeVector(1, 1)
BETA = LatticeVector(1, -1)


def rand_vector(rng, lo=-6, hi=6):
    return LatticeVector(rng.randint(lo, hi), rng.randint(lo, hi))


def rand_state(rng, max_degree=5):
    """Random small Fock state: up to three terms of creation degree <= max_degree."""
    terms = {}
    for _ in range(rng.randint(1, 3)):
        mono = []
        degree = 0
        while degree < max_degree and rng.random() < 0.7:
            n = rng.randint(1, max_degree - degree)
            mono.append((rng.randint(0, 1), n))
            degree += n
        key = (tuple(sorted(mono)), (rng.randint(-2, 2), rng.randint(-2, 2)))
        terms[key] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return FockState(terms)


# -- pairing and reflection ----------------------------------------------


def test_pairing_values():
    assert pairing(BETA, BETA) == 2
    assert pairing(ALPHA, ALPHA) == -2
    assert pairing(LatticeVector(1, 3), LatticeVector(-1, -3)) == 6


def test_pairing_is_symmetric_bilinear_and_even():
    rng = random.Random(7)
    for _ in range(100):
        u, v, w = (rand_vector(rng) for _ in range(3))
        assert pairing(u, v) == pairing(v, u)
        assert pairing(u + v, w) == pairing(u, w) + pairing(v, w)
        assert pairing(u, u) % 2 == 0


def test_weyl_reflection():
    assert weyl_reflect(LatticeVector(1, -1)) == LatticeVector(-1, 1)
    assert weyl_reflect(LatticeVector(0, 0)) == LatticeVector(0, 0)
    rng = random.Random(11)
    for _ in range(50):
        u, v = rand_vector(rng), rand_vector(rng)
        assert weyl_reflect(weyl_reflect(u)) == u
        assert pairing(weyl_reflect(u), weyl_reflect(v)) == pairing(u, v)


# -- the double cover ------------------------------------------------------


def test_cocycle_commutator_law():
    rng = random.Random(13)
    for _ in range(200):
        lam, mu = rand_vector(rng), rand_vector(rng)
        assert cocycle_sign(lam, mu) * cocycle_sign(mu, lam) == (-1) ** pairing(
            lam, mu
        )


def test_hat_multiply_examples():
    a = section(1, 0)
    b = section(0, 1)
    ab = hat_multiply(a, b)
    ba = hat_multiply(b, a)
    assert ab.vector == ba.vector == LatticeVector(1, 1)
    # <(1,0),(0,1)> = -1, so the two orders differ by a sign
    assert ab.sign == -ba.sign


def test_naive_opposite_product_carries_the_cocycle_sign():
    # without the inverse's sign correction, (lam,+1)(-lam,+1) lands on the
    # identity vector with sign eps(lam, -lam)
    rng = random.Random(43)
    for _ in range(50):
        lam = rand_vector(rng)
        a = HatLatticeElement(lam, 1)
        b = HatLatticeElement(-lam, 1)
        product = hat_multiply(a, b)
        assert product.vector == LatticeVector(0, 0)
        assert product.sign == cocycle_sign(lam, -lam)


def test_hat_inverse_is_two_sided():
    rng = random.Random(17)
    for _ in range(100):
        a = HatLatticeElement(rand_vector(rng), rng.choice((1, -1)))
        assert hat_multiply(a, hat_inverse(a)) == HAT_IDENTITY
        assert hat_multiply(hat_inverse(a), a) == HAT_IDENTITY


def test_hat_multiply_associative():
    rng = random.Random(19)
    for _ in range(100):
        a, b, c = (
            HatLatticeElement(rand_vector(rng), rng.choice((1, -1))) for _ in range(3)
        )
        assert hat_multiply(hat_multiply(a, b), c) == hat_multiply(a, hat_multiply(b, c))


def test_central_sign_negates_iota():
    a = section(2, -1, sign=-1)
    assert FockState.iota(a) == -1 * FockState.iota(section(2, -1))


# -- Heisenberg action -----------------------------------------------------


def test_single_contraction():
    state = heisenberg_apply(BETA, -1, FockState.vacuum())
    contracted = heisenberg_apply(BETA, 1, state)
    assert contracted == 2 * FockState.vacuum()


def test_zero_mode_scales_by_pairing():
    c2 = FockState.iota(section(1, 2))
    t1 = LatticeVector(0, -1)
    assert heisenberg_apply(t1, 0, c2) == 1 * c2


def test_annihilation_on_iota_vanishes():
    assert heisenberg_apply(BETA, 5, FockState.iota(section(2, 3))).is_zero()


def test_heisenberg_bracket_identity():
    rng = random.Random(23)
    for _ in range(40):
        lam, mu = rand_vector(rng), rand_vector(rng)
        s = rand_state(rng, max_degree=4)
        for m in (-2, -1, 1, 2):
            for n in (-2, -1, 1, 2):
                left = heisenberg_apply(lam, m, heisenberg_apply(mu, n, s))
                right = heisenberg_apply(mu, n, heisenberg_apply(lam, m, s))
                expected = FockState.zero()
                if m + n == 0:
                    expected = (pairing(lam, mu) * m) * s
                assert left - right == expected


# -- Schur polynomials ------------------------------------------------------


def test_schur_small_orders():
    lam = LatticeVector(1, 2)
    vac = FockState.vacuum()
    assert schur_apply(lam, 0, vac) == vac
    assert schur_apply(lam, 1, vac) == heisenberg_apply(lam, -1, vac)
    expected = Fraction(1, 2) * heisenberg_apply(
        lam, -1, heisenberg_apply(lam, -1, vac)
    ) + Fraction(1, 2) * heisenberg_apply(lam, -2, vac)
    assert schur_apply(lam, 2, vac) == expected


def brute_vertex_coeff(a, b_state, power, r_max=8):
    """Independent expansion of the vertex operator on a pure iota state:
    multiply out exp(sum abar(-n)/n x**n) term by term."""
    out = FockState.zero()
    for (mono, abar), c in b_state.terms.items():
        assert mono == (), "oracle only covers pure iota states"
        b_hat = HatLatticeElement(LatticeVector(*abar), 1)
        ab = hat_multiply(a, b_hat)
        base = int(pairing(a.vector, b_hat.vector))
        r = power - base
        if r < 0 or r > r_max:
            continue
        target = (c * ab.sign) * FockState.iota(
            HatLatticeElement(ab.vector, 1)
        )
        acc = FockState.zero()

        # exp(sum_n abar(-n)/n x**n) via ordered compositions of r divided
        # by m! -- each multiset of factors appears once per ordering.
        def walk_exact(remaining, factor, state, m):
            nonlocal acc
            if remaining == 0:
                fact = 1
                for i in range(2, m + 1):
                    fact *= i
                acc = acc + (factor / fact) * state
                return
            for n in range(1, remaining + 1):
                walk_exact(
                    remaining - n,
                    factor * Fraction(1, n),
                    heisenberg_apply(a.vector, -n, state),
                    m + 1,
                )

        walk_exact(r, Fraction(1), target, 0)
        out = out + acc
    return out


def test_vertex_coeff_matches_brute_force_expansion():
    a = section(1, -1)
    b = hat_inverse(a)
    b_state = FockState.iota(b)
    base = int(pairing(a.vector, b.vector))
    for r in range(0, 7):
        got = vertex_iota_coeff(a, b_state, base + r)
        want = brute_vertex_coeff(a, b_state, base + r)
        assert got == want, f"mismatch at Schur order {r}"


def test_vertex_coeff_examples():
    a = section(1, -1)
    inv_state = FockState.iota(hat_inverse(a))
    # <abar, -abar> = -2 puts the first Schur term at x**-1
    got = vertex_iota_coeff(a, inv_state, -1)
    assert got == heisenberg_apply(a.vector, -1, FockState.vacuum())
    # the r = 0 term is exactly the vacuum
    assert vertex_iota_coeff(a, inv_state, -2) == FockState.vacuum()
    # below the pairing exponent the series has no terms
    assert vertex_iota_coeff(a, inv_state, -3).is_zero()


def test_vertex_coeff_degree_argument_kills_cross_terms():
    a = section(1, -1)
    for j in (1, 2, 5):
        b_state = FockState.iota(section(-1, -j))
        assert vertex_iota_coeff(a, b_state, -1).is_zero()


def test_vertex_coeff_on_single_creation_target():
    # Y(iota(a), x) on t(-1)iota(1): the contraction term sits at x**-1.
    a = section(1, 2)
    t = LatticeVector(0, -1)
    target = heisenberg_apply(t, -1, FockState.vacuum())
    got = vertex_iota_coeff(a, target, -1)
    expected = (-pairing(a.vector, t)) * FockState.iota(a)
    assert got == expected
    assert vertex_iota_coeff(a, target, -2).is_zero()


# -- Virasoro ----------------------------------------------------------------


def test_grading_examples():
    beta_state = heisenberg_apply(BETA, -1, FockState.vacuum())
    assert virasoro_apply(0, beta_state) == 1 * beta_state
    for j in (1, 2, 5):
        cj = FockState.iota(section(1, j))
        assert virasoro_apply(0, cj) == -j * cj
        assert virasoro_apply(1, cj).is_zero()


def test_l2_on_single_creation_vanishes():
    lam = LatticeVector(2, -1)
    state = heisenberg_apply(lam, -1, FockState.vacuum())
    assert virasoro_apply(2, state).is_zero()


def test_weight_examples():
    assert weight_of(FockState.vacuum()) == 0
    assert weight_of(FockState.iota(section(1, 3))) == -3
    s = heisenberg_apply(
        LatticeVector(1, 0),
        -2,
        heisenberg_apply(LatticeVector(0, 1), -1, FockState.iota(section(1, 1))),
    )
    assert weight_of(s) == 2
    mixed = FockState.vacuum() + FockState.iota(section(1, 1))
    assert weight_of(mixed) is None


def test_weight_additivity_under_creation():
    rng = random.Random(29)
    for _ in range(40):
        s = rand_state(rng, max_degree=3)
        w = weight_of(s)
        if w is None:
            continue
        n = rng.randint(1, 4)
        lam = rand_vector(rng)
        created = heisenberg_apply(lam, -n, s)
        if created.is_zero():
            continue
        assert weight_of(created) == w + n


def test_conformal_vector_and_central_charge():
    omega = conformal_vector()
    assert weight_of(omega) == 2
    # L(2) omega = (central charge / 2) vacuum, with central charge 2
    assert virasoro_apply(2, omega) == FockState.vacuum()
    assert virasoro_apply(1, omega).is_zero()


def test_virasoro_bracket_identity_central_charge_2():
    rng = random.Random(31)
    central_charge = 2
    for _ in range(12):
        s = rand_state(rng, max_degree=5)
        for m in range(-2, 3):
            for n in range(-2, 3):
                left = virasoro_apply(m, virasoro_apply(n, s)) - virasoro_apply(
                    n, virasoro_apply(m, s)
                )
                right = (m - n) * virasoro_apply(m + n, s)
                if m + n == 0:
                    right = right + Fraction(m ** 3 - m, 12) * central_charge * s
                assert left == right, f"[L({m}),L({n})] failed"


def virasoro_mode_oracle(n, state):
    """L(n) expanded directly from the conformal state's normal-ordered
    modes: L(n) = -sum_{i+j=n} ::u1(i)u2(j)::, truncated to the finitely
    many index pairs that can act on the given state."""
    max_degree = max(
        (sum(k for _, k in mono) for (mono, _) in state.terms), default=0
    )
    bound = max_degree + abs(n) + 2
    out = FockState.zero()
    for i in range(-bound, bound + 1):
        j = n - i
        if abs(j) > bound:
            continue
        # normal ordering: the annihilation/zero-mode factor acts first
        if i <= j:
            inner = heisenberg_apply(LatticeVector(0, 1), j, state)
            term = heisenberg_apply(LatticeVector(1, 0), i, inner)
        else:
            inner = heisenberg_apply(LatticeVector(1, 0), i, state)
            term = heisenberg_apply(LatticeVector(0, 1), j, inner)
        out = out + term
    return -1 * out


def test_virasoro_matches_mode_expansion_oracle():
    rng = random.Random(37)
    for _ in range(8):
        s = rand_state(rng, max_degree=3)
        for n in range(-3, 4):
            assert virasoro_apply(n, s) == virasoro_mode_oracle(n, s), f"L({n})"


# -- primality ----------------------------------------------------------------


def test_iota_vectors_are_primary():
    for j in (-1, 1, 2, 7, 10):
        assert is_primary(FockState.iota(section(1, j)), depth=12)


def test_single_creation_on_vacuum_is_primary():
    state = heisenberg_apply(LatticeVector(3, -2), -1, FockState.vacuum())
    assert is_primary(state, depth=8)


def test_conformal_vector_is_not_primary():
    assert not is_primary(conformal_vector(), depth=4)


def test_is_primary_rejects_bad_depth():
    with pytest.raises(ValueError):
        is_primary(FockState.vacuum(), depth=0)
