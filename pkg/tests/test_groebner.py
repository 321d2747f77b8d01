import random

import pytest

from bettibounds.groebner import (
    Ideal,
    buchberger_iteration,
    contains_poly,
    divide,
    form_regularity,
    groebner_basis,
    homogeneous_component_dim,
    ideal_quotient,
    ideal_quotient_ideal,
    ideal_intersection,
    ideals_equal,
    initial_exponents,
    irrelevant_ideal,
    normal_form,
    quotient_hilbert_function,
    reduced_gb,
    s_polynomial,
    saturation,
    substitute_linear_form,
    truncated_initial_generators,
)
from bettibounds.polyring import GREVLEX, LEX, PolyRing, apply_linear_change, mat_inv_mod

R2 = PolyRing(2, 32003, ("x", "y"))
R3 = PolyRing(3, 32003, ("x", "y", "z"))
X, Y = R2.variables()


def test_ideal_validation():
    with pytest.raises(ValueError):
        Ideal(R2, [X + X * X])  # inhomogeneous
    I = Ideal(R2, [X.scale(7), R2.zero()])
    assert I.gens == (X,)  # monic, zero dropped


def test_s_polynomial_examples():
    f, g = X * X, X * Y
    assert s_polynomial(f, g, GREVLEX).is_zero
    f = X * X + Y * Y
    s = s_polynomial(f, X * Y, GREVLEX)
    assert s == Y * Y * Y
    assert s_polynomial(f, f, GREVLEX).is_zero
    with pytest.raises(ValueError):
        s_polynomial(R2.zero(), f, GREVLEX)
    with pytest.raises(ValueError):
        s_polynomial(f.scale(2), f, GREVLEX)  # not monic


def test_divide_examples():
    qs, r = divide(X * X * Y, [X * X], GREVLEX)
    assert qs[0] == Y and r.is_zero
    qs, r = divide(X * X + Y * Y, [X], GREVLEX)
    assert r == Y * Y
    f = X * Y * Y + Y * Y * Y
    qs, r = divide(f, [X * Y + Y * Y], GREVLEX)
    assert qs[0] == Y and r.is_zero


def test_divide_standard_expression_postconditions():
    rng = random.Random(11)
    for _ in range(25):
        fterms = {}
        for _ in range(rng.randint(1, 6)):
            e = (rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3))
            fterms[e] = rng.randrange(1, 32003)
        from bettibounds.polyring import Poly

        f = Poly(R3, fterms)
        divisors = [
            (R3.variable(0) * R3.variable(0) + R3.variable(1) * R3.variable(2)).monic(GREVLEX),
            (R3.variable(1) * R3.variable(1)).monic(GREVLEX),
        ]
        qs, r = divide(f, divisors, GREVLEX)
        # reconstruction
        total = r
        for q, g in zip(qs, divisors):
            total = total + q * g
        assert total == f
        # leading bounds and remainder support
        if not f.is_zero:
            fk = GREVLEX.key(f.leading_monomial(GREVLEX))
            for q, g in zip(qs, divisors):
                if not q.is_zero:
                    assert GREVLEX.key((q * g).leading_monomial(GREVLEX)) <= fk
        lms = [g.leading_monomial(GREVLEX) for g in divisors]
        for m in r.terms:
            assert not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)


def test_buchberger_iteration_examples():
    out = buchberger_iteration([X * X, Y * Y], GREVLEX)
    assert out == [X * X, Y * Y]
    out = buchberger_iteration([X * X + Y * Y, X * Y], GREVLEX)
    assert set(out) == {X * X + Y * Y, X * Y, Y * Y * Y}


def test_buchberger_iteration_size_bound():
    rng = random.Random(5)
    from bettibounds.polyring import Poly

    for _ in range(10):
        mu = rng.randint(1, 5)
        polys = []
        for _ in range(mu):
            d = rng.randint(1, 3)
            terms = {}
            for e in _monos(2, d):
                c = rng.randrange(32003)
                if c:
                    terms[e] = c
            if terms:
                polys.append(Poly(R2, terms).monic(GREVLEX))
        out = buchberger_iteration(polys, GREVLEX)
        n = len(polys)
        assert len(out) <= n * (n - 1) // 2 + n <= max(n * n, 1)


def _monos(n, d):
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _monos(n - 1, d - first):
            yield (first,) + rest


def test_truncated_initial_generators_examples():
    I = Ideal(R2, [X * X, Y * Y])
    tr = truncated_initial_generators(I, GREVLEX, 3)
    assert set(tr.leading_monomials()) == {(2, 0), (0, 2)}
    assert len(tr.elements) <= 2 ** 4

    I = Ideal(R2, [X * X + Y * Y, X * Y])
    tr = truncated_initial_generators(I, GREVLEX, 3)
    assert set(tr.leading_monomials()) == {(2, 0), (1, 1), (0, 3)}

    # delta = 1 does zero iterations and keeps only the linear generators
    I = Ideal(R2, [X, Y * Y])
    tr = truncated_initial_generators(I, GREVLEX, 1)
    assert tr.elements == (X,)
    with pytest.raises(ValueError):
        truncated_initial_generators(I, GREVLEX, 0)


def test_truncation_matches_full_gb_through_delta():
    rng = random.Random(3)
    from bettibounds.verifier import InstanceSpec, generate_instance

    for k in range(6):
        spec = InstanceSpec("random-homogeneous", 3, 3, 3, seed=900 + k)
        I, _ = generate_instance(spec)
        full = initial_exponents(I, GREVLEX)
        for delta in (2, 3):
            tr = truncated_initial_generators(I, GREVLEX, delta)
            tl = tr.leading_monomials()
            from bettibounds import monomials as M

            for d in range(delta + 1):
                for m in _monos(3, d):
                    assert M.member(m, tl) == M.member(m, full)


def test_groebner_basis_examples():
    I = Ideal(R2, [X * X, Y * Y])
    gb = groebner_basis(I)
    assert set(gb.elements) == {X * X, Y * Y}
    I = Ideal(R2, [X * X + Y * Y, X * Y])
    gb = groebner_basis(I)
    assert set(gb.elements) == {X * X + Y * Y, X * Y, Y * Y * Y}
    # criterion off gives the same reduced basis
    gb2 = groebner_basis(I, use_criterion=False)
    assert gb.elements == gb2.elements


def test_groebner_fixpoint_oracle():
    # iterating the literal procedure stabilizes on the same initial ideal
    for gens in ([X * X + Y * Y, X * Y], [X * X * X + Y * Y * Y, X * Y], [X + Y]):
        I = Ideal(R2, gens)
        cur = [g for g in I.gens]
        for _ in range(12):
            nxt = buchberger_iteration(cur, GREVLEX)
            if set(nxt) == set(cur):
                break
            cur = nxt
        else:
            pytest.fail("no fixpoint reached")
        from bettibounds import monomials as M

        lms_fix = M.minimalize([g.leading_monomial(GREVLEX) for g in cur])
        assert lms_fix == initial_exponents(I, GREVLEX)


def test_hilbert_function_preservation():
    # dim (S/I)_d agrees with the staircase of in(I) for d <= 8
    rng = random.Random(17)
    from bettibounds.verifier import InstanceSpec, generate_instance
    from math import comb

    for k in range(4):
        spec = InstanceSpec("random-homogeneous", 3, 2, 3, seed=300 + k)
        I, _ = generate_instance(spec)
        for d in range(9):
            lhs = comb(d + 2, 2) - homogeneous_component_dim(I, d)
            assert lhs == quotient_hilbert_function(I, d)


def test_ideal_quotient_examples():
    I = Ideal(R2, [X * X])
    assert ideals_equal(ideal_quotient(I, X), Ideal(R2, [X]))
    I = Ideal(R2, [X * X, X * Y])
    assert ideals_equal(ideal_quotient(I, X), Ideal(R2, [X, Y]))
    assert ideals_equal(ideal_quotient(I, R2.one()), I)


def test_ideal_quotient_general_poly():
    # non-monomial data goes through the elimination route
    I = Ideal(R2, [X * X + Y * Y, X * Y])
    Q = ideal_quotient(I, X + Y)
    for g in Q.gens:
        assert contains_poly(I, g * (X + Y))
    # colon can only grow the ideal
    for g in I.gens:
        assert contains_poly(Q, g)


def test_quotient_by_ideal_and_socle_input():
    I = Ideal(R2, [X * X, X * Y, Y * Y])
    m = irrelevant_ideal(R2)
    Q = ideal_quotient_ideal(I, m)
    assert ideals_equal(Q, Ideal(R2, [X, Y]))


def test_saturation_examples():
    I = Ideal(R2, [X * X, X * Y])
    m = irrelevant_ideal(R2)
    assert ideals_equal(saturation(I, m), Ideal(R2, [X]))
    one = Ideal(R2, [R2.one()])
    assert ideals_equal(saturation(I, one), I)
    J = Ideal(R2, [X])
    assert ideals_equal(saturation(J, m), J)


def test_saturation_general_route_agrees_with_monomial_fast_path():
    I = Ideal(R2, [X * X, X * Y])
    m = irrelevant_ideal(R2)
    # force the general loop by using generators 2x, 3y (non-unit leading data
    # is normalized away, so perturb with an extra generator instead)
    J = Ideal(R2, [X + Y, X - Y])  # equals m after reduction
    assert ideals_equal(saturation(I, J), saturation(I, m))


def test_intersection():
    A = Ideal(R2, [X])
    B = Ideal(R2, [Y])
    assert ideals_equal(ideal_intersection(A, B), Ideal(R2, [X * Y]))


def test_initial_of_colon_is_colon_of_initial_generic():
    # in_grevlex(I : x_N) = in_grevlex(I) : x_N after generic coordinates
    rng = random.Random(23)
    from bettibounds import monomials as M

    I0 = Ideal(R3, [R3.variable(0) ** 2, R3.variable(0) * R3.variable(1)])
    for trial in range(3):
        while True:
            Mx = [[rng.randrange(32003) for _ in range(3)] for _ in range(3)]
            if mat_inv_mod(Mx, 32003) is not None:
                break
        I = Ideal(R3, [apply_linear_change(g, Mx) for g in I0.gens])
        xN = R3.variable(2)
        lhs = initial_exponents(ideal_quotient(I, xN))
        rhs = M.colon_by_monomial(initial_exponents(I), (0, 0, 1))
        assert set(lhs) == set(rhs)


def test_substitute_and_regularity():
    # y is regular on S/(x^2); x is not
    I = Ideal(R2, [X * X])
    assert form_regularity(I, Y) == (True, True)
    regular, filt = form_regularity(I, X)
    assert not regular
    I1 = Ideal(PolyRing(1, 32003), [PolyRing(1, 32003).variable(0) ** 2])
    assert form_regularity(I1, PolyRing(1, 32003).variable(0))[1] is True

    J = substitute_linear_form(Ideal(R2, [X * X + Y * Y]), Y)
    assert J.ring.nvars == 1
    assert J.gens[0].degree() == 2


def test_reduced_gb_is_cached_and_canonical():
    I = Ideal(R2, [X * Y, X * X + Y * Y])
    g1 = reduced_gb(I)
    g2 = reduced_gb(I)
    assert g1 is g2
    J = Ideal(R2, [X * X + Y * Y, X * Y, Y * Y * Y])
    assert ideals_equal(I, J)


def test_normal_form_membership():
    I = Ideal(R2, [X * X + Y * Y, X * Y])
    gb = reduced_gb(I)
    assert normal_form(Y * Y * Y, list(gb.elements), GREVLEX).is_zero
    assert not normal_form(X, list(gb.elements), GREVLEX).is_zero


def test_lex_order_gb():
    I = Ideal(R2, [X * Y + Y * Y + X * X])
    gb = groebner_basis(I, LEX)
    assert gb.elements[0].leading_monomial(LEX) == (2, 0)
