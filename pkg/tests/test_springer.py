import random
from fractions import Fraction
from math import factorial

import pytest

from poincare_series.algebra import (
    ONE,
    FactoredRatFun,
    Poly,
    RatFun,
    one_minus_z,
    pochhammer,
)
from poincare_series.counting import DegreeVector, build_factored_gf, dimension
from poincare_series.springer import (
    PFD,
    _evaluate_at_pole,
    partial_fractions,
    phi,
    phi_factored,
    poincare_series,
    psi_term,
    psi_term_factored,
    single_form_series,
)

from _oracles import (
    generating_function_biseries,
    multisection,
    psi_diagonal,
    random_factored,
    recombined_biseries,
)


def assemble(num, factors):
    den = ONE
    for a, e in factors:
        den = den * one_minus_z(a) ** e
    return RatFun(num if isinstance(num, Poly) else Poly(num), den)


ONE_PLUS_Z = Poly([1, 1])


class TestPartialFractions:
    def test_single_linear_form(self):
        pfd = partial_fractions(build_factored_gf((1,)))
        assert pfd.d_star == 1
        terms = {(i, k): A for i, k, A in pfd.terms}
        assert set(terms) == {(0, 1), (2, 1)}
        assert terms[(0, 1)].to_ratfun() == assemble([1], [(2, 1)])
        assert terms[(2, 1)].to_ratfun() == assemble([0, 0, -1], [(2, 1)])

    def test_all_powers_present_including_zero(self):
        pfd = partial_fractions(build_factored_gf((1, 1)))
        keys = [(i, k) for i, k, _ in pfd.terms]
        assert keys == [(0, 1), (0, 2), (2, 1), (2, 2)]

    def test_all_ones_closed_coefficients(self):
        # n linear forms: A_{0,k} = (-1)^(n-k) (n)_(n-k)/(n-k)! z^(2(n-k)) / (1-z^2)^(2n-k)
        for n in range(1, 6):
            pfd = partial_fractions(build_factored_gf((1,) * n))
            terms = {(i, k): A for i, k, A in pfd.terms}
            for k in range(1, n + 1):
                r = n - k
                num = Poly.monomial(2 * r, Fraction((-1) ** r * pochhammer(n, r), factorial(r)))
                assert terms[(0, k)].to_ratfun() == assemble(num, [(2, 2 * n - k)])

    def test_mixed_system_first_coefficients(self):
        pfd = partial_fractions(build_factored_gf((1, 2, 3)))
        terms = {(i, k): A for i, k, A in pfd.terms}
        a01 = assemble([1], [(4, 2), (2, 2), (5, 1), (3, 1), (1, 1), (6, 1)])
        assert terms[(0, 1)].to_ratfun() == a01
        a11 = assemble([0, -1], [(3, 2), (1, 3), (4, 1), (2, 1), (5, 1)])
        assert terms[(1, 1)].to_ratfun() == a11
        a21 = assemble(
            Poly([0, 0, 0, -1]) * Poly([-2, -2, -1, 2, 6, 5, 5]),
            [(4, 2), (1, 1), (3, 2), (2, 3)],
        )
        assert terms[(2, 1)].to_ratfun() == a21
        a22 = assemble([0, 0, 0, 1], [(4, 1), (1, 2), (3, 1), (2, 3)])
        assert terms[(2, 2)].to_ratfun() == a22
        a31 = assemble(Poly.monomial(7), [(3, 2), (1, 4), (2, 2)])
        assert terms[(3, 1)].to_ratfun() == a31
        assert terms[(3, 1)].value_at_zero() == 0

    def test_recombination_identity(self):
        for degs in [(1,), (2,), (1, 1), (2, 1), (1, 2, 3), (2, 2)]:
            beta = build_factored_gf(degs)
            pfd = partial_fractions(beta)
            t_order, z_order = 6, 12
            assert recombined_biseries(pfd, t_order, z_order) == generating_function_biseries(
                beta, t_order, z_order
            ), degs

    def test_empty_exponent_map_rejected(self):
        with pytest.raises(ValueError):
            partial_fractions({})

    def test_residual_pole_is_hard_failure(self):
        with pytest.raises(RuntimeError):
            _evaluate_at_pole({((2, 1),): (1, 0)}, 2, 0)


class TestPhi:
    def test_identity_at_one(self):
        f = FactoredRatFun(Poly([1, 2, 3]), {2: 1})
        assert phi_factored(f, 1) is f

    def test_geometric(self):
        f = FactoredRatFun(ONE, {1: 1})
        assert phi(f, 2) == assemble([1], [(1, 1)])

    def test_keeps_factor_multiset(self):
        f = FactoredRatFun(Poly([1, 1, 1, 1]), {2: 2, 3: 1})
        g = phi_factored(f, 3)
        assert g.factors == f.factors

    def test_even_part_substitution(self):
        # phi_2 of F(z^2) is F(z); phi_2 of z F(z^2) vanishes
        rng = random.Random(3)
        for _ in range(20):
            coeffs = [rng.randint(-3, 3) for _ in range(rng.randint(1, 5))]
            f = Poly(coeffs)
            even = FactoredRatFun(f.compose_power(2))
            assert phi(even, 2) == RatFun(f)
            odd = FactoredRatFun(f.compose_power(2).shift(1))
            assert phi(odd, 2) == RatFun(Poly([]))

    def test_requires_factored_form(self):
        with pytest.raises(TypeError):
            phi(RatFun(ONE, one_minus_z(1)), 2)
        with pytest.raises(ValueError):
            phi_factored(FactoredRatFun(ONE), 0)

    def test_against_series_multisection(self):
        rng = random.Random(41)
        for _ in range(60):
            f = random_factored(rng)
            n = rng.randint(1, 6)
            terms = 30
            direct = phi_factored(f, n).expand(terms)
            assert direct == multisection(f.expand(terms * n), n)

    def test_worked_multisection(self):
        # phi_3 of (1+z) times the first mixed-system coefficient
        pfd = partial_fractions(build_factored_gf((1, 2, 3)))
        a01 = next(A for i, k, A in pfd.terms if (i, k) == (0, 1))
        shown = assemble(
            Poly([1, 4, 14, 21, 33, 42, 42, 34, 29, 14, 7, 2]),
            [(5, 1), (1, 3), (4, 2), (2, 2)],
        )
        assert phi(a01 * ONE_PLUS_Z, 3) == shown

    def test_worked_multisection_second(self):
        pfd = partial_fractions(build_factored_gf((1, 2, 3)))
        a11 = next(A for i, k, A in pfd.terms if (i, k) == (1, 1))
        shown = assemble(
            Poly([0, -1]) * Poly([4, 6, 13, 12, 13, 9, 6, 1]),
            [(2, 1), (5, 1), (3, 2), (1, 4)],
        )
        assert phi(a11 * ONE_PLUS_Z, 2) == shown


class TestPsiTerm:
    def test_below_shift_plain(self):
        r = FactoredRatFun(ONE_PLUS_Z, {2: 1})
        assert psi_term(0, 1, r, 1) == assemble([1], [(1, 1)])

    def test_at_shift(self):
        r = FactoredRatFun(Poly([5, 7]), {3: 2})
        f = psi_term(2, 3, r, 2)
        assert f == assemble([5], [(1, 3)])

    def test_above_shift(self):
        r = FactoredRatFun(Poly([5, 7]), {3: 2})
        assert psi_term(4, 2, r, 2) == RatFun(Poly([5]))
        zero_at_origin = FactoredRatFun(Poly([0, 1]), {2: 1})
        assert psi_term(4, 2, zero_at_origin, 2).is_zero()

    def test_branch_validation(self):
        r = FactoredRatFun(ONE)
        with pytest.raises(ValueError):
            psi_term(0, 0, r, 1)
        with pytest.raises(ValueError):
            psi_term(0, 1, r, 0)
        with pytest.raises(TypeError):
            psi_term(0, 1, RatFun(ONE), 1)

    def test_all_branches_against_diagonal(self):
        rng = random.Random(17)
        count = 12
        for _ in range(40):
            r = random_factored(rng, max_num_deg=4, max_factors=2, max_exp=3)
            n = rng.randint(1, 4)
            i = rng.randint(0, 2 * n)
            k = rng.randint(1, 3)
            need = count * max(n - i, 0)
            reference = psi_diagonal(r.expand(need), i, k, n, count)
            computed = psi_term_factored(i, k, r, n).expand(count)
            assert computed == reference, (i, k, n)

    def test_derivative_branch_explicit(self):
        # i < n with k = 2: 1/(1)! d/dz [z phi_{n-i}(R)]
        r = FactoredRatFun(ONE, {1: 1})
        f = psi_term(0, 2, r, 2)
        inner = phi_factored(r, 2) * Poly.monomial(1)
        assert f == inner.derivative().to_ratfun()


class TestPoincareSeries:
    def test_trivial_invariants(self):
        assert poincare_series((1,), "invariants") == RatFun(ONE)

    def test_single_quadratic(self):
        assert poincare_series((2,), "invariants") == assemble([1], [(2, 1)])
        assert poincare_series((1,), "semiinvariants") == assemble([1], [(1, 1)])

    def test_two_linear_forms(self):
        assert poincare_series((1, 1), "semiinvariants") == assemble([1], [(1, 2), (2, 1)])

    def test_mixed_golden(self):
        shown = assemble(
            [1, 1, 6, 12, 20, 29, 35, 39, 35, 29, 20, 12, 6, 1, 1],
            [(4, 2), (1, 2), (2, 1), (3, 2), (5, 1)],
        )
        assert poincare_series((1, 2, 3), "semiinvariants") == shown

    def test_permutation_invariance(self):
        assert poincare_series((3, 1, 2), "semiinvariants") == poincare_series(
            (1, 2, 3), "semiinvariants"
        )
        assert poincare_series([2, 1], "invariants") == poincare_series((1, 2), "invariants")

    def test_kind_validation(self):
        with pytest.raises(ValueError):
            poincare_series((1,), "covariants")

    def test_counting_agreement_sample(self):
        for degs in [(3,), (2, 2), (4, 1)]:
            for kind in ("invariants", "semiinvariants"):
                series = poincare_series(degs, kind).expand(8)
                assert series == [dimension(degs, m, kind) for m in range(9)]


class TestSingleForm:
    def test_linear(self):
        assert single_form_series(1, "covariants") == assemble([1], [(1, 1)])
        assert single_form_series(1, "invariants") == RatFun(ONE)

    def test_quadratic(self):
        assert single_form_series(2, "invariants") == assemble([1], [(2, 1)])
        assert single_form_series(2, "covariants") == assemble([1], [(1, 1), (2, 1)])

    def test_cubic_invariants_classical(self):
        assert single_form_series(3, "invariants") == assemble([1], [(4, 1)])

    def test_matches_pipeline(self):
        for d in range(1, 7):
            assert single_form_series(d, "invariants") == poincare_series((d,), "invariants")
            assert single_form_series(d, "covariants") == poincare_series(
                (d,), "semiinvariants"
            )

    def test_validation(self):
        with pytest.raises(ValueError):
            single_form_series(0, "invariants")
        with pytest.raises(ValueError):
            single_form_series(2, "semiinvariants")


class TestPfdType:
    def test_terms_sorted(self):
        pfd = partial_fractions(build_factored_gf((2, 1)))
        assert [(i, k) for i, k, _ in pfd.terms] == sorted((i, k) for i, k, _ in pfd.terms)

    def test_d_star(self):
        assert partial_fractions(build_factored_gf((1, 2, 3))).d_star == 3
        assert isinstance(partial_fractions(build_factored_gf((1,))), PFD)
