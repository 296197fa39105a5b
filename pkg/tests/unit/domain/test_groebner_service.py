"""Unit tests for the Groebner engine."""

from fractions import Fraction

import numpy as np
import pytest

from torica.domain.exceptions import BudgetExceededError
from torica.domain.services.groebner_service import GroebnerService, MultiPoly, degrevlex_key, divides, lcm


def poly(terms):
    nvars = len(next(iter(terms)))
    return MultiPoly(nvars, terms)


def random_squarefree(rng: np.random.Generator, nvars: int = 3) -> MultiPoly:
    terms = {}
    for _ in range(3):
        exponent = tuple(int(e) for e in rng.integers(0, 2, size=nvars))
        terms[exponent] = int(rng.integers(-5, 6)) or 1
    return MultiPoly(nvars, terms)


class TestMonomialOrder:
    def test_degrevlex(self):
        assert degrevlex_key((0, 2, 0)) > degrevlex_key((1, 0, 1))
        assert degrevlex_key((1, 0, 0)) > degrevlex_key((0, 1, 0))
        assert degrevlex_key((0, 0, 2)) > degrevlex_key((1, 0, 0))

    def test_divides_and_lcm(self):
        assert divides((1, 0, 2), (1, 1, 2))
        assert not divides((2, 0), (1, 3))
        assert lcm((2, 0, 1), (1, 3, 0)) == (2, 3, 1)


class TestMultiPoly:
    def test_arithmetic(self):
        x = MultiPoly.variable(2, 0)
        y = MultiPoly.variable(2, 1)
        product = (x + y) * (x - y)
        assert product == poly({(2, 0): 1, (0, 2): -1})
        assert (x + y) ** 2 == poly({(2, 0): 1, (1, 1): 2, (0, 2): 1})
        assert (x - x).is_zero()

    def test_leading_term(self):
        f = poly({(1, 0, 1): 3, (0, 2, 0): 2, (1, 0, 0): 1})
        assert f.leading_monomial() == (0, 2, 0)
        assert f.leading_coefficient() == 2
        assert f.monic().leading_coefficient() == 1

    def test_zero_polynomial_has_no_leading_monomial(self):
        with pytest.raises(ValueError):
            MultiPoly(2).leading_monomial()

    def test_exponent_length_checked(self):
        with pytest.raises(ValueError):
            MultiPoly(2, {(1, 0, 0): 1})

    def test_substitute_ones(self):
        f = poly({(1, 1): 1, (0, 1): 1})
        assert f.substitute_ones([1]) == poly({(1,): 1, (0,): 1})

    def test_with_extra_variables(self):
        f = poly({(1, 2): Fraction(1, 2)})
        assert f.with_extra_variables(1) == poly({(1, 2, 0): Fraction(1, 2)})


class TestGroebnerService:
    def test_normal_form(self):
        x_minus_one = poly({(1,): 1, (0,): -1})
        assert GroebnerService().normal_form(poly({(2,): 1}), [x_minus_one]) == MultiPoly.constant(1)

    def test_reduced_basis(self):
        generators = [poly({(1, 0): 1, (0, 1): -1}), poly({(0, 1): 1, (0, 0): -1})]
        basis = GroebnerService().buchberger(generators)
        assert basis.generators == (
            poly({(0, 1): 1, (0, 0): -1}),
            poly({(1, 0): 1, (0, 0): -1}),
        )

    def test_twisted_cubic_basis_size(self):
        # x z - y^2, y w - z^2, x w - y z
        generators = [
            poly({(1, 0, 1, 0): 1, (0, 2, 0, 0): -1}),
            poly({(0, 1, 0, 1): 1, (0, 0, 2, 0): -1}),
            poly({(1, 0, 0, 1): 1, (0, 1, 1, 0): -1}),
        ]
        basis = GroebnerService().buchberger(generators)
        assert len(basis) == 3
        assert not basis.is_unit_ideal

    def test_unit_ideal(self):
        x = MultiPoly.variable(1, 0)
        assert GroebnerService().ideal_contains_one([x, x - MultiPoly.constant(1)])
        assert GroebnerService().buchberger([x, x - MultiPoly.constant(1)]).is_unit_ideal

    def test_proper_ideal(self):
        assert not GroebnerService().ideal_contains_one(
            [poly({(2, 0): 1}), poly({(0, 2): 1})]
        )

    def test_ideal_contains(self):
        x = MultiPoly.variable(2, 0)
        y = MultiPoly.variable(2, 1)
        assert GroebnerService().ideal_contains(x * y + x * x, [x])
        assert not GroebnerService().ideal_contains(y, [x])

    def test_radical_membership(self):
        x = MultiPoly.variable(2, 0)
        y = MultiPoly.variable(2, 1)
        assert GroebnerService().radical_membership(x, [x * x])
        assert GroebnerService().radical_membership(x * y, [x * x * y, y * y * y])
        assert not GroebnerService().radical_membership(y, [x * x])

    def test_classical_membership_example(self):
        x = MultiPoly.variable(2, 0)
        y = MultiPoly.variable(2, 1)
        generators = [x * x, x * y + y * y]
        service = GroebnerService()
        assert service.ideal_contains(y**3, generators)
        assert not service.ideal_contains(y * y, generators)
        assert service.radical_membership(y, generators)

    def test_reduced_basis_is_idempotent(self):
        x, y, z = (MultiPoly.variable(3, i) for i in range(3))
        one = MultiPoly.constant(3)
        systems = [
            [x * z - y * y, y - z * z, x - y * z],
            [x * x, x * y + y * y],
            [x * x + y * y + z * z - one, x - y, y * z - one],
            [x**3 - y, x * y - z, z * z - x],
        ]
        rng = np.random.default_rng(5)
        for _ in range(6):
            systems.append([random_squarefree(rng) for _ in range(3)])
        for generators in systems:
            service = GroebnerService()
            basis = service.buchberger(generators)
            again = service.buchberger(list(basis.generators))
            assert again.generators == basis.generators
            assert service.buchberger(list(reversed(basis.generators))).generators == basis.generators

    def test_budget_exceeded(self):
        service = GroebnerService(budget=1)
        service.context = "cone [0, 1]"
        with pytest.raises(BudgetExceededError) as excinfo:
            service.normal_form(poly({(3,): 1}), [poly({(1,): 1, (0,): -1})])
        assert excinfo.value.exit_code == 3
        assert excinfo.value.details() == {"budget": 1, "context": "cone [0, 1]"}

    def test_steps_accumulate_until_reset(self):
        service = GroebnerService(budget=100)
        x_minus_one = [poly({(1,): 1, (0,): -1})]
        service.normal_form(poly({(3,): 1}), x_minus_one)
        assert service.steps == 3
        service.normal_form(poly({(2,): 1}), x_minus_one)
        assert service.steps == 5
        service.reset()
        assert service.steps == 0

    def test_positive_budget_required(self):
        with pytest.raises(ValueError):
            GroebnerService(budget=0)
