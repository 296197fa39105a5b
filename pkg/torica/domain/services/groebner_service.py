"""Groebner Service - Domain Layer

A small exact Groebner engine over Q with the degree reverse lexicographic
order. It answers ideal-triviality and radical-membership questions for the
quasi-smoothness and nondegeneracy certificates.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from ..exceptions import BudgetExceededError
from ..models import GradedPolynomial

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]

DEFAULT_BUDGET = 1_000_000


def degrevlex_key(a: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: larger key means larger monomial in degrevlex."""
    return sum(a), tuple(-x for x in reversed(a))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    """Sparse polynomial over Q in a fixed number of variables."""

    __slots__ = ("nvars", "terms", "_lead")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], Fraction | int]] = None):
        self.nvars = nvars
        self.terms: Dict[Monomial, Fraction] = {}
        for a, c in (terms or {}).items():
            if c:
                key = tuple(int(x) for x in a)
                if len(key) != nvars:
                    raise ValueError(f"exponent {key} does not have {nvars} entries")
                self.terms[key] = Fraction(c)
        self._lead: Optional[Monomial] = None

    @classmethod
    def constant(cls, nvars: int, value: Fraction | int = 1) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> MultiPoly:
        return cls(nvars, {tuple(int(k == index) for k in range(nvars)): 1})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient: Fraction | int = 1) -> MultiPoly:
        return cls(len(exponent), {tuple(exponent): coefficient})

    @classmethod
    def from_graded(cls, f: GradedPolynomial) -> MultiPoly:
        return cls(f.nvars, dict(f.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return len(self.terms) == 1 and not any(self.leading_monomial())

    def leading_monomial(self) -> Monomial:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lead = max(self.terms, key=degrevlex_key)
        return self._lead

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def monic(self) -> MultiPoly:
        lc = self.leading_coefficient()
        return MultiPoly(self.nvars, {a: c / lc for a, c in self.terms.items()})

    def scale(self, factor: Fraction | int) -> MultiPoly:
        return MultiPoly(self.nvars, {a: c * factor for a, c in self.terms.items()})

    def shift(self, coefficient: Fraction, exponent: Monomial) -> MultiPoly:
        """coefficient * z^exponent * self."""
        return MultiPoly(
            self.nvars,
            {tuple(x + y for x, y in zip(a, exponent)): c * coefficient for a, c in self.terms.items()},
        )

    def __add__(self, other: MultiPoly) -> MultiPoly:
        out = dict(self.terms)
        for a, c in other.terms.items():
            value = out.get(a, Fraction(0)) + c
            if value:
                out[a] = value
            else:
                out.pop(a, None)
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> MultiPoly:
        return self.scale(-1)

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        out: Dict[Monomial, Fraction] = {}
        for a, c in self.terms.items():
            for b, e in other.terms.items():
                key = tuple(x + y for x, y in zip(a, b))
                out[key] = out.get(key, Fraction(0)) + c * e
        return MultiPoly(self.nvars, out)

    def __pow__(self, k: int) -> MultiPoly:
        result = MultiPoly.constant(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return "MultiPoly(0)"
        parts = [
            f"{c}*z^{list(a)}" for a, c in sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)
        ]
        return "MultiPoly(" + " + ".join(parts) + ")"

    def with_extra_variables(self, count: int) -> MultiPoly:
        """Same polynomial in ``count`` more trailing variables."""
        return MultiPoly(self.nvars + count, {a + (0,) * count: c for a, c in self.terms.items()})

    def substitute_ones(self, indices: Iterable[int]) -> MultiPoly:
        """Set z_j = 1 for j in ``indices`` and drop those variables."""
        dropped = set(indices)
        keep = [k for k in range(self.nvars) if k not in dropped]
        out: Dict[Monomial, Fraction] = {}
        for a, c in self.terms.items():
            key = tuple(a[k] for k in keep)
            out[key] = out.get(key, Fraction(0)) + c
        return MultiPoly(len(keep), out)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Groebner basis sorted by leading monomial."""

    generators: Tuple[MultiPoly, ...]

    @property
    def is_unit_ideal(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def __len__(self) -> int:
        return len(self.generators)


class GroebnerService:
    """Buchberger's algorithm with a reduction budget.

    Every monomial cancellation in a reduction costs one step. Steps
    accumulate over all calls on one instance until ``reset()``. HodgeService
    creates one instance per certificate, so the budget bounds a whole
    certificate and each certificate starts from zero.

    Args:
        budget: Maximum number of reduction steps.
    """

    def __init__(self, budget: int = DEFAULT_BUDGET):
        if budget <= 0:
            raise ValueError("budget must be positive")
        self.budget = budget
        self.steps = 0
        self.context: Optional[str] = None

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceededError(self.budget, self.context)

    def reset(self) -> None:
        self.steps = 0

    def normal_form(self, g: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
        """Fully reduced remainder of g by ``basis``."""
        divisors = [(b.leading_monomial(), b.leading_coefficient(), b) for b in basis if not b.is_zero()]
        work = dict(g.terms)
        remainder: Dict[Monomial, Fraction] = {}
        while work:
            lead = max(work, key=degrevlex_key)
            coefficient = work[lead]
            for lm, lc, b in divisors:
                if divides(lm, lead):
                    self._tick()
                    factor = coefficient / lc
                    shift = tuple(x - y for x, y in zip(lead, lm))
                    for a, c in b.terms.items():
                        key = tuple(x + y for x, y in zip(a, shift))
                        value = work.get(key, Fraction(0)) - factor * c
                        if value:
                            work[key] = value
                        else:
                            work.pop(key, None)
                    break
            else:
                remainder[lead] = coefficient
                del work[lead]
        return MultiPoly(g.nvars, remainder)

    def s_polynomial(self, f: MultiPoly, g: MultiPoly) -> MultiPoly:
        lf, lg = f.leading_monomial(), g.leading_monomial()
        common = lcm(lf, lg)
        left = f.shift(1 / f.leading_coefficient(), tuple(x - y for x, y in zip(common, lf)))
        right = g.shift(1 / g.leading_coefficient(), tuple(x - y for x, y in zip(common, lg)))
        return left - right

    def buchberger(self, generators: Sequence[MultiPoly], stop_at_unit: bool = False) -> GroebnerBasis:
        """Reduced Groebner basis of the ideal generated by ``generators``.

        Pairs are processed by the normal selection strategy (smallest lcm
        first); pairs ruled out by the coprime-leading-monomial or chain
        criteria are skipped.

        Args:
            generators: Polynomials sharing one variable count.
            stop_at_unit: Return {1} as soon as a nonzero constant appears.

        Raises:
            BudgetExceededError: When the reduction budget runs out.
        """
        nvars = generators[0].nvars if generators else 0
        if any(g.nvars != nvars for g in generators):
            raise ValueError("generators use different numbers of variables")
        basis: List[MultiPoly] = []
        for g in generators:
            if g.is_zero():
                continue
            if g.is_constant():
                return GroebnerBasis((MultiPoly.constant(nvars),))
            basis.append(g.monic())
        pairs: Set[Tuple[int, int]] = {(i, j) for j in range(len(basis)) for i in range(j)}

        while pairs:
            i, j = min(
                pairs,
                key=lambda p: (
                    degrevlex_key(lcm(basis[p[0]].leading_monomial(), basis[p[1]].leading_monomial())),
                    p,
                ),
            )
            pairs.discard((i, j))
            li, lj = basis[i].leading_monomial(), basis[j].leading_monomial()
            if all(x == 0 or y == 0 for x, y in zip(li, lj)):
                continue
            if self._chain_criterion(i, j, basis, pairs):
                continue
            remainder = self.normal_form(self.s_polynomial(basis[i], basis[j]), basis)
            if remainder.is_zero():
                continue
            if remainder.is_constant():
                if stop_at_unit:
                    return GroebnerBasis((MultiPoly.constant(nvars),))
            new_index = len(basis)
            basis.append(remainder.monic())
            pairs.update((k, new_index) for k in range(new_index))

        return GroebnerBasis(tuple(self._reduce_basis(basis)))

    def _chain_criterion(self, i: int, j: int, basis: List[MultiPoly], pairs: Set[Tuple[int, int]]) -> bool:
        common = lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
                continue
            if divides(basis[k].leading_monomial(), common):
                return True
        return False

    def _reduce_basis(self, basis: List[MultiPoly]) -> List[MultiPoly]:
        if any(g.is_constant() for g in basis):
            return [MultiPoly.constant(basis[0].nvars)]
        minimal: List[MultiPoly] = []
        for idx, g in enumerate(basis):
            lm = g.leading_monomial()
            redundant = any(
                divides(h.leading_monomial(), lm)
                and (h.leading_monomial() != lm or other < idx)
                for other, h in enumerate(basis)
                if other != idx
            )
            if not redundant:
                minimal.append(g)
        reduced = []
        for idx, g in enumerate(minimal):
            others = minimal[:idx] + minimal[idx + 1:]
            lead = MultiPoly(g.nvars, {g.leading_monomial(): g.leading_coefficient()})
            tail = g - lead
            reduced.append((lead + self.normal_form(tail, others)).monic())
        return sorted(reduced, key=lambda p: degrevlex_key(p.leading_monomial()))

    def ideal_contains_one(self, generators: Sequence[MultiPoly]) -> bool:
        return self.buchberger(generators, stop_at_unit=True).is_unit_ideal

    def radical_membership(self, g: MultiPoly, generators: Sequence[MultiPoly]) -> bool:
        """True iff g lies in the radical of the ideal (Rabinowitsch trick)."""
        extended = [h.with_extra_variables(1) for h in generators]
        y = MultiPoly.variable(g.nvars + 1, g.nvars)
        one = MultiPoly.constant(g.nvars + 1)
        extended.append(one - y * g.with_extra_variables(1))
        return self.ideal_contains_one(extended)

    def ideal_contains(self, g: MultiPoly, generators: Sequence[MultiPoly]) -> bool:
        basis = self.buchberger(generators)
        return self.normal_form(g, basis.generators).is_zero()
