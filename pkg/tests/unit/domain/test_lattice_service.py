"""Unit tests for Smith normal form and class-group presentations."""

from fractions import Fraction

import numpy as np
import pytest

from torica.domain.exceptions import ClassGroupMismatchError, RankDeficientError
from torica.domain.models import Fan, IntMatrix
from torica.domain.services.fan_builders import product_of_fans, projective_space, weighted_projective
from torica.domain.services.lattice_service import (
    class_of_divisor,
    cokernel_presentation,
    is_primitive,
    kernel_basis_rational,
    lattice_index,
    reduce_modulo_image,
    representative_divisor,
    smith_normal_form,
)
from torica.domain.utils.rational_linalg import integer_determinant


def finite_cover_fan() -> Fan:
    rays = [(1, 0), (1, 2), (-3, -2)]
    return Fan.create(2, rays, [(0, 1), (1, 2), (0, 2)])


class TestSmithNormalForm:
    def test_diagonal_of_simple_matrix(self):
        snf = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
        assert snf.diagonal == (2, 4)
        assert snf.rank == 2

    def test_zero_matrix(self):
        snf = smith_normal_form(IntMatrix.from_rows([[0, 0], [0, 0], [0, 0]]))
        assert snf.diagonal == (0, 0)
        assert snf.rank == 0

    def test_random_matrices_satisfy_decomposition(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            rows, cols = (int(x) for x in rng.integers(1, 5, size=2))
            entries = rng.integers(-6, 7, size=(rows, cols))
            matrix = IntMatrix.from_rows(entries.tolist(), cols)
            snf = smith_normal_form(matrix)

            assert snf.u @ matrix @ snf.v == snf.d
            assert snf.u @ snf.u_inverse == IntMatrix.identity(rows)
            assert abs(integer_determinant([list(r) for r in snf.u.as_rows()])) == 1
            assert abs(integer_determinant([list(r) for r in snf.v.as_rows()])) == 1
            for i in range(rows):
                for j in range(cols):
                    if i != j:
                        assert snf.d.row(i)[j] == 0
            diagonal = snf.diagonal
            assert all(x >= 0 for x in diagonal)
            for a, b in zip(diagonal, diagonal[1:]):
                if a == 0:
                    assert b == 0
                else:
                    assert b % a == 0


class TestClassGroup:
    def test_projective_plane(self):
        group = cokernel_presentation(projective_space(2).alpha_matrix())
        assert group.free_rank == 1
        assert group.torsion == ()
        assert class_of_divisor((3, 0, 0), group).free_part == (3,)
        for i in range(3):
            e_i = tuple(int(k == i) for k in range(3))
            assert class_of_divisor(e_i, group).free_part == (1,)

    def test_product_of_lines(self):
        p1 = projective_space(1)
        group = cokernel_presentation(product_of_fans(p1, p1).alpha_matrix())
        assert group.free_rank == 2
        assert class_of_divisor((3, 0, 3, 0), group).free_part == (3, 3)
        assert class_of_divisor((1, 0, 0, 0), group) == class_of_divisor((0, 1, 0, 0), group)

    def test_weighted_plane_degrees(self):
        group = cokernel_presentation(weighted_projective((1, 1, 2)).alpha_matrix())
        degrees = [class_of_divisor(tuple(int(k == i) for k in range(3)), group).free_part for i in range(3)]
        assert degrees == [(1,), (1,), (2,)]

    def test_torsion_of_finite_cover(self):
        group = cokernel_presentation(finite_cover_fan().alpha_matrix())
        assert group.free_rank == 1
        assert group.torsion == (2,)

    def test_rank_deficient_alpha(self):
        with pytest.raises(RankDeficientError):
            cokernel_presentation(IntMatrix.from_rows([[1, 0], [-1, 0]]))

    def test_wrong_length_divisor(self):
        group = cokernel_presentation(projective_space(2).alpha_matrix())
        with pytest.raises(ValueError):
            class_of_divisor((1, 0), group)

    def test_image_of_alpha_has_zero_class(self):
        fan = finite_cover_fan()
        group = cokernel_presentation(fan.alpha_matrix())
        for m in [(1, 0), (0, 1), (2, -3)]:
            b = tuple(sum(x * e for x, e in zip(m, ray)) for ray in fan.rays)
            assert class_of_divisor(b, group).is_zero()

    @pytest.mark.parametrize(
        "fan",
        [
            projective_space(2),
            projective_space(3),
            weighted_projective((1, 1, 2)),
            finite_cover_fan(),
            product_of_fans(projective_space(1), projective_space(1)),
        ],
        ids=["P2", "P3", "P112", "cover", "P1xP1"],
    )
    def test_representative_round_trip(self, fan: Fan):
        group = cokernel_presentation(fan.alpha_matrix())
        rng = np.random.default_rng(3)
        for _ in range(100):
            b = tuple(int(x) for x in rng.integers(-5, 6, size=fan.n))
            beta = class_of_divisor(b, group)
            representative = representative_divisor(beta, group)
            assert class_of_divisor(representative, group) == beta
            assert reduce_modulo_image(b, group) == representative

    def test_representative_rejects_foreign_class(self):
        first = cokernel_presentation(projective_space(2).alpha_matrix())
        second = cokernel_presentation(projective_space(2).alpha_matrix())
        beta = class_of_divisor((1, 0, 0), first)
        with pytest.raises(ClassGroupMismatchError):
            representative_divisor(beta, second)

    def test_classes_of_different_groups_do_not_add(self):
        first = cokernel_presentation(projective_space(2).alpha_matrix())
        second = cokernel_presentation(projective_space(2).alpha_matrix())
        with pytest.raises(ClassGroupMismatchError):
            class_of_divisor((1, 0, 0), first) + class_of_divisor((1, 0, 0), second)

    def test_class_arithmetic(self):
        group = cokernel_presentation(finite_cover_fan().alpha_matrix())
        beta = class_of_divisor((0, 1, 0), group)
        assert (beta + beta) == 2 * beta
        assert (beta - beta).is_zero()
        assert beta.to_dict()["torsion"][0] in (0, 1)


class TestLatticeHelpers:
    def test_kernel_of_projective_plane(self):
        assert kernel_basis_rational(projective_space(2).ray_matrix()) == [(1, 1, 1)]

    def test_kernel_is_integral_and_primitive(self):
        (relation,) = kernel_basis_rational(weighted_projective((1, 1, 2)).ray_matrix())
        assert all(isinstance(x, Fraction) and x.denominator == 1 for x in relation)
        assert relation == (1, 1, 2)

    def test_lattice_index(self):
        assert lattice_index(finite_cover_fan().ray_matrix()) == 2
        assert lattice_index(projective_space(3).ray_matrix()) == 1

    def test_is_primitive(self):
        assert is_primitive((1, 2))
        assert not is_primitive((2, 4))
        assert not is_primitive((0, 0))
