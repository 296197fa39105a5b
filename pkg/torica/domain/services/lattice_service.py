"""Exact integer lattice computations.

Smith normal form, rational kernels and the cokernel presentation
Cl = Z^n / alpha(M) used for every degree computation in the Cox ring.
All arithmetic runs on numpy object arrays holding Python integers, so no
entry can overflow.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

import numpy as np

from ..exceptions import (
    ClassGroupMismatchError,
    InternalInvariantViolation,
    RankDeficientError,
)
from ..models import ClassGroup, DivisorClass, IntMatrix, SmithDecomposition
from ..utils.rational_linalg import kernel_basis

logger = logging.getLogger(__name__)


def _min_nonzero(block: np.ndarray) -> Tuple[int, int] | None:
    best = None
    best_value = None
    rows, cols = block.shape
    for i in range(rows):
        for j in range(cols):
            value = abs(block[i, j])
            if value and (best_value is None or value < best_value):
                best, best_value = (i, j), value
    return best


def smith_normal_form(matrix: IntMatrix) -> SmithDecomposition:
    """Compute U·A·V = D with unimodular U and V.

    The pivot is always the entry of smallest nonzero absolute value in the
    remaining block. Diagonal entries come out nonnegative, satisfy
    d_1 | d_2 | ..., and zeros trail.

    Args:
        matrix: Integer matrix A.

    Returns:
        SmithDecomposition carrying U, D, V and U^{-1}.
    """
    m, n = matrix.rows, matrix.cols
    d = matrix.to_array()
    u = np.eye(m, dtype=object)
    u_inv = np.eye(m, dtype=object)
    v = np.eye(n, dtype=object)

    # Row op E on D: U <- E U and U^{-1} <- U^{-1} E^{-1}; column ops update V.
    def swap_rows(a: int, b: int) -> None:
        if a != b:
            d[[a, b]] = d[[b, a]]
            u[[a, b]] = u[[b, a]]
            u_inv[:, [a, b]] = u_inv[:, [b, a]]

    def swap_cols(a: int, b: int) -> None:
        if a != b:
            d[:, [a, b]] = d[:, [b, a]]
            v[:, [a, b]] = v[:, [b, a]]

    def add_row(target: int, source: int, factor: int) -> None:
        d[target] = d[target] + factor * d[source]
        u[target] = u[target] + factor * u[source]
        u_inv[:, source] = u_inv[:, source] - factor * u_inv[:, target]

    def add_col(target: int, source: int, factor: int) -> None:
        d[:, target] = d[:, target] + factor * d[:, source]
        v[:, target] = v[:, target] + factor * v[:, source]

    for t in range(min(m, n)):
        while True:
            position = _min_nonzero(d[t:, t:])
            if position is None:
                break
            swap_rows(t, t + position[0])
            swap_cols(t, t + position[1])
            pivot = d[t, t]
            clean = True
            for i in range(t + 1, m):
                if d[i, t]:
                    add_row(i, t, -(d[i, t] // pivot))
                    clean = clean and d[i, t] == 0
            for j in range(t + 1, n):
                if d[t, j]:
                    add_col(j, t, -(d[t, j] // pivot))
                    clean = clean and d[t, j] == 0
            if not clean:
                continue
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if d[i, j] % pivot),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, 1)
        if t < m and d[t, t] < 0:
            d[t] = -d[t]
            u[t] = -u[t]
            u_inv[:, t] = -u_inv[:, t]

    if m and n and not (u.dot(matrix.to_array()).dot(v) == d).all():
        raise InternalInvariantViolation("Smith decomposition does not reproduce D")

    return SmithDecomposition(
        u=IntMatrix.from_array(u),
        d=IntMatrix.from_array(d),
        v=IntMatrix.from_array(v),
        u_inverse=IntMatrix.from_array(u_inv),
    )


def _echelon_lattice_basis(generators: List[List[int]], size: int) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    """Triangular basis of the lattice spanned by ``generators``.

    Coordinates are processed from the last one down. Each pivot vector has
    a positive entry in its pivot coordinate and zeros in every pivot
    coordinate handled before it.
    """
    pool = [list(g) for g in generators if any(g)]
    basis: List[Tuple[int, Tuple[int, ...]]] = []
    for c in range(size - 1, -1, -1):
        while True:
            active = [g for g in pool if g[c] != 0]
            if len(active) <= 1:
                break
            active.sort(key=lambda g: abs(g[c]))
            smallest = active[0]
            for g in active[1:]:
                q = g[c] // smallest[c]
                for k in range(size):
                    g[k] -= q * smallest[k]
        active = [g for g in pool if g[c] != 0]
        if not active:
            continue
        pivot = active[0]
        pool.remove(pivot)
        if pivot[c] < 0:
            pivot = [-x for x in pivot]
        basis.append((c, tuple(pivot)))
        pool = [g for g in pool if any(g)]
    return tuple(basis)


def cokernel_presentation(alpha: IntMatrix) -> ClassGroup:
    """Presentation of Z^n / alpha(Z^d).

    Args:
        alpha: n x d integer matrix of rank d.

    Returns:
        ClassGroup with free rank n - d.

    Raises:
        RankDeficientError: If alpha has rank below d.
    """
    snf = smith_normal_form(alpha)
    diagonal = snf.diagonal
    if len(diagonal) < alpha.cols or any(x == 0 for x in diagonal):
        raise RankDeficientError(
            f"map M -> Z^{alpha.rows} has rank {snf.rank} < {alpha.cols}; rays do not span N_R"
        )
    torsion_rows = tuple(i for i, x in enumerate(diagonal) if x > 1)
    group = ClassGroup(
        n=alpha.rows,
        free_rank=alpha.rows - alpha.cols,
        torsion=tuple(diagonal[i] for i in torsion_rows),
        projection=snf.u,
        projection_inverse=snf.u_inverse,
        torsion_rows=torsion_rows,
        free_rows=tuple(range(alpha.cols, alpha.rows)),
        lattice_basis=_echelon_lattice_basis(
            [list(alpha.column(j)) for j in range(alpha.cols)], alpha.rows
        ),
    )
    logger.debug(
        "Class group: free rank %d, torsion %s", group.free_rank, list(group.torsion)
    )
    return group


def class_of_divisor(b: Sequence[int], group: ClassGroup) -> DivisorClass:
    """Class of the divisor sum b_i D_i in Cl."""
    if len(b) != group.n:
        raise ValueError(f"divisor has {len(b)} coordinates, expected {group.n}")
    image = group.projection.apply(b)
    free = tuple(image[i] for i in group.free_rows)
    torsion = tuple(image[i] % t for i, t in zip(group.torsion_rows, group.torsion))
    return DivisorClass(group, free, torsion)


def reduce_modulo_image(b: Sequence[int], group: ClassGroup) -> Tuple[int, ...]:
    """Canonical representative of b + alpha(M)."""
    out = [int(x) for x in b]
    for c, vector in group.lattice_basis:
        q = out[c] // vector[c]
        if q:
            out = [x - q * y for x, y in zip(out, vector)]
    return tuple(out)


def representative_divisor(beta: DivisorClass, group: ClassGroup) -> Tuple[int, ...]:
    """Deterministic integer divisor b with class_of_divisor(b) = beta."""
    if beta.group is not group:
        raise ClassGroupMismatchError("class does not belong to this class group")
    coordinates = [0] * group.n
    for row, residue in zip(group.torsion_rows, beta.torsion_part):
        coordinates[row] = residue
    for row, value in zip(group.free_rows, beta.free_part):
        coordinates[row] = value
    lifted = group.projection_inverse.apply(coordinates)
    return reduce_modulo_image(lifted, group)


def _primitive_scaling(vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    denominators = 1
    for x in vector:
        denominators = denominators * x.denominator // gcd(denominators, x.denominator)
    integral = [int(x * denominators) for x in vector]
    content = 0
    for x in integral:
        content = gcd(content, x)
    content = content or 1
    return tuple(Fraction(x // content) for x in integral)


def kernel_basis_rational(matrix: IntMatrix) -> List[Tuple[Fraction, ...]]:
    """Basis of the rational right kernel of ``matrix``.

    Each basis vector is scaled to a primitive integral vector whose entry in
    its free column is positive.
    """
    rows = matrix.as_rows()
    return [_primitive_scaling(v) for v in kernel_basis(rows, matrix.cols)]


def lattice_index(matrix: IntMatrix) -> int:
    """Index of the column span in its saturation (product of nonzero invariants)."""
    index = 1
    for x in smith_normal_form(matrix).diagonal:
        if x:
            index *= x
    return index


def is_primitive(vector: Sequence[int]) -> bool:
    content = 0
    for x in vector:
        content = gcd(content, int(x))
    return content == 1
