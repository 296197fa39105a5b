"""Exact linear algebra over the rationals.

Dense helpers work on lists of lists of ``Fraction``. ``SparseEchelon`` keeps
rows as ``{column: Fraction}`` dictionaries and is used for the graded
dimension computations, where generators are monomial-sparse.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Vector = List[Fraction]
Matrix = List[List[Fraction]]
SparseRow = Dict[int, Fraction]


def as_fraction_matrix(rows: Iterable[Sequence[int | Fraction]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Iterable[Sequence[int | Fraction]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form.

    Returns:
        The nonzero rows of the RREF and the list of pivot columns.
    """
    matrix = as_fraction_matrix(rows)
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][c]
        matrix[r] = [x / lead for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    return matrix[:r], pivots


def rank(rows: Iterable[Sequence[int | Fraction]]) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows: Sequence[Sequence[int | Fraction]], ncols: int) -> List[Vector]:
    """Basis of the right kernel, one vector per free column.

    Each vector has a 1 in its free column and zeros in the other free
    columns, so the basis is canonical for the row space.
    """
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis: List[Vector] = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence[int | Fraction]], rhs: Sequence[int | Fraction]) -> Optional[Vector]:
    """Solve a square system exactly; ``None`` when the matrix is singular."""
    size = len(rows)
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    reduced, pivots = rref(augmented)
    if pivots != list(range(size)):
        return None
    return [reduced[i][size] for i in range(size)]


def solve_consistent(
    rows: Sequence[Sequence[int | Fraction]], rhs: Sequence[int | Fraction]
) -> Optional[Vector]:
    """Particular solution of a possibly non-square system, or ``None``."""
    if not rows:
        return None
    ncols = len(rows[0])
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return x


def determinant(rows: Sequence[Sequence[int | Fraction]]) -> Fraction:
    matrix = as_fraction_matrix(rows)
    size = len(matrix)
    det = Fraction(1)
    for c in range(size):
        pivot = next((i for i in range(c, size) if matrix[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            matrix[c], matrix[pivot] = matrix[pivot], matrix[c]
            det = -det
        lead = matrix[c][c]
        det *= lead
        for i in range(c + 1, size):
            if matrix[i][c] != 0:
                factor = matrix[i][c] / lead
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[c])]
    return det


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    value = determinant(rows)
    if value.denominator != 1:
        raise ArithmeticError("integer matrix produced a fractional determinant")
    return value.numerator


def inverse(rows: Sequence[Sequence[int | Fraction]]) -> Optional[Matrix]:
    size = len(rows)
    augmented = [
        list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(rows)
    ]
    reduced, pivots = rref(augmented)
    if pivots[:size] != list(range(size)) or len(reduced) < size:
        return None
    return [row[size:] for row in reduced]


def _subtract_scaled(target: SparseRow, source: SparseRow, factor: Fraction) -> None:
    for k, v in source.items():
        value = target.get(k, Fraction(0)) - factor * v
        if value:
            target[k] = value
        else:
            target.pop(k, None)


class SparseEchelon:
    """Incremental echelon basis of sparse rational rows.

    Every stored row is normalized so its largest column carries a 1 and no
    two rows share that leading column.
    """

    def __init__(self) -> None:
        self._rows: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, row: SparseRow) -> SparseRow:
        """Reduce ``row`` until its leading column is not a pivot (or it is zero)."""
        work = {k: Fraction(v) for k, v in row.items() if v}
        while work:
            lead = max(work)
            basis_row = self._rows.get(lead)
            if basis_row is None:
                break
            _subtract_scaled(work, basis_row, work[lead])
        return work

    def insert(self, row: SparseRow) -> bool:
        """Add ``row`` to the span; returns True when it was independent."""
        work = self.reduce(row)
        if not work:
            return False
        lead = max(work)
        scale = work[lead]
        self._rows[lead] = {k: v / scale for k, v in work.items()}
        return True

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    echelon = SparseEchelon()
    for row in rows:
        echelon.insert(row)
    return echelon.rank


Inequality = Tuple[Tuple[Fraction, ...], Fraction]
"""(a, b) encodes a·x >= b."""


def _normalize_inequality(coeffs: Sequence[Fraction], bound: Fraction) -> Inequality:
    scale = next((abs(c) for c in coeffs if c), None)
    if scale is None:
        return tuple(Fraction(0) for _ in coeffs), bound
    return tuple(c / scale for c in coeffs), bound / scale


def is_feasible(inequalities: Iterable[Tuple[Sequence[int | Fraction], int | Fraction]], nvars: int) -> bool:
    """Exact Fourier-Motzkin feasibility test for {x : a·x >= b}.

    Args:
        inequalities: Pairs (a, b).
        nvars: Number of variables.

    Returns:
        True when some rational x satisfies every inequality.
    """
    system = {
        _normalize_inequality([Fraction(c) for c in a], Fraction(b)) for a, b in inequalities
    }
    for var in range(nvars):
        positive = [s for s in system if s[0][var] > 0]
        negative = [s for s in system if s[0][var] < 0]
        rest = {s for s in system if s[0][var] == 0}
        for pa, pb in positive:
            for na, nb in negative:
                lam, mu = -na[var], pa[var]
                coeffs = [lam * x + mu * y for x, y in zip(pa, na)]
                coeffs[var] = Fraction(0)
                rest.add(_normalize_inequality(coeffs, lam * pb + mu * nb))
        system = rest
    return all(bound <= 0 for _, bound in system)
