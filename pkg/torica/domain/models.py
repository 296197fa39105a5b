"""Domain models and value objects for torica.

These dataclasses describe fans, class groups, graded polynomials, divisors
and reports. They are immutable after construction and free of IO.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, auto
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .exceptions import ClassGroupMismatchError, FanValidationError

Exponent = Tuple[int, ...]
"""Exponent vector (a_1, ..., a_n) of a monomial z^a of the Cox ring."""


def format_rational(value: Fraction | int) -> str:
    """Serialize a rational as "p/q" (or "p" when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str | int) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """Dense integer matrix stored row-major with arbitrary-precision entries.

    Attributes:
        rows: Number of rows.
        cols: Number of columns.
        entries: Row-major tuple of Python integers.
    """

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"IntMatrix of shape {self.rows}x{self.cols} needs "
                f"{self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_array(cls, array: np.ndarray) -> IntMatrix:
        r, c = array.shape
        return cls(r, c, tuple(int(x) for x in array.reshape(-1)))

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)], size)

    def to_array(self) -> np.ndarray:
        """Object-dtype numpy array holding Python integers (no overflow)."""
        array = np.empty((self.rows, self.cols), dtype=object)
        for k, value in enumerate(self.entries):
            array[k // self.cols, k % self.cols] = int(value)
        return array

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def as_rows(self) -> List[Tuple[int, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch in IntMatrix product")
        return IntMatrix.from_rows(
            [
                [sum(a * b for a, b in zip(self.row(i), other.column(j))) for j in range(other.cols)]
                for i in range(self.rows)
            ],
            other.cols,
        )

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        return tuple(sum(a * int(b) for a, b in zip(self.row(i), vector)) for i in range(self.rows))


@dataclass(frozen=True, slots=True)
class SmithDecomposition:
    """U·A·V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...

    ``u_inverse`` is kept alongside U so preimages can be formed exactly.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    u_inverse: IntMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.d.entries[i * self.d.cols + i] for i in range(min(self.d.rows, self.d.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


@dataclass(frozen=True, eq=False, slots=True)
class ClassGroup:
    """Presentation of Cl = Z^n / alpha(M).

    Classes are compared by identity: coordinates of a ``DivisorClass`` only
    mean something relative to the group that produced them.

    Attributes:
        n: Number of coordinates of Z^n (rays of the fan).
        free_rank: Rank of the free part.
        torsion: Invariant factors t_1 | t_2 | ... each > 1.
        projection: Unimodular U with U·alpha·V = D.
        projection_inverse: U^{-1}.
        torsion_rows: Rows of U·a read modulo the torsion invariants.
        free_rows: Rows of U·a giving the free coordinates.
        lattice_basis: Echelon basis of alpha(M) as (pivot row, column) pairs.
    """

    n: int
    free_rank: int
    torsion: Tuple[int, ...]
    projection: IntMatrix
    projection_inverse: IntMatrix
    torsion_rows: Tuple[int, ...]
    free_rows: Tuple[int, ...]
    lattice_basis: Tuple[Tuple[int, Tuple[int, ...]], ...]

    def zero(self) -> DivisorClass:
        return DivisorClass(self, (0,) * self.free_rank, (0,) * len(self.torsion))


@dataclass(frozen=True, slots=True)
class DivisorClass:
    """Element of Cl: free coordinates plus reduced torsion residues."""

    group: ClassGroup
    free_part: Tuple[int, ...]
    torsion_part: Tuple[int, ...]

    def _check(self, other: DivisorClass) -> None:
        if self.group is not other.group:
            raise ClassGroupMismatchError("divisor classes belong to different class groups")

    def _make(self, free: Iterable[int], torsion: Iterable[int]) -> DivisorClass:
        reduced = tuple(r % t for r, t in zip(torsion, self.group.torsion))
        return DivisorClass(self.group, tuple(free), reduced)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return self._make(
            (a + b for a, b in zip(self.free_part, other.free_part)),
            (a + b for a, b in zip(self.torsion_part, other.torsion_part)),
        )

    def __neg__(self) -> DivisorClass:
        return self._make((-a for a in self.free_part), (-a for a in self.torsion_part))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + (-other)

    def __mul__(self, k: int) -> DivisorClass:
        return self._make((k * a for a in self.free_part), (k * a for a in self.torsion_part))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.free_part) and not any(self.torsion_part)

    def to_dict(self) -> Dict[str, Any]:
        return {"free": list(self.free_part), "torsion": list(self.torsion_part)}

    def __str__(self) -> str:
        parts = [str(x) for x in self.free_part]
        parts += [f"{r} mod {t}" for r, t in zip(self.torsion_part, self.group.torsion)]
        return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True, slots=True)
class Fan:
    """Rational simplicial fan given by primitive rays and maximal cones.

    Attributes:
        dim: Dimension d of N_R.
        rays: Primitive generators e_1..e_n (0-based in code).
        max_cones: Sorted index tuples of the d-dimensional cones.
    """

    dim: int
    rays: Tuple[Tuple[int, ...], ...]
    max_cones: Tuple[Tuple[int, ...], ...]

    @classmethod
    def create(cls, dim: int, rays: Iterable[Sequence[int]], max_cones: Iterable[Iterable[int]]) -> Fan:
        rays_t = tuple(tuple(int(x) for x in r) for r in rays)
        cones_t = tuple(sorted(tuple(sorted(int(i) for i in c)) for c in max_cones))
        return cls(int(dim), rays_t, cones_t)

    @property
    def n(self) -> int:
        return len(self.rays)

    def ray_matrix(self) -> IntMatrix:
        """d x n matrix whose columns are the rays."""
        return IntMatrix.from_rows([[r[k] for r in self.rays] for k in range(self.dim)], self.n)

    def alpha_matrix(self) -> IntMatrix:
        """n x d matrix of alpha: M -> Z^n, m -> (<m, e_i>)_i."""
        return IntMatrix.from_rows(self.rays, self.dim)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }


@dataclass(frozen=True, slots=True)
class PrimitiveCollection:
    """Ray subset generating no cone although every proper subset does."""

    indices: Tuple[int, ...]


@dataclass(frozen=True, slots=True)
class CoordinateSubspace:
    """Linear subspace {z_i = 0 : i in zero_indices} of A^n."""

    zero_indices: Tuple[int, ...]

    @property
    def codimension(self) -> int:
        return len(self.zero_indices)


class FanIssueKind(Enum):
    INVALID_STRUCTURE = auto()
    NON_PRIMITIVE_RAY = auto()
    DUPLICATE_RAY = auto()
    DEGENERATE_CONE = auto()
    BAD_INTERSECTION = auto()
    NOT_COMPLETE = auto()


@dataclass(frozen=True, slots=True)
class FanIssue:
    kind: FanIssueKind
    error: FanValidationError

    def to_dict(self) -> Dict[str, Any]:
        payload = self.error.to_dict()
        payload["kind"] = self.kind.name
        return payload


@dataclass(frozen=True, slots=True)
class FanValidationReport:
    """Outcome of checking the fan axioms."""

    issues: Tuple[FanIssue, ...] = ()
    walls_checked: int = 0
    directions_sampled: int = 0

    @property
    def valid(self) -> bool:
        return not self.issues

    def raise_first(self) -> None:
        if self.issues:
            raise self.issues[0].error

    def to_dict(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "issues": [i.to_dict() for i in self.issues],
            "walls_checked": self.walls_checked,
            "directions_sampled": self.directions_sampled,
        }


class WeightedProjectiveKind(Enum):
    IS_WEIGHTED_PROJECTIVE = auto()
    FINITE_COVER_OF_FAN = auto()
    NOT_APPLICABLE = auto()


@dataclass(frozen=True, slots=True)
class WeightedProjectiveVerdict:
    kind: WeightedProjectiveKind
    weights: Tuple[int, ...] = ()


@dataclass(frozen=True, slots=True)
class EulerVector:
    """Rational relation phi with sum phi_i e_i = 0."""

    phi: Tuple[Fraction, ...]


@dataclass(frozen=True, slots=True)
class GradedPolynomial:
    """Homogeneous element of the Cox ring.

    Attributes:
        degree: Class of every term.
        terms: Exponent vector -> nonzero rational coefficient.
    """

    degree: DivisorClass
    terms: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {tuple(a): Fraction(c) for a, c in self.terms.items() if c != 0}
        object.__setattr__(self, "terms", dict(sorted(cleaned.items())))

    @property
    def nvars(self) -> int:
        return self.degree.group.n

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    def scale(self, factor: Fraction | int) -> GradedPolynomial:
        return GradedPolynomial(self.degree, {a: c * factor for a, c in self.terms.items()})

    def __add__(self, other: GradedPolynomial) -> GradedPolynomial:
        if self.degree != other.degree:
            raise ValueError("cannot add polynomials of different degrees")
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, Fraction(0)) + c
        return GradedPolynomial(self.degree, out)

    def __sub__(self, other: GradedPolynomial) -> GradedPolynomial:
        return self + other.scale(-1)

    def __mul__(self, other: GradedPolynomial) -> GradedPolynomial:
        out: Dict[Exponent, Fraction] = {}
        for a, c in self.terms.items():
            for b, e in other.terms.items():
                key = tuple(x + y for x, y in zip(a, b))
                out[key] = out.get(key, Fraction(0)) + c * e
        return GradedPolynomial(self.degree + other.degree, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.degree == other.degree and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self.terms.items())))


@dataclass(frozen=True, slots=True)
class TorusInvariantDivisor:
    """D = sum b_i D_i."""

    b: Tuple[int, ...]

    @classmethod
    def of(cls, b: Iterable[int]) -> TorusInvariantDivisor:
        return cls(tuple(int(x) for x in b))


RationalPoint = Tuple[Fraction, ...]
LatticePoint = Tuple[int, ...]


@dataclass(frozen=True, slots=True)
class SupportPolytope:
    """Delta_D = {m : <m, e_i> >= -b_i for all i}."""

    divisor: TorusInvariantDivisor
    normals: Tuple[Tuple[int, ...], ...]
    vertices: Tuple[RationalPoint, ...]
    lattice_points: Tuple[LatticePoint, ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def contains(self, m: Sequence[Fraction | int]) -> bool:
        return all(
            sum(Fraction(x) * e for x, e in zip(m, normal)) >= -b
            for normal, b in zip(self.normals, self.divisor.b)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": [[format_rational(x) for x in v] for v in self.vertices],
            "lattice_points": [list(p) for p in self.lattice_points],
        }


@dataclass(frozen=True, slots=True)
class PolytopeFace:
    """Face Delta_tau of an ample support polytope.

    Attributes:
        cone: The cone tau (sorted ray indices).
        dimension: d - dim tau.
        vertices: Vertices of the face.
        lattice_points: Lattice points of the face.
        direction_space: Basis of the rational directions {m : <m, e_i> = 0, i in tau}.
    """

    cone: Tuple[int, ...]
    dimension: int
    vertices: Tuple[RationalPoint, ...]
    lattice_points: Tuple[LatticePoint, ...]
    direction_space: Tuple[RationalPoint, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cone": list(self.cone),
            "dimension": self.dimension,
            "vertices": [[format_rational(x) for x in v] for v in self.vertices],
            "lattice_point_count": len(self.lattice_points),
        }


@dataclass(frozen=True, slots=True)
class CertificateEntry:
    """Outcome of one Groebner check (one cone or one face)."""

    target: Tuple[int, ...]
    passed: bool
    method: str

    def to_dict(self) -> Dict[str, Any]:
        return {"target": list(self.target), "passed": self.passed, "method": self.method}


@dataclass(frozen=True, slots=True)
class Certificate:
    """Per-cone or per-face certificate table."""

    kind: str
    entries: Tuple[CertificateEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> List[CertificateEntry]:
        return [e for e in self.entries if not e.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "entries": [e.to_dict() for e in self.entries],
        }


@dataclass(slots=True)
class HodgeReport:
    """Hodge-theoretic dimensions of a hypersurface and its complement.

    Per-p tables are keyed by p = 0..d. ``None`` marks values that were not
    computed because a precondition was not certified.
    """

    dim: int
    degree: DivisorClass
    betti: Tuple[int, ...]
    gr_complement: Dict[int, int] = field(default_factory=dict)
    primitive: Dict[int, int] = field(default_factory=dict)
    primitive_via_r1: Dict[int, Optional[int]] = field(default_factory=dict)
    affine: Dict[int, Optional[int]] = field(default_factory=dict)
    moduli_tangent_dim: Optional[int] = None
    aut_dimension: Optional[int] = None
    quasi_smooth: Optional[bool] = None
    nondegenerate: Optional[bool] = None
    ample: Optional[bool] = None
    cartier: Optional[bool] = None
    certified: bool = True
    certificates: List[Certificate] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        def table(values: Mapping[int, Optional[int]]) -> Dict[str, Optional[int]]:
            return {str(p): values[p] for p in sorted(values)}

        return {
            "dim": self.dim,
            "degree": self.degree.to_dict(),
            "betti": list(self.betti),
            "gr_complement": table(self.gr_complement),
            "primitive": table(self.primitive),
            "primitive_via_r1": table(self.primitive_via_r1),
            "affine": table(self.affine),
            "moduli_tangent_dim": self.moduli_tangent_dim,
            "aut_dimension": self.aut_dimension,
            "flags": {
                "quasi_smooth": self.quasi_smooth,
                "nondegenerate": self.nondegenerate,
                "ample": self.ample,
                "cartier": self.cartier,
                "certified": self.certified,
            },
            "certificates": [c.to_dict() for c in self.certificates],
        }


class OutputFormat(Enum):
    JSON = "json"
    TABLE = "table"


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Resolved settings for one CLI invocation.

    Attributes:
        command: Subcommand path, e.g. ("fan", "check").
        inputs: Input file paths in positional order.
        budget: Groebner reduction budget (> 0).
        seed: Seed for randomized checks and polynomials.
        output_format: JSON or table.
        unsafe_skip_checks: Skip certificate checks (results are watermarked).
        quasi_smooth_method: "chart" or "rabinowitsch".
        direction_samples: Random directions used by the completeness check.
    """

    command: Tuple[str, ...]
    inputs: Tuple[str, ...] = ()
    budget: int = 1_000_000
    seed: int = 1
    output_format: OutputFormat = OutputFormat.JSON
    unsafe_skip_checks: bool = False
    quasi_smooth_method: str = "chart"
    direction_samples: int = 100
    divisor: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True, slots=True)
class HodgeDiamond:
    """Hodge numbers h^{p,q} of a quasi-smooth ample hypersurface of dimension ``dim``."""

    dim: int
    numbers: Tuple[Tuple[int, ...], ...]

    def h(self, p: int, q: int) -> int:
        if 0 <= p <= self.dim and 0 <= q <= self.dim:
            return self.numbers[p][q]
        return 0

    @property
    def euler_characteristic(self) -> int:
        return sum(
            (-1) ** (p + q) * self.numbers[p][q]
            for p in range(self.dim + 1)
            for q in range(self.dim + 1)
        )

    def betti(self, k: int) -> int:
        return sum(self.h(p, k - p) for p in range(k + 1))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "h": [list(row) for row in self.numbers],
            "euler_characteristic": self.euler_characteristic,
        }


FormKey = Tuple[Exponent, Tuple[int, ...]]
"""(monomial exponent, strictly increasing index tuple) of one form term."""


def sort_with_sign(indices: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sort a wedge of basis vectors; returns (sign, sorted), sign 0 on a repeat."""
    items = list(indices)
    if len(set(items)) != len(items):
        return 0, ()
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign, tuple(items)


@dataclass(frozen=True, slots=True)
class _PolynomialForm:
    """Sparse element of S tensor an exterior power, in a fixed basis.

    ``nvars`` is the number of Cox variables, ``rank`` the size of the
    underlying basis (n for dz_i, d for m_k) and ``degree`` the form degree.
    Keys are normalized on construction: index tuples are sorted with the
    permutation sign, repeated indices drop the term.
    """

    nvars: int
    rank: int
    degree: int
    terms: Mapping[FormKey, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: Dict[FormKey, Fraction] = {}
        for (a, indices), c in self.terms.items():
            sign, ordered = sort_with_sign(indices)
            if not sign or not c:
                continue
            if len(ordered) != self.degree or any(not 0 <= k < self.rank for k in ordered):
                raise ValueError(f"index set {list(indices)} does not fit a {self.degree}-form")
            if len(a) != self.nvars:
                raise ValueError(f"exponent {list(a)} has the wrong length")
            key = (tuple(a), ordered)
            cleaned[key] = cleaned.get(key, Fraction(0)) + sign * Fraction(c)
        object.__setattr__(self, "terms", {k: v for k, v in sorted(cleaned.items()) if v})

    def _like(self, terms: Mapping[FormKey, Fraction], degree: Optional[int] = None):
        return type(self)(self.nvars, self.rank, self.degree if degree is None else degree, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[Tuple[FormKey, Fraction]]:
        return iter(self.terms.items())

    def _check(self, other: _PolynomialForm) -> None:
        if type(other) is not type(self) or (other.nvars, other.rank) != (self.nvars, self.rank):
            raise ValueError("forms live in different modules")

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree and not (other.is_zero() or self.is_zero()):
            raise ValueError("cannot add forms of different degrees")
        degree = self.degree if not self.is_zero() else other.degree
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return self._like(out, degree)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor: Fraction | int):
        return self._like({k: c * factor for k, c in self.terms.items()})

    def times_polynomial(self, terms: Mapping[Exponent, Fraction]):
        """Multiply every coefficient by the polynomial given as exponent -> coefficient."""
        out: Dict[FormKey, Fraction] = {}
        for (a, indices), c in self.terms.items():
            for b, e in terms.items():
                key = (tuple(x + y for x, y in zip(a, b)), indices)
                out[key] = out.get(key, Fraction(0)) + c * e
        return self._like(out)

    def wedge(self, other):
        self._check(other)
        out: Dict[FormKey, Fraction] = {}
        for (a, left), c in self.terms.items():
            for (b, right), e in other.terms.items():
                sign, ordered = sort_with_sign(left + right)
                if not sign:
                    continue
                key = (tuple(x + y for x, y in zip(a, b)), ordered)
                out[key] = out.get(key, Fraction(0)) + sign * c * e
        return self._like(out, self.degree + other.degree)

    def coefficient(self, indices: Sequence[int]) -> Dict[Exponent, Fraction]:
        """Polynomial coefficient of one basis element, as exponent -> coefficient."""
        sign, ordered = sort_with_sign(indices)
        return {a: sign * c for (a, key), c in self.terms.items() if key == ordered and sign}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _PolynomialForm) or type(other) is not type(self):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return (self.nvars, self.rank) == (other.nvars, other.rank)
        return (self.nvars, self.rank, self.degree) == (other.nvars, other.rank, other.degree) and dict(
            self.terms
        ) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.nvars, self.rank, tuple(self.terms.items())))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "terms": [
                {"exponent": list(a), "indices": list(indices), "coefficient": format_rational(c)}
                for (a, indices), c in self.terms.items()
            ],
        }


@dataclass(frozen=True, slots=True, eq=False)
class ExteriorForm(_PolynomialForm):
    """Polynomial differential form sum c z^a dz_I, with rank = nvars."""

    @classmethod
    def zero(cls, nvars: int, degree: int) -> ExteriorForm:
        return cls(nvars, nvars, degree)

    @classmethod
    def function(cls, nvars: int, terms: Mapping[Exponent, Fraction | int]) -> ExteriorForm:
        """A 0-form."""
        return cls(nvars, nvars, 0, {(tuple(a), ()): c for a, c in terms.items()})

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (a, indices), c in self.terms.items():
            monomial = "*".join(f"z{i + 1}^{x}" if x > 1 else f"z{i + 1}" for i, x in enumerate(a) if x)
            wedge = "^".join(f"dz{i + 1}" for i in indices)
            parts.append(" ".join(s for s in (format_rational(c), monomial, wedge) if s))
        return " + ".join(parts)


@dataclass(frozen=True, slots=True, eq=False)
class MForm(_PolynomialForm):
    """Element sum c z^a m_K of S tensor the exterior algebra of M, rank = d."""

    @classmethod
    def zero(cls, nvars: int, rank: int, degree: int) -> MForm:
        return cls(nvars, rank, degree)


@dataclass(frozen=True, slots=True)
class CheckResult:
    """One named identity check of a verification suite."""

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}
