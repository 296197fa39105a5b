"""Exact vertices and lattice points of {m : <m, e_i> >= -b_i}.

Vertices come from every d-subset of the inequalities whose normals are
independent; lattice points are enumerated over the bounding box of the
vertices, solving for the first coordinate interval directly so only the
remaining d-1 coordinates are scanned.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, product
from typing import List, Sequence, Tuple

import numpy as np

from .rational_linalg import rank, solve

RationalPoint = Tuple[Fraction, ...]
LatticePoint = Tuple[int, ...]


def satisfies(point: Sequence[Fraction | int], normals: Sequence[Sequence[int]], b: Sequence[int]) -> bool:
    return all(
        sum(Fraction(x) * e for x, e in zip(point, normal)) >= -bound
        for normal, bound in zip(normals, b)
    )


def polytope_vertices(
    normals: Sequence[Sequence[int]], b: Sequence[int], dim: int
) -> List[RationalPoint]:
    """Sorted, deduplicated vertex list; empty when the polytope is empty."""
    vertices = set()
    for subset in combinations(range(len(normals)), dim):
        rows = [list(normals[i]) for i in subset]
        point = solve(rows, [-b[i] for i in subset])
        if point is None:
            continue
        if satisfies(point, normals, b):
            vertices.add(tuple(point))
    return sorted(vertices)


def is_bounded(normals: Sequence[Sequence[int]], dim: int) -> bool:
    """Necessary condition used as a guard: the normals span M_R."""
    return rank([list(n) for n in normals]) == dim if normals else dim == 0


def lattice_points(
    normals: Sequence[Sequence[int]],
    b: Sequence[int],
    vertices: Sequence[RationalPoint],
    dim: int,
) -> List[LatticePoint]:
    """All integer points of the polytope, sorted lexicographically."""
    if not vertices:
        return []
    corners = np.array(vertices, dtype=object)
    low = [math.floor(min(corners[:, k])) for k in range(dim)]
    high = [math.ceil(max(corners[:, k])) for k in range(dim)]

    points: List[LatticePoint] = []
    tails = product(*(range(low[k], high[k] + 1) for k in range(1, dim)))
    for tail in tails:
        start, stop = low[0], high[0]
        feasible = True
        for normal, bound in zip(normals, b):
            rest = sum(normal[k] * tail[k - 1] for k in range(1, dim))
            slack = -bound - rest
            lead = normal[0]
            if lead > 0:
                start = max(start, math.ceil(Fraction(slack, lead)))
            elif lead < 0:
                stop = min(stop, math.floor(Fraction(slack, lead)))
            elif slack > 0:
                feasible = False
                break
        if feasible:
            points.extend((x,) + tuple(tail) for x in range(start, stop + 1))
    return sorted(points)
