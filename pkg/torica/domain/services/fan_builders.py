"""Builders for standard complete simplicial fans."""

from __future__ import annotations

from itertools import combinations
from math import gcd
from typing import List, Sequence, Tuple

from ..exceptions import InvalidWeightsError
from ..models import Fan, IntMatrix
from .lattice_service import is_primitive, smith_normal_form


def _all_but_one_cones(n: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(n), n - 1))


def projective_space(d: int) -> Fan:
    """Fan of P^d: standard basis plus -(e_1 + ... + e_d)."""
    if d < 1:
        raise ValueError("projective space needs d >= 1")
    rays = [tuple(int(i == k) for k in range(d)) for i in range(d)]
    rays.append(tuple(-1 for _ in range(d)))
    return Fan.create(d, rays, _all_but_one_cones(d + 1))


def weighted_projective(weights: Sequence[int]) -> Fan:
    """Fan of P(w_1, ..., w_{d+1}) with sum w_i e_i = 0.

    When some weight equals 1, the rays of the other weights are taken as the
    standard basis of Z^d and that ray is minus the weighted sum of the
    others. Otherwise N = Z^{d+1} / Z·w is realized through a unimodular
    matrix U with U·w = ±e_1, dropping its first row.

    Raises:
        InvalidWeightsError: For nonpositive or non-coprime weights, or when
            a ray of the lattice realization is not primitive.
    """
    w = [int(x) for x in weights]
    if len(w) < 2 or any(x <= 0 for x in w):
        raise InvalidWeightsError(f"weights must be at least two positive integers, got {w}")
    content = 0
    for x in w:
        content = gcd(content, x)
    if content != 1:
        raise InvalidWeightsError(f"weights {w} are not coprime")
    n = len(w)
    d = n - 1

    ones = [k for k, x in enumerate(w) if x == 1]
    if ones:
        special = ones[-1]
        others = [j for j in range(n) if j != special]
        rays: List[Tuple[int, ...]] = [()] * n
        for position, j in enumerate(others):
            rays[j] = tuple(int(k == position) for k in range(d))
        rays[special] = tuple(-w[j] for j in others)
    else:
        snf = smith_normal_form(IntMatrix.from_rows([[x] for x in w], 1))
        u = snf.u
        rays = [tuple(u.column(j)[1:]) for j in range(n)]

    for i, ray in enumerate(rays):
        if not is_primitive(ray):
            raise InvalidWeightsError(
                f"weights {w} give the non-primitive ray {list(ray)} at position {i}"
            )
    return Fan.create(d, rays, _all_but_one_cones(n))


def product_of_fans(first: Fan, second: Fan) -> Fan:
    """Product fan in N_1 ⊕ N_2; rays of ``first`` come first."""
    zeros_first = (0,) * first.dim
    zeros_second = (0,) * second.dim
    rays = [r + zeros_second for r in first.rays] + [zeros_first + r for r in second.rays]
    cones = [
        c1 + tuple(first.n + i for i in c2) for c1 in first.max_cones for c2 in second.max_cones
    ]
    return Fan.create(first.dim + second.dim, rays, cones)


def hirzebruch_surface(a: int) -> Fan:
    """Fan of the Hirzebruch surface F_a (F_1 is P^2 blown up at a point)."""
    rays = [(1, 0), (0, 1), (-1, a), (0, -1)]
    return Fan.create(2, rays, [(0, 1), (1, 2), (2, 3), (0, 3)])


def blown_up_plane() -> Fan:
    """P^2 blown up at a torus-fixed point, with the extra ray (1, 1) last."""
    rays = [(1, 0), (0, 1), (-1, -1), (1, 1)]
    return Fan.create(2, rays, [(0, 3), (1, 3), (1, 2), (0, 2)])


def blow_up(fan: Fan, cone: Sequence[int]) -> Fan:
    """Star subdivision of ``fan`` at ``cone``.

    The new ray is the primitive vector along the sum of the cone's rays and
    is appended last. Every maximal cone containing ``cone`` is replaced by
    the cones obtained by swapping one ray of ``cone`` for the new ray. On a
    smooth cone this is the blow-up of the corresponding orbit closure.

    Raises:
        ValueError: If ``cone`` has fewer than two rays or is not a cone of
            the fan.
    """
    center = tuple(sorted(set(int(i) for i in cone)))
    if len(center) < 2:
        raise ValueError("blow-up needs a cone of dimension at least 2")
    if not any(set(center) <= set(c) for c in fan.max_cones):
        raise ValueError(f"{list(center)} is not a cone of the fan")
    total = [sum(fan.rays[i][k] for i in center) for k in range(fan.dim)]
    content = 0
    for x in total:
        content = gcd(content, abs(x))
    new_ray = tuple(x // content for x in total)
    new_index = fan.n
    cones: List[Tuple[int, ...]] = []
    for c in fan.max_cones:
        if set(center) <= set(c):
            cones.extend(tuple(sorted((set(c) - {i}) | {new_index})) for i in center)
        else:
            cones.append(c)
    return Fan.create(fan.dim, list(fan.rays) + [new_ray], cones)
