"""Independent brute-force oracles used by the tests.

Everything here recomputes quantities from first principles (circuit signs
of a chirotope, exhaustive staircase collection, Gale evenness, exact hull
feasibility) without touching the travel or counting machinery under test.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from lomlab.exactlp import hulls_intersect, zero_in_convex_hull
from lomlab.galerad import PointConfig, _det
from lomlab.sign_matrix import SignMatrix
from lomlab.travels import _top_segments


# ---------------------------------------------------------------------------
# Chirotope and circuit-sign oracles.


def chirotope_direct(matrix: SignMatrix, basis) -> int:
    """Second, independent evaluation of the defining product."""
    product = 1
    row = 0
    for col in basis:
        product = product * matrix.rows[row][col - 1]
        row += 1
    return product


def circuit_signs(chi, r: int, ground: int):
    """Yield (support, signs) for each (r+1)-subset of 1..ground.

    chi maps a strictly increasing r-tuple of 1-based labels to +-1.  The
    signs alternate with cofactor parity; each circuit is produced in one of
    its two orientations.
    """
    for support in combinations(range(1, ground + 1), r + 1):
        signs = {}
        for k, e in enumerate(support):
            rest = tuple(x for x in support if x != e)
            signs[e] = (-1) ** k * chi(rest)
        yield support, signs


def matrix_chi(matrix: SignMatrix):
    def chi(basis):
        product = 1
        for i, j in enumerate(basis):
            product *= matrix.rows[i][j - 1]
        return product

    return chi


def config_chi(config: PointConfig):
    """Chirotope of a point configuration via lifted determinant signs."""

    def chi(basis):
        rows = [[Fraction(1)] + list(config.points[i - 1]) for i in basis]
        value = _det(rows)
        assert value != 0, "configuration not in general position"
        return 1 if value > 0 else -1

    return chi


def oracle_is_acyclic(chi, r: int, ground: int) -> bool:
    for _, signs in circuit_signs(chi, r, ground):
        if len(set(signs.values())) == 1:
            return False
    return True


def oracle_interior(chi, r: int, ground: int) -> frozenset[int]:
    out = set()
    for support, signs in circuit_signs(chi, r, ground):
        for e in support:
            if all(signs[x] == -signs[e] for x in support if x != e):
                out.add(e)
    return frozenset(out)


def matrix_is_acyclic(matrix: SignMatrix) -> bool:
    return oracle_is_acyclic(matrix_chi(matrix), matrix.r, matrix.n)


def matrix_interior(matrix: SignMatrix) -> frozenset[int]:
    return oracle_interior(matrix_chi(matrix), matrix.r, matrix.n)


def config_acyclic_reorientation_classes(config: PointConfig):
    """(flip set, interior set) per acyclic reorientation with point 1 fixed.

    Works for any general-position configuration via its determinant
    chirotope, so it is independent of the Lawrence-specific machinery.
    """
    base = config_chi(config)
    r = config.dim + 1
    out = []
    for bits in range(1 << (config.n - 1)):
        flips = frozenset(i + 2 for i in range(config.n - 1) if (bits >> i) & 1)

        def chi(basis, flips=flips):
            sign = -1 if len(flips.intersection(basis)) % 2 else 1
            return sign * base(basis)

        if oracle_is_acyclic(chi, r, config.n):
            out.append((flips, oracle_interior(chi, r, config.n)))
    return out


# ---------------------------------------------------------------------------
# Exhaustive matrix generation and staircase collection.


def all_sign_matrices(r: int, n: int):
    for bits in range(1 << (r * n)):
        rows = tuple(
            tuple(1 if (bits >> (i * n + j)) & 1 else -1 for j in range(n))
            for i in range(r)
        )
        yield SignMatrix(rows)


def random_sign_matrix(rng: random.Random, r: int, n: int) -> SignMatrix:
    return SignMatrix(
        tuple(tuple(rng.choice((1, -1)) for _ in range(n)) for _ in range(r))
    )


def collect_top_travel_shapes(r: int, n: int):
    """All top-travel segment shapes over every r x n sign matrix, split
    into shapes ending at column n (acyclic) and the rest."""
    ending_at_n = set()
    cut_short = set()
    for matrix in all_sign_matrices(r, n):
        segments = _top_segments(matrix.rows)
        if segments[-1][2] == n:
            ending_at_n.add(segments)
        else:
            cut_short.add(segments)
    return ending_at_n, cut_short


# ---------------------------------------------------------------------------
# Polytope oracles.


def gale_evenness_facets(n: int, d: int) -> int:
    """Count facets of the cyclic polytope by the evenness criterion:
    a d-subset is a facet iff between any two outside labels it contains an
    even number of inside labels."""
    count = 0
    for subset in combinations(range(1, n + 1), d):
        inside = set(subset)
        outside = [x for x in range(1, n + 1) if x not in inside]
        ok = True
        for a, b in combinations(outside, 2):
            between = sum(1 for x in subset if a < x < b)
            if between % 2:
                ok = False
                break
        if ok:
            count += 1
    return count


def facet_subsets(config: PointConfig):
    """All d-subsets of a general-position configuration spanning a facet of
    the convex hull, by exact sidedness checks."""
    d, n = config.dim, config.n
    facets = []
    for subset in combinations(range(1, n + 1), d):
        rows = [[Fraction(1)] + list(config.points[i - 1]) for i in subset]
        signs = set()
        for other in range(1, n + 1):
            if other in subset:
                continue
            value = _det(rows + [[Fraction(1)] + list(config.points[other - 1])])
            signs.add(value > 0)
        if len(signs) == 1:
            facets.append(frozenset(subset))
    return facets


def hulls_meet(config: PointConfig, left_labels, right_labels) -> bool:
    left = [config.points[i - 1] for i in left_labels]
    right = [config.points[i - 1] for i in right_labels]
    return hulls_intersect(left, right)


def zero_in_hull(vectors) -> bool:
    return zero_in_convex_hull(vectors)


# ---------------------------------------------------------------------------
# Constructions for the lifting tests.


def never_convex(config: PointConfig) -> bool:
    """No acyclic reorientation of the configuration's chirotope is free of
    interior elements, i.e. no permissible projective image is convex."""
    return all(len(i) >= 1 for _, i in config_acyclic_reorientation_classes(config))


def config_from_rays(rays, seed: int = 0):
    """A configuration plus coloring whose signed projection spans the rays.

    Applies a random exact change of basis until every ray has a nonzero
    last coordinate, then reads the first coordinates as an affine chart.
    Used to dualize Gale transforms back into colored point sets.
    """
    from lomlab.galerad import Coloring

    dim = len(rays[0])
    rng = random.Random(seed)
    for attempt in range(200):
        if attempt == 0:
            mat = [[Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
        else:
            mat = [[Fraction(rng.randint(-3, 3)) for _ in range(dim)] for _ in range(dim)]
        if _det([row[:] for row in mat]) == 0:
            continue
        images = [
            tuple(sum(mat[i][k] * r[k] for k in range(dim)) for i in range(dim))
            for r in rays
        ]
        if any(v[-1] == 0 for v in images):
            continue
        points, labels = [], []
        for v in images:
            scale = v[-1]
            labels.append("R" if scale > 0 else "B")
            points.append(tuple(c / scale for c in v[:-1]))
        return PointConfig(dim - 1, tuple(points)), Coloring(tuple(labels))
    raise RuntimeError("no affine chart found for the rays")
