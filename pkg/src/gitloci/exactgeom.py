"""Exact rational linear algebra and central hyperplane-arrangement enumeration.

Everything in this module computes over `fractions.Fraction`; there is no
floating point anywhere. The two arrangement operations enumerate witnesses
for the rays (1-dimensional faces) and the full-dimensional open cells of a
central arrangement of hyperplanes ``{x : n . x = 0}`` restricted to a
polyhedral cone ``{x : c . x >= 0 for every chamber constraint c}``.

Strict feasibility is decided by homogenization (``f > 0`` becomes
``f >= 1``), which is valid here because every system handled by this module
is positively homogeneous: if a cone point satisfies ``f > 0`` at all, some
positive rescaling satisfies ``f >= 1``. Callers must not feed
inhomogeneous systems to `lp_feasible` with strict constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import gcd, lcm

from .errors import ResourceGuardError

DEFAULT_CELL_GUARD = 10**6


def dot(a, b):
    """Exact dot product of two equal-length vectors."""
    if len(a) != len(b):
        raise ValueError(f"dot of vectors with lengths {len(a)} and {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def primitive_vector(v):
    """Scale a nonzero rational vector to the primitive integer vector with
    the same direction (denominators cleared, gcd of entries reduced to 1)."""
    fracs = [Fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        raise ValueError("the zero vector has no primitive form")
    mult = lcm(*(x.denominator for x in fracs))
    ints = [int(x * mult) for x in fracs]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _rref(rows):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def matrix_rank(rows):
    return len(_rref(list(rows))[1])


def kernel_basis(rows, dim):
    """Basis of the right kernel {x in Q^dim : row . x = 0 for all rows}."""
    rows = [row for row in rows]
    for row in rows:
        if len(row) != dim:
            raise ValueError("kernel_basis rows must have length dim")
    if not rows:
        return [tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim)]
    reduced, pivots = _rref(rows)
    basis = []
    for free_col in (c for c in range(dim) if c not in pivots):
        vec = [Fraction(0)] * dim
        vec[free_col] = Fraction(1)
        for row_idx, pivot_col in enumerate(pivots):
            vec[pivot_col] = -reduced[row_idx][free_col]
        basis.append(tuple(vec))
    return basis


def invert_matrix(matrix):
    """Exact inverse of a square rational matrix, as a tuple of row tuples."""
    n = len(matrix)
    aug = [
        [Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    reduced, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in reduced)


def determinant(matrix):
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def _phase_one(rows, rhs):
    """Find z >= 0 with A z = b (b >= 0) by a phase-one simplex, or None.

    Bland's rule on both the entering and the leaving choice guarantees
    termination without any degeneracy handling.
    """
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    width = n + m
    tableau = [
        [Fraction(x) for x in rows[i]]
        + [Fraction(1 if i == j else 0) for j in range(m)]
        + [Fraction(rhs[i])]
        for i in range(m)
    ]
    basis = list(range(n, n + m))
    while True:
        entering = None
        for j in range(width):
            in_basis_cost = sum(tableau[i][j] for i in range(m) if basis[i] >= n)
            own_cost = 1 if j >= n else 0
            if own_cost - in_basis_cost < 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = tableau[i][width] / coeff
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            raise RuntimeError("phase-one simplex unbounded; this is a bug")
        pv = tableau[leaving][entering]
        tableau[leaving] = [x / pv for x in tableau[leaving]]
        for i in range(m):
            if i != leaving and tableau[i][entering] != 0:
                f = tableau[i][entering]
                tableau[i] = [a - f * b for a, b in zip(tableau[i], tableau[leaving])]
        basis[leaving] = entering
    if sum(tableau[i][width] for i in range(m) if basis[i] >= n) != 0:
        return None
    z = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            z[basis[i]] = tableau[i][width]
    return z


def lp_feasible(equalities, weak, strict, dim):
    """Search for x with e.x = 0, w.x >= 0, s.x > 0 for the given forms.

    Returns an exact rational witness tuple, or None when infeasible. All
    constraint systems must be positively homogeneous (see module docstring);
    strictness is realized as s.x >= 1.
    """
    eqs = [tuple(Fraction(c) for c in row) for row in equalities]
    weaks = [tuple(Fraction(c) for c in row) for row in weak]
    stricts = [tuple(Fraction(c) for c in row) for row in strict]
    for row in (*eqs, *weaks, *stricts):
        if len(row) != dim:
            raise ValueError(f"constraint of length {len(row)} in dimension {dim}")
    if any(all(c == 0 for c in row) for row in stricts):
        return None
    eqs = [r for r in eqs if any(c != 0 for c in r)]
    weaks = [r for r in weaks if any(c != 0 for c in r)]
    if not stricts:
        return tuple(Fraction(0) for _ in range(dim))

    n_weak, n_strict = len(weaks), len(stricts)
    rows, rhs = [], []
    for e in eqs:
        rows.append([*e, *(-c for c in e)] + [Fraction(0)] * (n_weak + n_strict))
        rhs.append(Fraction(0))
    for k, w in enumerate(weaks):
        surplus = [Fraction(0)] * (n_weak + n_strict)
        surplus[k] = Fraction(-1)
        rows.append([*w, *(-c for c in w), *surplus])
        rhs.append(Fraction(0))
    for k, s in enumerate(stricts):
        surplus = [Fraction(0)] * (n_weak + n_strict)
        surplus[n_weak + k] = Fraction(-1)
        rows.append([*s, *(-c for c in s), *surplus])
        rhs.append(Fraction(1))
    z = _phase_one(rows, rhs)
    if z is None:
        return None
    x = tuple(z[i] - z[dim + i] for i in range(dim))
    if (
        any(dot(e, x) != 0 for e in eqs)
        or any(dot(w, x) < 0 for w in weaks)
        or any(dot(s, x) <= 0 for s in stricts)
    ):
        raise RuntimeError("simplex witness fails re-substitution; this is a bug")
    return x


def zero_in_relative_interior(points):
    """Whether the origin lies in the relative interior of the convex hull.

    For a finite point set this is equivalent to the origin being a strictly
    positive combination of ALL the points, which is one feasibility check.
    """
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if not pts:
        raise ValueError("zero_in_relative_interior needs at least one point")
    n = len(pts)
    ambient = len(pts[0])
    equalities = [[p[k] for p in pts] for k in range(ambient)]
    stricts = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    return lp_feasible(equalities, (), stricts, n) is not None


@dataclass(frozen=True, slots=True)
class ArrangementFaceWitness:
    """A face of the arrangement, represented by one interior point.

    `zero_set` holds the indices (into the caller's normal list) of the
    hyperplanes that contain the face; it is empty for full-dimensional cells.
    """

    point: tuple[int, ...]
    kind: str
    zero_set: frozenset[int]


def _canonical_line(v):
    p = primitive_vector(v)
    lead = next(x for x in p if x != 0)
    return p if lead > 0 else tuple(-x for x in p)


def _dedupe_lines(vectors):
    seen = {}
    for v in vectors:
        if any(Fraction(x) != 0 for x in v):
            seen.setdefault(_canonical_line(v), None)
    return list(seen)


def arrangement_rays(normals, chamber, dim):
    """Rays (1-dimensional intersection faces) of the arrangement, in the chamber.

    Candidates are the kernel lines of every (dim-1)-subset of independent
    constraints drawn from the normals and the chamber walls together,
    oriented into the chamber and deduplicated up to positive scaling.
    """
    if dim <= 0:
        return []
    normals = [tuple(n) for n in normals]
    lines = _dedupe_lines([*normals, *chamber])
    found = {}
    for subset in combinations(lines, dim - 1):
        if matrix_rank(subset) != dim - 1:
            continue
        kernel = kernel_basis(list(subset), dim)
        if len(kernel) != 1:
            continue
        direction = primitive_vector(kernel[0])
        for cand in (direction, tuple(-x for x in direction)):
            if cand in found:
                continue
            if all(dot(c, cand) >= 0 for c in chamber):
                zero_set = frozenset(
                    i for i, n in enumerate(normals) if any(x != 0 for x in n) and dot(n, cand) == 0
                )
                found[cand] = ArrangementFaceWitness(point=cand, kind="ray", zero_set=zero_set)
    return sorted(found.values(), key=lambda w: w.point)


def _rot90(v):
    return (-v[1], v[0])


def _angular_half(v):
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angular_cmp(a, b):
    ha, hb = _angular_half(a), _angular_half(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def _planar_cell_witnesses(normals, chamber):
    """Cell witnesses in dimension 2 by an exact angular sweep.

    The boundary directions of the plane sectors cut out by all constraint
    lines (normals and chamber walls alike) are sorted by angle; each
    consecutive open arc yields one interior witness, and the sector survives
    iff it is strictly inside the chamber. This avoids any LP work in the
    dimension that dominates the supported workloads.
    """
    lines = _dedupe_lines([*normals, *chamber])
    directions = set()
    for line in lines:
        along = _rot90(line)
        directions.add(primitive_vector(along))
        directions.add(primitive_vector((-along[0], -along[1])))
    if not directions:
        candidates = [(1, 0)]
    else:
        ordered = sorted(directions, key=cmp_to_key(_angular_cmp))
        candidates = []
        count = len(ordered)
        for i in range(count):
            a, b = ordered[i], ordered[(i + 1) % count]
            cross = a[0] * b[1] - a[1] * b[0]
            if cross > 0:
                candidates.append(primitive_vector((a[0] + b[0], a[1] + b[1])))
            elif cross == 0:
                # Antipodal pair: the open arc is the half-plane on the
                # counterclockwise side of a.
                candidates.append(primitive_vector(_rot90(a)))
            else:
                raise RuntimeError("angular sort produced a reflex arc; this is a bug")
    return [w for w in candidates if all(dot(c, w) > 0 for c in chamber)]


def _cell_witnesses_by_lp(normals, chamber, dim, guard):
    """Cell witnesses by incremental sign splitting with feasibility probes.

    Regions of the arrangement of the first k lines are refined one line at a
    time; the side of the new line already containing a region's witness is
    kept for free, and only the far side costs one feasibility check.
    """
    lines = _dedupe_lines(normals)
    chamber_rows = [tuple(Fraction(c) for c in row) for row in chamber]
    seed = lp_feasible((), (), chamber_rows, dim)
    if seed is None:
        return []
    regions = [((), seed)]
    processed = []
    for line in lines:
        refined = []
        for signs, witness in regions:
            value = dot(line, witness)
            if value > 0:
                refined.append((signs + (1,), witness))
                probes = (-1,)
            elif value < 0:
                refined.append((signs + (-1,), witness))
                probes = (1,)
            else:
                probes = (1, -1)
            for sign in probes:
                stricts = [
                    tuple(s * c for c in prev) for s, prev in zip(signs, processed)
                ]
                stricts.append(tuple(sign * c for c in line))
                stricts.extend(chamber_rows)
                point = lp_feasible((), (), stricts, dim)
                if point is not None:
                    refined.append((signs + (sign,), point))
            if len(refined) > guard:
                raise ResourceGuardError(
                    f"cell enumeration exceeded the guard of {guard} regions"
                )
        regions = refined
        processed.append(line)
    return [primitive_vector(witness) for _, witness in regions]


def arrangement_cells(normals, chamber, dim, guard=DEFAULT_CELL_GUARD):
    """One interior witness per full-dimensional cell of the arrangement
    restricted to the open chamber; every witness pairs strictly nonzero
    with every nonzero normal and strictly positive with every chamber wall."""
    if dim <= 0:
        return []
    nonzero = [tuple(n) for n in normals if any(Fraction(x) != 0 for x in n)]
    if dim == 2:
        witnesses = _planar_cell_witnesses(nonzero, chamber)
    else:
        witnesses = _cell_witnesses_by_lp(nonzero, chamber, dim, guard)
    if len(witnesses) > guard:
        raise ResourceGuardError(f"cell enumeration exceeded the guard of {guard} cells")
    out = []
    seen_sign_vectors = set()
    for point in sorted(witnesses):
        signature = tuple(1 if dot(n, point) > 0 else -1 if dot(n, point) < 0 else 0 for n in nonzero)
        if 0 in signature or any(dot(c, point) <= 0 for c in chamber):
            raise RuntimeError("cell witness landed on a boundary; this is a bug")
        if signature in seen_sign_vectors:
            raise RuntimeError("two witnesses describe the same cell; this is a bug")
        seen_sign_vectors.add(signature)
        out.append(ArrangementFaceWitness(point=point, kind="cell", zero_set=frozenset()))
    return out
