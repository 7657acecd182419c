"""Exact convex hull, lattice and smoothness machinery.

All hull decisions reduce to small exact feasibility LPs solved by a phase-1
simplex over Fractions with Bland's rule, in coordinates of the lattice M
spanned by the point configuration.  Smoothness is the vertex criterion: every
hull vertex has exactly m edges whose primitive directions form a basis of M,
and the first lattice point along every edge belongs to the configuration.
The last condition makes the vertex semigroups free; without it the variety
is merely quasi-smooth (unimodular hull, non-normal chart).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from . import linalg
from .errors import InvalidArgumentError, PreconditionError
from .linalg import LatticeBasis


# ---------------------------------------------------------------------------
# exact phase-1 simplex

def _feasible(A, b):
    """Exact feasibility of A x = b, x >= 0, over the rationals.

    Phase-1 simplex with Bland's anti-cycling rule; A is a list of rows.
    """
    m = len(A)
    if m == 0:
        return True
    ncols = len(A[0])
    # tableau rows: [A | rhs], rhs made non-negative, artificial basis implied
    tab = []
    for row, rhs in zip(A, b):
        row = [Fraction(x) for x in row] + [Fraction(rhs)]
        if row[-1] < 0:
            row = [-x for x in row]
        tab.append(row)
    # objective: minimize sum of artificials == sum of rows (in terms of
    # original columns, cost row z_j - c_j = sum_i a_ij, value = sum_i b_i)
    cost = [sum(tab[i][j] for i in range(m)) for j in range(ncols + 1)]
    basis = [ncols + i for i in range(m)]  # artificial indices, cost-tracked implicitly
    while True:
        enter = next((j for j in range(ncols) if cost[j] > 0), None)
        if enter is None:
            break
        # ratio test, Bland tie-break on row basis index
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # unbounded phase-1 objective cannot happen; defensive
            raise AssertionError("phase-1 simplex unbounded")
        pv = tab[leave][enter]
        tab[leave] = [x / pv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter
    return cost[-1] == 0


# ---------------------------------------------------------------------------
# lattice coordinates

def spanned_lattice(points):
    """HNF basis of the lattice spanned by differences from the lex-smallest point.

    Returns (base point, LatticeBasis).
    """
    points = sorted(set(map(tuple, points)))
    if not points:
        raise InvalidArgumentError("empty point set")
    base = points[0]
    ambient = len(base)
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
    return base, linalg.hnf(diffs, ambient)


def lattice_coordinates(points):
    """Points re-expressed in coordinates of the lattice they span.

    Returns (base, lattice, coords dict point -> integer tuple of length m).
    """
    base, lattice = spanned_lattice(points)
    coords = {}
    for p in sorted(set(map(tuple, points))):
        diff = tuple(a - b for a, b in zip(p, base))
        c = lattice.coordinates(diff)
        assert c is not None  # every point lies in the spanned lattice
        coords[p] = c
    return base, lattice, coords


def _primitive_direction(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    return tuple(x // g for x in vec) if g else tuple(vec)


# ---------------------------------------------------------------------------
# hull structure

@dataclass(frozen=True)
class LatticePolytopeModel:
    points: tuple
    base: tuple
    lattice: LatticeBasis
    coords: dict  # point -> tuple in Z^m
    vertices: tuple
    edges: tuple  # sorted pairs of vertices

    @property
    def dim(self) -> int:
        return self.lattice.dimension

    def neighbors(self, v):
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)


def _is_vertex(v, others, coords):
    """v is a vertex iff it is not a convex combination of the other points."""
    if not others:
        return True
    cv = coords[v]
    m = len(cv)
    A = [[coords[p][i] - cv[i] for p in others] for i in range(m)]
    A.append([1] * len(others))
    b = [0] * m + [1]
    return not _feasible(A, b)


def hull_structure(points) -> LatticePolytopeModel:
    """Vertices and edges of conv(points), decided by exact rational feasibility."""
    points = tuple(sorted(set(map(tuple, points))))
    if len(points) < 2:
        raise InvalidArgumentError("need at least 2 points")
    base, lattice, coords = lattice_coordinates(points)
    m = lattice.dimension
    vertices = tuple(
        v for v in points if _is_vertex(v, [p for p in points if p != v], coords)
    )
    edges = set()
    vertex_set = set(vertices)
    for v in vertices:
        cv = coords[v]
        # group the other points by primitive direction from v
        by_dir = {}
        for p in points:
            if p == v:
                continue
            diff = tuple(a - b for a, b in zip(coords[p], cv))
            by_dir.setdefault(_primitive_direction(diff), []).append(p)
        for d, ray_points in sorted(by_dir.items()):
            # d spans an edge at v iff it is an extreme ray of the cone of
            # all directions from v, i.e. not a non-negative combination of
            # the generators pointing elsewhere
            gens = []
            for d2, pts in by_dir.items():
                if d2 != d:
                    gens.extend(
                        tuple(a - b for a, b in zip(coords[p], cv)) for p in pts
                    )
            if gens:
                A = [[g[i] for g in gens] for i in range(m)]
                if _feasible(A, list(d)):
                    continue
            # farthest point along the ray is the other endpoint
            endpoint = max(
                ray_points,
                key=lambda p: sum(
                    abs(a - b) for a, b in zip(coords[p], cv)
                ),
            )
            assert endpoint in vertex_set
            edges.add(tuple(sorted((v, endpoint))))
    return LatticePolytopeModel(points, base, lattice, coords, vertices, tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# smoothness

@dataclass(frozen=True)
class VertexRecord:
    vertex: tuple
    edge_count: int
    directions: tuple  # primitive edge directions in M-coordinates
    determinant: Optional[int]  # None when the vertex is not simple


@dataclass(frozen=True)
class SmoothnessCertificate:
    smooth: bool
    dim: int
    records: tuple
    failure: Optional[tuple]  # (vertex, reason) for the first violation
    model: LatticePolytopeModel


def smoothness_check(points) -> SmoothnessCertificate:
    """Vertex-by-vertex check, in the lattice spanned by the points, that every
    vertex is simple, its primitive edge directions are unimodular, and each
    edge's first lattice point is itself one of the points (free semigroup)."""
    points = tuple(sorted(set(map(tuple, points))))
    if not points:
        raise InvalidArgumentError("empty point set")
    if len(points) == 1:
        base, lattice, coords = lattice_coordinates(points)
        model = LatticePolytopeModel(points, base, lattice, coords, points, ())
        record = VertexRecord(points[0], 0, (), 1)
        return SmoothnessCertificate(True, 0, (record,), None, model)
    model = hull_structure(points)
    point_set = set(points)
    basis = model.lattice.basis
    m = model.dim
    records = []
    failure = None
    smooth = True
    for v in model.vertices:
        cv = model.coords[v]
        dirs = tuple(
            _primitive_direction(tuple(a - b for a, b in zip(model.coords[w], cv)))
            for w in model.neighbors(v)
        )
        if len(dirs) != m:
            records.append(VertexRecord(v, len(dirs), dirs, None))
            if smooth:
                smooth = False
                failure = (v, f"vertex has {len(dirs)} edges, expected {m}")
            continue
        det = abs(linalg.det_bareiss([list(d) for d in dirs]))
        records.append(VertexRecord(v, len(dirs), dirs, det))
        if det != 1:
            if smooth:
                smooth = False
                failure = (v, f"primitive edge directions have |det| = {det}")
            continue
        for d in dirs:
            # first lattice point along the edge, back in ambient coordinates
            step = tuple(
                v[j] + sum(d[i] * basis[i][j] for i in range(m))
                for j in range(len(v))
            )
            if step not in point_set:
                if smooth:
                    smooth = False
                    failure = (
                        v,
                        f"first lattice point {step} along an edge is not in the set",
                    )
                break
    return SmoothnessCertificate(smooth, m, tuple(records), failure, model)


# ---------------------------------------------------------------------------
# lattice predicates on cubic point sets

def _require_cubics(points):
    points = tuple(sorted(set(map(tuple, points))))
    if not points:
        raise InvalidArgumentError("empty point set")
    if any(sum(p) != 3 for p in points):
        raise PreconditionError("points must be degree-3 monomials (d = 3)")
    return points


def affine_lattice_contains(points, target) -> bool:
    """Is target in the affine lattice base + M spanned by the points?"""
    base, lattice = spanned_lattice(points)
    diff = tuple(a - b for a, b in zip(target, base))
    return lattice.contains(diff)


def contains_all_simplex_vertices(points) -> bool:
    """Do all pure cubes x_i^3 lie in the affine lattice spanned by the points?"""
    points = _require_cubics(points)
    n1 = len(points[0])
    base, lattice = spanned_lattice(points)
    for i in range(n1):
        cube = tuple(3 if j == i else 0 for j in range(n1))
        diff = tuple(a - b for a, b in zip(cube, base))
        if not lattice.contains(diff):
            return False
    return True


def degree_lattice(n1: int) -> LatticeBasis:
    """The full difference lattice of 3*Delta: integer vectors with zero coordinate sum."""
    gens = []
    for i in range(n1 - 1):
        v = [0] * n1
        v[i], v[i + 1] = 1, -1
        gens.append(tuple(v))
    return linalg.hnf(gens, n1)


def spans_full_lattice(points) -> bool:
    """Does the point set span the full zero-sum lattice (index 1)?"""
    points = _require_cubics(points)
    n1 = len(points[0])
    _, lattice = spanned_lattice(points)
    full = degree_lattice(n1)
    if lattice.dimension < full.dimension:
        return False
    return linalg.lattice_index(lattice, full) == 1
