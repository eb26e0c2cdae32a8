"""Rational polyhedral cones, fans, lattice polytopes and their maps.

Cones are stored generator-first (primitive, sorted, irredundant); the
inequality description is recovered on demand by a double-description pass.
Dimensions stay small (<= 6), so subset scans and vertex-bijection searches
are affordable and everything remains exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import gcd

from .errors import DimensionMismatch, NotFullDimensional, NotStronglyConvex
from .lattice import (
    det,
    dot,
    hnf_basis,
    integer_kernel,
    is_zero,
    primitive,
    solve_square_fraction,
    unimodular_inverse,
    vec_sub,
)
from .polyhedra import extreme_rays, feasible, integer_points, nonneg_kernel_is_trivial


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone spanned by primitive integer generators.

    Equality compares the sorted irredundant generator tuple, which is a
    true canonical form exactly for strongly convex cones (their extreme
    rays are unique); fans only ever hold strongly convex cones.
    """

    dim: int
    generators: tuple[tuple[int, ...], ...]

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def as_jsonable(self):
        return {
            "ambient_dim": self.dim,
            "generators": [list(g) for g in self.generators],
        }


def _dual_data(dim, gens):
    """(rays, lines) of {u : <u, g> >= 0 for all generators g}."""
    return extreme_rays(list(gens), dim)


@lru_cache(maxsize=4096)
def _dual_gens(dim, gens) -> tuple[tuple[int, ...], ...]:
    rays, lines = _dual_data(dim, gens)
    out = list(rays)
    for l in lines:
        out.append(l)
        out.append(tuple(-x for x in l))
    return tuple(sorted(set(out)))


def cone_contains(cone: Cone, vector) -> bool:
    """Exact membership test through the dual inequality description."""
    return all(dot(d, vector) >= 0 for d in _dual_gens(cone.dim, cone.generators))


def _irredundant(dim, gens):
    kept = list(gens)
    changed = True
    while changed:
        changed = False
        for g in list(kept):
            others = tuple(h for h in kept if h != g)
            if all(dot(d, g) >= 0 for d in _dual_gens(dim, others)):
                kept = list(others)
                changed = True
                break
    return tuple(kept)


def make_cone(dim, generators, *, irredundant=False) -> Cone:
    gens = sorted(set(primitive(g) for g in generators if not is_zero(g)))
    for g in gens:
        if len(g) != dim:
            raise DimensionMismatch(f"generator {g} does not live in dimension {dim}")
    if not irredundant:
        gens = _irredundant(dim, tuple(gens))
    return Cone(dim, tuple(sorted(gens)))


def dual_cone(cone: Cone) -> Cone:
    """The dual cone, as an irredundant primitive generator list."""
    return make_cone(cone.dim, _dual_gens(cone.dim, cone.generators), irredundant=True)


def is_strongly_convex(cone: Cone) -> bool:
    """True iff the cone meets its negative only at the origin."""
    if cone.is_zero:
        return True
    cols = tuple(
        tuple(g[d] for g in cone.generators) for d in range(cone.dim)
    )
    return nonneg_kernel_is_trivial(cols)


def faces(cone: Cone) -> list[Cone]:
    """All faces of a strongly convex cone, including {0} and the cone."""
    if not is_strongly_convex(cone):
        raise NotStronglyConvex("faces are only enumerated for strongly convex cones")
    duals = _dual_gens(cone.dim, cone.generators)
    seen = {}
    for size in range(len(duals) + 1):
        for subset in combinations(duals, size):
            gens = tuple(
                g
                for g in cone.generators
                if all(dot(d, g) == 0 for d in subset)
            )
            face = Cone(cone.dim, gens)
            seen[face.generators] = face
    return sorted(seen.values(), key=lambda c: (len(c.generators), c.generators))


def cone_intersection(a: Cone, b: Cone) -> Cone:
    if a.dim != b.dim:
        raise DimensionMismatch("cones live in different ambient dimensions")
    rows = list(_dual_gens(a.dim, a.generators)) + list(_dual_gens(b.dim, b.generators))
    rays, lines = extreme_rays(rows, a.dim)
    gens = list(rays)
    for l in lines:
        gens.append(l)
        gens.append(tuple(-x for x in l))
    return make_cone(a.dim, gens, irredundant=True)


@dataclass(frozen=True)
class FanViolation:
    kind: str
    detail: str


@dataclass(frozen=True)
class Fan:
    dim: int
    cones: tuple[Cone, ...]

    def rays(self) -> tuple[tuple[int, ...], ...]:
        out = set()
        for c in self.cones:
            if len(c.generators) == 1:
                out.add(c.generators[0])
        return tuple(sorted(out))

    def maximal_cones(self) -> tuple[Cone, ...]:
        maximal = []
        for c in self.cones:
            if not any(
                c is not other and set(c.generators) < set(other.generators)
                for other in self.cones
            ):
                maximal.append(c)
        return tuple(maximal)

    def as_jsonable(self):
        rays = self.rays()
        index = {r: i for i, r in enumerate(rays)}
        return {
            "ambient_dim": self.dim,
            "rays": [list(r) for r in rays],
            "cones": sorted(
                sorted(index[g] for g in c.generators) for c in self.cones
            ),
        }


def make_fan(dim, cones) -> Fan:
    uniq = {}
    for c in cones:
        uniq[c.generators] = c
    ordered = sorted(uniq.values(), key=lambda c: (len(c.generators), c.generators))
    return Fan(dim, tuple(ordered))


def validate_fan(fan: Fan) -> list[FanViolation]:
    """Empty list iff the fan axioms hold; violations are data, not errors."""
    violations = []
    for c in fan.cones:
        if not is_strongly_convex(c):
            violations.append(
                FanViolation("not_strongly_convex", f"cone {c.generators}")
            )
    if violations:
        return violations
    present = {c.generators for c in fan.cones}
    for c in fan.cones:
        for f in faces(c):
            if f.generators not in present:
                violations.append(
                    FanViolation(
                        "missing_face",
                        f"face {f.generators} of cone {c.generators} not in fan",
                    )
                )
    for a, b in combinations(fan.cones, 2):
        inter = cone_intersection(a, b)
        face_a = {f.generators for f in faces(a)}
        face_b = {f.generators for f in faces(b)}
        if inter.generators not in face_a or inter.generators not in face_b:
            violations.append(
                FanViolation(
                    "intersection_not_common_face",
                    f"cones {a.generators} and {b.generators} meet in {inter.generators}",
                )
            )
    return violations


# ---------------------------------------------------------------------------
# lattice polytopes


def _as_fraction_point(p):
    return tuple(Fraction(x) for x in p)


def _affine_dim(points) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    diffs = []
    for p in points[1:]:
        d = tuple(x - y for x, y in zip(p, base))
        scaled = _scale_to_int(d)
        if not is_zero(scaled):
            diffs.append(scaled)
    if not diffs:
        return 0
    return len(hnf_basis(diffs, len(base)))


def _scale_to_int(vec) -> tuple[int, ...]:
    denom = 1
    fracs = [Fraction(x) for x in vec]
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    return tuple(int(f * denom) for f in fracs)


@dataclass(frozen=True)
class Polytope:
    """Convex hull of finitely many rational points, stored by vertex set."""

    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def affine_dim(self) -> int:
        return _affine_dim(self.vertices)

    def is_full_dimensional(self) -> bool:
        return self.affine_dim() == self.dim

    def as_jsonable(self):
        def enc(x: Fraction):
            return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        return {
            "ambient_dim": self.dim,
            "vertices": [[enc(x) for x in v] for v in self.vertices],
            "integral": self.is_integral,
        }


def _in_hull(point, points) -> bool:
    """Is point inside conv(points)?  Exact Fourier-Motzkin feasibility."""
    if not points:
        return False
    m = len(points)
    dim = len(point)
    rows, rhs = [], []
    for i in range(m):
        rows.append(tuple(1 if j == i else 0 for j in range(m)))
        rhs.append(0)
    ones = tuple(1 for _ in range(m))
    rows.append(ones)
    rhs.append(1)
    rows.append(tuple(-1 for _ in range(m)))
    rhs.append(-1)
    for c in range(dim):
        coeffs = tuple(Fraction(q[c]) for q in points)
        rows.append(coeffs)
        rhs.append(Fraction(point[c]))
        rows.append(tuple(-x for x in coeffs))
        rhs.append(-Fraction(point[c]))
    return feasible(rows, rhs)


def polytope_from_points(dim, points) -> Polytope:
    pts = sorted(set(_as_fraction_point(p) for p in points))
    for p in pts:
        if len(p) != dim:
            raise DimensionMismatch("point dimension does not match ambient dimension")
    verts = [p for p in pts if not _in_hull(p, [q for q in pts if q != p])]
    return Polytope(dim, tuple(sorted(verts)))


@lru_cache(maxsize=1024)
def _facets_cached(polytope: Polytope):
    dim = polytope.dim
    verts = polytope.vertices
    if polytope.affine_dim() != dim:
        raise NotFullDimensional("facet description needs a full-dimensional polytope")
    found = {}
    for subset in combinations(verts, dim):
        base = subset[0]
        diffs = [_scale_to_int(vec_sub(p, base)) for p in subset[1:]]
        diffs = [d for d in diffs if not is_zero(d)]
        if dim == 1:
            normal_candidates = [(1,)]
        else:
            if len(hnf_basis(diffs, dim)) != dim - 1:
                continue
            kernel = integer_kernel(diffs)
            if len(kernel) != 1:
                continue
            normal_candidates = [primitive(kernel[0])]
        for h in normal_candidates:
            vals = [sum(Fraction(a) * x for a, x in zip(h, v)) for v in verts]
            lo, hi = min(vals), max(vals)
            pairs = []
            if all(v >= lo for v in vals) and any(v > lo for v in vals):
                pairs.append((h, lo))
            if all(v <= hi for v in vals) and any(v < hi for v in vals):
                pairs.append((tuple(-x for x in h), -hi))
            for normal, offset in pairs:
                tight = [
                    v
                    for v in verts
                    if sum(Fraction(a) * x for a, x in zip(normal, v)) == offset
                ]
                if _affine_dim(tight) == dim - 1:
                    found[(normal, offset)] = tight
    return tuple(sorted((h, c, tuple(sorted(t))) for (h, c), t in found.items()))


def polytope_facets(polytope: Polytope):
    """Inner-normal facet list [(normal, offset, tight vertices)]."""
    return _facets_cached(polytope)


def polytope_lattice_points(polytope: Polytope) -> list[tuple[int, ...]]:
    """All integer points of the polytope, ascending lex."""
    verts = polytope.vertices
    if not verts:
        return []
    dim = polytope.dim
    adim = polytope.affine_dim()
    if adim == dim:
        rows = []
        rhs = []
        for h, c, _ in polytope_facets(polytope):
            rows.append(h)
            rhs.append(c)
        return integer_points(rows, rhs)
    # reduce to coordinates on the affine hull, then recurse
    base = verts[0]
    diffs = [_scale_to_int(vec_sub(v, base)) for v in verts[1:]]
    diffs = [d for d in diffs if not is_zero(d)]
    if not diffs:
        ints = [tuple(int(x) for x in base)] if all(x.denominator == 1 for x in base) else []
        return ints
    orth = integer_kernel(diffs)
    direction_lattice = integer_kernel(orth) if orth else hnf_basis(diffs, dim)
    # integer base point on the affine hull
    from .lattice import solve_diophantine

    eq_rows = [tuple(o) for o in orth]
    eq_rhs = [sum(Fraction(a) * x for a, x in zip(o, base)) for o in orth]
    scaled_rows, scaled_rhs = [], []
    for row, b in zip(eq_rows, eq_rhs):
        if b.denominator != 1:
            return []
        scaled_rows.append(row)
        scaled_rhs.append(int(b))
    anchor = solve_diophantine(scaled_rows, scaled_rhs) if scaled_rows else tuple(
        int(x) for x in base
    )
    if anchor is None:
        return []
    coords = []
    basis = list(direction_lattice)
    for v in verts:
        delta = [Fraction(x) - Fraction(a) for x, a in zip(v, anchor)]
        sol = solve_square_like(basis, delta)
        if sol is None:
            return []
        coords.append(tuple(sol))
    reduced = polytope_from_points(len(basis), coords)
    pts = polytope_lattice_points(reduced)
    out = []
    for t in pts:
        x = tuple(
            anchor[j] + sum(b[j] * ti for b, ti in zip(basis, t)) for j in range(dim)
        )
        out.append(x)
    return sorted(out)


def solve_square_like(basis, target):
    """Coordinates of target in the given lattice basis (exact, or None)."""
    k = len(basis)
    rows = [[Fraction(b[j]) for b in basis] for j in range(len(target))]
    sol = _least_solve(rows, [Fraction(x) for x in target], k)
    return sol


def _least_solve(rows, rhs, k):
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    top = 0
    for col in range(k):
        piv = next((i for i in range(top, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[top], aug[piv] = aug[piv], aug[top]
        inv = 1 / aug[top][col]
        aug[top] = [a * inv for a in aug[top]]
        for i in range(len(aug)):
            if i != top and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[top])]
        pivots.append((top, col))
        top += 1
    for i in range(top, len(aug)):
        if aug[i][k] != 0:
            return None
    x = [Fraction(0)] * k
    for i, col in pivots:
        x[col] = aug[i][k]
    return tuple(x)


def normal_fan(polytope: Polytope) -> Fan:
    """Inner-normal fan of a full-dimensional polytope."""
    if not polytope.is_full_dimensional():
        raise NotFullDimensional("normal fan needs a full-dimensional polytope")
    facet_list = polytope_facets(polytope)
    cones = {}
    for v in polytope.vertices:
        normals = [
            h
            for h, c, _ in facet_list
            if sum(Fraction(a) * x for a, x in zip(h, v)) == c
        ]
        vertex_cone = make_cone(polytope.dim, normals, irredundant=True)
        cones[vertex_cone.generators] = vertex_cone
    closure = {}
    for c in cones.values():
        for f in faces(c):
            closure[f.generators] = f
    return make_fan(polytope.dim, closure.values())


@dataclass(frozen=True)
class UnimodularAffineMap:
    """x -> linear @ x + translation on the lattice scaled by ``scale``.

    The map carries the vertex set of scale*P onto the vertex set of
    scale*Q; scale is 1 whenever both polytopes are integral.
    """

    linear: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]
    scale: int = 1

    def apply_scaled(self, point):
        return tuple(
            sum(a * x for a, x in zip(row, point)) + t
            for row, t in zip(self.linear, self.translation)
        )

    def apply(self, point):
        scaled = tuple(Fraction(x) * self.scale for x in point)
        image = self.apply_scaled(scaled)
        return tuple(Fraction(x, self.scale) for x in image)

    def inverse(self) -> "UnimodularAffineMap":
        inv = unimodular_inverse(self.linear)
        t = tuple(-sum(a * x for a, x in zip(row, self.translation)) for row in inv)
        return UnimodularAffineMap(inv, t, self.scale)

    def as_jsonable(self):
        return {
            "linear": [list(r) for r in self.linear],
            "translation": list(self.translation),
            "scale": self.scale,
        }


def _common_scale(*polytopes) -> int:
    denom = 1
    for p in polytopes:
        for v in p.vertices:
            for x in v:
                denom = denom * x.denominator // gcd(denom, x.denominator)
    return denom


def lattice_equivalent(p: Polytope, q: Polytope) -> UnimodularAffineMap | None:
    """A unimodular affine map with T(P) = Q, or None.

    Vertex-bijection search, factorial in the vertex count; fine for the
    desk scale this engine targets (<= 8 vertices).  Rational polytopes are
    first scaled by the common denominator, recorded on the witness.
    """
    if p.dim != q.dim:
        raise DimensionMismatch("polytopes live in different ambient dimensions")
    if not p.is_full_dimensional() or not q.is_full_dimensional():
        raise NotFullDimensional("lattice equivalence needs full-dimensional polytopes")
    if len(p.vertices) != len(q.vertices):
        return None
    dim = p.dim
    scale = _common_scale(p, q)
    pv = [tuple(int(x * scale) for x in v) for v in p.vertices]
    qv = [tuple(int(x * scale) for x in v) for v in q.vertices]

    base = pv[0]
    frame = []
    frame_diffs = []
    for v in pv[1:]:
        d = vec_sub(v, base)
        trial = frame_diffs + [d]
        if len(hnf_basis(trial, dim)) == len(trial):
            frame.append(v)
            frame_diffs.append(d)
        if len(frame_diffs) == dim:
            break
    if len(frame_diffs) < dim:
        return None

    qset = set(qv)
    for targets in permutations(range(len(qv)), dim + 1):
        w0 = qv[targets[0]]
        w_diffs = [vec_sub(qv[t], w0) for t in targets[1:]]
        u_rows = []
        ok = True
        for r in range(dim):
            # row r of U satisfies <u_r, d_i> = w_i[r] for every frame diff
            sol = solve_square_fraction(frame_diffs, [w[r] for w in w_diffs])
            if sol is None or any(x.denominator != 1 for x in sol):
                ok = False
                break
            u_rows.append(tuple(int(x) for x in sol))
        if not ok:
            continue
        linear = tuple(u_rows)
        if abs(det(linear)) != 1:
            continue
        trans = vec_sub(w0, tuple(sum(a * x for a, x in zip(row, base)) for row in linear))
        image = {
            tuple(sum(a * x for a, x in zip(row, v)) + t for row, t in zip(linear, trans))
            for v in pv
        }
        if image == qset:
            return UnimodularAffineMap(linear, trans, scale)
    return None
