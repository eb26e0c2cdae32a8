"""Torus actions on affine space and their linearized quotients.

The pipeline: an integer action matrix plus a linearization vector
determine the graded semigroup of invariant monomials; its generators give
the chart atlas of the quotient, the common zero set of the generators is
the unstable locus, and the degree-one slice polytope (in kernel
coordinates) carries the normal fan presenting the quotient as a toric
variety.  Two solution semantics are implemented: "polynomial" keeps
exponents nonnegative, "lattice" works with an integer solution coset and
may produce Laurent generators; reports label which one was used.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import gcd

from .cones import (
    Cone,
    Fan,
    Polytope,
    UnimodularAffineMap,
    cone_contains,
    cone_intersection,
    lattice_equivalent,
    make_cone,
    normal_fan,
    polytope_from_points,
    polytope_lattice_points,
)
from .errors import (
    EmptyGeneratorList,
    LatticeModeUnsupported,
    NotFullDimensional,
    ToricGITError,
    UnboundedPolytope,
    UnboundedSolutionSet,
    ZeroTorusEntry,
)
from .lattice import (
    as_matrix,
    hermite_normal_form,
    hnf_basis,
    integer_kernel,
    is_zero,
    mat_vec,
    solve_diophantine,
    solve_fraction,
    vec_sub,
)
from .polyhedra import (
    enumerate_nonneg_solutions,
    feasible,
    integer_points,
    recession_is_trivial,
    vertices as polyhedron_vertices,
)
from .semigroups import (
    GradedMonomial,
    HilbertBasisResult,
    MonomialAlgebra,
    chart_ring,
    hilbert_basis,
    monomial_string,
)

DEFAULT_DEGREE_BOUND = 8


@dataclass(frozen=True)
class ActionData:
    """Integer action matrix, variable names, and the linearization vector."""

    matrix: tuple[tuple[int, ...], ...]
    variables: tuple[str, ...]
    alpha: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def as_jsonable(self):
        return {
            "action_matrix": [list(r) for r in self.matrix],
            "variables": list(self.variables),
            "alpha": list(self.alpha),
        }


def make_action(rows, variables, alpha) -> ActionData:
    matrix = as_matrix(rows)
    variables = tuple(str(v) for v in variables)
    alpha = tuple(int(a) for a in alpha)
    if len(variables) != len(matrix[0]):
        raise ValueError("need one variable name per matrix column")
    if len(set(variables)) != len(variables):
        raise ValueError("variable names must be distinct")
    if len(alpha) != len(matrix):
        raise ValueError("linearization length must match the matrix row count")
    return ActionData(matrix, variables, alpha)


def monomial(action: ActionData, exponents, degree: int) -> GradedMonomial:
    g = GradedMonomial(tuple(int(e) for e in exponents), int(degree))
    lhs = mat_vec(action.matrix, g.exponents)
    rhs = tuple(a * g.degree for a in action.alpha)
    if lhs != rhs:
        raise ValueError(f"exponents {exponents} do not solve the degree-{degree} system")
    return g


@dataclass(frozen=True)
class LatticeCoset:
    """Integer solution coset of one degree slice: particular + kernel basis."""

    particular: tuple[int, ...] | None
    kernel_basis: tuple[tuple[int, ...], ...]

    def contains(self, vector) -> bool:
        if self.particular is None:
            return False
        from .lattice import in_lattice

        return in_lattice(self.kernel_basis, vec_sub(vector, self.particular))


def graded_monomials(action: ActionData, degree: int, mode: str = "polynomial",
                     box_bound: int | None = None):
    """Degree-``degree`` invariant monomials.

    Polynomial mode returns the complete finite list of nonnegative
    solutions (UnboundedSolutionSet if the recession cone is nontrivial and
    no box_bound window is supplied); lattice mode returns the integer
    solution coset.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    target = tuple(a * degree for a in action.alpha)
    if mode == "lattice":
        return LatticeCoset(
            solve_diophantine(action.matrix, target), integer_kernel(action.matrix)
        )
    if mode != "polynomial":
        raise ValueError(f"unknown mode {mode!r}")
    try:
        sols = enumerate_nonneg_solutions(action.matrix, target)
    except UnboundedSolutionSet:
        if box_bound is None:
            raise
        n = action.nvars
        rows = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        rhs = [0] * n
        for i in range(n):
            rows.append(tuple(-1 if j == i else 0 for j in range(n)))
            rhs.append(-box_bound)
        for row, b in zip(action.matrix, target):
            rows.append(tuple(row))
            rhs.append(b)
            rows.append(tuple(-x for x in row))
            rhs.append(-b)
        sols = integer_points(rows, rhs)
    return [monomial(action, m, degree) for m in sols]


def _lattice_generators(action: ActionData) -> tuple[GradedMonomial, ...]:
    """Degree-one solutions with one free coordinate set to 1, rest 0.

    Reads the generators off the row Hermite form of the system; when a
    pivot division fails the fallback is a particular solution shifted by
    each kernel basis vector, which spans the same coset.
    """
    h, u = hermite_normal_form(action.matrix)
    beta = mat_vec(u, action.alpha)
    n = action.nvars
    pivots = []
    for i, row in enumerate(h):
        lead = next((j for j, a in enumerate(row) if a != 0), None)
        if lead is None:
            if beta[i] != 0:
                return ()
        else:
            pivots.append((i, lead))
    pivot_cols = {lead for _, lead in pivots}
    free_cols = [j for j in range(n) if j not in pivot_cols]
    gens = []
    for f in free_cols:
        x = [0] * n
        x[f] = 1
        ok = True
        for i, lead in reversed(pivots):
            residual = beta[i] - sum(h[i][j] * x[j] for j in range(lead + 1, n))
            if residual % h[i][lead] != 0:
                ok = False
                break
            x[lead] = residual // h[i][lead]
        if not ok:
            gens = None
            break
        gens.append(monomial(action, x, 1))
    if gens is None:
        particular = solve_diophantine(action.matrix, action.alpha)
        if particular is None:
            return ()
        gens = [
            monomial(action, tuple(p + k for p, k in zip(particular, basis_vec)), 1)
            for basis_vec in integer_kernel(action.matrix)
        ]
    return tuple(gens)


def invariant_ring(action: ActionData, mode: str = "polynomial",
                   degree_bound: int = DEFAULT_DEGREE_BOUND) -> HilbertBasisResult:
    """Generators of the graded invariant-monomial semigroup.

    Lattice mode presents the ring on the free-coordinate solution basis
    of the degree-one coset; that ring is free on its generators, so the
    generation certificate is immediate.
    """
    if mode == "lattice":
        gens = _lattice_generators(action)
        return HilbertBasisResult(gens, degree_bound, True, mode="lattice")
    if mode != "polynomial":
        raise ValueError(f"unknown mode {mode!r}")
    return hilbert_basis(action.matrix, action.alpha, degree_bound)


@dataclass(frozen=True)
class UnstableLocus:
    """Irredundant union of coordinate subspaces where all generators vanish."""

    variables: tuple[str, ...]
    components: tuple[tuple[str, ...], ...]

    @property
    def dimension(self) -> int:
        if not self.components:
            return -1
        n = len(self.variables)
        return max(n - len(c) for c in self.components)

    def covers_zero_pattern(self, zero_vars) -> bool:
        zs = set(zero_vars)
        return any(set(c) <= zs for c in self.components)

    def describe(self) -> str:
        if not self.components:
            return "empty"
        return " union ".join(
            "{" + " = ".join(c) + " = 0}" for c in self.components
        )

    def as_jsonable(self):
        return {
            "components": [list(c) for c in self.components],
            "dimension": self.dimension,
        }


def unstable_locus(gens: HilbertBasisResult, variables) -> UnstableLocus:
    """Common zero set of the generator monomials, via minimal transversals."""
    if gens.mode != "polynomial":
        raise LatticeModeUnsupported("the unstable locus needs nonnegative exponents")
    if not gens.generators:
        raise EmptyGeneratorList("no invariant generators; every point is unstable")
    variables = tuple(variables)
    n = len(variables)
    supports = sorted(
        {frozenset(i for i, e in enumerate(g.exponents) if e > 0) for g in gens.generators}
    , key=sorted)
    if any(not s for s in supports):
        return UnstableLocus(variables, ())
    minimal: list[frozenset] = []
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            candidate = frozenset(combo)
            if any(kept <= candidate for kept in minimal):
                continue
            if all(candidate & s for s in supports):
                minimal.append(candidate)
    components = sorted(
        (tuple(variables[i] for i in sorted(c)) for c in minimal),
        key=lambda c: (len(c), c),
    )
    return UnstableLocus(variables, tuple(components))


@dataclass(frozen=True)
class PolytopeChart:
    """Quotient polytope in kernel coordinates plus labeling data."""

    polytope: Polytope
    particular: tuple[int, ...] | None
    kernel_basis: tuple[tuple[int, ...], ...]

    def ambient_exponents(self, point) -> tuple[int, ...] | None:
        if self.particular is None:
            return None
        n = len(self.particular)
        return tuple(
            self.particular[j] + sum(b[j] * t for b, t in zip(self.kernel_basis, point))
            for j in range(n)
        )

    def labels(self, variables) -> dict:
        out = {}
        for point in polytope_lattice_points(self.polytope):
            exps = self.ambient_exponents(point)
            if exps is not None and all(e >= 0 for e in exps):
                out[point] = monomial_string(exps, variables)
        return out


def polytope_chart(action: ActionData) -> PolytopeChart:
    kernel = integer_kernel(action.matrix)
    k = len(kernel)
    particular_int = solve_diophantine(action.matrix, action.alpha)
    if particular_int is not None:
        particular = tuple(Fraction(x) for x in particular_int)
    else:
        rational = solve_fraction(action.matrix, action.alpha)
        if rational is None:
            return PolytopeChart(Polytope(k, ()), None, kernel)
        particular = rational
    n = action.nvars
    rows = [tuple(basis_vec[j] for basis_vec in kernel) for j in range(n)]
    rhs = [-particular[j] for j in range(n)]
    if not feasible(rows, rhs):
        return PolytopeChart(Polytope(k, ()), particular_int, kernel)
    if not recession_is_trivial(rows, k):
        raise UnboundedPolytope("degree-one solution polytope is unbounded")
    verts = polyhedron_vertices(rows, rhs)
    return PolytopeChart(Polytope(k, tuple(sorted(verts))), particular_int, kernel)


def quotient_polytope(action: ActionData) -> Polytope:
    """The degree-one slice {m >= 0 : Am = alpha} in kernel coordinates."""
    return polytope_chart(action).polytope


def quotient_fan(action: ActionData) -> Fan:
    """Normal fan of the quotient polytope; presents the quotient."""
    return normal_fan(quotient_polytope(action))


@lru_cache(maxsize=4096)
def _lattice_point_count(polytope: Polytope) -> int:
    return len(polytope_lattice_points(polytope))


def identify_wps(polytope: Polytope, max_weight: int = 8):
    """Smallest weight tuple whose reference polytope matches, with witness."""
    from .wps import WeightVector, wps_polytope

    if not polytope.is_full_dimensional():
        raise NotFullDimensional("identification needs a full-dimensional polytope")
    k = polytope.dim
    if k > 3:
        return None
    points = _lattice_point_count(polytope)
    for weights in combinations_with_replacement(range(1, max_weight + 1), k + 1):
        g = 0
        for w in weights:
            g = gcd(g, w)
        if g != 1:
            continue
        reference = wps_polytope(WeightVector(weights))
        if len(reference.vertices) != len(polytope.vertices):
            continue
        if _lattice_point_count(reference) != points:
            continue
        witness = lattice_equivalent(polytope, reference)
        if witness is not None:
            return weights, witness
    return None


@dataclass(frozen=True)
class Wall:
    spanning_columns: tuple[tuple[int, ...], ...]
    cone: Cone

    def as_jsonable(self):
        return {
            "spanning_columns": [list(s) for s in self.spanning_columns],
            "cone": self.cone.as_jsonable(),
        }


@dataclass(frozen=True)
class ChamberReport:
    status: str  # "generic" | "on_wall"
    walls_hit: tuple[Wall, ...]
    chamber: Cone | None
    inside_effective: bool

    def as_jsonable(self):
        return {
            "status": self.status,
            "walls_hit": [w.as_jsonable() for w in self.walls_hit],
            "chamber": self.chamber.as_jsonable() if self.chamber else None,
            "inside_effective": self.inside_effective,
        }


def chamber_test(action: ActionData) -> ChamberReport:
    """Position of the linearization in the column-cone wall decomposition.

    Walls are the (r-1)-dimensional cones spanned by column subsets; a
    linearization strictly off every wall is generic (semistable = stable),
    and its chamber is the intersection of the full-dimensional simplicial
    column cones containing it.
    """
    r = action.rank
    cols = [tuple(row[j] for row in action.matrix) for j in range(action.nvars)]
    alpha = action.alpha
    walls: dict = {}
    for subset in combinations(range(len(cols)), r - 1):
        span = hnf_basis([cols[j] for j in subset], r)
        if len(span) != r - 1:
            continue
        on_span = tuple(
            j
            for j in range(len(cols))
            if len(hnf_basis(list(span) + [cols[j]], r)) == len(span)
        )
        wall_cone = make_cone(r, [cols[j] for j in on_span])
        key = wall_cone.generators
        walls.setdefault(key, {"cone": wall_cone, "subsets": set()})
        walls[key]["subsets"].add(subset)
    wall_list = [
        Wall(tuple(sorted(data["subsets"])), data["cone"])
        for key, data in sorted(walls.items())
    ]
    hit = tuple(w for w in wall_list if cone_contains(w.cone, alpha))
    effective = make_cone(r, cols)
    inside = cone_contains(effective, alpha)
    if hit:
        return ChamberReport("on_wall", hit, None, inside)
    chamber = None
    if inside:
        containing = []
        for subset in combinations(range(len(cols)), r):
            simplicial = make_cone(r, [cols[j] for j in subset], irredundant=True)
            if len(hnf_basis(simplicial.generators, r)) != r:
                continue
            if cone_contains(simplicial, alpha):
                containing.append(simplicial)
        if containing:
            chamber = containing[0]
            for c in containing[1:]:
                chamber = cone_intersection(chamber, c)
    return ChamberReport("generic", (), chamber, inside)


def check_invariance(g: GradedMonomial, action: ActionData, t) -> bool:
    """Does the monomial transform with the linearization character at t?

    Checked both as the exact exponent identity and on the sample torus
    point (nonzero rationals).
    """
    sample = tuple(Fraction(x) for x in t)
    if len(sample) != action.rank:
        raise ValueError("torus point length must match the torus rank")
    if any(x == 0 for x in sample):
        raise ZeroTorusEntry("torus coordinates must be nonzero")
    lhs = mat_vec(action.matrix, g.exponents)
    rhs = tuple(a * g.degree for a in action.alpha)
    symbolic = lhs == rhs
    numeric_left = Fraction(1)
    for base, e in zip(sample, lhs):
        numeric_left *= base ** e
    numeric_right = Fraction(1)
    for base, e in zip(sample, rhs):
        numeric_right *= base ** e
    return symbolic and numeric_left == numeric_right


# ---------------------------------------------------------------------------
# full report


@dataclass(frozen=True)
class Identification:
    weights: tuple[int, ...]
    name: str
    witness: UnimodularAffineMap

    def as_jsonable(self):
        return {
            "weights": list(self.weights),
            "name": self.name,
            "witness": self.witness.as_jsonable(),
        }


@dataclass(frozen=True)
class QuotientReport:
    action: ActionData
    mode: str
    degree_bound: int
    generators: HilbertBasisResult
    charts: tuple[MonomialAlgebra, ...]
    unstable: UnstableLocus | None
    polytope: Polytope | None
    polytope_labels: tuple[tuple[tuple[int, ...], str], ...]
    fan: Fan | None
    identification: Identification | None
    chamber: ChamberReport
    notes: tuple[str, ...] = field(default_factory=tuple)

    def generator_strings(self) -> tuple[str, ...]:
        return tuple(
            monomial_string(g.exponents, self.action.variables)
            for g in self.generators.generators
        )

    def as_jsonable(self):
        return {
            "input": self.action.as_jsonable(),
            "mode": self.mode,
            "degree_bound": self.degree_bound,
            "generators": {
                **self.generators.as_jsonable(),
                "pretty": list(self.generator_strings()),
            },
            "charts": [c.as_jsonable() for c in self.charts],
            "unstable": self.unstable.as_jsonable() if self.unstable else None,
            "polytope": self.polytope.as_jsonable() if self.polytope else None,
            "polytope_lattice_points": [
                {"point": list(p), "monomial": label} for p, label in self.polytope_labels
            ],
            "fan": self.fan.as_jsonable() if self.fan else None,
            "identification": self.identification.as_jsonable()
            if self.identification
            else None,
            "chamber": self.chamber.as_jsonable(),
            "notes": list(self.notes),
        }


def _lattice_polytope_chart(action: ActionData, gens) -> PolytopeChart:
    """Simplex of the lattice-mode generators in coset coordinates."""
    exps = [g.exponents for g in gens]
    base = exps[0]
    diffs = [vec_sub(e, base) for e in exps[1:]]
    basis = hnf_basis(diffs, action.nvars)
    from .cones import solve_square_like

    coords = []
    for e in exps:
        sol = solve_square_like(list(basis), [Fraction(x) for x in vec_sub(e, base)])
        coords.append(tuple(int(x) for x in sol))
    poly = polytope_from_points(len(basis), coords)
    return PolytopeChart(poly, base, basis)


def build_report(action: ActionData, mode: str = "polynomial",
                 degree_bound: int = DEFAULT_DEGREE_BOUND) -> QuotientReport:
    notes = []
    ring = invariant_ring(action, mode, degree_bound)
    charts = tuple(
        chart_ring(action.variables, ring.generators, i)
        for i in range(len(ring.generators))
    )

    unstable = None
    if mode == "polynomial":
        if ring.generators:
            unstable = unstable_locus(ring, action.variables)
        else:
            notes.append(
                "no invariant generators up to the degree bound; "
                "every point is unstable"
            )
    else:
        notes.append("unstable locus is not defined for lattice-mode generators")

    chart = None
    polytope = None
    labels: tuple = ()
    fan = None
    identification = None
    if mode == "polynomial":
        try:
            chart = polytope_chart(action)
        except UnboundedPolytope:
            notes.append("degree-one solution polytope is unbounded")
    elif ring.generators:
        chart = _lattice_polytope_chart(action, ring.generators)
    if chart is not None:
        polytope = chart.polytope
        labels = tuple(sorted(chart.labels(action.variables).items()))
        try:
            fan = normal_fan(polytope)
        except NotFullDimensional:
            notes.append("quotient polytope is not full-dimensional; no fan emitted")
        if fan is not None and polytope.dim <= 3:
            found = identify_wps(polytope)
            if found is not None:
                from .wps import WeightVector

                weights, witness = found
                identification = Identification(
                    weights, WeightVector(weights).display_name(), witness
                )

    other_mode = "lattice" if mode == "polynomial" else "polynomial"
    try:
        other = invariant_ring(action, other_mode, degree_bound)
        ours = {(g.exponents, g.degree) for g in ring.generators}
        theirs = {(g.exponents, g.degree) for g in other.generators}
        if ours != theirs:
            notes.append(
                f"mode discrepancy: {other_mode} mode yields "
                f"{[monomial_string(g.exponents, action.variables) for g in other.generators]} "
                f"instead of "
                f"{[monomial_string(g.exponents, action.variables) for g in ring.generators]}"
            )
    except ToricGITError as exc:
        notes.append(f"mode discrepancy check skipped: {exc}")

    return QuotientReport(
        action=action,
        mode=mode,
        degree_bound=degree_bound,
        generators=ring,
        charts=charts,
        unstable=unstable,
        polytope=polytope,
        polytope_labels=labels,
        fan=fan,
        identification=identification,
        chamber=chamber_test(action),
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# linearization sweeps


@dataclass(frozen=True)
class SweepGroup:
    representative: tuple[int, ...]
    alphas: tuple[tuple[int, ...], ...]
    unstable_components: tuple[tuple[str, ...], ...] | None
    unstable_dimension: int
    report: QuotientReport

    def as_jsonable(self):
        return {
            "representative": list(self.representative),
            "alphas": [list(a) for a in self.alphas],
            "unstable_components": [list(c) for c in self.unstable_components]
            if self.unstable_components is not None
            else None,
            "unstable_dimension": self.unstable_dimension,
            "report": self.report.as_jsonable(),
        }


@dataclass(frozen=True)
class SweepResult:
    groups: tuple[SweepGroup, ...]
    errors: tuple[tuple[tuple[int, ...], str], ...]

    def as_jsonable(self):
        return {
            "groups": [g.as_jsonable() for g in self.groups],
            "errors": [
                {"alpha": list(a), "error": msg} for a, msg in self.errors
            ],
        }


def _box_points(box):
    if not box:
        return [()]
    lo, hi = box[0]
    rest = _box_points(box[1:])
    return [(v,) + r for v in range(lo, hi + 1) for r in rest]


def sweep(matrix, variables, alpha_box, mode: str = "polynomial",
          degree_bound: int = DEFAULT_DEGREE_BOUND) -> SweepResult:
    """Group a box of linearizations by their semistable locus.

    One full report per group.  The representative is the first member (in
    lex order) whose report identifies the quotient polytope, else the
    first member outright; the degree-one polytope is polarization
    dependent, so members of one chamber can differ in identifiability.
    Groups are ordered by ascending unstable-locus dimension, then
    component count, then representative, so the head of the list removes
    the least from the space.
    """
    matrix = as_matrix(matrix)
    if len(alpha_box) != len(matrix):
        raise ValueError("sweep box needs one [lo, hi] range per matrix row")
    n = len(matrix[0])
    groups: dict = {}
    errors = []
    for alpha in sorted(_box_points(tuple(alpha_box))):
        action = make_action(matrix, variables, alpha)
        try:
            ring = invariant_ring(action, mode, degree_bound)
            if mode == "polynomial" and ring.generators:
                locus = unstable_locus(ring, action.variables)
                key = ("locus", locus.components)
                dimension = locus.dimension
                components = locus.components
            elif not ring.generators:
                key = ("empty", ())
                dimension = n
                components = ((),)
            else:
                key = ("lattice", tuple(g.exponents for g in ring.generators))
                dimension = -1
                components = None
        except ToricGITError as exc:
            errors.append((alpha, f"{type(exc).__name__}: {exc}"))
            continue
        entry = groups.setdefault(
            key, {"alphas": [], "dimension": dimension, "components": components}
        )
        entry["alphas"].append(alpha)
    out = []
    for key, entry in groups.items():
        rep = entry["alphas"][0]
        report = build_report(make_action(matrix, variables, rep), mode, degree_bound)
        if report.identification is None:
            for candidate in entry["alphas"][1:]:
                trial = build_report(
                    make_action(matrix, variables, candidate), mode, degree_bound
                )
                if trial.identification is not None:
                    rep, report = candidate, trial
                    break
        out.append(
            SweepGroup(
                representative=rep,
                alphas=tuple(entry["alphas"]),
                unstable_components=entry["components"],
                unstable_dimension=entry["dimension"],
                report=report,
            )
        )
    ordered = sorted(
        out,
        key=lambda g: (
            g.unstable_dimension,
            len(g.unstable_components) if g.unstable_components is not None else 0,
            g.representative,
        ),
    )
    return SweepResult(tuple(ordered), tuple(errors))
