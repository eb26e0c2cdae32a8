"""Exact rational polyhedra at desk scale.

Provides the double-description pass (extreme rays and lines of a cone cut
out by homogeneous inequalities), vertex enumeration through basic
solutions, Fourier-Motzkin feasibility, and complete integer-point
enumeration for bounded polyhedra.  All arithmetic is exact.
"""

from fractions import Fraction
from math import ceil, floor, gcd

from .errors import UnboundedPolytope, UnboundedSolutionSet
from .lattice import (
    dot,
    hermite_normal_form,
    integer_kernel,
    is_zero,
    primitive,
    solve_diophantine,
    solve_square_fraction,
    transpose,
)


def _int_rows(rows, rhs=None):
    """Clear denominators row by row; inequalities are scale-invariant."""
    out_rows, out_rhs = [], []
    for i, row in enumerate(rows):
        entries = [Fraction(a) for a in row]
        b = Fraction(rhs[i]) if rhs is not None else Fraction(0)
        denom = 1
        for a in list(entries) + [b]:
            denom = denom * a.denominator // gcd(denom, a.denominator)
        ints = [int(a * denom) for a in entries]
        bi = int(b * denom)
        g = 0
        for a in ints + [bi]:
            g = gcd(g, abs(a))
        if g > 1:
            ints = [a // g for a in ints]
            bi = bi // g
        out_rows.append(tuple(ints))
        out_rhs.append(bi)
    if rhs is None:
        return out_rows
    return out_rows, out_rhs


def _rank(vectors, dim):
    vecs = [v for v in vectors if not is_zero(v)]
    if not vecs:
        return 0
    h, _ = hermite_normal_form(vecs)
    return sum(1 for row in h if not is_zero(row))


def extreme_rays(ineq_rows, dim) -> tuple[list, list]:
    """Extreme rays and lineality basis of {x : row . x >= 0 for all rows}.

    Double description with explicit lineality handling; adjacency is the
    exact rank test, so the output rays are precisely the extreme rays
    modulo the returned lines.  Rays and lines are primitive integer
    vectors, deterministically ordered.
    """
    rows = [primitive(r) for r in _int_rows(ineq_rows)]
    rows = [r for r in rows if not is_zero(r)]
    lines = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    rays: list[tuple] = []
    processed: list[tuple] = []

    for a in rows:
        hit_idx = next((i for i, l in enumerate(lines) if dot(a, l) != 0), None)
        if hit_idx is not None:
            hit = lines.pop(hit_idx)
            c = dot(a, hit)
            if c < 0:
                hit = tuple(-x for x in hit)
                c = -c
            lines = [
                primitive(tuple(c * x - dot(a, l) * y for x, y in zip(l, hit)))
                for l in lines
            ]
            rays = [
                primitive(tuple(c * x - dot(a, r) * y for x, y in zip(r, hit)))
                for r in rays
            ]
            rays.append(hit)
        else:
            vals = [dot(a, r) for r in rays]
            pos = [r for r, v in zip(rays, vals) if v > 0]
            zero = [r for r, v in zip(rays, vals) if v == 0]
            neg = [r for r, v in zip(rays, vals) if v < 0]
            if neg:
                zsets = {
                    r: frozenset(i for i, row in enumerate(processed) if dot(row, r) == 0)
                    for r in rays
                }
                quotient_dim = dim - len(lines)
                combined = []
                for p in pos:
                    vp = dot(a, p)
                    for q in neg:
                        common = zsets[p] & zsets[q]
                        active = [processed[i] for i in common]
                        if _rank(active, dim) != quotient_dim - 2:
                            continue
                        vq = dot(a, q)
                        w = primitive(tuple(vp * y - vq * x for x, y in zip(p, q)))
                        if not is_zero(w):
                            combined.append(w)
                rays = pos + zero + combined
        rays = sorted(set(r for r in rays if not is_zero(r)))
        processed.append(a)

    rays = sorted(set(primitive(r) for r in rays if not is_zero(r)))
    lines = [primitive(l) for l in lines if not is_zero(l)]
    canon_lines = []
    for l in lines:
        lead = next(x for x in l if x != 0)
        canon_lines.append(l if lead > 0 else tuple(-x for x in l))
    return rays, sorted(set(canon_lines))


def recession_is_trivial(ineq_rows, dim) -> bool:
    rays, lines = extreme_rays(ineq_rows, dim)
    return not rays and not lines


def nonneg_kernel_is_trivial(mat) -> bool:
    """Is {x >= 0 : mat @ x = 0} just the origin?"""
    n = len(mat[0])
    rows = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    for r in mat:
        rows.append(tuple(int(a) for a in r))
        rows.append(tuple(-int(a) for a in r))
    rays, lines = extreme_rays(rows, n)
    return not rays and not lines


def feasible(rows, rhs) -> bool:
    """Fourier-Motzkin feasibility of {x : rows @ x >= rhs}."""
    if not rows:
        return True
    rows, rhs = _int_rows(rows, rhs)
    system = list(zip(rows, rhs))
    dim = len(rows[0])
    for var in range(dim):
        pos, neg, rest = [], [], []
        for r, b in system:
            c = r[var]
            (pos if c > 0 else neg if c < 0 else rest).append((r, b))
        new = list(rest)
        for rp, bp in pos:
            cp = rp[var]
            for rn, bn in neg:
                cn = -rn[var]
                row = tuple(cn * x + cp * y for x, y in zip(rp, rn))
                new.append((row, cn * bp + cp * bn))
        seen: dict = {}
        for r, b in new:
            if is_zero(r):
                if b > 0:
                    return False
                continue
            g = 0
            for x in r:
                g = gcd(g, abs(x))
            g = gcd(g, abs(b))
            if g > 1:
                r = tuple(x // g for x in r)
                b //= g
            if r not in seen or seen[r] < b:
                seen[r] = b
        system = list(seen.items())
    return True


def vertices(rows, rhs) -> list[tuple[Fraction, ...]]:
    """All basic feasible solutions of {x : rows @ x >= rhs}."""
    dim = len(rows[0]) if rows else 0
    if dim == 0:
        return [()] if all(Fraction(b) <= 0 for b in rhs) else []
    found = set()
    idxs = list(range(len(rows)))
    from itertools import combinations

    for subset in combinations(idxs, dim):
        sub = [rows[i] for i in subset]
        sol = solve_square_fraction(sub, [rhs[i] for i in subset])
        if sol is None:
            continue
        ok = all(
            sum(Fraction(a) * x for a, x in zip(rows[i], sol)) >= Fraction(rhs[i])
            for i in idxs
        )
        if ok:
            found.add(tuple(Fraction(x) for x in sol))
    return sorted(found)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def integer_points(rows, rhs, *, on_unbounded="raise") -> list[tuple[int, ...]]:
    """All integer points of {x : rows @ x >= rhs}, ascending lex.

    Raises UnboundedPolytope when the set is nonempty and unbounded
    (on_unbounded="raise"); an empty polyhedron just yields [].
    """
    if not rows:
        raise ValueError("need at least one inequality row")
    dim = len(rows[0])
    int_rows, int_rhs = _int_rows(rows, rhs)
    if dim == 0:
        return [()] if all(b <= 0 for b in int_rhs) else []
    if not recession_is_trivial(int_rows, dim):
        if feasible(int_rows, int_rhs):
            raise UnboundedPolytope("polyhedron is unbounded")
        return []
    verts = vertices(int_rows, int_rhs)
    if not verts:
        return []
    lows = [ceil(min(v[j] for v in verts)) for j in range(dim)]
    highs = [floor(max(v[j] for v in verts)) for j in range(dim)]
    if any(lo > hi for lo, hi in zip(lows, highs)):
        return []

    m = len(int_rows)
    suff_min = [[0] * (dim + 1) for _ in range(m)]
    suff_max = [[0] * (dim + 1) for _ in range(m)]
    for i in range(m):
        for j in range(dim - 1, -1, -1):
            c = int_rows[i][j]
            a, b = c * lows[j], c * highs[j]
            suff_min[i][j] = suff_min[i][j + 1] + min(a, b)
            suff_max[i][j] = suff_max[i][j + 1] + max(a, b)

    out = []
    point = [0] * dim

    def descend(j, fixed):
        if j == dim:
            if all(fixed[i] >= int_rhs[i] for i in range(m)):
                out.append(tuple(point))
            return
        lo, hi = lows[j], highs[j]
        for i in range(m):
            c = int_rows[i][j]
            slack = int_rhs[i] - fixed[i] - suff_max[i][j + 1]
            if c > 0:
                lo = max(lo, _ceil_div(slack, c))
            elif c < 0:
                hi = min(hi, slack // c)
            elif slack > 0:
                return
        for val in range(lo, hi + 1):
            point[j] = val
            descend(j + 1, [fixed[i] + int_rows[i][j] * val for i in range(m)])
        point[j] = 0

    descend(0, [0] * m)
    return out


def enumerate_nonneg_solutions(mat, rhs) -> list[tuple[int, ...]]:
    """Complete list of x in N^n with mat @ x = rhs, ascending lex.

    The recession cone {x >= 0 : mat @ x = 0} must be trivial; otherwise
    UnboundedSolutionSet is raised before any enumeration starts.
    """
    n = len(mat[0])
    if len(rhs) != len(mat):
        raise ValueError("right-hand side has wrong length")
    if not nonneg_kernel_is_trivial(mat):
        raise UnboundedSolutionSet("nonnegative solution set has a recession ray")
    part = solve_diophantine(mat, rhs)
    if part is None:
        return []
    kernel = integer_kernel(mat)
    if not kernel:
        return [tuple(part)] if all(x >= 0 for x in part) else []
    t_rows = [tuple(k[j] for k in kernel) for j in range(n)]
    t_rhs = [-part[j] for j in range(n)]
    ts = integer_points(t_rows, t_rhs)
    sols = []
    for t in ts:
        x = tuple(part[j] + sum(k[j] * ti for k, ti in zip(kernel, t)) for j in range(n))
        sols.append(x)
    return sorted(sols)


def lattice_points(rows, rhs) -> list[tuple[int, ...]]:
    """Integer points of the polytope {x : rows @ x >= rhs}, ascending lex."""
    return integer_points(rows, rhs)
