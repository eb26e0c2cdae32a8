"""Finitely generated monomial semigroup algebras.

Hilbert-basis generators of graded lattice semigroups, degree-zero chart
rings of the associated Proj, and exponent-lattice isomorphism testing.
Exponent vectors may be negative (Laurent monomials); membership tests
split off the invertible part of the semigroup so that every decision is
exact and total.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import UnboundedSolutionSet
from .lattice import (
    dot,
    hnf_basis,
    in_lattice,
    integer_kernel,
    is_zero,
    solve_diophantine,
    transpose,
    vec_sub,
)
from .polyhedra import enumerate_nonneg_solutions, extreme_rays, nonneg_kernel_is_trivial

log = logging.getLogger(__name__)


class UnboundedSlice(UnboundedSolutionSet):
    """A graded slice of the semigroup is infinite."""


@dataclass(frozen=True)
class GradedMonomial:
    exponents: tuple[int, ...]
    degree: int

    def as_jsonable(self):
        return {"exponents": list(self.exponents), "degree": self.degree}


@dataclass(frozen=True)
class HilbertBasisResult:
    generators: tuple[GradedMonomial, ...]
    verified_degree: int
    complete: bool
    mode: str = "polynomial"

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def as_jsonable(self):
        return {
            "generators": [g.as_jsonable() for g in self.generators],
            "verified_degree": self.verified_degree,
            "complete": self.complete,
            "mode": self.mode,
        }


def _display_sorted(monomials):
    return tuple(sorted(monomials, key=lambda g: (g.degree, tuple(-e for e in g.exponents))))


def hilbert_basis(matrix, alpha, degree_bound: int) -> HilbertBasisResult:
    """Irreducible generators of {(m, d) : matrix @ m = d * alpha, m >= 0}.

    Enumerate-and-reduce up to degree_bound with a generation certificate:
    ``complete`` records the machine-checked fact that every enumerated
    element of degree <= verified_degree is a nonnegative integer
    combination of the returned generators.
    """
    if degree_bound < 1:
        raise ValueError("degree bound must be at least 1")
    if not nonneg_kernel_is_trivial(matrix):
        raise UnboundedSlice("graded slices are infinite; no Hilbert basis at this degree")
    slices = {0: {tuple(0 for _ in matrix[0])}}
    for d in range(1, degree_bound + 1):
        target = tuple(int(a) * d for a in alpha)
        slices[d] = set(enumerate_nonneg_solutions(matrix, target))
    gens = []
    for d in range(1, degree_bound + 1):
        for m in sorted(slices[d]):
            reducible = False
            for d1 in range(1, d // 2 + 1):
                d2 = d - d1
                for m1 in slices[d1]:
                    rest = vec_sub(m, m1)
                    if all(x >= 0 for x in rest) and rest in slices[d2]:
                        reducible = True
                        break
                if reducible:
                    break
            if not reducible:
                gens.append(GradedMonomial(m, d))
    generated = {(tuple(0 for _ in matrix[0]), 0)}
    complete = True
    for d in range(1, degree_bound + 1):
        for m in sorted(slices[d]):
            ok = GradedMonomial(m, d) in set(gens) or any(
                g.degree <= d
                and all(x >= 0 for x in vec_sub(m, g.exponents))
                and (vec_sub(m, g.exponents), d - g.degree) in generated
                for g in gens
            )
            if ok:
                generated.add((m, d))
            else:
                complete = False
    return HilbertBasisResult(_display_sorted(gens), degree_bound, complete)


def monomial_string(exponents, variables) -> str:
    """Paper-style rendering: powers with ^, negative exponents below a /."""
    sep = "" if all(len(v) == 1 for v in variables) else "*"

    def part(pairs):
        return sep.join(
            v if e == 1 else f"{v}^{e}" for v, e in pairs
        )

    num = [(v, e) for v, e in zip(variables, exponents) if e > 0]
    den = [(v, -e) for v, e in zip(variables, exponents) if e < 0]
    if not num and not den:
        return "1"
    if not den:
        return part(num)
    return f"{part(num) or '1'}/{part(den)}"


def _relation_supports(gens) -> frozenset[int]:
    """Indices that occur in some nonnegative linear relation of the gens."""
    k = len(gens)
    if k == 0:
        return frozenset()
    n = len(gens[0])
    rows = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    for d in range(n):
        coeffs = tuple(g[d] for g in gens)
        rows.append(coeffs)
        rows.append(tuple(-x for x in coeffs))
    rays, _lines = extreme_rays(rows, k)
    support = set()
    for r in rays:
        support.update(i for i, x in enumerate(r) if x != 0)
    return frozenset(support)


@lru_cache(maxsize=65536)
def semigroup_contains(gens: tuple, target: tuple) -> bool:
    """Is target a nonnegative integer combination of the generators?

    Total and exact also when the semigroup has invertible elements: the
    indices occurring in nonnegative relations generate a subgroup, so the
    search splits into a lattice-membership part and a finite enumeration
    in the quotient.
    """
    if is_zero(target):
        return True
    if not gens:
        return False
    n = len(target)
    invertible = _relation_supports(gens)
    free = [i for i in range(len(gens)) if i not in invertible]
    if not invertible:
        cols = tuple(tuple(g[d] for g in gens) for d in range(n))
        return bool(enumerate_nonneg_solutions(cols, target))
    unit_gens = [gens[i] for i in invertible]
    if not free:
        return in_lattice(unit_gens, target)
    projector = integer_kernel(unit_gens)
    if not projector:
        # units span everything rationally: N-span = Z-span in the quotient
        return in_lattice(list(gens), target)
    proj_gens = [tuple(dot(w, gens[i]) for w in projector) for i in free]
    proj_target = tuple(dot(w, target) for w in projector)
    cols = tuple(tuple(g[d] for g in proj_gens) for d in range(len(projector)))
    for combo in enumerate_nonneg_solutions(cols, proj_target):
        residual = target
        for c, i in zip(combo, free):
            residual = vec_sub(residual, tuple(c * x for x in gens[i]))
        if in_lattice(unit_gens, residual):
            return True
    return False


def irredundant_exponents(variables, exponents) -> tuple[tuple[int, ...], ...]:
    """Drop generators that are products of nonnegative powers of the rest."""
    gens = sorted(set(tuple(int(x) for x in e) for e in exponents))
    gens = [g for g in gens if not is_zero(g)]
    changed = True
    while changed:
        changed = False
        for g in list(gens):
            others = tuple(h for h in gens if h != g)
            if semigroup_contains(others, g):
                log.debug(
                    "dropping redundant generator %s",
                    monomial_string(g, variables),
                )
                gens = list(others)
                changed = True
                break
    return tuple(sorted(gens, reverse=True))


@dataclass(frozen=True)
class MonomialAlgebra:
    """Algebra generated by Laurent monomials, stored by exponent vectors."""

    variables: tuple[str, ...]
    generators: tuple[tuple[int, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    def exponent_rank(self) -> int:
        return len(hnf_basis(self.generators, len(self.variables)))

    def pretty(self) -> str:
        if self.is_trivial:
            return "C"
        inner = ", ".join(monomial_string(g, self.variables) for g in self.generators)
        return f"C[{inner}]"

    def as_jsonable(self):
        return {
            "variables": list(self.variables),
            "generators": [list(g) for g in self.generators],
            "pretty": self.pretty(),
        }


def make_algebra(variables, exponents) -> MonomialAlgebra:
    variables = tuple(variables)
    return MonomialAlgebra(variables, irredundant_exponents(variables, exponents))


def chart_ring(variables, gens: tuple[GradedMonomial, ...], i: int) -> MonomialAlgebra:
    """Generators of the degree-zero localization at ``gens[i]``.

    For equal-degree generator lists these are just the quotients by
    gens[i]; mixed degrees go through the Hilbert basis of the graded
    combination semigroup.
    """
    if not 0 <= i < len(gens):
        raise IndexError("chart index out of range")
    pivot = gens[i]
    others = [g for j, g in enumerate(gens) if j != i]
    if not others:
        return make_algebra(variables, [])
    if all(g.degree == pivot.degree for g in others):
        exps = [vec_sub(g.exponents, pivot.exponents) for g in others]
        return make_algebra(variables, exps)
    degree_row = tuple(g.degree for g in others)
    bound = max(max(degree_row), pivot.degree) + pivot.degree
    combos = hilbert_basis((degree_row,), (pivot.degree,), bound)
    exps = []
    for combo in combos.generators:
        vec = tuple(
            sum(c * g.exponents[d] for c, g in zip(combo.exponents, others))
            - combo.degree * pivot.exponents[d]
            for d in range(len(variables))
        )
        exps.append(vec)
    return make_algebra(variables, exps)


@dataclass(frozen=True)
class LatticeIsomorphism:
    """Unimodular map between exponent lattices carrying gens onto gens."""

    source_basis: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[int, ...], ...]
    target_basis: tuple[tuple[int, ...], ...]

    def apply(self, vector):
        coords = _lattice_coordinates(self.source_basis, vector)
        if coords is None:
            raise ValueError("vector is not in the source lattice")
        image = tuple(
            sum(a * c for a, c in zip(row, coords)) for row in self.matrix
        )
        n = len(self.target_basis[0]) if self.target_basis else 0
        return tuple(
            sum(y * b[d] for y, b in zip(image, self.target_basis)) for d in range(n)
        )

    def as_jsonable(self):
        return {
            "source_basis": [list(r) for r in self.source_basis],
            "matrix": [list(r) for r in self.matrix],
            "target_basis": [list(r) for r in self.target_basis],
        }


def _lattice_coordinates(basis, vector):
    if not basis:
        return () if is_zero(vector) else None
    return solve_diophantine(transpose(basis), vector)


def monomial_isomorphic(r1: MonomialAlgebra, r2: MonomialAlgebra) -> LatticeIsomorphism | None:
    """Exponent-lattice isomorphism matching the generator semigroups.

    Candidate unimodular maps are derived from generator bases; absence
    of a witness within that search space reports None.
    """
    if r1.is_trivial or r2.is_trivial:
        raise ValueError("isomorphism testing needs nontrivial algebras")
    b1 = hnf_basis(r1.generators, len(r1.variables))
    b2 = hnf_basis(r2.generators, len(r2.variables))
    if len(b1) != len(b2):
        return None
    k = len(b1)
    g1 = [_lattice_coordinates(b1, g) for g in r1.generators]
    g2 = [_lattice_coordinates(b2, g) for g in r2.generators]
    if g1 == g2:
        ident = tuple(tuple(1 if a == b else 0 for b in range(k)) for a in range(k))
        return LatticeIsomorphism(b1, ident, b2)
    frame_idx = []
    frame = []
    for idx, v in enumerate(g1):
        trial = frame + [v]
        if len(hnf_basis(trial, k)) == len(trial):
            frame_idx.append(idx)
            frame.append(v)
        if len(frame) == k:
            break
    if len(frame) < k:
        return None
    from itertools import permutations

    from .lattice import det, solve_square_fraction, unimodular_inverse

    set1 = tuple(sorted(set(g1)))
    set2 = tuple(sorted(set(g2)))
    for images in permutations(range(len(g2)), k):
        targets = [g2[t] for t in images]
        rows = []
        ok = True
        for r in range(k):
            sol = solve_square_fraction(frame, [t[r] for t in targets])
            if sol is None or any(x.denominator != 1 for x in sol):
                ok = False
                break
            rows.append(tuple(int(x) for x in sol))
        if not ok:
            continue
        u = tuple(rows)
        if abs(det(u)) != 1:
            continue
        u_inv = unimodular_inverse(u)
        fwd = [tuple(sum(a * c for a, c in zip(row, v)) for row in u) for v in g1]
        back = [tuple(sum(a * c for a, c in zip(row, v)) for row in u_inv) for v in g2]
        if all(semigroup_contains(set2, w) for w in fwd) and all(
            semigroup_contains(set1, w) for w in back
        ):
            return LatticeIsomorphism(b1, u, b2)
    return None
