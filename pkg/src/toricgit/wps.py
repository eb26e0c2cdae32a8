"""Ground-truth weighted projective spaces used as identification targets.

A weight vector (w_0, ..., w_k) gives the diagonal one-torus action on
C^{k+1} with those exponents.  The reference polytope is the degree slice
of the invariant semigroup at the smallest linearization degree whose
degree-one monomials generate; a degree-one pure power of the i-th
variable needs w_i to divide the degree, so candidates are multiples of
lcm(w), and the first candidate is verified by the generation certificate.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .semigroups import hilbert_basis

_NAME_POOL = ("X", "Y", "Z", "W", "V", "U", "T", "S")


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[int, ...]

    def __post_init__(self):
        if not self.weights:
            raise ValueError("weight vector must be nonempty")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")
        g = 0
        for w in self.weights:
            g = gcd(g, w)
        if g != 1:
            raise ValueError("weights must have gcd 1")

    @property
    def k(self) -> int:
        return len(self.weights) - 1

    def display_name(self) -> str:
        if all(w == 1 for w in self.weights):
            return f"CP_{self.k}"
        return "CP_{" + ",".join(str(w) for w in self.weights) + "}"


def make_weights(seq) -> WeightVector:
    return WeightVector(tuple(int(w) for w in seq))


def is_well_formed(w: WeightVector) -> bool:
    """gcd of every k-subset is 1, so no reduction isomorphism applies."""
    ws = w.weights
    for omit in range(len(ws)):
        g = 0
        for i, x in enumerate(ws):
            if i != omit:
                g = gcd(g, x)
        if g != 1:
            return False
    return True


def _lcm(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


@lru_cache(maxsize=512)
def default_degree(weights: tuple[int, ...]) -> int:
    """Smallest linearization degree whose degree-one slice generates."""
    base = _lcm(weights)
    for multiple in range(1, 5):
        alpha = base * multiple
        result = hilbert_basis((weights,), (alpha,), 2)
        if result.generators and result.max_generator_degree == 1 and result.complete:
            return alpha
    raise RuntimeError(f"no generating degree found for weights {weights}")


def wps_action(w: WeightVector):
    """Rank-one action data whose quotient is the weighted projective space."""
    from .quotient import make_action

    names = _NAME_POOL[: len(w.weights)]
    if len(names) < len(w.weights):
        names = tuple(f"x{i}" for i in range(len(w.weights)))
    return make_action([list(w.weights)], names, [default_degree(w.weights)])


@lru_cache(maxsize=512)
def _wps_polytope_cached(weights: tuple[int, ...]):
    from .quotient import quotient_polytope

    return quotient_polytope(wps_action(WeightVector(weights)))


def wps_polytope(w: WeightVector):
    """Reference moment polytope of the weighted projective space."""
    return _wps_polytope_cached(w.weights)
