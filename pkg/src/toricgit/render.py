"""SVG rendering of 2-D moment polytopes.

Dots at lattice points carry their monomial labels; edges are drawn
between adjacent hull vertices.  Coordinates are produced by exact integer
arithmetic and printed with three decimal places, so output is
byte-reproducible.
"""

from fractions import Fraction
from functools import cmp_to_key

from .cones import Polytope, polytope_lattice_points


def _dec(x: Fraction) -> str:
    scaled = x * 1000
    q = scaled.numerator // scaled.denominator  # floor for exactness
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // 1000}.{q % 1000:03d}"


def _cyclic_vertices(vertices):
    """Convex-polygon vertex order by exact polar angle around the centroid."""
    n = len(vertices)
    cx = sum(v[0] for v in vertices) / n
    cy = sum(v[1] for v in vertices) / n

    def half(v):
        dx, dy = v[0] - cx, v[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def compare(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        ax, ay = a[0] - cx, a[1] - cy
        bx, by = b[0] - cx, b[1] - cy
        cross = ax * by - ay * bx
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(vertices, key=cmp_to_key(compare))


def polytope_svg(polytope: Polytope, labels=None, scale: int = 60) -> str:
    if polytope.dim != 2:
        raise ValueError("SVG rendering is only available for 2-D polytopes")
    labels = dict(labels or {})
    points = list(polytope.vertices) + [
        tuple(Fraction(c) for c in p) for p in labels
    ]
    if not points:
        raise ValueError("cannot render an empty polytope")
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    margin = Fraction(45)

    def sx(x):
        return (Fraction(x) - minx) * scale + margin

    def sy(y):
        return (maxy - Fraction(y)) * scale + margin

    width = _dec((maxx - minx) * scale + 2 * margin)
    height = _dec((maxy - miny) * scale + 2 * margin)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '  <g stroke="black" stroke-width="1.5" fill="none">',
    ]
    ring = _cyclic_vertices(list(polytope.vertices))
    for a, b in zip(ring, ring[1:] + ring[:1]):
        parts.append(
            f'    <line x1="{_dec(sx(a[0]))}" y1="{_dec(sy(a[1]))}" '
            f'x2="{_dec(sx(b[0]))}" y2="{_dec(sy(b[1]))}"/>'
        )
    parts.append("  </g>")
    lattice = polytope_lattice_points(polytope)
    parts.append('  <g fill="black">')
    for p in lattice:
        parts.append(
            f'    <circle cx="{_dec(sx(p[0]))}" cy="{_dec(sy(p[1]))}" r="4"/>'
        )
    parts.append("  </g>")
    parts.append('  <g font-family="serif" font-size="16">')
    for p in sorted(labels):
        parts.append(
            f'    <text x="{_dec(sx(p[0]) + 8)}" y="{_dec(sy(p[1]) + 18)}">'
            f"{labels[p]}</text>"
        )
    parts.append("  </g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
