"""Lattice geometry in Z^3: the polytope families under study, affine
dependences and signatures, lattice width, normalized volumes, and the
explicit affine unimodular maps between equivalent empty tetrahedra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from math import gcd

from .errors import (
    DegenerateConfiguration,
    InvalidParams,
    OutOfRange,
    ParseError,
)

Point = tuple[int, int, int]


def det3(r0, r1, r2) -> int:
    return (
        r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
        - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
    )


def det4(rows) -> int:
    total = 0
    for c in range(4):
        minor = [[row[j] for j in range(4) if j != c] for row in rows[1:]]
        term = rows[0][c] * det3(*minor)
        total += term if c % 2 == 0 else -term
    return total

# Family tags
EMPTY_TETRA = "EMPTY_TETRA"
SIG21 = "SIG21"
SIG22 = "SIG22"
SIG31 = "SIG31"
SIG32 = "SIG32"
WIDTH2 = "WIDTH2"
EMBEDDED_POLYGON = "EMBEDDED_POLYGON"
CUSTOM = "CUSTOM"


@dataclass(frozen=True)
class LatticePolytope:
    """Ordered list of lattice points plus family metadata.

    The point order is fixed by the defining family and determines the
    generator-matrix row order downstream.
    """

    points: tuple[Point, ...]
    family: str = CUSTOM
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise InvalidParams("polytope points must be pairwise distinct")

    @property
    def k(self) -> int:
        return len(self.points)

    def describe(self) -> str:
        if self.family == EMPTY_TETRA:
            return "T(%d,%d)" % self.params
        if self.family == SIG21:
            return "P21(%d,%d)" % self.params
        if self.family == SIG22:
            return "P22"
        if self.family == SIG31:
            return "P31"
        if self.family == SIG32:
            return "P32(%d,%d)" % self.params
        if self.family == WIDTH2:
            return "W2:%d" % self.params
        if self.family == EMBEDDED_POLYGON:
            return "E:%d" % self.params
        return "[" + ";".join("(%d,%d,%d)" % p for p in self.points) + "]"


@dataclass(frozen=True)
class AffineUnimodularMap:
    """p -> M p + b with det(M) = +-1."""

    matrix: tuple[tuple[int, int, int], ...]
    shift: Point

    def __post_init__(self):
        if abs(det3(*self.matrix)) != 1:
            raise InvalidParams("matrix must have determinant +-1")

    def apply_point(self, p: Point) -> Point:
        m = self.matrix
        return tuple(
            m[r][0] * p[0] + m[r][1] * p[1] + m[r][2] * p[2] + self.shift[r]
            for r in range(3)
        )

    def compose(self, other: "AffineUnimodularMap") -> "AffineUnimodularMap":
        """self after other: p -> self(other(p))."""
        a, b = self.matrix, other.matrix
        m = tuple(
            tuple(sum(a[r][i] * b[i][c] for i in range(3)) for c in range(3))
            for r in range(3)
        )
        shift = tuple(
            sum(a[r][i] * other.shift[i] for i in range(3)) + self.shift[r]
            for r in range(3)
        )
        return AffineUnimodularMap(m, shift)


IDENTITY_MAP = AffineUnimodularMap(((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 0))


@dataclass(frozen=True)
class Signature:
    """Affine-dependence data of a 5-point configuration.

    ``volumes`` is the signed-minor vector (the raw tetrahedron volumes,
    matching the printed tables), ``dependence`` its primitive scaling;
    both are sign-normalized so the first nonzero entry is negative.
    ``pos``/``neg`` hold the unordered count pair as (max, min).
    """

    pos: int
    neg: int
    dependence: tuple[int, ...]
    volumes: tuple[int, ...]

    @property
    def pair(self) -> tuple[int, int]:
        return (self.pos, self.neg)


# -- families -----------------------------------------------------------------


def empty_tetrahedron(s: int, t: int) -> LatticePolytope:
    """T(s,t) = Conv{(0,0,0),(1,0,0),(0,0,1),(s,t,1)}, gcd(s,t)=1."""
    if t < 1 or gcd(s, t) != 1:
        raise InvalidParams(f"empty tetrahedron needs t >= 1, gcd(s,t)=1; got ({s},{t})")
    return LatticePolytope(
        ((0, 0, 0), (1, 0, 0), (0, 0, 1), (s, t, 1)), EMPTY_TETRA, (s, t)
    )


def width1_representative(sig: tuple[int, int], s: int = 0, t: int = 0) -> LatticePolytope:
    """Width-1 five-point representative for signature (2,1), (2,2), (3,1) or (3,2)."""
    if sig == (2, 1):
        if t < 1 or gcd(s, t) != 1 or not (0 <= 2 * s <= t):
            raise InvalidParams(f"(2,1) needs 0 <= s <= t/2, gcd(s,t)=1; got ({s},{t})")
        return LatticePolytope(
            ((0, 0, 0), (1, 0, 0), (0, 0, 1), (-1, 0, 0), (s, t, 1)), SIG21, (s, t)
        )
    if sig == (2, 2):
        return LatticePolytope(
            ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)), SIG22
        )
    if sig == (3, 1):
        return LatticePolytope(
            ((0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1)), SIG31
        )
    if sig == (3, 2):
        if t < 1 or gcd(s, t) != 1 or not (0 < s <= t):
            raise InvalidParams(f"(3,2) needs 0 < s <= t, gcd(s,t)=1; got ({s},{t})")
        return LatticePolytope(
            ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (s, t, 1)), SIG32, (s, t)
        )
    raise InvalidParams(f"unknown width-1 signature {sig}")


_WIDTH2_ROWS: tuple[tuple[Point, ...], ...] = (
    ((0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (1, 2, 3)),
    ((0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 1, 1), (-2, -1, -2)),
    ((0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 2, 1), (-1, -1, -1)),
    ((0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 3, 1), (-1, -2, -1)),
    ((0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 5, 1), (-1, -2, -1)),
    ((0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 5, 1), (-1, -1, -1)),
    ((0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 7, 1), (-1, -2, -1)),
    ((0, 0, 0), (1, 0, 0), (0, 0, 1), (3, 7, 1), (-2, -3, -1)),
    ((0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 5, 1), (-3, -5, -2)),
)

# Printed volume vectors for the width-2 rows, in row order.
WIDTH2_VOLUMES: tuple[tuple[int, ...], ...] = (
    (-9, 3, 3, 3, 0),
    (-4, 1, 1, 1, 1),
    (-5, 1, 1, 1, 2),
    (-7, 1, 1, 2, 3),
    (-11, 1, 3, 2, 5),
    (-13, 3, 4, 1, 5),
    (-17, 3, 5, 2, 7),
    (-19, 5, 4, 3, 7),
    (-20, 5, 5, 5, 5),
)

# Printed volume vectors for the width-1 rows, as functions of (s, t).
WIDTH1_VOLUMES = {
    (2, 1): lambda s, t: (-2 * t, t, 0, t, 0),
    (2, 2): lambda s, t: (-1, 1, 1, -1, 0),
    (3, 1): lambda s, t: (-3, 1, 1, 1, 0),
    (3, 2): lambda s, t: (-s - t, s, t, 1, -1),
}


def width2_representative(row: int) -> LatticePolytope:
    if not 1 <= row <= 9:
        raise OutOfRange(f"width-2 table rows are 1..9; got {row}")
    return LatticePolytope(_WIDTH2_ROWS[row - 1], WIDTH2, (row,))


_EMBEDDED_POLYGONS: tuple[tuple[Point, ...], ...] = (
    ((0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0)),
    ((0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0)),
    ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)),
    ((0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0)),
)


def embedded_polygon(i: int) -> LatticePolytope:
    """The 4-point polygon class representative i in 1..4, embedded at z=0.

    i=1 is the segment of length 3, i=2 the triangle with a length-2
    edge, i=3 the unit square, i=4 the exceptional triangle.
    """
    if not 1 <= i <= 4:
        raise OutOfRange(f"embedded polygons are 1..4; got {i}")
    return LatticePolytope(_EMBEDDED_POLYGONS[i - 1], EMBEDDED_POLYGON, (i,))


# -- affine dependence / signature --------------------------------------------


def affine_dependence(poly: LatticePolytope) -> Signature:
    """Unique (up to scale) affine dependence among 5 points.

    The coefficient at position k is the signed minor obtained by
    deleting column k of the homogeneous 4x5 coordinate matrix, so the
    vector is exactly the alternating-volume vector of the table rows.
    Sign-normalized to make the first nonzero entry negative.
    """
    if poly.k != 5:
        raise DegenerateConfiguration("affine dependence needs exactly 5 points")
    cols = [(1, p[0], p[1], p[2]) for p in poly.points]
    coeffs = []
    for k in range(5):
        rows = [[cols[j][r] for j in range(5) if j != k] for r in range(4)]
        coeffs.append((1 if k % 2 == 0 else -1) * det4(rows))
    if all(c == 0 for c in coeffs):
        raise DegenerateConfiguration("points do not affinely span R^3")
    first = next(c for c in coeffs if c != 0)
    if first > 0:
        coeffs = [-c for c in coeffs]
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    primitive = tuple(c // g for c in coeffs)
    pos = sum(1 for c in coeffs if c > 0)
    neg = sum(1 for c in coeffs if c < 0)
    return Signature(
        pos=max(pos, neg),
        neg=min(pos, neg),
        dependence=primitive,
        volumes=tuple(coeffs),
    )


# -- width, volume, hull ------------------------------------------------------


def lattice_width(poly: LatticePolytope, with_direction: bool = False):
    """min over nonzero integer u of max<u,p> - min<u,p>.

    Search box: |u_i| <= 1 + coordinate spread of P along axis i, which
    covers every 5-point polytope in scope; the achieving direction is
    returned on request as a certificate.
    """
    pts = poly.points
    if len(pts) == 1:
        return (0, (0, 0, 1)) if with_direction else 0
    bounds = []
    for axis in range(3):
        vals = [p[axis] for p in pts]
        bounds.append(1 + max(vals) - min(vals))
    best, best_u = None, None
    for u in product(*(range(-b, b + 1) for b in bounds)):
        if u == (0, 0, 0):
            continue
        dots = [u[0] * p[0] + u[1] * p[1] + u[2] * p[2] for p in pts]
        spread = max(dots) - min(dots)
        if best is None or spread < best:
            best, best_u = spread, u
    return (best, best_u) if with_direction else best


def normalized_volume_tetra(p0: Point, p1: Point, p2: Point, p3: Point) -> int:
    """|det(p1-p0, p2-p0, p3-p0)|; 0 iff the four points are coplanar."""
    rows = [tuple(a - b for a, b in zip(p, p0)) for p in (p1, p2, p3)]
    return abs(det3(*rows))


def hull_lattice_points(vertices: tuple[Point, ...]) -> list[Point]:
    """All lattice points inside the tetrahedron spanned by 4 vertices.

    Exact integer orientation tests over a bounding-box scan; no
    dependence on any classification theorem.
    """
    v = vertices
    vol = det3(*[tuple(a - b for a, b in zip(p, v[0])) for p in v[1:]])
    if vol == 0:
        raise DegenerateConfiguration("vertices are coplanar")
    inside = []
    los = [min(p[i] for p in v) for i in range(3)]
    his = [max(p[i] for p in v) for i in range(3)]
    for x in range(los[0], his[0] + 1):
        for y in range(los[1], his[1] + 1):
            for z in range(los[2], his[2] + 1):
                p = (x, y, z)
                # p is in the hull iff replacing each vertex keeps the
                # signed volume on the same side (or degenerate)
                ok = True
                for i in range(4):
                    repl = [p if j == i else v[j] for j in range(4)]
                    d = det3(
                        *[tuple(a - b for a, b in zip(q, repl[0])) for q in repl[1:]]
                    )
                    if d * vol < 0:
                        ok = False
                        break
                if ok:
                    inside.append(p)
    return inside


def is_empty_tetrahedron(poly: LatticePolytope) -> bool:
    """True iff the 4 vertices are the only lattice points of their hull."""
    if poly.k != 4:
        return False
    return set(hull_lattice_points(poly.points)) == set(poly.points)


# -- White normal form ---------------------------------------------------------


def white_canonical(s: int, t: int) -> int:
    """Minimum of {s, -s, s^-1, -s^-1} mod t; 0 when t = 1."""
    if t < 1 or gcd(s, t) != 1:
        raise InvalidParams(f"need t >= 1 and gcd(s,t)=1; got ({s},{t})")
    if t == 1:
        return 0
    inv = pow(s, -1, t)
    return min(s % t, (-s) % t, inv, (-inv) % t)


def _case1_map(s1: int, s2: int, t: int) -> AffineUnimodularMap:
    k = (s1 - s2) // t
    return AffineUnimodularMap(((1, k, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 0))


def _case2_map(s1: int, s2: int, t: int) -> AffineUnimodularMap:
    k = (1 - s1 * s2) // t
    return AffineUnimodularMap(((s1, k, 0), (t, -s2, 0), (0, 0, -1)), (0, 0, 1))


def _case3_map(s1: int, s2: int, t: int) -> AffineUnimodularMap:
    k = (s1 + s2) // t
    return AffineUnimodularMap(((-1, k, -1), (0, 1, 0), (0, 0, 1)), (1, 0, 0))


def white_equivalence_map(s1: int, s2: int, t: int) -> AffineUnimodularMap | None:
    """Explicit unimodular map sending T(s2,t) vertices onto T(s1,t) ones.

    Exists exactly when s1 is congruent to s2, s2^-1, -s2, or -s2^-1
    mod t; returns None otherwise.
    """
    if t < 1 or gcd(s1, t) != 1 or gcd(s2, t) != 1:
        raise InvalidParams(f"need gcd(s1,t)=gcd(s2,t)=1, t >= 1; got ({s1},{s2},{t})")
    if (s1 - s2) % t == 0:
        return _case1_map(s1, s2, t)
    if (s1 * s2 - 1) % t == 0:
        return _case2_map(s1, s2, t)
    if (s1 + s2) % t == 0:
        return _case3_map(s1, s2, t)
    if (s1 * s2 + 1) % t == 0:
        # compose: T(s2,t) -> T(s_mid,t) by case 2, then -> T(s1,t) by case 3
        s_mid = pow(s2, -1, t)
        step2 = _case2_map(s_mid, s2, t)
        # adjust s_mid so exact integer divisibility in case 3 holds
        # (s1 + s_mid is divisible by t because s1 = -s2^-1 mod t)
        step3 = _case3_map(s1, s_mid, t)
        return step3.compose(step2)
    return None


def apply_map(f: AffineUnimodularMap, poly: LatticePolytope) -> LatticePolytope:
    return LatticePolytope(tuple(f.apply_point(p) for p in poly.points), CUSTOM)


# -- spec string grammar --------------------------------------------------------

_PARAM_RE = re.compile(r"^([A-Za-z]+[0-9]*)\((-?\d+),(-?\d+)\)$")
_POINT_RE = re.compile(r"\((-?\d+),(-?\d+),(-?\d+)\)")


def parse_polytope_spec(text: str) -> LatticePolytope:
    """Parse 'T(s,t)', 'P21(s,t)', 'P22', 'P31', 'P32(s,t)', 'W2:i',
    'E:i', or an explicit '[(x,y,z);...]' point list."""
    s = text.strip().replace(" ", "")
    try:
        if s == "P22":
            return width1_representative((2, 2))
        if s == "P31":
            return width1_representative((3, 1))
        if s.startswith("W2:"):
            return width2_representative(int(s[3:]))
        if s.startswith("E:"):
            return embedded_polygon(int(s[2:]))
        if s.startswith("[") and s.endswith("]"):
            pts = [
                (int(a), int(b), int(c)) for a, b, c in _POINT_RE.findall(s[1:-1])
            ]
            if not pts:
                raise ParseError(f"no points in {text!r}")
            return LatticePolytope(tuple(pts), CUSTOM)
        m = _PARAM_RE.match(s)
        if m:
            name, a, b = m.group(1), int(m.group(2)), int(m.group(3))
            if name == "T":
                return empty_tetrahedron(a, b)
            if name == "P21":
                return width1_representative((2, 1), a, b)
            if name == "P32":
                return width1_representative((3, 2), a, b)
        raise ParseError(f"unrecognized polytope spec {text!r}")
    except (ValueError, OutOfRange, InvalidParams) as e:
        raise ParseError(f"bad polytope spec {text!r}: {e}") from e
