"""Rational points of P^m over F_q and complete-intersection validation."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .errors import NonHomogeneousError, SpaceTooLargeError, WrongCountError
from .gf import Field
from .linalg import rank as matrix_rank
from .poly import Polynomial

MAX_POINTS = 10 ** 7


def normalize_point(coords, field: Field):
    """Scale so the first nonzero coordinate is 1; None for the zero tuple."""
    for i, c in enumerate(coords):
        if c:
            if c == 1:
                return tuple(coords)
            inv = field.inv(c)
            return tuple(0 if j < i else field.mul(inv, x)
                         for j, x in enumerate(coords))
    return None


@dataclass(frozen=True)
class PointSet:
    """Ordered distinct normalized points of P^m; hashable so ranks can be cached."""

    points: tuple
    m: int
    field: Field

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def subset(self, indices):
        """Subset by point indices, keeping the ambient enumeration order."""
        indices = sorted(set(indices))
        return PointSet(tuple(self.points[i] for i in indices), self.m, self.field)

    def subset_mask(self, mask: int):
        return self.subset([i for i in range(len(self.points)) if mask >> i & 1])

    def complement(self, other: "PointSet"):
        keep = set(other.points)
        return PointSet(tuple(p for p in self.points if p not in keep),
                        self.m, self.field)


def enumerate_projective(m: int, field: Field) -> PointSet:
    """All points of P^m(F_q) in lexicographic order of normalized encodings."""
    q = field.q
    total = (q ** (m + 1) - 1) // (q - 1)
    if total > MAX_POINTS:
        raise SpaceTooLargeError(f"P^{m}(F_{q}) has {total} points")
    points = []
    # First nonzero coordinate is 1 at position `lead`; lex order on the
    # full coordinate tuple means larger lead (more leading zeros) sorts first.
    for lead in range(m, -1, -1):
        prefix = (0,) * lead + (1,)
        for tail in product(range(q), repeat=m - lead):
            points.append(prefix + tail)
    return PointSet(tuple(points), m, field)


def variety_points(polys, m: int, field: Field) -> PointSet:
    """Common zero locus in P^m(F_q) of a list of homogeneous polynomials."""
    for poly in polys:
        if not poly.is_homogeneous():
            raise NonHomogeneousError(f"not homogeneous: {poly}")
    ambient = enumerate_projective(m, field)
    points = tuple(pt for pt in ambient
                   if all(poly.evaluate(pt) == 0 for poly in polys))
    return PointSet(points, m, field)


@dataclass(frozen=True)
class CIValidation:
    degrees: tuple
    expected: int
    found: int
    split: bool
    smooth: bool

    def line(self):
        return (f"expected={self.expected} found={self.found} "
                f"split={str(self.split).lower()} smooth={str(self.smooth).lower()}")


def validate_ci(polys, pts: PointSet) -> CIValidation:
    """Check the split/smooth proxy for a reduced complete intersection.

    split: the F_q point count equals the product of the degrees.
    smooth: the m x (m+1) Jacobian has rank m at every point.
    """
    m = pts.m
    if len(polys) != m:
        raise WrongCountError(f"need exactly {m} hypersurfaces in P^{m}, "
                              f"got {len(polys)}")
    degrees = tuple(p.degree() for p in polys)
    expected = prod(degrees)
    found = len(pts)
    split = found == expected
    jac = [[p.partial_derivative(v) for v in range(m + 1)] for p in polys]
    field = pts.field
    smooth = True
    for pt in pts:
        rows = [[entry.evaluate(pt) for entry in row] for row in jac]
        if matrix_rank(rows, field) != m:
            smooth = False
            break
    return CIValidation(degrees, expected, found, split, smooth)
