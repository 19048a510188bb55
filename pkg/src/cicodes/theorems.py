"""Mechanical verification of the Cayley-Bacharach identity, the minimum
distance bound for complete-intersection evaluation codes, Hilbert-function
symmetry, projection injectivity, and the MDS criteria.

All checks work on split smooth complete intersections certified by
`geometry.validate_ci`; residual subschemes reduce to set complements in
this reduced setting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .code import build_code, min_distance
from .cohomology import h0, h1, rank_e, sigma
from .errors import DegreeOutOfRangeError, NonSplitError, NotASubsetError
from .geometry import PointSet, validate_ci, variety_points


@dataclass(frozen=True)
class CISetup:
    """A validated split smooth complete intersection with its pivot degree s."""

    gamma: PointSet
    degrees: tuple
    s: int

    @property
    def n(self):
        return len(self.gamma)


def ci_setup(polys, m: int, field) -> CISetup:
    """Cut out Gamma and certify it; refuses non-split or singular inputs."""
    gamma = variety_points(polys, m, field)
    val = validate_ci(polys, gamma)
    if not val.split:
        raise NonSplitError(
            f"expected {val.expected} rational points, found {val.found}")
    if not val.smooth:
        raise NonSplitError("Jacobian rank drops at some point (non-reduced)")
    s = sum(val.degrees) - m - 1
    return CISetup(gamma, val.degrees, s)


def residual(gamma: PointSet, gamma_prime: PointSet) -> PointSet:
    """Complement Gamma \\ Gamma'; the residual subscheme in the reduced case."""
    if not set(gamma_prime.points) <= set(gamma.points):
        raise NotASubsetError("gamma_prime is not a subset of gamma")
    return gamma.complement(gamma_prime)


def cb_identity(setup: CISetup, a: int, gamma_prime: PointSet):
    """Both sides of h0(Gamma',a) - h0(Gamma,a) = h1(Gamma'', s-a)."""
    gamma_second = residual(setup.gamma, gamma_prime)
    lhs = h0(gamma_prime, a) - h0(setup.gamma, a)
    rhs = h1(gamma_second, setup.s - a)
    return lhs, rhs


@dataclass(frozen=True)
class CBReport:
    degree: int
    splits_checked: int
    violations: tuple  # (subset mask, lhs, rhs)
    exhaustive: bool
    seed: int

    def lines(self):
        out = [f"a={self.degree} splits={self.splits_checked} "
               f"exhaustive={str(self.exhaustive).lower()} "
               f"violations={len(self.violations)}"]
        for mask, lhs, rhs in self.violations:
            out.append(f"violation mask={mask} lhs={lhs} rhs={rhs}")
        return out


def verify_cb_all(setup: CISetup, a: int, budget: int = 10 ** 5,
                  seed: int = 0) -> CBReport:
    """Check the identity over all subset splits, or a seeded sample when
    2^n exceeds the budget (always including sizes 0, 1, n-1, n)."""
    n = setup.n
    total = 1 << n
    if total <= budget:
        masks = range(total)
        exhaustive = True
    else:
        rng = random.Random(seed)
        picked = {0, total - 1}
        for i in range(n):
            picked.add(1 << i)                 # size 1
            picked.add((total - 1) ^ (1 << i))  # size n-1
        while len(picked) < budget:
            picked.add(rng.randrange(total))
        masks = sorted(picked)
        exhaustive = False
    violations = []
    for mask in masks:
        gp = setup.gamma.subset_mask(mask)
        lhs, rhs = cb_identity(setup, a, gp)
        if lhs != rhs:
            violations.append((mask, lhs, rhs))
    return CBReport(a, len(masks) if not isinstance(masks, range) else total,
                    tuple(violations), exhaustive, seed)


def verify_projection_injectivity(setup: CISetup, a: int) -> bool:
    """Puncturing to any Gamma' with |Gamma'| >= n - (s-a+1) keeps h0 fixed,
    which is exactly injectivity of the projection of codewords."""
    n = setup.n
    size = n - (setup.s - a + 1)
    if size > n:
        return True  # nothing to delete: vacuous
    size = max(size, 0)
    full = h0(setup.gamma, a)
    for combo in combinations(range(n), size):
        if h0(setup.gamma.subset(combo), a) != full:
            return False
    return True


def hansen_bound(setup: CISetup, a: int) -> int:
    """The lower bound s - a + 2 on the minimum distance, valid for 1 <= a <= s."""
    if not 1 <= a <= setup.s:
        raise DegreeOutOfRangeError(f"need 1 <= a <= {setup.s}, got {a}")
    return setup.s - a + 2


@dataclass(frozen=True)
class BoundReport:
    degree: int
    n: int
    k: int
    d_exact: int
    bound: int
    singleton: int
    mds: bool
    mds_sufficient: bool

    def line(self):
        return (f"n={self.n} k={self.k} d={self.d_exact} bound={self.bound} "
                f"singleton={self.singleton} mds={str(self.mds).lower()} "
                f"mds_sufficient={str(self.mds_sufficient).lower()}")


def verify_main_theorem(setup: CISetup, a: int, cap: int = 1 << 22,
                        threads: int = 1) -> BoundReport:
    """Exact parameters of C(Gamma)_a against the distance bound and Singleton."""
    bound = hansen_bound(setup, a)
    code = build_code(setup.gamma, a)
    dist = min_distance(code, cap=cap, threads=threads)
    singleton = code.n - code.k + 1
    mds = dist.d == singleton
    mds_sufficient = setup.s - a >= h1(setup.gamma, a) - 1
    return BoundReport(a, code.n, code.k, dist.d, bound, singleton,
                       mds, mds_sufficient)


def verify_symmetry(setup: CISetup) -> bool:
    """rank(e_a) + rank(e_{s-a}) = |Gamma| over the whole window [-1, s+1]."""
    n = setup.n
    for a in range(-1, setup.s + 2):
        if rank_e(setup.gamma, a) + rank_e(setup.gamma, setup.s - a) != n:
            return False
    return True


def verify_mds_corollary(setup: CISetup, a: int, cap: int = 1 << 22) -> bool:
    """Exact MDS status must agree with universal vanishing of
    h1(Gamma'', s-a) over all subsets of size h1(Gamma, a)."""
    code = build_code(setup.gamma, a)
    dist = min_distance(code, cap=cap)
    mds_exact = dist.d == code.n - code.k + 1
    size = h1(setup.gamma, a)
    j = setup.s - a
    vanishes = all(
        h1(setup.gamma.subset(combo), j) == 0
        for combo in combinations(range(setup.n), size))
    return mds_exact == vanishes


def is_cb_scheme(gamma: PointSet) -> bool:
    """Dropping any one point keeps h0 in degree sigma(Gamma) unchanged."""
    sg = sigma(gamma)
    if sg < 0:
        return True
    full = h0(gamma, sg)
    n = len(gamma)
    for i in range(n):
        sub = gamma.subset([j for j in range(n) if j != i])
        if h0(sub, sg) != full:
            return False
    return True
