"""Evaluation codes C(Gamma)_a: matrices, parameters, exact minimum distance."""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import CapExceededError, NoNormalizerFoundError, NormalizerVanishesError
from .geometry import PointSet
from .linalg import nullspace, rank as matrix_rank, rref
from .poly import Polynomial, monomials_of_degree

DEFAULT_CAP = 1 << 22


@lru_cache(maxsize=None)
def _point_row(point, a, m, field):
    """Evaluations of the degree-a graded-lex monomial basis at one point."""
    row = []
    for expo in monomials_of_degree(m, a):
        v = 1
        for x, k in zip(point, expo):
            if k:
                v = field.mul(v, field.pow(x, k))
                if v == 0:
                    break
        row.append(v)
    return tuple(row)


@dataclass(frozen=True)
class EvalMatrix:
    """Matrix of e_a: rows indexed by points, columns by degree-a monomials."""

    rows: tuple
    degree: int
    m: int
    field: object

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return comb(self.degree + self.m, self.m)


def evaluation_matrix(gamma: PointSet, a: int) -> EvalMatrix:
    rows = tuple(_point_row(pt, a, gamma.m, gamma.field) for pt in gamma)
    return EvalMatrix(rows, a, gamma.m, gamma.field)


def rank_and_kernel(matrix: EvalMatrix):
    """Rank of e_a plus a basis of its kernel (degree-a piece of the ideal)."""
    if not matrix.rows:
        basis = []
        for i in range(matrix.ncols):
            v = [0] * matrix.ncols
            v[i] = 1
            basis.append(v)
        return 0, basis
    r = matrix_rank(matrix.rows, matrix.field)
    return r, nullspace(matrix.rows, matrix.field, matrix.ncols)


def choose_f0(gamma: PointSet, a: int, seed: int = 0, trials: int = 10000) -> Polynomial:
    """A degree-a form nonvanishing on all of Gamma.

    Uses x0^a when every point is affine; otherwise a seeded random search
    over R_a, failing after the trial budget.
    """
    field = gamma.field
    nvars = gamma.m + 1
    if all(pt[0] != 0 for pt in gamma):
        return Polynomial.variable(field, nvars, 0, power=a) if a > 0 \
            else Polynomial.constant(field, nvars, 1)
    monomials = monomials_of_degree(gamma.m, a)
    rng = random.Random(seed)
    for _ in range(trials):
        terms = {expo: rng.randrange(field.q) for expo in monomials}
        cand = Polynomial(field, nvars, terms)
        if cand.is_zero():
            continue
        if all(cand.evaluate(pt) != 0 for pt in gamma):
            return cand
    raise NoNormalizerFoundError(
        f"no degree-{a} form nonvanishing on all {len(gamma)} points "
        f"after {trials} trials; pass f0 explicitly")


@dataclass(frozen=True)
class EvalCode:
    """The code C(Gamma)_a with its reduced row-echelon generator matrix."""

    gamma: PointSet
    degree: int
    n: int
    k: int
    gen: tuple
    f0: object = None

    @property
    def field(self):
        return self.gamma.field


def build_code(gamma: PointSet, a: int, f0: Polynomial = None) -> EvalCode:
    """Image of e_a as a code; coordinates divided by f0(p_i) when f0 is given."""
    field = gamma.field
    n = len(gamma)
    matrix = evaluation_matrix(gamma, a)
    # spanning vectors of the code: one per monomial, coordinates per point
    spanning = [[matrix.rows[i][j] for i in range(n)]
                for j in range(matrix.ncols)]
    if f0 is not None:
        scalers = []
        for pt in gamma:
            v = f0.evaluate(pt)
            if v == 0:
                raise NormalizerVanishesError(f"f0 vanishes at {pt}")
            scalers.append(field.inv(v))
        spanning = [[field.mul(s, x) for s, x in zip(scalers, row)]
                    for row in spanning]
    gen, _ = rref(spanning, field)
    gen = tuple(tuple(row) for row in gen)
    return EvalCode(gamma, a, n, len(gen), gen, f0)


@dataclass(frozen=True)
class DistanceResult:
    d: int
    codewords_scanned: int
    exact: bool = True

    def line(self):
        return f"d={self.d} exact={str(self.exact).lower()} scanned={self.codewords_scanned}"


def _scan_lead(gen, field, lead):
    """Minimum weight over messages whose first nonzero coordinate is at `lead`.

    Messages are walked in odometer order with incremental codeword updates.
    Returns (min weight, messages scanned).
    """
    k = len(gen)
    n = len(gen[0])
    q = field.q
    add = field.add
    mul = field.mul
    sub = field.sub
    tail = list(range(lead + 1, k))
    w = list(gen[lead])
    best = n - w.count(0)
    scanned = 1
    if not tail:
        return best, scanned
    # delta[j][c]: add this row vector when digit j steps from c to c+1 mod q
    delta = {}
    for j in tail:
        row = gen[j]
        delta[j] = [[mul(sub((c + 1) % q, c), g) for g in row] for c in range(q)]
    digits = {j: 0 for j in tail}
    total = q ** len(tail) - 1
    for _ in range(total):
        j = tail[-1]
        ti = len(tail) - 1
        while True:
            c = digits[j]
            dvec = delta[j][c]
            for i in range(n):
                w[i] = add(w[i], dvec[i])
            if c + 1 == q:
                digits[j] = 0
                ti -= 1
                j = tail[ti]
            else:
                digits[j] = c + 1
                break
        weight = n - w.count(0)
        if weight < best:
            best = weight
        scanned += 1
    return best, scanned


def min_distance(code: EvalCode, cap: int = DEFAULT_CAP, threads: int = 1) -> DistanceResult:
    """Exact minimum distance by scanning one message per projective class."""
    field = code.field
    q = field.q
    required = q ** code.k - 1
    if required > cap:
        raise CapExceededError(required, cap)
    leads = list(range(code.k))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(
                lambda lead: _scan_lead(code.gen, field, lead), leads))
    else:
        results = [_scan_lead(code.gen, field, lead) for lead in leads]
    best = min(r[0] for r in results)
    scanned = sum(r[1] for r in results)
    return DistanceResult(best, scanned)


def weight_distribution(code: EvalCode, cap: int = DEFAULT_CAP):
    """Weight -> count over all nonzero codewords (scaling multiplies counts by q-1)."""
    field = code.field
    q = field.q
    required = q ** code.k - 1
    if required > cap:
        raise CapExceededError(required, cap)
    dist = {}
    for lead in range(code.k):
        _weights_lead(code.gen, field, lead, dist)
    return {wt: c * (q - 1) for wt, c in dist.items()}


def _weights_lead(gen, field, lead, dist):
    k = len(gen)
    n = len(gen[0])
    q = field.q
    add = field.add
    mul = field.mul
    sub = field.sub
    tail = list(range(lead + 1, k))
    w = list(gen[lead])
    wt = n - w.count(0)
    dist[wt] = dist.get(wt, 0) + 1
    if not tail:
        return dist
    delta = {}
    for j in tail:
        row = gen[j]
        delta[j] = [[mul(sub((c + 1) % q, c), g) for g in row] for c in range(q)]
    digits = {j: 0 for j in tail}
    for _ in range(q ** len(tail) - 1):
        j = tail[-1]
        ti = len(tail) - 1
        while True:
            c = digits[j]
            dvec = delta[j][c]
            for i in range(n):
                w[i] = add(w[i], dvec[i])
            if c + 1 == q:
                digits[j] = 0
                ti -= 1
                j = tail[ti]
            else:
                digits[j] = c + 1
                break
        wt = n - w.count(0)
        dist[wt] = dist.get(wt, 0) + 1
    return dist
