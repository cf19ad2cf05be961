"""Specialization at a primitive m-th root of unity.

The exponent map ``x -> L x mod m`` of an integer skew form controls
the PI degree: with ``h`` the size of its image, the degree is ``sqrt(h)``.
``h`` is read off from the skew normal form and independently counted by
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd, isqrt

import numpy as np

from .cartan import RootSystem
from .centers import center_nilpotent
from .errors import AuditFailure, GuardExceeded, InputError
from .intmat import det, identity, matmul, smith_invariants, transpose
from .lattice_forms import (
    SkewForm,
    build_A_and_Lbar,
    build_L0,
    column_reduce,
    compatible_pair,
    covariant_z_exponent,
    minor_z_exponent,
)
from .twisted_laurent import TwistedAlgebra
from .weyl import beta_grid


@dataclass
class SkewNormalForm:
    U: list[list[int]]
    divisors: list[int]
    nullity: int

    def block_matrix(self) -> list[list[int]]:
        n = len(self.U)
        m = [[0] * n for _ in range(n)]
        for k, d in enumerate(self.divisors):
            m[2 * k][2 * k + 1] = d
            m[2 * k + 1][2 * k] = -d
        return m


class _Congruence:
    """``M`` and ``U`` kept in step so that ``U L U^T = M`` throughout."""

    def __init__(self, entries):
        self.m = [list(r) for r in entries]
        self.u = identity(len(self.m))

    def swap(self, i: int, j: int) -> None:
        if i == j:
            return
        m = self.m
        m[i], m[j] = m[j], m[i]
        for row in m:
            row[i], row[j] = row[j], row[i]
        self.u[i], self.u[j] = self.u[j], self.u[i]

    def negate(self, i: int) -> None:
        m = self.m
        m[i] = [-x for x in m[i]]
        for row in m:
            row[i] = -row[i]
        self.u[i] = [-x for x in self.u[i]]

    def add(self, i: int, j: int, q: int) -> None:
        """Row and column ``i`` += ``q`` times row and column ``j``."""
        if not q:
            return
        m = self.m
        m[i] = [x + q * y for x, y in zip(m[i], m[j])]
        for row in m:
            row[i] += q * row[j]
        self.u[i] = [x + q * y for x, y in zip(self.u[i], self.u[j])]


def skew_normal_form(form) -> SkewNormalForm:
    """Unimodular ``U`` with ``U L U^T`` block diagonal, divisors forming a chain."""
    if not isinstance(form, SkewForm):
        form = SkewForm(form)
    n = form.dim
    c = _Congruence(form.entries)
    m = c.m
    divisors = []
    k = 0
    while k + 1 < n:
        entries = [(abs(m[i][j]), i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        c.swap(k, i)
        c.swap(k + 1, j)
        while True:
            if m[k][k + 1] < 0:
                c.negate(k + 1)
            p = m[k][k + 1]
            smaller = None
            for l in range(k + 2, n):
                # entry (k, l) is reduced by column k+1, entry (k+1, l) by column k
                c.add(l, k + 1, -(m[k][l] // p))
                c.add(l, k, m[k + 1][l] // p)
                if m[k][l] or m[k + 1][l]:
                    smaller = l
                    break
            if smaller is not None:
                l = smaller
                if m[k][l]:
                    c.swap(k + 1, l)
                else:
                    c.swap(k, l)
                continue
            bad = next(
                ((i2, j2) for i2 in range(k + 2, n) for j2 in range(i2 + 1, n) if m[i2][j2] % p),
                None,
            )
            if bad is None:
                break
            c.add(k, bad[0], 1)
        divisors.append(m[k][k + 1])
        k += 2
    result = SkewNormalForm(c.u, divisors, n - 2 * len(divisors))
    _verify(form, result, c.m)
    return result


def _verify(form: SkewForm, nf: SkewNormalForm, reduced) -> None:
    expected = nf.block_matrix()
    got = matmul(matmul(nf.U, form.entries), transpose(nf.U))
    if got != expected or reduced != expected:
        raise AuditFailure("skew normal form does not reproduce U L U^T")
    if det(nf.U) not in (1, -1):
        raise AuditFailure("skew normal form basis change is not unimodular")
    for a, b in zip(nf.divisors, nf.divisors[1:]):
        if b % a:
            raise AuditFailure("skew normal form divisors do not form a chain")


@dataclass
class PIDegreeReport:
    m: int
    divisors: list[int]
    contributions: list[int]
    h: int
    pi_degree: int
    warnings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "divisors": self.divisors,
            "contributions": self.contributions,
            "h": self.h,
            "pi_degree": self.pi_degree,
            "warnings": self.warnings,
        }


def pi_degree(form, m: int, system: RootSystem | None = None) -> PIDegreeReport:
    if m < 1:
        raise InputError("m must be a positive integer")
    nf = skew_normal_form(form)
    contrib = [m // gcd(d, m) for d in nf.divisors]
    degree = 1
    for x in contrib:
        degree *= x
    h = degree * degree
    if isqrt(h) ** 2 != h:
        raise AuditFailure("h is not a perfect square")
    warnings = []
    if m % 2 == 0:
        warnings.append("m is even")
    if system is not None and system.family == "G" and m % 3 == 0:
        warnings.append("m is divisible by 3 with a G2 component")
    return PIDegreeReport(m, nf.divisors, contrib, h, degree, warnings)


BRUTE_RANK_GUARD = 6
BRUTE_MODULUS_GUARD = 16


def brute_force_image(form, m: int, rank_guard: int = BRUTE_RANK_GUARD,
                      modulus_guard: int = BRUTE_MODULUS_GUARD) -> int:
    """Size of the image of ``(Z/m)^r`` under ``L``, by enumeration."""
    if not isinstance(form, SkewForm):
        form = SkewForm(form)
    r = form.dim
    if m < 1:
        raise InputError("m must be a positive integer")
    if r > rank_guard or m > modulus_guard:
        raise GuardExceeded(f"enumeration refused for r = {r}, m = {m}")
    if r == 0:
        return 1
    mat = np.array(form.entries, dtype=np.int64) % m
    place = m ** np.arange(r, dtype=np.int64)
    seen = np.zeros(m ** r, dtype=bool)
    rest = r - 1
    tail = np.indices((m,) * rest, dtype=np.int64).reshape(rest, -1).T if rest else np.zeros((1, 0), np.int64)
    for x0 in range(m):
        xs = np.concatenate([np.full((tail.shape[0], 1), x0, dtype=np.int64), tail], axis=1)
        images = (xs @ mat.T) % m
        seen[images @ place] = True
    return int(seen.sum())


# --- reports over a reduced word -------------------------------------------


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def t_basis_search(kernel: list[list[int]], dim: int) -> list[int] | None:
    """Standard basis vectors completing ``kernel`` to a basis of ``Z^dim``, if any."""
    d = len(kernel)
    for keep in combinations(range(dim), dim - d):
        rows = [[int(j == i) for j in range(dim)] for i in keep] + [list(v) for v in kernel]
        if det(rows) in (1, -1):
            return list(keep)
    return None


@dataclass
class RootCentralityReport:
    word: tuple[int, ...]
    m: int
    powers_central: bool
    minor_powers_central: bool
    covariant_powers_central: bool
    inverse_replacement: bool
    det_L: int
    det_Z: int
    diagonal_product: int
    divisors: list[int]
    block_primes_divide: dict
    odd_prime_parity: dict
    t_basis: list[int] | None
    z1_invariants: list[int]
    z1_det: int
    z1_primes: dict

    def to_json(self) -> dict:
        return {
            "word": list(self.word),
            "m": self.m,
            "powers_central": self.powers_central,
            "minor_powers_central": self.minor_powers_central,
            "covariant_powers_central": self.covariant_powers_central,
            "inverse_replacement": self.inverse_replacement,
            "det_L": self.det_L,
            "det_Z": self.det_Z,
            "diagonal_product": self.diagonal_product,
            "divisors": self.divisors,
            "block_primes_divide": {str(k): v for k, v in self.block_primes_divide.items()},
            "odd_prime_parity": {str(k): v for k, v in self.odd_prime_parity.items()},
            "t_basis": self.t_basis,
            "z1_invariants": self.z1_invariants,
            "z1_det": self.z1_det,
            "z1_primes": {str(k): v for k, v in self.z1_primes.items()},
        }


def root_centrality_report(system: RootSystem, word, m: int) -> RootCentralityReport:
    if m < 2:
        raise InputError("m must be at least 2")
    grid = beta_grid(system, tuple(word))
    if grid.r == 0:
        raise InputError("empty word")
    r = grid.r
    L0 = build_L0(grid)
    alg = TwistedAlgebra(L0)

    def central(v):
        return alg.centrality_test(v, m)

    powers = all(central([m * int(i == j) for j in range(r)]) for i in range(r))
    minors = all(central([m * x for x in minor_z_exponent(grid, s, t)]) for (s, t) in grid.labels)
    covs = {s: covariant_z_exponent(grid, s) for s in grid.support}
    cov_ok = all(central([m * x for x in v]) for v in covs.values())
    inv_ok = True
    for v in covs.values():
        for i in range(r):
            e = [int(i == j) for j in range(r)]
            a = alg.commutation_exponent(e, [(m - 1) * x for x in v])
            b = alg.commutation_exponent(e, [-x for x in v])
            if (a - b) % m:
                inv_ok = False

    _, lbar = build_A_and_Lbar(grid, L0)
    red = column_reduce(lbar, grid, compatible_pair(grid, L0))
    nf = skew_normal_form(lbar)
    rhs = red.diagonal_product * red.det_Z
    block_primes = {}
    for d in nf.divisors:
        for p in _prime_factors(d):
            block_primes[p] = rhs % (p * p) == 0
    parity = {}
    if red.det_Z:
        for p in _prime_factors(red.det_Z):
            if p == 2:
                continue
            t = _valuation(red.det_Z, p) + _valuation(red.diagonal_product, p)
            s = sum(_valuation(d, p) for d in nf.divisors)
            parity[p] = {"t": t, "block_exponent_sum": s, "t_even": t % 2 == 0, "t_equals_2s": t == 2 * s}

    z_kernel_dim = len(lbar.kernel())
    t_basis = None
    if z_kernel_dim:
        cen = center_nilpotent(system, grid.word)
        sup = list(grid.support)
        vecs = [[g.n[s - 1] for s in sup] for g in cen.generators]
        t_basis = t_basis_search(vecs, len(sup))
    z1 = smith_invariants(red.Z)
    z1_det = 1
    for x in z1:
        z1_det *= x
    z1_primes = {}
    if t_basis is not None or not z_kernel_dim:
        bd = 1
        for d in nf.divisors:
            bd *= d * d
        for p in _prime_factors(bd):
            if p > 2:
                z1_primes[p] = z1_det % p == 0
    return RootCentralityReport(
        grid.word, m, powers, minors, cov_ok, inv_ok, red.det_L, red.det_Z,
        red.diagonal_product, nf.divisors, block_primes, parity, t_basis, z1, z1_det, z1_primes,
    )
