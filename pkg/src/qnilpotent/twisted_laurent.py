"""A twisted Laurent algebra over Z[q, q^-1], used as a brute-force oracle.

Generators ``z_1..z_r`` satisfy ``z_i z_j = q^{S_ij} z_j z_i`` for ``i < j``
where ``S`` is an integer skew matrix. Monomials are kept in ascending
normal order, so ``z^a z^b = q^{kappa(a,b)} z^{a+b}`` with
``kappa(a, b) = sum_{i > j} a_i b_j S_ij``.

The engine only knows ``S``. It never sees roots, weights or Weyl group
elements, which is what makes it usable as an independent check of the
closed-form exponents in :func:`formula_audit`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import InputError
from .lattice_forms import (
    SkewForm,
    build_A_and_Lbar,
    build_L0,
    compatible_pair,
    covariant_z_exponent,
    minor_z_exponent,
    to_z,
)
from .weyl import BetaGrid, beta_grid

Exps = tuple[int, ...]


class TwistedAlgebra:
    def __init__(self, skew):
        if not isinstance(skew, SkewForm):
            skew = SkewForm(skew)
        self.skew = skew
        self.dim = skew.dim
        s = skew.entries
        # lower[i] lists (j, S_ij) for j < i with S_ij != 0
        self._lower = [[(j, s[i][j]) for j in range(i) if s[i][j]] for i in range(self.dim)]

    def _check(self, a: Sequence[int]) -> None:
        if len(a) != self.dim:
            raise InputError(f"exponent vector of length {len(a)} in a rank-{self.dim} algebra")

    def kappa(self, a: Sequence[int], b: Sequence[int]) -> int:
        total = 0
        for i, row in enumerate(self._lower):
            ai = a[i]
            if ai:
                for j, sij in row:
                    if b[j]:
                        total += ai * b[j] * sij
        return total

    def one(self) -> "LaurentElement":
        return LaurentElement(self, {(0,) * self.dim: {0: 1}})

    def monomial(self, exps: Sequence[int], qpow: int = 0, coeff: int = 1) -> "LaurentElement":
        self._check(exps)
        return LaurentElement(self, {tuple(exps): {qpow: coeff}} if coeff else {})

    def generator(self, i: int) -> "LaurentElement":
        """``z_i`` with a 0-based index."""
        e = [0] * self.dim
        e[i] = 1
        return self.monomial(e)

    def multiply(self, x: "LaurentElement", y: "LaurentElement") -> "LaurentElement":
        if x.algebra is not self or y.algebra is not self:
            raise InputError("elements of a different algebra")
        out: dict[Exps, dict[int, int]] = {}
        for a, pa in x.terms.items():
            for b, pb in y.terms.items():
                k = self.kappa(a, b)
                c = tuple(u + v for u, v in zip(a, b))
                poly = out.setdefault(c, {})
                for ea, ca in pa.items():
                    for eb, cb in pb.items():
                        e = ea + eb + k
                        poly[e] = poly.get(e, 0) + ca * cb
        return LaurentElement(self, out)

    def commutation_exponent(self, a: Sequence[int], b: Sequence[int]) -> int:
        """``n`` with ``z^a z^b = q^n z^b z^a``, read off from the two products."""
        self._check(a)
        self._check(b)
        return self.kappa(a, b) - self.kappa(b, a)

    def commutes_with_generators(self, a: Sequence[int], modulus: int = 0) -> bool:
        """Whether ``z^a`` commutes with every ``z_i`` (at an m-th root when modulus m)."""
        self._check(a)
        for i in range(self.dim):
            e = [0] * self.dim
            e[i] = 1
            n = self.kappa(e, a) - self.kappa(a, e)
            if (n % modulus) if modulus else n:
                return False
        return True

    def centrality_test(self, a: Sequence[int], modulus: int = 0) -> bool:
        return self.commutes_with_generators(a, modulus)

    def central_monomials_in_box(self, bound: int = 2, modulus: int = 0) -> set[Exps]:
        """Brute force: every exponent vector in ``[-N, N]^r`` giving a central monomial."""
        rng = range(-bound, bound + 1)
        return {a for a in product(rng, repeat=self.dim) if self.commutes_with_generators(a, modulus)}


@dataclass
class LaurentElement:
    algebra: TwistedAlgebra = field(repr=False)
    terms: dict

    def __post_init__(self):
        clean = {}
        for exps, poly in self.terms.items():
            p = {e: c for e, c in poly.items() if c}
            if p:
                clean[tuple(exps)] = p
        self.terms = clean

    def __mul__(self, other: "LaurentElement") -> "LaurentElement":
        return self.algebra.multiply(self, other)

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        out = {k: dict(v) for k, v in self.terms.items()}
        for k, poly in other.terms.items():
            tgt = out.setdefault(k, {})
            for e, c in poly.items():
                tgt[e] = tgt.get(e, 0) + c
        return LaurentElement(self.algebra, out)

    def scale_q(self, n: int) -> "LaurentElement":
        return LaurentElement(
            self.algebra, {k: {e + n: c for e, c in p.items()} for k, p in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentElement) and self.terms == other.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and len(next(iter(self.terms.values()))) == 1


def monomial_commutation(alg: TwistedAlgebra, a: Sequence[int], b: Sequence[int]) -> int:
    """Commutation exponent read off from actual products ``z^a z^b`` and ``z^b z^a``."""
    x = alg.monomial(a)
    y = alg.monomial(b)
    (exps1, p1), = (x * y).terms.items()
    (exps2, p2), = (y * x).terms.items()
    assert exps1 == exps2
    (e1, c1), = p1.items()
    (e2, c2), = p2.items()
    assert c1 == c2 == 1
    return e1 - e2


# --- closed-form audit ------------------------------------------------------


@dataclass
class FormulaCheck:
    family: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, key, engine: int, closed: int) -> None:
        self.checked += 1
        if engine != closed:
            self.failures.append((key, engine, closed))


@dataclass
class AuditReport:
    word: tuple[int, ...]
    checks: dict[str, FormulaCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    @property
    def mismatches(self) -> int:
        return sum(len(c.failures) for c in self.checks.values())

    def summary(self) -> dict:
        return {
            name: {"checked": c.checked, "failures": len(c.failures)}
            for name, c in self.checks.items()
        }


FAMILIES = (
    "generator-covariant",
    "generator-minor-left",
    "generator-minor-right",
    "minor-covariant",
    "minor-minor",
    "generator-F",
    "minor-F",
    "minor-exchange",
)


def formula_audit(system, word: Sequence[int], convention: int = 1) -> AuditReport:
    """Compare engine exponents against every closed-form commutation formula.

    ``convention = -1`` builds the engine with ``q`` replaced by ``q^-1``
    and negates every closed form accordingly.
    """
    grid = beta_grid(system, word)
    checks = {name: FormulaCheck(name) for name in FAMILIES}
    if grid.r == 0:
        return AuditReport(grid.word, checks)
    L0 = build_L0(grid)
    alg = TwistedAlgebra([[convention * x for x in row] for row in L0.entries])
    sys_ = system
    labels = grid.labels
    r = grid.r
    w = grid.element

    def unit(n):
        e = [0] * r
        e[n] = 1
        return e

    def lam(s):
        return sys_.fundamental_weight(s).coords

    def plus(u, s):  # (1 + u) Lambda_s
        x = lam(s)
        return tuple(a + b for a, b in zip(x, u.act_weight(x)))

    def minus(u, s):  # (1 - u) Lambda_s, lies in the root lattice
        x = lam(s)
        return tuple(a - b for a, b in zip(x, u.act_weight(x)))

    def wr(x, y):  # (weight, weight) pairing; integral here
        v = sys_.form_weights(x, y)
        assert v.denominator == 1
        return int(v)

    support = grid.support
    cov = {s: covariant_z_exponent(grid, s) for s in support}
    minors = {lab: minor_z_exponent(grid, *lab) for lab in labels}
    plus_w = {s: plus(w, s) for s in support}

    for n, (a, b) in enumerate(labels):
        beta = grid.betas[n]
        e = unit(n)
        for s in support:
            engine = alg.commutation_exponent(e, cov[s])
            closed = -sys_.form_weight_root(plus_w[s], beta)
            checks["generator-covariant"].record(((a, b), s), engine, convention * closed)
        for m, (s, t) in enumerate(labels):
            engine = alg.commutation_exponent(e, minors[(s, t)])
            omega = grid.omega(s, t)
            if n <= m:
                closed = -sys_.form_weight_root(plus(omega, s), beta)
                checks["generator-minor-left"].record(((a, b), (s, t)), engine, convention * closed)
            else:
                closed = -sys_.form_weight_root(minus(omega, s), beta)
                checks["generator-minor-right"].record(((a, b), (s, t)), engine, convention * closed)

    for m, (s, t) in enumerate(labels):
        omega = grid.omega(s, t)
        for j in support:
            engine = alg.commutation_exponent(minors[(s, t)], cov[j])
            closed = -wr(minus(omega, s), plus_w[j])
            checks["minor-covariant"].record(((s, t), j), engine, convention * closed)
        for k in range(m, r):
            c, d = labels[k]
            engine = alg.commutation_exponent(minors[(s, t)], minors[(c, d)])
            closed = -wr(minus(omega, s), plus(grid.omega(c, d), c))
            checks["minor-minor"].record(((s, t), (c, d)), engine, convention * closed)

    a_mat, lbar = build_A_and_Lbar(grid, L0)
    pair = compatible_pair(grid, L0)
    d = sys_.symmetrizers
    for (s, t), fvec in pair.F.items():
        fz = to_z(a_mat, fvec)
        alpha_s = sys_.simple_root(s).coords
        for n, (c, dd) in enumerate(labels):
            engine = alg.commutation_exponent(unit(n), fz)
            closed = -sys_.form_roots(grid.betas[n], alpha_s) + 2 * d[s - 1] * ((c, dd) == (s, t))
            checks["generator-F"].record(((c, dd), (s, t)), engine, convention * closed)
            engine = alg.commutation_exponent(minors[(c, dd)], fz)
            hits = sum(1 for k in range(1, dd + 1) if (c, k) == (s, t))
            closed = -sys_.form_roots(grid.partial_sum(c, dd), alpha_s) + 2 * d[s - 1] * hits
            checks["minor-F"].record(((c, dd), (s, t)), engine, convention * closed)
    for k, (s, t) in enumerate(pair.columns):
        bz = to_z(a_mat, pair.column(k))
        for (c, dd) in labels:
            engine = alg.commutation_exponent(minors[(c, dd)], bz)
            closed = 2 * d[s - 1] * ((c, dd) == (s, t))
            checks["minor-exchange"].record(((c, dd), (s, t)), engine, convention * closed)
    return AuditReport(grid.word, checks)


def box_points(dim: int, bound: int) -> Iterable[Exps]:
    return product(range(-bound, bound + 1), repeat=dim)
