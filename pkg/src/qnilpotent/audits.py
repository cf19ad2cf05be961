"""Exhaustive and randomized consistency sweeps.

Each suite returns a :class:`SuiteResult`. The CLI ``verify`` verb and
the acceptance tests both run these, so a single implementation backs
every reported pass count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from math import ceil, gcd
from typing import Callable, Iterable

from .cartan import RootSystem, all_types, build_root_system, fz_identity_check
from .centers import (
    DecompositionSpec,
    center_nilpotent,
    center_W,
    delta_lattice,
    double_schubert_center,
    lattice_of,
    schubert_window,
    validate_decomposition,
)
from .diophantine import (
    BlockConfig,
    MOVES,
    apply_move,
    b1_corank,
    b_class,
    corank_direct,
    move_applies,
    pq_lattice_gcd,
    pqb_image,
    remark_config,
)
from .errors import AuditFailure
from .intmat import in_lattice
from .lattice_forms import (
    build_A_and_Lbar,
    build_L0,
    column_reduce,
    compatible_pair,
    covariant_z_exponent,
)
from .root_of_unity import brute_force_image, pi_degree
from .twisted_laurent import TwistedAlgebra, box_points, formula_audit
from .weyl import (
    WeylElement,
    beta_grid,
    enumerate_group,
    kostant_scan,
    longest_and_parabolic,
    longest_element,
    matrix_algebra_word,
    reflection_factorization_holds,
    subsets,
)

DEFAULT_SEED = 20240607


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what) -> bool:
        self.checked += 1
        if not ok:
            self.failures.append(what)
        return ok

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": [str(f) for f in self.failures[:20]],
            "failure_count": len(self.failures),
            "info": self.info,
        }


# --- the common sweep --------------------------------------------------------


def sweep_cases(max_rank: int = 3, max_length: int = 6) -> list[tuple[RootSystem, tuple[int, ...]]]:
    """One reduced word for every nontrivial element of length at most ``max_length``."""
    out = []
    for fam, n in all_types(max_rank):
        system = build_root_system(fam, n)
        words = sorted(
            (w.reduced_word for w in enumerate_group(system) if 0 < w.length <= max_length),
            key=lambda wd: (len(wd), wd),
        )
        out.extend((system, wd) for wd in words)
    return out


def _box_lattice(vectors, dim: int, bound: int) -> set:
    basis = lattice_of(vectors)
    if not basis:
        return {(0,) * dim}
    return {p for p in box_points(dim, bound) if in_lattice(basis, p)}


# --- centers of longest elements ---------------------------------------------


def suite_type_a(max_rank: int = 8) -> SuiteResult:
    res = SuiteResult("type-a-longest")
    for n in range(1, max_rank + 1):
        system = build_root_system("A", n)
        cen = center_nilpotent(system, longest_element(system).reduced_word)
        expected = []
        for s in range(1, (n + 1) // 2 + 1):
            v = [0] * n
            v[s - 1] += 1
            if 2 * s != n + 1:
                v[n - s] += 1
            expected.append(v)
        res.check(cen.dimension == ceil(n / 2), (system.name, "dimension", cen.dimension))
        res.check(lattice_of(cen.kernel_matrix) == lattice_of(expected), (system.name, cen.rendered))
    return res


def minus_one_types(max_rank: int = 8) -> list[tuple[str, int]]:
    return [
        (f, n) for f, n in all_types(max_rank)
        if f in "BCFG" or (f == "D" and n % 2 == 0) or (f == "E" and n in (7, 8)) or (f == "A" and n == 1)
    ]


def suite_minus_one(max_rank: int = 8) -> SuiteResult:
    res = SuiteResult("longest-is-minus-one")
    for fam, n in minus_one_types(max_rank):
        system = build_root_system(fam, n)
        w0 = longest_element(system)
        res.check(all(w0.act_weight(system.fundamental_weight(s).coords)
                      == tuple(-int(k == s - 1) for k in range(n)) for s in range(1, n + 1)),
                  (system.name, "w0 != -1"))
        cen = center_nilpotent(system, w0.reduced_word)
        res.check(sorted(cen.kernel_matrix) == sorted(
            [[int(k == s) for k in range(n)] for s in range(n)]), (system.name, cen.rendered))
    return res


# Pairings of the central covariants for the longest element.
LONGEST_PAIRINGS = {
    "D5": ["C1", "C2", "C3", "C4*C5"],
    "D7": ["C1", "C2", "C3", "C4", "C5", "C6*C7"],
    "E6": ["C1*C6", "C2", "C3*C5", "C4"],
}


def suite_longest_tables() -> SuiteResult:
    res = SuiteResult("longest-pairings")
    for name, expected in LONGEST_PAIRINGS.items():
        system = build_root_system(name[0], int(name[1:]))
        cen = center_nilpotent(system, longest_element(system).reduced_word)
        res.info[name] = cen.rendered
        res.check(sorted(cen.rendered) == sorted(expected), (name, cen.rendered))
    return res


def matrix_center_dimension(a: int, b: int) -> int:
    """Closed form for the a x b matrix algebra, derived from the rotation by ``b`` on ``a+b`` points."""
    g = gcd(a, b)
    return g if (a // g) % 2 and (b // g) % 2 else 0


def suite_matrix_algebra(low: int = 2, high: int = 6, formula: Callable[[int, int], int] | None = None) -> SuiteResult:
    """Center dimensions of the a x b matrix algebras against ``formula``.

    Without a formula the derived closed form is used and the engine
    must also agree.
    """
    res = SuiteResult("matrix-algebra")
    table = {}
    for a in range(low, high + 1):
        for b in range(low, high + 1):
            system, word = matrix_algebra_word(a, b)
            cen = center_nilpotent(system, word)
            table[f"{a}x{b}"] = cen.dimension
            target = formula(a, b) if formula else matrix_center_dimension(a, b)
            res.check(cen.dimension == target, ((a, b), cen.dimension, target))
    res.info["dimensions"] = table
    return res


def printed_matrix_formula(a: int, b: int) -> int:
    return 2 + gcd(a - 1, b - 1) - 1


# --- corank moves ---------------------------------------------------------------


def suite_b1(limit: int = 40, remark_samples: int = 50, seed: int = DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("b1-corank")
    for a in range(1, limit + 1):
        for c in range(1, limit + 1):
            direct = corank_direct(BlockConfig.plain(a, 1, c))
            res.check(b1_corank(a, c) == direct, ((a, c), b1_corank(a, c), direct))
    rng = random.Random(seed)
    for _ in range(remark_samples):
        c = rng.randint(0, 12)
        a = rng.randint(c + 1, c + 12)
        b = rng.randint(0, 12)
        start, after = remark_config(a, b, c)
        signs_ok = (after.ea, after.eb, after.ec) == (-1, 1, -1) or after.a == 0 or after.c == 0
        res.check(corank_direct(start) == corank_direct(after) and signs_ok, ("remark", (a, b, c), str(after)))
    return res


def random_config(rng: random.Random, max_size: int = 12) -> BlockConfig:
    while True:
        a, b, c = (rng.randint(0, max_size) for _ in range(3))
        if a + b + c:
            return BlockConfig(a, rng.choice((1, -1)), b, rng.choice((1, -1)), c, rng.choice((1, -1)))


def suite_moves(count: int = 500, seed: int = DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("move-soundness")
    rng = random.Random(seed)
    applied = 0
    for _ in range(count):
        cfg = random_config(rng)
        before = corank_direct(cfg)
        for m in MOVES:
            if not move_applies(cfg, m):
                continue
            applied += 1
            nxt = apply_move(cfg, m)
            res.check(corank_direct(nxt) == before, (str(cfg), m, "corank"))
            res.check((nxt.p, nxt.q, nxt.b) == pqb_image(cfg, m), (str(cfg), m, "pqb image"))
            res.check(pq_lattice_gcd(nxt) == pq_lattice_gcd(cfg), (str(cfg), m, "lattice"))
            res.check(b_class(nxt) == b_class(cfg), (str(cfg), m, "b class"))
    res.info["moves_applied"] = applied
    return res


# --- the word sweep ----------------------------------------------------------


def suite_engine(cases, bound: int = 2) -> SuiteResult:
    """Three descriptions of the central monomials in a box must coincide."""
    res = SuiteResult("engine-equivalence")
    for system, word in cases:
        grid = beta_grid(system, word)
        L0 = build_L0(grid)
        alg = TwistedAlgebra(L0)
        engine = alg.central_monomials_in_box(bound)
        kernel = {p for p in box_points(grid.r, bound) if not any(L0.apply(p))}
        cen = center_nilpotent(system, word)
        lattice = _box_lattice([g.z_exponents for g in cen.generators], grid.r, bound)
        res.check(engine == kernel == lattice, (system.name, word, len(engine), len(kernel), len(lattice)))
    return res


def suite_formulas(cases, conventions: Iterable[int] = (1,)) -> SuiteResult:
    res = SuiteResult("formula-audit")
    totals: dict[str, int] = {}
    for system, word in cases:
        for conv in conventions:
            rep = formula_audit(system, word, conv)
            for name, chk in rep.checks.items():
                totals[name] = totals.get(name, 0) + chk.checked
                res.checked += chk.checked
                res.failures.extend((system.name, word, conv, name, f) for f in chk.failures)
    res.info["per_family"] = totals
    return res


def suite_compatible(cases) -> SuiteResult:
    res = SuiteResult("compatible-pair")
    for system, word in cases:
        grid = beta_grid(system, word)
        try:
            pair = compatible_pair(grid)
        except AuditFailure as exc:
            res.check(False, (system.name, word, str(exc)))
            continue
        res.checked += len(pair.columns)
    return res


def suite_root_powers(cases, moduli: Iterable[int] = (3, 5, 7)) -> SuiteResult:
    res = SuiteResult("root-of-unity-powers")
    for system, word in cases:
        grid = beta_grid(system, word)
        alg = TwistedAlgebra(build_L0(grid))
        r = grid.r
        for m in moduli:
            for i in range(r):
                e = [m * int(i == j) for j in range(r)]
                res.check(alg.centrality_test(e, m), (system.name, word, m, "z", i + 1))
            for s in grid.support:
                v = [m * x for x in covariant_z_exponent(grid, s)]
                res.check(alg.centrality_test(v, m), (system.name, word, m, "C", s))
    return res


def random_skew(rng: random.Random, max_dim: int = 4, max_entry: int = 3) -> list[list[int]]:
    r = rng.randint(1, max_dim)
    m = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            v = rng.randint(-max_entry, max_entry)
            m[i][j] = v
            m[j][i] = -v
    return m


def suite_pi_degree(count: int = 200, moduli: Iterable[int] = (3, 5, 7, 9, 15),
                    seed: int = DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("pi-degree")
    rng = random.Random(seed)
    for _ in range(count):
        mat = random_skew(rng)
        for m in moduli:
            rep = pi_degree(mat, m)
            brute = brute_force_image(mat, m)
            res.check(rep.pi_degree ** 2 == brute, (mat, m, rep.pi_degree, brute))
    return res


@dataclass
class DeterminantCase:
    system: str
    word: tuple[int, ...]
    det_L: int
    det_Z: int
    diagonal: list[int]
    kernel_trivial: bool


def determinant_cases(cases) -> list[DeterminantCase]:
    out = []
    for system, word in cases:
        grid = beta_grid(system, word)
        L0 = build_L0(grid)
        _, lbar = build_A_and_Lbar(grid, L0)
        red = column_reduce(lbar, grid, compatible_pair(grid, L0))
        out.append(DeterminantCase(system.name, word, red.det_L, red.det_Z, red.diagonal,
                                   not center_nilpotent(system, word).generators))
    return out


def suite_determinant(cases, literal: bool = False) -> SuiteResult:
    """``det Lbar = +-prod(2 d_s) det Z`` on trivial kernels, and triviality iff ``det Z != 0``.

    With ``literal`` the power ``2^(r - r0)`` replaces the product; that
    reading fails on some non-simply-laced words.
    """
    res = SuiteResult("determinant-literal" if literal else "determinant")
    bad_by_type: dict[str, int] = {}
    for c in determinant_cases(cases):
        res.check(c.kernel_trivial == (c.det_Z != 0), (c.system, c.word, "triviality"))
        if not c.kernel_trivial:
            continue
        if literal:
            factor = 2 ** len(c.diagonal)
        else:
            factor = 1
            for d in c.diagonal:
                factor *= d
        ok = abs(c.det_L) == abs(factor * c.det_Z)
        if not ok:
            bad_by_type[c.system] = bad_by_type.get(c.system, 0) + 1
        res.check(ok, (c.system, c.word, c.det_L, c.det_Z, c.diagonal))
    res.info["failures_by_type"] = bad_by_type
    return res


# --- W-algebras ----------------------------------------------------------------


def two_factor_decompositions(system: RootSystem) -> list[DecompositionSpec]:
    """Every valid ``w0 = w_1 w_2`` with each factor a product of distinct simple reflections."""
    w0 = longest_element(system)
    letters = list(range(1, system.rank + 1))
    out = []
    for sub1 in subsets(letters):
        if not sub1:
            continue
        for f1 in permutations(sub1):
            for sub2 in subsets(sub1):
                if not sub2:
                    continue
                for f2 in permutations(sub2):
                    spec = DecompositionSpec(system, (f1, f2))
                    if validate_decomposition(spec) and WeylElement.from_word(system, spec.word) == w0:
                        out.append(spec)
    return out


def suite_w_algebra(max_rank: int = 3, bound: int = 2) -> SuiteResult:
    res = SuiteResult("w-algebra")
    count = 0
    for n in range(1, max_rank + 1):
        system = build_root_system("A", n)
        for spec in two_factor_decompositions(system):
            count += 1
            dl = delta_lattice(system, spec.word, strict=False)
            res.check(dl.w is not None and dl.certified, (system.name, spec.factors, "certificates"))
            res.check(dl.lec_equals_minus_lbar, (system.name, spec.factors, "lec"))
            cen = center_W(spec)
            engine = TwistedAlgebra(dl.w).central_monomials_in_box(bound)
            lattice = _box_lattice([g.z_exponents for g in cen.generators], len(spec.word), bound)
            res.check(engine == lattice, (system.name, spec.factors, len(engine), len(lattice)))
    res.info["decompositions"] = count
    return res


# --- double Schubert windows -----------------------------------------------------


def suite_double_schubert(types: Iterable[str] = ("A2", "A3"), bound: int = 2) -> SuiteResult:
    res = SuiteResult("double-schubert")
    for name in types:
        system = build_root_system(name[0], int(name[1:]))
        word = longest_element(system).reduced_word
        for j in range(1, len(word) + 1):
            wc = word[:j]
            for i in range(j):
                wa = word[:i]
                win = schubert_window(system, wa, wc)
                cen = double_schubert_center(system, wa, wc)
                dim = len(win.positions)
                engine = TwistedAlgebra(win.form()).central_monomials_in_box(bound)
                lattice = _box_lattice([g.z_exponents for g in cen.generators], dim, bound)
                res.check(engine == lattice, (name, wa, wc, len(engine), len(lattice)))
    return res


# --- structure ------------------------------------------------------------------


def suite_structure(parabolic_rank: int = 4, kostant_rank: int = 3, identity_rank: int = 8) -> SuiteResult:
    res = SuiteResult("structure")
    for fam, n in all_types(parabolic_rank):
        system = build_root_system(fam, n)
        for levi in subsets(list(range(1, n + 1))):
            try:
                w0, wl, wp = longest_and_parabolic(system, levi)
            except AuditFailure as exc:
                res.check(False, (system.name, levi, str(exc)))
                continue
            res.check(wp * wl == w0, (system.name, levi, "w^p w_L"))
            if wp.length:
                try:
                    grid = beta_grid(system, wp.reduced_word)
                    ok = reflection_factorization_holds(grid)
                except AuditFailure:
                    ok = False
                res.check(ok, (system.name, levi, "factorization"))
    kost = {}
    for fam, n in all_types(kostant_rank):
        rep = kostant_scan(fam, n)
        kost[rep.type_name] = rep.group_order
        res.check(rep.bijection, (rep.type_name, "kostant"))
    res.info["kostant_group_orders"] = kost
    for fam, n in all_types(identity_rank):
        system = build_root_system(fam, n)
        for i in range(1, n + 1):
            res.check(fz_identity_check(system, i).is_zero, (system.name, i, "fundamental identity"))
    return res


# --- registry -----------------------------------------------------------------


SUITES = (
    "structure", "type-a", "minus-one", "pairings", "matrix", "b1", "moves", "engine",
    "formulas", "compatible", "powers", "pidegree", "determinant", "w-algebra", "double-schubert",
)


def run_suite(name: str, max_rank: int = 3, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Run one named suite.

    ``max_rank`` bounds the word sweep, the parabolic and Kostant scans and
    the W-algebra decompositions. The fixed tables always run in full.
    """
    from .errors import InputError

    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")
    if max_rank < 1:
        raise InputError("max-rank must be positive")
    sweep = lambda: sweep_cases(min(max_rank, 3))
    table = {
        "structure": lambda: suite_structure(min(max_rank, 4), min(max_rank, 3)),
        "type-a": suite_type_a,
        "minus-one": suite_minus_one,
        "pairings": suite_longest_tables,
        "matrix": suite_matrix_algebra,
        "b1": lambda: suite_b1(seed=seed),
        "moves": lambda: suite_moves(seed=seed),
        "engine": lambda: suite_engine(sweep()),
        "formulas": lambda: suite_formulas(sweep(), (1, -1)),
        "compatible": lambda: suite_compatible(sweep()),
        "powers": lambda: suite_root_powers(sweep()),
        "pidegree": lambda: suite_pi_degree(seed=seed),
        "determinant": lambda: suite_determinant(sweep()),
        "w-algebra": lambda: suite_w_algebra(min(max_rank, 3)),
        "double-schubert": suite_double_schubert,
    }
    return table[name]()
