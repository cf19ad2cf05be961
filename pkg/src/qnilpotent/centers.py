"""Centers as integer kernels of weight-lattice maps.

Three variants share one shape. A kernel vector ``n`` (indexed by
fundamental weights, zero off the support) names a monomial in
covariant-type elements, and the monomial is central exactly when ``n``
lies in the kernel:

* nilpotent algebras: ``(1 + w) n = 0``;
* the W-algebra of a decomposition ``w = w_1 ... w_l``: ``(1 - w_1^-1 w) n = 0``;
* double Schubert windows ``w_a < w_c``: ``(w_a + w_c) n = 0``.

"On the support" means the equations are read only against the simple
coroots indexed by the support (translated by ``w_a`` in the double
Schubert case). That reading is what the twisted Laurent engine
confirms; see the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cartan import RootSystem
from .errors import AuditFailure, InputError
from .intmat import hnf, integer_kernel, solve_integer, solve_rational
from .lattice_forms import SkewForm, build_A_and_Lbar, build_L0, covariant_z_exponent
from .twisted_laurent import TwistedAlgebra
from .weyl import BetaGrid, WeylElement, beta_grid, format_word, is_reduced


# --- output containers ------------------------------------------------------


@dataclass
class CenterGenerator:
    n: list[int]
    rendered: str
    z_exponents: list[int]
    weight: list | None = None

    def to_json(self) -> dict:
        out = {"n": self.n, "rendered": self.rendered, "z_exponents": self.z_exponents}
        if self.weight is not None:
            out["weight"] = self.weight
        return out


@dataclass
class CenterDescription:
    variant: str
    system: RootSystem = field(repr=False)
    word: tuple[int, ...]
    support: tuple[int, ...]
    generators: list[CenterGenerator]
    kernel_matrix: list[list[int]] = field(repr=False, default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.generators)

    @property
    def rendered(self) -> list[str]:
        return [g.rendered for g in self.generators]

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "type": self.system.name,
            "word": list(self.word),
            "support": list(self.support),
            "dimension": self.dimension,
            "generators": [g.to_json() for g in self.generators],
        }


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def render_monomial(n: Sequence[int], prefix: str = "C") -> str:
    """``(1,0,1) -> "C1*C3"``; exponents other than 1 as ``C1^2``, ``C2^-1``."""
    parts = [_power(f"{prefix}{s}", e) for s, e in enumerate(n, start=1) if e]
    return "*".join(parts) if parts else "1"


def _restricted_kernel(system: RootSystem, u: WeylElement, support: Sequence[int]) -> list[list[int]]:
    """Kernel of ``x -> <alpha_k^vee, (1 + u) x>`` for ``k`` and ``x`` on the support.

    Returned as full-length vectors over all fundamental weights.
    """
    cols = []
    for s in support:
        lam = system.fundamental_weight(s).coords
        img = u.act_weight(lam)
        cols.append([lam[k - 1] + img[k - 1] for k in support])
    mat = [[cols[j][i] for j in range(len(support))] for i in range(len(support))]
    return [_lift(system, support, v) for v in integer_kernel(mat, len(support))]


def _lift(system: RootSystem, support: Sequence[int], v: Sequence[int]) -> list[int]:
    out = [0] * system.rank
    for s, x in zip(support, v):
        out[s - 1] = x
    return out


def _reduced_grid(system: RootSystem, word: Sequence[int]) -> BetaGrid:
    return beta_grid(system, tuple(word))


# --- nilpotent algebras ------------------------------------------------------


def center_nilpotent(system: RootSystem, word: Sequence[int]) -> CenterDescription:
    """Kernel of ``1 + w`` on the span of the ``Lambda_s`` with ``s`` in the word."""
    grid = _reduced_grid(system, word)
    support = grid.support
    kernel = _restricted_kernel(system, grid.element, support)
    cov = {s: covariant_z_exponent(grid, s) for s in support}
    gens = []
    for n in kernel:
        z = [0] * grid.r
        for s in support:
            if n[s - 1]:
                z = [a + n[s - 1] * b for a, b in zip(z, cov[s])]
        gens.append(CenterGenerator(n, render_monomial(n), z))
    return CenterDescription("nilpotent", system, grid.word, support, gens, kernel)


@dataclass
class CovariantDatum:
    s: int
    weight: tuple[int, ...]  # (1 - w) Lambda_s, weight coordinates
    root_coords: tuple[int, ...]  # the same element in root coordinates
    z_exponent: list[int]
    certified: bool

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "weight": list(self.weight),
            "root_coords": list(self.root_coords),
            "z_exponent": self.z_exponent,
            "certified": self.certified,
        }


def covariant_data(system: RootSystem, word: Sequence[int]) -> list[CovariantDatum]:
    """One entry per letter of the word, with an engine-checked covariance certificate."""
    grid = _reduced_grid(system, word)
    if grid.r == 0:
        return []
    alg = TwistedAlgebra(build_L0(grid))
    w = grid.element
    out = []
    for s in grid.support:
        lam = system.fundamental_weight(s).coords
        img = w.act_weight(lam)
        weight = tuple(a - b for a, b in zip(lam, img))
        plus = tuple(a + b for a, b in zip(lam, img))
        root = grid.partial_sum(s, grid.counts[s])
        if system.root_to_weight(root) != weight:
            raise AuditFailure(f"covariant weight mismatch for letter {s}")
        z = covariant_z_exponent(grid, s)
        ok = True
        for n in range(grid.r):
            e = [0] * grid.r
            e[n] = 1
            if alg.commutation_exponent(e, z) != -system.form_weight_root(plus, grid.betas[n]):
                ok = False
        out.append(CovariantDatum(s, weight, root, z, ok))
    return out


# --- W-algebras of a decomposition -----------------------------------------


@dataclass(frozen=True)
class DecompositionSpec:
    system: RootSystem = field(repr=False)
    factors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(tuple(f) for f in self.factors))

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(i for f in self.factors for i in f)


@dataclass
class DecompositionCheck:
    valid: bool
    problems: list[str]

    def __bool__(self) -> bool:
        return self.valid


def validate_decomposition(spec: DecompositionSpec) -> DecompositionCheck:
    problems = []
    if not spec.factors or any(not f for f in spec.factors):
        problems.append("factors must be nonempty")
    for k, f in enumerate(spec.factors, start=1):
        for i in f:
            if not 1 <= i <= spec.system.rank:
                problems.append(f"factor {k} uses letter {i} outside 1..{spec.system.rank}")
        if len(set(f)) != len(f):
            problems.append(f"factor {k} repeats a simple reflection")
    for k in range(1, len(spec.factors)):
        if not set(spec.factors[k]) <= set(spec.factors[k - 1]):
            problems.append(f"support of factor {k + 1} is not inside that of factor {k}")
    if not problems and not is_reduced(spec.system, spec.word):
        problems.append(f"concatenation {format_word(spec.word)} is not reduced")
    return DecompositionCheck(not problems, problems)


def factor_split(grid: BetaGrid) -> list[tuple[int, ...]] | None:
    """Split a word into factors by occurrence number, if that is a decomposition.

    The ``t``-th occurrence of each letter must sit in factor ``t``; this
    happens exactly when occurrence numbers are nondecreasing along the word.
    """
    occ = [t for (_, t) in grid.labels]
    if any(a > b for a, b in zip(occ, occ[1:])):
        return None
    factors: list[list[int]] = []
    for letter, t in grid.labels:
        if t > len(factors):
            factors.append([])
        factors[t - 1].append(letter)
    return [tuple(f) for f in factors]


def w_form(grid: BetaGrid) -> SkewForm:
    """Exponents among ``Delta_{s,t} = Delta_{Lambda_s, w_1...w_t Lambda_s}``.

    For ``t < d``: ``(Lambda_s, Lambda_c) - (w_{1..t} Lambda_s, w_{1..d} Lambda_c)``.
    Generators from the same factor commute. Rows and columns follow
    the positions of the word, whose labels ``(s, t)`` carry the factor
    number ``t``.
    """
    if factor_split(grid) is None:
        raise InputError(f"word {format_word(grid.word)} does not split into factors of distinct letters")
    system = grid.system
    r = grid.r
    lam = [system.fundamental_weight(s).coords for s, _ in grid.labels]
    img = [grid.omega_weight(s, t) for s, t in grid.labels]
    m = [[0] * r for _ in range(r)]
    for a in range(r):
        for b in range(r):
            ta, tb = grid.labels[a][1], grid.labels[b][1]
            if ta < tb:
                v = system.form_weights(lam[a], lam[b]) - system.form_weights(img[a], img[b])
                if v.denominator != 1:
                    raise AuditFailure("non-integral exponent")
                m[a][b] = int(v)
                m[b][a] = -int(v)
    return SkewForm(m)


def _spec_grid(spec: DecompositionSpec) -> BetaGrid:
    check = validate_decomposition(spec)
    if not check:
        raise InputError("invalid decomposition: " + "; ".join(check.problems))
    grid = beta_grid(spec.system, spec.word)
    if factor_split(grid) != list(spec.factors):
        raise AuditFailure("occurrence numbers do not match factor numbers")
    return grid


def w_kernel_matrix(system: RootSystem, w1: WeylElement, w: WeylElement, support) -> list[list[int]]:
    """``M[s][i] = (Lambda_s, (1 - w_1^-1 w) Lambda_i)``, integral."""
    u = w1.inverse() * w
    rows = []
    for s in support:
        ls = system.fundamental_weight(s).coords
        row = []
        for i in support:
            li = system.fundamental_weight(i).coords
            diff = tuple(a - b for a, b in zip(li, u.act_weight(li)))
            v = system.form_weights(ls, diff)
            if v.denominator != 1:
                raise AuditFailure("non-integral kernel equation")
            row.append(int(v))
        rows.append(row)
    return rows


def delta_monomial(grid: BetaGrid, n: Sequence[int]) -> list[int]:
    """Exponents of ``prod_i (Delta_{i,1} Delta_{i,imax})^{n_i}`` (one factor if imax = 1)."""
    z = [0] * grid.r
    for i in grid.support:
        k = n[i - 1]
        if not k:
            continue
        z[grid.index[(i, 1)]] += k
        top = grid.counts[i]
        if top > 1:
            z[grid.index[(i, top)]] += k
    return z


def _render_delta(grid: BetaGrid, n: Sequence[int]) -> str:
    parts = []
    for i in grid.support:
        k = n[i - 1]
        if not k:
            continue
        top = grid.counts[i]
        base = f"Delta[{i},1]" if top == 1 else f"(Delta[{i},1]*Delta[{i},{top}])"
        parts.append(_power(base, k))
    return "*".join(parts) if parts else "1"


def center_W(spec: DecompositionSpec) -> CenterDescription:
    """Kernel of ``1 - w_1^-1 w`` on the support, as products of ``Delta_{i,1} Delta_{i,imax}``."""
    grid = _spec_grid(spec)
    support = grid.support
    w1 = WeylElement.from_word(spec.system, spec.factors[0])
    mat = w_kernel_matrix(spec.system, w1, grid.element, support)
    kernel = [_lift(spec.system, support, v) for v in integer_kernel(mat, len(support))]
    gens = [CenterGenerator(n, _render_delta(grid, n), delta_monomial(grid, n)) for n in kernel]
    return CenterDescription("W", spec.system, grid.word, support, gens, kernel)


# --- the Delta lattice and nabla certificates ------------------------------


def lec_form(grid: BetaGrid) -> SkewForm:
    """``((1 - w_{s,t}) Lambda_s, (1 + w_{c,d}) Lambda_c)`` for ``(s,t)`` before ``(c,d)``."""
    system = grid.system
    r = grid.r
    lam = [system.fundamental_weight(s).coords for s, _ in grid.labels]
    img = [grid.omega_weight(s, t) for s, t in grid.labels]
    m = [[0] * r for _ in range(r)]
    for a in range(r):
        minus = tuple(x - y for x, y in zip(lam[a], img[a]))
        for b in range(a + 1, r):
            plus = tuple(x + y for x, y in zip(lam[b], img[b]))
            v = system.form_weights(minus, plus)
            if v.denominator != 1:
                raise AuditFailure("non-integral exponent")
            m[a][b] = int(v)
            m[b][a] = -int(v)
    return SkewForm(m)


def gamma_vector(grid: BetaGrid, i: int, j0: int) -> list[int]:
    """``0`` off letter ``i``; ``+d_i`` for ``t < j0``; ``-d_i`` for ``j0 <= t``."""
    d = grid.system.symmetrizers[i - 1]
    out = [0] * grid.r
    for (s, t), n in grid.index.items():
        if s == i:
            out[n] = d if t < j0 else -d
    return out


@dataclass
class NablaCertificate:
    i: int
    j0: int
    gamma: list[int]
    exponents: list[int] | None  # integer solution, when one exists
    rational: list[Fraction] | None

    @property
    def exists(self) -> bool:
        return self.rational is not None


@dataclass
class RangeCertificate:
    kind: str
    label: tuple
    target: list[int]
    preimage: list[Fraction] | None

    @property
    def holds(self) -> bool:
        return self.preimage is not None


@dataclass
class DeltaLattice:
    word: tuple[int, ...]
    lec: SkewForm
    lec_equals_minus_lbar: bool
    factors: list[tuple[int, ...]] | None
    w: SkewForm | None
    nablas: list[NablaCertificate]
    ranges: list[RangeCertificate]

    @property
    def certified(self) -> bool:
        return all(c.exists for c in self.nablas) and all(c.holds for c in self.ranges)


def _check_solution(form: SkewForm, x, target) -> None:
    if [sum(Fraction(a) * b for a, b in zip(row, x)) for row in form.entries] != [Fraction(t) for t in target]:
        raise AuditFailure("certificate does not solve its equation")


def nabla_certificates(form: SkewForm, grid: BetaGrid) -> tuple[list[NablaCertificate], list[RangeCertificate]]:
    nablas = []
    ranges = []
    for i in grid.support:
        top = grid.counts[i]
        for j0 in range(2, top + 1):
            gamma = gamma_vector(grid, i, j0)
            xi = solve_integer(form.entries, gamma)
            xq = solve_rational(form.entries, gamma)
            if xi is not None:
                _check_solution(form, xi, gamma)
            if xq is not None:
                _check_solution(form, xq, gamma)
            nablas.append(NablaCertificate(i, j0, gamma, xi, xq))
        for j0 in range(2, top):
            e = [0] * grid.r
            e[grid.index[(i, j0)]] = 1
            ranges.append(RangeCertificate("interior", (i, j0), e, solve_rational(form.entries, e)))
        if top > 1:
            e = [0] * grid.r
            e[grid.index[(i, top)]] = 1
            e[grid.index[(i, 1)]] = -1
            ranges.append(RangeCertificate("ends", (i, 1, top), e, solve_rational(form.entries, e)))
    return nablas, ranges


def delta_lattice(system: RootSystem, word: Sequence[int], strict: bool = True) -> DeltaLattice:
    """The minor form of the word, plus the W-form and its certificates when the word splits.

    With ``strict`` set, a missing certificate on the W-form raises.
    """
    grid = _reduced_grid(system, word)
    lec = lec_form(grid)
    _, lbar = build_A_and_Lbar(grid)
    neg = all(a == -b for ra, rb in zip(lec.entries, lbar.entries) for a, b in zip(ra, rb))
    factors = factor_split(grid) if grid.r else None
    wf = None
    nablas: list[NablaCertificate] = []
    ranges: list[RangeCertificate] = []
    if factors is not None:
        wf = w_form(grid)
        nablas, ranges = nabla_certificates(wf, grid)
        if strict and not (all(c.exists for c in nablas) and all(c.holds for c in ranges)):
            raise AuditFailure("nabla or range certificate failed on the W-form")
    return DeltaLattice(grid.word, lec, neg, factors, wf, nablas, ranges)


# --- exponents from the minor commutation rule ------------------------------


def minor_exponent(system: RootSystem, lam, mu, s: WeylElement, s_prime: WeylElement,
                   t: WeylElement, t_prime: WeylElement) -> int:
    """``(s lam, mu) - (lam, t mu)`` under the length-additivity hypotheses."""
    for u in (s, s_prime, t, t_prime):
        if u.system is not system:
            raise InputError("Weyl element from a different root system")
    if (s_prime * s).length != s_prime.length + s.length:
        raise InputError("length of s's is not l(s') + l(s)")
    if (t_prime * t).length != t_prime.length + t.length:
        raise InputError("length of t't is not l(t') + l(t)")
    lam = tuple(lam)
    mu = tuple(mu)
    if any(x < 0 for x in lam + mu):
        raise InputError("weights must be dominant")
    v = system.form_weights(s.act_weight(lam), mu) - system.form_weights(lam, t.act_weight(mu))
    if v.denominator != 1:
        raise AuditFailure("non-integral exponent")
    return int(v)


def R_exponent(grid: BetaGrid, first: tuple[int, int], second: tuple[int, int]) -> int:
    """Exponent ``R`` in ``w_{s,t} w_{c,d} = q^R w_{c,d} w_{s,t}``, for ``(s,t)`` before ``(c,d)``."""
    if first not in grid.index or second not in grid.index:
        raise InputError("label outside the grid")
    if grid.index[first] >= grid.index[second]:
        raise InputError(f"{first} must come strictly before {second}")
    system = grid.system
    s, t = first
    c, d = second
    b1 = grid.beta(s, t)
    b2 = grid.beta(c, d)
    ls = system.fundamental_weight(s).coords
    lc = system.fundamental_weight(c).coords
    return (
        system.form_roots(b1, b2)
        + system.form_weight_root(ls, b2)
        - system.form_weight_root(lc, b1)
        - system.form_roots(grid.partial_sum(s, t), b2)
        + system.form_roots(grid.partial_sum(c, d), b1)
    )


def r_oracle(grid: BetaGrid) -> tuple[TwistedAlgebra, dict[tuple[int, int], list[int]]]:
    """Engine on ``z_1..z_r, K_1..K_R`` with ``K_i z_j = q^{(Lambda_i, beta_j)} z_j K_i``.

    ``w_{s,t}`` is the monomial ``z_{s,t} K^{w_{s,t} Lambda_s}``.
    """
    system = grid.system
    r = grid.r
    n = system.rank
    L0 = build_L0(grid).entries
    m = [[0] * (r + n) for _ in range(r + n)]
    for i in range(r):
        for j in range(r):
            m[i][j] = L0[i][j]
    for k in range(n):
        lam = system.fundamental_weight(k + 1).coords
        for j in range(r):
            v = system.form_weight_root(lam, grid.betas[j])
            m[r + k][j] = v
            m[j][r + k] = -v
    alg = TwistedAlgebra(m)
    gens = {}
    for pos, (s, t) in enumerate(grid.labels):
        v = [0] * (r + n)
        v[pos] = 1
        for k, x in enumerate(grid.omega_weight(s, t)):
            v[r + k] = x
        gens[(s, t)] = v
    return alg, gens


# --- double Schubert windows -------------------------------------------------


@dataclass
class Window:
    grid: BetaGrid
    start: int  # positions start..r-1 form the window
    v: WeylElement  # w_a^-1 w_c

    @property
    def positions(self) -> list[int]:
        return list(range(self.start, self.grid.r))

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(sorted({self.grid.word[n] for n in self.positions}))

    def form(self) -> SkewForm:
        L0 = build_L0(self.grid).entries
        pos = self.positions
        return SkewForm([[L0[i][j] for j in pos] for i in pos])

    def diagonal(self, s: int) -> list[int]:
        """Window exponents of the product of ``z_{s,t}`` over ``s_a < t <= s_c``."""
        return [int(self.grid.word[n] == s) for n in self.positions]


def schubert_window(system: RootSystem, wa: Sequence[int], wc: Sequence[int]) -> Window:
    wa = tuple(wa)
    wc = tuple(wc)
    if len(wa) >= len(wc) or wc[: len(wa)] != wa:
        raise InputError(f"{format_word(wa) or 'e'} is not a strict prefix of {format_word(wc)}")
    grid = _reduced_grid(system, wc)
    a = WeylElement.from_word(system, wa)
    return Window(grid, len(wa), a.inverse() * grid.element)


def double_schubert_center(system: RootSystem, wa: Sequence[int], wc: Sequence[int]) -> CenterDescription:
    """Kernel of ``w_a + w_c`` on the window letters.

    Since ``w_a`` is invertible this is the kernel of ``1 + v``,
    ``v = w_a^-1 w_c``, read against the coroots of the roots ``w_a(alpha_k)``.
    """
    win = schubert_window(system, wa, wc)
    letters = win.letters
    kernel = _restricted_kernel(system, win.v, letters)
    a = WeylElement.from_word(system, wa)
    c = win.grid.element
    gens = []
    for n in kernel:
        z = [0] * len(win.positions)
        for s in letters:
            if n[s - 1]:
                z = [x + n[s - 1] * y for x, y in zip(z, win.diagonal(s))]
        weight = [0] * system.rank
        for s in letters:
            if n[s - 1]:
                lam = system.fundamental_weight(s).coords
                diff = [x - y for x, y in zip(a.act_weight(lam), c.act_weight(lam))]
                weight = [x + n[s - 1] * y for x, y in zip(weight, diff)]
        gens.append(CenterGenerator(n, render_monomial(n, "D"), z, weight))
    return CenterDescription("double-schubert", system, win.grid.word, letters, gens, kernel)


def lattice_of(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    """HNF basis of the lattice spanned by ``vectors`` (empty for none)."""
    vs = [list(v) for v in vectors if any(v)]
    return hnf(vs) if vs else []
