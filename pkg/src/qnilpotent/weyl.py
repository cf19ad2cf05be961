"""Weyl group elements, reduced words, inversion sets and the beta grid.

A :class:`WeylElement` carries two integer matrices for the same linear
map: one on simple-root coordinates and one on fundamental-weight
coordinates. Equality is by matrix, never by word.

Words are tuples of 1-based simple-root indices, e.g. ``(1, 2, 1)``.
Grid labels ``(s, t)`` mean "the t-th occurrence of the letter s".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .cartan import RootSystem, RootVector, Weight, build_root_system
from .errors import AuditFailure, GuardExceeded, InputError
from .intmat import identity, matmul, matvec

Word = tuple[int, ...]


def parse_word(text: str) -> Word:
    """Parse ``"1,2,1"``; the empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse word {text!r}; expected comma-separated indices") from None


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(i) for i in word)


def _root_generator(system: RootSystem, i: int) -> tuple[tuple[int, ...], ...]:
    m = identity(system.rank)
    k = i - 1
    for j in range(system.rank):
        m[k][j] -= system.cartan[k][j]
    return tuple(map(tuple, m))


def _weight_generator(system: RootSystem, i: int) -> tuple[tuple[int, ...], ...]:
    m = identity(system.rank)
    k = i - 1
    for j in range(system.rank):
        m[j][k] -= system.cartan[j][k]
    return tuple(map(tuple, m))


@dataclass(frozen=True, eq=False)
class WeylElement:
    system: RootSystem = field(repr=False)
    matrix: tuple[tuple[int, ...], ...]
    weight_matrix: tuple[tuple[int, ...], ...] = field(repr=False)

    # --- construction ------------------------------------------------

    @classmethod
    def identity(cls, system: RootSystem) -> "WeylElement":
        m = tuple(map(tuple, identity(system.rank)))
        return cls(system, m, m)

    @classmethod
    def simple(cls, system: RootSystem, i: int) -> "WeylElement":
        system._check_index(i)
        return cls(system, _root_generator(system, i), _weight_generator(system, i))

    @classmethod
    def from_word(cls, system: RootSystem, word: Iterable[int]) -> "WeylElement":
        w = cls.identity(system)
        for i in word:
            w = w * cls.simple(system, i)
        return w

    @classmethod
    def reflection(cls, system: RootSystem, beta: Sequence[int]) -> "WeylElement":
        """The reflection ``x -> x - <beta^vee, x> beta`` in a root ``beta``."""
        n = system.rank
        bw = system.root_to_weight(beta)
        bb = system.form_roots(beta, beta)
        root_cols = []
        weight_cols = []
        for j in range(n):
            e = tuple(int(k == j) for k in range(n))
            c = 2 * system.form_roots(beta, e) // bb
            root_cols.append([e[k] - c * beta[k] for k in range(n)])
            c = system.coroot_pairing(beta, e)
            weight_cols.append([e[k] - c * bw[k] for k in range(n)])
        rm = tuple(tuple(root_cols[j][i] for j in range(n)) for i in range(n))
        wm = tuple(tuple(weight_cols[j][i] for j in range(n)) for i in range(n))
        return cls(system, rm, wm)

    # --- algebra -----------------------------------------------------

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.system is not self.system:
            raise InputError("Weyl elements of different root systems")
        return WeylElement(
            self.system,
            tuple(map(tuple, matmul(self.matrix, other.matrix))),
            tuple(map(tuple, matmul(self.weight_matrix, other.weight_matrix))),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeylElement)
            and other.system is self.system
            and other.matrix == self.matrix
        )

    def __hash__(self) -> int:
        return hash(self.matrix)

    def is_identity(self) -> bool:
        return self == WeylElement.identity(self.system)

    def inverse(self) -> "WeylElement":
        return WeylElement.from_word(self.system, reversed(self.reduced_word))

    # --- action ------------------------------------------------------

    def act_root(self, y: Sequence[int]) -> tuple[int, ...]:
        return tuple(matvec(self.matrix, y))

    def act_weight(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(matvec(self.weight_matrix, x))

    def apply(self, v):
        if isinstance(v, RootVector):
            return RootVector(v.system, self.act_root(v.coords))
        if isinstance(v, Weight):
            return Weight(v.system, self.act_weight(v.coords))
        raise InputError(f"cannot apply a Weyl element to {type(v).__name__}")

    # --- combinatorics -------------------------------------------------

    @cached_property
    def reduced_word(self) -> Word:
        """A reduced word by descent stripping, smallest index first."""
        w = self
        letters = []
        n = self.system.rank
        while True:
            for i in range(1, n + 1):
                col = tuple(w.matrix[k][i - 1] for k in range(n))
                if any(c < 0 for c in col):
                    letters.append(i)
                    w = w * WeylElement.simple(self.system, i)
                    break
            else:
                break
        return tuple(reversed(letters))

    @property
    def length(self) -> int:
        return len(self.reduced_word)

    def phi(self) -> frozenset[tuple[int, ...]]:
        """The inversion set ``{alpha > 0 : w^{-1} alpha < 0}``."""
        inv = self.inverse()
        return frozenset(
            a for a in self.system.positive_roots if any(c < 0 for c in inv.act_root(a))
        )

    def is_descent(self, i: int) -> bool:
        """True when ``w(alpha_i) < 0``, i.e. ``l(w s_i) < l(w)``."""
        n = self.system.rank
        return any(self.matrix[k][i - 1] < 0 for k in range(n))


def is_reduced(system: RootSystem, word: Sequence[int]) -> bool:
    return length_and_reduced(system, word)[1]


def length_and_reduced(system: RootSystem, word: Sequence[int]) -> tuple[int, bool]:
    """Length of the evaluated element (as ``|Phi_w|``) and reducedness."""
    for i in word:
        system._check_index(i)
    w = WeylElement.from_word(system, word)
    n = len(w.phi())
    return n, n == len(word)


def phi_set(w: WeylElement) -> frozenset[tuple[int, ...]]:
    return w.phi()


# --- the beta grid ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BetaGrid:
    """Positions ``1..r`` of a reduced word, their roots and grid labels.

    ``betas[n]`` is the root at position ``n+1`` (0-based storage);
    ``labels[n]`` is its grid label ``(s, t)``.
    """

    system: RootSystem = field(repr=False)
    word: Word
    betas: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[int, int], ...]

    @property
    def r(self) -> int:
        return len(self.word)

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {lab: n for n, lab in enumerate(self.labels)}

    @cached_property
    def counts(self) -> dict[int, int]:
        """``s -> s_r``: how often each letter occurs."""
        out: dict[int, int] = {}
        for s in self.word:
            out[s] = out.get(s, 0) + 1
        return out

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.counts))

    @cached_property
    def prefixes(self) -> tuple[WeylElement, ...]:
        """``prefixes[n]`` is the product of the first ``n`` letters."""
        out = [WeylElement.identity(self.system)]
        for i in self.word:
            out.append(out[-1] * WeylElement.simple(self.system, i))
        return tuple(out)

    @property
    def element(self) -> WeylElement:
        return self.prefixes[-1]

    def omega(self, s: int, t: int) -> WeylElement:
        """``omega_{s,t}``: the prefix ending at label ``(s, t)``; ``t = 0`` is e."""
        if t == 0:
            return WeylElement.identity(self.system)
        return self.prefixes[self.index[(s, t)] + 1]

    def omega_weight(self, s: int, t: int) -> tuple[int, ...]:
        """``omega_{s,t}(Lambda_s)`` in weight coordinates."""
        lam = self.system.fundamental_weight(s).coords
        return self.omega(s, t).act_weight(lam)

    def partial_sum(self, s: int, t: int) -> tuple[int, ...]:
        """``beta_{s,1} + ... + beta_{s,t}`` in root coordinates."""
        n = self.system.rank
        out = [0] * n
        for k in range(1, t + 1):
            b = self.betas[self.index[(s, k)]]
            for j in range(n):
                out[j] += b[j]
        return tuple(out)

    def pbar(self, j: int, s: int, t: int) -> int:
        """Occurrences of letter ``j`` in ``omega_{s,t}``."""
        end = self.index[(s, t)]
        return sum(1 for i in self.word[: end + 1] if i == j)

    def beta(self, s: int, t: int) -> tuple[int, ...]:
        return self.betas[self.index[(s, t)]]


def beta_grid(system: RootSystem, word: Sequence[int]) -> BetaGrid:
    """Betas, grid labels and occurrence counts for a reduced word.

    Also checks that the reflections in the betas, multiplied in
    reverse order, reproduce the element, and that each letter's betas
    sum to ``Lambda_s - w(Lambda_s)``.
    """
    word = tuple(word)
    for i in word:
        system._check_index(i)
    w = WeylElement.identity(system)
    betas = []
    labels = []
    seen: dict[int, int] = {}
    for i in word:
        b = w.act_root(system.simple_root(i).coords)
        if not system.is_positive_root(b):
            raise InputError(f"word {format_word(word)} is not reduced")
        betas.append(b)
        seen[i] = seen.get(i, 0) + 1
        labels.append((i, seen[i]))
        w = w * WeylElement.simple(system, i)
    if len(set(betas)) != len(betas):
        raise InputError(f"word {format_word(word)} is not reduced")
    grid = BetaGrid(system, word, tuple(betas), tuple(labels))

    prod = WeylElement.identity(system)
    for b in betas:
        prod = WeylElement.reflection(system, b) * prod
    if prod != w:
        raise AuditFailure("reflection factorization failed")
    for s, cnt in grid.counts.items():
        lam = system.fundamental_weight(s).coords
        diff = tuple(a - b for a, b in zip(lam, w.act_weight(lam)))
        if system.root_to_weight(grid.partial_sum(s, cnt)) != diff:
            raise AuditFailure(f"beta sum for letter {s} is not Lambda_s - w(Lambda_s)")
    return grid


def reflection_factorization_holds(grid: BetaGrid) -> bool:
    prod = WeylElement.identity(grid.system)
    for b in grid.betas:
        prod = WeylElement.reflection(grid.system, b) * prod
    return prod == grid.element


# --- longest elements and parabolics --------------------------------------


def longest_element(system: RootSystem, subset: Iterable[int] | None = None) -> WeylElement:
    """Longest element of the parabolic subgroup on ``subset`` (default: all)."""
    gens = sorted(set(subset)) if subset is not None else list(range(1, system.rank + 1))
    for i in gens:
        system._check_index(i)
    w = WeylElement.identity(system)
    while True:
        for i in gens:
            if not w.is_descent(i):
                w = w * WeylElement.simple(system, i)
                break
        else:
            return w


def levi_positive_roots(system: RootSystem, levi: Iterable[int]) -> frozenset[tuple[int, ...]]:
    levi = set(levi)
    return frozenset(
        a for a in system.positive_roots if all(c == 0 or (k + 1) in levi for k, c in enumerate(a))
    )


def nilradical_roots(system: RootSystem, levi: Iterable[int]) -> frozenset[tuple[int, ...]]:
    """Positive roots of the nilradical u: those outside the Levi."""
    return frozenset(system.positive_roots) - levi_positive_roots(system, levi)


def dual_levi(system: RootSystem, levi: Iterable[int]) -> list[int]:
    """Indices of ``-w0(alpha_i)`` for ``i`` in the Levi."""
    w0 = longest_element(system)
    out = []
    for i in levi:
        img = w0.act_root(system.simple_root(i).coords)
        out.append(next(k + 1 for k, c in enumerate(img) if c))
    return sorted(out)


def longest_and_parabolic(system: RootSystem, levi: Iterable[int]):
    """``(w0, w_L, w^p)`` with ``w^p = w0 w_L^-1``, so ``w^p w_L = w0``.

    ``w^p`` sends ``Delta^+(u)`` into the negative roots. Its inversion
    set ``Phi(w^p)`` is the nilradical of the Levi ``-w0(L)``, which is
    ``Delta^+(u)`` itself only when the Levi is ``-w0`` stable.
    """
    levi = sorted(set(levi))
    w0 = longest_element(system)
    wl = longest_element(system, levi)
    wp = w0 * wl.inverse()
    if wp * wl != w0:
        raise AuditFailure("w^p w_L != w0")
    if wp.inverse().phi() != nilradical_roots(system, levi):
        raise AuditFailure("w^p does not send Delta^+(u) to negative roots")
    if wp.phi() != nilradical_roots(system, dual_levi(system, levi)):
        raise AuditFailure("Phi(w^p) is not the nilradical of -w0(L)")
    return w0, wl, wp


def in_parabolic_quotient(w: WeylElement, levi: Iterable[int]) -> bool:
    """``w`` lies in ``W^p``: its inversion set avoids the Levi roots."""
    return w.phi() <= nilradical_roots(w.system, levi)


def coset_decompose(w: WeylElement, levi: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """Unique ``w = w_p * w^p`` with ``w_p`` in ``W_L`` and ``w^p`` in ``W^p``."""
    system = w.system
    levi = sorted(set(levi))
    for i in levi:
        system._check_index(i)
    wp_left = WeylElement.identity(system)
    rest = w
    while True:
        inv = rest.inverse()
        for i in levi:
            # left descent: rest^{-1}(alpha_i) < 0
            if inv.is_descent(i):
                s = WeylElement.simple(system, i)
                rest = s * rest
                wp_left = wp_left * s
                break
        else:
            break
    if wp_left * rest != w or wp_left.length + rest.length != w.length:
        raise AuditFailure("coset decomposition is not length additive")
    return wp_left, rest


# --- Kostant's characterization of inversion sets ---------------------------


def is_saturated(system: RootSystem, subset: Iterable[tuple[int, ...]]) -> bool:
    s = set(subset)
    for a in s:
        for b in s:
            c = tuple(x + y for x, y in zip(a, b))
            if system.is_positive_root(c) and c not in s:
                return False
    return True


def enumerate_group(system: RootSystem) -> list[WeylElement]:
    """All elements of W by breadth-first search over right multiplication."""
    e = WeylElement.identity(system)
    seen = {e.matrix: e}
    frontier = [e]
    gens = [WeylElement.simple(system, i) for i in range(1, system.rank + 1)]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                v = w * g
                if v.matrix not in seen:
                    seen[v.matrix] = v
                    nxt.append(v)
        frontier = nxt
    return list(seen.values())


@dataclass
class KostantReport:
    type_name: str
    group_order: int
    doubly_saturated: int
    injective: bool
    all_images_doubly_saturated: bool

    @property
    def bijection(self) -> bool:
        return (
            self.injective
            and self.all_images_doubly_saturated
            and self.doubly_saturated == self.group_order
        )


KOSTANT_RANK_GUARD = 4


def kostant_scan(family: str, rank: int) -> KostantReport:
    """Exhaustively check that ``w -> Phi_w`` hits every doubly saturated set once."""
    if rank > KOSTANT_RANK_GUARD:
        raise GuardExceeded(f"kostant_scan refuses rank {rank} > {KOSTANT_RANK_GUARD}")
    system = build_root_system(family, rank)
    pos = system.positive_roots
    images = set()
    ok = True
    group = enumerate_group(system)
    for w in group:
        p = w.phi()
        images.add(p)
        if not (is_saturated(system, p) and is_saturated(system, set(pos) - p)):
            ok = False
    count = 0
    n = len(pos)
    for mask in range(1 << n):
        sub = {pos[k] for k in range(n) if mask >> k & 1}
        if is_saturated(system, sub) and is_saturated(system, set(pos) - sub):
            count += 1
    return KostantReport(system.name, len(group), count, len(images) == len(group), ok)


# --- quantized matrix algebras ---------------------------------------------


def matrix_algebra_word(a: int, b: int) -> tuple[RootSystem, Word]:
    """Reduced word of the maximal element of ``W^p`` for the a x b matrices.

    Type ``A_{a+b-1}`` with the Levi omitting ``alpha_a``; the word is
    ``(a, a-1, ..., 1, a+1, a, ..., 2, ...)``, one descending run of
    length ``a`` per column.
    """
    if a < 1 or b < 1:
        raise InputError("matrix sizes must be positive")
    system = build_root_system("A", a + b - 1)
    word = tuple(i for j in range(b) for i in range(a + j, j, -1))
    return system, word


def all_reduced_words_up_to(system: RootSystem, max_length: int) -> list[Word]:
    """One reduced word per element of length at most ``max_length``."""
    return sorted(
        (w.reduced_word for w in enumerate_group(system) if w.length <= max_length),
        key=lambda wd: (len(wd), wd),
    )


def subsets(items: Sequence[int]):
    for k in range(len(items) + 1):
        yield from combinations(items, k)
