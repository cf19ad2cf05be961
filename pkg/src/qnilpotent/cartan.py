"""Finite-type Cartan data: roots, fundamental weights, the invariant form.

Conventions (Bourbaki numbering of the simple roots):

* ``cartan[i][j] = <alpha_i^vee, alpha_j>`` so ``(alpha_i, alpha_j) = d_i a_ij``;
* short roots have squared length 2, so ``d_i`` is 1, 2 or 3;
* roots are stored in simple-root coordinates, weights in
  fundamental-weight coordinates. The root ``alpha_j`` has weight
  coordinates given by column ``j`` of the Cartan matrix.

Indices of simple roots are 1-based in every public function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Union

from .errors import InputError
from .intmat import inverse_rational

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def parse_type(text: str) -> tuple[str, int]:
    """Parse a type string like ``"A5"`` or ``"g2"``."""
    m = _TYPE_RE.match(text)
    if not m:
        raise InputError(f"cannot parse Lie type {text!r}; expected e.g. 'A3', 'E6'")
    family, rank = m.group(1).upper(), int(m.group(2))
    _check_type(family, rank)
    return family, rank


def _check_type(family: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)
    if not ok:
        raise InputError(f"{family}{rank} is not a finite type")


def _edges(family: str, n: int) -> list[tuple[int, int]]:
    if family in "ABCF" or family == "G":
        return [(i, i + 1) for i in range(1, n)]
    if family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    # E_n, Bourbaki: 1-3-4-5-...-n with 2 attached to 4
    return [(1, 3), (2, 4), (3, 4)] + [(i, i + 1) for i in range(4, n)]


def _symmetrizers(family: str, n: int) -> list[int]:
    if family == "B":
        return [2] * (n - 1) + [1]
    if family == "C":
        return [1] * (n - 1) + [2]
    if family == "F":
        return [2, 2, 1, 1]
    if family == "G":
        return [1, 3]
    return [1] * n


def _cartan(family: str, n: int, d: list[int]) -> list[list[int]]:
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]
    for i, j in _edges(family, n):
        i, j = i - 1, j - 1
        # (alpha_i, alpha_j) = -max(d_i, d_j) on a single, double or triple bond
        ip = -max(d[i], d[j])
        a[i][j] = ip // d[i]
        a[j][i] = ip // d[j]
    return a


@dataclass(frozen=True, eq=False)
class RootSystem:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    @cached_property
    def _root_index(self) -> dict[tuple[int, ...], int]:
        return {r: k for k, r in enumerate(self.positive_roots)}

    @cached_property
    def _inverse_cartan(self) -> list[list[Fraction]]:
        return inverse_rational(self.cartan)

    @cached_property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Invariant form on simple-root coordinates: ``G_ij = d_i a_ij``."""
        n = self.rank
        return tuple(tuple(self.symmetrizers[i] * self.cartan[i][j] for j in range(n)) for i in range(n))

    # --- coordinates -------------------------------------------------

    def simple_root(self, i: int) -> RootVector:
        self._check_index(i)
        return RootVector(self, tuple(int(k == i - 1) for k in range(self.rank)))

    def fundamental_weight(self, i: int) -> Weight:
        self._check_index(i)
        return Weight(self, tuple(int(k == i - 1) for k in range(self.rank)))

    @property
    def simple_roots(self) -> list[RootVector]:
        return [self.simple_root(i) for i in range(1, self.rank + 1)]

    @property
    def fundamental_weights(self) -> list[Weight]:
        return [self.fundamental_weight(i) for i in range(1, self.rank + 1)]

    def root_to_weight(self, y) -> tuple[int, ...]:
        """Weight coordinates of a vector given in simple-root coordinates."""
        a = self.cartan
        return tuple(sum(a[i][j] * y[j] for j in range(self.rank)) for i in range(self.rank))

    def weight_to_root(self, x) -> tuple[Fraction, ...]:
        inv = self._inverse_cartan
        return tuple(sum(inv[i][j] * x[j] for j in range(self.rank)) for i in range(self.rank))

    def is_root(self, y) -> bool:
        y = tuple(y)
        return y in self._root_index or tuple(-c for c in y) in self._root_index

    def is_positive_root(self, y) -> bool:
        return tuple(y) in self._root_index

    def root_index(self, y) -> int:
        return self._root_index[tuple(y)]

    # --- the invariant form ------------------------------------------

    def form_roots(self, y1, y2) -> int:
        g = self.gram
        n = self.rank
        return sum(y1[i] * g[i][j] * y2[j] for i in range(n) if y1[i] for j in range(n) if y2[j])

    def form_weight_root(self, x, y) -> int:
        """``(x, y)`` for a weight ``x`` (weight coords) and root-lattice ``y``."""
        d = self.symmetrizers
        return sum(x[j] * d[j] * y[j] for j in range(self.rank))

    def form_weights(self, x1, x2) -> Fraction:
        # (Lambda_i, Lambda_j) = (A^{-1})_ij d_i
        inv = self._inverse_cartan
        d = self.symmetrizers
        n = self.rank
        return sum(
            (x1[i] * x2[j] * inv[i][j] * d[i] for i in range(n) if x1[i] for j in range(n) if x2[j]),
            Fraction(0),
        )

    def inner_product(self, x: Union["Weight", "RootVector"], y: Union["Weight", "RootVector"]) -> Fraction:
        """The invariant symmetric form, ``(alpha_i, alpha_j) = d_i a_ij``."""
        for v in (x, y):
            if not isinstance(v, (Weight, RootVector)):
                raise InputError(f"expected Weight or RootVector, got {type(v).__name__}")
            if v.system is not self:
                raise InputError("vectors belong to a different root system")
        if isinstance(x, RootVector) and isinstance(y, RootVector):
            return Fraction(self.form_roots(x.coords, y.coords))
        if isinstance(x, Weight) and isinstance(y, RootVector):
            return Fraction(self.form_weight_root(x.coords, y.coords))
        if isinstance(x, RootVector) and isinstance(y, Weight):
            return Fraction(self.form_weight_root(y.coords, x.coords))
        return self.form_weights(x.coords, y.coords)

    def coroot_pairing(self, beta, x) -> int:
        """``<beta^vee, x> = 2(beta, x)/(beta, beta)`` for a root ``beta``, weight ``x``."""
        num = 2 * self.form_weight_root(x, beta)
        den = self.form_roots(beta, beta)
        if num % den:
            raise ArithmeticError("non-integral coroot pairing")
        return num // den

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise InputError(f"simple root index {i} out of range 1..{self.rank}")

    # --- reflections on coordinate tuples -----------------------------

    def reflect_root(self, i: int, y) -> tuple[int, ...]:
        """``s_i`` on simple-root coordinates (``i`` 1-based)."""
        k = i - 1
        c = sum(self.cartan[k][j] * y[j] for j in range(self.rank))
        out = list(y)
        out[k] -= c
        return tuple(out)

    def reflect_weight(self, i: int, x) -> tuple[int, ...]:
        """``s_i`` on fundamental-weight coordinates (``i`` 1-based)."""
        k = i - 1
        c = x[k]
        if not c:
            return tuple(x)
        return tuple(x[j] - c * self.cartan[j][k] for j in range(self.rank))


@dataclass(frozen=True)
class Weight:
    """A weight in fundamental-weight coordinates."""

    system: RootSystem = field(repr=False, compare=True)
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def root_coords(self) -> tuple[Fraction, ...]:
        return self.system.weight_to_root(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.system, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.system, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(self.system, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "Weight":
        return Weight(self.system, tuple(k * a for a in self.coords))


@dataclass(frozen=True)
class RootVector:
    """An element of the root lattice in simple-root coordinates."""

    system: RootSystem = field(repr=False, compare=True)
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords) and any(self.coords)

    def to_weight(self) -> Weight:
        return Weight(self.system, self.system.root_to_weight(self.coords))

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(self.system, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        return RootVector(self.system, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RootVector":
        return RootVector(self.system, tuple(-a for a in self.coords))


def _positive_roots(rank: int, reflect) -> tuple[tuple[int, ...], ...]:
    simple = [tuple(int(k == i) for k in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for y in frontier:
            for i in range(1, rank + 1):
                z = reflect(i, y)
                if all(c >= 0 for c in z) and z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return tuple(sorted(seen, key=lambda y: (sum(y), tuple(-c for c in y))))


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Cartan data for a finite type, positive roots by reflection closure."""
    family = family.upper()
    _check_type(family, rank)
    d = _symmetrizers(family, rank)
    a = _cartan(family, rank, d)
    cartan = tuple(tuple(row) for row in a)

    def reflect(i, y):
        k = i - 1
        c = sum(cartan[k][j] * y[j] for j in range(rank))
        out = list(y)
        out[k] -= c
        return tuple(out)

    return RootSystem(family, rank, cartan, tuple(d), _positive_roots(rank, reflect))


def root_system(type_string: str) -> RootSystem:
    return build_root_system(*parse_type(type_string))


EXPECTED_POSITIVE_ROOTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def all_types(max_rank: int) -> list[tuple[str, int]]:
    """Every finite type up to the given rank (B2 and C2 both listed)."""
    out = []
    for n in range(1, max_rank + 1):
        for fam in "ABCDEFG":
            try:
                _check_type(fam, n)
            except InputError:
                continue
            out.append((fam, n))
    return out


def fz_identity_check(system: RootSystem, i: int) -> Weight:
    """``(s_i + 1)Lambda_i + sum_{j != i} a_ji Lambda_j``; always the zero weight."""
    system._check_index(i)
    lam = system.fundamental_weight(i).coords
    total = [a + b for a, b in zip(system.reflect_weight(i, lam), lam)]
    for j in range(1, system.rank + 1):
        if j != i:
            total[j - 1] += system.cartan[j - 1][i - 1]
    return Weight(system, tuple(total))
