"""The skew forms attached to a reduced word and the compatible pair.

Coordinates: a vector indexed by positions ``0..r-1`` of the word. On
the generator side ("z-coordinates") position ``n`` is ``z_{s,t}``; on
the minor side ("M-coordinates") it is ``M_{s,t} = z_{s,1} ... z_{s,t}``.
The change of basis ``A`` has row ``(c, d)`` equal to the z-exponent of
``M_{c,d}``, so a vector ``m`` of M-exponents has z-exponents ``A^T m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import AuditFailure, InputError
from .intmat import det, freeze, integer_kernel, is_skew, matmul, matvec, rank, transpose
from .weyl import BetaGrid


@dataclass(frozen=True)
class SkewForm:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", freeze(self.entries))
        if not is_skew(self.entries):
            raise InputError("matrix is not skew-symmetric")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def apply(self, v) -> list[int]:
        return matvec(self.entries, v)

    def pair(self, x, y) -> int:
        return sum(xi * yi for xi, yi in zip(x, self.apply(y)))

    def kernel(self) -> list[list[int]]:
        return integer_kernel(self.entries, self.dim)

    @cached_property
    def rank(self) -> int:
        return rank(self.entries)

    @cached_property
    def det(self) -> int:
        return det(self.entries)

    def to_json(self):
        return [list(row) for row in self.entries]


def build_L0(grid: BetaGrid) -> SkewForm:
    """``L0[i][j] = (beta_i, beta_j)`` for ``i < j``, skew completed."""
    r = grid.r
    form = grid.system.form_roots
    m = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            v = form(grid.betas[i], grid.betas[j])
            m[i][j] = v
            m[j][i] = -v
    return SkewForm(m)


def change_of_basis(grid: BetaGrid) -> tuple[tuple[int, ...], ...]:
    """``A[(c,d),(s,t)] = 1`` iff ``s = c`` and ``t <= d``."""
    labels = grid.labels
    return tuple(
        tuple(int(s == c and t <= d) for (s, t) in labels) for (c, d) in labels
    )


def build_A_and_Lbar(grid: BetaGrid, L0: SkewForm | None = None):
    """Return ``(A, Lbar)`` with ``Lbar = A L0 A^T``, the form on the minors."""
    if L0 is None:
        L0 = build_L0(grid)
    if L0.dim != grid.r:
        raise InputError("L0 does not match the grid")
    a = change_of_basis(grid)
    lbar = matmul(matmul(a, L0.entries), transpose(a))
    return a, SkewForm(lbar)


def minor_z_exponent(grid: BetaGrid, s: int, t: int) -> list[int]:
    """z-exponent vector of ``M_{s,t}``; ``t = 0`` gives the zero vector."""
    v = [0] * grid.r
    for k in range(1, t + 1):
        v[grid.index[(s, k)]] = 1
    return v


def covariant_z_exponent(grid: BetaGrid, s: int) -> list[int]:
    """z-exponent vector of ``C_s = z_{s,1} ... z_{s,s_r}`` (zero if s unused)."""
    return minor_z_exponent(grid, s, grid.counts.get(s, 0))


def to_z(a, m) -> list[int]:
    """M-exponents to z-exponents: ``A^T m``."""
    return matvec(transpose(a), m)


@dataclass
class CompatiblePair:
    """The exchange columns ``B_{s,t}`` (M-coordinates) with their targets.

    ``columns[k]`` is the label ``(s, t)`` of column ``k``; ``L @ B[:, k]``
    equals ``targets[k]`` times the unit vector at ``(s, t)``.
    """

    labels: tuple[tuple[int, int], ...]
    columns: list[tuple[int, int]]
    B: list[list[int]]  # r x k, one column per exchangeable label
    targets: list[int]
    F: dict[tuple[int, int], list[int]] = field(repr=False)

    def column(self, k: int) -> list[int]:
        return [row[k] for row in self.B]


def f_vector(grid: BetaGrid, s: int, t: int) -> list[int]:
    """M-exponents of ``F(s,t) = M_{s,t} M_{s,t-1} prod_{a_js<0} M_{j,pbar}^{a_js}``."""
    v = [0] * grid.r
    v[grid.index[(s, t)]] += 1
    if t > 1:
        v[grid.index[(s, t - 1)]] += 1
    a = grid.system.cartan
    for j in range(1, grid.system.rank + 1):
        ajs = a[j - 1][s - 1]
        if j == s or ajs >= 0:
            continue
        p = grid.pbar(j, s, t)
        if p:
            v[grid.index[(j, p)]] += ajs
    return v


def compatible_pair(grid: BetaGrid, L0: SkewForm | None = None) -> CompatiblePair:
    """Build ``B_{s,t} = F(s,t) - F(s,t+1)`` and check ``Lbar B = 2 d_s e_{s,t}``."""
    if grid.r == 0:
        raise InputError("empty word")
    _, lbar = build_A_and_Lbar(grid, L0)
    F = {lab: f_vector(grid, *lab) for lab in grid.labels}
    columns = []
    cols = []
    targets = []
    for (s, t) in grid.labels:
        if t < grid.counts[s]:
            b = [x - y for x, y in zip(F[(s, t)], F[(s, t + 1)])]
            columns.append((s, t))
            cols.append(b)
            d = grid.system.symmetrizers[s - 1]
            targets.append(2 * d)
            image = lbar.apply(b)
            expected = [0] * grid.r
            expected[grid.index[(s, t)]] = 2 * d
            if image != expected:
                raise AuditFailure(f"Lbar * B_{s},{t} = {image}, expected {expected}")
    B = [[c[n] for c in cols] for n in range(grid.r)]
    return CompatiblePair(grid.labels, columns, B, targets, F)


@dataclass
class ColumnReduction:
    """``Lbar P = [[D, Y], [0, Z]]`` after reordering rows.

    ``P`` has the exchange columns ``B_{s,t}`` first and the unit vectors
    at the first occurrences ``(c, 1)`` last; ``B_{s,t}`` has its last
    nonzero entry at ``(s, t+1)``, so ``P`` is unimodular. Rows are put
    in the order: exchangeable labels ``(s, t)``, ``t < s_r``, then the
    frozen labels ``(c, c_r)``. ``D`` is diagonal with entries
    ``2 d_s`` (all 2 in the simply-laced case).
    """

    P: list[list[int]]
    Y: list[list[int]]
    Z: list[list[int]]
    r0: int
    diagonal: list[int]
    det_L: int
    det_Z: int
    det_P: int

    @property
    def diagonal_product(self) -> int:
        out = 1
        for d in self.diagonal:
            out *= d
        return out

    @property
    def sign(self) -> int:
        """``det L = sign * prod(diagonal) * det Z`` (0 when both vanish)."""
        rhs = self.diagonal_product * self.det_Z
        if rhs == 0:
            return 0 if self.det_L == 0 else None
        q = Fraction(self.det_L, rhs)
        return int(q) if q in (1, -1) else None

    @property
    def center_trivial(self) -> bool:
        return self.det_Z != 0


def column_reduce(lbar: SkewForm, grid: BetaGrid, pair: CompatiblePair | None = None) -> ColumnReduction:
    """Reduce ``Lbar`` with the exchange columns to the block form."""
    if pair is None:
        pair = compatible_pair(grid)
    r = grid.r
    frozen = [grid.index[(c, grid.counts[c])] for c in grid.support]
    firsts = [grid.index[(c, 1)] for c in grid.support]
    mutable = [grid.index[lab] for lab in pair.columns]
    cols = [pair.column(k) for k in range(len(pair.columns))]
    for n in firsts:
        e = [0] * r
        e[n] = 1
        cols.append(e)
    P = transpose(cols) if cols else []
    LP = matmul(lbar.entries, P)
    order = mutable + frozen
    rows = [LP[n] for n in order]
    k = len(mutable)
    D = [rows[i][i] for i in range(k)]
    for i in range(k):
        for j in range(k):
            if rows[i][j] != (D[i] if i == j else 0):
                raise AuditFailure("exchange columns do not give a diagonal block")
    for i in range(k, r):
        if any(rows[i][j] for j in range(k)):
            raise AuditFailure("lower-left block of the column reduction is not zero")
    Y = [row[k:] for row in rows[:k]]
    Z = [row[k:] for row in rows[k:]]
    det_p = det(P)
    if det_p not in (1, -1):
        raise AuditFailure(f"column reduction basis change has determinant {det_p}")
    return ColumnReduction(P, Y, Z, len(frozen), D, lbar.det, det(Z), det_p)
