"""Exact linear algebra over the integers and rationals.

Matrices are lists (or tuples) of rows of Python ints. Every routine is
exact; nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> list[list[int]]:
    return [[0] * n for _ in range(m)]


def transpose(a: Matrix) -> list[list[int]]:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Matrix, b: Matrix) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def freeze(a: Matrix) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in a)


def is_skew(a: Matrix) -> bool:
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == -a[j][i] for i in range(n) for j in range(i, n)
    )


def det(a: Matrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank(a: Matrix) -> int:
    """Rank over the rationals (fraction-free elimination)."""
    m = [list(row) for row in a if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(r + 1, len(m)):
            f = m[i][col]
            if f:
                m[i] = [p * x - f * y for x, y in zip(m[i], m[r])]
                g = 0
                for x in m[i]:
                    g = gcd(g, x)
                if g > 1:
                    m[i] = [x // g for x in m[i]]
        r += 1
        if r == len(m):
            break
    return r


def echelon_with_transform(rows: Matrix) -> tuple[list[list[int]], list[list[int]]]:
    """Integer row echelon form E together with a unimodular U, U*rows = E.

    Only unimodular row operations are used (swaps, negations, adding
    integer multiples), so the nonzero rows of E are a basis of the row
    lattice and the rows of U paired with zero rows of E are a basis of
    the left kernel lattice.
    """
    e = [list(r) for r in rows]
    n = len(e)
    u = identity(n)
    ncols = len(e[0]) if e else 0
    r = 0
    for col in range(ncols):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if e[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(e[i][col]), i))
            if piv != r:
                e[r], e[piv] = e[piv], e[r]
                u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, n):
                if e[i][col]:
                    q = e[i][col] // e[r][col]
                    e[i] = [x - q * y for x, y in zip(e[i], e[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if e[i][col]:
                        done = False
            if done:
                break
        if any(e[i][col] for i in range(r, n)):
            if e[r][col] < 0:
                e[r] = [-x for x in e[r]]
                u[r] = [-x for x in u[r]]
            r += 1
    return e, u


def hnf(rows: Matrix) -> list[list[int]]:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows: positive pivots, entries above each pivot
    reduced into ``[0, pivot)``. The result depends only on the lattice.
    """
    if not rows:
        return []
    e, _ = echelon_with_transform(rows)
    basis = [row for row in e if any(row)]
    for k, row in enumerate(basis):
        p = next(j for j, x in enumerate(row) if x)
        for i in range(k):
            q = basis[i][p] // row[p]
            if q:
                basis[i] = [x - q * y for x, y in zip(basis[i], row)]
    return basis


def integer_kernel(a: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Canonical basis of the lattice {x in Z^n : a x = 0}.

    The basis is saturated (it spans kernel ∩ Z^n, not a sublattice)
    and returned in Hermite normal form.
    """
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if n == 0:
        return []
    if not a:
        return identity(n)
    t = transpose(a)
    e, u = echelon_with_transform(t)
    kernel = [u[i] for i in range(n) if not any(e[i])]
    return hnf(kernel)


def in_lattice(basis_hnf: Matrix, v: Sequence[int]) -> bool:
    """Membership of ``v`` in the lattice whose HNF basis is given."""
    w = list(v)
    for row in basis_hnf:
        p = next(j for j, x in enumerate(row) if x)
        if w[p] % row[p]:
            return False
        q = w[p] // row[p]
        if q:
            w = [x - q * y for x, y in zip(w, row)]
    return not any(w)


def solve_integer(a: Matrix, b: Sequence[int]) -> list[int] | None:
    """Some integer solution of a x = b, or None if there is none."""
    m = len(a)
    n = len(a[0]) if a else 0
    if m == 0:
        return [0] * n
    e, u = echelon_with_transform(transpose(a))
    # a * u^T = e^T; solve e^T y = b row-pivot by row-pivot.
    residual = list(b)
    y = [0] * n
    for k, row in enumerate(e):
        if not any(row):
            continue
        p = next(j for j, x in enumerate(row) if x)
        if residual[p] % row[p]:
            return None
        y[k] = residual[p] // row[p]
        if y[k]:
            residual = [x - y[k] * z for x, z in zip(residual, row)]
    if any(residual):
        return None
    return [sum(u[k][j] * y[k] for k in range(n)) for j in range(n)]


def solve_rational(a: Matrix, b: Sequence[int | Fraction]) -> list[Fraction] | None:
    """Some rational solution of a x = b (free variables set to 0)."""
    m = len(a)
    n = len(a[0]) if a else 0
    aug = [[Fraction(x) for x in a[i]] + [Fraction(b[i])] for i in range(m)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][col]
        aug[r] = [x / p for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if any(aug[i][n] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x


def inverse_rational(a: Matrix) -> list[list[Fraction]]:
    n = len(a)
    aug = [[Fraction(x) for x in a[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def smith_invariants(a: Matrix) -> list[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    out = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = m[t][t]
            clean = True
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // p
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                    if m[i][t]:
                        clean = False
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // p
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j]:
                        clean = False
            if clean:
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                m[t] = [x + y for x, y in zip(m[t], m[bad[0]])]
                clean = False
            entries = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols)
                       if m[i][j] and (i == t or j == t)]
            _, pi, pj = min(entries)
            m[t], m[pi] = m[pi], m[t]
            for row in m:
                row[t], row[pj] = row[pj], row[t]
        out.append(abs(m[t][t]))
        t += 1
    return out
