"""Exact integer matrices, Smith normal form, and modular linear systems.

Everything runs on arbitrary-precision Python integers; no modular shortcuts
inside the Smith reduction, so intermediate growth can never corrupt results.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> IntMatrix:
        r = len(rows)
        c = len(rows[0]) if rows else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(x for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row_list(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols : (i + 1) * self.cols]) for i in range(self.rows)]

    def mul(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            for j in range(other.cols):
                out.append(
                    sum(
                        self.entries[base + k] * other.entries[k * other.cols + j]
                        for k in range(self.cols)
                    )
                )
        return IntMatrix(self.rows, other.cols, tuple(out))

    def determinant(self) -> int:
        """Fraction-free Bareiss elimination; exact for any square matrix."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.row_list()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [str(x) for x in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> IntMatrix:
        return cls(int(data["rows"]), int(data["cols"]), tuple(int(x) for x in data["entries"]))


@dataclass(frozen=True)
class SmithDecomposition:
    u: IntMatrix
    s: IntMatrix
    v: IntMatrix

    def diagonal(self) -> list[int]:
        n = min(self.s.rows, self.s.cols)
        return [self.s.at(i, i) for i in range(n)]


def _swap_rows(m: list[list[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: list[list[int]], i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _smith_core(
    s: list[list[int]],
    u: list[list[int]] | None,
    v: list[list[int]] | None,
    rhs: list[int] | None,
) -> None:
    """In-place Smith reduction of s, mirroring row ops onto u/rhs and column
    ops onto v.  Pivot rule: smallest |value|, ties broken by (row, col)."""
    rows = len(s)
    cols = len(s[0]) if rows else 0
    t = 0
    while t < min(rows, cols):
        # deterministic pivot: minimal (|value|, i, j) over the active block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                val = s[i][j]
                if val:
                    key = (abs(val), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            _swap_rows(s, t, bi)
            if u is not None:
                _swap_rows(u, t, bi)
            if rhs is not None:
                rhs[t], rhs[bi] = rhs[bi], rhs[t]
        if bj != t:
            _swap_cols(s, t, bj)
            if v is not None:
                _swap_cols(v, t, bj)
        while True:
            if s[t][t] < 0:
                s[t] = [-x for x in s[t]]
                if u is not None:
                    u[t] = [-x for x in u[t]]
                if rhs is not None:
                    rhs[t] = -rhs[t]
            pivot = s[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if s[i][t]:
                    q = s[i][t] // pivot
                    if q:
                        s[i] = [a - q * b for a, b in zip(s[i], s[t])]
                        if u is not None:
                            u[i] = [a - q * b for a, b in zip(u[i], u[t])]
                        if rhs is not None:
                            rhs[i] -= q * rhs[t]
                    if s[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if s[t][j]:
                    q = s[t][j] // pivot
                    if q:
                        for row in s:
                            row[j] -= q * row[t]
                        if v is not None:
                            for row in v:
                                row[j] -= q * row[t]
                    if s[t][j]:
                        dirty = True
            if dirty:
                # smaller remainders appeared; reselect the pivot inside the block
                best = None
                for i in range(t, rows):
                    for j in range(t, cols):
                        val = s[i][j]
                        if val:
                            key = (abs(val), i, j)
                            if best is None or key < best:
                                best = key
                _, bi, bj = best
                if bi != t:
                    _swap_rows(s, t, bi)
                    if u is not None:
                        _swap_rows(u, t, bi)
                    if rhs is not None:
                        rhs[t], rhs[bi] = rhs[bi], rhs[t]
                if bj != t:
                    _swap_cols(s, t, bj)
                    if v is not None:
                        _swap_cols(v, t, bj)
                continue
            # divisibility sweep: the pivot must divide the remaining block
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if s[i][j] % pivot:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            s[t] = [a + b for a, b in zip(s[t], s[bad])]
            if u is not None:
                u[t] = [a + b for a, b in zip(u[t], u[bad])]
            if rhs is not None:
                rhs[t] += rhs[bad]
        t += 1


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """U*A*V = S with U, V unimodular and S = diag(d1 | d2 | ...), di >= 0.

    Deterministic for the fixed pivot rule documented in _smith_core.
    """
    s = a.row_list()
    u = IntMatrix.identity(a.rows).row_list()
    v = IntMatrix.identity(a.cols).row_list()
    _smith_core(s, u, v, None)
    return SmithDecomposition(
        u=IntMatrix.from_rows(u) if a.rows else IntMatrix.zeros(0, 0),
        s=IntMatrix.from_rows(s) if a.rows else IntMatrix.zeros(0, a.cols),
        v=IntMatrix.from_rows(v) if a.cols else IntMatrix.zeros(0, 0),
    )


@dataclass(frozen=True)
class ModSolutionSet:
    """All solutions of A*x = b (mod modulus).

    The set is {particular + sum t_i * gen_i : 0 <= t_i < period_i} mod modulus,
    and distinct parameter tuples give distinct vectors, so the number of
    solutions is the product of the periods.  particular is None when the
    system is inconsistent.
    """

    modulus: int
    particular: tuple[int, ...] | None
    kernel_basis: tuple[tuple[tuple[int, ...], int], ...]  # (generator, period)

    def is_empty(self) -> bool:
        return self.particular is None

    def count(self) -> int:
        if self.particular is None:
            return 0
        return prod(period for _, period in self.kernel_basis)

    def solutions(self, limit: int | None = None):
        """Deterministic (lexicographic in the parameter tuple) enumeration."""
        if self.particular is None:
            return
        n = len(self.particular)
        ranges = [range(period) for _, period in self.kernel_basis]
        emitted = 0
        for ts in itertools.product(*ranges):
            if limit is not None and emitted >= limit:
                return
            x = list(self.particular)
            for t, (gen, _) in zip(ts, self.kernel_basis):
                if t:
                    for i in range(n):
                        x[i] += t * gen[i]
            yield tuple(xi % self.modulus for xi in x)
            emitted += 1

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "particular": list(self.particular) if self.particular is not None else None,
            "kernel_basis": [
                {"generator": list(gen), "period": period}
                for gen, period in self.kernel_basis
            ],
            "count": self.count(),
        }


def _modinv(a: int, n: int) -> int:
    if n == 1:
        return 0
    g, x, _ = _xgcd(a % n, n)
    if g != 1:
        raise ValueError("not invertible")
    return x % n


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def solve_linear_mod(a: IntMatrix, b: list[int] | tuple[int, ...], modulus: int) -> ModSolutionSet:
    """Describe the full solution set of A*x = b (mod modulus) via the Smith
    normal form of A.  Only the column transform V is materialized; row
    operations are applied directly to b."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if len(b) != a.rows:
        raise ValueError("rhs length mismatch")
    n = modulus
    s = [[x % n for x in row] for row in a.row_list()]
    rhs = [x % n for x in b]
    v = IntMatrix.identity(a.cols).row_list()
    _smith_core(s, None, v, rhs)

    cols = a.cols
    rank = 0
    y_part = [0] * cols
    y_kernel: list[tuple[int, int]] = []  # (coordinate, period); generator = (n//period)*e_coord
    for i in range(min(a.rows, cols)):
        d = s[i][i]
        if d == 0:
            break
        rank += 1
        g = gcd(d, n)
        if rhs[i] % g:
            return ModSolutionSet(n, None, ())
        m = n // g
        y_part[i] = ((rhs[i] // g) * _modinv(d // g, m)) % m if m > 1 else 0
        if g > 1:
            y_kernel.append((i, g))
    for i in range(rank, a.rows):
        if rhs[i] % n:
            return ModSolutionSet(n, None, ())
    if n > 1:
        for j in range(rank, cols):
            y_kernel.append((j, n))

    def through_v(y: list[int]) -> tuple[int, ...]:
        return tuple(
            sum(v[i][j] * y[j] for j in range(cols) if y[j]) % n for i in range(cols)
        )

    particular = through_v(y_part)
    kernel = []
    for coord, period in y_kernel:
        y = [0] * cols
        y[coord] = n // period
        kernel.append((through_v(y), period))
    return ModSolutionSet(n, particular, tuple(kernel))
