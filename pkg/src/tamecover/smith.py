"""Integer matrices and Smith normal form over arbitrary-precision integers.

The decomposition returns unimodular ``U``, ``V`` with ``U @ M @ V = D``,
``D`` diagonal with a nonnegative divisibility chain d1 | d2 | ...  Pivots
are chosen as the smallest nonzero absolute value, ties broken by lowest
row index then lowest column index, so ``U`` and ``V`` are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class IntMatrix:
    """Immutable rectangular integer matrix (arbitrary precision)."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @staticmethod
    def diagonal(values, rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        values = list(values)
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        return IntMatrix(tuple(tuple(values[i] if i == j and i < len(values) else 0
                                     for j in range(cols)) for i in range(rows)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return IntMatrix(tuple(
            tuple(sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                  for j in range(other.cols))
            for i in range(self.rows)))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else self

    def diagonal_values(self) -> tuple:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def is_diagonal(self) -> bool:
        return all(self.entries[i][j] == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def determinant(self) -> int:
        """Fraction-free (Bareiss) determinant of a square matrix."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and self.determinant() in (1, -1)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [list(r) for r in self.entries]}

    @staticmethod
    def from_json(data: dict) -> "IntMatrix":
        m = IntMatrix(tuple(tuple(r) for r in data["entries"]))
        if m.rows != data["rows"] or (m.rows and m.cols != data["cols"]):
            raise ValueError("inconsistent matrix dimensions")
        return m

    def __repr__(self):
        return f"IntMatrix({list(map(list, self.entries))})"


class _Worker:
    """Mutable state for the SNF reduction, tracking U, V and V^-1."""

    def __init__(self, m: IntMatrix):
        self.a = [list(r) for r in m.entries]
        self.rows = m.rows
        self.cols = m.cols
        self.u = [[int(i == j) for j in range(self.rows)] for i in range(self.rows)]
        self.v = [[int(i == j) for j in range(self.cols)] for i in range(self.cols)]
        self.vinv = [[int(i == j) for j in range(self.cols)] for i in range(self.cols)]

    def swap_rows(self, i, j):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i, j):
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            for row in self.v:
                row[i], row[j] = row[j], row[i]
            self.vinv[i], self.vinv[j] = self.vinv[j], self.vinv[i]

    def add_row(self, dst, src, q):
        # row_dst += q * row_src
        if q:
            self.a[dst] = [x + q * y for x, y in zip(self.a[dst], self.a[src])]
            self.u[dst] = [x + q * y for x, y in zip(self.u[dst], self.u[src])]

    def add_col(self, dst, src, q):
        # col_dst += q * col_src on A and V; the inverse row op on V^-1
        if q:
            for row in self.a:
                row[dst] += q * row[src]
            for row in self.v:
                row[dst] += q * row[src]
            self.vinv[src] = [x - q * y for x, y in zip(self.vinv[src], self.vinv[dst])]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]

    def find_pivot(self, t):
        """Smallest |entry| in the trailing block; ties to low row, then column."""
        best = None
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                x = abs(self.a[i][j])
                if x and (best is None or x < best[0]):
                    best = (x, i, j)
        return best

    def clear_position(self, t):
        """Zero out row and column t beyond the diagonal, keeping a pivot."""
        piv = self.find_pivot(t)
        if piv is None:
            return False
        self.swap_rows(t, piv[1])
        self.swap_cols(t, piv[2])
        while True:
            for i in range(t + 1, self.rows):
                if self.a[i][t]:
                    self.add_row(i, t, -(self.a[i][t] // self.a[t][t]))
            for j in range(t + 1, self.cols):
                if self.a[t][j]:
                    self.add_col(j, t, -(self.a[t][j] // self.a[t][t]))
            residue = next((("row", i) for i in range(t + 1, self.rows) if self.a[i][t]),
                           None) or next((("col", j) for j in range(t + 1, self.cols)
                                          if self.a[t][j]), None)
            if residue is None:
                break
            if residue[0] == "row":
                self.swap_rows(t, residue[1])
            else:
                self.swap_cols(t, residue[1])
        if self.a[t][t] < 0:
            self.negate_row(t)
        return True


def _smith_worker(m: IntMatrix) -> _Worker:
    w = _Worker(m)
    limit = min(w.rows, w.cols)
    for _ in range(10000):  # far above any realistic merge count
        for t in range(limit):
            if not w.clear_position(t):
                break
        # an ascending pass of clear_position leaves the matrix diagonal
        violation = None
        for t in range(limit - 1):
            a, b = w.a[t][t], w.a[t + 1][t + 1]
            if (a == 0 and b != 0) or (a != 0 and b % a != 0):
                violation = t
                break
        if violation is None:
            return w
        t = violation
        if w.a[t][t] == 0:
            w.swap_rows(t, t + 1)
            w.swap_cols(t, t + 1)
        else:
            # diag(a, b) -> diag(gcd, lcm) once re-cleared
            w.add_col(t, t + 1, 1)
    raise RuntimeError("Smith reduction failed to converge")  # pragma: no cover


def smith_normal_form(m) -> tuple:
    """Return ``(D, U, V)`` with ``U @ m @ V = D`` in Smith normal form.

    Total function: any integer matrix is accepted.  ``D`` has nonnegative
    diagonal with d1 | d2 | ...; ``U`` and ``V`` are unimodular.
    """
    d, u, v, _ = smith_with_inverse(m)
    return d, u, v


def smith_with_inverse(m) -> tuple:
    """Like :func:`smith_normal_form` but also returning ``V^-1``."""
    if not isinstance(m, IntMatrix):
        m = IntMatrix(tuple(tuple(r) for r in m))
    w = _smith_worker(m)
    d = IntMatrix(tuple(tuple(row) for row in w.a))
    u = IntMatrix(tuple(tuple(row) for row in w.u))
    v = IntMatrix(tuple(tuple(row) for row in w.v))
    vinv = IntMatrix(tuple(tuple(row) for row in w.vinv))
    return d, u, v, vinv


def invariant_factors(m) -> tuple:
    """Nonzero diagonal entries of the Smith form, in order."""
    d, _, _ = smith_normal_form(m)
    return tuple(x for x in d.diagonal_values() if x != 0)


def invariant_factors_by_minors(m: IntMatrix) -> tuple:
    """Invariant factors via gcds of k x k minors (independent oracle)."""
    from itertools import combinations
    rows, cols = m.rows, m.cols
    gcds = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rsel in combinations(range(rows), k):
            for csel in combinations(range(cols), k):
                sub = IntMatrix(tuple(tuple(m.entries[i][j] for j in csel) for i in rsel))
                g = gcd(g, sub.determinant())
        gcds.append(g)
        if g == 0:
            break
    factors = []
    for k in range(1, len(gcds)):
        if gcds[k] == 0:
            break
        factors.append(gcds[k] // gcds[k - 1])
    return tuple(factors)
