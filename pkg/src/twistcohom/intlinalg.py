"""Exact integer matrices, Smith normal form, kernels and quotient invariants.

Everything here works on Python ints, so there is no overflow and no
floating point anywhere.  Matrices are small and dense (a few hundred rows
at most), which is why a straightforward pivoting Smith reduction is enough.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SubgroupNotContained

Vector = tuple[int, ...]


class IntMatrix:
    """Immutable dense integer matrix stored as a tuple of row tuples."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = [operator.index(x) for x in entries]
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self._data = tuple(tuple(entries[i * cols:(i + 1) * cols]) for i in range(rows))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty row list")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def _wrap(cls, data: Sequence[Sequence[int]], rows: int, cols: int) -> "IntMatrix":
        # Trusted fast path: no validation.
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = tuple(tuple(r) for r in data)
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls._wrap([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls._wrap([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        return cls._wrap([[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    # -- access ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(x for r in self._data for x in r)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})" if self.rows else f"IntMatrix.zeros(0, {self.cols})"

    # -- arithmetic -----------------------------------------------------

    def _check_same_shape(self, other: "IntMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix._wrap(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            self.rows, self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix._wrap(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            self.rows, self.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix._wrap([[-a for a in r] for r in self._data], self.rows, self.cols)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix._wrap([[k * a for a in r] for r in self._data], self.rows, self.cols)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols_t = list(zip(*other._data)) if other.rows else [()] * other.cols
            return IntMatrix._wrap(
                [[sum(map(operator.mul, r, c)) for c in cols_t] for r in self._data],
                self.rows, other.cols,
            )
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ValueError(f"cannot apply {self.shape} matrix to vector of length {len(vec)}")
        return tuple(sum(map(operator.mul, r, vec)) for r in self._data)

    def transpose(self) -> "IntMatrix":
        if not self.rows:
            return IntMatrix.zeros(self.cols, 0)
        return IntMatrix._wrap(list(zip(*self._data)), self.cols, self.rows)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def det(self) -> int:
        """Determinant via fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = [list(r) for r in self._data]
        sign, prev = 1, 1
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
        return sign * a[n - 1][n - 1] if n else 1

    def inverse(self) -> "IntMatrix":
        """Inverse over the integers; raises ValueError unless det is +-1."""
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
               for i, r in enumerate(self._data)]
        for k in range(n):
            piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[k], aug[piv] = aug[piv], aug[k]
            p = aug[k][k]
            aug[k] = [x / p for x in aug[k]]
            for i in range(n):
                if i != k and aug[i][k] != 0:
                    f = aug[i][k]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
        out = []
        for r in aug:
            tail = r[n:]
            if any(x.denominator != 1 for x in tail):
                raise ValueError("matrix is not invertible over the integers")
            out.append([int(x) for x in tail])
        return IntMatrix._wrap(out, n, n)


# -- Smith normal form -----------------------------------------------------


@dataclass(frozen=True)
class SnfResult:
    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d[i, i] for i in range(min(self.d.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)


def _smith(a: list[list[int]], nrows: int, ncols: int, track_u: bool, track_v: bool):
    """In-place Smith reduction of the row lists ``a``.

    Returns (a, U, V) with U·A·V = D.  U (or V) is None when not tracked;
    skipping U matters because the relator systems are tall.
    """
    U = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if track_u else None
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)] if track_v else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        if V is not None:
            for r in V:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q, start):
        # row[dst] -= q * row[src]
        rd, rs = a[dst], a[src]
        for k in range(start, ncols):
            if rs[k]:
                rd[k] -= q * rs[k]
        if U is not None:
            ud, us = U[dst], U[src]
            for k in range(nrows):
                if us[k]:
                    ud[k] -= q * us[k]

    def add_col(dst, src, q, start):
        # col[dst] -= q * col[src]
        for r in range(start, nrows):
            row = a[r]
            if row[src]:
                row[dst] -= q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] -= q * row[src]

    t = 0
    while t < min(nrows, ncols):
        # Pivot: smallest nonzero absolute value in the trailing block.
        best = None
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)

        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                x = a[i][t]
                if x:
                    add_row(i, t, x // p, t)
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, ncols):
                x = a[t][j]
                if x:
                    add_col(j, t, x // p, t)
                    if a[t][j]:
                        clean = False
            if not clean:
                # Remainders left behind are smaller than |p|; bring the smallest up.
                best = (abs(p), t, t)
                for i in range(t + 1, nrows):
                    x = a[i][t]
                    if x and abs(x) < best[0]:
                        best = (abs(x), i, t)
                for j in range(t + 1, ncols):
                    x = a[t][j]
                    if x and abs(x) < best[0]:
                        best = (abs(x), t, j)
                if best[1] != t:
                    swap_rows(t, best[1])
                if best[2] != t:
                    swap_cols(t, best[2])
                continue
            # Row and column are clear; enforce divisibility on the rest.
            bad = None
            for i in range(t + 1, nrows):
                row = a[i]
                for j in range(t + 1, ncols):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, -1, t)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        t += 1
    return a, U, V


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form: returns D, U, V with U·m·V = D.

    D is diagonal with non-negative entries d1 | d2 | ...; U and V are
    unimodular.  Empty matrices give empty factors.
    """
    a = m.tolist()
    d, U, V = _smith(a, m.rows, m.cols, True, True)
    return SnfResult(
        IntMatrix._wrap(d, m.rows, m.cols),
        IntMatrix._wrap(U, m.rows, m.rows),
        IntMatrix._wrap(V, m.cols, m.cols),
    )


def rank(m: IntMatrix) -> int:
    d, _, _ = _smith(m.tolist(), m.rows, m.cols, False, False)
    return sum(1 for i in range(min(m.rows, m.cols)) if d[i][i])


def kernel_basis(m: IntMatrix) -> list[Vector]:
    """A Z-basis of {x : m·x = 0}, read off from the column transform of the SNF."""
    d, _, V = _smith(m.tolist(), m.rows, m.cols, False, True)
    r = sum(1 for i in range(min(m.rows, m.cols)) if d[i][i])
    return [tuple(row[j] for row in V) for j in range(r, m.cols)]


@dataclass(frozen=True)
class AbelianInvariants:
    """Rank plus torsion coefficients (each >= 2, each dividing the next)."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        t = tuple(self.torsion)
        if any(x < 2 for x in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not an invariant-factor chain")
        object.__setattr__(self, "torsion", t)

    def __str__(self):
        parts = ["Z"] * min(self.rank, 1)
        if self.rank > 1:
            parts = [f"Z^{self.rank}"]
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class QuotientDecomposition:
    invariants: AbelianInvariants
    coordinates: IntMatrix  # sub-generators in ambient coordinates, one per column
    free_generators: list[Vector]  # ambient-coordinate lifts of free summand generators
    torsion_generators: list[Vector]


def lattice_coordinates(basis: Sequence[Sequence[int]], vectors: Sequence[Sequence[int]]) -> list[Vector]:
    """Express each vector as an integer combination of ``basis``.

    ``basis`` must be linearly independent.  Raises SubgroupNotContained when
    some vector is not in the lattice spanned by ``basis``.
    """
    k = len(basis)
    if k == 0:
        for v in vectors:
            if any(v):
                raise SubgroupNotContained(f"{tuple(v)} is not in the zero lattice")
        return [() for _ in vectors]
    n = len(basis[0])
    A = IntMatrix.from_columns(basis, n)
    res = snf(A)
    diag = res.diagonal
    r = sum(1 for x in diag if x)
    if r < k:
        raise ValueError("ambient basis is not linearly independent")
    out = []
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"vector of length {len(v)} in an ambient space of dimension {n}")
        y = res.u @ v
        if any(y[i] for i in range(k, n)):
            raise SubgroupNotContained(f"{tuple(v)} is not in the rational span of the ambient basis")
        z = []
        for i in range(k):
            q, rem = divmod(y[i], diag[i])
            if rem:
                raise SubgroupNotContained(f"{tuple(v)} is not an integer combination of the ambient basis")
            z.append(q)
        out.append(res.v @ z)
    return out


def quotient_decomposition(ambient_basis, sub_generators) -> QuotientDecomposition:
    """Structure of span(ambient_basis) / span(sub_generators) with lifted generators."""
    k = len(ambient_basis)
    coords = lattice_coordinates(ambient_basis, sub_generators)
    C = IntMatrix.from_columns(coords, k)
    res = snf(C)
    diag = list(res.diagonal) + [0] * (k - min(C.shape))
    u_inv = res.u.inverse() if k else res.u
    free, tors, torsion = [], [], []
    for i in range(k):
        if diag[i] == 0:
            free.append(u_inv.column(i))
        elif diag[i] > 1:
            tors.append(u_inv.column(i))
            torsion.append(diag[i])
    inv = AbelianInvariants(len(free), tuple(torsion))
    return QuotientDecomposition(inv, C, free, tors)


def quotient_invariants(ambient_basis, sub_generators) -> AbelianInvariants:
    """Invariants of (Z-span of ambient_basis) / (Z-span of sub_generators)."""
    return quotient_decomposition(ambient_basis, sub_generators).invariants
