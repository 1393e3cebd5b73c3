"""Exact integer linear algebra: Smith normal form and Diophantine systems.

Everything here runs on Python's arbitrary-precision integers; there is no
floating point and no modular shortcut anywhere.  The two consumers are the
homology layer (deciding whether a prescribed map of first-homology groups
exists, which is a single linear Diophantine system) and the certificate
checkers, which need the explicit unimodular transforms.

Smith normal form is computed by classical gcd-driven row/column
elimination with a minimal-|entry| pivot rule, which keeps intermediate
entries small at the scales this package sees and, more importantly, makes
the output a deterministic function of the input so that witnesses and
certificates are byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .model import DegreeTuple, LengthMismatch


class DimensionMismatch(ValueError):
    """Raised when matrix/vector shapes are incompatible."""


class IntMatrix:
    """Immutable dense matrix of Python ints.

    Deliberately tiny: construction, multiplication, and matrix-vector
    products are all the solver needs.  Rows are stored as a tuple of
    tuples; equality and hashing are structural.
    """

    __slots__ = ("data", "rows", "cols")

    def __init__(self, data: Iterable[Iterable[int]]) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows in matrix input")
        object.__setattr__(self, "data", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def row(self, i: int) -> Tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(r[j] for r in self.data)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ot = tuple(zip(*other.data))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.data]
        )

    def vecmul(self, v: Sequence[int]) -> Tuple[int, ...]:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector length {len(v)} != {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.data)

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.data]})"

    def to_json(self) -> list:
        return [list(r) for r in self.data]


@dataclass(frozen=True)
class SnfDecomposition:
    """U * A * V = D with U, V unimodular and D in Smith normal form.

    D is rectangular-diagonal with nonnegative diagonal entries, each
    dividing the next (trailing zeros allowed).
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def diagonal(self) -> Tuple[int, ...]:
        return self.d.diagonal()


def smith_normal_form(a: IntMatrix) -> SnfDecomposition:
    """Compute the Smith normal form of an integer matrix.

    Classical elimination: repeatedly move the nonzero entry of minimal
    absolute value (first such in row-major order) to the pivot position,
    clear its row and column with integer row/column operations, and when a
    remaining entry is not divisible by the pivot, fold its row into the
    pivot row and re-eliminate; the pivot's absolute value strictly drops,
    so this terminates.  Signs are normalized at the end.  All row
    operations are mirrored on U and all column operations on V, so
    U * A * V = D holds exactly and |det U| = |det V| = 1 by construction
    (swaps, unit shears, and row negations only).
    """
    m, n = a.rows, a.cols
    d = [list(row) for row in a.data]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src: int, dst: int, c: int) -> None:
        # row[dst] += c * row[src]
        d[dst] = [x + c * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src: int, dst: int, c: int) -> None:
        for r in d:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def find_pivot(t: int) -> Optional[Tuple[int, int]]:
        best = None
        where = None
        for i in range(t, m):
            for j in range(t, n):
                e = abs(d[i][j])
                if e and (best is None or e < best):
                    best, where = e, (i, j)
        return where

    rank = min(m, n)
    for t in range(rank):
        while True:
            piv = find_pivot(t)
            if piv is None:
                break
            if piv[0] != t:
                swap_rows(t, piv[0])
            if piv[1] != t:
                swap_cols(t, piv[1])
            # Clear column t below the pivot and row t to its right.  If a
            # remainder survives (entry not divisible by the pivot), loop:
            # the new minimal entry is strictly smaller in absolute value.
            p = d[t][t]
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // p))
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // p))
            if any(d[i][t] for i in range(t + 1, m)) or any(
                d[t][j] for j in range(t + 1, n)
            ):
                continue
            # Enforce divisibility of the remaining block by the pivot.
            p = d[t][t]
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if d[t][t] == 0:
            break  # remaining block is identically zero
    for t in range(rank):
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return SnfDecomposition(IntMatrix(u), IntMatrix(d), IntMatrix(v))


def solve_diophantine(
    a: IntMatrix, b: Sequence[int]
) -> Optional[Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]]:
    """Solve A x = b over the integers.

    Returns ``(x0, basis)`` where ``x0`` is one solution and ``basis`` is a
    tuple of generators of the solution lattice of A x = 0 (possibly empty),
    or None when no integer solution exists.  Every solution is x0 plus an
    integer combination of the basis vectors.

    Method: with U A V = D, the system becomes D y = U b; solvability is a
    per-row divisibility check, and x = V y pulls solutions back.
    """
    if len(b) != a.rows:
        raise DimensionMismatch(f"rhs length {len(b)} != {a.rows} rows")
    snf = smith_normal_form(a)
    c = snf.u.vecmul(b)
    m, n = a.rows, a.cols
    diag = snf.d.diagonal()
    y = [0] * n
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        if di:
            q, r = divmod(c[i], di)
            if r:
                return None
            y[i] = q
        elif c[i]:
            return None
    x0 = snf.v.vecmul(y)
    free = [j for j in range(n) if j >= len(diag) or diag[j] == 0]
    basis = tuple(snf.v.column(j) for j in free)
    return x0, basis


def hom_exists(
    degrees: Sequence[int],
    target_degrees: Sequence[int],
    pairs: Sequence[Tuple[Sequence[int], Sequence[int]]],
) -> Optional[IntMatrix]:
    """Find a homomorphism H_1 of one complement -> H_1 of another with
    prescribed values, or None.

    H_1 of a k-component complement is Z^k modulo the degree vector.  A
    homomorphism Z^k/(d) -> Z^k'/(d') is induced by any integer matrix M
    with M d a multiple of d'; it sends the class of x to the class of M x.
    Given ``pairs`` of (x_i, y_i), this searches for M with M x_i = y_i
    modulo d' for all i, by solving the single linear Diophantine system in
    the unknowns (entries of M row-major, the multiplier t with
    M d = t d', and one shift s_i per pair):

        sum_c M[r][c] * d[c]   - t   * d'[r] = 0        for each row r
        sum_c M[r][c] * x_i[c] - s_i * d'[r] = y_i[r]   for each i, r

    Returns the matrix M of a solution (deterministic, via the Smith normal
    form route) or None when the system has no integer solution.
    """
    d = DegreeTuple(degrees)
    dp = DegreeTuple(target_degrees)
    k, kp = len(d), len(dp)
    plist = []
    for x, y in pairs:
        xv = tuple(int(c) for c in x)
        yv = tuple(int(c) for c in y)
        if len(xv) != k:
            raise LengthMismatch(f"source vector length {len(xv)} != {k}")
        if len(yv) != kp:
            raise LengthMismatch(f"target vector length {len(yv)} != {kp}")
        plist.append((xv, yv))
    l = len(plist)
    ncols = kp * k + 1 + l
    rows = []
    rhs = []
    for r in range(kp):
        row = [0] * ncols
        for c in range(k):
            row[r * k + c] = d[c]
        row[kp * k] = -dp[r]
        rows.append(row)
        rhs.append(0)
    for i, (xv, yv) in enumerate(plist):
        for r in range(kp):
            row = [0] * ncols
            for c in range(k):
                row[r * k + c] = xv[c]
            row[kp * k + 1 + i] = -dp[r]
            rows.append(row)
            rhs.append(yv[r])
    sol = solve_diophantine(IntMatrix(rows), rhs)
    if sol is None:
        return None
    x0, _ = sol
    return IntMatrix([x0[r * k : (r + 1) * k] for r in range(kp)])
