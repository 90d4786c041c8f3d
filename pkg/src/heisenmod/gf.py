"""Exact arithmetic in the prime field F_p (p an odd prime) and dense linear
algebra over it.

Everything downstream (brackets, cochain differentials, kernels of the
restricted complexes) reduces to the primitives here: modular scalar
arithmetic, deterministic reduced row echelon form, rank, nullspace bases and
linear solves.  Matrices are stored as int64 numpy arrays with entries reduced
into [0, p); since p <= 13 at the scales this package targets, all
intermediate products stay far below 2**63 and the computation is exact.

Pivoting is deterministic (leftmost pivot column, first nonzero row), so
nullspace bases and cohomology representatives are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class BadPrime(ValueError):
    """Modulus is not an odd prime."""


class ModulusMismatch(ValueError):
    """Operands live over different prime fields."""


class DivisionByZero(ZeroDivisionError):
    """Inversion or division by the zero residue."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_odd_prime(p: int) -> int:
    # p = 2 is rejected globally: the structures this package builds need 2
    # to be invertible.
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)) or p < 3:
        raise BadPrime(f"modulus must be an odd prime, got {p!r}")
    return int(p)


@dataclass(frozen=True)
class Fp:
    """A residue in F_p.  Immutable; arithmetic is exact."""

    residue: int
    modulus: int

    def __post_init__(self):
        check_odd_prime(self.modulus)
        object.__setattr__(self, "residue", int(self.residue) % self.modulus)

    def _match(self, other: "Fp") -> "Fp":
        if not isinstance(other, Fp):
            other = Fp(int(other), self.modulus)
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"p={self.modulus} vs p={other.modulus}")
        return other

    def __add__(self, other):
        other = self._match(other)
        return Fp(self.residue + other.residue, self.modulus)

    def __sub__(self, other):
        other = self._match(other)
        return Fp(self.residue - other.residue, self.modulus)

    def __neg__(self):
        return Fp(-self.residue, self.modulus)

    def __mul__(self, other):
        other = self._match(other)
        return Fp(self.residue * other.residue, self.modulus)

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return Fp(pow(self.residue, int(n), self.modulus), self.modulus)

    def inv(self) -> "Fp":
        if self.residue == 0:
            raise DivisionByZero(f"0 has no inverse mod {self.modulus}")
        # Fermat: a^(p-2) is the inverse of a.
        return Fp(pow(self.residue, self.modulus - 2, self.modulus), self.modulus)

    def __truediv__(self, other):
        other = self._match(other)
        return self * other.inv()

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue


def field_arith(a: Fp, b, kind: str) -> Fp:
    """Dispatch {add, sub, mul, div, pow} on field elements.

    For ``pow`` the second operand is the (non-negative integer) exponent.
    """
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "pow":
        n = int(b)
        if n < 0:
            raise ValueError("exponent must be a non-negative integer")
        return a ** n
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def _as_array(data, p: int) -> np.ndarray:
    a = np.asarray(data, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("matrix data must be two-dimensional")
    return np.mod(a, p)


class Matrix:
    """Dense matrix over F_p.  Immutable by convention; methods return new
    matrices and never mutate ``self.a``."""

    def __init__(self, data, p: int):
        self.p = check_odd_prime(p)
        self.a = _as_array(data, self.p)
        self.a.setflags(write=False)
        self._rref = None

    # -- construction ------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "Matrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "Matrix":
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def from_rows(cls, rows, cols: int, p: int) -> "Matrix":
        if len(rows) == 0:
            return cls.zeros(0, cols, p)
        return cls(np.vstack([np.asarray(r, dtype=np.int64) for r in rows]), p)

    # -- shape and access ----------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def entry(self, i: int, j: int) -> Fp:
        return Fp(int(self.a[i, j]), self.p)

    def column(self, j: int) -> np.ndarray:
        return self.a[:, j].copy()

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.p == other.p
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self):
        return f"Matrix({self.a.tolist()}, p={self.p})"

    def _check(self, other: "Matrix"):
        if self.p != other.p:
            raise ModulusMismatch(f"p={self.p} vs p={other.p}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.a + other.a, self.p)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.a - other.a, self.p)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.a @ other.a, self.p)

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.a * (int(c) % self.p), self.p)

    def transpose(self) -> "Matrix":
        return Matrix(self.a.T, self.p)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(np.hstack([self.a, other.a]), self.p)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(np.vstack([self.a, other.a]), self.p)

    def apply(self, v: np.ndarray) -> np.ndarray:
        return np.mod(self.a @ np.mod(np.asarray(v, dtype=np.int64), self.p), self.p)

    def power(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("matrix power needs a square matrix")
        out = np.eye(self.rows, dtype=np.int64)
        base = self.a.copy()
        n = int(n)
        while n:
            if n & 1:
                out = np.mod(out @ base, self.p)
            base = np.mod(base @ base, self.p)
            n >>= 1
        return Matrix(out, self.p)

    # -- elimination ---------------------------------------------------------

    def rref(self):
        """Reduced row echelon form.

        Returns (R, rank, pivot_columns).  Pivot selection is leftmost column
        first, first nonzero row; the result is cached (self is immutable).
        """
        if self._rref is not None:
            return self._rref
        p = self.p
        R = self.a.copy()
        rows, cols = R.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r >= rows:
                break
            nz = np.nonzero(R[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                R[[r, i]] = R[[i, r]]
            inv = pow(int(R[r, c]), p - 2, p)
            R[r] = (R[r] * inv) % p
            col = R[:, c].copy()
            col[r] = 0
            R = (R - np.outer(col, R[r])) % p
            pivots.append(c)
            r += 1
        result = (Matrix(R, p), len(pivots), tuple(pivots))
        self._rref = result
        return result

    @property
    def rank(self) -> int:
        return self.rref()[1]

    def nullspace_basis(self) -> "Matrix":
        """Columns span ker(self); the canonical free-variable basis from the
        RREF, one column per free column in ascending order."""
        R, rank, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        basis = np.zeros((self.cols, len(free)), dtype=np.int64)
        for k, f in enumerate(free):
            basis[f, k] = 1
            for r, c in enumerate(pivots):
                basis[c, k] = (-int(R.a[r, f])) % self.p
        return Matrix(basis, self.p)

    def column_space_basis(self) -> "Matrix":
        """The pivot columns of self (deterministic spanning subset)."""
        _, _, pivots = self.rref()
        if not pivots:
            return Matrix.zeros(self.rows, 0, self.p)
        return Matrix(self.a[:, list(pivots)], self.p)

    def solve(self, b: np.ndarray):
        """One solution x of self @ x = b (free variables zero), or None."""
        b = np.mod(np.asarray(b, dtype=np.int64), self.p).reshape(-1)
        if b.shape[0] != self.rows:
            raise ValueError("right-hand side has wrong length")
        aug = Matrix(np.hstack([self.a, b.reshape(-1, 1)]), self.p)
        R, rank, pivots = aug.rref()
        if pivots and pivots[-1] == self.cols:
            return None
        x = np.zeros(self.cols, dtype=np.int64)
        for r, c in enumerate(pivots):
            x[c] = R.a[r, self.cols]
        return x


def solve_in_span(basis: Matrix, v: np.ndarray):
    """Coefficients expressing v in the columns of ``basis``, or None."""
    return basis.solve(v)
