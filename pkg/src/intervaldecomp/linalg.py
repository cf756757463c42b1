"""Exact linear algebra over a prime field F_p.

Vectors are tuples of ints reduced mod p, matrices act on column vectors
(shape target x source). Subspaces are stored by their reduced row-echelon
basis, so equal subspaces compare equal structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

DEFAULT_PRIME = 32003

Vector = tuple[int, ...]


class DimensionError(ValueError):
    """Operands live in incompatible ambient spaces."""


class NotInSpanError(ValueError):
    """A vector (or subspace) is not contained where it was required to be."""


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise ValueError(f"modulus must be a prime integer, got {p!r}")
    return p


def inverse(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod p")
    return pow(a, -1, p)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]
    p: int

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError(
                f"entries do not form a {self.rows}x{self.cols} grid"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int, cols: int | None = None) -> "Matrix":
        rows = tuple(tuple(int(x) % p for x in r) for r in rows)
        if cols is None:
            if not rows:
                raise DimensionError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows, p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "Matrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "Matrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), p)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} fed to {self.rows}x{self.cols} matrix")
        p = self.p
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot compose {self.shape} with {other.shape}")
        p = self.p
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        entries = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols)
            for row in self.entries
        )
        return Matrix(self.rows, other.cols, entries, p)

    def transpose(self) -> "Matrix":
        entries = tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols))
        return Matrix(self.cols, self.rows, entries, self.p)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)


def _rref_rows(rows: Iterable[Sequence[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """Gauss-Jordan elimination; returns nonzero reduced rows and pivot columns."""
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c] % p), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = inverse(work[r][c], p)
        lead = [(x * inv) % p for x in work[r]]
        work[r] = lead
        for i in range(len(work)):
            if i != r:
                factor = work[i][c] % p
                if factor:
                    work[i] = [(x - factor * y) % p for x, y in zip(work[i], lead)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row-echelon form of ``m`` with zero rows dropped."""
    reduced, pivots = _rref_rows(m.entries, m.cols, m.p)
    out = Matrix(len(reduced), m.cols, tuple(tuple(r) for r in reduced), m.p)
    return out, pivots, len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^ambient_dim held in canonical RREF.

    ``basis`` rows are the RREF basis vectors; two instances are equal as sets
    exactly when they compare equal.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]
    p: int

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient_dim: int, p: int) -> "Subspace":
        vectors = [tuple(int(x) % p for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        reduced, pivots = _rref_rows(vectors, ambient_dim, p)
        return cls(ambient_dim, tuple(tuple(r) for r in reduced), tuple(pivots), p)

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, (), (), p)

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> "Subspace":
        basis = tuple(tuple(int(i == j) for j in range(ambient_dim)) for i in range(ambient_dim))
        return cls(ambient_dim, basis, tuple(range(ambient_dim)), p)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def as_matrix(self) -> Matrix:
        return Matrix(self.dim, self.ambient_dim, self.basis, self.p)

    def reduce(self, v: Sequence[int]) -> Vector:
        """Residue of ``v`` after clearing the pivot coordinates."""
        p = self.p
        w = [x % p for x in v]
        for row, c in zip(self.basis, self.pivots):
            a = w[c]
            if a:
                w = [(x - a * y) % p for x, y in zip(w, row)]
        return tuple(w)

    def coordinates(self, v: Sequence[int]) -> Vector:
        """Coefficients of ``v`` in the RREF basis; raises if v is outside."""
        if any(self.reduce(v)):
            raise NotInSpanError("vector is not in the subspace")
        return tuple(v[c] % self.p for c in self.pivots)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        return not any(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubset(self, other: "Subspace") -> bool:
        _check_same_ambient(self, other)
        return self.dim <= other.dim and all(other.contains(v) for v in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubset(other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return span_sum(self, other)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, p={self.p}, basis={list(self.basis)})"


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim or a.p != b.p:
        raise DimensionError(
            f"ambient mismatch: F_{a.p}^{a.ambient_dim} vs F_{b.p}^{b.ambient_dim}"
        )


def kernel(f: Matrix) -> Subspace:
    """Null space of ``f`` (as a map on column vectors)."""
    reduced, pivots = _rref_rows(f.entries, f.cols, f.p)
    p = f.p
    pivot_set = set(pivots)
    vectors = []
    for free in range(f.cols):
        if free in pivot_set:
            continue
        v = [0] * f.cols
        v[free] = 1
        for row, c in zip(reduced, pivots):
            v[c] = (-row[free]) % p
        vectors.append(v)
    return Subspace.span(vectors, f.cols, p)


def _quotient_map(s: Subspace) -> Matrix:
    """A matrix whose kernel is exactly ``s``: v -> (reduce(v))[non-pivots]."""
    p = s.p
    pivot_set = set(s.pivots)
    free = [j for j in range(s.ambient_dim) if j not in pivot_set]
    rows = []
    for j in free:
        # coordinate j of reduce(v) = v_j - sum_k v[piv_k] * basis_k[j]
        row = [0] * s.ambient_dim
        row[j] = 1
        for b, c in zip(s.basis, s.pivots):
            row[c] = (row[c] - b[j]) % p
        rows.append(tuple(row))
    return Matrix(len(rows), s.ambient_dim, tuple(rows), p)


def image(f: Matrix, s: Subspace) -> Subspace:
    if s.ambient_dim != f.cols or s.p != f.p:
        raise DimensionError(f"subspace of F^{s.ambient_dim} fed to {f.rows}x{f.cols} map")
    return Subspace.span((f.apply(v) for v in s.basis), f.rows, f.p)


def preimage(f: Matrix, s: Subspace) -> Subspace:
    if s.ambient_dim != f.rows or s.p != f.p:
        raise DimensionError(f"subspace of F^{s.ambient_dim} pulled back along {f.rows}x{f.cols} map")
    if s.is_full():
        return Subspace.full(f.cols, f.p)
    return kernel(_quotient_map(s) @ f)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    if a.dim > b.dim:
        a, b = b, a
    if a.is_zero() or b.is_full():
        return a
    # coefficients c with c . basis(a) in b, pushed back into the ambient space
    inclusion = a.as_matrix().transpose()
    coeffs = preimage(inclusion, b)
    return image(inclusion, coeffs)


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    return Subspace.span(a.basis + b.basis, a.ambient_dim, a.p)


def complement(inner: Subspace, outer: Subspace) -> Subspace:
    """Canonical C with outer = inner (+) C.

    The outer RREF basis vectors are scanned in order and kept whenever they
    are independent of inner plus the vectors kept so far.
    """
    _check_same_ambient(inner, outer)
    if not inner.issubset(outer):
        raise NotInSpanError("inner subspace is not contained in outer subspace")
    acc = inner
    picked = []
    for v in outer.basis:
        if acc.dim == outer.dim:
            break
        if not acc.contains(v):
            picked.append(v)
            acc = Subspace.span(acc.basis + (v,), acc.ambient_dim, acc.p)
    return Subspace.span(picked, outer.ambient_dim, outer.p)


def solve_lift(f: Matrix, y: Sequence[int]) -> Vector:
    """The solution x of f x = y whose free (non-pivot) coordinates are zero."""
    if len(y) != f.rows:
        raise DimensionError(f"right-hand side of length {len(y)} for {f.rows}x{f.cols} map")
    p = f.p
    augmented = [list(row) + [y[i] % p] for i, row in enumerate(f.entries)]
    reduced, pivots = _rref_rows(augmented, f.cols + 1, p)
    if pivots and pivots[-1] == f.cols:
        raise NotInSpanError("vector is not in the image of the map")
    x = [0] * f.cols
    for row, c in zip(reduced, pivots):
        x[c] = row[-1]
    return tuple(x)


def matrix_of(vectors: Sequence[Sequence[int]], dim: int, p: int) -> Matrix:
    """Matrix whose columns are ``vectors``."""
    cols = [tuple(v) for v in vectors]
    entries = tuple(tuple(c[i] for c in cols) for i in range(dim))
    return Matrix(dim, len(cols), entries, p)


def is_independent(vectors: Sequence[Sequence[int]], dim: int, p: int) -> bool:
    return Subspace.span(vectors, dim, p).dim == len(vectors)
