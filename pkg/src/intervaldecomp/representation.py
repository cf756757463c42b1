"""Representations of window-plus-tails type-A quivers.

Tail vertices are never materialised. A Constant tail behaves as if every
vertex past the window carried a copy of the edge space with identity
maps; a Zero tail carries zero spaces. Either way, everything happening in
a tail is captured by the first tail vertex ``lo - 1`` (resp. ``hi + 1``),
so transports clamp positions to ``[lo - 1, hi + 1]``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from .linalg import (
    DEFAULT_PRIME,
    DimensionError,
    Matrix,
    Subspace,
    check_prime,
    image,
    preimage,
)
from .quiver import Dir, QuiverError, QuiverSpec, Tail, validate_quiver


class RepresentationError(ValueError):
    """Malformed or inconsistent representation data."""


@dataclass(frozen=True)
class Representation:
    quiver: QuiverSpec
    p: int
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        q = self.quiver
        try:
            validate_quiver(q)
            check_prime(self.p)
        except (QuiverError, ValueError) as exc:
            raise RepresentationError(str(exc)) from exc
        if len(self.dims) != q.n_vertices:
            raise RepresentationError(f"expected {q.n_vertices} dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise RepresentationError("dimensions must be nonnegative")
        if len(self.maps) != q.n_vertices - 1:
            raise RepresentationError(f"expected {q.n_vertices - 1} maps, got {len(self.maps)}")
        for k, m in zip(q.window_arrows, self.maps):
            want = (self.dim(q.target(k)), self.dim(q.source(k)))
            if m.shape != want:
                raise RepresentationError(
                    f"arrow a{k} ({q.direction(k).value}) needs a {want[0]}x{want[1]} matrix, got {m.rows}x{m.cols}"
                )
            if m.p != self.p:
                raise RepresentationError(f"arrow a{k} matrix is over F_{m.p}, not F_{self.p}")

    @property
    def lo(self) -> int:
        return self.quiver.lo

    @property
    def hi(self) -> int:
        return self.quiver.hi

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def dim(self, vertex: int) -> int:
        """Dimension at any integer vertex, tails included."""
        q = self.quiver
        if vertex < q.lo:
            return self.dims[0] if q.left_tail is Tail.CONSTANT else 0
        if vertex > q.hi:
            return self.dims[-1] if q.right_tail is Tail.CONSTANT else 0
        return self.dims[vertex - q.lo]

    def arrow_map(self, k: int) -> Matrix:
        """Matrix of a_k (target x source) for any integer k."""
        q = self.quiver
        if q.lo <= k < q.hi:
            return self.maps[k - q.lo]
        src, tgt = q.source(k), q.target(k)
        tail = q.left_tail if k < q.lo else q.right_tail
        if tail is Tail.CONSTANT:
            return Matrix.identity(self.dim(src), self.p)
        return Matrix.zeros(self.dim(tgt), self.dim(src), self.p)

    def full(self, vertex: int) -> Subspace:
        return Subspace.full(self.dim(vertex), self.p)

    def zero(self, vertex: int) -> Subspace:
        return Subspace.zero(self.dim(vertex), self.p)

    def clamp(self, vertex: int) -> int:
        return min(max(vertex, self.lo - 1), self.hi + 1)

    def translated(self, shift: int) -> "Representation":
        return Representation(self.quiver.translated(shift), self.p, self.dims, self.maps)


def make_representation(
    lo: int,
    orientation: Sequence[str | Dir],
    dims: Sequence[int],
    matrices: Sequence[Sequence[Sequence[int]]],
    p: int = DEFAULT_PRIME,
    left_tail: Tail | str = Tail.ZERO,
    right_tail: Tail | str = Tail.ZERO,
) -> Representation:
    """Convenience constructor from plain nested lists."""
    try:
        q = validate_quiver(QuiverSpec(lo, lo + len(dims) - 1, tuple(orientation), left_tail, right_tail))
        check_prime(p)
    except ValueError as exc:
        raise RepresentationError(str(exc)) from exc
    if any(d < 0 for d in dims):
        raise RepresentationError("dimensions must be nonnegative")
    if len(matrices) != len(dims) - 1:
        raise RepresentationError(f"expected {len(dims) - 1} matrices, got {len(matrices)}")
    maps = []
    for k, rows in zip(q.window_arrows, matrices):
        t, s = dims[q.target(k) - lo], dims[q.source(k) - lo]
        rows = [list(r) for r in rows]
        if len(rows) != t or any(len(r) != s for r in rows):
            got = f"{len(rows)}x{len(rows[0]) if rows else 0}"
            raise RepresentationError(f"arrow a{k} needs a {t}x{s} matrix, got {got}")
        maps.append(Matrix.from_rows(rows, p, cols=s))
    return Representation(q, p, tuple(int(d) for d in dims), tuple(maps))


# -- transport ---------------------------------------------------------------

def step(r: Representation, k: int, walking_right: bool, s: Subspace) -> Subspace:
    """Transport ``s`` across arrow a_k in the given walking direction."""
    f = r.arrow_map(k)
    consistent = (r.quiver.direction(k) is Dir.R) == walking_right
    return image(f, s) if consistent else preimage(f, s)


def transport(r: Representation, start: int, end: int, s: Subspace) -> Subspace:
    """Push/pull ``s`` from vertex ``start`` to vertex ``end`` along the unique walk."""
    a, b = r.clamp(start), r.clamp(end)
    if s.ambient_dim != r.dim(a) or s.p != r.p:
        raise DimensionError(f"subspace of F^{s.ambient_dim} does not live at vertex {start}")
    if a <= b:
        for k in range(a, b):
            s = step(r, k, True, s)
    else:
        for k in range(a - 1, b - 1, -1):
            s = step(r, k, False, s)
    return s


@dataclass(frozen=True)
class SubrepVector:
    """A subspace at every window vertex plus one value per tail.

    Tail values live at the first tail vertex (``lo - 1`` / ``hi + 1``) and
    stand for the whole tail: zero, full, or a stable copy of the edge space.
    """

    spaces: tuple[Subspace, ...]
    left_tail: Subspace
    right_tail: Subspace

    @classmethod
    def build(cls, r: Representation, value) -> "SubrepVector":
        """Evaluate ``value(vertex)`` on the window and at both tail vertices."""
        return cls(
            tuple(value(i) for i in r.quiver.vertices),
            value(r.lo - 1),
            value(r.hi + 1),
        )

    @classmethod
    def zero(cls, r: Representation) -> "SubrepVector":
        return cls.build(r, r.zero)

    @classmethod
    def full(cls, r: Representation) -> "SubrepVector":
        return cls.build(r, r.full)

    @classmethod
    def outward(cls, r: Representation, vertex: int, s: Subspace) -> "SubrepVector":
        """Transport of ``s`` from ``vertex`` to every other vertex."""
        return cls.build(r, lambda j: transport(r, vertex, j, s))

    def at(self, r: Representation, vertex: int) -> Subspace:
        v = r.clamp(vertex)
        if v < r.lo:
            return self.left_tail
        if v > r.hi:
            return self.right_tail
        return self.spaces[v - r.lo]

    def _zip(self, other: "SubrepVector"):
        return zip(self.spaces + (self.left_tail, self.right_tail),
                   other.spaces + (other.left_tail, other.right_tail))

    def __and__(self, other: "SubrepVector") -> "SubrepVector":
        vals = [a & b for a, b in self._zip(other)]
        return SubrepVector(tuple(vals[:-2]), vals[-2], vals[-1])

    def __add__(self, other: "SubrepVector") -> "SubrepVector":
        vals = [a + b for a, b in self._zip(other)]
        return SubrepVector(tuple(vals[:-2]), vals[-2], vals[-1])

    def __le__(self, other: "SubrepVector") -> bool:
        return all(a <= b for a, b in self._zip(other))

    def window_le(self, other: "SubrepVector") -> bool:
        return all(a <= b for a, b in zip(self.spaces, other.spaces))

    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.spaces)

    def is_closed(self, r: Representation) -> bool:
        """Is every arrow map (tail arrows included) compatible with the spaces?"""
        q = r.quiver
        for k in range(r.lo - 1, r.hi + 1):
            moved = image(r.arrow_map(k), self.at(r, q.source(k)))
            if not moved <= self.at(r, q.target(k)):
                return False
        return True


# -- text format -------------------------------------------------------------

FIELD_ORDER = ("p", "lo", "hi", "dims", "arrows", "left_tail", "right_tail")


def serialize_representation(r: Representation) -> str:
    q = r.quiver
    lines = ["{"]
    lines.append(f'  "p": {r.p},')
    lines.append(f'  "lo": {q.lo},')
    lines.append(f'  "hi": {q.hi},')
    lines.append(f'  "dims": {json.dumps(list(r.dims))},')
    if r.maps:
        lines.append('  "arrows": [')
        arrows = []
        for k, m in zip(q.window_arrows, r.maps):
            grid = json.dumps([list(row) for row in m.entries])
            arrows.append(f'    {{"dir": "{q.direction(k).value}", "matrix": {grid}}}')
        lines.append(",\n".join(arrows))
        lines.append("  ],")
    else:
        lines.append('  "arrows": [],')
    lines.append(f'  "left_tail": "{q.left_tail.value}",')
    lines.append(f'  "right_tail": "{q.right_tail.value}"')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _int(value, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise RepresentationError(f"{name} must be an integer, got {value!r}")
    return value


def parse_representation(text: str) -> Representation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RepresentationError(f"syntax error: {exc}") from exc
    if not isinstance(doc, dict):
        raise RepresentationError("top level must be an object")
    missing = [k for k in FIELD_ORDER if k not in doc]
    if missing:
        raise RepresentationError(f"missing fields: {', '.join(missing)}")
    extra = sorted(set(doc) - set(FIELD_ORDER))
    if extra:
        raise RepresentationError(f"unknown fields: {', '.join(extra)}")

    p = _int(doc["p"], "p")
    lo = _int(doc["lo"], "lo")
    hi = _int(doc["hi"], "hi")
    if not isinstance(doc["dims"], list):
        raise RepresentationError("dims must be a list")
    dims = [_int(d, "dims entry") for d in doc["dims"]]
    if len(dims) != hi - lo + 1:
        raise RepresentationError(f"dims has {len(dims)} entries, window [{lo}, {hi}] needs {hi - lo + 1}")
    arrows = doc["arrows"]
    if not isinstance(arrows, list):
        raise RepresentationError("arrows must be a list")
    orientation, matrices = [], []
    for i, a in enumerate(arrows):
        if not isinstance(a, dict) or set(a) != {"dir", "matrix"}:
            raise RepresentationError(f"arrow {i} must have exactly the fields dir and matrix")
        if a["dir"] not in ("R", "L"):
            raise RepresentationError(f"arrow {i} has bad direction {a['dir']!r}")
        grid = a["matrix"]
        if not isinstance(grid, list) or not all(isinstance(row, list) for row in grid):
            raise RepresentationError(f"arrow {i} matrix must be a list of rows")
        matrices.append([[_int(x, f"arrow {i} entry") for x in row] for row in grid])
        orientation.append(a["dir"])
    tails = []
    for name in ("left_tail", "right_tail"):
        try:
            tails.append(Tail(doc[name]))
        except ValueError:
            raise RepresentationError(f"{name} must be 'zero' or 'constant'") from None
    return make_representation(lo, orientation, dims, matrices, p, tails[0], tails[1])


# -- instance generators -----------------------------------------------------

def random_representation(
    window_len: int,
    max_dim: int,
    p: int = DEFAULT_PRIME,
    tails: tuple[Tail | str, Tail | str] = (Tail.ZERO, Tail.ZERO),
    seed: int = 0,
    lo: int = 0,
    orientation: Sequence[str] | None = None,
) -> Representation:
    """Uniform random instance, fully determined by ``seed``."""
    if window_len < 1:
        raise ValueError("window_len must be at least 1")
    if max_dim < 0:
        raise ValueError("max_dim must be nonnegative")
    rng = random.Random(seed)
    if orientation is None:
        orientation = [rng.choice("RL") for _ in range(window_len - 1)]
    dims = [rng.randint(0, max_dim) for _ in range(window_len)]
    q = QuiverSpec(lo, lo + window_len - 1, tuple(orientation), *tails)
    matrices = []
    for k in q.window_arrows:
        t, s = dims[q.target(k) - lo], dims[q.source(k) - lo]
        matrices.append([[rng.randrange(p) for _ in range(s)] for _ in range(t)])
    return make_representation(lo, orientation, dims, matrices, p, *tails)


def counterexample_truncation(n: int, p: int = DEFAULT_PRIME) -> Representation:
    """Finite slice of the sequence-space module on the all-inward quiver.

    Vertex k carries sequences (b_0..b_n) with b_m = 0 for m < k, so
    dim V_k = n + 1 - k; every arrow points towards x_0 and is the
    coordinate inclusion V_{k+1} -> V_k.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    dims = [n + 1 - k for k in range(n + 1)]
    matrices = []
    for k in range(n):
        src, tgt = dims[k + 1], dims[k]
        # V_{k+1} has coordinates k+1..n, V_k has k..n: drop in below a zero row
        matrices.append([[int(i == j + 1) for j in range(src)] for i in range(tgt)])
    return make_representation(0, ["L"] * n, dims, matrices, p)
