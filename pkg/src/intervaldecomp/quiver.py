"""Eventually outward type-A quivers: a finite window plus two outward tails.

Vertices are the integers. Arrow ``a_k`` joins ``x_k`` and ``x_{k+1}``;
direction R means ``x_k -> x_{k+1}``. Window arrows are ``a_lo .. a_{hi-1}``.
Arrows ``a_k`` with ``k < lo`` point left and arrows with ``k >= hi`` point
right, so the quiver is eventually outward by construction.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Union

NEG_INF = -math.inf
POS_INF = math.inf

Endpoint = Union[int, float]


class Dir(str, enum.Enum):
    R = "R"
    L = "L"


class Tail(str, enum.Enum):
    # values outside the window are zero spaces; tail maps are zero
    ZERO = "zero"
    # V_i = V_lo (resp. V_hi) outside the window, tail maps are identities
    CONSTANT = "constant"


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class QuiverSpec:
    lo: int
    hi: int
    orientation: tuple[Dir, ...]
    left_tail: Tail = Tail.ZERO
    right_tail: Tail = Tail.ZERO

    def __post_init__(self):
        object.__setattr__(self, "orientation", tuple(Dir(d) for d in self.orientation))
        object.__setattr__(self, "left_tail", Tail(self.left_tail))
        object.__setattr__(self, "right_tail", Tail(self.right_tail))

    @property
    def n_vertices(self) -> int:
        return self.hi - self.lo + 1

    @property
    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def window_arrows(self) -> range:
        return range(self.lo, self.hi)

    def direction(self, k: int) -> Dir:
        """Direction of arrow a_k for any integer k (tails included)."""
        if k < self.lo:
            return Dir.L
        if k >= self.hi:
            return Dir.R
        return self.orientation[k - self.lo]

    def source(self, k: int) -> int:
        return k if self.direction(k) is Dir.R else k + 1

    def target(self, k: int) -> int:
        return k + 1 if self.direction(k) is Dir.R else k

    def behind(self, k: int, vertex: int) -> bool:
        """Is ``vertex`` behind arrow a_k (on the side of its source)?"""
        if self.direction(k) is Dir.R:
            return vertex <= k
        return vertex >= k + 1

    def translated(self, shift: int) -> "QuiverSpec":
        return QuiverSpec(self.lo + shift, self.hi + shift, self.orientation,
                          self.left_tail, self.right_tail)


def validate_quiver(raw: QuiverSpec) -> QuiverSpec:
    if not isinstance(raw.lo, int) or not isinstance(raw.hi, int):
        raise QuiverError("window bounds must be integers")
    if raw.lo > raw.hi:
        raise QuiverError(f"empty window: lo={raw.lo} > hi={raw.hi}")
    if len(raw.orientation) != raw.hi - raw.lo:
        raise QuiverError(
            f"orientation has {len(raw.orientation)} entries, window needs {raw.hi - raw.lo}"
        )
    return raw


class BoundaryKind(enum.Enum):
    ARROW = "arrow"
    LEFT_VIRTUAL = "-inf"
    RIGHT_VIRTUAL = "+inf"
    LEFT_TAIL = "left-tail"
    RIGHT_TAIL = "right-tail"


@dataclass(frozen=True)
class Boundary:
    """A boundary symbol of an interval.

    ``LEFT_TAIL`` stands for every arrow ``a_k`` with ``k < lo`` and is
    evaluated at ``a_{lo-1}``; ``RIGHT_TAIL`` likewise for ``k >= hi`` at
    ``a_hi``. All arrows of one tail induce the same subrepresentation on the
    window, so one representative is enough.
    """

    kind: BoundaryKind
    position: int | None = None
    direction: Dir | None = None

    @classmethod
    def arrow(cls, position: int, direction: Dir) -> "Boundary":
        return cls(BoundaryKind.ARROW, position, Dir(direction))

    def __str__(self) -> str:
        if self.kind is BoundaryKind.ARROW:
            return f"a{self.position}{self.direction.value}"
        return self.kind.value


LEFT_VIRTUAL = Boundary(BoundaryKind.LEFT_VIRTUAL)
RIGHT_VIRTUAL = Boundary(BoundaryKind.RIGHT_VIRTUAL)
LEFT_TAIL = Boundary(BoundaryKind.LEFT_TAIL, direction=Dir.L)
RIGHT_TAIL = Boundary(BoundaryKind.RIGHT_TAIL, direction=Dir.R)


def order_key_L(b: Boundary) -> tuple[int, int, int]:
    """Sort key for the left order: left-pointing arrows < -inf < right-pointing.

    Within a class, e < e' when e is behind e'.
    """
    if b.kind is BoundaryKind.RIGHT_VIRTUAL:
        raise ValueError("+inf is not an element of the left order")
    if b.kind is BoundaryKind.LEFT_VIRTUAL:
        return (1, 0, 0)
    if b.kind is BoundaryKind.LEFT_TAIL:
        return (0, 1, 0)
    if b.kind is BoundaryKind.RIGHT_TAIL:
        return (2, 1, 0)
    if b.direction is Dir.L:
        return (0, 0, -b.position)
    return (2, 0, b.position)


def order_key_R(b: Boundary) -> tuple[int, int, int]:
    """Sort key for the right order: right-pointing arrows < +inf < left-pointing."""
    if b.kind is BoundaryKind.LEFT_VIRTUAL:
        raise ValueError("-inf is not an element of the right order")
    if b.kind is BoundaryKind.RIGHT_VIRTUAL:
        return (1, 0, 0)
    if b.kind is BoundaryKind.RIGHT_TAIL:
        return (0, 1, 0)
    if b.kind is BoundaryKind.LEFT_TAIL:
        return (2, 1, 0)
    if b.direction is Dir.R:
        return (0, 0, b.position)
    return (2, 0, -b.position)


def _fmt_endpoint(x: Endpoint) -> str:
    if x == NEG_INF:
        return "-inf"
    if x == POS_INF:
        return "+inf"
    return str(int(x))


@dataclass(frozen=True, order=True)
class Interval:
    """Connected full subquiver on vertices left..right (endpoints may be infinite)."""

    left: Endpoint
    right: Endpoint

    def __post_init__(self):
        if self.left == POS_INF or self.right == NEG_INF:
            raise QuiverError(f"bad interval endpoints {self.left}, {self.right}")
        if self.left > self.right:
            raise QuiverError(f"empty interval [{self.left}, {self.right}]")
        # keep finite endpoints as plain ints so equality and hashing are exact
        if self.left != NEG_INF:
            object.__setattr__(self, "left", int(self.left))
        if self.right != POS_INF:
            object.__setattr__(self, "right", int(self.right))

    def __contains__(self, vertex: int) -> bool:
        return self.left <= vertex <= self.right

    def window_part(self, q: QuiverSpec) -> range:
        lo = q.lo if self.left == NEG_INF else max(self.left, q.lo)
        hi = q.hi if self.right == POS_INF else min(self.right, q.hi)
        return range(lo, hi + 1)

    def translated(self, shift: int) -> "Interval":
        return Interval(self.left + shift, self.right + shift)

    def __str__(self) -> str:
        return f"[{_fmt_endpoint(self.left)}, {_fmt_endpoint(self.right)}]"


def iota(q: QuiverSpec, alpha: Interval) -> tuple[Boundary, Boundary]:
    """Left and right (literal, tail or virtual) boundary of ``alpha``."""
    if alpha.left == NEG_INF:
        left = LEFT_VIRTUAL
    elif alpha.left <= q.lo:
        left = LEFT_TAIL
    else:
        left = Boundary.arrow(alpha.left - 1, q.direction(alpha.left - 1))
    if alpha.right == POS_INF:
        right = RIGHT_VIRTUAL
    elif alpha.right >= q.hi:
        right = RIGHT_TAIL
    else:
        right = Boundary.arrow(alpha.right, q.direction(alpha.right))
    return left, right


def leq(q: QuiverSpec, beta: Interval, alpha: Interval) -> bool:
    """beta <= alpha in the reduction/enhancement order, decided through iota."""
    bl, br = iota(q, beta)
    al, ar = iota(q, alpha)
    return order_key_L(bl) <= order_key_L(al) and order_key_R(br) <= order_key_R(ar)


def lt(q: QuiverSpec, beta: Interval, alpha: Interval) -> bool:
    return beta != alpha and leq(q, beta, alpha)


def _inner_arrows(q: QuiverSpec, alpha: Interval) -> range:
    # tail arrows inside an infinite interval are represented by a_{lo-1} / a_hi
    start = q.lo - 1 if alpha.left == NEG_INF else alpha.left
    stop = q.hi if alpha.right == POS_INF else alpha.right - 1
    return range(start, stop + 1)


def is_reduction(q: QuiverSpec, alpha: Interval, beta: Interval) -> bool:
    """Is ``beta`` the part of ``alpha`` behind some arrow inside ``alpha``?"""
    for k in _inner_arrows(q, alpha):
        if q.direction(k) is Dir.R:
            cut = Interval(alpha.left, k)
        else:
            cut = Interval(k + 1, alpha.right)
        if cut == beta:
            return True
    return False


def is_enhancement(q: QuiverSpec, alpha: Interval, beta: Interval) -> bool:
    """Is ``alpha`` the part of ``beta`` in front of some arrow inside ``beta``?"""
    for k in _inner_arrows(q, beta):
        if q.direction(k) is Dir.R:
            front = Interval(k + 1, beta.right)
        else:
            front = Interval(beta.left, k)
        if front == alpha:
            return True
    return False


def enumerate_intervals(q: QuiverSpec) -> list[Interval]:
    """The effective interval set, sorted by (left, right)."""
    lefts: list[Endpoint] = list(q.vertices)
    rights: list[Endpoint] = list(q.vertices)
    if q.left_tail is Tail.CONSTANT:
        lefts.insert(0, NEG_INF)
    if q.right_tail is Tail.CONSTANT:
        rights.append(POS_INF)
    return [Interval(a, b) for a, b in itertools.product(lefts, rights) if a <= b]


def move_closure(q: QuiverSpec, intervals: list[Interval]) -> set[tuple[Interval, Interval]]:
    """Reflexive-transitive closure of single moves, as pairs (smaller, larger)."""
    rel = {(a, a) for a in intervals}
    for a, b in itertools.product(intervals, repeat=2):
        if a != b and (is_reduction(q, a, b) or is_enhancement(q, a, b)):
            rel.add((b, a))
    changed = True
    while changed:
        changed = False
        by_left: dict[Interval, set[Interval]] = {}
        for x, y in rel:
            by_left.setdefault(x, set()).add(y)
        for x, ys in by_left.items():
            for y in list(ys):
                for z in by_left.get(y, ()):
                    if (x, z) not in rel:
                        rel.add((x, z))
                        changed = True
    return rel


def iter_window_intervals(q: QuiverSpec) -> Iterator[Interval]:
    for a in q.vertices:
        for b in range(a, q.hi + 1):
            yield Interval(a, b)
