"""Boundary subrepresentations and the interval filtration F built from them.

For an interval alpha with left/right boundaries (e_L, e_R),
F^alpha = L^{e_L} & R^{e_R}, where L and R are chains of subrepresentations
indexed by the two total orders on boundary symbols. Because L and R are
chains, the sum of F^beta over beta < alpha collapses to two terms built
from the predecessors of e_L and e_R.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .quiver import (
    LEFT_TAIL,
    LEFT_VIRTUAL,
    RIGHT_TAIL,
    RIGHT_VIRTUAL,
    Boundary,
    BoundaryKind,
    Dir,
    Interval,
    iota,
    order_key_L,
    order_key_R,
)
from .representation import Representation, SubrepVector, transport


def _position(r: Representation, e: Boundary) -> int:
    if e.kind is BoundaryKind.ARROW:
        return e.position
    if e.kind is BoundaryKind.LEFT_TAIL:
        return r.lo - 1
    if e.kind is BoundaryKind.RIGHT_TAIL:
        return r.hi
    raise ValueError(f"{e} is not an arrow")


def v_plus(r: Representation, e: Boundary) -> SubrepVector:
    """Everything behind e; in front, the transport of the full space at t(e)."""
    q = r.quiver
    k = _position(r, e)
    t = q.target(k)
    full_t = r.full(t)
    return SubrepVector.build(
        r, lambda i: r.full(i) if q.behind(k, i) else transport(r, t, i, full_t)
    )


def v_minus(r: Representation, e: Boundary) -> SubrepVector:
    """Zero in front of e; behind, the transport of zero at t(e)."""
    q = r.quiver
    k = _position(r, e)
    t = q.target(k)
    zero_t = r.zero(t)
    return SubrepVector.build(
        r, lambda i: transport(r, t, i, zero_t) if q.behind(k, i) else r.zero(i)
    )


def v_virtual(r: Representation, side: str, start: int | None = None) -> SubrepVector:
    """Subrepresentation of a virtual arrow: an outward ray ``side`` ('left'/'right').

    The ray starts at ``start`` (default: the first tail vertex); it must only
    use outward-pointing arrows, and the result does not depend on the start.
    """
    q = r.quiver
    if side == "left":
        start = r.lo - 1 if start is None else start
        bad = [k for k in range(r.lo, start) if q.direction(k) is not Dir.L]
        inside = lambda i: i <= start  # noqa: E731
    elif side == "right":
        start = r.hi + 1 if start is None else start
        bad = [k for k in range(start, r.hi) if q.direction(k) is not Dir.R]
        inside = lambda i: i >= start  # noqa: E731
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if bad:
        raise ValueError(f"no outward {side} ray starts at vertex {start}")
    full_start = r.full(start)
    return SubrepVector.build(
        r, lambda i: r.full(i) if inside(i) else transport(r, start, i, full_start)
    )


def left_value(r: Representation, e: Boundary) -> SubrepVector:
    if e.kind is BoundaryKind.LEFT_VIRTUAL:
        return v_virtual(r, "left")
    if e.kind is BoundaryKind.RIGHT_VIRTUAL:
        raise ValueError("+inf has no left filtration value")
    return v_plus(r, e) if e.direction is Dir.R else v_minus(r, e)


def right_value(r: Representation, e: Boundary) -> SubrepVector:
    if e.kind is BoundaryKind.RIGHT_VIRTUAL:
        return v_virtual(r, "right")
    if e.kind is BoundaryKind.LEFT_VIRTUAL:
        raise ValueError("-inf has no right filtration value")
    return v_plus(r, e) if e.direction is Dir.L else v_minus(r, e)


@dataclass(frozen=True)
class FiltrationTable:
    """The two chains L and R over the finite effective carriers, ascending."""

    rep: Representation
    L: tuple[tuple[Boundary, SubrepVector], ...]
    R: tuple[tuple[Boundary, SubrepVector], ...]
    _l_index: dict = field(init=False, repr=False, compare=False)
    _r_index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_l_index", {b: i for i, (b, _) in enumerate(self.L)})
        object.__setattr__(self, "_r_index", {b: i for i, (b, _) in enumerate(self.R)})

    def left(self, e: Boundary) -> SubrepVector:
        return self.L[self._l_index[e]][1]

    def right(self, e: Boundary) -> SubrepVector:
        return self.R[self._r_index[e]][1]

    def left_pred(self, e: Boundary) -> SubrepVector:
        i = self._l_index[e]
        return self.L[i - 1][1] if i else SubrepVector.zero(self.rep)

    def right_pred(self, e: Boundary) -> SubrepVector:
        i = self._r_index[e]
        return self.R[i - 1][1] if i else SubrepVector.zero(self.rep)


def left_carrier(r: Representation) -> list[Boundary]:
    q = r.quiver
    symbols = [Boundary.arrow(k, q.direction(k)) for k in q.window_arrows]
    symbols += [LEFT_TAIL, LEFT_VIRTUAL]
    return sorted(symbols, key=order_key_L)


def right_carrier(r: Representation) -> list[Boundary]:
    q = r.quiver
    symbols = [Boundary.arrow(k, q.direction(k)) for k in q.window_arrows]
    symbols += [RIGHT_TAIL, RIGHT_VIRTUAL]
    return sorted(symbols, key=order_key_R)


def build_filtrations(r: Representation) -> FiltrationTable:
    L = tuple((e, left_value(r, e)) for e in left_carrier(r))
    R = tuple((e, right_value(r, e)) for e in right_carrier(r))
    return FiltrationTable(r, L, R)


def f_alpha(r: Representation, table: FiltrationTable, alpha: Interval) -> SubrepVector:
    el, er = iota(r.quiver, alpha)
    return table.left(el) & table.right(er)


def f_strictly_below(r: Representation, table: FiltrationTable, alpha: Interval) -> SubrepVector:
    """Sum of F^beta over beta < alpha, via the two-predecessor formula."""
    el, er = iota(r.quiver, alpha)
    return (table.left(el) & table.right_pred(er)) + (table.left_pred(el) & table.right(er))
