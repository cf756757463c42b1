"""Hypothesis strategies and small helpers shared by the test modules."""

import itertools

from hypothesis import strategies as st

from intervaldecomp.linalg import Matrix, Subspace
from intervaldecomp.quiver import Tail
from intervaldecomp.representation import make_representation

PRIMES = (2, 3, 5, 32003)
TAILS = (Tail.ZERO, Tail.CONSTANT)
ALL_TAILS = list(itertools.product(TAILS, TAILS))


@st.composite
def vectors(draw, dim, p):
    return tuple(draw(st.integers(0, p - 1)) for _ in range(dim))


@st.composite
def matrices(draw, rows, cols, p):
    return Matrix.from_rows([draw(vectors(cols, p)) for _ in range(rows)], p, cols=cols)


@st.composite
def subspaces(draw, dim, p, max_gens=4):
    gens = draw(st.lists(vectors(dim, p), max_size=max_gens))
    return Subspace.span(gens, dim, p)


@st.composite
def representations(draw, max_window=4, max_dim=3, primes=PRIMES, tails=None, lo=None):
    p = draw(st.sampled_from(primes))
    n = draw(st.integers(1, max_window))
    lo = draw(st.integers(-3, 3)) if lo is None else lo
    dims = [draw(st.integers(0, max_dim)) for _ in range(n)]
    orientation = [draw(st.sampled_from("RL")) for _ in range(n - 1)]
    left, right = draw(st.sampled_from(ALL_TAILS)) if tails is None else tails
    mats = []
    for k in range(n - 1):
        s, t = (k, k + 1) if orientation[k] == "R" else (k + 1, k)
        mats.append([list(draw(vectors(dims[s], p))) for _ in range(dims[t])])
    return make_representation(lo, orientation, dims, mats, p, left, right)


def all_vectors(dim, p):
    return [tuple(v) for v in itertools.product(range(p), repeat=dim)]


def as_set(s: Subspace) -> frozenset:
    """Every vector of a subspace, by enumeration (only for tiny examples)."""
    return frozenset(v for v in all_vectors(s.ambient_dim, s.p) if s.contains(v))
