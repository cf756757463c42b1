import dataclasses
import json

import pytest
from hypothesis import given, settings, strategies as st

from intervaldecomp.decomposer import (
    CertificateFormatError,
    Decomposition,
    GradedPiece,
    barcode,
    certify,
    decompose,
    graded_piece,
    parse_certificate,
    serialize_certificate,
)
from intervaldecomp.filtration import build_filtrations
from intervaldecomp.linalg import Subspace, image
from intervaldecomp.quiver import NEG_INF, POS_INF, Interval, _inner_arrows
from intervaldecomp.representation import make_representation, random_representation
from strategies import representations


def bars(*triples):
    return {Interval(a, b): m for a, b, m in triples}


DIMS_121 = make_representation(1, "RR", [1, 2, 1], [[[1], [0]], [[0, 1]]], p=3)


# -- worked examples -------------------------------------------------------------------

def test_single_vertex():
    r = make_representation(0, "", [3], [], p=7)
    g = graded_piece(r, build_filtrations(r), Interval(0, 0))
    assert g.multiplicity == 3
    assert g.basis == (((1, 0, 0), (0, 1, 0), (0, 0, 1)),)


def test_identity_a2():
    r = make_representation(1, "R", [1, 1], [[[1]]], p=2)
    t = build_filtrations(r)
    assert graded_piece(r, t, Interval(1, 2)).multiplicity == 1
    assert graded_piece(r, t, Interval(1, 1)).multiplicity == 0
    assert graded_piece(r, t, Interval(2, 2)).multiplicity == 0
    assert barcode(r) == bars((1, 2, 1))


def test_zero_map_a2():
    r = make_representation(1, "R", [1, 1], [[[0]]], p=5)
    assert barcode(r) == bars((1, 1, 1), (2, 2, 1))


def test_equioriented_121():
    assert barcode(DIMS_121) == bars((1, 2, 1), (2, 3, 1))


def test_zero_representation():
    r = make_representation(0, "LR", [0, 0, 0], [[], []], p=3)
    d = decompose(r)
    assert d.pieces == () and d.barcode == {}
    assert certify(r, d).ok


def test_constant_tails_give_infinite_bars():
    r = make_representation(0, "RL", [1, 1, 1], [[[1]], [[1]]], p=3,
                            left_tail="constant", right_tail="constant")
    assert barcode(r) == bars((NEG_INF, POS_INF, 1))
    r = make_representation(0, "R", [1, 1], [[[0]]], p=3, left_tail="constant", right_tail="constant")
    assert barcode(r) == bars((NEG_INF, 0, 1), (1, POS_INF, 1))


def test_zigzag_with_common_image():
    # x0 -> x1 <- x2 with both lines hitting the same line of V_1
    r = make_representation(0, "RL", [1, 2, 1], [[[1], [0]], [[1], [0]]], p=3)
    assert barcode(r) == bars((0, 2, 1), (1, 1, 1))


# -- the certificate -----------------------------------------------------------------

def test_tampered_vector_fails():
    d = decompose(DIMS_121)
    g = d.pieces[0]
    layer = (tuple(0 for _ in g.basis[0][0]),) + g.basis[0][1:]
    bad = dataclasses.replace(d, pieces=(dataclasses.replace(g, basis=(layer,) + g.basis[1:]),) + d.pieces[1:])
    report = certify(DIMS_121, bad)
    assert not report.ok
    assert {"(c) zero outside interval", "(d) pointwise independence and spanning"} & set(report.failed())


def test_other_maps_fail_alignment():
    d = decompose(DIMS_121)
    other = make_representation(1, "RR", [1, 2, 1], [[[1], [1]], [[0, 1]]], p=3)
    assert certify(other, d).failed() == ["(b) map closure and basis alignment"]


def test_other_shape_fails_header():
    d = decompose(DIMS_121)
    other = make_representation(1, "RR", [1, 1, 1], [[[1]], [[1]]], p=3)
    report = certify(other, d)
    assert "(a) vectors lie in V" in report.failed()
    assert "skipped" in report.render()


def test_wrong_multiplicity_fails():
    d = decompose(DIMS_121)
    g = dataclasses.replace(d.pieces[0], multiplicity=2)
    report = certify(DIMS_121, dataclasses.replace(d, pieces=(g,) + d.pieces[1:]))
    assert report.failed() == ["(e) dimension accounting"]


def test_misaligned_basis_fails():
    r = make_representation(0, "R", [2, 2], [[[1, 0], [0, 1]]], p=3)
    d = decompose(r)
    (g,) = d.pieces
    swapped = dataclasses.replace(g, basis=(g.basis[0], g.basis[1][::-1]))
    report = certify(r, dataclasses.replace(d, pieces=(swapped,)))
    assert report.failed() == ["(b) map closure and basis alignment"]


def test_leaking_piece_fails():
    # claim [0,0] when the vector at 0 maps onto something nonzero
    r = make_representation(0, "R", [1, 1], [[[1]]], p=3)
    fake = Decomposition(3, r.quiver, r.dims, (
        GradedPiece(Interval(0, 0), 0, (((1,),),), 1),
        GradedPiece(Interval(1, 1), 1, (((1,),),), 1),
    ))
    assert "(b) map closure and basis alignment" in certify(r, fake).failed()


@given(representations(max_window=5))
def test_certificate_round_trip(r):
    d = decompose(r)
    text = serialize_certificate(d)
    back = parse_certificate(text)
    assert back == d and serialize_certificate(back) == text
    assert certify(r, back).ok
    json.loads(text)


def test_malformed_certificate():
    with pytest.raises(CertificateFormatError):
        parse_certificate('{"p": 3}')
    text = serialize_certificate(decompose(DIMS_121)).replace('"left": 1', '"left": "x"', 1)
    with pytest.raises(CertificateFormatError, match="endpoint"):
        parse_certificate(text)


# -- properties ---------------------------------------------------------------------

@given(representations(max_window=5))
def test_pieces_are_aligned_copies(r):
    """Each index slice of a piece spans a copy of the interval module X^alpha."""
    q = r.quiver
    d = decompose(r)
    for g in d.pieces:
        alpha = g.interval
        for k in _inner_arrows(q, alpha):
            s, t = q.source(k), q.target(k)
            if s in g.vertices() and t in g.vertices():
                assert tuple(r.arrow_map(k).apply(v) for v in g.at(s)) == g.at(t)
        for j in range(g.multiplicity):
            slice_ = {i: Subspace.span([g.at(i)[j]], r.dim(i), r.p) for i in g.vertices()}
            assert all(s.dim == 1 for s in slice_.values())
            for k in range(g.first_vertex - 1, g.vertices()[-1] + 1):
                s, t = q.source(k), q.target(k)
                if s not in slice_:
                    continue
                moved = image(r.arrow_map(k), slice_[s])
                if t in slice_:
                    assert moved == slice_[t]
                elif t not in alpha:
                    assert moved.is_zero


@given(representations(max_window=5))
def test_dimension_accounting(r):
    b = barcode(r)
    for i in r.quiver.vertices:
        assert sum(m for a, m in b.items() if i in a) == r.dim(i)


@given(representations(max_window=5), st.integers(-30, 30))
def test_translation_stability(r, shift):
    moved = barcode(r.translated(shift))
    assert moved == {a.translated(shift): m for a, m in barcode(r).items()}


@settings(max_examples=20)
@given(representations(max_window=4))
def test_deterministic(r):
    assert serialize_certificate(decompose(r)) == serialize_certificate(decompose(r))


@pytest.mark.parametrize("seed", range(20))
def test_generated_window_four_certifies(seed):
    r = random_representation(4, 3, 32003, ("zero", "constant"), seed)
    assert certify(r, decompose(r)).ok
