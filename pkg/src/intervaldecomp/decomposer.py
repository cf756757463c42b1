"""Interval decomposition by lifting the graded pieces of the filtration F.

For every interval alpha we pick a complement of F^{<alpha} inside F^alpha at
the leftmost window vertex of alpha and carry it across alpha: forward along
arrows pointing right, by exact lifts inside F^alpha along arrows pointing
left. The aligned bases give ``multiplicity`` copies of the interval module
on alpha, and the copies over all intervals form a direct sum equal to V.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .filtration import FiltrationTable, build_filtrations, f_alpha, f_strictly_below
from .linalg import (
    NotInSpanError,
    Subspace,
    Vector,
    complement,
    matrix_of,
    solve_lift,
)
from .quiver import NEG_INF, POS_INF, Dir, Interval, QuiverSpec, Tail, enumerate_intervals
from .representation import Representation


class DecompositionError(RuntimeError):
    """An invariant guaranteed by the construction failed; indicates a bug."""


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class GradedPiece:
    interval: Interval
    first_vertex: int
    # basis[j] lists the vectors at window vertex first_vertex + j
    basis: tuple[tuple[Vector, ...], ...]
    multiplicity: int

    def vertices(self) -> range:
        return range(self.first_vertex, self.first_vertex + len(self.basis))

    def at(self, vertex: int) -> tuple[Vector, ...]:
        j = vertex - self.first_vertex
        if 0 <= j < len(self.basis):
            return self.basis[j]
        return ()


Barcode = dict  # Interval -> multiplicity


@dataclass(frozen=True)
class Decomposition:
    """Graded pieces of a representation, identified by (p, quiver, dims)."""

    p: int
    quiver: QuiverSpec
    dims: tuple[int, ...]
    pieces: tuple[GradedPiece, ...]

    @classmethod
    def from_pieces(cls, rep: Representation, pieces) -> "Decomposition":
        pieces = tuple(sorted(pieces, key=lambda g: g.interval))
        return cls(rep.p, rep.quiver, rep.dims, pieces)

    @property
    def barcode(self) -> dict[Interval, int]:
        return {g.interval: g.multiplicity for g in self.pieces}


def _lift_into(r: Representation, k: int, fa_source: Subspace, y: Vector) -> Vector:
    """Some x in fa_source with f_k x = y (free coordinates of the restriction zero)."""
    f = r.arrow_map(k)
    gens = matrix_of(fa_source.basis, fa_source.ambient_dim, r.p)
    try:
        coeffs = solve_lift(f @ gens, y)
    except NotInSpanError as exc:
        raise DecompositionError(f"a{k} is not onto F^alpha at its target") from exc
    return gens.apply(coeffs)


def graded_piece(
    r: Representation,
    table: FiltrationTable,
    alpha: Interval,
    fa=None,
    fb=None,
) -> GradedPiece:
    q = r.quiver
    fa = f_alpha(r, table, alpha) if fa is None else fa
    fb = f_strictly_below(r, table, alpha) if fb is None else fb
    verts = alpha.window_part(q)
    i0 = verts[0]
    try:
        seed = complement(fb.at(r, i0), fa.at(r, i0))
    except NotInSpanError as exc:
        raise DecompositionError(f"F^<{alpha} is not inside F^{alpha} at {i0}") from exc
    m = seed.dim
    if m == 0:
        return GradedPiece(alpha, i0, tuple(() for _ in verts), 0)

    layers = [seed.basis]
    for k in verts[:-1]:
        cur = layers[-1]
        if q.direction(k) is Dir.R:
            nxt = tuple(r.arrow_map(k).apply(v) for v in cur)
        else:
            nxt = tuple(_lift_into(r, k, fa.at(r, k + 1), v) for v in cur)
        layers.append(nxt)

    for i, vecs in zip(verts, layers):
        span = Subspace.span(vecs, r.dim(i), r.p)
        hi_part = fa.at(r, i)
        lo_part = fb.at(r, i)
        if span.dim != m or not span <= hi_part or (span + lo_part) != hi_part \
                or (span & lo_part).dim != 0:
            raise DecompositionError(f"graded piece of {alpha} is not a complement at vertex {i}")
    return GradedPiece(alpha, i0, tuple(layers), m)


def decompose(r: Representation, table: FiltrationTable | None = None) -> Decomposition:
    table = build_filtrations(r) if table is None else table
    pieces = []
    for alpha in enumerate_intervals(r.quiver):
        g = graded_piece(r, table, alpha)
        if g.multiplicity:
            pieces.append(g)
    d = Decomposition.from_pieces(r, pieces)
    report = certify(r, d)
    if not report.ok:
        raise DecompositionError("decomposition failed its own certificate:\n" + report.render())
    return d


def barcode(r: Representation) -> dict[Interval, int]:
    return dict(decompose(r).barcode)


# -- certificate ---------------------------------------------------------------

@dataclass
class CertificateReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, failures: list[str]) -> None:
        self.checks.append((name, not failures, "; ".join(failures[:5])))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failed(self) -> list[str]:
        return [name for name, ok, _ in self.checks if not ok]

    def render(self) -> str:
        lines = []
        for name, ok, detail in self.checks:
            line = f"{'PASS' if ok else 'FAIL'} {name}"
            if detail:
                line += f": {detail}"
            lines.append(line)
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines)


def _effective(r: Representation, alpha: Interval) -> bool:
    q = r.quiver
    ok_left = (alpha.left == NEG_INF and q.left_tail is Tail.CONSTANT) or q.lo <= alpha.left <= q.hi
    ok_right = (alpha.right == POS_INF and q.right_tail is Tail.CONSTANT) or q.lo <= alpha.right <= q.hi
    return ok_left and ok_right


def certify(r: Representation, d: Decomposition) -> CertificateReport:
    """Check that ``d`` is an interval decomposition of ``r``; never raises on bad data."""
    q = r.quiver
    p = r.p
    report = CertificateReport()

    # (a) vectors lie in V
    bad = []
    if (r.p, r.quiver, r.dims) != (d.p, d.quiver, d.dims):
        bad.append("certificate header does not match the representation")
    for g in d.pieces:
        if not _effective(r, g.interval):
            bad.append(f"{g.interval} is not an interval of this quiver")
            continue
        if list(g.vertices()) != list(g.interval.window_part(q)):
            bad.append(f"{g.interval}: basis covers vertices {list(g.vertices())}")
        for i in g.vertices():
            for v in g.at(i):
                if len(v) != r.dim(i) or any(not (0 <= x < p) for x in v):
                    bad.append(f"{g.interval}: vector {list(v)} is not in V_{i}")
    report.add("(a) vectors lie in V", bad)
    if bad:
        for name in ("(b) map closure and basis alignment", "(c) zero outside interval",
                     "(d) pointwise independence and spanning", "(e) dimension accounting"):
            report.add(name, ["skipped: malformed certificate"])
        return report

    # (b) each piece is multiplicity aligned copies of the interval module
    bad = []
    for g in d.pieces:
        alpha = g.interval
        verts = g.vertices()
        for k in range(verts[0] - 1, verts[-1] + 1):
            s, t = q.source(k), q.target(k)
            f = r.arrow_map(k)
            src = g.at(s) if s in verts else ()
            if not src:
                continue
            if t in verts:
                want = g.at(t)
                got = tuple(f.apply(v) for v in src)
                if got != want:
                    bad.append(f"{alpha}: a{k} does not map the basis at {s} onto the basis at {t}")
            elif t in alpha:
                # an arrow into an infinite tail of alpha; the tail is a copy of the edge
                continue
            elif any(any(f.apply(v)) for v in src):
                bad.append(f"{alpha}: a{k} leaves the interval with a nonzero image")
    report.add("(b) map closure and basis alignment", bad)

    # (c) zero outside alpha; nonzero inside
    bad = []
    for g in d.pieces:
        for i in g.vertices():
            if i not in g.interval:
                bad.append(f"{g.interval}: vectors at vertex {i} outside the interval")
            if any(not any(v) for v in g.at(i)):
                bad.append(f"{g.interval}: zero vector at vertex {i}")
    report.add("(c) zero outside interval", bad)

    # (d) all pieces jointly form a basis at each vertex
    bad = []
    for i in q.vertices:
        vecs = [v for g in d.pieces for v in g.at(i)]
        span = Subspace.span(vecs, r.dim(i), p)
        if span.dim != len(vecs):
            bad.append(f"vertex {i}: {len(vecs)} vectors are dependent (rank {span.dim})")
        elif span.dim != r.dim(i):
            bad.append(f"vertex {i}: vectors span {span.dim} of {r.dim(i)} dimensions")
    report.add("(d) pointwise independence and spanning", bad)

    # (e) multiplicities
    bad = []
    for g in d.pieces:
        counts = {len(g.at(i)) for i in g.vertices()}
        if counts != {g.multiplicity} or g.multiplicity <= 0:
            bad.append(f"{g.interval}: multiplicity {g.multiplicity} but basis sizes {sorted(counts)}")
    for i in q.vertices:
        total = sum(g.multiplicity for g in d.pieces if i in g.interval)
        if total != r.dim(i):
            bad.append(f"vertex {i}: multiplicities sum to {total}, dim is {r.dim(i)}")
    report.add("(e) dimension accounting", bad)
    return report


# -- certificate file format -----------------------------------------------------

def _endpoint_json(x):
    if x == NEG_INF:
        return "-inf"
    if x == POS_INF:
        return "+inf"
    return int(x)


def _endpoint_parse(x):
    if x == "-inf":
        return NEG_INF
    if x == "+inf":
        return POS_INF
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    raise CertificateFormatError(f"bad interval endpoint {x!r}")


def serialize_certificate(d: Decomposition) -> str:
    q = d.quiver
    lines = ["{"]
    lines.append(f'  "p": {d.p},')
    lines.append(f'  "lo": {q.lo},')
    lines.append(f'  "hi": {q.hi},')
    lines.append(f'  "dims": {json.dumps(list(d.dims))},')
    lines.append(f'  "orientation": {json.dumps([x.value for x in q.orientation])},')
    lines.append(f'  "left_tail": "{q.left_tail.value}",')
    lines.append(f'  "right_tail": "{q.right_tail.value}",')
    entries = []
    for g in d.pieces:
        basis = json.dumps([[list(v) for v in layer] for layer in g.basis], separators=(", ", ": "))
        entries.append(
            "    {"
            f'"left": {json.dumps(_endpoint_json(g.interval.left))}, '
            f'"right": {json.dumps(_endpoint_json(g.interval.right))}, '
            f'"multiplicity": {g.multiplicity}, '
            f'"first_vertex": {g.first_vertex}, '
            f'"basis": {basis}'
            "}"
        )
    if entries:
        lines.append('  "pieces": [')
        lines.append(",\n".join(entries))
        lines.append("  ]")
    else:
        lines.append('  "pieces": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Decomposition:
    """Load a certificate; whether it fits a representation is decided by certify()."""
    try:
        doc = json.loads(text)
        q = QuiverSpec(doc["lo"], doc["hi"], tuple(doc["orientation"]),
                       doc["left_tail"], doc["right_tail"])
        pieces = []
        for e in doc["pieces"]:
            alpha = Interval(_endpoint_parse(e["left"]), _endpoint_parse(e["right"]))
            basis = tuple(tuple(tuple(int(x) for x in v) for v in layer) for layer in e["basis"])
            pieces.append(GradedPiece(alpha, int(e["first_vertex"]), basis, int(e["multiplicity"])))
        return Decomposition(int(doc["p"]), q, tuple(int(x) for x in doc["dims"]), tuple(pieces))
    except CertificateFormatError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise CertificateFormatError(f"malformed certificate: {exc}") from exc
