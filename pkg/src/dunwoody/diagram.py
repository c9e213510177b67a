"""Dunwoody diagrams D(a,b,c,n,r,s): construction, curve tracing,
admissibility, and presentation extraction.

The diagram has n upper and n lower cycles of d = 2a+b+c vertices each.
Upper cycle i sends a parallel belt arcs to upper cycle i+1, c vertical
arcs to lower cycle i, and b diagonal arcs to lower cycle i-1; lower
cycle i sends its a belt arcs to lower cycle i-1.  Upper cycle i is glued
to lower cycle i+s (mod n): vertex position v on the upper cycle is
identified with position (r-1-v) mod d on the lower one.

The relative orientations of the cycles, the orientation-reversing form
of the label rotation, and the letter table below are all calibrated:
they make the traced n=1 relator words reproduce the torus-knot family
words exactly (oracle module), make the published family parameters
admissible for every n, and make the covering homology agree with the
independent Alexander-polynomial route.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator, NamedTuple, Optional

from .presentation import Presentation
from .words import FreeWord, INDEXED, Letter

SCHEMA_VERSION = 1

UPPER = "upper"
LOWER = "lower"


class ParameterError(ValueError):
    """Rejected diagram parameters."""


class InadmissibleDiagramError(ValueError):
    """Operation requires an admissible diagram and this one is not."""


class StructuralError(RuntimeError):
    """The arc system is internally inconsistent (a construction bug)."""


class VertexId(NamedTuple):
    tier: str
    cycle: int
    position: int

    def key(self) -> tuple[int, int, int]:
        return (0 if self.tier == UPPER else 1, self.cycle, self.position)


class ArcKind(str, Enum):
    UPPER_BELT = "upper_belt"    # C'_i -> C'_{i+1}, a per cycle
    LOWER_BELT = "lower_belt"    # C''_i -> C''_{i+1}, a per cycle
    DIAGONAL = "diagonal"        # C'_i -> C''_{i+1}, b per cycle
    VERTICAL = "vertical"        # C'_i -> C''_i, c per cycle


class Arc(NamedTuple):
    kind: ArcKind
    start: VertexId
    end: VertexId
    bundle_index: int


@dataclass(frozen=True)
class DunwoodyParams:
    a: int
    b: int
    c: int
    n: int
    r: int
    s: int

    @property
    def d(self) -> int:
        return 2 * self.a + self.b + self.c

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.n, self.r, self.s)

    def __str__(self) -> str:
        return "D({},{},{},{},{},{})".format(*self.as_tuple())


def validate_params(a: int, b: int, c: int, n: int, r: int, s: int) -> DunwoodyParams:
    """Normalize raw integers into canonical parameters (r mod d, s mod n)."""
    for name, value in (("a", a), ("b", b), ("c", c)):
        if value < 0:
            raise ParameterError(f"{name} must be nonnegative")
    if n <= 0:
        raise ParameterError("n must be positive")
    if a + b + c == 0:
        raise ParameterError("a+b+c must be positive")
    d = 2 * a + b + c
    return DunwoodyParams(a, b, c, n, r % d, s % n)


def family_params(p: int, m: int, sign: int, n: int) -> DunwoodyParams:
    """Parameters whose diagram realizes the torus knot t(p, mp+sign).

    sign=+1 requires m >= 1; sign=-1 requires m >= 2 (so the cycle size
    d = 2m(p-1) -+ 1 stays positive and the knot is nontrivial).
    """
    if sign not in (1, -1):
        raise ParameterError("sign must be +1 or -1")
    if p <= 1:
        raise ParameterError("p must be greater than 1")
    if sign == 1 and m < 1:
        raise ParameterError("m must be positive for sign +")
    if sign == -1 and m < 2:
        raise ParameterError("m must be greater than 1 for sign -")
    if n <= 0:
        raise ParameterError("n must be positive")
    if sign == 1:
        return validate_params(1, p - 2, 2 * m * p - 2 * m - p + 1, n, p, p)
    return validate_params(1, p - 2, 2 * m * p - 2 * m - p - 1, n, -3 * p + 4, -p)


@dataclass(frozen=True)
class Diagram:
    params: DunwoodyParams
    arcs: tuple[Arc, ...]

    # -- vertex/arc geometry -------------------------------------------------

    def vertices(self) -> Iterator[VertexId]:
        for tier in (UPPER, LOWER):
            for cycle in range(self.params.n):
                for position in range(self.params.d):
                    yield VertexId(tier, cycle, position)

    @cached_property
    def _arcs_by_vertex(self) -> dict[VertexId, list[Arc]]:
        table: dict[VertexId, list[Arc]] = {}
        for arc in self.arcs:
            table.setdefault(arc.start, []).append(arc)
            table.setdefault(arc.end, []).append(arc)
        return table

    def arc_at(self, vertex: VertexId) -> Arc:
        found = self._arcs_by_vertex.get(vertex, [])
        if len(found) != 1:
            raise StructuralError(
                f"vertex {vertex} meets {len(found)} arcs; expected exactly 1"
            )
        return found[0]

    def other_end(self, vertex: VertexId) -> VertexId:
        arc = self.arc_at(vertex)
        return arc.end if vertex == arc.start else arc.start

    def partner(self, vertex: VertexId) -> VertexId:
        """The vertex identified with this one by the r/s gluing."""
        d, n, r, s = self.params.d, self.params.n, self.params.r, self.params.s
        if vertex.tier == UPPER:
            return VertexId(LOWER, (vertex.cycle + s) % n, (r - 1 - vertex.position) % d)
        return VertexId(UPPER, (vertex.cycle - s) % n, (r - 1 - vertex.position) % d)

    # -- symmetry ------------------------------------------------------------

    def rotate_vertex(self, vertex: VertexId, k: int = 1) -> VertexId:
        return VertexId(vertex.tier, (vertex.cycle + k) % self.params.n, vertex.position)

    def rotate_arc(self, arc: Arc, k: int = 1) -> Arc:
        return Arc(arc.kind, self.rotate_vertex(arc.start, k),
                   self.rotate_vertex(arc.end, k), arc.bundle_index)

    def rotated(self, k: int = 1) -> "Diagram":
        """The image of the diagram under the order-n cycle rotation."""
        return Diagram(self.params, tuple(self.rotate_arc(arc, k) for arc in self.arcs))


def build_diagram(params: DunwoodyParams) -> Diagram:
    """Lay out the nd arcs in position blocks around each cycle.

    Around every cycle the d positions split into four blocks: belt
    departures at 0..a-1, verticals at a..a+c-1, diagonals at
    a+c..a+c+b-1, and belt arrivals at a+b+c..d-1.  Parallel arcs in a
    bundle attach in reversed order at the far end, which keeps the
    bundle planar (no two arcs of a bundle cross).
    """
    a, b, c, n = params.a, params.b, params.c, params.n
    d = params.d
    arcs: list[Arc] = []
    for i in range(n):
        up_next = (i + 1) % n
        lo_prev = (i - 1) % n
        for j in range(a):
            arcs.append(Arc(
                ArcKind.UPPER_BELT,
                VertexId(UPPER, i, j),
                VertexId(UPPER, up_next, a + b + c + (a - 1 - j)),
                j,
            ))
        for j in range(c):
            arcs.append(Arc(
                ArcKind.VERTICAL,
                VertexId(UPPER, i, a + j),
                VertexId(LOWER, i, a + (c - 1 - j)),
                j,
            ))
        for j in range(b):
            arcs.append(Arc(
                ArcKind.DIAGONAL,
                VertexId(UPPER, i, a + c + j),
                VertexId(LOWER, lo_prev, a + c + (b - 1 - j)),
                j,
            ))
        for j in range(a):
            arcs.append(Arc(
                ArcKind.LOWER_BELT,
                VertexId(LOWER, i, j),
                VertexId(LOWER, lo_prev, a + b + c + (a - 1 - j)),
                j,
            ))
    diagram = Diagram(params, tuple(arcs))
    seen = diagram._arcs_by_vertex
    if len(seen) != 2 * n * d or any(len(v) != 1 for v in seen.values()):
        raise StructuralError("arc layout does not cover every vertex exactly once")
    return diagram


# ---------------------------------------------------------------------------
# Curve tracing.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Curve:
    """One closed curve of the glued diagram.

    The traversal alternates disk passages and arcs starting from
    ``start``: crossings[k] is the passage out of the k-th visited
    cycle-pair vertex, traversals[k] the arc ridden immediately after,
    with direction +1 when the arc is ridden start-to-end.
    """

    start: VertexId
    traversals: tuple[tuple[Arc, int], ...]
    crossings: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.traversals)

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(arc for arc, _ in self.traversals)

    def crossing_word(self) -> FreeWord:
        """The relator contribution x_handle^sign per disk passage."""
        return FreeWord([(handle, sign) for handle, sign in self.crossings])

    def reversed(self) -> "Curve":
        """Opposite orientation: reversed arcs, negated crossing signs."""
        return Curve(
            self.start,
            tuple((arc, -direction) for arc, direction in reversed(self.traversals)),
            tuple((handle, -sign) for handle, sign in reversed(self.crossings)),
        )


def _crossing_record(diagram: Diagram, vertex: VertexId) -> tuple[int, int]:
    # Sign +1 for a lower-to-upper passage, -1 for upper-to-lower; the
    # handle is indexed by the upper cycle of the identified pair.
    if vertex.tier == UPPER:
        return (vertex.cycle, -1)
    return ((vertex.cycle - diagram.params.s) % diagram.params.n, 1)


def trace_curves(diagram: Diagram) -> tuple[Curve, ...]:
    """Partition the arc system into closed curves.

    Each curve is traced from its least vertex (upper tier first, then
    cycle, then position), beginning with the disk passage out of that
    vertex.  Raises StructuralError when some vertex does not meet
    exactly one arc, i.e. the successor map is not a bijection.
    """
    visited: set[VertexId] = set()
    curves: list[Curve] = []
    for start in sorted(diagram.vertices(), key=VertexId.key):
        if start in visited:
            continue
        traversals: list[tuple[Arc, int]] = []
        crossings: list[tuple[int, int]] = []
        current = start
        while True:
            visited.add(current)
            crossings.append(_crossing_record(diagram, current))
            landing = diagram.partner(current)
            if landing in visited:
                raise StructuralError(
                    f"curve through {start} revisits {landing} mid-trace"
                )
            visited.add(landing)
            arc = diagram.arc_at(landing)
            direction = 1 if landing == arc.start else -1
            traversals.append((arc, direction))
            current = arc.end if direction == 1 else arc.start
            if current == start:
                break
            if current in visited:
                raise StructuralError(
                    f"curve through {start} re-enters {current} without closing"
                )
        curves.append(Curve(start, tuple(traversals), tuple(crossings)))
    total = sum(curve.length for curve in curves)
    if total != len(diagram.arcs):
        raise StructuralError(
            f"curves cover {total} arc traversals, expected {len(diagram.arcs)}"
        )
    return tuple(curves)


@dataclass(frozen=True)
class AdmissibilityReport:
    n: int
    curve_count: int
    orbit_transitive: bool

    @property
    def admissible(self) -> bool:
        return self.curve_count == self.n and self.orbit_transitive


def check_admissibility(diagram: Diagram) -> AdmissibilityReport:
    """Admissible iff the trace yields n curves forming one rotation orbit."""
    curves = trace_curves(diagram)
    n = diagram.params.n
    if len(curves) != n:
        return AdmissibilityReport(n, len(curves), False)
    arc_to_curve = {
        arc: index for index, curve in enumerate(curves) for arc in curve.arc_set
    }
    seed = curves[0].traversals[0][0]
    reached = {arc_to_curve[diagram.rotate_arc(seed, k)] for k in range(n)}
    return AdmissibilityReport(n, n, reached == set(range(n)))


# ---------------------------------------------------------------------------
# Words and presentations read off the diagram.
# ---------------------------------------------------------------------------

# Letter contributed by riding an arc (generator 1 exponent); verticals
# contribute nothing.  Direction +1 means start-to-end.
_ARC_LETTER = {
    (ArcKind.UPPER_BELT, 1): 1,
    (ArcKind.UPPER_BELT, -1): -1,
    (ArcKind.LOWER_BELT, 1): -1,
    (ArcKind.LOWER_BELT, -1): 1,
    (ArcKind.DIAGONAL, 1): -1,
    (ArcKind.DIAGONAL, -1): 1,
}


def _require_admissible(diagram: Diagram) -> tuple[Curve, ...]:
    report = check_admissibility(diagram)
    if not report.admissible:
        raise InadmissibleDiagramError(
            f"{diagram.params} is not admissible "
            f"(curve_count={report.curve_count}, n={diagram.params.n})"
        )
    return trace_curves(diagram)


def relator_word(diagram: Diagram) -> FreeWord:
    """The word over alpha (generator 0) and gamma (generator 1) read along
    the single curve of an admissible n=1 diagram.

    The traversal starts with the disk passage out of upper position 0;
    every passage contributes alpha^+-1 (+ downward, - upward), every belt
    or diagonal arc contributes gamma^+-1 per the calibrated table, and
    vertical arcs contribute nothing.
    """
    if diagram.params.n != 1:
        raise InadmissibleDiagramError("relator word requires n=1")
    curve = _require_admissible(diagram)[0]
    letters: list[Letter] = []
    for (_, sign), (arc, direction) in zip(curve.crossings, curve.traversals):
        letters.append((0, -sign))
        if arc.kind is not ArcKind.VERTICAL:
            letters.append((1, _ARC_LETTER[(arc.kind, direction)]))
    return FreeWord(letters)


def heegaard_presentation(diagram: Diagram) -> Presentation:
    """The cyclic-style presentation with one generator per identified
    cycle pair and one relator per traced curve.

    Curve orientations are transported around the rotation orbit: the
    relator of the curve reached by rotating curve 0 by k steps is the
    k-shifted base word.  Rotating an honest traversal gives an honest
    traversal, and coherent orientations are what make the presentation
    literally cyclic rather than cyclic up to inverting some relators.
    """
    from .presentation import shift_word

    curves = _require_admissible(diagram)
    n = diagram.params.n
    arc_to_curve = {
        arc: index for index, curve in enumerate(curves) for arc in curve.arc_set
    }
    base = curves[0].crossing_word()
    seed = curves[0].traversals[0][0]
    relators: list[Optional[FreeWord]] = [None] * n
    for k in range(n):
        relators[arc_to_curve[diagram.rotate_arc(seed, k)]] = shift_word(base, k, n)
    assert all(rel is not None for rel in relators)
    return Presentation(n, tuple(relators), INDEXED)


def closed_presentation(diagram: Diagram) -> Presentation:
    """The two-generator presentation <alpha, gamma | w, gamma> of the
    closed manifold of an admissible n=1 diagram."""
    word = relator_word(diagram)
    return Presentation(2, (word, FreeWord.generator(1, 1)), ("a", "g"))


def exponent_profile(word: FreeWord) -> tuple[int, int]:
    """(p_sigma, q_sigma): negated exponent sums of generators 0 and 1."""
    return (-word.exponent_sum(0), -word.exponent_sum(1))


@dataclass(frozen=True)
class ShiftSolutions:
    """Residues s mod n with q_sigma + s*p_sigma = 0 (mod n)."""

    n: int
    solutions: frozenset[int]
    universal: Optional[int]

    def __contains__(self, s: int) -> bool:
        return s % self.n in self.solutions


def derive_s(profile: tuple[int, int], n: int) -> ShiftSolutions:
    """Solve q_sigma + s*p_sigma = 0 (mod n) for s.

    When p_sigma = +-1 the congruence has the n-independent solution
    s = -q_sigma * p_sigma, reported as ``universal``.
    """
    if n < 1:
        raise ParameterError("n must be positive")
    p_sigma, q_sigma = profile
    solutions = frozenset(
        s for s in range(n) if (q_sigma + s * p_sigma) % n == 0
    )
    universal = -q_sigma * p_sigma if p_sigma in (1, -1) else None
    return ShiftSolutions(n, solutions, universal)


# ---------------------------------------------------------------------------
# Serialization: versioned JSON and DOT.
# ---------------------------------------------------------------------------


def _vertex_doc(vertex: VertexId) -> dict:
    return {"tier": vertex.tier, "cycle": vertex.cycle, "position": vertex.position}


def _vertex_from_doc(doc: dict) -> VertexId:
    return VertexId(doc["tier"], doc["cycle"], doc["position"])


def to_json(diagram: Diagram) -> dict:
    """A complete, versioned description of the diagram."""
    params = diagram.params
    return {
        "schema_version": SCHEMA_VERSION,
        "params": {
            "a": params.a, "b": params.b, "c": params.c,
            "n": params.n, "r": params.r, "s": params.s, "d": params.d,
        },
        "cycles": [
            {"tier": tier, "index": i, "length": params.d}
            for tier in (UPPER, LOWER) for i in range(params.n)
        ],
        "vertices": [_vertex_doc(v) for v in diagram.vertices()],
        "arcs": [
            {
                "kind": arc.kind.value,
                "bundle_index": arc.bundle_index,
                "start": _vertex_doc(arc.start),
                "end": _vertex_doc(arc.end),
            }
            for arc in diagram.arcs
        ],
        "pairing": {
            "cycle_shift": params.s,
            "label_rotation": params.r,
            "rule": "upper (i, v) ~ lower ((i+s) mod n, (r-1-v) mod d)",
            "pairs": [
                {"upper_cycle": i, "lower_cycle": (i + params.s) % params.n}
                for i in range(params.n)
            ],
        },
    }


def from_json(doc: dict) -> Diagram:
    """Rebuild a diagram from its JSON form, verifying consistency."""
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    p = doc["params"]
    params = validate_params(p["a"], p["b"], p["c"], p["n"], p["r"], p["s"])
    diagram = build_diagram(params)
    listed = {
        Arc(ArcKind(a["kind"]), _vertex_from_doc(a["start"]),
            _vertex_from_doc(a["end"]), a["bundle_index"])
        for a in doc["arcs"]
    }
    if listed != set(diagram.arcs):
        raise ValueError("arc list does not match the diagram of the stated params")
    return diagram


def _node_name(vertex: VertexId) -> str:
    return f"{'u' if vertex.tier == UPPER else 'l'}{vertex.cycle}p{vertex.position}"


def to_dot(diagram: Diagram) -> str:
    """DOT rendering: one cluster per cycle, arcs as edges, identified
    vertex pairs as dashed edges."""
    params = diagram.params
    lines = [
        f'graph "{params}" {{',
        f"  graph [schema_version={SCHEMA_VERSION}];",
        "  node [shape=circle, fontsize=8, width=0.25, fixedsize=true];",
    ]
    for tier in (UPPER, LOWER):
        for i in range(params.n):
            lines.append(f"  subgraph cluster_{tier}_{i} {{")
            lines.append(f'    label="{tier} {i}";')
            names = [_node_name(VertexId(tier, i, v)) for v in range(params.d)]
            for v, name in enumerate(names):
                lines.append(f'    {name} [label="{v}"];')
            ring = " -- ".join(names + [names[0]]) if params.d > 1 else None
            if ring:
                lines.append(f"    {ring} [penwidth=0.5, color=gray];")
            lines.append("  }")
    for arc in diagram.arcs:
        lines.append(
            f"  {_node_name(arc.start)} -- {_node_name(arc.end)}"
            f' [label="{arc.kind.value} {arc.bundle_index}"];'
        )
    seen: set[VertexId] = set()
    for vertex in diagram.vertices():
        if vertex in seen or vertex.tier != UPPER:
            continue
        mate = diagram.partner(vertex)
        seen.update((vertex, mate))
        lines.append(
            f"  {_node_name(vertex)} -- {_node_name(mate)} [style=dashed, color=gray];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
