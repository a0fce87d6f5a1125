"""Chord diagrams on the circle: placement, crossings, components, SVG.

Elements of a cyclic order are placed at equally spaced angular indices
around the unit circle and partition blocks become chords.  All predicates
work on the integer indices; floating point appears only when emitting SVG
coordinates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import GroundSetError, NotIntersectionFreeError
from .perms import PairPartition, induced_linear


@dataclass(frozen=True)
class CircleRepresentation:
    """Placement of ``ground_size`` elements at angular indices, plus chords.

    Index ``k`` stands for the unit-circle point at angle ``2πk/ground_size``,
    counted counterclockwise; successive elements of the cyclic order sit at
    successive indices.
    """

    ground_size: int
    placement: dict
    chords: tuple[tuple, ...]

    def index_of(self, element):
        try:
            return self.placement[element]
        except KeyError:
            raise GroundSetError(f"element {element!r} is not placed") from None


@dataclass(frozen=True)
class ComponentReport:
    """Bounded components listed by the arc origins along their boundary."""

    components: tuple[tuple, ...]

    def as_dict(self):
        return {"components": [list(c) for c in self.components]}


def build_circle_representation(order, partition, base=None):
    """Place elements along ``order`` (smallest first by default) and record chords."""
    dom = order.domain
    if len(dom) % 2:
        raise GroundSetError("ground set size must be even")
    if tuple(partition.ground) != dom:
        raise GroundSetError("partition does not cover the cyclic order's ground set")
    if not dom:
        return CircleRepresentation(0, {}, ())
    if base is None:
        base = dom[0]
    seq = induced_linear(order, base)
    placement = {x: k for k, x in enumerate(seq)}
    return CircleRepresentation(len(dom), placement, partition.pairs)


def crossing_pairs(representation):
    """All pairs of chords whose endpoints interleave around the circle."""
    size = representation.ground_size
    place = representation.placement
    out = []
    for (a, b), (c, d) in itertools.combinations(representation.chords, 2):
        ia = place[a]
        span = (place[b] - ia) % size
        inside_c = 0 < (place[c] - ia) % size < span
        inside_d = 0 < (place[d] - ia) % size < span
        if inside_c != inside_d:
            out.append(((a, b), (c, d)))
    return out


def bounded_components(order, rho):
    """Bounded components of the crossing-free diagram of ``(order, rho)``.

    Each component is traversed by alternating an arc step with a chord
    step: from an origin ``a`` the arc leads to ``order(a)`` and the chord
    to ``rho(order(a))``, the next origin.  The traversal therefore lists
    exactly one orbit of ``rho∘order`` per component.
    """
    if order.domain != rho.domain:
        raise GroundSetError("ground sets differ")
    if not (rho.is_involution() and rho.is_fixed_point_free()):
        raise GroundSetError("rho must be a fixed-point-free involution")
    partition = PairPartition.from_involution(rho)
    representation = build_circle_representation(order, partition)
    crossings = crossing_pairs(representation)
    if crossings:
        raise NotIntersectionFreeError(
            f"{len(crossings)} chord pair(s) cross: {crossings}", crossings)
    seen = set()
    components = []
    for start in order.domain:
        if start in seen:
            continue
        walk = []
        cur = start
        while True:
            walk.append(cur)
            seen.add(cur)
            cur = rho(order(cur))
            if cur == start:
                break
        components.append(tuple(walk))
    return ComponentReport(tuple(components))


def chord_parity(representation, chord):
    """``"odd"`` or ``"even"`` index distance between a chord's endpoints."""
    key = tuple(sorted(chord))
    if key not in representation.chords:
        raise GroundSetError(f"unknown chord {key!r}")
    a, b = key
    gap = (representation.placement[b] - representation.placement[a]) \
        % representation.ground_size
    return "odd" if gap % 2 else "even"


_PALETTE = ("#fff3b0", "#cde7f0", "#f0cde0", "#d8f0cd",
            "#f0e1cd", "#e0d4f7", "#cdf0e8", "#f0cdcd")

_SIZE = 512.0
_CENTRE = 256.0
_RADIUS = 200.0


def _point(index, size):
    angle = 2.0 * math.pi * index / size
    # SVG y grows downwards; subtract to keep the traversal counterclockwise
    return (_CENTRE + _RADIUS * math.cos(angle),
            _CENTRE - _RADIUS * math.sin(angle))


def _fmt(value):
    return f"{round(value, 4) + 0.0:.4f}"


def render_svg(representation, components=None):
    """Deterministic SVG of the diagram; optional shading of components.

    Rendering never validates: crossing chords are drawn as they are.
    """
    size = representation.ground_size
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" width="512" height="512" '
        'viewBox="0 0 512 512">',
        f'  <circle cx="{_fmt(_CENTRE)}" cy="{_fmt(_CENTRE)}" r="{_fmt(_RADIUS)}" '
        'fill="none" stroke="#888888" stroke-width="1"/>',
    ]
    if components is not None and size:
        for count, comp in enumerate(components.components):
            points = []
            for origin in comp:
                k = representation.placement[origin]
                points.append(_point(k, size))
                points.append(_point((k + 1) % size, size))
            attr = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
            fill = _PALETTE[count % len(_PALETTE)]
            lines.append(f'  <polygon id="comp-{escape(str(comp[0]))}" '
                         f'points="{attr}" fill="{fill}" stroke="none"/>')
    for a, b in representation.chords:
        x1, y1 = _point(representation.placement[a], size)
        x2, y2 = _point(representation.placement[b], size)
        lines.append(
            f'  <line id="chord-{escape(str(a))}-{escape(str(b))}" '
            f'x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            'stroke="#1f5fbf" stroke-width="2"/>')
    for element in sorted(representation.placement,
                          key=lambda x: representation.placement[x]):
        px, py = _point(representation.placement[element], size)
        lines.append(
            f'  <circle id="pt-{escape(str(element))}" cx="{_fmt(px)}" cy="{_fmt(py)}" '
            'r="14" fill="#ffffff" stroke="#000000" stroke-width="1.5"/>')
        lines.append(
            f'  <text x="{_fmt(px)}" y="{_fmt(py + 5.0)}" text-anchor="middle" '
            f'font-family="Helvetica,Arial,sans-serif" font-size="14">'
            f'{escape(str(element))}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
