"""Vertex and edge colourings, colour involutions, orientation, parity.

Vertex colours live in {1,2,3}; an edge inherits the colour
``c(v1) + c(v2) - 2`` of its endpoints, which sends the endpoint-colour
pairs {1,2}, {1,3}, {2,3} to 1, 2, 3.  On a closed surface each edge
colour class pairs up the faces across its edges, giving one
fixed-point-free involution per colour.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import GroundSetError, ImproperColouringError, NotClosedError
from .perms import Permutation, cycles_of
from .surfaces import (
    SimplicialMapData,
    builtin,
    face_adjacency_graph,
    faces_of_edge_map,
    _require_valid,
    is_closed,
)

COLOURS = (1, 2, 3)


@dataclass(frozen=True)
class VertexColouring:
    colours: dict[str, int]

    def colour_classes(self):
        return {c: tuple(sorted(v for v, cc in self.colours.items() if cc == c))
                for c in COLOURS}

    def vector(self):
        """Colours listed over the sorted vertices; the canonical sort key."""
        return tuple(self.colours[v] for v in sorted(self.colours))


@dataclass(frozen=True)
class EdgeColouring:
    colours: dict[str, int]

    def colour_classes(self):
        return {c: tuple(sorted(e for e, cc in self.colours.items() if cc == c))
                for c in COLOURS}


@dataclass(frozen=True)
class ColourInvolution:
    """Face pairing across the edges of a single colour."""

    colour: int
    perm: Permutation

    def pairs(self):
        return tuple(sorted(tuple(sorted(c)) for c in cycles_of(self.perm)
                            if len(c) == 2))


@dataclass(frozen=True)
class Orientation:
    """Face signs; +1 stands for the colour order (1,2,3), -1 for (1,3,2)."""

    signs: dict[str, int]

    def classes(self):
        plus = frozenset(f for f, s in self.signs.items() if s == 1)
        minus = frozenset(f for f, s in self.signs.items() if s == -1)
        return plus, minus


@dataclass(frozen=True)
class ParityResult:
    """Bipartition of the faces under the involutions, or an odd-cycle witness."""

    classes: tuple[frozenset, frozenset] | None
    odd_cycle: tuple[str, ...] | None

    @property
    def ok(self):
        return self.classes is not None


def check_vertex_colouring(surface, colouring):
    """Raise unless every vertex has a colour and edge endpoints differ."""
    col = colouring.colours
    missing = sorted(v for v in surface.vertices if v not in col)
    if missing:
        raise ImproperColouringError(f"vertices without colour: {missing}")
    bad = sorted(v for v, c in col.items() if c not in COLOURS)
    if bad:
        raise ImproperColouringError(f"colours outside 1..3 at {bad}")
    for e, (a, b) in surface.edges.items():
        if col[a] == col[b]:
            raise ImproperColouringError(
                f"edge {e!r} joins two vertices of colour {col[a]}")


def check_edge_colouring(surface, colouring):
    """Raise unless every face sees three pairwise different edge colours."""
    col = colouring.colours
    missing = sorted(e for e in surface.edges if e not in col)
    if missing:
        raise ImproperColouringError(f"edges without colour: {missing}")
    bad = sorted(e for e, c in col.items() if c not in COLOURS)
    if bad:
        raise ImproperColouringError(f"colours outside 1..3 at {bad}")
    for f, triple in surface.faces.items():
        seen = sorted(col[e] for e in triple)
        if seen != [1, 2, 3]:
            raise ImproperColouringError(
                f"face {f!r} sees edge colours {seen}")


def _colouring_order(vertices, adj):
    """Deterministic search order; prefers vertices touching coloured ones."""
    remaining = set(vertices)
    ordered = []
    ordered_set = set()
    while remaining:
        touching = sorted(v for v in remaining if adj[v] & ordered_set)
        pick = touching[0] if touching else min(remaining)
        ordered.append(pick)
        ordered_set.add(pick)
        remaining.remove(pick)
    return ordered


def _canonical(colours):
    """Relabel colours so the sorted-vertex colour vector is minimal."""
    vs = sorted(colours)
    best_vec = None
    best_map = None
    for perm in itertools.permutations(COLOURS):
        relabel = {1: perm[0], 2: perm[1], 3: perm[2]}
        vec = tuple(relabel[colours[v]] for v in vs)
        if best_vec is None or vec < best_vec:
            best_vec, best_map = vec, relabel
    return VertexColouring({v: best_map[colours[v]] for v in vs})


def find_vertex_colourings(surface):
    """All proper vertex colourings, one canonical representative per orbit
    of the six colour permutations, sorted by colour vector."""
    _require_valid(surface)
    adj = {v: set() for v in surface.vertices}
    for a, b in surface.edges.values():
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    order = _colouring_order(surface.vertices, adj)

    found = []
    assign = {}

    def extend(i, used):
        if i == len(order):
            found.append(dict(assign))
            return
        v = order[i]
        taken = {assign[u] for u in adj[v] if u in assign}
        # new colours enter in increasing order: one search leaf per orbit
        limit = used + 1 if used < 3 else 3
        for colour in range(1, limit + 1):
            if colour in taken:
                continue
            assign[v] = colour
            extend(i + 1, max(used, colour))
            del assign[v]

    extend(0, 0)
    reps = {}
    for colours in found:
        cv = _canonical(colours)
        reps[cv.vector()] = cv
    return [reps[key] for key in sorted(reps)]


def induced_edge_colouring(surface, colouring):
    """Edge colouring ``c(v1) + c(v2) - 2`` of a proper vertex colouring."""
    check_vertex_colouring(surface, colouring)
    col = colouring.colours
    return EdgeColouring({e: col[a] + col[b] - 2
                          for e, (a, b) in surface.edges.items()})


def colour_involutions(surface, edge_colouring):
    """The three face involutions of a proper edge colouring, colours 1..3."""
    if not is_closed(surface):
        raise NotClosedError("colour involutions require a closed surface")
    check_edge_colouring(surface, edge_colouring)
    incident = faces_of_edge_map(surface)
    out = []
    for colour in COLOURS:
        mapping = {}
        for e, c in edge_colouring.colours.items():
            if c != colour:
                continue
            f, g = incident[e]
            mapping[f] = g
            mapping[g] = f
        if len(mapping) != len(surface.faces):
            raise ImproperColouringError(
                f"colour {colour} does not pair up all faces")
        out.append(ColourInvolution(colour, Permutation.from_mapping(mapping)))
    return tuple(out)


def find_orientation(surface):
    """Alternating face signs across every edge, or ``None`` if impossible.

    The smallest face of each adjacency component receives +1.
    """
    graph = face_adjacency_graph(surface)
    adj = graph.adjacency()
    signs = {}
    for start in graph.faces:
        if start in signs:
            continue
        signs[start] = 1
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            want = -signs[cur]
            for _, other in adj[cur]:
                if other not in signs:
                    signs[other] = want
                    queue.append(other)
                elif signs[other] != want:
                    return None
    return Orientation(signs)


def _odd_cycle(parent, u, w):
    def chain(x):
        path = [x]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    pu, pw = chain(u), chain(w)
    i = 0
    while i < min(len(pu), len(pw)) and pu[i] == pw[i]:
        i += 1
    # pu[i-1] is the lowest common ancestor; walk down to u, across to w, back up
    return tuple(pu[i - 1:] + pw[:i - 1:-1])


def parity_classes(involutions, faces):
    """Two-colour the faces so every involution swaps the classes.

    Works orbit by orbit of the group the involutions generate; the smallest
    face of each orbit lands in the first class.  On failure the result
    carries an odd cycle of faces consecutively linked by involutions.
    """
    faces = tuple(sorted(faces))
    involutions = tuple(involutions)
    for inv in involutions:
        if inv.perm.domain != faces:
            raise GroundSetError("involution acts on a different face set")
        if not (inv.perm.is_involution() and inv.perm.is_fixed_point_free()):
            raise GroundSetError(f"colour {inv.colour} map is not a fixed-point-free involution")
    parity = {}
    parent = {}
    for start in faces:
        if start in parity:
            continue
        parity[start] = 0
        parent[start] = None
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for inv in involutions:
                nxt = inv.perm(cur)
                if nxt not in parity:
                    parity[nxt] = parity[cur] ^ 1
                    parent[nxt] = cur
                    queue.append(nxt)
                elif parity[nxt] == parity[cur]:
                    return ParityResult(None, _odd_cycle(parent, cur, nxt))
    even = frozenset(f for f in faces if parity[f] == 0)
    odd = frozenset(f for f in faces if parity[f] == 1)
    return ParityResult((even, odd), None)


def colouring_as_map_to_triangle(surface, colouring):
    """The map collapsing the surface onto the triangle along its colouring."""
    check_vertex_colouring(surface, colouring)
    triangle = builtin("triangle")
    edge_by_pair = {frozenset(pair): e for e, pair in triangle.edges.items()}
    (face_id,) = triangle.faces
    col = colouring.colours
    vertex_map = {v: str(col[v]) for v in surface.vertices}
    edge_map = {e: edge_by_pair[frozenset((str(col[a]), str(col[b])))]
                for e, (a, b) in surface.edges.items()}
    face_map = {f: face_id for f in surface.faces}
    return SimplicialMapData(vertex_map, edge_map, face_map)


def colouring_report(surface, colouring):
    """JSON-ready report: vertex colours, edge colours, involution pairs.

    Involutions only exist on closed surfaces; the field is ``None`` otherwise.
    """
    edge_colouring = induced_edge_colouring(surface, colouring)
    if is_closed(surface):
        involutions = colour_involutions(surface, edge_colouring)
        involution_field = {str(inv.colour): [list(pair) for pair in inv.pairs()]
                            for inv in involutions}
    else:
        involution_field = None
    return {
        "vertex_colouring": dict(sorted(colouring.colours.items())),
        "edge_colouring": dict(sorted(edge_colouring.colours.items())),
        "involutions": involution_field,
    }
