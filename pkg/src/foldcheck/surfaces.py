"""Triangulated surfaces as pure incidence structures.

A surface here is the combinatorial data only: vertex identifiers, edges as
unordered vertex pairs, faces as unordered edge triples.  Distinct edges may
join the same two vertices and distinct faces may span the same vertex set,
so this is deliberately weaker than a simplicial complex.  Faces are
therefore keyed by their edge triple; vertex triples are derived.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    DanglingReferenceError,
    DuplicateIdentifierError,
    InvalidSurfaceError,
    MapNotTotalError,
    NotClosedError,
    SurfaceFormatError,
    UnknownFixtureError,
)

BUILTIN_NAMES = ("octahedron", "tetrahedron", "torus8", "triangle")


@dataclass(frozen=True)
class SurfaceData:
    """Incidence structure of a triangulated surface.

    ``vertices`` is sorted; edge pairs and face triples are stored sorted so
    that structurally equal surfaces compare equal.
    """

    vertices: tuple[str, ...]
    edges: dict[str, tuple[str, ...]]
    faces: dict[str, tuple[str, ...]]


@dataclass(frozen=True)
class SimplicialMapData:
    """Element-wise maps between two surfaces (vertices, edges, faces)."""

    vertex_map: dict[str, str]
    edge_map: dict[str, str]
    face_map: dict[str, str]


@dataclass(frozen=True)
class Violation:
    """One failed surface condition, named by its condition number."""

    condition: int
    element: str
    detail: str


@dataclass(frozen=True)
class FaceAdjacency:
    """Multigraph on faces with one link per surface edge."""

    faces: tuple[str, ...]
    links: tuple[tuple[str, str, str], ...]  # (edge, face, face), faces sorted

    def adjacency(self):
        adj = {f: [] for f in self.faces}
        for edge, f, g in self.links:
            adj[f].append((edge, g))
            adj[g].append((edge, f))
        for lst in adj.values():
            lst.sort()
        return adj


def make_surface(vertices, edges, faces):
    """Normalise raw data into a ``SurfaceData`` (no validation)."""
    vs = tuple(sorted(vertices))
    es = {}
    for e in sorted(edges):
        pair = tuple(sorted(edges[e]))
        if len(pair) != 2:
            raise SurfaceFormatError(f"edge {e!r} must list exactly two vertices")
        es[e] = pair
    fs = {}
    for f in sorted(faces):
        triple = tuple(sorted(faces[f]))
        if len(triple) != 3:
            raise SurfaceFormatError(f"face {f!r} must list exactly three edges")
        fs[f] = triple
    return SurfaceData(vs, es, fs)


def _no_duplicate_keys(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise DuplicateIdentifierError(f"duplicate identifier {key!r}")
        out[key] = value
    return out


def parse_surface(text):
    """Parse the JSON surface format; reports syntax errors with position."""
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise SurfaceFormatError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise SurfaceFormatError("top level must be an object")
    missing = {"vertices", "edges", "faces"} - doc.keys()
    if missing:
        raise SurfaceFormatError(f"missing keys: {sorted(missing)}")
    extra = doc.keys() - {"vertices", "edges", "faces"}
    if extra:
        raise SurfaceFormatError(f"unexpected keys: {sorted(extra)}")

    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise SurfaceFormatError('"vertices" must be an array of strings')
    if len(set(vertices)) != len(vertices):
        dup = sorted({v for v in vertices if vertices.count(v) > 1})
        raise DuplicateIdentifierError(f"duplicate vertex identifiers {dup}")

    edges = doc["edges"]
    if not isinstance(edges, dict):
        raise SurfaceFormatError('"edges" must be an object')
    vset = set(vertices)
    for e, pair in edges.items():
        if not isinstance(pair, list) or len(pair) != 2 or \
                not all(isinstance(v, str) for v in pair):
            raise SurfaceFormatError(f"edge {e!r} must be a 2-array of vertex ids")
        for v in pair:
            if v not in vset:
                raise DanglingReferenceError(
                    f"edge {e!r} references unknown vertex {v!r}")

    faces = doc["faces"]
    if not isinstance(faces, dict):
        raise SurfaceFormatError('"faces" must be an object')
    for f, triple in faces.items():
        if not isinstance(triple, list) or len(triple) != 3 or \
                not all(isinstance(e, str) for e in triple):
            raise SurfaceFormatError(f"face {f!r} must be a 3-array of edge ids")
        for e in triple:
            if e not in edges:
                raise DanglingReferenceError(
                    f"face {f!r} references unknown edge {e!r}")

    return make_surface(vertices, edges, faces)


def serialize_surface(surface):
    """Canonical text form: sorted keys, two-space indent, LF, final newline."""
    doc = {
        "vertices": list(surface.vertices),
        "edges": {e: list(pair) for e, pair in surface.edges.items()},
        "faces": {f: list(triple) for f, triple in surface.faces.items()},
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_surface(path):
    with open(path, encoding="utf-8") as fh:
        return parse_surface(fh.read())


def faces_of_edge_map(surface):
    """Map edge id -> sorted tuple of ids of the faces using it."""
    out = {e: [] for e in surface.edges}
    for f, triple in surface.faces.items():
        for e in set(triple):
            if e in out:
                out[e].append(f)
    return {e: tuple(sorted(fs)) for e, fs in out.items()}


def face_vertices(surface, face):
    """Sorted vertex ids spanned by a face's edges."""
    spanned = set()
    for e in surface.faces[face]:
        spanned.update(surface.edges[e])
    return tuple(sorted(spanned))


def _fan_structure(surface, vertex):
    """Edges and faces around a vertex, with each face's two local edges.

    Returns ``None`` when some incident face does not have exactly two
    edges at the vertex; condition 3 reports that case on its own.
    """
    edges_at = [e for e in sorted(surface.edges) if vertex in surface.edges[e]]
    at_set = set(edges_at)
    link = {}
    for f in sorted(surface.faces):
        local = [e for e in surface.faces[f] if e in at_set]
        if not local:
            continue
        if len(local) != 2 or local[0] == local[1]:
            return None
        link[f] = tuple(local)
    return edges_at, link


def _fan_components(edges_at, link):
    """Split the edge-face fan into alternating walks (paths or cycles)."""
    adj = {e: [] for e in edges_at}
    for f, (e1, e2) in link.items():
        adj[e1].append((f, e2))
        adj[e2].append((f, e1))
    for lst in adj.values():
        lst.sort()
    if any(len(lst) > 2 for lst in adj.values()):
        return None
    remaining_edges = set(edges_at)
    remaining_faces = set(link)
    components = []
    while remaining_edges:
        ends = sorted(e for e in remaining_edges if len(adj[e]) < 2)
        start = ends[0] if ends else min(remaining_edges)
        seq = [start]
        remaining_edges.discard(start)
        cur = start
        kind = "path"
        while True:
            step = next(((f, e) for f, e in adj[cur] if f in remaining_faces), None)
            if step is None:
                break
            f, nxt = step
            remaining_faces.discard(f)
            if nxt == start:
                seq.append(f)
                kind = "cycle"
                break
            seq.extend((f, nxt))
            remaining_edges.discard(nxt)
            cur = nxt
        components.append((kind, tuple(seq)))
    return components


def vertex_fan(surface, vertex):
    """The alternating edge-face walk around ``vertex``.

    Returns ``("path", sequence)`` or ``("cycle", sequence)``; a cycle
    sequence ends with the face that closes back onto the first edge.
    Raises if the fan is broken or splits.
    """
    if vertex not in set(surface.vertices):
        raise InvalidSurfaceError(f"unknown vertex {vertex!r}")
    structure = _fan_structure(surface, vertex)
    if structure is None:
        raise InvalidSurfaceError(f"fan at {vertex!r} has a malformed face")
    edges_at, link = structure
    if not edges_at:
        raise InvalidSurfaceError(f"vertex {vertex!r} has no incident edges")
    components = _fan_components(edges_at, link)
    if components is None or len(components) != 1:
        raise InvalidSurfaceError(f"fan at {vertex!r} is not a single path or cycle")
    return components[0]


def validate(surface):
    """Check all surface conditions; returns a sorted list of violations."""
    out = []
    vset = set(surface.vertices)

    good_edges = set()
    for e, pair in surface.edges.items():
        names = set(pair)
        if len(names) != 2:
            out.append(Violation(2, e, f"edge must join two distinct vertices, got {list(pair)}"))
            continue
        missing = sorted(names - vset)
        if missing:
            out.append(Violation(2, e, f"unknown vertices {missing}"))
            continue
        good_edges.add(e)

    for f, triple in surface.faces.items():
        if len(set(triple)) != 3:
            out.append(Violation(3, f, f"face must use three distinct edges, got {list(triple)}"))
            continue
        unknown = sorted(e for e in triple if e not in surface.edges)
        if unknown:
            out.append(Violation(3, f, f"unknown edges {unknown}"))
            continue
        if any(e not in good_edges for e in triple):
            continue  # the edge's own condition-2 violation already reports this
        pairs = [set(surface.edges[e]) for e in triple]
        spanned = pairs[0] | pairs[1] | pairs[2]
        overlaps = [len(pairs[i] & pairs[j]) for i, j in ((0, 1), (0, 2), (1, 2))]
        if len(spanned) != 3 or overlaps != [1, 1, 1]:
            out.append(Violation(
                3, f,
                f"edge pairs {sorted(map(sorted, pairs))} do not form a triangle"))

    incident = faces_of_edge_map(surface)
    for e, fs in incident.items():
        if len(fs) > 2:
            out.append(Violation(4, e, f"incident to {len(fs)} faces {list(fs)}"))
        if not fs:
            out.append(Violation(7, e, "no incident face"))

    used = set()
    for pair in surface.edges.values():
        used.update(pair)
    for v in surface.vertices:
        if v not in used:
            out.append(Violation(6, v, "no incident edge"))

    for v in surface.vertices:
        structure = _fan_structure(surface, v)
        if structure is None:
            continue  # a condition-3 violation already covers this vertex
        edges_at, link = structure
        if not edges_at:
            continue  # condition 6 already covers this vertex
        if any(e not in good_edges for e in edges_at):
            continue
        components = _fan_components(edges_at, link)
        if components is None:
            out.append(Violation(5, v, "an edge of the fan lies in more than two faces"))
        elif len(components) != 1:
            parts = " / ".join("[" + ",".join(seq) + "]" for _, seq in components)
            out.append(Violation(5, v, f"fan splits into {len(components)} components: {parts}"))

    return sorted(out, key=lambda viol: (viol.condition, viol.element))


def _require_valid(surface):
    problems = validate(surface)
    if problems:
        first = problems[0]
        raise InvalidSurfaceError(
            f"surface fails condition {first.condition} at {first.element!r}: {first.detail}")


def is_closed(surface):
    """True iff every edge lies in exactly two faces.  Requires a valid surface."""
    _require_valid(surface)
    return all(len(fs) == 2 for fs in faces_of_edge_map(surface).values())


def face_adjacency_graph(surface):
    """Multigraph on faces with one link per edge; requires a closed surface."""
    if not is_closed(surface):
        raise NotClosedError("face adjacency requires a closed surface")
    links = tuple(sorted(
        (e, fs[0], fs[1]) for e, fs in faces_of_edge_map(surface).items()))
    return FaceAdjacency(tuple(sorted(surface.faces)), links)


def is_connected(surface):
    """True iff the faces form a single component of the adjacency multigraph."""
    graph = face_adjacency_graph(surface)
    if not graph.faces:
        return True
    adj = graph.adjacency()
    seen = {graph.faces[0]}
    queue = [graph.faces[0]]
    while queue:
        cur = queue.pop()
        for _, other in adj[cur]:
            if other not in seen:
                seen.add(other)
                queue.append(other)
    return len(seen) == len(graph.faces)


def verify_simplicial_map(src, dst, mapping):
    """True iff ``mapping`` preserves every incidence from ``src`` to ``dst``."""
    _require_valid(src)
    _require_valid(dst)
    for label, elements, part in (
            ("vertex", src.vertices, mapping.vertex_map),
            ("edge", src.edges, mapping.edge_map),
            ("face", src.faces, mapping.face_map)):
        missing = sorted(x for x in elements if x not in part)
        if missing:
            raise MapNotTotalError(f"{label} map misses {missing}")
    dst_vertices = set(dst.vertices)
    for v, img in mapping.vertex_map.items():
        if img not in dst_vertices:
            raise MapNotTotalError(f"vertex {v!r} maps to unknown {img!r}")
    for e, img in mapping.edge_map.items():
        if img not in dst.edges:
            raise MapNotTotalError(f"edge {e!r} maps to unknown {img!r}")
    for f, img in mapping.face_map.items():
        if img not in dst.faces:
            raise MapNotTotalError(f"face {f!r} maps to unknown {img!r}")

    for e, pair in src.edges.items():
        target = set(dst.edges[mapping.edge_map[e]])
        if any(mapping.vertex_map[v] not in target for v in set(pair)):
            return False
    for f, triple in src.faces.items():
        target_edges = set(dst.faces[mapping.face_map[f]])
        if any(mapping.edge_map[e] not in target_edges for e in set(triple)):
            return False
        target_vertices = set(face_vertices(dst, mapping.face_map[f]))
        if any(mapping.vertex_map[v] not in target_vertices
               for v in face_vertices(src, f)):
            return False
    return True


def _triangle():
    return make_surface(
        ["1", "2", "3"],
        {"12": ("1", "2"), "13": ("1", "3"), "23": ("2", "3")},
        {"123": ("12", "13", "23")})


def _tetrahedron():
    vertices = ["1", "2", "3", "4"]
    edges = {a + b: (a, b) for a, b in
             (("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("2", "4"), ("3", "4"))}
    faces = {
        "123": ("12", "13", "23"),
        "124": ("12", "14", "24"),
        "134": ("13", "14", "34"),
        "234": ("23", "24", "34"),
    }
    return make_surface(vertices, edges, faces)


def _octahedron():
    # Apex 1, equator 2-3-4-5, antipode 6; opposite vertex pairs are
    # (1,6), (2,4), (3,5).
    vertices = ["1", "2", "3", "4", "5", "6"]
    edge_pairs = [
        ("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"),
        ("2", "3"), ("3", "4"), ("4", "5"), ("2", "5"),
        ("2", "6"), ("3", "6"), ("4", "6"), ("5", "6"),
    ]
    edges = {a + b: (a, b) for a, b in edge_pairs}
    face_triples = ["123", "134", "145", "125", "236", "346", "456", "256"]
    faces = {}
    for name in face_triples:
        a, b, c = name
        triple = tuple(sorted(("".join(sorted(a + b)), "".join(sorted(a + c)),
                               "".join(sorted(b + c)))))
        faces[name] = triple
    return make_surface(vertices, edges, faces)


def _torus8():
    vertices = ["A", "B", "C", "D"]
    edges = {
        "a": ("A", "B"), "b": ("A", "B"),
        "c": ("A", "C"), "d": ("A", "C"),
        "e": ("A", "D"), "g": ("A", "D"), "i": ("A", "D"), "k": ("A", "D"),
        "f": ("B", "D"), "j": ("B", "D"),
        "h": ("C", "D"), "l": ("C", "D"),
    }
    faces = {
        "1": ("c", "e", "l"),
        "2": ("a", "f", "e"),
        "3": ("b", "g", "f"),
        "4": ("c", "h", "g"),
        "5": ("d", "i", "h"),
        "6": ("b", "j", "i"),
        "7": ("a", "k", "j"),
        "8": ("d", "l", "k"),
    }
    return make_surface(vertices, edges, faces)


_FIXTURES = {
    "triangle": _triangle,
    "tetrahedron": _tetrahedron,
    "octahedron": _octahedron,
    "torus8": _torus8,
}


def builtin(name):
    """One of the built-in fixtures: triangle, tetrahedron, octahedron, torus8."""
    try:
        maker = _FIXTURES[name]
    except KeyError:
        raise UnknownFixtureError(
            f"unknown fixture {name!r}; available: {', '.join(BUILTIN_NAMES)}") from None
    return maker()
