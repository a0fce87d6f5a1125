"""Decide triangle-foldability, produce witness orders, verify them.

A witness is a total order on the faces in which no two face pairs of
same-coloured edges interleave.  The search fixes the lexicographically
smallest face first (any rotation of a valid cyclic order is valid, so this
loses nothing) and prunes with one nesting stack per colour: placing a face
whose colour partner is already open must close the top of that colour's
stack.  Verification runs three independent routes and insists they agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .colouring import (
    VertexColouring,
    check_vertex_colouring,
    colour_involutions,
    find_orientation,
    find_vertex_colourings,
    induced_edge_colouring,
    parity_classes,
)
from .errors import (
    ImproperColouringError,
    InvalidSurfaceError,
    NotClosedError,
    NotConnectedError,
    OracleDisagreementError,
)
from .perms import (
    CyclicOrder,
    PairPartition,
    cycle_count_criterion,
    induced_cyclic,
    is_intersection_free_linear,
)
from .surfaces import (
    _require_valid,
    faces_of_edge_map,
    is_closed,
    is_connected,
)


@dataclass(frozen=True)
class OracleReport:
    """Outcome of the three independent witness checks."""

    definition: bool
    linear_if: bool
    cycle_count: bool

    @property
    def ok(self):
        return self.definition and self.linear_if and self.cycle_count

    def as_dict(self):
        return {"definition": self.definition,
                "linear_if": self.linear_if,
                "cycle_count": self.cycle_count}


@dataclass(frozen=True)
class FoldVerdict:
    outcome: str
    colouring: VertexColouring | None = None
    witness: tuple[str, ...] | None = None
    cyclic_order: CyclicOrder | None = None
    oracles: OracleReport | None = None
    reason: str | None = None
    detail: dict | None = None
    search_nodes: int = 0

    @property
    def foldable(self):
        return self.outcome == "foldable"

    def report(self):
        """JSON-ready verdict in the command line output format."""
        if self.foldable:
            return {
                "outcome": "foldable",
                "colouring": dict(sorted(self.colouring.colours.items())),
                "witness": list(self.witness),
                "oracles": self.oracles.as_dict(),
            }
        return {
            "outcome": "unfoldable",
            "reason": self.reason,
            "witness": self.detail,
            "search_nodes": self.search_nodes,
        }


def _require_searchable(surface):
    _require_valid(surface)
    if not surface.faces:
        raise InvalidSurfaceError("surface has no faces")
    if not is_closed(surface):
        raise NotClosedError("folding requires a closed surface")
    if not is_connected(surface):
        raise NotConnectedError("folding requires a connected surface")


def verify_folding(surface, colouring, order):
    """Check a face order against three independent folding oracles.

    (a) the definitional scan over all edge pairs, (b) the nesting check of
    each colour partition along the order, (c) the cycle-counting criterion
    on the induced cyclic order.  The three must agree; disagreement raises.
    """
    order = tuple(order)
    if sorted(order) != sorted(surface.faces):
        raise InvalidSurfaceError("order is not a permutation of the faces")
    if not is_closed(surface):
        raise NotClosedError("folding is defined for closed surfaces")
    edge_colouring = induced_edge_colouring(surface, colouring)
    involutions = colour_involutions(surface, edge_colouring)
    incident = faces_of_edge_map(surface)
    position = {f: i for i, f in enumerate(order)}

    spans = {e: tuple(sorted((position[f], position[g])))
             for e, (f, g) in incident.items()}
    colours = edge_colouring.colours
    ok_definition = True
    for e1, e2 in itertools.combinations(sorted(surface.edges), 2):
        (a1, a2), (b1, b2) = spans[e1], spans[e2]
        if (a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2) and colours[e1] == colours[e2]:
            ok_definition = False
            break

    ok_linear = all(
        is_intersection_free_linear(PairPartition(inv.pairs()), order)
        for inv in involutions)

    sigma = induced_cyclic(order)
    ok_cycles = all(cycle_count_criterion(sigma, inv.perm) for inv in involutions)

    if not (ok_definition == ok_linear == ok_cycles):
        raise OracleDisagreementError(
            f"folding oracles disagree: definition={ok_definition} "
            f"linear_if={ok_linear} cycle_count={ok_cycles}")
    return OracleReport(ok_definition, ok_linear, ok_cycles)


def _witness_orders(surface, involutions, prune=True, counter=None):
    """Yield all folding orders with the smallest face first, lexicographically.

    With ``prune`` the search keeps one nesting stack per colour and counts
    placements into ``counter[0]``; without it every head-fixed permutation
    is generated and filtered, which is only useful as a cross-check.
    """
    faces = sorted(surface.faces)
    if not faces:
        yield ()
        return
    head = faces[0]

    if not prune:
        partitions = [PairPartition.from_involution(inv.perm) for inv in involutions]
        for tail in itertools.permutations(faces[1:]):
            order = (head,) + tail
            if all(is_intersection_free_linear(p, order) for p in partitions):
                yield order
        return

    count = counter if counter is not None else [0]
    partner = [{f: inv.perm(f) for f in faces} for inv in involutions]
    total = len(faces)
    stacks = tuple([] for _ in involutions)
    placed = set()
    order = []

    def admissible(f):
        for k, stack in enumerate(stacks):
            p = partner[k][f]
            if p in placed and (not stack or stack[-1] != p):
                return False
        return True

    def place(f):
        for k, stack in enumerate(stacks):
            if partner[k][f] in placed:
                stack.pop()
            else:
                stack.append(f)
        placed.add(f)
        order.append(f)

    def unplace(f):
        order.pop()
        placed.remove(f)
        for k, stack in enumerate(stacks):
            p = partner[k][f]
            if p in placed:
                stack.append(p)
            else:
                stack.pop()

    def dfs():
        if len(order) == total:
            yield tuple(order)
            return
        for f in faces:
            if f in placed or not admissible(f):
                continue
            place(f)
            count[0] += 1
            yield from dfs()
            unplace(f)

    place(head)
    count[0] += 1
    yield from dfs()
    unplace(head)


def find_folding(surface):
    """Full decision pipeline for one closed connected surface.

    Per colouring representative: derive the edge colouring and the colour
    involutions, run the two necessary checks (orientation and parity),
    then search.  The first witness found is re-verified by all oracles.
    """
    _require_searchable(surface)
    representatives = find_vertex_colourings(surface)
    if not representatives:
        return FoldVerdict("unfoldable", reason="no-vertex-colouring",
                           detail={"colourings": 0}, search_nodes=0)
    orientation = find_orientation(surface)
    counter = [0]
    searched = 0
    odd_cycle = None
    for colouring in representatives:
        edge_colouring = induced_edge_colouring(surface, colouring)
        involutions = colour_involutions(surface, edge_colouring)
        parity = parity_classes(involutions, sorted(surface.faces))
        if not parity.ok:
            odd_cycle = list(parity.odd_cycle)
            continue
        if orientation is None:
            # parity and orientation bipartition the same multigraph
            raise OracleDisagreementError(
                "parity classes succeeded on a non-orientable surface")
        for witness in _witness_orders(surface, involutions, counter=counter):
            report = verify_folding(surface, colouring, witness)
            if not report.ok:
                raise OracleDisagreementError(
                    "search produced a witness the oracles reject")
            return FoldVerdict("foldable", colouring=colouring, witness=witness,
                               cyclic_order=induced_cyclic(witness),
                               oracles=report, search_nodes=counter[0])
        searched += 1
    if searched == 0:
        reason = "not-orientable" if orientation is None else "parity-failure"
        return FoldVerdict("unfoldable", reason=reason,
                           detail={"odd_cycle": odd_cycle}, search_nodes=0)
    return FoldVerdict("unfoldable", reason="exhausted-search",
                       detail={"colourings": len(representatives),
                               "searched": searched,
                               "search_nodes": counter[0]},
                       search_nodes=counter[0])


def enumerate_foldings(surface, colouring=None, limit=None, prune=True):
    """All witness orders for one colouring, smallest face first, in
    lexicographic order; ``limit`` caps the list."""
    _require_searchable(surface)
    if colouring is None:
        representatives = find_vertex_colourings(surface)
        if not representatives:
            raise ImproperColouringError(
                "no-vertex-colouring: the surface admits no vertex colouring")
        colouring = representatives[0]
    else:
        check_vertex_colouring(surface, colouring)
    edge_colouring = induced_edge_colouring(surface, colouring)
    involutions = colour_involutions(surface, edge_colouring)
    out = []
    for witness in _witness_orders(surface, involutions, prune=prune):
        out.append(witness)
        if limit is not None and len(out) >= limit:
            break
    return out
