"""Combinatorial triangle-folding of closed triangulated surfaces.

The package decides whether a closed triangulated surface, given purely as
an incidence structure, admits a flat folding onto a single triangle; it
produces witness face orders, verifies them through independent routes, and
renders chord diagrams of the underlying cyclic orders.
"""

from .circles import (
    CircleRepresentation,
    ComponentReport,
    bounded_components,
    build_circle_representation,
    chord_parity,
    crossing_pairs,
    render_svg,
)
from .colouring import (
    ColourInvolution,
    EdgeColouring,
    Orientation,
    ParityResult,
    VertexColouring,
    check_edge_colouring,
    check_vertex_colouring,
    colour_involutions,
    colouring_as_map_to_triangle,
    colouring_report,
    find_orientation,
    find_vertex_colourings,
    induced_edge_colouring,
    parity_classes,
)
from .errors import (
    DanglingReferenceError,
    DuplicateIdentifierError,
    FoldcheckError,
    GroundSetError,
    ImproperColouringError,
    InvalidSurfaceError,
    MapNotTotalError,
    NotClosedError,
    NotConnectedError,
    NotIntersectionFreeError,
    OracleDisagreementError,
    SurfaceFormatError,
    UnknownFixtureError,
)
from .folding import (
    FoldVerdict,
    OracleReport,
    enumerate_foldings,
    find_folding,
    verify_folding,
)
from .perms import (
    CyclicOrder,
    PairPartition,
    Permutation,
    compose,
    cycle_count,
    cycle_count_criterion,
    cycles_of,
    fixed_points,
    format_cycles,
    induced_cyclic,
    induced_linear,
    is_intersection_free_cyclic,
    is_intersection_free_linear,
    parse_cycles,
    reduct,
)
from .surfaces import (
    BUILTIN_NAMES,
    FaceAdjacency,
    SimplicialMapData,
    SurfaceData,
    Violation,
    builtin,
    face_adjacency_graph,
    face_vertices,
    is_closed,
    is_connected,
    load_surface,
    make_surface,
    parse_surface,
    serialize_surface,
    validate,
    verify_simplicial_map,
    vertex_fan,
)

__version__ = "0.1.0"
