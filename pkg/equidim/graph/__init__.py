from .common import (  # noqa
    DistanceMatrix,
    Graph,
    Pair,
    VertexSet,
    all_pairs_distances,
    bits_of,
    build_graph,
    complement,
    full_mask,
    is_connected,
    iter_bits,
    lowest_bit,
    require_connected,
)
from .formats import (  # noqa
    from_networkx,
    parse_edge_list,
    parse_graph6,
    read_graph6_stream,
    to_networkx,
    write_edge_list,
    write_graph6,
)
from .generators import FamilyKind, FamilySpec, generate  # noqa
