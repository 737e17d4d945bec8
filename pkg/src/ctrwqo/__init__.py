"""Contraction order on graphs: models, diamond-free structure, antichains."""

from .errors import (
    BlockWithoutRoot,
    DisconnectedInput,
    EmptySequence,
    GraphError,
    KeyMismatch,
    MalformedGraph6,
    NotACycle,
    NotAnEdge,
    NotCliqueCactus,
    OutOfRange,
    ParamOutOfRange,
    SearchExhausted,
    TooLarge,
)
from .graph import (
    Graph,
    RootedGraph,
    antihole,
    complement,
    complete_bipartite,
    complete_graph,
    connected_components,
    contract_edge,
    cycle_graph,
    d_graph,
    diamond,
    empty_graph,
    gem,
    is_connected,
    parse_graph6,
    path_graph,
    star_graph,
    subset_degree,
    write_graph6,
)
from .blocks import BlockKind, block_decomposition
from .antichains import Family, FamilySpec, Relation, make, predicted_relation
from .dichotomy import dichotomy_verdict
from .canon import canonical_form, canonical_key, enumerate_connected, is_isomorphic
from .contraction import (
    find_induced_minor_model,
    find_model,
    find_rooted_model,
    is_contraction,
    is_induced_minor,
    is_rooted_contraction,
    one_step_contractions,
    sequence_embeds,
    verify_model,
)
from .structure import (
    Constructor,
    CycleKind,
    classify_cycle,
    compose,
    dec_block,
    excludes_diamond,
    is_clique_cactus,
    reconstruct_check,
)
