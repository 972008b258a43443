"""Large k-connected subgraphs using few colours in edge-coloured complete graphs."""
from .graph import (
    EdgeColouring,
    InputError,
    SimpleGraph,
    components,
    connectivity,
    connectivity_bruteforce,
    is_k_connected,
    is_k_connected_bruteforce,
    min_vertex_cut,
    restrict,
    restrict_bipartite,
)
from .constructions import (
    KINDS,
    ConstructionSpec,
    bg_family_colouring,
    blowup_colouring,
    hypercube_colouring,
    random_colouring,
    subset_partition_colouring,
    triangle_colouring,
)
from .search import (
    BoundReport,
    Query,
    SearchRefused,
    M_value,
    m_bruteforce,
    max_k_connected_bruteforce,
    max_k_connected_subgraph,
    q_value,
)
from .lemmas import (
    Certificate,
    InvariantError,
    MaderReport,
    MergeRefused,
    bg_trichotomy,
    check_allSbig,
    check_intersect,
    check_r11bip,
    check_r1kbip,
    check_sumq,
    extract_21ktech,
    extract_2s1bip,
    kconn_merge,
    mader_extract,
    verify_bg_certificate,
)
from .extract import extract_32k, extract_jump, extract_r21
from .kcol_io import KcolParseError, RunReport, emit_report, read_colouring, write_colouring

__version__ = "0.1.0"
