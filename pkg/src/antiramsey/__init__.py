"""Rainbow paths, cycles and matchings in edge-colored complete uniform hypergraphs."""
from .core import (Coloring, HostGraph, all_edges, edge_rank, edge_unrank, edges_meeting,
                   host_index, intersection_size, make_edge, make_vertex_set)
from .errors import (ArcError, CertificateRefuted, InvalidInput, NotCovered, NotFound,
                     ResourceLimit)
from .motif import (MotifKind, MotifSpec, Witness, classify_vertices, find_copy, find_rainbow,
                    find_rainbow_naive, linear_to_berge, verify_witness)
from .formulas import (BoundReport, BoundType, ar_value, berge_ar_bounds, cherry_density_check,
                       erdos_matching_value, ex_value, sandwich_check)
from .constructions import (FamilyKind, FamilySpec, GadgetPath, assemble_linear_path,
                            berge_block_coloring, build_family, family_size, find_cherry_pairs,
                            linear_path_lower_coloring, rainbow_plus_one)
from .solver import (Budget, RainbowEstimate, SolveResult, SolveStatus, all_copies,
                     ar_exact, ar_lower_certificate, rainbow_probability, turan_exact)
from .io import format_coloring, parse_coloring, read_coloring, write_coloring

__version__ = "0.1.0"
