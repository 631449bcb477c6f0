"""Finite tribrackets, local biquandles, their homology, and link invariants."""

from .biquandle import LocalBiquandle, from_horizontal, to_horizontal
from .bridge import (bold_angle, bold_square, phi, phi_chain, psi, psi_chain,
                     pull_cochain)
from .chains import LB, NIE, FormalChain, TribracketContext
from .cochains import (CochainTensor, are_cohomologous, cochain_from_tensor,
                       coboundary, cocycle_basis, evaluate, is_cocycle)
from .coloring import (WeightPolynomial, enumerate_region_colorings,
                       format_polynomial, homology_class_multiset, invariant,
                       lb_weight_chain, nie_weight_chain, region_to_semiarc,
                       semiarc_to_region)
from .diagram import (Crossing, CrossingFrame, ParseError, PlanarDiagram,
                      connected_sum, crossing_frame, parse_pd)
from .examples import PACKS, get_pack
from .homology import HomologyResult, boundary_matrix, class_coordinates, homology
from .tables import golden_tables, load_diagram, load_table, table_names
from .verify import verify_bridge
from .tensors import (AxiomReport, OperationTensor, alexander,
                      biquasile_to_vertical, check_axioms,
                      check_horizontal_exchange, check_quasigroup,
                      check_vertical_exchange, dehn, enumerate_horizontal,
                      horizontal_to_vertical, vertical_to_horizontal)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
