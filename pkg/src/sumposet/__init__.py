"""Local cohomology decompositions over sum-closed posets of ideal decompositions.

Given an ideal presented as an intersection of linear primes or of pure-power
monomial ideals, this package builds the poset of all distinct component sums,
computes derived limits and colimits through Roos complexes, reads the
Hochster/Terai decomposition multiplicities off interval homology, and
cross-validates everything against the classical link-based Hochster formula.
"""

from .decomp import (CycleList, DecompositionReport, HilbertSeries,
                     characteristic_cycle, dmodule_length, hilbert_series,
                     hypotheses_report, interval_betti_table,
                     laurent_expansion, mult_M, mult_m, regularity)
from .errors import InputError, RefusalError
from .exactlin import FieldSpec, Matrix, kernel_basis, rank, rref
from .ideals import (AmbientRing, LinearIdeal, PurePowerIdeal, Subspace,
                     degree_piece, height, ideal_eq, ideal_sum,
                     intersect_degree_pieces, label, projection_matrix,
                     quotient_degree_basis, quotient_degree_dim, quotient_dim,
                     sum_degree_pieces)
from .oracle import (compare, link_hochster_series, oracle_regularity,
                     oracle_series_table)
from .poset import (Interval, Poset, build_poset, hasse_edges,
                    open_upper_interval, order_complex, poset_rank,
                    poset_to_json)
from .roos import (LimitReport, RoosComplexInstance, VectorSystem,
                   constant_system, derived_colim_dims, derived_lim_dims,
                   limit_check, quotient_system, reduced_cohomology_via_roos,
                   roos_chain, roos_cochain, skyscraper_system)
from .scomplex import (BettiVector, SimplicialComplex, boundary_matrix, link,
                       reduced_betti, sr_complex)

__all__ = [name for name in dir() if not name.startswith("_")]
