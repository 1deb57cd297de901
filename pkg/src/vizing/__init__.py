"""Graph edge-coloring toolkit.

Exact chromatic-index decisions, constructive coloring within one color of
the maximum degree, Kempe-chain machinery, colored structures (multi-fans,
Kierstead paths, forks, branches), and mechanical verification of the
structural lemmas and the overfull conjecture over graph6 corpora.
"""

from .coloring import (Chain, ColoringError, PartialColoring, RelaxedColoring, chain_at,
                       is_elementary, kempe_change, kempe_change_subchain, meets_before,
                       missing_set, present_set, recolor_edge)
from .graph import (DegreeSummary, Graph, Graph6Error, SubgraphSearchCapExceeded,
                    bundled_corpus_path, complete_graph, cycle_graph, deficiency,
                    degree_stats, encode_graph6, find_overfull_subgraphs, induced_subgraph,
                    is_overfull, iter_graph6, load_bundled_corpus, named_graph,
                    parse_graph6, petersen_graph)
from .solver import (ColoringBatch, ColoringCertificate, GraphClass, chromatic_index,
                     classify, edge_colorable, enumerate_colorings, is_critical_edge,
                     is_delta_critical, vizing_color)
from .structures import (Branch, Fork, KiersteadPath, MultiFan, ShortBranch,
                         ValidationResult, find_branches, find_forks, find_kierstead_paths,
                         maximal_multifan, parse_structure, validate_kierstead_path,
                         validate_multifan)
from .verify import (CHECKS, SamplingConfig, VerificationReport, Violation,
                     replay_violation, scan_conjecture, verify_branch_lemma,
                     verify_degree_dichotomy, verify_fork_lemma, verify_kierstead_lemma,
                     verify_multifan_lemma, verify_short_branch_lemma, verify_theorem1,
                     verify_val, verify_xy_existence)

__version__ = "0.1.0"
