"""Exact crystal sums for the four infinite Cartan families.

Patterns parameterize highest-weight crystal elements; decorated patterns
carry Gauss-sum coefficients; their weighted sum is the prime-power part of a
Weyl group multiple Dirichlet series (equivalently a metaplectic Whittaker
value).  Characters, dimensions, a numeric Gauss-sum oracle, the deformed
Weyl-denominator factorization and top-row branching serve as independent
verification routes.
"""

from .conventions import DEFAULT, Conventions
from .coefficients import (CoeffElement, GaussSymbol, entry_factor, g_value,
                           gauss_numeric, h_value, pattern_coefficient,
                           sigma_component, sigma_entry, specialize_n1)
from .roots import (CartanSpec, RootSystem, WeylWord, build_root_system,
                    character_dimension, is_dominant, is_strongly_dominant,
                    nice_long_word, weight_in_hull, weyl_character,
                    weyl_dimension)
from .patterns import (LittelmannPattern, PatternAggregates, aggregates,
                       bzl_to_pattern, cone_satisfied, column_letter,
                       enumerate_patterns, pattern_shape, pattern_to_bzl,
                       pattern_weight, pattern_wt, polytope_satisfied,
                       polytope_upper_bound, top_rows)
from .decorations import (ComponentD, DecoratedPattern, build_components_D,
                          circling_lower_bound, decorate, render)
from .series import (BranchDecomposition, BranchTerm, WeightPolynomial,
                     branch_decompose, character_via_patterns, p_part,
                     polynomial_json_obj, specialize_poly_n1,
                     tokuyama_quotient, twisted_character)

__version__ = "0.1.0"
