#pragma once

#include "walg/classical_w.hpp"

namespace walg {

// SUSY reduction by the odd nilpotent f: chains of ad f / ad e, barred variables,
// ρ_S(ā) = π_{≤0}(a)‾ + (f|a).  solve_generator, rewrite_in_generators,
// w_bracket_direct and w_table accept this context.
ReductionContext make_susy_context(const LieSuperalgebra& g);

SuperPoly gamma_S_linear(const ReductionContext& ctx, int j);
IndetPoly susy_w_bracket_closed(const ReductionContext& ctx, int i, int j);

}  // namespace walg
