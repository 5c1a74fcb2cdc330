#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gl2/combinatorics.hpp"
#include "gl2/report.hpp"
#include "gl2/tame_type.hpp"

namespace gl2 {

// Engine checks on a single type. Principal series types are computed directly; verify_jh
// also accepts cuspidal types and then works through the base change to a principal series.
// precision 0 selects the engine default.
CheckReport verify_jh(const TameType& tau, int precision = 0);
// Radical layers of each cosocle lattice and socle layers of each socle lattice against the
// predicted layers, plus non-splitness of every predicted adjacent two-factor subquotient.
CheckReport verify_filtration(const TameType& tau, int precision = 0);
// Measured gauges of both lattice families against the closed forms.
CheckReport verify_gauges(const TameType& tau, int precision = 0);
// Cokernels of consecutive inclusions in both families against the predicted JH lists.
CheckReport verify_cokernels(const TameType& tau, int precision = 0);
// Least n with p^n times the socle lattice at iota(empty) inside the cosocle lattice at
// iota(empty), the latter normalized to lie in the former but not in p times it.
int measure_dual_embedding(const TameType& tau, int precision = 0);
CheckReport verify_dual_embedding(const TameType& tau, int precision = 0);

// Combinatorial checks, exhaustive over every type (or parameter) for the given p and f.
CheckReport verify_chains(const Params& params);
CheckReport verify_base_change(const Params& params);
CheckReport verify_cokernel_lists(const Params& params);
CheckReport verify_intervals(const Params& params);
CheckReport verify_type_searches(const Params& params);
CheckReport verify_predictor(const Params& params, int max_denominator = 6);
// Exhaustive over the full ring with |delta| = delta_size: faces, capped pairs, cyclicity.
CheckReport verify_ideals(int delta_size);
CheckReport verify_p3_genericity(int max_f);

struct SuiteOutcome {
    std::string suite;
    int p = 0;
    int f = 0;
    CheckReport report;
    double seconds = 0;
};

std::vector<std::string> suite_names();
// Engine suites run on tau when given, otherwise on every principal series type.
// The ideals suite reads f as |delta|; p3 reads f as the largest degree.
SuiteOutcome run_suite(const std::string& suite, int p, int f,
                       const std::optional<TameType>& tau = std::nullopt, int precision = 0);

}  // namespace gl2
