#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gl2/combinatorics.hpp"
#include "gl2/tame_type.hpp"

namespace gl2 {

enum class RhoKind { ReducibleSemisimple, Irreducible };

// Semisimple mod p local Galois parameter, recorded on inertia.
// Reducible: omega_f^{m1} + omega_f^{m2}. Irreducible: omega_{2f}^{M} + omega_{2f}^{qM}.
class RhoBar {
public:
    const Params& params() const { return params_; }
    RhoKind kind() const { return kind_; }
    bool is_reducible() const { return kind_ == RhoKind::ReducibleSemisimple; }
    std::int64_t m1() const;
    std::int64_t m2() const;
    std::int64_t big_m() const;

    friend RhoBar make_reducible(const Params& params, std::int64_t m1, std::int64_t m2);
    friend RhoBar make_irreducible(const Params& params, std::int64_t big_m);

private:
    RhoBar(Params params, RhoKind kind) : params_(params), kind_(kind) {}
    Params params_;
    RhoKind kind_;
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
};

RhoBar make_reducible(const Params& params, std::int64_t m1, std::int64_t m2);
// Requires M != qM modulo q^2 - 1.
RhoBar make_irreducible(const Params& params, std::int64_t big_m);

struct GenericWitness {
    std::vector<int> r;
    // Exponent k of the twist (omega_f^k for reducible parameters).
    std::int64_t twist = 0;
};

std::optional<GenericWitness> generic_witness(const RhoBar& rho);
bool is_generic(const RhoBar& rho);
// All generic semisimple parameters: reducible (m1, m2) ascending, then irreducible M ascending.
std::vector<RhoBar> all_generic_rhobars(const Params& params);

// Sorted, duplicate-free.
std::vector<Weight> weight_set(const RhoBar& rho);
RhoBar restrict_rhobar(const RhoBar& rho);

bool ext_exists(const Params& params, const Weight& w1, const Weight& w2);

struct WeightInterval {
    JSet j_min;
    JSet j_max;
};

// Empty when no JH factor of tau lies in the weight set.
std::optional<WeightInterval> weight_interval(const RhoBar& rho, const TameType& tau);
// The same against a precomputed sorted weight set.
std::optional<WeightInterval> weight_interval(const std::vector<Weight>& weights,
                                              const TameType& tau);

TameType find_type_isolating(const RhoBar& rho, const Weight& w);
TameType find_type_covering(const RhoBar& rho);
TameType find_type_for_pair(const RhoBar& rho, const Weight& w1, const Weight& w2);

}  // namespace gl2
