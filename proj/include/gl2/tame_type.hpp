#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gl2/combinatorics.hpp"

namespace gl2 {

enum class TypeKind { PrincipalSeries, Cuspidal };

// Tame inertial type: eta + eta' (principal series) or psi + psi^q (cuspidal),
// given by exponents of the Teichmuller character.
class TameType {
public:
    const Params& params() const { return params_; }
    TypeKind kind() const { return kind_; }
    bool is_principal_series() const { return kind_ == TypeKind::PrincipalSeries; }
    bool is_cuspidal() const { return kind_ == TypeKind::Cuspidal; }

    // Principal series: {a_eta, a_eta'} mod q - 1. Cuspidal: {a_psi} mod q^2 - 1.
    const std::vector<std::int64_t>& exponents() const { return exponents_; }
    std::int64_t a_eta() const;
    std::int64_t a_eta_prime() const;
    std::int64_t a_psi() const;

    // Digits of c (principal series: a_eta - a_eta'; cuspidal: psi = [x]^{(q+1)b+1+c}).
    const std::vector<int>& c_digits() const { return c_digits_; }
    std::int64_t c_value() const { return c_value_; }
    // Cuspidal only.
    std::int64_t b_value() const;

    bool operator==(const TameType& o) const
    {
        return params_ == o.params_ && kind_ == o.kind_ && exponents_ == o.exponents_;
    }

    friend TameType make_ps_type(const Params& params, std::int64_t a_eta, std::int64_t a_eta_prime);
    friend TameType make_cuspidal_type(const Params& params, std::int64_t a_psi);

private:
    TameType(Params params, TypeKind kind) : params_(params), kind_(kind) {}
    Params params_;
    TypeKind kind_;
    std::vector<std::int64_t> exponents_;
    std::vector<int> c_digits_;
    std::int64_t c_value_ = 0;
    std::int64_t b_value_ = 0;
};

TameType make_ps_type(const Params& params, std::int64_t a_eta, std::int64_t a_eta_prime);
TameType make_cuspidal_type(const Params& params, std::int64_t a_psi);

// Every non-scalar tame type: principal series first (ascending exponents), then cuspidal.
std::vector<TameType> all_types(const Params& params);
// The same enumeration without materializing the list.
void for_each_type(const Params& params, const std::function<void(const TameType&)>& visit);

bool in_p_tau(const TameType& tau, const JSet& J);
// Index set of the Jordan-Holder factors, ascending by bitmask.
std::vector<JSet> p_tau(const TameType& tau);
Weight jh_factor(const TameType& tau, const JSet& J);

struct JhEntry {
    JSet J;
    Weight weight;
};
std::vector<JhEntry> jh_factors(const TameType& tau);

struct CuspidalClass {
    bool regular = true;
    // Set only for irregular types.
    std::optional<JSet> unique_regular_J;
};
CuspidalClass classify_cuspidal(const TameType& tau);

// Indices i with 0 < c_i < p - 1 (admissible starting points for the base set).
std::vector<int> base_choices(const TameType& tau);
// {} for principal series, {i, ..., f-1} for the smallest admissible i for regular cuspidals.
JSet j_base(const TameType& tau);
// Base set starting at a specific admissible index.
JSet j_base_at(const TameType& tau, int start);
// The involution J -> J xor J_base.
JSet iota(const TameType& tau, const JSet& J);

// Every type (with the matching index set) having w as a JH factor, found by inverting the
// JH-factor formulas. Principal series first unless cuspidal_first is set; J ascending within a kind.
struct TypeWithIndex {
    TameType tau;
    JSet J;
};
std::vector<TypeWithIndex> types_with_factor(const Params& params, const Weight& w,
                                             bool cuspidal_first = false);

TameType bc_type(const TameType& tau);
JSet bc_jset(const TameType& tau, const JSet& J);

}  // namespace gl2
