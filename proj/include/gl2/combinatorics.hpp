#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gl2 {

// Residue characteristic p and residue degree f of the base field; q = p^f.
class Params {
public:
    // p must be an odd prime >= 5; p = 3 only when allow_three is set.
    static Params make(int p, int f, bool allow_three = false);

    int p() const { return p_; }
    int f() const { return f_; }
    std::int64_t q() const { return q_; }
    // Order of the multiplicative group of the residue field, q - 1.
    std::int64_t e() const { return q_ - 1; }
    // Same prime, doubled degree.
    Params doubled() const;

    bool operator==(const Params&) const = default;

private:
    Params(int p, int f, std::int64_t q) : p_(p), f_(f), q_(q) {}
    int p_;
    int f_;
    std::int64_t q_;
};

bool is_prime(std::int64_t n);
std::int64_t ipow(std::int64_t base, int exp);
// Mathematical residue in [0, m).
std::int64_t mod(std::int64_t a, std::int64_t m);

// Subset of a cyclic index set {0, ..., width-1}.
struct JSet {
    int width = 0;
    std::uint32_t bits = 0;

    static JSet empty(int width) { return {width, 0}; }
    static JSet full(int width) { return {width, (1u << width) - 1}; }
    static JSet from_indices(int width, const std::vector<int>& indices);

    bool contains(int i) const;
    // Index i - 1 taken cyclically.
    int prev(int i) const { return (i + width - 1) % width; }
    int next(int i) const { return (i + 1) % width; }
    int size() const;
    std::vector<int> indices() const;

    JSet complement() const { return {width, ~bits & full_mask()}; }
    JSet with(int i) const;
    JSet without(int i) const;
    JSet operator&(const JSet& o) const { return {width, bits & o.bits}; }
    JSet operator|(const JSet& o) const { return {width, bits | o.bits}; }
    JSet operator^(const JSet& o) const { return {width, bits ^ o.bits}; }
    JSet minus(const JSet& o) const { return {width, bits & ~o.bits}; }
    bool subset_of(const JSet& o) const { return (bits & ~o.bits) == 0; }

    std::uint32_t full_mask() const { return width >= 32 ? ~0u : (1u << width) - 1; }
    std::string to_string() const;

    auto operator<=>(const JSet&) const = default;
};

// All subsets of {0, ..., width-1} in increasing bitmask order.
std::vector<JSet> all_jsets(int width);

// Serre weight in canonical form: digits s_j and determinant exponent d mod q - 1.
struct Weight {
    std::vector<int> s;
    std::int64_t d = 0;

    std::string to_string() const;
    auto operator<=>(const Weight&) const = default;
};

enum class DigitRange {
    UnitGroup,   // n in [0, q - 2]
    FullPower,   // n in [0, q - 1]
};

std::vector<int> digits(std::int64_t n, int p, int f, DigitRange range = DigitRange::UnitGroup);
std::int64_t from_digits(const std::vector<int>& ds, int p);

Weight normalize_weight(const Params& params, const std::vector<int>& t, const std::vector<int>& s);
// The unique admissible t-vector (digits in [0, p-1], not all p-1) with sum t_j p^j = d.
std::vector<int> twist_digits(const Params& params, const Weight& w);
void validate_weight(const Params& params, const Weight& w);

bool is_regular_weight(const Params& params, const Weight& w);
// Restriction to the quadratic unramified extension.
Weight bc_weight(const Params& params, const Weight& w);
// Integer value sum s_j p^j of the digit vector.
std::int64_t weight_s_value(const Params& params, const Weight& w);
// Every weight for the given parameters, sorted.
std::vector<Weight> all_weights(const Params& params);

}  // namespace gl2
