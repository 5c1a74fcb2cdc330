#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "gl2/field.hpp"

namespace gl2 {

// Truncated Witt vectors W(F_{p^m})/p^P, modelled as (Z/p^P)[x]/(lift of C_{p,m}).
class GaloisRing {
public:
    static constexpr int kMaxDegree = 8;
    struct Elem {
        std::array<std::int64_t, kMaxDegree> c{};
        bool operator==(const Elem&) const = default;
    };

    static std::shared_ptr<const GaloisRing> make(FieldPtr residue, int precision);

    const FieldPtr& residue() const { return residue_; }
    int p() const { return residue_->p(); }
    int degree() const { return residue_->degree(); }
    int precision() const { return precision_; }
    std::int64_t modulus() const { return modulus_; }

    Elem zero() const { return Elem{}; }
    Elem one() const;
    Elem from_int(std::int64_t n) const;
    bool is_zero(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    // a times p^k.
    Elem shift_up(const Elem& a, int k) const;
    // a / p^k; a must be divisible by p^k.
    Elem shift_down(const Elem& a, int k) const;
    // p-adic valuation; precision() for zero.
    int valuation(const Elem& a) const;
    Elem unit_inverse(const Elem& a) const;
    // Coefficientwise division with remainder: a = p^k q + r, r coefficients in [0, p^k).
    std::pair<Elem, Elem> divmod_p_power(const Elem& a, int k) const;

    FiniteField::Elem reduce(const Elem& a) const;
    // Coefficientwise lift of a residue element with digits in [0, p).
    Elem lift(FiniteField::Elem a) const;
    Elem teichmuller(FiniteField::Elem a) const;
    // Teichmuller lift of primitive()^k.
    const Elem& teichmuller_power(std::int64_t k) const;

private:
    GaloisRing(FieldPtr residue, int precision);
    FieldPtr residue_;
    int precision_;
    std::int64_t modulus_;
    std::vector<std::int64_t> poly_;  // lifted modulus coefficients c_0 .. c_{m-1}
    std::vector<Elem> teich_;
};

using RingPtr = std::shared_ptr<const GaloisRing>;

}  // namespace gl2
