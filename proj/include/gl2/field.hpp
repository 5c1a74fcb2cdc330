#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace gl2 {

// Conway polynomial C_{p,m}, coefficients c_0 .. c_{m-1} of the monic polynomial
// x^m + c_{m-1} x^{m-1} + ... + c_0, computed from its defining properties.
std::vector<int> conway_polynomial(int p, int m);

// Finite field F_{p^m} modelled as F_p[x]/(C_{p,m}). Elements are packed base-p digit
// strings (digit i is the coefficient of x^i); the class of x is a primitive element.
class FiniteField {
public:
    using Elem = std::uint16_t;

    static std::shared_ptr<const FiniteField> make(int p, int m);

    int p() const { return p_; }
    int degree() const { return m_; }
    int order() const { return order_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem primitive() const { return exp_[1]; }
    Elem from_int(std::int64_t n) const;
    int digit(Elem a, int i) const;
    Elem from_digits(const std::vector<int>& ds) const;

    Elem add(Elem a, Elem b) const
    {
        return add_table_.empty() ? add_slow(a, b) : add_table_[a * order_ + b];
    }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t n) const;
    // Discrete logarithm to the base primitive(); a must be nonzero.
    int log(Elem a) const { return log_[a]; }
    // primitive()^k for any integer k.
    Elem exp(std::int64_t k) const;

private:
    FiniteField(int p, int m);
    Elem add_slow(Elem a, Elem b) const;
    int p_;
    int m_;
    int order_;
    std::vector<int> modulus_;
    std::vector<Elem> exp_;  // doubled length so exp_[i + j] needs no reduction
    std::vector<int> log_;
    std::vector<Elem> neg_;
    std::vector<Elem> add_table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace gl2
