#include "gl2/galois_ring.hpp"

#include <map>
#include <mutex>

#include "gl2/combinatorics.hpp"
#include "gl2/errors.hpp"

namespace gl2 {

GaloisRing::GaloisRing(FieldPtr residue, int precision)
    : residue_(std::move(residue)), precision_(precision)
{
    if (precision < 1)
        throw ParameterError("precision must be positive");
    if (residue_->degree() > kMaxDegree)
        throw ParameterError("residue degree too large for the ring representation");
    modulus_ = ipow(residue_->p(), precision);
    if (modulus_ > (std::int64_t{1} << 28))
        throw ParameterError("precision too large for 64-bit products");
    for (int c : residue_->modulus())
        poly_.push_back(c);
    // Teichmuller lift of the primitive element: x^(p^(m(P-1))) with x the class of X.
    const int m = degree();
    const int n = residue_->order() - 1;
    Elem x{};
    if (m == 1)
        x.c[0] = mod(-poly_[0], modulus_);
    else
        x.c[1] = 1;
    Elem t = x;
    for (int i = 0; i < m * (precision_ - 1); ++i) {
        Elem r = one();
        Elem base = t;
        for (int k = residue_->p(); k; k >>= 1) {
            if (k & 1)
                r = mul(r, base);
            base = mul(base, base);
        }
        t = r;
    }
    teich_.reserve(n);
    Elem cur = one();
    for (int k = 0; k < n; ++k) {
        teich_.push_back(cur);
        cur = mul(cur, t);
    }
    if (cur != one())
        throw TheoremViolation("Teichmuller lift has the wrong order");
}

std::shared_ptr<const GaloisRing> GaloisRing::make(FieldPtr residue, int precision)
{
    static std::mutex mu;
    static std::map<std::pair<const FiniteField*, int>, std::shared_ptr<const GaloisRing>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(residue.get(), precision);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    auto r = std::shared_ptr<const GaloisRing>(new GaloisRing(residue, precision));
    cache[key] = r;
    return r;
}

GaloisRing::Elem GaloisRing::one() const
{
    Elem a{};
    a.c[0] = 1 % modulus_;
    return a;
}

GaloisRing::Elem GaloisRing::from_int(std::int64_t n) const
{
    Elem a{};
    a.c[0] = mod(n, modulus_);
    return a;
}

bool GaloisRing::is_zero(const Elem& a) const
{
    for (int i = 0; i < degree(); ++i)
        if (a.c[i] != 0)
            return false;
    return true;
}

GaloisRing::Elem GaloisRing::add(const Elem& a, const Elem& b) const
{
    Elem r{};
    for (int i = 0; i < degree(); ++i) {
        r.c[i] = a.c[i] + b.c[i];
        if (r.c[i] >= modulus_)
            r.c[i] -= modulus_;
    }
    return r;
}

GaloisRing::Elem GaloisRing::sub(const Elem& a, const Elem& b) const
{
    Elem r{};
    for (int i = 0; i < degree(); ++i) {
        r.c[i] = a.c[i] - b.c[i];
        if (r.c[i] < 0)
            r.c[i] += modulus_;
    }
    return r;
}

GaloisRing::Elem GaloisRing::neg(const Elem& a) const
{
    Elem r{};
    for (int i = 0; i < degree(); ++i)
        r.c[i] = a.c[i] == 0 ? 0 : modulus_ - a.c[i];
    return r;
}

GaloisRing::Elem GaloisRing::mul(const Elem& a, const Elem& b) const
{
    const int m = degree();
    std::array<std::int64_t, 2 * kMaxDegree> prod{};
    for (int i = 0; i < m; ++i) {
        if (a.c[i] == 0)
            continue;
        for (int j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % modulus_;
    }
    for (int k = 2 * m - 2; k >= m; --k) {
        const std::int64_t t = prod[k];
        if (t == 0)
            continue;
        for (int i = 0; i < m; ++i)
            prod[k - m + i] = mod(prod[k - m + i] - t * poly_[i], modulus_);
    }
    Elem r{};
    for (int i = 0; i < m; ++i)
        r.c[i] = prod[i];
    return r;
}

GaloisRing::Elem GaloisRing::shift_up(const Elem& a, int k) const
{
    if (k >= precision_)
        return Elem{};
    const std::int64_t s = ipow(p(), k);
    Elem r{};
    for (int i = 0; i < degree(); ++i)
        r.c[i] = (a.c[i] * s) % modulus_;
    return r;
}

GaloisRing::Elem GaloisRing::shift_down(const Elem& a, int k) const
{
    const std::int64_t s = ipow(p(), k);
    Elem r{};
    for (int i = 0; i < degree(); ++i) {
        if (a.c[i] % s != 0)
            throw PreconditionError("element not divisible by the requested power of p");
        r.c[i] = a.c[i] / s;
    }
    return r;
}

int GaloisRing::valuation(const Elem& a) const
{
    int v = precision_;
    for (int i = 0; i < degree(); ++i) {
        std::int64_t x = a.c[i];
        if (x == 0)
            continue;
        int k = 0;
        while (x % p() == 0) {
            x /= p();
            ++k;
        }
        v = std::min(v, k);
    }
    return v;
}

GaloisRing::Elem GaloisRing::unit_inverse(const Elem& a) const
{
    const auto r = reduce(a);
    if (r == 0)
        throw RangeError("inverse of a non-unit");
    Elem y = lift(residue_->inv(r));
    const Elem two = from_int(2);
    // Newton iteration doubles the correct precision each round.
    for (int prec = 1; prec < precision_; prec *= 2)
        y = mul(y, sub(two, mul(a, y)));
    return y;
}

std::pair<GaloisRing::Elem, GaloisRing::Elem> GaloisRing::divmod_p_power(const Elem& a, int k) const
{
    const std::int64_t s = ipow(p(), k);
    Elem q{};
    Elem r{};
    for (int i = 0; i < degree(); ++i) {
        q.c[i] = a.c[i] / s;
        r.c[i] = a.c[i] % s;
    }
    return {q, r};
}

FiniteField::Elem GaloisRing::reduce(const Elem& a) const
{
    std::vector<int> ds(degree());
    for (int i = 0; i < degree(); ++i)
        ds[i] = static_cast<int>(a.c[i] % p());
    return residue_->from_digits(ds);
}

GaloisRing::Elem GaloisRing::lift(FiniteField::Elem a) const
{
    Elem r{};
    for (int i = 0; i < degree(); ++i)
        r.c[i] = residue_->digit(a, i);
    return r;
}

GaloisRing::Elem GaloisRing::teichmuller(FiniteField::Elem a) const
{
    if (a == 0)
        return Elem{};
    return teich_[residue_->log(a)];
}

const GaloisRing::Elem& GaloisRing::teichmuller_power(std::int64_t k) const
{
    return teich_[mod(k, static_cast<std::int64_t>(teich_.size()))];
}

}  // namespace gl2
