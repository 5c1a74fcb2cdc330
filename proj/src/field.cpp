#include "gl2/field.hpp"

#include <map>
#include <mutex>

#include "gl2/combinatorics.hpp"
#include "gl2/errors.hpp"

namespace gl2 {

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients mod p, low degree first

// Multiply a and b modulo the monic polynomial x^m + sum c_i x^i.
Poly mulmod(const Poly& a, const Poly& b, const std::vector<int>& c, int p)
{
    const int m = static_cast<int>(c.size());
    std::vector<std::int64_t> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int k = 2 * m - 2; k >= m; --k) {
        const std::int64_t t = prod[k];
        if (t == 0)
            continue;
        for (int i = 0; i < m; ++i)
            prod[k - m + i] = ((prod[k - m + i] - t * c[i]) % p + p) % p;
        prod[k] = 0;
    }
    prod.resize(m);
    return prod;
}

Poly powmod(Poly base, std::uint64_t n, const std::vector<int>& c, int p)
{
    Poly r(c.size(), 0);
    r[0] = 1;
    while (n) {
        if (n & 1)
            r = mulmod(r, base, c, p);
        base = mulmod(base, base, c, p);
        n >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    if (n > 1)
        out.push_back(n);
    return out;
}

bool is_one(const Poly& a)
{
    if (a[0] != 1)
        return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0)
            return false;
    return true;
}

// Evaluate the polynomial with coefficients (low first, monic of degree c.size()) at a.
Poly evaluate(const std::vector<int>& c_low, const Poly& a, const std::vector<int>& mod, int p)
{
    const int m = static_cast<int>(mod.size());
    Poly acc(m, 0);
    acc[0] = 1;  // leading coefficient
    for (int i = static_cast<int>(c_low.size()) - 1; i >= 0; --i) {
        acc = mulmod(acc, a, mod, p);
        acc[0] = (acc[0] + c_low[i]) % p;
    }
    return acc;
}

}  // namespace

std::vector<int> conway_polynomial(int p, int m)
{
    if (!is_prime(p))
        throw ParameterError("field characteristic must be prime");
    if (m < 1)
        throw ParameterError("field degree must be positive");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<int>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({p, m});
        if (it != cache.end())
            return it->second;
    }
    const std::uint64_t order = static_cast<std::uint64_t>(ipow(p, m)) - 1;
    const auto factors = prime_factors(order);
    std::vector<std::pair<int, std::vector<int>>> sub;
    for (int d = 1; d < m; ++d)
        if (m % d == 0)
            sub.push_back({d, conway_polynomial(p, d)});

    // Conway order: write the polynomial as x^m - a_1 x^{m-1} + a_2 x^{m-2} - ...
    // and take (a_1, ..., a_m) lexicographically least.
    std::vector<int> alpha(m, 0);
    const std::int64_t total = ipow(p, m);
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t t = code;
        for (int k = m - 1; k >= 0; --k) {
            alpha[k] = static_cast<int>(t % p);
            t /= p;
        }
        std::vector<int> c(m);
        for (int k = 1; k <= m; ++k) {
            const int sign = (k % 2) ? -1 : 1;
            c[m - k] = static_cast<int>(((sign * alpha[k - 1]) % p + p) % p);
        }
        if (c[0] == 0)
            continue;
        Poly x(m, 0);
        if (m == 1)
            x[0] = (p - c[0]) % p;
        else
            x[1] = 1;
        if (!is_one(powmod(x, order, c, p)))
            continue;
        bool primitive = true;
        for (auto r : factors)
            if (is_one(powmod(x, order / r, c, p))) {
                primitive = false;
                break;
            }
        if (!primitive)
            continue;
        bool compatible = true;
        for (const auto& [d, cd] : sub) {
            const std::uint64_t expo = order / (static_cast<std::uint64_t>(ipow(p, d)) - 1);
            const Poly y = powmod(x, expo, c, p);
            const Poly val = evaluate(cd, y, c, p);
            for (auto v : val)
                if (v != 0)
                    compatible = false;
            if (!compatible)
                break;
        }
        if (!compatible)
            continue;
        std::lock_guard lock(mu);
        cache[{p, m}] = c;
        return c;
    }
    throw NotFoundError("no Conway polynomial found");
}

FiniteField::FiniteField(int p, int m) : p_(p), m_(m), order_(static_cast<int>(ipow(p, m)))
{
    if (order_ > 65536)
        throw ParameterError("field too large for the table representation");
    modulus_ = conway_polynomial(p, m);
    const int n = order_ - 1;
    exp_.assign(2 * n + 2, 0);
    log_.assign(order_, -1);
    Poly x(m, 0);
    if (m == 1)
        x[0] = (p - modulus_[0]) % p;
    else
        x[1] = 1;
    Poly cur(m, 0);
    cur[0] = 1;
    auto pack = [&](const Poly& a) {
        int v = 0;
        for (int i = m - 1; i >= 0; --i)
            v = v * p + static_cast<int>(a[i]);
        return static_cast<Elem>(v);
    };
    for (int k = 0; k < n; ++k) {
        const Elem e = pack(cur);
        if (log_[e] != -1)
            throw TheoremViolation("field generator is not primitive");
        exp_[k] = e;
        log_[e] = k;
        cur = mulmod(cur, x, modulus_, p);
    }
    for (int k = n; k < 2 * n + 2; ++k)
        exp_[k] = exp_[k - n];
    neg_.assign(order_, 0);
    for (int a = 0; a < order_; ++a) {
        std::vector<int> ds(m);
        int t = a;
        for (int i = 0; i < m; ++i) {
            ds[i] = (p - t % p) % p;
            t /= p;
        }
        neg_[a] = from_digits(ds);
    }
    if (order_ <= 1024) {
        add_table_.assign(static_cast<std::size_t>(order_) * order_, 0);
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                add_table_[static_cast<std::size_t>(a) * order_ + b] =
                    add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
    }
}

std::shared_ptr<const FiniteField> FiniteField::make(int p, int m)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const FiniteField>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find({p, m});
    if (it != cache.end())
        return it->second;
    auto f = std::shared_ptr<const FiniteField>(new FiniteField(p, m));
    cache[{p, m}] = f;
    return f;
}

FiniteField::Elem FiniteField::add_slow(Elem a, Elem b) const
{
    int r = 0;
    int scale = 1;
    int x = a;
    int y = b;
    for (int i = 0; i < m_; ++i) {
        r += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::from_int(std::int64_t n) const
{
    return static_cast<Elem>(mod(n, p_));
}

int FiniteField::digit(Elem a, int i) const
{
    int v = a;
    for (int k = 0; k < i; ++k)
        v /= p_;
    return v % p_;
}

FiniteField::Elem FiniteField::from_digits(const std::vector<int>& ds) const
{
    if (static_cast<int>(ds.size()) > m_)
        throw ParameterError("too many digits for field element");
    int v = 0;
    for (int i = static_cast<int>(ds.size()) - 1; i >= 0; --i)
        v = v * p_ + static_cast<int>(mod(ds[i], p_));
    return static_cast<Elem>(v);
}

FiniteField::Elem FiniteField::inv(Elem a) const
{
    if (a == 0)
        throw RangeError("inverse of zero");
    const int n = order_ - 1;
    return exp_[(n - log_[a]) % n];
}

FiniteField::Elem FiniteField::pow(Elem a, std::int64_t n) const
{
    if (a == 0) {
        if (n == 0)
            return 1;
        if (n < 0)
            throw RangeError("negative power of zero");
        return 0;
    }
    return exp(static_cast<std::int64_t>(log_[a]) * n);
}

FiniteField::Elem FiniteField::exp(std::int64_t k) const
{
    return exp_[mod(k, order_ - 1)];
}

}  // namespace gl2
