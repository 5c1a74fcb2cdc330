#include "gl2/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "gl2/errors.hpp"

namespace gl2 {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t ipow(std::int64_t base, int exp)
{
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / base)
            throw RangeError("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

Params Params::make(int p, int f, bool allow_three)
{
    if (!is_prime(p))
        throw ParameterError("p = " + std::to_string(p) + " is not prime");
    if (p == 2)
        throw ParameterError("p = 2 is not supported");
    if (p == 3 && !allow_three)
        throw ParameterError("p = 3 requires an explicit opt-in");
    if (f < 1)
        throw ParameterError("f must be positive");
    std::int64_t q = ipow(p, f);
    // q^2 must stay comfortably inside 64-bit arithmetic.
    if (q > (std::int64_t{1} << 30))
        throw RangeError("q = p^f too large");
    return Params(p, f, q);
}

Params Params::doubled() const
{
    return Params::make(p_, 2 * f_, true);
}

JSet JSet::from_indices(int width, const std::vector<int>& indices)
{
    JSet r{width, 0};
    for (int i : indices) {
        if (i < 0 || i >= width)
            throw IndexError("index " + std::to_string(i) + " outside cyclic set of width " +
                             std::to_string(width));
        r.bits |= 1u << i;
    }
    return r;
}

bool JSet::contains(int i) const
{
    return (bits >> i) & 1u;
}

int JSet::size() const
{
    return std::popcount(bits);
}

std::vector<int> JSet::indices() const
{
    std::vector<int> r;
    for (int i = 0; i < width; ++i)
        if (contains(i))
            r.push_back(i);
    return r;
}

JSet JSet::with(int i) const
{
    return {width, bits | (1u << i)};
}

JSet JSet::without(int i) const
{
    return {width, bits & ~(1u << i)};
}

std::string JSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : indices()) {
        if (!first)
            os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<JSet> all_jsets(int width)
{
    std::vector<JSet> r;
    r.reserve(std::size_t{1} << width);
    for (std::uint32_t b = 0; b < (1u << width); ++b)
        r.push_back({width, b});
    return r;
}

std::string Weight::to_string() const
{
    std::ostringstream os;
    os << "s=(";
    for (std::size_t j = 0; j < s.size(); ++j)
        os << (j ? "," : "") << s[j];
    os << "),d=" << d;
    return os.str();
}

std::vector<int> digits(std::int64_t n, int p, int f, DigitRange range)
{
    std::int64_t q = ipow(p, f);
    std::int64_t upper = range == DigitRange::UnitGroup ? q - 2 : q - 1;
    if (n < 0 || n > upper)
        throw RangeError("digits: " + std::to_string(n) + " outside [0, " + std::to_string(upper) +
                         "]");
    std::vector<int> r(f);
    for (int j = 0; j < f; ++j) {
        r[j] = static_cast<int>(n % p);
        n /= p;
    }
    return r;
}

std::int64_t from_digits(const std::vector<int>& ds, int p)
{
    std::int64_t r = 0;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it)
        r = r * p + *it;
    return r;
}

namespace {

void check_digit_vector(const Params& params, const std::vector<int>& v, const char* what)
{
    if (static_cast<int>(v.size()) != params.f())
        throw ParameterError(std::string(what) + " must have f entries");
    for (int x : v)
        if (x < 0 || x > params.p() - 1)
            throw ParameterError(std::string(what) + " digit outside [0, p-1]");
}

}  // namespace

Weight normalize_weight(const Params& params, const std::vector<int>& t, const std::vector<int>& s)
{
    check_digit_vector(params, t, "t");
    check_digit_vector(params, s, "s");
    bool all_top = true;
    for (int x : t)
        all_top = all_top && x == params.p() - 1;
    if (all_top)
        throw ParameterError("t digits may not all equal p-1");
    return Weight{s, mod(from_digits(t, params.p()), params.e())};
}

std::vector<int> twist_digits(const Params& params, const Weight& w)
{
    validate_weight(params, w);
    return digits(w.d, params.p(), params.f(), DigitRange::UnitGroup);
}

void validate_weight(const Params& params, const Weight& w)
{
    check_digit_vector(params, w.s, "s");
    if (w.d < 0 || w.d >= params.e())
        throw RangeError("weight twist exponent outside [0, q-2]");
}

bool is_regular_weight(const Params& params, const Weight& w)
{
    for (int x : w.s)
        if (x > params.p() - 2)
            return false;
    return true;
}

Weight bc_weight(const Params& params, const Weight& w)
{
    validate_weight(params, w);
    Params big = params.doubled();
    Weight r;
    r.s = w.s;
    r.s.insert(r.s.end(), w.s.begin(), w.s.end());
    r.d = mod(w.d * (1 + params.q()), big.e());
    return r;
}

std::int64_t weight_s_value(const Params& params, const Weight& w)
{
    return from_digits(w.s, params.p());
}

std::vector<Weight> all_weights(const Params& params)
{
    std::vector<Weight> r;
    const int f = params.f();
    const std::int64_t count = params.q();
    r.reserve(static_cast<std::size_t>(count * params.e()));
    for (std::int64_t sv = 0; sv < count; ++sv) {
        auto s = digits(sv, params.p(), f, DigitRange::FullPower);
        for (std::int64_t d = 0; d < params.e(); ++d)
            r.push_back(Weight{s, d});
    }
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace gl2
