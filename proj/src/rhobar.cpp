#include "gl2/rhobar.hpp"

#include <algorithm>
#include <set>

#include "gl2/errors.hpp"

namespace gl2 {

std::int64_t RhoBar::m1() const
{
    if (!is_reducible())
        throw KindError("m1 requested for an irreducible parameter");
    return a_;
}

std::int64_t RhoBar::m2() const
{
    if (!is_reducible())
        throw KindError("m2 requested for an irreducible parameter");
    return b_;
}

std::int64_t RhoBar::big_m() const
{
    if (is_reducible())
        throw KindError("M requested for a reducible parameter");
    return a_;
}

RhoBar make_reducible(const Params& params, std::int64_t m1, std::int64_t m2)
{
    RhoBar r(params, RhoKind::ReducibleSemisimple);
    r.a_ = mod(m1, params.e());
    r.b_ = mod(m2, params.e());
    return r;
}

RhoBar make_irreducible(const Params& params, std::int64_t big_m)
{
    const std::int64_t q = params.q();
    const std::int64_t big = q * q - 1;
    big_m = mod(big_m, big);
    if (mod(big_m - q * big_m, big) == 0)
        throw ParameterError("M = qM: the parameter is not irreducible");
    RhoBar r(params, RhoKind::Irreducible);
    r.a_ = big_m;
    r.b_ = mod(q * big_m, big);
    return r;
}

namespace {

// Calls visit(r) for every digit vector r with lo[j] <= r_j <= hi[j].
template <typename Visit>
bool for_each_box(const std::vector<int>& lo, const std::vector<int>& hi, Visit&& visit)
{
    std::vector<int> r = lo;
    for (std::size_t j = 0; j < r.size(); ++j)
        if (lo[j] > hi[j])
            return false;
    while (true) {
        if (visit(r))
            return true;
        std::size_t j = 0;
        while (j < r.size() && r[j] == hi[j]) {
            r[j] = lo[j];
            ++j;
        }
        if (j == r.size())
            return false;
        ++r[j];
    }
}

std::int64_t shifted_value(const std::vector<int>& r, int p)
{
    std::int64_t v = 0;
    for (auto it = r.rbegin(); it != r.rend(); ++it)
        v = v * p + (*it + 1);
    return v;
}

}  // namespace

std::optional<GenericWitness> generic_witness(const RhoBar& rho)
{
    const Params& params = rho.params();
    const int p = params.p();
    const int f = params.f();
    std::optional<GenericWitness> result;
    if (rho.is_reducible()) {
        const std::int64_t e = params.e();
        std::vector<int> lo(f, 0), hi(f, p - 3);
        for_each_box(lo, hi, [&](const std::vector<int>& r) {
            bool all_zero = std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
            bool all_top = std::all_of(r.begin(), r.end(), [&](int x) { return x == p - 3; });
            if (all_zero || all_top)
                return false;
            const std::int64_t v = mod(shifted_value(r, p), e);
            if (mod(rho.m1() - rho.m2(), e) == v) {
                result = GenericWitness{r, rho.m2()};
                return true;
            }
            if (mod(rho.m2() - rho.m1(), e) == v) {
                result = GenericWitness{r, rho.m1()};
                return true;
            }
            return false;
        });
        return result;
    }
    const std::int64_t q = params.q();
    const std::int64_t big = q * q - 1;
    std::vector<int> lo(f, 0), hi(f, p - 3);
    lo[0] = 1;
    hi[0] = p - 2;
    for_each_box(lo, hi, [&](const std::vector<int>& r) {
        const std::int64_t v = shifted_value(r, p);
        for (std::int64_t x : {rho.big_m(), mod(q * rho.big_m(), big)}) {
            const std::int64_t diff = mod(v - x, big);
            if (diff % (q + 1) == 0) {
                // x + (1+q)k = v; the twist omega_f^{-k} recovers the normalized form.
                result = GenericWitness{r, diff / (q + 1)};
                return true;
            }
        }
        return false;
    });
    return result;
}

bool is_generic(const RhoBar& rho)
{
    return generic_witness(rho).has_value();
}

std::vector<RhoBar> all_generic_rhobars(const Params& params)
{
    std::vector<RhoBar> r;
    const std::int64_t e = params.e();
    for (std::int64_t a = 0; a < e; ++a)
        for (std::int64_t b = 0; b < e; ++b) {
            RhoBar rho = make_reducible(params, a, b);
            if (is_generic(rho))
                r.push_back(rho);
        }
    const std::int64_t q = params.q();
    for (std::int64_t m = 0; m < q * q - 1; ++m) {
        if (m % (q + 1) == 0)
            continue;
        RhoBar rho = make_irreducible(params, m);
        if (is_generic(rho))
            r.push_back(rho);
    }
    return r;
}

std::vector<Weight> weight_set(const RhoBar& rho)
{
    const Params& params = rho.params();
    const int p = params.p();
    const int f = params.f();
    const std::int64_t q = params.q();
    const std::int64_t e = params.e();
    std::set<Weight> out;
    for (std::int64_t sv = 0; sv < q; ++sv) {
        const auto s = digits(sv, p, f, DigitRange::FullPower);
        for (const auto& K : all_jsets(f)) {
            if (rho.is_reducible()) {
                std::int64_t in = 0, out_sum = 0;
                for (int j = f - 1; j >= 0; --j) {
                    in = in * p + (K.contains(j) ? s[j] + 1 : 0);
                    out_sum = out_sum * p + (K.contains(j) ? 0 : s[j] + 1);
                }
                for (auto [x, y] : {std::pair{rho.m1(), rho.m2()}, std::pair{rho.m2(), rho.m1()}}) {
                    const std::int64_t d = mod(x - in, e);
                    if (mod(d + out_sum, e) == y)
                        out.insert(Weight{s, d});
                }
            } else {
                // Antisymmetric extension of K to {0, ..., 2f-1}, digits extended periodically.
                const std::int64_t big = q * q - 1;
                std::int64_t in = 0, out_sum = 0;
                for (int j = 2 * f - 1; j >= 0; --j) {
                    const int jj = j % f;
                    const bool member = j < f ? K.contains(jj) : !K.contains(jj);
                    in = in * p + (member ? s[jj] + 1 : 0);
                    out_sum = out_sum * p + (member ? 0 : s[jj] + 1);
                }
                const std::int64_t x0 = rho.big_m();
                const std::int64_t y0 = mod(q * x0, big);
                for (auto [x, y] : {std::pair{x0, y0}, std::pair{y0, x0}}) {
                    const std::int64_t diff = mod(x - in, big);
                    if (diff % (q + 1) != 0)
                        continue;
                    const std::int64_t d = diff / (q + 1);
                    if (mod(d * (q + 1) + out_sum, big) == y)
                        out.insert(Weight{s, d});
                }
            }
        }
    }
    return {out.begin(), out.end()};
}

RhoBar restrict_rhobar(const RhoBar& rho)
{
    const Params& params = rho.params();
    const Params big = params.doubled();
    const std::int64_t q = params.q();
    if (rho.is_reducible())
        return make_reducible(big, rho.m1() * (1 + q), rho.m2() * (1 + q));
    return make_reducible(big, rho.big_m(), q * rho.big_m());
}

bool ext_exists(const Params& params, const Weight& w1, const Weight& w2)
{
    validate_weight(params, w1);
    validate_weight(params, w2);
    const int p = params.p();
    const int f = params.f();
    const std::int64_t e = params.e();
    const std::int64_t dd = mod(w2.d - w1.d, e);
    if (f == 1) {
        const int s = w1.s[0];
        const int s2 = w2.s[0];
        if (s == p - 1 || s2 == p - 1)
            throw UnsupportedError("f = 1 extensions require s != p-1");
        for (int sign : {1, -1}) {
            if (s2 != p - 2 - s + sign)
                continue;
            if (dd == mod(s + 1 - p * (1 + sign) / 2, e))
                return true;
        }
        return false;
    }
    for (int k = 0; k < f; ++k) {
        const int k1 = (k + 1) % f;
        bool others = true;
        for (int j = 0; j < f; ++j)
            if (j != k && j != k1 && w1.s[j] != w2.s[j])
                others = false;
        if (!others || w2.s[k] != p - 2 - w1.s[k])
            continue;
        for (int sign : {1, -1}) {
            if (w2.s[k1] != w1.s[k1] + sign)
                continue;
            const std::int64_t rhs =
                ipow(p, k) * (w1.s[k] + 1) - ipow(p, k + 1) * ((1 + sign) / 2);
            if (dd == mod(rhs, e))
                return true;
        }
    }
    return false;
}

std::optional<WeightInterval> weight_interval(const RhoBar& rho, const TameType& tau)
{
    if (!(rho.params() == tau.params()))
        throw ParameterError("parameter and type live over different fields");
    return weight_interval(weight_set(rho), tau);
}

std::optional<WeightInterval> weight_interval(const std::vector<Weight>& D, const TameType& tau)
{
    const int f = tau.params().f();
    std::vector<JSet> modular;
    for (const auto& entry : jh_factors(tau))
        if (std::binary_search(D.begin(), D.end(), entry.weight))
            modular.push_back(entry.J);
    if (modular.empty())
        return std::nullopt;
    JSet lo = JSet::full(f), hi = JSet::empty(f);
    for (const auto& J : modular) {
        lo = lo & J;
        hi = hi | J;
    }
    std::vector<JSet> between;
    for (const auto& J : all_jsets(f))
        if (lo.subset_of(J) && J.subset_of(hi))
            between.push_back(J);
    if (between != modular)
        throw TheoremViolation("modular JH factors do not form an interval");
    return WeightInterval{lo, hi};
}

namespace {

std::vector<Weight> jh_weights_sorted(const TameType& tau)
{
    std::vector<Weight> r;
    for (const auto& entry : jh_factors(tau))
        r.push_back(entry.weight);
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<Weight> intersect_sorted(const std::vector<Weight>& a, const std::vector<Weight>& b)
{
    std::vector<Weight> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

void require_member(const std::vector<Weight>& D, const Weight& w)
{
    if (!std::binary_search(D.begin(), D.end(), w))
        throw PreconditionError("weight " + w.to_string() + " is not in the weight set");
}

}  // namespace

TameType find_type_isolating(const RhoBar& rho, const Weight& w)
{
    const auto D = weight_set(rho);
    require_member(D, w);
    for (const auto& cand : types_with_factor(rho.params(), w, !rho.is_reducible())) {
        if (intersect_sorted(jh_weights_sorted(cand.tau), D) == std::vector<Weight>{w})
            return cand.tau;
    }
    throw NotFoundError("no type isolates weight " + w.to_string());
}

TameType find_type_covering(const RhoBar& rho)
{
    const auto D = weight_set(rho);
    if (D.empty())
        throw PreconditionError("empty weight set");
    for (const auto& cand : types_with_factor(rho.params(), D.front(), !rho.is_reducible())) {
        if (intersect_sorted(jh_weights_sorted(cand.tau), D) == D)
            return cand.tau;
    }
    throw NotFoundError("no type covers the weight set");
}

TameType find_type_for_pair(const RhoBar& rho, const Weight& w1, const Weight& w2)
{
    const auto D = weight_set(rho);
    require_member(D, w1);
    require_member(D, w2);
    if (!ext_exists(rho.params(), w1, w2))
        throw PreconditionError("the two weights admit no extension");
    std::vector<Weight> target{w1, w2};
    std::sort(target.begin(), target.end());
    // The pair type is cuspidal for reducible parameters and principal series otherwise.
    for (const auto& cand : types_with_factor(rho.params(), w1, rho.is_reducible())) {
        if (intersect_sorted(jh_weights_sorted(cand.tau), D) == target)
            return cand.tau;
    }
    throw NotFoundError("no type meets the weight set in exactly the given pair");
}

}  // namespace gl2
