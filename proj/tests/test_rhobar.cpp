#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "gl2/errors.hpp"
#include "gl2/rhobar.hpp"

using namespace gl2;

namespace {

// Genericity by enumerating every admissible r-vector and twist.
bool oracle_generic(const RhoBar& rho)
{
    const auto& params = rho.params();
    const int p = params.p();
    const int f = params.f();
    const auto q = params.q();
    std::vector<int> r(f, 0);
    bool found = false;
    const int lo0 = rho.is_reducible() ? 0 : 1;
    const int hi0 = rho.is_reducible() ? p - 3 : p - 2;
    std::function<void(int)> rec = [&](int j) {
        if (found)
            return;
        if (j == f) {
            std::int64_t val = 0;
            for (int i = f - 1; i >= 0; --i)
                val = val * p + (r[i] + 1);
            if (rho.is_reducible()) {
                bool all0 = true, all_top = true;
                for (int x : r) {
                    all0 = all0 && x == 0;
                    all_top = all_top && x == p - 3;
                }
                if (all0 || all_top)
                    return;
                const auto e = params.e();
                const auto diff = mod(rho.m1() - rho.m2(), e);
                found = diff == mod(val, e) || mod(-diff, e) == mod(val, e);
            } else {
                const auto E = q * q - 1;
                for (std::int64_t k = 0; k < E && !found; ++k) {
                    const auto a = mod(rho.big_m() + (1 + q) * k, E);
                    const auto b = mod(q * rho.big_m() + (1 + q) * k, E);
                    found = a == val || b == val;
                }
            }
            return;
        }
        const int lo = j == 0 ? lo0 : 0;
        const int hi = j == 0 ? hi0 : p - 3;
        for (int x = lo; x <= hi; ++x) {
            r[j] = x;
            rec(j + 1);
        }
    };
    rec(0);
    return found;
}

// Second enumerator: scan every weight and test the defining congruence over all K.
std::vector<Weight> oracle_weight_set(const RhoBar& rho)
{
    const auto& params = rho.params();
    const int p = params.p();
    const int f = params.f();
    const auto q = params.q();
    std::vector<Weight> out;
    for (const auto& w : all_weights(params)) {
        bool ok = false;
        if (rho.is_reducible()) {
            const auto e = params.e();
            for (const auto& K : all_jsets(f)) {
                std::int64_t in = 0, out_k = 0;
                for (int j = 0; j < f; ++j)
                    (K.contains(j) ? in : out_k) += (w.s[j] + 1) * ipow(p, j);
                const std::int64_t x = mod(w.d + in, e), y = mod(w.d + out_k, e);
                const std::int64_t m1 = mod(rho.m1(), e), m2 = mod(rho.m2(), e);
                ok = ok || (x == m1 && y == m2) || (x == m2 && y == m1);
            }
        } else {
            const auto E = q * q - 1;
            for (const auto& K : all_jsets(2 * f)) {
                bool anti = true;
                for (int i = 0; i < f; ++i)
                    anti = anti && (K.contains(i) != K.contains(i + f));
                if (!anti)
                    continue;
                std::int64_t in = 0, out_k = 0;
                for (int j = 0; j < 2 * f; ++j)
                    (K.contains(j) ? in : out_k) += (w.s[j % f] + 1) * ipow(p, j);
                const std::int64_t base = w.d * (1 + q);
                const std::int64_t x = mod(base + in, E), y = mod(base + out_k, E);
                const std::int64_t a = mod(rho.big_m(), E), b = mod(q * rho.big_m(), E);
                ok = ok || (x == a && y == b) || (x == b && y == a);
            }
        }
        if (ok)
            out.push_back(w);
    }
    return out;
}

// Extension condition evaluated on twist digit vectors.
bool oracle_ext(const Params& params, const Weight& w1, const Weight& w2)
{
    const int p = params.p();
    const int f = params.f();
    const auto e = params.e();
    const auto t1 = twist_digits(params, w1);
    const auto t2 = twist_digits(params, w2);
    std::int64_t tdiff = 0;
    for (int j = 0; j < f; ++j)
        tdiff += ipow(p, j) * (t2[j] - t1[j]);
    for (int sign : {1, -1}) {
        if (f == 1) {
            if (w2.s[0] == p - 2 - w1.s[0] + sign &&
                mod(tdiff - (w1.s[0] + 1 - p * (1 + sign) / 2), e) == 0)
                return true;
            continue;
        }
        for (int k = 0; k < f; ++k) {
            const int k1 = (k + 1) % f;
            bool shape = w2.s[k] == p - 2 - w1.s[k] && w2.s[k1] == w1.s[k1] + sign;
            for (int j = 0; j < f; ++j)
                if (j != k && j != k1)
                    shape = shape && w1.s[j] == w2.s[j];
            if (shape && mod(tdiff - ipow(p, k) * (w1.s[k] + 1) +
                                 ipow(p, k + 1) * ((1 + sign) / 2),
                             e) == 0)
                return true;
        }
    }
    return false;
}

std::vector<Weight> jh_intersection(const TameType& tau, const std::vector<Weight>& D)
{
    std::vector<Weight> out;
    for (const auto& e : jh_factors(tau))
        if (std::find(D.begin(), D.end(), e.weight) != D.end())
            out.push_back(e.weight);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("genericity examples")
{
    const auto p51 = Params::make(5, 1);
    const auto w = generic_witness(make_reducible(p51, 2, 0));
    REQUIRE(w.has_value());
    CHECK(w->r == std::vector<int>{1});
    CHECK_FALSE(is_generic(make_reducible(p51, 1, 0)));
    const auto p31 = Params::make(3, 1, true);
    for (int m1 = 0; m1 < 2; ++m1)
        for (int m2 = 0; m2 < 2; ++m2)
            CHECK_FALSE(is_generic(make_reducible(p31, m1, m2)));
    CHECK(is_generic(make_irreducible(p51, 2)));
    CHECK_THROWS(make_irreducible(p51, 6));
}

TEST_CASE("genericity agrees with the r-vector enumeration")
{
    for (int p : {5, 7})
        for (int f = 1; f <= 2; ++f) {
            if (p == 7 && f == 2)
                continue;
            const auto params = Params::make(p, f);
            const auto e = params.e();
            const auto q = params.q();
            std::int64_t generic_count = 0;
            for (std::int64_t m1 = 0; m1 < e; ++m1)
                for (std::int64_t m2 = 0; m2 < e; ++m2) {
                    const auto rho = make_reducible(params, m1, m2);
                    const bool g = is_generic(rho);
                    REQUIRE(g == oracle_generic(rho));
                    generic_count += g;
                }
            for (std::int64_t M = 0; M < q * q - 1; ++M) {
                if (mod(M - q * M, q * q - 1) == 0)
                    continue;
                const auto rho = make_irreducible(params, M);
                const bool g = is_generic(rho);
                REQUIRE(g == oracle_generic(rho));
                generic_count += g;
            }
            std::int64_t listed = 0;
            for (const auto& rho : all_generic_rhobars(params)) {
                REQUIRE(is_generic(rho));
                ++listed;
            }
            CHECK(listed > 0);
            CHECK(listed <= generic_count);
        }
}

TEST_CASE("weight set examples")
{
    const auto p51 = Params::make(5, 1);
    const auto D = weight_set(make_reducible(p51, 2, 0));
    CHECK(D == std::vector<Weight>{Weight{{1}, 0}, Weight{{1}, 2}});
    const auto Dirr = weight_set(make_irreducible(p51, 2));
    CHECK_FALSE(Dirr.empty());
    CHECK(Dirr == oracle_weight_set(make_irreducible(p51, 2)));
}

TEST_CASE("weight set agrees with the direct enumerator")
{
    for (int p : {5, 7})
        for (int f = 1; f <= 2; ++f) {
            if (p == 7 && f == 2)
                continue;
            const auto params = Params::make(p, f);
            for (const auto& rho : all_generic_rhobars(params)) {
                const auto D = weight_set(rho);
                REQUIRE(D == oracle_weight_set(rho));
                REQUIRE_FALSE(D.empty());
                for (const auto& w : D) {
                    REQUIRE(is_regular_weight(params, w));
                    REQUIRE(std::any_of(w.s.begin(), w.s.end(), [](int x) { return x != 0; }));
                }
            }
        }
}

TEST_CASE("restriction to the quadratic extension")
{
    const auto p51 = Params::make(5, 1);
    const auto r1 = restrict_rhobar(make_reducible(p51, 2, 0));
    CHECK(r1.params() == Params::make(5, 2));
    CHECK(r1.is_reducible());
    CHECK(std::set<std::int64_t>{r1.m1(), r1.m2()} == std::set<std::int64_t>{12, 0});
    const auto r2 = restrict_rhobar(make_irreducible(p51, 7));
    CHECK(r2.is_reducible());
    CHECK(std::set<std::int64_t>{r2.m1(), r2.m2()} == std::set<std::int64_t>{7, 11});
    for (int f = 1; f <= 2; ++f)
        for (const auto& rho : all_generic_rhobars(Params::make(5, f))) {
            const auto res = restrict_rhobar(rho);
            REQUIRE(is_generic(res));
            // Weights restrict into the weight set of the restriction.
            const auto Dres = weight_set(res);
            for (const auto& w : weight_set(rho))
                REQUIRE(std::binary_search(Dres.begin(), Dres.end(), bc_weight(rho.params(), w)));
        }
}

TEST_CASE("extension pairing")
{
    const auto p51 = Params::make(5, 1);
    // s = 2, d = 0: the partner has s' = 0 (sign -1, t' - t = 3) or s' = 2 (sign +1, t' - t = -2).
    CHECK(ext_exists(p51, Weight{{2}, 0}, Weight{{0}, 3}));
    CHECK(ext_exists(p51, Weight{{2}, 0}, Weight{{2}, 2}));
    CHECK_FALSE(ext_exists(p51, Weight{{2}, 0}, Weight{{0}, 0}));
    CHECK_FALSE(ext_exists(p51, Weight{{2}, 0}, Weight{{1}, 3}));
    CHECK_FALSE(ext_exists(p51, Weight{{2}, 0}, Weight{{2}, 0}));
    CHECK_THROWS_AS(ext_exists(p51, Weight{{4}, 0}, Weight{{1}, 0}), UnsupportedError);
    for (int p : {5, 7})
        for (int f = 1; f <= 2; ++f) {
            if (p == 7 && f == 2)
                continue;
            const auto params = Params::make(p, f);
            std::vector<Weight> ws;
            for (const auto& w : all_weights(params))
                if (f > 1 || w.s[0] != p - 1)
                    ws.push_back(w);
            for (const auto& a : ws)
                for (const auto& b : ws) {
                    const bool x = ext_exists(params, a, b);
                    REQUIRE(x == oracle_ext(params, a, b));
                    REQUIRE(x == ext_exists(params, b, a));
                }
        }
}

TEST_CASE("adjacent JH factors are linked by extensions")
{
    for (int p : {5, 7})
        for (int f = 1; f <= 3; ++f) {
            if (p == 7 && f == 3)
                continue;
            const auto params = Params::make(p, f);
            for_each_type(params, [&](const TameType& tau) {
                const auto jh = jh_factors(tau);
                for (const auto& a : jh)
                    for (const auto& b : jh)
                        if ((a.J ^ b.J).size() == 1 &&
                            (f > 1 || (a.weight.s[0] != p - 1 && b.weight.s[0] != p - 1)))
                            REQUIRE(ext_exists(params, a.weight, b.weight));
            });
        }
}

TEST_CASE("weight interval examples")
{
    const auto p51 = Params::make(5, 1);
    // Irreducible with r = 2: both weights have s = 2, matching a principal series type with c = 2.
    const auto rho = make_irreducible(p51, 3);
    REQUIRE(is_generic(rho));
    const auto D = weight_set(rho);
    bool seen_full = false;
    for (const auto& tau : all_types(p51)) {
        const auto iv = weight_interval(rho, tau);
        const auto inter = jh_intersection(tau, D);
        if (inter.empty()) {
            REQUIRE_FALSE(iv.has_value());
            continue;
        }
        REQUIRE(iv.has_value());
        std::size_t box = 0;
        for (const auto& J : all_jsets(1))
            if (iv->j_min.subset_of(J) && J.subset_of(iv->j_max)) {
                REQUIRE(in_p_tau(tau, J));
                REQUIRE(std::binary_search(D.begin(), D.end(), jh_factor(tau, J)));
                ++box;
            }
        REQUIRE(box == inter.size());
        if (inter.size() == 2 && tau.is_principal_series()) {
            CHECK(tau.c_digits() == std::vector<int>{2});
            CHECK(iv->j_min == JSet::empty(1));
            CHECK(iv->j_max == JSet::full(1));
            seen_full = true;
        }
    }
    CHECK(seen_full);
}

TEST_CASE("type searches")
{
    for (int f = 1; f <= 2; ++f) {
        const auto params = Params::make(5, f);
        for (const auto& rho : all_generic_rhobars(params)) {
            const auto D = weight_set(rho);
            for (const auto& w : D) {
                const auto tau = find_type_isolating(rho, w);
                REQUIRE(jh_intersection(tau, D) == std::vector<Weight>{w});
            }
            const auto cov = find_type_covering(rho);
            REQUIRE(jh_intersection(cov, D) == D);
            for (const auto& a : D)
                for (const auto& b : D) {
                    if (!(a < b))
                        continue;
                    if (!ext_exists(params, a, b)) {
                        REQUIRE_THROWS_AS(find_type_for_pair(rho, a, b), PreconditionError);
                        continue;
                    }
                    const auto t2 = find_type_for_pair(rho, a, b);
                    REQUIRE(jh_intersection(t2, D) == std::vector<Weight>{a, b});
                    // Cuspidal for reducible parameters, principal series for irreducible ones.
                    REQUIRE(t2.is_cuspidal() == rho.is_reducible());
                }
        }
    }
    // f = 1 reducible: both weights have s = p - 3 - s, so only a cuspidal type holds them.
    const auto rho = make_reducible(Params::make(5, 1), 2, 0);
    const auto cov = find_type_covering(rho);
    CHECK(cov.is_cuspidal());
    CHECK(jh_intersection(cov, weight_set(rho)).size() == 2);
}
