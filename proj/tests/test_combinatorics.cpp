#include <doctest.h>

#include <set>

#include "gl2/combinatorics.hpp"
#include "gl2/errors.hpp"

using namespace gl2;

TEST_CASE("params validation")
{
    CHECK(Params::make(5, 2).q() == 25);
    CHECK(Params::make(7, 3).e() == 342);
    CHECK_THROWS_AS(Params::make(2, 1), ParameterError);
    CHECK_THROWS_AS(Params::make(3, 1), ParameterError);
    CHECK(Params::make(3, 1, true).q() == 3);
    CHECK_THROWS_AS(Params::make(9, 1), ParameterError);
    CHECK_THROWS_AS(Params::make(5, 0), ParameterError);
}

TEST_CASE("digits examples")
{
    CHECK(digits(7, 5, 2) == std::vector<int>{2, 1});
    CHECK(digits(0, 5, 2) == std::vector<int>{0, 0});
    CHECK(digits(23, 5, 2) == std::vector<int>{3, 4});
    CHECK_THROWS_AS(digits(24, 5, 2), RangeError);
    CHECK(digits(24, 5, 2, DigitRange::FullPower) == std::vector<int>{4, 4});
    CHECK_THROWS_AS(digits(25, 5, 2, DigitRange::FullPower), RangeError);
    CHECK_THROWS_AS(digits(-1, 5, 2), RangeError);
}

TEST_CASE("digits round trip is exhaustive")
{
    for (int p : {5, 7})
        for (int f = 1; f <= 3; ++f) {
            const auto q = ipow(p, f);
            for (std::int64_t n = 0; n < q; ++n) {
                const auto ds = digits(n, p, f, DigitRange::FullPower);
                std::int64_t back = 0, scale = 1;
                for (int d : ds) {
                    back += d * scale;
                    scale *= p;
                }
                REQUIRE(back == n);
                REQUIRE(from_digits(ds, p) == n);
            }
        }
}

TEST_CASE("normalize_weight examples")
{
    const auto params = Params::make(5, 2);
    CHECK(normalize_weight(params, {0, 0}, {2, 1}) == Weight{{2, 1}, 0});
    CHECK(normalize_weight(params, {3, 0}, {1, 0}) == Weight{{1, 0}, 3});
    CHECK(normalize_weight(params, {4, 3}, {0, 0}) == Weight{{0, 0}, 19});
    CHECK_THROWS_AS(normalize_weight(params, {4, 4}, {0, 0}), ParameterError);
}

TEST_CASE("normalize_weight is a bijection onto (s, d)")
{
    for (int p : {5, 7})
        for (int f = 1; f <= 3; ++f) {
            if (p == 7 && f == 3)
                continue;
            const auto params = Params::make(p, f);
            const auto q = params.q();
            std::set<Weight> seen;
            // Every admissible twist vector with a fixed s.
            const std::vector<int> s(f, 1);
            for (std::int64_t tv = 0; tv < q; ++tv) {
                const auto t = digits(tv, p, f, DigitRange::FullPower);
                if (tv == q - 1) {
                    CHECK_THROWS_AS(normalize_weight(params, t, s), ParameterError);
                    continue;
                }
                const Weight w = normalize_weight(params, t, s);
                REQUIRE(twist_digits(params, w) == t);
                seen.insert(w);
            }
            CHECK(static_cast<std::int64_t>(seen.size()) == params.e());
        }
}

TEST_CASE("regular weights")
{
    const auto params = Params::make(5, 2);
    CHECK(is_regular_weight(params, Weight{{2, 1}, 0}));
    CHECK_FALSE(is_regular_weight(params, Weight{{4, 1}, 0}));
    CHECK(is_regular_weight(params, Weight{{0, 0}, 7}));
}

TEST_CASE("bc_weight examples")
{
    CHECK(bc_weight(Params::make(5, 1), Weight{{2}, 1}) == Weight{{2, 2}, 6});
    CHECK(bc_weight(Params::make(5, 2), Weight{{2, 1}, 0}) == Weight{{2, 1, 2, 1}, 0});
    CHECK(bc_weight(Params::make(5, 1), Weight{{3}, 3}) == Weight{{3, 3}, 18});
}

TEST_CASE("bc_weight is injective")
{
    for (int f = 1; f <= 2; ++f) {
        const auto params = Params::make(5, f);
        std::set<Weight> images;
        const auto all = all_weights(params);
        for (const auto& w : all)
            images.insert(bc_weight(params, w));
        CHECK(images.size() == all.size());
        CHECK(static_cast<std::int64_t>(all.size()) == params.q() * params.e());
    }
}

TEST_CASE("jset arithmetic is cyclic")
{
    const JSet J = JSet::from_indices(3, {0, 2});
    CHECK(J.bits == 5u);
    CHECK(J.prev(0) == 2);
    CHECK(J.next(2) == 0);
    CHECK(J.complement().bits == 2u);
    CHECK(J.size() == 2);
    CHECK(J.to_string() == "{0,2}");
    CHECK(all_jsets(3).size() == 8);
    CHECK_THROWS_AS(JSet::from_indices(3, {3}), IndexError);
}
