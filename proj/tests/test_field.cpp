#include <doctest.h>

#include <random>

#include "gl2/errors.hpp"
#include "gl2/field.hpp"
#include "gl2/fmatrix.hpp"
#include "gl2/galois_ring.hpp"
#include "gl2/lattice.hpp"

using namespace gl2;

namespace {

// Field element as a polynomial over F_p, multiplied and reduced by hand.
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int p)
{
    const int m = static_cast<int>(modulus.size());
    std::vector<int> prod(2 * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int k = 2 * m - 1; k >= m; --k) {
        const int c = prod[k];
        prod[k] = 0;
        for (int i = 0; i < m; ++i)
            prod[k - m + i] = ((prod[k - m + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(m);
    return prod;
}

std::vector<int> digits_of(const FiniteField& F, FiniteField::Elem a)
{
    std::vector<int> d(F.degree());
    for (int i = 0; i < F.degree(); ++i)
        d[i] = F.digit(a, i);
    return d;
}

}  // namespace

TEST_CASE("Conway polynomials")
{
    CHECK(conway_polynomial(5, 2) == std::vector<int>{2, 4});
    CHECK(conway_polynomial(5, 4) == std::vector<int>{2, 4, 4, 0});
    CHECK(conway_polynomial(7, 2) == std::vector<int>{3, 6});
    CHECK(conway_polynomial(3, 2) == std::vector<int>{2, 2});
    CHECK(conway_polynomial(5, 1) == std::vector<int>{3});
    CHECK(conway_polynomial(7, 1) == std::vector<int>{4});
}

TEST_CASE("field arithmetic matches polynomial arithmetic")
{
    for (auto [p, m] : {std::pair{5, 2}, std::pair{7, 2}, std::pair{3, 2}, std::pair{5, 1}}) {
        const auto F = FiniteField::make(p, m);
        const int n = F->order();
        for (int a = 0; a < n; ++a) {
            const auto ea = static_cast<FiniteField::Elem>(a);
            REQUIRE(F->add(ea, F->neg(ea)) == F->zero());
            if (a != 0)
                REQUIRE(F->mul(ea, F->inv(ea)) == F->one());
            for (int b = 0; b < n; ++b) {
                const auto eb = static_cast<FiniteField::Elem>(b);
                const auto prod = F->mul(ea, eb);
                REQUIRE(digits_of(*F, prod) ==
                        poly_mul_mod(digits_of(*F, ea), digits_of(*F, eb), F->modulus(), p));
                REQUIRE(F->add(ea, eb) == F->add(eb, ea));
                std::vector<int> s(m);
                for (int i = 0; i < m; ++i)
                    s[i] = (F->digit(ea, i) + F->digit(eb, i)) % p;
                REQUIRE(F->add(ea, eb) == F->from_digits(s));
            }
        }
        // The class of x generates the unit group.
        int order = 1;
        auto g = F->primitive();
        while (g != F->one()) {
            g = F->mul(g, F->primitive());
            ++order;
        }
        CHECK(order == n - 1);
        CHECK(F->exp(n - 1) == F->one());
        CHECK(F->pow(F->primitive(), -1) == F->inv(F->primitive()));
    }
    CHECK_THROWS(FiniteField::make(4, 1));
}

TEST_CASE("Galois ring arithmetic")
{
    const auto F = FiniteField::make(5, 2);
    const auto R = GaloisRing::make(F, 4);
    CHECK(R->modulus() == 625);
    std::mt19937 rng(12345);
    auto random_elem = [&] {
        GaloisRing::Elem e{};
        for (int i = 0; i < 2; ++i)
            e.c[i] = std::uniform_int_distribution<std::int64_t>(0, 624)(rng);
        return e;
    };
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_elem(), b = random_elem(), c = random_elem();
        REQUIRE(R->mul(a, R->mul(b, c)) == R->mul(R->mul(a, b), c));
        REQUIRE(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
        REQUIRE(R->add(a, R->neg(a)) == R->zero());
        REQUIRE(F->mul(R->reduce(a), R->reduce(b)) == R->reduce(R->mul(a, b)));
        if (R->valuation(a) == 0)
            REQUIRE(R->mul(a, R->unit_inverse(a)) == R->one());
        const int k = trial % 4;
        REQUIRE(R->valuation(R->shift_up(a, k)) == std::min(4, R->valuation(a) + k));
        const auto [quo, rem] = R->divmod_p_power(a, k);
        REQUIRE(R->add(R->shift_up(quo, k), rem) == a);
    }
    // Teichmuller lifts: multiplicative, reduce correctly, fixed by the q-th power.
    for (int a = 1; a < F->order(); ++a) {
        const auto ea = static_cast<FiniteField::Elem>(a);
        const auto t = R->teichmuller(ea);
        REQUIRE(R->reduce(t) == ea);
        auto power = R->one();
        for (int i = 0; i < F->order(); ++i)
            power = R->mul(power, t);
        REQUIRE(power == t);
        for (int b = 1; b < F->order(); b += 7) {
            const auto eb = static_cast<FiniteField::Elem>(b);
            REQUIRE(R->mul(t, R->teichmuller(eb)) == R->teichmuller(F->mul(ea, eb)));
        }
    }
    CHECK(R->valuation(R->zero()) == 4);
    CHECK(R->valuation(R->from_int(50)) == 2);
}

TEST_CASE("Howell forms are canonical under row operations")
{
    const auto F = FiniteField::make(5, 2);
    const auto R = GaloisRing::make(F, 3);
    std::mt19937 rng(2024);
    auto rand_elem = [&](bool unit) {
        GaloisRing::Elem e{};
        for (int i = 0; i < 2; ++i)
            e.c[i] = std::uniform_int_distribution<std::int64_t>(0, R->modulus() - 1)(rng);
        if (unit && R->valuation(e) > 0)
            e.c[0] = (e.c[0] + 1) % R->modulus();
        if (unit && R->valuation(e) > 0)
            e.c[1] = (e.c[1] + 1) % R->modulus();
        return e;
    };
    const int n = 4;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<RVec> gens;
        const int count = 1 + trial % 5;
        for (int g = 0; g < count; ++g) {
            RVec v(n);
            const int scale = std::uniform_int_distribution<int>(0, 2)(rng);
            for (auto& x : v)
                x = R->shift_up(rand_elem(false), scale);
            gens.push_back(v);
        }
        const auto H = howell_form(*R, n, gens);
        REQUIRE(howell_form(*R, n, H) == H);
        // Elementary transformations of the generators.
        auto mixed = gens;
        for (int step = 0; step < 6 && mixed.size() > 1; ++step) {
            const auto i = std::uniform_int_distribution<std::size_t>(0, mixed.size() - 1)(rng);
            auto j = std::uniform_int_distribution<std::size_t>(0, mixed.size() - 1)(rng);
            if (i == j)
                j = (j + 1) % mixed.size();
            const auto c = rand_elem(false);
            for (int k = 0; k < n; ++k)
                mixed[i][k] = R->add(mixed[i][k], R->mul(c, mixed[j][k]));
            const auto u = rand_elem(true);
            for (int k = 0; k < n; ++k)
                mixed[j][k] = R->mul(u, mixed[j][k]);
            std::swap(mixed[0], mixed[mixed.size() - 1]);
        }
        REQUIRE(howell_form(*R, n, mixed) == H);
        // Adding a combination of existing generators changes nothing.
        auto extended = gens;
        RVec combo(n, R->zero());
        for (const auto& g : gens) {
            const auto c = rand_elem(false);
            for (int k = 0; k < n; ++k)
                combo[k] = R->add(combo[k], R->mul(c, g[k]));
        }
        extended.push_back(combo);
        REQUIRE(howell_form(*R, n, extended) == H);
    }
}

TEST_CASE("dense linear algebra over the field")
{
    const auto F = FiniteField::make(7, 2);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = 1 + trial % 6, c = 1 + (trial / 6) % 6;
        FMatrix A(r, c);
        for (auto& x : A.a)
            x = static_cast<FiniteField::Elem>(std::uniform_int_distribution<int>(0, 48)(rng));
        if (trial % 3 == 0 && r > 1)
            for (int j = 0; j < c; ++j)
                A.at(r - 1, j) = A.at(0, j);
        const int rk = linalg::rank(*F, A);
        const auto K = linalg::kernel(*F, A);
        REQUIRE(K.cols == c - rk);
        const auto AK = linalg::mul(*F, A, K);
        for (auto x : AK.a)
            REQUIRE(x == 0);
        if (r == c && rk == r) {
            const auto inv = linalg::inverse(*F, A);
            REQUIRE(linalg::mul(*F, A, inv) == FMatrix::identity(r));
        }
        const auto B = linalg::column_basis(*F, A);
        REQUIRE(B.cols == rk);
        REQUIRE(linalg::same_span(*F, B, A));
    }
}
