#include <doctest.h>

#include <algorithm>
#include <array>

#include "gl2/errors.hpp"
#include "gl2/monomial.hpp"

using namespace gl2;

namespace {

std::string strip(std::string s)
{
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

// Variables as bits: X_j is bit 2j, Y_j is bit 2j+1.
std::uint32_t support(const Monomial& m)
{
    std::uint32_t s = 0;
    for (int j = 0; j < m.width(); ++j) {
        if (m.x_exp(j) > 0)
            s |= 1u << (2 * j);
        if (m.y_exp(j) > 0)
            s |= 1u << (2 * j + 1);
    }
    return s;
}

// Membership by vanishing on the zero locus: the locus of a squarefree monomial ideal in the
// special fibre is a union of coordinate subspaces, indexed by sets of surviving variables.
bool vanishes_on_locus(const MonomialIdeal& ideal, const Monomial& m)
{
    const int n = ideal.ring().width();
    std::vector<std::uint32_t> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(support(g));
    const std::uint32_t sm = support(m);
    for (std::uint32_t T = 0; T < (1u << (2 * n)); ++T) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (((T >> (2 * j)) & 3u) == 3u)
                ok = false;
        for (auto g : gens)
            if ((g & ~T) == 0)
                ok = false;
        // A point of the locus where m does not vanish.
        if (ok && (sm & ~T) == 0)
            return false;
    }
    return true;
}

std::vector<Monomial> monomials_up_to(int n, int max_degree)
{
    std::vector<Monomial> out{Monomial::one(n)};
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Monomial> next;
        for (const auto& m : out)
            for (int j = 0; j < n; ++j) {
                next.push_back(m * Monomial::x(n, j));
                next.push_back(m * Monomial::y(n, j));
            }
        for (const auto& m : next)
            if (!m.is_zero() && std::find(out.begin(), out.end(), m) == out.end())
                out.push_back(m);
    }
    return out;
}

std::vector<Family> all_families(const RingSpec& ring)
{
    const auto W = ring.w_elements();
    std::vector<Family> out;
    for (std::uint32_t mask = 0; mask < (1u << W.size()); ++mask) {
        Family fam;
        for (std::size_t i = 0; i < W.size(); ++i)
            if ((mask >> i) & 1u)
                fam.push_back(W[i]);
        out.push_back(normalize_family(fam));
    }
    return out;
}

bool family_subset(const Family& a, const Family& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("component ideals")
{
    const auto ring = RingSpec::full(2);
    CHECK(strip(primed_string(component_ideal(ring, JSet::full(2)))) == "(X'_{j_1},X'_{j_2})");
    CHECK(strip(primed_string(component_ideal(ring, JSet::empty(2)))) == "(Y'_{j_1},Y'_{j_2})");
    const auto point = RingSpec::make(JSet::from_indices(2, {0}), JSet::from_indices(2, {0}));
    CHECK(component_ideal(point, JSet::from_indices(2, {0})).is_zero());
    CHECK_THROWS(component_ideal(point, JSet::empty(2)));
}

TEST_CASE("ideals of families")
{
    const auto ring = RingSpec::full(2);
    const JSet hi = JSet::full(2), lo = JSet::empty(2);
    CHECK(strip(primed_string(ideal_of_family(ring, {lo, hi}))) ==
          "(X'_{j_1}Y'_{j_2},X'_{j_2}Y'_{j_1})");
    CHECK(ideal_of_family(ring, {}).is_unit());
    CHECK(strip(primed_string(ideal_of_family(ring, {JSet::from_indices(2, {0}), hi}))) ==
          "(X'_{j_1})");
}

TEST_CASE("ideal operations")
{
    const auto ring = RingSpec::full(2);
    const auto x1 = MonomialIdeal::generated(ring, {Monomial::x(2, 0)});
    const auto y1 = MonomialIdeal::generated(ring, {Monomial::y(2, 0)});
    CHECK(strip(primed_string(ideal_sum(x1, y1))) == "(X'_{j_1},Y'_{j_1})");
    const auto xs = MonomialIdeal::generated(ring, {Monomial::x(2, 0), Monomial::x(2, 1)});
    const auto ys = MonomialIdeal::generated(ring, {Monomial::y(2, 0), Monomial::y(2, 1)});
    const auto inter = ideal_intersect(xs, ys);
    CHECK(strip(primed_string(inter)) == "(X'_{j_1}Y'_{j_2},X'_{j_2}Y'_{j_1})");
    for (const auto& m : monomials_up_to(2, 4))
        REQUIRE(ideal_contains(inter, m) == (ideal_contains(xs, m) && ideal_contains(ys, m)));
    CHECK(ideal_contains(x1, Monomial::x(2, 0) * Monomial::y(2, 1)));
    CHECK((Monomial::x(2, 0) * Monomial::y(2, 0)).is_zero());
    CHECK(ideal_colon(xs, Monomial::x(2, 0)).is_unit());
    // X_2 Y_2 vanishes, so X_2 joins the colon by Y_2.
    CHECK(ideal_colon(x1, Monomial::y(2, 1)) == xs);
    CHECK(ideal_colon(x1, Monomial::y(2, 0)) == x1);
}

TEST_CASE("membership agrees with vanishing on the locus")
{
    for (int n = 1; n <= 2; ++n) {
        const auto ring = RingSpec::full(n);
        const auto mons = monomials_up_to(n, 4);
        const auto fams = all_families(ring);
        std::vector<MonomialIdeal> ideals;
        for (const auto& fam : fams)
            ideals.push_back(ideal_of_family(ring, fam));
        for (const auto& I : ideals) {
            REQUIRE(I.is_radical_generated());
            for (const auto& m : mons)
                REQUIRE(ideal_contains(I, m) == vanishes_on_locus(I, m));
        }
        for (const auto& a : ideals)
            for (const auto& b : ideals) {
                const auto s = ideal_sum(a, b);
                REQUIRE(s.is_radical_generated());
                for (const auto& m : mons)
                    REQUIRE(ideal_contains(s, m) == vanishes_on_locus(s, m));
            }
    }
}

TEST_CASE("ideal of a family reverses inclusion and bounds sums")
{
    for (int n = 1; n <= 3; ++n) {
        const auto ring = RingSpec::full(n);
        const auto fams = all_families(ring);
        std::vector<MonomialIdeal> ideals;
        for (const auto& fam : fams)
            ideals.push_back(ideal_of_family(ring, fam));
        for (std::size_t a = 0; a < fams.size(); ++a)
            for (std::size_t b = 0; b < fams.size(); ++b) {
                if (family_subset(fams[a], fams[b]))
                    REQUIRE(ideal_subset(ideals[b], ideals[a]));
                const auto inter = ideal_of_family(ring, family_intersection(fams[a], fams[b]));
                REQUIRE(ideal_subset(ideal_sum(ideals[a], ideals[b]), inter));
                const auto uni = normalize_family([&] {
                    Family u = fams[a];
                    u.insert(u.end(), fams[b].begin(), fams[b].end());
                    return u;
                }());
                REQUIRE(ideal_intersect(ideals[a], ideals[b]) == ideal_of_family(ring, uni));
            }
    }
}

TEST_CASE("faces")
{
    for (int n = 1; n <= 3; ++n) {
        const auto ring = RingSpec::full(n);
        for (const auto& a : ring.w_elements())
            for (const auto& b : ring.w_elements())
                if (a.subset_of(b)) {
                    const auto rep = check_lemma_faces(ring, a, b);
                    REQUIRE(rep.pass);
                    REQUIRE(face_ideal(ring, a, b) == ideal_of_family(ring, face(ring, a, b)));
                }
    }
    // Offset ring: j_min' nonempty.
    const auto ring = RingSpec::make(JSet::from_indices(3, {0}), JSet::full(3));
    for (const auto& a : ring.w_elements())
        for (const auto& b : ring.w_elements())
            if (a.subset_of(b))
                REQUIRE(check_lemma_faces(ring, a, b).pass);
}

TEST_CASE("capped intervals with a common cap")
{
    const auto ring = RingSpec::full(2);
    const auto caps = capped_intervals(ring);
    for (const auto& a : caps) {
        REQUIRE(is_interval(a));
        REQUIRE(is_capped(a));
        for (const auto& b : caps) {
            if (family_cap(a) != family_cap(b)) {
                REQUIRE_THROWS_AS(check_lemma_ideals(ring, a, b), PreconditionError);
                continue;
            }
            REQUIRE(check_lemma_ideals(ring, a, b).pass);
        }
    }
    const Family two_max{JSet::from_indices(2, {0}), JSet::from_indices(2, {1})};
    CHECK_FALSE(is_capped(two_max));
    CHECK_THROWS_AS(cyclicity_induction_check(ring, two_max), PreconditionError);
}

TEST_CASE("cyclicity induction")
{
    for (int n = 1; n <= 3; ++n) {
        const auto ring = RingSpec::full(n);
        const auto W = ring.w_elements();
        const auto whole = cyclicity_induction_check(ring, W);
        REQUIRE(whole.report.pass);
        REQUIRE(whole.annihilator == ideal_of_family(ring, W));
        for (const auto& J : W) {
            const auto single = cyclicity_induction_check(ring, {J});
            REQUIRE(single.report.pass);
            REQUIRE(single.annihilator == component_ideal(ring, J));
        }
    }
}

TEST_CASE("failure of the sum identity without a common cap")
{
    const auto ring = RingSpec::full(2);
    const auto ex = uncapped_sum_examples(ring);
    REQUIRE(ex.size() == 3);
    const std::vector<std::array<std::string, 4>> expected{
        {"(X'_{j_1},X'_{j_2})", "(Y'_{j_1},Y'_{j_2})", "(X'_{j_1},X'_{j_2},Y'_{j_1},Y'_{j_2})",
         "(1)"},
        {"(X'_{j_1})", "(Y'_{j_1})", "(X'_{j_1},Y'_{j_1})", "(1)"},
        {"(X'_{j_1})", "(X'_{j_1}Y'_{j_2},X'_{j_2}Y'_{j_1})", "(X'_{j_1},X'_{j_2}Y'_{j_1})",
         "(X'_{j_1},X'_{j_2})"},
    };
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(strip(primed_string(ex[i].ideal_first)) == expected[i][0]);
        CHECK(strip(primed_string(ex[i].ideal_second)) == expected[i][1]);
        CHECK(strip(primed_string(ex[i].sum)) == expected[i][2]);
        CHECK(strip(primed_string(ex[i].ideal_of_intersection)) == expected[i][3]);
        CHECK(ideal_subset(ex[i].sum, ex[i].ideal_of_intersection));
        CHECK_FALSE(ex[i].sum == ex[i].ideal_of_intersection);
    }
    CHECK_THROWS_AS(uncapped_sum_examples(RingSpec::full(3)), PreconditionError);
}
