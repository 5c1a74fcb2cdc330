#include <doctest.h>

#include <algorithm>
#include <map>

#include "gl2/errors.hpp"
#include "gl2/predictor.hpp"

using namespace gl2;

namespace {

// The prescription read literally: p on j_min', the Y or X coordinate on delta by base
// membership, and 1 outside j_max'. The primed variant swaps the roles.
Rational oracle_varpi(const DefSpaceData& d, const Point& lambda, int j, bool primed)
{
    const JSet lo = (d.j_base.complement() & d.j_min) | (d.j_base & d.j_max.complement());
    const JSet hi = (d.j_base.complement() & d.j_max) | (d.j_base & d.j_min.complement());
    if (lo.contains(j))
        return Rational(primed ? 0 : 1);
    if (!hi.contains(j))
        return Rational(primed ? 1 : 0);
    const auto slots = hi.minus(lo).indices();
    const auto pos = std::find(slots.begin(), slots.end(), j) - slots.begin();
    const Rational x = lambda.x_val[pos];
    const bool y_branch = d.j_base.contains(j) != primed;
    return y_branch ? Rational(1) - x : x;
}

// Gauge of the predicted sum from the min over all terms, shifted to vanish at the empty set.
std::map<JSet, Rational> oracle_gauge(const DefSpaceData& d, const Point& lambda)
{
    const int f = d.tau.params().f();
    std::vector<JSet> idx;
    for (const auto& J : all_jsets(f))
        if (in_p_tau(d.tau, J ^ d.j_base))
            idx.push_back(J);
    std::map<JSet, Rational> out;
    for (const auto& J2 : idx) {
        Rational best(1000);
        for (const auto& J : idx) {
            Rational v(0);
            for (int j : J.indices())
                v += oracle_varpi(d, lambda, j, false);
            best = std::min(best, v + Rational(J2.minus(J).size()));
        }
        out[J2] = best;
    }
    const Rational shift = out.at(JSet::empty(f));
    for (auto& [J, v] : out)
        v -= shift;
    return out;
}

std::vector<Point> grid(int dims, int den)
{
    std::vector<Point> out{Point{}};
    for (int d = 0; d < dims; ++d) {
        std::vector<Point> next;
        for (const auto& pt : out)
            for (int k = 0; k <= den; ++k) {
                Point q = pt;
                q.x_val.push_back(Rational(k, den));
                next.push_back(q);
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST_CASE("bounds relative to the base set")
{
    for (int f = 1; f <= 3; ++f)
        for (const auto& base : all_jsets(f))
            for (const auto& lo : all_jsets(f))
                for (const auto& hi : all_jsets(f)) {
                    if (!lo.subset_of(hi))
                        continue;
                    const auto [lp, hp] = relative_bounds(base, lo, hi);
                    REQUIRE(hp.minus(lp) == hi.minus(lo));
                    for (const auto& J : all_jsets(f)) {
                        const JSet moved = J ^ base;
                        const bool a = lo.subset_of(moved) && moved.subset_of(hi);
                        const bool b = lp.subset_of(J) && J.subset_of(hp);
                        REQUIRE(a == b);
                    }
                }
}

TEST_CASE("varpi prescription")
{
    const auto tau = make_ps_type(Params::make(5, 2), 7, 0);
    const auto d = DefSpaceData::make(tau, JSet::from_indices(2, {0}), JSet::full(2));
    const Point lam{{Rational(1, 3)}};
    CHECK(varpi_valuation(d, lam, 0) == Rational(1));
    CHECK(varpi_valuation(d, lam, 1) == Rational(1, 3));
    CHECK(varpi_valuation(d, lam, 1, VarpiKind::Primed) == Rational(2, 3));
    const auto d2 = DefSpaceData::make(tau, JSet::empty(2), JSet::from_indices(2, {0}));
    CHECK(varpi_valuation(d2, lam, 1) == Rational(0));
    const auto tau1 = make_ps_type(Params::make(5, 1), 2, 0);
    const auto d1 = DefSpaceData::make(tau1, JSet::empty(1), JSet::full(1));
    CHECK(varpi_valuation(d1, Point{{Rational(1, 2)}}, 0) == Rational(1, 2));
    CHECK_THROWS_AS(varpi_valuation(d1, Point{{Rational(3, 2)}}, 0), RangeError);
    CHECK_THROWS_AS(varpi_valuation(d1, Point{}, 0), ParameterError);
    // The box must stay inside P_tau.
    const auto gap = make_ps_type(Params::make(5, 2), 5, 0);
    CHECK_THROWS_AS(DefSpaceData::make(gap, JSet::empty(2), JSet::full(2)), PreconditionError);
}

TEST_CASE("f = 1 prediction is the two-term minimum")
{
    const auto tau1 = make_ps_type(Params::make(5, 1), 2, 0);
    const auto d1 = DefSpaceData::make(tau1, JSet::empty(1), JSet::full(1));
    for (int k = 0; k <= 6; ++k) {
        const Rational v(k, 6);
        const auto pred = predict_lattice(d1, Point{{v}});
        const auto* g = std::get_if<GaugeVector>(&pred);
        REQUIRE(g != nullptr);
        CHECK(g->values.at(JSet::full(1)) == std::min(Rational(1), v));
        CHECK(annihilation_identity_check(d1, Point{{v}}, JSet::full(1)).pass);
    }
}

TEST_CASE("irregular cuspidal types predict a socle lattice")
{
    const auto tau = make_cuspidal_type(Params::make(5, 2), 21);
    const auto cls = classify_cuspidal(tau);
    REQUIRE_FALSE(cls.regular);
    const JSet J = *cls.unique_regular_J;
    const auto d = DefSpaceData::make(tau, J, J);
    const auto pred = predict_lattice(d, Point{});
    const auto* marker = std::get_if<SocleLatticeMarker>(&pred);
    REQUIRE(marker != nullptr);
    CHECK(marker->J == J);
}

TEST_CASE("predictions agree with the literal sum over all boxes")
{
    for (int f = 1; f <= 2; ++f)
        for (const auto& tau : all_types(Params::make(5, f))) {
            if (tau.is_cuspidal() && !classify_cuspidal(tau).regular)
                continue;
            for (const auto& lo : all_jsets(f))
                for (const auto& hi : all_jsets(f)) {
                    if (!lo.subset_of(hi))
                        continue;
                    bool inside = true;
                    for (const auto& J : all_jsets(f))
                        if (lo.subset_of(J) && J.subset_of(hi))
                            inside = inside && in_p_tau(tau, J);
                    if (!inside)
                        continue;
                    const auto d = DefSpaceData::make(tau, lo, hi);
                    for (const auto& lam : grid(d.delta().size(), 3)) {
                        for (const auto& J : all_jsets(f)) {
                            Rational plain(0), primed(0);
                            for (int j : J.indices()) {
                                REQUIRE(varpi_valuation(d, lam, j) == oracle_varpi(d, lam, j, false));
                                REQUIRE(varpi_valuation(d, lam, j, VarpiKind::Primed) ==
                                        oracle_varpi(d, lam, j, true));
                                plain += oracle_varpi(d, lam, j, false);
                                primed += oracle_varpi(d, lam, j, true);
                            }
                            REQUIRE(plain + primed == Rational(J.size()));
                            REQUIRE(varpi_set_valuation(d, lam, J) == plain);
                        }
                        const auto pred = predict_lattice(d, lam);
                        const auto* g = std::get_if<GaugeVector>(&pred);
                        REQUIRE(g != nullptr);
                        REQUIRE(is_valid_gauge(*g));
                        REQUIRE(g->values == oracle_gauge(d, lam));
                        for (const auto& J : gauge_indices(tau))
                            REQUIRE(annihilation_identity_check(d, lam, J).pass);
                    }
                }
        }
}

TEST_CASE("degenerate point collapses to one distinguished lattice")
{
    const auto tau = make_ps_type(Params::make(5, 2), 7, 0);
    const auto d = DefSpaceData::make(tau, JSet::empty(2), JSet::full(2));
    const auto pred = predict_lattice(d, Point{{Rational(0), Rational(0)}});
    const auto& g = std::get<GaugeVector>(pred);
    // Every varpi has valuation 0, so the term at the full set dominates.
    const auto single = gauge_sum(tau, {{Rational(0), JSet::full(2)}});
    CHECK(g.values == single.values);
}
