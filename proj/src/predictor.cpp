#include "gl2/predictor.hpp"

#include "gl2/errors.hpp"

namespace gl2 {

std::pair<JSet, JSet> relative_bounds(const JSet& J, const JSet& j_min, const JSet& j_max)
{
    const JSet lo = (J.complement() & j_min) | (J & j_max.complement());
    const JSet hi = (J.complement() & j_max) | (J & j_min.complement());
    return {lo, hi};
}

DefSpaceData DefSpaceData::make(const TameType& tau, const JSet& j_min, const JSet& j_max)
{
    const int f = tau.params().f();
    if (j_min.width != f || j_max.width != f)
        throw ParameterError("interval width does not match f");
    if (!j_min.subset_of(j_max))
        throw PreconditionError("j_min must be contained in j_max");
    for (const auto& J : all_jsets(f))
        if (j_min.subset_of(J) && J.subset_of(j_max) && !in_p_tau(tau, J))
            throw PreconditionError("interval member " + J.to_string() + " is not in P_tau");
    JSet base = JSet::empty(f);
    if (tau.is_cuspidal() && classify_cuspidal(tau).regular)
        base = gl2::j_base(tau);
    auto [lo, hi] = relative_bounds(base, j_min, j_max);
    return DefSpaceData{tau, j_min, j_max, base, lo, hi};
}

DefSpaceData DefSpaceData::make(const TameType& tau, const WeightInterval& interval)
{
    return make(tau, interval.j_min, interval.j_max);
}

namespace {

Rational x_of(const DefSpaceData& data, const Point& lambda, int j)
{
    const auto slots = data.delta().indices();
    if (lambda.x_val.size() != slots.size())
        throw ParameterError("point has " + std::to_string(lambda.x_val.size()) +
                             " coordinates but delta has " + std::to_string(slots.size()));
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i] == j) {
            const Rational v = lambda.x_val[i];
            if (v < Rational(0) || v > Rational(1))
                throw RangeError("point valuations must lie in [0, 1]");
            return v;
        }
    throw IndexError("index outside delta");
}

}  // namespace

Rational varpi_valuation(const DefSpaceData& data, const Point& lambda, int j, VarpiKind kind)
{
    const bool plain = kind == VarpiKind::Plain;
    // Validate dimensions even when j is outside delta.
    for (int i : data.delta().indices())
        (void)x_of(data, lambda, i);
    if (data.j_min_prime.contains(j))
        return plain ? Rational(1) : Rational(0);
    if (!data.j_max_prime.contains(j))
        return plain ? Rational(0) : Rational(1);
    const Rational x = x_of(data, lambda, j);
    const bool x_branch = data.j_base.contains(j) != plain;
    return x_branch ? x : Rational(1) - x;
}

Rational varpi_set_valuation(const DefSpaceData& data, const Point& lambda, const JSet& J,
                             VarpiKind kind)
{
    Rational v(0);
    for (int j : J.indices())
        v += varpi_valuation(data, lambda, j, kind);
    return v;
}

Prediction predict_lattice(const DefSpaceData& data, const Point& lambda)
{
    if (data.tau.is_cuspidal()) {
        const auto cls = classify_cuspidal(data.tau);
        if (!cls.regular)
            return SocleLatticeMarker{*cls.unique_regular_J};
    }
    std::vector<GaugeTerm> terms;
    for (const auto& J : gauge_indices(data.tau))
        terms.push_back({varpi_set_valuation(data, lambda, J), J});
    return gauge_sum(data.tau, terms);
}

CheckReport annihilation_identity_check(const DefSpaceData& data, const Point& lambda,
                                        const JSet& J)
{
    if (!is_gauge_index(data.tau, J))
        throw IndexError("iota(" + J.to_string() + ") is not in P_tau");
    CheckReport rep;
    auto pred = predict_lattice(data, lambda);
    const auto* g = std::get_if<GaugeVector>(&pred);
    if (!g)
        throw UnsupportedError("irregular cuspidal type has no gauge prediction");
    const Rational vJ = varpi_set_valuation(data, lambda, J);
    bool premise = true;
    for (const auto& Jp : gauge_indices(data.tau))
        if (vJ > varpi_set_valuation(data, lambda, Jp) + Rational(J.minus(Jp).size()))
            premise = false;
    if (!premise)
        rep.fail("v_" + J.to_string() + " exceeds a competing term");
    else if (g->values.at(J) != vJ)
        rep.fail("gauge at " + J.to_string() + " differs from v_J");
    return rep;
}

}  // namespace gl2
