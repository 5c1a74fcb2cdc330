#include "gl2/gauge.hpp"

#include <algorithm>
#include <functional>

#include "gl2/errors.hpp"

namespace gl2 {

std::vector<JSet> gauge_indices(const TameType& tau)
{
    std::vector<JSet> r;
    for (const auto& J : all_jsets(tau.params().f()))
        if (in_p_tau(tau, iota(tau, J)))
            r.push_back(J);
    return r;
}

bool is_gauge_index(const TameType& tau, const JSet& J)
{
    return J.width == tau.params().f() && in_p_tau(tau, iota(tau, J));
}

namespace {

void require_index(const TameType& tau, const JSet& J)
{
    if (!is_gauge_index(tau, J))
        throw IndexError("iota(" + J.to_string() + ") is not in P_tau");
}

}  // namespace

int eps_cosocle(const TameType& tau, const JSet& J, const JSet& J_prime)
{
    require_index(tau, J);
    require_index(tau, J_prime);
    return J_prime.minus(J).size();
}

int eps_socle(const TameType& tau, const JSet& J, const JSet& J_prime)
{
    require_index(tau, J);
    require_index(tau, J_prime);
    return (J & J_prime).size();
}

GaugeVector gauge_sum(const TameType& tau, const std::vector<GaugeTerm>& terms)
{
    if (terms.empty())
        throw PreconditionError("gauge_sum of an empty family");
    for (const auto& t : terms)
        require_index(tau, t.J);
    GaugeVector g{tau, {}};
    for (const auto& J2 : gauge_indices(tau)) {
        Rational best = terms.front().valuation + J2.minus(terms.front().J).size();
        for (const auto& t : terms)
            best = std::min(best, t.valuation + Rational(J2.minus(t.J).size()));
        g.values[J2] = best;
    }
    const Rational shift = g.values.at(JSet::empty(tau.params().f()));
    for (auto& [J, v] : g.values)
        v -= shift;
    return g;
}

GaugeVector socle_lattice_gauge(const TameType& tau, const JSet& J_prime)
{
    require_index(tau, J_prime);
    std::vector<GaugeTerm> terms;
    for (const auto& J : gauge_indices(tau))
        terms.push_back({Rational((J & J_prime).size()), J});
    return gauge_sum(tau, terms);
}

bool is_valid_gauge(const GaugeVector& g)
{
    const JSet zero = JSet::empty(g.tau.params().f());
    auto it = g.values.find(zero);
    if (it == g.values.end() || it->second != Rational(0))
        return false;
    if (g.values.size() != gauge_indices(g.tau).size())
        return false;
    for (const auto& [J1, v1] : g.values) {
        if (v1 < Rational(0))
            return false;
        for (const auto& [J2, v2] : g.values)
            if (v2 > v1 + Rational(J2.minus(J1).size()))
                return false;
    }
    return true;
}

Rational dual_embedding_exponent(const TameType& tau)
{
    // p^n L inside M  iff  eps_J(M) <= n + eps_J(L) for every J.
    const JSet zero = JSet::empty(tau.params().f());
    const GaugeVector socle = socle_lattice_gauge(tau, zero);
    const GaugeVector cosocle = gauge_sum(tau, {{Rational(0), zero}});
    Rational n(0);
    for (const auto& [J, v] : cosocle.values)
        n = std::max(n, v - socle.values.at(J));
    return n;
}

std::vector<IndexedWeight> cokernel_weights(const TameType& tau, const JSet& J, int j,
                                            CokernelSide side, LatticeFamily family)
{
    (void)family;  // both families share the same membership rule
    const int f = tau.params().f();
    if (j < 0 || j >= f || J.contains(j))
        throw PreconditionError("index j must lie outside J");
    require_index(tau, J);
    require_index(tau, J.with(j));
    std::vector<IndexedWeight> r;
    for (const auto& Jp : gauge_indices(tau)) {
        const bool upper = Jp.contains(j);
        if (upper == (side == CokernelSide::Upper))
            r.push_back({Jp, jh_factor(tau, iota(tau, Jp))});
    }
    return r;
}

std::vector<JSet> saturated_chain(const TameType& tau, const JSet& J, const JSet& J_prime)
{
    require_index(tau, J);
    require_index(tau, J_prime);
    if (!J.subset_of(J_prime))
        throw PreconditionError("chain endpoints are not nested");
    std::vector<JSet> chain{J};
    std::function<bool(const JSet&)> extend = [&](const JSet& cur) {
        if (cur == J_prime)
            return true;
        for (int i : J_prime.minus(cur).indices()) {
            JSet nxt = cur.with(i);
            if (!is_gauge_index(tau, nxt))
                continue;
            chain.push_back(nxt);
            if (extend(nxt))
                return true;
            chain.pop_back();
        }
        return false;
    };
    if (!extend(J))
        throw TheoremViolation("no saturated chain from " + J.to_string() + " to " +
                               J_prime.to_string());
    return chain;
}

FiltrationReport predicted_filtration(const TameType& tau, const JSet& J,
                                      FiltrationDirection direction)
{
    if (!in_p_tau(tau, J))
        throw IndexError("index set " + J.to_string() + " not in P_tau");
    FiltrationReport rep{direction, {}, {}};
    const auto members = p_tau(tau);
    rep.layers.resize(tau.params().f() + 1);
    for (const auto& Jp : members)
        rep.layers[(J ^ Jp).size()].push_back({Jp, jh_factor(tau, Jp)});
    while (!rep.layers.empty() && rep.layers.back().empty())
        rep.layers.pop_back();
    for (std::size_t i = 0; i + 1 < rep.layers.size(); ++i)
        for (const auto& a : rep.layers[i])
            for (const auto& b : rep.layers[i + 1])
                if ((a.J ^ b.J).size() == 1)
                    rep.nonsplit_edges.emplace_back(a.J, b.J);
    return rep;
}

}  // namespace gl2
