#include "gl2/engine_checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "gl2/errors.hpp"
#include "gl2/gauge.hpp"
#include "gl2/gmodule.hpp"
#include "gl2/lattice.hpp"
#include "gl2/monomial.hpp"
#include "gl2/predictor.hpp"
#include "gl2/rhobar.hpp"

namespace gl2 {

namespace {

std::string type_label(const TameType& tau)
{
    std::ostringstream os;
    os << (tau.is_principal_series() ? "ps:" : "cusp:");
    for (std::size_t i = 0; i < tau.exponents().size(); ++i)
        os << (i ? "," : "") << tau.exponents()[i];
    os << " (p=" << tau.params().p() << " f=" << tau.params().f() << ")";
    return os.str();
}

std::string weights_string(const std::vector<Weight>& ws)
{
    std::string s = "{";
    for (std::size_t i = 0; i < ws.size(); ++i)
        s += (i ? " " : "") + ws[i].to_string();
    return s + "}";
}

std::vector<Weight> sorted(std::vector<Weight> ws)
{
    std::sort(ws.begin(), ws.end());
    return ws;
}

std::vector<Weight> weights_of(const std::vector<IndexedWeight>& entries)
{
    std::vector<Weight> r;
    for (const auto& e : entries)
        r.push_back(e.weight);
    return sorted(std::move(r));
}

void require_ps(const TameType& tau)
{
    if (!tau.is_principal_series())
        throw UnsupportedError("the engine models principal series types only");
}

// Runs body, turning any library error into a counterexample.
void guarded(CheckReport& rep, const std::string& where, const std::function<void()>& body)
{
    try {
        body();
    } catch (const Error& e) {
        rep.expect(false, where + ": " + e.what());
    }
}

// rad^i / rad^(i+2) of M from a radical series.
GModule two_layer_quotient(const GModule& M, const LoewySeries& series, std::size_t i)
{
    const FiniteField& F = M.field();
    const FMatrix& top = series.chain[i];
    const GModule sub = submodule(M, top);
    FMatrix lower(top.cols, 0);
    if (i + 2 < series.chain.size() && series.chain[i + 2].cols > 0)
        lower = linalg::solve(F, top, series.chain[i + 2]);
    return quotient_module(sub, lower);
}

// soc^(i+2) / soc^i of M from a socle series (chain[k] = soc^(k+1)).
GModule two_layer_socle_quotient(const GModule& M, const LoewySeries& series, std::size_t i)
{
    const FiniteField& F = M.field();
    const FMatrix& top = series.chain[std::min(i + 1, series.chain.size() - 1)];
    const GModule sub = submodule(M, top);
    FMatrix lower(top.cols, 0);
    if (i > 0)
        lower = linalg::solve(F, top, series.chain[i - 1]);
    return quotient_module(sub, lower);
}

void compare_layers(CheckReport& rep, const std::string& where,
                    const std::vector<std::vector<Weight>>& measured, const FiltrationReport& pred)
{
    bool ok = measured.size() == pred.layers.size();
    for (std::size_t i = 0; ok && i < measured.size(); ++i)
        ok = sorted(measured[i]) == weights_of(pred.layers[i]);
    std::string detail;
    if (!ok) {
        detail = " measured";
        for (const auto& l : measured)
            detail += " " + weights_string(sorted(l));
        detail += " predicted";
        for (const auto& l : pred.layers)
            detail += " " + weights_string(weights_of(l));
    }
    rep.expect(ok, where + ": layers differ;" + detail);
}

void check_edges(CheckReport& rep, const std::string& where, const TameType& tau,
                 const FiltrationReport& pred,
                 const std::function<GModule(std::size_t)>& quotient_at)
{
    std::map<JSet, std::size_t> layer_of;
    for (std::size_t i = 0; i < pred.layers.size(); ++i)
        for (const auto& e : pred.layers[i])
            layer_of[e.J] = i;
    for (const auto& [a, b] : pred.nonsplit_edges) {
        const std::size_t i = layer_of.at(a);
        const Weight wa = jh_factor(tau, a);
        const Weight wb = jh_factor(tau, b);
        const std::string edge = where + " edge " + a.to_string() + "->" + b.to_string();
        guarded(rep, edge, [&] {
            const GModule Q = quotient_at(i);
            // Socle direction: layer i sits at the bottom, so the extension has top b.
            const bool cosocle = pred.direction == FiltrationDirection::Cosocle;
            const Weight& top = cosocle ? wa : wb;
            const Weight& bottom = cosocle ? wb : wa;
            auto E = extension_subquotient(Q, top, bottom);
            if (!E) {
                rep.expect(false, edge + ": no subquotient with cosocle " + top.to_string() +
                                      " and socle " + bottom.to_string());
                return;
            }
            rep.expect(jh_multiset(*E) == sorted({top, bottom}),
                       edge + ": subquotient has JH factors " + weights_string(jh_multiset(*E)));
            rep.expect(!is_semisimple(*E), edge + ": extension splits");
        });
    }
}

}  // namespace

CheckReport verify_jh(const TameType& tau, int precision)
{
    CheckReport rep;
    const std::string where = type_label(tau);
    guarded(rep, where, [&] {
        if (tau.is_cuspidal()) {
            const TameType big = bc_type(tau);
            const GModule M = induced_lattice(big, precision).reduction();
            const auto engine = jh_multiset(M);
            for (const auto& J : p_tau(tau)) {
                const Weight w = bc_weight(tau.params(), jh_factor(tau, J));
                rep.expect(std::binary_search(engine.begin(), engine.end(), w),
                           where + ": base-changed factor " + w.to_string() + " at " +
                               J.to_string() + " missing from the engine decomposition");
                rep.expect(w == jh_factor(big, bc_jset(tau, J)),
                           where + ": base change of the factor at " + J.to_string() +
                               " disagrees");
            }
            return;
        }
        const GModule M = induced_lattice(tau, precision).reduction();
        rep.expect(satisfies_relations(M), where + ": generator relations fail");
        const auto engine = jh_multiset(M);
        std::vector<Weight> predicted;
        for (const auto& e : jh_factors(tau))
            predicted.push_back(e.weight);
        predicted = sorted(predicted);
        rep.expect(engine == predicted, where + ": engine JH " + weights_string(engine) +
                                            " vs formulas " + weights_string(predicted));
        rep.expect(std::adjacent_find(engine.begin(), engine.end()) == engine.end(),
                   where + ": reduction is not multiplicity free");
        rep.expect(static_cast<int>(engine.size()) == static_cast<int>(p_tau(tau).size()),
                   where + ": JH count differs from |P_tau|");
    });
    return rep;
}

CheckReport verify_filtration(const TameType& tau, int precision)
{
    require_ps(tau);
    CheckReport rep;
    const std::string where = type_label(tau);
    guarded(rep, where, [&] {
        const Lattice L0 = induced_lattice(tau, precision);
        for (const auto& J : p_tau(tau)) {
            const Weight w = jh_factor(tau, J);
            const std::string at = where + " J=" + J.to_string();
            guarded(rep, at + " cosocle lattice", [&] {
                const GModule M = sublattice_with_cosocle(L0, w).reduction();
                const LoewySeries rs = radical_series(M);
                const auto pred = predicted_filtration(tau, J, FiltrationDirection::Cosocle);
                compare_layers(rep, at + " radical", rs.layers, pred);
                check_edges(rep, at + " radical", tau, pred,
                            [&](std::size_t i) { return two_layer_quotient(M, rs, i); });
            });
            guarded(rep, at + " socle lattice", [&] {
                const GModule M = sublattice_with_socle(L0, w).reduction();
                const LoewySeries ss = socle_series(M);
                const auto pred = predicted_filtration(tau, J, FiltrationDirection::Socle);
                compare_layers(rep, at + " socle", ss.layers, pred);
                check_edges(rep, at + " socle", tau, pred,
                            [&](std::size_t i) { return two_layer_socle_quotient(M, ss, i); });
            });
        }
    });
    return rep;
}

CheckReport verify_gauges(const TameType& tau, int precision)
{
    require_ps(tau);
    CheckReport rep;
    const std::string where = type_label(tau);
    guarded(rep, where, [&] {
        const Lattice L0 = induced_lattice(tau, precision);
        const auto cos = cosocle_lattices(L0);
        const auto soc = socle_lattices(L0);
        const auto idx = gauge_indices(tau);
        for (const auto& J : idx) {
            const GaugeVector g = measure_gauge(tau, cos, cos.at(J));
            for (const auto& Jp : idx)
                rep.expect(g.values.at(Jp) == Rational(eps_cosocle(tau, J, Jp)),
                           where + ": eps_" + Jp.to_string() + "(cosocle " + J.to_string() +
                               ") measured " + std::to_string(g.values.at(Jp).numerator()));
        }
        for (const auto& Jp : idx) {
            const Lattice& S = soc.at(Jp);
            const GaugeVector g = measure_gauge(tau, cos, S);
            const GaugeVector derived = socle_lattice_gauge(tau, Jp);
            for (const auto& J : idx) {
                rep.expect(g.values.at(J) == Rational(eps_socle(tau, J, Jp)),
                           where + ": eps_" + J.to_string() + "(socle " + Jp.to_string() +
                               ") measured " + std::to_string(g.values.at(J).numerator()));
                rep.expect(g.values.at(J) == derived.values.at(J),
                           where + ": socle gauge at " + J.to_string() +
                               " differs from its cosocle decomposition");
            }
            if (S.thickness() < L0.ambient()->max_thickness()) {
                const GaugeVector scaled = measure_gauge(tau, cos, S.times_p(1));
                rep.expect(scaled.values == g.values,
                           where + ": gauge of p times socle " + Jp.to_string() + " changed");
            }
        }
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                rep.expect(!homothetic(cos.at(idx[a]), cos.at(idx[b])),
                           where + ": cosocle lattices " + idx[a].to_string() + " and " +
                               idx[b].to_string() + " are homothetic");
    });
    return rep;
}

CheckReport verify_cokernels(const TameType& tau, int precision)
{
    require_ps(tau);
    CheckReport rep;
    const std::string where = type_label(tau);
    guarded(rep, where, [&] {
        const Lattice L0 = induced_lattice(tau, precision);
        const auto cos = cosocle_lattices(L0);
        const auto soc = socle_lattices(L0);
        const int f = tau.params().f();
        for (const auto family : {LatticeFamily::Socle, LatticeFamily::Cosocle}) {
            const bool socle = family == LatticeFamily::Socle;
            const auto& lattices = socle ? soc : cos;
            for (const auto& J : gauge_indices(tau))
                for (int j = 0; j < f; ++j) {
                    if (J.contains(j) || !is_gauge_index(tau, J.with(j)))
                        continue;
                    const std::string at = where + (socle ? " socle " : " cosocle ") +
                                           J.to_string() + "+" + std::to_string(j);
                    guarded(rep, at, [&] {
                        const Lattice& big = lattices.at(socle ? J : J.with(j));
                        const Lattice& small_raw = lattices.at(socle ? J.with(j) : J);
                        const Lattice small =
                            small_raw.times_p(containment_exponent(small_raw, big));
                        const CokernelSplit split = cokernel_split(big, small);
                        const auto up = weights_of(
                            cokernel_weights(tau, J, j, CokernelSide::Upper, family));
                        const auto lo = weights_of(
                            cokernel_weights(tau, J, j, CokernelSide::Lower, family));
                        rep.expect(sorted(split.upper) == up,
                                   at + ": upper " + weights_string(sorted(split.upper)) +
                                       " vs " + weights_string(up));
                        rep.expect(sorted(split.lower) == lo,
                                   at + ": lower " + weights_string(sorted(split.lower)) +
                                       " vs " + weights_string(lo));
                    });
                }
        }
    });
    return rep;
}

int measure_dual_embedding(const TameType& tau, int precision)
{
    require_ps(tau);
    const Lattice L0 = induced_lattice(tau, precision);
    const JSet empty = JSet::empty(tau.params().f());
    const Lattice socle0 = sublattice_with_socle(L0, jh_factor(tau, iota(tau, empty)));
    const Lattice cosocle0 = sublattice_with_cosocle(socle0, jh_factor(tau, iota(tau, empty)));
    return containment_exponent(socle0, cosocle0);
}

CheckReport verify_dual_embedding(const TameType& tau, int precision)
{
    CheckReport rep;
    const std::string where = type_label(tau);
    const int f = tau.params().f();
    guarded(rep, where, [&] {
        const int measured = measure_dual_embedding(tau, precision);
        const Rational derived = dual_embedding_exponent(tau);
        rep.expect(measured <= f,
                   where + ": measured exponent " + std::to_string(measured) + " exceeds f");
        rep.expect(derived <= Rational(f), where + ": gauge-derived exponent exceeds f");
        rep.expect(Rational(measured) == derived,
                   where + ": measured exponent " + std::to_string(measured) +
                       " differs from the gauge-derived one");
    });
    return rep;
}

namespace {

// Depth-first search for a saturated chain inside the sets K with in_p_tau(K xor base).
bool find_chain(const TameType& tau, const JSet& base, const JSet& from, const JSet& to)
{
    if (from == to)
        return true;
    for (int i : to.minus(from).indices()) {
        const JSet nxt = from.with(i);
        if (in_p_tau(tau, nxt ^ base) && find_chain(tau, base, nxt, to))
            return true;
    }
    return false;
}

std::vector<JSet> bases_of(const TameType& tau)
{
    if (tau.is_principal_series())
        return {JSet::empty(tau.params().f())};
    std::vector<JSet> r;
    for (int i : base_choices(tau))
        r.push_back(j_base_at(tau, i));
    return r;
}

// Principal series and regular cuspidal types, where the base set is defined.
bool has_base(const TameType& tau)
{
    return tau.is_principal_series() || classify_cuspidal(tau).regular;
}

}  // namespace

CheckReport verify_chains(const Params& params)
{
    CheckReport rep;
    std::set<std::pair<int, std::int64_t>> seen;
    for_each_type(params, [&](const TameType& tau) {
        if (!has_base(tau))
            return;
        // P_tau and the base choices depend only on the kind and on c.
        if (!seen.insert({tau.is_cuspidal() ? 1 : 0, tau.c_value()}).second)
            return;
        const std::string where = type_label(tau);
        const int f = params.f();
        for (const auto& base : bases_of(tau)) {
            rep.expect(in_p_tau(tau, base) && in_p_tau(tau, base.complement()),
                       where + ": base " + base.to_string() + " or its complement not in P_tau");
            std::vector<JSet> idx;
            for (const auto& J : all_jsets(f))
                if (in_p_tau(tau, J ^ base))
                    idx.push_back(J);
            for (const auto& J : idx)
                for (const auto& Jp : idx)
                    if (J.subset_of(Jp))
                        rep.expect(find_chain(tau, base, J, Jp),
                                   where + " base " + base.to_string() + ": no chain " +
                                       J.to_string() + " to " + Jp.to_string());
        }
        // The library chain for the default base.
        const auto idx = gauge_indices(tau);
        for (const auto& J : idx)
            for (const auto& Jp : idx) {
                if (!J.subset_of(Jp))
                    continue;
                const std::string at = where + ": chain " + J.to_string() + " to " + Jp.to_string();
                guarded(rep, at, [&] {
                    const auto chain = saturated_chain(tau, J, Jp);
                    bool ok = chain.size() == static_cast<std::size_t>(Jp.size() - J.size() + 1) &&
                              chain.front() == J && chain.back() == Jp;
                    for (std::size_t i = 0; ok && i < chain.size(); ++i) {
                        ok = chain[i].size() == J.size() + static_cast<int>(i) &&
                             in_p_tau(tau, iota(tau, chain[i]));
                        if (ok && i > 0)
                            ok = chain[i - 1].subset_of(chain[i]);
                    }
                    rep.expect(ok, at + " is not saturated");
                });
            }
    });
    return rep;
}

CheckReport verify_base_change(const Params& params)
{
    CheckReport rep;
    for_each_type(params, [&](const TameType& tau) {
        const TameType big = bc_type(tau);
        const std::string where = type_label(tau);
        std::set<JSet> images;
        for (const auto& J : p_tau(tau)) {
            const JSet bj = bc_jset(tau, J);
            images.insert(bj);
            rep.expect(in_p_tau(big, bj),
                       where + ": BC(" + J.to_string() + ") = " + bj.to_string() + " not in P");
            if (!in_p_tau(big, bj))
                continue;
            rep.expect(bc_weight(params, jh_factor(tau, J)) == jh_factor(big, bj),
                       where + ": base change of the factor at " + J.to_string() + " differs");
        }
        rep.expect(images.size() == p_tau(tau).size(), where + ": index base change not injective");
    });
    return rep;
}

CheckReport verify_cokernel_lists(const Params& params)
{
    CheckReport rep;
    const int f = params.f();
    for_each_type(params, [&](const TameType& tau) {
        if (!has_base(tau))
            return;
        const std::string where = type_label(tau);
        const auto idx = gauge_indices(tau);
        for (const auto& J : idx)
            for (int j = 0; j < f; ++j) {
                const JSet Jj = J.with(j);
                if (J.contains(j) || !is_gauge_index(tau, Jj))
                    continue;
                for (const auto family : {LatticeFamily::Socle, LatticeFamily::Cosocle}) {
                    const auto up = cokernel_weights(tau, J, j, CokernelSide::Upper, family);
                    const auto lo = cokernel_weights(tau, J, j, CokernelSide::Lower, family);
                    std::set<JSet> up_set, lo_set;
                    for (const auto& e : up)
                        up_set.insert(e.J);
                    for (const auto& e : lo)
                        lo_set.insert(e.J);
                    const std::string at = where + " " + J.to_string() + "+" + std::to_string(j) +
                                           (family == LatticeFamily::Socle ? " socle" : " cosocle");
                    bool ok = up_set.size() + lo_set.size() == idx.size();
                    for (const auto& Jp : idx) {
                        // The gauge jump across the inclusion, from the closed forms.
                        const int jump = family == LatticeFamily::Socle
                                             ? eps_socle(tau, Jp, Jj) - eps_socle(tau, Jp, J)
                                             : eps_cosocle(tau, J, Jp) - eps_cosocle(tau, Jj, Jp);
                        ok = ok && (jump == 1 ? up_set.count(Jp) == 1 && lo_set.count(Jp) == 0
                                              : jump == 0 && lo_set.count(Jp) == 1 &&
                                                    up_set.count(Jp) == 0);
                        ok = ok && (Jp.contains(j) == (up_set.count(Jp) == 1));
                    }
                    for (const auto& e : up)
                        ok = ok && e.weight == jh_factor(tau, iota(tau, e.J));
                    for (const auto& e : lo)
                        ok = ok && e.weight == jh_factor(tau, iota(tau, e.J));
                    rep.expect(ok, at + ": cokernel lists do not split the index set by j");
                }
            }
    });
    return rep;
}

CheckReport verify_intervals(const Params& params)
{
    CheckReport rep;
    const int f = params.f();
    struct Entry {
        std::string label;
        std::vector<JSet> members;
        std::vector<Weight> weights;
        TameType tau;
    };
    std::vector<Entry> types;
    for_each_type(params, [&](const TameType& tau) {
        Entry e{type_label(tau), {}, {}, tau};
        for (const auto& x : jh_factors(tau)) {
            e.members.push_back(x.J);
            e.weights.push_back(x.weight);
        }
        types.push_back(std::move(e));
    });
    for (const auto& rho : all_generic_rhobars(params)) {
        const auto D = weight_set(rho);
        const std::string rlabel = rho.is_reducible() ? "red:" + std::to_string(rho.m1()) + "," +
                                                            std::to_string(rho.m2())
                                                      : "irr:" + std::to_string(rho.big_m());
        for (const auto& t : types) {
            std::vector<JSet> A;
            for (std::size_t i = 0; i < t.members.size(); ++i)
                if (std::binary_search(D.begin(), D.end(), t.weights[i]))
                    A.push_back(t.members[i]);
            const std::string at = rlabel + " with " + t.label;
            std::optional<WeightInterval> lib;
            try {
                lib = weight_interval(D, t.tau);
            } catch (const Error& e) {
                rep.expect(false, at + ": " + e.what());
                continue;
            }
            if (A.empty()) {
                rep.expect(!lib, at + ": interval reported for an empty modular set");
                continue;
            }
            JSet lo = JSet::full(f), hi = JSet::empty(f);
            for (const auto& J : A) {
                lo = lo & J;
                hi = hi | J;
            }
            std::vector<JSet> box;
            for (const auto& J : all_jsets(f))
                if (lo.subset_of(J) && J.subset_of(hi))
                    box.push_back(J);
            rep.expect(box == A, at + ": modular set is not an interval");
            bool inside = true;
            for (const auto& J : box)
                inside = inside && in_p_tau(t.tau, J);
            rep.expect(inside, at + ": interval leaves P_tau");
            rep.expect(lib && lib->j_min == lo && lib->j_max == hi,
                       at + ": library interval differs from the direct one");
        }
    }
    return rep;
}

namespace {

std::vector<Weight> meet(const TameType& tau, const std::vector<Weight>& D)
{
    std::set<Weight> jh;
    for (const auto& e : jh_factors(tau))
        jh.insert(e.weight);
    std::vector<Weight> r;
    for (const auto& w : D)
        if (jh.count(w))
            r.push_back(w);
    return r;
}

}  // namespace

CheckReport verify_type_searches(const Params& params)
{
    CheckReport rep;
    for (const auto& rho : all_generic_rhobars(params)) {
        const auto D = weight_set(rho);
        const std::string rlabel = rho.is_reducible() ? "red:" + std::to_string(rho.m1()) + "," +
                                                            std::to_string(rho.m2())
                                                      : "irr:" + std::to_string(rho.big_m());
        for (const auto& w : D)
            guarded(rep, rlabel + " isolating " + w.to_string(), [&] {
                const TameType tau = find_type_isolating(rho, w);
                rep.expect(meet(tau, D) == std::vector<Weight>{w},
                           rlabel + ": " + type_label(tau) + " does not isolate " + w.to_string());
                if (!rho.is_reducible())
                    rep.expect(tau.is_cuspidal(), rlabel + ": isolating type for " +
                                                      w.to_string() + " is not cuspidal");
            });
        guarded(rep, rlabel + " covering", [&] {
            const TameType tau = find_type_covering(rho);
            rep.expect(meet(tau, D) == D, rlabel + ": " + type_label(tau) + " does not cover");
        });
        for (std::size_t a = 0; a < D.size(); ++a)
            for (std::size_t b = a + 1; b < D.size(); ++b) {
                if (!ext_exists(params, D[a], D[b]))
                    continue;
                const std::string at = rlabel + " pair " + D[a].to_string() + "," + D[b].to_string();
                guarded(rep, at, [&] {
                    const TameType tau = find_type_for_pair(rho, D[a], D[b]);
                    rep.expect(meet(tau, D) == std::vector<Weight>{D[a], D[b]},
                               at + ": " + type_label(tau) + " meets the weight set wrongly");
                    rep.expect(tau.is_cuspidal() == rho.is_reducible(),
                               at + ": pair type " + type_label(tau) + " has the wrong kind");
                });
            }
    }
    return rep;
}

namespace {

std::vector<Rational> grid_values(int max_denominator)
{
    std::set<Rational> vals;
    for (int d = 1; d <= max_denominator; ++d)
        for (int k = 0; k <= d; ++k)
            vals.insert(Rational(k, d));
    return {vals.begin(), vals.end()};
}

void check_prediction(CheckReport& rep, const std::string& where, const DefSpaceData& data,
                      const Point& lambda)
{
    const TameType& tau = data.tau;
    const int f = tau.params().f();
    for (const auto& J : all_jsets(f)) {
        const Rational both = varpi_set_valuation(data, lambda, J, VarpiKind::Plain) +
                              varpi_set_valuation(data, lambda, J, VarpiKind::Primed);
        rep.expect(both == Rational(J.size()), where + ": val(varpi varpi') at " + J.to_string());
    }
    const Prediction pred = predict_lattice(data, lambda);
    if (const auto* marker = std::get_if<SocleLatticeMarker>(&pred)) {
        int regular = 0;
        for (const auto& e : jh_factors(tau))
            regular += is_regular_weight(tau.params(), e.weight) ? 1 : 0;
        rep.expect(regular == 1 && is_regular_weight(tau.params(), jh_factor(tau, marker->J)),
                   where + ": marker does not name the unique regular factor");
        return;
    }
    const GaugeVector& g = std::get<GaugeVector>(pred);
    rep.expect(is_valid_gauge(g), where + ": predicted gauge is invalid");
    std::vector<GaugeTerm> shifted;
    for (const auto& J : gauge_indices(tau))
        shifted.push_back({varpi_set_valuation(data, lambda, J) + Rational(7, 3), J});
    rep.expect(gauge_sum(tau, shifted).values == g.values,
               where + ": prediction changes under a homothety");
    for (const auto& J : gauge_indices(tau)) {
        rep.expect(g.values.at(J) == varpi_set_valuation(data, lambda, J),
                   where + ": gauge at " + J.to_string() + " differs from v_J");
        rep.absorb(annihilation_identity_check(data, lambda, J));
    }
}

}  // namespace

CheckReport verify_predictor(const Params& params, int max_denominator)
{
    CheckReport rep;
    const int f = params.f();
    const auto grid = grid_values(max_denominator);
    std::set<std::pair<int, std::int64_t>> seen;
    for_each_type(params, [&](const TameType& tau) {
        // The prediction depends on the type only through its kind and c.
        if (!seen.insert({tau.is_cuspidal() ? 1 : 0, tau.c_value()}).second)
            return;
        const std::string where = type_label(tau);
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
                const DefSpaceData data = DefSpaceData::make(tau, lo, hi);
                const int n = data.delta().size();
                std::vector<std::size_t> pos(n, 0);
                while (true) {
                    Point lambda;
                    for (int i = 0; i < n; ++i)
                        lambda.x_val.push_back(grid[pos[i]]);
                    guarded(rep, where, [&] {
                        check_prediction(rep,
                                         where + " [" + lo.to_string() + "," + hi.to_string() + "]",
                                         data, lambda);
                    });
                    int k = 0;
                    while (k < n && ++pos[k] == grid.size())
                        pos[k++] = 0;
                    if (k == n)
                        break;
                }
            }
    });
    return rep;
}

CheckReport verify_ideals(int delta_size)
{
    CheckReport rep;
    const RingSpec ring = RingSpec::full(delta_size);
    const auto W = ring.w_elements();
    for (const auto& J1 : W)
        for (const auto& J2 : W)
            if (J1.subset_of(J2)) {
                CheckReport r = check_lemma_faces(ring, J1, J2);
                r.cases = 1;
                rep.absorb(r);
            }
    const auto capped = capped_intervals(ring);
    for (std::size_t a = 0; a < capped.size(); ++a)
        for (std::size_t b = 0; b < capped.size(); ++b) {
            if (family_cap(capped[a]) != family_cap(capped[b]))
                continue;
            CheckReport r = check_lemma_ideals(ring, capped[a], capped[b]);
            r.cases = 1;
            rep.absorb(r);
        }
    for (const auto& fam : capped) {
        const auto cyc = cyclicity_induction_check(ring, fam);
        CheckReport r = cyc.report;
        r.cases = 1;
        rep.absorb(r);
        rep.expect(cyc.annihilator == ideal_of_family(ring, fam),
                   family_to_string(fam) + ": annihilator differs from the family ideal");
    }
    return rep;
}

CheckReport verify_p3_genericity(int max_f)
{
    CheckReport rep;
    for (int f = 1; f <= max_f; ++f) {
        const Params params = Params::make(3, f, true);
        const std::int64_t e = params.e();
        const std::int64_t q = params.q();
        for (std::int64_t m1 = 0; m1 < e; ++m1)
            for (std::int64_t m2 = 0; m2 < e; ++m2)
                rep.expect(!is_generic(make_reducible(params, m1, m2)),
                           "p=3 f=" + std::to_string(f) + ": red:" + std::to_string(m1) + "," +
                               std::to_string(m2) + " is generic");
        for (std::int64_t M = 0; M < q * q - 1; ++M) {
            if (M % (q + 1) == 0)
                continue;
            const auto w = generic_witness(make_irreducible(params, M));
            ++rep.cases;
            if (!w)
                continue;
            bool ok = w->r.size() == static_cast<std::size_t>(f) && w->r[0] == 1;
            for (int j = 1; ok && j < f; ++j)
                ok = w->r[j] == 0;
            rep.expect(ok, "p=3 f=" + std::to_string(f) + ": irr:" + std::to_string(M) +
                               " has a witness other than r = (1, 0, ...)");
        }
    }
    return rep;
}

std::vector<std::string> suite_names()
{
    return {"jh",        "filtration", "gauge", "cokernel", "dual",      "chains", "bc",
            "cokernel-lists", "ideals", "intervals", "types", "predictor", "p3"};
}

SuiteOutcome run_suite(const std::string& suite, int p, int f, const std::optional<TameType>& tau,
                       int precision)
{
    const auto start = std::chrono::steady_clock::now();
    SuiteOutcome out{suite, p, f, {}, 0};
    using EngineCheck = CheckReport (*)(const TameType&, int);
    const std::map<std::string, EngineCheck> engine{{"jh", verify_jh},
                                                    {"filtration", verify_filtration},
                                                    {"gauge", verify_gauges},
                                                    {"cokernel", verify_cokernels},
                                                    {"dual", verify_dual_embedding}};
    if (auto it = engine.find(suite); it != engine.end()) {
        if (tau) {
            out.report = it->second(*tau, precision);
        } else {
            const Params params = Params::make(p, f);
            const std::int64_t e = params.e();
            for (std::int64_t a = 0; a < e; ++a)
                for (std::int64_t b = 0; b < e; ++b)
                    if (a != b)
                        out.report.absorb(it->second(make_ps_type(params, a, b), precision));
        }
    } else if (suite == "chains") {
        out.report = verify_chains(Params::make(p, f));
    } else if (suite == "bc") {
        out.report = verify_base_change(Params::make(p, f));
    } else if (suite == "cokernel-lists") {
        out.report = verify_cokernel_lists(Params::make(p, f));
    } else if (suite == "ideals") {
        out.report = verify_ideals(f);
    } else if (suite == "intervals") {
        out.report = verify_intervals(Params::make(p, f));
    } else if (suite == "types") {
        out.report = verify_type_searches(Params::make(p, f));
    } else if (suite == "predictor") {
        out.report = verify_predictor(Params::make(p, f));
    } else if (suite == "p3") {
        out.report = verify_p3_genericity(f);
    } else {
        throw ParameterError("unknown suite " + suite);
    }
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace gl2
