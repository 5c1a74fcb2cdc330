#pragma once

#include <variant>
#include <vector>

#include "gl2/gauge.hpp"
#include "gl2/report.hpp"
#include "gl2/rhobar.hpp"
#include "gl2/tame_type.hpp"

namespace gl2 {

// Deformation-space data attached to a type and a modular interval.
struct DefSpaceData {
    TameType tau;
    JSet j_min;
    JSet j_max;
    JSet j_base;
    JSet j_min_prime;
    JSet j_max_prime;

    static DefSpaceData make(const TameType& tau, const JSet& j_min, const JSet& j_max);
    static DefSpaceData make(const TameType& tau, const WeightInterval& interval);
    JSet delta() const { return j_max_prime.minus(j_min_prime); }
};

// The variant of j_min', j_max' relative to an arbitrary subset J in place of J_base.
std::pair<JSet, JSet> relative_bounds(const JSet& J, const JSet& j_min, const JSet& j_max);

// Valuations of lambda(X_j) for j in delta (ascending j); lambda(Y_j) has valuation 1 - x.
struct Point {
    std::vector<Rational> x_val;
};

enum class VarpiKind { Plain, Primed };

Rational varpi_valuation(const DefSpaceData& data, const Point& lambda, int j,
                         VarpiKind kind = VarpiKind::Plain);
// Sum over j in J.
Rational varpi_set_valuation(const DefSpaceData& data, const Point& lambda, const JSet& J,
                             VarpiKind kind = VarpiKind::Plain);

// Irregular cuspidal types predict the socle lattice of their unique regular factor.
struct SocleLatticeMarker {
    JSet J;
};

using Prediction = std::variant<GaugeVector, SocleLatticeMarker>;

Prediction predict_lattice(const DefSpaceData& data, const Point& lambda);

// The gauge at J equals v_J whenever v_J <= v_J' + |J \ J'| for all J'.
CheckReport annihilation_identity_check(const DefSpaceData& data, const Point& lambda,
                                        const JSet& J);

}  // namespace gl2
