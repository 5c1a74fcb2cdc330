#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/rational.hpp>

#include "gl2/combinatorics.hpp"
#include "gl2/tame_type.hpp"

namespace gl2 {

using Rational = boost::rational<std::int64_t>;

// Valuations of a lattice against the cosocle lattices, keyed by J with iota(J) in P_tau.
// Normalized so that the entry at the empty set is zero.
struct GaugeVector {
    TameType tau;
    std::map<JSet, Rational> values;
};

// All J with iota(J) in P_tau, ascending.
std::vector<JSet> gauge_indices(const TameType& tau);
bool is_gauge_index(const TameType& tau, const JSet& J);

// epsilon at iota(J') of the cosocle lattice at iota(J): |J' \ J|.
int eps_cosocle(const TameType& tau, const JSet& J, const JSet& J_prime);
// epsilon at iota(J) of the socle lattice at iota(J'): |J & J'|.
int eps_socle(const TameType& tau, const JSet& J, const JSet& J_prime);

struct GaugeTerm {
    Rational valuation;
    JSet J;
};

// Gauge of the lattice sum of p^{v} times the cosocle lattice at iota(J), over the terms.
GaugeVector gauge_sum(const TameType& tau, const std::vector<GaugeTerm>& terms);
// Gauge of the socle lattice at iota(J'), via its decomposition into cosocle lattices.
GaugeVector socle_lattice_gauge(const TameType& tau, const JSet& J_prime);

// Normalization at the empty set and values[J'] <= values[J] + |J' \ J|.
bool is_valid_gauge(const GaugeVector& g);
// Least exponent n with p^n times the socle lattice at iota(empty) inside the cosocle
// lattice at iota(empty), computed from the two gauges.
Rational dual_embedding_exponent(const TameType& tau);

enum class LatticeFamily { Socle, Cosocle };
enum class CokernelSide { Upper, Lower };

struct IndexedWeight {
    JSet J;
    Weight weight;
};

// JH factors of the cokernel of an inclusion between consecutive lattices of a family.
// Socle family:   upper = socle(J + j) in socle(J), lower = p socle(J) in socle(J + j).
// Cosocle family: upper = cosocle(J) in cosocle(J + j), lower = p cosocle(J + j) in cosocle(J).
std::vector<IndexedWeight> cokernel_weights(const TameType& tau, const JSet& J, int j,
                                            CokernelSide side,
                                            LatticeFamily family = LatticeFamily::Socle);

// Saturated chain from J to J' staying inside the gauge indices.
std::vector<JSet> saturated_chain(const TameType& tau, const JSet& J, const JSet& J_prime);

enum class FiltrationDirection { Cosocle, Socle };

struct FiltrationReport {
    FiltrationDirection direction;
    std::vector<std::vector<IndexedWeight>> layers;
    // Pairs in consecutive layers differing in one index; each is a nonsplit extension.
    std::vector<std::pair<JSet, JSet>> nonsplit_edges;
};

// Layer i holds the J' in P_tau with |J xor J'| = i.
FiltrationReport predicted_filtration(const TameType& tau, const JSet& J,
                                      FiltrationDirection direction);

}  // namespace gl2
