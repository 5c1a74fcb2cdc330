#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gl2/combinatorics.hpp"
#include "gl2/report.hpp"

namespace gl2 {

// Special fibre F[X_j, Y_j : j in delta]/(X_j Y_j) with delta = j_max' \ j_min'.
struct RingSpec {
    JSet delta;
    JSet j_min_prime;
    JSet j_max_prime;

    static RingSpec make(const JSet& j_min_prime, const JSet& j_max_prime);
    // The ring with j_min' empty and j_max' = {0, ..., n-1}.
    static RingSpec full(int n);
    int width() const { return delta.width; }
    bool in_w(const JSet& J) const;
    // W = {J : j_min' <= J <= j_max'}, ascending.
    std::vector<JSet> w_elements() const;
    bool operator==(const RingSpec&) const = default;
};

// Monomial in the X_j, Y_j; a product containing both X_j and Y_j is the explicit zero.
class Monomial {
public:
    static Monomial one(int width);
    static Monomial x(int width, int j, int exponent = 1);
    static Monomial y(int width, int j, int exponent = 1);

    bool is_zero() const { return zero_; }
    bool is_one() const;
    int width() const { return static_cast<int>(xs_.size()); }
    int x_exp(int j) const { return xs_[j]; }
    int y_exp(int j) const { return ys_[j]; }
    int degree() const;

    Monomial operator*(const Monomial& o) const;
    // Least common multiple in the polynomial ring, zero if it mixes axes at some j.
    Monomial lcm(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    std::string to_string() const;

    bool operator==(const Monomial&) const = default;
    // Total degree first, then exponents.
    std::strong_ordering operator<=>(const Monomial& o) const;

private:
    explicit Monomial(int width) : xs_(width, 0), ys_(width, 0) {}
    void normalize();
    std::vector<int> xs_;
    std::vector<int> ys_;
    bool zero_ = false;
};

// Monomial ideal of the special fibre, stored as its sorted antichain of minimal generators.
class MonomialIdeal {
public:
    static MonomialIdeal zero(const RingSpec& ring);
    static MonomialIdeal unit(const RingSpec& ring);
    static MonomialIdeal generated(const RingSpec& ring, std::vector<Monomial> gens);

    const RingSpec& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_unit() const;
    bool is_zero() const { return gens_.empty(); }
    // Every generator squarefree.
    bool is_radical_generated() const;
    std::string to_string() const;

    bool operator==(const MonomialIdeal& o) const { return ring_ == o.ring_ && gens_ == o.gens_; }

private:
    explicit MonomialIdeal(RingSpec ring) : ring_(ring) {}
    RingSpec ring_;
    std::vector<Monomial> gens_;
};

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// (I : m) = {n : n m in I} in the special fibre.
MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Monomial& m);
bool ideal_contains(const MonomialIdeal& ideal, const Monomial& m);
bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b);

using Family = std::vector<JSet>;

MonomialIdeal component_ideal(const RingSpec& ring, const JSet& J);
MonomialIdeal ideal_of_family(const RingSpec& ring, const Family& family);
// Ideal of the face {J : J1 <= J <= J2} from its direct description.
MonomialIdeal face_ideal(const RingSpec& ring, const JSet& J1, const JSet& J2);

// Family helpers; families are kept sorted and duplicate-free.
Family normalize_family(Family family);
Family family_intersection(const Family& a, const Family& b);
Family face(const RingSpec& ring, const JSet& J1, const JSet& J2);
bool is_interval(const Family& family);
bool is_capped(const Family& family);
JSet family_cap(const Family& family);
std::vector<JSet> minimal_elements(const Family& family);
std::vector<JSet> maximal_elements(const Family& family);
std::string family_to_string(const Family& family);

CheckReport check_lemma_faces(const RingSpec& ring, const JSet& J1, const JSet& J2);
CheckReport check_lemma_ideals(const RingSpec& ring, const Family& a, const Family& b);

struct CyclicityReport {
    CheckReport report;
    MonomialIdeal annihilator;
    int steps = 0;
};
CyclicityReport cyclicity_induction_check(const RingSpec& ring, const Family& family);

// Every capped interval inside W.
std::vector<Family> capped_intervals(const RingSpec& ring);

// Display form with primed variables labelled by position in delta: X'_{j_1}, Y'_{j_2}, ...
// Generators sorted by degree, then X before Y, then by label; "(1)" is the unit ideal.
std::string primed_string(const MonomialIdeal& ideal);

// The three family pairs with |delta| = 2 where the sum of ideals misses the ideal of the
// intersection unless the caps agree.
struct FamilyPairComputation {
    Family first;
    Family second;
    MonomialIdeal ideal_first;
    MonomialIdeal ideal_second;
    MonomialIdeal sum;
    MonomialIdeal ideal_of_intersection;
};
std::vector<FamilyPairComputation> uncapped_sum_examples(const RingSpec& ring);

}  // namespace gl2
