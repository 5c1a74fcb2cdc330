#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "gl2/galois_ring.hpp"
#include "gl2/gauge.hpp"
#include "gl2/gmodule.hpp"
#include "gl2/tame_type.hpp"

namespace gl2 {

// Monomial matrix over the Galois ring: (A v)[r] = scale[r] * v[perm[r]].
struct MonomialAction {
    std::vector<int> perm;
    std::vector<GaloisRing::Elem> scale;
};

using RVec = std::vector<GaloisRing::Elem>;

// The integral principal series module: functions on the q + 1 cosets of the Borel,
// with values in W(F_{p^m})/p^P and right translation twisted by the Teichmuller character.
class InducedAmbient {
public:
    // precision 0 selects f + 3; the ring is kept to one extra digit.
    static std::shared_ptr<const InducedAmbient> make(const TameType& tau, int precision = 0);

    const TameType& tau() const { return tau_; }
    const ContextPtr& ctx() const { return ctx_; }
    const RingPtr& ring() const { return ring_; }
    int dim() const { return dim_; }
    // Largest thickness (least t with p^t L0 in L) a lattice may reach.
    int max_thickness() const { return ring_->precision() - 1; }
    MonomialAction action(const Mat2& g) const;
    const std::array<MonomialAction, 3>& gens() const { return gens_; }
    RVec apply(const MonomialAction& a, const RVec& v) const;
    // Coset index of r g and the Borel element: r_infinity = 1, r_x = [[0, -1], [1, x]].
    int coset_index(const Mat2& h, FiniteField::Elem* a_out, FiniteField::Elem* d_out) const;

private:
    InducedAmbient(const TameType& tau, ContextPtr ctx, RingPtr ring);
    TameType tau_;
    ContextPtr ctx_;
    RingPtr ring_;
    int dim_;
    std::vector<Mat2> reps_;
    std::array<MonomialAction, 3> gens_;
};

using AmbientPtr = std::shared_ptr<const InducedAmbient>;

// A lattice L with p^t L0 in L in L0, stored by its Howell basis modulo p^P.
class Lattice {
public:
    static Lattice full(const AmbientPtr& ambient);
    static Lattice from_generators(const AmbientPtr& ambient, std::vector<RVec> gens);

    const AmbientPtr& ambient() const { return ambient_; }
    const std::vector<RVec>& rows() const { return rows_; }
    const std::vector<int>& pivot_columns() const { return pivot_cols_; }
    const std::vector<int>& pivot_exponents() const { return pivot_exps_; }

    bool contains(RVec v) const;
    bool contains(const Lattice& o) const;
    // Equality of spans.
    bool operator==(const Lattice& o) const;

    int thickness() const;
    // In p L0.
    bool divisible_by_p() const;
    Lattice times_p(int k = 1) const;
    Lattice divided_by_p() const;
    // The homothetic lattice in L0 but not in p L0.
    Lattice primitive() const;

    // Coordinates modulo p in the Howell basis, for v in L.
    std::vector<FiniteField::Elem> coordinates(RVec v) const;
    GModule reduction() const;
    // Image of a sublattice in L/pL, as a column basis.
    FMatrix image_in_reduction(const Lattice& sub) const;
    // pL plus lifts of the subspace U of L/pL given by columns.
    Lattice preimage(const FMatrix& U) const;

private:
    AmbientPtr ambient_;
    std::vector<RVec> rows_;
    std::vector<int> pivot_cols_;
    std::vector<int> pivot_exps_;
};

// Canonical Howell basis of the span of gens over W(F_{p^m})/p^P; rows sorted by pivot.
std::vector<RVec> howell_form(const GaloisRing& R, int n, std::vector<RVec> gens);

Lattice induced_lattice(const TameType& tau, int precision = 0);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
// Least n >= 0 with p^n a in b.
int containment_exponent(const Lattice& a, const Lattice& b);
bool homothetic(const Lattice& a, const Lattice& b);

// The lattice inside L, not inside pL, whose reduction has simple cosocle w. With order
// nonempty, one unwanted constituent is removed per step, first in that order.
Lattice sublattice_with_cosocle(const Lattice& L, const Weight& w,
                                const std::vector<Weight>& order = {});
// The same with simple socle w.
Lattice sublattice_with_socle(const Lattice& L, const Weight& w,
                              const std::vector<Weight>& order = {});

// values[J] = least n with p^n family[J] in L, minus the value at the empty set.
GaugeVector measure_gauge(const TameType& tau, const std::map<JSet, Lattice>& family,
                          const Lattice& L);

struct CokernelSplit {
    std::vector<Weight> upper;  // JH factors of big / small
    std::vector<Weight> lower;  // JH factors of small / p big
};
// Requires p big in small in big.
CokernelSplit cokernel_split(const Lattice& big, const Lattice& small);

// The cosocle (or socle) lattices indexed by iota(J), primitive in L0.
std::map<JSet, Lattice> cosocle_lattices(const Lattice& L0);
std::map<JSet, Lattice> socle_lattices(const Lattice& L0);

}  // namespace gl2
