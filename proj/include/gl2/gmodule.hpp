#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gl2/combinatorics.hpp"
#include "gl2/field.hpp"
#include "gl2/fmatrix.hpp"

namespace gl2 {

// 2x2 matrix [[a, b], [c, d]] over the coefficient field.
struct Mat2 {
    FiniteField::Elem a = 1;
    FiniteField::Elem b = 0;
    FiniteField::Elem c = 0;
    FiniteField::Elem d = 1;
    bool operator==(const Mat2&) const = default;
};

struct SimpleData;

// GL2(F_q) inside GL2(F_{p^m}) with the generators diag(gamma, 1), u(1) and the Weyl element.
class GroupContext : public std::enable_shared_from_this<GroupContext> {
public:
    // field_degree 0 selects 2f; it must be a multiple of f.
    static std::shared_ptr<const GroupContext> make(const Params& params, int field_degree = 0);

    const Params& params() const { return params_; }
    const FieldPtr& field() const { return field_; }
    // Generator of F_q^x inside the coefficient field.
    FiniteField::Elem gamma() const { return gamma_; }
    FiniteField::Elem gamma_power(std::int64_t k) const;
    // 0 followed by gamma^0, ..., gamma^(q-2).
    const std::vector<FiniteField::Elem>& fq_elements() const { return fq_elements_; }
    // Position in fq_elements(), or -1 outside F_q.
    int fq_index(FiniteField::Elem a) const { return fq_index_[a]; }
    // k in [0, q-2] with gamma^k = a, for a in F_q^x.
    int log_gamma(FiniteField::Elem a) const;

    std::array<Mat2, 3> generators() const;
    Mat2 mul(const Mat2& x, const Mat2& y) const;
    Mat2 inverse(const Mat2& x) const;
    FiniteField::Elem det(const Mat2& x) const;

    // Spinning data of the simple module, cached per weight.
    const SimpleData& simple_data(const Weight& w) const;

private:
    GroupContext(const Params& params, FieldPtr field);
    Params params_;
    FieldPtr field_;
    FiniteField::Elem gamma_;
    std::vector<FiniteField::Elem> fq_elements_;
    std::vector<int> fq_index_;
    mutable std::mutex mu_;
    mutable std::map<Weight, std::unique_ptr<SimpleData>> simple_cache_;
};

using ContextPtr = std::shared_ptr<const GroupContext>;

// Representation over the coefficient field, by the images of the three generators.
struct GModule {
    ContextPtr ctx;
    int dim = 0;
    std::array<FMatrix, 3> gens;

    const FiniteField& field() const { return *ctx->field(); }
};

FMatrix simple_action(const GroupContext& ctx, const Weight& w, const Mat2& g);
GModule simple_module(const ContextPtr& ctx, const Weight& w);
// Matrix of an arbitrary group element given as a word in the generators (indices 0..2).
FMatrix word_action(const GModule& M, const std::vector<int>& word);

struct SimpleData {
    GModule module;
    // Basis vector k >= 1 is generator gen[k] applied to basis vector parent[k].
    std::vector<int> parent;
    std::vector<int> gen;
    FMatrix basis_inverse;
    struct Relation {
        int k;
        int g;
        std::vector<FiniteField::Elem> coeffs;  // g * b_k in the spun basis
    };
    std::vector<Relation> relations;
};

// The contragredient weight.
Weight dual_weight(const Params& params, const Weight& w);
GModule dual_module(const GModule& M);
GModule direct_sum(const GModule& A, const GModule& B);
bool is_invariant_subspace(const GModule& M, const FMatrix& basis);
// Action on the span of the columns of basis, which must be invariant.
GModule submodule(const GModule& M, const FMatrix& basis);
GModule quotient_module(const GModule& M, const FMatrix& basis);
// Spot check of group relations: g1^(q-1) = g2^p = g3^2 = 1, the torus g1, g3 g1 g3 commutes
// and the unipotents g2, g1 g2 g1^-1 commute.
bool satisfies_relations(const GModule& M);

// Basis of Hom_G(A, B) from the stacked commutation system; each map is dim B x dim A.
std::vector<FMatrix> hom_space(const GModule& A, const GModule& B);
// Basis of Hom_G(simple(w), M) via spinning a highest weight vector.
std::vector<FMatrix> hom_from_simple(const Weight& w, const GModule& M);

// Weights whose highest weight character occurs on the U-invariants of M, with the
// dimension of that eigenspace (an upper bound for the socle multiplicity).
std::vector<std::pair<Weight, int>> socle_candidates(const GModule& M);

struct IsotypicPart {
    Weight weight;
    int multiplicity = 0;
    FMatrix span;  // for the socle: a subspace of M; for the cosocle: functionals on M
};

std::vector<IsotypicPart> socle_parts(const GModule& M);
// Cosocle constituents; span holds the functionals of M killing the kernel of M onto that
// isotypic quotient.
std::vector<IsotypicPart> cosocle_parts(const GModule& M);
FMatrix socle(const GModule& M);
FMatrix radical(const GModule& M);
// Kernel of M onto the sum of the given cosocle parts.
FMatrix cosocle_kernel(const GModule& M, const std::vector<IsotypicPart>& parts);

struct LoewySeries {
    std::vector<std::vector<Weight>> layers;
    // Socle series: chain[i] = soc^(i+1). Radical series: chain[i] = rad^i, chain[0] = M.
    std::vector<FMatrix> chain;
};
LoewySeries socle_series(const GModule& M);
LoewySeries radical_series(const GModule& M);
std::vector<Weight> jh_multiset(const GModule& M);
bool is_semisimple(const GModule& M);

// Inside Q, the smallest submodule with cosocle top, cut down to the extension of top by
// bottom. Empty when no such nonsplit two-factor subquotient exists.
std::optional<GModule> extension_subquotient(const GModule& Q, const Weight& top,
                                             const Weight& bottom);

}  // namespace gl2
