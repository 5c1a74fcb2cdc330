#include "gl2/lattice.hpp"

#include <algorithm>

#include "gl2/errors.hpp"

namespace gl2 {

namespace {

bool is_zero_vec(const GaloisRing& R, const RVec& v)
{
    for (const auto& x : v)
        if (!R.is_zero(x))
            return false;
    return true;
}

// v -= a * r
void sub_multiple(const GaloisRing& R, RVec& v, const GaloisRing::Elem& a, const RVec& r)
{
    if (R.is_zero(a))
        return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!R.is_zero(r[i]))
            v[i] = R.sub(v[i], R.mul(a, r[i]));
}

RVec scaled(const GaloisRing& R, const GaloisRing::Elem& a, const RVec& r)
{
    RVec out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        out[i] = R.mul(a, r[i]);
    return out;
}

RVec shifted_up(const GaloisRing& R, const RVec& r, int k)
{
    RVec out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        out[i] = R.shift_up(r[i], k);
    return out;
}

int pivot_of(const GaloisRing& R, const RVec& r)
{
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!R.is_zero(r[i]))
            return static_cast<int>(i);
    return -1;
}

}  // namespace

std::vector<RVec> howell_form(const GaloisRing& R, int n, std::vector<RVec> gens)
{
    const int P = R.precision();
    std::vector<RVec> work;
    for (auto& g : gens) {
        if (static_cast<int>(g.size()) != n)
            throw ParameterError("generator length differs from the module rank");
        if (!is_zero_vec(R, g))
            work.push_back(std::move(g));
    }
    std::vector<RVec> out;
    for (int col = 0; col < n && !work.empty(); ++col) {
        int best = -1;
        int best_v = P;
        for (std::size_t i = 0; i < work.size(); ++i) {
            const int v = R.valuation(work[i][col]);
            if (v < best_v) {
                best_v = v;
                best = static_cast<int>(i);
            }
        }
        if (best < 0)
            continue;
        RVec r = std::move(work[best]);
        work.erase(work.begin() + best);
        const int k = best_v;
        r = scaled(R, R.unit_inverse(R.shift_down(r[col], k)), r);
        for (auto& s : work)
            if (!R.is_zero(s[col]))
                sub_multiple(R, s, R.shift_down(s[col], k), r);
        if (k > 0) {
            RVec t = shifted_up(R, r, P - k);
            if (!is_zero_vec(R, t))
                work.push_back(std::move(t));
        }
        work.erase(std::remove_if(work.begin(), work.end(),
                                  [&](const RVec& v) { return is_zero_vec(R, v); }),
                   work.end());
        out.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int c = pivot_of(R, out[i]);
        const int k = R.valuation(out[i][c]);
        for (std::size_t j = 0; j < i; ++j) {
            auto [quo, rem] = R.divmod_p_power(out[j][c], k);
            sub_multiple(R, out[j], quo, out[i]);
        }
    }
    return out;
}

InducedAmbient::InducedAmbient(const TameType& tau, ContextPtr ctx, RingPtr ring)
    : tau_(tau), ctx_(std::move(ctx)), ring_(std::move(ring))
{
    const FiniteField& F = *ctx_->field();
    dim_ = static_cast<int>(tau_.params().q()) + 1;
    reps_.push_back(Mat2{});
    for (auto x : ctx_->fq_elements())
        reps_.push_back(Mat2{0, F.neg(1), 1, x});
    const auto g = ctx_->generators();
    for (int i = 0; i < 3; ++i)
        gens_[i] = action(g[i]);
}

std::shared_ptr<const InducedAmbient> InducedAmbient::make(const TameType& tau, int precision)
{
    if (!tau.is_principal_series())
        throw UnsupportedError("integral models exist here only for principal series types");
    const int N = precision == 0 ? tau.params().f() + 3 : precision;
    if (N < 1)
        throw ParameterError("precision must be positive");
    auto ctx = GroupContext::make(tau.params());
    auto ring = GaloisRing::make(ctx->field(), N + 1);
    return std::shared_ptr<const InducedAmbient>(new InducedAmbient(tau, ctx, ring));
}

int InducedAmbient::coset_index(const Mat2& h, FiniteField::Elem* a_out,
                                FiniteField::Elem* d_out) const
{
    const FiniteField& F = *ctx_->field();
    if (h.c == 0) {
        *a_out = h.a;
        *d_out = h.d;
        return 0;
    }
    const auto x = F.div(h.d, h.c);
    *a_out = F.div(ctx_->det(h), h.c);
    *d_out = h.c;
    const int idx = ctx_->fq_index(x);
    if (idx < 0)
        throw RangeError("group element outside GL2(F_q)");
    return 1 + idx;
}

MonomialAction InducedAmbient::action(const Mat2& g) const
{
    const FiniteField& F = *ctx_->field();
    MonomialAction act;
    act.perm.resize(dim_);
    act.scale.resize(dim_);
    for (int i = 0; i < dim_; ++i) {
        const Mat2 h = ctx_->mul(reps_[i], g);
        FiniteField::Elem a = 0;
        FiniteField::Elem d = 0;
        act.perm[i] = coset_index(h, &a, &d);
        const std::int64_t expo = static_cast<std::int64_t>(F.log(a)) * tau_.a_eta_prime() +
                                  static_cast<std::int64_t>(F.log(d)) * tau_.a_eta();
        act.scale[i] = ring_->teichmuller_power(expo);
    }
    return act;
}

RVec InducedAmbient::apply(const MonomialAction& a, const RVec& v) const
{
    RVec out(dim_);
    for (int r = 0; r < dim_; ++r)
        out[r] = ring_->mul(a.scale[r], v[a.perm[r]]);
    return out;
}

Lattice Lattice::full(const AmbientPtr& ambient)
{
    std::vector<RVec> gens;
    const int n = ambient->dim();
    for (int i = 0; i < n; ++i) {
        RVec e(n);
        e[i] = ambient->ring()->one();
        gens.push_back(e);
    }
    return from_generators(ambient, std::move(gens));
}

Lattice Lattice::from_generators(const AmbientPtr& ambient, std::vector<RVec> gens)
{
    const GaloisRing& R = *ambient->ring();
    Lattice L;
    L.ambient_ = ambient;
    L.rows_ = howell_form(R, ambient->dim(), std::move(gens));
    for (const auto& r : L.rows_) {
        const int c = pivot_of(R, r);
        L.pivot_cols_.push_back(c);
        L.pivot_exps_.push_back(R.valuation(r[c]));
    }
    return L;
}

bool Lattice::contains(RVec v) const
{
    const GaloisRing& R = *ambient_->ring();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const int c = pivot_cols_[i];
        const int k = pivot_exps_[i];
        if (R.is_zero(v[c]))
            continue;
        if (R.valuation(v[c]) < k)
            return false;
        sub_multiple(R, v, R.shift_down(v[c], k), rows_[i]);
    }
    return is_zero_vec(R, v);
}

bool Lattice::contains(const Lattice& o) const
{
    if (o.ambient_ != ambient_)
        throw ParameterError("lattices live in different ambient modules");
    for (const auto& r : o.rows_)
        if (!contains(r))
            return false;
    return true;
}

bool Lattice::operator==(const Lattice& o) const
{
    return contains(o) && o.contains(*this);
}

int Lattice::thickness() const
{
    const GaloisRing& R = *ambient_->ring();
    const int n = ambient_->dim();
    const int P = R.precision();
    if (static_cast<int>(rows_.size()) < n)
        return P;
    int t = *std::max_element(pivot_exps_.begin(), pivot_exps_.end());
    for (; t < P; ++t) {
        bool all = true;
        for (int i = 0; i < n && all; ++i) {
            RVec e(n);
            e[i] = R.shift_up(R.one(), t);
            all = contains(e);
        }
        if (all)
            return t;
    }
    return P;
}

bool Lattice::divisible_by_p() const
{
    const GaloisRing& R = *ambient_->ring();
    for (const auto& r : rows_)
        for (const auto& x : r)
            if (R.valuation(x) < 1)
                return false;
    return true;
}

Lattice Lattice::times_p(int k) const
{
    if (k < 0)
        throw ParameterError("negative scaling exponent");
    const GaloisRing& R = *ambient_->ring();
    if (thickness() + k > R.precision())
        throw PrecisionError("scaling leaves the precision window; raise the precision");
    std::vector<RVec> gens;
    for (const auto& r : rows_)
        gens.push_back(shifted_up(R, r, k));
    return from_generators(ambient_, std::move(gens));
}

Lattice Lattice::divided_by_p() const
{
    if (!divisible_by_p())
        throw PreconditionError("lattice is not divisible by p");
    const GaloisRing& R = *ambient_->ring();
    const int n = ambient_->dim();
    std::vector<RVec> gens;
    for (const auto& r : rows_) {
        RVec v(n);
        for (int i = 0; i < n; ++i)
            v[i] = R.shift_down(r[i], 1);
        gens.push_back(v);
    }
    for (int i = 0; i < n; ++i) {
        RVec e(n);
        e[i] = R.shift_up(R.one(), R.precision() - 1);
        gens.push_back(e);
    }
    return from_generators(ambient_, std::move(gens));
}

Lattice Lattice::primitive() const
{
    Lattice X = *this;
    for (int guard = 0; X.divisible_by_p(); ++guard) {
        if (guard > ambient_->ring()->precision())
            throw PrecisionError("lattice vanishes modulo the precision");
        X = X.divided_by_p();
    }
    return X;
}

std::vector<FiniteField::Elem> Lattice::coordinates(RVec v) const
{
    const GaloisRing& R = *ambient_->ring();
    std::vector<FiniteField::Elem> out(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const int c = pivot_cols_[i];
        const int k = pivot_exps_[i];
        if (R.is_zero(v[c]))
            continue;
        if (R.valuation(v[c]) < k)
            throw PreconditionError("vector outside the lattice");
        const auto a = R.shift_down(v[c], k);
        out[i] = R.reduce(a);
        sub_multiple(R, v, a, rows_[i]);
    }
    if (!is_zero_vec(R, v))
        throw PreconditionError("vector outside the lattice");
    return out;
}

GModule Lattice::reduction() const
{
    const int n = ambient_->dim();
    if (static_cast<int>(rows_.size()) != n || thickness() >= ambient_->ring()->precision())
        throw PrecisionError("lattice too thick to reduce at this precision");
    GModule M;
    M.ctx = ambient_->ctx();
    M.dim = n;
    for (int g = 0; g < 3; ++g) {
        FMatrix A(n, n);
        for (int i = 0; i < n; ++i) {
            const auto col = coordinates(ambient_->apply(ambient_->gens()[g], rows_[i]));
            for (int r = 0; r < n; ++r)
                A.at(r, i) = col[r];
        }
        M.gens[g] = A;
    }
    return M;
}

FMatrix Lattice::image_in_reduction(const Lattice& sub) const
{
    const int n = static_cast<int>(rows_.size());
    FMatrix A(n, static_cast<int>(sub.rows_.size()));
    for (std::size_t j = 0; j < sub.rows_.size(); ++j) {
        const auto col = coordinates(sub.rows_[j]);
        for (int r = 0; r < n; ++r)
            A.at(r, static_cast<int>(j)) = col[r];
    }
    return linalg::column_basis(*ambient_->ctx()->field(), A);
}

Lattice Lattice::preimage(const FMatrix& U) const
{
    const GaloisRing& R = *ambient_->ring();
    const int n = ambient_->dim();
    if (U.rows != static_cast<int>(rows_.size()))
        throw ParameterError("subspace dimension does not match the lattice rank");
    if (thickness() + 1 > R.precision())
        throw PrecisionError("preimage leaves the precision window; raise the precision");
    std::vector<RVec> gens;
    for (const auto& r : rows_)
        gens.push_back(shifted_up(R, r, 1));
    for (int c = 0; c < U.cols; ++c) {
        RVec v(n);
        for (int i = 0; i < U.rows; ++i) {
            const auto u = U.at(i, c);
            if (u == 0)
                continue;
            const auto lu = R.lift(u);
            for (int k = 0; k < n; ++k)
                v[k] = R.add(v[k], R.mul(lu, rows_[i][k]));
        }
        gens.push_back(v);
    }
    return from_generators(ambient_, std::move(gens));
}

Lattice induced_lattice(const TameType& tau, int precision)
{
    return Lattice::full(InducedAmbient::make(tau, precision));
}

Lattice lattice_sum(const Lattice& a, const Lattice& b)
{
    if (a.ambient() != b.ambient())
        throw ParameterError("lattices live in different ambient modules");
    std::vector<RVec> gens = a.rows();
    gens.insert(gens.end(), b.rows().begin(), b.rows().end());
    return Lattice::from_generators(a.ambient(), std::move(gens));
}

int containment_exponent(const Lattice& a, const Lattice& b)
{
    const GaloisRing& R = *a.ambient()->ring();
    for (int n = 0; n < R.precision(); ++n) {
        bool all = true;
        for (const auto& r : a.rows())
            if (!b.contains(shifted_up(R, r, n))) {
                all = false;
                break;
            }
        if (all)
            return n;
    }
    return R.precision();
}

bool homothetic(const Lattice& a, const Lattice& b)
{
    return a.primitive() == b.primitive();
}

namespace {

enum class Side { Cosocle, Socle };

Lattice sublattice_with(const Lattice& L, const Weight& w, const std::vector<Weight>& order,
                        Side side)
{
    const int max_t = L.ambient()->max_thickness();
    Lattice X = L.primitive();
    const int guard = 4 * L.ambient()->dim() + 8;
    bool done = false;
    for (int step = 0; step < guard; ++step) {
        const GModule M = X.reduction();
        const auto parts = side == Side::Cosocle ? cosocle_parts(M) : socle_parts(M);
        std::vector<IsotypicPart> others;
        for (const auto& part : parts) {
            if (part.multiplicity > 1)
                throw UnsupportedError("reduction is not multiplicity free");
            if (part.weight != w)
                others.push_back(part);
        }
        if (others.empty()) {
            done = true;
            break;
        }
        if (!order.empty()) {
            std::vector<IsotypicPart> first;
            for (const auto& o : order) {
                for (const auto& part : others)
                    if (part.weight == o)
                        first.push_back(part);
                if (!first.empty())
                    break;
            }
            if (first.empty())
                first.push_back(others.front());
            others = first;
        }
        FMatrix U;
        if (side == Side::Cosocle) {
            U = cosocle_kernel(M, others);
        } else {
            U = FMatrix(M.dim, 0);
            for (const auto& part : others)
                U = linalg::hstack(U, part.span);
        }
        X = X.preimage(U).primitive();
        if (X.thickness() > max_t)
            throw PrecisionError("lattice chain exceeds the precision window; raise the precision");
    }
    if (!done)
        throw NotFoundError("weight " + w.to_string() + " is not reachable in this lattice");
    // Normalize relative to L: inside L, not inside pL.
    const int n = containment_exponent(X, L);
    X = X.times_p(n);
    if (n == 0)
        while (X.divisible_by_p() && L.times_p(1).contains(X))
            X = X.divided_by_p();
    return X;
}

}  // namespace

Lattice sublattice_with_cosocle(const Lattice& L, const Weight& w, const std::vector<Weight>& order)
{
    return sublattice_with(L, w, order, Side::Cosocle);
}

Lattice sublattice_with_socle(const Lattice& L, const Weight& w, const std::vector<Weight>& order)
{
    return sublattice_with(L, w, order, Side::Socle);
}

GaugeVector measure_gauge(const TameType& tau, const std::map<JSet, Lattice>& family,
                          const Lattice& L)
{
    const JSet empty = JSet::empty(tau.params().f());
    auto it = family.find(empty);
    if (it == family.end())
        throw PreconditionError("family lacks the lattice at the empty set");
    const int base = containment_exponent(it->second, L);
    GaugeVector g{tau, {}};
    for (const auto& [J, lat] : family)
        g.values[J] = Rational(containment_exponent(lat, L) - base);
    return g;
}

CokernelSplit cokernel_split(const Lattice& big, const Lattice& small)
{
    if (!big.contains(small))
        throw PreconditionError("small lattice is not contained in the big one");
    if (!small.contains(big.times_p(1)))
        throw PreconditionError("p times the big lattice is not inside the small one");
    const GModule B = big.reduction();
    const FMatrix U = big.image_in_reduction(small);
    return CokernelSplit{jh_multiset(quotient_module(B, U)), jh_multiset(submodule(B, U))};
}

std::map<JSet, Lattice> cosocle_lattices(const Lattice& L0)
{
    const TameType& tau = L0.ambient()->tau();
    std::map<JSet, Lattice> out;
    for (const auto& J : gauge_indices(tau))
        out.emplace(J, sublattice_with_cosocle(L0, jh_factor(tau, iota(tau, J))).primitive());
    return out;
}

std::map<JSet, Lattice> socle_lattices(const Lattice& L0)
{
    const TameType& tau = L0.ambient()->tau();
    std::map<JSet, Lattice> out;
    for (const auto& J : gauge_indices(tau))
        out.emplace(J, sublattice_with_socle(L0, jh_factor(tau, iota(tau, J))).primitive());
    return out;
}

}  // namespace gl2
