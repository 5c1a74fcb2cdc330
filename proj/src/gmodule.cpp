#include "gl2/gmodule.hpp"

#include <algorithm>
#include <tuple>

#include "gl2/errors.hpp"

namespace gl2 {

using linalg::columns;
using linalg::mul;

GroupContext::GroupContext(const Params& params, FieldPtr field)
    : params_(params), field_(std::move(field))
{
    const FiniteField& F = *field_;
    const std::int64_t q = params_.q();
    gamma_ = F.exp((F.order() - 1) / (q - 1));
    fq_index_.assign(F.order(), -1);
    fq_elements_.push_back(0);
    fq_index_[0] = 0;
    for (std::int64_t k = 0; k < q - 1; ++k) {
        const auto a = gamma_power(k);
        fq_index_[a] = static_cast<int>(fq_elements_.size());
        fq_elements_.push_back(a);
    }
}

std::shared_ptr<const GroupContext> GroupContext::make(const Params& params, int field_degree)
{
    const int m = field_degree == 0 ? 2 * params.f() : field_degree;
    if (m % params.f() != 0)
        throw ParameterError("coefficient field does not contain F_q");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const GroupContext>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_tuple(params.p(), params.f(), m);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    auto ctx = std::shared_ptr<const GroupContext>(
        new GroupContext(params, FiniteField::make(params.p(), m)));
    cache[key] = ctx;
    return ctx;
}

FiniteField::Elem GroupContext::gamma_power(std::int64_t k) const
{
    const FiniteField& F = *field_;
    return F.exp(k * ((F.order() - 1) / params_.e()));
}

int GroupContext::log_gamma(FiniteField::Elem a) const
{
    if (a == 0)
        throw RangeError("logarithm of zero");
    const FiniteField& F = *field_;
    const std::int64_t ratio = (F.order() - 1) / params_.e();
    const int l = F.log(a);
    if (l % ratio != 0)
        throw RangeError("element outside F_q");
    return static_cast<int>(l / ratio);
}

std::array<Mat2, 3> GroupContext::generators() const
{
    return {Mat2{gamma_, 0, 0, 1}, Mat2{1, 1, 0, 1}, Mat2{0, 1, 1, 0}};
}

Mat2 GroupContext::mul(const Mat2& x, const Mat2& y) const
{
    const FiniteField& F = *field_;
    return Mat2{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
                F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

FiniteField::Elem GroupContext::det(const Mat2& x) const
{
    const FiniteField& F = *field_;
    return F.sub(F.mul(x.a, x.d), F.mul(x.b, x.c));
}

Mat2 GroupContext::inverse(const Mat2& x) const
{
    const FiniteField& F = *field_;
    const auto di = F.inv(det(x));
    return Mat2{F.mul(x.d, di), F.mul(F.neg(x.b), di), F.mul(F.neg(x.c), di), F.mul(x.a, di)};
}

namespace {

// Sym^s of g on the basis x^(s-k) y^k, with P(x, y) -> P(ax + cy, bx + dy).
FMatrix sym_matrix(const FiniteField& F, int s, const Mat2& g)
{
    FMatrix M(s + 1, s + 1);
    for (int i = 0; i <= s; ++i) {
        std::vector<FiniteField::Elem> poly{1};
        auto times = [&](FiniteField::Elem cx, FiniteField::Elem cy) {
            std::vector<FiniteField::Elem> out(poly.size() + 1, 0);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                out[k] = F.add(out[k], F.mul(poly[k], cx));
                out[k + 1] = F.add(out[k + 1], F.mul(poly[k], cy));
            }
            poly = std::move(out);
        };
        for (int k = 0; k < s - i; ++k)
            times(g.a, g.c);
        for (int k = 0; k < i; ++k)
            times(g.b, g.d);
        for (int k = 0; k <= s; ++k)
            M.at(k, i) = poly[k];
    }
    return M;
}

FMatrix matrix_power(const FiniteField& F, FMatrix A, std::int64_t n)
{
    FMatrix R = FMatrix::identity(A.rows);
    while (n) {
        if (n & 1)
            R = mul(F, R, A);
        A = mul(F, A, A);
        n >>= 1;
    }
    return R;
}

FMatrix identity_minus(const FiniteField& F, const FMatrix& A, FiniteField::Elem lambda)
{
    FMatrix B = A;
    for (int i = 0; i < A.rows; ++i)
        B.at(i, i) = F.sub(B.at(i, i), lambda);
    return B;
}

// Standard basis vectors completing the columns of basis, as the quotient coordinates.
FMatrix quotient_complement(const FiniteField& F, const FMatrix& basis)
{
    const FMatrix full = linalg::complete_basis(F, basis);
    const int r = linalg::rank(F, basis);
    return columns(full, r, full.cols);
}

FMatrix hstack_all(int rows, const std::vector<FMatrix>& parts)
{
    FMatrix out(rows, 0);
    for (const auto& m : parts)
        out = linalg::hstack(out, m);
    return out;
}

}  // namespace

FMatrix simple_action(const GroupContext& ctx, const Weight& w, const Mat2& g)
{
    const Params& params = ctx.params();
    validate_weight(params, w);
    const FiniteField& F = *ctx.field();
    FMatrix M = FMatrix::identity(1);
    for (int j = 0; j < params.f(); ++j) {
        const std::int64_t fr = ipow(params.p(), j);
        const Mat2 gj{F.pow(g.a, fr), F.pow(g.b, fr), F.pow(g.c, fr), F.pow(g.d, fr)};
        M = linalg::kron(F, M, sym_matrix(F, w.s[j], gj));
    }
    return linalg::scale(F, F.pow(ctx.det(g), w.d), M);
}

GModule simple_module(const ContextPtr& ctx, const Weight& w)
{
    GModule M;
    M.ctx = ctx;
    const auto gens = ctx->generators();
    for (int i = 0; i < 3; ++i)
        M.gens[i] = simple_action(*ctx, w, gens[i]);
    M.dim = M.gens[0].rows;
    return M;
}

FMatrix word_action(const GModule& M, const std::vector<int>& word)
{
    FMatrix R = FMatrix::identity(M.dim);
    for (int g : word) {
        if (g < 0 || g > 2)
            throw IndexError("generator index out of range");
        R = mul(M.field(), R, M.gens[g]);
    }
    return R;
}

const SimpleData& GroupContext::simple_data(const Weight& w) const
{
    {
        std::lock_guard lock(mu_);
        auto it = simple_cache_.find(w);
        if (it != simple_cache_.end())
            return *it->second;
    }
    const FiniteField& F = *field_;
    auto data = std::make_unique<SimpleData>();
    data->module = simple_module(shared_from_this(), w);
    const GModule& S = data->module;
    const int d = S.dim;
    FMatrix basis(d, 0);
    std::vector<FMatrix> vecs;
    FMatrix e0(d, 1);
    e0.at(0, 0) = 1;
    vecs.push_back(e0);
    basis = e0;
    data->parent.push_back(-1);
    data->gen.push_back(-1);
    std::vector<std::pair<int, int>> pending;
    for (std::size_t k = 0; k < vecs.size(); ++k)
        for (int g = 0; g < 3; ++g) {
            FMatrix v = linalg::mul(F, S.gens[g], vecs[k]);
            if (static_cast<int>(vecs.size()) < d && !linalg::in_span(F, basis, v)) {
                vecs.push_back(v);
                basis = linalg::hstack(basis, v);
                data->parent.push_back(static_cast<int>(k));
                data->gen.push_back(g);
            } else {
                pending.push_back({static_cast<int>(k), g});
            }
        }
    if (static_cast<int>(vecs.size()) != d)
        throw TheoremViolation("weight module is not cyclic on its highest weight vector");
    data->basis_inverse = linalg::inverse(F, basis);
    for (auto [k, g] : pending) {
        const FMatrix v = linalg::mul(F, data->basis_inverse, linalg::mul(F, S.gens[g], vecs[k]));
        SimpleData::Relation rel{k, g, std::vector<FiniteField::Elem>(d)};
        for (int l = 0; l < d; ++l)
            rel.coeffs[l] = v.at(l, 0);
        data->relations.push_back(std::move(rel));
    }
    std::lock_guard lock(mu_);
    auto& slot = simple_cache_[w];
    if (!slot)
        slot = std::move(data);
    return *slot;
}

Weight dual_weight(const Params& params, const Weight& w)
{
    validate_weight(params, w);
    return Weight{w.s, mod(-w.d - weight_s_value(params, w), params.e())};
}

GModule dual_module(const GModule& M)
{
    GModule D;
    D.ctx = M.ctx;
    D.dim = M.dim;
    for (int i = 0; i < 3; ++i)
        D.gens[i] = linalg::transpose(linalg::inverse(M.field(), M.gens[i]));
    return D;
}

GModule direct_sum(const GModule& A, const GModule& B)
{
    if (A.ctx != B.ctx)
        throw ParameterError("modules over different contexts");
    GModule S;
    S.ctx = A.ctx;
    S.dim = A.dim + B.dim;
    for (int i = 0; i < 3; ++i) {
        FMatrix M(S.dim, S.dim);
        for (int r = 0; r < A.dim; ++r)
            for (int c = 0; c < A.dim; ++c)
                M.at(r, c) = A.gens[i].at(r, c);
        for (int r = 0; r < B.dim; ++r)
            for (int c = 0; c < B.dim; ++c)
                M.at(A.dim + r, A.dim + c) = B.gens[i].at(r, c);
        S.gens[i] = M;
    }
    return S;
}

bool is_invariant_subspace(const GModule& M, const FMatrix& basis)
{
    for (int i = 0; i < 3; ++i)
        if (!linalg::in_span(M.field(), basis, mul(M.field(), M.gens[i], basis)))
            return false;
    return true;
}

GModule submodule(const GModule& M, const FMatrix& basis)
{
    const FiniteField& F = M.field();
    const FMatrix B = linalg::column_basis(F, basis);
    const int r = B.cols;
    const FMatrix full = linalg::complete_basis(F, B);
    const FMatrix inv = linalg::inverse(F, full);
    GModule S;
    S.ctx = M.ctx;
    S.dim = r;
    const FMatrix top = linalg::rows(inv, 0, r);
    for (int i = 0; i < 3; ++i)
        S.gens[i] = mul(F, top, mul(F, M.gens[i], B));
    return S;
}

GModule quotient_module(const GModule& M, const FMatrix& basis)
{
    const FiniteField& F = M.field();
    const FMatrix B = linalg::column_basis(F, basis);
    const int r = B.cols;
    const FMatrix full = linalg::complete_basis(F, B);
    const FMatrix inv = linalg::inverse(F, full);
    const FMatrix comp = columns(full, r, full.cols);
    const FMatrix bottom = linalg::rows(inv, r, full.cols);
    GModule Q;
    Q.ctx = M.ctx;
    Q.dim = M.dim - r;
    for (int i = 0; i < 3; ++i)
        Q.gens[i] = mul(F, bottom, mul(F, M.gens[i], comp));
    return Q;
}

bool satisfies_relations(const GModule& M)
{
    const FiniteField& F = M.field();
    const auto I = FMatrix::identity(M.dim);
    const auto& g1 = M.gens[0];
    const auto& g2 = M.gens[1];
    const auto& g3 = M.gens[2];
    if (matrix_power(F, g1, M.ctx->params().e()) != I)
        return false;
    if (matrix_power(F, g2, M.ctx->params().p()) != I)
        return false;
    if (mul(F, g3, g3) != I)
        return false;
    const FMatrix t2 = mul(F, g3, mul(F, g1, g3));
    if (mul(F, g1, t2) != mul(F, t2, g1))
        return false;
    const FMatrix u = mul(F, g1, mul(F, g2, linalg::inverse(F, g1)));
    return mul(F, u, g2) == mul(F, g2, u);
}

std::vector<FMatrix> hom_space(const GModule& A, const GModule& B)
{
    const FiniteField& F = A.field();
    const int a = A.dim;
    const int b = B.dim;
    const int unknowns = a * b;
    FMatrix sys(3 * a * b, unknowns);
    int row = 0;
    for (int g = 0; g < 3; ++g)
        for (int i = 0; i < b; ++i)
            for (int l = 0; l < a; ++l, ++row) {
                // (X A_g - B_g X)[i][l] = 0
                for (int j = 0; j < a; ++j)
                    sys.at(row, i * a + j) = F.add(sys.at(row, i * a + j), A.gens[g].at(j, l));
                for (int k = 0; k < b; ++k)
                    sys.at(row, k * a + l) =
                        F.sub(sys.at(row, k * a + l), B.gens[g].at(i, k));
            }
    const FMatrix K = linalg::kernel(F, sys);
    std::vector<FMatrix> out;
    for (int c = 0; c < K.cols; ++c) {
        FMatrix X(b, a);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j)
                X.at(i, j) = K.at(i * a + j, c);
        out.push_back(X);
    }
    return out;
}

std::vector<FMatrix> hom_from_simple(const Weight& w, const GModule& M)
{
    const FiniteField& F = M.field();
    const SimpleData& data = M.ctx->simple_data(w);
    const int d = data.module.dim;
    const int n = M.dim;
    std::vector<FMatrix> W(d);
    W[0] = FMatrix::identity(n);
    for (int k = 1; k < d; ++k)
        W[k] = mul(F, M.gens[data.gen[k]], W[data.parent[k]]);
    FMatrix sys(static_cast<int>(data.relations.size()) * n, n);
    int block = 0;
    for (const auto& rel : data.relations) {
        FMatrix lhs = mul(F, M.gens[rel.g], W[rel.k]);
        for (int l = 0; l < d; ++l) {
            const auto c = rel.coeffs[l];
            if (c == 0)
                continue;
            const auto nc = F.neg(c);
            for (std::size_t t = 0; t < lhs.a.size(); ++t)
                if (W[l].a[t] != 0)
                    lhs.a[t] = F.add(lhs.a[t], F.mul(nc, W[l].a[t]));
        }
        std::copy(lhs.a.begin(), lhs.a.end(),
                  sys.a.begin() + static_cast<std::ptrdiff_t>(block) * n * n);
        ++block;
    }
    const FMatrix K = linalg::kernel(F, sys);
    std::vector<FMatrix> out;
    for (int c = 0; c < K.cols; ++c) {
        const FMatrix m = K.column(c);
        FMatrix phiB(n, d);
        for (int k = 0; k < d; ++k) {
            const FMatrix v = mul(F, W[k], m);
            for (int i = 0; i < n; ++i)
                phiB.at(i, k) = v.at(i, 0);
        }
        out.push_back(mul(F, phiB, data.basis_inverse));
    }
    return out;
}

std::vector<std::pair<Weight, int>> socle_candidates(const GModule& M)
{
    const FiniteField& F = M.field();
    const Params& params = M.ctx->params();
    const int n = M.dim;
    const std::int64_t e = params.e();
    const FMatrix& g1 = M.gens[0];
    const FMatrix g1inv = linalg::inverse(F, g1);
    FMatrix sys(0, n);
    FMatrix conj = M.gens[1];
    for (int k = 0; k < params.f(); ++k) {
        sys = linalg::vstack(sys, identity_minus(F, conj, 1));
        conj = mul(F, g1, mul(F, conj, g1inv));
    }
    const FMatrix fixed = linalg::kernel(F, sys);
    std::vector<std::pair<Weight, int>> out;
    if (fixed.cols == 0)
        return out;
    const FMatrix t2 = mul(F, M.gens[2], mul(F, g1, M.gens[2]));
    const FMatrix X1 = linalg::solve(F, fixed, mul(F, g1, fixed));
    const FMatrix X2 = linalg::solve(F, fixed, mul(F, t2, fixed));
    for (std::int64_t a = 0; a < e; ++a) {
        const FMatrix E = linalg::kernel(F, identity_minus(F, X1, M.ctx->gamma_power(a)));
        if (E.cols == 0)
            continue;
        const FMatrix Y = linalg::solve(F, E, mul(F, X2, E));
        for (std::int64_t b = 0; b < e; ++b) {
            const int dim = linalg::kernel(F, identity_minus(F, Y, M.ctx->gamma_power(b))).cols;
            if (dim == 0)
                continue;
            const std::int64_t s_val = mod(a - b, e);
            out.push_back({Weight{digits(s_val, params.p(), params.f(), DigitRange::FullPower), b}, dim});
            if (s_val == 0)
                out.push_back({Weight{digits(e, params.p(), params.f(), DigitRange::FullPower), b}, dim});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IsotypicPart> socle_parts(const GModule& M)
{
    std::vector<IsotypicPart> out;
    for (const auto& [w, bound] : socle_candidates(M)) {
        const auto homs = hom_from_simple(w, M);
        if (homs.empty())
            continue;
        if (static_cast<int>(homs.size()) > bound)
            throw TheoremViolation("socle multiplicity exceeds the highest weight bound");
        IsotypicPart part{w, static_cast<int>(homs.size()), hstack_all(M.dim, homs)};
        part.span = linalg::column_basis(M.field(), part.span);
        out.push_back(std::move(part));
    }
    return out;
}

std::vector<IsotypicPart> cosocle_parts(const GModule& M)
{
    auto parts = socle_parts(dual_module(M));
    for (auto& part : parts)
        part.weight = dual_weight(M.ctx->params(), part.weight);
    std::sort(parts.begin(), parts.end(),
              [](const IsotypicPart& x, const IsotypicPart& y) { return x.weight < y.weight; });
    return parts;
}

FMatrix socle(const GModule& M)
{
    std::vector<FMatrix> spans;
    for (const auto& part : socle_parts(M))
        spans.push_back(part.span);
    return linalg::column_basis(M.field(), hstack_all(M.dim, spans));
}

FMatrix cosocle_kernel(const GModule& M, const std::vector<IsotypicPart>& parts)
{
    std::vector<FMatrix> spans;
    for (const auto& part : parts)
        spans.push_back(part.span);
    return linalg::annihilator(M.field(), linalg::column_basis(M.field(), hstack_all(M.dim, spans)));
}

FMatrix radical(const GModule& M)
{
    return cosocle_kernel(M, cosocle_parts(M));
}

namespace {

std::vector<Weight> expand(const std::vector<IsotypicPart>& parts)
{
    std::vector<Weight> out;
    for (const auto& part : parts)
        for (int k = 0; k < part.multiplicity; ++k)
            out.push_back(part.weight);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

LoewySeries socle_series(const GModule& M)
{
    const FiniteField& F = M.field();
    LoewySeries out;
    FMatrix cur(M.dim, 0);
    while (cur.cols < M.dim) {
        const FMatrix comp = quotient_complement(F, cur);
        const GModule Q = quotient_module(M, cur);
        const auto parts = socle_parts(Q);
        if (parts.empty())
            throw TheoremViolation("nonzero module with zero socle");
        out.layers.push_back(expand(parts));
        std::vector<FMatrix> spans;
        for (const auto& part : parts)
            spans.push_back(part.span);
        const FMatrix lifted = mul(F, comp, hstack_all(Q.dim, spans));
        cur = linalg::column_basis(F, linalg::hstack(cur, lifted));
        out.chain.push_back(cur);
    }
    return out;
}

LoewySeries radical_series(const GModule& M)
{
    const FiniteField& F = M.field();
    LoewySeries out;
    FMatrix cur = FMatrix::identity(M.dim);
    out.chain.push_back(cur);
    while (cur.cols > 0) {
        const GModule S = submodule(M, cur);
        const auto parts = cosocle_parts(S);
        if (parts.empty())
            throw TheoremViolation("nonzero module with zero cosocle");
        out.layers.push_back(expand(parts));
        cur = linalg::column_basis(F, mul(F, cur, cosocle_kernel(S, parts)));
        out.chain.push_back(cur);
    }
    return out;
}

std::vector<Weight> jh_multiset(const GModule& M)
{
    std::vector<Weight> out;
    for (const auto& layer : socle_series(M).layers)
        out.insert(out.end(), layer.begin(), layer.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_semisimple(const GModule& M)
{
    return socle(M).cols == M.dim;
}

std::optional<GModule> extension_subquotient(const GModule& Q, const Weight& top,
                                             const Weight& bottom)
{
    const FiniteField& F = Q.field();
    FMatrix xb = FMatrix::identity(Q.dim);
    for (int guard = 0; guard <= Q.dim; ++guard) {
        const GModule X = submodule(Q, xb);
        const auto parts = cosocle_parts(X);
        std::vector<IsotypicPart> others;
        bool found = false;
        for (const auto& part : parts) {
            if (part.weight == top) {
                if (part.multiplicity > 1)
                    throw UnsupportedError("cosocle multiplicity greater than one");
                found = true;
            } else {
                others.push_back(part);
            }
        }
        if (!found)
            return std::nullopt;
        if (others.empty())
            break;
        xb = linalg::column_basis(F, mul(F, xb, cosocle_kernel(X, others)));
    }
    const GModule X = submodule(Q, xb);
    std::vector<FMatrix> drop;
    bool has_bottom = false;
    for (const auto& part : socle_parts(X)) {
        if (part.weight == bottom)
            has_bottom = true;
        else
            drop.push_back(part.span);
    }
    if (!has_bottom)
        return std::nullopt;
    if (drop.empty())
        return X;
    return quotient_module(X, hstack_all(X.dim, drop));
}

}  // namespace gl2
