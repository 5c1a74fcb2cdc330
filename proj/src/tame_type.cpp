#include "gl2/tame_type.hpp"

#include <algorithm>

#include "gl2/errors.hpp"

namespace gl2 {

std::int64_t TameType::a_eta() const
{
    if (!is_principal_series())
        throw KindError("a_eta requested for a cuspidal type");
    return exponents_[0];
}

std::int64_t TameType::a_eta_prime() const
{
    if (!is_principal_series())
        throw KindError("a_eta' requested for a cuspidal type");
    return exponents_[1];
}

std::int64_t TameType::a_psi() const
{
    if (!is_cuspidal())
        throw KindError("a_psi requested for a principal series type");
    return exponents_[0];
}

std::int64_t TameType::b_value() const
{
    if (!is_cuspidal())
        throw KindError("b requested for a principal series type");
    return b_value_;
}

TameType make_ps_type(const Params& params, std::int64_t a_eta, std::int64_t a_eta_prime)
{
    const std::int64_t e = params.e();
    a_eta = mod(a_eta, e);
    a_eta_prime = mod(a_eta_prime, e);
    if (a_eta == a_eta_prime)
        throw ParameterError("scalar type: a_eta = a_eta' mod q-1");
    TameType t(params, TypeKind::PrincipalSeries);
    t.exponents_ = {a_eta, a_eta_prime};
    t.c_value_ = mod(a_eta - a_eta_prime, e);
    t.c_digits_ = digits(t.c_value_, params.p(), params.f(), DigitRange::UnitGroup);
    return t;
}

TameType make_cuspidal_type(const Params& params, std::int64_t a_psi)
{
    const std::int64_t q = params.q();
    const std::int64_t big = q * q - 1;
    a_psi = mod(a_psi, big);
    if (a_psi % (q + 1) == 0)
        throw ParameterError("character factors through the norm: (q+1) divides a_psi");
    // q+1 divides q^2-1, so c is the residue of a_psi - 1 modulo q+1; the residue q would
    // force (q+1) | a_psi, which is excluded above.
    const std::int64_t c = mod(a_psi - 1, q + 1);
    const std::int64_t rest = mod(a_psi - 1 - c, big);
    if (c > q - 1 || rest % (q + 1) != 0)
        throw TheoremViolation("cuspidal decomposition (b, c) does not exist");
    const std::int64_t b = rest / (q + 1);
    TameType t(params, TypeKind::Cuspidal);
    t.exponents_ = {a_psi};
    t.b_value_ = b;
    t.c_value_ = c;
    t.c_digits_ = digits(c, params.p(), params.f(), DigitRange::FullPower);
    return t;
}

void for_each_type(const Params& params, const std::function<void(const TameType&)>& visit)
{
    const std::int64_t e = params.e();
    for (std::int64_t a = 0; a < e; ++a)
        for (std::int64_t b = 0; b < e; ++b)
            if (a != b)
                visit(make_ps_type(params, a, b));
    const std::int64_t q = params.q();
    for (std::int64_t a = 0; a < q * q - 1; ++a)
        if (a % (q + 1) != 0)
            visit(make_cuspidal_type(params, a));
}

std::vector<TameType> all_types(const Params& params)
{
    std::vector<TameType> r;
    for_each_type(params, [&](const TameType& t) { r.push_back(t); });
    return r;
}

namespace {

void check_width(const TameType& tau, const JSet& J)
{
    if (J.width != tau.params().f())
        throw IndexError("index set width does not match f");
}

// For principal series the predecessor set is J itself; for cuspidal types it is J xor {f-1}.
JSet predecessor_set(const TameType& tau, const JSet& J)
{
    if (tau.is_principal_series())
        return J;
    return J ^ JSet::from_indices(J.width, {J.width - 1});
}

}  // namespace

bool in_p_tau(const TameType& tau, const JSet& J)
{
    check_width(tau, J);
    const int p = tau.params().p();
    const auto& c = tau.c_digits();
    const JSet pred = predecessor_set(tau, J);
    for (int j = 0; j < J.width; ++j) {
        bool in_j = J.contains(j);
        bool prev_in = pred.contains(J.prev(j));
        if (in_j && !prev_in && c[j] == p - 1)
            return false;
        if (!in_j && prev_in && c[j] == 0)
            return false;
    }
    return true;
}

std::vector<JSet> p_tau(const TameType& tau)
{
    std::vector<JSet> r;
    for (const auto& J : all_jsets(tau.params().f()))
        if (in_p_tau(tau, J))
            r.push_back(J);
    return r;
}

Weight jh_factor(const TameType& tau, const JSet& J)
{
    if (!in_p_tau(tau, J))
        throw IndexError("index set " + J.to_string() + " not in P_tau");
    const Params& params = tau.params();
    const int p = params.p();
    const int f = params.f();
    const auto& c = tau.c_digits();
    const JSet pred = predecessor_set(tau, J);
    std::vector<int> s(f), t(f, 0);
    for (int i = 0; i < f; ++i) {
        const int before = J.prev(i);
        if (J.contains(i)) {
            s[i] = p - 1 - c[i] - (pred.contains(before) ? 0 : 1);
            t[i] = c[i] + (J.contains(before) ? 0 : 1);
        } else {
            s[i] = c[i] - (pred.contains(before) ? 1 : 0);
        }
    }
    std::int64_t twist = 0;
    if (tau.is_principal_series()) {
        twist = tau.a_eta_prime();
    } else {
        const bool ends_in = J.contains(0) && J.contains(f - 1);
        const bool ends_out = !J.contains(0) && !J.contains(f - 1);
        twist = tau.b_value() + ((ends_in || ends_out) ? 1 : 0);
    }
    // t may have a digit equal to p (c_i = p-1 with i in J); fold everything mod q-1.
    std::int64_t tv = 0;
    for (int i = f - 1; i >= 0; --i)
        tv = tv * p + t[i];
    return Weight{s, mod(tv + twist, params.e())};
}

std::vector<JhEntry> jh_factors(const TameType& tau)
{
    std::vector<JhEntry> r;
    for (const auto& J : p_tau(tau))
        r.push_back({J, jh_factor(tau, J)});
    return r;
}

CuspidalClass classify_cuspidal(const TameType& tau)
{
    if (!tau.is_cuspidal())
        throw KindError("classify_cuspidal called on a principal series type");
    if (!base_choices(tau).empty())
        return CuspidalClass{true, std::nullopt};
    std::optional<JSet> found;
    int count = 0;
    for (const auto& J : p_tau(tau)) {
        if (is_regular_weight(tau.params(), jh_factor(tau, J))) {
            ++count;
            found = J;
        }
    }
    if (count != 1)
        throw TheoremViolation("irregular cuspidal type without a unique regular JH factor");
    return CuspidalClass{false, found};
}

std::vector<int> base_choices(const TameType& tau)
{
    std::vector<int> r;
    if (!tau.is_cuspidal())
        return r;
    const int p = tau.params().p();
    const auto& c = tau.c_digits();
    for (int i = 0; i < tau.params().f(); ++i)
        if (c[i] > 0 && c[i] < p - 1)
            r.push_back(i);
    return r;
}

JSet j_base_at(const TameType& tau, int start)
{
    const int f = tau.params().f();
    if (tau.is_principal_series())
        return JSet::empty(f);
    auto choices = base_choices(tau);
    if (std::find(choices.begin(), choices.end(), start) == choices.end())
        throw PreconditionError("base index " + std::to_string(start) + " is not admissible");
    JSet base = JSet::empty(f);
    for (int i = start; i < f; ++i)
        base = base.with(i);
    if (!in_p_tau(tau, base) || !in_p_tau(tau, base.complement()))
        throw TheoremViolation("base set or its complement not in P_tau");
    return base;
}

JSet j_base(const TameType& tau)
{
    const int f = tau.params().f();
    if (tau.is_principal_series())
        return JSet::empty(f);
    auto choices = base_choices(tau);
    if (choices.empty())
        throw UnsupportedError("irregular cuspidal type has no base set");
    return j_base_at(tau, choices.front());
}

JSet iota(const TameType& tau, const JSet& J)
{
    check_width(tau, J);
    return J ^ j_base(tau);
}

TameType bc_type(const TameType& tau)
{
    const Params& params = tau.params();
    const Params big = params.doubled();
    const std::int64_t q = params.q();
    if (tau.is_principal_series())
        return make_ps_type(big, tau.a_eta() * (1 + q), tau.a_eta_prime() * (1 + q));
    return make_ps_type(big, tau.a_psi(), tau.a_psi() * q);
}

JSet bc_jset(const TameType& tau, const JSet& J)
{
    check_width(tau, J);
    const int f = J.width;
    JSet r = JSet::empty(2 * f);
    for (int i = 0; i < f; ++i) {
        if (J.contains(i))
            r = r.with(i);
        const bool upper = tau.is_principal_series() ? J.contains(i) : !J.contains(i);
        if (upper)
            r = r.with(i + f);
    }
    return r;
}

}  // namespace gl2

namespace gl2 {

namespace {

std::optional<TypeWithIndex> invert_ps(const Params& params, const Weight& w, const JSet& J)
{
    const int p = params.p();
    const int f = params.f();
    std::vector<int> c(f), t(f, 0);
    for (int i = 0; i < f; ++i) {
        const bool prev_in = J.contains(J.prev(i));
        if (J.contains(i)) {
            c[i] = p - 1 - w.s[i] - (prev_in ? 0 : 1);
            t[i] = c[i] + (prev_in ? 0 : 1);
        } else {
            c[i] = w.s[i] + (prev_in ? 1 : 0);
        }
        if (c[i] < 0 || c[i] > p - 1)
            return std::nullopt;
    }
    const std::int64_t cv = from_digits(c, p);
    if (cv == 0 || cv == params.e())
        return std::nullopt;
    std::int64_t tv = 0;
    for (int i = f - 1; i >= 0; --i)
        tv = tv * p + t[i];
    const std::int64_t a_prime = mod(w.d - tv, params.e());
    TameType tau = make_ps_type(params, a_prime + cv, a_prime);
    if (!in_p_tau(tau, J) || jh_factor(tau, J) != w)
        return std::nullopt;
    return TypeWithIndex{tau, J};
}

std::optional<TypeWithIndex> invert_cuspidal(const Params& params, const Weight& w, const JSet& J)
{
    const int p = params.p();
    const int f = params.f();
    const std::int64_t q = params.q();
    const JSet pred = J ^ JSet::from_indices(f, {f - 1});
    std::vector<int> c(f), t(f, 0);
    for (int i = 0; i < f; ++i) {
        const int before = J.prev(i);
        if (J.contains(i)) {
            c[i] = p - 1 - w.s[i] - (pred.contains(before) ? 0 : 1);
            t[i] = c[i] + (J.contains(before) ? 0 : 1);
        } else {
            c[i] = w.s[i] + (pred.contains(before) ? 1 : 0);
        }
        if (c[i] < 0 || c[i] > p - 1)
            return std::nullopt;
    }
    const std::int64_t cv = from_digits(c, p);
    std::int64_t tv = 0;
    for (int i = f - 1; i >= 0; --i)
        tv = tv * p + t[i];
    const bool ends_in = J.contains(0) && J.contains(f - 1);
    const bool ends_out = !J.contains(0) && !J.contains(f - 1);
    const std::int64_t b = mod(w.d - tv - ((ends_in || ends_out) ? 1 : 0), params.e());
    TameType tau = make_cuspidal_type(params, (q + 1) * b + 1 + cv);
    if (!in_p_tau(tau, J) || jh_factor(tau, J) != w)
        return std::nullopt;
    return TypeWithIndex{tau, J};
}

}  // namespace

std::vector<TypeWithIndex> types_with_factor(const Params& params, const Weight& w,
                                             bool cuspidal_first)
{
    validate_weight(params, w);
    std::vector<TypeWithIndex> ps, cusp;
    for (const auto& J : all_jsets(params.f())) {
        if (auto r = invert_ps(params, w, J))
            ps.push_back(*r);
        if (auto r = invert_cuspidal(params, w, J))
            cusp.push_back(*r);
    }
    auto& first = cuspidal_first ? cusp : ps;
    auto& second = cuspidal_first ? ps : cusp;
    first.insert(first.end(), second.begin(), second.end());
    return first;
}

}  // namespace gl2
