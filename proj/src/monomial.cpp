#include "gl2/monomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "gl2/errors.hpp"

namespace gl2 {

RingSpec RingSpec::make(const JSet& j_min_prime, const JSet& j_max_prime)
{
    if (j_min_prime.width != j_max_prime.width)
        throw ParameterError("ring index sets of different widths");
    if (!j_min_prime.subset_of(j_max_prime))
        throw ParameterError("j_min' must be contained in j_max'");
    return RingSpec{j_max_prime.minus(j_min_prime), j_min_prime, j_max_prime};
}

RingSpec RingSpec::full(int n)
{
    return make(JSet::empty(n), JSet::full(n));
}

bool RingSpec::in_w(const JSet& J) const
{
    return J.width == width() && j_min_prime.subset_of(J) && J.subset_of(j_max_prime);
}

std::vector<JSet> RingSpec::w_elements() const
{
    std::vector<JSet> r;
    for (const auto& J : all_jsets(width()))
        if (in_w(J))
            r.push_back(J);
    return r;
}

Monomial Monomial::one(int width)
{
    return Monomial(width);
}

Monomial Monomial::x(int width, int j, int exponent)
{
    Monomial m(width);
    m.xs_.at(j) = exponent;
    return m;
}

Monomial Monomial::y(int width, int j, int exponent)
{
    Monomial m(width);
    m.ys_.at(j) = exponent;
    return m;
}

bool Monomial::is_one() const
{
    if (zero_)
        return false;
    for (std::size_t j = 0; j < xs_.size(); ++j)
        if (xs_[j] || ys_[j])
            return false;
    return true;
}

int Monomial::degree() const
{
    int d = 0;
    for (std::size_t j = 0; j < xs_.size(); ++j)
        d += xs_[j] + ys_[j];
    return d;
}

void Monomial::normalize()
{
    for (std::size_t j = 0; j < xs_.size(); ++j)
        if (xs_[j] > 0 && ys_[j] > 0)
            zero_ = true;
    if (zero_) {
        std::fill(xs_.begin(), xs_.end(), 0);
        std::fill(ys_.begin(), ys_.end(), 0);
    }
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r(width());
    r.zero_ = zero_ || o.zero_;
    for (int j = 0; j < width(); ++j) {
        r.xs_[j] = xs_[j] + o.xs_[j];
        r.ys_[j] = ys_[j] + o.ys_[j];
    }
    r.normalize();
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const
{
    Monomial r(width());
    r.zero_ = zero_ || o.zero_;
    for (int j = 0; j < width(); ++j) {
        r.xs_[j] = std::max(xs_[j], o.xs_[j]);
        r.ys_[j] = std::max(ys_[j], o.ys_[j]);
    }
    r.normalize();
    return r;
}

bool Monomial::divides(const Monomial& o) const
{
    if (o.zero_)
        return true;
    if (zero_)
        return false;
    for (int j = 0; j < width(); ++j)
        if (xs_[j] > o.xs_[j] || ys_[j] > o.ys_[j])
            return false;
    return true;
}

std::string Monomial::to_string() const
{
    if (zero_)
        return "0";
    std::ostringstream os;
    bool first = true;
    auto put = [&](char axis, int j, int e) {
        if (e == 0)
            return;
        if (!first)
            os << '*';
        os << axis << j;
        if (e > 1)
            os << '^' << e;
        first = false;
    };
    for (int j = 0; j < width(); ++j) {
        put('X', j, xs_[j]);
        put('Y', j, ys_[j]);
    }
    if (first)
        os << '1';
    return os.str();
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const
{
    if (auto c = zero_ <=> o.zero_; c != 0)
        return c;
    if (auto c = degree() <=> o.degree(); c != 0)
        return c;
    for (int j = 0; j < width(); ++j) {
        // Higher X exponent at an earlier index sorts first.
        if (auto c = o.xs_[j] <=> xs_[j]; c != 0)
            return c;
        if (auto c = o.ys_[j] <=> ys_[j]; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

namespace {

void check_monomial(const RingSpec& ring, const Monomial& m)
{
    if (m.width() != ring.width())
        throw ParameterError("monomial width does not match the ring");
    for (int j = 0; j < m.width(); ++j)
        if (!ring.delta.contains(j) && (m.x_exp(j) || m.y_exp(j)))
            throw ParameterError("monomial uses a variable outside delta");
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (!(a.ring() == b.ring()))
        throw ParameterError("ideals live in different rings");
}

std::vector<Monomial> minimize(std::vector<Monomial> gens)
{
    std::erase_if(gens, [](const Monomial& m) { return m.is_zero(); });
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> r;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : r)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant)
            r.push_back(g);
    }
    return r;
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(const RingSpec& ring)
{
    return MonomialIdeal(ring);
}

MonomialIdeal MonomialIdeal::unit(const RingSpec& ring)
{
    MonomialIdeal r(ring);
    r.gens_.push_back(Monomial::one(ring.width()));
    return r;
}

MonomialIdeal MonomialIdeal::generated(const RingSpec& ring, std::vector<Monomial> gens)
{
    for (const auto& g : gens)
        check_monomial(ring, g);
    MonomialIdeal r(ring);
    r.gens_ = minimize(std::move(gens));
    return r;
}

bool MonomialIdeal::is_unit() const
{
    return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::is_radical_generated() const
{
    for (const auto& g : gens_)
        for (int j = 0; j < g.width(); ++j)
            if (g.x_exp(j) > 1 || g.y_exp(j) > 1)
                return false;
    return true;
}

std::string MonomialIdeal::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < gens_.size(); ++i)
        os << (i ? ", " : "") << gens_[i].to_string();
    os << ')';
    return os.str();
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b)
{
    check_same_ring(a, b);
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::generated(a.ring(), std::move(gens));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b)
{
    check_same_ring(a, b);
    std::vector<Monomial> gens;
    for (const auto& g : a.generators())
        for (const auto& h : b.generators())
            gens.push_back(g.lcm(h));
    return MonomialIdeal::generated(a.ring(), std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Monomial& m)
{
    const RingSpec& ring = ideal.ring();
    if (m.is_zero())
        return MonomialIdeal::unit(ring);
    check_monomial(ring, m);
    const int w = ring.width();
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        Monomial q = Monomial::one(w);
        for (int j = 0; j < w; ++j) {
            if (g.x_exp(j) > m.x_exp(j))
                q = q * Monomial::x(w, j, g.x_exp(j) - m.x_exp(j));
            if (g.y_exp(j) > m.y_exp(j))
                q = q * Monomial::y(w, j, g.y_exp(j) - m.y_exp(j));
        }
        gens.push_back(q);
    }
    // Contributions of the relations X_j Y_j = 0.
    for (int j = 0; j < w; ++j) {
        if (m.x_exp(j) > 0)
            gens.push_back(Monomial::y(w, j));
        if (m.y_exp(j) > 0)
            gens.push_back(Monomial::x(w, j));
    }
    return MonomialIdeal::generated(ring, std::move(gens));
}

bool ideal_contains(const MonomialIdeal& ideal, const Monomial& m)
{
    if (m.is_zero())
        return true;
    check_monomial(ideal.ring(), m);
    for (const auto& g : ideal.generators())
        if (g.divides(m))
            return true;
    return false;
}

bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b)
{
    check_same_ring(a, b);
    for (const auto& g : a.generators())
        if (!ideal_contains(b, g))
            return false;
    return true;
}

MonomialIdeal face_ideal(const RingSpec& ring, const JSet& J1, const JSet& J2)
{
    if (!ring.in_w(J1) || !ring.in_w(J2) || !J1.subset_of(J2))
        throw PreconditionError("face endpoints must satisfy J1 <= J2 in W");
    const int w = ring.width();
    std::vector<Monomial> gens;
    for (int j : J1.minus(ring.j_min_prime).indices())
        gens.push_back(Monomial::x(w, j));
    for (int j : ring.j_max_prime.minus(J2).indices())
        gens.push_back(Monomial::y(w, j));
    return MonomialIdeal::generated(ring, std::move(gens));
}

MonomialIdeal component_ideal(const RingSpec& ring, const JSet& J)
{
    if (!ring.in_w(J))
        throw PreconditionError("index set " + J.to_string() + " is not in W");
    return face_ideal(ring, J, J);
}

MonomialIdeal ideal_of_family(const RingSpec& ring, const Family& family)
{
    MonomialIdeal r = MonomialIdeal::unit(ring);
    for (const auto& J : family)
        r = ideal_intersect(r, component_ideal(ring, J));
    return r;
}

Family normalize_family(Family family)
{
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

Family family_intersection(const Family& a, const Family& b)
{
    Family r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

Family face(const RingSpec& ring, const JSet& J1, const JSet& J2)
{
    Family r;
    for (const auto& J : ring.w_elements())
        if (J1.subset_of(J) && J.subset_of(J2))
            r.push_back(J);
    return r;
}

bool is_interval(const Family& family)
{
    for (const auto& a : family)
        for (const auto& b : family) {
            if (!a.subset_of(b))
                continue;
            for (const auto& J : all_jsets(a.width))
                if (a.subset_of(J) && J.subset_of(b) &&
                    !std::binary_search(family.begin(), family.end(), J))
                    return false;
        }
    return true;
}

std::vector<JSet> minimal_elements(const Family& family)
{
    std::vector<JSet> r;
    for (const auto& a : family) {
        bool minimal = true;
        for (const auto& b : family)
            if (b != a && b.subset_of(a))
                minimal = false;
        if (minimal)
            r.push_back(a);
    }
    return r;
}

std::vector<JSet> maximal_elements(const Family& family)
{
    std::vector<JSet> r;
    for (const auto& a : family) {
        bool maximal = true;
        for (const auto& b : family)
            if (b != a && a.subset_of(b))
                maximal = false;
        if (maximal)
            r.push_back(a);
    }
    return r;
}

bool is_capped(const Family& family)
{
    return maximal_elements(family).size() == 1;
}

JSet family_cap(const Family& family)
{
    auto tops = maximal_elements(family);
    if (tops.size() != 1)
        throw PreconditionError("family " + family_to_string(family) + " is not capped");
    return tops.front();
}

std::string family_to_string(const Family& family)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < family.size(); ++i)
        os << (i ? "," : "") << family[i].to_string();
    os << ']';
    return os.str();
}

CheckReport check_lemma_faces(const RingSpec& ring, const JSet& J1, const JSet& J2)
{
    CheckReport rep;
    const Family F = face(ring, J1, J2);
    Family punctured;
    for (const auto& J : F)
        if (J != J1)
            punctured.push_back(J);
    const MonomialIdeal iF = ideal_of_family(ring, F);
    const MonomialIdeal iFx = ideal_of_family(ring, punctured);
    const std::string where = "face " + J1.to_string() + ".." + J2.to_string();
    if (iF != face_ideal(ring, J1, J2))
        rep.fail(where + ": I_F " + iF.to_string() + " differs from its direct description " +
                 face_ideal(ring, J1, J2).to_string());
    const int w = ring.width();
    Monomial prod = Monomial::one(w);
    for (int j : J2.minus(J1).indices())
        prod = prod * Monomial::x(w, j);
    const MonomialIdeal expected = ideal_sum(iF, MonomialIdeal::generated(ring, {prod}));
    if (iFx != expected)
        rep.fail(where + ": I_Fx = " + iFx.to_string() + " but I_F + (prod X) = " +
                 expected.to_string());
    const MonomialIdeal ann = ideal_colon(iF, prod);
    if (ann != component_ideal(ring, J1))
        rep.fail(where + ": (I_F : prod X) = " + ann.to_string() + " but I_J1 = " +
                 component_ideal(ring, J1).to_string());
    return rep;
}

CheckReport check_lemma_ideals(const RingSpec& ring, const Family& a_in, const Family& b_in)
{
    const Family a = normalize_family(a_in);
    const Family b = normalize_family(b_in);
    for (const Family* fam : {&a, &b}) {
        for (const auto& J : *fam)
            if (!ring.in_w(J))
                throw PreconditionError("family member " + J.to_string() + " outside W");
        if (fam->empty() || !is_interval(*fam))
            throw PreconditionError("family " + family_to_string(*fam) + " is not an interval");
        if (!is_capped(*fam))
            throw PreconditionError("family " + family_to_string(*fam) + " is not capped");
    }
    if (family_cap(a) != family_cap(b))
        throw PreconditionError("families have different caps");
    CheckReport rep;
    const MonomialIdeal lhs = ideal_sum(ideal_of_family(ring, a), ideal_of_family(ring, b));
    const MonomialIdeal rhs = ideal_of_family(ring, family_intersection(a, b));
    if (lhs != rhs)
        rep.fail(family_to_string(a) + " + " + family_to_string(b) + ": sum " + lhs.to_string() +
                 " vs " + rhs.to_string());
    return rep;
}

namespace {

struct Induction {
    const RingSpec& ring;
    CheckReport report;
    int steps = 0;
    std::map<Family, bool> done;

    void run(const Family& fam)
    {
        if (done.count(fam))
            return;
        done[fam] = true;
        ++steps;
        if (fam.size() <= 2)
            return;
        const MonomialIdeal whole = ideal_of_family(ring, fam);
        const auto mins = minimal_elements(fam);
        const std::string where = family_to_string(fam);
        if (mins.size() == 1) {
            const JSet bottom = mins.front();
            const JSet cap = family_cap(fam);
            Family rest;
            for (const auto& J : fam)
                if (J != bottom)
                    rest.push_back(J);
            const MonomialIdeal upper = ideal_of_family(ring, rest);
            const int w = ring.width();
            Monomial prod = Monomial::one(w);
            for (int j : cap.minus(bottom).indices())
                prod = prod * Monomial::x(w, j);
            const auto faces = check_lemma_faces(ring, bottom, cap);
            for (const auto& c : faces.counterexamples)
                report.fail(where + ": " + c);
            if (upper != ideal_sum(whole, MonomialIdeal::generated(ring, {prod})))
                report.fail(where + ": quotient is not generated by the face product");
            if (ideal_colon(whole, prod) != component_ideal(ring, bottom))
                report.fail(where + ": quotient is not R/I_J0");
            if (ideal_intersect(upper, component_ideal(ring, bottom)) != whole)
                report.fail(where + ": I_J != I_(J minus J0) meet I_J0");
            run(rest);
            return;
        }
        const JSet m1 = mins[0];
        const JSet m2 = mins[1];
        Family a, b;
        for (const auto& J : fam) {
            if (J != m1)
                a.push_back(J);
            if (J != m2)
                b.push_back(J);
        }
        const Family both = family_intersection(a, b);
        const MonomialIdeal ia = ideal_of_family(ring, a);
        const MonomialIdeal ib = ideal_of_family(ring, b);
        if (ideal_sum(ia, ib) != ideal_of_family(ring, both))
            report.fail(where + ": I_1 + I_2 != I_(1 meet 2)");
        if (ideal_intersect(ia, ib) != whole)
            report.fail(where + ": I_1 meet I_2 != I_J");
        run(a);
        run(b);
        run(both);
    }
};

}  // namespace

CyclicityReport cyclicity_induction_check(const RingSpec& ring, const Family& family_in)
{
    const Family fam = normalize_family(family_in);
    if (fam.empty())
        throw PreconditionError("empty family");
    for (const auto& J : fam)
        if (!ring.in_w(J))
            throw PreconditionError("family member " + J.to_string() + " outside W");
    if (!is_interval(fam))
        throw PreconditionError("family " + family_to_string(fam) + " is not an interval");
    if (!is_capped(fam))
        throw PreconditionError("family " + family_to_string(fam) +
                                " has several maximal elements and cannot be cyclic");
    Induction ind{ring, {}, 0, {}};
    ind.run(fam);
    return CyclicityReport{ind.report, ideal_of_family(ring, fam), ind.steps};
}

std::vector<Family> capped_intervals(const RingSpec& ring)
{
    const auto w = ring.w_elements();
    std::vector<Family> r;
    const std::size_t n = w.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Family fam;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1)
                fam.push_back(w[i]);
        if (is_interval(fam) && is_capped(fam))
            r.push_back(fam);
    }
    return r;
}

}  // namespace gl2

namespace gl2 {

std::string primed_string(const MonomialIdeal& ideal)
{
    if (ideal.is_zero())
        return "(0)";
    if (ideal.is_unit())
        return "(1)";
    const auto slots = ideal.ring().delta.indices();
    auto label = [&](int j) {
        const auto it = std::find(slots.begin(), slots.end(), j);
        return static_cast<int>(it - slots.begin()) + 1;
    };
    // Token (axis, label, exponent) with X = 0, Y = 1.
    using Token = std::tuple<int, int, int>;
    std::vector<std::pair<int, std::vector<Token>>> keyed;
    for (const auto& m : ideal.generators()) {
        std::vector<Token> toks;
        for (int j : slots)
            if (m.x_exp(j) > 0)
                toks.emplace_back(0, label(j), m.x_exp(j));
        for (int j : slots)
            if (m.y_exp(j) > 0)
                toks.emplace_back(1, label(j), m.y_exp(j));
        keyed.emplace_back(m.degree(), std::move(toks));
    }
    std::sort(keyed.begin(), keyed.end());
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i)
            os << ',';
        for (const auto& [axis, lab, e] : keyed[i].second) {
            os << (axis == 0 ? "X'_{j_" : "Y'_{j_") << lab << '}';
            if (e > 1)
                os << '^' << e;
        }
    }
    os << ')';
    return os.str();
}

std::vector<FamilyPairComputation> uncapped_sum_examples(const RingSpec& ring)
{
    const auto slots = ring.delta.indices();
    if (slots.size() != 2)
        throw PreconditionError("the examples need |delta| = 2");
    const JSet lo = ring.j_min_prime;
    const JSet hi = ring.j_max_prime;
    const int j2 = slots[1];
    const std::vector<std::pair<Family, Family>> pairs{
        {{hi}, {lo}},
        {{hi, hi.without(j2)}, {lo.with(j2), lo}},
        {{hi, hi.without(j2)}, {hi, lo}},
    };
    std::vector<FamilyPairComputation> out;
    for (const auto& [a, b] : pairs) {
        const Family fa = normalize_family(a);
        const Family fb = normalize_family(b);
        const auto ia = ideal_of_family(ring, fa);
        const auto ib = ideal_of_family(ring, fb);
        out.push_back({fa, fb, ia, ib, ideal_sum(ia, ib),
                       ideal_of_family(ring, family_intersection(fa, fb))});
    }
    return out;
}

}  // namespace gl2
