#include "gl2/json_io.hpp"

#include <charconv>

#include "gl2/errors.hpp"

namespace gl2 {

Json to_json(const Weight& w)
{
    return Json{{"s", w.s}, {"d", w.d}};
}

Json to_json(const JSet& J)
{
    return Json{{"width", J.width}, {"bits", J.bits}};
}

Json to_json(const TameType& tau)
{
    return Json{{"kind", tau.is_principal_series() ? "ps" : "cusp"},
                {"p", tau.params().p()},
                {"f", tau.params().f()},
                {"exponents", tau.exponents()}};
}

Json to_json(const Rational& r)
{
    if (r.denominator() == 1)
        return Json(r.numerator());
    return Json(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
}

Json to_json(const GaugeVector& g)
{
    Json values = Json::object();
    for (const auto& [J, v] : g.values)
        values[std::to_string(J.bits)] = to_json(v);
    return Json{{"tau", to_json(g.tau)}, {"values", values}};
}

Json to_json(const WeightInterval& interval)
{
    return Json{{"j_min", to_json(interval.j_min)}, {"j_max", to_json(interval.j_max)}};
}

Json to_json(const CheckReport& report)
{
    return Json{{"pass", report.pass},
                {"cases", report.cases},
                {"counterexamples", report.counterexamples}};
}

Json to_json(const FiltrationReport& report)
{
    Json layers = Json::array();
    for (const auto& layer : report.layers) {
        Json l = Json::array();
        for (const auto& e : layer)
            l.push_back(Json{{"J", to_json(e.J)}, {"weight", to_json(e.weight)}});
        layers.push_back(l);
    }
    Json edges = Json::array();
    for (const auto& [a, b] : report.nonsplit_edges)
        edges.push_back(Json::array({a.bits, b.bits}));
    return Json{{"direction", report.direction == FiltrationDirection::Cosocle ? "cosocle" : "socle"},
                {"layers", layers},
                {"nonsplit_edges", edges}};
}

Json to_json(const SuiteOutcome& outcome, bool with_timing)
{
    Json j{{"suite", outcome.suite},
           {"p", outcome.p},
           {"f", outcome.f},
           {"pass", outcome.report.pass},
           {"cases", outcome.report.cases},
           {"counterexamples", outcome.report.counterexamples}};
    if (with_timing)
        j["seconds"] = outcome.seconds;
    return j;
}

namespace {

template <class T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParameterError(std::string("missing JSON field ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("bad JSON field ") + key + ": " + e.what());
    }
}

}  // namespace

Weight weight_from_json(const Json& j)
{
    return Weight{field<std::vector<int>>(j, "s"), field<std::int64_t>(j, "d")};
}

JSet jset_from_json(const Json& j)
{
    JSet J{field<int>(j, "width"), field<std::uint32_t>(j, "bits")};
    if (J.width < 1 || J.width > 31 || (J.bits & ~J.full_mask()) != 0)
        throw RangeError("index set bits exceed its width");
    return J;
}

TameType type_from_json(const Json& j)
{
    const auto kind = field<std::string>(j, "kind");
    const Params params = Params::make(field<int>(j, "p"), field<int>(j, "f"));
    const auto ex = field<std::vector<std::int64_t>>(j, "exponents");
    if (kind == "ps" && ex.size() == 2)
        return make_ps_type(params, ex[0], ex[1]);
    if (kind == "cusp" && ex.size() == 1)
        return make_cuspidal_type(params, ex[0]);
    throw ParameterError("type must be ps with two exponents or cusp with one");
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw ParameterError("rational must be an integer or an n/d string");
}

Rational parse_rational(const std::string& text)
{
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw ParameterError("malformed rational '" + text + "'");
        return v;
    };
    const std::string_view sv(text);
    const auto slash = sv.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(sv));
    const std::int64_t den = parse_int(sv.substr(slash + 1));
    if (den == 0)
        throw ParameterError("zero denominator in '" + text + "'");
    return Rational(parse_int(sv.substr(0, slash)), den);
}

}  // namespace gl2
