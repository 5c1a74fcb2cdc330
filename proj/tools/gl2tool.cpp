#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gl2/engine_checks.hpp"
#include "gl2/errors.hpp"
#include "gl2/gauge.hpp"
#include "gl2/json_io.hpp"
#include "gl2/monomial.hpp"
#include "gl2/predictor.hpp"
#include "gl2/rhobar.hpp"
#include "gl2/tame_type.hpp"

using namespace gl2;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitViolation = 3;
constexpr std::size_t kMaxCounterexamples = 100;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    int p = 5;
    int f = 1;
    bool allow_three = false;
    std::string type_spec;
    std::string rho_spec;
    std::string lambda_spec;
    std::string jmin;
    std::string jmax;
    int delta = 2;
    std::string check = "faces";
    std::string suite;
    int precision = 0;
    std::string out = "json";
    std::string out_file;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> r;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        r.push_back(item);
    return r;
}

std::int64_t parse_int(const std::string& s, const std::string& what)
{
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size())
            throw UsageError("");
        return v;
    } catch (const std::exception&) {
        throw UsageError("malformed integer '" + s + "' in " + what);
    }
}

Params make_params(const Options& o)
{
    try {
        return Params::make(o.p, o.f, o.allow_three);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

TameType parse_type(const Options& o)
{
    const Params params = make_params(o);
    const auto colon = o.type_spec.find(':');
    if (colon == std::string::npos)
        throw UsageError("type spec must be ps:<a>,<b> or cusp:<a>");
    const std::string kind = o.type_spec.substr(0, colon);
    const auto parts = split(o.type_spec.substr(colon + 1), ',');
    if (kind == "ps" && parts.size() == 2)
        return make_ps_type(params, parse_int(parts[0], "type"), parse_int(parts[1], "type"));
    if (kind == "cusp" && parts.size() == 1)
        return make_cuspidal_type(params, parse_int(parts[0], "type"));
    throw UsageError("type spec must be ps:<a>,<b> or cusp:<a>");
}

RhoBar parse_rho(const Options& o)
{
    const Params params = make_params(o);
    const auto colon = o.rho_spec.find(':');
    if (colon == std::string::npos)
        throw UsageError("parameter spec must be red:<m1>,<m2> or irr:<M>");
    const std::string kind = o.rho_spec.substr(0, colon);
    const auto parts = split(o.rho_spec.substr(colon + 1), ',');
    if (kind == "red" && parts.size() == 2)
        return make_reducible(params, parse_int(parts[0], "rho"), parse_int(parts[1], "rho"));
    if (kind == "irr" && parts.size() == 1)
        return make_irreducible(params, parse_int(parts[0], "rho"));
    throw UsageError("parameter spec must be red:<m1>,<m2> or irr:<M>");
}

JSet parse_bits(const std::string& s, int width, const std::string& what)
{
    const std::int64_t v = parse_int(s, what);
    if (v < 0 || v >= (std::int64_t{1} << width))
        throw UsageError(what + " bitmask out of range");
    return JSet{width, static_cast<std::uint32_t>(v)};
}

std::string digits_list(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string rational_text(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Result of a command: JSON payload, table text and an exit code.
struct Output {
    Json json;
    std::string table;
    int code = kExitOk;
};

Output cmd_ptau(const Options& o)
{
    const TameType tau = parse_type(o);
    Output out{Json::array(), "bits indices\n", kExitOk};
    for (const auto& J : p_tau(tau)) {
        out.json.push_back(J.bits);
        out.table += std::to_string(J.bits) + " " + J.to_string() + "\n";
    }
    return out;
}

Output cmd_jh(const Options& o)
{
    const TameType tau = parse_type(o);
    Output out{Json::array(), "bits indices s d\n", kExitOk};
    for (const auto& e : jh_factors(tau)) {
        out.json.push_back(Json{{"J", to_json(e.J)}, {"weight", to_json(e.weight)}});
        out.table += std::to_string(e.J.bits) + " " + e.J.to_string() + " " +
                     digits_list(e.weight.s) + " " + std::to_string(e.weight.d) + "\n";
    }
    return out;
}

Output cmd_weights(const Options& o)
{
    const RhoBar rho = parse_rho(o);
    const bool generic = is_generic(rho);
    Json ws = Json::array();
    std::string table = std::string("generic ") + (generic ? "yes" : "no") + "\ns d\n";
    for (const auto& w : weight_set(rho)) {
        ws.push_back(to_json(w));
        table += digits_list(w.s) + " " + std::to_string(w.d) + "\n";
    }
    return {Json{{"generic", generic}, {"weights", ws}}, table, kExitOk};
}

Output cmd_interval(const Options& o)
{
    const RhoBar rho = parse_rho(o);
    const TameType tau = parse_type(o);
    const auto iv = weight_interval(rho, tau);
    if (!iv)
        return {Json{{"interval", nullptr}}, "interval none\n", kExitOk};
    return {Json{{"interval", to_json(*iv)}},
            "interval " + std::to_string(iv->j_min.bits) + " " + std::to_string(iv->j_max.bits) +
                " " + iv->j_min.to_string() + " " + iv->j_max.to_string() + "\n",
            kExitOk};
}

Output cmd_gauge(const Options& o)
{
    const TameType tau = parse_type(o);
    const auto idx = gauge_indices(tau);
    Json tables = Json::array();
    std::string table = "family lattice index value\n";
    for (const auto family : {LatticeFamily::Cosocle, LatticeFamily::Socle}) {
        const std::string name = family == LatticeFamily::Cosocle ? "cosocle" : "socle";
        for (const auto& L : idx) {
            GaugeVector g{tau, {}};
            for (const auto& J : idx)
                g.values[J] = Rational(family == LatticeFamily::Cosocle ? eps_cosocle(tau, L, J)
                                                                        : eps_socle(tau, J, L));
            tables.push_back(Json{{"family", name}, {"lattice", L.bits}, {"gauge", to_json(g)}});
            for (const auto& [J, v] : g.values)
                table += name + " " + std::to_string(L.bits) + " " + std::to_string(J.bits) + " " +
                         rational_text(v) + "\n";
        }
    }
    return {Json{{"tau", to_json(tau)}, {"tables", tables}}, table, kExitOk};
}

Output cmd_ideals(const Options& o)
{
    if (o.delta < 1 || o.delta > 4)
        throw UsageError("--delta must lie in [1, 4]");
    if (o.check == "example") {
        if (o.delta != 2)
            throw UsageError("the example check needs --delta 2");
        const RingSpec ring = RingSpec::full(2);
        CheckReport rep;
        Json comps = Json::array();
        std::string table;
        int k = 0;
        for (const auto& c : uncapped_sum_examples(ring)) {
            ++k;
            rep.expect(ideal_subset(c.sum, c.ideal_of_intersection) &&
                           c.sum != c.ideal_of_intersection,
                       "computation " + std::to_string(k) + " does not show a strict inclusion");
            comps.push_back(Json{{"first", family_to_string(c.first)},
                                 {"second", family_to_string(c.second)},
                                 {"ideal_first", primed_string(c.ideal_first)},
                                 {"ideal_second", primed_string(c.ideal_second)},
                                 {"sum", primed_string(c.sum)},
                                 {"ideal_of_intersection", primed_string(c.ideal_of_intersection)}});
            table += "computation " + std::to_string(k) + "\n";
            table += "  first " + family_to_string(c.first) + "\n";
            table += "  second " + family_to_string(c.second) + "\n";
            table += "  ideal_first " + primed_string(c.ideal_first) + "\n";
            table += "  ideal_second " + primed_string(c.ideal_second) + "\n";
            table += "  sum " + primed_string(c.sum) + "\n";
            table += "  ideal_of_intersection " + primed_string(c.ideal_of_intersection) + "\n";
        }
        Json j = to_json(rep);
        j["computations"] = comps;
        table = std::string("pass ") + (rep.pass ? "yes" : "no") + "\ncases " +
                std::to_string(rep.cases) + "\n" + table;
        return {j, table, rep.pass ? kExitOk : kExitViolation};
    }
    const RingSpec ring = RingSpec::full(o.delta);
    CheckReport rep;
    if (o.check == "faces") {
        for (const auto& J1 : ring.w_elements())
            for (const auto& J2 : ring.w_elements())
                if (J1.subset_of(J2)) {
                    CheckReport r = check_lemma_faces(ring, J1, J2);
                    r.cases = 1;
                    rep.absorb(r);
                }
    } else if (o.check == "capped") {
        const auto capped = capped_intervals(ring);
        for (const auto& a : capped)
            for (const auto& b : capped)
                if (family_cap(a) == family_cap(b)) {
                    CheckReport r = check_lemma_ideals(ring, a, b);
                    r.cases = 1;
                    rep.absorb(r);
                }
    } else {
        throw UsageError("--check must be faces, capped or example");
    }
    std::string table = std::string("pass ") + (rep.pass ? "yes" : "no") + "\ncases " +
                        std::to_string(rep.cases) + "\n";
    for (const auto& c : rep.counterexamples)
        table += "counterexample " + c + "\n";
    return {to_json(rep), table, rep.pass ? kExitOk : kExitViolation};
}

Output cmd_predict(const Options& o)
{
    const TameType tau = parse_type(o);
    const int f = tau.params().f();
    JSet lo{}, hi{};
    if (!o.rho_spec.empty()) {
        const auto iv = weight_interval(parse_rho(o), tau);
        if (!iv)
            throw UsageError("no JH factor of the type lies in the weight set");
        lo = iv->j_min;
        hi = iv->j_max;
    } else {
        if (o.jmin.empty() || o.jmax.empty())
            throw UsageError("give --jmin and --jmax, or --rho");
        lo = parse_bits(o.jmin, f, "--jmin");
        hi = parse_bits(o.jmax, f, "--jmax");
    }
    DefSpaceData data = [&] {
        try {
            return DefSpaceData::make(tau, lo, hi);
        } catch (const PreconditionError& e) {
            throw UsageError(e.what());
        }
    }();
    Point lambda;
    if (!o.lambda_spec.empty())
        for (const auto& part : split(o.lambda_spec, ','))
            try {
                lambda.x_val.push_back(parse_rational(part));
            } catch (const Error& e) {
                throw UsageError(e.what());
            }
    if (lambda.x_val.size() != static_cast<std::size_t>(data.delta().size()))
        throw UsageError("--lambda needs " + std::to_string(data.delta().size()) + " values");
    const Json dj{{"j_min", to_json(data.j_min)},
                  {"j_max", to_json(data.j_max)},
                  {"j_base", to_json(data.j_base)},
                  {"j_min_prime", to_json(data.j_min_prime)},
                  {"j_max_prime", to_json(data.j_max_prime)}};
    std::string table = "j_min " + std::to_string(data.j_min.bits) + "\nj_max " +
                        std::to_string(data.j_max.bits) + "\nj_base " +
                        std::to_string(data.j_base.bits) + "\n";
    const Prediction pred = predict_lattice(data, lambda);
    if (const auto* marker = std::get_if<SocleLatticeMarker>(&pred)) {
        table += "socle_lattice " + std::to_string(marker->J.bits) + "\n";
        return {Json{{"data", dj}, {"socle_lattice", to_json(marker->J)}}, table, kExitOk};
    }
    const GaugeVector& g = std::get<GaugeVector>(pred);
    std::string lattice;
    for (const auto& J : gauge_indices(tau)) {
        if (!lattice.empty())
            lattice += " + ";
        lattice += "p^" + rational_text(varpi_set_valuation(data, lambda, J)) + " L" +
                   J.to_string();
    }
    table += "index value\n";
    for (const auto& [J, v] : g.values)
        table += std::to_string(J.bits) + " " + rational_text(v) + "\n";
    table += "lattice " + lattice + "\n";
    return {Json{{"data", dj}, {"gauge", to_json(g)}, {"lattice", lattice}}, table, kExitOk};
}

Output cmd_verify(const Options& o)
{
    std::optional<TameType> tau;
    if (!o.type_spec.empty())
        tau = parse_type(o);
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end())
        throw UsageError("unknown suite '" + o.suite + "'");
    if (o.suite != "ideals" && o.suite != "p3")
        (void)make_params(o);
    SuiteOutcome res = run_suite(o.suite, o.p, o.f, tau, o.precision);
    const std::size_t total = res.report.counterexamples.size();
    if (total > kMaxCounterexamples)
        res.report.counterexamples.resize(kMaxCounterexamples);
    Json j = to_json(res);
    j["counterexamples_total"] = total;
    std::string table = "suite " + res.suite + "\np " + std::to_string(res.p) + "\nf " +
                        std::to_string(res.f) + "\npass " + (res.report.pass ? "yes" : "no") +
                        "\ncases " + std::to_string(res.report.cases) + "\n";
    for (const auto& c : res.report.counterexamples)
        table += "counterexample " + c + "\n";
    std::ostringstream secs;
    secs << res.seconds;
    table += "seconds " + secs.str() + "\n";
    return {j, table, res.report.pass ? kExitOk : kExitViolation};
}

Json config_json(const std::string& command, const Options& o)
{
    Json c{{"command", command}, {"p", o.p}, {"f", o.f}, {"out", o.out}};
    if (o.allow_three)
        c["allow_p3"] = true;
    if (!o.type_spec.empty())
        c["type"] = o.type_spec;
    if (!o.rho_spec.empty())
        c["rho"] = o.rho_spec;
    if (command == "predict") {
        c["jmin"] = o.jmin;
        c["jmax"] = o.jmax;
        c["lambda"] = o.lambda_spec;
    }
    if (command == "ideals") {
        c["delta"] = o.delta;
        c["check"] = o.check;
    }
    if (command == "verify") {
        c["suite"] = o.suite;
        c["precision"] = o.precision;
    }
    if (!o.out_file.empty())
        c["out_file"] = o.out_file;
    return c;
}

int default_precision()
{
    const char* env = std::getenv("GL2_PRECISION");
    if (!env || !*env)
        return 0;
    const std::int64_t v = parse_int(env, "GL2_PRECISION");
    if (v < 0 || v > 16)
        throw UsageError("GL2_PRECISION must lie in [0, 16]");
    return static_cast<int>(v);
}

int run(int argc, char** argv)
{
    CLI::App app{"Serre weight, tame type and lattice gauge toolkit"};
    app.require_subcommand(1);
    Options o;
    try {
        o.precision = default_precision();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "residue characteristic")->capture_default_str();
        sub->add_option("--f", o.f, "residue degree")->capture_default_str();
        sub->add_flag("--allow-p3", o.allow_three, "accept p = 3");
        sub->add_option("--out", o.out, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
        sub->add_option("--out-file", o.out_file, "write the result to this file");
    };
    auto* ptau = app.add_subcommand("ptau", "index sets of the JH factors");
    auto* jh = app.add_subcommand("jh", "JH factors of a type");
    auto* weights = app.add_subcommand("weights", "weight set of a semisimple parameter");
    auto* interval = app.add_subcommand("interval", "modular interval of a parameter and type");
    auto* gauge = app.add_subcommand("gauge", "gauge tables of both lattice families");
    auto* ideals = app.add_subcommand("ideals", "monomial ideal checks");
    auto* predict = app.add_subcommand("predict", "predicted lattice at a point");
    auto* verify = app.add_subcommand("verify", "verification suites");
    for (auto* sub : {ptau, jh, weights, interval, gauge, ideals, predict, verify})
        common(sub);
    for (auto* sub : {ptau, jh, interval, gauge, predict})
        sub->add_option("--type,--tau", o.type_spec, "ps:<a>,<b> or cusp:<a>")->required();
    verify->add_option("--type,--tau", o.type_spec, "ps:<a>,<b> or cusp:<a>");
    for (auto* sub : {weights, interval})
        sub->add_option("--rho", o.rho_spec, "red:<m1>,<m2> or irr:<M>")->required();
    predict->add_option("--rho", o.rho_spec, "derive the interval from this parameter");
    predict->add_option("--jmin", o.jmin, "bitmask of j_min");
    predict->add_option("--jmax", o.jmax, "bitmask of j_max");
    predict->add_option("--lambda", o.lambda_spec, "valuations of X_j for j in delta, n/d list");
    ideals->add_option("--delta", o.delta, "size of delta")->capture_default_str();
    ideals->add_option("--check", o.check, "faces, capped or example")
        ->check(CLI::IsMember({"faces", "capped", "example"}))
        ->capture_default_str();
    verify->add_option("--suite", o.suite, "suite name")->required();
    verify->add_option("--precision", o.precision, "p-adic precision (0 selects the default)")
        ->check(CLI::Range(0, 16));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::cerr << "# config " << config_json(command, o).dump() << "\n";
    Output out;
    try {
        if (command == "ptau")
            out = cmd_ptau(o);
        else if (command == "jh")
            out = cmd_jh(o);
        else if (command == "weights")
            out = cmd_weights(o);
        else if (command == "interval")
            out = cmd_interval(o);
        else if (command == "gauge")
            out = cmd_gauge(o);
        else if (command == "ideals")
            out = cmd_ideals(o);
        else if (command == "predict")
            out = cmd_predict(o);
        else
            out = cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const ParameterError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return kExitComputation;
    }

    const std::string text = o.out == "json" ? out.json.dump(2) + "\n" : out.table;
    if (o.out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(o.out_file);
        if (!file) {
            std::cerr << "cannot write " << o.out_file << "\n";
            return kExitComputation;
        }
        file << text;
    }
    return out.code;
}

}  // namespace

int main(int argc, char** argv)
{
    return run(argc, argv);
}
