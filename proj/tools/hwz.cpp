// hwz: Hurwitz numbers, Weingarten functions, Wishart trace cumulants,
// identity checks and Monte-Carlo cross-checks from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource guard exceeded, 4 internal error.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "hwz/cumulants.hpp"
#include "hwz/errors.hpp"
#include "hwz/hurwitz.hpp"
#include "hwz/identities.hpp"
#include "hwz/mc.hpp"
#include "hwz/serialize.hpp"
#include "hwz/weingarten.hpp"

using nlohmann::json;
using namespace hwz;

namespace {

constexpr int kOk = 0;
constexpr int kVerification = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;
constexpr int kInternal = 4;

constexpr const char* kVersion = "1.0.0";

json envelope(const std::string& command, const Limits& lim, json result) {
    return {{"schema", kSchema},
            {"command", command},
            {"provenance", {{"tool", "hwz"}, {"version", kVersion}, {"limits", to_json(lim)}}},
            {"result", std::move(result)}};
}

Route parse_route(const std::string& s) {
    if (s == "auto") return Route::automatic;
    if (s == "dfs") return Route::dfs;
    if (s == "fast") return Route::fast;
    throw std::invalid_argument("unknown route '" + s + "'");
}

const char* route_name(Route r) {
    switch (r) {
        case Route::dfs: return "dfs";
        case Route::fast: return "fast";
        default: return "auto";
    }
}

struct HurwitzArgs {
    std::string mu, nu, kind = "monotone", route = "auto", format = "json";
    int n = 0;
    int genus = 0;
};

int run_hurwitz(const HurwitzArgs& a, const Limits& lim) {
    if (a.mu.empty() == (a.n == 0)) throw std::invalid_argument("give exactly one of --mu or --n");
    const Monotonicity kind = parse_monotonicity(a.kind);
    const Route route = parse_route(a.route);
    const std::vector<IntPartition> mus = a.mu.empty() ? partitions_of(a.n) : std::vector{IntPartition::parse(a.mu)};

    struct Row {
        IntPartition mu, nu;
        int r;
        HurwitzCount h;
    };
    std::vector<Row> rows;
    for (const auto& mu : mus) {
        HurwitzQuery q{mu, std::nullopt, a.genus, kind};
        if (!a.nu.empty()) q.nu = IntPartition::parse(a.nu);
        for (auto& [nu, h] : count_double_hurwitz(q, route, lim)) rows.push_back({mu, nu, q.r_for(nu), h});
    }

    if (a.format == "csv") {
        std::cout << "mu,nu,genus,kind,r,per_representative,summed\n";
        for (const auto& row : rows)
            std::cout << '"' << row.mu.to_string() << "\",\"" << row.nu.to_string() << "\"," << a.genus << ','
                      << to_string(kind) << ',' << row.r << ',' << row.h.per_representative << ',' << row.h.summed
                      << '\n';
        return kOk;
    }
    json items = json::array();
    for (const auto& row : rows)
        items.push_back({{"mu", to_json(row.mu)},
                         {"nu", to_json(row.nu)},
                         {"r", row.r},
                         {"per_representative", row.h.per_representative.get_str()},
                         {"summed", row.h.summed.get_str()}});
    json result{{"genus", a.genus}, {"kind", to_string(kind)}, {"route", route_name(route)}, {"rows", items}};
    std::cout << envelope("hurwitz", lim, result).dump(2) << '\n';
    return kOk;
}

struct CumulantArgs {
    std::string matrix = "wishart", mu, c, route = "both";
    int gmax = 2;
    bool time_delay = false;
};

json series_output(const CumulantSeries& s, const std::optional<BigRat>& c) {
    json j = to_json(s);
    if (c) {
        json values = json::array();
        for (const auto& a : s.coeffs) values.push_back(to_json(a.eval(*c)));
        j["at_c"] = values;
    }
    return j;
}

int run_cumulant(const CumulantArgs& a, const Limits& lim) {
    if (a.mu.empty()) throw std::invalid_argument("--mu is required");
    const TraceMonomial m{IntPartition::parse(a.mu), parse_ensemble(a.matrix)};
    std::optional<BigRat> c;
    if (!a.c.empty() && a.c != "symbolic") c = parse_rational(a.c);
    if (a.route != "hurwitz" && a.route != "oracle" && a.route != "both")
        throw std::invalid_argument("--route must be hurwitz, oracle or both");

    json result{{"monomial", m.to_string()},
                {"ensemble", to_string(m.ensemble)},
                {"mu", to_json(m.powers)},
                {"gmax", a.gmax},
                {"validity_domain", validity_domain(m)}};
    if (c) result["c"] = to_json(*c);

    std::optional<CumulantSeries> via_hurwitz, via_oracle;
    if (a.route != "oracle") {
        via_hurwitz = scaled_cumulant_hurwitz(m, a.gmax, Route::automatic, lim);
        result["hurwitz"] = series_output(*via_hurwitz, c);
    }
    if (a.route != "hurwitz") {
        via_oracle = scaled_cumulant_oracle(m, a.gmax, lim);
        result["oracle"] = series_output(*via_oracle, c);
    }
    bool agree = true;
    if (via_hurwitz && via_oracle) {
        agree = via_hurwitz->agrees_with(*via_oracle, a.gmax);
        result["agree"] = agree;
    }
    if (a.time_delay) {
        if (m.ensemble != Ensemble::inverse) throw std::invalid_argument("--time-delay needs --matrix inverse");
        json td = json::array();
        for (const auto& v : time_delay_coefficients(m.powers, a.gmax, lim)) td.push_back(to_json(v));
        result["time_delay"] = td;
    }
    std::cout << envelope("cumulant", lim, result).dump(2) << '\n';
    if (!agree) {
        std::cerr << "hwz: the two routes disagree\n";
        return kVerification;
    }
    return kOk;
}

int run_wg(int n, int series_order, const std::string& format, const Limits& lim) {
    if (n < 1) throw std::invalid_argument("--n must be positive");
    const CentralElement w = wg(n, lim);
    std::vector<LaurentSeries> series;
    if (series_order >= 0) series = wg_series(n, series_order, lim);
    const auto& classes = w.classes();
    if (format == "text") {
        for (std::size_t k = 0; k < classes.size(); ++k) {
            std::cout << "Wg" << classes[k].to_string() << " = " << w.values()[k].to_string() << '\n';
            if (!series.empty()) std::cout << "    ~ " << series[k].to_string() << '\n';
        }
        return kOk;
    }
    json items = json::array();
    for (std::size_t k = 0; k < classes.size(); ++k) {
        json item{{"class", to_json(classes[k])}, {"value", to_json(w.values()[k])}};
        if (!series.empty()) {
            json terms = json::object();
            for (const auto& [e, coef] : series[k].terms()) terms[std::to_string(e)] = to_json(coef);
            item["series"] = {{"low", series[k].low()}, {"terms", terms}};
        }
        items.push_back(std::move(item));
    }
    std::cout << envelope("wg", lim, {{"n", n}, {"classes", items}}).dump(2) << '\n';
    return kOk;
}

int run_verify(const std::string& suite, const SuiteOptions& opt, const Limits& lim) {
    const auto reports = run_suite(suite, opt, lim);
    json items = json::array();
    for (const auto& r : reports) items.push_back(to_json(r));
    const bool ok = all_ok(reports);
    json result{{"suite", suite},
                {"options", {{"nmax", opt.nmax}, {"gmax", opt.gmax}, {"dmax", opt.dmax}, {"jobs", opt.jobs}}},
                {"ok", ok},
                {"reports", items}};
    std::cout << envelope("verify", lim, result).dump(2) << '\n';
    for (const auto& r : reports)
        std::cerr << to_string(r.status) << ' ' << r.name << " [" << r.parameters << "] checked " << r.checked << '\n';
    return ok ? kOk : kVerification;
}

struct McArgs {
    int N = 8;
    std::string c = "2";
    int M = 0;
    long samples = 100000;
    std::uint64_t seed = 0;
    std::string targets = "trW,trWinv,trWinv2";
};

int run_monte_carlo(const McArgs& a, const Limits& lim) {
    SamplerConfig cfg;
    cfg.N = a.N;
    if (a.M > 0) {
        cfg.M = a.M;
    } else {
        const BigRat m = parse_rational(a.c) * a.N;
        if (m.get_den() != 1) throw std::invalid_argument("c * N must be an integer");
        cfg.M = static_cast<int>(m.get_num().get_si());
    }
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    std::stringstream ss(a.targets);
    for (std::string t; std::getline(ss, t, ',');) cfg.targets.push_back(McTarget::parse(t));
    const McReport report = run_mc(cfg);
    std::cout << envelope("mc", lim, to_json(report)).dump(2) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz numbers, Weingarten functions and Wishart trace cumulants"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    std::string config;
    bool timing = false;
    app.add_option("--config", config, "JSON file with enumeration limits")->check(CLI::ExistingFile);
    app.add_flag("--timing", timing, "print the elapsed time to stderr");

    HurwitzArgs ha;
    auto* hur = app.add_subcommand("hurwitz", "double Hurwitz numbers (class-summed and per representative)");
    hur->add_option("--mu", ha.mu, "ramification over 0, e.g. 2,1");
    hur->add_option("--n", ha.n, "tabulate every mu and nu of size n");
    hur->add_option("--nu", ha.nu, "ramification over infinity (default: all)");
    hur->add_option("--genus,-g", ha.genus, "genus")->check(CLI::NonNegativeNumber);
    hur->add_option("--kind", ha.kind, "monotone or strict");
    hur->add_option("--route", ha.route, "auto, dfs or fast");
    hur->add_option("--format", ha.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CumulantArgs ca;
    auto* cum = app.add_subcommand("cumulant", "genus expansion of a scaled trace cumulant");
    cum->add_option("--matrix", ca.matrix, "wishart or inverse");
    cum->add_option("--mu", ca.mu, "trace powers, e.g. 2,1")->required();
    cum->add_option("--gmax", ca.gmax, "highest genus")->check(CLI::NonNegativeNumber);
    cum->add_option("--c", ca.c, "rational aspect ratio M/N, or symbolic");
    cum->add_option("--route", ca.route, "hurwitz, oracle or both");
    cum->add_flag("--time-delay", ca.time_delay, "also print the time-delay coefficients");

    int wg_n = 0, wg_order = -1;
    std::string wg_format = "json";
    auto* wgc = app.add_subcommand("wg", "Weingarten function of S_n");
    wgc->add_option("--n", wg_n, "symmetric group degree")->required();
    wgc->add_option("--series", wg_order, "also expand at z = infinity to this order");
    wgc->add_option("--format", wg_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string suite = "all";
    SuiteOptions so;
    auto* ver = app.add_subcommand("verify", "run identity checks");
    ver->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
    ver->add_option("--nmax", so.nmax, "largest n")->check(CLI::PositiveNumber);
    ver->add_option("--gmax", so.gmax, "largest genus")->check(CLI::NonNegativeNumber);
    ver->add_option("--dmax", so.dmax, "largest defect")->check(CLI::NonNegativeNumber);
    ver->add_option("--jobs,-j", so.jobs, "worker threads")->check(CLI::PositiveNumber);

    McArgs ma;
    auto* mc = app.add_subcommand("mc", "Monte-Carlo estimates against exact values");
    mc->add_option("--N", ma.N, "matrix size")->check(CLI::PositiveNumber);
    mc->add_option("--c", ma.c, "aspect ratio, c * N must be an integer");
    mc->add_option("--M", ma.M, "number of columns (overrides --c)");
    mc->add_option("--samples", ma.samples, "sample count")->check(CLI::PositiveNumber);
    mc->add_option("--seed", ma.seed, "seed");
    mc->add_option("--targets", ma.targets, "comma list: trW, trW2, trWinv, vartrW, ...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
        Limits lim = config.empty() ? Limits::from_environment() : Limits::from_file(config);
        default_limits() = lim;
        if (*hur) code = run_hurwitz(ha, lim);
        else if (*cum) code = run_cumulant(ca, lim);
        else if (*wgc) code = run_wg(wg_n, wg_order, wg_format, lim);
        else if (*ver) code = run_verify(suite, so, lim);
        else if (*mc) code = run_monte_carlo(ma, lim);
    } catch (const ResourceGuardError& e) {
        std::cerr << "hwz: " << e.what() << '\n';
        return kGuard;
    } catch (const VerificationFailure& e) {
        std::cerr << "hwz: verification failed: " << e.what() << '\n';
        return kVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hwz: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "hwz: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "hwz: internal error: " << e.what() << '\n';
        return kInternal;
    }
    if (timing) {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        std::cerr << "elapsed " << dt.count() << " s\n";
    }
    return code;
}
