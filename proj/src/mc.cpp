#include "hwz/mc.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <regex>

#include "hwz/cumulants.hpp"

namespace hwz {

McTarget McTarget::parse(const std::string& name) {
    static const std::regex grammar(R"((var)?trW(inv)?([1-9][0-9]*)?)");
    std::smatch m;
    if (!std::regex_match(name, m, grammar))
        throw std::invalid_argument("unknown target '" + name + "' (expected e.g. trW, trW2, trWinv, vartrW)");
    McTarget t;
    t.variance = m[1].matched;
    t.power = m[3].matched ? std::stoi(m[3].str()) : 1;
    if (m[2].matched) t.power = -t.power;
    return t;
}

std::string McTarget::name() const {
    std::string s = variance ? "vartrW" : "trW";
    if (power < 0) s += "inv";
    if (std::abs(power) != 1) s += std::to_string(std::abs(power));
    return s;
}

void SamplerConfig::validate() const {
    if (N < 1 || M < N) throw std::invalid_argument("sampler needs 1 <= N <= M");
    if (samples < 1) throw std::invalid_argument("sampler needs at least one sample");
    for (const auto& t : targets) {
        if (t.power == 0) throw std::invalid_argument("target power must be nonzero");
        const int k = std::abs(t.power) * (t.variance ? 2 : 1);
        if (t.power < 0 && M - N < k)
            throw std::invalid_argument("E " + t.name() + " diverges unless M - N >= " + std::to_string(k));
    }
}

long chunk_size(long samples) { return samples >= 20000 ? 1000 : std::max(1L, samples / 20); }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Complex normal with variance 1/2 per component (Box-Muller); spelled out
// because std::normal_distribution output is implementation-defined.
std::complex<double> complex_normal(std::mt19937_64& rng) {
    constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
    const double u1 = static_cast<double>((rng() >> 11) + 1) * scale;
    const double u2 = static_cast<double>(rng() >> 11) * scale;
    const double radius = std::sqrt(-std::log(u1));
    const double angle = 2 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

long num_chunks(const SamplerConfig& cfg) {
    const long size = chunk_size(cfg.samples);
    return (cfg.samples + size - 1) / size;
}

struct ChunkResult {
    long accepted = 0;
    long rejected = 0;
    double max_asymmetry = 0;
    std::vector<double> s1;
    std::vector<double> s2;
};

double trace_power(const Eigen::MatrixXcd& a, int k) {
    Eigen::MatrixXcd p = a;
    for (int i = 1; i < k; ++i) p = p * a;
    return p.trace().real();
}

ChunkResult run_chunk(const SamplerConfig& cfg, long chunk) {
    ChunkResult out;
    out.s1.assign(cfg.targets.size(), 0.0);
    out.s2.assign(cfg.targets.size(), 0.0);
    bool need_inverse = false;
    for (const auto& t : cfg.targets) need_inverse |= t.power < 0;
    const double n = cfg.N;

    sample_wishart(cfg, chunk, [&](const Eigen::MatrixXcd& w) {
        out.max_asymmetry = std::max(out.max_asymmetry, (w - w.adjoint()).cwiseAbs().maxCoeff());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(w, Eigen::EigenvaluesOnly);
        const double lo = eig.eigenvalues().minCoeff();
        const double hi = eig.eigenvalues().maxCoeff();
        if (!(lo > 0) || hi / lo > cfg.max_condition) {
            ++out.rejected;
            return;
        }
        Eigen::MatrixXcd inverse;
        if (need_inverse) {
            Eigen::LLT<Eigen::MatrixXcd> llt(w);
            if (llt.info() != Eigen::Success) {
                ++out.rejected;
                return;
            }
            // W = L L^*, so W^{-1} = Y^* Y with Y = L^{-1} from a triangular solve
            const Eigen::MatrixXcd y =
                llt.matrixL().solve(Eigen::MatrixXcd::Identity(cfg.N, cfg.N));
            inverse = y.adjoint() * y;
        }
        ++out.accepted;
        for (std::size_t i = 0; i < cfg.targets.size(); ++i) {
            const auto& t = cfg.targets[i];
            const double v = trace_power(t.power > 0 ? w : inverse, std::abs(t.power)) / n;
            out.s1[i] += v;
            out.s2[i] += v * v;
        }
    });
    return out;
}

// Estimator from block sums; variance targets use the unbiased sample variance.
double estimator(const McTarget& t, double s1, double s2, double count) {
    const double mean = s1 / count;
    if (!t.variance) return mean;
    return (s2 - s1 * mean) / (count - 1);
}

double to_double(const BigRat& q) { return q.get_d(); }

}  // namespace

void sample_wishart(const SamplerConfig& cfg, long chunk, const std::function<void(const Eigen::MatrixXcd&)>& visit) {
    cfg.validate();
    const long size = chunk_size(cfg.samples);
    const long first = chunk * size;
    const long last = std::min(cfg.samples, first + size);
    std::mt19937_64 rng(splitmix64(cfg.seed + static_cast<std::uint64_t>(chunk) * 0x9e3779b97f4a7c15ULL));
    Eigen::MatrixXcd x(cfg.N, cfg.M);
    for (long s = first; s < last; ++s) {
        for (int j = 0; j < cfg.M; ++j)
            for (int i = 0; i < cfg.N; ++i) x(i, j) = complex_normal(rng);
        const Eigen::MatrixXcd w = (x * x.adjoint()) / static_cast<double>(cfg.N);
        visit(w);
    }
}

double McReport::rejection_rate() const {
    const long total = accepted + rejected;
    return total == 0 ? 0.0 : static_cast<double>(rejected) / static_cast<double>(total);
}

std::optional<BigRat> exact_target(const McTarget& t, int N, int M) {
    const BigRat c(M, N);
    const int k = std::abs(t.power);
    const Ensemble e = t.power > 0 ? Ensemble::wishart : Ensemble::inverse;
    try {
        if (!t.variance)
            return evaluate(trace_moment_oracle({IntPartition({k}), e}), c, N) / BigRat(N);
        // C_2(tr X^k, tr X^k) = N^{-2} C_2(Tr X^k, Tr X^k)
        return evaluate(trace_cumulant_oracle({IntPartition({k, k}), e}), c, N) / BigRat(N * N);
    } catch (const std::domain_error&) {
        return std::nullopt;  // pole: the expectation does not exist at this (N, M)
    }
}

McReport run_mc(const SamplerConfig& cfg) {
    cfg.validate();
    const long chunks = num_chunks(cfg);
    std::vector<ChunkResult> results(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (long b = 0; b < chunks; ++b) results[b] = run_chunk(cfg, b);

    McReport report;
    report.config = cfg;
    const std::size_t nt = cfg.targets.size();
    std::vector<double> t1(nt, 0.0), t2(nt, 0.0);
    for (const auto& r : results) {  // fixed order: reproducible for any thread count
        report.accepted += r.accepted;
        report.rejected += r.rejected;
        report.max_asymmetry = std::max(report.max_asymmetry, r.max_asymmetry);
        for (std::size_t i = 0; i < nt; ++i) {
            t1[i] += r.s1[i];
            t2[i] += r.s2[i];
        }
    }
    const double count = static_cast<double>(report.accepted);
    for (std::size_t i = 0; i < nt; ++i) {
        const McTarget& t = cfg.targets[i];
        Estimate est;
        est.target = t;
        est.value = estimator(t, t1[i], t2[i], count);

        // delete-one-block jackknife over the chunks
        std::vector<double> leave_out;
        for (const auto& r : results) {
            const double rest = count - static_cast<double>(r.accepted);
            if (rest < 2) continue;
            leave_out.push_back(estimator(t, t1[i] - r.s1[i], t2[i] - r.s2[i], rest));
        }
        const double blocks = static_cast<double>(leave_out.size());
        if (blocks >= 2) {
            double mean = 0;
            for (double v : leave_out) mean += v;
            mean /= blocks;
            double ss = 0;
            for (double v : leave_out) ss += (v - mean) * (v - mean);
            est.stderr_ = std::sqrt((blocks - 1) / blocks * ss);
        }
        est.exact = exact_target(t, cfg.N, cfg.M);
        if (est.exact && est.stderr_ > 0) est.sigmas = std::abs(est.value - to_double(*est.exact)) / est.stderr_;
        report.estimates.push_back(est);
    }
    return report;
}

nlohmann::json to_json(const McReport& report) {
    using nlohmann::json;
    const auto& cfg = report.config;
    json targets = json::array();
    for (const auto& t : cfg.targets) targets.push_back(t.name());
    json estimates = json::array();
    for (const auto& e : report.estimates) {
        json item{{"target", e.target.name()}, {"value", e.value}, {"stderr", e.stderr_}};
        if (e.exact) {
            item["exact"] = e.exact->get_str();
            item["exact_value"] = e.exact->get_d();
            item["sigmas"] = e.sigmas;
        } else {
            item["exact"] = nullptr;
            item["exact_value"] = nullptr;
            item["sigmas"] = nullptr;
        }
        estimates.push_back(std::move(item));
    }
    return json{{"rng", {{"name", kRngName}, {"version", kRngVersion}}},
                {"config",
                 {{"N", cfg.N},
                  {"M", cfg.M},
                  {"c", BigRat(cfg.M, cfg.N).get_str()},
                  {"samples", cfg.samples},
                  {"seed", cfg.seed},
                  {"chunk_size", chunk_size(cfg.samples)},
                  {"max_condition", cfg.max_condition},
                  {"targets", targets}}},
                {"estimates", estimates},
                {"rejections", {{"count", report.rejected}, {"rate", report.rejection_rate()}}},
                {"accepted", report.accepted},
                {"max_asymmetry", report.max_asymmetry}};
}

}  // namespace hwz
