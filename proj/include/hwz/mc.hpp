#pragma once

// Monte-Carlo estimates of trace statistics of W = X X^* / N, X an N x M
// complex Gaussian matrix with E|X_ij|^2 = 1, compared with exact values.

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hwz/algebra.hpp"

namespace hwz {

// tr W^k (power > 0), tr W^{-k} (power < 0), or the variance of that trace.
struct McTarget {
    int power = 1;
    bool variance = false;

    // trW, trW2, trWinv, trWinv2, vartrW, vartrWinv2, ...
    static McTarget parse(const std::string& name);
    std::string name() const;
    bool operator==(const McTarget&) const = default;
};

struct SamplerConfig {
    int N = 1;
    int M = 1;
    long samples = 1000;
    std::uint64_t seed = 0;
    std::vector<McTarget> targets;
    double max_condition = 1e12;

    // Throws std::invalid_argument on M < N, samples < 1, or an inverse target
    // whose expectation diverges (needs M - N >= k for tr W^{-k}).
    void validate() const;
};

// Documented generator: chunk j draws from mt19937_64 seeded with
// splitmix64(seed + j * golden ratio increment); normals by Box-Muller.
inline constexpr const char* kRngName = "mt19937_64/splitmix64-chunks/box-muller";
inline constexpr int kRngVersion = 1;

// Samples are grouped in fixed chunks (independent of the thread count);
// chunks also serve as jackknife blocks.
long chunk_size(long samples);

// Streams the matrices of one chunk, in order.
void sample_wishart(const SamplerConfig& cfg, long chunk,
                    const std::function<void(const Eigen::MatrixXcd& w)>& visit);

struct Estimate {
    McTarget target;
    double value = 0;
    double stderr_ = 0;
    std::optional<BigRat> exact;
    double sigmas = 0;  // |value - exact| / stderr
};

struct McReport {
    SamplerConfig config;
    long accepted = 0;
    long rejected = 0;
    double max_asymmetry = 0;  // max |W - W^*| entry over all samples
    std::vector<Estimate> estimates;

    double rejection_rate() const;
};

// Exact value of a target at (N, c = M/N), from the moment oracle.
std::optional<BigRat> exact_target(const McTarget& t, int N, int M);

McReport run_mc(const SamplerConfig& cfg);
nlohmann::json to_json(const McReport& report);

}  // namespace hwz
