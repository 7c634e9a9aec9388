#pragma once

#include <cstdint>
#include <optional>

#include "gcdel/gc.hpp"

namespace gcdel {

struct TrialConfig {
    GcParams code;
    long trials = 10000;
    std::uint64_t master_seed = 0;
    int jobs = 1;        ///< worker threads; results are independent of this
    bool timing = false; ///< collect mean decode time (non-deterministic field)
};

struct FailureStats {
    long trials = 0;
    long failures = 0;      ///< Ambiguous verdicts
    long wrong_decodes = 0; ///< Success with the wrong message; must stay 0
    long no_valid_case = 0; ///< must stay 0 when <= delta deletions are injected
    double rate = 0.0;
    double ci_low = 0.0;  ///< 95% Clopper-Pearson
    double ci_high = 0.0;
    double rate_R = 0.0;  ///< code rate k/n
    std::uint64_t case_count = 0; ///< hypotheses per full-delta split
    std::optional<double> mean_decode_us;
};

/// Monte Carlo estimate of the decoding failure probability: per trial,
/// draw a uniform message, encode, delete `delta` uniformly random
/// positions from the full codeword, decode, tally the verdict.
/// Deterministic given (config, master_seed) for any job count.
FailureStats run_trials(const TrialConfig& config);

struct ExhaustiveStats {
    std::uint64_t instances = 0; ///< 2^k * C(n, delta)
    std::uint64_t failures = 0;
    std::uint64_t wrong_decodes = 0;
    std::uint64_t no_valid_case = 0;
    double rate = 0.0; ///< failures / instances, exact ratio
};

/// Exact failure rate over every message and every deletion pattern.
/// Throws ConfigError with a size estimate when the instance exceeds
/// `work_limit` case evaluations (default 5e9).
ExhaustiveStats exhaustive_failure_rate(const GcParams& params,
                                        std::uint64_t work_limit = 5'000'000'000ULL);

/// The closed-form single-deletion bound 2 / (k^(c-2) * log2(k)).
/// Requires c >= 2 and k a power of two.
double bound_delta1(int k, int c);

struct RateReport {
    double R = 0.0;                ///< k / n
    int n = 0;                     ///< k + c*(delta+1)*ell
    int redundancy_bits = 0;       ///< c*(delta+1)*ell
    std::uint64_t case_count = 0;  ///< C(ceil(k/ell) + delta - 1, delta)
};

/// Pure arithmetic on (k, delta, c, ell); does not require ell | k, so it
/// can report on configurations like k=512, ell=9.
RateReport rate_and_case_report(int k, int delta, int c, int ell);

/// 95% (or other) Clopper-Pearson interval for f failures in n trials.
std::pair<double, double> clopper_pearson(long failures, long trials, double confidence = 0.95);

} // namespace gcdel
