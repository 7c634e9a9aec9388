#include "gcdel/experiments.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

#include "gcdel/errors.hpp"
#include "gcdel/rng.hpp"

namespace gcdel {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw ArgumentError("binomial: result does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

// Regularized incomplete beta via the standard continued fraction.
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-14;
    constexpr double kFpMin = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

double betai(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                               a * std::log(x) + b * std::log(1.0 - x));
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

// Quantile of Beta(a, b) by bisection; deterministic and plenty accurate
// for confidence bounds.
double beta_inv(double p, double a, double b) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (betai(a, b, mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::pair<double, double> clopper_pearson(long failures, long trials, double confidence) {
    if (trials <= 0 || failures < 0 || failures > trials)
        throw ArgumentError("clopper_pearson: need 0 <= failures <= trials, trials > 0");
    const double alpha = 1.0 - confidence;
    const double f = static_cast<double>(failures);
    const double n = static_cast<double>(trials);
    const double low = failures == 0 ? 0.0 : beta_inv(alpha / 2.0, f, n - f + 1.0);
    const double high = failures == trials ? 1.0 : beta_inv(1.0 - alpha / 2.0, f + 1.0, n - f);
    return {low, high};
}

FailureStats run_trials(const TrialConfig& config) {
    const GcCode code(config.code);
    const int k = code.k();
    const int n = code.codeword_bits();
    const int delta = code.delta();
    const long trials = config.trials;
    if (trials <= 0) throw ArgumentError("run_trials: trials must be positive");

    int jobs = config.jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : config.jobs;
    jobs = static_cast<int>(std::clamp<long>(jobs, 1, std::min<long>(trials, 256)));

    struct Tally {
        long failures = 0;
        long wrong = 0;
        long novalid = 0;
        std::uint64_t usSum = 0;
    };
    std::vector<Tally> tallies(static_cast<std::size_t>(jobs));

    auto worker = [&](int w) {
        Tally& t = tallies[static_cast<std::size_t>(w)];
        for (long i = w; i < trials; i += jobs) {
            Rng rng = Rng::for_trial(config.master_seed, static_cast<std::uint64_t>(i));
            const BitString u = rng.random_bits(static_cast<std::size_t>(k));
            const BitString x = code.encode(u);
            const auto positions =
                rng.sample_deletion_positions(static_cast<std::size_t>(n), static_cast<std::size_t>(delta));
            const BitString y = delete_at(x, positions);

            std::chrono::steady_clock::time_point t0;
            if (config.timing) t0 = std::chrono::steady_clock::now();
            const DecodeOutcome out = code.decode(y);
            if (config.timing) {
                const auto t1 = std::chrono::steady_clock::now();
                t.usSum += static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
            }

            switch (out.verdict) {
            case DecodeOutcome::Verdict::Success:
                if (out.message != u) ++t.wrong;
                break;
            case DecodeOutcome::Verdict::Ambiguous:
                ++t.failures;
                break;
            case DecodeOutcome::Verdict::NoValidCase:
                ++t.novalid;
                break;
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    FailureStats stats;
    stats.trials = trials;
    std::uint64_t usSum = 0;
    for (const auto& t : tallies) {
        stats.failures += t.failures;
        stats.wrong_decodes += t.wrong;
        stats.no_valid_case += t.novalid;
        usSum += t.usSum;
    }
    stats.rate = static_cast<double>(stats.failures) / static_cast<double>(trials);
    std::tie(stats.ci_low, stats.ci_high) = clopper_pearson(stats.failures, trials);
    stats.rate_R = static_cast<double>(k) / static_cast<double>(n);
    stats.case_count = composition_count(code.block_count(), delta);
    if (config.timing)
        stats.mean_decode_us = static_cast<double>(usSum) / static_cast<double>(trials);
    return stats;
}

static ExhaustiveStats exhaustive_impl(const GcCode& code, std::uint64_t work_limit) {
    const int k = code.k();
    const int n = code.codeword_bits();
    const unsigned delta = static_cast<unsigned>(code.delta());
    if (k > 30) throw ConfigError("exhaustive_failure_rate: 2^k messages is too many (k > 30)");

    const std::uint64_t messages = 1ULL << k;
    const std::uint64_t patterns = binomial(static_cast<std::uint64_t>(n), delta);
    std::uint64_t casesPerDecode = 0;
    for (unsigned d = 0; d <= delta; ++d)
        casesPerDecode += composition_count(code.block_count(), static_cast<int>(d));
    const unsigned __int128 work = static_cast<unsigned __int128>(messages) * patterns * casesPerDecode;
    if (work > work_limit)
        throw ConfigError("exhaustive_failure_rate: instance needs about " +
                          std::to_string(static_cast<double>(work)) +
                          " case evaluations, above the limit of " + std::to_string(work_limit));

    ExhaustiveStats stats;
    stats.instances = messages * patterns;

    std::vector<std::size_t> positions(delta);
    for (std::uint64_t mv = 0; mv < messages; ++mv) {
        BitString u;
        for (int b = k - 1; b >= 0; --b)
            u.push_back(static_cast<std::uint8_t>((mv >> b) & 1));
        const BitString x = code.encode(u);

        // iterate all delta-subsets of [1, n]
        for (unsigned i = 0; i < delta; ++i) positions[i] = i + 1;
        for (;;) {
            const BitString y = delete_at(x, positions);
            const DecodeOutcome out = code.decode(y);
            switch (out.verdict) {
            case DecodeOutcome::Verdict::Success:
                if (out.message != u) ++stats.wrong_decodes;
                break;
            case DecodeOutcome::Verdict::Ambiguous:
                ++stats.failures;
                break;
            case DecodeOutcome::Verdict::NoValidCase:
                ++stats.no_valid_case;
                break;
            }
            if (delta == 0) break;
            // next combination
            int j = static_cast<int>(delta) - 1;
            while (j >= 0 && positions[static_cast<std::size_t>(j)] ==
                                 static_cast<std::size_t>(n) - (delta - 1 - static_cast<unsigned>(j)))
                --j;
            if (j < 0) break;
            ++positions[static_cast<std::size_t>(j)];
            for (unsigned t = static_cast<unsigned>(j) + 1; t < delta; ++t)
                positions[t] = positions[t - 1] + 1;
        }
    }
    stats.rate = static_cast<double>(stats.failures) / static_cast<double>(stats.instances);
    return stats;
}

ExhaustiveStats exhaustive_failure_rate(const GcParams& params, std::uint64_t work_limit) {
    return exhaustive_impl(GcCode(params), work_limit);
}

double bound_delta1(int k, int c) {
    if (c < 2) throw ArgumentError("bound_delta1: requires c >= 2");
    if (k < 2 || (k & (k - 1)) != 0)
        throw ArgumentError("bound_delta1: k must be a power of two");
    const int log2k = std::bit_width(static_cast<unsigned>(k)) - 1;
    return 2.0 / (std::pow(static_cast<double>(k), c - 2) * static_cast<double>(log2k));
}

RateReport rate_and_case_report(int k, int delta, int c, int ell) {
    if (k < 1 || delta < 0 || c < 1 || ell < 1)
        throw ArgumentError("rate_and_case_report: invalid parameters");
    RateReport rep;
    rep.redundancy_bits = c * (delta + 1) * ell;
    rep.n = k + rep.redundancy_bits;
    rep.R = static_cast<double>(k) / static_cast<double>(rep.n);
    const int K = (k + ell - 1) / ell;
    rep.case_count = composition_count(K, delta);
    return rep;
}

} // namespace gcdel
