// gcdel: command-line front end for the Guess & Check deletion-correcting
// codes, the VT baseline, the failure-rate experiments and the two-node
// synchronization simulator.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcdel/bitstring.hpp"
#include "gcdel/errors.hpp"
#include "gcdel/experiments.hpp"
#include "gcdel/gc.hpp"
#include "gcdel/rng.hpp"
#include "gcdel/sync.hpp"

using json = nlohmann::ordered_json;
using namespace gcdel;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDecodeFailure = 1;
constexpr int kExitUsage = 2;

// ---------------------------------------------------------------------------
// bit file I/O
//
// text: ASCII '0'/'1', whitespace ignored, written with a trailing newline.
// raw:  8-byte little-endian bit count, then MSB-first packed bytes.
// Reads auto-detect: any raw file has a zero in byte 7 (bit counts below
// 2^56), text files never do.

BitString read_bits_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot open input file: " + path);
    std::string blob((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (blob.size() >= 8 && blob[7] == '\0') {
        std::uint64_t n = 0;
        for (int i = 7; i >= 0; --i)
            n = (n << 8) | static_cast<std::uint8_t>(blob[static_cast<std::size_t>(i)]);
        if (blob.size() < 8 + (n + 7) / 8)
            throw ArgumentError("raw bit file is truncated: " + path);
        BitString out;
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto byte = static_cast<std::uint8_t>(blob[8 + i / 8]);
            out.push_back(static_cast<std::uint8_t>((byte >> (7 - i % 8)) & 1));
        }
        return out;
    }
    return BitString::from_string(blob);
}

void write_bits_file(const std::string& path, const BitString& bits, const std::string& format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot open output file: " + path);
    if (format == "raw") {
        const std::uint64_t n = bits.size();
        for (int i = 0; i < 8; ++i)
            out.put(static_cast<char>((n >> (8 * i)) & 0xFF));
        std::uint8_t byte = 0;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            byte = static_cast<std::uint8_t>((byte << 1) | bits[i]);
            if (i % 8 == 7) {
                out.put(static_cast<char>(byte));
                byte = 0;
            }
        }
        if (bits.size() % 8 != 0)
            out.put(static_cast<char>(byte << (8 - bits.size() % 8)));
    } else if (format == "text") {
        out << bits.to_string() << '\n';
    } else {
        throw ConfigError("unknown bit file format: " + format);
    }
}

// ---------------------------------------------------------------------------
// record output

std::string double_repr(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

void emit_record(const json& record, const std::vector<std::string>& csvColumns,
                 const std::string& format, const std::string& outputPath) {
    std::string text;
    if (format == "csv") {
        std::ostringstream os;
        for (std::size_t i = 0; i < csvColumns.size(); ++i)
            os << (i ? "," : "") << csvColumns[i];
        os << '\n';
        for (std::size_t i = 0; i < csvColumns.size(); ++i) {
            if (i) os << ',';
            const auto& v = record.at(csvColumns[i]);
            if (v.is_null()) {
                // empty cell
            } else if (v.is_string()) {
                os << v.get<std::string>();
            } else if (v.is_number_float()) {
                os << double_repr(v.get<double>());
            } else {
                os << v.dump();
            }
        }
        os << '\n';
        text = os.str();
    } else if (format == "json") {
        text = record.dump(2) + "\n";
    } else {
        throw ConfigError("unknown record format: " + format);
    }
    if (outputPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outputPath, std::ios::binary);
        if (!out) throw ArgumentError("cannot open output file: " + outputPath);
        out << text;
    }
}

// Flat key=value config support: keys become --key flags inserted after the
// subcommand name, skipping keys already given explicitly so that command-line
// flags take precedence. '#' starts a comment.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string configPath;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) configPath = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) configPath = args[i].substr(9);
    }
    if (configPath.empty()) return args;

    std::ifstream in(configPath);
    if (!in) throw ConfigError("cannot open config file: " + configPath);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) pairs.emplace_back(key, val);
    }

    auto given = [&](const std::string& key) {
        const std::string flag = "--" + key;
        for (std::size_t i = 1; i < args.size(); ++i)
            if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) return true;
        return false;
    };

    // insert right after the subcommand name (the first non-flag argument)
    std::size_t pos = 1;
    while (pos < args.size() && args[pos].rfind("--", 0) == 0) ++pos;
    if (pos < args.size()) ++pos;
    for (const auto& [key, val] : pairs) {
        if (key == "config" || given(key)) continue;
        args.insert(args.begin() + static_cast<std::ptrdiff_t>(pos), "--" + key + "=" + val);
        ++pos;
    }
    return args;
}

std::string poly_hex(std::uint32_t poly) {
    std::ostringstream os;
    os << "0x" << std::hex << std::uppercase << poly;
    return os.str();
}

const char* mode_name(MdsMode m) {
    switch (m) {
    case MdsMode::Auto: return "auto";
    case MdsMode::PaperCompatible: return "paper_compatible";
    case MdsMode::Cauchy: return "cauchy";
    }
    return "?";
}

// shared GC code flags
struct CodeOpts {
    int k = 0;
    int delta = 0;
    int c = 0;
    int ell = 0;
    std::string poly;
    std::string mdsMode = "auto";

    GcParams params() const {
        GcParams p;
        p.k = k;
        p.delta = delta;
        p.c = c;
        p.ell = ell;
        if (!poly.empty()) p.prim_poly = static_cast<std::uint32_t>(std::stoul(poly, nullptr, 0));
        if (mdsMode == "auto") p.mds_mode = MdsMode::Auto;
        else if (mdsMode == "paper_compatible") p.mds_mode = MdsMode::PaperCompatible;
        else if (mdsMode == "cauchy") p.mds_mode = MdsMode::Cauchy;
        else throw ConfigError("unknown mds mode: " + mdsMode);
        return p;
    }
};

void add_code_opts(CLI::App* cmd, CodeOpts& o, bool needC = true) {
    cmd->add_option("--k", o.k, "message length in bits")->required();
    cmd->add_option("--delta", o.delta, "deletion budget")->required();
    auto* c = cmd->add_option("--c", o.c, "MDS parity symbol count");
    if (needC) c->required();
    cmd->add_option("--ell", o.ell, "block length in bits (default ceil(log2 k))");
    cmd->add_option("--poly", o.poly, "primitive polynomial mask, e.g. 0x13");
    cmd->add_option("--mds-mode", o.mdsMode, "auto | paper_compatible | cauchy")
        ->check(CLI::IsMember({"auto", "paper_compatible", "cauchy"}));
}

json code_config_json(const GcCode& code) {
    json cfg;
    cfg["k"] = code.k();
    cfg["delta"] = code.delta();
    cfg["c"] = code.c();
    cfg["ell"] = code.ell();
    cfg["poly"] = poly_hex(code.field().poly());
    cfg["mds_mode"] = mode_name(code.mds().mode());
    cfg["n"] = code.codeword_bits();
    return cfg;
}

// ---------------------------------------------------------------------------
// subcommands

int run_encode(const CodeOpts& codeOpts, const std::string& input, const std::string& output,
               const std::string& format) {
    const GcCode code(codeOpts.params());
    const BitString u = read_bits_file(input);
    if (static_cast<int>(u.size()) != code.k())
        throw ArgumentError("message file holds " + std::to_string(u.size()) +
                            " bits but k = " + std::to_string(code.k()));
    write_bits_file(output, code.encode(u), format);
    return kExitOk;
}

int run_corrupt(const std::string& input, const std::string& output, const std::string& format,
                int deletions, std::uint64_t seed, const std::string& positionsCsv) {
    const BitString xw = read_bits_file(input);
    std::vector<std::size_t> positions;
    if (!positionsCsv.empty()) {
        std::stringstream ss(positionsCsv);
        std::string tok;
        while (std::getline(ss, tok, ','))
            positions.push_back(std::stoull(tok));
    } else {
        Rng rng = Rng::for_trial(seed, 0);
        positions = rng.sample_deletion_positions(xw.size(), static_cast<std::size_t>(deletions));
    }
    const BitString y = delete_at(xw, positions);
    write_bits_file(output, y, format);

    json sidecar;
    sidecar["input_bits"] = xw.size();
    sidecar["output_bits"] = y.size();
    sidecar["seed"] = seed;
    sidecar["positions"] = positions; // 1-based
    std::ofstream side(output + ".deletions.json", std::ios::binary);
    side << sidecar.dump(2) << "\n";
    return kExitOk;
}

int run_decode(const CodeOpts& codeOpts, const std::string& input, const std::string& output,
               const std::string& format) {
    const GcCode code(codeOpts.params());
    const BitString y = read_bits_file(input);
    const DecodeOutcome out = code.decode(y);

    json report;
    report["config"] = code_config_json(code);
    report["received_bits"] = y.size();
    report["inferred_deletions"] = code.codeword_bits() - static_cast<int>(y.size());
    if (out.success()) {
        report["status"] = "success";
        report["distinct_candidates"] = out.distinct_candidates;
        if (!output.empty()) write_bits_file(output, out.message, format);
        else report["message"] = out.message.to_string();
        std::cout << report.dump(2) << "\n";
        return kExitOk;
    }
    report["status"] = "failure";
    report["reason"] =
        out.verdict == DecodeOutcome::Verdict::Ambiguous ? "ambiguous" : "no_valid_case";
    report["distinct_candidates"] = out.distinct_candidates;
    std::cout << report.dump(2) << "\n";
    return kExitDecodeFailure;
}

int run_experiment(const CodeOpts& codeOpts, long trials, std::uint64_t seed, int jobs,
                   bool timing, const std::string& format, const std::string& output) {
    TrialConfig cfg;
    cfg.code = codeOpts.params();
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.jobs = jobs;
    cfg.timing = timing;
    const FailureStats stats = run_trials(cfg);
    const GcCode code(cfg.code);

    json rec;
    rec["k"] = code.k();
    rec["delta"] = code.delta();
    rec["c"] = code.c();
    rec["ell"] = code.ell();
    rec["trials"] = stats.trials;
    rec["seed"] = seed;
    rec["failures"] = stats.failures;
    rec["wrong_decodes"] = stats.wrong_decodes;
    rec["rate"] = stats.rate;
    rec["ci_low"] = stats.ci_low;
    rec["ci_high"] = stats.ci_high;
    rec["rate_R"] = stats.rate_R;
    rec["case_count"] = stats.case_count;
    if (stats.mean_decode_us) rec["mean_decode_us"] = *stats.mean_decode_us;
    else rec["mean_decode_us"] = nullptr;
    rec["no_valid_case"] = stats.no_valid_case;
    rec["config"] = code_config_json(code);

    emit_record(rec,
                {"k", "delta", "c", "ell", "trials", "seed", "failures", "wrong_decodes", "rate",
                 "ci_low", "ci_high", "rate_R", "case_count", "mean_decode_us"},
                format, output);
    return kExitOk;
}

int run_exhaustive(const CodeOpts& codeOpts, std::uint64_t workLimit, const std::string& format,
                   const std::string& output) {
    const GcParams params = codeOpts.params();
    const ExhaustiveStats stats = exhaustive_failure_rate(params, workLimit);
    const GcCode code(params);

    json rec;
    rec["k"] = code.k();
    rec["delta"] = code.delta();
    rec["c"] = code.c();
    rec["ell"] = code.ell();
    rec["instances"] = stats.instances;
    rec["failures"] = stats.failures;
    rec["wrong_decodes"] = stats.wrong_decodes;
    rec["no_valid_case"] = stats.no_valid_case;
    rec["rate"] = stats.rate;
    rec["config"] = code_config_json(code);
    emit_record(rec,
                {"k", "delta", "c", "ell", "instances", "failures", "wrong_decodes",
                 "no_valid_case", "rate"},
                format, output);
    return kExitOk;
}

int run_bound(int k, int c, const std::string& format, const std::string& output) {
    json rec;
    rec["k"] = k;
    rec["c"] = c;
    rec["bound"] = bound_delta1(k, c);
    emit_record(rec, {"k", "c", "bound"}, format, output);
    return kExitOk;
}

int run_sync(const std::string& input, long length, long d, const std::string& strategyName,
             int delta, int centerBits, int windowSlack, int maxRounds, int anchorRetries,
             std::uint64_t seed, bool verbose, const std::string& format,
             const std::string& output) {
    SyncStrategy strategy;
    if (strategyName == "sync_vt") strategy = SyncStrategy::Vt;
    else if (strategyName == "sync_gc") strategy = SyncStrategy::Gc;
    else throw ConfigError("unknown strategy: " + strategyName);

    Rng rng = Rng::for_trial(seed, 0);
    BitString x;
    if (!input.empty()) {
        x = read_bits_file(input);
    } else if (length > 0) {
        x = rng.random_bits(static_cast<std::size_t>(length));
    } else {
        throw ConfigError("sync: need --input or --length");
    }
    if (d < 0 || static_cast<std::size_t>(d) > x.size())
        throw ConfigError("sync: deletion count out of range");
    const auto positions = rng.sample_deletion_positions(x.size(), static_cast<std::size_t>(d));
    const BitString y = delete_at(x, positions);

    SyncConfig cfg;
    cfg.delta = delta;
    cfg.center_m = centerBits;
    cfg.window_slack = windowSlack;
    cfg.max_rounds = maxRounds;
    cfg.anchor_retries = anchorRetries;

    Transcript transcript;
    auto [result, reconstruction] =
        sync_run(x, y, strategy, cfg, verbose ? &transcript : nullptr);

    if (verbose) {
        for (std::size_t r = 0; r < transcript.rounds.size(); ++r)
            for (const auto& msg : transcript.rounds[r])
                std::cerr << "round " << (r + 1) << " "
                          << (msg.dir == MsgDir::AToB ? "A->B" : "B->A") << " "
                          << to_string(msg.kind) << " seg=" << msg.segment
                          << " header=" << msg.header_bits << " payload=" << msg.payload_bits
                          << "\n";
    }

    json rec;
    rec["strategy"] = strategyName;
    rec["n"] = x.size();
    rec["d"] = d;
    rec["delta"] = delta;
    rec["seed"] = seed;
    rec["rounds"] = result.rounds;
    rec["total_bits"] = result.total_bits;
    rec["success"] = result.success;
    rec["reason"] = to_string(result.reason);
    rec["exact"] = reconstruction == x;
    json counters;
    counters["splits"] = result.splits;
    counters["anchor_fallbacks"] = result.anchor_fallbacks;
    counters["verbatim_fallbacks"] = result.verbatim_fallbacks;
    counters["vt_repairs"] = result.vt_repairs;
    counters["gc_repairs"] = result.gc_repairs;
    counters["gc_extra_parities"] = result.gc_extra_parities;
    rec["counters"] = counters;
    json cfgj;
    cfgj["center_m"] = centerBits;
    cfgj["window_slack"] = windowSlack;
    cfgj["checksum_bits"] = cfg.checksum_bits;
    cfgj["max_rounds"] = maxRounds;
    cfgj["anchor_retries"] = anchorRetries;
    rec["config"] = cfgj;

    emit_record(rec,
                {"strategy", "n", "d", "delta", "seed", "rounds", "total_bits", "success",
                 "reason"},
                format, output);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Guess & Check deletion-correcting codes"};
    app.require_subcommand(1);

    // encode ---------------------------------------------------------------
    auto* encode = app.add_subcommand("encode", "encode a message file into a codeword file");
    CodeOpts encOpts;
    std::string encInput, encOutput, encFormat = "text";
    add_code_opts(encode, encOpts);
    encode->add_option("--input", encInput, "message bit file")->required();
    encode->add_option("--output", encOutput, "codeword bit file")->required();
    encode->add_option("--format", encFormat, "bit file format: text | raw")
        ->check(CLI::IsMember({"text", "raw"}));
    std::string encConfig;
    encode->add_option("--config", encConfig, "flat key=value config file");

    // corrupt ----------------------------------------------------------------
    auto* corrupt = app.add_subcommand("corrupt", "delete positions from a codeword file");
    std::string corInput, corOutput, corFormat = "text", corPositions;
    int corDelta = 0;
    std::uint64_t corSeed = 0;
    corrupt->add_option("--input", corInput, "codeword bit file")->required();
    corrupt->add_option("--output", corOutput, "received bit file")->required();
    corrupt->add_option("--delta", corDelta, "number of deletions to sample");
    corrupt->add_option("--seed", corSeed, "seed for the deletion positions");
    corrupt->add_option("--positions", corPositions, "explicit 1-based positions, e.g. 14 or 3,17");
    corrupt->add_option("--format", corFormat, "bit file format: text | raw")
        ->check(CLI::IsMember({"text", "raw"}));
    std::string corConfig;
    corrupt->add_option("--config", corConfig, "flat key=value config file");

    // decode ---------------------------------------------------------------
    auto* decode = app.add_subcommand("decode", "decode a received file back into a message");
    CodeOpts decOpts;
    std::string decInput, decOutput, decFormat = "text";
    add_code_opts(decode, decOpts);
    decode->add_option("--input", decInput, "received bit file")->required();
    decode->add_option("--output", decOutput, "decoded message bit file");
    decode->add_option("--format", decFormat, "bit file format: text | raw")
        ->check(CLI::IsMember({"text", "raw"}));
    std::string decConfig;
    decode->add_option("--config", decConfig, "flat key=value config file");

    // experiment -------------------------------------------------------------
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo failure-rate estimate");
    CodeOpts expOpts;
    long expTrials = 10000;
    std::uint64_t expSeed = 0;
    int expJobs = 1;
    bool expTiming = false;
    std::string expFormat = "json", expOutput;
    add_code_opts(experiment, expOpts);
    experiment->add_option("--trials", expTrials, "number of trials");
    experiment->add_option("--seed", expSeed, "master seed");
    experiment->add_option("--jobs", expJobs, "worker threads (does not affect results)");
    experiment->add_flag("--timing", expTiming, "record mean decode time (non-deterministic)");
    experiment->add_option("--format", expFormat, "record format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    experiment->add_option("--output", expOutput, "record file (default stdout)");
    std::string expConfig;
    experiment->add_option("--config", expConfig, "flat key=value config file");

    // exhaustive -------------------------------------------------------------
    auto* exhaustive = app.add_subcommand("exhaustive", "exact failure rate on a small instance");
    CodeOpts exOpts;
    std::uint64_t exLimit = 5'000'000'000ULL;
    std::string exFormat = "json", exOutput;
    add_code_opts(exhaustive, exOpts);
    exhaustive->add_option("--limit", exLimit, "refuse instances above this many case evaluations");
    exhaustive->add_option("--format", exFormat, "record format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    exhaustive->add_option("--output", exOutput, "record file (default stdout)");
    std::string exConfig;
    exhaustive->add_option("--config", exConfig, "flat key=value config file");

    // bound ------------------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "single-deletion failure-probability bound");
    int boundK = 0, boundC = 0;
    std::string boundFormat = "json", boundOutput;
    bound->add_option("--k", boundK, "message length (power of two)")->required();
    bound->add_option("--c", boundC, "parity symbol count")->required();
    bound->add_option("--format", boundFormat, "record format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bound->add_option("--output", boundOutput, "record file (default stdout)");
    std::string boundConfig;
    bound->add_option("--config", boundConfig, "flat key=value config file");

    // sync -------------------------------------------------------------------
    auto* sync = app.add_subcommand("sync", "two-node synchronization simulation");
    std::string syncInput, syncStrategy = "sync_vt", syncFormat = "json", syncOutput;
    long syncLength = 0, syncD = 0;
    int syncDelta = 2, syncCenter = 25, syncSlack = 0, syncMaxRounds = 100, syncRetries = 2;
    std::uint64_t syncSeed = 0;
    bool syncVerbose = false;
    sync->add_option("--input", syncInput, "node A bit file (otherwise random, see --length)");
    sync->add_option("--length", syncLength, "random string length when no input file is given");
    sync->add_option("--d", syncD, "number of deletions in node B's copy")->required();
    sync->add_option("--strategy", syncStrategy, "sync_vt | sync_gc")
        ->check(CLI::IsMember({"sync_vt", "sync_gc"}));
    sync->add_option("--delta", syncDelta, "per-segment deletion budget (GC strategy)");
    sync->add_option("--center-bits", syncCenter, "anchor pattern length");
    sync->add_option("--window-slack", syncSlack, "extra anchor search width");
    sync->add_option("--max-rounds", syncMaxRounds, "round limit");
    sync->add_option("--anchor-retries", syncRetries, "shifted-anchor retries before verbatim");
    sync->add_option("--seed", syncSeed, "seed for the instance");
    int syncJobs = 1;
    sync->add_option("--jobs", syncJobs, "parallelism hint (single runs ignore it)");
    sync->add_flag("--verbose", syncVerbose, "dump the transcript to stderr");
    sync->add_option("--format", syncFormat, "record format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sync->add_option("--output", syncOutput, "record file (default stdout)");
    std::string syncConfig;
    sync->add_option("--config", syncConfig, "flat key=value config file");

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        args.erase(args.begin()); // program name
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const ConfigError& e) {
        json err;
        err["error"] = {{"code", "config_error"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return kExitUsage;
    }

    try {
        if (encode->parsed())
            return run_encode(encOpts, encInput, encOutput, encFormat);
        if (corrupt->parsed())
            return run_corrupt(corInput, corOutput, corFormat, corDelta, corSeed, corPositions);
        if (decode->parsed())
            return run_decode(decOpts, decInput, decOutput, decFormat);
        if (experiment->parsed())
            return run_experiment(expOpts, expTrials, expSeed, expJobs, expTiming, expFormat,
                                  expOutput);
        if (exhaustive->parsed())
            return run_exhaustive(exOpts, exLimit, exFormat, exOutput);
        if (bound->parsed())
            return run_bound(boundK, boundC, boundFormat, boundOutput);
        if (sync->parsed())
            return run_sync(syncInput, syncLength, syncD, syncStrategy, syncDelta, syncCenter,
                            syncSlack, syncMaxRounds, syncRetries, syncSeed, syncVerbose,
                            syncFormat, syncOutput);
    } catch (const ConfigError& e) {
        json err;
        err["error"] = {{"code", "config_error"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return kExitUsage;
    } catch (const ArgumentError& e) {
        json err;
        err["error"] = {{"code", "argument_error"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"code", "internal_error"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
