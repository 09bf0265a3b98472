#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "rookh/frobenius.hpp"
#include "rookh/json_io.hpp"
#include "rookh/verify.hpp"
#include "rookh/version.hpp"

using namespace rookh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Locus sizes beyond this are refused by the commands that enumerate or
// invert evaluation matrices; verification depth is steered by --scale.
constexpr long long kLocusGuard = 20000;
constexpr long long kModelGuard = 400;

struct RunConfig {
    int n = 1;
    int m = 1;
    int r = 0;
    std::string order = "example";
    std::string tiebreak = "larger-i";
    int scale = 0;
    std::string cache_dir;
    std::string format = "json";

    MonomialOrderSpec spec() const {
        MonomialOrderSpec s;
        s.direction =
            order == "definition" ? DiagonalDirection::definition : DiagonalDirection::example;
        s.tiebreak = tiebreak == "smaller-i" ? AntidiagonalTieBreak::smaller_i_first
                                             : AntidiagonalTieBreak::larger_i_first;
        return s;
    }
    LocusParams params() const { return LocusParams(n, m, r); }
    std::filesystem::path cache_path() const {
        if (!cache_dir.empty()) return cache_dir;
        if (const char* env = std::getenv("CACHE_DIR")) return env;
        return ".rookh-cache";
    }
    Json echo() const {
        return Json{{"n", n},         {"m", m},           {"r", r},
                    {"order", order}, {"tiebreak", tiebreak}, {"scale", scale},
                    {"cache_dir", cache_path().string()}, {"format", format}};
    }
};

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int t = 0; t < k; ++t) b = b * (n - t) / (t + 1);
    return b;
}

long long locus_size(const LocusParams& p) {
    long long total = 0;
    for (int d = p.r; d <= p.min_side(); ++d)
        total += binomial(p.n, d) * binomial(p.m, d) * factorial(d);
    return total;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit(const RunConfig& config, const ReportDocument& report) {
    if (config.format == "table") {
        std::cout << "command: " << report.command << "\n";
        for (const auto& [key, value] : report.results.items()) {
            if (value.is_array() && !value.empty() &&
                (value.front().is_object() || value.front().is_array())) {
                std::cout << key << " (" << value.size() << "):\n";
                for (const auto& entry : value) std::cout << "  " << entry.dump() << "\n";
            } else {
                std::cout << key << ": " << value.dump() << "\n";
            }
        }
        std::cout << "timing_ms: " << report.timing_ms << "\n";
    } else {
        std::cout << to_json(report).dump(2) << "\n";
    }
}

int cmd_enumerate(const RunConfig& config, int size_slice) {
    Stopwatch watch;
    const LocusParams params = config.params();
    if (locus_size(params) > kLocusGuard) {
        std::cerr << "rookh: locus too large to enumerate (bound " << kLocusGuard << ")\n";
        return kExitUsage;
    }
    std::vector<RookPlacement> locus;
    if (size_slice >= 0) {
        if (size_slice < params.r || size_slice > params.min_side()) {
            std::cerr << "rookh: --size must lie between r and min(n, m)\n";
            return kExitUsage;
        }
        locus = enumerate_rook_placements(params.n, params.m, size_slice);
    } else {
        locus = enumerate_upper_locus(params);
    }
    Json placements = Json::array();
    for (const auto& rp : locus) placements.push_back(to_json(rp));
    Json sizes = Json::array();
    for (int d = params.r; d <= params.min_side(); ++d)
        sizes.push_back(Json{{"size", d},
                             {"count", binomial(params.n, d) * binomial(params.m, d) *
                                           factorial(d)}});
    ReportDocument report{"enumerate", config.echo(),
                          Json{{"count", placements.size()},
                               {"counts_by_size", sizes},
                               {"placements", placements}},
                          0};
    report.timing_ms = watch.ms();
    emit(config, report);
    return kExitOk;
}

int cmd_basis(const RunConfig& config, const std::string& cells_json, bool verify_flag) {
    Stopwatch watch;
    const LocusParams params = config.params();
    const MonomialOrderSpec spec = config.spec();

    if (!cells_json.empty()) {
        // Single-placement query: report the extension, the landing cells,
        // and the monomial.
        Json parsed = Json::parse(cells_json, nullptr, false);
        if (parsed.is_discarded()) {
            std::cerr << "rookh: --cells expects a JSON array of [i,j] pairs\n";
            return kExitUsage;
        }
        std::vector<Cell> cells;
        for (const auto& entry : parsed) cells.push_back({entry.at(0), entry.at(1)});
        const RookPlacement placement(params.n, params.m, cells);
        if (placement.size() < params.r) {
            std::cerr << "rookh: placement smaller than r\n";
            return kExitUsage;
        }
        const Permutation ex = extend_to_permutation(placement, params);
        const RookPlacement es = extended_shadow_set(placement, params);
        ReportDocument report{"basis", config.echo(),
                              Json{{"placement", to_json(placement)},
                                   {"extended_permutation", to_json(ex)},
                                   {"extended_shadow_set", to_json(es)},
                                   {"shadow_monomial", to_json(monomial_of(es))},
                                   {"degree", es.size()}},
                              0};
        report.timing_ms = watch.ms();
        emit(config, report);
        return kExitOk;
    }

    if (locus_size(params) > kModelGuard) {
        std::cerr << "rookh: locus too large for basis computation (bound " << kModelGuard
                  << ")\n";
        return kExitUsage;
    }
    const auto locus = enumerate_upper_locus(params);
    Json entries = Json::array();
    std::vector<long long> histogram;
    for (const auto& rp : locus) {
        const Permutation ex = extend_to_permutation(rp, params);
        const RookPlacement es = extended_shadow_set(rp, params);
        const int degree = es.size();
        if (static_cast<size_t>(degree) >= histogram.size())
            histogram.resize(static_cast<size_t>(degree) + 1, 0);
        histogram[static_cast<size_t>(degree)]++;
        entries.push_back(Json{{"placement", to_json(rp)},
                               {"extended_permutation", to_json(ex)},
                               {"extended_shadow_set", to_json(es)},
                               {"shadow_monomial", to_json(monomial_of(es))},
                               {"degree", degree}});
    }
    Json results{{"count", entries.size()},
                 {"degree_histogram", histogram},
                 {"basis", entries}};
    bool mismatch = false;
    if (verify_flag) {
        const auto oracle = standard_monomials(locus, spec);
        std::set<Monomial> shadow;
        for (const auto& rp : locus) shadow.insert(shadow_monomial(rp, params));
        const bool equal = std::set<Monomial>(oracle.begin(), oracle.end()) == shadow;
        results["oracle_matches"] = equal;
        mismatch = !equal;
    }
    ReportDocument report{"basis", config.echo(), results, 0};
    report.timing_ms = watch.ms();
    emit(config, report);
    return mismatch ? kExitMismatch : kExitOk;
}

int cmd_hilbert(const RunConfig& config) {
    Stopwatch watch;
    const LocusParams params = config.params();
    if (locus_size(params) > kLocusGuard) {
        std::cerr << "rookh: locus too large (bound " << kLocusGuard << ")\n";
        return kExitUsage;
    }
    const auto via_lis = hilbert_series_via_lis(params);
    const auto formula = dimension(grfrob_main(params));
    Json results{{"series_via_lis", via_lis}, {"series_from_formula", formula}};
    bool agree = via_lis == formula;
    const bool run_oracle = locus_size(params) <= kModelGuard;
    if (run_oracle) {
        const auto oracle = hilbert_series_oracle(enumerate_upper_locus(params), config.spec());
        results["series_from_standard_monomials"] = oracle;
        agree = agree && oracle == via_lis;
    }
    results["agree"] = agree;
    ReportDocument report{"hilbert", config.echo(), results, 0};
    report.timing_ms = watch.ms();
    emit(config, report);
    return agree ? kExitOk : kExitMismatch;
}

int cmd_frobenius(const RunConfig& config, bool verify_flag) {
    Stopwatch watch;
    const LocusParams params = config.params();
    const auto series = grfrob_main(params);
    Json results{{"graded_frobenius", to_json(series)},
                 {"dimension_series", dimension(series)}};
    bool mismatch = false;
    if (verify_flag) {
        bool fixed_ok = true, graded_ok = true;
        if (locus_size(params) <= kLocusGuard) {
            DoublySchurVector expected(params.n, params.m);
            for (int rp = params.r; rp <= params.min_side(); ++rp)
                expected += frob_layer(params.n, params.m, rp);
            fixed_ok = frobenius_from_fixed_points(enumerate_upper_locus(params), params.n,
                                                   params.m) == expected;
            results["fixed_point_oracle_matches"] = fixed_ok;
        }
        if (locus_size(params) <= kModelGuard) {
            graded_ok = graded_frobenius_oracle(params, config.spec()) == series;
            results["graded_oracle_matches"] = graded_ok;
        }
        mismatch = !(fixed_ok && graded_ok);
    }
    ReportDocument report{"frobenius", config.echo(), results, 0};
    report.timing_ms = watch.ms();
    emit(config, report);
    return mismatch ? kExitMismatch : kExitOk;
}

int cmd_logconcave(const RunConfig& config) {
    Stopwatch watch;
    if (config.n < 1 || config.m < 1 || config.n > 10 || config.m > 12) {
        std::cerr << "rookh: logconcave sweeps 1 <= n' <= n <= 10, 1 <= m' <= m <= 12\n";
        return kExitUsage;
    }
    Json triples = Json::array();
    bool all_passed = true;
    for (int n = 1; n <= config.n; ++n) {
        const CharacterTable tn = character_table_cached(n, config.cache_path());
        for (int m = 1; m <= config.m; ++m) {
            const CharacterTable tm = character_table_cached(m, config.cache_path());
            for (int r = 0; r <= std::min(n, m); ++r) {
                const auto report =
                    check_equivariant_log_concavity(grfrob_main(LocusParams(n, m, r)), tn, tm);
                Json entry{{"n", n}, {"m", m}, {"r", r}, {"passed", report.passed}};
                if (!report.passed) {
                    all_passed = false;
                    Json violations = Json::array();
                    for (const auto& v : report.violations)
                        violations.push_back(Json{{"degree", v.degree},
                                                  {"lambda", to_json(v.row_key)},
                                                  {"mu", to_json(v.column_key)},
                                                  {"deficit", v.deficit}});
                    entry["violations"] = violations;
                }
                triples.push_back(std::move(entry));
            }
        }
    }
    ReportDocument report{"logconcave", config.echo(),
                          Json{{"all_passed", all_passed}, {"triples", triples}}, 0};
    report.timing_ms = watch.ms();
    emit(config, report);
    return kExitOk;  // violations are report content, not a failure
}

int cmd_verify(const RunConfig& config, std::vector<std::string> suites) {
    Stopwatch watch;
    if (suites.empty()) suites = verify::suite_names();
    Json entries = Json::array();
    bool all_passed = true;
    for (const auto& name : suites) {
        verify::SuiteResult result;
        try {
            result = verify::run_suite(name, config.scale, config.cache_path());
        } catch (const std::invalid_argument& e) {
            std::cerr << "rookh: " << e.what() << "\n";
            return kExitUsage;
        }
        all_passed = all_passed && result.passed;
        Json entry{{"suite", result.name},
                   {"passed", result.passed},
                   {"checks", result.checks},
                   {"ms", result.ms}};
        if (!result.failures.empty()) entry["failures"] = result.failures;
        entries.push_back(std::move(entry));
        std::cerr << (result.passed ? "[pass] " : "[FAIL] ") << result.name << " ("
                  << result.checks << " checks, " << static_cast<long long>(result.ms)
                  << " ms)\n";
    }
    ReportDocument report{"verify", config.echo(),
                          Json{{"all_passed", all_passed}, {"suites", entries}}, 0};
    report.timing_ms = watch.ms();
    emit(config, report);
    return all_passed ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rookh: rook-placement matrix loci, shadow-line bases, and graded characters"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kEngineVersion);

    RunConfig config;
    int size_slice = -1;
    std::string cells_json;
    bool verify_flag = false;
    std::vector<std::string> suites;

    auto add_common = [&](CLI::App* cmd, bool needs_r = true) {
        cmd->add_option("--n", config.n, "board columns (first coordinate range)");
        cmd->add_option("--m", config.m, "board rows (second coordinate range)");
        if (needs_r) cmd->add_option("--r", config.r, "minimum rook count");
        cmd->add_option("--order", config.order, "diagonal order direction")
            ->check(CLI::IsMember({"example", "definition"}));
        cmd->add_option("--tiebreak", config.tiebreak, "antidiagonal tie-break")
            ->check(CLI::IsMember({"larger-i", "smaller-i"}));
        cmd->add_option("--scale", config.scale,
                        "verification depth: <0 quick, 0 default, >0 full");
        cmd->add_option("--cache-dir", config.cache_dir,
                        "cache directory (default $CACHE_DIR or .rookh-cache)");
        cmd->add_option("--format", config.format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "list the locus of rook placements");
    add_common(enumerate);
    enumerate->add_option("--size", size_slice, "restrict to placements of one size");

    auto* basis = app.add_subcommand("basis", "extended shadow monomial basis");
    add_common(basis);
    basis->add_option("--cells", cells_json, "single placement as JSON [[i,j],...]");
    basis->add_flag("--verify", verify_flag, "compare against the standard monomial oracle");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series by every route");
    add_common(hilbert);

    auto* frobenius = app.add_subcommand("frobenius", "graded Frobenius image");
    add_common(frobenius);
    frobenius->add_flag("--verify", verify_flag, "run the fixed-point and graded oracles");

    auto* logconcave =
        app.add_subcommand("logconcave", "equivariant log-concavity sweep over n' <= n, m' <= m");
    add_common(logconcave, false);

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    add_common(verify_cmd);
    verify_cmd->add_option("--suite", suites, "suite name (repeatable; default all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(config, size_slice);
        if (basis->parsed()) return cmd_basis(config, cells_json, verify_flag);
        if (hilbert->parsed()) return cmd_hilbert(config);
        if (frobenius->parsed()) return cmd_frobenius(config, verify_flag);
        if (logconcave->parsed()) return cmd_logconcave(config);
        if (verify_cmd->parsed()) return cmd_verify(config, suites);
    } catch (const std::invalid_argument& e) {
        std::cerr << "rookh: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "rookh: internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
