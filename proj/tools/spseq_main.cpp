// spseq: command-line front end for the square-prime toolkit.
//
// Subcommands cover enumeration (list, twins), counting and digit censuses
// (count, digits), the coprime-pair sequence (farey), partial harmonic sums
// (harmonic) and equidistribution diagnostics (equidist). Output formats:
// plain text, CSV (header row, LF endings, all-numeric fields) and JSON.
// Exit codes: 0 success, 1 computation/range error, 2 usage error.

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spseq/spseq.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
    std::uint64_t max_n = 2'000'000;  // sieve capability
    std::string format = "plain";
    int precision = 4;
};

std::string fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, v);
    return buf;
}

std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

spseq::PrimeSieve sieve_for(std::uint64_t needed, const GlobalOptions& opts) {
    if (needed > opts.max_n) {
        throw std::out_of_range("requested limit " + std::to_string(needed) +
                                " exceeds sieve capability " + std::to_string(opts.max_n) +
                                " (raise --max-n or SPSEQ_MAX_N)");
    }
    return spseq::PrimeSieve(std::max<std::uint64_t>(needed, 2));
}

void emit_json(const ordered_json& doc) { std::printf("%s\n", doc.dump(2).c_str()); }

// ---- list ----------------------------------------------------------------

void run_list(std::uint64_t limit, const GlobalOptions& opts) {
    const auto sieve = sieve_for(limit, opts);
    const auto values = spseq::enumerate_sp(limit, sieve);
    if (opts.format == "csv") {
        std::printf("value,p,a\n");
        for (const auto& sp : values) {
            std::printf("%" PRIu64 ",%" PRIu64 ",%" PRIu64 "\n", sp.value, sp.p, sp.a);
        }
    } else if (opts.format == "json") {
        ordered_json doc;
        doc["limit"] = limit;
        doc["count"] = values.size();
        auto& entries = doc["entries"] = ordered_json::array();
        for (const auto& sp : values) {
            entries.push_back({{"value", sp.value}, {"p", sp.p}, {"a", sp.a}});
        }
        emit_json(doc);
    } else {
        for (const auto& sp : values) {
            std::printf("%" PRIu64 " = %" PRIu64 " * %" PRIu64 "^2\n", sp.value, sp.p, sp.a);
        }
    }
}

// ---- count ---------------------------------------------------------------

void run_count(std::uint64_t limit, bool compare, const GlobalOptions& opts) {
    const auto sieve = sieve_for(limit, opts);
    const std::uint64_t count = spseq::sp_count(limit, sieve);
    if (!compare) {
        if (opts.format == "csv") {
            std::printf("limit,count\n%" PRIu64 ",%" PRIu64 "\n", limit, count);
        } else if (opts.format == "json") {
            emit_json({{"limit", limit}, {"count", count}});
        } else {
            std::printf("%" PRIu64 "\n", count);
        }
        return;
    }
    const auto report = spseq::asymptotic_report(limit, sieve);
    if (opts.format == "csv") {
        std::printf("limit,count,estimate,ratio\n");
        std::printf("%" PRIu64 ",%" PRIu64 ",%s,%s\n", limit, count,
                    fixed(report.estimate, opts.precision).c_str(),
                    fixed(report.ratio, opts.precision).c_str());
    } else if (opts.format == "json") {
        emit_json({{"limit", limit},
                   {"count", count},
                   {"estimate", report.estimate},
                   {"ratio", report.ratio}});
    } else {
        std::printf("count = %" PRIu64 "\n", count);
        std::printf("estimate = %s\n", fixed(report.estimate, opts.precision).c_str());
        std::printf("ratio = %s\n", fixed(report.ratio, opts.precision).c_str());
    }
}

// ---- digits --------------------------------------------------------------

void run_digits(std::uint64_t limit, bool with_estimate, const GlobalOptions& opts) {
    const auto sieve = sieve_for(limit, opts);
    const auto census = spseq::digit_census(limit, sieve);
    const double estimate =
        with_estimate ? spseq::digit1_estimate(static_cast<double>(limit)) : 0.0;
    if (opts.format == "csv") {
        if (with_estimate) std::printf("# digit1_estimate=%s\n", full(estimate).c_str());
        std::printf("digit,count\n");
        for (int d = 0; d < 10; ++d) {
            std::printf("%d,%" PRIu64 "\n", d, census.counts[d]);
        }
    } else if (opts.format == "json") {
        ordered_json doc{{"limit", limit}, {"counts", census.counts}};
        if (with_estimate) doc["digit1_estimate"] = estimate;
        emit_json(doc);
    } else {
        for (int d = 0; d < 10; ++d) {
            std::printf("digit %d: %" PRIu64 "\n", d, census.counts[d]);
        }
        if (with_estimate) {
            std::printf("digit1_estimate = %s\n", fixed(estimate, opts.precision).c_str());
        }
    }
}

// ---- twins ---------------------------------------------------------------

void run_twins(std::uint64_t limit, bool harmonic, const GlobalOptions& opts) {
    const auto sieve = sieve_for(limit, opts);
    if (harmonic) {
        const double value = spseq::twin_harmonic(limit, sieve);
        if (opts.format == "csv") {
            std::printf("limit,twin_harmonic\n%" PRIu64 ",%s\n", limit,
                        fixed(value, opts.precision).c_str());
        } else if (opts.format == "json") {
            emit_json({{"limit", limit}, {"twin_harmonic", value}});
        } else {
            std::printf("%s\n", fixed(value, opts.precision).c_str());
        }
        return;
    }
    const auto twins = spseq::find_twins(limit, sieve);
    if (opts.format == "csv") {
        std::printf("lo,hi\n");
        for (const auto& t : twins) {
            std::printf("%" PRIu64 ",%" PRIu64 "\n", t.lo.value, t.hi.value);
        }
    } else if (opts.format == "json") {
        ordered_json doc;
        doc["limit"] = limit;
        doc["count"] = twins.size();
        auto& pairs = doc["pairs"] = ordered_json::array();
        for (const auto& t : twins) {
            pairs.push_back({{"lo", t.lo.value}, {"hi", t.hi.value}});
        }
        emit_json(doc);
    } else {
        for (const auto& t : twins) {
            std::printf("(%" PRIu64 ", %" PRIu64 ")\n", t.lo.value, t.hi.value);
        }
    }
}

// ---- farey ---------------------------------------------------------------

void run_farey(std::uint64_t limit, const std::string& order, bool count_only,
               const GlobalOptions& opts) {
    const auto sieve = sieve_for(limit, opts);
    if (count_only) {
        const std::uint64_t count = spseq::sp_farey_count(limit, sieve);
        if (opts.format == "csv") {
            std::printf("limit,count\n%" PRIu64 ",%" PRIu64 "\n", limit, count);
        } else if (opts.format == "json") {
            emit_json({{"limit", limit}, {"count", count}});
        } else {
            std::printf("%" PRIu64 "\n", count);
        }
        return;
    }
    const auto entries = spseq::sp_farey(
        limit, sieve, order == "value" ? spseq::FareyOrder::value : spseq::FareyOrder::lex);
    if (opts.format == "csv") {
        std::printf("num,den,value\n");
        for (const auto& e : entries) {
            std::printf("%" PRIu64 ",%" PRIu64 ",%s\n", e.num.value, e.den.value,
                        fixed(e.value, opts.precision).c_str());
        }
    } else if (opts.format == "json") {
        ordered_json doc;
        doc["limit"] = limit;
        doc["order"] = order;
        doc["count"] = entries.size();
        auto& list = doc["entries"] = ordered_json::array();
        for (const auto& e : entries) {
            const std::string name =
                std::to_string(e.num.value) + "/" + std::to_string(e.den.value);
            list.push_back({{"fraction", name},
                            {"num", e.num.value},
                            {"den", e.den.value},
                            {"value", e.value}});
        }
        emit_json(doc);
    } else {
        for (const auto& e : entries) {
            std::printf("%" PRIu64 "/%" PRIu64 " = %s\n", e.num.value, e.den.value,
                        fixed(e.value, opts.precision).c_str());
        }
    }
}

// ---- harmonic ------------------------------------------------------------

void run_harmonic_value(std::uint64_t limit, const GlobalOptions& opts) {
    const auto sieve = sieve_for(limit, opts);
    const double value = spseq::sp_harmonic(limit, sieve);
    if (opts.format == "csv") {
        std::printf("limit,sp_harmonic\n%" PRIu64 ",%s\n", limit,
                    fixed(value, opts.precision).c_str());
    } else if (opts.format == "json") {
        emit_json({{"limit", limit}, {"sp_harmonic", value}});
    } else {
        std::printf("%s\n", fixed(value, opts.precision).c_str());
    }
}

void run_harmonic_table(const std::vector<std::uint64_t>& checkpoints,
                        const GlobalOptions& opts) {
    std::uint64_t needed = 2;
    for (std::uint64_t x : checkpoints) needed = std::max(needed, x);
    const auto sieve = sieve_for(needed, opts);
    const auto rows = spseq::harmonic_table(checkpoints, sieve);
    if (opts.format == "csv") {
        std::printf("X,sp_harmonic,estimate_main_term\n");
        for (const auto& row : rows) {
            std::printf("%" PRIu64 ",%s,%s\n", row.X, fixed(row.actual, opts.precision).c_str(),
                        fixed(row.estimate, opts.precision).c_str());
        }
    } else if (opts.format == "json") {
        ordered_json doc;
        auto& list = doc["rows"] = ordered_json::array();
        for (const auto& row : rows) {
            list.push_back({{"X", row.X},
                            {"sp_harmonic", row.actual},
                            {"estimate_main_term", row.estimate}});
        }
        emit_json(doc);
    } else {
        for (const auto& row : rows) {
            std::printf("%-8" PRIu64 " %s  %s\n", row.X, fixed(row.actual, opts.precision).c_str(),
                        fixed(row.estimate, opts.precision).c_str());
        }
    }
}

// ---- equidist ------------------------------------------------------------

void run_equidist(std::uint64_t j, unsigned grid, const GlobalOptions& opts) {
    const auto sieve = sieve_for(j, opts);
    const auto points = spseq::scaled_sp_points(j, sieve);
    const double dstar = spseq::star_discrepancy_of(points);

    struct Cell {
        double alpha, beta, fraction;
    };
    std::vector<Cell> cells;
    for (unsigned lo = 0; lo < grid; ++lo) {
        for (unsigned hi = lo + 1; hi <= grid; ++hi) {
            const double alpha = static_cast<double>(lo) / grid;
            const double beta = static_cast<double>(hi) / grid;
            cells.push_back(
                {alpha, beta, spseq::interval_fraction_of(points, {alpha, beta})});
        }
    }

    if (opts.format == "csv") {
        std::printf("# star_discrepancy=%s\n", full(dstar).c_str());
        std::printf("alpha,beta,fraction\n");
        for (const auto& c : cells) {
            std::printf("%s,%s,%s\n", fixed(c.alpha, opts.precision).c_str(),
                        fixed(c.beta, opts.precision).c_str(),
                        fixed(c.fraction, opts.precision).c_str());
        }
    } else if (opts.format == "json") {
        ordered_json doc;
        doc["j"] = j;
        doc["grid"] = grid;
        doc["star_discrepancy"] = dstar;
        auto& list = doc["fractions"] = ordered_json::array();
        for (const auto& c : cells) {
            list.push_back({{"alpha", c.alpha}, {"beta", c.beta}, {"fraction", c.fraction}});
        }
        emit_json(doc);
    } else {
        for (const auto& c : cells) {
            std::printf("fraction[%s,%s] = %s\n", fixed(c.alpha, opts.precision).c_str(),
                        fixed(c.beta, opts.precision).c_str(),
                        fixed(c.fraction, opts.precision).c_str());
        }
        std::printf("star_discrepancy = %s\n", fixed(dstar, opts.precision).c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"square-prime sequence toolkit"};
    app.require_subcommand(1);
    app.fallthrough(true);

    GlobalOptions opts;
    app.add_option("--max-n", opts.max_n, "Sieve capability (largest supported limit)")
        ->envname("SPSEQ_MAX_N")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--precision", opts.precision, "Decimal places for fixed-point output")
        ->check(CLI::Range(0, 17))
        ->capture_default_str();

    std::uint64_t list_limit = 0;
    auto* cmd_list = app.add_subcommand("list", "Square-prime values with decompositions");
    cmd_list->add_option("--limit", list_limit, "Upper bound (inclusive)")->required();

    std::uint64_t count_limit = 0;
    bool count_compare = false;
    auto* cmd_count = app.add_subcommand("count", "Count square-prime values up to a limit");
    cmd_count->add_option("--limit", count_limit, "Upper bound (inclusive)")->required();
    cmd_count->add_flag("--compare", count_compare, "Also report main-term estimate and ratio");

    std::uint64_t digits_limit = 0;
    bool digits_estimate = false;
    auto* cmd_digits = app.add_subcommand("digits", "Census of last decimal digits");
    cmd_digits->add_option("--limit", digits_limit, "Upper bound (inclusive)")->required();
    cmd_digits->add_flag("--estimate", digits_estimate, "Include the digit-1 density estimate");

    std::uint64_t twins_limit = 0;
    bool twins_harmonic = false;
    auto* cmd_twins = app.add_subcommand("twins", "Consecutive square-prime pairs");
    cmd_twins->add_option("--limit", twins_limit, "Upper bound for the larger member")->required();
    cmd_twins->add_flag("--harmonic", twins_harmonic, "Sum 1/lo + 1/hi over the pairs instead");

    std::uint64_t farey_limit = 0;
    std::string farey_order = "lex";
    bool farey_count_only = false;
    auto* cmd_farey = app.add_subcommand("farey", "Coprime square-prime fractions num/den");
    cmd_farey->add_option("--limit", farey_limit, "Upper bound for both members")->required();
    cmd_farey->add_option("--order", farey_order, "Listing order")
        ->check(CLI::IsMember({"lex", "value"}))
        ->capture_default_str();
    cmd_farey->add_flag("--count-only", farey_count_only, "Print only the cardinality");

    std::uint64_t harmonic_limit = 0;
    std::vector<std::uint64_t> harmonic_table_points;
    auto* cmd_harmonic = app.add_subcommand("harmonic", "Partial sums of 1/sp");
    auto* opt_hlimit =
        cmd_harmonic->add_option("--limit", harmonic_limit, "Sum 1/sp for sp <= limit");
    auto* opt_htable =
        cmd_harmonic
            ->add_option("--table", harmonic_table_points,
                         "Comparison table at the given checkpoints (comma separated)")
            ->delimiter(',')
            ->expected(1, 64);
    opt_hlimit->excludes(opt_htable);

    std::uint64_t equi_j = 0;
    unsigned equi_grid = 4;
    auto* cmd_equidist =
        app.add_subcommand("equidist", "Interval fractions and star discrepancy of {sp/j}");
    cmd_equidist->add_option("--j", equi_j, "Scaling denominator")->required();
    cmd_equidist->add_option("--grid", equi_grid, "Endpoints are multiples of 1/grid")
        ->check(CLI::Range(1u, 1000u))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_list) {
            run_list(list_limit, opts);
        } else if (*cmd_count) {
            run_count(count_limit, count_compare, opts);
        } else if (*cmd_digits) {
            run_digits(digits_limit, digits_estimate, opts);
        } else if (*cmd_twins) {
            run_twins(twins_limit, twins_harmonic, opts);
        } else if (*cmd_farey) {
            run_farey(farey_limit, farey_order, farey_count_only, opts);
        } else if (*cmd_harmonic) {
            if (*opt_hlimit) {
                run_harmonic_value(harmonic_limit, opts);
            } else {
                auto checkpoints = harmonic_table_points;
                if (checkpoints.empty()) {
                    checkpoints.assign(spseq::kDefaultTableCheckpoints.begin(),
                                       spseq::kDefaultTableCheckpoints.end());
                }
                run_harmonic_table(checkpoints, opts);
            }
        } else if (*cmd_equidist) {
            run_equidist(equi_j, equi_grid, opts);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "spseq: error: %s\n", e.what());
        return 1;
    }
    return 0;
}
