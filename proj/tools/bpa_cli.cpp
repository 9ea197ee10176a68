// Command-line front end for the barred-preferential-arrangement toolkit.
//
// Exit codes: 0 success, 1 verification/consistency failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpa/bpa.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bpa::SeqKind parse_kind(const std::string& kind) {
    if (kind == "r") return bpa::SeqKind::r;
    if (kind == "s") return bpa::SeqKind::s;
    throw CLI::ValidationError("kind must be r or s");
}

bpa::BigNat compute_one(bpa::SeqKind kind, unsigned long m, unsigned long l,
                        const std::string& method) {
    using namespace bpa;
    if (kind == SeqKind::r) {
        if (method == "recurrence") return r_via_recurrence(m, l);
        if (method == "stirling1") return r_via_stirling_first(m, l);
        if (method == "blocks") return r_via_blocks(m, l);
        if (method == "from-s") return r_from_s(m, l);
        if (method == "egf") return egf_coefficient(egf_r(m, l), l);
    } else {
        if (method == "blocks") return s_via_blocks(m, l);
        if (method == "inclusion-exclusion") return s_via_inclusion_exclusion(m, l);
        if (method == "first-blocks") return s_via_first_blocks(m, l);
        if (method == "egf") return egf_coefficient(egf_s(m, l), l);
    }
    throw CLI::ValidationError("unknown method '" + method + "' for kind");
}

std::vector<std::string> methods_for(bpa::SeqKind kind, const std::string& method) {
    if (method != "all") return {method};
    if (kind == bpa::SeqKind::r) return {"recurrence", "stirling1", "blocks"};
    return {"blocks", "inclusion-exclusion", "first-blocks"};
}

struct ComputeArgs {
    std::string kind;
    unsigned long m = 0;
    unsigned long l = 0;
    std::string method = "all";
    std::string cache_path;
};

int run_compute(const ComputeArgs& args) {
    using namespace bpa;
    const SeqKind kind = parse_kind(args.kind);

    std::optional<CacheFile> cache;
    if (!args.cache_path.empty()) {
        if (std::ifstream probe(args.cache_path); probe.good())
            cache = CacheFile::load(args.cache_path);
        else
            cache = CacheFile{};
    }

    if (cache && args.method != "all") {
        if (auto hit = cache->lookup(kind, args.m, args.l)) {
            OutputRecord rec{kind, args.m, args.l, hit->get_str(), "cache", 0.0};
            std::cout << record_plain(rec) << "\n";
            return 0;
        }
    }

    SequenceTable table;
    BigNat value;
    for (const auto& method : methods_for(kind, args.method)) {
        auto start = Clock::now();
        BigNat v = compute_one(kind, args.m, args.l, method);
        OutputRecord rec{kind, args.m, args.l, v.get_str(), method, ms_since(start)};
        std::cout << record_plain(rec) << "\n";
        table.insert(kind, args.m, args.l, v, method); // throws on disagreement
        value = v;
    }
    if (args.method == "all") std::cout << "cross-check OK\n";

    if (cache) {
        cache->put(kind, args.m, args.l, value);
        cache->save(args.cache_path);
    }
    return 0;
}

struct TableArgs {
    std::string kind;
    unsigned long m_max = 0;
    unsigned long l_max = 0;
    std::string format = "plain";
};

int run_table(const TableArgs& args) {
    using namespace bpa;
    const SeqKind kind = parse_kind(args.kind);
    if (args.format == "plain")
        std::cout << format_table_plain(kind, args.m_max, args.l_max);
    else if (args.format == "csv")
        std::cout << format_table_csv(kind, args.m_max, args.l_max);
    else if (args.format == "json")
        std::cout << format_table_json(kind, args.m_max, args.l_max);
    else
        throw CLI::ValidationError("format must be plain, csv or json");
    return 0;
}

struct EnumerateArgs {
    std::string kind;
    std::vector<unsigned long> params;
    std::optional<unsigned long> limit;
    bool force = false;
};

int run_enumerate(const EnumerateArgs& args) {
    using namespace bpa;
    unsigned long m = 0, l = 0;
    if (args.kind == "pa") {
        if (args.params.size() != 1)
            throw CLI::ValidationError("enumerate pa takes one argument: l");
        l = args.params[0];
    } else if (args.kind == "bpa" || args.kind == "special") {
        if (args.params.size() != 2)
            throw CLI::ValidationError("enumerate " + args.kind + " takes two arguments: m l");
        m = args.params[0];
        l = args.params[1];
    } else {
        throw CLI::ValidationError("kind must be pa, bpa or special");
    }

    const BigNat predicted = args.kind == "pa"    ? ordered_bell(l)
                             : args.kind == "bpa" ? r_via_recurrence(m, l)
                                                  : s_via_blocks(m, l);
    if (!args.force && predicted > 1000000) {
        std::cerr << "error: would enumerate " << predicted.get_str()
                  << " arrangements; rerun with --force to proceed\n";
        return 2;
    }

    auto print_all = [&](auto stream) {
        unsigned long printed = 0;
        while (auto text = stream.next_text()) {
            if (args.limit && printed >= *args.limit) break;
            std::cout << *text << "\n";
            ++printed;
        }
        std::cout << "total " << stream.size() << "\n";
    };
    if (args.kind == "pa")
        print_all(enumerate_pa(l));
    else if (args.kind == "bpa")
        print_all(enumerate_bpa(m, l));
    else
        print_all(enumerate_special(m, l));
    return 0;
}

struct VerifyArgs {
    unsigned long m_max = 0;
    unsigned long l_max = 0;
    bool with_oracle = false;
    bool with_bijections = false;
    std::string format = "plain";
};

int run_verify(const VerifyArgs& args) {
    using namespace bpa;
    VerifyReport report = verify_identities(args.m_max, args.l_max);
    if (args.with_oracle) report.merge(verify_oracle(args.m_max, args.l_max));
    if (args.with_bijections) report.merge(verify_bijections(args.m_max, args.l_max));

    if (args.format == "json")
        std::cout << report_json(report).dump(2) << "\n";
    else if (args.format == "plain")
        std::cout << report_text(report);
    else
        throw CLI::ValidationError("format must be plain or json");
    return report.all_pass() ? 0 : 1;
}

struct SeriesArgs {
    std::string series;
    std::vector<unsigned long> params;
    unsigned long terms = 20;
    unsigned long bits = 256;
    double eps = 0.25;
    bool trace = false;
};

int run_series(const SeriesArgs& args) {
    using namespace bpa;
    unsigned long m = 0, l = 0;
    if (args.params.size() == 1) {
        l = args.params[0];
    } else if (args.params.size() == 2) {
        m = args.params[0];
        l = args.params[1];
    } else {
        throw CLI::ValidationError("series takes l or m l");
    }

    std::vector<std::string> trace;
    std::vector<std::string>* trace_ptr = args.trace ? &trace : nullptr;
    const auto bits = static_cast<mpfr_prec_t>(args.bits);

    std::optional<ApproxValue> approx;
    if (args.series == "gross") {
        approx = m == 0 ? gross_series_r(l, args.eps, bits, trace_ptr)
                        : gross_series_barred(m, l, args.eps, bits, trace_ptr);
    } else if (args.series == "convergent") {
        approx = m == 0 ? convergent_series_r(l, args.terms, bits, trace_ptr)
                        : convergent_series_barred(m, l, args.terms, bits, trace_ptr);
    } else if (args.series == "asymp") {
        if (m != 0)
            throw CLI::ValidationError("the asymptotic leading term is defined for r(l) only");
        approx = asymptotic_leading(l, bits);
    } else {
        throw CLI::ValidationError("series must be gross, asymp or convergent");
    }

    for (const auto& line : trace) std::cout << line << "\n";

    const BigNat exact = r_via_recurrence(m, l);
    std::cout << "value       = " << approx->value.str(30) << "\n";
    std::cout << "error bound = " << approx->error_bound.str(10) << "\n";
    std::cout << "exact       = " << exact.get_str() << "\n";
    if (args.series == "asymp") {
        Real ratio = approx->value / Real::of(exact, approx->value.precision());
        std::cout << "ratio to exact = " << ratio.str(20) << "\n";
    } else {
        mpz_class rounded = approx->round_nearest();
        std::cout << "rounds to   = " << rounded.get_str()
                  << (rounded == exact ? " (matches exact)" : " (MISMATCH)") << "\n";
        if (rounded != exact) return 1;
    }
    if (!approx->contains(exact)) {
        std::cout << "interval check FAILED\n";
        return 1;
    }
    return 0;
}

struct BfileArgs {
    std::string kind;
    unsigned long m = 0;
    unsigned long l_max = 0;
    std::string path;
};

int run_bfile(const BfileArgs& args) {
    using namespace bpa;
    const SeqKind kind = parse_kind(args.kind);
    const std::string body = format_bfile(kind, args.m, args.l_max);
    std::ofstream out(args.path, std::ios::trunc);
    if (!out || !(out << body) || !out.flush()) {
        std::cerr << "error: cannot write b-file to " << args.path << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for counting, enumerating and transforming "
                 "barred preferential arrangements"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "compute r(m,l) or s(m,l)");
    compute->add_option("kind", compute_args.kind, "sequence kind: r or s")->required();
    compute->add_option("m", compute_args.m, "number of bars")->required();
    compute->add_option("l", compute_args.l, "number of elements")->required();
    compute->add_option("--method", compute_args.method,
                        "formula id or 'all' (r: recurrence|stirling1|blocks|egf|from-s; "
                        "s: blocks|inclusion-exclusion|first-blocks|egf)");
    compute->add_option("--cache", compute_args.cache_path, "flat-file value cache");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "print the value grid");
    table->add_option("kind", table_args.kind)->required();
    table->add_option("m_max", table_args.m_max)->required();
    table->add_option("l_max", table_args.l_max)->required();
    table->add_option("--format", table_args.format, "plain, csv or json");

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "list arrangements in canonical text");
    enumerate->add_option("kind", enum_args.kind, "pa, bpa or special")->required();
    enumerate->add_option("params", enum_args.params, "l (for pa) or m l")->expected(1, 2);
    enumerate->add_option("--limit", enum_args.limit, "print at most this many lines");
    enumerate->add_flag("--force", enum_args.force, "enumerate past the size guard");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "cross-check every identity on a grid");
    verify->add_option("m_max", verify_args.m_max)->required();
    verify->add_option("l_max", verify_args.l_max)->required();
    verify->add_flag("--oracle", verify_args.with_oracle, "also compare against enumeration");
    verify->add_flag("--bijections", verify_args.with_bijections,
                     "also round-trip the bijections exhaustively");
    verify->add_option("--format", verify_args.format, "plain or json");

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "evaluate the infinite-series forms");
    series->add_option("series", series_args.series, "gross, asymp or convergent")->required();
    series->add_option("params", series_args.params, "l or m l")->expected(1, 2);
    series->add_option("--terms", series_args.terms, "pair terms of the convergent series");
    series->add_option("--bits", series_args.bits, "working precision in bits");
    series->add_option("--eps", series_args.eps, "requested error bound (gross series)");
    series->add_flag("--trace", series_args.trace, "print the per-term breakdown");

    BfileArgs bfile_args;
    auto* bfile = app.add_subcommand("bfile", "write an OEIS b-file");
    bfile->add_option("kind", bfile_args.kind)->required();
    bfile->add_option("m", bfile_args.m)->required();
    bfile->add_option("l_max", bfile_args.l_max)->required();
    bfile->add_option("path", bfile_args.path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) return run_compute(compute_args);
        if (*table) return run_table(table_args);
        if (*enumerate) return run_enumerate(enum_args);
        if (*verify) return run_verify(verify_args);
        if (*series) return run_series(series_args);
        if (*bfile) return run_bfile(bfile_args);
    } catch (const bpa::internal_error& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const bpa::precision_error& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
