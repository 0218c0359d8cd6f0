// sxc.cpp - command-line front end
//
// Subcommands map one-to-one onto the library modules: count / enumerate
// (membership), verify (representation counts), sx / scan / chain-check
// (record statistics), analysis (the delta-side constants), search / witness
// (grid search and the infimum families).  Exit codes: 0 success, 1 a check
// found a violation, 2 usage or parse errors.  All exact values print as
// num/den decimal strings; decimals are fixed-point, round-half-even, with
// --precision significant digits (default 12).

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sxc/analysis.hpp"
#include "sxc/decimal.hpp"
#include "sxc/perfect.hpp"
#include "sxc/schedule.hpp"
#include "sxc/search.hpp"
#include "sxc/sx.hpp"
#include "sxc/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Common {
    std::string format = "table";
    unsigned precision = 12;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--precision", common.precision,
                    "significant digits for decimals")
        ->check(CLI::Range(1u, 18u))
        ->capture_default_str();
}

std::string fmt_double(double v, unsigned sig) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", static_cast<int>(sig), v);
    return buf;
}

std::string rat_str(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json rat_json(const mpq_class& q) {
    return json{{"num", q.get_num().get_str()},
                {"den", q.get_den().get_str()}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

mpz_class parse_mpz(const std::string& text, const char* flag) {
    try {
        if (text.empty() || text.find_first_not_of("0123456789") !=
                                std::string::npos)
            throw std::invalid_argument(text);
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw sxc::parse_error(std::string(flag) +
                               ": expected a nonnegative decimal integer, got '" +
                               text + "'");
    }
}

sxc::Side parse_side(const std::string& text) {
    if (text == "A") return sxc::Side::A;
    if (text == "B") return sxc::Side::B;
    throw sxc::parse_error("--side must be A or B");
}

void parse_range(const std::string& text, unsigned& lo, unsigned& hi,
                 const char* flag) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = static_cast<unsigned>(std::stoul(text));
        } else {
            lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
            hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
        }
    } catch (const std::exception&) {
        throw sxc::parse_error(std::string(flag) + ": expected N or LO..HI, got '" +
                               text + "'");
    }
    if (lo < 2 || hi < lo)
        throw sxc::parse_error(std::string(flag) + ": need 2 <= LO <= HI");
}

std::vector<unsigned> parse_tail(const std::string& text) {
    std::vector<unsigned> tail;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            const unsigned long v = std::stoul(item);
            if (v < 2 || v > 0xffffffffUL) throw std::out_of_range(item);
            tail.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw sxc::parse_error("--tail: entries must be integers >= 2, got '" +
                                   item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (tail.empty()) throw sxc::parse_error("--tail: empty tail");
    return tail;
}

unsigned env_threads() {
    const char* env = std::getenv("SXC_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0 || v > 1024)
        throw sxc::parse_error("SXC_THREADS must be an integer in [1, 1024]");
    return static_cast<unsigned>(v);
}

std::string tail_str(const std::vector<unsigned>& tail) {
    std::string out;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(tail[i]);
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- count ----------------------------------------------------------------

struct CountArgs {
    std::string schedule, side = "A", x;
    bool swap = false;
    Common common;
};

int run_count(const CountArgs& args) {
    sxc::PerfectPair pair(sxc::RadixSchedule::parse(args.schedule), args.swap);
    const sxc::Side side = parse_side(args.side);
    const mpz_class x = parse_mpz(args.x, "--x");
    const mpz_class count = pair.count(side, x);

    if (args.common.format == "json") {
        emit(json{{"schedule", pair.schedule().to_string()},
                  {"side", std::string(1, sxc::side_name(side))},
                  {"swap", args.swap},
                  {"x", x.get_str()},
                  {"count", count.get_str()}});
    } else if (args.common.format == "csv") {
        std::cout << "schedule,side,swap,x,count\n"
                  << csv_field(pair.schedule().to_string()) << ','
                  << sxc::side_name(side) << ',' << (args.swap ? 1 : 0) << ','
                  << x.get_str() << ',' << count.get_str() << "\n";
    } else {
        std::cout << "schedule: " << pair.schedule().to_string() << "\n"
                  << "side: " << sxc::side_name(side) << "\n"
                  << "swap: " << (args.swap ? "true" : "false") << "\n"
                  << "x: " << x.get_str() << "\n"
                  << "count: " << count.get_str() << "\n";
    }
    return 0;
}

// ---- enumerate ------------------------------------------------------------

struct EnumArgs {
    std::string schedule, side = "A", limit;
    bool swap = false;
    Common common;
};

int run_enumerate(const EnumArgs& args) {
    sxc::PerfectPair pair(sxc::RadixSchedule::parse(args.schedule), args.swap);
    const sxc::Side side = parse_side(args.side);
    const mpz_class limit = parse_mpz(args.limit, "--limit");
    const std::vector<mpz_class> members =
        sxc::enumerate_members(pair, side, limit);

    if (args.common.format == "json") {
        json list = json::array();
        for (const auto& m : members) list.push_back(m.get_str());
        emit(json{{"schedule", pair.schedule().to_string()},
                  {"side", std::string(1, sxc::side_name(side))},
                  {"swap", args.swap},
                  {"limit", limit.get_str()},
                  {"count", members.size()},
                  {"members", std::move(list)}});
    } else if (args.common.format == "csv") {
        std::cout << "index,member\n";
        for (std::size_t i = 0; i < members.size(); ++i)
            std::cout << i << ',' << members[i].get_str() << "\n";
    } else {
        for (const auto& m : members) std::cout << m.get_str() << "\n";
    }
    return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string schedule, set_a, set_b;
    std::uint64_t limit = 0;
    bool swap = false;
    bool stats = false;
    Common common;
};

int run_verify(const VerifyArgs& args) {
    const bool schedule_mode = !args.schedule.empty();
    if (schedule_mode == (!args.set_a.empty() || !args.set_b.empty()))
        throw sxc::parse_error(
            "verify needs either --schedule or both --set-a and --set-b");
    if (!schedule_mode && (args.set_a.empty() || args.set_b.empty()))
        throw sxc::parse_error("verify needs both --set-a and --set-b");

    sxc::SetData a, b;
    std::string source;
    if (schedule_mode) {
        sxc::PerfectPair pair(sxc::RadixSchedule::parse(args.schedule),
                              args.swap);
        a = sxc::SetData{
            sxc::enumerate_members_u64(pair, sxc::Side::A, args.limit)};
        b = sxc::SetData{
            sxc::enumerate_members_u64(pair, sxc::Side::B, args.limit)};
        source = pair.schedule().to_string();
    } else {
        a = sxc::load_set(args.set_a);
        b = sxc::load_set(args.set_b);
        source = args.set_a + " + " + args.set_b;
    }
    const sxc::RepReport rep = sxc::check_complement(a, b, args.limit);
    std::optional<sxc::RatioStats> stats;
    if (args.stats && args.limit >= 1) stats = sxc::ratio_stats(a, b, args.limit);

    auto opt_str = [](const std::optional<std::uint64_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };

    if (args.common.format == "json") {
        json j{{"mode", schedule_mode ? "schedule" : "sets"},
               {"source", source},
               {"swap", args.swap},
               {"limit", rep.horizon},
               {"perfect", rep.perfect()},
               {"min_count", rep.min_count},
               {"max_count", rep.max_count},
               {"first_zero", rep.first_zero ? json(*rep.first_zero) : json()},
               {"first_multi",
                rep.first_multi ? json(*rep.first_multi) : json()},
               {"threshold", rep.threshold ? json(*rep.threshold) : json()}};
        if (stats) {
            j["max_product_ratio"] = rat_json(stats->max_product_ratio);
            j["product_argmax"] = stats->product_argmax;
            j["max_count_ratio_sq"] = rat_json(stats->max_count_ratio_sq);
            j["count_argmax"] = stats->count_argmax;
            j["min_product_slack"] = stats->min_product_slack.get_str();
            j["slack_argmin"] = stats->slack_argmin;
        }
        emit(j);
    } else if (args.common.format == "csv") {
        std::cout << "mode,source,limit,perfect,min_count,max_count,"
                     "first_zero,first_multi,threshold\n"
                  << (schedule_mode ? "schedule" : "sets") << ','
                  << csv_field(source) << ',' << rep.horizon << ','
                  << (rep.perfect() ? 1 : 0) << ',' << rep.min_count << ','
                  << rep.max_count << ',' << opt_str(rep.first_zero) << ','
                  << opt_str(rep.first_multi) << ','
                  << opt_str(rep.threshold) << "\n";
    } else {
        std::cout << "source: " << source << "\n"
                  << "limit: " << rep.horizon << "\n"
                  << "perfect: " << (rep.perfect() ? "true" : "false") << "\n"
                  << "min_count: " << rep.min_count << "\n"
                  << "max_count: " << rep.max_count << "\n";
        if (rep.first_zero)
            std::cout << "first_zero: " << *rep.first_zero << "\n";
        if (rep.first_multi)
            std::cout << "first_multi: " << *rep.first_multi << "\n";
        if (rep.threshold)
            std::cout << "threshold: " << *rep.threshold << "\n";
        if (stats) {
            std::cout << "max_product_ratio: "
                      << rat_str(stats->max_product_ratio) << " ("
                      << sxc::rational_decimal(stats->max_product_ratio,
                                               args.common.precision)
                      << ") at x=" << stats->product_argmax << "\n"
                      << "max_count_ratio_sq: "
                      << rat_str(stats->max_count_ratio_sq) << " at x="
                      << stats->count_argmax << "\n"
                      << "min_product_slack: "
                      << stats->min_product_slack.get_str()
                      << " at x=" << stats->slack_argmin << "\n";
        }
    }
    return rep.perfect() ? 0 : 1;
}

// ---- sx -------------------------------------------------------------------

struct SxArgs {
    std::string schedule;
    unsigned terms = 0;
    bool swap = false;
    Common common;
};

int run_sx(const SxArgs& args) {
    sxc::PerfectPair pair(sxc::RadixSchedule::parse(args.schedule), args.swap);
    const sxc::SxValue value = sxc::sx_value(pair);
    const unsigned sig = args.common.precision;

    std::vector<sxc::SxTerm> terms;
    for (unsigned s = 1; s <= args.terms; ++s) {
        terms.push_back(sxc::term(pair, sxc::Side::A, s));
        terms.push_back(sxc::term(pair, sxc::Side::B, s));
    }

    if (args.common.format == "json") {
        json classes = json::array();
        for (const auto& c : value.classes) {
            json jc{{"side", std::string(1, sxc::side_name(c.side))},
                    {"phase", c.phase},
                    {"growth", sxc::growth_name(c.growth)}};
            if (c.growth == sxc::TailGrowth::finite) {
                jc["limit_squared"] = rat_json(c.limit);
                jc["limit_decimal"] = sxc::sqrt_decimal(c.limit, sig);
            }
            classes.push_back(std::move(jc));
        }
        json j{{"schedule", pair.schedule().to_string()},
               {"swap", args.swap},
               {"classification", value.finite ? "finite" : "infinite"}};
        if (value.finite) {
            j["sx_squared"] = rat_json(value.squared);
            j["sx_decimal"] = sxc::sqrt_decimal(value.squared, sig);
        }
        j["classes"] = std::move(classes);
        if (!terms.empty()) {
            json jt = json::array();
            for (const auto& t : terms)
                jt.push_back(
                    json{{"side", std::string(1, sxc::side_name(t.side))},
                         {"s", t.s},
                         {"point", t.point.get_str()},
                         {"count", t.count.get_str()},
                         {"ratio_squared", rat_json(t.squared_ratio)},
                         {"ratio_decimal",
                          sxc::sqrt_decimal(t.squared_ratio, sig)}});
            j["terms"] = std::move(jt);
        }
        emit(j);
    } else if (args.common.format == "csv") {
        // csv carries the per-side per-phase classification table
        std::cout << "side,phase,growth,limit_squared_num,limit_squared_den,"
                     "limit_decimal\n";
        for (const auto& c : value.classes) {
            std::cout << sxc::side_name(c.side) << ',' << c.phase << ','
                      << sxc::growth_name(c.growth) << ',';
            if (c.growth == sxc::TailGrowth::finite)
                std::cout << c.limit.get_num().get_str() << ','
                          << c.limit.get_den().get_str() << ','
                          << sxc::sqrt_decimal(c.limit, sig);
            else
                std::cout << ",,";
            std::cout << "\n";
        }
    } else {
        std::cout << "schedule: " << pair.schedule().to_string() << "\n"
                  << "swap: " << (args.swap ? "true" : "false") << "\n"
                  << "classification: "
                  << (value.finite ? "finite" : "infinite") << "\n";
        if (value.finite)
            std::cout << "sx_squared: " << rat_str(value.squared) << "\n"
                      << "sx_decimal: " << sxc::sqrt_decimal(value.squared, sig)
                      << "\n";
        std::cout << "classes:\n";
        for (const auto& c : value.classes) {
            std::cout << "  side " << sxc::side_name(c.side) << " phase "
                      << c.phase << ": " << sxc::growth_name(c.growth);
            if (c.growth == sxc::TailGrowth::finite)
                std::cout << " limit_squared " << rat_str(c.limit) << " ("
                          << sxc::sqrt_decimal(c.limit, sig) << ")";
            std::cout << "\n";
        }
        if (!terms.empty()) {
            std::cout << "terms:\n";
            for (const auto& t : terms)
                std::cout << "  side " << sxc::side_name(t.side) << " s=" << t.s
                          << ": point " << t.point.get_str() << " count "
                          << t.count.get_str() << " ratio_squared "
                          << rat_str(t.squared_ratio) << " ("
                          << sxc::sqrt_decimal(t.squared_ratio, sig) << ")\n";
        }
    }
    return 0;
}

// ---- scan -----------------------------------------------------------------

struct ScanArgs {
    std::string schedule, side = "A", limit;
    bool swap = false;
    Common common;
};

int run_scan(const ScanArgs& args) {
    sxc::PerfectPair pair(sxc::RadixSchedule::parse(args.schedule), args.swap);
    const sxc::Side side = parse_side(args.side);
    const mpz_class limit = parse_mpz(args.limit, "--limit");
    const auto series = sxc::ratio_series(pair, side, limit);
    const unsigned sig = args.common.precision;

    if (args.common.format == "json") {
        json entries = json::array();
        for (const auto& e : series)
            entries.push_back(json{
                {"x", e.x.get_str()},
                {"count", e.count.get_str()},
                {"ratio_squared", rat_json(e.squared_ratio)},
                {"ratio_decimal", sxc::sqrt_decimal(e.squared_ratio, sig)}});
        emit(json{{"schedule", pair.schedule().to_string()},
                  {"side", std::string(1, sxc::side_name(side))},
                  {"swap", args.swap},
                  {"limit", limit.get_str()},
                  {"entries", std::move(entries)}});
    } else if (args.common.format == "csv") {
        std::cout << "x,count,ratio_squared_num,ratio_squared_den,"
                     "ratio_decimal\n";
        for (const auto& e : series)
            std::cout << e.x.get_str() << ',' << e.count.get_str() << ','
                      << e.squared_ratio.get_num().get_str() << ','
                      << e.squared_ratio.get_den().get_str() << ','
                      << sxc::sqrt_decimal(e.squared_ratio, sig) << "\n";
    } else {
        std::cout << "x count ratio_squared ratio\n";
        for (const auto& e : series)
            std::cout << e.x.get_str() << ' ' << e.count.get_str() << ' '
                      << rat_str(e.squared_ratio) << ' '
                      << sxc::sqrt_decimal(e.squared_ratio, sig) << "\n";
    }
    return 0;
}

// ---- chain-check ----------------------------------------------------------

struct ChainArgs {
    std::string schedule, limit;
    bool swap = false;
    Common common;
};

int run_chain(const ChainArgs& args) {
    sxc::PerfectPair pair(sxc::RadixSchedule::parse(args.schedule), args.swap);
    const mpz_class limit = parse_mpz(args.limit, "--limit");
    const auto violations = sxc::chain_check(pair, limit);

    if (args.common.format == "json") {
        json list = json::array();
        for (const auto& v : violations)
            list.push_back(json{{"side", std::string(1, sxc::side_name(v.side))},
                                {"j", v.j},
                                {"y", v.y.get_str()},
                                {"step", v.step.get_str()},
                                {"count_at", v.count_at.get_str()},
                                {"count_after", v.count_after.get_str()}});
        emit(json{{"schedule", pair.schedule().to_string()},
                  {"swap", args.swap},
                  {"limit", limit.get_str()},
                  {"violation_count", violations.size()},
                  {"violations", std::move(list)}});
    } else if (args.common.format == "csv") {
        std::cout << "side,j,y,step,count_at,count_after\n";
        for (const auto& v : violations)
            std::cout << sxc::side_name(v.side) << ',' << v.j << ','
                      << v.y.get_str() << ',' << v.step.get_str() << ','
                      << v.count_at.get_str() << ','
                      << v.count_after.get_str() << "\n";
    } else {
        std::cout << "schedule: " << pair.schedule().to_string() << "\n"
                  << "limit: " << limit.get_str() << "\n"
                  << "violations: " << violations.size() << "\n";
        for (const auto& v : violations)
            std::cout << "  side " << sxc::side_name(v.side) << " j=" << v.j
                      << " y=" << v.y.get_str() << " step=" << v.step.get_str()
                      << " count " << v.count_at.get_str() << " -> "
                      << v.count_after.get_str() << "\n";
    }
    return violations.empty() ? 0 : 1;
}

// ---- analysis ---------------------------------------------------------------

struct AnalysisArgs {
    bool constants = false;
    std::optional<double> delta;
    std::optional<unsigned> grid;
    Common common;
};

int run_analysis(const AnalysisArgs& args) {
    namespace an = sxc::analysis;
    const unsigned sig = args.common.precision;
    const int given = (args.constants ? 1 : 0) + (args.delta ? 1 : 0) +
                      (args.grid ? 1 : 0);
    if (given != 1)
        throw sxc::parse_error(
            "analysis needs exactly one of --constants, --delta, --grid");

    if (args.constants) {
        const double c0 = an::c0();
        const an::Roots roots = an::r_roots(c0);
        const std::vector<std::pair<const char*, double>> rows = {
            {"c0", c0},
            {"delta0", an::delta0()},
            {"sqrt_1_plus_c0", an::sx_lower_bound()},
            {"fourth_root_4_5", an::fourth_root_45()},
            {"r1_at_c0", roots.r1},
            {"r2_at_c0", roots.r2},
            {"f_at_c0", an::f(c0)},
        };
        if (args.common.format == "json") {
            json j;
            for (const auto& [name, v] : rows) j[name] = v;
            emit(j);
        } else if (args.common.format == "csv") {
            std::cout << "name,value\n";
            for (const auto& [name, v] : rows)
                std::cout << name << ',' << fmt_double(v, sig) << "\n";
        } else {
            for (const auto& [name, v] : rows)
                std::cout << name << ": " << fmt_double(v, sig) << "\n";
        }
        return 0;
    }

    if (args.delta) {
        const double d = *args.delta;
        if (d < 0)
            throw sxc::domain_error("analysis: delta must be >= 0");
        const double disc = an::discriminant(d);
        const bool defined = disc >= 0;
        std::optional<an::Roots> roots;
        std::optional<double> fd;
        if (defined) {
            roots = an::r_roots(d);
            fd = an::f(d);
        }
        if (args.common.format == "json") {
            json j{{"delta", d}, {"discriminant", disc}, {"defined", defined}};
            if (defined) {
                j["r1"] = roots->r1;
                j["r2"] = roots->r2;
                j["f"] = *fd;
            }
            emit(j);
        } else if (args.common.format == "csv") {
            std::cout << "delta,discriminant,r1,r2,f\n"
                      << fmt_double(d, sig) << ',' << fmt_double(disc, sig)
                      << ',';
            if (defined)
                std::cout << fmt_double(roots->r1, sig) << ','
                          << fmt_double(roots->r2, sig) << ','
                          << fmt_double(*fd, sig);
            else
                std::cout << ",,";
            std::cout << "\n";
        } else {
            std::cout << "delta: " << fmt_double(d, sig) << "\n"
                      << "discriminant: " << fmt_double(disc, sig) << "\n";
            if (defined)
                std::cout << "r1: " << fmt_double(roots->r1, sig) << "\n"
                          << "r2: " << fmt_double(roots->r2, sig) << "\n"
                          << "f: " << fmt_double(*fd, sig) << "\n";
            else
                std::cout << "r1, r2, f: undefined (delta > delta0)\n";
        }
        return 0;
    }

    const unsigned n = *args.grid;
    if (n < 1) throw sxc::domain_error("analysis: --grid needs N >= 1");
    const double top = an::delta0() - 1e-6;
    json jrows = json::array();
    const bool as_json = args.common.format == "json";
    if (!as_json) std::cout << "delta,discriminant,r1,r2,f\n";
    for (unsigned i = 0; i <= n; ++i) {
        const double d = top * i / n;
        const an::Roots roots = an::r_roots(d);
        const double fd = an::f(d);
        if (as_json) {
            jrows.push_back(json{{"delta", d},
                                 {"discriminant", an::discriminant(d)},
                                 {"r1", roots.r1},
                                 {"r2", roots.r2},
                                 {"f", fd}});
        } else {
            std::cout << fmt_double(d, sig) << ','
                      << fmt_double(an::discriminant(d), sig) << ','
                      << fmt_double(roots.r1, sig) << ','
                      << fmt_double(roots.r2, sig) << ',' << fmt_double(fd, sig)
                      << "\n";
        }
    }
    if (as_json) emit(json{{"points", n + 1}, {"rows", std::move(jrows)}});
    return 0;
}

// ---- search -----------------------------------------------------------------

struct SearchArgs {
    std::string m1 = "2..64", m2 = "2..64", tail = "2";
    std::size_t top = 10;
    unsigned threads = 0;
    bool threads_given = false;
    Common common;
};

int run_search(const SearchArgs& args) {
    sxc::SearchSpace space;
    parse_range(args.m1, space.m1_lo, space.m1_hi, "--m1");
    parse_range(args.m2, space.m2_lo, space.m2_hi, "--m2");
    space.tail = parse_tail(args.tail);
    const unsigned threads = args.threads_given ? args.threads : env_threads();

    const sxc::SearchResult result = sxc::grid_search(space, threads);
    const std::size_t shown =
        args.top == 0 ? result.entries.size()
                      : std::min(args.top, result.entries.size());
    const unsigned sig = args.common.precision;

    if (args.common.format == "json") {
        json entries = json::array();
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& e = result.entries[i];
            entries.push_back(
                json{{"m1", e.m1},
                     {"m2", e.m2},
                     {"tail", e.tail},
                     {"sx_squared", rat_json(e.sx_squared)},
                     {"sx_decimal", sxc::sqrt_decimal(e.sx_squared, sig)},
                     {"gap_decimal",
                      sxc::gap_to_fourth_root_45(e.sx_squared, sig)}});
        }
        emit(json{{"m1", json::array({space.m1_lo, space.m1_hi})},
                  {"m2", json::array({space.m2_lo, space.m2_hi})},
                  {"tail", space.tail},
                  {"evaluated", result.entries.size()},
                  {"any_below_infimum", result.any_below_infimum},
                  {"entries", std::move(entries)}});
    } else if (args.common.format == "csv") {
        std::cout << "m1,m2,tail,sx_squared_num,sx_squared_den,sx_decimal,"
                     "gap_decimal\n";
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& e = result.entries[i];
            std::cout << e.m1 << ',' << e.m2 << ','
                      << csv_field(tail_str(e.tail)) << ','
                      << e.sx_squared.get_num().get_str() << ','
                      << e.sx_squared.get_den().get_str() << ','
                      << sxc::sqrt_decimal(e.sx_squared, sig) << ','
                      << sxc::gap_to_fourth_root_45(e.sx_squared, sig) << "\n";
        }
    } else {
        std::cout << "space: m1 in [" << space.m1_lo << ", " << space.m1_hi
                  << "], m2 in [" << space.m2_lo << ", " << space.m2_hi
                  << "], tail " << tail_str(space.tail) << "*\n"
                  << "evaluated: " << result.entries.size() << "\n"
                  << "any_below_infimum: "
                  << (result.any_below_infimum ? "true" : "false") << "\n"
                  << "m1 m2 tail sx_squared sx gap\n";
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& e = result.entries[i];
            std::cout << e.m1 << ' ' << e.m2 << ' ' << tail_str(e.tail) << ' '
                      << rat_str(e.sx_squared) << ' '
                      << sxc::sqrt_decimal(e.sx_squared, sig) << ' '
                      << sxc::gap_to_fourth_root_45(e.sx_squared, sig) << "\n";
        }
    }
    return result.any_below_infimum ? 1 : 0;
}

// ---- witness ----------------------------------------------------------------

struct WitnessArgs {
    std::optional<unsigned> family;
    std::optional<double> sup;
    Common common;
};

int run_witness(const WitnessArgs& args) {
    const unsigned sig = args.common.precision;
    if (args.family.has_value() == args.sup.has_value())
        throw sxc::parse_error("witness needs exactly one of --family, --sup");

    if (args.family) {
        const auto rows = sxc::witness_family(*args.family);
        if (args.common.format == "json") {
            json list = json::array();
            for (const auto& r : rows)
                list.push_back(
                    json{{"k", r.k},
                         {"m1", r.m1.get_str()},
                         {"m2", r.m2.get_str()},
                         {"sx_squared", rat_json(r.sx_squared)},
                         {"sx_decimal", sxc::sqrt_decimal(r.sx_squared, sig)},
                         {"gap_decimal",
                          sxc::gap_to_fourth_root_45(r.sx_squared, sig)}});
            emit(json{{"rows", std::move(list)}});
        } else if (args.common.format == "csv") {
            std::cout << "k,m1,m2,sx_squared_num,sx_squared_den,sx_decimal,"
                         "gap_decimal\n";
            for (const auto& r : rows)
                std::cout << r.k << ',' << r.m1.get_str() << ','
                          << r.m2.get_str() << ','
                          << r.sx_squared.get_num().get_str() << ','
                          << r.sx_squared.get_den().get_str() << ','
                          << sxc::sqrt_decimal(r.sx_squared, sig) << ','
                          << sxc::gap_to_fourth_root_45(r.sx_squared, sig)
                          << "\n";
        } else {
            std::cout << "k m1 m2 sx_squared sx gap\n";
            for (const auto& r : rows)
                std::cout << r.k << ' ' << r.m1.get_str() << ' '
                          << r.m2.get_str() << ' ' << rat_str(r.sx_squared)
                          << ' ' << sxc::sqrt_decimal(r.sx_squared, sig) << ' '
                          << sxc::gap_to_fourth_root_45(r.sx_squared, sig)
                          << "\n";
        }
        return 0;
    }

    const sxc::SupWitness w = sxc::sup_witness(*args.sup);
    if (args.common.format == "json") {
        emit(json{{"schedule", ";2,3*"},
                  {"side", "B"},
                  {"threshold", *args.sup},
                  {"s", w.s},
                  {"ratio_squared", rat_json(w.ratio_squared)},
                  {"ratio_decimal", sxc::sqrt_decimal(w.ratio_squared, sig)}});
    } else if (args.common.format == "csv") {
        std::cout << "threshold,s,ratio_squared_num,ratio_squared_den,"
                     "ratio_decimal\n"
                  << fmt_double(*args.sup, sig) << ',' << w.s << ','
                  << w.ratio_squared.get_num().get_str() << ','
                  << w.ratio_squared.get_den().get_str() << ','
                  << sxc::sqrt_decimal(w.ratio_squared, sig) << "\n";
    } else {
        std::cout << "schedule: ;2,3*\n"
                  << "side: B\n"
                  << "threshold: " << fmt_double(*args.sup, sig) << "\n"
                  << "s: " << w.s << "\n"
                  << "ratio_squared: " << rat_str(w.ratio_squared) << "\n"
                  << "ratio_decimal: "
                  << sxc::sqrt_decimal(w.ratio_squared, sig) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect additive complements from mixed-radix schedules"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "counting function of one side");
    count_cmd->add_option("--schedule", count_args.schedule, "radix schedule")
        ->required();
    count_cmd->add_option("--side", count_args.side, "A or B")
        ->check(CLI::IsMember({"A", "B"}))
        ->capture_default_str();
    count_cmd->add_option("--x", count_args.x, "horizon (decimal integer)")
        ->required();
    count_cmd->add_flag("--swap", count_args.swap, "interchange the sides");
    add_common(count_cmd, count_args.common);

    EnumArgs enum_args;
    auto* enum_cmd =
        app.add_subcommand("enumerate", "ascending members of one side");
    enum_cmd->add_option("--schedule", enum_args.schedule, "radix schedule")
        ->required();
    enum_cmd->add_option("--side", enum_args.side, "A or B")
        ->check(CLI::IsMember({"A", "B"}))
        ->capture_default_str();
    enum_cmd->add_option("--limit", enum_args.limit, "largest member to emit")
        ->required();
    enum_cmd->add_flag("--swap", enum_args.swap, "interchange the sides");
    add_common(enum_cmd, enum_args.common);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand(
        "verify", "representation counts over [0, limit]");
    verify_cmd->add_option("--schedule", verify_args.schedule,
                           "radix schedule (perfect-pair mode)");
    verify_cmd->add_option("--set-a", verify_args.set_a,
                           "file with set A (general mode)");
    verify_cmd->add_option("--set-b", verify_args.set_b,
                           "file with set B (general mode)");
    verify_cmd->add_option("--limit", verify_args.limit, "horizon N")
        ->required();
    verify_cmd->add_flag("--swap", verify_args.swap, "interchange the sides");
    verify_cmd->add_flag("--stats", verify_args.stats,
                         "also report counting-ratio statistics");
    add_common(verify_cmd, verify_args.common);

    SxArgs sx_args;
    auto* sx_cmd =
        app.add_subcommand("sx", "SX statistic and tail classification");
    sx_cmd->add_option("--schedule", sx_args.schedule, "radix schedule")
        ->required();
    sx_cmd->add_option("--terms", sx_args.terms,
                       "also list the first K record terms per side");
    sx_cmd->add_flag("--swap", sx_args.swap, "interchange the sides");
    add_common(sx_cmd, sx_args.common);

    ScanArgs scan_args;
    auto* scan_cmd =
        app.add_subcommand("scan", "ratio series at members (plot data)");
    scan_cmd->add_option("--schedule", scan_args.schedule, "radix schedule")
        ->required();
    scan_cmd->add_option("--side", scan_args.side, "A or B")
        ->check(CLI::IsMember({"A", "B"}))
        ->capture_default_str();
    scan_cmd->add_option("--limit", scan_args.limit, "largest x")->required();
    scan_cmd->add_flag("--swap", scan_args.swap, "interchange the sides");
    add_common(scan_cmd, scan_args.common);

    ChainArgs chain_args;
    auto* chain_cmd = app.add_subcommand(
        "chain-check", "verify the record chain inequalities up to a bound");
    chain_cmd->add_option("--schedule", chain_args.schedule, "radix schedule")
        ->required();
    chain_cmd->add_option("--limit", chain_args.limit, "largest point checked")
        ->required();
    chain_cmd->add_flag("--swap", chain_args.swap, "interchange the sides");
    add_common(chain_cmd, chain_args.common);

    AnalysisArgs analysis_args;
    auto* analysis_cmd =
        app.add_subcommand("analysis", "delta-side constants and functions");
    analysis_cmd->add_flag("--constants", analysis_args.constants,
                           "print the named constants");
    double delta_in = 0;
    auto* delta_opt = analysis_cmd->add_option(
        "--delta", delta_in, "evaluate the functions at one delta");
    unsigned grid_in = 0;
    auto* grid_opt = analysis_cmd->add_option(
        "--grid", grid_in, "emit N+1 grid rows over [0, delta0 - 1e-6]");
    add_common(analysis_cmd, analysis_args.common);

    SearchArgs search_args;
    auto* search_cmd =
        app.add_subcommand("search", "exact-ranked grid search over schedules");
    search_cmd->add_option("--m1", search_args.m1, "range LO..HI (or single N)")
        ->capture_default_str();
    search_cmd->add_option("--m2", search_args.m2, "range LO..HI (or single N)")
        ->capture_default_str();
    search_cmd->add_option("--tail", search_args.tail,
                           "periodic tail, comma-separated")
        ->capture_default_str();
    search_cmd->add_option("--top", search_args.top,
                           "rows to print (0 = all)")
        ->capture_default_str();
    auto* threads_opt = search_cmd->add_option(
        "--threads", search_args.threads,
        "worker threads (default: SXC_THREADS or hardware)");
    add_common(search_cmd, search_args.common);

    WitnessArgs witness_args;
    auto* witness_cmd =
        app.add_subcommand("witness", "infimum family / supremum walk");
    unsigned family_in = 0;
    auto* family_opt = witness_cmd->add_option(
        "--family", family_in, "first K sqrt(2)-convergent schedules");
    double sup_in = 0;
    auto* sup_opt = witness_cmd->add_option(
        "--sup", sup_in, "walk ;2,3* records until the ratio exceeds M");
    add_common(witness_cmd, witness_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (delta_opt->count() > 0) analysis_args.delta = delta_in;
    if (grid_opt->count() > 0) analysis_args.grid = grid_in;
    if (family_opt->count() > 0) witness_args.family = family_in;
    if (sup_opt->count() > 0) witness_args.sup = sup_in;
    search_args.threads_given = threads_opt->count() > 0;

    try {
        if (count_cmd->parsed()) return run_count(count_args);
        if (enum_cmd->parsed()) return run_enumerate(enum_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (sx_cmd->parsed()) return run_sx(sx_args);
        if (scan_cmd->parsed()) return run_scan(scan_args);
        if (chain_cmd->parsed()) return run_chain(chain_args);
        if (analysis_cmd->parsed()) return run_analysis(analysis_args);
        if (search_cmd->parsed()) return run_search(search_args);
        if (witness_cmd->parsed()) return run_witness(witness_args);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const sxc::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sxc::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
