// sqpack: exact values, constructions and certificates for square packings.
//
// Results go to stdout; errors go to stderr as one-line JSON objects.
// Exit codes: 0 success or valid, 1 invalid packing, 2 usage or input
// error, 3 refutation precondition not met.

#include "sqpack/sqpack.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace sqpack;

enum ExitCode { kOk = 0, kInvalid = 1, kUsage = 2, kPrecondition = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int fail(const char* kind, const std::string& message, int code) {
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
    return code;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

struct Options {
    std::optional<int> decimal;

    std::int64_t n = 0;
    std::int64_t max_n = 0;
    std::int64_t k = 0;
    std::string file;
    std::string out;
    std::string svg;
    std::string offset;
    std::string engine = "sweep";

    std::uint64_t seed = 1;
    std::int64_t iterations = SearchConfig{}.iterations;
    std::int64_t restarts = SearchConfig{}.restarts;
    double temperature = SearchConfig{}.initial_temperature;
    double cooling = SearchConfig{}.cooling_rate;
    double teleport = SearchConfig{}.teleport_probability;
    std::int64_t max_den = 1000;
};

std::string with_decimal(const Rational& r, const Options& o, int fallback = -1) {
    const int digits = o.decimal ? *o.decimal : fallback;
    return digits >= 0 ? r.str() + " " + r.to_decimal(digits) : r.str();
}

void add_decimal(Json& j, const char* key, const Rational& r, const Options& o) {
    if (o.decimal) j[std::string(key) + "_decimal"] = r.to_decimal(*o.decimal);
}

int cmd_value(const Options& o) {
    std::cout << with_decimal(g_value(o.n), o, 12) << "\n";
    return kOk;
}

int cmd_table(const Options& o) {
    std::cout << "n\tk\tc\tg\n";
    for (std::int64_t n = 1; n <= o.max_n; ++n) {
        const Decomposition d = decompose(n);
        std::cout << n << "\t" << d.k << "\t"
                  << (d.kind == DecompositionKind::perfect_square ? std::string("-") : std::to_string(d.c)) << "\t"
                  << with_decimal(g_value(d), o) << "\n";
    }
    return kOk;
}

int cmd_construct(const Options& o) {
    const Decomposition d = decompose(o.n);
    const Packing p = construct_optimal(o.n);
    const std::string doc = emit_packing(p, d.k);
    if (o.out.empty())
        std::cout << doc;
    else
        write_file(o.out, doc);
    if (!o.svg.empty()) {
        SvgOptions svg;
        const Rational cell(1, d.k);
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.squares[i].side != cell) svg.highlighted.insert(i);
        write_file(o.svg, emit_svg(p, svg));
    }
    if (!o.out.empty()) std::cout << "total " << with_decimal(total_side_length(p), o) << "\n";
    return kOk;
}

int cmd_verify(const Options& o) {
    const Packing p = parse_packing(read_file(o.file));
    const ValidationReport report = validate(p);
    Json out = to_json(report);
    const Rational total = total_side_length(p);
    out["count"] = p.size();
    out["total"] = total.canonical();
    add_decimal(out, "total", total, o);
    std::cout << out.dump(2) << "\n";
    return report.is_valid ? kOk : kInvalid;
}

int cmd_certify(const Options& o) {
    const PackingDocument doc = parse_packing_document(read_file(o.file));
    const auto& squares = doc.packing.squares;
    for (std::size_t i = 0; i < squares.size(); ++i)
        if (!squares[i].in_unit_square())
            return fail("precondition", "square " + std::to_string(i) + " leaves the unit square", kPrecondition);
    Rational a;
    if (o.offset.empty()) {
        a = best_offset(squares, o.k);
    } else {
        try {
            a = Rational::parse(o.offset);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--a: ") + e.what());
        }
        if (a.sign() < 0 || a >= Rational(1, o.k)) throw UsageError("--a must lie in [0, 1/k)");
    }
    const SweepTranscript t = build_transcript(squares, o.k, a);
    Json out = to_json(t);
    add_decimal(out, "chain_lhs", t.chain_lhs, o);
    add_decimal(out, "chain_bound", t.chain_bound, o);
    std::cout << out.dump(2) << "\n";
    if (!o.svg.empty()) {
        SvgOptions svg;
        svg.sweep_k = o.k;
        svg.sweep_a = a;
        write_file(o.svg, emit_svg(doc.packing, svg));
    }
    return kOk;
}

int cmd_refute(const Options& o) {
    const Packing p = parse_packing(read_file(o.file));
    try {
        const OverlapWitness w = o.engine == "sweep" ? refute_sweep(p.squares, o.k) : refute_lattice(p.squares, o.k);
        Json out = to_json(w);
        if (o.decimal) out["point_decimal"] = {w.px.to_decimal(*o.decimal), w.py.to_decimal(*o.decimal)};
        std::cout << out.dump(2) << "\n";
        return kOk;
    } catch (const PreconditionError& e) {
        return fail("precondition", e.what(), kPrecondition);
    }
}

int cmd_search(const Options& o) {
    SearchConfig cfg;
    cfg.seed = o.seed;
    cfg.iterations = o.iterations;
    cfg.restarts = o.restarts;
    cfg.initial_temperature = o.temperature;
    cfg.cooling_rate = o.cooling;
    cfg.teleport_probability = o.teleport;
    const FloatPacking fp = optimize(o.n, cfg);

    Json out{{"n", o.n}, {"g", g_value(o.n).canonical()}, {"best_total", fp.best_total}, {"restart", fp.restart}};
    if (!o.out.empty()) {
        const Packing p = rationalize(fp, o.max_den);
        write_file(o.out, emit_packing(p));
        const Rational total = total_side_length(p);
        out["rational_total"] = total.canonical();
        add_decimal(out, "rational_total", total, o);
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact square packing values, constructions and certificates"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--decimal", o.decimal, "Add decimal approximations with this many digits")
        ->check(CLI::Range(0, 100));

    auto* value = app.add_subcommand("value", "Print g(n) exactly and in decimal");
    value->add_option("n", o.n)->required()->check(CLI::PositiveNumber);

    auto* table = app.add_subcommand("table", "Print n, k, c, g(n) rows");
    table->add_option("--max", o.max_n)->required()->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "Emit an optimal packing of n squares");
    construct->add_option("n", o.n)->required()->check(CLI::PositiveNumber);
    construct->add_option("--out", o.out, "Packing document path (default: stdout)");
    construct->add_option("--svg", o.svg, "SVG rendering path");

    auto* verify = app.add_subcommand("verify", "Validate a packing document");
    verify->add_option("file", o.file)->required();

    auto* certify = app.add_subcommand("certify", "Print the sweep-line transcript");
    certify->add_option("file", o.file)->required();
    certify->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    certify->add_option("--a", o.offset, "Offset in [0, 1/k) as p/q (default: best offset)");
    certify->add_option("--svg", o.svg, "SVG rendering with the sweep lines");

    auto* refute = app.add_subcommand("refute", "Find two overlapping squares in an overfull family");
    refute->add_option("file", o.file)->required();
    refute->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    refute->add_option("--engine", o.engine)->check(CLI::IsMember({"sweep", "lattice"}));

    auto* search = app.add_subcommand("search", "Simulated annealing lower bound for g(n)");
    search->add_option("n", o.n)->required()->check(CLI::PositiveNumber);
    search->add_option("--seed", o.seed);
    search->add_option("--iters", o.iterations)->check(CLI::PositiveNumber);
    search->add_option("--restarts", o.restarts)->check(CLI::PositiveNumber);
    search->add_option("--temperature", o.temperature);
    search->add_option("--cooling", o.cooling);
    search->add_option("--teleport", o.teleport)->check(CLI::Range(0.0, 1.0));
    search->add_option("--out", o.out, "Write the rationalized packing here");
    search->add_option("--max-den", o.max_den, "Denominator bound for rationalization")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), kUsage);
    }

    try {
        if (*value) return cmd_value(o);
        if (*table) return cmd_table(o);
        if (*construct) return cmd_construct(o);
        if (*verify) return cmd_verify(o);
        if (*certify) return cmd_certify(o);
        if (*refute) return cmd_refute(o);
        if (*search) return cmd_search(o);
    } catch (const UsageError& e) {
        return fail("usage", e.what(), kUsage);
    } catch (const FormatError& e) {
        return fail("format", e.what(), kUsage);
    } catch (const std::invalid_argument& e) {
        return fail("usage", e.what(), kUsage);
    } catch (const std::domain_error& e) {
        return fail("usage", e.what(), kUsage);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 4);
    }
    return kUsage;
}
