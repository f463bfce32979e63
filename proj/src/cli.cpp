#include "lpk/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lpk/expression.hpp"
#include "lpk/filtration.hpp"
#include "lpk/ktheory.hpp"
#include "lpk/leavitt.hpp"
#include "lpk/quiver.hpp"
#include "lpk/records.hpp"
#include "lpk/rewriting.hpp"

namespace lpk::cli {

namespace {

constexpr const char* kHypothesis = "k algebraically closed, l != char(k)";

// Carries an exit code out of a subcommand.
struct Failure {
    int code;
    std::string message;
};

struct Options {
    std::string file;
    std::string modulus;
    std::string primes;
    std::string expression;
    std::string format = "text";
    int from = DegreeWindow{}.first;
    int to = DegreeWindow{}.last;
    std::size_t level = 0;
    std::uint64_t n = 0;
    std::uint64_t field = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{ParseFailure, "cannot read quiver file '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Quiver load_quiver(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_quiver(text);
    } catch (const ParseError& e) {
        throw Failure{ParseFailure, path + ": " + e.what()};
    }
}

OrderedQuiver load_without_sources(const std::string& path) {
    Quiver q = load_quiver(path);
    const SourceCheck check = check_no_sources(q);
    if (!check.ok) {
        std::string names;
        for (const auto& v : check.offenders) names += (names.empty() ? "" : ", ") + v;
        throw Failure{SourcesPresent, "quiver has sources: " + names};
    }
    return order_sinks_first(q);
}

Modulus parse_modulus(const std::string& text) {
    try {
        return Modulus::parse(text);
    } catch (const std::exception& e) {
        throw Failure{BadModulus, std::string("bad modulus: ") + e.what()};
    }
}

DegreeWindow window_of(const Options& o) {
    if (o.from > o.to) throw Failure{ParseFailure, "empty degree window --from " + std::to_string(o.from) + " --to " + std::to_string(o.to)};
    return {o.from, o.to};
}

bool records(const Options& o) { return o.format == "records"; }

void banner(const Options& o, std::ostream& out) {
    if (records(o))
        out << Record("hypothesis").add("field", "algebraically-closed").add("coefficients", "l-not-char-k").to_string() << '\n';
    else
        out << "# hypothesis: " << kHypothesis << '\n';
}

void cmd_kmod(const Options& o, std::ostream& out) {
    const Modulus m = parse_modulus(o.modulus);
    const DegreeWindow window = window_of(o);
    const OrderedQuiver q = load_without_sources(o.file);
    const KGroupTable table = mod_l_ktheory(q, m, window);

    banner(o, out);
    const std::string mv = std::to_string(m.value());
    if (records(o)) {
        for (const auto& [n, entry] : table.entries)
            out << Record("kgroup").add("degree", n).add("modulus", mv).add_group("", entry.group)
                       .add("provenance", to_string(entry.provenance)).add("formal_crt", table.formal_crt ? "true" : "false")
                       .to_string()
                << '\n';
        return;
    }
    if (table.formal_crt) out << "# note: " << mv << " is not a prime power; table extended formally across its prime factors\n";
    for (const auto& [n, entry] : table.entries)
        out << "K_{" << n << "}(L_Q; Z/" << mv << ") = " << entry.group.to_string() << '\n';
}

void cmd_analyze(const Options& o, std::ostream& out) {
    std::vector<Modulus> primes;
    std::stringstream ss(o.primes);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Modulus m = parse_modulus(item);
        if (!m.is_prime_power()) throw Failure{BadModulus, "bad modulus: " + item + " is not a prime power"};
        primes.push_back(m);
    }
    if (primes.empty()) throw Failure{BadModulus, "bad modulus: --primes is empty"};
    const OrderedQuiver q = load_without_sources(o.file);
    const DivisibilityReport report = divisibility_report(q, primes);

    banner(o, out);
    std::string det_primes;
    for (const auto& p : report.determinant_primes) det_primes += (det_primes.empty() ? "" : ",") + p.get_str();
    if (records(o)) {
        Record r("determinant");
        r.add("sink_free", report.sink_free ? "true" : "false");
        if (report.determinant) {
            r.add("value", report.determinant->get_str());
            r.add("primes", det_primes.empty() ? "-" : det_primes);
            r.add("unfactored", report.unfactored.get_str());
        }
        out << r.to_string() << '\n';
        for (const auto& d : report.per_prime)
            out << Record("divisibility").add("modulus", d.modulus.to_string()).add_group("even_", d.even_group)
                       .add_group("odd_", d.odd_group).add("uniquely_divisible", d.uniquely_divisible ? "true" : "false")
                       .to_string()
                << '\n';
        return;
    }
    if (report.determinant) {
        out << "det((0; id) - I_Q^t) = " << report.determinant->get_str() << '\n';
        out << "prime divisors of det: " << (det_primes.empty() ? "none" : det_primes) << '\n';
        if (report.unfactored != 1) out << "unfactored part of det: " << report.unfactored.get_str() << '\n';
    } else {
        out << "quiver has sinks: determinant criterion not applicable\n";
    }
    for (const auto& d : report.per_prime) {
        const std::string mv = std::to_string(d.modulus.value());
        out << "l^v = " << d.modulus.to_string() << ": K_even(L_Q; Z/" << mv << ") = " << d.even_group.to_string()
            << ", K_odd(L_Q; Z/" << mv << ") = " << d.odd_group.to_string() << '\n';
        out << "  " << d.conclusion << '\n';
    }
}

void cmd_algebra(const Options& o, std::ostream& out) {
    const Quiver q = load_quiver(o.file);
    ScalarField field = ScalarField::rationals();
    if (o.field != 0) {
        try {
            field = ScalarField::prime(o.field);
        } catch (const std::invalid_argument& e) {
            throw Failure{ParseFailure, e.what()};
        }
    }
    RawExpression expr;
    try {
        expr = parse_expression(q, o.expression);
    } catch (const ParseError& e) {
        throw Failure{ParseFailure, std::string("expression: ") + e.what()};
    }
    const LeavittAlgebra alg(q, field);
    const Element nf = evaluate(alg, expr);
    const auto components = alg.grading_components(nf);
    if (records(o)) {
        out << Record("normal_form").add("terms", static_cast<long long>(nf.terms().size())).to_string() << '\n';
        for (const auto& [d, c] : components)
            out << Record("component").add("degree", d).add("terms", static_cast<long long>(c.terms().size())).to_string()
                << '\n';
        return;
    }
    out << "normal form: " << nf.to_string() << '\n';
    for (const auto& [d, c] : components) out << "degree " << d << ": " << c.to_string() << '\n';
}

void cmd_filtration(const Options& o, std::ostream& out) {
    const OrderedQuiver q = load_without_sources(o.file);
    const std::size_t n = o.level;
    const BlockProfile profile = block_profile(q, n);
    const std::size_t expected_blocks = (n + 1) * q.num_sinks() + q.num_non_sinks();
    const Integer squares = profile.dimension();
    const std::size_t symbolic = filtration_span_dim(q, n);
    const IntMatrix inc = inclusion_k0_matrix(q, n);
    const IntMatrix inc_expected = expected_inclusion_matrix(q, n);
    const IntMatrix phi = phi_k0_matrix(q, n);
    const IntMatrix phi_expected = expected_phi_matrix(q, n);
    const auto verdict = [](bool b) { return b ? "EQUAL" : "UNEQUAL"; };
    const auto& names = q.quiver().vertices();

    if (records(o)) {
        for (const auto& b : profile.blocks)
            out << Record("block").add("level", static_cast<long long>(b.label.level)).add("vertex", names[b.label.vertex])
                       .add("size", b.size.get_str()).to_string()
                << '\n';
        out << Record("dimension").add("blocks", static_cast<long long>(profile.blocks.size()))
                   .add("expected_blocks", static_cast<long long>(expected_blocks)).add("sum_of_squares", squares.get_str())
                   .add("symbolic", static_cast<long long>(symbolic)).to_string()
            << '\n';
        out << Record("k0_matrix").add("map", "inclusion").add("computed", inc.to_string()).add("expected", inc_expected.to_string())
                   .add("verdict", verdict(inc == inc_expected)).to_string()
            << '\n';
        out << Record("k0_matrix").add("map", "phi").add("computed", phi.to_string()).add("expected", phi_expected.to_string())
                   .add("verdict", verdict(phi == phi_expected)).to_string()
            << '\n';
        return;
    }
    out << "level " << n << ": " << profile.blocks.size() << " blocks ((n+1)v' + (v - v') = " << expected_blocks << ")\n";
    for (const auto& b : profile.blocks)
        out << "  block (" << b.label.level << ", " << names[b.label.vertex] << ") size " << b.size.get_str() << '\n';
    out << "sum of squared sizes: " << squares.get_str() << '\n';
    out << "symbolic dimension: " << symbolic << '\n';
    out << "dimension: " << (Integer(static_cast<unsigned long>(symbolic)) == squares ? "MATCH" : "MISMATCH") << '\n';
    out << "inclusion K_0 matrix: " << inc.to_string() << '\n';
    out << "expected diag(id, I_Q^t): " << inc_expected.to_string() << " " << verdict(inc == inc_expected) << '\n';
    out << "phi K_0 matrix: " << phi.to_string() << '\n';
    out << "expected (0; id): " << phi_expected.to_string() << " " << verdict(phi == phi_expected) << '\n';
}

void cmd_split(const Options& o, std::ostream& out) {
    if (o.n < 2) throw Failure{ParseFailure, "--n must be at least 2"};
    const Modulus m = parse_modulus(o.modulus);
    const DegreeWindow window = window_of(o);
    const MooreSplitting s = moore_splitting_check(o.n, m, window);
    const std::string mv = std::to_string(m.value());

    std::string factors;
    for (const auto& f : s.factors)
        factors += (factors.empty() ? "" : "*") + std::to_string(f.prime) + "^" + std::to_string(f.exponent);
    std::string summands;
    for (const auto& f : s.factors) summands += (summands.empty() ? "" : " (+) ") + ("K_n(L_" + std::to_string(f.value()) + ")");

    if (records(o)) {
        for (const auto& [d, entry] : s.whole.entries)
            out << Record("split").add("degree", d).add("n", std::to_string(o.n)).add("modulus", mv)
                       .add_group("whole_", entry.group).add_group("summed_", s.summed.at(d)).to_string()
                << '\n';
        out << Record("verdict").add("n", std::to_string(o.n)).add("factors", factors).add("modulus", mv)
                   .add("equal", s.equal ? "true" : "false").to_string()
            << '\n';
        return;
    }
    out << "n = " << o.n << " = " << factors << ", modulus " << mv << '\n';
    for (const auto& [d, entry] : s.whole.entries)
        out << "K_{" << d << "}(L_" << o.n << "; Z/" << mv << ") = " << entry.group.to_string() << '\n';
    for (const auto& [d, g] : s.summed)
        out << "sum K_{" << d << "}(L_{l^v}; Z/" << mv << ") = " << g.to_string() << '\n';
    out << "summands: " << summands << '\n';
    out << (s.equal ? "EQUAL" : "UNEQUAL") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mod-l^v K-theory of Leavitt path algebras", "lpk"};
    app.require_subcommand(1);
    Options o;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "records"}));
    };
    const auto add_window = [&](CLI::App* sub) {
        sub->add_option("--from", o.from, "first degree")->capture_default_str();
        sub->add_option("--to", o.to, "last degree")->capture_default_str();
    };

    auto* kmod = app.add_subcommand("kmod", "K_n(L_Q; Z/m) over a degree window");
    kmod->add_option("quiver", o.file, "quiver file")->required();
    kmod->add_option("--mod", o.modulus, "modulus m or l^v")->required();
    add_window(kmod);
    add_format(kmod);

    auto* analyze = app.add_subcommand("analyze", "unique l^v-divisibility of homotopy K-theory");
    analyze->add_option("quiver", o.file, "quiver file")->required();
    analyze->add_option("--primes", o.primes, "comma-separated prime powers")->required();
    add_format(analyze);

    auto* algebra = app.add_subcommand("algebra", "normal form of an element of L_Q");
    algebra->add_option("quiver", o.file, "quiver file")->required();
    algebra->add_option("--eval", o.expression, "element expression")->required();
    algebra->add_option("--field", o.field, "coefficient field: 0 for Q, or a prime p")->capture_default_str();
    add_format(algebra);

    auto* filtration = app.add_subcommand("filtration", "blocks of the length filtration at a level");
    filtration->add_option("quiver", o.file, "quiver file")->required();
    filtration->add_option("--level", o.level, "filtration level n")->required();
    add_format(filtration);

    auto* split = app.add_subcommand("split", "Moore splitting of K(L_n; Z/m) over the primes of n");
    split->add_option("--n", o.n, "n >= 2")->required();
    split->add_option("--mod", o.modulus, "modulus m or l^v")->required();
    add_window(split);
    add_format(split);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? Ok : ParseFailure;
    }

    std::ostringstream buffer;
    try {
        if (*kmod) cmd_kmod(o, buffer);
        else if (*analyze) cmd_analyze(o, buffer);
        else if (*algebra) cmd_algebra(o, buffer);
        else if (*filtration) cmd_filtration(o, buffer);
        else cmd_split(o, buffer);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const QuiverHasSources& e) {
        err << "error: " << e.what() << '\n';
        return SourcesPresent;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ParseFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ParseFailure;
    }
    out << buffer.str();
    return Ok;
}

}  // namespace lpk::cli
