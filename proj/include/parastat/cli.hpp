#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parastat/presentation_io.hpp"

namespace parastat::cli {

enum ExitCode { ok = 0, check_failed = 1, usage = 2 };

struct Options {
    std::string algebra = "pb:1";
    std::string presentation_file;
    std::optional<int> degree;
    std::uint64_t seed = 0x5EED;
    std::string format = "text";
    int samples = 100;
    int max_power = 4;
    bool verify = false;
    std::string expression;
};

namespace detail {

struct Context {
    Algebra algebra;
    bool has_maps;
};

inline Context load(const Options& o) {
    if (o.presentation_file.empty()) {
        Algebra a = resolve_preset(o.algebra);
        return {std::move(a), true};
    }
    std::ifstream in(o.presentation_file);
    if (!in)
        throw InvalidArgument("cannot open presentation file '" + o.presentation_file + "'");
    LoadedPresentation lp = read_presentation(in);
    if (lp.maps)
        return {{lp.presentation, *lp.maps}, true};
    return {{lp.presentation, StructureMaps(lp.presentation, Flavor::plain)}, false};
}

inline int degree_of(const Options& o, const Presentation& p) {
    const int d = o.degree.value_or(p.default_degree());
    if (d < 0)
        throw InvalidArgument("degree must be nonnegative");
    return d;
}

inline nlohmann::ordered_json header(const Presentation& p, int degree, const Options& o) {
    nlohmann::ordered_json j;
    j["algebra"] = p.name();
    j["degree"] = degree;
    j["seed"] = o.seed;
    return j;
}

inline nlohmann::ordered_json checks_json(const Report& r) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["status"] = c.passed ? "pass" : "fail";
        j["witness"] = c.witness;
        j["instances"] = c.instances;
        j["escalated"] = c.escalated;
        j["overflows"] = c.overflows;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline void print_report(std::ostream& out, const Options& o, nlohmann::ordered_json head, const Report& r,
                         const std::vector<std::string>& notes = {}) {
    if (o.format == "json") {
        head["checks"] = checks_json(r);
        out << head.dump(2) << "\n";
        return;
    }
    out << "algebra " << head["algebra"].get<std::string>() << ", degree " << head["degree"].get<int>() << ", seed "
        << o.seed << "\n";
    for (const auto& n : notes)
        out << n << "\n";
    for (const auto& c : r.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.instances << " instances";
        if (c.escalated)
            out << ", " << c.escalated << " at raised degree";
        if (c.overflows)
            out << ", " << c.overflows << " beyond truncation";
        out << ")\n";
        if (!c.passed)
            out << "  witness: " << c.witness << "\n";
    }
}

inline int status(const Report& r) { return r.passed() ? ok : check_failed; }

inline int cmd_normalize(const Options& o, std::ostream& out) {
    Context ctx = load(o);
    const Presentation& p = *ctx.algebra.presentation;
    const int d = degree_of(o, p);
    const Expr e = parse(o.expression, *p.alphabet());
    const Value lowered = lower(e, p.alphabet());
    if (value_degree(lowered) > d)
        throw TruncationError(value_degree(lowered), d);
    const Quotient q(ctx.algebra.presentation, d);
    const std::string result = to_string(evaluate(e, q));
    if (o.format == "json") {
        auto j = header(p, d, o);
        j["input"] = o.expression;
        j["result"] = result;
        j["checks"] = nlohmann::ordered_json::array();
        out << j.dump(2) << "\n";
    } else {
        out << result << "\n";
    }
    return ok;
}

inline int cmd_dim(const Options& o, std::ostream& out) {
    Context ctx = load(o);
    const int d = degree_of(o, *ctx.algebra.presentation);
    const auto dim = filtration_dimension(ctx.algebra.presentation, d);
    if (o.format == "json") {
        auto j = header(*ctx.algebra.presentation, d, o);
        j["dimension"] = dim;
        j["checks"] = nlohmann::ordered_json::array();
        out << j.dump(2) << "\n";
    } else {
        out << dim << "\n";
    }
    return ok;
}

inline HopfCheckOptions hopf_options(const Options& o) {
    HopfCheckOptions h;
    h.samples.seed = o.seed;
    h.samples.count = o.samples;
    return h;
}

inline int cmd_check_hopf(const Options& o, std::ostream& out) {
    Context ctx = load(o);
    if (!ctx.has_maps)
        throw IncompleteMapsError("presentation file carries no structure maps");
    const int d = degree_of(o, *ctx.algebra.presentation);
    const Quotient q(ctx.algebra.presentation, d);
    const Report r = check_hopf_axioms(q, ctx.algebra.maps, hopf_options(o));
    print_report(out, o, header(q.presentation(), d, o), r,
                 {"flavor " + to_string(ctx.algebra.maps.flavor())});
    return status(r);
}

inline int cmd_check_relations(const Options& o, std::ostream& out) {
    Context ctx = load(o);
    const int d = degree_of(o, *ctx.algebra.presentation);
    const Quotient q(ctx.algebra.presentation, d);
    CheckResult c{"relations-vanish"};
    for (const auto& r : q.presentation().relations()) {
        if (r.degree() > d) {
            ++c.overflows;
            continue;
        }
        ++c.instances;
        const Element nf = q.normal_form(r);
        if (!nf.is_zero())
            c.fail("relation " + to_string(r) + " reduces to " + to_string(nf));
    }
    Report report;
    report.checks.push_back(c);
    print_report(out, o, header(q.presentation(), d, o), report);
    return status(report);
}

inline int cmd_check_lie(const Options& o, std::ostream& out) {
    Context ctx = load(o);
    const int d = degree_of(o, *ctx.algebra.presentation);
    const Quotient q(ctx.algebra.presentation, d);
    BracketTable table;
    const Report r = lie_closure_check(q, &table);
    auto head = header(q.presentation(), d, o);
    std::vector<std::string> notes;
    head["span_dimension"] = table.dimension();
    notes.push_back("span dimension " + std::to_string(table.dimension()));
    if (is_parabosonic_family(q.presentation())) {
        head["even_dimension"] = table.dimension(Parity::even);
        head["odd_dimension"] = table.dimension(Parity::odd);
        notes.push_back("even dimension " + std::to_string(table.dimension(Parity::even)) + ", odd dimension " +
                        std::to_string(table.dimension(Parity::odd)));
    }
    print_report(out, o, head, r, notes);
    return status(r);
}

inline int cmd_check_casimir(const Options& o, std::ostream& out) {
    Context ctx = load(o);
    if (o.max_power < 1)
        throw InvalidArgument("--max-power must be at least 1");
    const int d = o.degree.value_or(2 * o.max_power + 1);
    if (d < 2 * o.max_power + 1)
        throw TruncationError(2 * o.max_power + 1, d);
    const Quotient q(ctx.algebra.presentation, d);
    Report r = u_n_check(q);
    r.append(casimir_checks(q, o.max_power));
    print_report(out, o, header(q.presentation(), d, o), r);
    return status(r);
}

inline int emit(const Options& o, std::ostream& out, const Presentation& p, const StructureMaps& m) {
    if (o.format == "json")
        out << presentation_to_json(p, &m).dump(2) << "\n";
    else
        out << write_presentation_text(p, &m);
    return ok;
}

inline int cmd_bosonize(const Options& o, std::ostream& out) {
    Context ctx = load(o);
    if (!ctx.has_maps)
        throw IncompleteMapsError("presentation file carries no structure maps");
    const SmashPresentation sp = bosonise(ctx.algebra.presentation, ctx.algebra.maps);
    if (!o.verify)
        return emit(o, out, *sp.presentation, sp.maps);
    const int d = o.degree.value_or(sp.presentation->default_degree());
    const Quotient q(sp.presentation, d);
    const auto qt = QuasitriangularData::cz2();
    Report r = qt.verify();
    r.append(smash_agreement(sp, qt, q));
    r.checks.push_back(inner_automorphism_check(sp, q));
    r.append(check_hopf_axioms(q, sp.maps, hopf_options(o)));
    print_report(out, o, header(*sp.presentation, d, o), r);
    return status(r);
}

inline int cmd_extend_k(const Options& o, std::ostream& out) {
    Context ctx = load(o);
    auto [p, m] = kpm_extend(ctx.algebra.presentation);
    if (!o.verify)
        return emit(o, out, *p, m);
    const int d = o.degree.value_or(p->default_degree());
    const Quotient q(p, d);
    Report r = check_hopf_axioms(q, m, hopf_options(o));
    print_report(out, o, header(*p, d, o), r);
    return status(r);
}

inline int cmd_export(const Options& o, std::ostream& out) {
    Context ctx = load(o);
    if (o.format == "json")
        out << presentation_to_json(*ctx.algebra.presentation, ctx.has_maps ? &ctx.algebra.maps : nullptr).dump(2)
            << "\n";
    else
        out << write_presentation_text(*ctx.algebra.presentation, ctx.has_maps ? &ctx.algebra.maps : nullptr);
    return ok;
}

} // namespace detail

/// Runs one command line; returns 0 when every requested check passes, 1 on a
/// failed check or failed construction, 2 on a usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact normal forms and Hopf checks for parastatistics algebras", "parastat"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--algebra", o.algebra, "Preset pb:n, pf:n, pbg:n or pbk:n");
    app.add_option("--presentation", o.presentation_file, "Presentation file (text or JSON)");
    app.add_option("--degree", o.degree, "Truncation degree D");
    app.add_option("--seed", o.seed, "Seed for random samples");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--samples", o.samples, "Number of random samples")->check(CLI::NonNegativeNumber);

    std::function<int(const Options&, std::ostream&)> command;
    auto on = [&](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
        sub->callback([&command, fn] { command = fn; });
    };

    auto* normalize = app.add_subcommand("normalize", "Normal form of an expression");
    normalize->add_option("expr", o.expression, "Expression")->required();
    on(normalize, detail::cmd_normalize);
    on(app.add_subcommand("dim", "Dimension of the degree-D filtration piece"), detail::cmd_dim);

    auto* check = app.add_subcommand("check", "Run a check suite");
    check->require_subcommand(1);
    on(check->add_subcommand("hopf", "Hopf axiom families"), detail::cmd_check_hopf);
    on(check->add_subcommand("lie", "(Super-)Lie closure of the degree-2 brackets"), detail::cmd_check_lie);
    on(check->add_subcommand("relations", "Defining relations reduce to zero"), detail::cmd_check_relations);
    auto* casimir = check->add_subcommand("casimir", "u(n) commutators and Casimir identities");
    casimir->add_option("--max-power", o.max_power, "Highest power m");
    on(casimir, detail::cmd_check_casimir);

    auto* bosonize = app.add_subcommand("bosonize", "Emit the CZ2 bosonisation");
    bosonize->add_flag("--verify", o.verify, "Run the bosonisation suite instead of emitting");
    on(bosonize, detail::cmd_bosonize);
    auto* extend = app.add_subcommand("extend-k", "Emit the K+- extension");
    extend->add_flag("--verify", o.verify, "Run the Hopf suite instead of emitting");
    on(extend, detail::cmd_extend_k);
    on(app.add_subcommand("export", "Write the presentation"), detail::cmd_export);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    try {
        return command(o, out);
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << "\n";
        return check_failed;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
}

} // namespace parastat::cli
