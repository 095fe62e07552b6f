// Standalone acceptance runner: one PASS/FAIL line per criterion.
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "parastat/cli.hpp"

using namespace parastat;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void expect(const Report& r, const std::string& where) {
        for (const auto& c : r.checks)
            expect(c.passed && c.overflows == 0, where + " " + c.name + ": " + c.witness);
    }
};

struct Run {
    int code;
    std::string out;
};

Run cli_run(std::vector<std::string> args) {
    args.insert(args.begin(), "parastat");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str()};
}

std::string nf(const PresentationPtr& p, int degree, const std::string& expr) {
    const Quotient q(p, degree);
    return to_string(evaluate(parse(expr, *p->alphabet()), q));
}

Outcome relations() {
    Outcome o;
    for (int n = 1; n <= 2; ++n)
        for (auto p : {parabosonic(n, false), parafermionic(n, false)}) {
            const Quotient q(p, 3);
            for (const auto& r : p->relations())
                o.expect(q.normal_form(r).is_zero(), p->name() + ": " + to_string(r) + " does not reduce to 0");
        }
    const std::string a = nf(parabosonic(1), 3, "[{b1+,b1-},b1-]");
    const std::string b = nf(parafermionic(1), 3, "[[f1+,f1-],f1+]");
    const std::string c = nf(parabosonic(2), 3, "[{b1+,b2-},b2+]");
    o.expect(a == "-2*b1-", "worked instance gave " + a);
    o.expect(b == "2*f1+", "worked instance gave " + b);
    o.expect(c == "2*b1+", "worked instance gave " + c);
    return o;
}

Outcome pbw() {
    Outcome o;
    for (int n = 1; n <= 2; ++n)
        for (int d = 0; d <= 4; ++d) {
            const auto b = static_cast<std::int64_t>(filtration_dimension(parabosonic(n), d));
            const auto f = static_cast<std::int64_t>(filtration_dimension(parafermionic(n), d));
            o.expect(b == oracle::pbw_parabosonic(n, d), "pb:" + std::to_string(n) + " D=" + std::to_string(d) +
                                                             " dim " + std::to_string(b));
            o.expect(f == oracle::pbw_parafermionic(n, d), "pf:" + std::to_string(n) + " D=" + std::to_string(d) +
                                                               " dim " + std::to_string(f));
        }
    return o;
}

Outcome lie() {
    Outcome o;
    for (int n = 1; n <= 2; ++n) {
        const std::size_t even = static_cast<std::size_t>(n * (2 * n + 1));
        BracketTable tf, tb;
        o.expect(lie_closure_check(Quotient(parafermionic(n), 4), &tf), "pf:" + std::to_string(n));
        o.expect(tf.dimension() == even, "so(2n+1) dimension " + std::to_string(tf.dimension()));
        o.expect(lie_closure_check(Quotient(parabosonic(n), 4), &tb), "pb:" + std::to_string(n));
        o.expect(tb.dimension(Parity::even) == even && tb.dimension(Parity::odd) == static_cast<std::size_t>(2 * n),
                 "osp(1,2n) dimensions " + std::to_string(tb.dimension(Parity::even)) + "/" +
                     std::to_string(tb.dimension(Parity::odd)));
    }
    return o;
}

Outcome hopf_suite(const std::string& name, int degree = 4) {
    Outcome o;
    const Algebra a = resolve_preset(name);
    const Report r = check_hopf_axioms(Quotient(a.presentation, degree), a.maps);
    o.expect(r.checks.size() == 5, name + ": expected five axiom families");
    o.expect(r, name);
    const int n = mode_count(*a.presentation);
    const std::size_t letters = a.presentation->alphabet()->size();
    const std::size_t expected = 1 + letters + letters * letters + 100;
    if (const auto* c = r.find(axiom::antipode))
        o.expect(c->instances == expected, name + ": antipode covered " + std::to_string(c->instances) +
                                               " instances, expected " + std::to_string(expected));
    (void)n;
    return o;
}

Outcome superhopf() {
    Outcome o;
    for (const char* name : {"pb:1", "pb:2", "pf:1", "pf:2"}) {
        const Outcome s = hopf_suite(name);
        o.expect(s.ok, s.detail);
    }
    return o;
}

Outcome bosonisation() {
    Outcome o;
    const auto q = QuasitriangularData::cz2();
    o.expect(q.verify(), "CZ2 data");
    const HostElement u = q.drinfeld_element();
    o.expect(u[0] == 0 && u[1] == 1, "computed u is not g");
    for (int n = 1; n <= 2; ++n) {
        auto p = parabosonic(n);
        const SmashPresentation sp = bosonise(p, parabosonic_maps(p));
        const Quotient quotient(sp.presentation, 4);
        o.expect(smash_agreement(sp, q, quotient), sp.presentation->name());
        const CheckResult inner = inner_automorphism_check(sp, quotient);
        o.expect(inner.passed, "gbg: " + inner.witness);
        const Outcome s = hopf_suite(sp.presentation->name());
        o.expect(s.ok, s.detail);
    }
    return o;
}

Outcome k_extension() {
    Outcome o;
    for (int n = 1; n <= 2; ++n) {
        auto [p, m] = kpm_extend(parabosonic(n));
        const Quotient q4(p, 4), q6(p, 6);
        for (const auto& r : p->relations()) {
            o.expect(q4.tensor_normal_form(apply_coproduct(r, m)).is_zero(), "Delta(" + to_string(r) + ") != 0");
            o.expect(q6.normal_form(apply_antipode(r, m)).is_zero(), "S(" + to_string(r) + ") != 0");
        }
        const Outcome s = hopf_suite(p->name());
        o.expect(s.ok, s.detail);
    }
    const Algebra k = resolve_preset("pbk:1");
    const Quotient q2(k.presentation, 2);
    const Element kk = q2.normal_form(q2.gen("K+") * q2.gen("K+") - q2.unit());
    o.expect(!kk.is_zero(), "K+^2 - 1 vanishes at D=2");
    const Algebra g = resolve_preset("pbg:1");
    const Quotient g2(g.presentation, 2);
    o.expect(g2.normal_form(g2.gen("g") * g2.gen("g") - g2.unit()).is_zero(), "g^2 - 1 does not vanish at D=2");
    return o;
}

Outcome casimir_suite() {
    Outcome o;
    for (int n = 1; n <= 2; ++n) {
        o.expect(u_n_check(Quotient(parabosonic(n), 4)), "pb:" + std::to_string(n));
        for (int m = 1; m <= 4; ++m)
            o.expect(casimir_checks(Quotient(parabosonic(n), 2 * m + 1), m),
                     "pb:" + std::to_string(n) + " m=" + std::to_string(m));
    }
    return o;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

// Lines of the form "FAIL <name> (...)" in a text report.
std::vector<std::string> failed_checks(const std::string& report) {
    std::vector<std::string> out;
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("FAIL ", 0) == 0)
            out.push_back(line.substr(5, line.find(' ', 5) - 5));
    return out;
}

Outcome negative_controls() {
    Outcome o;
    const Algebra g = resolve_preset("pbg:1");
    std::string text = write_presentation_text(*g.presentation, &g.maps);
    const std::string good = "antipode g g\n";
    const auto at = text.find(good);
    o.expect(at != std::string::npos, "exported pbg:1 has no g antipode line");
    if (at == std::string::npos)
        return o;
    text.replace(at, good.size(), "antipode g -g\n");
    auto r = cli_run({"check", "hopf", "--presentation", write_temp("parastat_acc_map.txt", text).string()});
    o.expect(r.code == 1, "corrupted map exit code " + std::to_string(r.code));
    o.expect(failed_checks(r.out) == std::vector<std::string>{axiom::antipode}, "corrupted map: " + r.out);
    o.expect(r.out.find("witness: ") != std::string::npos, "corrupted map printed no witness");

    const Algebra b = resolve_preset("pb:1");
    const std::string bad = write_presentation_text(*b.presentation, &b.maps) + "relation b1+*b1+*b1+\n";
    r = cli_run({"check", "hopf", "--presentation", write_temp("parastat_acc_rel.txt", bad).string()});
    o.expect(r.code == 1, "corrupted relation exit code " + std::to_string(r.code));
    o.expect(failed_checks(r.out) == std::vector<std::string>{axiom::coproduct_well_defined},
             "corrupted relation: " + r.out);
    o.expect(r.out.find("witness: ") != std::string::npos, "corrupted relation printed no witness");
    return o;
}

std::string full_suite_json() {
    std::string all;
    const std::vector<std::vector<std::string>> runs = {
        {"check", "relations", "--algebra", "pb:2", "--degree", "3"},
        {"check", "lie", "--algebra", "pb:2"},
        {"check", "lie", "--algebra", "pf:2"},
        {"check", "hopf", "--algebra", "pb:2"},
        {"check", "hopf", "--algebra", "pf:2"},
        {"check", "hopf", "--algebra", "pbg:2"},
        {"check", "hopf", "--algebra", "pbk:2"},
        {"check", "casimir", "--algebra", "pb:2", "--max-power", "4"},
        {"bosonize", "--algebra", "pb:2", "--verify"},
        {"extend-k", "--algebra", "pb:2", "--verify"},
        {"dim", "--algebra", "pbk:2", "--degree", "4"},
    };
    for (auto args : runs) {
        for (const char* extra : {"--format", "json", "--seed", "24301"})
            args.emplace_back(extra);
        all += cli_run(args).out;
    }
    return all;
}

Outcome determinism() {
    Outcome o;
    const std::string a = full_suite_json();
    const std::string b = full_suite_json();
    o.expect(!a.empty(), "empty report");
    o.expect(a == b, "reports differ between runs");
    o.expect(a.find("\"status\": \"fail\"") == std::string::npos, "full suite has failures");
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"defining relations reduce to zero at D=3", relations},
        {"PBW dimensions match the counting series for n<=2, D<=4", pbw},
        {"Lie closure, dimension, antisymmetry and Jacobi at D=4", lie},
        {"super-Hopf axioms for pb and pf at D=4", superhopf},
        {"bosonisation formulas, emitted Hopf suite and gbg", bosonisation},
        {"K extension relations, axioms and K+^2 != 1", k_extension},
        {"Casimir and u(n) identities at D=2m+1", casimir_suite},
        {"negative controls fail exactly the targeted check", negative_controls},
        {"seeded JSON reports are byte-identical", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!o.ok) {
            ++failures;
            std::cout << " [" << o.detail << "]";
        }
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
