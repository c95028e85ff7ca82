// qra: command-line front end.
//
// Exit status: 0 when everything checked passes, 1 when a relation, law or
// property fails or a counterexample is found, 2 on usage or engine errors.

#include "qra/branch_model.hpp"
#include "qra/branchrel.hpp"
#include "qra/finra.hpp"
#include "qra/model.hpp"
#include "qra/term.hpp"
#include "qra/thompson.hpp"
#include "qra/tree.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace qra;

namespace {

constexpr int kPass = 0, kFail = 1, kError = 2;

struct Options {
    std::string term, model = "branchrel", law, strategy, suite, signature, file, v, w;
    std::uint64_t seed = 0;
    std::size_t stages = 50, samples = 100000;
    bool j_mode = false, emit_terms = false, exhaustive = false, atoms = false, emit = false;
};

Strategy parse_strategy(const std::string& s, std::uint64_t seed)
{
    if (s == "exhaustive") return Strategy::exhaustive();
    if (s.rfind("sample=", 0) == 0) {
        try {
            return Strategy::sample(std::stoul(s.substr(7)), seed);
        } catch (const std::exception&) {
        }
    }
    throw CLI::ValidationError("--strategy", "expected 'exhaustive' or 'sample=N', got '" + s + "'");
}

int cmd_parse(const Options& o)
{
    std::cout << format_term(parse_term(o.term, o.j_mode ? Mode::J : Mode::RA)) << '\n';
    return kPass;
}

int cmd_eval(const Options& o)
{
    if (o.model == "branchrel") {
        BranchModel m;
        Term t = expand_generators(parse_term(o.term, Mode::J));
        std::cout << m.show(eval(m, t, {})) << '\n';
        return kPass;
    }
    FinraModel m(load_structure(o.model));
    std::cout << m.show(m.parse_element(o.term)) << '\n';
    return kPass;
}

int cmd_check_law(const Options& o)
{
    const Law* law = find_law(o.law);
    if (!law) throw CLI::ValidationError("law", "unknown law '" + o.law + "'");
    LawReport r;
    if (o.model == "branchrel") {
        Strategy s = parse_strategy(o.strategy.empty() ? "sample=200" : o.strategy, o.seed);
        r = check_law(BranchModel(), *law, s);
    } else {
        Strategy s = parse_strategy(o.strategy.empty() ? "exhaustive" : o.strategy, o.seed);
        r = check_law(FinraModel(load_structure(o.model)), *law, s);
    }
    std::cout << r.line() << '\n';
    return r.pass ? kPass : kFail;
}

int cmd_suite(const Options& o)
{
    if (o.emit_terms) {
        for (auto& n : generator_names()) std::cout << n << " = " << format_term(generator(n)) << '\n';
        if (o.suite.empty()) return kPass;
    }
    if (o.suite.empty()) throw CLI::ValidationError("suite", "a suite id is required");
    auto ids = suite_ids();
    SuiteReport r;
    if (o.suite == "bleak-quick")
        r = bleak_quick_checks();
    else if (std::find(ids.begin(), ids.end(), o.suite) != ids.end())
        r = run_suite(o.suite);
    else
        throw CLI::ValidationError("suite", "unknown suite '" + o.suite + "'");
    for (auto& e : r.entries) {
        std::cout << e.name << ' ' << (e.pass ? "pass" : "fail") << "  " << e.relation;
        if (!e.pass && !e.detail.empty()) std::cout << "  (" << e.detail << ')';
        std::cout << '\n';
    }
    if (r.error) {
        std::cerr << "error: " << r.error_message << '\n';
        return kError;
    }
    std::cout << r.line() << '\n';
    return r.pass() ? kPass : kFail;
}

int cmd_enumerate(const Options& o)
{
    auto all = enumerate_integral(o.signature);
    if (o.emit)
        for (std::size_t k = 0; k < all.size(); ++k) std::cout << "# " << k << '\n' << format_structure(all[k]) << '\n';
    std::cout << "total=" << all.size() << '\n';
    return kPass;
}

int cmd_check_jlm(const Options& o)
{
    JlmMode mode = o.atoms ? JlmMode::Atoms : o.exhaustive ? JlmMode::Exhaustive : JlmMode::Sample;
    if (std::filesystem::is_regular_file(o.signature)) {
        auto v = check_jlm(load_structure(o.signature), mode, o.samples, o.seed);
        for (auto* r : {&v.j, &v.l, &v.m}) std::cout << r->line() << '\n';
        std::cout << "column=" << v.column() << '\n';
        return v.column() == "none" ? kPass : kFail;
    }
    auto sig = parse_signature(o.signature);
    auto all = enumerate_integral(sig);
    JlmProfile p;
    p.label = sig.label;
    p.total = all.size();
    p.counts.assign(jlm_columns().size(), 0);
    for (auto& s : all) ++p.counts[static_cast<std::size_t>(jlm_column_index(check_jlm(s, mode, o.samples, o.seed)))];
    std::cout << jlm_table_tsv({p});
    return p.counts.back() == p.total ? kPass : kFail;
}

int cmd_represent(const Options& o)
{
    FinraModel m(load_structure(o.file));
    if (!verify_axioms(m.structure())) {
        std::cerr << "error: " << o.file << " is not a relation algebra\n";
        return kError;
    }
    auto rep = build_stage_rep(m, m.parse_element(o.v), m.parse_element(o.w), o.stages, o.seed);
    std::cout << rep.str(m);
    return rep.ok ? kPass : kFail;
}

int cmd_dot(const Options& o)
{
    std::cout << emit_dot(parse_term(o.term, Mode::RA));
    return kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qra: quasiprojection relation algebra workbench"};
    app.require_subcommand(1);
    Options o;
    int (*run)(const Options&) = nullptr;

    auto* parse = app.add_subcommand("parse", "parse a term and print it back");
    parse->add_option("term", o.term)->required();
    parse->add_flag("--j", o.j_mode, "reject + and -");
    parse->callback([&] { run = cmd_parse; });

    auto* ev = app.add_subcommand("eval", "evaluate a closed term");
    ev->add_option("term", o.term)->required();
    ev->add_option("--model", o.model, "branchrel or an atom-structure file");
    ev->callback([&] { run = cmd_eval; });

    auto* cl = app.add_subcommand("check-law", "check one catalog law");
    cl->add_option("id", o.law)->required();
    cl->add_option("--strategy", o.strategy, "exhaustive or sample=N");
    cl->add_option("--seed", o.seed);
    cl->add_option("--model", o.model, "branchrel or an atom-structure file");
    cl->callback([&] { run = cmd_check_law; });

    auto* su = app.add_subcommand("suite", "run a presentation suite");
    su->add_option("id", o.suite, "perms F T V M same fork pairing qu bleak-quick");
    su->add_flag("--emit-terms", o.emit_terms, "print every generator term");
    su->callback([&] { run = cmd_suite; });

    auto* en = app.add_subcommand("enumerate", "integral algebras with the given atoms");
    en->add_option("signature", o.signature)->required();
    en->add_flag("--emit", o.emit, "print each structure");
    en->callback([&] { run = cmd_enumerate; });

    auto* jl = app.add_subcommand("check-jlm", "(J), (L), (M) over a signature or one structure");
    jl->add_option("target", o.signature)->required();
    jl->add_flag("--exhaustive", o.exhaustive, "quantify over all elements");
    jl->add_flag("--atoms", o.atoms, "quantify over atoms only");
    jl->add_option("--samples", o.samples);
    jl->add_option("--seed", o.seed);
    jl->callback([&] { run = cmd_check_jlm; });

    auto* re = app.add_subcommand("represent", "staged partial representation separating v < w");
    re->add_option("file", o.file)->required();
    re->add_option("--v", o.v)->required();
    re->add_option("--w", o.w)->required();
    re->add_option("--stages", o.stages);
    re->add_option("--seed", o.seed);
    re->callback([&] { run = cmd_represent; });

    auto* dot = app.add_subcommand("dot", "series-parallel diagram in DOT");
    dot->add_option("term", o.term)->required();
    dot->callback([&] { run = cmd_dot; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        return run(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at " << e.position() << ": " << e.what() << '\n';
        return kError;
    } catch (const ProjectionIncomplete& e) {
        std::cerr << "projection incomplete: " << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
}
