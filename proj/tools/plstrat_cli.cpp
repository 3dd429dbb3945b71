// plstrat: Jacobi sets, stratifications and Reeb structures of PL maps.

#include "plstrat/errors.hpp"
#include "plstrat/parallel.hpp"
#include "plstrat/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace plstrat;

namespace {

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Genericity:
        case ErrorKind::Degeneracy: return 2;
        case ErrorKind::InvariantBreach: return 3;
        default: return 1;
    }
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) std::cout << text;
    else write_text(out, text);
}

std::string one_format(const std::vector<std::string>& formats, const std::string& fallback) {
    if (formats.empty()) return fallback;
    if (formats.size() > 1) fail(ErrorKind::Parse, "this command takes a single --format");
    return formats.front();
}

ElementSet select_chain(const Poset& p, const std::string& selector) {
    const auto chains = linear_subposets(p);
    if (selector.empty() || selector.find_first_not_of("0123456789") == std::string::npos) {
        const std::size_t i = selector.empty() ? 0 : std::stoul(selector);
        if (i >= chains.size())
            fail(ErrorKind::NotAMember, "no chain " + std::to_string(i) + " (there are " +
                                            std::to_string(chains.size()) + ")");
        return chains[i];
    }
    ElementSet chain;
    std::stringstream ss(selector);
    for (std::string label; std::getline(ss, label, ',');) chain.push_back(p.at(label));
    return chain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi sets, stratifications and Reeb structures of PL maps"};
    app.require_subcommand(1);

    PipelineConfig cfg;
    std::string complex_path, values_path, locus_path, strat_path, out, notion = "H", chain, space = "codomain";
    std::vector<std::string> formats;
    std::size_t threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    auto map_inputs = [&](CLI::App* c) {
        c->add_option("--complex", complex_path, "Complex JSON file");
        c->add_option("--values", values_path, "Vertex value JSON file");
    };
    auto common = [&](CLI::App* c) {
        c->add_option("--notion", notion, "Criticality notion")->check(CLI::IsMember({"H", "D", "L"}));
        c->add_option("--out", out, "Output file or directory");
        c->add_option("--format", formats, "json, dot or svg");
        c->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    };

    auto* validate = app.add_subcommand("validate", "Check that the inputs are a generic PL map or locus");
    auto* pipeline = app.add_subcommand("pipeline", "Run every stage and write an artifact bundle");
    auto* jacobi = app.add_subcommand("jacobi", "Jacobi set and per-simplex verdict table");
    auto* codomain = app.add_subcommand("stratify-codomain", "Codomain stratification of the Jacobi image");
    auto* reeb = app.add_subcommand("reeb", "Reeb graph of a real-valued map");
    auto* locus = app.add_subcommand("morse2-locus", "Stratify a Morse-2 singular locus");
    auto* filtration = app.add_subcommand("export-filtration", "Filtration along a maximal chain of strata");
    for (auto* c : {validate, pipeline, jacobi, codomain, reeb, filtration}) map_inputs(c);
    for (auto* c : {validate, pipeline, jacobi, codomain, reeb, locus, filtration}) common(c);
    for (auto* c : {validate, pipeline, locus, filtration}) c->add_option("--locus", locus_path, "Locus JSON file");
    pipeline->add_option("--samples", cfg.samples, "Audit samples per open stratum");
    filtration->add_option("--strat", strat_path, "Stratification JSON file");
    filtration->add_option("--chain", chain, "Chain index or comma-separated labels");
    filtration->add_option("--space", space, "codomain or domain")->check(CLI::IsMember({"codomain", "domain"}));

    CLI11_PARSE(app, argc, argv);

    try {
        set_thread_count(threads);
        cfg.complex_path = complex_path;
        cfg.values_path = values_path;
        cfg.locus_path = locus_path;
        cfg.notion = parse_notion(notion);

        if (validate->parsed()) {
            cfg.check();
            bool ok = false;
            const Json report = cfg.uses_locus() ? validate_locus(load_locus(locus_path), ok)
                                                 : validate_map(load_map(complex_path, values_path), ok);
            emit(out, dump(report));
            return ok ? 0 : 1;
        }
        if (pipeline->parsed()) {
            if (out.empty()) fail(ErrorKind::Parse, "pipeline needs --out DIR");
            if (!formats.empty()) cfg.formats = {formats.begin(), formats.end()};
            write_bundle(out, run_pipeline(cfg));
            return 0;
        }
        if (locus->parsed()) {
            if (locus_path.empty()) fail(ErrorKind::Parse, "morse2-locus needs --locus");
            cfg.complex_path.clear();
            cfg.values_path.clear();
            cfg.formats = {one_format(formats, "json")};
            const Bundle b = run_pipeline(cfg);
            emit(out, b.at(cfg.formats.count("svg") ? "codomain_strat.svg" : "codomain_strat.json"));
            return 0;
        }
        if (filtration->parsed() && !strat_path.empty()) {
            const StratifiedSpace s = stratified_space_from_json(read_json(strat_path));
            emit(out, filtration_text(s, select_chain(s.poset, chain)));
            return 0;
        }
        if (filtration->parsed() && !locus_path.empty()) {
            const auto s = stratify_singular_locus(load_locus(locus_path));
            emit(out, filtration_text(s.strat.space, select_chain(s.strat.space.poset, chain)));
            return 0;
        }

        cfg.check();
        const PLMap f = load_map(complex_path, values_path);
        const JacobiSet j = jacobi_set(f, cfg.notion);
        if (jacobi->parsed()) {
            emit(out, dump(to_json(j)));
        } else if (codomain->parsed()) {
            const auto s = codomain_of(f, j);
            emit(out, one_format(formats, "json") == "svg" ? to_svg(s) : dump(to_json(s)));
        } else if (reeb->parsed()) {
            const auto g = reeb_graph(f, cfg.notion);
            emit(out, one_format(formats, "json") == "dot" ? to_dot(g) : dump(to_json(g)));
        } else if (filtration->parsed()) {
            const StratifiedSpace s = space == "domain" ? domain_stratification(f, j) : codomain_of(f, j).space;
            emit(out, filtration_text(s, select_chain(s.poset, chain)));
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
