#include "plstrat/pipeline.hpp"

#include "plstrat/errors.hpp"

namespace plstrat {

namespace {

template <class F>
auto stage(const std::string& name, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        throw Error(e.kind(), name + ": " + e.what());
    }
}

}  // namespace

void PipelineConfig::check() const {
    const bool have_map = !complex_path.empty() || !values_path.empty();
    if (have_map && uses_locus()) fail(ErrorKind::Parse, "give either --complex/--values or --locus, not both");
    if (!have_map && !uses_locus()) fail(ErrorKind::Parse, "no input: give --complex and --values, or --locus");
    if (have_map && (complex_path.empty() || values_path.empty()))
        fail(ErrorKind::Parse, "--complex and --values must be given together");
    for (const auto& f : formats)
        if (f != "json" && f != "dot" && f != "svg") fail(ErrorKind::Parse, "unknown format " + f);
}

PLMap load_map(const std::filesystem::path& complex_path, const std::filesystem::path& values_path) {
    SimplicialComplex k;
    try {
        k = complex_from_json(read_json(complex_path));
    } catch (const Error& e) {
        throw Error(e.kind(), complex_path.string() + ": " + e.what());
    }
    if (k.empty()) fail(ErrorKind::EmptyInput, complex_path.string() + ": empty complex");
    try {
        return map_from_json(k, read_json(values_path));
    } catch (const Error& e) {
        throw Error(e.kind(), values_path.string() + ": " + e.what());
    }
}

SingularLocus load_locus(const std::filesystem::path& path) {
    try {
        return locus_from_json(read_json(path));
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.what());
    }
}

Json validate_map(const PLMap& f, bool& ok) {
    const ManifoldReport m = manifold_check(f.domain());
    const GenericityReport g = check_generic(f);
    const bool manifold = m.is_pure && (m.is_weak_pseudomanifold || m.is_weak_pseudomanifold_with_boundary) &&
                          !m.has_bad_link();
    ok = manifold && g.passed;
    Json out;
    out["ok"] = ok;
    out["vertices"] = f.domain().vertices().size();
    out["f_vector"] = f.domain().f_vector();
    out["k"] = f.k();
    out["symbolic_perturbation"] = f.symbolic_ties();
    out["manifold"] = to_json(m);
    out["genericity"] = to_json(g);
    return out;
}

Json validate_locus(const SingularLocus& l, bool& ok) {
    Json out;
    try {
        const auto s = stratify_singular_locus(l);
        ok = coarseness_check(s, l);
        out["zero_cells"] = s.zero_cells.size();
        out["arcs"] = s.arcs.size();
        out["strata"] = s.strat.space.poset.size();
        out["coarsest"] = ok;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Genericity && e.kind() != ErrorKind::Structural &&
            e.kind() != ErrorKind::NotAMember)
            throw;
        ok = false;
        out["error"] = e.what();
    }
    out["ok"] = ok;
    return out;
}

CodomainStratification codomain_of(const PLMap& f, const JacobiSet& j) {
    return build_codomain_stratification(refine_image(f, j));
}

Bundle run_pipeline(const PipelineConfig& config) {
    config.check();
    Bundle out;
    const bool svg = config.formats.count("svg") > 0;
    const bool dot = config.formats.count("dot") > 0;

    if (config.uses_locus()) {
        const auto l = stage("load", [&] { return load_locus(config.locus_path); });
        const auto s = stage("locus", [&] { return stratify_singular_locus(l); });
        Json j = to_json(s.strat);
        Json zeros = Json::array();
        for (const auto& z : s.zero_cells) zeros.push_back({{"vertex", z.vertex}, {"reasons", z.reasons}});
        j["zero_cells"] = zeros;
        j["arcs"] = s.arcs;
        j["coarsest"] = coarseness_check(s, l);
        out["codomain_strat.json"] = dump(j);
        if (svg) out["codomain_strat.svg"] = to_svg(s.strat);
        return out;
    }

    const auto f = stage("load", [&] { return load_map(config.complex_path, config.values_path); });
    stage("validate", [&] {
        bool ok = false;
        const Json report = validate_map(f, ok);
        out["validate.json"] = dump(report);
        if (!ok) {
            const bool generic = report["genericity"]["passed"].get<bool>();
            fail(generic ? ErrorKind::Structural : ErrorKind::Genericity,
                 generic ? "domain is not a combinatorial manifold" : "map is not generic");
        }
        return 0;
    });
    const auto j = stage("jacobi", [&] { return jacobi_set(f, config.notion); });
    out["jacobi.json"] = dump(to_json(j));
    const auto dom = stage("domain", [&] { return domain_stratification(f, j); });
    out["domain_strat.json"] = dump(to_json(dom));
    if (f.k() > 2) return out;

    const auto s = stage("codomain", [&] { return codomain_of(f, j); });
    Json cs = to_json(s);
    cs["refined_image"] = to_json(stage("codomain", [&] { return refine_image(f, j); }));
    out["codomain_strat.json"] = dump(cs);
    if (svg && f.k() == 2) out["codomain_strat.svg"] = to_svg(s);

    if (f.k() == 1) {
        const auto g = stage("reeb", [&] { return reeb_graph(f, config.notion); });
        out["reeb.json"] = dump(to_json(g));
        if (dot) out["reeb.dot"] = to_dot(g);
    }
    const auto w = stage("scaffold", [&] { return reeb_scaffold(f, s); });
    Json sj = to_json(w, s);
    sj["stein"] = to_json(stage("stein", [&] { return check_stein_square(f, w, s); }));
    out["scaffold.json"] = dump(sj);
    out["audit.json"] = dump(to_json(stage("audit", [&] { return fiber_constancy_audit(f, s, config.samples); })));
    return out;
}

void write_bundle(const std::filesystem::path& dir, const Bundle& bundle) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorKind::Parse, "cannot create " + dir.string() + ": " + ec.message());
    for (const auto& [name, text] : bundle) write_text(dir / name, text);
}

}  // namespace plstrat
