#pragma once

#include "plstrat/io.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <string>

namespace plstrat {

struct PipelineConfig {
    std::filesystem::path complex_path;
    std::filesystem::path values_path;
    std::filesystem::path locus_path;
    Notion notion = Notion::H;
    std::size_t samples = 5;
    /// Subset of {"json", "dot", "svg"}; JSON reports are always written.
    std::set<std::string> formats{"json", "dot", "svg"};

    bool uses_locus() const { return !locus_path.empty(); }
    /// Exactly one of complex+values or locus must be given.
    void check() const;
};

/// File name -> contents. Ordered so that writing is deterministic.
using Bundle = std::map<std::string, std::string>;

PLMap load_map(const std::filesystem::path& complex_path, const std::filesystem::path& values_path);
SingularLocus load_locus(const std::filesystem::path& path);

/// Manifold and genericity report; `ok` is set iff all checks pass.
Json validate_map(const PLMap& f, bool& ok);
Json validate_locus(const SingularLocus& l, bool& ok);

/// Codomain stratification of f over the refined Jacobi image.
CodomainStratification codomain_of(const PLMap& f, const JacobiSet& j);

/// Runs every stage; errors are rethrown with the stage name prefixed.
Bundle run_pipeline(const PipelineConfig& config);
void write_bundle(const std::filesystem::path& dir, const Bundle& bundle);

}  // namespace plstrat
