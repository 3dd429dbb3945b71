#pragma once

#include "plstrat/locus.hpp"
#include "plstrat/reeb.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace plstrat {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become parse errors naming `source`,
/// line and column.
Json parse_json(const std::string& text, const std::string& source);
Json read_json(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

Json to_json(const Point& p);
Point point_from_json(const Json& j, const std::string& field);

/// {"vertices": [..], "facets": [[..], ..]}. Facets must be strictly
/// increasing tuples of declared vertices with no repeats.
SimplicialComplex complex_from_json(const Json& j);
Json to_json(const SimplicialComplex& k);

/// {"k": k, "values": {"<vertex>": ["p/q", ..]}, "symbolic_perturbation": bool}.
PLMap map_from_json(const SimplicialComplex& domain, const Json& j);
Json values_to_json(const PLMap& f);

/// {"elements": [labels], "covers": [[lower, upper], ..]}.
Poset poset_from_json(const Json& j);
Json to_json(const Poset& p);

/// Poset plus carrier cells: {"cells": [{"id", "dim", "boundary", "stratum"}]}.
StratifiedSpace stratified_space_from_json(const Json& j);
Json to_json(const StratifiedSpace& s);
/// As above with a "geometry" block describing the cells in R^k.
Json to_json(const CodomainStratification& s);

/// {"strands": [[[x, y], ..]], "cusps": [[strand, vertex]], "marks": [..]}.
SingularLocus locus_from_json(const Json& j);
Json to_json(const SingularLocus& l);

Json to_json(const GenericityReport& r);
Json to_json(const ManifoldReport& r);
Json to_json(const JacobiSet& j);
Json to_json(const RefinedImage& r);

Json to_json(const ReebGraph& g);
ReebGraph reeb_graph_from_json(const Json& j);
/// Nodes ranked by level.
std::string to_dot(const ReebGraph& g);

Json to_json(const ReebScaffold& w, const CodomainStratification& s);
Json to_json(const SteinReport& r);
Json to_json(const AuditReport& r);

/// Cells shaded by stratum, 0-cells as dots. k = 2 only.
std::string to_svg(const CodomainStratification& s);

/// One line per chain element, in chain order: "<step> <label> <cell ids>".
/// The chain must be a strictly increasing sequence of strata.
std::string filtration_text(const StratifiedSpace& s, const ElementSet& chain);

}  // namespace plstrat
