#ifndef PGV_GRAPHSPEC_HPP
#define PGV_GRAPHSPEC_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pgv/filters.hpp"
#include "pgv/groupoid.hpp"
#include "pgv/morphisms.hpp"
#include "pgv/pgraph.hpp"

namespace pgv {

using json = nlohmann::ordered_json;

struct ExplicitPresentation {
  std::vector<std::string> vertices;
  struct Entry {
    std::string id, range, source;
    Degree degree;
  };
  std::vector<Entry> morphisms;
  std::vector<std::array<std::string, 3>> compositions;
};

struct OmegaPresentation {
  Degree m;
};

struct OmegaLimitPresentation {
  IncreasingSequence sequence;
};

struct GraphSpecFile {
  MonoidDesc monoid;
  std::variant<ExplicitPresentation, SkeletonPresentation, OmegaPresentation,
               OmegaLimitPresentation>
      presentation;
  std::optional<Degree> window;
  std::map<std::string, std::vector<std::string>> subsets;
};

// Throws Error(ParseError) on malformed input.
GraphSpecFile parse_graph_spec(const json& j);
GraphSpecFile load_graph_spec(const std::string& path);

// Skeletons materialize in the requested mode: validators want Permissive so
// broken square data still yields a category to inspect.
PGraph materialize(const GraphSpecFile& spec, const std::optional<Degree>& window_override = {},
                   SkeletonMode mode = SkeletonMode::Strict);

std::vector<MorphismId> resolve_subset(const PGraph& g, const GraphSpecFile& spec,
                                       const std::string& name);

// --- serialization -----------------------------------------------------
json degree_json(const Degree& d);
Degree degree_from_json(const DegreeMonoid& monoid, const json& j);
json group_element_json(const GroupElement& q);
json degree_class_json(const DegreeClass& c);

json monoid_json(const MonoidDesc& desc);
json graph_json(const PGraph& g);
std::string graph_dot(const PGraph& g);

json filter_json(const PGraph& g, const Filter& x);
json cylinder_json(const PGraph& g, const CylinderSet& c);
CylinderSet cylinder_from_json(const PGraph& g, const json& j);
json filter_space_json(const FilterSpace& space);
json path_morphism_json(const PathMorphism& x);
json morphism_space_json(const MorphismSpace& space);
json groupoid_json(const Groupoid& gpd);
std::string path_space_dot(const FilterSpace& space);

json report_json(const Report& rep);

Degree parse_degree_text(const DegreeMonoid& monoid, const std::string& text);

}  // namespace pgv

#endif
