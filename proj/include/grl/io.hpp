#pragma once

// JSON structure files, named structure specs and construction specs.
//
// Every structure file carries a top-level "kind": "semigroup", "groupoid",
// "ring" or "graded_ring". A construction spec carries "construct" instead.
// Wherever a structure is expected, the following are accepted:
//   - an inline structure object (with "kind"),
//   - {"file": "<path>"}, resolved against the enclosing file's directory,
//   - a named spec, either a short string ("Z6", "F4", "B3", "L2", ...) or an
//     object {"named": ..., <parameters>}.

#include <filesystem>
#include <string>
#include <variant>

#include "grl/constructions.hpp"
#include "grl/graded_ring.hpp"
#include "grl/groupoid.hpp"
#include "grl/report.hpp"
#include "grl/ring.hpp"
#include "grl/semigroup.hpp"

namespace grl {

json to_json(const FiniteSemigroup& s);
json to_json(const FiniteGroupoid& g);
json to_json(const FiniteRing& r);
json to_json(const GradedRing& r);

using Structure = std::variant<FiniteSemigroup, FiniteGroupoid, FiniteRing, GradedRing>;

std::string structure_kind(const Structure& s);
json to_json(const Structure& s);

/// Reads and parses a JSON file. Throws Error on IO failure and ParseError on
/// malformed JSON.
json read_json_file(const std::filesystem::path& path);

/// Deterministic serialization: sorted keys, two-space indent, trailing newline.
std::string dump_json(const json& j);

/// Throws ParseError for schema problems and ValidationError for axiom
/// violations.
FiniteSemigroup semigroup_from_json(const json& j, const std::filesystem::path& dir = {});
FiniteGroupoid groupoid_from_json(const json& j, const std::filesystem::path& dir = {});
FiniteRing ring_from_json(const json& j, const std::filesystem::path& dir = {});
GradedRing graded_from_json(const json& j, const std::filesystem::path& dir = {});

/// Dispatches on "kind" (or "construct").
Structure structure_from_json(const json& j, const std::filesystem::path& dir = {});
Structure load_structure(const std::filesystem::path& path);

/// {"construct": "semigroup_ring" | "matrix_bn" | "good_grading" |
///  "groupoid_ring" | "zero_product", "A": <ring>, plus "S", "G", "n",
///  "deg" or (zero_product) "base" as the construction needs}
GradedRing build_construction(const json& spec, const std::filesystem::path& dir = {});

}  // namespace grl
