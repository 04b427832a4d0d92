// Command-line front end: problem documents, the catalog of built-in
// group and monoid presentations, and subcommand dispatch.
#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bbd/coaction.hpp"
#include "bbd/grading.hpp"

namespace bbd::cli {

/// Exit codes of `run`.
enum ExitCode : int { Ok = 0, ParseFailure = 2, InvariantFailure = 3, ResourceFailure = 4 };

/// Group presentation written out as polynomial strings.
struct InlineGroup {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  std::vector<std::vector<std::string>> action;
  std::vector<std::vector<std::string>> inverse_action;
  std::vector<std::string> identity;

  friend bool operator==(const InlineGroup&, const InlineGroup&) = default;
};

struct InlineMonoid {
  std::vector<std::string> generators;
  std::optional<std::vector<std::string>> zero_point;
  std::vector<WeightVector> central_weights;
  std::vector<WeightVector> central_to_maximal;
  std::vector<WeightVector> tbar;

  friend bool operator==(const InlineMonoid&, const InlineMonoid&) = default;
};

struct ModuleSpec {
  std::vector<WeightVector> generator_weights;
  std::vector<std::vector<std::string>> relations;

  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

/// One problem document. Variables and weights may be omitted when a
/// catalog entry supplies them.
struct ProblemSpec {
  std::vector<std::string> variables;
  std::optional<std::string> order;
  std::vector<std::string> ideal;
  std::optional<std::size_t> rank;
  std::vector<WeightVector> weights;
  /// Catalog key of the acting monoid.
  std::optional<std::string> catalog;
  std::optional<InlineGroup> group;
  std::optional<InlineMonoid> monoid;
  /// Generators of the weight monoid of a torus closure acting through `weights`.
  std::optional<std::vector<WeightVector>> torus_monoid;
  /// Kempf cocharacter override, in maximal-torus coordinates.
  std::optional<WeightVector> cochar;
  std::vector<WeightVector> characters;
  std::optional<ModuleSpec> module;
  std::optional<unsigned> depth;
  std::optional<unsigned> degree_bound;
  std::optional<unsigned> saturation_cap;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Throws ParseError on malformed documents.
ProblemSpec parse_spec(const std::string& text);
/// Canonical JSON text; parse_spec(serialize_spec(s)) == s.
std::string serialize_spec(const ProblemSpec& spec);

struct CatalogEntry {
  std::string key;
  std::string description;
  /// Space the monoid acts on when the document gives none.
  std::vector<std::string> default_variables;
  std::vector<WeightVector> default_weights;
  /// Torus entries act through whatever weights the document gives; the
  /// other entries come with a fixed linear representation.
  bool weights_fixed = true;
  std::function<MonoidPresentation(const std::vector<WeightVector>&)> build;
};

/// All entries, sorted by key. Every entry is validated once on first use.
const std::vector<CatalogEntry>& catalog();
/// Throws ParseError for unknown keys.
const CatalogEntry& catalog_entry(const std::string& key);

/// The resolved object graph of a document.
struct Problem {
  GradedAlgebra algebra;
  MonoidPresentation monoid;
  WeightVector cochar;
  bool kempf_found = false;
  std::vector<WeightVector> characters;
};

struct GlobalOptions {
  std::optional<unsigned> depth;
  std::optional<unsigned> degree_bound;
  std::optional<unsigned> saturation_cap;
  std::optional<std::string> order;
};

/// Throws ParseError for inconsistent documents.
Problem resolve(const ProblemSpec& spec, const GlobalOptions& options = {});

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bbd::cli
