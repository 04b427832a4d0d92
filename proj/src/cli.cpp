#include "bbd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "bbd/bb.hpp"
#include "bbd/error.hpp"
#include "bbd/formal.hpp"

namespace bbd::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Documents

const std::set<std::string> kSpecKeys = {"variables", "order",   "ideal",      "rank",      "weights",
                                         "catalog",   "group",   "monoid",     "torus_monoid",
                                         "cochar",    "characters", "module",  "depth",     "degree_bound",
                                         "saturation_cap"};

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw ParseError("unknown field '" + it.key() + "' in " + where);
}

template <class T>
T field(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError("field '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

template <class T>
void optional_field(const json& j, const char* key, const std::string& where, std::optional<T>& out) {
  if (j.contains(key)) out = field<T>(j, key, where);
}

template <class T>
void list_field(const json& j, const char* key, const std::string& where, std::vector<T>& out) {
  if (j.contains(key)) out = field<std::vector<T>>(j, key, where);
}

InlineGroup group_from_json(const json& j) {
  reject_unknown(j, {"name", "variables", "relations", "action", "inverse_action", "identity"}, "group");
  InlineGroup g;
  if (j.contains("name")) g.name = field<std::string>(j, "name", "group");
  g.variables = field<std::vector<std::string>>(j, "variables", "group");
  list_field(j, "relations", "group", g.relations);
  g.action = field<std::vector<std::vector<std::string>>>(j, "action", "group");
  g.inverse_action = field<std::vector<std::vector<std::string>>>(j, "inverse_action", "group");
  g.identity = field<std::vector<std::string>>(j, "identity", "group");
  return g;
}

json group_to_json(const InlineGroup& g) {
  json j = {{"variables", g.variables}, {"action", g.action}, {"inverse_action", g.inverse_action},
            {"identity", g.identity}};
  if (!g.name.empty()) j["name"] = g.name;
  if (!g.relations.empty()) j["relations"] = g.relations;
  return j;
}

InlineMonoid monoid_from_json(const json& j) {
  reject_unknown(j, {"generators", "zero_point", "central_weights", "central_to_maximal", "tbar"}, "monoid");
  InlineMonoid m;
  m.generators = field<std::vector<std::string>>(j, "generators", "monoid");
  optional_field(j, "zero_point", "monoid", m.zero_point);
  m.central_weights = field<std::vector<WeightVector>>(j, "central_weights", "monoid");
  m.central_to_maximal = field<std::vector<WeightVector>>(j, "central_to_maximal", "monoid");
  m.tbar = field<std::vector<WeightVector>>(j, "tbar", "monoid");
  return m;
}

json monoid_to_json(const InlineMonoid& m) {
  json j = {{"generators", m.generators},
            {"central_weights", m.central_weights},
            {"central_to_maximal", m.central_to_maximal},
            {"tbar", m.tbar}};
  if (m.zero_point) j["zero_point"] = *m.zero_point;
  return j;
}

InlineGroup inline_group(const GroupPresentation& g) {
  InlineGroup out;
  out.name = g.name;
  out.variables = g.ring->variables();
  for (const auto& r : g.relations.generators()) out.relations.push_back(r.to_string());
  for (const auto* src : {&g.action, &g.inverse_action}) {
    auto& dst = src == &g.action ? out.action : out.inverse_action;
    for (const auto& row : *src) {
      std::vector<std::string> line;
      for (const auto& p : row) line.push_back(p.to_string());
      dst.push_back(std::move(line));
    }
  }
  for (const auto& q : g.identity) out.identity.push_back(to_string(q));
  return out;
}

InlineMonoid inline_monoid(const MonoidPresentation& m) {
  InlineMonoid out;
  for (const auto& g : m.generators) out.generators.push_back(g.to_string());
  if (m.zero_point) {
    out.zero_point.emplace();
    for (const auto& q : *m.zero_point) out.zero_point->push_back(to_string(q));
  }
  out.central_weights = m.central.weights();
  out.central_to_maximal = m.central_to_maximal;
  out.tbar = m.tbar.generators();
  return out;
}

std::vector<WeightVector> unit_vectors(std::size_t rank) {
  std::vector<WeightVector> out;
  for (std::size_t a = 0; a < rank; ++a) {
    WeightVector e(rank, 0);
    e[a] = 1;
    out.push_back(e);
  }
  return out;
}

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto torus_entry = [&](std::string key, std::string description, std::size_t rank,
                         std::vector<WeightVector> gens, std::vector<std::string> vars,
                         std::vector<WeightVector> weights) {
    out.push_back({std::move(key), std::move(description), std::move(vars), std::move(weights), false,
                   [rank, gens](const std::vector<WeightVector>& w) {
                     return torus_monoid(torus_group(rank, w), rank, gens);
                   }});
  };
  auto fixed_entry = [&](std::string key, std::string description, std::vector<std::string> vars,
                         std::vector<WeightVector> weights, std::function<MonoidPresentation()> make) {
    out.push_back({std::move(key), std::move(description), std::move(vars), std::move(weights), true,
                   [make](const std::vector<WeightVector>&) { return make(); }});
  };

  torus_entry("gm-a1", "G_m acting through the given weights, closure A^1", 1, {{1}}, {"x", "y"}, {{1}, {-1}});
  torus_entry("t2-a2", "split 2-torus, closure A^2", 2, {{1, 0}, {0, 1}}, {"x", "y", "z"},
              {{1, 0}, {0, 1}, {-1, 1}});
  torus_entry("t2-toric", "split 2-torus, toric closure with weight monoid <(1,0),(1,1)>", 2, {{1, 0}, {1, 1}},
              {"x", "y"}, {{1, 0}, {0, 1}});
  torus_entry("opposite-weights", "G_m with weight monoid <1,-1> (no zero, not Kempf)", 1, {{1}, {-1}}, {"x"},
              {{1}});

  const auto std2 = [] { return matrix_monoid(general_linear_group(2, LinearRep::Standard), 2); };
  const auto std3 = [] { return matrix_monoid(general_linear_group(3, LinearRep::Standard), 3); };
  const std::vector<WeightVector> e2 = unit_vectors(2), e3 = unit_vectors(3);
  fixed_entry("gl2-m2-std", "(GL_2, M_2) on the standard representation", numbered("x", 2), e2, std2);
  fixed_entry("gl2-m2-dual", "(GL_2, M_2) on the dual of the standard representation", numbered("x", 2),
              {{-1, 0}, {0, -1}}, [] { return matrix_monoid(general_linear_group(2, LinearRep::Dual), 2); });
  fixed_entry("gl2-m2-sum", "(GL_2, M_2) on standard plus dual", {"x1", "x2", "y1", "y2"},
              {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
              [] { return matrix_monoid(general_linear_group(2, LinearRep::StandardPlusDual), 2); });
  fixed_entry("gl3-m3-std", "(GL_3, M_3) on the standard representation", numbered("x", 3), e3, std3);
  fixed_entry("m2", "alias of gl2-m2-std", numbered("x", 2), e2, std2);
  fixed_entry("m3", "alias of gl3-m3-std", numbered("x", 3), e3, std3);
  fixed_entry("upper-tri-2", "upper triangular 2x2 matrices on the standard plane", numbered("x", 2), e2,
              upper_triangular_monoid);

  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.key < b.key; });
  for (const auto& e : out) {
    try {
      MonoidPresentation m = e.build(e.default_weights);
      validate_monoid(m);
      if (m.group.dim() != e.default_variables.size())
        throw InvariantError("representation dimension differs from the default space");
    } catch (const Error& err) {
      throw InvariantError("catalog entry " + e.key + " fails validation: " + err.what());
    }
  }
  return out;
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw ParseError("unknown monomial order '" + name + "' (expected grevlex or lex)");
}

std::vector<MultiPoly> parse_all(const std::vector<std::string>& texts, const RingPtr& ring) {
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

PolyMatrix parse_matrix(const std::vector<std::vector<std::string>>& m, const RingPtr& ring) {
  PolyMatrix out;
  for (const auto& row : m) out.push_back(parse_all(row, ring));
  return out;
}

std::vector<Rational> parse_point(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(parse_rational(t));
  return out;
}

MonoidPresentation build_inline(const InlineGroup& g, const InlineMonoid& m, std::size_t rank) {
  GroupPresentation group;
  group.name = g.name.empty() ? "inline" : g.name;
  group.ring = Ring::make(g.variables);
  group.relations = Ideal(group.ring, parse_all(g.relations, group.ring));
  group.action = parse_matrix(g.action, group.ring);
  group.inverse_action = parse_matrix(g.inverse_action, group.ring);
  group.identity = parse_point(g.identity);

  MonoidPresentation out;
  out.group = group;
  out.generators = parse_all(m.generators, group.ring);
  if (m.zero_point) out.zero_point = parse_point(*m.zero_point);
  if (m.central_weights.empty()) throw ParseError("monoid needs central weights");
  out.central = TorusAction(m.central_weights[0].size(), m.central_weights);
  out.central_to_maximal = m.central_to_maximal;
  out.tbar = WeightMonoid(rank, m.tbar);
  validate_monoid(out);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

json ideal_json(const Ideal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.groebner()) out.push_back(g.to_string());
  return out;
}

json polys_json(const std::vector<MultiPoly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string linear_form(const Vector& v, const RingPtr& ring) {
  MultiPoly f(ring);
  for (std::size_t i = 0; i < v.size() && i < ring->size(); ++i)
    if (v[i] != 0) f += MultiPoly::variable(ring, i) * v[i];
  return f.to_string();
}

json kempf_json(const Problem& p, const KempfOnePSG& k) {
  return {{"cochar", k.cochar},
          {"cochar_in_maximal", p.cochar},
          {"variable_weights", p.algebra.action().paired_with(p.cochar)}};
}

KempfOnePSG require_kempf(const Problem& p) {
  auto k = find_kempf_opsg(p.monoid);
  if (!k) throw InvariantError("monoid " + p.monoid.group.name + " is not Kempf through the given torus");
  return *k;
}

BBOptions bb_options(const ProblemSpec& spec, const GlobalOptions& opts) {
  BBOptions out;
  out.degree_bound = opts.degree_bound ? opts.degree_bound : spec.degree_bound;
  if (auto cap = opts.saturation_cap ? opts.saturation_cap : spec.saturation_cap) out.saturation_cap = *cap;
  return out;
}

unsigned depth_of(const ProblemSpec& spec, const GlobalOptions& opts) {
  return opts.depth.value_or(spec.depth.value_or(6));
}

json map_json(const AlgebraMap& m) { return polys_json(m.images); }

json cmd_bb(const ProblemSpec& spec, const GlobalOptions& opts, bool fixed_only) {
  Problem p = resolve(spec, opts);
  const KempfOnePSG k = require_kempf(p);
  BBResult r = assemble_bb(p.algebra, p.monoid.group, p.monoid, k, bb_options(spec, opts));
  const auto& v = r.verification;
  json verification = {{"fixed_contains_attractor", v.fixed_contains_attractor},
                       {"attractor_g_stable", v.attractor_g_stable},
                       {"attractor_gbar_stable", v.attractor_gbar_stable},
                       {"fixed_action_trivial", v.fixed_action_trivial},
                       {"section_identity", v.section_identity},
                       {"limit_map_well_defined", v.limit_map_well_defined},
                       {"unit_map_well_defined", v.unit_map_well_defined}};
  if (!v.all()) throw InvariantError("verification failed: " + verification.dump());
  json out = {{"command", fixed_only ? "fixed" : "bb"},
              {"group", p.monoid.group.name},
              {"variables", p.algebra.ring()->variables()},
              {"kempf", kempf_json(p, k)},
              {"fixed", ideal_json(r.fixed)}};
  if (fixed_only) {
    out["action_trivial"] = v.fixed_action_trivial;
    return out;
  }
  out["degree_bound"] = r.degree_bound;
  out["attractor"] = ideal_json(r.attractor);
  out["unit_map"] = map_json(r.unit_map);
  out["limit_map"] = map_json(r.limit_map);
  out["section_map"] = map_json(r.section_map);
  out["verification"] = verification;
  return out;
}

json cmd_kempf(const ProblemSpec& spec, const GlobalOptions& opts) {
  Problem p = resolve(spec, opts);
  json out = {{"command", "kempf"}, {"group", p.monoid.group.name}};
  auto k = find_kempf_opsg(p.monoid);
  if (!k) {
    out["kempf"] = nullptr;
    out["status"] = "not Kempf through given torus";
    return out;
  }
  out["kempf"] = kempf_json(p, *k);
  out["status"] = "found";
  return out;
}

json cmd_universal_quotient(const ProblemSpec& spec, const GlobalOptions& opts) {
  Problem p = resolve(spec, opts);
  UniversalQuotient uq = universal_quotient(p.monoid);
  json basis = json::array(), kernel = json::array();
  for (const auto& row : uq.u.basis()) basis.push_back(linear_form(row, p.algebra.ring()));
  for (const auto& row : uq.kernel.basis()) kernel.push_back(vector_json(row));
  return {{"command", "universal-quotient"},
          {"group", p.monoid.group.name},
          {"variables", p.algebra.ring()->variables()},
          {"dimension", uq.quotient_dim()},
          {"tower_dims", uq.tower_dims},
          {"basis", basis},
          {"kernel", kernel}};
}

json rows_json(const StabilizationReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"chi", r.chi},
                    {"predicted", r.predicted},
                    {"observed", r.observed},
                    {"dims", r.dims},
                    {"status", to_string(r.status)}});
  return rows;
}

TruncatedAlgebra truncation(const Problem& p, unsigned depth) {
  if (p.cochar.empty()) throw InvariantError("no Kempf cocharacter: the monoid is not Kempf and none was given");
  return truncate(p.algebra, p.cochar, depth);
}

CharacterSet character_set(const Problem& p) { return {p.characters.begin(), p.characters.end()}; }

json cmd_stabilize(const ProblemSpec& spec, const GlobalOptions& opts) {
  Problem p = resolve(spec, opts);
  const unsigned depth = depth_of(spec, opts);
  TruncatedAlgebra t = truncation(p, depth);
  json out = {{"command", "stabilize"},
              {"depth", depth},
              {"cochar", p.cochar},
              {"rows", rows_json(check_stabilization(t, character_set(p)))}};
  if (spec.module) {
    ModulePresentation pres;
    pres.generator_weights = spec.module->generator_weights;
    for (const auto& rel : spec.module->relations) pres.relations.push_back(parse_all(rel, p.algebra.ring()));
    AdicModule m = truncate_module(t, pres);
    out["module"] = {{"minimal_weight", m.minimal_weight},
                     {"rows", rows_json(check_stabilization(m, character_set(p)))}};
  }
  return out;
}

json cmd_algebraize(const ProblemSpec& spec, const GlobalOptions& opts) {
  Problem p = resolve(spec, opts);
  const unsigned depth = depth_of(spec, opts);
  TruncatedAlgebra t = truncation(p, depth);
  json pieces = json::array();
  for (const auto& piece : algebraize(t, character_set(p))) {
    const std::size_t direct = direct_isotypic_dim(t, piece.chi);
    if (direct != piece.basis.size())
      throw InvariantError("algebraization of " + format_weight(piece.chi) + " has dimension " +
                           std::to_string(piece.basis.size()) + ", expected " + std::to_string(direct));
    pieces.push_back(
        {{"chi", piece.chi}, {"level", piece.level}, {"basis", polys_json(piece.basis)}, {"dimension", direct}});
  }
  return {{"command", "algebraize"}, {"depth", depth}, {"cochar", p.cochar}, {"pieces", pieces}};
}

json catalog_show(const std::string& key) {
  const CatalogEntry& e = catalog_entry(key);
  MonoidPresentation m = e.build(e.default_weights);
  return {{"key", e.key},
          {"description", e.description},
          {"weights_fixed", e.weights_fixed},
          {"variables", e.default_variables},
          {"weights", e.default_weights},
          {"group", group_to_json(inline_group(m.group))},
          {"monoid", monoid_to_json(inline_monoid(m))}};
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open input file " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Invariant: return "invariant";
    case ErrorKind::Resource: return "resource";
  }
  return "unknown";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return ParseFailure;
    case ErrorKind::Precondition:
    case ErrorKind::Invariant: return InvariantFailure;
    case ErrorKind::Resource: return ResourceFailure;
  }
  return InvariantFailure;
}

}  // namespace

ProblemSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  reject_unknown(j, kSpecKeys, "problem document");
  const std::string where = "problem document";
  ProblemSpec s;
  list_field(j, "variables", where, s.variables);
  optional_field(j, "order", where, s.order);
  list_field(j, "ideal", where, s.ideal);
  optional_field(j, "rank", where, s.rank);
  list_field(j, "weights", where, s.weights);
  optional_field(j, "catalog", where, s.catalog);
  if (j.contains("group")) s.group = group_from_json(j["group"]);
  if (j.contains("monoid")) s.monoid = monoid_from_json(j["monoid"]);
  optional_field(j, "torus_monoid", where, s.torus_monoid);
  optional_field(j, "cochar", where, s.cochar);
  list_field(j, "characters", where, s.characters);
  if (j.contains("module")) {
    const json& m = j["module"];
    reject_unknown(m, {"generator_weights", "relations"}, "module");
    ModuleSpec mod;
    mod.generator_weights = field<std::vector<WeightVector>>(m, "generator_weights", "module");
    list_field(m, "relations", "module", mod.relations);
    s.module = std::move(mod);
  }
  optional_field(j, "depth", where, s.depth);
  optional_field(j, "degree_bound", where, s.degree_bound);
  optional_field(j, "saturation_cap", where, s.saturation_cap);
  return s;
}

std::string serialize_spec(const ProblemSpec& s) {
  json j = json::object();
  if (!s.variables.empty()) j["variables"] = s.variables;
  if (s.order) j["order"] = *s.order;
  if (!s.ideal.empty()) j["ideal"] = s.ideal;
  if (s.rank) j["rank"] = *s.rank;
  if (!s.weights.empty()) j["weights"] = s.weights;
  if (s.catalog) j["catalog"] = *s.catalog;
  if (s.group) j["group"] = group_to_json(*s.group);
  if (s.monoid) j["monoid"] = monoid_to_json(*s.monoid);
  if (s.torus_monoid) j["torus_monoid"] = *s.torus_monoid;
  if (s.cochar) j["cochar"] = *s.cochar;
  if (!s.characters.empty()) j["characters"] = s.characters;
  if (s.module) {
    json m = {{"generator_weights", s.module->generator_weights}};
    if (!s.module->relations.empty()) m["relations"] = s.module->relations;
    j["module"] = m;
  }
  if (s.depth) j["depth"] = *s.depth;
  if (s.degree_bound) j["degree_bound"] = *s.degree_bound;
  if (s.saturation_cap) j["saturation_cap"] = *s.saturation_cap;
  return j.dump(2) + "\n";
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& key) {
  for (const auto& e : catalog())
    if (e.key == key) return e;
  throw ParseError("unknown catalog key '" + key + "'");
}

Problem resolve(const ProblemSpec& spec, const GlobalOptions& options) {
  try {
    std::vector<std::string> variables = spec.variables;
    std::vector<WeightVector> weights = spec.weights;
    const CatalogEntry* entry = spec.catalog ? &catalog_entry(*spec.catalog) : nullptr;
    if (entry) {
      if (variables.empty()) variables = entry->default_variables;
      if (weights.empty()) weights = entry->default_weights;
      if (entry->weights_fixed && weights != entry->default_weights)
        throw ParseError("catalog entry " + entry->key + " acts with weights " +
                         [&] {
                           std::string s;
                           for (const auto& w : entry->default_weights) s += format_weight(w);
                           return s;
                         }() +
                         " only");
    }
    if (variables.empty()) throw ParseError("no variables declared");
    if (weights.size() != variables.size())
      throw ParseError("expected one weight vector per variable (" + std::to_string(variables.size()) + "), got " +
                       std::to_string(weights.size()));
    const std::size_t rank = spec.rank.value_or(weights[0].size());
    for (const auto& w : weights)
      if (w.size() != rank) throw ParseError("weight vector " + format_weight(w) + " does not have length " +
                                             std::to_string(rank));

    const std::string order = options.order.value_or(spec.order.value_or("grevlex"));
    RingPtr ring = Ring::make(variables, parse_order(order));
    Problem p;
    p.algebra = GradedAlgebra(Ideal(ring, parse_all(spec.ideal, ring)), TorusAction(rank, weights));

    const int sources = int(entry != nullptr) + int(spec.group.has_value() || spec.monoid.has_value()) +
                        int(spec.torus_monoid.has_value());
    if (sources > 1) throw ParseError("give at most one of catalog, group/monoid and torus_monoid");
    if (entry) {
      p.monoid = entry->build(weights);
    } else if (spec.group || spec.monoid) {
      if (!spec.group || !spec.monoid) throw ParseError("inline group and monoid must be given together");
      p.monoid = build_inline(*spec.group, *spec.monoid, rank);
    } else {
      p.monoid = torus_monoid(torus_group(rank, weights), rank, spec.torus_monoid.value_or(unit_vectors(rank)));
    }
    if (p.monoid.group.dim() != variables.size())
      throw ParseError("the group acts on a space of dimension " + std::to_string(p.monoid.group.dim()) + ", not " +
                       std::to_string(variables.size()));
    if (p.monoid.tbar.rank() != rank || p.monoid.central_to_maximal.size() != rank)
      throw ParseError("maximal torus rank of the monoid differs from the weight rank " + std::to_string(rank));

    if (spec.cochar) {
      if (spec.cochar->size() != rank) throw ParseError("cochar length differs from the torus rank");
      p.cochar = *spec.cochar;
    } else if (auto k = find_kempf_opsg(p.monoid)) {
      p.cochar = cochar_in_maximal(p.monoid, *k);
      p.kempf_found = true;
    }

    if (!spec.characters.empty()) {
      p.characters = spec.characters;
    } else {
      // Weights of the monomials of degree at most two.
      CharacterSet chars;
      for (const auto& m : monomials_up_to_degree(ring->size(), 2)) chars.insert(weight_of(m, p.algebra.action()));
      p.characters.assign(chars.begin(), chars.end());
    }
    for (const auto& chi : p.characters)
      if (chi.size() != rank) throw ParseError("character " + format_weight(chi) + " does not match the torus rank");
    return p;
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  } catch (const InvariantError& e) {
    throw ParseError(e.what());
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Attractor decompositions, Kempf subgroups and formal truncations", "bbd"};
  app.require_subcommand(1);
  GlobalOptions opts;
  unsigned depth = 0, degree_bound = 0, cap = 0;
  std::string order;
  auto* depth_opt = app.add_option("--depth", depth, "truncation depth (default 6)");
  auto* degree_opt = app.add_option("--degree-bound", degree_bound, "degree bound for attractor computations");
  auto* cap_opt = app.add_option("--saturation-cap", cap, "iteration cap for G-saturation (default 32)");
  auto* order_opt =
      app.add_option("--order", order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));

  std::string input;
  struct Command {
    const char* name;
    const char* help;
    std::function<json(const ProblemSpec&, const GlobalOptions&)> fn;
  };
  const std::vector<Command> commands = {
      {"bb", "attractor and fixed ideals with unit, limit and section maps",
       [](const ProblemSpec& s, const GlobalOptions& o) { return cmd_bb(s, o, false); }},
      {"kempf", "search for a Kempf one-parameter subgroup", cmd_kempf},
      {"stabilize", "per-character stabilization of the truncation tower", cmd_stabilize},
      {"algebraize", "isotypic pieces recovered from the truncation tower", cmd_algebraize},
      {"universal-quotient", "universal monoid quotient of the linear representation", cmd_universal_quotient},
      {"fixed", "fixed-point ideal and trivial-action check",
       [](const ProblemSpec& s, const GlobalOptions& o) { return cmd_bb(s, o, true); }},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("input", input, "problem document (default: standard input)");
    subs.push_back(sub);
  }
  auto* cat = app.add_subcommand("catalog", "built-in group and monoid presentations");
  cat->fallthrough();
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog keys");
  cat_list->fallthrough();
  std::string key;
  auto* cat_show = cat->add_subcommand("show", "print a catalog entry");
  cat_show->fallthrough();
  cat_show->add_option("key", key, "catalog key")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? Ok : ParseFailure;
  }
  if (*depth_opt) opts.depth = depth;
  if (*degree_opt) opts.degree_bound = degree_bound;
  if (*cap_opt) opts.saturation_cap = cap;
  if (*order_opt) opts.order = order;

  try {
    if (cat_list->parsed()) {
      for (const auto& e : catalog()) out << e.key << "  " << e.description << "\n";
      return Ok;
    }
    if (cat_show->parsed()) {
      out << catalog_show(key).dump(2) << "\n";
      return Ok;
    }
    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      ProblemSpec spec = parse_spec(read_input(input, in));
      out << commands[i].fn(spec, opts).dump(2) << "\n";
      return Ok;
    }
  } catch (const Error& e) {
    err << json{{"error", kind_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return exit_code(e.kind());
  }
  return ParseFailure;
}

}  // namespace bbd::cli
