#include "eqsig/document.hpp"

#include <set>

#include <json.hpp>

#include "eqsig/error.hpp"
#include "eqsig/move_script.hpp"

namespace eqsig {

namespace {

using Json = nlohmann::ordered_json;

// ---- reading ---------------------------------------------------------------

void allow_keys(const Json& obj, const std::string& path, std::set<std::string> keys) {
  for (const auto& [key, value] : obj.items())
    if (!keys.contains(key)) throw SchemaError(path + "." + key, "unknown field");
}

const Json& field(const Json& obj, const std::string& path, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

const Json* optional_field(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
}

void require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
}

Integer read_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    if (auto v = parse_integer(j.get<std::string>())) return *v;
    throw SchemaError(path, "string is not a decimal integer");
  }
  if (j.is_number_float())
    throw SchemaError(path, "expected an integer (write large values as decimal strings)");
  throw SchemaError(path, "expected an integer");
}

long read_small(const Json& j, const std::string& path) {
  auto v = to_int64(read_integer(j, path));
  if (!v) throw SchemaError(path, "integer out of range");
  return static_cast<long>(*v);
}

std::size_t read_count(const Json& j, const std::string& path) {
  const long v = read_small(j, path);
  if (v < 0) throw SchemaError(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

int read_sign(const Json& j, const std::string& path) {
  const long v = read_small(j, path);
  if (v != 1 && v != -1) throw SchemaError(path, "expected +1 or -1");
  return static_cast<int>(v);
}

std::string read_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

bool read_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
  return j.get<bool>();
}

IntMatrix read_square(const Json& j, const std::string& path, std::size_t n) {
  require_array(j, path);
  if (j.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " rows");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    require_array(j[i], row_path);
    if (j[i].size() != n) throw SchemaError(row_path, "expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k)
      m(i, k) = read_integer(j[i][k], row_path + "[" + std::to_string(k) + "]");
  }
  return m;
}

SymIntMatrix read_symmetric(const Json& j, const std::string& path, const std::string& name,
                            std::size_t n) {
  IntMatrix m = read_square(j, path, n);
  if (!m.is_symmetric()) throw SchemaError(path, name + " not symmetric");
  return SymIntMatrix(std::move(m));
}

std::string label_of(const Json& j) {
  const Json* l = optional_field(j, "label");
  return l ? read_string(*l, "$.label") : std::string();
}

Expectation read_expectation(const Json& j, const std::string& path) {
  require_object(j, path);
  allow_keys(j, path, {"sigma_plus", "sigma_minus", "e", "sigma_tilde", "stated_sigma_tilde", "det"});
  Expectation x;
  if (auto* f = optional_field(j, "sigma_plus")) x.sigma_plus = read_small(*f, path + ".sigma_plus");
  if (auto* f = optional_field(j, "sigma_minus")) x.sigma_minus = read_small(*f, path + ".sigma_minus");
  if (auto* f = optional_field(j, "e")) x.e = read_integer(*f, path + ".e");
  if (auto* f = optional_field(j, "sigma_tilde")) x.sigma_tilde = read_small(*f, path + ".sigma_tilde");
  if (auto* f = optional_field(j, "stated_sigma_tilde"))
    x.stated_sigma_tilde = read_small(*f, path + ".stated_sigma_tilde");
  if (auto* f = optional_field(j, "det")) x.det_full = read_integer(*f, path + ".det");
  return x;
}

EquivariantGoeritz read_goeritz(const Json& j, Document& doc) {
  allow_keys(j, "$", {"kind", "label", "n", "A", "B", "e", "type_c", "notes", "expected"});
  const std::size_t n = read_count(field(j, "$", "n"), "$.n");
  if (n == 0) throw SchemaError("$.n", "expected a positive integer");
  EquivariantGoeritz g(read_symmetric(field(j, "$", "A"), "$.A", "A", n),
                       read_symmetric(field(j, "$", "B"), "$.B", "B", n),
                       read_integer(field(j, "$", "e"), "$.e"), label_of(j));
  if (const Json* tc = optional_field(j, "type_c")) {
    require_object(*tc, "$.type_c");
    allow_keys(*tc, "$.type_c", {"v", "S", "s"});
    TypeCProvenance prov;
    const Json& v = field(*tc, "$.type_c", "v");
    require_array(v, "$.type_c.v");
    if (v.size() + 1 != n) throw SchemaError("$.type_c.v", "expected n-1 entries");
    for (std::size_t i = 0; i < v.size(); ++i)
      prov.v.push_back(read_integer(v[i], "$.type_c.v[" + std::to_string(i) + "]"));
    prov.S = read_integer(field(*tc, "$.type_c", "S"), "$.type_c.S");
    prov.s = read_sign(field(*tc, "$.type_c", "s"), "$.type_c.s");
    g.type_c = std::move(prov);
  }
  if (const Json* x = optional_field(j, "expected")) doc.expected = read_expectation(*x, "$.expected");
  return g;
}

Crossing read_crossing(const Json& j, const std::string& path) {
  require_object(j, path);
  allow_keys(j, path, {"id", "regions", "eta", "color", "epsilon", "locus", "partner"});
  Crossing c;
  c.id = read_string(field(j, path, "id"), path + ".id");
  const Json& regions = field(j, path, "regions");
  require_array(regions, path + ".regions");
  if (regions.size() != 2) throw SchemaError(path + ".regions", "expected two region tokens");
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string rp = path + ".regions[" + std::to_string(i) + "]";
    auto r = region_from_token(read_string(regions[i], rp));
    if (!r) throw SchemaError(rp, "expected a region token a<i>, a<i>' or fixed");
    c.regions[i] = *r;
  }
  c.eta = read_sign(field(j, path, "eta"), path + ".eta");
  auto color = color_from_token(read_string(field(j, path, "color"), path + ".color"));
  if (!color) throw SchemaError(path + ".color", "expected unicolored or bicolored");
  c.color = *color;
  if (const Json* e = optional_field(j, "epsilon")) c.epsilon = read_sign(*e, path + ".epsilon");
  auto locus = locus_from_token(read_string(field(j, path, "locus"), path + ".locus"));
  if (!locus) throw SchemaError(path + ".locus", "expected off-axis, on-axis-h or on-axis-h'");
  c.locus = *locus;
  c.partner = read_string(field(j, path, "partner"), path + ".partner");
  return c;
}

SymmetricDiagram read_diagram(const Json& j) {
  allow_keys(j, "$", {"kind", "label", "n", "crossings", "notes"});
  SymmetricDiagram d;
  d.label = label_of(j);
  d.n = read_count(field(j, "$", "n"), "$.n");
  const Json& cs = field(j, "$", "crossings");
  require_array(cs, "$.crossings");
  for (std::size_t i = 0; i < cs.size(); ++i)
    d.crossings.push_back(read_crossing(cs[i], "$.crossings[" + std::to_string(i) + "]"));
  return d;
}

BoundReport read_report(const Json& j) {
  allow_keys(j, "$", {"kind", "label", "initial_sigma", "steps", "final_sigma", "compliant",
                      "lower_bounds", "notes"});
  BoundReport r;
  r.label = label_of(j);
  r.initial_sigma = read_small(field(j, "$", "initial_sigma"), "$.initial_sigma");
  r.final_sigma = read_small(field(j, "$", "final_sigma"), "$.final_sigma");
  r.compliant = read_bool(field(j, "$", "compliant"), "$.compliant");
  const Json& steps = field(j, "$", "steps");
  require_array(steps, "$.steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = "$.steps[" + std::to_string(i) + "]";
    const Json& s = steps[i];
    require_object(s, p);
    allow_keys(s, p, {"move", "sigma_before", "sigma_after", "delta", "bound", "compliant"});
    BoundStep step;
    const std::string text = read_string(field(s, p, "move"), p + ".move");
    std::vector<MoveSpec> parsed;
    try {
      parsed = parse_move_script(text);
    } catch (const ScriptError& e) {
      throw SchemaError(p + ".move", e.what());
    }
    if (parsed.size() != 1) throw SchemaError(p + ".move", "expected exactly one move");
    step.move = parsed.front();
    step.sigma_before = read_small(field(s, p, "sigma_before"), p + ".sigma_before");
    step.sigma_after = read_small(field(s, p, "sigma_after"), p + ".sigma_after");
    step.delta = read_small(field(s, p, "delta"), p + ".delta");
    step.bound = read_small(field(s, p, "bound"), p + ".bound");
    step.compliant = read_bool(field(s, p, "compliant"), p + ".compliant");
    r.steps.push_back(std::move(step));
  }
  const Json& lb = field(j, "$", "lower_bounds");
  require_object(lb, "$.lower_bounds");
  allow_keys(lb, "$.lower_bounds",
             {"uA_min", "uB_min", "uC_min", "homotopy_selfintersections_min", "caveats"});
  r.lower_bounds.uA_min = read_small(field(lb, "$.lower_bounds", "uA_min"), "$.lower_bounds.uA_min");
  r.lower_bounds.uB_min = read_small(field(lb, "$.lower_bounds", "uB_min"), "$.lower_bounds.uB_min");
  r.lower_bounds.uC_min = read_small(field(lb, "$.lower_bounds", "uC_min"), "$.lower_bounds.uC_min");
  r.lower_bounds.homotopy_selfintersections_min =
      read_small(field(lb, "$.lower_bounds", "homotopy_selfintersections_min"),
                 "$.lower_bounds.homotopy_selfintersections_min");
  if (const Json* cav = optional_field(lb, "caveats")) {
    require_object(*cav, "$.lower_bounds.caveats");
    allow_keys(*cav, "$.lower_bounds.caveats",
               {"uA_min", "uB_min", "uC_min", "homotopy_selfintersections_min"});
    for (const auto& [key, value] : cav->items())
      read_string(value, "$.lower_bounds.caveats." + key);
  }
  return r;
}

// ---- writing ---------------------------------------------------------------

Json write_integer(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return to_string(v);
}

Json write_matrix(const SymIntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(write_integer(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_label(Json& j, const std::string& label) {
  if (!label.empty()) j["label"] = label;
}

Json write_goeritz(const EquivariantGoeritz& g, const Document& doc) {
  Json j;
  j["kind"] = to_string(DocumentKind::EquivariantGoeritz);
  write_label(j, g.label);
  j["n"] = g.n();
  j["A"] = write_matrix(g.A);
  j["B"] = write_matrix(g.B);
  j["e"] = write_integer(g.e);
  if (g.type_c) {
    Json tc;
    Json v = Json::array();
    for (const auto& x : g.type_c->v) v.push_back(write_integer(x));
    tc["v"] = std::move(v);
    tc["S"] = write_integer(g.type_c->S);
    tc["s"] = g.type_c->s;
    j["type_c"] = std::move(tc);
  }
  if (doc.expected) {
    const Expectation& x = *doc.expected;
    Json e = Json::object();
    if (x.sigma_plus) e["sigma_plus"] = *x.sigma_plus;
    if (x.sigma_minus) e["sigma_minus"] = *x.sigma_minus;
    if (x.e) e["e"] = write_integer(*x.e);
    if (x.sigma_tilde) e["sigma_tilde"] = *x.sigma_tilde;
    if (x.stated_sigma_tilde) e["stated_sigma_tilde"] = *x.stated_sigma_tilde;
    if (x.det_full) e["det"] = write_integer(*x.det_full);
    j["expected"] = std::move(e);
  }
  return j;
}

Json write_diagram(const SymmetricDiagram& d) {
  Json j;
  j["kind"] = to_string(DocumentKind::SymmetricDiagram);
  write_label(j, d.label);
  j["n"] = d.n;
  Json cs = Json::array();
  for (const auto& c : d.crossings) {
    Json cj;
    cj["id"] = c.id;
    cj["regions"] = Json::array({to_token(c.regions[0]), to_token(c.regions[1])});
    cj["eta"] = c.eta;
    cj["color"] = to_token(c.color);
    if (c.epsilon) cj["epsilon"] = *c.epsilon;
    cj["locus"] = to_token(c.locus);
    cj["partner"] = c.partner;
    cs.push_back(std::move(cj));
  }
  j["crossings"] = std::move(cs);
  return j;
}

Json write_report(const BoundReport& r) {
  Json j;
  j["kind"] = to_string(DocumentKind::BoundReport);
  write_label(j, r.label);
  j["initial_sigma"] = r.initial_sigma;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json sj;
    sj["move"] = format_move(s.move);
    sj["sigma_before"] = s.sigma_before;
    sj["sigma_after"] = s.sigma_after;
    sj["delta"] = s.delta;
    sj["bound"] = s.bound;
    sj["compliant"] = s.compliant;
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  j["final_sigma"] = r.final_sigma;
  j["compliant"] = r.compliant;
  Json lb;
  lb["uA_min"] = r.lower_bounds.uA_min;
  lb["uB_min"] = r.lower_bounds.uB_min;
  lb["uC_min"] = r.lower_bounds.uC_min;
  lb["homotopy_selfintersections_min"] = r.lower_bounds.homotopy_selfintersections_min;
  lb["caveats"] = {{"uA_min", LowerBoundCaveats::uA},
                   {"uB_min", LowerBoundCaveats::uB},
                   {"uC_min", LowerBoundCaveats::uC},
                   {"homotopy_selfintersections_min", LowerBoundCaveats::homotopy}};
  j["lower_bounds"] = std::move(lb);
  return j;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t end = std::min(text.size(), byte > 0 ? byte - 1 : 0);
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::SymmetricDiagram:
      return "symmetric-diagram";
    case DocumentKind::EquivariantGoeritz:
      return "equivariant-goeritz";
    case DocumentKind::BoundReport:
      break;
  }
  return "bound-report";
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix.
    if (auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw SyntaxError(line, column, what);
  }
  require_object(j, "$");
  const std::string kind = read_string(field(j, "$", "kind"), "$.kind");
  Document doc;
  if (const Json* notes = optional_field(j, "notes")) doc.notes = read_string(*notes, "$.notes");
  if (kind == to_string(DocumentKind::EquivariantGoeritz)) {
    doc.payload = read_goeritz(j, doc);
  } else if (kind == to_string(DocumentKind::SymmetricDiagram)) {
    doc.payload = read_diagram(j);
  } else if (kind == to_string(DocumentKind::BoundReport)) {
    doc.payload = read_report(j);
  } else {
    throw SchemaError("$.kind", "unknown document kind '" + kind + "'");
  }
  return doc;
}

std::string serialize_document(const Document& doc, int indent) {
  Json j = std::visit(
      [&](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, EquivariantGoeritz>) return write_goeritz(p, doc);
        else if constexpr (std::is_same_v<T, SymmetricDiagram>) return write_diagram(p);
        else return write_report(p);
      },
      doc.payload);
  if (doc.notes) j["notes"] = *doc.notes;
  return j.dump(indent);
}

}  // namespace eqsig
