#include "grl/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "grl/error.hpp"

namespace grl {

namespace fs = std::filesystem;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t as_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

Element as_element(const json& j, const char* what) {
  const std::size_t v = as_size(j, what);
  if (v >= kNotComposable) throw ParseError(std::string(what) + " is too large");
  return static_cast<Element>(v);
}

std::vector<Element> as_elements(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Element> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_element(v, what));
  return out;
}

// Accepts a flat row-major array or an array of rows.
std::vector<Element> as_table(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  if (!j.empty() && j.front().is_array()) {
    std::vector<Element> out;
    for (const auto& row : j) {
      const auto r = as_elements(row, what);
      if (r.size() != j.size()) {
        throw ValidationError("BadShape", {r.size()}, std::string(what) + " must be square");
      }
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  return as_elements(j, what);
}

json rows_json(std::span<const Element> flat, std::size_t rows, std::size_t cols) {
  json out = json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    out.push_back(json(std::vector<Element>(flat.begin() + i * cols, flat.begin() + (i + 1) * cols)));
  }
  return out;
}

std::vector<std::string> as_labels(const json& j) {
  if (!j.contains("labels")) return {};
  const json& l = j.at("labels");
  if (!l.is_array()) throw ParseError("labels must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : l) {
    if (!v.is_string()) throw ParseError("labels must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

// Follows {"file": path} references, returning the target and its directory.
std::pair<json, fs::path> resolve(const json& j, const fs::path& dir) {
  if (j.is_object() && j.contains("file") && !j.contains("kind")) {
    const auto& f = j.at("file");
    if (!f.is_string()) throw ParseError("file must be a string");
    const fs::path p = dir / f.get<std::string>();
    return resolve(read_json_file(p), p.parent_path());
  }
  return {j, dir};
}

void expect_kind(const json& j, const char* kind) {
  const json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw ParseError(std::string("expected kind '") + kind + "'");
  }
}

std::string named_of(const json& j) {
  const json& n = field(j, "named");
  if (!n.is_string()) throw ParseError("named must be a string");
  return n.get<std::string>();
}

FiniteSemigroup named_semigroup(const std::string& name) {
  static const std::regex pat(R"((L|R|SL|Z|B|N)(\d+))");
  std::smatch m;
  if (!std::regex_match(name, m, pat)) throw ParseError("unknown semigroup '" + name + "'");
  const std::size_t n = std::stoul(m[2]);
  if (n == 0 || n > 64) throw ParseError("semigroup size out of range in '" + name + "'");
  const std::string fam = m[1];
  if (fam == "L") return left_zero_semigroup(n);
  if (fam == "R") return right_zero_semigroup(n);
  if (fam == "SL") return chain_semilattice(n);
  if (fam == "Z") return cyclic_group(n);
  if (fam == "N") return null_semigroup(n);
  if (n > 7) throw ParseError("B_n is limited to n <= 7");
  return matrix_units_semigroup(n);
}

FiniteRing named_ring(const std::string& name) {
  static const std::regex zn(R"(Z(\d+))");
  static const std::regex kzn(R"((\d+)Z(\d+))");
  static const std::regex mat(R"(M(\d+)\((.+)\))");
  std::smatch m;
  auto small = [&](const std::string& s) {
    const std::size_t n = std::stoul(s);
    if (n == 0 || n > 256) throw ParseError("ring size out of range in '" + name + "'");
    return n;
  };
  if (name == "F4") return field_f4();
  if (std::regex_match(name, m, zn)) return integers_mod(small(m[1]));
  if (std::regex_match(name, m, kzn)) {
    const FiniteRing z = integers_mod(small(m[2]));
    const Element g = static_cast<Element>(std::stoul(m[1]) % z.order());
    return generated_subring(z, std::span<const Element>(&g, 1)).ring;
  }
  if (std::regex_match(name, m, mat)) return matrix_ring(named_ring(m[2]), small(m[1]));
  const auto x = name.find('x');
  if (x != std::string::npos && name.find('(') == std::string::npos) {
    return product_ring(named_ring(name.substr(0, x)), named_ring(name.substr(x + 1)));
  }
  throw ParseError("unknown ring '" + name + "'");
}

bool looks_like_groupoid(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    return s == "trivial" || s.rfind("pair", 0) == 0;
  }
  if (!j.is_object()) return false;
  if (j.contains("kind")) return j.at("kind") == "groupoid";
  if (j.contains("named")) {
    const auto& n = j.at("named");
    return n == "group" || n == "pair" || n == "trivial" || n == "disjoint_union";
  }
  return false;
}

FiniteAdditiveGroup additive_from_json(const json& j) {
  const std::size_t n = as_size(field(j, "order"), "order");
  return validate_additive_group(n, as_table(field(j, "add"), "add"),
                                 as_elements(field(j, "neg"), "neg"));
}

json additive_json(const FiniteAdditiveGroup& g) {
  return {{"order", g.order()},
          {"add", rows_json(g.add_table(), g.order(), g.order())},
          {"neg", json(std::vector<Element>(g.neg_table().begin(), g.neg_table().end()))}};
}

}  // namespace

json to_json(const FiniteSemigroup& s) {
  json out = {{"kind", "semigroup"},
              {"order", s.order()},
              {"table", rows_json(s.table(), s.order(), s.order())}};
  if (!s.labels().empty()) out["labels"] = s.labels();
  return out;
}

json to_json(const FiniteGroupoid& g) {
  const RawGroupoid raw = g.raw();
  json morphisms = json::array();
  for (const auto& m : raw.morphisms) {
    json e = {{"dom", m.dom}, {"cod", m.cod}, {"inv", m.inv}};
    if (!m.label.empty()) e["label"] = m.label;
    morphisms.push_back(e);
  }
  json compose = json::array();
  for (const auto& t : raw.compose) compose.push_back({t[0], t[1], t[2]});
  return {{"kind", "groupoid"},
          {"objects", raw.objects},
          {"morphisms", morphisms},
          {"compose", compose}};
}

json to_json(const FiniteRing& r) {
  json out = additive_json(r.additive());
  out["kind"] = "ring";
  out["mul"] = rows_json(r.mul_table(), r.order(), r.order());
  return out;
}

json to_json(const GradedRing& r) {
  const GradingBase& b = r.base();
  json base = b.semigroup() ? to_json(*b.semigroup()) : to_json(*b.groupoid());
  json components = json::object();
  for (Element s = 0; s < b.size(); ++s) {
    if (r.component(s).order() > 1) components[std::to_string(s)] = additive_json(r.component(s));
  }
  json products = json::array();
  for (auto [s, t] : r.product_pairs()) {
    products.push_back({{"s", s}, {"t", t}, {"table", rows_json(*r.product_table(s, t),
                                                                 r.component(s).order(),
                                                                 r.component(t).order())}});
  }
  return {{"kind", "graded_ring"}, {"base", base}, {"components", components}, {"products", products}};
}

std::string structure_kind(const Structure& s) {
  static const char* names[] = {"semigroup", "groupoid", "ring", "graded_ring"};
  return names[s.index()];
}

json to_json(const Structure& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

FiniteSemigroup semigroup_from_json(const json& input, const fs::path& base_dir) {
  const auto [j, dir] = resolve(input, base_dir);
  if (j.is_string()) return named_semigroup(j.get<std::string>());
  if (j.is_object() && j.contains("named")) {
    const std::string name = named_of(j);
    auto n = [&] { return as_size(field(j, "n"), "n"); };
    if (name == "left_zero") return left_zero_semigroup(n());
    if (name == "right_zero") return right_zero_semigroup(n());
    if (name == "chain") return chain_semilattice(n());
    if (name == "cyclic") return cyclic_group(n());
    if (name == "null") return null_semigroup(n());
    if (name == "matrix_units") return matrix_units_semigroup(n());
    if (name == "monogenic") {
      return monogenic_semigroup(as_size(field(j, "index"), "index"),
                                 as_size(field(j, "period"), "period"));
    }
    if (name == "groupoid_semigroup") {
      return to_inverse_semigroup(groupoid_from_json(field(j, "G"), dir)).semigroup;
    }
    throw ParseError("unknown semigroup family '" + name + "'");
  }
  expect_kind(j, "semigroup");
  const std::size_t n = as_size(field(j, "order"), "order");
  return validate_semigroup(n, as_table(field(j, "table"), "table"), as_labels(j));
}

FiniteGroupoid groupoid_from_json(const json& input, const fs::path& base_dir) {
  const auto [j, dir] = resolve(input, base_dir);
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "trivial") return trivial_groupoid();
    static const std::regex pat(R"(pair(\d+))");
    std::smatch m;
    if (std::regex_match(s, m, pat)) return pair_groupoid(std::stoul(m[1]));
    throw ParseError("unknown groupoid '" + s + "'");
  }
  if (j.is_object() && j.contains("named")) {
    const std::string name = named_of(j);
    if (name == "trivial") return trivial_groupoid();
    if (name == "pair") return pair_groupoid(as_size(field(j, "n"), "n"));
    if (name == "group") return group_groupoid(semigroup_from_json(field(j, "S"), dir));
    if (name == "disjoint_union") {
      const json& parts = field(j, "parts");
      if (!parts.is_array() || parts.empty()) throw ParseError("parts must be a non-empty array");
      FiniteGroupoid acc = groupoid_from_json(parts.front(), dir);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = disjoint_union(acc, groupoid_from_json(parts[i], dir));
      }
      return acc;
    }
    throw ParseError("unknown groupoid family '" + name + "'");
  }
  expect_kind(j, "groupoid");
  RawGroupoid raw;
  const json& objects = field(j, "objects");
  if (objects.is_number_integer()) {
    raw.objects.resize(as_size(objects, "objects"));
  } else if (objects.is_array()) {
    for (const auto& o : objects) {
      if (!o.is_string()) throw ParseError("objects must be strings");
      raw.objects.push_back(o.get<std::string>());
    }
  } else {
    throw ParseError("objects must be a count or an array of labels");
  }
  const json& morphisms = field(j, "morphisms");
  if (!morphisms.is_array()) throw ParseError("morphisms must be an array");
  for (const auto& m : morphisms) {
    MorphismSpec spec{as_element(field(m, "dom"), "dom"), as_element(field(m, "cod"), "cod"),
                      as_element(field(m, "inv"), "inv"), {}};
    if (m.contains("label")) {
      if (!m.at("label").is_string()) throw ParseError("label must be a string");
      spec.label = m.at("label").get<std::string>();
    }
    raw.morphisms.push_back(std::move(spec));
  }
  const json& compose = field(j, "compose");
  if (!compose.is_array()) throw ParseError("compose must be an array");
  for (const auto& t : compose) {
    const auto v = as_elements(t, "compose");
    if (v.size() != 3) throw ParseError("compose entries are [g, h, gh]");
    raw.compose.push_back({v[0], v[1], v[2]});
  }
  return validate_groupoid(raw);
}

FiniteRing ring_from_json(const json& input, const fs::path& base_dir) {
  const auto [j, dir] = resolve(input, base_dir);
  if (j.is_string()) return named_ring(j.get<std::string>());
  if (j.is_object() && j.contains("named")) {
    const std::string name = named_of(j);
    if (name == "Zn") return integers_mod(as_size(field(j, "n"), "n"));
    if (name == "zero") return zero_multiplication_ring(as_size(field(j, "n"), "n"));
    if (name == "F4") return field_f4();
    if (name == "product") {
      return product_ring(ring_from_json(field(j, "A"), dir), ring_from_json(field(j, "B"), dir));
    }
    if (name == "matrix") {
      return matrix_ring(ring_from_json(field(j, "A"), dir), as_size(field(j, "k"), "k"));
    }
    if (name == "subring") {
      const FiniteRing a = ring_from_json(field(j, "A"), dir);
      const auto gens = as_elements(field(j, "generators"), "generators");
      for (Element g : gens) {
        if (g >= a.order()) throw ValidationError("OutOfRange", {g}, "generator outside the ring");
      }
      return generated_subring(a, gens).ring;
    }
    throw ParseError("unknown ring family '" + name + "'");
  }
  expect_kind(j, "ring");
  FiniteAdditiveGroup add = additive_from_json(j);
  return validate_ring(std::move(add), as_table(field(j, "mul"), "mul"));
}

GradedRing graded_from_json(const json& input, const fs::path& base_dir) {
  const auto [j, dir] = resolve(input, base_dir);
  if (j.is_object() && j.contains("construct")) return build_construction(j, dir);
  expect_kind(j, "graded_ring");
  const json& base_json = field(j, "base");
  GradingBase base = looks_like_groupoid(resolve(base_json, dir).first)
                         ? GradingBase(groupoid_from_json(base_json, dir))
                         : GradingBase(semigroup_from_json(base_json, dir));
  RawGrading raw{std::move(base), {}, {}};
  raw.components.assign(raw.base.size(), trivial_additive_group());
  if (j.contains("components")) {
    const json& comps = j.at("components");
    if (!comps.is_object()) throw ParseError("components must be an object keyed by base index");
    for (auto it = comps.begin(); it != comps.end(); ++it) {
      std::size_t s = 0;
      try {
        std::size_t used = 0;
        s = std::stoul(it.key(), &used);
        if (used != it.key().size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("component key '" + it.key() + "' is not an index");
      }
      if (s >= raw.components.size()) {
        throw ValidationError("BadShape", {s}, "component index outside the base");
      }
      raw.components[s] = additive_from_json(it.value());
    }
  }
  if (j.contains("products")) {
    const json& prods = j.at("products");
    if (!prods.is_array()) throw ParseError("products must be an array");
    for (const auto& p : prods) {
      const Element s = as_element(field(p, "s"), "s");
      const Element t = as_element(field(p, "t"), "t");
      const json& table = field(p, "table");
      std::vector<Element> flat;
      if (table.is_array() && !table.empty() && table.front().is_array()) {
        for (const auto& row : table) {
          const auto r = as_elements(row, "table");
          flat.insert(flat.end(), r.begin(), r.end());
        }
      } else {
        flat = as_elements(table, "table");
      }
      if (!raw.products.emplace(std::pair{s, t}, std::move(flat)).second) {
        throw ValidationError("BadShape", {s, t}, "duplicate product table");
      }
    }
  }
  return validate_grading(std::move(raw));
}

Structure structure_from_json(const json& input, const fs::path& base_dir) {
  const auto [j, dir] = resolve(input, base_dir);
  try {
    if (j.is_object() && j.contains("construct")) return build_construction(j, dir);
    const json& k = field(j, "kind");
    if (!k.is_string()) throw ParseError("kind must be a string");
    const std::string kind = k.get<std::string>();
    if (kind == "semigroup") return semigroup_from_json(j, dir);
    if (kind == "groupoid") return groupoid_from_json(j, dir);
    if (kind == "ring") return ring_from_json(j, dir);
    if (kind == "graded_ring") return graded_from_json(j, dir);
    throw ParseError("unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

Structure load_structure(const fs::path& path) {
  return structure_from_json(read_json_file(path), path.parent_path());
}

GradedRing build_construction(const json& spec, const fs::path& dir) {
  const json& c = field(spec, "construct");
  if (!c.is_string()) throw ParseError("construct must be a string");
  const std::string what = c.get<std::string>();
  const FiniteRing a = ring_from_json(field(spec, "A"), dir);
  if (what == "semigroup_ring") return semigroup_ring(a, semigroup_from_json(field(spec, "S"), dir));
  if (what == "matrix_bn") {
    const std::size_t n = as_size(field(spec, "n"), "n");
    if (n == 0 || n > 7) throw ParseError("matrix_bn needs 1 <= n <= 7");
    return matrix_bn_grading(a, n);
  }
  if (what == "good_grading") {
    const FiniteSemigroup base = semigroup_from_json(field(spec, "S"), dir);
    const json& deg = field(spec, "deg");
    if (!deg.is_array()) throw ParseError("deg must be an array of rows");
    std::vector<std::vector<Element>> rows;
    for (const auto& row : deg) rows.push_back(as_elements(row, "deg"));
    return good_grading(a, base, validate_degree_map(base, rows));
  }
  if (what == "groupoid_ring") return groupoid_ring(a, groupoid_from_json(field(spec, "G"), dir));
  if (what == "zero_product") {
    const json& b = field(spec, "base");
    if (looks_like_groupoid(resolve(b, dir).first)) {
      return zero_product_grading(a.additive(), GradingBase(groupoid_from_json(b, dir)));
    }
    return zero_product_grading(a.additive(), GradingBase(semigroup_from_json(b, dir)));
  }
  throw ParseError("unknown construction '" + what + "'");
}

}  // namespace grl
