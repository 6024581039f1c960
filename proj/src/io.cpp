#include "sdl/io.hpp"

#include <fstream>
#include <sstream>

namespace sdl {
namespace {

[[noreturn]] void schema(const std::string& msg) { fail(ErrorKind::Input, "SchemaError", msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) schema(what + " must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& v, const std::string& what) {
  if (!v.is_array()) schema(what + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(as_int(x, what));
  return out;
}

std::vector<std::string> name_list(const Json& v, const std::string& what) {
  if (!v.is_array()) schema(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) schema(what + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<int> matrix(const Json& v, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!v.is_array() || v.size() != rows) schema(what + " must have " + std::to_string(rows) + " rows");
  std::vector<int> out;
  for (const auto& row : v) {
    auto r = int_list(row, what);
    if (r.size() != cols) schema(what + " rows must have " + std::to_string(cols) + " entries");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

Json rows(const std::vector<int>& flat, std::size_t cols) {
  Json out = Json::array();
  if (cols == 0) return out;
  for (std::size_t i = 0; i < flat.size(); i += cols) {
    out.push_back(std::vector<int>(flat.begin() + i, flat.begin() + i + cols));
  }
  return out;
}

void expect_kind(const Json& j, const std::string& kind) {
  if (file_kind(j) != kind) schema("expected kind \"" + kind + "\"");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema(e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Input, "FileNotFound", path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string file_kind(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) schema("kind must be a string");
  return k.get<std::string>();
}

std::string write_canonical(const Json& j) {
  if (!j.is_object()) return j.dump() + "\n";
  std::ostringstream out;
  out << "{\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out << "  " << Json(it.key()).dump() << ": ";
    const Json& v = it.value();
    const bool nested = v.is_array() && !v.empty() && (v.front().is_array() || v.front().is_object());
    if (nested) {
      out << "[\n";
      for (std::size_t r = 0; r < v.size(); ++r) {
        out << "    " << v[r].dump() << (r + 1 < v.size() ? ",\n" : "\n");
      }
      out << "  ]";
    } else {
      out << v.dump();
    }
    out << (i + 1 < j.size() ? ",\n" : "\n");
  }
  out << "}\n";
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Input, "CannotWrite", path.string());
  out << text;
}

BiUnaryAlgebra algebra_from_json(const Json& j) {
  expect_kind(j, "semigroup");
  AlgebraTables t;
  t.names = name_list(field(j, "elements"), "elements");
  const std::size_t n = t.names.size();
  t.mult = matrix(field(j, "mult"), n, n, "mult");
  t.star = int_list(field(j, "star"), "star");
  if (j.contains("plus")) t.plus = int_list(j.at("plus"), "plus");
  if (j.contains("zero")) t.zero = as_int(j.at("zero"), "zero");
  return make_algebra(std::move(t));
}

Json algebra_to_json(const BiUnaryAlgebra& S) {
  const auto& t = S.tables();
  Json j;
  j["kind"] = "semigroup";
  j["elements"] = t.names;
  j["mult"] = rows(t.mult, t.names.size());
  j["star"] = t.star;
  if (t.plus) j["plus"] = *t.plus;
  if (t.zero) j["zero"] = *t.zero;
  return j;
}

FinCat category_from_json(const Json& j) {
  expect_kind(j, "category");
  CategoryTables t;
  t.objects = name_list(field(j, "objects"), "objects");
  const Json& arrows = field(j, "arrows");
  if (!arrows.is_array()) schema("arrows must be an array");
  for (const auto& a : arrows) {
    const Json& name = field(a, "name");
    if (!name.is_string()) schema("arrow name must be a string");
    t.arrows.push_back(name.get<std::string>());
    t.dom.push_back(as_int(field(a, "dom"), "dom"));
    t.cod.push_back(as_int(field(a, "cod"), "cod"));
  }
  t.units = int_list(field(j, "units"), "units");
  t.comp = matrix(field(j, "comp"), t.arrows.size(), t.arrows.size(), "comp");
  return make_category(std::move(t));
}

Json category_to_json(const FinCat& C) {
  const auto& t = C.tables();
  Json j;
  j["kind"] = "category";
  j["objects"] = t.objects;
  Json arrows = Json::array();
  for (std::size_t a = 0; a < t.arrows.size(); ++a) {
    arrows.push_back({{"name", t.arrows[a]}, {"dom", t.dom[a]}, {"cod", t.cod[a]}});
  }
  j["arrows"] = arrows;
  j["units"] = t.units;
  j["comp"] = rows(t.comp, t.arrows.size());
  return j;
}

AlgebraPtr load_algebra(const std::filesystem::path& path) {
  return std::make_shared<const BiUnaryAlgebra>(algebra_from_json(read_json_file(path)));
}

CatPtr load_category(const std::filesystem::path& path) {
  return std::make_shared<const FinCat>(category_from_json(read_json_file(path)));
}

namespace {

std::filesystem::path resolve(const Json& j, const char* key, const std::filesystem::path& base) {
  const Json& v = field(j, key);
  if (!v.is_string()) schema(std::string(key) + " must be a path string");
  std::filesystem::path p = v.get<std::string>();
  return p.is_absolute() ? p : base / p;
}

}  // namespace

SemigroupMorphism morphism_from_json(const Json& j, const std::filesystem::path& base_dir) {
  expect_kind(j, "morphism");
  auto S = load_algebra(resolve(j, "source", base_dir));
  auto T = load_algebra(resolve(j, "target", base_dir));
  return make_morphism(std::move(S), std::move(T), int_list(field(j, "map"), "map"));
}

Json morphism_to_json(const SemigroupMorphism& f, const std::string& source_path,
                      const std::string& target_path) {
  Json j;
  j["kind"] = "morphism";
  j["source"] = source_path;
  j["target"] = target_path;
  j["map"] = f.map;
  return j;
}

Cofunctor cofunctor_from_json(const Json& j, const std::filesystem::path& base_dir) {
  expect_kind(j, "cofunctor");
  auto C = load_category(resolve(j, "source", base_dir));
  auto D = load_category(resolve(j, "target", base_dir));
  CofunctorTables t;
  t.anchor = int_list(field(j, "anchor"), "anchor");
  const std::size_t m = C->num_arrows();
  const std::size_t k = D->num_objects();
  t.mu = matrix(field(j, "mu"), m, k, "mu");
  t.rho1 = matrix(field(j, "rho1"), m, k, "rho1");
  return make_cofunctor(std::move(C), std::move(D), std::move(t));
}

Json cofunctor_to_json(const Cofunctor& F, const std::string& source_path,
                       const std::string& target_path) {
  const std::size_t k = F.target()->num_objects();
  Json j;
  j["kind"] = "cofunctor";
  j["source"] = source_path;
  j["target"] = target_path;
  j["anchor"] = F.tables().anchor;
  j["mu"] = rows(F.tables().mu, k);
  j["rho1"] = rows(F.tables().rho1, k);
  return j;
}

}  // namespace sdl
