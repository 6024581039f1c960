#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sdl/algebra.hpp"
#include "sdl/category.hpp"
#include "sdl/cofunctor.hpp"
#include "sdl/morphism.hpp"

namespace sdl {

using Json = nlohmann::json;

/// Throws Error{Input, "SchemaError"} on unreadable or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);
/// The "kind" field. Throws Error{Input, "SchemaError"}.
std::string file_kind(const Json& j);

/// Canonical text: sorted keys one per line, scalar arrays inline, one line per
/// matrix row or array-of-objects entry, trailing newline.
std::string write_canonical(const Json& j);
void write_file(const std::filesystem::path& path, const std::string& text);

BiUnaryAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const BiUnaryAlgebra& S);
FinCat category_from_json(const Json& j);
Json category_to_json(const FinCat& C);

AlgebraPtr load_algebra(const std::filesystem::path& path);
CatPtr load_category(const std::filesystem::path& path);

/// Endpoint paths are resolved relative to `base_dir`.
SemigroupMorphism morphism_from_json(const Json& j, const std::filesystem::path& base_dir);
Json morphism_to_json(const SemigroupMorphism& f, const std::string& source_path,
                      const std::string& target_path);
Cofunctor cofunctor_from_json(const Json& j, const std::filesystem::path& base_dir);
Json cofunctor_to_json(const Cofunctor& F, const std::string& source_path,
                       const std::string& target_path);

}  // namespace sdl
