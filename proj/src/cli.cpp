#include "sdl/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "sdl/duality.hpp"
#include "sdl/io.hpp"
#include "sdl/zoo.hpp"

namespace sdl {
namespace {

namespace fs = std::filesystem;

int exit_code(ErrorKind k) {
  return (k == ErrorKind::Input || k == ErrorKind::Size) ? 2 : 1;
}

int report_exit(const Report& r, std::ostream& out) {
  out << r.str();
  return r.ok() ? 0 : 1;
}

int cmd_check(const fs::path& file, std::ostream& out) {
  const Json j = read_json_file(file);
  const std::string kind = file_kind(j);
  if (kind == "semigroup") {
    const auto S = algebra_from_json(j);
    out << "PASS valid kind=semigroup elements=" << S.size() << "\n";
  } else if (kind == "category") {
    const auto C = category_from_json(j);
    out << "PASS valid kind=category objects=" << C.num_objects() << " arrows=" << C.num_arrows()
        << "\n";
  } else if (kind == "morphism") {
    morphism_from_json(j, file.parent_path());
    out << "PASS valid kind=morphism\n";
  } else if (kind == "cofunctor") {
    cofunctor_from_json(j, file.parent_path());
    out << "PASS valid kind=cofunctor\n";
  } else {
    fail(ErrorKind::Input, "SchemaError", "unknown kind \"" + kind + "\"");
  }
  return 0;
}

int cmd_classify(const fs::path& file, std::ostream& out) {
  const Json j = read_json_file(file);
  if (file_kind(j) == "category") {
    const FinCat C = category_from_json(j);
    const GroupoidCheck g = is_groupoid(C);
    Report r;
    r.info("objects", std::to_string(C.num_objects()));
    r.info("arrows", std::to_string(C.num_arrows()));
    r.info("groupoid", g.inverse ? "true" : "false witness=" + C.arrow_name(*g.witness));
    return report_exit(r, out);
  }
  const BiUnaryAlgebra S = algebra_from_json(j);
  return report_exit(classification_report(S, classify(S)), out);
}

int cmd_germs(const fs::path& file, const fs::path& output, std::ostream& out) {
  const GermCategory G = germ_category(load_algebra(file));
  write_file(output, write_canonical(category_to_json(*G.category)));
  out << "PASS germ_category objects=" << G.category->num_objects()
      << " arrows=" << G.category->num_arrows() << "\n";
  return 0;
}

int cmd_slices(const fs::path& file, bool bislices, std::optional<long> max_size,
               const fs::path& output, std::ostream& out) {
  const SliceSemigroup SC = slice_semigroup(load_category(file), bislices, max_size);
  write_file(output, write_canonical(algebra_to_json(*SC.algebra)));
  out << "PASS " << (bislices ? "bislice" : "slice") << "_semigroup elements=" << SC.algebra->size()
      << "\n";
  return 0;
}

int cmd_roundtrip(const fs::path& file, std::ostream& out) {
  const Json j = read_json_file(file);
  Report r;
  if (file_kind(j) == "category") {
    const auto C = std::make_shared<const FinCat>(category_from_json(j));
    const Counit E = counit_epsilon(C);
    const Verdict iso = is_isomorphism(E.epsilon);
    r.check(iso.pass, "epsilon_iso", iso.witness);
    r.check(iso_categories(*E.germs.category, *C).has_value(), "germs_of_slices_isomorphic",
            "no isomorphism");
    return report_exit(r, out);
  }
  const auto S = std::make_shared<const BiUnaryAlgebra>(algebra_from_json(j));
  const AlgebraClassification c = classify(*S);
  const UnitEta U = unit_eta(S);
  std::vector<int> seen(U.slices.algebra->size(), 0);
  bool injective = true;
  for (int v : U.eta.map) injective = injective && !seen[v]++;
  const bool iso = injective && U.eta.map.size() == seen.size();
  r.check(injective, "eta_injective", "collision");
  r.info("eta_iso", iso ? "true" : "false");
  r.check(iso == c.boolean_restriction.value, "eta_iso_iff_boolean", "mismatch");
  if (c.boolean_birestriction.value) {
    r.merge(verify_birestriction_equivalence(S), "bd_equivalence");
  } else {
    r.info("bd_equivalence", "skipped (not boolean birestriction)");
  }
  return report_exit(r, out);
}

Report adjunction_for(const fs::path& file) {
  const Json j = read_json_file(file);
  if (file_kind(j) == "category") {
    return verify_adjunction(std::make_shared<const FinCat>(category_from_json(j)));
  }
  return verify_adjunction(std::make_shared<const BiUnaryAlgebra>(algebra_from_json(j)));
}

int cmd_adjunction_corpus(const fs::path& dir, std::ostream& out) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const int n = static_cast<int>(files.size());
  std::vector<std::string> texts(n);
  std::vector<int> codes(n, 0);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    std::ostringstream buf;
    try {
      const Json j = read_json_file(files[i]);
      const std::string kind = file_kind(j);
      if (kind != "semigroup" && kind != "category") {
        buf << "INFO skipped=" << kind << "\n";
      } else {
        codes[i] = report_exit(adjunction_for(files[i]), buf);
      }
    } catch (const Error& e) {
      buf << "ERROR " << e.what() << "\n";
      codes[i] = exit_code(e.kind());
    }
    texts[i] = buf.str();
  }
  int code = 0;
  for (int i = 0; i < n; ++i) {
    out << "== " << files[i].filename().string() << "\n" << texts[i];
    code = std::max(code, codes[i]);
  }
  return code;
}

std::vector<int> parse_map(const std::string& text) {
  if (fs::exists(text)) {
    const Json j = read_json_file(text);
    const Json& list = j.is_object() ? j.at("map") : j;
    return list.get<std::vector<int>>();
  }
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::Input, "SchemaError", "bad map entry \"" + item + "\"");
    }
  }
  return out;
}

int cmd_morphism_check(const fs::path& s, const fs::path& t, const std::string& map, int type,
                       std::ostream& out) {
  const SemigroupMorphism f = make_morphism(load_algebra(s), load_algebra(t), parse_map(map));
  const Verdict v = check_morphism(f, type);
  Report r;
  r.check(v.pass, "type" + std::to_string(type), v.witness);
  return report_exit(r, out);
}

int cmd_translate(const fs::path& file, std::ostream& out) {
  const Cofunctor F = cofunctor_from_json(read_json_file(file), file.parent_path());
  const CofunctorFlags flags = check_cofunctor(F);
  Report r;
  auto show = [&](const char* name, const Flag& f) {
    std::string v = f.value ? "true" : "false";
    if (!f.value && f.witness) {
      v += " witness=" + f.witness->rule;
      for (int a : f.witness->args) v += " " + std::to_string(a);
    }
    r.info(name, v);
  };
  show("injective_on_arrows", flags.injective_on_arrows);
  show("surjective_on_arrows", flags.surjective_on_arrows);
  show("bijective_on_arrows", flags.bijective_on_arrows);
  show("action_injective", flags.action_injective);
  if (flags.bijective_on_arrows.value) {
    const CoveringFunctor g = cofunctor_to_covering(F);
    r.info("covering_f0", Json(g.f0).dump());
    r.info("covering_f1", Json(g.f1).dump());
    r.check(same_cofunctor(covering_to_cofunctor(g), F), "covering_roundtrip", "tables differ");
  }
  const SemigroupMorphism f = cofunctor_to_morphism(F);
  r.info("pushforward", Json(f.map).dump());
  r.merge(pushforward_report(F, f));
  return report_exit(r, out);
}

int cmd_zoo(const std::string& name, const std::vector<int>& args, const fs::path& output,
            std::ostream& out) {
  auto arg = [&]() {
    if (args.size() != 1) fail(ErrorKind::Input, "BadArgument", name + " takes one integer argument");
    return args[0];
  };
  Json j;
  if (name == "pt") {
    j = algebra_to_json(gen_pt(arg()));
  } else if (name == "i") {
    j = algebra_to_json(gen_i(arg()));
  } else if (name == "triangular") {
    j = algebra_to_json(gen_triangular(arg()));
  } else if (name == "projections") {
    j = algebra_to_json(gen_projections(arg()));
  } else if (name == "pair-groupoid") {
    j = category_to_json(gen_pair_groupoid(arg()));
  } else if (name == "free-arrow") {
    j = category_to_json(gen_free_arrow());
  } else if (name == "discrete") {
    j = category_to_json(gen_discrete(arg()));
  } else {
    fail(ErrorKind::Input, "BadArgument", "unknown zoo instance \"" + name + "\"");
  }
  write_file(output, write_canonical(j));
  out << "PASS wrote " << output.string() << "\n";
  return 0;
}

// Exploratory: (2,1)-subalgebras of PT_d generated by at most two elements,
// looking for one with local units whose cosupport candidate fails.
int cmd_search(int max_order, int max_degree, double budget, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  long examined = 0;
  bool out_of_time = false;
  for (int d = 1; d <= max_degree && !out_of_time; ++d) {
    const BiUnaryAlgebra P = gen_pt(d);
    std::set<std::vector<int>> seen;
    for (int a = 0; a < P.size() && !out_of_time; ++a) {
      for (int b = a; b < P.size(); ++b) {
        std::vector<unsigned char> in(P.size(), 0);
        std::vector<int> elems = {a, b};
        in[a] = in[b] = 1;
        if (a == b) elems.pop_back();
        bool too_big = false;
        for (std::size_t i = 0; i < elems.size() && !too_big; ++i) {
          auto add = [&](int v) {
            if (!in[v]) {
              in[v] = 1;
              elems.push_back(v);
            }
          };
          add(P.star(elems[i]));
          for (std::size_t k = 0; k <= i; ++k) {
            add(P.mul(elems[i], elems[k]));
            add(P.mul(elems[k], elems[i]));
          }
          too_big = static_cast<int>(elems.size()) > max_order;
        }
        if (too_big) continue;
        std::sort(elems.begin(), elems.end());
        if (!seen.insert(elems).second) continue;
        ++examined;
        const Subalgebra sub = induced_subalgebra(P.with_plus(std::nullopt), elems);
        try {
          const CosupportInference inf = infer_cosupport(sub.algebra);
          if (!inf.plus) {
            out << "INFO found=degree " << d << " elements " << Json(elems).dump()
                << " failure=" << describe(sub.algebra, *inf.failure) << "\n";
            out << write_canonical(algebra_to_json(sub.algebra));
            out << "INFO examined=" << examined << "\n";
            return 0;
          }
        } catch (const Error&) {
          // No local units; outside the question.
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (elapsed.count() > budget) {
          out_of_time = true;
          break;
        }
      }
    }
  }
  out << "INFO examined=" << examined << "\n";
  out << "INFO found=none" << (out_of_time ? " (budget exhausted)" : "") << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite restriction semigroups, ample categories and their duality"};
  app.require_subcommand(1);

  std::string file, output, s_file, t_file, map, corpus, zoo_name;
  bool bislices = false;
  long max_size_arg = 0;
  int type = 1, max_order = 8, max_degree = 3;
  double budget = 60;
  std::vector<int> zoo_args;

  auto* check = app.add_subcommand("check", "validate a JSON instance file");
  check->add_option("FILE", file)->required();
  auto* cls = app.add_subcommand("classify", "classify a semigroup (or describe a category)");
  cls->add_option("FILE", file)->required();
  auto* germs = app.add_subcommand("germs", "write the category of germs of a semigroup");
  germs->add_option("FILE", file)->required();
  germs->add_option("-o", output)->required();
  auto* slices = app.add_subcommand("slices", "write the slice semigroup of a category");
  slices->add_option("FILE", file)->required();
  slices->add_flag("--bislices", bislices);
  slices->add_option("--max-size", max_size_arg);
  slices->add_option("-o", output)->required();
  auto* roundtrip = app.add_subcommand("roundtrip", "unit and equivalence checks for one instance");
  roundtrip->add_option("FILE", file)->required();
  auto* adj = app.add_subcommand("adjunction", "verify the adjunction on a file or a directory");
  adj->add_option("FILE", file);
  adj->add_option("--corpus", corpus);
  auto* morph = app.add_subcommand("morphism", "semigroup morphism commands");
  auto* mcheck = morph->add_subcommand("check", "check a morphism type");
  mcheck->add_option("S", s_file)->required();
  mcheck->add_option("T", t_file)->required();
  mcheck->add_option("MAP", map)->required();
  mcheck->add_option("--type", type)->check(CLI::Range(1, 4));
  morph->require_subcommand(1);
  auto* translate = app.add_subcommand("translate", "cofunctor flags, covering functor, pushforward");
  translate->add_option("COFUNCTOR", file)->required();
  auto* zoo = app.add_subcommand("zoo", "write a generated instance");
  zoo->add_option("NAME", zoo_name)->required();
  zoo->add_option("ARGS", zoo_args);
  zoo->add_option("-o", output)->required();
  auto* search = app.add_subcommand("search-no-cosupport", "exploratory cosupport search");
  search->add_option("--max-order", max_order);
  search->add_option("--max-degree", max_degree)->check(CLI::Range(1, 4));
  search->add_option("--budget", budget, "seconds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*check) return cmd_check(file, out);
    if (*cls) return cmd_classify(file, out);
    if (*germs) return cmd_germs(file, output, out);
    if (*slices) {
      std::optional<long> max_size;
      if (max_size_arg > 0) max_size = max_size_arg;
      return cmd_slices(file, bislices, max_size, output, out);
    }
    if (*roundtrip) return cmd_roundtrip(file, out);
    if (*adj) {
      if (!corpus.empty()) return cmd_adjunction_corpus(corpus, out);
      if (file.empty()) {
        err << "error: adjunction needs FILE or --corpus DIR\n";
        return 2;
      }
      return report_exit(adjunction_for(file), out);
    }
    if (*mcheck) return cmd_morphism_check(s_file, t_file, map, type, out);
    if (*translate) return cmd_translate(file, out);
    if (*zoo) return cmd_zoo(zoo_name, zoo_args, output, out);
    if (*search) return cmd_search(max_order, max_degree, budget, out);
  } catch (const Error& e) {
    const int code = exit_code(e.kind());
    if (code == 1) {
      out << "FAIL " << e.code() << " witness=" << e.what() << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace sdl
