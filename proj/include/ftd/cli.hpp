#pragma once

// ftdesign command line: construct, verify, catalog, search, recipe-check.
// Arguments after the command are key=value pairs; unknown keys are errors.

#include "catalog.hpp"

#include <CLI11.hpp>

#include <chrono>

namespace ftd::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using KeyValues = std::map<std::string, std::string>;

inline KeyValues parse_key_values(const std::vector<std::string>& args, const std::vector<std::string>& allowed,
                                  const std::string& where) {
  KeyValues kv;
  for (const auto& a : args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError(where + ": expected key=value, got '" + a + "'");
    const std::string key = a.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      std::string msg = where + ": unknown key '" + key + "' (allowed:";
      for (const auto& k : allowed) msg += " " + k;
      throw UsageError(msg + ")");
    }
    if (!kv.emplace(key, a.substr(eq + 1)).second) throw UsageError(where + ": key '" + key + "' given twice");
  }
  return kv;
}

inline std::uint64_t need_uint(const KeyValues& kv, const std::string& key, const std::string& where) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw UsageError(where + ": missing " + key + "=");
  try {
    return parse_uint(it->second, key);
  } catch (const std::invalid_argument& e) {
    throw UsageError(where + ": " + e.what());
  }
}

inline unsigned need_small(const KeyValues& kv, const std::string& key, const std::string& where) {
  const auto x = need_uint(kv, key, where);
  if (x > 1'000'000) throw UsageError(where + ": " + key + " is too large");
  return static_cast<unsigned>(x);
}

struct FamilySpec {
  std::vector<std::string> keys;
  std::function<IncidenceDesign(const KeyValues&)> build;
};

inline const std::map<std::string, FamilySpec>& families() {
  static const std::map<std::string, FamilySpec> table = [] {
    std::map<std::string, FamilySpec> t;
    auto u = [](const KeyValues& kv, const char* k) { return need_small(kv, k, "construct"); };
    auto q = [](const KeyValues& kv) { return need_uint(kv, "q", "construct"); };
    t["point-hyperplane"] = {{"n", "q"}, [=](const KeyValues& kv) { return build_point_hyperplane(u(kv, "n"), q(kv)); }};
    t["projective-points"] = {{"n", "q"},
                              [=](const KeyValues& kv) { return build_projective_points_design(u(kv, "n"), q(kv)); }};
    t["wbs"] = {{"q"}, [=](const KeyValues& kv) { return build_wbs(q(kv)); }};
    t["hermitian-unital"] = {{"q"}, [=](const KeyValues& kv) { return build_hermitian_unital(q(kv)); }};
    t["unitary"] = {{"q"}, [=](const KeyValues& kv) { return build_unitary_design(q(kv)); }};
    t["suzuki"] = {{"q"}, [=](const KeyValues& kv) { return build_suzuki_design(q(kv)); }};
    t["affine-subspace"] = {{"p", "d", "n", "u", "placement"}, [=](const KeyValues& kv) {
                              const auto pl = kv.count("placement") ? kv.at("placement") : "a";
                              if (pl != "a" && pl != "b") throw UsageError("construct: placement must be a or b");
                              return build_affine_subspace_design(u(kv, "p"), u(kv, "d"), u(kv, "n"), u(kv, "u"),
                                                                  pl == "a" ? Placement::a : Placement::b);
                            }};
    t["coset-union"] = {{"p", "d", "n", "u", "omega", "case"}, [=](const KeyValues& kv) {
                          const auto c = kv.count("case") ? kv.at("case") : "i";
                          if (c != "i" && c != "ii") throw UsageError("construct: case must be i or ii");
                          return build_coset_union_design(u(kv, "p"), u(kv, "d"), u(kv, "n"), u(kv, "u"),
                                                          u(kv, "omega"), c == "i" ? CosetCase::i : CosetCase::ii);
                        }};
    t["tensor"] = {{}, [](const KeyValues&) { return build_tensor_design(); }};
    t["tensor-variant"] = {{"h"}, [=](const KeyValues& kv) { return build_semilinear_tensor_variant(u(kv, "h")); }};
    t["desarguesian-affine"] = {{"n", "q"},
                                [=](const KeyValues& kv) { return build_desarguesian_affine(u(kv, "n"), q(kv)); }};
    t["affine-complement"] = {{"q"}, [=](const KeyValues& kv) { return build_affine_plane_complement(q(kv)); }};
    t["parallel-pairs"] = {{"p"}, [=](const KeyValues& kv) { return build_parallel_pairs(u(kv, "p")); }};
    t["paley"] = {{"p", "d", "i", "theta", "y"}, [=](const KeyValues& kv) {
                    PaleyParams pp{u(kv, "p"), u(kv, "d"), need_uint(kv, "i", "construct"),
                                   need_uint(kv, "theta", "construct"), need_uint(kv, "y", "construct")};
                    auto res = paley_design(pp);
                    if (!res.design) throw ConstructionError(res.report);
                    return std::move(*res.design);
                  }};
    return t;
  }();
  return table;
}

inline std::filesystem::path resolve(const std::filesystem::path& data_dir, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : data_dir / path;
}

/// `v b r k lambda coprime=.. flag=.. prim=..`; returns whether all flags hold.
inline bool summary_row(const IncidenceDesign& d, std::ostream& out) {
  const auto p = compute_params(d);
  if (!p.is_2design) {
    out << "not a 2-design: " << p.defect << '\n';
    return false;
  }
  const bool flag = d.has_group() && is_flag_transitive(d);
  const bool prim = d.has_group() && is_primitive(d.group());
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << p.v << ' ' << p.b << ' ' << p.r << ' ' << p.k << ' ' << p.lambda << " coprime=" << yn(p.coprime)
      << " flag=" << yn(flag) << " prim=" << yn(prim) << '\n';
  return p.coprime && flag && prim;
}

inline int cmd_construct(const std::string& family, const std::vector<std::string>& args,
                         const std::filesystem::path& data_dir, std::ostream& out) {
  const auto& table = families();
  if (family == "recipe") {
    const auto kv = parse_key_values(args, {"file", "out"}, "construct recipe");
    if (!kv.count("file")) throw UsageError("construct recipe: missing file=");
    const auto d = load_recipe(resolve(data_dir, kv.at("file")));
    if (kv.count("out")) write_design(d, resolve(data_dir, kv.at("out")));
    return summary_row(d, out) ? 0 : 1;
  }
  const auto it = table.find(family);
  if (it == table.end()) {
    std::string msg = "construct: unknown family '" + family + "' (known: recipe";
    for (const auto& [name, spec] : table) msg += " " + name;
    throw UsageError(msg + ")");
  }
  auto keys = it->second.keys;
  keys.push_back("out");
  const auto kv = parse_key_values(args, keys, "construct " + family);
  const auto d = it->second.build(kv);
  if (kv.count("out")) write_design(d, resolve(data_dir, kv.at("out")));
  return summary_row(d, out) ? 0 : 1;
}

inline int cmd_verify(const std::vector<std::string>& args, const std::filesystem::path& data_dir, std::ostream& out) {
  const auto kv = parse_key_values(args, {"file"}, "verify");
  if (!kv.count("file")) throw UsageError("verify: missing file=");
  const auto rep = verify_design(read_design_file(resolve(data_dir, kv.at("file"))));
  out << rep.to_string();
  out << (rep.ok() ? "verify: all claims hold\n" : "verify: some claims fail\n");
  return rep.ok() ? 0 : 1;
}

inline int cmd_catalog(const std::vector<std::string>& args, const std::filesystem::path& data_dir, std::ostream& out,
                       std::ostream& diag) {
  const auto kv = parse_key_values(args, {"threads"}, "catalog");
  const unsigned threads = kv.count("threads") ? need_small(kv, "threads", "catalog") : 0;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_catalog(catalog_manifest(data_dir), threads);
  std::size_t pass = 0;
  for (const auto& row : rows) {
    out << row.line() << '\n';
    pass += row.ok();
  }
  out << "catalog: " << rows.size() << " designs, " << pass << " pass\n";
  diag << "catalog: "
       << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return pass == rows.size() ? 0 : 1;
}

inline int cmd_search(const std::vector<std::string>& args, const std::filesystem::path& data_dir, std::ostream& out) {
  const auto kv = parse_key_values(args, {"p", "d", "k_max", "out_dir"}, "search");
  const unsigned p = need_small(kv, "p", "search");
  const unsigned d = need_small(kv, "d", "search");
  const std::uint64_t k_max = kv.count("k_max") ? need_uint(kv, "k_max", "search") : 12;
  const auto rep = search_flag_transitive(p, d, k_max);
  for (const auto& h : rep.hits) out << h.line() << '\n';
  out << "search: " << rep.hits.size() << " hits, " << rep.candidates << " candidates"
      << (rep.oversized ? ", " + std::to_string(rep.oversized) + " oversized skipped" : "")
      << (rep.truncated ? ", truncated by work budget" : "") << '\n';
  if (kv.count("out_dir")) {
    const auto dir = resolve(data_dir, kv.at("out_dir"));
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < rep.hits.size(); ++i)
      write_design(rep.hits[i].design, dir / ("hit" + std::to_string(i) + ".design"));
  }
  return 0;
}

inline int cmd_recipe_check(const std::vector<std::string>& args, const std::filesystem::path& data_dir,
                            std::ostream& out) {
  const auto kv = parse_key_values(args, {"file"}, "recipe-check");
  std::vector<std::filesystem::path> files;
  if (kv.count("file"))
    files.push_back(resolve(data_dir, kv.at("file")));
  else
    files = recipe_files(data_dir / "recipes");
  bool all = true;
  for (const auto& f : files) {
    try {
      const auto d = load_recipe(f);
      const auto order = d.group().order();
      out << "PASS " << f.filename().string() << ' ' << compute_params(d).tuple() << " |G|=" << order
          << " |G_x|=" << order / d.v() << " |G_B|=" << order / d.b() << '\n';
    } catch (const RecipeError& e) {
      all = false;
      out << "FAIL " << f.filename().string() << ' ' << e.what() << '\n';
    } catch (const std::exception& e) {
      all = false;
      out << "FAIL " << f.filename().string() << " parse: " << e.what() << '\n';
    }
  }
  return all ? 0 : 1;
}

/// Exit status: 0 when every printed check passed, 1 when a check failed
/// or a construction was rejected, 2 on usage errors.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag-transitive 2-designs with gcd(r,lambda)=1", "ftdesign"};
  std::string data_dir = "data";
  app.add_option("--data-dir", data_dir, "root for relative design and recipe paths");
  app.require_subcommand(1);

  std::string family;
  std::vector<std::string> rest;
  auto* construct = app.add_subcommand("construct", "build a family member and print its summary row");
  construct->add_option("family", family, "family name")->required();
  construct->add_option("args", rest, "key=value parameters, out=path");
  auto* verify = app.add_subcommand("verify", "recompute every claim of a design file (file=path)");
  verify->add_option("args", rest, "key=value");
  auto* catalog = app.add_subcommand("catalog", "build and check every catalog design");
  catalog->add_option("args", rest, "threads=N");
  auto* search = app.add_subcommand("search", "semilinear search (p= d= k_max= out_dir=)");
  search->add_option("args", rest, "key=value");
  auto* recipe = app.add_subcommand("recipe-check", "validate recipe files (file= or all bundled)");
  recipe->add_option("args", rest, "key=value");

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(family, rest, data_dir, out);
    if (verify->parsed()) return cmd_verify(rest, data_dir, out);
    if (catalog->parsed()) return cmd_catalog(rest, data_dir, out, err);
    if (search->parsed()) return cmd_search(rest, data_dir, out);
    if (recipe->parsed()) return cmd_recipe_check(rest, data_dir, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ftd::cli
