#pragma once

// Recipe files: permutation generators plus a base block for designs whose
// groups are supplied as data. Every stated claim is recomputed.
//
//   # comment
//   name=m22-on-22
//   cite=sporadic-07
//   v=22
//   expect=22,77,21,6,5
//   expect_group_order=443520            (optional)
//   expect_point_stabilizer_order=20160  (optional)
//   expect_block_stabilizer_order=5760   (optional)
//   gen=[...]                            (one or more)
//   base_block=[...]

#include "design_io.hpp"

#include <set>

namespace ftd {

class RecipeError : public std::runtime_error {
 public:
  RecipeError(std::string claim, const std::string& what)
      : std::runtime_error(claim + ": " + what), claim_(std::move(claim)) {}
  const std::string& claim() const { return claim_; }

 private:
  std::string claim_;
};

struct Recipe {
  std::string name, cite;
  std::size_t v = 0;
  std::vector<std::uint64_t> expect;
  std::optional<std::uint64_t> group_order, point_stabilizer_order, block_stabilizer_order;
  std::vector<std::vector<Point>> generators;
  Block base_block;
};

inline Recipe parse_recipe(std::string_view text) {
  Recipe r;
  bool have_v = false, have_base = false;
  std::set<std::string> seen;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string line = trim(text.substr(start, nl - start));
    start = nl + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    try {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("expected key=value");
      const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
      if (key != "gen" && !seen.insert(key).second) throw std::invalid_argument("duplicate key " + key);
      if (key == "name") {
        r.name = value;
      } else if (key == "cite") {
        r.cite = value;
      } else if (key == "v") {
        r.v = parse_uint(value, "v");
        have_v = true;
      } else if (key == "expect") {
        r.expect = parse_tuple(value, 5, "expect");
      } else if (key == "expect_group_order") {
        r.group_order = parse_uint(value, key);
      } else if (key == "expect_point_stabilizer_order") {
        r.point_stabilizer_order = parse_uint(value, key);
      } else if (key == "expect_block_stabilizer_order") {
        r.block_stabilizer_order = parse_uint(value, key);
      } else if (key == "gen") {
        r.generators.push_back(parse_index_list(value));
      } else if (key == "base_block") {
        r.base_block = parse_index_list(value);
        have_base = true;
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw FormatError(lineno, e.what());
    }
  }
  if (r.name.empty()) throw FormatError(lineno, "missing name=");
  if (!have_v) throw FormatError(lineno, "missing v=");
  if (r.expect.empty()) throw FormatError(lineno, "missing expect=");
  if (r.generators.empty()) throw FormatError(lineno, "missing gen=");
  if (!have_base) throw FormatError(lineno, "missing base_block=");
  return r;
}

inline Recipe read_recipe_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_recipe(ss.str());
}

/// Builds the orbit design and checks parameters, stated orders,
/// coprimality, flag-transitivity and primitivity. Throws RecipeError
/// naming the first failed claim.
inline IncidenceDesign load_recipe(const Recipe& r) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    if (r.generators[i].size() != r.v)
      throw RecipeError("generators", "gen " + std::to_string(i) + " has length " +
                                          std::to_string(r.generators[i].size()) + ", expected " +
                                          std::to_string(r.v));
    try {
      gens.emplace_back(r.generators[i]);
    } catch (const std::invalid_argument& e) {
      throw RecipeError("generators", "gen " + std::to_string(i) + ": " + e.what());
    }
  }
  for (Point x : r.base_block)
    if (x >= r.v) throw RecipeError("base_block", "point " + std::to_string(x) + " out of range");
  const PermGroup g(r.v, std::move(gens));
  const auto order = g.order();
  if (r.group_order && order != *r.group_order)
    throw RecipeError("group-order", "computed " + std::to_string(order) + ", expected " +
                                         std::to_string(*r.group_order));

  IncidenceDesign d = orbit_design(r.v, g, r.base_block);
  const auto p = compute_params(d);
  const auto& e = r.expect;
  if (!p.is_2design) throw RecipeError("2-design", p.defect);
  if (!(p.v == e[0] && p.b == e[1] && p.r == e[2] && p.k == e[3] && p.lambda == e[4]))
    throw RecipeError("params", "computed " + p.tuple() + ", expected " + make_params(e[0], e[1], e[2], e[3], e[4]).tuple());
  if (!p.coprime) throw RecipeError("coprime", "gcd(r,lambda)=" + std::to_string(std::gcd(p.r, p.lambda)));

  if (!is_transitive(g)) throw RecipeError("point-transitive", "group is intransitive");
  if (r.point_stabilizer_order && order / r.v != *r.point_stabilizer_order)
    throw RecipeError("point-stabilizer-order", "computed " + std::to_string(order / r.v) + ", expected " +
                                                    std::to_string(*r.point_stabilizer_order));
  if (r.block_stabilizer_order && order / d.b() != *r.block_stabilizer_order)
    throw RecipeError("block-stabilizer-order", "computed " + std::to_string(order / d.b()) + ", expected " +
                                                    std::to_string(*r.block_stabilizer_order));
  if (!is_flag_transitive(d)) throw RecipeError("flag-transitive", "more than one flag orbit");
  if (!is_primitive(g)) throw RecipeError("primitive", "group preserves a nontrivial block system");

  d.set_meta("family", "recipe:" + r.name);
  if (!r.cite.empty()) d.set_meta("cite", r.cite);
  d.set_meta("expect", p.tuple());
  d.set_meta("claims", "2-design,coprime,flag-transitive,primitive");
  d.set_meta("group_order", std::to_string(order));
  return d;
}

inline IncidenceDesign load_recipe(const std::filesystem::path& path) { return load_recipe(read_recipe_file(path)); }

/// Recipe files in a directory, sorted by file name.
inline std::vector<std::filesystem::path> recipe_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".recipe") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ftd
