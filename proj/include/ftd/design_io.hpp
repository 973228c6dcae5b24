#pragma once

// Canonical text format for designs and the file verifier.
//
//   v=<points>
//   family=... params=... field=... expect=v,b,r,k,lambda claims=a,b,...
//   group degree=<n>
//   perm: [i0,i1,...]
//   end
//   blocks
//   0 1 2
//   end

#include "design.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

namespace ftd {

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::uint64_t parse_uint(std::string_view s, const std::string& what) {
  const std::string t = trim(s);
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw std::invalid_argument(what + ": not a nonnegative integer: '" + t + "'");
  return x;
}

/// "[a,b,c]" or "a,b,c" or "a b c".
inline std::vector<Point> parse_index_list(std::string_view s) {
  std::string t = trim(s);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw std::invalid_argument("unterminated list");
    t = t.substr(1, t.size() - 2);
  }
  for (auto& c : t)
    if (c == ',') c = ' ';
  std::vector<Point> out;
  std::size_t i = 0;
  while (i < t.size()) {
    while (i < t.size() && t[i] == ' ') ++i;
    if (i == t.size()) break;
    std::size_t j = i;
    while (j < t.size() && t[j] != ' ') ++j;
    const auto x = parse_uint(std::string_view(t).substr(i, j - i), "list entry");
    if (x > UINT32_MAX) throw std::invalid_argument("list entry too large");
    out.push_back(static_cast<Point>(x));
    i = j;
  }
  return out;
}

inline std::vector<std::uint64_t> parse_tuple(std::string_view s, std::size_t n, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (Point x : parse_index_list(s)) out.push_back(x);
  if (out.size() != n) throw std::invalid_argument(what + ": expected " + std::to_string(n) + " values");
  return out;
}

inline const std::vector<std::string>& meta_key_order() {
  static const std::vector<std::string> order{"family", "cite", "params", "field", "expect", "claims"};
  return order;
}

inline std::string to_design_text(const IncidenceDesign& d) {
  std::ostringstream os;
  os << "v=" << d.v() << '\n';
  const auto& order = meta_key_order();
  for (const auto& key : order)
    if (auto it = d.meta().find(key); it != d.meta().end()) os << key << '=' << it->second << '\n';
  for (const auto& [key, value] : d.meta())
    if (std::find(order.begin(), order.end(), key) == order.end()) os << key << '=' << value << '\n';
  if (d.has_group()) {
    os << "group degree=" << d.group().degree() << '\n';
    for (const auto& g : d.group().generators()) os << "perm: " << g.to_string() << '\n';
    os << "end\n";
  }
  os << "blocks\n";
  for (const auto& blk : d.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? " " : "") << blk[i];
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

inline void write_design(const IncidenceDesign& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_design_text(d);
}

/// File contents before any semantic checks.
struct DesignFile {
  std::size_t v = 0;
  std::map<std::string, std::string> meta;
  std::optional<std::size_t> group_degree;
  std::vector<std::vector<Point>> generators;
  std::vector<Block> blocks;
};

inline DesignFile parse_design_text(std::string_view text) {
  DesignFile f;
  enum class Section { header, group, blocks, done } section = Section::header;
  bool have_v = false, have_blocks = false;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string line = trim(text.substr(start, nl - start));
    start = nl + 1;
    ++lineno;
    if (line.empty()) continue;
    try {
      switch (section) {
        case Section::header:
          if (line == "group" || line.rfind("group ", 0) == 0) {
            const auto eq = line.find("degree=");
            if (eq == std::string::npos) throw std::invalid_argument("group line needs degree=");
            f.group_degree = parse_uint(line.substr(eq + 7), "group degree");
            section = Section::group;
          } else if (line == "blocks") {
            section = Section::blocks;
            have_blocks = true;
          } else {
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("expected key=value");
            const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
            if (key == "v") {
              f.v = parse_uint(value, "v");
              have_v = true;
            } else {
              f.meta[key] = value;
            }
          }
          break;
        case Section::group:
          if (line == "end") {
            section = Section::header;
          } else if (line.rfind("perm:", 0) == 0) {
            f.generators.push_back(parse_index_list(line.substr(5)));
          } else {
            throw std::invalid_argument("expected perm: or end");
          }
          break;
        case Section::blocks:
          if (line == "end") {
            section = Section::done;
          } else {
            f.blocks.push_back(parse_index_list(line));
          }
          break;
        case Section::done:
          throw std::invalid_argument("content after blocks section");
      }
    } catch (const std::invalid_argument& e) {
      throw FormatError(lineno, e.what());
    }
  }
  if (!have_v) throw FormatError(lineno, "missing v=");
  if (!have_blocks || section != Section::done) throw FormatError(lineno, "missing or unterminated blocks section");
  return f;
}

inline DesignFile read_design_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_design_text(ss.str());
}

struct ClaimResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<ClaimResult> results;
  std::optional<DesignParams> params;

  bool ok() const {
    return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.ok; });
  }
  std::string to_string() const {
    std::ostringstream os;
    for (const auto& r : results) os << (r.ok ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": ") << r.detail << '\n';
    return os.str();
  }
};

inline std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto e = s.find(sep, start);
    if (e == std::string::npos) e = s.size();
    if (auto t = trim(std::string_view(s).substr(start, e - start)); !t.empty()) out.push_back(t);
    start = e + 1;
  }
  return out;
}

inline const std::vector<std::string>& known_claims() {
  static const std::vector<std::string> claims{"2-design", "coprime", "flag-transitive", "primitive",
                                               "2-transitive", "symmetric"};
  return claims;
}

/// Recomputes everything from the file contents and checks the file's own
/// claims (claims= list and expect= tuple) plus structural invariants.
inline VerifyReport verify_design(const DesignFile& f) {
  VerifyReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.results.push_back({std::move(name), ok, std::move(detail)});
  };

  std::optional<PermGroup> group;
  if (f.group_degree) {
    try {
      std::vector<Permutation> gens;
      for (const auto& im : f.generators) {
        if (im.size() != *f.group_degree) throw std::invalid_argument("generator length differs from group degree");
        gens.emplace_back(im);
      }
      if (*f.group_degree != f.v) throw std::invalid_argument("group degree differs from v");
      group = PermGroup(*f.group_degree, std::move(gens));
      add("group", true);
    } catch (const std::exception& e) {
      add("group", false, e.what());
    }
  }

  bool canonical = true;
  std::string why;
  for (std::size_t i = 0; i < f.blocks.size() && canonical; ++i) {
    const auto& blk = f.blocks[i];
    if (!std::is_sorted(blk.begin(), blk.end()) || std::adjacent_find(blk.begin(), blk.end()) != blk.end()) {
      canonical = false;
      why = "block " + std::to_string(i) + " is not a strictly increasing list";
    } else if (!blk.empty() && blk.back() >= f.v) {
      canonical = false;
      why = "block " + std::to_string(i) + " has a point out of range";
    } else if (i > 0 && !(f.blocks[i - 1] < blk)) {
      canonical = false;
      why = "blocks " + std::to_string(i - 1) + " and " + std::to_string(i) + " are out of order or repeated";
    }
  }
  add("canonical-blocks", canonical, why);
  if (!canonical) return rep;

  if (group) {
    const auto s = closure_failure(*group, f.blocks);
    add("block-closed", !s, s ? "generator " + std::to_string(*s) + " maps a block outside the block set" : "");
    if (s) group.reset();
  }
  const IncidenceDesign d(f.v, f.blocks, group, f.meta);
  const auto p = compute_params(d);
  rep.params = p;

  if (auto it = f.meta.find("expect"); it != f.meta.end()) {
    try {
      const auto e = parse_tuple(it->second, 5, "expect");
      const bool ok = p.is_2design && p.v == e[0] && p.b == e[1] && p.r == e[2] && p.k == e[3] && p.lambda == e[4];
      add("expect", ok, ok ? p.tuple() : "computed " + (p.is_2design ? p.tuple() : p.defect) + ", file says " + it->second);
    } catch (const std::invalid_argument& ex) {
      add("expect", false, ex.what());
    }
  }

  std::optional<TransitivityReport> tr;
  auto transitivity = [&]() -> const TransitivityReport& {
    if (!tr) tr = analyze_transitivity(d);
    return *tr;
  };
  if (auto it = f.meta.find("claims"); it != f.meta.end()) {
    for (const auto& claim : split_list(it->second)) {
      const auto& known = known_claims();
      if (std::find(known.begin(), known.end(), claim) == known.end()) {
        add(claim, false, "unknown claim");
        continue;
      }
      if (claim == "2-design") {
        add(claim, p.is_2design, p.defect);
      } else if (claim == "coprime") {
        add(claim, p.is_2design && p.coprime,
            p.is_2design ? "gcd(" + std::to_string(p.r) + "," + std::to_string(p.lambda) + ")=" +
                               std::to_string(std::gcd(p.r, p.lambda))
                         : "not a 2-design");
      } else if (claim == "symmetric") {
        add(claim, p.symmetric);
      } else if (!d.has_group()) {
        add(claim, false, "no valid group in file");
      } else if (claim == "flag-transitive") {
        const auto& t = transitivity();
        add(claim, t.flag_transitive, "flag orbit " + std::to_string(t.flag_orbit) + " of " + std::to_string(t.flags));
        add("point-transitive", t.point_transitive);
        add("block-transitive", t.block_transitive);
      } else if (claim == "primitive") {
        const bool trans = is_transitive(d.group());
        add(claim, trans && is_primitive(d.group()), trans ? "" : "group is intransitive");
      } else if (claim == "2-transitive") {
        add(claim, is_two_transitive(d.group()));
      }
    }
  }
  if (d.has_group()) {
    const auto dem = check_dembowski_implications(d);
    std::string detail;
    for (const auto& v : dem.violations) detail += (detail.empty() ? "" : "; ") + v;
    add("dembowski", dem.ok(), detail);
  }
  return rep;
}

}  // namespace ftd
