#pragma once

// Desk-scale manifest of every constructible coprime flag-transitive example,
// and the per-design checks run over it.

#include "recipe.hpp"
#include "semilinear.hpp"

#include <functional>
#include <atomic>
#include <thread>

namespace ftd {

struct CatalogEntry {
  std::string family;
  std::string params;  // key=value list as accepted by `construct`
  std::array<std::uint64_t, 5> expect;
  std::string cite;
  std::function<IncidenceDesign()> build;
};

struct CatalogRow {
  std::string family, params;
  DesignParams computed;
  bool expect_ok = false, identities = false, coprime = false, flag = false, primitive = false, dembowski = false;
  std::string error;

  bool ok() const { return error.empty() && expect_ok && identities && coprime && flag && primitive && dembowski; }

  std::string line() const {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::ostringstream os;
    os << family << ' ' << (params.empty() ? "-" : params) << ' ';
    if (!error.empty()) {
      os << "ERROR " << error;
      return os.str();
    }
    os << computed.v << ' ' << computed.b << ' ' << computed.r << ' ' << computed.k << ' ' << computed.lambda
       << " expect=" << yn(expect_ok) << " identities=" << yn(identities) << " coprime=" << yn(coprime)
       << " flag=" << yn(flag) << " prim=" << yn(primitive) << " dembowski=" << yn(dembowski);
    return os.str();
  }
};

inline CatalogRow check_catalog_design(const IncidenceDesign& d, const std::array<std::uint64_t, 5>& e) {
  CatalogRow row;
  const auto p = compute_params(d);
  row.computed = p;
  if (!p.is_2design) {
    row.error = "not a 2-design: " + p.defect;
    return row;
  }
  row.expect_ok = p.v == e[0] && p.b == e[1] && p.r == e[2] && p.k == e[3] && p.lambda == e[4];
  row.identities = p.b * p.k == p.v * p.r && p.lambda * (p.v - 1) == p.r * (p.k - 1);
  row.coprime = std::gcd(p.r, p.lambda) == 1;
  const auto dem = check_dembowski_implications(d);
  row.flag = dem.flag_transitive;
  row.primitive = dem.primitive;
  row.dembowski = dem.ok();
  return row;
}

/// Manifest order is the output order. Recipes are read from data_dir/recipes.
inline std::vector<CatalogEntry> catalog_manifest(const std::filesystem::path& data_dir) {
  std::vector<CatalogEntry> m;
  auto add = [&](std::string family, std::string params, std::array<std::uint64_t, 5> e, std::string cite,
                 std::function<IncidenceDesign()> f) {
    m.push_back({std::move(family), std::move(params), e, std::move(cite), std::move(f)});
  };
  add("point-hyperplane", "n=3 q=2", {7, 7, 3, 3, 1}, "point-hyperplane", [] { return build_point_hyperplane(3, 2); });
  add("point-hyperplane", "n=4 q=2", {15, 15, 7, 7, 3}, "point-hyperplane", [] { return build_point_hyperplane(4, 2); });
  add("point-hyperplane", "n=3 q=3", {13, 13, 4, 4, 1}, "point-hyperplane", [] { return build_point_hyperplane(3, 3); });
  add("point-hyperplane", "n=3 q=4", {21, 21, 5, 5, 1}, "point-hyperplane", [] { return build_point_hyperplane(3, 4); });
  add("point-hyperplane", "n=5 q=2", {31, 31, 15, 15, 7}, "point-hyperplane", [] { return build_point_hyperplane(5, 2); });
  add("projective-points", "n=3 q=4", {21, 105, 20, 4, 3}, "projective-points",
      [] { return build_projective_points_design(3, 4); });
  add("projective-points", "n=4 q=3", {40, 520, 39, 3, 2}, "projective-points",
      [] { return build_projective_points_design(4, 3); });
  add("wbs", "q=8", {28, 63, 9, 4, 1}, "witt-bose-shrikhande", [] { return build_wbs(8); });
  add("wbs", "q=16", {120, 255, 17, 8, 1}, "witt-bose-shrikhande", [] { return build_wbs(16); });
  add("hermitian-unital", "q=2", {9, 12, 4, 3, 1}, "hermitian-unital", [] { return build_hermitian_unital(2); });
  add("hermitian-unital", "q=3", {28, 63, 9, 4, 1}, "hermitian-unital", [] { return build_hermitian_unital(3); });
  add("hermitian-unital", "q=4", {65, 208, 16, 5, 1}, "hermitian-unital", [] { return build_hermitian_unital(4); });
  add("unitary", "q=3", {28, 252, 27, 3, 2}, "unitary", [] { return build_unitary_design(3); });
  add("unitary", "q=4", {65, 1040, 64, 4, 3}, "unitary", [] { return build_unitary_design(4); });
  add("suzuki", "q=8", {65, 520, 64, 8, 7}, "suzuki-tits-ovoid", [] { return build_suzuki_design(8); });
  add("affine-subspace", "p=2 d=4 n=1 u=3 placement=a", {16, 30, 15, 8, 7}, "affine-subspace",
      [] { return build_affine_subspace_design(2, 4, 1, 3, Placement::a); });
  add("coset-union", "p=3 d=4 n=2 u=0 omega=4 case=i", {81, 1620, 80, 4, 3}, "coset-union",
      [] { return build_coset_union_design(3, 4, 2, 0, 4, CosetCase::i); });
  add("coset-union", "p=3 d=4 n=2 u=2 omega=2 case=ii", {81, 360, 80, 18, 17}, "coset-union",
      [] { return build_coset_union_design(3, 4, 2, 2, 2, CosetCase::ii); });
  add("desarguesian-affine", "n=2 q=3", {9, 12, 4, 3, 1}, "desarguesian-affine",
      [] { return build_desarguesian_affine(2, 3); });
  add("desarguesian-affine", "n=2 q=4", {16, 20, 5, 4, 1}, "desarguesian-affine",
      [] { return build_desarguesian_affine(2, 4); });
  add("desarguesian-affine", "n=3 q=3", {27, 117, 13, 3, 1}, "desarguesian-affine",
      [] { return build_desarguesian_affine(3, 3); });
  add("affine-complement", "q=3", {9, 12, 8, 6, 5}, "affine-plane-complement",
      [] { return build_affine_plane_complement(3); });
  add("affine-complement", "q=4", {16, 20, 15, 12, 11}, "affine-plane-complement",
      [] { return build_affine_plane_complement(4); });
  add("parallel-pairs", "p=7", {49, 168, 48, 14, 13}, "parallel-pairs", [] { return build_parallel_pairs(7); });
  add("paley", "p=7 d=1 i=2 theta=1 y=1", {7, 7, 3, 3, 1}, "semilinear-paley",
      [] { return *paley_design({7, 1, 2, 1, 1}).design; });
  add("paley", "p=11 d=1 i=2 theta=1 y=1", {11, 11, 5, 5, 2}, "semilinear-paley",
      [] { return *paley_design({11, 1, 2, 1, 1}).design; });
  for (const auto& file : recipe_files(data_dir / "recipes")) {
    const Recipe r = read_recipe_file(file);
    std::array<std::uint64_t, 5> e{};
    std::copy(r.expect.begin(), r.expect.end(), e.begin());
    add("recipe", "name=" + file.filename().string(), e, r.cite, [r] { return load_recipe(r); });
  }
  return m;
}

/// Builds and checks every entry, `threads` at a time; rows come back in
/// manifest order.
inline std::vector<CatalogRow> run_catalog(const std::vector<CatalogEntry>& manifest, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CatalogRow> rows(manifest.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < manifest.size(); i = next++) {
      const auto& e = manifest[i];
      try {
        rows[i] = check_catalog_design(e.build(), e.expect);
      } catch (const std::exception& ex) {
        rows[i].error = ex.what();
      }
      rows[i].family = e.family;
      rows[i].params = e.params;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace ftd
