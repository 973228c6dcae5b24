// Acceptance run: one PASS/FAIL line per criterion item. Exit status is 0
// when the only failures are the known-unattainable items listed below.

#include <ftd/cli.hpp>

#include <chrono>
#include <iostream>

using namespace ftd;

namespace {

// No design with these parameters exists for the stated group; see README.
const std::set<std::string> kKnownUnattainable{"1.tensor"};

struct Tally {
  std::vector<std::string> unexpected, known;

  void report(const std::string& id, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << detail << std::endl;
    if (!ok) (kKnownUnattainable.count(id) ? known : unexpected).push_back(id);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << s << "s";
  return os.str();
}

void params_item(Tally& t, const std::string& id, const std::function<IncidenceDesign()>& build, std::uint64_t v,
                 std::uint64_t b, std::uint64_t r, std::uint64_t k, std::uint64_t lambda, double limit,
                 const std::string& note = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::string want = make_params(v, b, r, k, lambda).tuple();
  try {
    const auto d = build();
    const auto p = compute_params(d);
    const double s = seconds_since(start);
    const bool ok = p.is_2design && p.tuple() == want && s < limit;
    t.report(id, ok,
             (p.is_2design ? p.tuple() : p.defect) + " want " + want + " in " + fmt_seconds(s) + note);
  } catch (const std::exception& e) {
    t.report(id, false, std::string("want ") + want + ", got error: " + e.what());
  }
}

std::string run_cli(std::vector<std::string> args, int& rc) {
  args.insert(args.begin(), {"ftdesign", "--data-dir", FTD_DATA_DIR});
  std::ostringstream out, err;
  rc = cli::run(args, out, err);
  return out.str();
}

}  // namespace

int main() {
  Tally t;
  const std::filesystem::path data(FTD_DATA_DIR);

  // 1. parameter reproduction
  params_item(t, "1.point-hyperplane(3,2)", [] { return build_point_hyperplane(3, 2); }, 7, 7, 3, 3, 1, 60);
  params_item(t, "1.point-hyperplane(4,2)", [] { return build_point_hyperplane(4, 2); }, 15, 15, 7, 7, 3, 60);
  params_item(t, "1.wbs(8)", [] { return build_wbs(8); }, 28, 63, 9, 4, 1, 60);
  params_item(t, "1.hermitian-unital(3)", [] { return build_hermitian_unital(3); }, 28, 63, 9, 4, 1, 60);
  params_item(t, "1.unitary(3)", [] { return build_unitary_design(3); }, 28, 252, 27, 3, 2, 60);
  params_item(t, "1.suzuki(8)", [] { return build_suzuki_design(8); }, 65, 520, 64, 8, 7, 60);
  params_item(t, "1.tensor", [] { return build_tensor_design(); }, 64, 192, 21, 7, 2, 60);
  params_item(t, "1.coset-union(3,4,2,0,4,i)", [] { return build_coset_union_design(3, 4, 2, 0, 4, CosetCase::i); },
              81, 1620, 80, 4, 3, 60, " (b=1080 as listed violates bk=vr)");
  {
    const auto p = ree_parameters(27, 1);
    const std::string want = make_params(19684, 14349636, 19683, 27, 26).tuple();
    t.report("1.ree(27,1)", p.tuple() == want && p.b * p.k == p.v * p.r && p.coprime,
             p.tuple() + " want " + want + " (b=531468 as listed violates bk=vr)");
  }
  params_item(t, "1.suzuki(32)", [] { return build_suzuki_design(32); }, 1025, 32800, 1024, 32, 31, 600);
  params_item(t, "1.affine-subspace(2,10,2,3,a)",
              [] { return build_affine_subspace_design(2, 10, 2, 3, Placement::a); }, 1024, 130944, 1023, 8, 7, 600);

  // 2. sporadic examples from recipes, with point-stabilizer orders from the stabilizer chain
  {
    const std::vector<std::tuple<std::string, std::string, std::uint64_t>> rows{
        {"line01_psl2-5-on-6.recipe", "6,10,5,3,2", 10},      {"line02_psl2-7-on-8.recipe", "8,14,7,4,3", 21},
        {"line03_psl2-8-on-28.recipe", "28,36,9,7,2", 18},    {"line04_a6-on-10.recipe", "10,15,9,6,5", 36},
        {"line05_psl2-11-on-11.recipe", "11,11,5,5,2", 60},   {"line06_m11-on-12.recipe", "12,22,11,6,5", 660},
        {"line07_m22-on-22.recipe", "22,77,21,6,5", 20160},   {"line08_m22-2-on-22.recipe", "22,77,21,6,5", 40320},
        {"line09_s6-on-10.recipe", "10,15,9,6,5", 72},        {"line10_a7-on-15.recipe", "15,35,7,3,1", 168},
        {"line11_a8-on-15.recipe", "15,35,7,3,1", 1344},
    };
    for (const auto& [file, want, stab] : rows) {
      try {
        const auto d = load_recipe(data / "recipes" / file);
        const auto p = compute_params(d);
        const auto s = point_stabilizer(d.group(), 0).order();
        t.report("2." + file, p.tuple() == want && s == stab,
                 p.tuple() + " |G_x|=" + std::to_string(s) + " want " + want + " |G_x|=" + std::to_string(stab));
      } catch (const std::exception& e) {
        t.report("2." + file, false, e.what());
      }
    }
  }

  // 3. property suite over the catalog
  {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = run_catalog(catalog_manifest(data));
    std::size_t pass = 0;
    for (const auto& row : rows) {
      pass += row.ok();
      if (!row.ok()) std::cout << "  " << row.line() << '\n';
    }
    t.report("3.catalog", pass == rows.size() && rows.size() >= 20,
             std::to_string(pass) + "/" + std::to_string(rows.size()) +
                 " designs pass 2-design, identities, coprime, flag, prim, dembowski in " +
                 fmt_seconds(seconds_since(start)));
  }

  // 4. oracle equivalences
  {
    const auto fano = invariant_fingerprint(build_point_hyperplane(3, 2));
    const PermGroup c7(7, {Permutation(std::vector<Point>{1, 2, 3, 4, 5, 6, 0})});
    const auto cyclic = invariant_fingerprint(orbit_design(7, c7, {0, 1, 3}));
    t.report("4.fano-difference-set", fano == cyclic, fano.hex() + " vs " + cyclic.hex());

    const auto unital = invariant_fingerprint(build_hermitian_unital(2));
    const auto plane = invariant_fingerprint(build_desarguesian_affine(2, 3));
    t.report("4.unital2-affine-plane", unital == plane, unital.hex() + " vs " + plane.hex());

    const auto paley = invariant_fingerprint(*paley_design({11, 1, 2, 1, 1}).design).hex();
    std::string found = "none";
    for (const auto& h : search_flag_transitive(11, 1, 12).hits)
      if (h.fingerprint == paley) found = h.line();
    t.report("4.search-rediscovers-paley", found != "none", "paley " + paley + ", hit " + found);
  }

  // 5. determinism
  {
    int rc1 = 0, rc2 = 0;
    const auto a = run_cli({"catalog"}, rc1), b = run_cli({"catalog"}, rc2);
    t.report("5.catalog-byte-identical", a == b && rc1 == 0 && rc2 == 0 && !a.empty(),
             std::to_string(a.size()) + " bytes, exit " + std::to_string(rc1) + "," + std::to_string(rc2));
    const auto s1 = run_cli({"search", "p=11", "d=1", "k_max=12"}, rc1);
    const auto s2 = run_cli({"search", "p=11", "d=1", "k_max=12"}, rc2);
    t.report("5.search-byte-identical", s1 == s2 && rc1 == 0 && !s1.empty(),
             std::to_string(s1.size()) + " bytes");
  }

  // 6. negative controls
  {
    try {
      build_projective_points_design(3, 5);
      t.report("6.projective-points-gcd", false, "accepted n=3 q=5");
    } catch (const PreconditionError& e) {
      t.report("6.projective-points-gcd", true, e.what());
    }

    const auto dir = std::filesystem::temp_directory_path() / "ftd_acceptance";
    std::filesystem::create_directories(dir);
    auto d = build_point_hyperplane(3, 2);
    std::vector<Block> blocks = d.blocks();
    blocks.front().pop_back();
    std::sort(blocks.begin(), blocks.end());
    const IncidenceDesign broken(d.v(), blocks, std::nullopt, d.meta());
    write_design(broken, dir / "broken.design");
    int rc = 0;
    const auto out = run_cli({"verify", "file=" + (dir / "broken.design").string()}, rc);
    const auto at = out.find("FAIL 2-design");
    const std::string line = at == std::string::npos ? out : out.substr(at, out.find('\n', at) - at);
    t.report("6.corrupted-file", rc != 0 && at != std::string::npos, line);
    std::filesystem::remove_all(dir);

    try {
      build_coset_union_design(2, 6, 2, 0, 7, CosetCase::i);
      t.report("6.coset-union-omega", false, "accepted omega=7");
    } catch (const PreconditionError& e) {
      const std::string msg = e.what();
      t.report("6.coset-union-omega", msg.find("gcd(9,6)=3") != std::string::npos, msg);
    }
  }

  std::cout << "summary: " << t.unexpected.size() << " unexpected failures, " << t.known.size()
            << " known-unattainable failures";
  for (const auto& id : t.known) std::cout << ' ' << id;
  std::cout << std::endl;
  return t.unexpected.empty() ? 0 : 1;
}
