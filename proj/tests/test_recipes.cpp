#include <gtest/gtest.h>

#include <ftd/recipe.hpp>

using namespace ftd;

namespace {

const std::filesystem::path kRecipes = std::filesystem::path(FTD_DATA_DIR) / "recipes";

struct Row {
  const char* file;
  std::uint64_t v, b, r, k, lambda, point_stab;
};

// Quintuples and point-stabilizer orders of the bundled sporadic examples.
const Row kRows[] = {
    {"line01_psl2-5-on-6.recipe", 6, 10, 5, 3, 2, 10},
    {"line02_psl2-7-on-8.recipe", 8, 14, 7, 4, 3, 21},
    {"line03_psl2-8-on-28.recipe", 28, 36, 9, 7, 2, 18},
    {"line04_a6-on-10.recipe", 10, 15, 9, 6, 5, 36},
    {"line05_psl2-11-on-11.recipe", 11, 11, 5, 5, 2, 60},
    {"line06_m11-on-12.recipe", 12, 22, 11, 6, 5, 660},
    {"line07_m22-on-22.recipe", 22, 77, 21, 6, 5, 20160},
    {"line08_m22-2-on-22.recipe", 22, 77, 21, 6, 5, 40320},
    {"line09_s6-on-10.recipe", 10, 15, 9, 6, 5, 72},
    {"line10_a7-on-15.recipe", 15, 35, 7, 3, 1, 168},
    {"line11_a8-on-15.recipe", 15, 35, 7, 3, 1, 1344},
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Recipes, AllBundledFilesPresent) {
  const auto files = recipe_files(kRecipes);
  ASSERT_EQ(files.size(), std::size(kRows));
  for (std::size_t i = 0; i < files.size(); ++i) EXPECT_EQ(files[i].filename(), kRows[i].file);
}

TEST(Recipes, RebuildWithStatedParameters) {
  for (const auto& row : kRows) {
    SCOPED_TRACE(row.file);
    const auto recipe = read_recipe_file(kRecipes / row.file);
    const auto d = load_recipe(recipe);
    EXPECT_EQ(compute_params(d).tuple(), make_params(row.v, row.b, row.r, row.k, row.lambda).tuple());
    EXPECT_EQ(d.group().order() / row.v, row.point_stab);
    EXPECT_EQ(point_stabilizer(d.group(), 0).order(), row.point_stab);
    EXPECT_TRUE(check_dembowski_implications(d).ok());
    EXPECT_EQ(d.meta().at("family"), "recipe:" + recipe.name);
  }
}

TEST(Recipes, KnownGroupOrders) {
  EXPECT_EQ(load_recipe(kRecipes / "line03_psl2-8-on-28.recipe").group().order(), 504u);
  EXPECT_EQ(load_recipe(kRecipes / "line06_m11-on-12.recipe").group().order(), 7920u);
  EXPECT_EQ(load_recipe(kRecipes / "line07_m22-on-22.recipe").group().order(), 443520u);
}

TEST(Recipes, HadamardBlockIsResidues) {
  const auto d = load_recipe(kRecipes / "line05_psl2-11-on-11.recipe");
  EXPECT_EQ(d.b(), 11u);
  bool residues = false;
  for (const auto& blk : d.blocks()) residues = residues || blk == Block{1, 3, 4, 5, 9};
  EXPECT_TRUE(residues);
}

TEST(Recipes, ParserRejectsUnknownAndDuplicateKeys) {
  const std::string good = "name=x\nv=3\nexpect=3,3,2,2,1\ngen=[1,2,0]\nbase_block=[0,1]\n";
  EXPECT_NO_THROW(parse_recipe(good));
  EXPECT_THROW(parse_recipe(good + "colour=blue\n"), FormatError);
  EXPECT_THROW(parse_recipe(good + "v=3\n"), FormatError);
  EXPECT_THROW(parse_recipe("name=x\nv=3\n"), FormatError);
  EXPECT_NO_THROW(parse_recipe("# note\n" + good + "gen=[0,2,1]\n"));
}

TEST(Recipes, CorruptionNamesTheClaim) {
  const std::string text = slurp(kRecipes / "line07_m22-on-22.recipe");
  auto claim_of = [](const std::string& t) -> std::string {
    try {
      load_recipe(parse_recipe(t));
    } catch (const RecipeError& e) {
      return e.claim();
    }
    return "none";
  };
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string t = text;
    const auto pos = t.find(from);
    EXPECT_NE(pos, std::string::npos);
    t.replace(pos, from.size(), to);
    return t;
  };
  EXPECT_EQ(claim_of(text), "none");
  EXPECT_EQ(claim_of(replace("expect=22,77,21,6,5", "expect=22,77,21,6,4")), "params");
  EXPECT_EQ(claim_of(replace("expect_group_order=443520", "expect_group_order=443521")), "group-order");
  EXPECT_EQ(claim_of(replace("expect_point_stabilizer_order=20160", "expect_point_stabilizer_order=20161")),
            "point-stabilizer-order");
  const auto base = text.find("base_block=[");
  ASSERT_NE(base, std::string::npos);
  std::string broken = text.substr(0, base) + "base_block=[0,1,2,3,4,5]\n";
  EXPECT_EQ(claim_of(broken), "params");  // 3-transitive, so still a 2-design
  EXPECT_EQ(claim_of("name=c7\nv=7\nexpect=7,7,3,3,1\ngen=[1,2,3,4,5,6,0]\nbase_block=[0,1,2]\n"), "2-design");
  EXPECT_EQ(claim_of("name=c7\nv=7\nexpect=7,7,3,3,1\ngen=[1,2,3,4,5,6,0]\nbase_block=[0,1,3]\n"), "flag-transitive");
  EXPECT_EQ(claim_of("name=c7\nv=7\nexpect=7,7,3,3,1\ngen=[1,2,3,4,5,0]\nbase_block=[0,1,3]\n"), "generators");
}
