#include <gtest/gtest.h>

#include "spinpa/groups.hpp"
#include "spinpa/json_io.hpp"

using namespace spinpa;

namespace {

// S3 as permutations of {0,1,2}, composed as functions, written out by hand.
std::vector<std::vector<int>> compose_s3() {
  const std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      for (int r = 0; r < 6; ++r)
        if (perms[r] == c) t[a][b] = r;
    }
  return t;
}

} // namespace

TEST(GroupTable, Builtins) {
  for (int n = 2; n <= 6; ++n) {
    const auto g = builtin_group("Z" + std::to_string(n));
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(g.identity(), 0);
    for (int a = 0; a < n; ++a) EXPECT_EQ(g.op(a, g.inverse(a)), 0);
  }
  const auto s3 = symmetric_group_3();
  EXPECT_EQ(s3.table(), compose_s3());
  EXPECT_EQ(s3.op(1, 2), 4);  // non-abelian
  EXPECT_EQ(s3.op(2, 1), 3);
  EXPECT_THROW(builtin_group("Z7"), ValidationError);
  EXPECT_THROW(builtin_group("A4"), ValidationError);
}

TEST(GroupTable, AxiomFailuresAreNamed) {
  auto message = [](std::vector<std::vector<int>> t) {
    try {
      GroupTable g(std::move(t));
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message({{0, 1}, {1, 1}}).find("inverse"), std::string::npos);
  EXPECT_NE(message({{0, 2}, {1, 0}}).find("closure"), std::string::npos);
  EXPECT_NE(message({{0, 0}, {0, 0}}).find("identity"), std::string::npos);
  // A Latin square that is not associative.
  EXPECT_NE(message({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}).find("associativity"), std::string::npos);
  EXPECT_NE(message({{0, 1}}).find("square"), std::string::npos);
}

TEST(GroupTable, SampleFileIsS3) {
  const auto j = read_json_file(std::string(SPINPA_SAMPLES) + "/group_s3.json");
  std::vector<std::vector<int>> t;
  for (const auto& row : j["table"]) {
    t.emplace_back();
    for (const auto& v : row) t.back().push_back(v.get<int>() - 1);
  }
  const GroupTable g(t, "file");
  EXPECT_EQ(g.order(), 6);
  int commuting = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) commuting += g.op(a, b) == g.op(b, a) ? 1 : 0;
  EXPECT_EQ(commuting, 18);  // |S3| times the number of conjugacy classes
}

TEST(GroupElement, MatchesLatinSquarePath) {
  for (const char* name : {"Z2", "Z3", "S3"}) {
    const auto g = builtin_group(name);
    const auto u = group_biunitary(g);
    EXPECT_TRUE(approx_equal(u, from_qls(latin_to_qls(multiplication_table(g))))) << name;
    EXPECT_TRUE(is_biunitary(u, 1).verdict) << name;
  }
}

TEST(GroupElement, XIsARepresentation) {
  for (const char* name : {"Z4", "S3"}) {
    const auto g = builtin_group(name);
    const auto p = group_oracle(g, 2);
    EXPECT_EQ(p.multiplicativity_defect, 0.0);
    EXPECT_TRUE(approx_equal(p.X[g.identity()], unit(SpinContext(g.order()), {2, Shading::plus})));
    for (int a = 0; a < g.order(); ++a) EXPECT_TRUE(approx_equal(star(p.X[a]), p.X[g.inverse(a)]));
  }
}

TEST(OrbitSums, CountsAndDisjointSupports) {
  for (const char* name : {"Z2", "Z3", "S3"}) {
    const auto g = builtin_group(name);
    const int n = g.order();
    for (int j = 1; j <= (n == 6 ? 1 : 2); ++j) {
      const auto sums = orbit_sum_basis(g, j);
      std::size_t expect = 1;
      for (int i = 0; i < 2 * j - 1; ++i) expect *= static_cast<std::size_t>(n);
      EXPECT_EQ(sums.size(), expect) << name << " j=" << j;
      std::size_t support = 0;
      for (const auto& s : sums) {
        EXPECT_EQ(s.size(), static_cast<std::size_t>(n));  // free action
        support += s.size();
      }
      EXPECT_EQ(support, expect * static_cast<std::size_t>(n));
      for (std::size_t a = 0; a < sums.size(); ++a)
        for (std::size_t b = a + 1; b < sums.size(); ++b) EXPECT_EQ(inner_product(sums[a], sums[b]), Complex(0.0));
    }
  }
  EXPECT_EQ(predicted_dimensions(6, 3), (std::vector<std::uint64_t>{1, 1, 6, 36}));
  EXPECT_EQ(predicted_dimensions(2, 4), (std::vector<std::uint64_t>{1, 1, 2, 4, 8}));
}
