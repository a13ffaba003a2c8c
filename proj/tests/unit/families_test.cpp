#include <gtest/gtest.h>

#include "toricreg/errors.hpp"
#include "toricreg/families.hpp"
#include "toricreg/linalg.hpp"

using namespace toricreg;

TEST(Parse, InlineSpecs) {
  const auto s = parse_family("bruns_gubeladze:s=4,l=1");
  EXPECT_EQ(s.family, "bruns_gubeladze");
  EXPECT_EQ(s.get("s", 0), 4);
  EXPECT_EQ(s.get("l", 0), 1);
  EXPECT_EQ(s.get("c", 7), 7);
  const auto p = parse_family("pyramid_of:base=rabinowitz_T,p=2,q=2,l=2");
  EXPECT_EQ(p.base, "rabinowitz_T");
  EXPECT_EQ(to_string(p), "pyramid_of:base=rabinowitz_T,l=2,p=2,q=2");
  EXPECT_EQ(parse_family(to_string(p)), p);
  EXPECT_EQ(parse_family("standard_simplex:d=3").params.size(), 1u);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_family("nonsense:d=1"), InvalidInput);
  EXPECT_THROW(parse_family("standard_simplex:e=1"), InvalidInput);
  EXPECT_THROW(parse_family("standard_simplex:d=x"), InvalidInput);
  EXPECT_THROW(parse_family("standard_simplex:d"), InvalidInput);
  EXPECT_THROW(parse_family("standard_simplex:d=1,d=2"), InvalidInput);
  EXPECT_THROW(parse_family("pyramid_of:l=1"), InvalidInput);
  EXPECT_THROW(parse_family("pyramid_of:base=pyramid_of,l=1"), InvalidInput);
  EXPECT_THROW(parse_family("standard_simplex:base=rabinowitz_T,d=2"), InvalidInput);
}

TEST(Parse, Json) {
  const auto specs = families_from_json(
      R"([{"family": "bruns_gubeladze", "s": 5}, {"family": "random_hnf_simplex", "d": 3, "max_det": 9, "seed": 18446744073709551615}])");
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[0].get("s", 0), 5);
  EXPECT_EQ(static_cast<std::uint64_t>(specs[1].get("seed", 0)), 18446744073709551615ULL);
  EXPECT_THROW(families_from_json(R"({"s": 5})"), InvalidInput);
  EXPECT_THROW(families_from_json(R"({"family": "bruns_gubeladze", "s": "5"})"), InvalidInput);
  EXPECT_THROW(families_from_json("[{"), InvalidInput);
}

TEST(Generate, NamedFamilies) {
  EXPECT_EQ(generate(parse_family("standard_simplex:d=3")).front().vertices().size(), 4u);
  const auto d = generate(parse_family("dilated_simplex:d=2,c=3")).front();
  EXPECT_EQ(d.vertices(), (std::vector<Point>{{0, 0}, {3, 0}, {0, 3}}));
  const auto t = generate(parse_family("rabinowitz_T:p=4")).front();
  EXPECT_EQ(t.vertices(), (std::vector<Point>{{0, 0}, {4, 0}, {0, 1}}));
  EXPECT_EQ(generate(parse_family("rabinowitz_T:p=2,q=2")).front().vertices(),
            (std::vector<Point>{{0, 0}, {2, 0}, {0, 2}}));
  EXPECT_THROW(generate(parse_family("rabinowitz_T:p=3,q=2")), InvalidInput);
  EXPECT_THROW(generate(parse_family("bruns_gubeladze:s=3")), InvalidInput);
  const auto pyr = generate(parse_family("pyramid_of:base=rabinowitz_T,p=3,q=1,l=2")).front();
  EXPECT_EQ(pyr.dim(), 4u);
  EXPECT_EQ(pyr.name(), "pyramid_of:base=rabinowitz_T,l=2,p=3,q=1");
  EXPECT_EQ(generate(parse_family("bruns_gubeladze:s=4,l=1")).front().dim(), 4u);
}

TEST(Generate, BrunsGubeladzeVertices) {
  const auto p = bruns_gubeladze(6);
  EXPECT_EQ(p.vertices().size(), 8u);
  EXPECT_EQ(p.vertices()[6], (Point{1, 1, 6}));
  EXPECT_EQ(p.vertices()[7], (Point{1, 1, 7}));
}

TEST(RandomHnf, DeterministicInSeed) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(random_hnf_simplex(4, 30, seed).vertices(), random_hnf_simplex(4, 30, seed).vertices());
  }
  const auto a = generate(parse_family("random_hnf_simplex:d=3,max_det=20,seed=9,count=25"));
  const auto b = generate(parse_family("random_hnf_simplex:d=3,max_det=20,seed=9,count=25"));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].vertices(), b[i].vertices());
    EXPECT_EQ(a[i].name(), b[i].name());
  }
}

TEST(RandomHnf, MembersReplayFromTheirNames) {
  const auto corpus = generate(parse_family("random_hnf_simplex:d=3,max_det=20,seed=9,count=10"));
  for (const auto& p : corpus) {
    ASSERT_TRUE(p.seed().has_value());
    const auto again = generate(parse_family(p.name()));
    ASSERT_EQ(again.size(), 1u);
    EXPECT_EQ(again.front().vertices(), p.vertices());
  }
}

TEST(RandomHnf, ShapeAndVolume) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int d = 2 + static_cast<int>(seed % 3);
    const auto p = random_hnf_simplex(d, 30, seed);
    const auto& v = p.vertices();
    ASSERT_EQ(v.size(), static_cast<std::size_t>(d + 1));
    ASSERT_EQ(v[0], Point(static_cast<std::size_t>(d), 0));
    Integer product = 1;
    for (int i = 0; i < d; ++i) {
      const auto& row = v[static_cast<std::size_t>(i) + 1];
      const Coord pivot = row[static_cast<std::size_t>(i)];
      ASSERT_GE(pivot, 1);
      for (int j = 0; j < i; ++j) {
        ASSERT_GE(row[static_cast<std::size_t>(j)], 0);
        ASSERT_LT(row[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(j)]);
      }
      for (int j = i + 1; j < d; ++j) ASSERT_EQ(row[static_cast<std::size_t>(j)], 0);
      product *= pivot;
    }
    ASSERT_LE(product, 30);
    ASSERT_EQ(normalized_volume_simplex(p), product);
  }
}

TEST(RandomHnf, DeterminantsCoverTheRange) {
  std::set<Integer> seen;
  for (std::uint64_t seed = 0; seed < 400; ++seed) seen.insert(normalized_volume_simplex(random_hnf_simplex(3, 12, seed)));
  EXPECT_EQ(seen.size(), 12u);
}

TEST(DeriveSeed, Distinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(42, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
}
