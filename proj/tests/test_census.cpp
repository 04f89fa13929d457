#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "wban/analysis.hpp"
#include "wban/scheme.hpp"

using namespace wban;

namespace {

MultiGraph interleaved9(int L) { return to_graph(generate_interleaved(derive_params(9, 3, 2), L)); }
MultiGraph plain9() { return to_graph(generate_plain(derive_params(9, 3, 2))); }

std::vector<std::uint64_t> head(const CensusResult& r, int count) {
  return std::vector<std::uint64_t>(r.c.begin() + 1, r.c.begin() + 1 + count);
}

// c_1..c_9 frozen from an independent brute-force enumeration (DFS decodability).
const std::vector<std::vector<std::uint64_t>> kInterleavedCounts{
    {17, 136, 677, 2333, 5842, 10803, 14540, 13297, 6500},
    {18, 152, 797, 2889, 7603, 14769, 20880, 20073, 10340},
    {18, 153, 812, 2994, 8052, 16053, 23388, 23277, 12500},
    {18, 153, 812, 2993, 8042, 16008, 23273, 23101, 12365},
    {18, 153, 811, 2979, 7952, 15660, 22402, 21731, 11273},
    {18, 153, 810, 2964, 7851, 15260, 21405, 20232, 10192},
    {18, 153, 809, 2948, 7736, 14779, 20135, 18161, 8532},
    {18, 153, 808, 2932, 7621, 14299, 18886, 16199, 7053},
    {18, 153, 807, 2916, 7506, 13821, 17667, 14373, 5776},
};

}  // namespace

TEST(Census, SingleLoop) {
  const auto r = census(MultiGraph::from_pairs(1, {{1, 1}}));
  EXPECT_EQ(r.c, (std::vector<std::uint64_t>{1, 0}));
  EXPECT_EQ(r.kk, (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(r.loop_cut, 1);
}

TEST(Census, NineSensorInterleavedSchemes) {
  for (int L = 1; L <= 9; ++L) {
    const auto r = census(interleaved9(L));
    EXPECT_EQ(head(r, 9), kInterleavedCounts[L - 1]) << "L=" << L;
    for (int x = 10; x <= 18; ++x) EXPECT_EQ(r.c[x], 0u);
  }
}

TEST(Census, PlainSchemeClosedForm) {
  const auto r = census(plain9());
  for (int x = 0; x <= 9; ++x) {
    EXPECT_EQ(r.c[x], oracle::binom(9, x) << x) << x;
  }
  EXPECT_EQ(r.c[8], 2304u);
  EXPECT_EQ(r.loop_cut, 2);
}

TEST(Census, SerialAndParallelKernelsAgree) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_decodable(rng, 8, 14);
    const auto a = census_serial(g);
    const auto b = census_parallel(g);
    EXPECT_EQ(a.c, b.c);
    EXPECT_EQ(a.loop_cut, b.loop_cut);
  }
  EXPECT_EQ(census_serial(interleaved9(3)).c, census_parallel(interleaved9(3)).c);
}

TEST(Census, MatchesDfsOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = oracle::random_decodable(rng, 7, 12);
    EXPECT_EQ(census(g).c, oracle::decodable_counts(g));
  }
}

TEST(Census, Invariants) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_decodable(rng, 8, 14);
    const auto r = census(g);
    const int m = r.m;
    std::uint64_t total = 0;
    for (int x = 0; x <= m; ++x) {
      EXPECT_EQ(r.c[x] + r.kk[x], oracle::binom(m, x));
      total += r.c[x] + r.kk[x];
    }
    EXPECT_EQ(total, std::uint64_t{1} << m);
    EXPECT_EQ(r.c[0], 1u);
    for (int x = m - g.vertex_count() + 1; x <= m; ++x) EXPECT_EQ(r.c[x], 0u);
    ASSERT_TRUE(r.loop_cut);
    for (int x = 0; x <= m; ++x) EXPECT_EQ(r.c[x] < oracle::binom(m, x), x >= *r.loop_cut);
  }
}

TEST(Census, ExtensionFloorHoldsForEveryCensus) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = census(oracle::random_decodable(rng, 8, 14));
    for (int x = 0; x <= r.m; ++x) {
      for (int z = 0; x + z <= r.m; ++z) {
        EXPECT_GE(BigInt(r.kk[x + z]), extension_floor(BigInt(r.kk[x]), r.m, x, z));
      }
    }
  }
}

TEST(Census, UndecodableGraph) {
  const auto r = census(MultiGraph::from_pairs(2, {{1, 2}}));
  EXPECT_EQ(r.c, (std::vector<std::uint64_t>{0, 0}));
  EXPECT_FALSE(r.loop_cut);
}

TEST(Census, CapRefusal) {
  const auto g = to_graph(generate_interleaved(derive_params(12, 4, 3), 4));  // m = 36
  try {
    census(g);
    FAIL() << "expected refusal";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("2^36"), std::string::npos);
  }
  EXPECT_THROW(census(interleaved9(3), CensusOptions{10, false, true}), CapExceeded);
}

TEST(Probability, Endpoints) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    const auto r = census(oracle::random_decodable(rng, 8, 12));
    EXPECT_DOUBLE_EQ(decoding_probability(r, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(decoding_probability(r, 0.0), 0.0);
    double prev = 0.0;
    for (int i = 0; i <= 20; ++i) {
      const double v = decoding_probability(r, i / 20.0);
      EXPECT_GE(v, prev - 1e-15);
      prev = v;
    }
  }
  EXPECT_THROW(decoding_probability(census(interleaved9(3)), 1.5), std::domain_error);
  EXPECT_THROW(decoding_probability(census(interleaved9(3)), -0.1), std::domain_error);
}

TEST(Probability, NineSensorValues) {
  EXPECT_NEAR(decoding_probability(census(interleaved9(3)), 0.8), 0.9558104057, 1e-9);
  EXPECT_NEAR(decoding_probability(census(plain9()), 0.8), std::pow(0.96, 9), 1e-12);
  EXPECT_NEAR(std::pow(0.96, 9), 0.6925339958, 1e-10);
}

TEST(Probability, MatchesSubsetSumOracle) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = oracle::random_decodable(rng, 7, 12);
    const auto r = census(g);
    for (double p : {0.3, 0.8, 0.95}) {
      EXPECT_NEAR(decoding_probability(r, p), oracle::probability_by_subsets(g, p), 1e-12);
    }
  }
}

TEST(Probability, ComponentFactorization) {
  EXPECT_NEAR(probability_by_components(plain9(), 0.8), std::pow(0.96, 9), 1e-12);
  const auto two = MultiGraph::from_pairs(2, {{1, 1}, {2, 2}});
  for (double p : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(probability_by_components(two, p), p * p, 1e-12);
  }
  const auto doubled = MultiGraph::from_pairs(2, {{1, 1}, {1, 1}, {2, 2}, {2, 2}});
  EXPECT_NEAR(probability_by_components(doubled, 0.7), std::pow(1 - 0.09, 2), 1e-12);

  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_decodable(rng, 8, 14);
    for (double p : {0.2, 0.8}) {
      const double direct = decoding_probability(census(g), p);
      EXPECT_NEAR(probability_by_components(g, p), direct, 1e-12 * direct);
    }
  }
  const auto g3 = interleaved9(3);
  EXPECT_NEAR(probability_by_components(g3, 0.8), decoding_probability(census(g3), 0.8), 1e-12);
}
