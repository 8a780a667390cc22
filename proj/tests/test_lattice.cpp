#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <json.hpp>

#include "jh/error.hpp"
#include "jh/lattice.hpp"
#include "support/oracle.hpp"

namespace {

using jh::Chord;
using jh::Natural;

Chord chord(std::initializer_list<Natural> v) { return Chord(std::vector<Natural>(v)); }
std::vector<Natural> nat(std::initializer_list<Natural> v) { return v; }

std::set<Natural> edge_primes(const jh::DivisorLattice& l) {
  std::set<Natural> out;
  for (const auto& e : l.edges) out.insert(e.prime);
  return out;
}

TEST(ComplexitySpace, Examples) {
  const auto l60 = jh::complexity_space(60);
  EXPECT_EQ(l60.nodes, nat({1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60}));
  EXPECT_EQ(edge_primes(l60), (std::set<Natural>{2, 3, 5}));
  EXPECT_EQ(l60.dimensions, 3u);
  EXPECT_EQ(jh::complexity_space(10).nodes, nat({1, 2, 5, 10}));
  const auto l15 = jh::complexity_space(15);
  EXPECT_EQ(l15.nodes, nat({1, 3, 5, 15}));
  EXPECT_EQ(l15.edges.size(), 4u);
  const auto l1 = jh::complexity_space(1);
  EXPECT_EQ(l1.nodes, nat({1}));
  EXPECT_TRUE(l1.edges.empty());
  EXPECT_EQ(l1.dimensions, 0u);
  EXPECT_THROW(jh::complexity_space(0), jh::DomainError);
}

TEST(ComplexitySpace, StructureMatchesPrimeExponents) {
  for (std::uint64_t m = 1; m <= 3000; ++m) {
    const auto l = jh::complexity_space(m);
    const auto factors = jh::oracle::factorize(m);
    // Node count and edge count from the chain-product shape.
    std::uint64_t d = 1;
    for (const auto& [p, e] : factors) d *= e + 1;
    std::uint64_t edges = 0;
    for (const auto& [p, e] : factors) edges += d * e / (e + 1);
    ASSERT_EQ(l.nodes.size(), d) << m;
    ASSERT_EQ(l.edges.size(), edges) << m;
    ASSERT_EQ(l.dimensions, factors.size());
    ASSERT_TRUE(std::is_sorted(l.nodes.begin(), l.nodes.end()));
    for (Natural node : l.nodes) ASSERT_EQ(Natural{m} % node, Natural{0});
    // Every edge joins divisors whose quotient is a prime dividing m.
    for (const auto& e : l.edges) {
      ASSERT_EQ(e.to, e.from * e.prime);
      ASSERT_EQ(Natural{m} % e.to, Natural{0});
      ASSERT_TRUE(std::any_of(factors.begin(), factors.end(), [&](auto f) { return Natural{f.first} == e.prime; }));
    }
    ASSERT_TRUE(std::is_sorted(l.edges.begin(), l.edges.end(), [](const auto& a, const auto& b) {
      return std::tie(a.from, a.prime) < std::tie(b.from, b.prime);
    }));
  }
}

TEST(ComplexitySpace, EveryPrimeQuotientPairIsAnEdge) {
  for (std::uint64_t m : {60u, 360u, 1155u, 2310u, 4096u}) {
    const auto l = jh::complexity_space(m);
    std::set<std::pair<Natural, Natural>> edges;
    for (const auto& e : l.edges) edges.emplace(e.from, e.to);
    for (Natural a : l.nodes)
      for (Natural b : l.nodes)
        if (b > a && b % a == 0 && jh::is_prime(b / a)) ASSERT_TRUE(edges.count({a, b})) << m;
  }
}

TEST(EmbedChord, Examples) {
  const auto l = jh::complexity_space(60);
  EXPECT_EQ(jh::embed_chord(l, chord({4, 5, 6})), nat({4, 5, 6}));
  EXPECT_EQ(jh::embed_chord(l, chord({10, 12, 15})), nat({10, 12, 15}));
  EXPECT_EQ(jh::embed_chord(l, chord({8, 10, 12})), nat({4, 5, 6}));
  EXPECT_THROW(jh::embed_chord(l, chord({4, 5, 7})), jh::DomainError);
}

TEST(CompleteChord, Examples) {
  EXPECT_TRUE(jh::is_complete_chord(chord({1, 2, 3, 6})));
  EXPECT_FALSE(jh::is_complete_chord(chord({1, 2, 3})));
  EXPECT_TRUE(jh::is_complete_chord(chord({1})));
  EXPECT_TRUE(jh::is_complete_chord(chord({2, 4, 6, 12})));
}

TEST(CompleteChord, DivisorSetsUpTo10000) {
  for (Natural n = 1; n <= 10000; ++n) ASSERT_TRUE(jh::is_complete_chord(Chord(jh::divisors(n)))) << jh::to_string(n);
}

TEST(Ohcn, Examples) {
  using R = jh::OddDivisorRecord;
  EXPECT_EQ(jh::ohcn_up_to(315),
            (std::vector<R>{{1, 1}, {3, 2}, {9, 3}, {15, 4}, {45, 6}, {105, 8}, {225, 9}, {315, 12}}));
  EXPECT_EQ(jh::ohcn_up_to(2), (std::vector<R>{{1, 1}}));
  EXPECT_EQ(jh::ohcn_up_to(1), (std::vector<R>{{1, 1}}));
}

TEST(Ohcn, MatchesBruteForceTo20000) {
  const auto got = jh::ohcn_up_to(20000);
  const auto want = jh::oracle::ohcn(20000);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].n, Natural{want[i].first});
    EXPECT_EQ(got[i].divisor_count, Natural{want[i].second});
  }
}

std::vector<Natural> first_occurrences(Natural limit) {
  std::vector<Natural> out;
  for (const auto& s : jh::lattice_shapes_up_to(limit)) out.push_back(s.first_occurrence);
  return out;
}

TEST(Shapes, Examples) {
  EXPECT_EQ(first_occurrences(2000), nat({1, 3, 9, 15, 27, 45, 81, 105, 135, 225, 243, 315, 405, 675, 729, 945, 1155,
                                          1215, 1575}));
  const auto small = jh::lattice_shapes_up_to(3);
  ASSERT_EQ(small.size(), 2u);
  EXPECT_TRUE(small[0].exponents.empty());
  EXPECT_EQ(small[1].exponents, (std::vector<unsigned>{1}));
  EXPECT_EQ(first_occurrences(100), nat({1, 3, 9, 15, 27, 45, 81}));
}

TEST(Shapes, MatchBruteForceSignatureScan) {
  const auto got = first_occurrences(30000);
  const auto want = jh::oracle::shape_first_occurrences(30000);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], Natural{want[i]});
}

TEST(Shapes, ExponentsNonIncreasingAndRealised) {
  const std::vector<Natural> odd_primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const auto& s : jh::lattice_shapes_up_to(100000)) {
    ASSERT_TRUE(std::is_sorted(s.exponents.rbegin(), s.exponents.rend()));
    Natural v = 1;
    for (std::size_t i = 0; i < s.exponents.size(); ++i) v *= jh::checked_pow(odd_primes.at(i), s.exponents[i]);
    ASSERT_EQ(v, s.first_occurrence);
  }
}

TEST(Shapes, EveryOhcnIsAShapeButNotConversely) {
  const auto shapes = first_occurrences(100000);
  for (const auto& r : jh::ohcn_up_to(100000))
    EXPECT_TRUE(std::binary_search(shapes.begin(), shapes.end(), r.n)) << jh::to_string(r.n);
  const auto ohcn = jh::ohcn_up_to(100000);
  EXPECT_TRUE(std::none_of(ohcn.begin(), ohcn.end(), [](const auto& r) { return r.n == 81; }));
  EXPECT_TRUE(std::binary_search(shapes.begin(), shapes.end(), Natural{81}));
}

TEST(Export, DotForSquareLattice) {
  const std::string dot = jh::export_lattice(jh::complexity_space(15), {}, jh::LatticeFormat::kDot);
  EXPECT_EQ(dot,
            "graph lattice_15 {\n"
            "  1;\n"
            "  3;\n"
            "  5;\n"
            "  15;\n"
            "  1 -- 3 [prime=3, color=red];\n"
            "  1 -- 5 [prime=5, color=green];\n"
            "  3 -- 15 [prime=5, color=green];\n"
            "  5 -- 15 [prime=3, color=red];\n"
            "}\n");
}

TEST(Export, DotSingleNode) {
  EXPECT_EQ(jh::export_lattice(jh::complexity_space(1), {}, jh::LatticeFormat::kDot), "graph lattice_1 {\n  1;\n}\n");
}

TEST(Export, DotHighlightsAndPalette) {
  const std::string dot = jh::export_lattice(jh::complexity_space(60), {4, 5, 6}, jh::LatticeFormat::kDot);
  std::size_t filled = 0;
  for (std::size_t pos = 0; (pos = dot.find("fillcolor", pos)) != std::string::npos; ++pos) ++filled;
  EXPECT_EQ(filled, 3u);
  EXPECT_NE(dot.find("  1 -- 2 [prime=2, color=blue];"), std::string::npos);
  const std::string big = jh::export_lattice(jh::complexity_space(7 * 11), {}, jh::LatticeFormat::kDot);
  EXPECT_NE(big.find("prime=7, color=orange"), std::string::npos);
  EXPECT_NE(big.find("prime=11, color=purple"), std::string::npos);
}

TEST(Export, JsonSchema) {
  const auto j = nlohmann::json::parse(jh::export_lattice(jh::complexity_space(60), {4, 5, 6}, jh::LatticeFormat::kJson));
  EXPECT_EQ(j.at("modulus"), 60);
  EXPECT_EQ(j.at("nodes").size(), 12u);
  EXPECT_EQ(j.at("highlight"), nlohmann::json::array({4, 5, 6}));
  EXPECT_EQ(j.at("edges").size(), 20u);
  EXPECT_EQ(j.at("edges")[0], (nlohmann::json{{"from", 1}, {"to", 2}, {"prime", 2}}));
}

TEST(Export, Deterministic) {
  const auto l = jh::complexity_space(2310);
  for (auto fmt : {jh::LatticeFormat::kDot, jh::LatticeFormat::kJson})
    EXPECT_EQ(jh::export_lattice(l, {1, 2, 3}, fmt), jh::export_lattice(jh::complexity_space(2310), {1, 2, 3}, fmt));
}

TEST(Export, FormatNames) {
  EXPECT_EQ(jh::parse_lattice_format("dot"), jh::LatticeFormat::kDot);
  EXPECT_EQ(jh::parse_lattice_format("json"), jh::LatticeFormat::kJson);
  EXPECT_THROW(jh::parse_lattice_format("svg"), jh::ParseError);
}

}  // namespace
