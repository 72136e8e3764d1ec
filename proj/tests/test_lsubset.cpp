#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"

using namespace lgroup;

namespace {

struct Example1 {
  GroupPtr G = fx::group("s4.grp");
  LatticePtr L = fx::lattice("example1.lat");
  LSubset mu = fx::load("example1.mu", G, L);
  LSubset eta = fx::load("example1.eta", G, L);
};

ElementSet gen(const FiniteGroup& G, std::initializer_list<const char*> cycles) {
  std::vector<GroupElement> s;
  for (const char* c : cycles) s.push_back(G.parse(c));
  return subgroup_generated(G, s);
}

// Smallest L-subgroup of mu above nu: pointwise meet of every container.
LSubset oracle_generated(const LSubset& nu, const LSubset& mu) {
  std::vector<LatticeElement> v(nu.group().order(), nu.lattice().top());
  for (const auto& t : fx::oracle_interval(nu, mu))
    for (auto x : nu.group().elements()) v[x.id] = nu.lattice().meet(v[x.id], t(x));
  return LSubset(nu.group_ptr(), nu.lattice_ptr(), std::move(v));
}

}  // namespace

TEST(LSubset, LevelSets) {
  Example1 ex;
  EXPECT_EQ(level_set(ex.mu, ex.L->at("u")), gen(*ex.G, {"(1 2)"}));
  EXPECT_EQ(level_set(ex.eta, ex.L->at("a")), gen(*ex.G, {"(1 2)", "(1 2 3)"}));
  EXPECT_EQ(level_set(ex.eta, ex.L->at("b")), gen(*ex.G, {"(1 2)", "(1 2 4)"}));
  EXPECT_EQ(level_set(ex.eta, ex.L->bottom()).size(), 24u);
  EXPECT_THROW(level_set(ex.eta, LatticeElement{77}), Error);
}

TEST(LSubset, IsLSubgroup) {
  Example1 ex;
  EXPECT_TRUE(is_lsubgroup(ex.eta, ex.mu));
  const auto M = fx::lattice("figure1-M.lat");
  const auto M2 = fx::share(product(*M, *fx::lattice("two.lat")));
  EXPECT_TRUE(is_lsubgroup(fx::load("example3.eta", ex.G, M2), fx::load("example3.mu", ex.G, M2)));

  const auto S3 = fx::group("s3.grp");
  const auto top = LSubset::constant(S3, M, M->top());
  const auto bad = fx::from_table(S3, M, "l", {{{"()", "(1 2)", "(1 3)"}, "u"}});
  EXPECT_FALSE(is_lsubgroup(bad, top));
  EXPECT_THROW(is_lsubgroup(ex.eta, top), Error);
}

// The seven-element M cannot carry Example 1: with a ∧ b = f the level set
// at f is H1 ∪ H2, which is not a subgroup.
TEST(LSubset, ExampleOneValuesOverMAreNotAnLSubgroup) {
  const auto G = fx::group("s4.grp");
  const auto M = fx::lattice("figure1-M.lat");
  const auto L1 = fx::lattice("example1.lat");
  const auto eta1 = fx::load("example1.eta", G, L1);
  std::vector<LatticeElement> v;
  for (auto x : G->elements()) v.push_back(M->at(L1->name_of(eta1(x))));
  const LSubset eta(G, M, v);
  EXPECT_FALSE(is_lsubgroup(eta));
  EXPECT_FALSE(is_subgroup(*G, level_set(eta, M->at("f"))));
  const auto x = G->parse("(1 4 3)");
  EXPECT_EQ(M->name_of(eta(x)), "l");
}

TEST(LSubset, Characteristic) {
  const auto S4 = fx::group("s4.grp");
  const auto two = fx::lattice("two.lat");
  const auto v4 = gen(*S4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  EXPECT_EQ(level_set(characteristic(S4, two, v4), two->top()), v4);
  EXPECT_TRUE(characteristic(S4, two, S4->elements()).is_constant());
  const auto M = fx::lattice("figure1-M.lat");
  const auto c = characteristic(S4, M, gen(*S4, {"(1 2)"}));
  EXPECT_EQ(M->name_of(c.tip()), "u");
  EXPECT_EQ(M->name_of(c.tail()), "l");
  EXPECT_THROW(characteristic(S4, two, make_set({S4->parse("(1 2)")})), Error);
}

TEST(LSubset, TrivialLSubgroup) {
  Example1 ex;
  const auto t = trivial_lsubgroup(ex.eta);
  for (auto x : ex.G->elements()) EXPECT_EQ(ex.L->name_of(t(x)), x == ex.G->identity() ? "u" : "l");
  const auto c = LSubset::constant(ex.G, ex.L, ex.L->at("a"));
  EXPECT_EQ(trivial_lsubgroup(c), c);
  EXPECT_TRUE(is_normal(t, ex.mu));
  EXPECT_TRUE(is_normal(trivial_lsubgroup(ex.mu), ex.mu));
}

TEST(LSubset, SetProduct) {
  const auto S4 = fx::group("s4.grp");
  const auto two = fx::lattice("two.lat");
  const auto H = gen(*S4, {"(1 2)"});
  const auto K = gen(*S4, {"(3 4)"});
  ElementSet hk;
  for (auto h : H)
    for (auto k : K) hk.push_back(S4->mul(h, k));
  hk = make_set(hk);
  const auto p = set_product(characteristic(S4, two, H), characteristic(S4, two, K));
  EXPECT_EQ(level_set(p, two->top()), hk);
  EXPECT_EQ(hk.size(), 4u);

  Example1 ex;
  EXPECT_EQ(set_product(ex.mu, ex.mu), ex.mu);
  const auto a = ex.L->at("a");
  std::vector<LatticeElement> pt(ex.G->order(), ex.L->bottom());
  pt[ex.G->identity().id] = a;
  const auto ae = LSubset(ex.G, ex.L, pt);
  const auto lhs = set_product(ae, ex.eta);
  for (auto x : ex.G->elements()) EXPECT_EQ(lhs(x), ex.L->meet(a, ex.eta(x)));
}

TEST(LSubset, Generated) {
  Example1 ex;
  EXPECT_EQ(generated(ex.eta, ex.mu), ex.eta);
  const auto S4 = ex.G;
  const auto two = fx::lattice("two.lat");
  const auto crisp = make_set({S4->parse("(1 2)"), S4->parse("(3 4)")});
  std::vector<LatticeElement> v(S4->order(), two->bottom());
  for (auto x : crisp) v[x.id] = two->top();
  const auto top = LSubset::constant(S4, two, two->top());
  EXPECT_EQ(generated(LSubset(S4, two, v), top), characteristic(S4, two, subgroup_generated(*S4, crisp)));
  EXPECT_THROW(generated(ex.mu, ex.eta), Error);
}

TEST(LSubset, GeneratedIsSmallestContainerOnDistributiveLattices) {
  std::mt19937 rng(3);
  for (const char* lat : {"three.lat", "square.lat"}) {
    const auto G = fx::group("s3.grp");
    const auto L = fx::lattice(lat);
    const auto mus = enumerate_lsubgroups(LSubset::constant(G, L, L->top()));
    for (int round = 0; round < 40; ++round) {
      const auto& mu = mus[rng() % mus.size()];
      std::vector<LatticeElement> v(G->order());
      for (auto x : G->elements()) {
        std::vector<LatticeElement> options;
        for (auto a : L->elements())
          if (L->leq(a, mu(x))) options.push_back(a);
        v[x.id] = options[rng() % options.size()];
      }
      const LSubset nu(G, L, v);
      const auto g = generated(nu, mu);
      EXPECT_TRUE(is_lsubgroup(g, mu));
      EXPECT_EQ(g, oracle_generated(nu, mu)) << lat;
    }
  }
}

// On M the closure and normalizer formulas can leave the class of
// L-subgroups. Frozen counts over all pairs eta <= mu <= 1.
TEST(LSubset, FormulasOnMCanFailToBeLSubgroups) {
  const auto M = fx::lattice("figure1-M.lat");
  auto count = [&](const char* g) {
    const auto G = fx::group(g);
    std::pair<std::size_t, std::size_t> bad{0, 0};
    for (const auto& mu : enumerate_lsubgroups(LSubset::constant(G, M, M->top())))
      for (const auto& eta : enumerate_lsubgroups(mu)) {
        bad.first += !is_lsubgroup(normal_closure(eta, mu));
        bad.second += !is_lsubgroup(normalizer(eta, mu));
      }
    return bad;
  };
  EXPECT_EQ(count("s3.grp"), (std::pair<std::size_t, std::size_t>{0, 954}));
  EXPECT_EQ(count("d4.grp"), (std::pair<std::size_t, std::size_t>{528, 5928}));
}

TEST(LSubset, SupProperty) {
  Example1 ex;
  EXPECT_TRUE(has_sup_property(ex.mu));
  const auto M = fx::lattice("figure1-M.lat");
  const auto S3 = fx::group("s3.grp");
  const auto x = fx::from_table(S3, M, "l", {{{"(1 2)"}, "a"}, {{"(1 3)"}, "b"}});
  EXPECT_FALSE(has_sup_property(x));
  const auto C = fx::chain(4);
  fx::for_each_valuation(fx::group("z6.grp"), fx::chain(2), [](const LSubset& e) { EXPECT_TRUE(has_sup_property(e)); });
  EXPECT_TRUE(has_sup_property(LSubset::constant(S3, C, C->top())));
}

TEST(LSubset, JointlySupstar) {
  Example1 ex;
  EXPECT_FALSE(jointly_supstar(ex.eta, ex.mu));
  const auto C = fx::chain(3);
  const auto S3 = fx::group("s3.grp");
  const auto m = LSubset::constant(S3, C, C->top());
  EXPECT_TRUE(jointly_supstar(m, m));
  const auto two = fx::lattice("two.lat");
  const auto all = S3->elements();
  EXPECT_TRUE(jointly_supstar(characteristic(S3, two, all), characteristic(S3, two, gen(*S3, {"(1 2)"}))));
}

TEST(LSubset, ImageAndPreimage) {
  const auto S4 = fx::group("s4.grp");
  Example1 ex;
  const auto id = identity_hom(S4);
  EXPECT_EQ(image(id, ex.eta), ex.eta);
  EXPECT_EQ(preimage(id, ex.eta), ex.eta);

  const auto Q = std::make_shared<const FiniteGroup>(
      group_from_generators("Q", 3, {parse_permutation("(1 2)", 3), parse_permutation("(1 3)", 3)}));
  const auto q = hom_from_images(S4, Q, {{S4->parse("(1 2)"), Q->parse("(1 2)")}, {S4->parse("(1 2 3 4)"), Q->parse("(1 3)")}});
  const auto M2 = fx::share(product(*fx::lattice("figure1-M.lat"), *fx::lattice("two.lat")));
  const auto mu3 = fx::load("example3.mu", S4, M2);
  EXPECT_EQ(M2->name_of(image(q, mu3)(q(S4->parse("(1 2)")))), "(d,0)");

  for (const auto& e : {ex.eta, ex.mu}) {
    EXPECT_TRUE(is_subset(e, preimage(q, image(q, e))));
    EXPECT_EQ(preimage(id, image(id, e)), e);
  }
}

TEST(LSubset, ImageLaws) {
  const auto S4 = fx::group("s4.grp");
  const auto Q = std::make_shared<const FiniteGroup>(
      group_from_generators("Q", 3, {parse_permutation("(1 2)", 3), parse_permutation("(1 3)", 3)}));
  const auto q = hom_from_images(S4, Q, {{S4->parse("(1 2)"), Q->parse("(1 2)")}, {S4->parse("(1 2 3 4)"), Q->parse("(1 3)")}});
  const auto L = fx::lattice("example1.lat");
  std::mt19937 rng(11);
  auto random_lsubset = [&](const GroupPtr& G) {
    std::vector<LatticeElement> v(G->order());
    for (auto& x : v) x = LatticeElement{static_cast<std::uint16_t>(rng() % L->size())};
    return LSubset(G, L, v);
  };
  for (int round = 0; round < 100; ++round) {
    const auto a = random_lsubset(S4);
    const auto b = random_lsubset(S4);
    EXPECT_EQ(image(q, lsub_union(a, b)), lsub_union(image(q, a), image(q, b)));
    EXPECT_TRUE(is_subset(image(q, lsub_intersection(a, b)), lsub_intersection(image(q, a), image(q, b))));
    const auto nu = random_lsubset(Q);
    EXPECT_EQ(image(q, preimage(q, nu)), nu);
  }
}

TEST(LSubset, IntersectionOfLSubgroups) {
  const auto G = fx::group("d4.grp");
  const auto L = fx::lattice("figure1-M.lat");
  const auto mu = LSubset::constant(G, L, L->top());
  const auto all = enumerate_lsubgroups(mu);
  std::mt19937 rng(5);
  for (int round = 0; round < 300; ++round) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    EXPECT_TRUE(is_lsubgroup(lsub_intersection(a, b), mu));
  }
}

TEST(LSubset, LevelCriterionAgainstOracle) {
  for (const char* lat : {"three.lat", "square.lat"}) {
    const auto G = fx::group("s3.grp");
    const auto L = fx::lattice(lat);
    fx::for_each_valuation(G, L, [&](const LSubset& eta) {
      EXPECT_EQ(is_lsubgroup(eta), fx::oracle_lsubgroup(eta));
      const bool levels = detail::lsubgroup_levels(eta, nullptr);
      EXPECT_EQ(levels, fx::oracle_lsubgroup(eta));
    });
  }
}

TEST(LSubset, Monotonicity) {
  Example1 ex;
  for (auto a : ex.L->elements()) EXPECT_TRUE(is_subset_of(level_set(ex.eta, a), level_set(ex.mu, a)));
}

TEST(LSubset, EnumerationMatchesExhaustiveScan) {
  struct Case {
    const char* group;
    const char* lattice;
  };
  for (const auto& [g, l] : {Case{"s3.grp", "two.lat"}, Case{"s3.grp", "three.lat"}, Case{"z6.grp", "three.lat"},
                             Case{"s3.grp", "square.lat"}, Case{"s3.grp", "figure1-M.lat"}}) {
    const auto G = fx::group(g);
    const auto L = fx::lattice(l);
    const auto top = LSubset::constant(G, L, L->top());
    const auto bottom = LSubset::constant(G, L, L->bottom());
    auto fast = enumerate_lsubgroups(top);
    auto slow = fx::oracle_interval(bottom, top);
    auto key = [](const LSubset& e) {
      std::vector<std::uint16_t> k;
      for (auto v : e.values()) k.push_back(v.id);
      return k;
    };
    std::vector<std::vector<std::uint16_t>> a, b;
    for (const auto& e : fast) a.push_back(key(e));
    for (const auto& e : slow) b.push_back(key(e));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b) << g << " " << l;
  }
}

// Frozen counts of L-subgroups of the constant-top valuation.
TEST(LSubset, EnumerationCounts) {
  auto count = [](const char* g, const char* l) {
    const auto G = fx::group(g);
    const auto L = fx::lattice(l);
    return enumerate_lsubgroups(LSubset::constant(G, L, L->top())).size();
  };
  EXPECT_EQ(count("s3.grp", "two.lat"), 7u);
  EXPECT_EQ(count("s3.grp", "three.lat"), 22u);
  EXPECT_EQ(count("s3.grp", "figure1-M.lat"), 305u);
  EXPECT_EQ(count("d4.grp", "two.lat"), 11u);
  EXPECT_EQ(count("d4.grp", "three.lat"), 45u);
  EXPECT_EQ(count("z6.grp", "three.lat"), 14u);
  EXPECT_EQ(count("s4.grp", "two.lat"), 31u);
}
