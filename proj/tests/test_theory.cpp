#include <gtest/gtest.h>

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

struct Example3 {
  GroupPtr G = fx::group("s4.grp");
  LatticePtr L = fx::share(product(*fx::lattice("figure1-M.lat"), *fx::lattice("two.lat")));
  LSubset mu = fx::load("example3.mu", G, L);
  LSubset eta = fx::load("example3.eta", G, L);
};

struct Pair {
  LSubset eta;
  LSubset mu;
};

std::vector<Pair> all_pairs(const char* group, const char* lattice) {
  const auto G = fx::group(group);
  const auto L = fx::lattice(lattice);
  std::vector<Pair> out;
  for (const auto& mu : enumerate_lsubgroups(LSubset::constant(G, L, L->top())))
    for (const auto& eta : enumerate_lsubgroups(mu)) out.push_back({eta, mu});
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST(Theory, ExampleOne) {
  Example1 ex;
  EXPECT_FALSE(is_normal(ex.eta, ex.mu));
  EXPECT_TRUE(is_abnormal(ex.eta, ex.mu));
  EXPECT_EQ(normalizer(ex.eta, ex.mu), ex.eta);
  EXPECT_EQ(ex.L->name_of(normalizer(ex.eta, ex.mu)(ex.G->parse("(2 3)"))), "a");
  EXPECT_TRUE(is_contranormal(ex.eta, ex.mu));
  EXPECT_EQ(subnormal_defect(ex.eta, ex.mu), std::nullopt);

  const auto z = ex.G->parse("(3 4)");
  const auto d = ex.L->at("d");
  const auto c = conjugate(ex.eta, {d, z}, ex.mu);
  const auto H1 = level_set(ex.eta, ex.L->at("a"));
  const auto H2 = level_set(ex.eta, ex.L->at("b"));
  for (auto x : ex.G->elements()) {
    std::string want = "l";
    if (x == ex.G->identity() || x == ex.G->parse("(1 2)"))
      want = "d";
    else if (set_contains(H2, x))
      want = "a";
    else if (set_contains(H1, x))
      want = "b";
    EXPECT_EQ(ex.L->name_of(c(x)), want) << ex.G->format(x);
  }
  const auto joined = generated(lsub_union(ex.eta, c), ex.mu);
  EXPECT_EQ(ex.L->name_of(joined(z)), "d");
}

TEST(Theory, ExampleThree) {
  Example3 ex;
  EXPECT_TRUE(is_lsubgroup(ex.eta, ex.mu));
  EXPECT_FALSE(is_normal(ex.eta, ex.mu));
  EXPECT_TRUE(is_abnormal(ex.eta, ex.mu));
  EXPECT_EQ(is_maximal(ex.eta, ex.mu).maximal, Tri::True);
  for (const char* t : {"(a,0)", "(b,0)", "(c,0)"}) {
    const auto h = level_set(ex.eta, ex.L->at(t));
    EXPECT_EQ(h.size(), 8u);
    EXPECT_FALSE(is_normal_subgroup(*ex.G, ex.G->elements(), h));
  }
  EXPECT_EQ(level_set(ex.eta, ex.L->at("(a,1)")).size(), 4u);
}

TEST(Theory, Errors) {
  Example1 ex;
  EXPECT_EQ(code_of([&] { conjugate(ex.eta, {ex.L->top(), ex.G->parse("(1 3)")}, ex.mu); }), ErrorCode::PointNotInParent);
  EXPECT_EQ(code_of([&] { is_maximal(ex.mu, ex.mu); }), ErrorCode::NotProper);
  try {
    classify(ex.mu, ex.eta);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationError);
    EXPECT_NE(std::string(e.what()).find("subject not contained in parent"), std::string::npos);
  }
  const auto bad = fx::from_table(ex.G, ex.L, "l", {{{"(1 2)"}, "d"}});
  EXPECT_EQ(code_of([&] { normalizer(bad, ex.mu); }), ErrorCode::NotAnLSubgroup);
  const auto r = classify(bad, ex.mu);
  EXPECT_FALSE(r.is_lsubgroup);
  EXPECT_FALSE(r.normalizer);
}

TEST(Theory, SubnormalDefect) {
  Example1 ex;
  EXPECT_EQ(subnormal_defect(ex.mu, ex.mu), 0u);
  const auto t = trivial_lsubgroup(ex.mu);
  EXPECT_EQ(subnormal_defect(t, ex.mu), 1u);
  const auto S4 = ex.G;
  const auto two = fx::lattice("two.lat");
  auto chi = [&](std::initializer_list<const char*> gens) {
    std::vector<GroupElement> s;
    for (auto g : gens) s.push_back(S4->parse(g));
    return characteristic(S4, two, subgroup_generated(*S4, s));
  };
  // S4 -> V4 -> <(12)(34)>.
  EXPECT_EQ(subnormal_defect(chi({"(1 2)(3 4)"}), chi({"(1 2)", "(1 2 3 4)"})), 2u);
  EXPECT_EQ(subnormal_defect(chi({"(1 2)"}), chi({"(1 2)", "(1 2 3 4)"})), std::nullopt);
}

TEST(Theory, ConjugateLaws) {
  Example1 ex;
  std::mt19937 rng(9);
  const auto els = ex.G->elements();
  const auto lat = ex.L->elements();
  for (int round = 0; round < 200; ++round) {
    const auto z = els[rng() % els.size()];
    const auto a = ex.L->meet(lat[rng() % lat.size()], ex.mu(z));
    const auto b = ex.L->meet(lat[rng() % lat.size()], ex.mu(ex.G->inv(z)));
    const auto once = conjugate(ex.eta, {a, z}, ex.mu);
    const auto back = conjugate(once, {b, ex.G->inv(z)}, ex.mu);
    for (auto x : els) EXPECT_EQ(back(x), ex.L->meet(ex.L->meet(a, b), ex.eta(x)));
    EXPECT_TRUE(is_lsubgroup(once));
  }
  EXPECT_EQ(conjugate(ex.eta, {ex.L->top(), ex.G->identity()}, ex.mu), ex.eta);
}

TEST(Theory, NormalityRoutesAgree) {
  for (const auto& [g, l] : {std::pair{"s3.grp", "figure1-M.lat"}, std::pair{"d4.grp", "three.lat"}})
    for (const auto& p : all_pairs(g, l)) {
      const bool wu = detail::normal_by_wu(p.eta, p.mu);
      EXPECT_EQ(wu, detail::normal_by_conjugates(p.eta, p.mu));
      EXPECT_EQ(wu, detail::normal_by_levels(p.eta, p.mu));
    }
}

TEST(Theory, WuMutationIsDetected) {
  Example1 ex;
  testing_hooks::flip_wu_inequality = true;
  const auto code = code_of([&] { is_normal(ex.mu, ex.mu); });
  testing_hooks::flip_wu_inequality = false;
  EXPECT_EQ(code, ErrorCode::InternalInconsistency);
  EXPECT_FALSE(is_normal(ex.eta, ex.mu));
}

// On distributive lattices the normalizer is the largest L-subgroup of mu
// in which eta is normal, and the normal closure is the smallest normal
// L-subgroup of mu above eta.
TEST(Theory, NormalizerAndClosureExtremality) {
  for (const auto& [g, l] : {std::pair{"s3.grp", "three.lat"}, std::pair{"s3.grp", "square.lat"},
                             std::pair{"z6.grp", "three.lat"}, std::pair{"d4.grp", "two.lat"}}) {
    const auto G = fx::group(g);
    const auto L = fx::lattice(l);
    for (const auto& mu : enumerate_lsubgroups(LSubset::constant(G, L, L->top()))) {
      const auto subs = enumerate_lsubgroups(mu);
      for (const auto& eta : subs) {
        const auto N = normalizer(eta, mu);
        const auto C = normal_closure(eta, mu);
        ASSERT_TRUE(is_lsubgroup(N, mu)) << g << " " << l;
        ASSERT_TRUE(is_lsubgroup(C, mu));
        EXPECT_TRUE(is_subset(eta, N));
        EXPECT_TRUE(is_normal(eta, N));
        EXPECT_TRUE(is_subset(eta, C));
        EXPECT_TRUE(is_normal(C, mu));
        for (const auto& theta : subs) {
          if (!is_subset(eta, theta)) continue;
          if (is_normal(eta, theta)) EXPECT_TRUE(is_subset(theta, N));
          if (is_normal(theta, mu)) EXPECT_TRUE(is_subset(C, theta));
        }
      }
    }
  }
}

TEST(Theory, MaximalityAgainstExhaustiveScan) {
  for (const auto& [g, l] : {std::pair{"s3.grp", "three.lat"}, std::pair{"s3.grp", "square.lat"}}) {
    const auto G = fx::group(g);
    const auto L = fx::lattice(l);
    const auto top = LSubset::constant(G, L, L->top());
    const auto mus = enumerate_lsubgroups(top);
    for (std::size_t i = 0; i < mus.size(); i += 3) {
      const auto& mu = mus[i];
      for (const auto& eta : enumerate_lsubgroups(mu)) {
        if (!is_proper(eta, mu)) continue;
        const bool oracle = fx::oracle_interval(eta, mu).size() == 2;
        EXPECT_EQ(is_maximal(eta, mu).maximal == Tri::True, oracle);
      }
    }
  }
}

TEST(Theory, ContranormalRoutesAgree) {
  for (const auto& [g, l] : {std::pair{"s3.grp", "three.lat"}, std::pair{"z6.grp", "square.lat"},
                             std::pair{"s3.grp", "figure1-M.lat"}}) {
    for (const auto& p : all_pairs(g, l)) {
      const auto search = contranormal_by_containers(p.eta, p.mu);
      ASSERT_NE(search, Tri::BudgetExceeded);
      EXPECT_EQ(search == Tri::True, is_contranormal(p.eta, p.mu)) << g << " " << l;
    }
  }
}

TEST(Theory, AbnormalImpliesSelfNormalizingAndContranormal) {
  for (const auto& [g, l] : {std::pair{"s3.grp", "three.lat"}, std::pair{"d4.grp", "square.lat"}})
    for (const auto& p : all_pairs(g, l)) {
      if (!is_abnormal(p.eta, p.mu)) continue;
      EXPECT_TRUE(is_self_normalizing(p.eta, p.mu));
      EXPECT_TRUE(is_contranormal(p.eta, p.mu));
    }
}

// A maximal L-subgroup over M that is neither normal nor abnormal.
TEST(Theory, MaximalNeitherNormalNorAbnormalOverM) {
  const auto G = fx::group("s3.grp");
  const auto M = fx::lattice("figure1-M.lat");
  auto valuation = [&](std::initializer_list<const char*> names) {
    std::vector<LatticeElement> v;
    for (auto n : names) v.push_back(M->at(n));
    return LSubset(G, M, v);
  };
  const auto els = G->elements();
  ASSERT_EQ(G->format(els[0]), "()");
  const auto mu = valuation({"d", "a", "a", "a", "d", "a"});
  const auto eta = valuation({"d", "f", "f", "a", "b", "f"});
  ASSERT_TRUE(is_lsubgroup(eta, mu));
  EXPECT_EQ(is_maximal(eta, mu).maximal, Tri::True);
  EXPECT_FALSE(is_normal(eta, mu));
  EXPECT_FALSE(is_abnormal(eta, mu));
  const auto w = abnormality_witness(eta, mu);
  ASSERT_TRUE(w);
  const auto both = lsub_union(eta, conjugate(eta, *w, mu));
  EXPECT_FALSE(M->leq(w->a, detail::generated_unchecked(both)(w->x)));
  EXPECT_FALSE(is_distributive(*M));
}

TEST(Theory, ClassifyReport) {
  Example1 ex;
  const auto r = classify(ex.eta, ex.mu);
  EXPECT_TRUE(r.is_lsubgroup);
  EXPECT_TRUE(r.proper);
  EXPECT_FALSE(r.normal);
  EXPECT_TRUE(r.abnormal);
  EXPECT_TRUE(r.contranormal);
  EXPECT_TRUE(r.self_normalizing);
  EXPECT_EQ(ex.L->name_of(r.tip), "u");
  EXPECT_EQ(ex.L->name_of(r.tail), "l");

  const auto self = classify(ex.mu, ex.mu);
  EXPECT_FALSE(self.proper);
  EXPECT_TRUE(self.normal);
  EXPECT_TRUE(self.abnormal);
  EXPECT_EQ(self.subnormal_defect, 0u);
  EXPECT_EQ(self.maximal, Tri::False);
}

TEST(Theory, MaximalityBudget) {
  Example3 ex;
  const auto r = is_maximal(ex.eta, ex.mu, 1);
  EXPECT_EQ(r.maximal, Tri::BudgetExceeded);
  const auto t = trivial_lsubgroup(ex.mu);
  const auto s = is_maximal(t, ex.mu);
  EXPECT_EQ(s.maximal, Tri::False);
  ASSERT_TRUE(s.witness);
  EXPECT_TRUE(is_lsubgroup(*s.witness, ex.mu));
  EXPECT_TRUE(is_subset(t, *s.witness));
  EXPECT_NE(*s.witness, t);
  EXPECT_NE(*s.witness, ex.mu);
}

// f(eta^{a_z}) = f(eta)^{a_f(z)} needs a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) when f
// merges elements. The sign map S3 -> Z2 breaks it over M but not over L1.
TEST(Theory, ConjugateImageUnderSignMap) {
  const auto S3 = fx::group("s3.grp");
  const auto Z2 = std::make_shared<const FiniteGroup>(group_from_generators("Z2", 2, {parse_permutation("(1 2)", 2)}));
  const auto sign = hom_from_images(S3, Z2, {{S3->parse("(1 2)"), Z2->parse("(1 2)")}, {S3->parse("(1 2 3)"), Z2->identity()}});
  auto mismatches = [&](const char* lattice) {
    std::size_t bad = 0;
    for (const auto& p : all_pairs("s3.grp", lattice)) {
      const auto& L = p.eta.lattice();
      for (auto z : S3->elements())
        for (auto a : L.elements()) {
          if (!L.leq(a, p.mu(z))) continue;
          const auto lhs = image(sign, conjugate(p.eta, {a, z}, p.mu));
          const auto rhs = detail::conjugate_unchecked(image(sign, p.eta), a, sign(z));
          bad += !(lhs == rhs);
        }
    }
    return bad;
  };
  EXPECT_EQ(mismatches("example1.lat"), 0u);
  EXPECT_EQ(mismatches("three.lat"), 0u);
  EXPECT_GT(mismatches("figure1-M.lat"), 0u);
}
