#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lgroup/error.hpp"
#include "lgroup/group.hpp"
#include "lgroup/io.hpp"
#include "lgroup/lattice.hpp"
#include "lgroup/lsubset.hpp"
#include "lgroup/theory.hpp"

namespace lgroup {

struct Failure {
  std::string case_id;
  std::string expected;
  std::string actual;
};

/// Run/pass/skip counts for one named check.
struct Tally {
  std::size_t run = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
};

struct SuiteResult {
  std::string name;
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  std::size_t skipped = 0;
  std::size_t failed_total = 0;
  std::vector<Failure> failures;  // at most kKeptFailures per tally key
  std::map<std::string, Tally> tallies;
  double wall_seconds = 0;

  bool ok() const noexcept { return cases_passed == cases_run; }
};

struct SuiteOptions {
  std::filesystem::path assets;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 0;  // 0: LGROUP_WORKERS or hardware concurrency
};

/// LGROUP_WORKERS if set to a positive integer, else the hardware
/// concurrency (at least 1).
inline unsigned worker_count() {
  if (const char* env = std::getenv("LGROUP_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs job(i) for i in [0, n) on up to `workers` threads. The first
/// exception thrown by a job is rethrown after all threads join.
inline void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& job) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; !failed && (i = next.fetch_add(1)) < n;) {
        try {
          job(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Collects outcomes for one slice of a suite. Slices are merged in a fixed
/// order so results do not depend on scheduling.
class Recorder {
 public:
  static constexpr std::size_t kKeptFailures = 20;

  /// Prepended to every key as "scope/key" when non-empty.
  std::string scope;

  void pass(const std::string& key) {
    auto& t = tallies_[scoped(key)];
    ++t.run;
    ++t.passed;
  }
  void skip(const std::string& key) { ++tallies_[scoped(key)].skipped; }
  void fail(const std::string& key, std::string case_id, std::string expected, std::string actual) {
    auto& t = tallies_[scoped(key)];
    ++t.run;
    auto& kept = kept_[scoped(key)];
    if (kept.size() < kKeptFailures) kept.push_back(Failure{std::move(case_id), std::move(expected), std::move(actual)});
  }
  void check(const std::string& key, bool ok, const std::function<std::string()>& case_id, std::string expected,
             const std::function<std::string()>& actual) {
    if (ok)
      pass(key);
    else
      fail(key, case_id(), std::move(expected), actual());
  }

  void merge_into(SuiteResult& r, std::map<std::string, std::size_t>& kept_count) const {
    for (const auto& [key, t] : tallies_) {
      auto& dst = r.tallies[key];
      dst.run += t.run;
      dst.passed += t.passed;
      dst.skipped += t.skipped;
    }
    for (const auto& [key, list] : kept_) {
      auto& n = kept_count[key];
      for (const auto& f : list)
        if (n < kKeptFailures) {
          r.failures.push_back(f);
          ++n;
        }
    }
  }

 private:
  std::string scoped(const std::string& key) const { return scope.empty() ? key : scope + "/" + key; }

  std::map<std::string, Tally> tallies_;
  std::map<std::string, std::vector<Failure>> kept_;
};

inline void finish(SuiteResult& r, const std::vector<Recorder>& slices,
                   std::chrono::steady_clock::time_point started) {
  std::map<std::string, std::size_t> kept;
  for (const auto& s : slices) s.merge_into(r, kept);
  for (const auto& [key, t] : r.tallies) {
    r.cases_run += t.run;
    r.cases_passed += t.passed;
    r.skipped += t.skipped;
  }
  r.failed_total = r.cases_run - r.cases_passed;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace suite_detail {

inline std::string valuation(const LSubset& eta) {
  std::string s = "[";
  for (auto v : eta.values()) {
    if (s.size() > 1) s += ",";
    s += eta.lattice().name_of(v);
  }
  return s + "]";
}

inline std::string set_text(const FiniteGroup& G, const ElementSet& s) {
  std::string out = "{";
  for (auto x : s) {
    if (out.size() > 1) out += " ";
    out += G.format(x, ",");
  }
  return out + "}";
}

inline std::string yes(bool b) { return b ? "true" : "false"; }

inline std::vector<LatticeElement> image_union(const LSubset& a, const LSubset& b) {
  auto im = a.image();
  for (auto v : b.image()) im.push_back(v);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

inline bool within(const std::vector<LatticeElement>& small, const std::vector<LatticeElement>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace suite_detail

// ---------------------------------------------------------------------------
// Theorem suite

struct NamedHom {
  std::string name;
  std::shared_ptr<const Homomorphism> map;
};

struct Instance {
  std::string name;
  GroupPtr group;
  LatticePtr lattice;
  std::vector<NamedHom> homs;
};

/// Every theorem-level property on one pair (eta, mu), eta an L-subgroup of mu.
inline void check_theorems(const Instance& inst, const LSubset& eta, const LSubset& mu, std::uint64_t budget,
                           Recorder& rec) {
  using namespace suite_detail;
  const auto& G = *inst.group;
  const auto& L = *inst.lattice;
  const auto id = [&] { return inst.name + " mu=" + valuation(mu) + " eta=" + valuation(eta); };
  const bool chain = is_chain(L);

  // Self-consistency of the multi-route predicates.
  const bool wu = detail::normal_by_wu(eta, mu);
  const bool by_conj = detail::normal_by_conjugates(eta, mu);
  const bool by_levels = detail::normal_by_levels(eta, mu);
  rec.check("normal_routes", wu == by_conj && wu == by_levels, id, "wu = conjugates = levels", [&] {
    return "wu=" + yes(wu) + " conjugates=" + yes(by_conj) + " levels=" + yes(by_levels);
  });
  const bool normal = wu;

  std::optional<LSubset> cc;
  {
    std::vector<LatticeElement> by_union(G.order(), L.bottom());
    for (auto z : G.elements())
      for (auto a : L.elements())
        if (L.leq(a, mu(z))) {
          const auto c = detail::conjugate_unchecked(eta, a, z);
          for (auto x : G.elements()) by_union[x.id] = L.join(by_union[x.id], c(x));
        }
    try {
      cc = detail::conjugate_closure_unchecked(eta, mu);
      rec.check("closure_union", std::equal(by_union.begin(), by_union.end(), cc->values().begin()), id,
                "conjugate closure = union of conjugates", [&] { return "differ"; });
    } catch (const Error& e) {
      rec.fail("closure_union", id(), "conjugate closure = union of conjugates", e.what());
      return;
    }
  }
  const auto nc = detail::generated_unchecked(*cc);
  const auto N = detail::normalizer_unchecked(eta, mu);

  for (const LSubset* v : std::initializer_list<const LSubset*>{&eta, &mu, &*cc, &nc, &N}) {
    const bool ax = detail::lsubgroup_axioms(*v);
    const bool lv = detail::lsubgroup_levels(*v, nullptr);
    rec.check("lsubgroup_routes", ax == lv, id, "axioms = levels",
              [&] { return "axioms=" + yes(ax) + " levels=" + yes(lv) + " on " + valuation(*v); });
  }

  const auto witness = detail::abnormality_witness_unchecked(eta, mu);
  const bool abnormal = !witness;
  const bool contranormal = nc == mu;
  const bool equal = eta == mu;
  const bool proper = is_proper(eta, mu);
  const bool self_normalizing = N == eta;
  const auto facts = [&] {
    return "normal=" + yes(normal) + " abnormal=" + yes(abnormal) + " contranormal=" + yes(contranormal) +
           " equal=" + yes(equal);
  };

  rec.check("abn_nor", !(normal && abnormal) || equal, id, "normal and abnormal only when eta = mu", facts);
  rec.check("norm_abn", !abnormal || self_normalizing, id, "abnormal => N(eta) = eta",
            [&] { return "N(eta)=" + valuation(N); });
  rec.check("abn_contra", !abnormal || contranormal, id, "abnormal => contranormal", facts);
  rec.check("con_sub_normal", !(contranormal && normal) || equal, id, "contranormal and normal only when eta = mu",
            facts);
  if (contranormal && proper) {
    std::optional<std::size_t> defect;
    std::string error;
    try {
      defect = subnormal_defect(eta, mu);
    } catch (const Error& e) {
      error = e.what();
    }
    rec.check("con_sub_defect", error.empty() && !defect, id, "proper contranormal => not subnormal", [&] {
      return error.empty() ? "defect " + std::to_string(*defect) : error;
    });
  }

  if (proper) {
    const auto m = is_maximal(eta, mu, budget);
    if (m.maximal == Tri::BudgetExceeded) {
      rec.skip("max_normal_or_abnormal");
      rec.skip("max_normal_or_contranormal");
    } else if (m.maximal == Tri::True) {
      rec.check("max_normal_or_abnormal", normal || abnormal, id, "maximal => normal or abnormal", [&] {
        return facts() + " witness=" + L.name_of(witness->a) + "_" + G.format(witness->x, ",");
      });
      rec.check("max_normal_or_contranormal", normal || contranormal, id, "maximal => normal or contranormal", facts);
      if (jointly_supstar(eta, mu))
        rec.check("max_supstar_normal_or_abnormal", normal || abnormal, id,
                  "maximal, jointly supstar => normal or abnormal", facts);
    }
  }

  // Level-subset theorems.
  const auto tip = eta.tip();
  bool all_levels_abnormal = true;
  bool all_levels_contranormal = true;
  for (auto t : L.elements()) {
    if (!L.leq(t, tip)) continue;
    const auto h = level_set(eta, t);
    const auto k = level_set(mu, t);
    all_levels_abnormal = all_levels_abnormal && classical_is_abnormal(G, k, h);
    all_levels_contranormal = all_levels_contranormal && classical_is_contranormal(G, k, h);
  }
  if (tip == mu.tip() && all_levels_abnormal)
    rec.check("levsub1_forward", abnormal, id, "abnormal levels => abnormal", facts);
  if (chain && abnormal)
    rec.check("levsub1_converse", all_levels_abnormal, id, "abnormal => every level abnormal",
              [] { return "some level not abnormal"; });
  const bool joint = jointly_supstar(eta, mu);
  if (chain && joint && contranormal)
    rec.check("lev_contra_forward", all_levels_contranormal, id, "contranormal => every level contranormal",
              [] { return "some level not contranormal"; });
  if (tip == mu.tip() && all_levels_contranormal)
    rec.check("lev_contra_converse", contranormal, id, "contranormal levels => contranormal", facts);

  // Conjugates.
  const auto im_both = image_union(eta, mu);
  const auto mu_image = mu.image();
  for (auto z : G.elements())
    for (auto a : L.elements()) {
      if (!L.leq(a, mu(z))) continue;
      const auto point = [&] { return id() + " point=" + L.name_of(a) + "_" + G.format(z, ","); };
      const auto c = detail::conjugate_unchecked(eta, a, z);
      bool levels_ok = true;
      const auto ctip = c.tip();
      for (auto t : L.elements()) {
        if (!L.leq(t, ctip)) continue;
        if (level_set(c, t) != conjugate_subgroup(G, level_set(eta, t), G.inv(z))) levels_ok = false;
      }
      rec.check("lvl_conj", levels_ok, point, "level sets of the conjugate are conjugate level sets",
                [] { return "mismatch"; });
      const bool in_x = detail::conjugate_inside(eta, a, z);
      const bool in_inv = detail::conjugate_inside(eta, a, G.inv(z));
      rec.check("conj_inv", in_x == in_inv, point, "conjugate by a_x inside iff by a_{x^-1} inside",
                [&] { return "x: " + yes(in_x) + ", inverse: " + yes(in_inv); });
      if (joint && std::binary_search(mu_image.begin(), mu_image.end(), a)) {
        const bool images_ok = within(c.image(), im_both);
        const bool sup_ok = has_sup_property(lsub_union(eta, c));
        rec.check("conj_sup", images_ok && sup_ok, point, "Im(conjugate) within Im(eta) ∪ Im(mu), union has sup",
                  [&] { return "image=" + yes(images_ok) + " sup=" + yes(sup_ok); });
      }
      for (const auto& h : inst.homs) {
        const auto& f = *h.map;
        const auto lhs = image(f, c);
        const auto rhs = detail::conjugate_unchecked(image(f, eta), a, f(z));
        rec.check("hom_conj", lhs == rhs, [&] { return point() + " hom=" + h.name; }, "f(conjugate) = conjugate of f",
                  [&] { return valuation(lhs) + " vs " + valuation(rhs); });
      }
    }

  if (joint) {
    const bool images_ok = within(cc->image(), im_both);
    rec.check("nc_sup_image", images_ok, id, "Im(mu eta mu^-1) within Im(eta) ∪ Im(mu)",
              [&] { return valuation(*cc); });
    if (chain)
      rec.check("nc_sup_property", has_sup_property(*cc), id, "mu eta mu^-1 has the sup property",
                [&] { return valuation(*cc); });
  }

  // Generated L-subgroups, on the conjugate closure (generally not an
  // L-subgroup itself).
  {
    const auto& nu = *cc;
    const bool sup = has_sup_property(nu);
    bool contained = true;
    bool equal_levels = true;
    const auto ntip = nu.tip();
    for (auto b : L.elements()) {
      if (!L.leq(b, ntip)) continue;
      const auto lhs = subgroup_generated(G, level_set(nu, b));
      const auto rhs = level_set(nc, b);
      contained = contained && is_subset_of(lhs, rhs);
      equal_levels = equal_levels && lhs == rhs;
    }
    rec.check("gen_sup_contained", contained, id, "<nu_b> ⊆ <nu>_b", [] { return "not contained"; });
    if (sup) rec.check("gen_sup_equal", equal_levels, id, "<nu_b> = <nu>_b", [] { return "differ"; });
    for (const auto& h : inst.homs) {
      const auto& f = *h.map;
      const auto fn = image(f, nu);
      const auto a = detail::generated_unchecked(fn);
      const auto b = image(f, nc);
      rec.check("gen_hom_image", a == b, [&] { return id() + " hom=" + h.name; }, "<f(nu)> = f(<nu>)",
                [&] { return valuation(a) + " vs " + valuation(b); });
      const auto c = detail::generated_unchecked(preimage(f, fn));
      const auto d = preimage(f, detail::generated_unchecked(fn));
      rec.check("gen_hom_preimage", c == d, [&] { return id() + " hom=" + h.name; }, "<f^-1(th)> = f^-1(<th>)",
                [&] { return valuation(c) + " vs " + valuation(d); });
    }
  }

  // Homomorphic images.
  for (const auto& h : inst.homs) {
    const auto& f = *h.map;
    const auto feta = image(f, eta);
    bool lev_ok = true;
    for (auto t : L.elements())
      if (!is_subset_of(f.image_of(level_set(eta, t)), level_set(feta, t))) lev_ok = false;
    rec.check("hom_lev", lev_ok, [&] { return id() + " hom=" + h.name; }, "f(eta_t) ⊆ f(eta)_t",
              [] { return "not contained"; });
    if (abnormal && f.is_surjective() && has_sup_property(mu)) {
      const auto fmu = image(f, mu);
      std::string actual;
      bool ok = false;
      if (!detail::lsubgroup_axioms(fmu) || !is_subset(feta, fmu) || !detail::lsubgroup_axioms(feta)) {
        actual = "image is not an L-subgroup of the image parent";
      } else {
        const auto w = detail::abnormality_witness_unchecked(feta, fmu);
        ok = !w;
        if (w) actual = "witness " + L.name_of(w->a) + "_" + f.target()->format(w->x, ",");
      }
      rec.check("hom_abn", ok, [&] { return id() + " hom=" + h.name; }, "f(eta) abnormal in f(mu)",
                [&] { return actual; });
    }
  }
}

inline std::vector<Instance> theorem_instances(const std::filesystem::path& assets) {
  auto load_g = [&](const char* f) { return std::make_shared<const FiniteGroup>(io::load_group(assets / f)); };
  auto load_l = [&](const char* f) { return std::make_shared<const FiniteLattice>(io::load_lattice(assets / f)); };
  const auto two = load_l("two.lat");
  const auto three = load_l("three.lat");
  const auto M = load_l("figure1-M.lat");
  const auto square = load_l("square.lat");
  const auto L1 = load_l("example1.lat");

  std::vector<Instance> out;
  auto add = [&](const GroupPtr& G, const LatticePtr& L, std::vector<NamedHom> extra = {}) {
    Instance inst{G->name() + "*" + L->name(), G, L, {}};
    inst.homs.push_back(NamedHom{"id", std::make_shared<const Homomorphism>(identity_hom(G))});
    for (auto& h : extra) inst.homs.push_back(std::move(h));
    out.push_back(std::move(inst));
  };
  for (const char* g : {"s3.grp", "d4.grp", "z6.grp"}) {
    const auto G = load_g(g);
    for (const auto& L : {two, three, M, square, L1}) add(G, L);
  }
  add(load_g("a4.grp"), two);
  const auto S4 = load_g("s4.grp");
  const auto Q = std::make_shared<const FiniteGroup>(
      group_from_generators("S4/V4", 3, {parse_permutation("(1 2)", 3), parse_permutation("(1 3)", 3)}));
  const auto q = std::make_shared<const Homomorphism>(
      hom_from_images(S4, Q, {{S4->parse("(1 2)"), Q->parse("(1 2)")}, {S4->parse("(1 2 3 4)"), Q->parse("(1 3)")}}));
  add(S4, two, {NamedHom{"quotient", q}});
  return out;
}

/// Every pair (eta, mu) with mu an L-subgroup of G and eta one of mu, over
/// every instance.
inline SuiteResult run_theorems(const SuiteOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  SuiteResult r;
  r.name = "theorems";
  struct Job {
    const Instance* inst;
    LSubset mu;
  };
  const auto instances = theorem_instances(opt.assets);
  std::vector<Job> jobs;
  std::vector<Recorder> setup(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    try {
      for (auto& mu : enumerate_lsubgroups(LSubset::constant(inst.group, inst.lattice, inst.lattice->top()), opt.budget))
        jobs.push_back(Job{&inst, std::move(mu)});
      setup[i].scope = inst.name;
      setup[i].pass("enumerate");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      setup[i].scope = inst.name;
      setup[i].skip("enumerate");
    }
  }
  std::vector<Recorder> slices(jobs.size());
  parallel_for(jobs.size(), opt.workers ? opt.workers : worker_count(), [&](std::size_t j) {
    const auto& job = jobs[j];
    slices[j].scope = job.inst->name;
    std::vector<LSubset> subjects;
    try {
      subjects = enumerate_lsubgroups(job.mu, opt.budget);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      slices[j].skip("enumerate");
      return;
    }
    for (const auto& eta : subjects) check_theorems(*job.inst, eta, job.mu, opt.budget, slices[j]);
  });
  setup.insert(setup.end(), slices.begin(), slices.end());
  finish(r, setup, started);
  return r;
}

// ---------------------------------------------------------------------------
// Crisp bridge

/// L-predicates on characteristic lifts against the classical oracles, for
/// every nested subgroup pair H ⊆ K.
inline SuiteResult run_crisp_bridge(const SuiteOptions& opt) {
  using namespace suite_detail;
  const auto started = std::chrono::steady_clock::now();
  SuiteResult r;
  r.name = "crisp-bridge";
  const auto two = std::make_shared<const FiniteLattice>(io::load_lattice(opt.assets / "two.lat"));
  struct Job {
    GroupPtr G;
    ElementSet K;
    ElementSet H;
  };
  std::vector<Job> jobs;
  for (const char* g : {"s3.grp", "d4.grp", "a4.grp", "s4.grp"}) {
    const auto G = std::make_shared<const FiniteGroup>(io::load_group(opt.assets / g));
    const auto subs = all_subgroups(*G);
    for (const auto& K : subs)
      for (const auto& H : subs)
        if (is_subset_of(H, K)) jobs.push_back(Job{G, K, H});
  }
  std::vector<Recorder> slices(jobs.size());
  parallel_for(jobs.size(), opt.workers ? opt.workers : worker_count(), [&](std::size_t j) {
    const auto& [G, K, H] = jobs[j];
    auto& rec = slices[j];
    rec.scope = G->name();
    const auto mu = characteristic(G, two, K);
    const auto eta = characteristic(G, two, H);
    const auto id = [&] { return G->name() + " K=" + set_text(*G, K) + " H=" + set_text(*G, H); };

    const bool abn = is_abnormal(eta, mu);
    const bool abn_oracle = classical_is_abnormal(*G, K, H);
    rec.check("abnormal", abn == abn_oracle, id, yes(abn_oracle), [&] { return yes(abn); });
    const bool con = is_contranormal(eta, mu);
    const bool con_oracle = classical_is_contranormal(*G, K, H);
    rec.check("contranormal", con == con_oracle, id, yes(con_oracle), [&] { return yes(con); });
    const bool by_search = contranormal_by_containers(eta, mu, opt.budget) == Tri::True;
    rec.check("contranormal_search", by_search == con_oracle, id, yes(con_oracle), [&] { return yes(by_search); });
    const bool nor = is_normal(eta, mu);
    const bool nor_oracle = is_normal_subgroup(*G, K, H);
    rec.check("normal", nor == nor_oracle, id, yes(nor_oracle), [&] { return yes(nor); });
    const auto N = normalizer(eta, mu);
    const auto N_oracle = characteristic(G, two, classical_normalizer(*G, K, H));
    rec.check("normalizer", N == N_oracle, id, valuation(N_oracle), [&] { return valuation(N); });
    const auto nc = normal_closure(eta, mu);
    const auto nc_oracle = characteristic(G, two, classical_normal_closure(*G, K, H));
    rec.check("normal_closure", nc == nc_oracle, id, valuation(nc_oracle), [&] { return valuation(nc); });
  });
  finish(r, slices, started);
  return r;
}

// ---------------------------------------------------------------------------
// Worked examples

namespace suite_detail {

struct Table {
  std::string default_value;
  std::vector<std::pair<std::vector<const char*>, std::string>> rows;
};

inline std::optional<std::string> table_mismatch(const LSubset& eta, const Table& t) {
  const auto& G = eta.group();
  const auto& L = eta.lattice();
  std::vector<std::string> want(G.order(), t.default_value);
  for (const auto& [cycles, value] : t.rows)
    for (const char* c : cycles) want[G.parse(c).id] = value;
  for (auto x : G.elements())
    if (L.name_of(eta(x)) != want[x.id])
      return G.format(x, ",") + " is " + L.name_of(eta(x)) + ", expected " + want[x.id];
  return std::nullopt;
}

}  // namespace suite_detail

inline SuiteResult run_paper_examples(const SuiteOptions& opt) {
  using namespace suite_detail;
  const auto started = std::chrono::steady_clock::now();
  SuiteResult r;
  r.name = "paper-examples";
  Recorder rec;
  const auto& A = opt.assets;
  const auto S4 = std::make_shared<const FiniteGroup>(io::load_group(A / "s4.grp"));
  const auto L1 = std::make_shared<const FiniteLattice>(io::load_lattice(A / "example1.lat"));
  const auto M = std::make_shared<const FiniteLattice>(io::load_lattice(A / "figure1-M.lat"));
  const auto two = std::make_shared<const FiniteLattice>(io::load_lattice(A / "two.lat"));
  const auto M2 = std::make_shared<const FiniteLattice>(product(*M, *two));
  const auto mu1 = io::load_lsubset(A / "example1.mu", S4, L1).value;
  const auto eta1 = io::load_lsubset(A / "example1.eta", S4, L1).value;
  const auto mu3 = io::load_lsubset(A / "example3.mu", S4, M2).value;
  const auto eta3 = io::load_lsubset(A / "example3.eta", S4, M2).value;
  auto x = [&](const char* c) { return S4->parse(c); };
  auto expect = [&](const std::string& key, const std::string& expected, const std::string& actual) {
    rec.check(key, expected == actual, [&] { return key; }, expected, [&] { return actual; });
  };
  auto expect_table = [&](const std::string& key, const LSubset& eta, const Table& t) {
    const auto bad = table_mismatch(eta, t);
    rec.check(key, !bad, [&] { return key; }, "table matches", [&] { return *bad; });
  };
  const std::vector<const char*> h1_rest = {"(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"};
  const std::vector<const char*> h2_rest = {"(1 4)", "(2 4)", "(1 2 4)", "(1 4 2)"};

  // Lattice facts used by the examples.
  {
    const LatticeElement ab[] = {M->at("a"), M->at("b")};
    expect("lattice.M.a_join_b", "d", M->name_of(sup_of(*M, ab)));
    expect("lattice.M.distributive", "false", yes(is_distributive(*M)));
    expect("lattice.L1.distributive", "true", yes(is_distributive(*L1)));
    expect("lattice.Mx2.size", "14", std::to_string(M2->size()));
  }

  // Example 1.
  expect("example1.mu_is_lsubgroup", "true", yes(is_lsubgroup(mu1)));
  expect("example1.eta_is_lsubgroup", "true", yes(is_lsubgroup(eta1, mu1)));
  expect("example1.level_a_is_H1", set_text(*S4, subgroup_generated(*S4, std::vector{x("(1 2)"), x("(1 2 3)")})),
         set_text(*S4, level_set(eta1, L1->at("a"))));
  {
    const auto c = conjugate(eta1, LPoint{L1->at("d"), x("(3 4)")}, mu1);
    expect_table("example1.conjugate_d_(3,4)", c, Table{"l", {{{"()", "(1 2)"}, "d"}, {h2_rest, "a"}, {h1_rest, "b"}}});
    const auto g = generated(lsub_union(eta1, c), mu1);
    expect("example1.generated_at_(3,4)", "d", L1->name_of(g(x("(3 4)"))));
  }
  {
    const auto w = abnormality_witness(eta1, mu1);
    expect("example1.abnormal", "none",
           w ? L1->name_of(w->a) + "_" + S4->format(w->x, ",") : std::string("none"));
  }

  // Example 2.
  {
    const auto N = normalizer(eta1, mu1);
    expect("example2.normalizer_equals_eta", "true", yes(N == eta1));
    expect("example2.normalizer_at_(2,3)", "a", L1->name_of(N(x("(2 3)"))));
    std::string inside;
    for (auto c : L1->elements())
      if (L1->leq(c, mu1(x("(2 3)"))) && is_subset(conjugate(eta1, LPoint{c, x("(2 3)")}, mu1), eta1))
        inside += (inside.empty() ? "" : ",") + L1->name_of(c);
    expect("example2.conjugates_by_(2,3)_inside", "l,a", inside);
  }

  // Example 4 (same eta and mu).
  {
    const auto cc = conjugate_closure(eta1, mu1);
    expect("example4.closure_at_(1,2,3)_covers_b", "true", yes(L1->leq(L1->at("b"), cc(x("(1 2 3)")))));
    expect("example4.normal_closure_is_mu", "true", yes(normal_closure(eta1, mu1) == mu1));
    expect("example4.contranormal_by_search", "true", to_string(contranormal_by_containers(eta1, mu1, opt.budget)));
    const auto rep = classify(eta1, mu1, opt.budget);
    expect("example1.classify",
           "normal=false abnormal=true contranormal=true self_normalizing=true",
           "normal=" + yes(rep.normal) + " abnormal=" + yes(rep.abnormal) + " contranormal=" + yes(rep.contranormal) +
               " self_normalizing=" + yes(rep.self_normalizing));
  }

  // Example 3.
  {
    const std::vector<const char*> v4 = {"()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"};
    const std::vector<const char*> d1 = {"(1 2 3 4)", "(1 4 3 2)", "(2 4)", "(1 3)"};
    const std::vector<const char*> d2 = {"(1 3 2 4)", "(1 4 2 3)", "(1 2)", "(3 4)"};
    const std::vector<const char*> d3 = {"(1 3 4 2)", "(1 2 4 3)", "(2 3)", "(1 4)"};
    expect("example3.eta_is_lsubgroup", "true", yes(is_lsubgroup(eta3, mu3)));
    expect("example3.normal", "false", yes(is_normal(eta3, mu3)));
    const std::vector<const char*> gens[] = {{"(2 4)", "(1 2 3 4)"}, {"(1 2)", "(1 3 2 4)"}, {"(2 3)", "(1 3 4 2)"}};
    std::string levels;
    std::string want;
    int i = 0;
    for (const char* t : {"(a,0)", "(b,0)", "(c,0)"}) {
      std::vector<GroupElement> g;
      for (const char* c : gens[i]) g.push_back(x(c));
      const auto d = subgroup_generated(*S4, g);
      const auto h = level_set(eta3, M2->at(t));
      const auto k = level_set(mu3, M2->at(t));
      const std::string tag = "D4^" + std::to_string(++i);
      levels += (levels.empty() ? "" : ",") + (h == d ? tag : set_text(*S4, h)) +
                (is_normal_subgroup(*S4, k, h) ? " normal" : " non-normal");
      want += (want.empty() ? "" : ",") + tag + " non-normal";
    }
    expect("example3.levels_(a|b|c,0)", want, levels);
    const auto c = conjugate(eta3, LPoint{M2->at("(d,0)"), x("(1 2 3)")}, mu3);
    expect_table("example3.conjugate_(d,0)_(1,2,3)", c,
                 Table{"(f,0)", {{v4, "(d,0)"}, {d1, "(b,0)"}, {d2, "(c,0)"}, {d3, "(a,0)"}}});
    const auto m = is_maximal(eta3, mu3, opt.budget);
    expect("example3.maximal", "true", to_string(m.maximal));
    expect("example3.abnormal", "true", yes(is_abnormal(eta3, mu3)));
    expect("example3.jointly_supstar", "false", yes(jointly_supstar(eta3, mu3)));
  }

  finish(r, {rec}, started);
  return r;
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "paper-examples") return run_paper_examples(opt);
  if (name == "theorems") return run_theorems(opt);
  if (name == "crisp-bridge") return run_crisp_bridge(opt);
  fail(ErrorCode::ValidationError, "unknown suite '" + name + "'");
}

}  // namespace lgroup
