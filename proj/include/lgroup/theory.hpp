#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgroup/error.hpp"
#include "lgroup/lsubset.hpp"
#include "lgroup/search.hpp"

namespace lgroup {

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

/// Outcome of a budgeted search.
enum class Tri { False, True, BudgetExceeded };

constexpr const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace testing_hooks {
/// Mutation hook for harness sanity checks: reverses the Wu inequality.
inline std::atomic<bool> flip_wu_inequality{false};
}  // namespace testing_hooks

namespace detail {

inline LSubset conjugate_unchecked(const LSubset& eta, LatticeElement a, GroupElement z) {
  const auto& G = eta.group();
  const auto& L = eta.lattice();
  std::vector<LatticeElement> v(G.order());
  for (auto x : G.elements()) v[x.id] = L.meet(a, eta(G.conj(z, x)));
  return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(v));
}

inline bool subset_unchecked(const LSubset& inner, const LSubset& outer) {
  const auto& L = inner.lattice();
  const auto a = inner.values();
  const auto b = outer.values();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!L.leq(a[i], b[i])) return false;
  return true;
}

// conjugate(eta, a_z) ⊆ eta, without materializing the conjugate.
inline bool conjugate_inside(const LSubset& eta, LatticeElement a, GroupElement z) {
  const auto& G = eta.group();
  const auto& L = eta.lattice();
  for (auto x : G.elements())
    if (!L.leq(L.meet(a, eta(G.conj(z, x))), eta(x))) return false;
  return true;
}

inline LSubset normal_closure_unchecked(const LSubset& eta, const LSubset& mu);

}  // namespace detail

/// eta^{a_z}(x) = a ∧ eta(z x z^-1).
inline LSubset conjugate(const LSubset& eta, const LPoint& p, const LSubset& mu) {
  require_same_carriers(eta, mu);
  eta.lattice().require(p.a);
  eta.group().require(p.x);
  if (!point_in(p, mu)) fail(ErrorCode::PointNotInParent, "L-point value exceeds the parent at its element");
  require_lsubgroup(eta, mu);
  return detail::conjugate_unchecked(eta, p.a, p.x);
}

namespace detail {

inline bool normal_by_wu(const LSubset& eta, const LSubset& mu) {
  const auto& G = eta.group();
  const auto& L = eta.lattice();
  const bool flipped = testing_hooks::flip_wu_inequality.load(std::memory_order_relaxed);
  for (auto x : G.elements())
    for (auto y : G.elements()) {
      const auto rhs = L.meet(eta(x), mu(y));
      const auto lhs = eta(G.conj(y, x));
      if (!(flipped ? L.leq(lhs, rhs) : L.leq(rhs, lhs))) return false;
    }
  return true;
}

inline bool normal_by_conjugates(const LSubset& eta, const LSubset& mu) {
  const auto& L = eta.lattice();
  for (auto z : eta.group().elements())
    for (auto a : L.elements())
      if (L.leq(a, mu(z)) && !conjugate_inside(eta, a, z)) return false;
  return true;
}

inline bool normal_by_levels(const LSubset& eta, const LSubset& mu) {
  const auto& G = eta.group();
  for (auto t : eta.lattice().elements()) {
    const auto h = level_set(eta, t);
    if (h.empty()) continue;
    const auto k = level_set(mu, t);
    for (auto y : k)
      for (auto x : h)
        if (!set_contains(h, G.conj(y, x))) return false;
  }
  return true;
}

inline bool is_normal_unchecked(const LSubset& eta, const LSubset& mu) {
  const bool wu = normal_by_wu(eta, mu);
  const bool conj = normal_by_conjugates(eta, mu);
  const bool lev = normal_by_levels(eta, mu);
  if (wu != conj || wu != lev)
    fail(ErrorCode::InternalInconsistency, std::string("normality checks disagree (wu=") + (wu ? "1" : "0") +
                                               ", conjugates=" + (conj ? "1" : "0") + ", levels=" + (lev ? "1" : "0") +
                                               ")");
  return wu;
}

}  // namespace detail

/// Wu normality, cross-checked against "every conjugate lies inside eta"
/// and against normality of every level subset.
inline bool is_normal(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  require_lsubgroup(eta, mu);
  return detail::is_normal_unchecked(eta, mu);
}

namespace detail {

inline LSubset normalizer_unchecked(const LSubset& eta, const LSubset& mu) {
  const auto& L = eta.lattice();
  std::vector<LatticeElement> v(eta.group().order(), L.bottom());
  for (auto x : eta.group().elements())
    for (auto a : L.elements())
      if (L.leq(a, mu(x)) && conjugate_inside(eta, a, x)) v[x.id] = L.join(v[x.id], a);
  return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(v));
}

}  // namespace detail

/// N(eta)(x) = sup{a <= mu(x) : eta^{a_x} ⊆ eta}.
inline LSubset normalizer(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  require_lsubgroup(eta, mu);
  return detail::normalizer_unchecked(eta, mu);
}

namespace detail {

inline LSubset conjugate_closure_unchecked(const LSubset& eta, const LSubset& mu) {
  const auto& G = eta.group();
  const auto& L = eta.lattice();
  const std::size_t n = G.order();
  // Route 1: sup over factorizations x = z y z^-1 of eta(y) ∧ mu(z).
  std::vector<LatticeElement> by_factor(n, L.bottom());
  for (auto z : G.elements())
    for (auto y : G.elements()) {
      auto& slot = by_factor[G.conj(z, y).id];
      slot = L.join(slot, L.meet(eta(y), mu(z)));
    }
  // Route 2: union of all conjugates eta^{a_z} with a_z in mu.
  std::vector<LatticeElement> by_union(n, L.bottom());
  for (auto z : G.elements())
    for (auto a : L.elements()) {
      if (!L.leq(a, mu(z))) continue;
      for (auto x : G.elements()) by_union[x.id] = L.join(by_union[x.id], L.meet(a, eta(G.conj(z, x))));
    }
  if (by_factor != by_union)
    fail(ErrorCode::InternalInconsistency, "conjugate closure differs from the union of conjugates");
  return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(by_factor));
}

inline LSubset normal_closure_unchecked(const LSubset& eta, const LSubset& mu) {
  return generated_unchecked(conjugate_closure_unchecked(eta, mu));
}

}  // namespace detail

/// mu eta mu^-1, computed two ways that must agree.
inline LSubset conjugate_closure(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  require_lsubgroup(eta, mu);
  return detail::conjugate_closure_unchecked(eta, mu);
}

/// eta^mu = <mu eta mu^-1>.
inline LSubset normal_closure(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  require_lsubgroup(eta, mu);
  return detail::normal_closure_unchecked(eta, mu);
}

struct NormalClosureSeries {
  std::vector<LSubset> stages;  // stages[0] = mu, stages[i] = eta^{stages[i-1]}
  bool stabilized = false;
};

/// Iterates eta_i = eta^{eta_{i-1}} from eta_0 = mu until two consecutive
/// stages coincide.
inline NormalClosureSeries normal_closure_series(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  require_lsubgroup(eta, mu);
  NormalClosureSeries series;
  series.stages.push_back(mu);
  const std::size_t cap = eta.lattice().size() * eta.group().order() + 1;
  for (std::size_t i = 1; i <= cap; ++i) {
    auto next = detail::normal_closure_unchecked(eta, series.stages.back());
    if (!detail::subset_unchecked(next, series.stages.back()) || !detail::subset_unchecked(eta, next))
      fail(ErrorCode::InternalInconsistency, "normal closure series is not descending to eta");
    if (next == series.stages.back()) {
      series.stabilized = true;
      return series;
    }
    series.stages.push_back(std::move(next));
  }
  fail(ErrorCode::InternalInconsistency, "normal closure series did not stabilize");
}

/// Defect m with eta_m = eta; nullopt when the series stops above eta.
inline std::optional<std::size_t> subnormal_defect(const NormalClosureSeries& series, const LSubset& eta) {
  for (std::size_t m = 0; m < series.stages.size(); ++m)
    if (series.stages[m] == eta) return m;
  return std::nullopt;
}

inline std::optional<std::size_t> subnormal_defect(const LSubset& eta, const LSubset& mu) {
  return subnormal_defect(normal_closure_series(eta, mu), eta);
}

namespace detail {

inline std::optional<LPoint> abnormality_witness_unchecked(const LSubset& eta, const LSubset& mu) {
  const auto& L = eta.lattice();
  for (auto x : eta.group().elements())
    for (auto a : L.elements()) {
      if (!L.leq(a, mu(x))) continue;
      const auto both = lsub_union(eta, conjugate_unchecked(eta, a, x));
      if (!L.leq(a, generated_unchecked(both)(x))) return LPoint{a, x};
    }
  return std::nullopt;
}

}  // namespace detail

/// An L-point a_x of mu with a_x not in <eta, eta^{a_x}>, if one exists.
inline std::optional<LPoint> abnormality_witness(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  require_lsubgroup(eta, mu);
  return detail::abnormality_witness_unchecked(eta, mu);
}

/// a_x ∈ <eta, eta^{a_x}> for every L-point a_x of mu, bottom values included.
inline bool is_abnormal(const LSubset& eta, const LSubset& mu) { return !abnormality_witness(eta, mu); }

/// eta^mu = mu.
inline bool is_contranormal(const LSubset& eta, const LSubset& mu) { return normal_closure(eta, mu) == mu; }

inline bool is_self_normalizing(const LSubset& eta, const LSubset& mu) { return normalizer(eta, mu) == eta; }

/// All L-subgroups theta with lower ⊆ theta ⊆ upper, in search order.
inline std::vector<LSubset> enumerate_interval(const LSubset& lower, const LSubset& upper,
                                               std::uint64_t budget = kDefaultBudget) {
  std::vector<LSubset> out;
  LSubgroupSearch search(lower, upper, budget);
  const auto r = search.run([&](const LSubset& theta) {
    out.push_back(theta);
    return true;
  });
  if (r.status == SearchStatus::BudgetExceeded)
    fail(ErrorCode::BudgetExceeded, "enumeration exceeded " + std::to_string(budget) + " search nodes");
  return out;
}

/// Every L-subgroup of mu.
inline std::vector<LSubset> enumerate_lsubgroups(const LSubset& mu, std::uint64_t budget = kDefaultBudget) {
  if (!is_lsubgroup(mu)) fail(ErrorCode::NotAnLSubgroup, "parent is not an L-subgroup");
  return enumerate_interval(LSubset::constant(mu.group_ptr(), mu.lattice_ptr(), mu.lattice().bottom()), mu, budget);
}

/// Contranormality decided by search: no L-subgroup of mu other than mu
/// contains every conjugate of eta. The lower bound of the search is the
/// pointwise union of all conjugates.
inline Tri contranormal_by_containers(const LSubset& eta, const LSubset& mu, std::uint64_t budget = kDefaultBudget) {
  const auto lower = conjugate_closure(eta, mu);
  bool found = false;
  LSubgroupSearch search(lower, mu, budget);
  const auto r = search.run([&](const LSubset& theta) {
    if (theta == mu) return true;
    found = true;
    return false;
  });
  if (found) return Tri::False;
  if (r.status == SearchStatus::BudgetExceeded) return Tri::BudgetExceeded;
  return Tri::True;
}

struct MaximalityResult {
  Tri maximal = Tri::False;
  std::optional<LSubset> witness;  // strictly between eta and mu
  std::uint64_t nodes = 0;
};

/// Searches the interval [eta, mu] for an L-subgroup other than its ends.
inline MaximalityResult is_maximal(const LSubset& eta, const LSubset& mu, std::uint64_t budget = kDefaultBudget) {
  require_same_carriers(eta, mu);
  require_lsubgroup(eta, mu);
  if (!is_proper(eta, mu)) fail(ErrorCode::NotProper, "maximality is defined for proper L-subgroups");
  MaximalityResult result;
  LSubgroupSearch search(eta, mu, budget);
  const auto r = search.run([&](const LSubset& theta) {
    if (theta == eta || theta == mu) return true;
    result.witness = theta;
    return false;
  });
  result.nodes = r.nodes;
  if (result.witness)
    result.maximal = Tri::False;
  else
    result.maximal = r.status == SearchStatus::BudgetExceeded ? Tri::BudgetExceeded : Tri::True;
  return result;
}

struct ClassificationReport {
  std::string subject;
  std::string parent;
  bool is_lsubgroup = false;
  LatticeElement tip{};
  LatticeElement tail{};
  bool proper = false;
  bool normal = false;
  bool abnormal = false;
  bool contranormal = false;
  bool self_normalizing = false;
  std::optional<std::size_t> subnormal_defect;
  Tri maximal = Tri::False;
  std::optional<LSubset> normalizer;
  std::optional<LSubset> normal_closure;
};

/// Runs every predicate on (eta, mu). A subject that is contained in mu but
/// is not an L-subgroup yields a report with is_lsubgroup = false and the
/// remaining predicates unset.
inline ClassificationReport classify(const LSubset& eta, const LSubset& mu, std::uint64_t budget = kDefaultBudget,
                                     std::string subject = "eta", std::string parent = "mu") {
  require_same_carriers(eta, mu);
  if (!is_lsubgroup(mu)) fail(ErrorCode::ValidationError, "parent is not an L-subgroup");
  if (!is_subset(eta, mu)) fail(ErrorCode::ValidationError, "subject not contained in parent");

  ClassificationReport r;
  r.subject = std::move(subject);
  r.parent = std::move(parent);
  r.tip = eta.tip();
  r.tail = eta.tail();
  r.is_lsubgroup = is_lsubgroup(eta, mu);
  if (!r.is_lsubgroup) return r;

  r.proper = is_proper(eta, mu);
  r.normal = detail::is_normal_unchecked(eta, mu);
  r.abnormal = !detail::abnormality_witness_unchecked(eta, mu);
  r.normal_closure = detail::normal_closure_unchecked(eta, mu);
  r.contranormal = *r.normal_closure == mu;
  r.normalizer = detail::normalizer_unchecked(eta, mu);
  r.self_normalizing = *r.normalizer == eta;
  r.subnormal_defect = subnormal_defect(eta, mu);
  r.maximal = r.proper ? is_maximal(eta, mu, budget).maximal : Tri::False;

  const bool equal = eta == mu;
  if (r.normal && r.abnormal && !equal)
    fail(ErrorCode::InternalInconsistency, "normal and abnormal but different from the parent");
  if (r.abnormal && !(r.self_normalizing && r.contranormal))
    fail(ErrorCode::InternalInconsistency, "abnormal but not self-normalizing and contranormal");
  if (r.contranormal && r.proper && r.subnormal_defect)
    fail(ErrorCode::InternalInconsistency, "proper contranormal L-subgroup reported subnormal");
  return r;
}

}  // namespace lgroup
