#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "lgroup/error.hpp"
#include "lgroup/lsubset.hpp"

namespace lgroup {

enum class SearchStatus { Complete, Stopped, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::Complete;
  std::uint64_t nodes = 0;
};

/// Depth-first enumeration of every L-subgroup theta of G with
/// lower ⊆ theta ⊆ upper.
///
/// Each group element carries a domain of still-possible lattice values (a
/// bitmask, so lattices are limited to 64 elements). After every branching
/// decision the domains are narrowed to a fixpoint of:
///   - theta(x^-1) = theta(x);
///   - theta(x) <= theta(e);
///   - theta(xy) >= glb(x) ∧ glb(y), where glb is the meet of a domain;
///   - v ∈ dom(x) only if v ∧ glb(y) <= lub(xy).
/// Once every domain is a singleton the assignment is an L-subgroup, so
/// solutions are reported without a separate filter. Every branch counts as
/// one node against the budget.
class LSubgroupSearch {
 public:
  LSubgroupSearch(const LSubset& lower, const LSubset& upper, std::uint64_t budget)
      : lower_(lower), upper_(upper), budget_(budget) {
    require_same_carriers(lower, upper);
    const auto& L = lower.lattice();
    if (L.size() > 64) fail(ErrorCode::ValidationError, "L-subgroup search supports lattices of at most 64 elements");
    const auto& G = lower.group();
    n_ = G.order();
    m_ = L.size();
    inv_.resize(n_);
    mul_.resize(n_ * n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      inv_[i] = G.inv(GroupElement{i}).id;
      for (std::uint32_t j = 0; j < n_; ++j) mul_[i * n_ + j] = G.mul(GroupElement{i}, GroupElement{j}).id;
    }
    le_.assign(m_ * m_, 0);
    for (std::uint16_t g = 0; g < m_; ++g)
      for (std::uint16_t u = 0; u < m_; ++u)
        for (std::uint16_t v = 0; v < m_; ++v)
          if (L.leq(L.meet(LatticeElement{v}, LatticeElement{g}), LatticeElement{u}))
            le_[g * m_ + u] |= std::uint64_t{1} << v;
  }

  /// Calls visit(theta) for each solution in a fixed order; visit returns
  /// false to stop early.
  template <class Visitor>
  SearchResult run(Visitor&& visit) {
    const auto& L = lower_.lattice();
    std::vector<std::uint64_t> dom(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      const GroupElement x{i};
      dom[i] = L.up_mask(lower_(x)) & L.down_mask(upper_(x));
    }
    nodes_ = 0;
    stopped_ = false;
    over_budget_ = false;
    if (propagate(dom)) descend(dom, visit);
    SearchResult r;
    r.nodes = nodes_;
    r.status = over_budget_ ? SearchStatus::BudgetExceeded : stopped_ ? SearchStatus::Stopped : SearchStatus::Complete;
    return r;
  }

 private:
  LatticeElement glb(std::uint64_t mask) const {
    const auto& L = lower_.lattice();
    LatticeElement acc = L.top();
    while (mask) {
      const int b = std::countr_zero(mask);
      acc = L.meet(acc, LatticeElement{static_cast<std::uint16_t>(b)});
      mask &= mask - 1;
    }
    return acc;
  }

  LatticeElement lub(std::uint64_t mask) const {
    const auto& L = lower_.lattice();
    LatticeElement acc = L.bottom();
    while (mask) {
      const int b = std::countr_zero(mask);
      acc = L.join(acc, LatticeElement{static_cast<std::uint16_t>(b)});
      mask &= mask - 1;
    }
    return acc;
  }

  bool propagate(std::vector<std::uint64_t>& dom) const {
    const auto& L = lower_.lattice();
    std::vector<LatticeElement> lo(n_), hi(n_);
    auto refresh = [&](std::size_t i) {
      lo[i] = glb(dom[i]);
      hi[i] = lub(dom[i]);
    };
    for (std::size_t i = 0; i < n_; ++i) {
      if (!dom[i]) return false;
      refresh(i);
    }
    bool changed = true;
    auto narrow = [&](std::size_t i, std::uint64_t mask) {
      const auto nd = dom[i] & mask;
      if (nd == dom[i]) return true;
      dom[i] = nd;
      if (!nd) return false;
      refresh(i);
      changed = true;
      return true;
    };
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < n_; ++i) {
        const auto both = dom[i] & dom[inv_[i]];
        if (!narrow(i, both) || !narrow(inv_[i], both)) return false;
      }
      for (std::size_t i = 1; i < n_; ++i)
        if (!narrow(i, L.down_mask(hi[0]))) return false;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
          const std::size_t k = mul_[i * n_ + j];
          if (!narrow(k, L.up_mask(L.meet(lo[i], lo[j])))) return false;
          if (!narrow(i, le_[lo[j].id * m_ + hi[k].id])) return false;
        }
    }
    return true;
  }

  template <class Visitor>
  void descend(const std::vector<std::uint64_t>& dom, Visitor& visit) {
    if (stopped_ || over_budget_) return;
    std::size_t pick = n_;
    int best = 65;
    for (std::size_t i = 0; i < n_; ++i) {
      const int c = std::popcount(dom[i]);
      if (c > 1 && c < best) {
        best = c;
        pick = i;
      }
    }
    if (pick == n_) {
      std::vector<LatticeElement> v(n_);
      for (std::size_t i = 0; i < n_; ++i) v[i] = LatticeElement{static_cast<std::uint16_t>(std::countr_zero(dom[i]))};
      LSubset theta(lower_.group_ptr(), lower_.lattice_ptr(), std::move(v));
      if (!detail::lsubgroup_axioms(theta))
        fail(ErrorCode::InternalInconsistency, "propagation admitted an assignment that is not an L-subgroup");
      if (!visit(theta)) stopped_ = true;
      return;
    }
    std::uint64_t values = dom[pick];
    while (values && !stopped_ && !over_budget_) {
      if (nodes_ >= budget_) {
        over_budget_ = true;
        return;
      }
      ++nodes_;
      const std::uint64_t bit = values & (~values + 1);
      values &= values - 1;
      auto next = dom;
      next[pick] = bit;
      next[inv_[pick]] &= bit;
      if (propagate(next)) descend(next, visit);
    }
  }

  const LSubset& lower_;
  const LSubset& upper_;
  std::uint64_t budget_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint64_t> le_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  bool over_budget_ = false;
};

}  // namespace lgroup
