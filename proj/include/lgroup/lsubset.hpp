#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgroup/error.hpp"
#include "lgroup/group.hpp"
#include "lgroup/lattice.hpp"

namespace lgroup {

/// A total valuation G -> L. Used for parent L-groups, their L-subgroups and
/// arbitrary L-subsets alike.
class LSubset {
 public:
  LSubset(GroupPtr group, LatticePtr lattice, std::vector<LatticeElement> values)
      : group_(std::move(group)), lattice_(std::move(lattice)), values_(std::move(values)) {
    if (!group_ || !lattice_) fail(ErrorCode::MismatchedCarriers, "L-subset needs a group and a lattice");
    if (values_.size() != group_->order())
      fail(ErrorCode::ValidationError, "valuation must assign a value to every group element");
    for (auto v : values_) lattice_->require(v);
  }

  static LSubset constant(GroupPtr group, LatticePtr lattice, LatticeElement value) {
    const std::size_t n = group->order();
    return LSubset(std::move(group), std::move(lattice), std::vector<LatticeElement>(n, value));
  }

  const GroupPtr& group_ptr() const noexcept { return group_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }

  LatticeElement operator()(GroupElement x) const noexcept { return values_[x.id]; }
  LatticeElement at(GroupElement x) const {
    group_->require(x);
    return values_[x.id];
  }
  std::span<const LatticeElement> values() const noexcept { return values_; }

  LatticeElement tip() const { return lattice_->sup(values_); }
  LatticeElement tail() const { return lattice_->inf(values_); }

  /// Distinct values, sorted by id.
  std::vector<LatticeElement> image() const {
    std::vector<LatticeElement> im(values_);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  bool is_constant() const {
    return std::all_of(values_.begin(), values_.end(), [&](LatticeElement v) { return v == values_.front(); });
  }

  bool same_carriers(const LSubset& other) const noexcept {
    return (group_ == other.group_ || *group_ == *other.group_) &&
           (lattice_ == other.lattice_ || *lattice_ == *other.lattice_);
  }

  friend bool operator==(const LSubset& a, const LSubset& b) { return a.same_carriers(b) && a.values_ == b.values_; }

 private:
  GroupPtr group_;
  LatticePtr lattice_;
  std::vector<LatticeElement> values_;
};

/// The L-point a_x: value a at x, bottom elsewhere.
struct LPoint {
  LatticeElement a;
  GroupElement x;
};

inline void require_same_carriers(const LSubset& a, const LSubset& b) {
  if (!a.same_carriers(b)) fail(ErrorCode::MismatchedCarriers, "L-subsets live over different groups or lattices");
}

/// a_x in mu, i.e. a <= mu(x).
inline bool point_in(const LPoint& p, const LSubset& mu) { return mu.lattice().leq(p.a, mu.at(p.x)); }

/// Pointwise inclusion inner ⊆ outer.
inline bool is_subset(const LSubset& inner, const LSubset& outer) {
  require_same_carriers(inner, outer);
  const auto& L = inner.lattice();
  for (auto x : inner.group().elements())
    if (!L.leq(inner(x), outer(x))) return false;
  return true;
}

inline LSubset lsub_union(const LSubset& a, const LSubset& b) {
  require_same_carriers(a, b);
  std::vector<LatticeElement> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.lattice().join(a.values()[i], b.values()[i]);
  return LSubset(a.group_ptr(), a.lattice_ptr(), std::move(v));
}

inline LSubset lsub_intersection(const LSubset& a, const LSubset& b) {
  require_same_carriers(a, b);
  std::vector<LatticeElement> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.lattice().meet(a.values()[i], b.values()[i]);
  return LSubset(a.group_ptr(), a.lattice_ptr(), std::move(v));
}

/// {x : eta(x) >= t}
inline ElementSet level_set(const LSubset& eta, LatticeElement t) {
  eta.lattice().require(t);
  ElementSet out;
  for (auto x : eta.group().elements())
    if (eta.lattice().leq(t, eta(x))) out.push_back(x);
  return out;
}

/// Proper: distinct tip and tail, and different from the parent.
inline bool is_proper(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  return eta.tip() != eta.tail() && !(eta == mu);
}

namespace detail {

inline bool lsubgroup_axioms(const LSubset& eta) {
  const auto& G = eta.group();
  const auto& L = eta.lattice();
  const auto n = G.order();
  for (std::uint32_t i = 0; i < n; ++i) {
    const GroupElement x{i};
    if (eta(G.inv(x)) != eta(x)) return false;
    for (std::uint32_t j = 0; j < n; ++j) {
      const GroupElement y{j};
      if (!L.leq(L.meet(eta(x), eta(y)), eta(G.mul(x, y)))) return false;
    }
  }
  return true;
}

// Every non-empty level subset is a subgroup (of the parent's level subset
// when a parent is given).
inline bool lsubgroup_levels(const LSubset& eta, const LSubset* parent) {
  const auto& G = eta.group();
  for (auto t : eta.lattice().elements()) {
    auto level = level_set(eta, t);
    if (level.empty()) continue;
    if (!is_subgroup(G, level)) return false;
    if (parent && !is_subset_of(level, level_set(*parent, t))) return false;
  }
  return true;
}

}  // namespace detail

/// eta is an L-subgroup of G. The axiom check and the level-subset check are
/// both run and must agree.
inline bool is_lsubgroup(const LSubset& eta) {
  const bool by_axioms = detail::lsubgroup_axioms(eta);
  const bool by_levels = detail::lsubgroup_levels(eta, nullptr);
  if (by_axioms != by_levels)
    fail(ErrorCode::InternalInconsistency, "L-subgroup axiom check disagrees with level-subset check");
  return by_axioms;
}

/// eta is an L-subgroup of G contained in mu.
inline bool is_lsubgroup(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  const bool contained = is_subset(eta, mu);
  const bool by_axioms = contained && detail::lsubgroup_axioms(eta);
  const bool by_levels = contained && detail::lsubgroup_levels(eta, &mu);
  if (by_axioms != by_levels)
    fail(ErrorCode::InternalInconsistency, "L-subgroup axiom check disagrees with level-subset check");
  return by_axioms;
}

inline void require_lsubgroup(const LSubset& eta, const LSubset& mu) {
  if (!is_lsubgroup(mu)) fail(ErrorCode::NotAnLSubgroup, "parent is not an L-subgroup");
  if (!is_lsubgroup(eta, mu)) fail(ErrorCode::NotAnLSubgroup, "subject is not an L-subgroup of the parent");
}

/// 1_H: top on H, bottom elsewhere.
inline LSubset characteristic(GroupPtr G, LatticePtr L, const ElementSet& h) {
  require_subgroup(*G, h, "H");
  std::vector<LatticeElement> v(G->order(), L->bottom());
  for (auto x : h) v[x.id] = L->top();
  return LSubset(std::move(G), std::move(L), std::move(v));
}

/// tip(eta) at e, tail(eta) everywhere else.
inline LSubset trivial_lsubgroup(const LSubset& eta) {
  if (!is_lsubgroup(eta)) fail(ErrorCode::NotAnLSubgroup, "trivial L-subgroup needs an L-subgroup");
  std::vector<LatticeElement> v(eta.group().order(), eta.tail());
  v[eta.group().identity().id] = eta.tip();
  return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(v));
}

/// (mu∘eta)(x) = sup over x = yz of mu(y) ∧ eta(z).
inline LSubset set_product(const LSubset& mu, const LSubset& eta) {
  require_same_carriers(mu, eta);
  const auto& G = mu.group();
  const auto& L = mu.lattice();
  std::vector<LatticeElement> v(G.order(), L.bottom());
  for (auto y : G.elements())
    for (auto z : G.elements()) {
      auto& slot = v[G.mul(y, z).id];
      slot = L.join(slot, L.meet(mu(y), eta(z)));
    }
  return LSubset(mu.group_ptr(), mu.lattice_ptr(), std::move(v));
}

namespace detail {

// x ↦ sup{a <= tip(eta) : x in <eta_a>}, over every lattice element below
// the tip (not only values of eta).
inline LSubset generated_unchecked(const LSubset& eta) {
  const auto& G = eta.group();
  const auto& L = eta.lattice();
  const auto tip = eta.tip();
  std::vector<LatticeElement> v(G.order(), L.bottom());
  std::vector<std::pair<ElementSet, ElementSet>> cache;  // level set -> generated subgroup
  for (auto a : L.elements()) {
    if (!L.leq(a, tip)) continue;
    auto level = level_set(eta, a);
    const ElementSet* closure = nullptr;
    for (const auto& [lv, cl] : cache)
      if (lv == level) closure = &cl;
    if (!closure) {
      auto cl = subgroup_generated(G, level);
      cache.emplace_back(std::move(level), std::move(cl));
      closure = &cache.back().second;
    }
    for (auto x : *closure) v[x.id] = L.join(v[x.id], a);
  }
  return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(v));
}

}  // namespace detail

/// The L-subgroup of mu generated by eta.
inline LSubset generated(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  if (!is_subset(eta, mu)) fail(ErrorCode::NotContained, "generator set is not contained in the parent");
  if (!is_lsubgroup(mu)) fail(ErrorCode::NotAnLSubgroup, "parent is not an L-subgroup");
  return detail::generated_unchecked(eta);
}

/// Every subset of G attains the supremum of its values, i.e. Im(eta) is
/// supstar. For |G| <= 12 the definition is also checked over all subsets.
inline bool has_sup_property(const LSubset& eta) {
  const auto im = eta.image();
  const bool by_image = is_supstar(eta.lattice(), im);
  const auto n = eta.group().order();
  if (n <= 12) {
    const auto& L = eta.lattice();
    bool by_subsets = true;
    for (std::uint32_t bits = 1; bits < (1u << n) && by_subsets; ++bits) {
      LatticeElement acc = L.bottom();
      for (std::uint32_t i = 0; i < n; ++i)
        if (bits >> i & 1) acc = L.join(acc, eta(GroupElement{i}));
      bool attained = false;
      for (std::uint32_t i = 0; i < n && !attained; ++i)
        if ((bits >> i & 1) && eta(GroupElement{i}) == acc) attained = true;
      by_subsets = attained;
    }
    if (by_subsets != by_image)
      fail(ErrorCode::InternalInconsistency, "sup-property subset check disagrees with supstar image check");
  }
  return by_image;
}

/// Im(eta) ∪ Im(theta) is supstar.
inline bool jointly_supstar(const LSubset& eta, const LSubset& theta) {
  if (!(eta.lattice_ptr() == theta.lattice_ptr() || eta.lattice() == theta.lattice()))
    fail(ErrorCode::MismatchedCarriers, "L-subsets use different lattices");
  auto im = eta.image();
  auto other = theta.image();
  im.insert(im.end(), other.begin(), other.end());
  return is_supstar(eta.lattice(), im);
}

/// f(eta)(y) = sup of eta over the fibre f^-1(y); bottom on an empty fibre.
inline LSubset image(const Homomorphism& f, const LSubset& eta) {
  if (!(*f.source() == eta.group())) fail(ErrorCode::MismatchedCarriers, "L-subset is not over the source group");
  const auto& L = eta.lattice();
  std::vector<LatticeElement> v(f.target()->order(), L.bottom());
  for (auto x : eta.group().elements()) {
    auto& slot = v[f(x).id];
    slot = L.join(slot, eta(x));
  }
  return LSubset(f.target(), eta.lattice_ptr(), std::move(v));
}

/// f^-1(nu)(x) = nu(f(x)).
inline LSubset preimage(const Homomorphism& f, const LSubset& nu) {
  if (!(*f.target() == nu.group())) fail(ErrorCode::MismatchedCarriers, "L-subset is not over the target group");
  std::vector<LatticeElement> v(f.source()->order());
  for (auto x : f.source()->elements()) v[x.id] = nu(f(x));
  return LSubset(f.source(), nu.lattice_ptr(), std::move(v));
}

}  // namespace lgroup
