#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgroup/error.hpp"

namespace lgroup {

/// Handle to an element of a FiniteLattice. Only meaningful together with
/// the lattice that produced it.
struct LatticeElement {
  std::uint16_t id = 0;

  friend constexpr auto operator<=>(LatticeElement, LatticeElement) = default;
};

/// A finite bounded lattice with precomputed order, join and meet tables.
///
/// Instances are immutable once built; every construction path validates
/// that the order is a partial order and that the tables hold least upper
/// and greatest lower bounds for all pairs.
class FiniteLattice {
 public:
  /// Builds the lattice whose order is the reflexive-transitive closure of
  /// `covers` (pairs of (lower, upper) names).
  static FiniteLattice from_covers(std::string name, const std::vector<std::string>& elements,
                                   const std::vector<std::pair<std::string, std::string>>& covers) {
    const std::size_t n = elements.size();
    if (n == 0) fail(ErrorCode::NoBounds, "lattice '" + name + "' has no elements");
    if (n > 0xFFFF) fail(ErrorCode::NotALattice, "too many lattice elements");

    std::unordered_map<std::string, std::uint16_t> index;
    for (std::size_t i = 0; i < n; ++i) {
      if (!index.emplace(elements[i], static_cast<std::uint16_t>(i)).second)
        fail(ErrorCode::DuplicateName, "element '" + elements[i] + "' declared twice");
    }

    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (const auto& [lo, hi] : covers) {
      auto a = index.find(lo);
      auto b = index.find(hi);
      if (a == index.end()) fail(ErrorCode::DanglingCover, "cover references unknown element '" + lo + "'");
      if (b == index.end()) fail(ErrorCode::DanglingCover, "cover references unknown element '" + hi + "'");
      leq[a->second * n + b->second] = 1;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k * n + j]) leq[i * n + j] = 1;

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq[i * n + j] && leq[j * n + i])
          fail(ErrorCode::NotALattice, "cover relation has a cycle through '" + elements[i] + "' and '" +
                                           elements[j] + "'");

    FiniteLattice lat;
    lat.name_ = std::move(name);
    lat.names_ = elements;
    lat.index_ = std::move(index);
    lat.leq_ = std::move(leq);
    lat.fill_bounds_and_tables();
    return lat;
  }

  /// Componentwise product. Elements are named "(x,y)" and ordered with the
  /// second factor varying slowest.
  static FiniteLattice product(const FiniteLattice& first, const FiniteLattice& second) {
    const std::size_t n1 = first.size();
    const std::size_t n2 = second.size();
    const std::size_t n = n1 * n2;
    if (n > 0xFFFF) fail(ErrorCode::NotALattice, "product lattice too large");
    auto id = [n1](std::size_t i1, std::size_t i2) { return i2 * n1 + i1; };

    FiniteLattice lat;
    lat.name_ = first.name_ + "*" + second.name_;
    lat.names_.resize(n);
    for (std::size_t i2 = 0; i2 < n2; ++i2)
      for (std::size_t i1 = 0; i1 < n1; ++i1) {
        lat.names_[id(i1, i2)] = "(" + first.names_[i1] + "," + second.names_[i2] + ")";
        lat.index_.emplace(lat.names_[id(i1, i2)], static_cast<std::uint16_t>(id(i1, i2)));
      }
    if (lat.index_.size() != n) fail(ErrorCode::DuplicateName, "product element names collide");

    lat.leq_.assign(n * n, 0);
    lat.join_.assign(n * n, 0);
    lat.meet_.assign(n * n, 0);
    for (std::size_t a2 = 0; a2 < n2; ++a2)
      for (std::size_t a1 = 0; a1 < n1; ++a1)
        for (std::size_t b2 = 0; b2 < n2; ++b2)
          for (std::size_t b1 = 0; b1 < n1; ++b1) {
            const LatticeElement x1{static_cast<std::uint16_t>(a1)}, y1{static_cast<std::uint16_t>(b1)};
            const LatticeElement x2{static_cast<std::uint16_t>(a2)}, y2{static_cast<std::uint16_t>(b2)};
            const std::size_t cell = id(a1, a2) * n + id(b1, b2);
            lat.leq_[cell] = first.leq(x1, y1) && second.leq(x2, y2);
            lat.join_[cell] = static_cast<std::uint16_t>(id(first.join(x1, y1).id, second.join(x2, y2).id));
            lat.meet_[cell] = static_cast<std::uint16_t>(id(first.meet(x1, y1).id, second.meet(x2, y2).id));
          }
    lat.bottom_ = LatticeElement{static_cast<std::uint16_t>(id(first.bottom().id, second.bottom().id))};
    lat.top_ = LatticeElement{static_cast<std::uint16_t>(id(first.top().id, second.top().id))};
    lat.validate();
    lat.build_masks();
    return lat;
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return names_.size(); }

  LatticeElement bottom() const noexcept { return bottom_; }
  LatticeElement top() const noexcept { return top_; }

  bool contains(LatticeElement a) const noexcept { return a.id < size(); }

  const std::string& name_of(LatticeElement a) const {
    require(a);
    return names_[a.id];
  }

  std::optional<LatticeElement> find(const std::string& element_name) const {
    auto it = index_.find(element_name);
    if (it == index_.end()) return std::nullopt;
    return LatticeElement{it->second};
  }

  LatticeElement at(const std::string& element_name) const {
    auto e = find(element_name);
    if (!e) fail(ErrorCode::ForeignElement, "'" + element_name + "' is not an element of lattice '" + name_ + "'");
    return *e;
  }

  /// All elements in declaration order.
  std::vector<LatticeElement> elements() const {
    std::vector<LatticeElement> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<std::uint16_t>(i);
    return out;
  }

  bool leq(LatticeElement a, LatticeElement b) const noexcept { return leq_[a.id * size() + b.id] != 0; }
  bool lt(LatticeElement a, LatticeElement b) const noexcept { return a != b && leq(a, b); }
  LatticeElement join(LatticeElement a, LatticeElement b) const noexcept {
    return LatticeElement{join_[a.id * size() + b.id]};
  }
  LatticeElement meet(LatticeElement a, LatticeElement b) const noexcept {
    return LatticeElement{meet_[a.id * size() + b.id]};
  }

  /// Join over a set, folded in the given order; bottom for the empty set.
  LatticeElement sup(std::span<const LatticeElement> s) const {
    LatticeElement acc = bottom_;
    for (auto a : s) {
      require(a);
      acc = join(acc, a);
    }
    return acc;
  }

  /// Meet over a set; top for the empty set.
  LatticeElement inf(std::span<const LatticeElement> s) const {
    LatticeElement acc = top_;
    for (auto a : s) {
      require(a);
      acc = meet(acc, a);
    }
    return acc;
  }

  /// Hasse diagram: pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<LatticeElement, LatticeElement>> covers() const {
    std::vector<std::pair<LatticeElement, LatticeElement>> out;
    const auto all = elements();
    for (auto a : all)
      for (auto b : all) {
        if (!lt(a, b)) continue;
        bool between = std::any_of(all.begin(), all.end(), [&](LatticeElement c) { return lt(a, c) && lt(c, b); });
        if (!between) out.emplace_back(a, b);
      }
    return out;
  }

  /// Bitmask helpers used by the propagating search; valid when size() <= 64.
  std::uint64_t up_mask(LatticeElement a) const noexcept { return up_[a.id]; }
  std::uint64_t down_mask(LatticeElement a) const noexcept { return down_[a.id]; }

  void require(LatticeElement a) const {
    if (!contains(a))
      fail(ErrorCode::ForeignElement, "element id " + std::to_string(a.id) + " is not in lattice '" + name_ + "'");
  }

  friend bool operator==(const FiniteLattice& x, const FiniteLattice& y) {
    return std::tie(x.name_, x.names_, x.leq_, x.join_, x.meet_) == std::tie(y.name_, y.names_, y.leq_, y.join_, y.meet_);
  }

 private:
  FiniteLattice() = default;

  void fill_bounds_and_tables() {
    const std::size_t n = size();
    auto is_le = [&](std::size_t i, std::size_t j) { return leq_[i * n + j] != 0; };

    std::optional<std::size_t> bot, top;
    for (std::size_t i = 0; i < n; ++i) {
      bool below_all = true, above_all = true;
      for (std::size_t j = 0; j < n; ++j) {
        below_all = below_all && is_le(i, j);
        above_all = above_all && is_le(j, i);
      }
      if (below_all) bot = i;
      if (above_all) top = i;
    }
    if (!bot || !top) fail(ErrorCode::NoBounds, "lattice '" + name_ + "' lacks a global " + (bot ? "top" : "bottom"));
    bottom_ = LatticeElement{static_cast<std::uint16_t>(*bot)};
    top_ = LatticeElement{static_cast<std::uint16_t>(*top)};

    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::optional<std::size_t> lub, glb;
        for (std::size_t c = 0; c < n; ++c) {
          if (is_le(a, c) && is_le(b, c)) {
            bool least = true;
            for (std::size_t d = 0; d < n && least; ++d)
              if (is_le(a, d) && is_le(b, d) && !is_le(c, d)) least = false;
            if (least) lub = c;
          }
          if (is_le(c, a) && is_le(c, b)) {
            bool greatest = true;
            for (std::size_t d = 0; d < n && greatest; ++d)
              if (is_le(d, a) && is_le(d, b) && !is_le(d, c)) greatest = false;
            if (greatest) glb = c;
          }
        }
        if (!lub) fail(ErrorCode::NotALattice, "'" + names_[a] + "' and '" + names_[b] + "' have no least upper bound");
        if (!glb)
          fail(ErrorCode::NotALattice, "'" + names_[a] + "' and '" + names_[b] + "' have no greatest lower bound");
        join_[a * n + b] = static_cast<std::uint16_t>(*lub);
        meet_[a * n + b] = static_cast<std::uint16_t>(*glb);
      }
    validate();
    build_masks();
  }

  // Exhaustive check of the lattice axioms against the stored tables.
  void validate() const {
    const std::size_t n = size();
    auto is_le = [&](std::size_t i, std::size_t j) { return leq_[i * n + j] != 0; };
    for (std::size_t a = 0; a < n; ++a) {
      if (!is_le(a, a)) fail(ErrorCode::InternalInconsistency, "order not reflexive");
      if (!is_le(bottom_.id, a) || !is_le(a, top_.id)) fail(ErrorCode::InternalInconsistency, "bounds violated");
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && is_le(a, b) && is_le(b, a)) fail(ErrorCode::InternalInconsistency, "order not antisymmetric");
        for (std::size_t c = 0; c < n; ++c)
          if (is_le(a, b) && is_le(b, c) && !is_le(a, c)) fail(ErrorCode::InternalInconsistency, "order not transitive");
        const std::size_t j = join_[a * n + b], m = meet_[a * n + b];
        if (!is_le(a, j) || !is_le(b, j) || !is_le(m, a) || !is_le(m, b))
          fail(ErrorCode::InternalInconsistency, "join/meet table is not a bound");
        for (std::size_t c = 0; c < n; ++c) {
          if (is_le(a, c) && is_le(b, c) && !is_le(j, c)) fail(ErrorCode::InternalInconsistency, "join is not least");
          if (is_le(c, a) && is_le(c, b) && !is_le(c, m)) fail(ErrorCode::InternalInconsistency, "meet is not greatest");
        }
      }
    }
  }

  void build_masks() {
    const std::size_t n = size();
    up_.assign(n, 0);
    down_.assign(n, 0);
    if (n > 64) return;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (leq_[a * n + b]) up_[a] |= std::uint64_t{1} << b;
        if (leq_[b * n + a]) down_[a] |= std::uint64_t{1} << b;
      }
  }

  std::string name_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint16_t> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
  LatticeElement bottom_{};
  LatticeElement top_{};
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

inline FiniteLattice build_lattice(std::string name, const std::vector<std::string>& elements,
                                   const std::vector<std::pair<std::string, std::string>>& covers) {
  return FiniteLattice::from_covers(std::move(name), elements, covers);
}

inline FiniteLattice product(const FiniteLattice& first, const FiniteLattice& second) {
  return FiniteLattice::product(first, second);
}

inline LatticeElement sup_of(const FiniteLattice& lat, std::span<const LatticeElement> s) { return lat.sup(s); }

/// A pair of incomparable elements, if any.
inline std::optional<std::pair<LatticeElement, LatticeElement>> incomparable_pair(
    const FiniteLattice& lat, std::span<const LatticeElement> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!lat.leq(s[i], s[j]) && !lat.leq(s[j], s[i])) return std::pair{s[i], s[j]};
  return std::nullopt;
}

inline bool is_chain(const FiniteLattice& lat) {
  const auto all = lat.elements();
  return !incomparable_pair(lat, all);
}

/// Every non-empty subset contains its supremum. For a finite lattice a
/// two-element subset {a, b} of incomparable elements is the only possible
/// obstruction, so the pairwise scan decides it.
inline bool is_upper_well_ordered(const FiniteLattice& lat) {
  const auto all = lat.elements();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto s = lat.join(all[i], all[j]);
      if (s != all[i] && s != all[j]) return false;
    }
  return true;
}

/// Subset of two elements whose supremum lies outside it, if any.
inline std::optional<std::pair<LatticeElement, LatticeElement>> upper_well_order_witness(const FiniteLattice& lat) {
  const auto all = lat.elements();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto s = lat.join(all[i], all[j]);
      if (s != all[i] && s != all[j]) return std::pair{all[i], all[j]};
    }
  return std::nullopt;
}

namespace detail {

inline std::vector<LatticeElement> normalized(const FiniteLattice& lat, std::span<const LatticeElement> x) {
  std::vector<LatticeElement> s(x.begin(), x.end());
  for (auto a : s) lat.require(a);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Literal check over all non-empty subsets.
inline bool supstar_by_subsets(const FiniteLattice& lat, std::span<const LatticeElement> s) {
  const std::size_t k = s.size();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
    LatticeElement acc = lat.bottom();
    for (std::size_t i = 0; i < k; ++i)
      if (bits >> i & 1) acc = lat.join(acc, s[i]);
    bool attained = false;
    for (std::size_t i = 0; i < k && !attained; ++i)
      if ((bits >> i & 1) && s[i] == acc) attained = true;
    if (!attained) return false;
  }
  return true;
}

}  // namespace detail

/// True iff every non-empty subset of `x` contains its supremum. Decided as
/// "x is a chain"; sets of at most 12 elements are also checked subset by
/// subset and the two answers must agree.
inline bool is_supstar(const FiniteLattice& lat, std::span<const LatticeElement> x) {
  if (x.empty()) fail(ErrorCode::EmptySubset, "supstar is defined for non-empty subsets only");
  const auto s = detail::normalized(lat, x);
  const bool chain = !incomparable_pair(lat, s);
  if (s.size() <= 12 && chain != detail::supstar_by_subsets(lat, s))
    fail(ErrorCode::InternalInconsistency, "supstar chain test disagrees with subset enumeration");
  return chain;
}

struct DistributivityWitness {
  LatticeElement a, b, c;
};

/// A triple with a∧(b∨c) != (a∧b)∨(a∧c), if any.
inline std::optional<DistributivityWitness> distributivity_witness(const FiniteLattice& lat) {
  const auto all = lat.elements();
  for (auto a : all)
    for (auto b : all)
      for (auto c : all)
        if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c))) return DistributivityWitness{a, b, c};
  return std::nullopt;
}

inline bool is_distributive(const FiniteLattice& lat) { return !distributivity_witness(lat); }

}  // namespace lgroup
