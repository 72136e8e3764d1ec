#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgroup/error.hpp"

namespace lgroup {

/// Images of the points 0..n-1 (points are printed 1-based).
using Permutation = std::vector<std::uint16_t>;

struct GroupElement {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(GroupElement, GroupElement) = default;
};

/// Sorted, duplicate-free list of element handles. Subgroups use this too;
/// two subgroups are equal iff their sets are.
using ElementSet = std::vector<GroupElement>;

inline Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>(i);
  return p;
}

inline bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

/// (p*q)(i) = p(q(i)): the right factor acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

/// Parses disjoint-cycle notation such as "(1 2)(3 4)", "(1,2,3)" or "()".
/// Points are 1-based and separated by whitespace or commas.
inline Permutation parse_permutation(std::string_view text, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) fail(ErrorCode::NotAPermutation, "empty cycle notation");
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorCode::NotAPermutation, "expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i == text.size()) fail(ErrorCode::NotAPermutation, "unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrorCode::NotAPermutation, "unexpected character in '" + std::string(text) + "'");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 0xFFFF) fail(ErrorCode::NotAPermutation, "point out of range");
        ++i;
      }
      if (v < 1 || v > degree)
        fail(ErrorCode::NotAPermutation, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (used[v - 1]) fail(ErrorCode::NotAPermutation, "point " + std::to_string(v) + " repeated");
      used[v - 1] = 1;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return p;
}

/// Disjoint-cycle notation, fixed points omitted, "()" for the identity.
/// `sep` separates points inside a cycle.
inline std::string format_permutation(const Permutation& p, std::string_view sep = " ") {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    std::size_t cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = 1;
      if (!first) out += sep;
      out += std::to_string(cur + 1);
      first = false;
      cur = p[cur];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// A finite permutation group stored by its full element list. Products of
/// groups up to `kTableLimit` elements are answered from a Cayley table.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10080;
  static constexpr std::size_t kTableLimit = 4096;

  static FiniteGroup from_generators(std::string name, std::size_t degree, const std::vector<Permutation>& gens,
                                     std::size_t cap = kDefaultCap) {
    if (degree == 0 || degree > 0xFFFF) fail(ErrorCode::NotAPermutation, "degree out of range");
    for (const auto& g : gens)
      if (g.size() != degree || !is_permutation(g))
        fail(ErrorCode::NotAPermutation, "generator is not a permutation of 1.." + std::to_string(degree));

    FiniteGroup G;
    G.name_ = std::move(name);
    G.degree_ = degree;
    G.add(identity_permutation(degree));
    // Orbit of the identity under right multiplication by the generators.
    for (std::size_t head = 0; head < G.perms_.size(); ++head) {
      for (const auto& g : gens) {
        auto next = compose(G.perms_[head], g);
        if (!G.index_.contains(next)) {
          if (G.perms_.size() >= cap)
            fail(ErrorCode::SizeBudgetExceeded, "group '" + G.name_ + "' exceeds " + std::to_string(cap) + " elements");
          G.add(std::move(next));
        }
      }
    }
    for (const auto& g : gens) G.gens_.push_back(GroupElement{G.index_.at(g)});
    G.build_tables();
    G.validate();
    return G;
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return perms_.size(); }
  GroupElement identity() const noexcept { return GroupElement{0}; }

  /// Generators as declared, in declaration order.
  const std::vector<GroupElement>& generators() const noexcept { return gens_; }

  bool contains(GroupElement x) const noexcept { return x.id < order(); }
  void require(GroupElement x) const {
    if (!contains(x)) fail(ErrorCode::ForeignElement, "element id " + std::to_string(x.id) + " not in group " + name_);
  }

  GroupElement mul(GroupElement x, GroupElement y) const {
    if (!mul_.empty()) return GroupElement{mul_[static_cast<std::size_t>(x.id) * order() + y.id]};
    return GroupElement{index_.at(compose(perms_[x.id], perms_[y.id]))};
  }
  GroupElement inv(GroupElement x) const noexcept { return GroupElement{inv_[x.id]}; }
  /// x y x^-1
  GroupElement conj(GroupElement y, GroupElement x) const { return mul(mul(y, x), inv(y)); }

  const Permutation& perm(GroupElement x) const { return perms_.at(x.id); }

  std::optional<GroupElement> find(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return GroupElement{it->second};
  }

  /// Parses cycle notation and looks the result up in the group.
  GroupElement parse(std::string_view cycles) const {
    auto p = parse_permutation(cycles, degree_);
    auto x = find(p);
    if (!x) fail(ErrorCode::ForeignElement, "'" + std::string(cycles) + "' is not an element of " + name_);
    return *x;
  }

  std::string format(GroupElement x, std::string_view sep = " ") const { return format_permutation(perm(x), sep); }

  ElementSet elements() const {
    ElementSet all(order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i].id = static_cast<std::uint32_t>(i);
    return all;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.name_ == b.name_ && a.degree_ == b.degree_ && a.perms_ == b.perms_ && a.gens_ == b.gens_;
  }

 private:
  FiniteGroup() = default;

  void add(Permutation p) {
    index_.emplace(p, static_cast<std::uint32_t>(perms_.size()));
    perms_.push_back(std::move(p));
  }

  void build_tables() {
    const std::size_t n = order();
    inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Permutation q(degree_);
      for (std::size_t k = 0; k < degree_; ++k) q[perms_[i][k]] = static_cast<std::uint16_t>(k);
      inv_[i] = index_.at(q);
    }
    if (n <= kTableLimit) {
      mul_.resize(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mul_[i * n + j] = index_.at(compose(perms_[i], perms_[j]));
    }
  }

  void validate() const {
    const std::size_t n = order();
    if (n > kTableLimit) return;
    const GroupElement e = identity();
    for (std::size_t i = 0; i < n; ++i) {
      const GroupElement x{static_cast<std::uint32_t>(i)};
      if (mul(e, x) != x || mul(x, e) != x) fail(ErrorCode::InternalInconsistency, "identity is not neutral");
      if (mul(x, inv(x)) != e) fail(ErrorCode::InternalInconsistency, "inverse table wrong");
    }
  }

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::map<Permutation, std::uint32_t> index_;
  std::vector<GroupElement> gens_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline FiniteGroup group_from_generators(std::string name, std::size_t degree, const std::vector<Permutation>& gens,
                                         std::size_t cap = FiniteGroup::kDefaultCap) {
  return FiniteGroup::from_generators(std::move(name), degree, gens, cap);
}

// ---------------------------------------------------------------------------
// Element sets and subgroups

inline ElementSet make_set(std::vector<GroupElement> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline bool set_contains(const ElementSet& s, GroupElement x) { return std::binary_search(s.begin(), s.end(), x); }

inline bool is_subset_of(const ElementSet& small, const ElementSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Smallest subgroup containing `s`; {e} for an empty set.
inline ElementSet subgroup_generated(const FiniteGroup& G, std::span<const GroupElement> s) {
  std::vector<char> in(G.order(), 0);
  std::vector<GroupElement> members{G.identity()};
  in[0] = 1;
  std::vector<GroupElement> gens;
  for (auto g : s) {
    G.require(g);
    if (g != G.identity()) gens.push_back(g);
  }
  // Finite group: closure under right multiplication by the generators is
  // already closed under inverses.
  for (std::size_t head = 0; head < members.size(); ++head)
    for (auto g : gens) {
      auto y = G.mul(members[head], g);
      if (!in[y.id]) {
        in[y.id] = 1;
        members.push_back(y);
      }
    }
  ElementSet out;
  out.reserve(members.size());
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(GroupElement{static_cast<std::uint32_t>(i)});
  return out;
}

inline bool is_subgroup(const FiniteGroup& G, const ElementSet& h) {
  if (h.empty() || !set_contains(h, G.identity())) return false;
  for (auto x : h)
    for (auto y : h)
      if (!set_contains(h, G.mul(x, y))) return false;
  return true;
}

inline void require_subgroup(const FiniteGroup& G, const ElementSet& h, std::string_view what = "set") {
  if (!is_subgroup(G, h)) fail(ErrorCode::NotASubgroup, std::string(what) + " is not a subgroup of " + G.name());
}

inline void require_nested(const FiniteGroup& G, const ElementSet& k, const ElementSet& h) {
  require_subgroup(G, k, "K");
  require_subgroup(G, h, "H");
  if (!is_subset_of(h, k)) fail(ErrorCode::NotNested, "H is not contained in K");
}

/// g H g^-1, i.e. {x : g^-1 x g in H}.
inline ElementSet conjugate_subgroup(const FiniteGroup& G, const ElementSet& h, GroupElement g) {
  require_subgroup(G, h, "H");
  G.require(g);
  std::vector<GroupElement> out;
  out.reserve(h.size());
  for (auto x : h) out.push_back(G.conj(g, x));
  return make_set(std::move(out));
}

namespace detail {

inline ElementSet conjugate_unchecked(const FiniteGroup& G, const ElementSet& h, GroupElement g) {
  std::vector<GroupElement> out;
  out.reserve(h.size());
  for (auto x : h) out.push_back(G.conj(g, x));
  return make_set(std::move(out));
}

inline ElementSet join_sets(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

/// {k in K : k H k^-1 = H}
inline ElementSet classical_normalizer(const FiniteGroup& G, const ElementSet& k, const ElementSet& h) {
  require_nested(G, k, h);
  ElementSet out;
  for (auto x : k)
    if (detail::conjugate_unchecked(G, h, x) == h) out.push_back(x);
  return out;
}

inline bool is_normal_subgroup(const FiniteGroup& G, const ElementSet& k, const ElementSet& h) {
  require_nested(G, k, h);
  for (auto x : k)
    for (auto y : h)
      if (!set_contains(h, G.conj(x, y))) return false;
  return true;
}

/// Smallest normal subgroup of K containing H. Alternates between adding
/// conjugates of the current generators and closing under products.
inline ElementSet classical_normal_closure(const FiniteGroup& G, const ElementSet& k, const ElementSet& h) {
  require_nested(G, k, h);
  ElementSet current = h;
  while (true) {
    std::vector<GroupElement> conjugates;
    for (auto x : k)
      for (auto y : current) conjugates.push_back(G.conj(x, y));
    ElementSet next = subgroup_generated(G, make_set(std::move(conjugates)));
    if (next == current) return current;
    current = std::move(next);
  }
}

/// x in <H, x H x^-1> for every x in K.
inline bool classical_is_abnormal(const FiniteGroup& G, const ElementSet& k, const ElementSet& h) {
  require_nested(G, k, h);
  for (auto x : k) {
    if (set_contains(h, x)) continue;
    auto both = detail::join_sets(h, detail::conjugate_unchecked(G, h, x));
    if (!set_contains(subgroup_generated(G, both), x)) return false;
  }
  return true;
}

inline bool classical_is_contranormal(const FiniteGroup& G, const ElementSet& k, const ElementSet& h) {
  return classical_normal_closure(G, k, h) == k;
}

/// Every subgroup of G, sorted by (order, elements).
inline std::vector<ElementSet> all_subgroups(const FiniteGroup& G) {
  std::vector<ElementSet> found;
  std::vector<ElementSet> frontier;
  auto insert = [&](ElementSet s) {
    if (std::find(found.begin(), found.end(), s) != found.end()) return;
    found.push_back(s);
    frontier.push_back(std::move(s));
  };
  for (auto x : G.elements()) {
    const GroupElement one[] = {x};
    insert(subgroup_generated(G, one));
  }
  const std::vector<ElementSet> cyclic = found;
  while (!frontier.empty()) {
    auto s = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& c : cyclic) {
      if (is_subset_of(c, s)) continue;
      insert(subgroup_generated(G, detail::join_sets(s, c)));
    }
  }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// A group homomorphism between two permutation groups, stored as a full
/// image table and checked on every pair at construction.
class Homomorphism {
 public:
  Homomorphism(GroupPtr source, GroupPtr target, std::vector<GroupElement> images)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(images)) {
    if (map_.size() != source_->order()) fail(ErrorCode::NotAHomomorphism, "image table has wrong length");
    for (auto y : map_) target_->require(y);
    if (map_[source_->identity().id] != target_->identity())
      fail(ErrorCode::NotAHomomorphism, "identity not mapped to identity");
    for (auto x : source_->elements())
      for (auto y : source_->elements())
        if (map_[source_->mul(x, y).id] != target_->mul(map_[x.id], map_[y.id]))
          fail(ErrorCode::NotAHomomorphism,
               "f(xy) != f(x)f(y) at x=" + source_->format(x) + ", y=" + source_->format(y));
  }

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  GroupElement operator()(GroupElement x) const { return map_.at(x.id); }

  bool is_surjective() const {
    std::vector<char> hit(target_->order(), 0);
    for (auto y : map_) hit[y.id] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }
  bool is_injective() const { return make_set(map_).size() == map_.size(); }

  ElementSet image_of(const ElementSet& s) const {
    std::vector<GroupElement> out;
    for (auto x : s) out.push_back((*this)(x));
    return make_set(std::move(out));
  }

  ElementSet kernel() const {
    ElementSet out;
    for (auto x : source_->elements())
      if (map_[x.id] == target_->identity()) out.push_back(x);
    return out;
  }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<GroupElement> map_;
};

/// Extends an assignment on the declared generators of `source`
/// multiplicatively. Fails if a generator is missing or the extension is
/// not well defined.
inline Homomorphism hom_from_images(GroupPtr source, GroupPtr target,
                                    const std::vector<std::pair<GroupElement, GroupElement>>& gen_images) {
  const auto& gens = source->generators();
  std::vector<GroupElement> gen_img;
  for (auto g : gens) {
    auto it = std::find_if(gen_images.begin(), gen_images.end(), [g](const auto& p) { return p.first == g; });
    if (it == gen_images.end())
      fail(ErrorCode::IncompleteGenerators, "no image given for generator " + source->format(g));
    target->require(it->second);
    gen_img.push_back(it->second);
  }
  const std::size_t n = source->order();
  std::vector<GroupElement> map(n);
  std::vector<char> known(n, 0);
  std::vector<GroupElement> queue{source->identity()};
  map[0] = target->identity();
  known[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto y = source->mul(x, gens[i]);
      const auto fy = target->mul(map[x.id], gen_img[i]);
      if (!known[y.id]) {
        known[y.id] = 1;
        map[y.id] = fy;
        queue.push_back(y);
      } else if (map[y.id] != fy) {
        fail(ErrorCode::NotAHomomorphism, "assignment is inconsistent at " + source->format(y));
      }
    }
  }
  return Homomorphism(std::move(source), std::move(target), std::move(map));
}

inline Homomorphism identity_hom(const GroupPtr& G) { return Homomorphism(G, G, G->elements()); }

}  // namespace lgroup
