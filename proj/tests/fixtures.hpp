#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lgroup/lgroup.hpp"

namespace fx {

using namespace lgroup;

inline std::filesystem::path assets() { return LGROUP_ASSET_DIR; }

inline GroupPtr group(const std::string& file) {
  return std::make_shared<const FiniteGroup>(io::load_group(assets() / file));
}

inline LatticePtr lattice(const std::string& file) {
  return std::make_shared<const FiniteLattice>(io::load_lattice(assets() / file));
}

inline LatticePtr share(FiniteLattice L) { return std::make_shared<const FiniteLattice>(std::move(L)); }

inline LatticePtr chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i) covers.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return share(build_lattice("chain" + std::to_string(n), names, covers));
}

inline LatticePtr pentagon() {
  return share(build_lattice("N5", {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}));
}

inline LatticePtr diamond() {
  return share(
      build_lattice("M3", {"0", "x", "y", "z", "1"}, {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}}));
}

inline LatticePtr cube() {
  const auto two = chain(2);
  return share(product(product(*two, *two), *two));
}

inline LSubset load(const std::string& file, const GroupPtr& G, const LatticePtr& L) {
  return io::load_lsubset(assets() / file, G, L).value;
}

inline LSubset from_table(const GroupPtr& G, const LatticePtr& L, const std::string& fallback,
                          const std::vector<std::pair<std::vector<std::string>, std::string>>& rows) {
  std::vector<LatticeElement> v(G->order(), L->at(fallback));
  for (const auto& [cycles, value] : rows)
    for (const auto& c : cycles) v[G->parse(c).id] = L->at(value);
  return LSubset(G, L, std::move(v));
}

// ---------------------------------------------------------------------------
// Brute-force oracles. These work on raw permutations and lattice order only
// and do not call the library's subgroup or L-subgroup machinery.

/// Calls visit on every valuation G -> L (|L|^|G| of them).
inline void for_each_valuation(const GroupPtr& G, const LatticePtr& L, const std::function<void(const LSubset&)>& visit) {
  const std::size_t n = G->order();
  const std::size_t m = L->size();
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<LatticeElement> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = LatticeElement{static_cast<std::uint16_t>(digit[i])};
    visit(LSubset(G, L, std::move(v)));
    std::size_t i = 0;
    while (i < n && ++digit[i] == m) digit[i++] = 0;
    if (i == n) return;
  }
}

inline std::uint32_t product_id(const FiniteGroup& G, GroupElement x, GroupElement y) {
  return G.find(compose(G.perm(x), G.perm(y)))->id;
}

inline std::uint32_t inverse_id(const FiniteGroup& G, GroupElement x) {
  const auto& p = G.perm(x);
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<std::uint16_t>(i);
  return G.find(q)->id;
}

/// Axioms (i) and (ii) via permutation composition.
inline bool oracle_lsubgroup(const LSubset& eta) {
  const auto& G = eta.group();
  const auto& L = eta.lattice();
  for (auto x : G.elements()) {
    if (eta(GroupElement{inverse_id(G, x)}) != eta(x)) return false;
    for (auto y : G.elements())
      if (!L.leq(L.meet(eta(x), eta(y)), eta(GroupElement{product_id(G, x, y)}))) return false;
  }
  return true;
}

inline bool oracle_leq(const LSubset& a, const LSubset& b) {
  for (auto x : a.group().elements())
    if (!a.lattice().leq(a(x), b(x))) return false;
  return true;
}

/// Every L-subgroup theta with lower ⊆ theta ⊆ upper, by exhaustive
/// valuation scan.
inline std::vector<LSubset> oracle_interval(const LSubset& lower, const LSubset& upper) {
  std::vector<LSubset> out;
  for_each_valuation(lower.group_ptr(), lower.lattice_ptr(), [&](const LSubset& t) {
    if (oracle_leq(lower, t) && oracle_leq(t, upper) && oracle_lsubgroup(t)) out.push_back(t);
  });
  return out;
}

/// Crisp subgroup test on a set of ids, by closure under composition.
inline bool oracle_is_subgroup(const FiniteGroup& G, const std::vector<bool>& in) {
  bool any = false;
  for (auto x : G.elements()) {
    if (!in[x.id]) continue;
    any = true;
    for (auto y : G.elements())
      if (in[y.id] && !in[product_id(G, x, y)]) return false;
  }
  return any;
}

}  // namespace fx
