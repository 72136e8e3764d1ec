#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgroup/error.hpp"
#include "lgroup/group.hpp"
#include "lgroup/lattice.hpp"
#include "lgroup/lsubset.hpp"

// Line-oriented text formats for lattices (.lat), groups (.grp) and
// L-subsets (.mu / .eta / .lsub). '#' starts a comment; blank lines are
// ignored; the first token of a line is its keyword.

namespace lgroup::io {

namespace detail {

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;  // trimmed remainder after the keyword
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto body = trim(raw);
    if (body.empty()) continue;
    const auto space = body.find_first_of(" \t");
    Line line{number, body.substr(0, space), space == std::string::npos ? std::string{} : trim(body.substr(space))};
    out.push_back(std::move(line));
  }
  return out;
}

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::string single_word(const Line& line) {
  auto w = words(line.rest);
  if (w.size() != 1) throw ParseError(line.number, "'" + line.keyword + "' takes exactly one argument");
  return w.front();
}

}  // namespace detail

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ValidationError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// Lattices

inline FiniteLattice parse_lattice(std::string_view text) {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& line : detail::lines_of(text)) {
    if (line.keyword == "lattice") {
      if (!name.empty()) throw ParseError(line.number, "second 'lattice' header");
      name = detail::single_word(line);
    } else if (line.keyword == "elem") {
      elements.push_back(detail::single_word(line));
    } else if (line.keyword == "cover") {
      auto w = detail::words(line.rest);
      if (w.size() != 2) throw ParseError(line.number, "'cover' takes a lower and an upper element");
      covers.emplace_back(w[0], w[1]);
    } else {
      throw ParseError(line.number, "unknown keyword '" + line.keyword + "'");
    }
    if (name.empty()) throw ParseError(line.number, "file must start with 'lattice <name>'");
  }
  if (name.empty()) throw ParseError(1, "missing 'lattice' header");
  return build_lattice(name, elements, covers);
}

inline std::string serialize_lattice(const FiniteLattice& lat) {
  std::ostringstream out;
  out << "lattice " << lat.name() << "\n";
  for (auto a : lat.elements()) out << "elem " << lat.name_of(a) << "\n";
  for (const auto& [lo, hi] : lat.covers()) out << "cover " << lat.name_of(lo) << " " << lat.name_of(hi) << "\n";
  return out.str();
}

inline FiniteLattice load_lattice(const std::filesystem::path& path) { return parse_lattice(read_file(path)); }

// ---------------------------------------------------------------------------
// Groups

inline FiniteGroup parse_group(std::string_view text, std::size_t cap = FiniteGroup::kDefaultCap) {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  for (const auto& line : detail::lines_of(text)) {
    if (line.keyword == "group") {
      if (!name.empty()) throw ParseError(line.number, "second 'group' header");
      name = detail::single_word(line);
    } else if (line.keyword == "degree") {
      if (degree != 0) throw ParseError(line.number, "degree declared twice");
      const auto w = detail::single_word(line);
      try {
        std::size_t used = 0;
        degree = std::stoul(w, &used);
        if (used != w.size() || degree == 0) throw std::invalid_argument(w);
      } catch (const std::exception&) {
        throw ParseError(line.number, "degree must be a positive integer");
      }
    } else if (line.keyword == "gen") {
      if (degree == 0) throw ParseError(line.number, "'gen' before 'degree'");
      try {
        gens.push_back(parse_permutation(line.rest, degree));
      } catch (const Error& e) {
        throw ParseError(line.number, e.what());
      }
    } else {
      throw ParseError(line.number, "unknown keyword '" + line.keyword + "'");
    }
    if (name.empty()) throw ParseError(line.number, "file must start with 'group <name>'");
  }
  if (name.empty()) throw ParseError(1, "missing 'group' header");
  if (degree == 0) throw ParseError(1, "missing 'degree'");
  return group_from_generators(name, degree, gens, cap);
}

inline std::string serialize_group(const FiniteGroup& G) {
  std::ostringstream out;
  out << "group " << G.name() << "\n";
  out << "degree " << G.degree() << "\n";
  for (auto g : G.generators()) out << "gen " << G.format(g) << "\n";
  return out.str();
}

inline FiniteGroup load_group(const std::filesystem::path& path) { return parse_group(read_file(path)); }

// ---------------------------------------------------------------------------
// L-subsets

struct NamedLSubset {
  std::string name;
  LSubset value;
};

inline NamedLSubset parse_lsubset(std::string_view text, const GroupPtr& G, const LatticePtr& L) {
  std::string name;
  std::optional<LatticeElement> fallback;
  std::map<std::uint32_t, std::pair<LatticeElement, std::size_t>> explicit_values;
  bool have_over = false;

  auto element_of = [&](const detail::Line& line, const std::string& w) {
    auto e = L->find(w);
    if (!e) throw ParseError(line.number, "'" + w + "' is not an element of lattice " + L->name());
    return *e;
  };

  for (const auto& line : detail::lines_of(text)) {
    if (line.keyword == "lsubset") {
      if (!name.empty()) throw ParseError(line.number, "second 'lsubset' header");
      name = detail::single_word(line);
    } else if (line.keyword == "over") {
      auto w = detail::words(line.rest);
      if (w.size() != 4 || w[0] != "group" || w[2] != "lattice")
        throw ParseError(line.number, "expected 'over group <g> lattice <l>'");
      if (w[1] != G->name())
        fail(ErrorCode::ValidationError, "line " + std::to_string(line.number) + ": L-subset is over group '" + w[1] +
                                             "' but group '" + G->name() + "' was supplied");
      if (w[3] != L->name())
        fail(ErrorCode::ValidationError, "line " + std::to_string(line.number) + ": L-subset is over lattice '" +
                                             w[3] + "' but lattice '" + L->name() + "' was supplied");
      have_over = true;
    } else if (line.keyword == "default") {
      if (fallback) throw ParseError(line.number, "default declared twice");
      fallback = element_of(line, detail::single_word(line));
    } else if (line.keyword == "val") {
      const auto cut = line.rest.find_last_of(" \t");
      if (cut == std::string::npos) throw ParseError(line.number, "expected 'val <cycles> <element>'");
      const auto cycles = detail::trim(line.rest.substr(0, cut));
      const auto value = element_of(line, detail::trim(line.rest.substr(cut)));
      GroupElement x;
      try {
        x = G->parse(cycles);
      } catch (const Error& e) {
        throw ParseError(line.number, e.what());
      }
      if (!explicit_values.emplace(x.id, std::pair{value, line.number}).second)
        throw ParseError(line.number, "element " + G->format(x) + " given two values");
    } else {
      throw ParseError(line.number, "unknown keyword '" + line.keyword + "'");
    }
    if (name.empty()) throw ParseError(line.number, "file must start with 'lsubset <name>'");
  }
  if (name.empty()) throw ParseError(1, "missing 'lsubset' header");
  if (!have_over) throw ParseError(1, "missing 'over group <g> lattice <l>' line");
  if (!fallback && explicit_values.size() != G->order())
    throw ParseError(1, "no 'default' and not every element has a value");

  std::vector<LatticeElement> values(G->order(), fallback.value_or(L->bottom()));
  for (const auto& [id, v] : explicit_values) values[id] = v.first;
  return NamedLSubset{name, LSubset(G, L, std::move(values))};
}

/// The most frequent value becomes the default (lowest id on ties); every
/// other element gets a 'val' line in element order.
inline std::string serialize_lsubset(const std::string& name, const LSubset& eta) {
  const auto& G = eta.group();
  const auto& L = eta.lattice();
  std::vector<std::size_t> count(L.size(), 0);
  for (auto v : eta.values()) ++count[v.id];
  std::size_t best = 0;
  for (std::size_t i = 1; i < count.size(); ++i)
    if (count[i] > count[best]) best = i;
  const LatticeElement fallback{static_cast<std::uint16_t>(best)};

  std::ostringstream out;
  out << "lsubset " << name << "\n";
  out << "over group " << G.name() << " lattice " << L.name() << "\n";
  out << "default " << L.name_of(fallback) << "\n";
  for (auto x : G.elements())
    if (eta(x) != fallback) out << "val " << G.format(x) << " " << L.name_of(eta(x)) << "\n";
  return out.str();
}

inline NamedLSubset load_lsubset(const std::filesystem::path& path, const GroupPtr& G, const LatticePtr& L) {
  return parse_lsubset(read_file(path), G, L);
}

}  // namespace lgroup::io
