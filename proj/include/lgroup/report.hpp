#pragma once

#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lgroup/group.hpp"
#include "lgroup/lattice.hpp"
#include "lgroup/lsubset.hpp"
#include "lgroup/suites.hpp"
#include "lgroup/theory.hpp"

// Text and structured renderings. Structured output is one `key = value`
// per line with dotted keys; group elements in keys use comma-separated
// cycles, e.g. `normalizer.(1,2)(3,4) = u`.

namespace lgroup::report {

inline const char* yes(bool b) { return b ? "true" : "false"; }

inline std::string defect_text(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : "none"; }

inline void put_valuation(std::ostream& out, const std::string& prefix, const LSubset& eta) {
  for (auto x : eta.group().elements())
    out << prefix << "." << eta.group().format(x, ",") << " = " << eta.lattice().name_of(eta(x)) << "\n";
}

inline std::string valuation_inline(const LSubset& eta) {
  std::string s;
  for (auto x : eta.group().elements()) {
    if (!s.empty()) s += " ";
    s += eta.group().format(x, ",") + "=" + eta.lattice().name_of(eta(x));
  }
  return s;
}

inline std::string classification_structured(const ClassificationReport& r, const FiniteGroup& G,
                                             const FiniteLattice& L) {
  std::ostringstream out;
  out << "subject = " << r.subject << "\n";
  out << "parent = " << r.parent << "\n";
  out << "group = " << G.name() << "\n";
  out << "lattice = " << L.name() << "\n";
  out << "lattice.distributive = " << yes(is_distributive(L)) << "\n";
  out << "is_lsubgroup = " << yes(r.is_lsubgroup) << "\n";
  out << "tip = " << L.name_of(r.tip) << "\n";
  out << "tail = " << L.name_of(r.tail) << "\n";
  if (!r.is_lsubgroup) return out.str();
  out << "proper = " << yes(r.proper) << "\n";
  out << "normal = " << yes(r.normal) << "\n";
  out << "abnormal = " << yes(r.abnormal) << "\n";
  out << "contranormal = " << yes(r.contranormal) << "\n";
  out << "self_normalizing = " << yes(r.self_normalizing) << "\n";
  out << "subnormal_defect = " << defect_text(r.subnormal_defect) << "\n";
  out << "maximal = " << to_string(r.maximal) << "\n";
  if (r.normalizer) put_valuation(out, "normalizer", *r.normalizer);
  if (r.normal_closure) put_valuation(out, "normal_closure", *r.normal_closure);
  return out.str();
}

inline std::string classification_text(const ClassificationReport& r, const FiniteGroup& G, const FiniteLattice& L) {
  std::ostringstream out;
  auto row = [&](const char* k, const std::string& v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "  %-18s", k);
    out << buf << v << "\n";
  };
  out << r.subject << " in " << r.parent << " (group " << G.name() << ", lattice " << L.name() << ")\n";
  row("L-subgroup", yes(r.is_lsubgroup));
  row("tip / tail", L.name_of(r.tip) + " / " + L.name_of(r.tail));
  if (!r.is_lsubgroup) return out.str();
  row("proper", yes(r.proper));
  row("normal", yes(r.normal));
  row("abnormal", yes(r.abnormal));
  row("contranormal", yes(r.contranormal));
  row("self-normalizing", yes(r.self_normalizing));
  row("subnormal defect", defect_text(r.subnormal_defect));
  row("maximal", to_string(r.maximal));
  if (r.normalizer) row("normalizer", valuation_inline(*r.normalizer));
  if (r.normal_closure) row("normal closure", valuation_inline(*r.normal_closure));
  return out.str();
}

/// Tallies summed over scopes: "S3*M/abn_nor" counts towards "abn_nor".
inline std::map<std::string, Tally> by_check(const SuiteResult& r) {
  std::map<std::string, Tally> out;
  for (const auto& [key, t] : r.tallies) {
    const auto slash = key.rfind('/');
    auto& dst = out[slash == std::string::npos ? key : key.substr(slash + 1)];
    dst.run += t.run;
    dst.passed += t.passed;
    dst.skipped += t.skipped;
  }
  return out;
}

/// Deterministic: no timing, tallies in key order.
inline std::string suite_structured(const SuiteResult& r) {
  std::ostringstream out;
  out << "suite = " << r.name << "\n";
  out << "status = " << (r.ok() ? "pass" : "fail") << "\n";
  out << "cases_run = " << r.cases_run << "\n";
  out << "cases_passed = " << r.cases_passed << "\n";
  out << "cases_failed = " << r.failed_total << "\n";
  out << "skipped = " << r.skipped << "\n";
  for (const auto& [key, t] : by_check(r))
    out << "check." << key << " = " << t.passed << "/" << t.run << " skipped " << t.skipped << "\n";
  for (const auto& [key, t] : r.tallies)
    out << "tally." << key << " = " << t.passed << "/" << t.run << " skipped " << t.skipped << "\n";
  out << "failures.shown = " << r.failures.size() << "\n";
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    const auto& f = r.failures[i];
    out << "failure." << i + 1 << ".case = " << f.case_id << "\n";
    out << "failure." << i + 1 << ".expected = " << f.expected << "\n";
    out << "failure." << i + 1 << ".actual = " << f.actual << "\n";
  }
  return out.str();
}

inline std::string suite_text(const SuiteResult& r) {
  std::ostringstream out;
  out << "suite " << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << ", " << r.cases_passed << "/" << r.cases_run
      << " passed, " << r.skipped << " skipped\n";
  for (const auto& [key, t] : by_check(r)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-32s %9zu/%-9zu%s\n", key.c_str(), t.passed, t.run,
                  t.passed == t.run ? "" : "  FAIL");
    out << buf;
  }
  for (const auto& [key, t] : r.tallies)
    if (t.passed != t.run) out << "  failing: " << key << " (" << t.run - t.passed << ")\n";
  for (const auto& f : r.failures)
    out << "  - " << f.case_id << "\n      expected: " << f.expected << "\n      actual:   " << f.actual << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "  wall time %.2f s\n", r.wall_seconds);
  out << buf;
  return out.str();
}

struct Census {
  std::size_t total = 0;
  std::size_t normal = 0;
  std::size_t abnormal = 0;
  std::size_t contranormal = 0;
  std::size_t maximal = 0;
  std::size_t maximal_unknown = 0;
  std::size_t none = 0;
};

inline Census census_of(const std::vector<ClassificationReport>& reports) {
  Census c;
  for (const auto& r : reports) {
    ++c.total;
    c.normal += r.normal;
    c.abnormal += r.abnormal;
    c.contranormal += r.contranormal;
    c.maximal += r.maximal == Tri::True;
    c.maximal_unknown += r.maximal == Tri::BudgetExceeded;
    c.none += !(r.normal || r.abnormal || r.contranormal || r.maximal == Tri::True);
  }
  return c;
}

inline std::string census_line(const Census& c) {
  std::ostringstream out;
  out << "census: total " << c.total << ", normal " << c.normal << ", abnormal " << c.abnormal << ", contranormal "
      << c.contranormal << ", maximal " << c.maximal << ", none " << c.none;
  if (c.maximal_unknown) out << ", maximal budget-exceeded " << c.maximal_unknown;
  return out.str();
}

inline std::string enumeration_structured(const std::vector<LSubset>& thetas,
                                          const std::vector<ClassificationReport>& reports) {
  std::ostringstream out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    const auto p = "lsubgroup." + std::to_string(i + 1);
    out << p << ".values = " << valuation_inline(thetas[i]) << "\n";
    out << p << ".normal = " << yes(r.normal) << "\n";
    out << p << ".abnormal = " << yes(r.abnormal) << "\n";
    out << p << ".contranormal = " << yes(r.contranormal) << "\n";
    out << p << ".self_normalizing = " << yes(r.self_normalizing) << "\n";
    out << p << ".subnormal_defect = " << defect_text(r.subnormal_defect) << "\n";
    out << p << ".maximal = " << to_string(r.maximal) << "\n";
  }
  const auto c = census_of(reports);
  out << "census.total = " << c.total << "\n";
  out << "census.normal = " << c.normal << "\n";
  out << "census.abnormal = " << c.abnormal << "\n";
  out << "census.contranormal = " << c.contranormal << "\n";
  out << "census.maximal = " << c.maximal << "\n";
  out << "census.maximal_budget_exceeded = " << c.maximal_unknown << "\n";
  out << "census.none = " << c.none << "\n";
  return out.str();
}

inline std::string enumeration_text(const std::vector<LSubset>& thetas,
                                    const std::vector<ClassificationReport>& reports) {
  std::ostringstream out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    std::string tags;
    auto tag = [&](bool on, const char* name) {
      if (on) tags += std::string(tags.empty() ? "" : ",") + name;
    };
    tag(r.normal, "normal");
    tag(r.abnormal, "abnormal");
    tag(r.contranormal, "contranormal");
    tag(r.maximal == Tri::True, "maximal");
    out << "#" << i + 1 << " [" << (tags.empty() ? "-" : tags) << "] " << valuation_inline(thetas[i]) << "\n";
  }
  out << census_line(census_of(reports)) << "\n";
  return out.str();
}

}  // namespace lgroup::report
