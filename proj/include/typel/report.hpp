// report.hpp - machine-readable check reports and CSV artifact writers.
//
// Every record carries an anchor from a fixed registry (free-form anchors
// are rejected) so downstream tooling can rely on stable identifiers.
// Output is byte-deterministic for fixed inputs: runtimes are reported as
// 0 unless timing collection is explicitly enabled.

#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "typel/ferro.hpp"
#include "typel/gausspoly.hpp"
#include "typel/moments.hpp"
#include "typel/sequences.hpp"

namespace typel {

inline const std::vector<std::string>& anchor_registry() {
  static const std::vector<std::string> registry = {
      "moment-comparison",      "r-log-concavity",    "sequence-log-concavity",
      "lattice-enestrom-kakeya",
      "lattice-power-sum",      "schur-cohn-circle",  "numeric-roots",
      "newton-inequalities",    "binomial-convolution", "factorial-weighted",
      "gurvits-coefficient",    "sign-sequence",      "egf-grid",
      "zb-closed-form",         "zb-monotone",        "moment-envelope",
      "density-interlacing",    "schur-concavity",    "ghost-equivalence",
      "lee-yang-circle",        "ferro-moment-comparison", "independent-sum",
      "density-scan",           "plumbing"};
  return registry;
}

struct CheckRecord {
  std::string id;       // unique within one report
  std::string anchor;   // member of anchor_registry()
  std::string verdict;  // holds | fails | na | inconclusive
  std::string value;    // slack / metric, exact string or decimal
  std::string mode;     // "exact" or "precision-<digits>"
  long long runtime_ms = 0;
};

struct Report {
  std::vector<CheckRecord> records;

  void add(CheckRecord rec) {
    bool known = false;
    for (const auto& a : anchor_registry()) known = known || a == rec.anchor;
    if (!known) throw std::logic_error("Report: unregistered anchor '" + rec.anchor + "'");
    if (rec.verdict != "holds" && rec.verdict != "fails" && rec.verdict != "na" &&
        rec.verdict != "inconclusive")
      throw std::logic_error("Report: bad verdict '" + rec.verdict + "'");
    records.push_back(std::move(rec));
  }

  bool all_hold() const {
    for (const auto& r : records)
      if (r.verdict == "fails") return false;
    return true;
  }
  bool any_fails() const { return !all_hold(); }
  bool any_inconclusive() const {
    for (const auto& r : records)
      if (r.verdict == "inconclusive") return true;
    return false;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      nlohmann::ordered_json rec;
      rec["id"] = r.id;
      rec["anchor"] = r.anchor;
      rec["verdict"] = r.verdict;
      rec["value"] = r.value;
      rec["mode"] = r.mode;
      rec["runtime_ms"] = r.runtime_ms;
      arr.push_back(rec);
    }
    nlohmann::ordered_json out;
    out["checks"] = arr;
    return out;
  }
};

// ---------------------------------------------------------------------------
// CSV artifacts

inline std::string moment_sequence_csv(const MomentSequence& seq) {
  std::string out = "n,m_numerator,m_denominator,r_numerator,r_denominator\n";
  for (size_t n = 0; n < seq.size(); ++n) {
    out += std::to_string(n) + "," + seq.m[n].num().to_string() + "," +
           seq.m[n].den().to_string() + "," + seq.r[n].num().to_string() + "," +
           seq.r[n].den().to_string() + "\n";
  }
  return out;
}

inline std::string sequence_csv(const std::vector<Rational>& a) {
  std::string out = "index,numerator,denominator\n";
  for (size_t i = 0; i < a.size(); ++i)
    out += std::to_string(i) + "," + a[i].num().to_string() + "," + a[i].den().to_string() + "\n";
  return out;
}

inline std::string polynomial_csv(const RatPoly& p) {
  std::string out = "k,numerator,denominator\n";
  for (size_t k = 0; k < p.c.size(); ++k)
    out += std::to_string(k) + "," + p.c[k].num().to_string() + "," + p.c[k].den().to_string() +
           "\n";
  return out;
}

inline std::string density_table_csv(const PolyGaussDensity& d, double x_max, double step) {
  std::string out = "x,P,density\n";
  double a = d.a.to_double();
  char buf[128];
  for (double x = -x_max; x <= x_max + 1e-12; x += step) {
    double px = 0.0, xp = 1.0;
    for (size_t k = 0; k < d.P.c.size(); ++k) {
      px += d.P.c[k].to_double() * xp;
      xp *= x;
    }
    double dens = px * std::exp(-x * x / (2.0 * a)) / std::sqrt(2.0 * M_PI * a);
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", x, px, dens);
    out += buf;
  }
  return out;
}

inline std::string state_table_csv(const WeightedStateTable& t, int digits = 30) {
  std::string out = "state,weight\n";
  for (size_t i = 0; i < t.configs.size(); ++i) {
    std::string cfg;
    for (size_t j = 0; j < t.configs[i].size(); ++j) {
      if (j) cfg += ";";
      cfg += t.configs[i][j].to_string();
    }
    out += "\"" + cfg + "\"," + to_decimal(t.weights[i].mid, digits) + "\n";
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

}  // namespace typel
