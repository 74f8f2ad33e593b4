// specfile.hpp - structured text input for the CLI.
//
// JSON with rationals as "p/q" strings; floating-point literals are
// rejected wherever exact arithmetic is contractual. Unknown fields are
// errors. Exactly one distribution kind per file.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "typel/ferro.hpp"
#include "typel/moments.hpp"
#include "typel/rational.hpp"
#include "typel/sequences.hpp"

namespace typel {

struct SpecOptions {
  std::optional<long long> N, p, q, precision, seed;
  std::optional<double> tolerance;
  std::vector<Rational> alpha;
};

struct SequencePayload {
  std::vector<Rational> a;
};

struct SpinPayload {
  SpinSystem system;
  std::vector<Rational> weights;  // linear-combination coefficients, default all-1
};

struct SpecFile {
  enum class Kind { lattice, gausspoly, spin_system, sequence } kind;
  std::variant<LatticeDistribution, GaussPolyLaw, SpinPayload, SequencePayload> payload;
  SpecOptions options;
};

struct SpecParseError : std::runtime_error {
  int line = 0, column = 0;
  SpecParseError(const std::string& msg, int l, int c)
      : std::runtime_error(msg), line(l), column(c) {}
};

namespace detail {

inline std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void fail(const std::string& msg) { throw SpecParseError(msg, 0, 0); }

inline Rational rational_field(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string())
    fail(where + ": rationals must be strings like \"p/q\" (floats are rejected)");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where + ": " + e.what());
  }
}

inline std::vector<Rational> rational_array(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of rational strings");
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(rational_field(item, where));
  return out;
}

inline void check_fields(const nlohmann::json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const auto& f : allowed) ok = ok || f == it.key();
    if (!ok) fail(where + ": unknown field '" + it.key() + "'");
  }
}

}  // namespace detail

inline SpecFile parse_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw SpecParseError(e.what(), line, col);
  }
  if (!j.is_object()) detail::fail("spec: top level must be an object");
  detail::check_fields(j, {"kind", "p", "a", "b", "sites", "J", "h", "weights", "options"}, "spec");
  if (!j.contains("kind") || !j["kind"].is_string()) detail::fail("spec: missing kind");
  std::string kind = j["kind"].get<std::string>();

  SpecFile out;
  if (kind == "lattice") {
    out.kind = SpecFile::Kind::lattice;
    detail::check_fields(j, {"kind", "p", "options"}, "lattice");
    if (!j.contains("p")) detail::fail("lattice: missing probability vector p");
    try {
      out.payload = LatticeDistribution(detail::rational_array(j["p"], "lattice.p"));
    } catch (const SpecParseError&) {
      throw;
    } catch (const std::exception& e) {
      detail::fail(std::string("lattice: ") + e.what());
    }
  } else if (kind == "gausspoly") {
    out.kind = SpecFile::Kind::gausspoly;
    detail::check_fields(j, {"kind", "a", "b", "options"}, "gausspoly");
    if (!j.contains("a")) detail::fail("gausspoly: missing a");
    Rational a = detail::rational_field(j["a"], "gausspoly.a");
    std::vector<Rational> b;
    if (j.contains("b")) b = detail::rational_array(j["b"], "gausspoly.b");
    try {
      out.payload = GaussPolyLaw(a, b);
    } catch (const std::exception& e) {
      detail::fail(std::string("gausspoly: ") + e.what());
    }
  } else if (kind == "spin-system") {
    out.kind = SpecFile::Kind::spin_system;
    detail::check_fields(j, {"kind", "sites", "J", "h", "weights", "options"}, "spin-system");
    if (!j.contains("sites") || !j["sites"].is_array()) detail::fail("spin-system: missing sites");
    SpinPayload sp;
    for (const auto& site : j["sites"]) {
      if (!site.is_array()) detail::fail("spin-system: each site is an array of [value, weight]");
      SiteMeasure m;
      for (const auto& atom : site) {
        if (!atom.is_array() || atom.size() != 2)
          detail::fail("spin-system: each atom is [value, weight]");
        m.atoms.emplace_back(detail::rational_field(atom[0], "site value"),
                             detail::rational_field(atom[1], "site weight"));
      }
      sp.system.sites.push_back(std::move(m));
    }
    size_t n = sp.system.sites.size();
    if (j.contains("J")) {
      if (!j["J"].is_array()) detail::fail("spin-system: J must be a matrix");
      for (const auto& row : j["J"])
        sp.system.J.push_back(detail::rational_array(row, "spin-system.J"));
    } else {
      sp.system.J.assign(n, std::vector<Rational>(n, Rational(0)));
    }
    if (j.contains("h"))
      sp.system.h = detail::rational_array(j["h"], "spin-system.h");
    else
      sp.system.h.assign(n, Rational(0));
    if (j.contains("weights"))
      sp.weights = detail::rational_array(j["weights"], "spin-system.weights");
    else
      sp.weights.assign(n, Rational(1));
    try {
      sp.system.validate();
    } catch (const std::exception& e) {
      detail::fail(std::string("spin-system: ") + e.what());
    }
    out.payload = std::move(sp);
  } else if (kind == "sequence") {
    out.kind = SpecFile::Kind::sequence;
    detail::check_fields(j, {"kind", "a", "options"}, "sequence");
    if (!j.contains("a")) detail::fail("sequence: missing a");
    SequencePayload sq;
    sq.a = detail::rational_array(j["a"], "sequence.a");
    out.payload = std::move(sq);
  } else {
    detail::fail("spec: unknown kind '" + kind + "'");
  }

  if (j.contains("options")) {
    const auto& o = j["options"];
    detail::check_fields(o, {"N", "p", "q", "alpha", "precision", "seed", "tolerance"}, "options");
    auto get_int = [&](const char* name) -> std::optional<long long> {
      if (!o.contains(name)) return std::nullopt;
      if (!o[name].is_number_integer()) detail::fail(std::string("options.") + name + ": expected integer");
      return o[name].get<long long>();
    };
    out.options.N = get_int("N");
    out.options.p = get_int("p");
    out.options.q = get_int("q");
    out.options.precision = get_int("precision");
    out.options.seed = get_int("seed");
    if (o.contains("tolerance")) {
      if (!o["tolerance"].is_number()) detail::fail("options.tolerance: expected number");
      out.options.tolerance = o["tolerance"].get<double>();
    }
    if (o.contains("alpha")) out.options.alpha = detail::rational_array(o["alpha"], "options.alpha");
  }
  return out;
}

}  // namespace typel
