#include "g2harm/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "g2harm/errors.hpp"

namespace g2harm {

namespace {

void write(const nlohmann::json& j, int indent, int level, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int lvl) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * lvl), ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(level + 1);
        out += nlohmann::json(it.key()).dump();
        out += pretty ? ": " : ":";
        write(it.value(), indent, level + 1, out);
      }
      newline(level);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // arrays of scalars stay on one line
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat && pretty ? ", " : ",";
        first = false;
        if (!flat) newline(level + 1);
        write(v, indent, level + 1, out);
      }
      if (!flat) newline(level);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump17(const nlohmann::json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

nlohmann::json to_json(const G2Basis& basis) {
  nlohmann::json mats = nlohmann::json::array();
  for (const Mat7R& x : basis) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 7; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < 7; ++k) row.push_back(x(i, k));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return mats;
}

nlohmann::json to_json(const G2Element& g) {
  nlohmann::json flat = nlohmann::json::array();
  for (int i = 0; i < 7; ++i) {
    for (int k = 0; k < 7; ++k) flat.push_back(g.matrix()(i, k));
  }
  return flat;
}

nlohmann::json to_json(const QReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["n_samples"] = r.sample_count;
  j["admitted_samples"] = r.admitted;
  j["seed"] = r.seed;
  j["tol"] = r.tol;
  j["max_abs_error"] = r.max_abs_error;
  j["laplacian_error"] = r.laplacian_error;
  j["conformality_error"] = r.conformality_error;
  j["pass"] = r.passed();
  j["verdict"] = to_string(r.verdict);
  if (r.lambda) j["lambda"] = *r.lambda;
  if (r.mu) j["mu"] = *r.mu;
  return j;
}

G2Basis basis_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(kG2Dim)) {
    throw std::invalid_argument("basis JSON must be an array of 14 matrices");
  }
  G2Basis::Mats mats;
  for (int n = 0; n < kG2Dim; ++n) {
    const auto& rows = j[n];
    if (!rows.is_array() || rows.size() != 7) throw std::invalid_argument("basis matrix must have 7 rows");
    for (int i = 0; i < 7; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 7) throw std::invalid_argument("basis row must have 7 entries");
      for (int k = 0; k < 7; ++k) mats[n](i, k) = rows[i][k].get<double>();
    }
  }
  return G2Basis::from_matrices(mats);
}

G2Element element_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 49) throw std::invalid_argument("group element JSON must have 49 numbers");
  Mat7R m;
  for (int i = 0; i < 7; ++i) {
    for (int k = 0; k < 7; ++k) m(i, k) = j[7 * i + k].get<double>();
  }
  if (!is_g2(m, kCrossCompatTol)) throw InvariantError("group element JSON is not in G2");
  return G2Element::trusted(m);
}

}  // namespace g2harm
