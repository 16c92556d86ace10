#include "nefslope/json_io.hpp"

#include <cstdio>

namespace nefslope {

namespace {

std::string approx_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

unsigned dimension_from_json(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 64)
    throw InputError("field 'n' must be an integer in [1, 64]");
  return n.get<unsigned>();
}

Json integers(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

}  // namespace

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError("expected an integer (number or decimal string), got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

Json to_json(const IntersectionProfile& p) { return Json{{"n", p.n}, {"v", integers(p.v)}}; }

IntersectionProfile profile_from_json(const Json& j) {
  IntersectionProfile p;
  p.n = dimension_from_json(j);
  const Json& v = field(j, "v");
  if (!v.is_array()) throw InputError("field 'v' must be an array");
  for (const auto& x : v) p.v.push_back(integer_from_json(x));
  if (p.v.size() != p.n + 1)
    throw InputError("field 'v' must have n+1 = " + std::to_string(p.n + 1) + " entries, got " +
                     std::to_string(p.v.size()));
  return p;
}

Json to_json(const SymMatrixModel& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.F.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.F.size(); ++j) row.push_back(to_string(m.F(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n}, {"Ln", to_string(m.Ln)}, {"F", std::move(rows)}};
}

SymMatrixModel matrix_from_json(const Json& j) {
  SymMatrixModel m;
  m.n = dimension_from_json(j);
  m.Ln = j.contains("Ln") ? integer_from_json(j.at("Ln")) : factorial(m.n);
  const Json& rows = field(j, "F");
  if (!rows.is_array() || rows.size() != m.n) throw InputError("field 'F' must be an n x n array");
  m.F = RationalMatrix(m.n);
  for (unsigned i = 0; i < m.n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m.n) throw InputError("field 'F' must be an n x n array");
    for (unsigned k = 0; k < m.n; ++k) m.F(i, k) = rational_from_json(rows[i][k]);
  }
  check_model(m);
  return m;
}

bool is_matrix_json(const Json& j) { return j.is_object() && j.contains("F"); }

IntersectionProfile any_profile_from_json(const Json& j) {
  return is_matrix_json(j) ? profile_from_matrix(matrix_from_json(j)) : profile_from_json(j);
}

Json to_json(const IntPolynomial& p) { return Json{{"coeffs", integers(p.coeffs())}}; }

IntPolynomial polynomial_from_json(const Json& j) {
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) throw InputError("field 'coeffs' must be an array");
  std::vector<Integer> coeffs;
  for (const auto& x : c) coeffs.push_back(integer_from_json(x));
  return IntPolynomial(std::move(coeffs));
}

Json to_json(const AlgebraicNumber& a) {
  Json out;
  out["minpoly"] = integers(a.minpoly_factor.coeffs());
  out["interval"] = Json::array({to_string(a.lo), to_string(a.hi)});
  out["exact"] = a.exact ? Json(to_string(*a.exact)) : Json(nullptr);
  out["approx"] = approx_string(a.approx());
  return out;
}

Json to_json(const NefReport& r) {
  Json out;
  out["values"] = integers(r.values);
  out["verdict"] = r.nef ? "nef" : "not-nef";
  out["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  out["ample"] = r.ample;
  return out;
}

Json to_json(const Rationality& r) {
  Json out;
  const bool rational = r.verdict == Verdict::Rational;
  out["verdict"] = rational ? "rational" : "irrational";
  out["p"] = rational ? Json(to_string(r.p)) : Json(nullptr);
  out["q"] = rational ? Json(to_string(r.q)) : Json(nullptr);
  Json trace = Json::array();
  for (const auto& c : r.trace.candidates)
    trace.push_back(Json{{"candidate", to_string(c.value)}, {"evaluation", to_string(c.evaluation)}});
  out["trace"] = std::move(trace);
  out["maximal_root"] = r.trace.maximal_root ? Json(*r.trace.maximal_root) : Json(nullptr);
  out["isolating_interval"] = Json::array({to_string(r.trace.interval_lo), to_string(r.trace.interval_hi)});
  out["roots_in_interval"] = r.trace.roots_in_interval;
  out["roots_above"] = r.trace.roots_above;
  return out;
}

Json to_json(const SlopeResult& r) {
  Json out;
  out["kind"] = r.is_infinite() ? "infinite" : "finite";
  out["chi"] = integers(r.chi.coeffs());
  out["positive_roots"] = r.positive_roots;
  if (r.finite) {
    out["zeta"] = to_json(r.finite->zeta);
    out["slope"] = to_json(r.finite->slope);
    out["rationality"] = to_json(r.finite->rationality);
  }
  return out;
}

Json to_json(const ValidationReport& r) {
  Json out;
  out["level"] = to_string(r.level);
  out["ok"] = r.ok();
  if (r.violation) out["violation"] = Json{{"check", r.violation->check}, {"detail", r.violation->detail}};
  return out;
}

Json to_json(const KernelWitness& k) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < k.f_b.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < k.f_b.size(); ++j) row.push_back(to_string(k.f_b(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"f_B", std::move(rows)}, {"nullity", k.nullity}, {"zero", k.zero}};
}

Json to_json(const SimplicityScan& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json j;
    j["label"] = e.label;
    j["verdict"] = to_string(e.verdict);
    if (e.proportional_ratio) j["ratio"] = to_string(*e.proportional_ratio);
    if (e.p) j["p"] = to_string(*e.p);
    if (e.q) j["q"] = to_string(*e.q);
    if (e.boundary) j["boundary"] = to_json(*e.boundary);
    if (e.boundary_nef) j["boundary_nef"] = to_json(*e.boundary_nef);
    if (e.kernel) j["kernel"] = to_json(*e.kernel);
    entries.push_back(std::move(j));
  }
  return Json{{"overall", to_string(s.overall)}, {"instances", std::move(entries)}};
}

Json to_json(const Instance& i) {
  return std::visit([](const auto& x) { return to_json(x); }, i);
}

std::vector<ScanInstance> scan_instances_from_json(const Json& j) {
  const Json& list = j.is_object() ? field(j, "instances") : j;
  if (!list.is_array()) throw InputError("scan input must be an array of instances");
  std::vector<ScanInstance> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Json& item = list[i];
    ScanInstance inst;
    inst.label = item.is_object() && item.contains("label") && item["label"].is_string()
                     ? item["label"].get<std::string>()
                     : "#" + std::to_string(i);
    if (is_matrix_json(item)) {
      inst.matrix = matrix_from_json(item);
      inst.profile = profile_from_matrix(*inst.matrix);
    } else {
      inst.profile = profile_from_json(item);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace nefslope
