#include "cliffrad/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cliffrad {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("JSON: missing key '") + key + "'");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) throw Error(std::string("JSON: '") + key + "' must be an integer");
  return v.get<int>();
}

double number_or_zero(const json& j, const char* key) {
  if (!j.contains(key)) return 0.0;
  const json& v = j.at(key);
  if (!v.is_number()) throw Error(std::string("JSON: '") + key + "' must be a number");
  return v.get<double>();
}

std::vector<double> real_vector(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_array()) throw Error(std::string("JSON: '") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw Error(std::string("JSON: '") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

json to_json(const Multivector& a) {
  json terms = json::array();
  for (const auto& [b, c] : a.terms())
    terms.push_back({{"blade", b.indices()}, {"re", c.real()}, {"im", c.imag()}});
  return {{"m", a.dim()}, {"terms", std::move(terms)}};
}

Multivector multivector_from_json(const json& j) {
  const int m = require_int(j, "m");
  if (m < 1 || m > kMaxDim) throw Error("JSON: m out of range");
  const json& terms = require(j, "terms");
  if (!terms.is_array()) throw Error("JSON: 'terms' must be an array");
  Multivector out(m);
  for (const auto& t : terms) {
    const json& bl = require(t, "blade");
    if (!bl.is_array()) throw Error("JSON: 'blade' must be an array");
    const auto idx = bl.get<std::vector<int>>();
    out.add_term(Blade::from_indices(idx, m), cplx(number_or_zero(t, "re"), number_or_zero(t, "im")));
  }
  return out;
}

json to_json(const MVPolynomial& p) {
  json terms = json::array();
  for (const auto& [alpha, c] : p.terms())
    terms.push_back({{"exp", alpha.exponents(p.nvars())}, {"mv", to_json(c)}});
  json out = {{"m", p.dim()}};
  if (p.nvars() != p.dim()) out["nvars"] = p.nvars();
  out["terms"] = std::move(terms);
  return out;
}

MVPolynomial polynomial_from_json(const json& j) {
  const int m = require_int(j, "m");
  if (m < 1 || m > kMaxDim) throw Error("JSON: m out of range");
  const json& terms = require(j, "terms");
  if (!terms.is_array()) throw Error("JSON: 'terms' must be an array");
  int nvars = m;
  if (j.contains("nvars")) {
    nvars = require_int(j, "nvars");
  } else if (!terms.empty()) {
    const json& e = require(terms.front(), "exp");
    if (!e.is_array()) throw Error("JSON: 'exp' must be an array");
    nvars = static_cast<int>(e.size());
  }
  MVPolynomial out(m, nvars);
  for (const auto& t : terms) {
    const json& e = require(t, "exp");
    if (!e.is_array()) throw Error("JSON: 'exp' must be an array");
    const auto exps = e.get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != nvars) throw Error("JSON: exponent length differs from nvars");
    for (int x : exps)
      if (x < 0) throw Error("JSON: negative exponent");
    const Multivector c = multivector_from_json(require(t, "mv"));
    if (c.dim() != m) throw Error("JSON: coefficient dimension differs from m");
    out.add_term(MonoIndex(exps), c);
  }
  return out;
}

json to_json(const NullFrame& f) { return {{"t", f.t()}, {"s", f.s()}}; }

NullFrame frame_from_json(const json& j) {
  auto t = real_vector(j, "t");
  auto s = real_vector(j, "s");
  if (t.size() != s.size()) throw Error("JSON: frame vectors differ in length");
  return make_null_frame(std::move(t), std::move(s));
}

json to_json(const ResultMetadata& meta) {
  return {{"mode", meta.mode},
          {"samples", meta.samples},
          {"seed", meta.seed},
          {"stderr-max", meta.stderr_max}};
}

json load_json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  std::string body;
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    body = text;
  } else {
    std::ifstream in(text);
    if (!in) throw Error("cannot open '" + text + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace cliffrad
