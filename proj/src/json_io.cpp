#include "salemlat/json_io.hpp"

namespace salemlat {

Json to_json(const Integer& x) { return x.str(); }

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(IntVector(m.row(i).transpose())));
  return out;
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const SignatureTriple& s) {
  return Json{{"n_plus", s.n_plus}, {"n_zero", s.n_zero}, {"n_minus", s.n_minus}};
}

Json to_json(const DiscriminantGroup& d) {
  Json factors = Json::array();
  for (const auto& f : d.invariant_factors) factors.push_back(to_json(f));
  return Json{{"invariant_factors", factors}, {"order", to_json(d.order)}};
}

Json to_json(const GramLattice& l) {
  return Json{{"rank", l.rank()}, {"gram", to_json(l.gram())}, {"even", l.is_even()}};
}

Json to_json(const SalemCertificate& c) {
  return Json{{"polynomial", to_json(c.polynomial)},
              {"degree", c.degree},
              {"trace", to_json(c.trace)},
              {"salem_lo", to_json(c.salem_number.lo)},
              {"salem_hi", to_json(c.salem_number.hi)},
              {"quadratic", c.is_quadratic}};
}

Json to_json(const SalemClassification& c) {
  Json out;
  out["salem"] = c.is_salem();
  out["certificate"] = c.certificate ? to_json(*c.certificate) : Json(nullptr);
  out["rejection"] = c.rejection ? Json(to_string(*c.rejection)) : Json(nullptr);
  out["detail"] = c.detail;
  return out;
}

Json to_json(const IsometryClassification& c) {
  Json factors = Json::array();
  for (const auto& [f, m] : c.factors) factors.push_back(Json{{"factor", to_json(f)}, {"multiplicity", m}});
  Json out;
  out["kind"] = to_string(c.kind);
  out["determinant"] = c.determinant;
  out["order"] = c.order ? Json(std::to_string(*c.order)) : Json(nullptr);
  out["certificate"] = c.certificate ? to_json(*c.certificate) : Json(nullptr);
  out["factors"] = factors;
  return out;
}

Json to_json(const PrimeSelection& p) {
  Json pl = Json::array(), ql = Json::array();
  for (const auto& x : p.p_list) pl.push_back(to_json(x));
  for (const auto& x : p.q_list) ql.push_back(to_json(x));
  return Json{{"p", to_json(p.p)}, {"q", to_json(p.q)}, {"p_list", pl}, {"q_list", ql}};
}

Json to_json(const QuarticAlgebraElement& x) {
  return Json::array({to_json(x[0]), to_json(x[1]), to_json(x[2]), to_json(x[3])});
}

Json to_json(const PeriodPoint& p) {
  Json coords = Json::array();
  for (const auto& c : p.coordinates) coords.push_back(to_json(c));
  return Json{{"A", to_json(p.a)}, {"basis", "1, sqrt2, w, sqrt2*w"}, {"coordinates", coords}};
}

Json to_json(const NamedCheck& c) {
  Json out{{"name", c.name}, {"pass", c.pass}};
  if (c.witness) out["witness"] = to_json(*c.witness);
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

// ---------------------------------------------------------------------------

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long long>()) : Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const Error&) {
      throw InputFormatError("not a decimal integer: \"" + j.get<std::string>() + "\"");
    }
  }
  throw InputFormatError("expected an integer or a decimal string, got " + j.dump());
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputFormatError("expected an array of integers");
  IntVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = integer_from_json(j[i]);
  return v;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputFormatError("expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  IntMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputFormatError("matrix rows have different lengths");
    m.row(static_cast<Index>(i)) = vector_from_json(j[i]).transpose();
  }
  return m;
}

static const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputFormatError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

GramLattice lattice_from_json(const Json& j) {
  const IntMatrix g = matrix_from_json(member(j, "gram"));
  if (g.rows() != g.cols()) throw InputFormatError("Gram matrix is not square");
  if (g != g.transpose()) throw InputFormatError("Gram matrix is not symmetric");
  GramLattice l(g);
  if (j.contains("rank") && integer_from_json(j.at("rank")) != Integer(l.rank())) {
    throw InputFormatError("\"rank\" does not match the Gram matrix");
  }
  if (j.contains("even")) {
    if (!j.at("even").is_boolean()) throw InputFormatError("\"even\" must be a boolean");
    if (j.at("even").get<bool>() != l.is_even()) throw InputFormatError("\"even\" does not match the Gram matrix");
  }
  return l;
}

IntMatrix isometry_matrix_from_json(const Json& j) {
  return matrix_from_json(j.is_object() ? member(j, "matrix") : j);
}

std::vector<IntVector> vectors_from_json(const Json& j) {
  const Json& arr = j.is_object() ? member(j, "vectors") : j;
  if (!arr.is_array()) throw InputFormatError("expected an array of vectors");
  std::vector<IntVector> out;
  for (const auto& v : arr) {
    out.push_back(vector_from_json(v));
    if (out.back().size() != out.front().size()) throw InputFormatError("vectors have different lengths");
  }
  return out;
}

PrimeSelection primes_from_json(const Json& j) {
  PrimeSelection p;
  p.p = integer_from_json(member(j, "p"));
  p.q = integer_from_json(member(j, "q"));
  const Json& pl = member(j, "p_list");
  const Json& ql = member(j, "q_list");
  if (!pl.is_array() || !ql.is_array()) throw InputFormatError("p_list and q_list must be arrays");
  for (const auto& x : pl) p.p_list.push_back(integer_from_json(x));
  for (const auto& x : ql) p.q_list.push_back(integer_from_json(x));
  return p;
}

}  // namespace salemlat
