#include "amwp/json_io.hpp"

#include <fstream>

namespace amwp {

namespace {

BigRat rational_field(const Json& j) {
  if (j.is_number_integer()) return BigRat(j.get<long>());
  if (j.is_string()) return BigRat::from_string(j.get<std::string>());
  throw std::invalid_argument("json: rational values must be strings or integers");
}

Cplx complex_field(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("json: complex values are [re, im] pairs");
  return Cplx(j[0].get<double>(), j[1].get<double>());
}

Json complex_to_json(const Cplx& z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

CubicForm cubic_from_json(const Json& j) {
  if (!j.contains("r") || !j.contains("mode") || !j.contains("terms"))
    throw std::invalid_argument("json cubic: need fields r, mode, terms");
  int r = j.at("r").get<int>();
  std::string mode = j.at("mode").get<std::string>();
  if (mode == "monomials") {
    std::map<Exponents, BigRat> mono;
    for (const auto& term : j.at("terms")) {
      Exponents e = term.at("exponents").get<Exponents>();
      mono[e] = mono.count(e) ? mono[e] + rational_field(term.at("value"))
                              : rational_field(term.at("value"));
    }
    return CubicForm::from_monomials(r, mono);
  }
  if (mode == "intersection") {
    std::vector<std::pair<std::array<int, 3>, BigRat>> entries;
    for (const auto& term : j.at("terms")) {
      auto idx = term.at("indices").get<std::vector<int>>();
      if (idx.size() != 3)
        throw std::invalid_argument("json cubic: indices must be triples");
      entries.push_back(
          {{idx[0] - 1, idx[1] - 1, idx[2] - 1}, rational_field(term.at("value"))});
    }
    return CubicForm::from_intersection(r, entries);
  }
  throw std::invalid_argument("json cubic: mode must be monomials or intersection");
}

Json cubic_to_json(const CubicForm& f) {
  Json j;
  j["r"] = f.r();
  j["mode"] = "monomials";
  Json terms = Json::array();
  MPoly poly = f.polynomial();
  for (const auto& [e, c] : poly.terms()) {
    Json t;
    t["exponents"] = e;
    t["value"] = c.to_string();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Prepotential prepotential_from_json(const Json& j) {
  if (!j.contains("cubic"))
    throw std::invalid_argument("json prepotential: need field cubic");
  Prepotential p(cubic_from_json(j.at("cubic")));
  const int r = p.r();
  if (j.contains("quadratic")) {
    const auto& q = j.at("quadratic");
    if (static_cast<int>(q.size()) != r)
      throw std::invalid_argument("json prepotential: quadratic must be r rows");
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(q[i].size()) != r)
        throw std::invalid_argument("json prepotential: quadratic row length");
      for (int k = 0; k < r; ++k) p.quadratic[i][k] = complex_field(q[i][k]);
    }
  }
  if (j.contains("linear")) {
    const auto& l = j.at("linear");
    if (static_cast<int>(l.size()) != r)
      throw std::invalid_argument("json prepotential: linear must have r entries");
    for (int i = 0; i < r; ++i) p.linear[i] = complex_field(l[i]);
  }
  if (j.contains("constant")) p.constant = complex_field(j.at("constant"));
  if (j.contains("tail")) {
    for (const auto& t : j.at("tail")) {
      Prepotential::TailTerm term;
      term.m = t.at("m").get<std::vector<int>>();
      term.c = complex_field(t.at("c"));
      p.tail.push_back(std::move(term));
    }
  }
  p.validate();
  return p;
}

Json prepotential_to_json(const Prepotential& p) {
  Json j;
  j["cubic"] = cubic_to_json(p.cubic);
  Json quad = Json::array();
  for (const auto& row : p.quadratic) {
    Json jr = Json::array();
    for (const auto& z : row) jr.push_back(complex_to_json(z));
    quad.push_back(std::move(jr));
  }
  j["quadratic"] = std::move(quad);
  Json lin = Json::array();
  for (const auto& z : p.linear) lin.push_back(complex_to_json(z));
  j["linear"] = std::move(lin);
  j["constant"] = complex_to_json(p.constant);
  Json tail = Json::array();
  for (const auto& t : p.tail) {
    Json jt;
    jt["m"] = t.m;
    jt["c"] = complex_to_json(t.c);
    tail.push_back(std::move(jt));
  }
  j["tail"] = std::move(tail);
  return j;
}

LatticeSimplex polytope_from_json(const Json& j) {
  if (!j.contains("vertices"))
    throw std::invalid_argument("json polytope: need field vertices");
  std::vector<LatticePoint> verts;
  for (const auto& v : j.at("vertices")) verts.push_back(v.get<LatticePoint>());
  return LatticeSimplex(std::move(verts));
}

Json polytope_to_json(const LatticeSimplex& p) {
  Json j;
  j["vertices"] = p.vertices();
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("json parse error: ") + e.what());
  }
  return j;
}

}  // namespace amwp
