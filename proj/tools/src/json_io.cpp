#include "saturate/cli/json_io.hpp"

#include <limits>

#include "saturate/error.hpp"

namespace saturate::cli {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::MalformedInput, path + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(path + "." + key, "missing");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_positive(const json& j, const std::string& path) {
  const auto v = as_int(j, path);
  if (v < 1) bad(path, "expected a positive integer");
  return static_cast<std::uint64_t>(v);
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

frobenius::Integer integer_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return frobenius::Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return frobenius::Integer(j.get<std::string>());
    } catch (const std::exception&) {
      bad(path, "not an integer");
    }
  }
  bad(path, "expected an integer");
}

json integer_to_json(const frobenius::Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

}  // namespace

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, origin + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

// ---- fields and matrices ---------------------------------------------------

ff::Field field_from_json(const json& j, const std::string& path) {
  const auto ell = as_positive(member(j, "ell", path), path + ".ell");
  std::uint64_t degree = 1;
  if (j.contains("degree")) degree = as_positive(j["degree"], path + ".degree");
  if (ell > std::numeric_limits<std::uint32_t>::max() || degree > 64) bad(path, "field too large");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) {
    const json& m = as_array(j["modulus"], path + ".modulus");
    std::vector<std::uint32_t> v;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto c = as_int(m[i], idx(path + ".modulus", i));
      if (c < 0 || static_cast<std::uint64_t>(c) >= ell) bad(idx(path + ".modulus", i), "coefficient out of range");
      v.push_back(static_cast<std::uint32_t>(c));
    }
    modulus = std::move(v);
  }
  return ff::Field::create(static_cast<std::uint32_t>(ell), static_cast<unsigned>(degree), modulus);
}

json field_to_json(const ff::Field& f) {
  return json{{"ell", f.characteristic()}, {"degree", f.degree()}, {"modulus", f.modulus()}};
}

ff::Elem elem_from_json(const ff::Field& f, const json& j, const std::string& path) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (!j.is_array()) bad(path, "expected an integer or a coordinate array");
  if (j.size() > f.degree()) bad(path, "more coordinates than the field degree");
  const ff::Field prime = ff::Field::prime(f.characteristic());
  std::vector<std::uint32_t> c(f.degree(), 0);
  for (std::size_t i = 0; i < j.size(); ++i) c[i] = prime.from_int(as_int(j[i], idx(path, i))).code;
  return f.from_coeffs(c);
}

json elem_to_json(const ff::Field& f, ff::Elem x) {
  if (f.degree() == 1) return x.code;
  return f.coeffs(x);
}

matgrp::SquareMatrix matrix_from_rows(const ff::Field& f, std::size_t n, const json& rows, const std::string& path) {
  as_array(rows, path);
  if (rows.size() != n) bad(path, "expected " + std::to_string(n) + " rows");
  matgrp::SquareMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = as_array(rows[i], idx(path, i));
    if (row.size() != n) bad(idx(path, i), "expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) m.at(i, k) = elem_from_json(f, row[k], idx(idx(path, i), k));
  }
  return m;
}

matgrp::SquareMatrix matrix_from_json(const json& j, const std::string& path) {
  const ff::Field f = field_from_json(member(j, "field", path), path + ".field");
  const auto n = as_positive(member(j, "n", path), path + ".n");
  return matrix_from_rows(f, n, member(j, "rows", path), path + ".rows");
}

json matrix_rows(const matgrp::SquareMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(elem_to_json(m.field(), m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const matgrp::SquareMatrix& m) {
  return json{{"field", field_to_json(m.field())}, {"n", m.dim()}, {"rows", matrix_rows(m)}};
}

matgrp::FiniteMatrixGroup group_from_json(const json& j, std::size_t cap) {
  const ff::Field f = field_from_json(member(j, "field", "group"), "group.field");
  const auto n = as_positive(member(j, "n", "group"), "group.n");
  const json& gens = as_array(member(j, "generators", "group"), "group.generators");
  std::vector<matgrp::SquareMatrix> ms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = idx("group.generators", i);
    if (gens[i].is_object()) {
      matgrp::SquareMatrix m = matrix_from_json(gens[i], p);
      if (!(m.field() == f) || m.dim() != n) bad(p, "generator does not match the group's field and size");
      ms.push_back(std::move(m));
    } else {
      ms.push_back(matrix_from_rows(f, n, gens[i], p));
    }
  }
  return matgrp::group_closure(f, n, ms, cap);
}

json group_to_json(const matgrp::FiniteMatrixGroup& g) {
  json gens = json::array();
  for (const auto& m : g.generators()) gens.push_back(matrix_rows(m));
  return json{{"field", field_to_json(g.field())}, {"n", g.dim()}, {"generators", gens}};
}

// ---- root data -------------------------------------------------------------

rootdata::RootSystem root_system_from_json(const json& j, const std::string& path) {
  if (j.is_array()) {
    std::vector<rootdata::RootSystem> parts;
    for (std::size_t i = 0; i < j.size(); ++i) parts.push_back(root_system_from_json(j[i], idx(path, i)));
    if (parts.empty()) bad(path, "empty product");
    return rootdata::product(parts);
  }
  const json& t = member(j, "type", path);
  if (!t.is_string() || t.get<std::string>().size() != 1) bad(path + ".type", "expected a one-letter type");
  const auto rank = as_positive(member(j, "rank", path), path + ".rank");
  return rootdata::root_system(t.get<std::string>()[0], static_cast<unsigned>(rank));
}

rootdata::RepWeights rep_from_json(const json& j) {
  rootdata::RepWeights rep{root_system_from_json(member(j, "system", "rep"), "rep.system"), {}};
  const json& ws = as_array(member(j, "weights", "rep"), "rep.weights");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const json& w = as_array(ws[i], idx("rep.weights", i));
    rootdata::Vec v;
    for (std::size_t k = 0; k < w.size(); ++k) v.push_back(as_int(w[k], idx(idx("rep.weights", i), k)));
    rep.weights.push_back(std::move(v));
  }
  return rep;
}

json vec_to_json(const rootdata::Vec& v) { return json(v); }

// ---- Frobenius tables ------------------------------------------------------

frobenius::NumberField number_field_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "Q") bad(path, "expected \"Q\" or {\"minpoly\": [...]}");
    return frobenius::NumberField::rationals();
  }
  const json& m = as_array(member(j, "minpoly", path), path + ".minpoly");
  std::vector<frobenius::Integer> c;
  for (std::size_t i = 0; i < m.size(); ++i) c.push_back(integer_from_json(m[i], idx(path + ".minpoly", i)));
  return frobenius::NumberField::from_minpoly(std::move(c));
}

json number_field_to_json(const frobenius::NumberField& k) {
  if (k.is_rationals()) return "Q";
  json m = json::array();
  for (const auto& c : k.minpoly()) m.push_back(integer_to_json(c));
  return json{{"minpoly", m}};
}

frobenius::Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_string()) {
    if (j.is_string()) {
      try {
        return frobenius::Rational(j.get<std::string>());
      } catch (const std::exception&) {
        bad(path, "not a rational number");
      }
    }
    return frobenius::Rational(j.get<std::int64_t>());
  }
  if (j.is_array() && j.size() == 2) {
    const auto den = integer_from_json(j[1], path + "[1]");
    if (den == 0) bad(path, "zero denominator");
    return frobenius::Rational(integer_from_json(j[0], path + "[0]")) / frobenius::Rational(den);
  }
  bad(path, "expected an integer, \"a/b\" or [num, den]");
}

json rational_to_json(const frobenius::Rational& r) {
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return integer_to_json(boost::multiprecision::numerator(r));
  return json::array({integer_to_json(boost::multiprecision::numerator(r)), integer_to_json(den)});
}

frobenius::ExactPolynomial polynomial_from_json(const frobenius::NumberField& k, const json& j,
                                                const std::string& path) {
  as_array(j, path);
  std::vector<frobenius::Coeff> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = idx(path, i);
    if (k.is_rationals()) {
      coeffs.push_back({rational_from_json(j[i], p)});
      continue;
    }
    const json& c = as_array(j[i], p);
    if (c.size() != k.degree()) bad(p, "expected " + std::to_string(k.degree()) + " power-basis coordinates");
    frobenius::Coeff v;
    for (std::size_t l = 0; l < c.size(); ++l) v.push_back(rational_from_json(c[l], idx(p, l)));
    coeffs.push_back(std::move(v));
  }
  if (coeffs.empty()) bad(path, "empty coefficient list");
  return frobenius::ExactPolynomial(k, std::move(coeffs));
}

json polynomial_to_json(const frobenius::ExactPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) {
    if (p.field().is_rationals()) {
      out.push_back(rational_to_json(c[0]));
    } else {
      json v = json::array();
      for (const auto& r : c) v.push_back(rational_to_json(r));
      out.push_back(std::move(v));
    }
  }
  return out;
}

frobenius::FrobTable frob_table_from_json(const json& j) {
  frobenius::FrobTable t;
  t.p = as_positive(member(j, "p", "table"), "table.p");
  if (!ff::is_prime(t.p)) bad("table.p", "not a prime");
  t.field = j.contains("field") ? number_field_from_json(j["field"], "table.field") : frobenius::NumberField::rationals();
  t.degree = static_cast<unsigned>(as_positive(member(j, "degree", "table"), "table.degree"));
  if (j.contains("kappa_degree")) t.kappa_degree = as_positive(j["kappa_degree"], "table.kappa_degree");
  const json& es = as_array(member(j, "entries", "table"), "table.entries");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = idx("table.entries", i);
    frobenius::FrobEntry e;
    const json& id = member(es[i], "id", p);
    if (!id.is_string()) bad(p + ".id", "expected a string");
    e.id = id.get<std::string>();
    e.residue_degree = es[i].contains("residue_degree") ? as_positive(es[i]["residue_degree"], p + ".residue_degree") : 1;
    e.q = integer_from_json(member(es[i], "q", p), p + ".q");
    e.poly = polynomial_from_json(t.field, member(es[i], "coeffs", p), p + ".coeffs");
    t.entries.push_back(std::move(e));
  }
  return t;
}

json frob_table_to_json(const frobenius::FrobTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) {
    entries.push_back(json{{"id", e.id},
                           {"residue_degree", e.residue_degree},
                           {"q", integer_to_json(e.q)},
                           {"coeffs", polynomial_to_json(e.poly)}});
  }
  json out{{"schema", 1},
           {"p", t.p},
           {"field", number_field_to_json(t.field)},
           {"degree", t.degree},
           {"entries", entries}};
  if (t.kappa_degree) out["kappa_degree"] = *t.kappa_degree;
  return out;
}

json purity_to_json(const frobenius::PurityReport& r) {
  return json{{"weight", r.weight},
              {"tolerance", r.tolerance},
              {"q", integer_to_json(r.q)},
              {"max_deviation", r.max_deviation},
              {"error_bound", r.error_bound},
              {"pass", r.pass},
              {"norm_identity", r.norm_identity},
              {"worst_root", json::array({r.worst_root.real(), r.worst_root.imag()})}};
}

json table_report_to_json(const frobenius::TableReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json x{{"id", e.id},
           {"pass", e.pass()},
           {"plain", e.plain},
           {"plain_mode", e.plain_exact ? "exact" : "necessary-only"},
           {"degree_ok", e.degree_ok},
           {"q_ok", e.q_ok},
           {"failures", e.failures}};
    if (e.purity) x["purity"] = purity_to_json(*e.purity);
    entries.push_back(std::move(x));
  }
  json out{{"pass", r.pass()}, {"entries", entries}};
  out["kappa_degree"] = r.kappa_degree ? json(*r.kappa_degree) : json(nullptr);
  return out;
}

}  // namespace saturate::cli
