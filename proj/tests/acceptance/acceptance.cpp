// Acceptance suite: one line per criterion, with its tolerance and time limit.
// Exits 0 only if every criterion passes inside its limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "saturate/cli/json_io.hpp"
#include "saturate/envelope.hpp"
#include "saturate/error.hpp"
#include "saturate/frobenius.hpp"
#include "saturate/rootdata.hpp"
#include "saturate/weilres.hpp"

using namespace saturate;
using namespace saturate::testing;
using matgrp::FiniteMatrixGroup;

namespace {

const std::string kData = std::string(SATURATE_SOURCE_DIR) + "/data/acceptance/";

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
};

SquareMatrix id2(const Field& f) { return SquareMatrix::identity(f, 2); }

std::set<std::u32string> keys(const std::vector<SquareMatrix>& elems) {
  std::set<std::u32string> out;
  for (const auto& m : elems) out.insert(m.key());
  return out;
}

// Closure by multiplying every known element by every known element until
// nothing new appears, hashed by matrix key.
std::set<std::u32string> product_closure(const std::vector<SquareMatrix>& gens) {
  std::vector<SquareMatrix> elems{SquareMatrix::identity(gens.front().field(), gens.front().dim())};
  std::set<std::u32string> seen{elems.front().key()};
  for (const auto& g : gens)
    if (seen.insert(g.key()).second) elems.push_back(g);
  for (std::size_t done = 0; done < elems.size();) {
    const std::size_t count = elems.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = (i < done ? done : 0); j < count; ++j) {
        SquareMatrix p = elems[i] * elems[j];
        if (seen.insert(p.key()).second) elems.push_back(std::move(p));
      }
    done = count;
  }
  return seen;
}

std::vector<SquareMatrix> unipotents_2x2(const Field& f) {
  std::vector<SquareMatrix> out;
  for (const auto& m : all_matrices(f, 2)) {
    const SquareMatrix x = m - id2(f);
    if ((x * x).is_zero()) out.push_back(m);
  }
  return out;
}

// Rank of the F-span of the group elements, by row reduction.
std::size_t span_rank(const FiniteMatrixGroup& g) {
  const Field& f = g.field();
  const std::size_t w = g.dim() * g.dim();
  std::vector<std::vector<Elem>> basis;  // rows with a leading 1 at pivots[i]
  std::vector<std::size_t> pivots;
  for (const auto& m : g.elements()) {
    std::vector<Elem> v(m.entries().begin(), m.entries().end());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Elem c = v[pivots[i]];
      if (!c.code) continue;
      for (std::size_t j = 0; j < w; ++j) v[j] = f.sub(v[j], f.mul(c, basis[i][j]));
    }
    std::size_t lead = 0;
    while (lead < w && !v[lead].code) ++lead;
    if (lead == w) continue;
    const Elem inv = f.inv(v[lead]);
    for (auto& e : v) e = f.mul(e, inv);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Elem c = basis[i][lead];
      if (!c.code) continue;
      for (std::size_t j = 0; j < w; ++j) basis[i][j] = f.sub(basis[i][j], f.mul(c, v[j]));
    }
    basis.push_back(std::move(v));
    pivots.push_back(lead);
    if (basis.size() == w) break;
  }
  return basis.size();
}

FiniteMatrixGroup kronecker(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
  std::vector<SquareMatrix> gens;
  for (const auto& x : a.generators()) gens.push_back(matgrp::tensor_embed(x, SquareMatrix::identity(b.field(), b.dim())));
  for (const auto& y : b.generators()) gens.push_back(matgrp::tensor_embed(SquareMatrix::identity(a.field(), a.dim()), y));
  if (gens.empty()) return FiniteMatrixGroup::trivial(a.field(), a.dim() * b.dim());
  return matgrp::group_closure(a.field(), a.dim() * b.dim(), gens);
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return nlohmann::json::parse(buf.str());
}

// ---------------------------------------------------------------------------

Outcome exp_log_bijection() {
  Outcome o;
  for (std::uint32_t ell : {5U, 7U, 11U}) {
    const Field f = Field::prime(ell);
    std::size_t nilpotents = 0;
    for (const auto& x : all_matrices(f, 2)) {
      if (!(x * x).is_zero()) continue;
      ++nilpotents;
      const SquareMatrix u = matgrp::exp_n(x);
      o.require(u == id2(f) + x, "exp(X) != I + X over F_" + std::to_string(ell));
      o.require(matgrp::log_n(u) == x, "log(exp(X)) != X over F_" + std::to_string(ell));
    }
    // X^2 = 0 in M_2 means trace and determinant vanish: ell^2 solutions.
    o.require(nilpotents == std::size_t{ell} * ell, "nilpotent count over F_" + std::to_string(ell));
    for (const auto& u : unipotents_2x2(f))
      o.require(matgrp::exp_n(matgrp::log_n(u)) == u, "exp(log(u)) != u over F_" + std::to_string(ell));
  }
  return o;
}

Outcome t_power_homomorphism() {
  Outcome o;
  const Field f = Field::prime(7);
  for (const auto& u : unipotents_2x2(f))
    for (std::int64_t s = 0; s < 7; ++s)
      for (std::int64_t t = 0; t < 7; ++t) {
        const SquareMatrix lhs = matgrp::t_power(u, f.from_int(s + t));
        const SquareMatrix rhs = matgrp::t_power(u, f.from_int(s)) * matgrp::t_power(u, f.from_int(t));
        o.require(lhs == rhs, "u^(s+t) != u^s u^t for s=" + std::to_string(s) + " t=" + std::to_string(t));
      }
  return o;
}

Outcome nori_envelope_oracle() {
  Outcome o;
  for (std::uint32_t ell : {5U, 7U, 11U, 13U}) {
    const Field f = Field::prime(ell);
    const std::vector<SquareMatrix> gens{id2(f) + SquareMatrix::unit(f, 2, 0, 1), id2(f) + SquareMatrix::unit(f, 2, 1, 0)};
    const auto g = matgrp::group_closure(gens);
    const auto env = envelope::nori_envelope(g);
    const std::string at = " for ell=" + std::to_string(ell);
    o.require(env.group.order() == sl2_order(ell), "envelope order" + at);
    o.require(env.lie.dimension() == 3, "Lie dimension" + at);
    o.require(keys(env.group.elements()) == product_closure(gens), "envelope differs from the closure oracle" + at);
  }
  return o;
}

Outcome gamma_plus_oracle() {
  Outcome o;
  for (std::uint32_t ell : {5U, 7U}) {
    const Field f = Field::prime(ell);
    const auto gl = matgrp::group_closure(matgrp::general_linear_generators(f, 2));
    const std::string at = " for ell=" + std::to_string(ell);
    o.require(gl.order() == matgrp::general_linear_order(ell, 2), "GL_2 order" + at);
    std::set<std::u32string> sl;
    for (const auto& m : all_matrices(f, 2))
      if (cofactor_det(m) == f.one()) sl.insert(m.key());
    const auto gp = matgrp::gamma_plus(gl);
    o.require(gp.order() == sl2_order(ell), "gamma_plus order" + at);
    o.require(keys(gp.elements()) == sl, "gamma_plus differs from the determinant-one oracle" + at);
  }
  return o;
}

Outcome tensor_saturation() {
  Outcome o;
  const Field f = Field::prime(5);
  const SquareMatrix e = id2(f) + SquareMatrix::unit(f, 2, 0, 1);
  const SquareMatrix e2 = id2(f) + SquareMatrix::unit(f, 2, 1, 0);
  const SquareMatrix d = SquareMatrix::unit(f, 2, 0, 0).scaled(f.primitive()) + SquareMatrix::unit(f, 2, 1, 1);
  const std::vector<FiniteMatrixGroup> corpus{
      FiniteMatrixGroup::trivial(f, 2),
      matgrp::group_closure(std::vector<SquareMatrix>{e}),
      matgrp::group_closure(std::vector<SquareMatrix>{e2}),
      matgrp::group_closure(std::vector<SquareMatrix>{d}),
      matgrp::group_closure(std::vector<SquareMatrix>{e, d}),
      matgrp::group_closure(std::vector<SquareMatrix>{e, e2}),
  };
  for (std::size_t i = 0; i < corpus.size(); ++i)
    o.require(envelope::is_saturated_points(corpus[i]), "corpus group " + std::to_string(i) + " is not saturated");
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const auto k = kronecker(corpus[i], corpus[j]);
      o.require(k.dim() == 4, "Kronecker image is not in GL_4");
      o.require(envelope::is_saturated_points(k),
                "Kronecker image of (" + std::to_string(i) + "," + std::to_string(j) + ") is not saturated");
    }
  return o;
}

Outcome dynkin_heights() {
  Outcome o;
  for (unsigned n = 2; n <= 6; ++n) {
    const auto rs = rootdata::root_system('A', n - 1);
    const auto std_rep = rootdata::standard_rep(rs);
    for (unsigned i = 1; i < n; ++i)
      o.require(rootdata::dynkin_height(rootdata::exterior_power(std_rep, i)) == std::int64_t(i) * (n - i),
                "ht of wedge^" + std::to_string(i) + " std of SL_" + std::to_string(n));
  }
  const std::vector<std::pair<char, unsigned>> types{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 3}, {'G', 2}};
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<rootdata::RepWeights> reps;
    for (int side = 0; side < 2; ++side) {
      const auto [type, rank] = types[rng()() % types.size()];
      const auto rs = rootdata::root_system(type, rank);
      rootdata::Vec mu(rank);
      for (auto& c : mu) c = static_cast<std::int64_t>(rng()() % 3);
      reps.push_back(rootdata::weyl_orbit(rs, mu));
      // The orbit's height agrees with the highest-weight formula.
      o.require(rootdata::Rational(rootdata::dynkin_height(reps.back())) == rootdata::dynkin_height_from_highest(rs, mu),
                "orbit height differs from the highest-weight formula");
    }
    const auto both = rootdata::external_tensor(reps[0], reps[1]);
    o.require(rootdata::dynkin_height(both) ==
                  rootdata::dynkin_height(reps[0]) + rootdata::dynkin_height(reps[1]),
              "external tensor height is not additive on trial " + std::to_string(trial));
  }
  return o;
}

std::vector<std::pair<char, unsigned>> simple_types_up_to_rank8() {
  std::vector<std::pair<char, unsigned>> out;
  for (unsigned r = 1; r <= 8; ++r) out.push_back({'A', r});
  for (unsigned r = 2; r <= 8; ++r) out.push_back({'B', r});
  for (unsigned r = 3; r <= 8; ++r) out.push_back({'C', r});
  for (unsigned r = 4; r <= 8; ++r) out.push_back({'D', r});
  for (unsigned r = 6; r <= 8; ++r) out.push_back({'E', r});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

Outcome coxeter_cross_check() {
  Outcome o;
  for (const auto& [type, rank] : simple_types_up_to_rank8()) {
    const auto rs = rootdata::root_system(type, rank);
    const std::int64_t h = rootdata::coxeter_number(rs);
    o.require(h == rootdata::coxeter_via_rho(rs), "two Coxeter formulas disagree on " + rs.name());
    // |R| = h * rank for every irreducible system.
    o.require(2 * static_cast<std::int64_t>(rs.positive_roots().size()) == h * rank, "|R| != h * rank on " + rs.name());
    if (type == 'A') o.require(h == rank + 1, "h(A_{n-1}) != n for " + rs.name());
  }
  return o;
}

Outcome simple_group_tables() {
  Outcome o;
  for (unsigned m = 1; m <= 8; ++m) {
    const auto d = rootdata::simple_group_data('A', m);
    o.require(d.center_order == m + 1 && d.min_faithful_dim == m + 1, "SL_" + std::to_string(m + 1));
  }
  for (unsigned m = 3; m <= 8; ++m) {
    const auto b = rootdata::simple_group_data('B', m);
    o.require(b.center_order == 2 && b.min_faithful_dim == 2 * m + 1, "B_" + std::to_string(m));
  }
  for (unsigned m = 2; m <= 8; ++m) {
    const auto c = rootdata::simple_group_data('C', m);
    o.require(c.center_order == 2 && c.min_faithful_dim == 2 * m, "C_" + std::to_string(m));
  }
  for (unsigned m = 4; m <= 8; ++m) {
    const auto d = rootdata::simple_group_data('D', m);
    o.require(d.center_order == 4 && d.min_faithful_dim == 2 * m, "D_" + std::to_string(m));
  }
  const std::vector<std::tuple<char, unsigned, std::int64_t, std::int64_t>> exceptional{
      {'E', 6, 3, 27}, {'E', 7, 2, 56}, {'E', 8, 1, 248}, {'F', 4, 1, 26}, {'G', 2, 1, 7}};
  for (const auto& [type, rank, center, dim] : exceptional) {
    const auto d = rootdata::simple_group_data(type, rank);
    o.require(d.center_order == center && d.min_faithful_dim == dim,
              std::string(1, type) + std::to_string(rank) + " table entry");
  }
  for (const auto& [type, rank] : simple_types_up_to_rank8()) {
    if ((type == 'B' && rank < 3) || (type == 'C' && rank < 2)) continue;
    const auto d = rootdata::simple_group_data(type, rank);
    o.require(d.center_order <= d.min_faithful_dim, "center exceeds the minimal dimension");
  }
  return o;
}

Outcome weil_restriction() {
  Outcome o;
  for (std::int64_t d = 1; d <= 6; ++d)
    for (std::int64_t v = 1; v <= 6; ++v) {
      const std::int64_t h = weilres::restriction_height(d, v);
      o.require(h == d * (v - 1) && h == d * v - d, "restriction height at d=" + std::to_string(d));
    }

  const Field f4 = Field::create(2, 2);
  const weilres::RestrictionContext c4(f4, Field::prime(2));
  for (auto a : f4.elements())
    for (auto b : f4.elements()) {
      if (!a.code || !b.code) continue;
      const SquareMatrix ma(f4, 1, {a}), mb(f4, 1, {b});
      o.require(weilres::weilres_embed(c4, ma * mb) == weilres::weilres_embed(c4, ma) * weilres::weilres_embed(c4, mb),
                "iota is not multiplicative on GL_1(F_4)");
    }
  const Field f9 = Field::create(3, 2);
  const weilres::RestrictionContext c9(f9, Field::prime(3));
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_invertible(f9, 2);
    const auto b = random_invertible(f9, 2);
    o.require(weilres::weilres_embed(c9, a * b) == weilres::weilres_embed(c9, a) * weilres::weilres_embed(c9, b),
              "iota is not multiplicative on GL_2(F_9)");
  }

  // (n, d, ell) = (2, 2, 5): SL_2(F_5) inside the restriction of SL_2 from F_25.
  const Field f5 = Field::prime(5);
  const Field f25 = Field::create(5, 2);
  const weilres::RestrictionContext c25(f25, f5);
  std::vector<SquareMatrix> diag_gens;
  for (const auto& m : matgrp::special_linear_generators(f5, 2)) diag_gens.push_back(matgrp::embed(m, f25));
  const auto diag = weilres::weilres_group(c25, matgrp::group_closure(diag_gens));
  const auto sat = envelope::saturation_closure(diag, 1);
  const auto big = weilres::weilres_group(c25, matgrp::group_closure(matgrp::special_linear_generators(f25, 2)));
  const std::size_t small_dim = envelope::log_span(sat, envelope::Scalars::full).dimension();
  const std::size_t big_dim = envelope::log_span(big, envelope::Scalars::full).dimension();
  o.require(small_dim == 3 && big_dim == 6,
            "Lie dimensions " + std::to_string(small_dim) + " and " + std::to_string(big_dim) + ", expected 3 and 6");
  return o;
}

Outcome frobenius_checkers() {
  Outcome o;
  const auto table = cli::frob_table_from_json(read_json(kData + "frob/legendre_f5.json"));
  o.require(table.entries.size() == 50, "table does not have 50 entries");
  for (const auto& e : table.entries) {
    const auto c = e.poly.rational_coeffs();
    const bool shape = c.size() == 3 && c[2] == 1 && c[0] == frobenius::Rational(e.q);
    o.require(shape, e.id + " is not T^2 - aT + q");
    if (!shape) continue;
    const frobenius::Rational a = -c[1];
    o.require(a * a <= frobenius::Rational(4 * e.q), e.id + " violates |a| <= 2 sqrt(q)");
    o.require(frobenius::is_plain_rational(e.poly, table.p), e.id + " is not plain");
  }
  const auto report = frobenius::validate_table(table, 1, 1e-9);
  o.require(report.pass(), "shipped table fails validation");
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& r = report.entries[i];
    o.require(r.plain && r.plain_exact, r.id + " plainness is not exact");
    o.require(r.purity && r.purity->pass && r.purity->max_deviation <= 1e-9, r.id + " purity");
    if (!r.pass()) continue;
    // |N(P(0))| = Q^{n w / 2} with n = 2, w = 1 and E = Q.
    const auto& e = table.entries[i];
    o.require(r.purity->norm_identity && abs(e.poly.rational_coeffs()[0]) == frobenius::Rational(e.q),
              r.id + " norm identity");
  }

  const auto mutated = cli::frob_table_from_json(read_json(kData + "frob/legendre_f5_mutated.json"));
  const auto bad = frobenius::validate_table(mutated, 1, 1e-9);
  std::size_t failing = 0;
  for (const auto& r : bad.entries)
    if (!r.pass()) {
      ++failing;
      o.require(!r.failures.empty() && !r.failures.front().empty(), "mutated entry has no witness line");
    }
  o.require(!bad.pass() && failing == 1, "mutated table should fail on exactly one entry");
  return o;
}

Outcome burnside_irreducibility() {
  Outcome o;
  const Field f5 = Field::prime(5);
  const auto sl2 = matgrp::group_closure(matgrp::special_linear_generators(f5, 2));
  o.require(envelope::is_absolutely_irreducible(sl2), "SL_2(F_5) reported reducible");
  const SquareMatrix t = SquareMatrix::unit(f5, 2, 0, 0).scaled(f5.primitive()) +
                         SquareMatrix::unit(f5, 2, 1, 1).scaled(f5.inv(f5.primitive()));
  const auto torus = matgrp::group_closure(std::vector<SquareMatrix>{t});
  o.require(!envelope::is_absolutely_irreducible(torus), "diagonal torus reported irreducible");

  std::size_t irreducible = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Field f = trial % 2 ? Field::prime(5) : Field::prime(3);
    const std::size_t n = trial % 2 ? 2 : 3;
    std::vector<SquareMatrix> gens{random_invertible(f, n)};
    // Every third subgroup is cyclic, the rest have two generators.
    if (trial % 3) gens.push_back(random_invertible(f, n));
    const auto g = matgrp::group_closure(gens);
    const bool oracle = span_rank(g) == n * n;
    irreducible += oracle;
    o.require(envelope::is_absolutely_irreducible(g) == oracle, "disagrees with the span oracle on trial " + std::to_string(trial));
  }
  o.require(irreducible > 0 && irreducible < 20, "random corpus does not exercise both verdicts");
  return o;
}

struct Criterion {
  int number;
  std::string name;
  std::string tolerance;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exp/log bijection on M_2(F_l), l in {5,7,11}", "exact", 10, exp_log_bijection},
      {2, "u^(s+t) = u^s u^t on unipotents of GL_2(F_7)", "exact", 5, t_power_homomorphism},
      {3, "Nori envelope of <I+E12, I+E21>, l in {5,7,11,13}", "exact", 60, nori_envelope_oracle},
      {4, "gamma_plus(GL_2(F_l)) = SL_2(F_l), l in {5,7}", "exact", 60, gamma_plus_oracle},
      {5, "Kronecker products of saturated groups in GL_2(F_5)", "exact", 300, tensor_saturation},
      {6, "Dynkin heights of wedge powers and external tensors", "exact", 1, dynkin_heights},
      {7, "Coxeter number two ways, simple types of rank <= 8", "exact", 1, coxeter_cross_check},
      {8, "center orders and minimal faithful dimensions", "exact", 1, simple_group_tables},
      {9, "Weil restriction heights, iota, and the (2,2,5) example", "exact", 120, weil_restriction},
      {10, "Frobenius table plainness, weight-1 purity, mutation", "rel 1e-9", 5, frobenius_checkers},
      {11, "Burnside irreducibility against the span oracle", "exact", 30, burnside_irreducibility},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    if (out.pass && !in_time) out.detail = "over the time limit";
    const bool ok = out.pass && in_time;
    failed += !ok;
    std::printf("%s %2d  %-58s tol=%-8s %8.3fs < %gs%s%s\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(),
                c.tolerance.c_str(), secs, c.limit_s, ok ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
