#include "saturate/frobenius.hpp"

#include <algorithm>
#include <sstream>

#include "saturate/error.hpp"

namespace saturate::frobenius {

namespace {

using RatPoly = std::vector<Rational>;  // lowest first, no trailing zeros
using Matrix = std::vector<std::vector<Rational>>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
  trim(d);
  return d;
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::size_t rat_gcd_degree(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() - 1;
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Solves a x = b; nullopt when a is singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

std::optional<std::uint64_t> p_power_exponent(Integer n, std::uint64_t p) {
  if (n < 0) n = -n;
  if (n == 0 || p < 2) return std::nullopt;
  std::uint64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return e;
}

bool p_power_denominator(const Rational& r, std::uint64_t p) {
  return p_power_exponent(boost::multiprecision::denominator(r), p).has_value();
}

// +-p^m for some integer m (possibly negative).
bool is_p_unit(const Rational& r, std::uint64_t p) {
  return p_power_exponent(boost::multiprecision::numerator(r), p).has_value() && p_power_denominator(r, p);
}

std::string format(const Coeff& c) {
  if (c.size() == 1) return c[0].str();
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << c[i].str();
  out << ']';
  return out.str();
}

// Polynomial arithmetic over a number field; lowest first, no trailing zeros.
using FieldPoly = std::vector<Coeff>;

void trim(const NumberField& k, FieldPoly& p) {
  while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

FieldPoly field_mul(const NumberField& k, const FieldPoly& a, const FieldPoly& b) {
  if (a.empty() || b.empty()) return {};
  FieldPoly out(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  trim(k, out);
  return out;
}

FieldPoly field_monic(const NumberField& k, FieldPoly p) {
  const Coeff inv = k.inv(p.back());
  for (auto& c : p) c = k.mul(c, inv);
  return p;
}

// Quotient and remainder of a by b.
std::pair<FieldPoly, FieldPoly> field_divmod(const NumberField& k, FieldPoly a, const FieldPoly& b) {
  if (a.size() < b.size()) return {{}, a};
  FieldPoly q(a.size() - b.size() + 1, k.zero());
  const Coeff lead_inv = k.inv(b.back());
  while (a.size() >= b.size()) {
    const Coeff c = k.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
    a.pop_back();
    trim(k, a);
  }
  return {q, a};
}

FieldPoly field_gcd(const NumberField& k, FieldPoly a, FieldPoly b) {
  while (!b.empty()) {
    FieldPoly r = field_divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return field_monic(k, a);
}

Integer ipow(const Integer& base, std::uint64_t e) {
  Integer r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

// ---- NumberField -----------------------------------------------------------

NumberField NumberField::rationals() { return NumberField({0, 1}); }

NumberField NumberField::from_minpoly(std::vector<Integer> minpoly) {
  if (minpoly.size() < 2 || minpoly.back() != 1) {
    throw Error(ErrorKind::DegenerateField, "minimal polynomial must be monic of positive degree");
  }
  const RatPoly f(minpoly.begin(), minpoly.end());
  if (rat_gcd_degree(f, rat_derivative(f)) != 0) {
    throw Error(ErrorKind::DegenerateField, "minimal polynomial is not squarefree");
  }
  return NumberField(std::move(minpoly));
}

Coeff NumberField::one() const { return from_rational(1); }

Coeff NumberField::from_rational(const Rational& r) const {
  Coeff c = zero();
  c[0] = r;
  return c;
}

bool NumberField::is_zero(const Coeff& a) const {
  return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r == 0; });
}

Coeff NumberField::add(const Coeff& a, const Coeff& b) const {
  Coeff c(degree());
  for (unsigned i = 0; i < degree(); ++i) c[i] = a[i] + b[i];
  return c;
}

Coeff NumberField::sub(const Coeff& a, const Coeff& b) const {
  Coeff c(degree());
  for (unsigned i = 0; i < degree(); ++i) c[i] = a[i] - b[i];
  return c;
}

Coeff NumberField::neg(const Coeff& a) const {
  Coeff c(degree());
  for (unsigned i = 0; i < degree(); ++i) c[i] = -a[i];
  return c;
}

Coeff NumberField::mul(const Coeff& a, const Coeff& b) const {
  const unsigned d = degree();
  std::vector<Rational> prod(2 * d - 1);
  for (unsigned i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
  }
  // theta^d = -sum f_i theta^i
  for (std::size_t k = prod.size(); k-- > d;) {
    if (prod[k] == 0) continue;
    const Rational c = prod[k];
    for (unsigned i = 0; i < d; ++i) prod[k - d + i] -= c * Rational(minpoly_[i]);
    prod[k] = 0;
  }
  prod.resize(d);
  return prod;
}

Matrix NumberField::multiplication_matrix(const Coeff& a) const {
  const unsigned d = degree();
  Matrix m(d, std::vector<Rational>(d));
  Coeff col = a;
  Coeff theta = zero();
  if (d > 1) theta[1] = 1;
  for (unsigned j = 0; j < d; ++j) {
    for (unsigned i = 0; i < d; ++i) m[i][j] = col[i];
    if (d > 1) col = mul(col, theta);
  }
  return m;
}

Coeff NumberField::inv(const Coeff& a) const {
  auto x = solve(multiplication_matrix(a), one());
  if (!x) throw Error(ErrorKind::DegenerateField, "element " + format(a) + " is not invertible");
  return *x;
}

Rational NumberField::norm(const Coeff& a) const { return determinant(multiplication_matrix(a)); }

std::vector<Rational> NumberField::charpoly(const Coeff& a) const {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{d-k+1} I, c_{d-k} = -tr(A M_k) / k.
  const unsigned d = degree();
  const Matrix A = multiplication_matrix(a);
  std::vector<Rational> c(d + 1);
  c[d] = 1;
  Matrix m(d, std::vector<Rational>(d));
  for (unsigned k = 1; k <= d; ++k) {
    Matrix next(d, std::vector<Rational>(d));
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned j = 0; j < d; ++j) {
        Rational s = 0;
        for (unsigned l = 0; l < d; ++l) s += A[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[d - k + 1];
    }
    Rational tr = 0;
    for (unsigned i = 0; i < d; ++i)
      for (unsigned l = 0; l < d; ++l) tr += A[i][l] * next[l][i];
    c[d - k] = -tr / static_cast<long long>(k);
    m = std::move(next);
  }
  return c;
}

std::vector<roots::Complex> NumberField::embeddings() const {
  if (is_rationals()) return {roots::Complex(0)};
  std::vector<roots::Complex> f;
  for (const auto& x : minpoly_) f.emplace_back(roots::Real(x));
  std::vector<roots::Complex> out;
  for (const auto& disk : roots::isolate_roots(f)) out.push_back(disk.center);
  return out;
}

roots::Complex NumberField::evaluate(const Coeff& a, const roots::Complex& theta) const {
  roots::Complex acc(0);
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = acc * theta + roots::Complex(roots::Real(boost::multiprecision::numerator(a[i])) /
                                       roots::Real(boost::multiprecision::denominator(a[i])));
  }
  return acc;
}

// ---- ExactPolynomial -------------------------------------------------------

ExactPolynomial::ExactPolynomial(NumberField field, std::vector<Coeff> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.size() != field_.degree()) {
      throw Error(ErrorKind::MalformedInput, "coefficient " + format(c) + " needs " +
                                                 std::to_string(field_.degree()) + " power-basis coordinates");
    }
  }
  trim(field_, coeffs_);
  if (coeffs_.empty()) throw Error(ErrorKind::MalformedInput, "zero polynomial");
}

ExactPolynomial ExactPolynomial::over_rationals(const std::vector<Rational>& coeffs) {
  std::vector<Coeff> c;
  for (const auto& r : coeffs) c.push_back({r});
  return ExactPolynomial(NumberField::rationals(), std::move(c));
}

ExactPolynomial ExactPolynomial::from_ints(const std::vector<std::int64_t>& coeffs) {
  std::vector<Rational> r;
  for (auto x : coeffs) r.emplace_back(x);
  return over_rationals(r);
}

bool ExactPolynomial::is_monic() const { return coeffs_.back() == field_.one(); }

std::vector<Rational> ExactPolynomial::rational_coeffs() const {
  std::vector<Rational> out;
  for (const auto& c : coeffs_) out.push_back(c[0]);
  return out;
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::WrongField, "polynomials over different number fields");
  return ExactPolynomial(field_, field_mul(field_, coeffs_, o.coeffs_));
}

// ---- Plainness -------------------------------------------------------------

bool is_plain_rational(const ExactPolynomial& poly, std::uint64_t p) {
  if (!poly.field().is_rationals()) throw Error(ErrorKind::WrongField, "exact plainness needs rational coefficients");
  if (!poly.is_monic()) throw Error(ErrorKind::NotMonic, "leading coefficient is not 1");
  for (const auto& c : poly.coeffs())
    if (!p_power_denominator(c[0], p)) return false;
  return is_p_unit(poly.constant_term()[0], p);
}

NecessaryReport plain_necessary_numberfield(const ExactPolynomial& poly, std::uint64_t p) {
  if (!poly.is_monic()) throw Error(ErrorKind::NotMonic, "leading coefficient is not 1");
  const NumberField& k = poly.field();
  NecessaryReport report;
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
    for (const auto& c : k.charpoly(poly.coeffs()[i])) {
      if (!p_power_denominator(c, p)) {
        report.pass = false;
        report.witness = "coefficient of T^" + std::to_string(i) + " = " + format(poly.coeffs()[i]) +
                         " is not integral over Z[1/" + std::to_string(p) + "]";
        return report;
      }
    }
  }
  const Rational n = k.norm(poly.constant_term());
  if (!is_p_unit(n, p)) {
    report.pass = false;
    report.witness = "norm of the constant term is " + n.str() + ", not +-" + std::to_string(p) + "^m";
  }
  return report;
}

// ---- Root transformations --------------------------------------------------

ExactPolynomial reversed_monic(const ExactPolynomial& poly) {
  const NumberField& k = poly.field();
  if (k.is_zero(poly.constant_term())) throw Error(ErrorKind::DivisionByZero, "constant term is zero");
  const Coeff inv = k.inv(poly.constant_term());
  std::vector<Coeff> out(poly.coeffs().rbegin(), poly.coeffs().rend());
  for (auto& c : out) c = k.mul(c, inv);
  return ExactPolynomial(k, std::move(out));
}

ExactPolynomial squared_roots(const ExactPolynomial& poly) {
  // R(T^2) = (-1)^n P(T) P(-T)
  const NumberField& k = poly.field();
  std::vector<Coeff> minus = poly.coeffs();
  for (std::size_t i = 1; i < minus.size(); i += 2) minus[i] = k.neg(minus[i]);
  const FieldPoly prod = field_mul(k, poly.coeffs(), minus);
  const bool flip = poly.degree() % 2 != 0;
  std::vector<Coeff> out;
  for (std::size_t i = 0; i < prod.size(); i += 2) out.push_back(flip ? k.neg(prod[i]) : prod[i]);
  return ExactPolynomial(k, field_monic(k, std::move(out)));
}

ExactPolynomial squarefree_part(const ExactPolynomial& poly) {
  const NumberField& k = poly.field();
  const auto& p = poly.coeffs();
  FieldPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(k.mul(p[i], k.from_rational(static_cast<long long>(i))));
  trim(k, d);
  if (d.empty()) return ExactPolynomial(k, field_monic(k, p));
  const FieldPoly g = field_gcd(k, p, d);
  return ExactPolynomial(k, field_monic(k, field_divmod(k, p, g).first));
}

// ---- Purity ----------------------------------------------------------------

PurityReport purity_check(const ExactPolynomial& poly, const Integer& q, std::int64_t weight, double tolerance) {
  if (q < 2) throw Error(ErrorKind::MalformedInput, "Q must be at least 2");
  if (!(tolerance > 0)) throw Error(ErrorKind::MalformedInput, "tolerance must be positive");
  const NumberField& k = poly.field();
  PurityReport report;
  report.weight = weight;
  report.tolerance = tolerance;
  report.q = q;

  using roots::Real;
  const Real target = pow(Real(q), Real(weight) / 2);
  const ExactPolynomial sf = squarefree_part(poly);
  // Embedding errors in theta are of the order of the working precision and
  // far below the tolerance; the inclusion radii cover the root finding itself.
  Real worst_dev = 0;
  Real worst_radius = 0;
  for (const auto& theta : k.embeddings()) {
    std::vector<roots::Complex> coeffs;
    for (const auto& c : sf.coeffs()) coeffs.push_back(k.evaluate(c, theta));
    std::vector<std::complex<double>> found;
    for (const auto& disk : roots::isolate_roots(coeffs)) {
      const Real dev = abs(Real(abs(disk.center)) - target) / target;
      const std::complex<double> z(static_cast<double>(disk.center.real()), static_cast<double>(disk.center.imag()));
      found.push_back(z);
      if (dev >= worst_dev) {
        worst_dev = dev;
        report.worst_root = z;
      }
      worst_radius = std::max(worst_radius, disk.radius / target);
    }
    report.roots.push_back(std::move(found));
  }
  report.max_deviation = static_cast<double>(worst_dev);
  report.error_bound = static_cast<double>(worst_radius);
  const Real tol(tolerance);
  if (worst_radius > tol / 2) {
    throw Error(ErrorKind::RootFindingFailure, "root inclusion radii exceed half the tolerance");
  }
  if (worst_dev + worst_radius <= tol) {
    report.pass = true;
  } else if (worst_dev - worst_radius > tol) {
    report.pass = false;
  } else {
    throw Error(ErrorKind::RootFindingFailure, "deviation is within the error bound of the tolerance");
  }

  // Product of all root magnitudes over all embeddings: N(P(0))^2 = Q^{n w [E:Q]}.
  const Rational n2 = [&] {
    const Rational n = k.norm(poly.constant_term());
    return n * n;
  }();
  const std::int64_t e = static_cast<std::int64_t>(poly.degree()) * weight * static_cast<std::int64_t>(k.degree());
  const Integer qe = ipow(q, static_cast<std::uint64_t>(e < 0 ? -e : e));
  report.norm_identity = (e >= 0) ? (n2 == Rational(qe)) : (n2 * qe == 1);
  return report;
}

std::vector<PurityReport> root_product_purity(const ExactPolynomial& poly, const std::vector<ExactPolynomial>& factors,
                                              const Integer& q, std::int64_t weight, double tolerance) {
  const NumberField& k = poly.field();
  FieldPoly prod{k.one()};
  for (const auto& f : factors) {
    if (!(f.field() == k)) throw Error(ErrorKind::WrongField, "factor over a different number field");
    prod = field_mul(k, prod, f.coeffs());
  }
  if (prod != poly.coeffs()) throw Error(ErrorKind::MalformedInput, "factors do not multiply to the polynomial");
  std::vector<PurityReport> out;
  for (const auto& f : factors) {
    // The product of the roots of f is (-1)^m f(0) / lead(f).
    const int m = f.degree();
    Coeff c = k.mul(f.constant_term(), k.inv(f.coeffs().back()));
    if (m % 2 != 0) c = k.neg(c);
    const ExactPolynomial linear(k, {k.neg(c), k.one()});
    out.push_back(purity_check(linear, q, weight * m, tolerance));
  }
  return out;
}

// ---- Reduction -------------------------------------------------------------

ff::Poly reduce_mod(const ExactPolynomial& poly, std::uint32_t ell, std::optional<std::uint64_t> p) {
  if (!poly.field().is_rationals()) throw Error(ErrorKind::WrongField, "reduction needs rational coefficients");
  if (p && *p == ell) throw Error(ErrorKind::EllEqualsP, "ell = p = " + std::to_string(ell));
  const ff::Field f = ff::Field::prime(ell);
  std::vector<ff::Elem> out;
  for (const auto& c : poly.coeffs()) {
    const Integer num = boost::multiprecision::numerator(c[0]);
    const Integer den = boost::multiprecision::denominator(c[0]);
    const std::int64_t dr = static_cast<std::int64_t>(den % ell);
    if (dr == 0) throw Error(ErrorKind::BadDenominator, "denominator of " + c[0].str() + " vanishes mod " +
                                                            std::to_string(ell));
    const std::int64_t nr = static_cast<std::int64_t>(num % ell);
    out.push_back(f.div(f.from_int(nr), f.from_int(dr)));
  }
  return ff::Poly(f, std::move(out));
}

bool compat_check(const FrobTable& table, const std::string& point_id, const matgrp::SquareMatrix& m) {
  const auto it = std::find_if(table.entries.begin(), table.entries.end(),
                               [&](const FrobEntry& e) { return e.id == point_id; });
  if (it == table.entries.end()) throw Error(ErrorKind::MalformedInput, "no entry with id '" + point_id + "'");
  const ff::Field& f = m.field();
  const ff::Poly reduced = reduce_mod(it->poly, f.characteristic(), table.p);
  const ff::Embedding up(reduced.field(), f);
  return matgrp::charpoly(m) == reduced.map_coeffs(f, up);
}

// ---- Tables ----------------------------------------------------------------

std::optional<std::uint64_t> log_p(const Integer& n, std::uint64_t p) {
  if (n <= 0) return std::nullopt;
  return p_power_exponent(n, p);
}

bool TableReport::pass() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.pass(); });
}

TableReport validate_table(const FrobTable& table, std::optional<std::int64_t> weight, double tolerance) {
  TableReport report;
  report.kappa_degree = table.kappa_degree;
  if (!report.kappa_degree && !table.entries.empty()) {
    const auto& first = table.entries.front();
    const auto e = log_p(first.q, table.p);
    if (e && first.residue_degree > 0 && *e % first.residue_degree == 0) report.kappa_degree = *e / first.residue_degree;
  }

  for (const auto& entry : table.entries) {
    EntryReport r;
    r.id = entry.id;
    const ExactPolynomial& poly = entry.poly;

    r.degree_ok = poly.degree() == static_cast<int>(table.degree) && poly.field() == table.field;
    if (!r.degree_ok) {
      r.failures.push_back("degree " + std::to_string(poly.degree()) + " differs from the table degree " +
                           std::to_string(table.degree));
    }

    const auto e = log_p(entry.q, table.p);
    r.q_ok = e && report.kappa_degree && *e == entry.residue_degree * *report.kappa_degree;
    if (!e) {
      r.failures.push_back("q = " + entry.q.str() + " is not a power of p = " + std::to_string(table.p));
    } else if (!r.q_ok) {
      r.failures.push_back("q = " + entry.q.str() + " is not p^(residue_degree * [kappa:F_p])");
    }

    try {
      if (poly.field().is_rationals()) {
        r.plain = is_plain_rational(poly, table.p);
        if (!r.plain) {
          const Rational& c0 = poly.constant_term()[0];
          r.failures.push_back(is_p_unit(c0, table.p)
                                   ? "not plain: a coefficient denominator is not a power of " + std::to_string(table.p)
                                   : "not plain: constant term " + c0.str() + " is not +-" + std::to_string(table.p) +
                                         "^m");
        }
      } else {
        r.plain_exact = false;
        const auto nec = plain_necessary_numberfield(poly, table.p);
        r.plain = nec.pass;
        if (!r.plain) r.failures.push_back("not plain: " + nec.witness);
      }
    } catch (const Error& err) {
      r.failures.push_back(std::string("plainness: ") + std::string(to_string(err.kind())) + ": " + err.detail());
    }

    if (weight && entry.q >= 2) {
      try {
        r.purity = purity_check(poly, entry.q, *weight, tolerance);
        if (!r.purity->pass) {
          std::ostringstream msg;
          msg << "not pure of weight " << *weight << ": relative deviation " << r.purity->max_deviation << " at root "
              << r.purity->worst_root.real() << (r.purity->worst_root.imag() < 0 ? " - " : " + ")
              << std::abs(r.purity->worst_root.imag()) << "i";
          r.failures.push_back(msg.str());
        } else if (!r.purity->norm_identity) {
          r.failures.push_back("norm identity N(P(0))^2 = Q^(n w [E:Q]) fails");
        }
      } catch (const Error& err) {
        r.failures.push_back(std::string("purity: ") + std::string(to_string(err.kind())) + ": " + err.detail());
      }
    }
    report.entries.push_back(std::move(r));
  }
  return report;
}

}  // namespace saturate::frobenius
