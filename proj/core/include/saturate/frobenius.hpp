#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "saturate/matrix.hpp"
#include "saturate/poly.hpp"
#include "saturate/roots.hpp"

namespace saturate::frobenius {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// An element of a number field as its coordinates in the power basis
/// 1, theta, ..., theta^(d-1).
using Coeff = std::vector<Rational>;

/// Q[x]/(f) for a monic squarefree integer polynomial f. Degree one is the
/// rationals. Irreducibility is not required up front; operations that need a
/// field (inverses) throw DegenerateField when they meet a zero divisor.
class NumberField {
 public:
  static NumberField rationals();
  /// Lowest coefficient first. Throws DegenerateField for a non-monic,
  /// constant or non-squarefree polynomial.
  static NumberField from_minpoly(std::vector<Integer> minpoly);

  unsigned degree() const noexcept { return static_cast<unsigned>(minpoly_.size() - 1); }
  bool is_rationals() const noexcept { return degree() == 1; }
  const std::vector<Integer>& minpoly() const noexcept { return minpoly_; }

  Coeff zero() const { return Coeff(degree()); }
  Coeff one() const;
  Coeff from_rational(const Rational& r) const;
  bool is_zero(const Coeff& a) const;
  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff inv(const Coeff& a) const;

  /// Matrix of multiplication by a on the power basis (column j = a theta^j).
  std::vector<std::vector<Rational>> multiplication_matrix(const Coeff& a) const;
  /// Absolute norm: the determinant of the multiplication matrix.
  Rational norm(const Coeff& a) const;
  /// Characteristic polynomial of the multiplication matrix, lowest first.
  std::vector<Rational> charpoly(const Coeff& a) const;

  /// Images of theta under the complex embeddings.
  std::vector<roots::Complex> embeddings() const;
  roots::Complex evaluate(const Coeff& a, const roots::Complex& theta) const;

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.minpoly_ == b.minpoly_; }

 private:
  explicit NumberField(std::vector<Integer> minpoly) : minpoly_(std::move(minpoly)) {}
  std::vector<Integer> minpoly_;
};

/// A polynomial over a number field, lowest coefficient first, with no
/// trailing zero coefficients.
class ExactPolynomial {
 public:
  ExactPolynomial(NumberField field, std::vector<Coeff> coeffs);
  static ExactPolynomial over_rationals(const std::vector<Rational>& coeffs);
  /// From integer coefficients, lowest first.
  static ExactPolynomial from_ints(const std::vector<std::int64_t>& coeffs);

  const NumberField& field() const noexcept { return field_; }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& constant_term() const { return coeffs_.front(); }
  bool is_monic() const;
  /// Only meaningful over the rationals.
  std::vector<Rational> rational_coeffs() const;

  ExactPolynomial operator*(const ExactPolynomial& o) const;
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  NumberField field_;
  std::vector<Coeff> coeffs_;
};

/// Monic with Z[1/p] coefficients and constant term +-p^m. Throws NotMonic,
/// WrongField (for a non-rational base field).
bool is_plain_rational(const ExactPolynomial& poly, std::uint64_t p);

struct NecessaryReport {
  bool pass = true;
  std::string witness;
};
/// Necessary conditions for plainness over a number field: every coefficient
/// is integral over Z[1/p] (its characteristic polynomial has p-power
/// denominators) and N(P(0)) = +-p^m. Throws NotMonic.
NecessaryReport plain_necessary_numberfield(const ExactPolynomial& poly, std::uint64_t p);

/// T^n P(1/T) / P(0): roots go to their inverses. Throws DivisionByZero if P(0) = 0.
ExactPolynomial reversed_monic(const ExactPolynomial& poly);
/// The monic polynomial whose roots are the squares of the roots of P.
ExactPolynomial squared_roots(const ExactPolynomial& poly);
/// P / gcd(P, P'), monic: same roots, each simple.
ExactPolynomial squarefree_part(const ExactPolynomial& poly);

struct PurityReport {
  std::int64_t weight = 0;
  double tolerance = 0;
  Integer q = 0;
  /// max over embeddings and roots of | |z| - Q^{w/2} | / Q^{w/2}, at the disk centers.
  double max_deviation = 0;
  /// max inclusion radius relative to Q^{w/2}.
  double error_bound = 0;
  bool pass = false;
  /// N(P(0))^2 = Q^{n w [E:Q]}, checked exactly.
  bool norm_identity = false;
  /// Disk centers, one list per complex embedding of E.
  std::vector<std::vector<std::complex<double>>> roots;
  /// The root attaining max_deviation.
  std::complex<double> worst_root;
};
inline constexpr double kDefaultPurityTolerance = 1e-9;

/// Numerical purity test for every complex embedding, with certified error
/// bounds. Throws RootFindingFailure when the roots cannot be isolated or the
/// bounds are too loose to decide, and MalformedInput for Q < 2.
PurityReport purity_check(const ExactPolynomial& poly, const Integer& q, std::int64_t weight,
                          double tolerance = kDefaultPurityTolerance);

/// Given P = prod factors, the product of the roots of each factor of degree
/// m is checked to be a Q-Weil number of weight w m. Throws MalformedInput if
/// the factors do not multiply to P.
std::vector<PurityReport> root_product_purity(const ExactPolynomial& poly, const std::vector<ExactPolynomial>& factors,
                                              const Integer& q, std::int64_t weight,
                                              double tolerance = kDefaultPurityTolerance);

/// Coefficients through Z[1/p] -> F_ell. Throws WrongField, BadDenominator,
/// and EllEqualsP when p is given and equals ell.
ff::Poly reduce_mod(const ExactPolynomial& poly, std::uint32_t ell, std::optional<std::uint64_t> p = std::nullopt);

struct FrobEntry {
  std::string id;
  std::uint64_t residue_degree = 1;
  Integer q = 0;
  ExactPolynomial poly = ExactPolynomial::from_ints({1});
};

struct FrobTable {
  std::uint64_t p = 0;
  NumberField field = NumberField::rationals();
  unsigned degree = 0;
  /// [kappa : F_p]; inferred from the first entry when absent.
  std::optional<std::uint64_t> kappa_degree;
  std::vector<FrobEntry> entries;
};

/// charpoly(M) == reduce_mod(P_x, ell) inside M's field. Throws MalformedInput
/// for an unknown point id, EllEqualsP, WrongField, BadDenominator.
bool compat_check(const FrobTable& table, const std::string& point_id, const matgrp::SquareMatrix& m);

struct EntryReport {
  std::string id;
  bool plain = false;
  /// False when only necessary conditions were checked (non-rational E).
  bool plain_exact = true;
  bool degree_ok = false;
  bool q_ok = false;
  std::optional<PurityReport> purity;
  /// One line per failed check.
  std::vector<std::string> failures;
  bool pass() const noexcept { return failures.empty(); }
};

struct TableReport {
  std::optional<std::uint64_t> kappa_degree;
  std::vector<EntryReport> entries;
  bool pass() const noexcept;
};

/// Runs every check on every entry; failures become report lines, never exceptions.
TableReport validate_table(const FrobTable& table, std::optional<std::int64_t> weight = std::nullopt,
                           double tolerance = kDefaultPurityTolerance);

/// e with n = p^e, or nullopt if n is not a power of p (n = 1 gives 0).
std::optional<std::uint64_t> log_p(const Integer& n, std::uint64_t p);

}  // namespace saturate::frobenius
