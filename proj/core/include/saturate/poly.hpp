#pragma once

#include <vector>

#include "saturate/ff.hpp"

namespace saturate::ff {

/// Dense univariate polynomial over a finite field, lowest coefficient first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs);

  static Poly monomial(const Field& f, Elem c, std::size_t degree);
  static Poly from_ints(const Field& f, const std::vector<std::int64_t>& coeffs);

  const Field& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem{}; }
  Elem leading() const noexcept { return coeffs_.empty() ? Elem{} : coeffs_.back(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == field_.one(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem c) const;
  Elem eval(Elem x) const;
  Poly derivative() const;
  Poly monic() const;
  /// Applies `f` to every coefficient (e.g. Frobenius or an embedding).
  template <typename Fn>
  Poly map_coeffs(const Field& target, Fn&& f) const {
    std::vector<Elem> out;
    out.reserve(coeffs_.size());
    for (auto c : coeffs_) out.push_back(f(c));
    return Poly(target, std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  Field field_;
  std::vector<Elem> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
bool is_squarefree(const Poly& p);

}  // namespace saturate::ff
