#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "saturate/ff.hpp"
#include "saturate/poly.hpp"

namespace saturate::matgrp {

using ff::Elem;
using ff::Field;

/// Dense n x n matrix over a finite field, row-major.
class SquareMatrix {
 public:
  SquareMatrix(Field field, std::size_t n);
  SquareMatrix(Field field, std::size_t n, std::vector<Elem> entries);

  static SquareMatrix identity(const Field& f, std::size_t n);
  /// The matrix unit with a single 1 at (row, col), zero-based.
  static SquareMatrix unit(const Field& f, std::size_t n, std::size_t row, std::size_t col);
  static SquareMatrix diagonal(const Field& f, std::span<const Elem> diag);
  static SquareMatrix from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  Elem operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
  Elem& at(std::size_t i, std::size_t j) noexcept { return entries_[i * n_ + j]; }
  std::span<const Elem> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  SquareMatrix operator+(const SquareMatrix& o) const;
  SquareMatrix operator-(const SquareMatrix& o) const;
  SquareMatrix operator*(const SquareMatrix& o) const;
  SquareMatrix scaled(Elem c) const;
  SquareMatrix pow(std::uint64_t e) const;

  /// Canonical byte key used for hashing inside groups.
  std::u32string key() const;

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_ && a.field_ == b.field_;
  }
  friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m);

 private:
  Field field_;
  std::size_t n_;
  std::vector<Elem> entries_;
};

/// Monic det(T*I - M).
using ExactCharPoly = ff::Poly;

Elem trace(const SquareMatrix& m);
Elem determinant(const SquareMatrix& m);
std::size_t rank(const SquareMatrix& m);
bool is_invertible(const SquareMatrix& m);
/// Throws SingularGenerator for a singular input.
SquareMatrix inverse(const SquareMatrix& m);
/// Entrywise image under the fixed subfield embedding.
SquareMatrix embed(const SquareMatrix& m, const Field& target);
/// Entrywise x -> x^ell.
SquareMatrix frobenius(const SquareMatrix& m);

/// Characteristic polynomial via Hessenberg reduction; valid in every characteristic.
ExactCharPoly charpoly(const SquareMatrix& m);

/// (M - I)^n = 0. For ell > n this is the same as u^ell = 1.
bool is_unipotent(const SquareMatrix& m);
/// X^n = 0.
bool is_nilpotent(const SquareMatrix& x);

/// Truncated exponential sum_{i<ell} X^i / i!. Needs ell > n; throws
/// CharTooSmall otherwise and NotNilpotent for non-nilpotent input.
SquareMatrix exp_n(const SquareMatrix& x);
/// Truncated logarithm -sum_{0<i<ell} (1-u)^i / i. Needs ell > n; throws
/// CharTooSmall or NotUnipotent.
SquareMatrix log_n(const SquareMatrix& u);

/// u^t = sum_{i<ell} (u-1)^i binom(t, i), evaluated directly from the binomial
/// series (not through exp/log). When t lives in an extension of u's field,
/// u is first embedded and the result is a matrix over t's field.
SquareMatrix t_power(const SquareMatrix& u, const ff::FieldElem& t);
SquareMatrix t_power(const SquareMatrix& u, Elem t);

/// Distinct eigenvalues over the algebraic closure: gcd(P, P') = 1.
bool is_regular_semisimple(const SquareMatrix& m);

/// Kronecker product A (x) B, rows indexed by (i1, i2) -> i1 * n2 + i2.
SquareMatrix tensor_embed(const SquareMatrix& a, const SquareMatrix& b);
/// Block-diagonal sum diag(A, B).
SquareMatrix direct_sum_embed(const SquareMatrix& a, const SquareMatrix& b);

/// The square block of `m` starting at `offset` with size `size`.
SquareMatrix block(const SquareMatrix& m, std::size_t offset, std::size_t size);

}  // namespace saturate::matgrp
