#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "saturate/matrix.hpp"

namespace saturate::matgrp {

/// Default closure cap, overridable through the SATURATE_CAP environment variable.
inline constexpr std::size_t kDefaultOrderCap = 10'000'000;
std::size_t default_order_cap();

/// A finite subgroup of GL_n(F_q), fully enumerated.
///
/// Elements are stored in discovery order (identity first) and indexed by
/// their entry codes. Instances are immutable once built.
class FiniteMatrixGroup {
 public:
  static FiniteMatrixGroup trivial(const Field& f, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  const std::vector<SquareMatrix>& generators() const noexcept { return gens_; }
  const std::vector<SquareMatrix>& elements() const noexcept { return elems_; }
  std::size_t order() const noexcept { return elems_.size(); }
  bool contains(const SquareMatrix& m) const;
  bool is_trivial() const noexcept { return elems_.size() == 1; }

  /// Same element set (generators may differ).
  friend bool operator==(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b);
  bool is_subgroup_of(const FiniteMatrixGroup& other) const;

 private:
  FiniteMatrixGroup(Field f, std::size_t n) : field_(std::move(f)), n_(n) {}

  Field field_;
  std::size_t n_;
  std::vector<SquareMatrix> gens_;
  std::vector<SquareMatrix> elems_;
  std::unordered_map<std::u32string, std::uint32_t> index_;

  friend FiniteMatrixGroup extend_closure(const FiniteMatrixGroup&, std::span<const SquareMatrix>, std::size_t);
};

/// Breadth-first closure of the generators. Throws SingularGenerator,
/// FieldMismatch, DimensionMismatch, or OrderCapExceeded once the element
/// count would exceed `cap`.
FiniteMatrixGroup group_closure(const Field& f, std::size_t n, std::span<const SquareMatrix> generators,
                                std::size_t cap = default_order_cap());
/// As above; field and dimension are read off the first generator.
FiniteMatrixGroup group_closure(std::span<const SquareMatrix> generators, std::size_t cap = default_order_cap());

/// The group generated by `g` and `extra`, reusing the enumeration of `g`.
FiniteMatrixGroup extend_closure(const FiniteMatrixGroup& g, std::span<const SquareMatrix> extra,
                                 std::size_t cap = default_order_cap());

/// Subgroup generated by the elements of ell-power order, i.e. the unipotents.
FiniteMatrixGroup gamma_plus(const FiniteMatrixGroup& g, std::size_t cap = default_order_cap());

/// Image of `g` under the entrywise embedding into `target`.
FiniteMatrixGroup embed_group(const FiniteMatrixGroup& g, const Field& target, std::size_t cap = default_order_cap());

/// Generators of GL_n(F_q): diag(g, 1, ..., 1) for a primitive g plus the
/// elementary transvections.
std::vector<SquareMatrix> general_linear_generators(const Field& f, std::size_t n);
/// Elementary transvections I + c E_ij for c in an F_ell-basis of F_q.
std::vector<SquareMatrix> special_linear_generators(const Field& f, std::size_t n);

/// |GL_n(F_q)| when it fits in 64 bits, otherwise 0.
std::uint64_t general_linear_order(std::uint64_t q, std::size_t n);

}  // namespace saturate::matgrp
