#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "saturate/envelope.hpp"
#include "saturate/group.hpp"

namespace saturate::weilres {

using ff::Elem;
using ff::Field;
using matgrp::FiniteMatrixGroup;
using matgrp::SquareMatrix;

/// Restriction of scalars from F_{q^d} ("big") to F_q ("small") along a
/// fixed F_q-basis b_0, ..., b_{d-1} of the big field.
class RestrictionContext {
 public:
  /// Uses the power basis 1, x, ..., x^(d-1) of the big field's modulus root.
  /// Throws NoEmbedding unless small is a subfield of big.
  RestrictionContext(Field big, Field small);
  /// Throws MalformedInput if `basis` is not an F_q-basis.
  RestrictionContext(Field big, Field small, std::vector<Elem> basis);

  const Field& big() const noexcept { return big_; }
  const Field& small() const noexcept { return small_; }
  unsigned degree() const noexcept { return d_; }
  const std::vector<Elem>& basis() const noexcept { return basis_; }

  /// The c in small^d with y = sum c_l b_l.
  std::vector<Elem> coordinates(Elem y) const;

 private:
  void setup();

  Field big_;
  Field small_;
  unsigned d_;
  std::vector<Elem> basis_;
  // Inverse of the F_ell-matrix sending (c_l) to the F_ell-coordinates of sum c_l b_l.
  std::optional<SquareMatrix> solve_;
};

/// The nd x nd matrix of the F_q-linear map M induces on F_q^{nd}; entry
/// (i d + l, a d + j) is the b_l-coordinate of M_ia b_j. Throws FieldMismatch.
SquareMatrix weilres_embed(const RestrictionContext& ctx, const SquareMatrix& m);
/// Elementwise image of g; the order is preserved.
FiniteMatrixGroup weilres_group(const RestrictionContext& ctx, const FiniteMatrixGroup& g,
                                std::size_t cap = matgrp::default_order_cap());

/// d (dimV - 1); equal to dimW - d for dimW = d dimV.
std::int64_t restriction_height(std::int64_t d, std::int64_t dim_v);

/// prod_{s<d} charpoly(M)^{Frob_q^s}: the characteristic polynomial of the
/// restricted matrix, computed over the big field.
ff::Poly norm_form_charpoly(const RestrictionContext& ctx, const SquareMatrix& m);

struct WeilresSaturationReport {
  /// ell > dimW - d.
  bool hypothesis_ok = true;
  /// The point-level check over F_q was possible (it needs ell > dimW).
  bool checked = false;
  bool saturated = false;
  std::optional<envelope::SaturationWitness> witness;
};
/// Restricts g and runs the point-level saturation check over F_q. A violated
/// hypothesis is flagged in the report, not thrown.
WeilresSaturationReport weilres_saturation_check(const RestrictionContext& ctx, const FiniteMatrixGroup& g,
                                                 std::size_t cap = matgrp::default_order_cap());

}  // namespace saturate::weilres
