#include "saturate/weilres.hpp"

#include <sstream>

#include "saturate/error.hpp"

namespace saturate::weilres {

namespace {

unsigned relative_degree(const Field& big, const Field& small) {
  if (big.characteristic() != small.characteristic() || big.degree() % small.degree() != 0) {
    std::ostringstream msg;
    msg << small << " is not a subfield of " << big;
    throw Error(ErrorKind::NoEmbedding, msg.str());
  }
  return big.degree() / small.degree();
}

std::vector<Elem> power_basis(const Field& big, unsigned d) {
  std::vector<Elem> b;
  for (unsigned l = 0; l < d; ++l) b.push_back(big.pow(big.modulus_root(), l));
  return b;
}

}  // namespace

RestrictionContext::RestrictionContext(Field big, Field small)
    : big_(std::move(big)), small_(std::move(small)), d_(relative_degree(big_, small_)) {
  basis_ = power_basis(big_, d_);
  setup();
}

RestrictionContext::RestrictionContext(Field big, Field small, std::vector<Elem> basis)
    : big_(std::move(big)), small_(std::move(small)), d_(relative_degree(big_, small_)), basis_(std::move(basis)) {
  if (basis_.size() != d_) {
    throw Error(ErrorKind::MalformedInput, "basis needs " + std::to_string(d_) + " elements");
  }
  setup();
}

void RestrictionContext::setup() {
  const Field prime = Field::prime(big_.characteristic());
  const unsigned ks = small_.degree();
  const unsigned k = big_.degree();
  const ff::Embedding emb(small_, big_);
  const auto small_basis = small_.prime_basis();
  // Column (l * ks + m) holds the F_ell-coordinates of e_m * b_l.
  SquareMatrix a(prime, k);
  for (unsigned l = 0; l < d_; ++l) {
    for (unsigned m = 0; m < ks; ++m) {
      const auto c = big_.coeffs(big_.mul(emb(small_basis[m]), basis_[l]));
      for (unsigned r = 0; r < k; ++r) a.at(r, l * ks + m) = Elem{c[r]};
    }
  }
  if (!matgrp::is_invertible(a)) throw Error(ErrorKind::MalformedInput, "basis is not linearly independent");
  solve_ = matgrp::inverse(a);
}

std::vector<Elem> RestrictionContext::coordinates(Elem y) const {
  const unsigned ks = small_.degree();
  const unsigned k = big_.degree();
  const auto c = big_.coeffs(y);
  const Field& prime = solve_->field();
  std::vector<Elem> out(d_);
  std::vector<std::uint32_t> sc(ks);
  for (unsigned l = 0; l < d_; ++l) {
    for (unsigned m = 0; m < ks; ++m) {
      Elem acc{};
      for (unsigned r = 0; r < k; ++r) acc = prime.add(acc, prime.mul((*solve_)(l * ks + m, r), Elem{c[r]}));
      sc[m] = acc.code;
    }
    out[l] = small_.from_coeffs(sc);
  }
  return out;
}

SquareMatrix weilres_embed(const RestrictionContext& ctx, const SquareMatrix& m) {
  if (!(m.field() == ctx.big())) {
    std::ostringstream msg;
    msg << "matrix over " << m.field() << ", restriction from " << ctx.big();
    throw Error(ErrorKind::FieldMismatch, msg.str());
  }
  const std::size_t n = m.dim();
  const unsigned d = ctx.degree();
  SquareMatrix out(ctx.small(), n * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      const Elem x = m(i, a);
      if (!x.code) continue;
      for (unsigned j = 0; j < d; ++j) {
        const auto c = ctx.coordinates(ctx.big().mul(x, ctx.basis()[j]));
        for (unsigned l = 0; l < d; ++l) out.at(i * d + l, a * d + j) = c[l];
      }
    }
  }
  return out;
}

FiniteMatrixGroup weilres_group(const RestrictionContext& ctx, const FiniteMatrixGroup& g, std::size_t cap) {
  std::vector<SquareMatrix> gens;
  for (const auto& m : g.generators()) gens.push_back(weilres_embed(ctx, m));
  return matgrp::group_closure(ctx.small(), g.dim() * ctx.degree(), gens, cap);
}

std::int64_t restriction_height(std::int64_t d, std::int64_t dim_v) {
  if (d < 1 || dim_v < 1) throw Error(ErrorKind::MalformedInput, "degree and dimension must be positive");
  const std::int64_t h = d * (dim_v - 1);
  if (h != d * dim_v - d) throw Error(ErrorKind::HypothesisViolated, "height identity failed");
  return h;
}

ff::Poly norm_form_charpoly(const RestrictionContext& ctx, const SquareMatrix& m) {
  const Field& big = ctx.big();
  const unsigned ks = ctx.small().degree();
  ff::Poly p = matgrp::charpoly(m);
  ff::Poly conj = p;
  ff::Poly result = p;
  for (unsigned s = 1; s < ctx.degree(); ++s) {
    conj = conj.map_coeffs(big, [&](Elem c) {
      for (unsigned r = 0; r < ks; ++r) c = big.frobenius(c);
      return c;
    });
    result = result * conj;
  }
  return result;
}

WeilresSaturationReport weilres_saturation_check(const RestrictionContext& ctx, const FiniteMatrixGroup& g,
                                                 std::size_t cap) {
  WeilresSaturationReport report;
  const std::int64_t ell = ctx.big().characteristic();
  const std::int64_t dim_w = static_cast<std::int64_t>(g.dim() * ctx.degree());
  report.hypothesis_ok = ell > dim_w - static_cast<std::int64_t>(ctx.degree());
  if (ell <= dim_w) return report;
  const FiniteMatrixGroup image = weilres_group(ctx, g, cap);
  report.checked = true;
  report.witness = envelope::saturation_witness(image);
  report.saturated = !report.witness.has_value();
  return report;
}

}  // namespace saturate::weilres
