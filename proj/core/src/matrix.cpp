#include "saturate/matrix.hpp"

#include <sstream>

#include "saturate/error.hpp"

namespace saturate::matgrp {

namespace {

void require_compatible(const SquareMatrix& a, const SquareMatrix& b) {
  if (!(a.field() == b.field())) {
    std::ostringstream msg;
    msg << a.field() << " vs " << b.field();
    throw Error(ErrorKind::FieldMismatch, msg.str());
  }
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

void require_char_above_dim(const SquareMatrix& m) {
  if (m.field().characteristic() <= m.dim()) {
    throw Error(ErrorKind::CharTooSmall, "characteristic " + std::to_string(m.field().characteristic()) +
                                             " must exceed dimension " + std::to_string(m.dim()));
  }
}

}  // namespace

SquareMatrix::SquareMatrix(Field field, std::size_t n)
    : field_(std::move(field)), n_(n), entries_(n * n, Elem{}) {}

SquareMatrix::SquareMatrix(Field field, std::size_t n, std::vector<Elem> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n * n) + " entries");
  }
  for (auto e : entries_) {
    if (!field_.is_valid(e)) throw Error(ErrorKind::FieldMismatch, "entry outside the field");
  }
}

SquareMatrix SquareMatrix::identity(const Field& f, std::size_t n) {
  SquareMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

SquareMatrix SquareMatrix::unit(const Field& f, std::size_t n, std::size_t row, std::size_t col) {
  SquareMatrix m(f, n);
  m.at(row, col) = f.one();
  return m;
}

SquareMatrix SquareMatrix::diagonal(const Field& f, std::span<const Elem> diag) {
  SquareMatrix m(f, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

SquareMatrix SquareMatrix::from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Elem> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix rows must be square");
    for (auto v : row) entries.push_back(f.from_int(v));
  }
  return SquareMatrix(f, n, std::move(entries));
}

bool SquareMatrix::is_zero() const noexcept {
  for (auto e : entries_) {
    if (e.code) return false;
  }
  return true;
}

bool SquareMatrix::is_identity() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j).code != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
  require_compatible(*this, o);
  SquareMatrix r(field_, n_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = field_.add(entries_[i], o.entries_[i]);
  return r;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& o) const {
  require_compatible(*this, o);
  SquareMatrix r(field_, n_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = field_.sub(entries_[i], o.entries_[i]);
  return r;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
  require_compatible(*this, o);
  SquareMatrix r(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Elem a = entries_[i * n_ + k];
      if (!a.code) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        Elem& dst = r.entries_[i * n_ + j];
        dst = field_.add(dst, field_.mul(a, o.entries_[k * n_ + j]));
      }
    }
  }
  return r;
}

SquareMatrix SquareMatrix::scaled(Elem c) const {
  SquareMatrix r(*this);
  for (auto& e : r.entries_) e = field_.mul(e, c);
  return r;
}

SquareMatrix SquareMatrix::pow(std::uint64_t e) const {
  SquareMatrix result = identity(field_, n_);
  SquareMatrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::u32string SquareMatrix::key() const {
  std::u32string k(entries_.size(), U'\0');
  for (std::size_t i = 0; i < entries_.size(); ++i) k[i] = static_cast<char32_t>(entries_[i].code);
  return k;
}

std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j).code;
  }
  return os << "]";
}

Elem trace(const SquareMatrix& m) {
  Elem t{};
  for (std::size_t i = 0; i < m.dim(); ++i) t = m.field().add(t, m(i, i));
  return t;
}

namespace {

// Row reduction in place; returns (rank, determinant).
std::pair<std::size_t, Elem> eliminate(SquareMatrix a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Elem det = f.one();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && !a(pivot, col).code) ++pivot;
    if (pivot == n) {
      det = f.zero();
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
      det = f.neg(det);
    }
    const Elem p = a(rank, col);
    det = f.mul(det, p);
    const Elem p_inv = f.inv(p);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const Elem factor = f.mul(a(i, col), p_inv);
      if (!factor.code) continue;
      for (std::size_t j = col; j < n; ++j) a.at(i, j) = f.sub(a(i, j), f.mul(factor, a(rank, j)));
    }
    ++rank;
  }
  if (rank < n) det = f.zero();
  return {rank, det};
}

}  // namespace

Elem determinant(const SquareMatrix& m) { return eliminate(m).second; }
std::size_t rank(const SquareMatrix& m) { return eliminate(m).first; }
bool is_invertible(const SquareMatrix& m) { return determinant(m).code != 0; }

SquareMatrix inverse(const SquareMatrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  SquareMatrix a = m;
  SquareMatrix inv = SquareMatrix::identity(f, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a(pivot, col).code) ++pivot;
    if (pivot == n) throw Error(ErrorKind::SingularGenerator, "matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(inv.at(pivot, j), inv.at(col, j));
    }
    const Elem p_inv = f.inv(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = f.mul(a(col, j), p_inv);
      inv.at(col, j) = f.mul(inv(col, j), p_inv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Elem factor = a(i, col);
      if (!factor.code) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) = f.sub(a(i, j), f.mul(factor, a(col, j)));
        inv.at(i, j) = f.sub(inv(i, j), f.mul(factor, inv(col, j)));
      }
    }
  }
  return inv;
}

SquareMatrix embed(const SquareMatrix& m, const Field& target) {
  if (m.field() == target) return m;
  const ff::Embedding emb(m.field(), target);
  std::vector<Elem> out;
  out.reserve(m.entries().size());
  for (auto e : m.entries()) out.push_back(emb(e));
  return SquareMatrix(target, m.dim(), std::move(out));
}

SquareMatrix frobenius(const SquareMatrix& m) {
  std::vector<Elem> out;
  out.reserve(m.entries().size());
  for (auto e : m.entries()) out.push_back(m.field().frobenius(e));
  return SquareMatrix(m.field(), m.dim(), std::move(out));
}

ExactCharPoly charpoly(const SquareMatrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  SquareMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && !h(pivot, j).code) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h.at(pivot, c), h.at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h.at(r, pivot), h.at(r, j + 1));
    }
    const Elem p_inv = f.inv(h(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const Elem factor = f.mul(h(i, j), p_inv);
      if (!factor.code) continue;
      for (std::size_t c = 0; c < n; ++c) h.at(i, c) = f.sub(h(i, c), f.mul(factor, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h.at(r, j + 1) = f.add(h(r, j + 1), f.mul(factor, h(r, i)));
    }
  }
  // p_m = (T - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod_{j=m-i+1}^{m} h_{j,j-1}) p_{m-i-1}  (1-indexed)
  std::vector<ff::Poly> p;
  p.emplace_back(f, std::vector<Elem>{f.one()});
  const ff::Poly t(f, {f.zero(), f.one()});
  for (std::size_t mm = 1; mm <= n; ++mm) {
    ff::Poly next = (t - ff::Poly(f, {h(mm - 1, mm - 1)})) * p[mm - 1];
    Elem prod = f.one();
    for (std::size_t i = 1; i < mm; ++i) {
      prod = f.mul(prod, h(mm - i, mm - i - 1));
      const Elem coef = f.mul(h(mm - i - 1, mm - 1), prod);
      if (coef.code) next = next - p[mm - i - 1].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

bool is_unipotent(const SquareMatrix& m) {
  return (m - SquareMatrix::identity(m.field(), m.dim())).pow(m.dim()).is_zero();
}

bool is_nilpotent(const SquareMatrix& x) { return x.pow(x.dim()).is_zero(); }

SquareMatrix exp_n(const SquareMatrix& x) {
  require_char_above_dim(x);
  if (!is_nilpotent(x)) throw Error(ErrorKind::NotNilpotent, "exp_n needs a nilpotent matrix");
  const Field& f = x.field();
  const std::uint32_t ell = f.characteristic();
  SquareMatrix sum = SquareMatrix::identity(f, x.dim());
  SquareMatrix power = sum;
  Elem inv_factorial = f.one();
  for (std::uint32_t i = 1; i < ell; ++i) {
    power = power * x;
    if (power.is_zero()) break;
    inv_factorial = f.div(inv_factorial, f.from_int(i));
    sum = sum + power.scaled(inv_factorial);
  }
  return sum;
}

SquareMatrix log_n(const SquareMatrix& u) {
  require_char_above_dim(u);
  if (!is_unipotent(u)) throw Error(ErrorKind::NotUnipotent, "log_n needs a unipotent matrix");
  const Field& f = u.field();
  const std::uint32_t ell = f.characteristic();
  const SquareMatrix one_minus_u = SquareMatrix::identity(f, u.dim()) - u;
  SquareMatrix sum(f, u.dim());
  SquareMatrix power = SquareMatrix::identity(f, u.dim());
  for (std::uint32_t i = 1; i < ell; ++i) {
    power = power * one_minus_u;
    if (power.is_zero()) break;
    sum = sum - power.scaled(f.inv(f.from_int(i)));
  }
  return sum;
}

SquareMatrix t_power(const SquareMatrix& u, Elem t) {
  require_char_above_dim(u);
  if (!is_unipotent(u)) throw Error(ErrorKind::NotUnipotent, "t_power needs a unipotent matrix");
  const Field& f = u.field();
  const std::uint32_t ell = f.characteristic();
  const SquareMatrix nil = u - SquareMatrix::identity(f, u.dim());
  SquareMatrix sum = SquareMatrix::identity(f, u.dim());
  SquareMatrix power = sum;
  Elem binom = f.one();
  for (std::uint32_t i = 1; i < ell; ++i) {
    power = power * nil;
    if (power.is_zero()) break;
    // binom(t, i) = binom(t, i-1) * (t - (i-1)) / i
    binom = f.div(f.mul(binom, f.sub(t, f.from_int(i - 1))), f.from_int(i));
    sum = sum + power.scaled(binom);
  }
  return sum;
}

SquareMatrix t_power(const SquareMatrix& u, const ff::FieldElem& t) {
  if (u.field() == t.field()) return t_power(u, t.value());
  return t_power(embed(u, t.field()), t.value());
}

bool is_regular_semisimple(const SquareMatrix& m) { return ff::is_squarefree(charpoly(m)); }

SquareMatrix tensor_embed(const SquareMatrix& a, const SquareMatrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "tensor factors over different fields");
  const Field& f = a.field();
  const std::size_t n1 = a.dim(), n2 = b.dim(), n = n1 * n2;
  SquareMatrix r(f, n);
  for (std::size_t i1 = 0; i1 < n1; ++i1)
    for (std::size_t j1 = 0; j1 < n1; ++j1) {
      const Elem x = a(i1, j1);
      if (!x.code) continue;
      for (std::size_t i2 = 0; i2 < n2; ++i2)
        for (std::size_t j2 = 0; j2 < n2; ++j2) r.at(i1 * n2 + i2, j1 * n2 + j2) = f.mul(x, b(i2, j2));
    }
  return r;
}

SquareMatrix direct_sum_embed(const SquareMatrix& a, const SquareMatrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "summands over different fields");
  const std::size_t n1 = a.dim(), n2 = b.dim();
  SquareMatrix r(a.field(), n1 + n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) r.at(i, j) = a(i, j);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) r.at(n1 + i, n1 + j) = b(i, j);
  return r;
}

SquareMatrix block(const SquareMatrix& m, std::size_t offset, std::size_t size) {
  if (offset + size > m.dim()) throw Error(ErrorKind::DimensionMismatch, "block outside matrix");
  SquareMatrix r(m.field(), size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) r.at(i, j) = m(offset + i, offset + j);
  return r;
}

}  // namespace saturate::matgrp
