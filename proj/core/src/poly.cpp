#include "saturate/poly.hpp"

#include "saturate/error.hpp"

namespace saturate::ff {

namespace {
void require_same(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
}
}  // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

Poly Poly::monomial(const Field& f, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, f.zero());
  v[degree] = c;
  return Poly(f, std::move(v));
}

Poly Poly::from_ints(const Field& f, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(f.from_int(c));
  return Poly(f, std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  require_same(field_, o.field_);
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  require_same(field_, o.field_);
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  require_same(field_, o.field_);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Poly(field_, std::move(out));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> out(coeffs_);
  for (auto& x : out) x = field_.mul(x, c);
  return Poly(field_, std::move(out));
}

Elem Poly::eval(Elem x) const {
  Elem acc{};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<Elem> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i)), coeffs_[i]);
  }
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  std::vector<Elem> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {Poly(f), a};
  std::vector<Elem> quot(rem.size() - db, f.zero());
  const Elem lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = f.mul(rem[i], lead_inv);
    if (!c.code) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
    }
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_squarefree(const Poly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace saturate::ff
