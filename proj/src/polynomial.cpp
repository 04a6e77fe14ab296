#include "binedge/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace binedge {

std::string Ring::var_name(int var) const {
  return (is_x(var) ? "x" : "y") + std::to_string(vertex_of(var));
}

Monomial Monomial::var(int index, int power) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exps_[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(power);
  return m;
}

Monomial Monomial::from_mask(VarMask mask) {
  Monomial m;
  for (; mask != 0; mask &= mask - 1) m.exps_[static_cast<std::size_t>(std::countr_zero(mask))] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e <= 1; });
}

VarMask Monomial::support() const {
  VarMask mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) mask |= VarMask{1} << i;
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l;
  for (std::size_t i = 0; i < exps_.size(); ++i) l.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return l;
}

bool Monomial::coprime(const Monomial& other) const { return (support() & other.support()) == 0; }

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] + b.exps_[i]);
  return m;
}

std::string Monomial::to_string(const Ring& ring) const {
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < ring.var_count(); ++v) {
    const int e = exponent(v);
    if (e == 0) continue;
    if (!first) os << '*';
    os << ring.var_name(v);
    if (e > 1) os << '^' << e;
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

Polynomial Polynomial::term(const mpq_class& c, const Monomial& m) {
  Polynomial p;
  p.add_term(c, m);
  return p;
}

Polynomial Polynomial::binomial(const Monomial& m1, const Monomial& m2, const mpq_class& c1, const mpq_class& c2) {
  Polynomial p;
  p.add_term(c1, m1);
  p.add_term(c2, m2);
  return p;
}

void Polynomial::add_term(const mpq_class& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add_multiple(const mpq_class& c, const Monomial& m, const Polynomial& p) {
  for (const auto& [mono, coeff] : p.terms_) add_term(c * coeff, mono * m);
}

Polynomial Polynomial::scaled(const mpq_class& c, const Monomial& m) const {
  Polynomial out;
  out.add_multiple(c, m, *this);
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  mpq_class inv = 1 / leading_coefficient();
  return scaled(inv);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out.add_multiple(1, Monomial(), b);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out.add_multiple(-1, Monomial(), b);
  return out;
}

std::string Polynomial::to_string(const Ring& ring) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class mag = abs(c);
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    if (mag != 1 || m.is_one()) {
      os << mag.get_str();
      if (!m.is_one()) os << '*';
    }
    if (!m.is_one()) os << m.to_string(ring);
    first = false;
  }
  return os.str();
}

}  // namespace binedge
