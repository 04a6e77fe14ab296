#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace binedge {

using VarMask = std::uint64_t;
inline constexpr int kMaxVars = 32;

// Polynomial ring K[x_1..x_n, y_1..y_n]. Variable index i-1 is x_i and n+i-1 is y_i, which makes the
// index order the lex order x_1 > ... > x_n > y_1 > ... > y_n.
struct Ring {
  int n = 0;

  int var_count() const { return 2 * n; }
  int x(int i) const { return i - 1; }
  int y(int i) const { return n + i - 1; }
  bool is_x(int var) const { return var < n; }
  int vertex_of(int var) const { return is_x(var) ? var + 1 : var - n + 1; }
  std::string var_name(int var) const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial var(int index, int power = 1);
  static Monomial from_mask(VarMask mask);

  int exponent(int var) const { return exps_[static_cast<std::size_t>(var)]; }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;
  VarMask support() const;

  bool divides(const Monomial& other) const;
  // this / other; requires other | this.
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  std::string to_string(const Ring& ring) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Lex order in variable index order, i.e. the term order of the ring.
  friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

 private:
  std::array<std::uint8_t, kMaxVars> exps_;
};

// Exact rational polynomial; terms are kept in decreasing term order so the leading term is first.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpq_class, std::greater<>>;

  Polynomial() = default;
  static Polynomial term(const mpq_class& c, const Monomial& m);
  // c1*m1 + c2*m2
  static Polynomial binomial(const Monomial& m1, const Monomial& m2, const mpq_class& c1 = 1, const mpq_class& c2 = -1);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const mpq_class& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const mpq_class& c, const Monomial& m);
  // this += c * m * p
  void add_multiple(const mpq_class& c, const Monomial& m, const Polynomial& p);
  Polynomial scaled(const mpq_class& c, const Monomial& m = Monomial()) const;
  Polynomial monic() const;

  std::string to_string(const Ring& ring) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace binedge
