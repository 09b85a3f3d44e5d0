#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace combicheck {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent pair (e_q, e_t). Map order is lexicographic, which is also the
/// serialization order.
using Monomial = std::pair<unsigned, unsigned>;

/// Sparse polynomial in q and t with exact integer coefficients. Zero
/// coefficients are never stored. Univariate polynomials (in t, or in x for the
/// simsun polynomials) use e_q = 0.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long long constant);  // NOLINT(google-explicit-constructor)
  BiPoly(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  static BiPoly monomial(const BigInt& c, unsigned eq, unsigned et);
  static BiPoly q() { return monomial(1, 1, 0); }
  static BiPoly t() { return monomial(1, 0, 1); }

  /// [k]_q = 1 + q + ... + q^{k-1}
  static BiPoly q_integer(unsigned k);

  /// Builds sum c_i t^i from a dense coefficient list.
  static BiPoly from_t_coeffs(const std::vector<BigInt>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  BigInt coeff(unsigned eq, unsigned et) const;

  /// Adds c q^eq t^et in place; prunes if the result is zero.
  void add_term(const BigInt& c, unsigned eq, unsigned et);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  BiPoly operator-() const;

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly pow(unsigned k) const;

  /// q -> q_value; the result only involves t.
  BiPoly substitute_q(long long q_value) const;
  /// t -> t_value; the result only involves q.
  BiPoly substitute_t(long long t_value) const;
  BigInt evaluate(long long q_value, long long t_value) const;

  /// Formal derivative in t.
  BiPoly derivative_t() const;

  /// Max e_t over stored terms, -1 for the zero polynomial.
  int degree_t() const;
  int degree_q() const;
  /// Min e_t over stored terms, -1 for the zero polynomial.
  int low_degree_t() const;

  /// t^d p(1/t). Throws std::domain_error if some term has e_t > d.
  BiPoly reflect_t(unsigned d) const;

  /// True if p involves t only and t^d p(1/t) = p.
  bool is_palindromic_t(unsigned d) const;

 private:
  std::map<Monomial, BigInt> terms_;
};

/// JSON array of {"q": nat, "t": nat, "c": decimal string}, sorted by (q, t).
nlohmann::json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

/// Human-readable rendering such as "1 + q + t - 2*q^2*t^3". `t_name` renames t
/// (e.g. "x" for the simsun polynomials).
std::string to_string(const BiPoly& p, const std::string& t_name = "t");

BigInt factorial(unsigned k);
BigInt binomial(unsigned n, unsigned k);

}  // namespace combicheck
