#include "combicheck/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace combicheck {

namespace {

BigInt int_pow(long long base, unsigned e) {
  BigInt r = 1;
  BigInt b = base;
  while (e > 0) {
    if (e & 1U) r *= b;
    b *= b;
    e >>= 1U;
  }
  return r;
}

}  // namespace

BiPoly::BiPoly(long long constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, BigInt(constant));
}

BiPoly::BiPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BiPoly BiPoly::monomial(const BigInt& c, unsigned eq, unsigned et) {
  BiPoly p;
  p.add_term(c, eq, et);
  return p;
}

BiPoly BiPoly::q_integer(unsigned k) {
  BiPoly p;
  for (unsigned i = 0; i < k; ++i) p.add_term(1, i, 0);
  return p;
}

BiPoly BiPoly::from_t_coeffs(const std::vector<BigInt>& coeffs) {
  BiPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(coeffs[i], 0, static_cast<unsigned>(i));
  return p;
}

BigInt BiPoly::coeff(unsigned eq, unsigned et) const {
  auto it = terms_.find({eq, et});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BiPoly::add_term(const BigInt& c, unsigned eq, unsigned et) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{eq, et}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(c, m.first, m.second);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(-c, m.first, m.second);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) { return *this = *this * other; }

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma.first + mb.first, ma.second + mb.second);
  }
  return r;
}

BiPoly BiPoly::pow(unsigned k) const {
  BiPoly r(1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

BiPoly BiPoly::substitute_q(long long q_value) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.add_term(c * int_pow(q_value, m.first), 0, m.second);
  return r;
}

BiPoly BiPoly::substitute_t(long long t_value) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.add_term(c * int_pow(t_value, m.second), m.first, 0);
  return r;
}

BigInt BiPoly::evaluate(long long q_value, long long t_value) const {
  BigInt sum = 0;
  for (const auto& [m, c] : terms_) sum += c * int_pow(q_value, m.first) * int_pow(t_value, m.second);
  return sum;
}

BiPoly BiPoly::derivative_t() const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.second > 0) r.add_term(c * m.second, m.first, m.second - 1);
  }
  return r;
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.second));
  return d;
}

int BiPoly::degree_q() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.first));
  return d;
}

int BiPoly::low_degree_t() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.second;
  for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m.second));
  return d;
}

BiPoly BiPoly::reflect_t(unsigned d) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.second > d) throw std::domain_error("reflect_t: t-degree exceeds reflection degree");
    r.add_term(c, m.first, d - m.second);
  }
  return r;
}

bool BiPoly::is_palindromic_t(unsigned d) const {
  if (degree_q() > 0 || degree_t() > static_cast<int>(d)) return false;
  return reflect_t(d) == *this;
}

nlohmann::json to_json(const BiPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back({{"q", m.first}, {"t", m.second}, {"c", c.str()}});
  return arr;
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  BiPoly p;
  for (const auto& term : j) p.add_term(BigInt(term.at("c").get<std::string>()), term.at("q").get<unsigned>(), term.at("t").get<unsigned>());
  return p;
}

std::string to_string(const BiPoly& p, const std::string& t_name) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto append = [&](const std::string& var, unsigned e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append("q", m.first);
    append(t_name, m.second);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace combicheck
