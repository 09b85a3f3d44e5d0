#include "combicheck/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace combicheck {

void validate_word(std::span<const int> letters) {
  for (int a : letters) {
    if (a < 1) throw std::invalid_argument("word letters must be positive, got " + std::to_string(a));
  }
}

Permutation::Permutation(std::vector<int> one_line) : map_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : map_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[static_cast<std::size_t>(map_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const { return Permutation(std::vector<int>(map_.rbegin(), map_.rend())); }

Permutation Permutation::complemented() const {
  std::vector<int> out(map_.size());
  const int n = size();
  std::transform(map_.begin(), map_.end(), out.begin(), [n](int v) { return n + 1 - v; });
  return Permutation(std::move(out));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> out(map_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(out));
}

DescentStats perm_stats(const Permutation& w) {
  DescentStats s;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) {
      s.descent_set.push_back(i);
      if (w(i) > w(i + 1) + 1) ++s.des1;
    }
  }
  s.des = static_cast<int>(s.descent_set.size());
  return s;
}

int des(const Permutation& w) {
  int d = 0;
  for (int i = 1; i < w.size(); ++i) d += w(i) > w(i + 1);
  return d;
}

int des1(const Permutation& w) {
  int d = 0;
  for (int i = 1; i < w.size(); ++i) d += w(i) > w(i + 1) + 1;
  return d;
}

Permutation standardize(std::span<const int> distinct_values) {
  std::vector<int> order(distinct_values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return distinct_values[a] < distinct_values[b]; });
  std::vector<int> ranks(distinct_values.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  return Permutation(std::move(ranks));
}

std::string to_string(const Permutation& w) {
  std::string out;
  const bool compact = w.size() <= 9;
  for (int i = 1; i <= w.size(); ++i) {
    if (!compact && i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> values;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stoi(item));
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad permutation literal: " + text);
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

}  // namespace combicheck
