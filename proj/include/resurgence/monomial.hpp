#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "resurgence/variable_set.hpp"

namespace resurgence {

/// Monomial over a fixed ambient ring: a vector of non-negative exponents,
/// one per variable.  The ambient is carried by the enclosing ideal or
/// passed explicitly where needed for printing.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }

  static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int i, int nvars) {
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    return Monomial(std::move(e));
  }

  int nvars() const { return (int)exps_.size(); }
  int exponent(int i) const { return exps_.at(i); }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
  bool is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }
  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
  }

  bool divides(const Monomial& m) const {
    check_same(m);
    for (int i = 0; i < nvars(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    std::vector<int> e(a.exps_);
    for (int i = 0; i < (int)e.size(); ++i) e[i] += b.exps_[i];
    return Monomial(std::move(e));
  }

  /// *this / d; requires d | *this.
  Monomial divided_by(const Monomial& d) const {
    check_same(d);
    std::vector<int> e(exps_);
    for (int i = 0; i < (int)e.size(); ++i) {
      e[i] -= d.exps_[i];
      if (e[i] < 0) throw std::invalid_argument("divided_by: not divisible");
    }
    return Monomial(std::move(e));
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  /// *this / gcd(*this, m): the generator image under the colon by m.
  Monomial colon_by(const Monomial& m) const { return divided_by(gcd(*this, m)); }

  Monomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative monomial power");
    std::vector<int> e(exps_);
    for (int& v : e) v *= k;
    return Monomial(std::move(e));
  }

  /// Variables with positive exponent, as indices.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars(); ++i)
      if (exps_[i] > 0) s.push_back(i);
    return s;
  }

  bool operator==(const Monomial&) const = default;
  std::strong_ordering operator<=>(const Monomial& o) const {
    return exps_ <=> o.exps_;
  }

  std::string str(const VariableSet& vars) const {
    if (is_unit()) return "1";
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += " ";
      out += vars.name(i);
      if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out;
  }

private:
  void check_same(const Monomial& m) const {
    if (nvars() != m.nvars())
      throw std::invalid_argument("monomial length mismatch");
  }

  std::vector<int> exps_;
};

}  // namespace resurgence
