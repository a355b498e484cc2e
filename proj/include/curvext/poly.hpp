#pragma once

// Exact sparse multivariate polynomials over the rationals, with the small
// text format used by the construction-check inputs.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvext/types.hpp"

namespace curvext {

class SparsePoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, Rat>;

  explicit SparsePoly(std::size_t arity) : arity_(arity) {}

  static SparsePoly constant(std::size_t arity, const Rat& c) {
    SparsePoly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
  }

  static SparsePoly variable(std::size_t arity, std::size_t i) {
    if (i >= arity) throw ArityError("variable index out of range");
    SparsePoly p(arity);
    Exponents e(arity, 0);
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
  }

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const Rat& coeff) {
    if (exps.size() != arity_) throw ArityError("exponent arity mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    check_same_arity(a, b);
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    check_same_arity(a, b);
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, Rat(-c));
    return out;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    check_same_arity(a, b);
    SparsePoly out(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.arity_);
        for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, Rat(ca * cb));
      }
    return out;
  }

  friend SparsePoly operator*(const Rat& c, const SparsePoly& p) {
    SparsePoly out(p.arity_);
    for (const auto& [e, pc] : p.terms_) out.add_term(e, Rat(c * pc));
    return out;
  }

  SparsePoly pow(std::uint32_t k) const {
    SparsePoly out = constant(arity_, Rat(1));
    for (std::uint32_t i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  bool operator==(const SparsePoly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  // Maps variable i to assignment[i]; all assignments must share one arity.
  SparsePoly substitute(const std::vector<SparsePoly>& assignment) const {
    if (assignment.size() != arity_)
      throw ArityError("substitution needs one polynomial per variable");
    std::size_t target = arity_;
    if (!assignment.empty()) target = assignment[0].arity_;
    for (const SparsePoly& a : assignment)
      if (a.arity_ != target)
        throw ArityError("substitution images have mixed arities");
    std::vector<std::vector<SparsePoly>> powers(arity_);
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const SparsePoly& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, Rat(1)));
      while (cache.size() <= k) cache.push_back(cache.back() * assignment[i]);
      return cache[k];
    };
    SparsePoly out(target);
    for (const auto& [e, c] : terms_) {
      SparsePoly term = constant(target, c);
      for (std::size_t i = 0; i < arity_; ++i)
        if (e[i] > 0) term = term * power_of(i, e[i]);
      out = out + term;
    }
    return out;
  }

  // True when every monomial has the same weighted degree d (the zero
  // polynomial passes for every d).
  bool is_homogeneous_of_degree(const Int& d,
                                const std::vector<Int>& weights = {}) const {
    for (const auto& [e, c] : terms_)
      if (weighted_degree_of(e, weights) != d) return false;
    return true;
  }

  // The common weighted degree, or nullopt if terms disagree or p = 0.
  std::optional<Int> homogeneous_degree(
      const std::vector<Int>& weights = {}) const {
    std::optional<Int> d;
    for (const auto& [e, c] : terms_) {
      Int w = weighted_degree_of(e, weights);
      if (!d)
        d = w;
      else if (*d != w)
        return std::nullopt;
    }
    return d;
  }

  // Canonical text form: terms in lexicographic exponent order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      Rat a = c;
      if (out.empty()) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      std::string vars;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (e[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += "x" + std::to_string(i);
        if (e[i] > 1) vars += "^" + std::to_string(e[i]);
      }
      if (vars.empty()) {
        out += rat_str(a);
      } else {
        if (a != 1) out += rat_str(a) + "*";
        out += vars;
      }
    }
    return out;
  }

 private:
  static void check_same_arity(const SparsePoly& a, const SparsePoly& b) {
    if (a.arity_ != b.arity_) throw ArityError("polynomial arities differ");
  }

  Int weighted_degree_of(const Exponents& e,
                         const std::vector<Int>& weights) const {
    if (!weights.empty() && weights.size() != arity_)
      throw ArityError("weight vector arity mismatch");
    Int d = 0;
    for (std::size_t i = 0; i < arity_; ++i)
      d += (weights.empty() ? Int(1) : weights[i]) * e[i];
    return d;
  }

  static std::string rat_str(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  std::size_t arity_;
  TermMap terms_;
};

inline SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b) {
  return a + b;
}
inline SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) {
  return a * b;
}
inline SparsePoly poly_substitute(const SparsePoly& p,
                                  const std::vector<SparsePoly>& assignment) {
  return p.substitute(assignment);
}

// --- Parsing --------------------------------------------------------------
//
// Terms look like `c*x0^a*x1^b*...` joined by `+` and `-`; coefficients are
// integers or `p/q`; whitespace is ignored; a bare variable has exponent 1
// and a missing coefficient means 1.

namespace detail {

inline bool parse_uint(const std::string& s, std::size_t& pos, Int& out) {
  std::size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) return false;
  out = Int(s.substr(start, pos - start));
  return true;
}

}  // namespace detail

inline SparsePoly parse_poly(const std::string& text, std::size_t arity) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') s += ch;
  if (s.empty()) throw ParseError("empty polynomial");

  SparsePoly out(arity);
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
      if (pos >= s.size()) throw ParseError("dangling sign");
    }
    Rat coeff(1);
    SparsePoly::Exponents exps(arity, 0);
    bool saw_factor = false;
    while (true) {
      if (pos < s.size() && s[pos] == 'x') {
        ++pos;
        Int idx;
        if (!detail::parse_uint(s, pos, idx))
          throw ParseError("variable index expected after 'x'");
        if (idx >= Int(arity)) throw ArityError("variable index out of range");
        Int exp = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          if (!detail::parse_uint(s, pos, exp))
            throw ParseError("exponent expected after '^'");
        }
        std::size_t i = static_cast<std::size_t>(to_ll(idx, "variable index"));
        exps[i] += static_cast<std::uint32_t>(to_ll(exp, "exponent"));
      } else if (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        Int num;
        detail::parse_uint(s, pos, num);
        Int den = 1;
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          if (!detail::parse_uint(s, pos, den))
            throw ParseError("denominator expected after '/'");
          if (den == 0) throw ParseError("zero denominator");
        }
        coeff *= Rat(num, den);
      } else {
        throw ParseError("term factor expected at position " +
                         std::to_string(pos));
      }
      saw_factor = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!saw_factor) throw ParseError("empty term");
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw ParseError("unexpected character at position " +
                       std::to_string(pos));
    out.add_term(exps, negative ? Rat(-coeff) : coeff);
  }
  return out;
}

}  // namespace curvext
