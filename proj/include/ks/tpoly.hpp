#pragma once

#include <map>
#include <string>
#include <vector>

#include "ks/bigint.hpp"

namespace ks {

// Sparse polynomial in grading variables t_1,...,t_r with exact integer
// coefficients. Terms are keyed by the exponent vector (length r, entries
// >= 0) in lexicographic order, which fixes the canonical serialization
// order. Zero coefficients are never stored.
class TPoly {
 public:
  using Exp = std::vector<int>;

  explicit TPoly(int nvars) : nvars_(nvars) {}

  static TPoly zero(int nvars) { return TPoly(nvars); }

  static TPoly one(int nvars) {
    TPoly p(nvars);
    p.add_term(Exp(static_cast<size_t>(nvars), 0), 1);
    return p;
  }

  static TPoly monomial(Exp e, Int c) {
    TPoly p(static_cast<int>(e.size()));
    p.add_term(std::move(e), std::move(c));
    return p;
  }

  // Single-variable convenience: c * t^deg.
  static TPoly single(int deg, Int c = 1) {
    return monomial(Exp{deg}, std::move(c));
  }

  int vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exp, Int>& terms() const { return terms_; }

  // Adds c * t^e, merging with an existing term and pruning zeros.
  void add_term(Exp e, Int c);

  Int coeff(const Exp& e) const;
  Int constant_term() const;

  // Largest total degree of a term, or -1 for the zero polynomial.
  int total_degree() const;

  bool all_coeffs_nonnegative() const;

  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly operator-() const;
  TPoly scaled(const Int& c) const;
  TPoly& operator+=(const TPoly& o);

  bool operator==(const TPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const TPoly& o) const { return !(*this == o); }

  // Substitutes t_s := t for every s; the result has one variable.
  TPoly specialize_diagonal() const;

  // Drops every term of total degree > maxdeg.
  TPoly truncated(int maxdeg) const;

 private:
  int nvars_;
  std::map<Exp, Int> terms_;

  void check_same_vars(const TPoly& o) const;
};

}  // namespace ks
