#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ks/bigint.hpp"
#include "ks/tpoly.hpp"

namespace ks {

// Laurent polynomial in x_1,...,x_{rN} (integer exponents) whose
// coefficients are polynomials in t_1,...,t_r, stored term-by-term as
// (xexp, texp) -> Int. An optional truncation bound D keeps only terms of
// total t-degree <= D; arithmetic discards anything above the bound, which
// is what makes geometric-series factors finite.
//
// Canonical term order is lexicographic on (texp, xexp).
class GradedLaurent {
 public:
  struct Key {
    std::vector<int> t;  // length tvars, entries >= 0
    std::vector<int> x;  // length xvars, entries in Z
    bool operator<(const Key& o) const {
      if (t != o.t) return t < o.t;
      return x < o.x;
    }
    bool operator==(const Key& o) const { return t == o.t && x == o.x; }
  };

  GradedLaurent(int xvars, int tvars,
                std::optional<int> truncation = std::nullopt)
      : xvars_(xvars), tvars_(tvars), trunc_(truncation) {}

  static GradedLaurent one(int xvars, int tvars,
                           std::optional<int> truncation = std::nullopt);

  // c * x^xexp * t^texp
  static GradedLaurent monomial(std::vector<int> xexp, std::vector<int> texp,
                                Int c,
                                std::optional<int> truncation = std::nullopt);

  // x^xexp with no t content.
  static GradedLaurent x_monomial(std::vector<int> xexp,
                                  std::optional<int> truncation = std::nullopt);

  int xvars() const { return xvars_; }
  int tvars() const { return tvars_; }
  std::optional<int> truncation() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Key, Int>& terms() const { return terms_; }

  void set_truncation(std::optional<int> d);

  // Adds a term, merging and pruning zeros; drops it when above truncation.
  void add_term(std::vector<int> xexp, std::vector<int> texp, Int c);

  GradedLaurent operator+(const GradedLaurent& o) const;
  GradedLaurent operator-(const GradedLaurent& o) const;
  GradedLaurent operator*(const GradedLaurent& o) const;
  GradedLaurent& operator+=(const GradedLaurent& o);
  bool operator==(const GradedLaurent& o) const {
    return xvars_ == o.xvars_ && tvars_ == o.tvars_ && terms_ == o.terms_;
  }
  bool operator!=(const GradedLaurent& o) const { return !(*this == o); }

  // Multiplies by a coefficient polynomial in the t variables only.
  GradedLaurent scaled_by(const TPoly& c) const;

  // Multiplies by (1 - t_color * x^xw)^{-1} = sum_k t_color^k x^{k*xw},
  // truncated at the value's t-degree bound. color is 1-based.
  // Requires a truncation bound (the series is infinite without one).
  GradedLaurent geom_inverse_factor(const std::vector<int>& xw,
                                    int color) const;

  // x_i -> x_i^{-1} for all i (negates every x exponent).
  GradedLaurent inverted_x() const;

  // Swaps the exponents of x variables at 0-based positions a and b.
  GradedLaurent swapped_x(int a, int b) const;

  // Groups terms by x-monomial; each group becomes a TPoly coefficient.
  std::map<std::vector<int>, TPoly> collect_by_xexp() const;

  // Collects all t-content at the given x-monomial.
  TPoly coeff_at_x(const std::vector<int>& xexp) const;

 private:
  int xvars_;
  int tvars_;
  std::optional<int> trunc_;
  std::map<Key, Int> terms_;

  bool above_truncation(const std::vector<int>& texp) const;
  void check_compatible(const GradedLaurent& o) const;
  static std::optional<int> combined_trunc(std::optional<int> a,
                                           std::optional<int> b);
};

}  // namespace ks
