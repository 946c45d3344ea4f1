#pragma once

#include <map>
#include <vector>

#include "ks/laurent.hpp"
#include "ks/multipartition.hpp"
#include "ks/tpoly.hpp"

namespace ks {

// Semistandard tableau: rows weakly increase, columns strictly increase.
struct Tableau {
  std::vector<int> shape;              // weakly decreasing, nonnegative
  std::vector<std::vector<int>> rows;  // entries 1..N

  std::vector<int> content(int max_entry) const;
  bool is_semistandard() const;
};

// All SSYT of the given shape with entries in 1..max_entry.
std::vector<Tableau> enumerate_ssyt(const std::vector<int>& shape,
                                    int max_entry);

// All SSYT of the given shape whose content (multiplicity vector) is
// exactly `content`.
std::vector<Tableau> enumerate_ssyt_content(const std::vector<int>& shape,
                                            const std::vector<int>& content);

// Schur character of the weakly decreasing integer vector lambda in the N
// variables x_1..x_N (N = lambda.size()), as a Laurent polynomial with no
// t-variables. Negative entries are handled by shifting by a constant and
// dividing by (x_1...x_N)^shift. With inverted = true every variable is
// replaced by its inverse, giving the character of the irreducible with
// lowest weight -lambda.
GradedLaurent schur_character(const std::vector<int>& lambda, bool inverted);

// Product over components of the inverted Schur characters, embedded in the
// rN interleaved variables (component s occupies positions r(j-1)+s). The
// tvars parameter sets the number of (unused) grading variables so results
// can mix with graded series.
GradedLaurent chi(const Multipartition& mp, int tvars = 0);

// Lascoux-Schutzenberger charge of a word with partition content.
long long charge(const std::vector<int>& word);

// Classical single-variable Kostka polynomial as the charge generating
// function over SSYT of shape lambda and content mu. Requires nonnegative
// weakly decreasing lambda and mu of equal size; returns 0 for an empty
// tableau set.
TPoly kostka_foulkes_charge(const std::vector<int>& lambda,
                            const std::vector<int>& mu);

// Demazure operator pi_i on the component's variable pair (x_a, x_b):
// pi_i f = (x_a f - x_b s_i f) / (x_a - x_b), with the division carried out
// exactly by telescoping monomial pairs. component and i are 1-based;
// component c's j-th variable sits at interleaved position r(j-1)+c.
GradedLaurent demazure_pi(const GradedLaurent& f, int r, int component, int i);

// Applies pi along a staircase reduced word of the longest element of the
// component's symmetric group; the result is symmetric in that component's
// variables.
GradedLaurent demazure_symmetrize_component(const GradedLaurent& f, int r,
                                            int component);

// Graded Euler characteristic of the twisted symmetric-algebra sheaf: the
// truncated colored geometric product of the pseudoroot weights times the
// fiber weight of the mu-line-bundle, pushed through the full Demazure
// symmetrizer of every component. Decomposing the result into irreducible
// characters recovers the Kostka polynomials K(lambda, mu) up to t-degree D.
//
// Orientation of the weight conventions is guarded by built-in self-tests:
// the D = 0 output must equal chi(mu), and a frozen small case must
// reproduce its known character expansion. A failure throws.
GradedLaurent euler_characteristic(const Multipartition& mu, int max_degree);

// Greedy peeling of a per-component symmetric Laurent polynomial into
// inverted Schur characters: repeatedly read the lex-least x-monomial,
// whose per-component exponents must be weakly increasing (the lowest
// weight -lambda of some chi^lambda), subtract its coefficient times
// chi(lambda), and record the coefficient. Throws if an extreme monomial is
// not antidominant or if the iteration cap (initial monomial count + 1) is
// exceeded; both signal non-character input.
std::map<Multipartition, TPoly> decompose_chi(const GradedLaurent& f, int r);

// Weight bookkeeping for the canonical bundle of the pseudoroot vector
// bundle over the product flag variety: direct sums of the bundle and
// tangent weights, the resulting canonical-fiber weight, closed-form
// checks, and triviality of the restriction to the product of special
// linear subgroups (all coordinates equal within each component).
struct CanonicalWeightReport {
  std::vector<int> bundle_weight_sum;   // sum of e_m - e_n over pseudoroots
  std::vector<int> tangent_weight_sum;  // sum of flag tangent weights
  std::vector<int> canonical_weight;    // minus the two sums above
  bool bundle_closed_form_ok = false;
  bool tangent_closed_form_ok = false;
  bool canonical_closed_form_ok = false;
  bool sl_trivial = false;
};

CanonicalWeightReport canonical_weight_report(int r, int n);

}  // namespace ks
