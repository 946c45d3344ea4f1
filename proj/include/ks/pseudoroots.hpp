#pragma once

#include <cstdint>
#include <list>
#include <map>
#include <unordered_map>
#include <vector>

#include "ks/laurent.hpp"
#include "ks/multipartition.hpp"
#include "ks/tpoly.hpp"

namespace ks {

// One colored pseudoroot alpha_{mn} = delta_m + ... + delta_{n-1}, for
// 1 <= m < n <= rN with n - m = 1 (mod r). Its color is the residue class
// of the start index m, written in {1,...,r} with r standing for 0; this is
// the index of the grading variable the root contributes to. (The defining
// text states the color condition with a garbled subscript; m = s (mod r)
// is the reading consistent with the degree rule deg E_{nm} = m (mod r)
// and with the generating-product identity checked by the series oracle.)
struct Pseudoroot {
  int m;            // 1-based start
  int n;            // 1-based end, covers coordinates m..n-1
  int color;        // ((m-1) mod r) + 1
  AlphaVec alpha;   // length rN-1, ones at positions m..n-1 (1-based)
};

class PseudorootSystem {
 public:
  PseudorootSystem(int r, int n);

  int r() const { return r_; }
  int parts() const { return n_; }
  int dim() const { return r_ * n_ - 1; }  // length of AlphaVec coordinates
  const std::vector<Pseudoroot>& roots() const { return roots_; }

 private:
  int r_;
  int n_;
  std::vector<Pseudoroot> roots_;  // ordered by (m, n)
};

// Linear extension of delta_l -> e_{l+1} - e_l; sends alpha_{mn} to
// e_n - e_m, i.e. the x-monomial x_m^{-1} x_n. Result has length
// alpha.size() + 1.
std::vector<int> xexp_of_alpha(const AlphaVec& alpha);

// Inverse of xexp_of_alpha: alpha_l = -(w_1 + ... + w_l). Throws if w does
// not lie in the image (nonzero total).
AlphaVec alpha_of_xexp(const std::vector<int>& xexp);

// The colored vector partition function L^alpha(t_1,...,t_r): the
// generating polynomial of unordered multisets of pseudoroots summing to
// alpha, graded by the count of members of each color. Computed by a
// coin-change recursion over the root list ordered by start index, with a
// bounded LRU memo shared across queries.
//
// Instances are not thread-safe; use one engine per thread. Results are
// deterministic and identical across engines.
class PartitionFunction {
 public:
  explicit PartitionFunction(const PseudorootSystem& sys,
                             size_t cache_capacity = default_cache_capacity());

  const PseudorootSystem& system() const { return sys_; }

  // L^alpha in r color variables. Zero when any coordinate of alpha is
  // negative, one when alpha = 0.
  TPoly colored(const AlphaVec& alpha);

  // Single-variable L^alpha(t), graded by multiset size only. This is an
  // independent computation path (it never consults the colored DP).
  TPoly sized(const AlphaVec& alpha);

  // Reads KSHOJI_CACHE_SIZE when set, else 10^6 entries.
  static size_t default_cache_capacity();

 private:
  PseudorootSystem sys_;
  size_t capacity_;

  struct VectorHash {
    size_t operator()(const std::vector<int>& v) const {
      size_t h = 0x9e3779b97f4a7c15ULL;
      for (int x : v) {
        h ^= static_cast<size_t>(static_cast<uint32_t>(x)) + 0x9e3779b97f4a7c15ULL +
             (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  // Bounded LRU memo: key = (root index, residual vector) flattened.
  struct Cache {
    size_t capacity = 0;
    std::list<std::vector<int>> order;  // front = most recent
    std::unordered_map<std::vector<int>,
                       std::pair<TPoly, std::list<std::vector<int>>::iterator>,
                       VectorHash>
        map;
    const TPoly* find(const std::vector<int>& key);
    void insert(std::vector<int> key, TPoly value);
  };

  Cache colored_cache_;
  Cache sized_cache_;

  TPoly eval(const AlphaVec& alpha, bool colored);
  TPoly rec(size_t k, std::vector<int>& v, bool colored, Cache& cache);
};

// Expands the product over all pseudoroots of (1 - t_color x^{e_n - e_m})^{-1}
// truncated at total t-degree D, converts each x-monomial back to its alpha
// vector, and returns the coefficient of every alpha inside the box
// (0 <= alpha_l <= box[l]). Used as the independent generating-function
// route to the partition function.
std::map<AlphaVec, TPoly> partition_function_series_oracle(
    const PseudorootSystem& sys, const std::vector<int>& box, int max_degree);

}  // namespace ks
