#pragma once

#include <cstdint>
#include <vector>

#include "ks/multipartition.hpp"
#include "ks/pseudoroots.hpp"
#include "ks/tpoly.hpp"

namespace ks {

struct KostkaStats {
  uint64_t weyl_nodes = 0;   // enumeration tree nodes visited
  uint64_t l_lookups = 0;    // completed images handed to the partition function
  double elapsed_seconds = 0.0;
};

struct KostkaResult {
  Multipartition lambda;
  Multipartition mu;
  TPoly poly;  // poly.vars() == lambda.components()
  KostkaStats meta;
};

// Computes K(lambda, mu) in t_1..t_r as the signed Weyl-group sum of
// partition-function values at sigma(lambda+rho)-rho-mu. The enumeration
// walks the interleaved positions left to right, choosing one remaining
// entry of the relevant component at each step; a branch is cut as soon as
// its running prefix sum drops below the prefix sum of rho+mu, since the
// partition function vanishes off the nonnegative cone.
//
// Engines hold a per-instance partition-function cache; use one engine per
// thread. Results are deterministic.
class KostkaEngine {
 public:
  KostkaEngine(int r, int n);

  int r() const { return sys_.r(); }
  int parts() const { return sys_.parts(); }

  // Requires matching shapes and equal totals. lambda, mu may be any
  // generalized multipartitions (negative entries allowed); the result is
  // zero unless lambda dominates mu.
  KostkaResult kostka(const Multipartition& lambda, const Multipartition& mu);

  // Single-variable form, computed through the size-graded partition
  // function rather than by specializing the colored one.
  TPoly kostka_single(const Multipartition& lambda, const Multipartition& mu);

  PartitionFunction& partition_function() { return pf_; }

 private:
  PseudorootSystem sys_;
  PartitionFunction pf_;

  TPoly accumulate(const Multipartition& lambda, const Multipartition& mu,
                   bool colored, KostkaStats* stats);
};

struct TableRow {
  Multipartition lambda;
  Multipartition mu;
  TPoly poly;
};

// All ordered pairs (lambda, mu) of multipartitions of the given total with
// lambda >= mu in dominance order, with their Kostka polynomials. Rows are
// sorted canonically; the computation is parallel over pairs and the result
// is independent of the thread count.
std::vector<TableRow> kostka_table(int r, int n, long long total,
                                   int threads = 1);

}  // namespace ks
