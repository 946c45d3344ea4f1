#pragma once

#include <string>
#include <vector>

namespace ks {

// Difference vector living in Z^{rN-1}, indexed by the interleaved prefix
// positions 1..rN-1. The colored partition function vanishes off the
// nonnegative cone, so negative coordinates are allowed here and simply
// evaluate to zero downstream.
using AlphaVec = std::vector<int>;

// An r-tuple of weakly decreasing length-N integer sequences. Entries may
// be negative ("generalized" multipartitions); the table enumerator below
// restricts itself to nonnegative entries.
class Multipartition {
 public:
  // Zero multipartition of shape (r, N).
  Multipartition(int r, int n);

  // Validates weak decrease of every component.
  explicit Multipartition(std::vector<std::vector<int>> rows);

  // Every component equal to (N, N-1, ..., 1).
  static Multipartition rho(int r, int n);

  int components() const { return r_; }
  int parts() const { return n_; }
  const std::vector<int>& row(int s) const;  // s is 0-based
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int s, int j) const { return rows_[s][j]; }  // 0-based

  long long total() const;

  // Entries in the order lambda^(1)_1, lambda^(2)_1, ..., lambda^(r)_1,
  // lambda^(1)_2, ...; position r*(j-1)+s (1-based) holds lambda^(s)_j.
  std::vector<int> interleave() const;

  // Prefix sums of interleave().
  std::vector<long long> partial_sums() const;

  // Dominance order: every proper prefix sum >= and grand totals equal.
  bool dominates(const Multipartition& mu) const;

  // Coordinate n is Sigma_n(*this) - Sigma_n(mu), n = 1..rN-1.
  // Requires equal grand totals. Coordinates may be negative.
  AlphaVec diff_alpha(const Multipartition& mu) const;

  // Componentwise sum (shapes must match).
  Multipartition plus(const Multipartition& o) const;

  // Text form: components joined by '|', entries by ',' (e.g. "3,1,0|2,0,0").
  std::string to_text() const;

  // Parses the text form; components shorter than n are zero-padded.
  // Rejects non-weakly-decreasing components and wrong component counts.
  static Multipartition parse(const std::string& text, int r, int n);

  // Canonical order: shape first, then interleaved entries lexicographically
  // descending-first (so e.g. "2,0" sorts before "1,1").
  bool operator<(const Multipartition& o) const;
  bool operator==(const Multipartition& o) const {
    return r_ == o.r_ && n_ == o.n_ && rows_ == o.rows_;
  }
  bool operator!=(const Multipartition& o) const { return !(*this == o); }

 private:
  int r_;
  int n_;
  std::vector<std::vector<int>> rows_;

  void check_shape(const Multipartition& o) const;
};

// All multipartitions with nonnegative entries and entry sum equal to
// `total`, components padded to length n. Deterministic order, no
// duplicates.
std::vector<Multipartition> enumerate_multipartitions(int r, int n,
                                                      long long total);

// All (N!)^r signed images of an interleaved vector v (length rN) under the
// product of symmetric groups acting within each component's interleaved
// positions. Deterministic odometer order (component 1 slowest), sign =
// product of the component signatures.
std::vector<std::pair<int, std::vector<int>>> signed_weyl_images(
    const std::vector<int>& v, int r, int n);

// Partitions of k into at most max_parts parts, descending lexicographic
// order, each padded to max_parts entries. Shared by the enumerators.
std::vector<std::vector<int>> partitions_with_max_parts(long long k,
                                                        int max_parts);

}  // namespace ks
