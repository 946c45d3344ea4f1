#pragma once

#include <string>
#include <vector>

namespace ks {

// Element of the affine symmetric group of period d, in window notation:
// a bijection w of Z with w(u + d) = w(u) + d, recorded by the window
// w(1..d). Validity requires the window residues mod d to form a complete
// residue system and sum(w(u) - u) = 0 (the non-extended group).
class AffinePermutation {
 public:
  AffinePermutation(int d, std::vector<long long> window);

  static AffinePermutation identity(int d);
  // Simple reflection s_i, i in 0..d-1, swapping the values congruent to
  // i and i+1 in every period.
  static AffinePermutation simple(int d, int i);

  int period() const { return d_; }
  const std::vector<long long>& window() const { return window_; }

  long long apply(long long u) const;

  // Coxeter length: sum over window pairs i < j of |floor((w(j)-w(i))/d)|.
  long long length() const;

  // Left multiplication by s_i: adds 1 to values congruent to i and
  // subtracts 1 from values congruent to i+1 (mod d).
  AffinePermutation apply_simple(int i) const;

  // Function composition (*this) after other.
  AffinePermutation compose(const AffinePermutation& other) const;

  bool is_identity() const;
  bool operator==(const AffinePermutation& o) const {
    return d_ == o.d_ && window_ == o.window_;
  }

 private:
  int d_;
  std::vector<long long> window_;
};

// Product of the word's letters (left to right) as group elements.
AffinePermutation word_product(int d, const std::vector<int>& word);

// True iff length(product) equals the word length.
bool is_reduced(int d, const std::vector<int>& word);

// Staircase reduced word for the longest element of the finite parabolic
// subgroup generated by the consecutive residue arc
// {start, start+1, ..., start+k-1} (mod d). Requires 1 <= k < d; the word
// has length k(k+1)/2.
std::vector<int> parabolic_longest_word(int d, int start, int k);

// Flag type for the iterated convolution construction: r vertices with
// dimensions dims; a sequence of vertices i_seq and positive jumps a_seq
// with sum over {n : i_seq[n] = s} of a_seq[n] equal to dims[s].
struct FlagType {
  int r = 0;
  std::vector<int> dims;   // length r
  std::vector<int> i_seq;  // vertices in 1..r
  std::vector<int> a_seq;  // positive integers, same length as i_seq

  int total_dim() const;   // d = sum of dims
  void validate() const;
};

// The standard flag type: vertex sequence (r, r-1, ..., 1) repeated N
// times with unit jumps, whose convolution diagram is the pseudoroot
// vector bundle over the product flag variety.
FlagType standard_flag_type(int r, int n);

// One emitted block: the source step n (1-based), the integer interval
// before residue reduction, the residue arc, and the reduced word of the
// parabolic longest element for that arc (empty for an empty interval).
struct WordBlock {
  int n = 0;
  long long lo = 0;
  long long hi = 0;      // interval [lo, hi]; empty when hi < lo
  int arc_start = 0;     // residue of lo (mod d), meaningful when nonempty
  int arc_size = 0;
  std::vector<int> word;
};

// Builds the concatenated block list, ordered from the last step down to
// the first. Interval endpoints use cumulative dimensions D(u) =
// dims[1]+...+dims[u] with the cyclic lift D(u+r) = D(u) + d, and all
// letters are reduced mod d. Throws when a block's arc covers every
// residue (the parabolic subgroup would be infinite), reporting the
// offending step.
std::vector<WordBlock> build_word_sequence(const FlagType& ft);

// Consistency counts for the standard flag type: the pseudoroot count must
// equal the block-entry count (r-1)*N(N+1)/2 + N(N-1)/2; also reports the
// flag dimension r*N(N-1)/2 and the total-space dimension.
struct DimsReport {
  long long pseudoroot_count = 0;
  long long block_entry_count = 0;
  long long flag_dim = 0;
  long long total_dim = 0;
  bool counts_match = false;
};

DimsReport dims_check(int r, int n);

}  // namespace ks
