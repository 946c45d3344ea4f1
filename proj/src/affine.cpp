#include "ks/affine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ks {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long pos_mod(long long a, long long b) { return a - b * floor_div(a, b); }

}  // namespace

AffinePermutation::AffinePermutation(int d, std::vector<long long> window)
    : d_(d), window_(std::move(window)) {
  if (d_ < 1) throw std::invalid_argument("AffinePermutation: period < 1");
  if (static_cast<int>(window_.size()) != d_) {
    throw std::invalid_argument("AffinePermutation: window length != period");
  }
  std::vector<char> seen(static_cast<size_t>(d_), 0);
  long long shift_sum = 0;
  for (int u = 1; u <= d_; ++u) {
    long long w = window_[static_cast<size_t>(u - 1)];
    size_t res = static_cast<size_t>(pos_mod(w, d_));
    if (seen[res]) {
      throw std::invalid_argument("AffinePermutation: repeated residue");
    }
    seen[res] = 1;
    shift_sum += w - u;
  }
  if (shift_sum != 0) {
    throw std::invalid_argument(
        "AffinePermutation: window shifts do not sum to zero");
  }
}

AffinePermutation AffinePermutation::identity(int d) {
  std::vector<long long> w(static_cast<size_t>(d));
  std::iota(w.begin(), w.end(), 1LL);
  return AffinePermutation(d, std::move(w));
}

AffinePermutation AffinePermutation::simple(int d, int i) {
  if (d < 2) throw std::invalid_argument("simple: need d >= 2");
  if (i < 0 || i >= d) throw std::invalid_argument("simple: residue out of range");
  return identity(d).apply_simple(i);
}

long long AffinePermutation::apply(long long u) const {
  long long r = pos_mod(u - 1, d_);  // 0-based residue of the window slot
  long long q = floor_div(u - 1, d_);
  return window_[static_cast<size_t>(r)] + q * d_;
}

long long AffinePermutation::length() const {
  long long len = 0;
  for (int i = 1; i <= d_; ++i) {
    for (int j = i + 1; j <= d_; ++j) {
      long long diff = window_[static_cast<size_t>(j - 1)] -
                       window_[static_cast<size_t>(i - 1)];
      long long f = floor_div(diff, d_);
      len += f < 0 ? -f : f;
    }
  }
  return len;
}

AffinePermutation AffinePermutation::apply_simple(int i) const {
  if (i < 0 || i >= d_) throw std::invalid_argument("apply_simple: bad residue");
  std::vector<long long> w = window_;
  for (auto& v : w) {
    long long res = pos_mod(v, d_);
    if (res == pos_mod(i, d_)) {
      v += 1;
    } else if (res == pos_mod(i + 1, d_)) {
      v -= 1;
    }
  }
  return AffinePermutation(d_, std::move(w));
}

AffinePermutation AffinePermutation::compose(
    const AffinePermutation& other) const {
  if (d_ != other.d_) throw std::invalid_argument("compose: period mismatch");
  std::vector<long long> w(static_cast<size_t>(d_));
  for (int u = 1; u <= d_; ++u) {
    w[static_cast<size_t>(u - 1)] = apply(other.apply(u));
  }
  return AffinePermutation(d_, std::move(w));
}

bool AffinePermutation::is_identity() const {
  for (int u = 1; u <= d_; ++u) {
    if (window_[static_cast<size_t>(u - 1)] != u) return false;
  }
  return true;
}

AffinePermutation word_product(int d, const std::vector<int>& word) {
  AffinePermutation p = AffinePermutation::identity(d);
  for (int letter : word) {
    p = p.compose(AffinePermutation::simple(d, letter));
  }
  return p;
}

bool is_reduced(int d, const std::vector<int>& word) {
  return word_product(d, word).length() ==
         static_cast<long long>(word.size());
}

std::vector<int> parabolic_longest_word(int d, int start, int k) {
  if (d < 2) throw std::invalid_argument("parabolic_longest_word: need d >= 2");
  if (k < 1 || k >= d) {
    throw std::invalid_argument(
        "parabolic_longest_word: arc size must satisfy 1 <= k < d");
  }
  std::vector<int> word;
  word.reserve(static_cast<size_t>(k) * (static_cast<size_t>(k) + 1) / 2);
  for (int row = 0; row < k; ++row) {
    for (int i = row; i >= 0; --i) {
      word.push_back(static_cast<int>(pos_mod(start + i, d)));
    }
  }
  return word;
}

int FlagType::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

void FlagType::validate() const {
  if (r < 1) throw std::invalid_argument("FlagType: r < 1");
  if (static_cast<int>(dims.size()) != r) {
    throw std::invalid_argument("FlagType: dims length != r");
  }
  if (i_seq.size() != a_seq.size()) {
    throw std::invalid_argument("FlagType: i_seq/a_seq length mismatch");
  }
  std::vector<long long> sums(static_cast<size_t>(r), 0);
  for (size_t n = 0; n < i_seq.size(); ++n) {
    if (i_seq[n] < 1 || i_seq[n] > r) {
      throw std::invalid_argument("FlagType: vertex out of range");
    }
    if (a_seq[n] < 1) throw std::invalid_argument("FlagType: nonpositive jump");
    sums[static_cast<size_t>(i_seq[n] - 1)] += a_seq[n];
  }
  for (int s = 0; s < r; ++s) {
    if (sums[static_cast<size_t>(s)] != dims[static_cast<size_t>(s)]) {
      throw std::invalid_argument(
          "FlagType: jumps at vertex " + std::to_string(s + 1) +
          " do not sum to its dimension");
    }
  }
}

FlagType standard_flag_type(int r, int n) {
  FlagType ft;
  ft.r = r;
  ft.dims.assign(static_cast<size_t>(r), n);
  for (int rep = 0; rep < n; ++rep) {
    for (int s = r; s >= 1; --s) {
      ft.i_seq.push_back(s);
      ft.a_seq.push_back(1);
    }
  }
  return ft;
}

std::vector<WordBlock> build_word_sequence(const FlagType& ft) {
  ft.validate();
  size_t ell = ft.i_seq.size();
  if (ell == 0) return {};
  int d = ft.total_dim();
  if (d < 2) {
    throw std::invalid_argument("build_word_sequence: need total dimension >= 2");
  }

  // D(u) = dims[1] + ... + dims[u] for u in 1..r, lifted cyclically by
  // D(u + r) = D(u) + d. Vertices live in 1..r; u = r + 1 only appears as
  // s_n + 1 when s_n = r.
  auto cumdim = [&](int u) -> long long {
    long long lift = 0;
    while (u > ft.r) {
      u -= ft.r;
      lift += d;
    }
    long long acc = 0;
    for (int v = 1; v <= u; ++v) acc += ft.dims[static_cast<size_t>(v - 1)];
    return acc + lift;
  };

  std::vector<WordBlock> blocks;
  for (size_t n = ell; n >= 1; --n) {
    int s = ft.i_seq[n - 1];
    int s_next = s + 1;  // may be r + 1; cumdim lifts it
    long long prior_same = 0, prior_next = 0;
    for (size_t m = 0; m + 1 < n; ++m) {
      if (ft.i_seq[m] == s) prior_same += ft.a_seq[m];
      int wrapped_next = (s_next - 1) % ft.r + 1;
      if (ft.i_seq[m] == wrapped_next) prior_next += ft.a_seq[m];
    }
    WordBlock block;
    block.n = static_cast<int>(n);
    block.lo = cumdim(s) + 1 + prior_same;
    block.hi = cumdim(s_next) - 1 + prior_next;
    if (block.hi >= block.lo) {
      long long size = block.hi - block.lo + 1;
      if (size >= d) {
        throw std::invalid_argument(
            "build_word_sequence: step " + std::to_string(n) +
            " yields an arc covering all residues (infinite parabolic)");
      }
      block.arc_start = static_cast<int>(pos_mod(block.lo, d));
      block.arc_size = static_cast<int>(size);
      block.word = parabolic_longest_word(d, block.arc_start, block.arc_size);
    }
    blocks.push_back(std::move(block));
    if (n == 1) break;
  }
  return blocks;
}

DimsReport dims_check(int r, int n) {
  DimsReport rep;
  int rn = r * n;
  for (int m = 1; m < rn; ++m) {
    for (int nn = m + 1; nn <= rn; ++nn) {
      if ((nn - m - 1) % r == 0) ++rep.pseudoroot_count;
    }
  }
  rep.block_entry_count = static_cast<long long>(r - 1) * n * (n + 1) / 2 +
                          static_cast<long long>(n) * (n - 1) / 2;
  rep.flag_dim = static_cast<long long>(r) * n * (n - 1) / 2;
  rep.total_dim = rep.flag_dim + rep.pseudoroot_count;
  rep.counts_match = rep.pseudoroot_count == rep.block_entry_count;
  return rep;
}

}  // namespace ks
