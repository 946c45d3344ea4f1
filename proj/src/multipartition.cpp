#include "ks/multipartition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ks {

namespace {

void check_positive_shape(int r, int n) {
  if (r < 1 || n < 1) {
    throw std::invalid_argument("Multipartition: need r >= 1 and N >= 1");
  }
}

bool weakly_decreasing(const std::vector<int>& v) {
  for (size_t j = 1; j < v.size(); ++j) {
    if (v[j - 1] < v[j]) return false;
  }
  return true;
}

}  // namespace

Multipartition::Multipartition(int r, int n) : r_(r), n_(n) {
  check_positive_shape(r, n);
  rows_.assign(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(n), 0));
}

Multipartition::Multipartition(std::vector<std::vector<int>> rows)
    : r_(static_cast<int>(rows.size())), rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("Multipartition: no components");
  n_ = static_cast<int>(rows_[0].size());
  check_positive_shape(r_, n_);
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != n_) {
      throw std::invalid_argument("Multipartition: ragged component lengths");
    }
    if (!weakly_decreasing(row)) {
      throw std::invalid_argument("Multipartition: component not weakly decreasing");
    }
  }
}

Multipartition Multipartition::rho(int r, int n) {
  check_positive_shape(r, n);
  std::vector<int> row(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = n - j;
  return Multipartition(std::vector<std::vector<int>>(static_cast<size_t>(r), row));
}

const std::vector<int>& Multipartition::row(int s) const {
  return rows_.at(static_cast<size_t>(s));
}

long long Multipartition::total() const {
  long long t = 0;
  for (const auto& row : rows_) {
    t += std::accumulate(row.begin(), row.end(), 0LL);
  }
  return t;
}

std::vector<int> Multipartition::interleave() const {
  std::vector<int> v(static_cast<size_t>(r_ * n_));
  for (int j = 0; j < n_; ++j) {
    for (int s = 0; s < r_; ++s) {
      v[static_cast<size_t>(r_ * j + s)] = rows_[static_cast<size_t>(s)][static_cast<size_t>(j)];
    }
  }
  return v;
}

std::vector<long long> Multipartition::partial_sums() const {
  std::vector<int> v = interleave();
  std::vector<long long> sums(v.size());
  long long acc = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    sums[i] = acc;
  }
  return sums;
}

void Multipartition::check_shape(const Multipartition& o) const {
  if (r_ != o.r_ || n_ != o.n_) {
    throw std::invalid_argument("Multipartition: shape mismatch");
  }
}

bool Multipartition::dominates(const Multipartition& mu) const {
  check_shape(mu);
  std::vector<long long> a = partial_sums();
  std::vector<long long> b = mu.partial_sums();
  size_t last = a.size() - 1;
  for (size_t i = 0; i < last; ++i) {
    if (a[i] < b[i]) return false;
  }
  return a[last] == b[last];
}

AlphaVec Multipartition::diff_alpha(const Multipartition& mu) const {
  check_shape(mu);
  std::vector<long long> a = partial_sums();
  std::vector<long long> b = mu.partial_sums();
  if (a.back() != b.back()) {
    throw std::invalid_argument("diff_alpha: grand totals differ");
  }
  AlphaVec alpha(a.size() - 1);
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    alpha[i] = static_cast<int>(a[i] - b[i]);
  }
  return alpha;
}

Multipartition Multipartition::plus(const Multipartition& o) const {
  check_shape(o);
  std::vector<std::vector<int>> rows = rows_;
  for (int s = 0; s < r_; ++s) {
    for (int j = 0; j < n_; ++j) {
      rows[static_cast<size_t>(s)][static_cast<size_t>(j)] += o.rows_[static_cast<size_t>(s)][static_cast<size_t>(j)];
    }
  }
  return Multipartition(std::move(rows));
}

std::string Multipartition::to_text() const {
  std::ostringstream os;
  for (int s = 0; s < r_; ++s) {
    if (s > 0) os << '|';
    for (int j = 0; j < n_; ++j) {
      if (j > 0) os << ',';
      os << rows_[static_cast<size_t>(s)][static_cast<size_t>(j)];
    }
  }
  return os.str();
}

Multipartition Multipartition::parse(const std::string& text, int r, int n) {
  check_positive_shape(r, n);
  std::vector<std::vector<int>> rows;
  std::stringstream comp_stream(text);
  std::string comp;
  while (std::getline(comp_stream, comp, '|')) {
    std::vector<int> row;
    std::stringstream entry_stream(comp);
    std::string entry;
    while (std::getline(entry_stream, entry, ',')) {
      size_t pos = 0;
      int value = std::stoi(entry, &pos);
      while (pos < entry.size() && std::isspace(static_cast<unsigned char>(entry[pos]))) ++pos;
      if (pos != entry.size()) {
        throw std::invalid_argument("Multipartition: bad entry '" + entry + "'");
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != r) {
    throw std::invalid_argument("Multipartition: expected " + std::to_string(r) +
                                " components, got " + std::to_string(rows.size()));
  }
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) > n) {
      throw std::invalid_argument("Multipartition: component longer than N");
    }
    if (!row.empty() && row.back() < 0 && static_cast<int>(row.size()) < n) {
      throw std::invalid_argument(
          "Multipartition: cannot zero-pad a component ending below 0");
    }
    row.resize(static_cast<size_t>(n), 0);
  }
  return Multipartition(std::move(rows));  // validates weak decrease
}

bool Multipartition::operator<(const Multipartition& o) const {
  if (r_ != o.r_) return r_ < o.r_;
  if (n_ != o.n_) return n_ < o.n_;
  std::vector<int> a = interleave();
  std::vector<int> b = o.interleave();
  // Larger leading entries first: "2,0" precedes "1,1".
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::vector<int>> partitions_with_max_parts(long long k,
                                                        int max_parts) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  if (k == 0) {
    out.emplace_back(static_cast<size_t>(max_parts), 0);
    return out;
  }
  if (max_parts == 0) return out;
  std::vector<int> cur;
  // Descending lexicographic: largest first part first.
  auto rec = [&](auto&& self, long long rem, int bound, int slots) -> void {
    if (rem == 0) {
      std::vector<int> padded = cur;
      padded.resize(cur.size() + static_cast<size_t>(slots), 0);
      out.push_back(std::move(padded));
      return;
    }
    if (slots == 0) return;
    int hi = static_cast<int>(std::min<long long>(bound, rem));
    for (int part = hi; part >= 1; --part) {
      cur.push_back(part);
      self(self, rem - part, part, slots - 1);
      cur.pop_back();
    }
  };
  rec(rec, k, static_cast<int>(k), max_parts);
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(int r, int n,
                                                      long long total) {
  if (total < 0) throw std::invalid_argument("enumerate_multipartitions: total < 0");
  std::vector<Multipartition> out;
  std::vector<std::vector<int>> comps;
  // Component totals enumerated with the first component largest first, so
  // the overall order follows the canonical multipartition order.
  auto rec = [&](auto&& self, int s, long long rem) -> void {
    if (s == r) {
      if (rem == 0) out.emplace_back(comps);
      return;
    }
    long long hi = rem;
    for (long long k = hi; k >= 0; --k) {
      if (s == r - 1 && k != rem) continue;
      for (auto& part : partitions_with_max_parts(k, n)) {
        if (static_cast<long long>(std::accumulate(part.begin(), part.end(), 0LL)) != k) continue;
        comps.push_back(part);
        self(self, s + 1, rem - k);
        comps.pop_back();
      }
    }
  };
  rec(rec, 0, total);
  return out;
}

std::vector<std::pair<int, std::vector<int>>> signed_weyl_images(
    const std::vector<int>& v, int r, int n) {
  if (static_cast<int>(v.size()) != r * n) {
    throw std::invalid_argument("signed_weyl_images: length != r*N");
  }
  // Per-component permutations in lexicographic order; component 1 is the
  // slowest dial of the odometer.
  std::vector<std::vector<int>> perms;  // images of 0..n-1
  {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<int> perm_sign(perms.size());
  for (size_t i = 0; i < perms.size(); ++i) {
    int inv = 0;
    for (size_t a = 0; a < perms[i].size(); ++a) {
      for (size_t b = a + 1; b < perms[i].size(); ++b) {
        if (perms[i][a] > perms[i][b]) ++inv;
      }
    }
    perm_sign[i] = (inv % 2 == 0) ? 1 : -1;
  }

  std::vector<std::pair<int, std::vector<int>>> out;
  std::vector<size_t> dial(static_cast<size_t>(r), 0);
  while (true) {
    std::vector<int> image(v.size());
    int sign = 1;
    for (int s = 0; s < r; ++s) {
      const std::vector<int>& p = perms[dial[static_cast<size_t>(s)]];
      sign *= perm_sign[dial[static_cast<size_t>(s)]];
      for (int j = 0; j < n; ++j) {
        // Entry at row j of component s comes from row p[j].
        image[static_cast<size_t>(r * j + s)] = v[static_cast<size_t>(r * p[static_cast<size_t>(j)] + s)];
      }
    }
    out.emplace_back(sign, std::move(image));
    int s = r - 1;
    while (s >= 0) {
      if (++dial[static_cast<size_t>(s)] < perms.size()) break;
      dial[static_cast<size_t>(s)] = 0;
      --s;
    }
    if (s < 0) break;
  }
  return out;
}

}  // namespace ks
