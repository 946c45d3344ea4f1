#include "ks/pseudoroots.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ks {

PseudorootSystem::PseudorootSystem(int r, int n) : r_(r), n_(n) {
  if (r < 1 || n < 1) {
    throw std::invalid_argument("PseudorootSystem: need r >= 1 and N >= 1");
  }
  int rn = r * n;
  for (int m = 1; m < rn; ++m) {
    for (int nn = m + 1; nn <= rn; ++nn) {
      if ((nn - m - 1) % r != 0) continue;
      Pseudoroot root;
      root.m = m;
      root.n = nn;
      root.color = ((m - 1) % r) + 1;
      root.alpha.assign(static_cast<size_t>(rn - 1), 0);
      for (int l = m; l < nn; ++l) root.alpha[static_cast<size_t>(l - 1)] = 1;
      roots_.push_back(std::move(root));
    }
  }
}

std::vector<int> xexp_of_alpha(const AlphaVec& alpha) {
  std::vector<int> w(alpha.size() + 1, 0);
  for (size_t l = 0; l < alpha.size(); ++l) {
    w[l] -= alpha[l];
    w[l + 1] += alpha[l];
  }
  return w;
}

AlphaVec alpha_of_xexp(const std::vector<int>& xexp) {
  if (xexp.empty()) {
    throw std::invalid_argument("alpha_of_xexp: empty exponent vector");
  }
  AlphaVec alpha(xexp.size() - 1);
  long long acc = 0;
  for (size_t l = 0; l + 1 < xexp.size(); ++l) {
    acc += xexp[l];
    alpha[l] = static_cast<int>(-acc);
  }
  acc += xexp.back();
  if (acc != 0) {
    throw std::invalid_argument(
        "alpha_of_xexp: monomial outside the image of the alpha map");
  }
  return alpha;
}

size_t PartitionFunction::default_cache_capacity() {
  if (const char* env = std::getenv("KSHOJI_CACHE_SIZE")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return 1000000;
}

PartitionFunction::PartitionFunction(const PseudorootSystem& sys,
                                     size_t cache_capacity)
    : sys_(sys), capacity_(cache_capacity) {
  colored_cache_.capacity = capacity_;
  sized_cache_.capacity = capacity_;
}

const TPoly* PartitionFunction::Cache::find(const std::vector<int>& key) {
  auto it = map.find(key);
  if (it == map.end()) return nullptr;
  order.splice(order.begin(), order, it->second.second);
  return &it->second.first;
}

void PartitionFunction::Cache::insert(std::vector<int> key, TPoly value) {
  auto it = map.find(key);
  if (it != map.end()) return;  // idempotent
  order.push_front(key);
  map.emplace(std::move(key), std::make_pair(std::move(value), order.begin()));
  if (map.size() > capacity) {
    map.erase(order.back());
    order.pop_back();
  }
}

TPoly PartitionFunction::colored(const AlphaVec& alpha) {
  return eval(alpha, /*colored=*/true);
}

TPoly PartitionFunction::sized(const AlphaVec& alpha) {
  return eval(alpha, /*colored=*/false);
}

TPoly PartitionFunction::eval(const AlphaVec& alpha, bool colored) {
  if (static_cast<int>(alpha.size()) != sys_.dim()) {
    throw std::invalid_argument("PartitionFunction: alpha has length " +
                                std::to_string(alpha.size()) + ", expected " +
                                std::to_string(sys_.dim()));
  }
  int tvars = colored ? sys_.r() : 1;
  for (int a : alpha) {
    if (a < 0) return TPoly::zero(tvars);  // zero extension off the cone
  }
  std::vector<int> v(alpha);
  return rec(0, v, colored, colored ? colored_cache_ : sized_cache_);
}

// Multisets of roots from index k onward summing to v, counted once each:
// dp(k, v) = dp(k+1, v) + t_color(k) * dp(k, v - alpha_k). Roots are ordered
// by start index, so once the first supported coordinate of v lies before
// the current root's start, no remaining root can cover it.
TPoly PartitionFunction::rec(size_t k, std::vector<int>& v, bool colored,
                             Cache& cache) {
  int tvars = colored ? sys_.r() : 1;
  // First supported coordinate (1-based), or 0 when v = 0.
  int first = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0) {
      first = static_cast<int>(i) + 1;
      break;
    }
  }
  if (first == 0) return TPoly::one(tvars);

  const auto& roots = sys_.roots();
  // Any usable root must start exactly at `first`: earlier starts would
  // cover an exhausted coordinate, later starts never cover `first`.
  while (k < roots.size() && roots[k].m < first) ++k;
  if (k == roots.size() || roots[k].m > first) return TPoly::zero(tvars);

  std::vector<int> key;
  key.reserve(v.size() + 1);
  key.push_back(static_cast<int>(k));
  key.insert(key.end(), v.begin(), v.end());
  if (const TPoly* hit = cache.find(key)) return *hit;

  TPoly result = rec(k + 1, v, colored, cache);

  const Pseudoroot& root = roots[k];
  bool fits = true;
  for (int l = root.m; l < root.n; ++l) {
    if (v[static_cast<size_t>(l - 1)] < 1) {
      fits = false;
      break;
    }
  }
  if (fits) {
    for (int l = root.m; l < root.n; ++l) --v[static_cast<size_t>(l - 1)];
    TPoly sub = rec(k, v, colored, cache);
    for (int l = root.m; l < root.n; ++l) ++v[static_cast<size_t>(l - 1)];
    TPoly::Exp tstep(static_cast<size_t>(tvars), 0);
    tstep[static_cast<size_t>(colored ? root.color - 1 : 0)] = 1;
    result += sub * TPoly::monomial(std::move(tstep), 1);
  }

  cache.insert(std::move(key), result);
  return result;
}

std::map<AlphaVec, TPoly> partition_function_series_oracle(
    const PseudorootSystem& sys, const std::vector<int>& box, int max_degree) {
  if (static_cast<int>(box.size()) != sys.dim()) {
    throw std::invalid_argument("series oracle: box has wrong dimension");
  }
  if (max_degree < 0) {
    throw std::invalid_argument("series oracle: max_degree < 0");
  }
  int rn = sys.r() * sys.parts();
  GradedLaurent product = GradedLaurent::one(rn, sys.r(), max_degree);
  for (const Pseudoroot& root : sys.roots()) {
    std::vector<int> xw(static_cast<size_t>(rn), 0);
    xw[static_cast<size_t>(root.m - 1)] = -1;
    xw[static_cast<size_t>(root.n - 1)] = 1;
    product = product.geom_inverse_factor(xw, root.color);
  }
  std::map<AlphaVec, TPoly> out;
  for (auto& [xexp, poly] : product.collect_by_xexp()) {
    AlphaVec alpha = alpha_of_xexp(xexp);
    bool inside = true;
    for (size_t l = 0; l < alpha.size(); ++l) {
      if (alpha[l] < 0) {
        throw std::logic_error("series oracle: negative alpha coordinate");
      }
      if (alpha[l] > box[l]) {
        inside = false;
        break;
      }
    }
    if (inside) out.emplace(std::move(alpha), std::move(poly));
  }
  return out;
}

}  // namespace ks
