#include "ks/kostka.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace ks {

KostkaEngine::KostkaEngine(int r, int n) : sys_(r, n), pf_(sys_) {}

namespace {

struct WeylWalk {
  int r = 0;
  int n = 0;
  // Per component: entries of (lambda+rho)^(s), strictly decreasing.
  std::vector<std::vector<int>> values;
  std::vector<uint32_t> used;           // bitmask per component
  std::vector<long long> required;      // prefix sums of rho + mu, interleaved
  AlphaVec alpha;                       // rN-1 coordinates being built
  PartitionFunction* pf = nullptr;
  bool colored = true;
  TPoly acc{1};
  KostkaStats* stats = nullptr;

  void run(int pos, long long prefix, int sign) {
    if (stats) ++stats->weyl_nodes;
    int rn = r * n;
    if (pos == rn) {
      if (stats) ++stats->l_lookups;
      TPoly value = colored ? pf->colored(alpha) : pf->sized(alpha);
      if (sign < 0) value = -value;
      acc += value;
      return;
    }
    int s = pos % r;
    const std::vector<int>& vals = values[static_cast<size_t>(s)];
    uint32_t mask = used[static_cast<size_t>(s)];
    int rank = 0;  // unused entries skipped so far; fixes the sign
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) continue;
      long long next = prefix + vals[static_cast<size_t>(i)];
      // alpha_p must stay >= 0 at every proper prefix; pruned branches
      // contribute nothing because L vanishes there.
      if (pos < rn - 1) {
        long long a = next - required[static_cast<size_t>(pos)];
        if (a < 0) {
          ++rank;
          continue;
        }
        alpha[static_cast<size_t>(pos)] = static_cast<int>(a);
      }
      used[static_cast<size_t>(s)] = mask | (1u << i);
      run(pos + 1, next, (rank % 2 == 0) ? sign : -sign);
      used[static_cast<size_t>(s)] = mask;
      ++rank;
    }
  }
};

}  // namespace

TPoly KostkaEngine::accumulate(const Multipartition& lambda,
                               const Multipartition& mu, bool colored,
                               KostkaStats* stats) {
  int r = sys_.r();
  int n = sys_.parts();
  if (lambda.components() != r || lambda.parts() != n ||
      mu.components() != r || mu.parts() != n) {
    throw std::invalid_argument("kostka: shape mismatch with engine");
  }
  if (lambda.total() != mu.total()) {
    throw std::invalid_argument("kostka: lambda and mu have different totals");
  }
  if (n > 31) {
    throw std::invalid_argument("kostka: N too large for the enumeration mask");
  }

  Multipartition rho = Multipartition::rho(r, n);
  Multipartition shifted = lambda.plus(rho);

  WeylWalk walk;
  walk.r = r;
  walk.n = n;
  walk.values.reserve(static_cast<size_t>(r));
  for (int s = 0; s < r; ++s) walk.values.push_back(shifted.row(s));
  walk.used.assign(static_cast<size_t>(r), 0);
  walk.required = rho.plus(mu).partial_sums();
  walk.alpha.assign(static_cast<size_t>(r * n - 1), 0);
  walk.pf = &pf_;
  walk.colored = colored;
  walk.acc = TPoly::zero(colored ? r : 1);
  walk.stats = stats;
  walk.run(0, 0, 1);
  return walk.acc;
}

KostkaResult KostkaEngine::kostka(const Multipartition& lambda,
                                  const Multipartition& mu) {
  auto start = std::chrono::steady_clock::now();
  KostkaStats stats;
  TPoly poly = accumulate(lambda, mu, /*colored=*/true, &stats);
  stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return KostkaResult{lambda, mu, std::move(poly), stats};
}

TPoly KostkaEngine::kostka_single(const Multipartition& lambda,
                                  const Multipartition& mu) {
  return accumulate(lambda, mu, /*colored=*/false, nullptr);
}

std::vector<TableRow> kostka_table(int r, int n, long long total,
                                   int threads) {
  if (threads < 1) throw std::invalid_argument("kostka_table: threads < 1");
  std::vector<Multipartition> all = enumerate_multipartitions(r, n, total);

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t a = 0; a < all.size(); ++a) {
    for (size_t b = 0; b < all.size(); ++b) {
      if (all[a].dominates(all[b])) pairs.emplace_back(a, b);
    }
  }

  std::vector<TPoly> polys(pairs.size(), TPoly::zero(r));
  int workers = static_cast<int>(
      std::min<size_t>(static_cast<size_t>(threads), std::max<size_t>(pairs.size(), 1)));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      KostkaEngine engine(r, n);
      for (size_t i = static_cast<size_t>(w); i < pairs.size();
           i += static_cast<size_t>(workers)) {
        polys[i] = engine.kostka(all[pairs[i].first], all[pairs[i].second]).poly;
      }
    });
  }
  for (auto& th : pool) th.join();

  std::vector<TableRow> rows;
  rows.reserve(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    rows.push_back(TableRow{all[pairs[i].first], all[pairs[i].second],
                            std::move(polys[i])});
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.mu < b.mu;
  });
  return rows;
}

}  // namespace ks
