#include "ks/suites.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "ks/characters.hpp"
#include "ks/io.hpp"
#include "ks/kostka.hpp"
#include "ks/pseudoroots.hpp"

namespace ks {

SuiteResult charge_suite(int max_size) {
  SuiteResult res;
  for (int size = 1; size <= max_size; ++size) {
    int n = size;
    KostkaEngine engine(1, n);
    std::vector<std::vector<int>> parts = partitions_with_max_parts(size, n);
    for (const auto& lam : parts) {
      for (const auto& mu : parts) {
        Multipartition ml(std::vector<std::vector<int>>{lam});
        Multipartition mm(std::vector<std::vector<int>>{mu});
        if (!ml.dominates(mm)) continue;
        TPoly via_weyl = engine.kostka_single(ml, mm);
        TPoly via_charge = kostka_foulkes_charge(lam, mu);
        ++res.checks;
        if (via_weyl != via_charge) {
          res.fail("size " + std::to_string(size) + " lambda=" + ml.to_text() +
                   " mu=" + mm.to_text() + ": weyl=" +
                   tpoly_to_canonical(via_weyl) + " charge=" +
                   tpoly_to_canonical(via_charge));
        }
      }
    }
  }
  return res;
}

SuiteResult weight_identity_suite(int max_rn) {
  SuiteResult res;
  for (int r = 1; r <= max_rn; ++r) {
    for (int n = 1; n <= max_rn; ++n) {
      CanonicalWeightReport rep = canonical_weight_report(r, n);
      ++res.checks;
      if (!rep.bundle_closed_form_ok) {
        res.fail("r=" + std::to_string(r) + " N=" + std::to_string(n) +
                 ": bundle weight sum differs from closed form");
      }
      if (!rep.tangent_closed_form_ok) {
        res.fail("r=" + std::to_string(r) + " N=" + std::to_string(n) +
                 ": tangent weight sum differs from closed form");
      }
      if (!rep.canonical_closed_form_ok) {
        res.fail("r=" + std::to_string(r) + " N=" + std::to_string(n) +
                 ": canonical weight differs from closed form");
      }
      if (!rep.sl_trivial) {
        res.fail("r=" + std::to_string(r) + " N=" + std::to_string(n) +
                 ": canonical weight not SL-trivial");
      }
    }
  }
  return res;
}

SuiteResult series_equivalence_suite(
    const std::vector<std::pair<int, int>>& shapes, int box_bound,
    int max_degree) {
  SuiteResult res;
  for (auto [r, n] : shapes) {
    PseudorootSystem sys(r, n);
    PartitionFunction pf(sys);
    std::vector<int> box(static_cast<size_t>(sys.dim()), box_bound);
    std::map<AlphaVec, TPoly> oracle =
        partition_function_series_oracle(sys, box, max_degree);
    // Walk the whole box; alphas missing from the oracle must truncate to 0.
    AlphaVec alpha(static_cast<size_t>(sys.dim()), 0);
    bool done = false;
    while (!done) {
      TPoly dp = pf.colored(alpha).truncated(max_degree);
      auto it = oracle.find(alpha);
      TPoly expected =
          it == oracle.end() ? TPoly::zero(sys.r()) : it->second;
      ++res.checks;
      if (dp != expected) {
        std::ostringstream os;
        os << "r=" << r << " N=" << n << " alpha=";
        for (int a : alpha) os << a << ' ';
        os << ": dp=" << tpoly_to_canonical(dp)
           << " series=" << tpoly_to_canonical(expected);
        res.fail(os.str());
      }
      // Odometer over the box.
      done = true;
      for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < box_bound) {
          ++alpha[i];
          for (size_t j = 0; j < i; ++j) alpha[j] = 0;
          done = false;
          break;
        }
      }
      if (alpha.empty()) done = true;  // rN-1 = 0: single empty alpha
    }
  }
  return res;
}

namespace {

// Candidate lambdas whose truncated Kostka polynomial could be nonzero:
// mu plus a sum of at most max_degree pseudoroots, kept when the result is
// a valid multipartition.
std::vector<Multipartition> nearby_candidates(const Multipartition& mu,
                                              int max_degree) {
  int r = mu.components();
  int n = mu.parts();
  PseudorootSystem sys(r, n);
  std::vector<int> base = mu.interleave();
  std::vector<Multipartition> out;
  std::vector<std::vector<int>> seen;
  auto emit = [&](const std::vector<int>& v) {
    for (const auto& s : seen) {
      if (s == v) return;
    }
    seen.push_back(v);
    std::vector<std::vector<int>> rows(static_cast<size_t>(r),
                                       std::vector<int>(static_cast<size_t>(n)));
    for (int s = 0; s < r; ++s) {
      for (int j = 0; j < n; ++j) {
        rows[static_cast<size_t>(s)][static_cast<size_t>(j)] =
            v[static_cast<size_t>(r * j + s)];
      }
      for (int j = 1; j < n; ++j) {
        if (rows[static_cast<size_t>(s)][static_cast<size_t>(j - 1)] <
            rows[static_cast<size_t>(s)][static_cast<size_t>(j)]) {
          return;  // not weakly decreasing; not a multipartition
        }
      }
    }
    out.emplace_back(rows);
  };
  // Multisets of roots of size <= max_degree, explored with nondecreasing
  // root index.
  auto rec = [&](auto&& self, size_t k, int left, std::vector<int>& v) -> void {
    emit(v);
    if (left == 0) return;
    for (size_t i = k; i < sys.roots().size(); ++i) {
      const Pseudoroot& root = sys.roots()[i];
      // Adding root alpha_{mn} to the difference vector shifts the
      // interleaved entries by e_m - e_n on the lambda side.
      v[static_cast<size_t>(root.m - 1)] += 1;
      v[static_cast<size_t>(root.n - 1)] -= 1;
      self(self, i, left - 1, v);
      v[static_cast<size_t>(root.m - 1)] -= 1;
      v[static_cast<size_t>(root.n - 1)] += 1;
    }
  };
  std::vector<int> v = base;
  rec(rec, 0, max_degree, v);
  return out;
}

}  // namespace

SuiteResult euler_decomposition_suite(const Multipartition& mu,
                                      int max_degree) {
  SuiteResult res;
  int r = mu.components();
  GradedLaurent euler = euler_characteristic(mu, max_degree);
  std::map<Multipartition, TPoly> decomposition = decompose_chi(euler, r);

  KostkaEngine engine(r, mu.parts());
  for (const auto& [lambda, coeff] : decomposition) {
    TPoly expected = engine.kostka(lambda, mu).poly.truncated(max_degree);
    ++res.checks;
    if (coeff != expected) {
      res.fail("mu=" + mu.to_text() + " lambda=" + lambda.to_text() +
               ": decomposition=" + tpoly_to_canonical(coeff) +
               " kostka=" + tpoly_to_canonical(expected));
    }
  }
  for (const Multipartition& lambda : nearby_candidates(mu, max_degree)) {
    if (decomposition.count(lambda)) continue;
    TPoly expected = engine.kostka(lambda, mu).poly.truncated(max_degree);
    ++res.checks;
    if (!expected.is_zero()) {
      res.fail("mu=" + mu.to_text() + " lambda=" + lambda.to_text() +
               ": missing from decomposition but kostka=" +
               tpoly_to_canonical(expected));
    }
  }
  return res;
}

TableScanResult table_scan_suite(int max_r, long long max_size, int threads) {
  TableScanResult out;
  std::mutex mtx;
  for (int r = 1; r <= max_r; ++r) {
    for (long long size = 0; size <= max_size; ++size) {
      int n = static_cast<int>(std::max<long long>(size, 1));
      std::vector<Multipartition> all = enumerate_multipartitions(r, n, size);
      std::vector<std::pair<size_t, size_t>> pairs;
      for (size_t a = 0; a < all.size(); ++a) {
        for (size_t b = 0; b < all.size(); ++b) pairs.emplace_back(a, b);
      }
      int workers = static_cast<int>(std::min<size_t>(
          static_cast<size_t>(std::max(threads, 1)), std::max<size_t>(pairs.size(), 1)));
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
          KostkaEngine engine(r, n);
          for (size_t i = static_cast<size_t>(w); i < pairs.size();
               i += static_cast<size_t>(workers)) {
            const Multipartition& lambda = all[pairs[i].first];
            const Multipartition& mu = all[pairs[i].second];
            TPoly poly = engine.kostka(lambda, mu).poly;
            TPoly single = engine.kostka_single(lambda, mu);
            bool dominant = lambda.dominates(mu);
            bool comparable = dominant || mu.dominates(lambda);

            std::lock_guard<std::mutex> lock(mtx);
            ++out.pairs_checked;
            if (!poly.is_zero() && !dominant) {
              out.triangularity_ok = false;
              if (!comparable) ++out.nonzero_noncomparable;
              if (out.detail.size() < 2000) {
                out.detail += "nonzero off dominance: lambda=" +
                              lambda.to_text() + " mu=" + mu.to_text() + " K=" +
                              tpoly_to_canonical(poly) + "\n";
              }
            }
            Int c0 = poly.constant_term();
            if ((lambda == mu && c0 != 1) || (lambda != mu && c0 != 0)) {
              out.constant_term_ok = false;
              if (out.detail.size() < 2000) {
                out.detail += "t=0 value wrong: lambda=" + lambda.to_text() +
                              " mu=" + mu.to_text() + "\n";
              }
            }
            if (lambda == mu && poly != TPoly::one(r)) {
              out.constant_term_ok = false;
              if (out.detail.size() < 2000) {
                out.detail += "K(lambda,lambda) != 1 at " + lambda.to_text() + "\n";
              }
            }
            if (!poly.all_coeffs_nonnegative()) {
              out.positivity_ok = false;
              if (out.detail.size() < 2000) {
                out.detail += "negative coefficient: lambda=" +
                              lambda.to_text() + " mu=" + mu.to_text() + " K=" +
                              tpoly_to_canonical(poly) + "\n";
              }
            }
            if (poly.specialize_diagonal() != single) {
              out.specialization_ok = false;
              if (out.detail.size() < 2000) {
                out.detail += "diagonal specialization mismatch: lambda=" +
                              lambda.to_text() + " mu=" + mu.to_text() + "\n";
              }
            }
          }
        });
      }
      for (auto& th : pool) th.join();
    }
  }
  return out;
}

SuiteResult words_suite(unsigned long long seed, int random_count, int max_std,
                        int max_dims) {
  SuiteResult res;
  auto check_blocks = [&](const FlagType& ft, const std::string& label) {
    int d = ft.total_dim();
    std::vector<WordBlock> blocks = build_word_sequence(ft);
    for (const WordBlock& b : blocks) {
      ++res.checks;
      if (b.hi < b.lo) {
        if (!b.word.empty()) res.fail(label + ": empty interval with word");
        continue;
      }
      long long want =
          static_cast<long long>(b.arc_size) * (b.arc_size + 1) / 2;
      if (static_cast<long long>(b.word.size()) != want) {
        res.fail(label + " block " + std::to_string(b.n) +
                 ": word length != k(k+1)/2");
      }
      if (!is_reduced(d, b.word)) {
        res.fail(label + " block " + std::to_string(b.n) + ": not reduced");
      }
      AffinePermutation prod = word_product(d, b.word);
      if (!prod.compose(prod).is_identity()) {
        res.fail(label + " block " + std::to_string(b.n) +
                 ": longest element is not an involution");
      }
    }
  };

  // Standard flag types (d >= 2).
  for (int r = 1; r <= max_std; ++r) {
    for (int n = 1; n <= max_std; ++n) {
      if (r * n < 2) continue;
      check_blocks(standard_flag_type(r, n),
                   "standard r=" + std::to_string(r) + " N=" + std::to_string(n));
    }
  }

  // Seeded random flag types: rejection-sample valid ones with d <= 8,
  // ell <= 6 whose blocks all stay finite-parabolic.
  std::mt19937_64 rng(seed);
  int accepted = 0;
  int attempts = 0;
  while (accepted < random_count && attempts < 100000) {
    ++attempts;
    int r = static_cast<int>(rng() % 4) + 1;
    int ell = static_cast<int>(rng() % 6) + 1;
    FlagType ft;
    ft.r = r;
    ft.dims.assign(static_cast<size_t>(r), 0);
    for (int k = 0; k < ell; ++k) {
      int vertex = static_cast<int>(rng() % static_cast<unsigned>(r)) + 1;
      int jump = static_cast<int>(rng() % 3) + 1;
      ft.i_seq.push_back(vertex);
      ft.a_seq.push_back(jump);
      ft.dims[static_cast<size_t>(vertex - 1)] += jump;
    }
    int d = ft.total_dim();
    if (d < 2 || d > 8) continue;
    try {
      check_blocks(ft, "random #" + std::to_string(accepted));
      ++accepted;
    } catch (const std::invalid_argument&) {
      continue;  // arc covered all residues; resample
    }
  }
  if (accepted < random_count) {
    res.fail("could not sample enough valid random flag types");
  }

  for (int r = 1; r <= max_dims; ++r) {
    for (int n = 1; n <= max_dims; ++n) {
      DimsReport rep = dims_check(r, n);
      ++res.checks;
      if (!rep.counts_match) {
        res.fail("dims_check mismatch at r=" + std::to_string(r) +
                 " N=" + std::to_string(n));
      }
    }
  }
  return res;
}

}  // namespace ks
