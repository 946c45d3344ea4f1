#include "ks/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "ks/pseudoroots.hpp"

namespace ks {

std::vector<int> Tableau::content(int max_entry) const {
  std::vector<int> c(static_cast<size_t>(max_entry), 0);
  for (const auto& row : rows) {
    for (int e : row) {
      if (e < 1 || e > max_entry) {
        throw std::invalid_argument("Tableau: entry out of range");
      }
      ++c[static_cast<size_t>(e - 1)];
    }
  }
  return c;
}

bool Tableau::is_semistandard() const {
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j + 1 < rows[i].size(); ++j) {
      if (rows[i][j] > rows[i][j + 1]) return false;
    }
    if (i > 0) {
      for (size_t j = 0; j < rows[i].size(); ++j) {
        if (j >= rows[i - 1].size() || rows[i - 1][j] >= rows[i][j]) return false;
      }
    }
  }
  return true;
}

namespace {

void check_partition(const std::vector<int>& v, const char* what) {
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j] < 0) throw std::invalid_argument(std::string(what) + ": negative entry");
    if (j > 0 && v[j - 1] < v[j]) {
      throw std::invalid_argument(std::string(what) + ": not weakly decreasing");
    }
  }
}

// Row-major backtracking fill. accept(row, col, entry) may also update an
// external budget; undo reverses it.
template <typename Accept, typename Undo, typename Emit>
void fill_ssyt(const std::vector<int>& shape, int max_entry, Accept accept,
               Undo undo, Emit emit) {
  std::vector<std::vector<int>> rows;
  for (int len : shape) {
    if (len > 0) rows.emplace_back(static_cast<size_t>(len), 0);
  }
  size_t nrows = rows.size();
  auto rec = [&](auto&& self, size_t i, size_t j) -> void {
    if (i == nrows) {
      emit(rows);
      return;
    }
    size_t ni = i, nj = j + 1;
    if (nj == rows[i].size()) {
      ni = i + 1;
      nj = 0;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);
    if (i > 0 && j < rows[i - 1].size()) lo = std::max(lo, rows[i - 1][j] + 1);
    for (int e = lo; e <= max_entry; ++e) {
      if (!accept(e)) continue;
      rows[i][j] = e;
      self(self, ni, nj);
      undo(e);
    }
  };
  if (nrows == 0) {
    emit(rows);
  } else {
    rec(rec, 0, 0);
  }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const std::vector<int>& shape,
                                    int max_entry) {
  check_partition(shape, "enumerate_ssyt shape");
  std::vector<Tableau> out;
  fill_ssyt(
      shape, max_entry, [](int) { return true; }, [](int) {},
      [&](const std::vector<std::vector<int>>& rows) {
        out.push_back(Tableau{shape, rows});
      });
  return out;
}

std::vector<Tableau> enumerate_ssyt_content(const std::vector<int>& shape,
                                            const std::vector<int>& content) {
  check_partition(shape, "enumerate_ssyt_content shape");
  std::vector<int> budget = content;
  std::vector<Tableau> out;
  fill_ssyt(
      shape, static_cast<int>(content.size()),
      [&](int e) {
        if (budget[static_cast<size_t>(e - 1)] == 0) return false;
        --budget[static_cast<size_t>(e - 1)];
        return true;
      },
      [&](int e) { ++budget[static_cast<size_t>(e - 1)]; },
      [&](const std::vector<std::vector<int>>& rows) {
        out.push_back(Tableau{shape, rows});
      });
  return out;
}

GradedLaurent schur_character(const std::vector<int>& lambda, bool inverted) {
  int n = static_cast<int>(lambda.size());
  if (n == 0) throw std::invalid_argument("schur_character: empty lambda");
  for (size_t j = 1; j < lambda.size(); ++j) {
    if (lambda[j - 1] < lambda[j]) {
      throw std::invalid_argument("schur_character: not weakly decreasing");
    }
  }
  int shift = std::max(0, -lambda.back());
  std::vector<int> shape = lambda;
  for (auto& e : shape) e += shift;

  GradedLaurent out(n, 0);
  fill_ssyt(
      shape, n, [](int) { return true; }, [](int) {},
      [&](const std::vector<std::vector<int>>& rows) {
        std::vector<int> exp(static_cast<size_t>(n), -shift);
        for (const auto& row : rows) {
          for (int e : row) ++exp[static_cast<size_t>(e - 1)];
        }
        if (inverted) {
          for (auto& e : exp) e = -e;
        }
        out.add_term(std::move(exp), {}, 1);
      });
  return out;
}

namespace {

// Embeds a one-component Laurent polynomial (N variables, no t) into the rN
// interleaved variables at component s (1-based), with tvars t-variables.
GradedLaurent embed_component(const GradedLaurent& comp, int r, int s,
                              int tvars) {
  int n = comp.xvars();
  GradedLaurent out(r * n, tvars);
  std::vector<int> tzero(static_cast<size_t>(tvars), 0);
  for (const auto& [k, c] : comp.terms()) {
    std::vector<int> x(static_cast<size_t>(r * n), 0);
    for (int j = 0; j < n; ++j) {
      x[static_cast<size_t>(r * j + s - 1)] = k.x[static_cast<size_t>(j)];
    }
    out.add_term(std::move(x), tzero, c);
  }
  return out;
}

}  // namespace

GradedLaurent chi(const Multipartition& mp, int tvars) {
  int r = mp.components();
  int n = mp.parts();
  GradedLaurent out = GradedLaurent::one(r * n, tvars);
  for (int s = 1; s <= r; ++s) {
    out = out * embed_component(schur_character(mp.row(s - 1), /*inverted=*/true),
                                r, s, tvars);
  }
  return out;
}

namespace {

// Charge of a standard word (letters 1..m, each once): the 1 gets index 0,
// and letter k+1 gets the index of k, plus one when k+1 sits to the left
// of k.
long long charge_standard(const std::vector<int>& word) {
  int m = static_cast<int>(word.size());
  std::vector<int> pos(static_cast<size_t>(m) + 1, -1);
  for (int i = 0; i < m; ++i) {
    int letter = word[static_cast<size_t>(i)];
    if (letter < 1 || letter > m || pos[static_cast<size_t>(letter)] != -1) {
      throw std::invalid_argument("charge: not a standard word");
    }
    pos[static_cast<size_t>(letter)] = i;
  }
  long long total = 0;
  long long index = 0;
  for (int k = 2; k <= m; ++k) {
    if (pos[static_cast<size_t>(k)] < pos[static_cast<size_t>(k - 1)]) ++index;
    total += index;
  }
  return total;
}

}  // namespace

long long charge(const std::vector<int>& word) {
  size_t n = word.size();
  std::vector<char> removed(n, 0);
  size_t remaining = n;
  long long total = 0;
  while (remaining > 0) {
    int m = 0;
    for (size_t i = 0; i < n; ++i) {
      if (!removed[i]) m = std::max(m, word[i]);
    }
    // Rightmost 1, then each next letter found scanning rightward with
    // cyclic wrap-around.
    int cur = -1;
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
      if (!removed[static_cast<size_t>(i)] && word[static_cast<size_t>(i)] == 1) {
        cur = i;
        break;
      }
    }
    if (cur < 0) {
      throw std::invalid_argument("charge: content is not a partition");
    }
    std::vector<int> selected{cur};
    for (int k = 2; k <= m; ++k) {
      int found = -1;
      for (size_t step = 1; step < n; ++step) {
        int idx = static_cast<int>((static_cast<size_t>(cur) + step) % n);
        if (!removed[static_cast<size_t>(idx)] &&
            word[static_cast<size_t>(idx)] == k) {
          found = idx;
          break;
        }
      }
      if (found < 0) {
        throw std::invalid_argument("charge: content is not a partition");
      }
      selected.push_back(found);
      cur = found;
    }
    std::sort(selected.begin(), selected.end());
    std::vector<int> sub;
    sub.reserve(selected.size());
    for (int idx : selected) {
      sub.push_back(word[static_cast<size_t>(idx)]);
      removed[static_cast<size_t>(idx)] = 1;
    }
    remaining -= selected.size();
    total += charge_standard(sub);
  }
  return total;
}

TPoly kostka_foulkes_charge(const std::vector<int>& lambda,
                            const std::vector<int>& mu) {
  check_partition(lambda, "kostka_foulkes_charge lambda");
  check_partition(mu, "kostka_foulkes_charge mu");
  long long total_l = std::accumulate(lambda.begin(), lambda.end(), 0LL);
  long long total_m = std::accumulate(mu.begin(), mu.end(), 0LL);
  if (total_l != total_m) {
    throw std::invalid_argument("kostka_foulkes_charge: |lambda| != |mu|");
  }
  TPoly out(1);
  for (const Tableau& t : enumerate_ssyt_content(lambda, mu)) {
    std::vector<int> word;
    for (const auto& row : t.rows) {
      for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
    }
    out.add_term(TPoly::Exp{static_cast<int>(charge(word))}, 1);
  }
  return out;
}

GradedLaurent demazure_pi(const GradedLaurent& f, int r, int component,
                          int i) {
  if (r < 1 || f.xvars() % r != 0) {
    throw std::invalid_argument("demazure_pi: xvars not divisible by r");
  }
  int n = f.xvars() / r;
  if (component < 1 || component > r || i < 1 || i >= n) {
    throw std::invalid_argument("demazure_pi: index out of range");
  }
  size_t a = static_cast<size_t>(r * (i - 1) + component - 1);
  size_t b = static_cast<size_t>(r * i + component - 1);
  GradedLaurent out(f.xvars(), f.tvars(), f.truncation());
  for (const auto& [k, c] : f.terms()) {
    int p = k.x[a];
    int q = k.x[b];
    // (x_a^{p+1} x_b^q - x_a^q x_b^{p+1}) / (x_a - x_b), telescoped.
    if (p >= q) {
      for (int e = q; e <= p; ++e) {
        std::vector<int> x(k.x);
        x[a] = e;
        x[b] = p + q - e;
        out.add_term(std::move(x), k.t, c);
      }
    } else if (q > p + 1) {
      for (int e = p + 1; e <= q - 1; ++e) {
        std::vector<int> x(k.x);
        x[a] = e;
        x[b] = p + q - e;
        out.add_term(std::move(x), k.t, -c);
      }
    }
  }
  return out;
}

GradedLaurent demazure_symmetrize_component(const GradedLaurent& f, int r,
                                            int component) {
  int n = f.xvars() / r;
  GradedLaurent out = f;
  // Staircase word s_1; s_2 s_1; ...; any reduced word of the longest
  // element yields the same operator.
  for (int j = 1; j < n; ++j) {
    for (int i = j; i >= 1; --i) {
      out = demazure_pi(out, r, component, i);
    }
  }
  return out;
}

namespace {

// Core pipeline shared by euler_characteristic and its self-tests. The
// symmetrizer composition is conjugated by global variable inversion; this
// is the orientation for which the degree-zero slice reproduces chi(mu).
GradedLaurent euler_pipeline(const Multipartition& mu, int max_degree) {
  int r = mu.components();
  int n = mu.parts();
  int rn = r * n;
  PseudorootSystem sys(r, n);
  GradedLaurent f = GradedLaurent::one(rn, r, max_degree);
  for (const Pseudoroot& root : sys.roots()) {
    std::vector<int> xw(static_cast<size_t>(rn), 0);
    xw[static_cast<size_t>(root.m - 1)] = -1;
    xw[static_cast<size_t>(root.n - 1)] = 1;
    f = f.geom_inverse_factor(xw, root.color);
  }
  std::vector<int> fiber = mu.interleave();
  for (auto& e : fiber) e = -e;
  f = f * GradedLaurent::monomial(std::move(fiber),
                                  std::vector<int>(static_cast<size_t>(r), 0),
                                  1, max_degree);
  f = f.inverted_x();
  for (int s = 1; s <= r; ++s) f = demazure_symmetrize_component(f, r, s);
  return f.inverted_x();
}

// Frozen orientation anchor: for r=1, N=2, mu=(1,1), D=2 the pipeline must
// expand as chi(1,1) + t*chi(2,0) + t^2*chi(3,-1).
void check_frozen_anchor() {
  Multipartition mu(std::vector<std::vector<int>>{{1, 1}});
  GradedLaurent got = euler_pipeline(mu, 2);
  GradedLaurent expected(2, 1, 2);
  expected += chi(mu, 1);
  expected += chi(Multipartition(std::vector<std::vector<int>>{{2, 0}}), 1)
                  .scaled_by(TPoly::single(1));
  expected += chi(Multipartition(std::vector<std::vector<int>>{{3, -1}}), 1)
                  .scaled_by(TPoly::single(2));
  if (got != expected) {
    throw std::logic_error(
        "euler_characteristic: frozen orientation anchor failed");
  }
}

}  // namespace

GradedLaurent euler_characteristic(const Multipartition& mu, int max_degree) {
  if (max_degree < 0) {
    throw std::invalid_argument("euler_characteristic: max_degree < 0");
  }
  static std::once_flag anchor_once;
  std::call_once(anchor_once, check_frozen_anchor);

  // Degree-zero slice must be the bare character of mu.
  GradedLaurent base = euler_pipeline(mu, 0);
  GradedLaurent expected_base = chi(mu, mu.components());
  expected_base.set_truncation(0);
  if (base != expected_base) {
    throw std::logic_error(
        "euler_characteristic: degree-zero self-test failed");
  }
  if (max_degree == 0) return base;
  return euler_pipeline(mu, max_degree);
}

std::map<Multipartition, TPoly> decompose_chi(const GradedLaurent& f, int r) {
  if (r < 1 || f.xvars() % r != 0) {
    throw std::invalid_argument("decompose_chi: xvars not divisible by r");
  }
  int n = f.xvars() / r;
  std::map<Multipartition, TPoly> out;
  GradedLaurent rem = f;
  size_t cap = rem.collect_by_xexp().size() + 1;
  for (size_t iter = 0; iter < cap; ++iter) {
    if (rem.is_zero()) return out;
    const std::vector<int>* minx = nullptr;
    for (const auto& [k, c] : rem.terms()) {
      if (minx == nullptr || k.x < *minx) minx = &k.x;
    }
    // The extreme monomial must be antidominant in every component: it is
    // the lowest weight -lambda of the leading character.
    std::vector<std::vector<int>> rows(static_cast<size_t>(r),
                                       std::vector<int>(static_cast<size_t>(n), 0));
    for (int s = 0; s < r; ++s) {
      for (int j = 0; j < n; ++j) {
        rows[static_cast<size_t>(s)][static_cast<size_t>(j)] =
            -(*minx)[static_cast<size_t>(r * j + s)];
      }
      for (int j = 1; j < n; ++j) {
        if (rows[static_cast<size_t>(s)][static_cast<size_t>(j - 1)] <
            rows[static_cast<size_t>(s)][static_cast<size_t>(j)]) {
          throw std::logic_error(
              "decompose_chi: extreme monomial is not antidominant");
        }
      }
    }
    TPoly coeff = rem.coeff_at_x(*minx);
    Multipartition lambda(rows);
    rem = rem - chi(lambda, f.tvars()).scaled_by(coeff);
    auto it = out.find(lambda);
    if (it == out.end()) {
      out.emplace(lambda, coeff);
    } else {
      it->second += coeff;
    }
  }
  if (!rem.is_zero()) {
    throw std::logic_error("decompose_chi: iteration cap exceeded");
  }
  return out;
}

CanonicalWeightReport canonical_weight_report(int r, int n) {
  PseudorootSystem sys(r, n);
  int rn = r * n;
  CanonicalWeightReport rep;
  rep.bundle_weight_sum.assign(static_cast<size_t>(rn), 0);
  rep.tangent_weight_sum.assign(static_cast<size_t>(rn), 0);
  rep.canonical_weight.assign(static_cast<size_t>(rn), 0);

  // The matrix unit at (m, n) carries weight e_m - e_n.
  for (const Pseudoroot& root : sys.roots()) {
    rep.bundle_weight_sum[static_cast<size_t>(root.m - 1)] += 1;
    rep.bundle_weight_sum[static_cast<size_t>(root.n - 1)] -= 1;
  }
  // Flag tangent weights per component: e_{(k,s)} - e_{(l,s)} for k > l.
  for (int s = 1; s <= r; ++s) {
    for (int k = 1; k <= n; ++k) {
      for (int l = 1; l < k; ++l) {
        rep.tangent_weight_sum[static_cast<size_t>(r * (k - 1) + s - 1)] += 1;
        rep.tangent_weight_sum[static_cast<size_t>(r * (l - 1) + s - 1)] -= 1;
      }
    }
  }
  for (int p = 0; p < rn; ++p) {
    rep.canonical_weight[static_cast<size_t>(p)] =
        -rep.bundle_weight_sum[static_cast<size_t>(p)] -
        rep.tangent_weight_sum[static_cast<size_t>(p)];
  }

  // Closed forms, checked positionwise. The bundle sum at component c,
  // row j is (N+1-2j) +1 for the first component and -1 for the last (the
  // two corrections coincide when r = 1); the tangent sum is 2j-N-1
  // everywhere; the canonical weight is +1 on the last component, -1 on
  // the first, 0 elsewhere, i.e. the exponent vector of
  // prod_k x_{rk} x_{r(k-1)+1}^{-1}.
  rep.bundle_closed_form_ok = true;
  rep.tangent_closed_form_ok = true;
  rep.canonical_closed_form_ok = true;
  for (int c = 1; c <= r; ++c) {
    for (int j = 1; j <= n; ++j) {
      size_t p = static_cast<size_t>(r * (j - 1) + c - 1);
      int w1 = (n + 1 - 2 * j) + (c == 1 ? 1 : 0) - (c == r ? 1 : 0);
      int w2 = 2 * j - n - 1;
      int w = (c == r ? 1 : 0) - (c == 1 ? 1 : 0);
      if (rep.bundle_weight_sum[p] != w1) rep.bundle_closed_form_ok = false;
      if (rep.tangent_weight_sum[p] != w2) rep.tangent_closed_form_ok = false;
      if (rep.canonical_weight[p] != w) rep.canonical_closed_form_ok = false;
    }
  }

  rep.sl_trivial = true;
  for (int c = 1; c <= r; ++c) {
    int v0 = rep.canonical_weight[static_cast<size_t>(c - 1)];
    for (int j = 1; j <= n; ++j) {
      if (rep.canonical_weight[static_cast<size_t>(r * (j - 1) + c - 1)] != v0) {
        rep.sl_trivial = false;
      }
    }
  }
  return rep;
}

}  // namespace ks
