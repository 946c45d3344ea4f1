#include "ks/laurent.hpp"

#include <numeric>
#include <stdexcept>

namespace ks {

GradedLaurent GradedLaurent::one(int xvars, int tvars,
                                 std::optional<int> truncation) {
  GradedLaurent f(xvars, tvars, truncation);
  f.add_term(std::vector<int>(static_cast<size_t>(xvars), 0),
             std::vector<int>(static_cast<size_t>(tvars), 0), 1);
  return f;
}

GradedLaurent GradedLaurent::monomial(std::vector<int> xexp,
                                      std::vector<int> texp, Int c,
                                      std::optional<int> truncation) {
  GradedLaurent f(static_cast<int>(xexp.size()), static_cast<int>(texp.size()),
                  truncation);
  f.add_term(std::move(xexp), std::move(texp), std::move(c));
  return f;
}

GradedLaurent GradedLaurent::x_monomial(std::vector<int> xexp,
                                        std::optional<int> truncation) {
  size_t n = xexp.size();
  GradedLaurent f(static_cast<int>(n), 0, truncation);
  f.add_term(std::move(xexp), {}, 1);
  return f;
}

bool GradedLaurent::above_truncation(const std::vector<int>& texp) const {
  if (!trunc_) return false;
  return std::accumulate(texp.begin(), texp.end(), 0) > *trunc_;
}

void GradedLaurent::set_truncation(std::optional<int> d) {
  trunc_ = d;
  if (!trunc_) return;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (above_truncation(it->first.t)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

void GradedLaurent::add_term(std::vector<int> xexp, std::vector<int> texp,
                             Int c) {
  if (static_cast<int>(xexp.size()) != xvars_ ||
      static_cast<int>(texp.size()) != tvars_) {
    throw std::invalid_argument("GradedLaurent: exponent length mismatch");
  }
  if (c == 0 || above_truncation(texp)) return;
  Key k{std::move(texp), std::move(xexp)};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedLaurent::check_compatible(const GradedLaurent& o) const {
  if (xvars_ != o.xvars_ || tvars_ != o.tvars_) {
    throw std::invalid_argument("GradedLaurent: variable-count mismatch");
  }
}

std::optional<int> GradedLaurent::combined_trunc(std::optional<int> a,
                                                 std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

GradedLaurent GradedLaurent::operator+(const GradedLaurent& o) const {
  check_compatible(o);
  GradedLaurent r(xvars_, tvars_, combined_trunc(trunc_, o.trunc_));
  for (const auto& [k, c] : terms_) r.add_term(k.x, k.t, c);
  for (const auto& [k, c] : o.terms_) r.add_term(k.x, k.t, c);
  return r;
}

GradedLaurent& GradedLaurent::operator+=(const GradedLaurent& o) {
  check_compatible(o);
  trunc_ = combined_trunc(trunc_, o.trunc_);
  for (const auto& [k, c] : o.terms_) add_term(k.x, k.t, c);
  return *this;
}

GradedLaurent GradedLaurent::operator-(const GradedLaurent& o) const {
  check_compatible(o);
  GradedLaurent r(xvars_, tvars_, combined_trunc(trunc_, o.trunc_));
  for (const auto& [k, c] : terms_) r.add_term(k.x, k.t, c);
  for (const auto& [k, c] : o.terms_) r.add_term(k.x, k.t, -c);
  return r;
}

GradedLaurent GradedLaurent::operator*(const GradedLaurent& o) const {
  check_compatible(o);
  GradedLaurent r(xvars_, tvars_, combined_trunc(trunc_, o.trunc_));
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      std::vector<int> t(ka.t);
      for (size_t i = 0; i < t.size(); ++i) t[i] += kb.t[i];
      if (r.above_truncation(t)) continue;
      std::vector<int> x(ka.x);
      for (size_t i = 0; i < x.size(); ++i) x[i] += kb.x[i];
      r.add_term(std::move(x), std::move(t), ca * cb);
    }
  }
  return r;
}

GradedLaurent GradedLaurent::scaled_by(const TPoly& c) const {
  if (c.vars() != tvars_) {
    throw std::invalid_argument("GradedLaurent: coefficient variable mismatch");
  }
  GradedLaurent r(xvars_, tvars_, trunc_);
  for (const auto& [k, a] : terms_) {
    for (const auto& [e, b] : c.terms()) {
      std::vector<int> t(k.t);
      for (size_t i = 0; i < t.size(); ++i) t[i] += e[i];
      r.add_term(k.x, std::move(t), a * b);
    }
  }
  return r;
}

GradedLaurent GradedLaurent::geom_inverse_factor(const std::vector<int>& xw,
                                                 int color) const {
  if (!trunc_) {
    throw std::invalid_argument(
        "geom_inverse_factor: truncation required (series is infinite)");
  }
  if (color < 1 || color > tvars_) {
    throw std::invalid_argument("geom_inverse_factor: color out of range");
  }
  if (static_cast<int>(xw.size()) != xvars_) {
    throw std::invalid_argument("geom_inverse_factor: xw length mismatch");
  }
  GradedLaurent result = *this;
  GradedLaurent layer = *this;
  // layer_k = f * t_color^k x^{k*xw}; stop once truncation empties it.
  while (!layer.is_zero()) {
    GradedLaurent next(xvars_, tvars_, trunc_);
    for (const auto& [k, c] : layer.terms()) {
      std::vector<int> t(k.t);
      t[static_cast<size_t>(color - 1)] += 1;
      if (next.above_truncation(t)) continue;
      std::vector<int> x(k.x);
      for (size_t i = 0; i < x.size(); ++i) x[i] += xw[i];
      next.add_term(std::move(x), std::move(t), c);
    }
    if (next.is_zero()) break;
    result += next;
    layer = std::move(next);
  }
  return result;
}

GradedLaurent GradedLaurent::inverted_x() const {
  GradedLaurent r(xvars_, tvars_, trunc_);
  for (const auto& [k, c] : terms_) {
    std::vector<int> x(k.x);
    for (auto& e : x) e = -e;
    r.add_term(std::move(x), k.t, c);
  }
  return r;
}

GradedLaurent GradedLaurent::swapped_x(int a, int b) const {
  GradedLaurent r(xvars_, tvars_, trunc_);
  for (const auto& [k, c] : terms_) {
    std::vector<int> x(k.x);
    std::swap(x[static_cast<size_t>(a)], x[static_cast<size_t>(b)]);
    r.add_term(std::move(x), k.t, c);
  }
  return r;
}

std::map<std::vector<int>, TPoly> GradedLaurent::collect_by_xexp() const {
  std::map<std::vector<int>, TPoly> out;
  for (const auto& [k, c] : terms_) {
    auto it = out.find(k.x);
    if (it == out.end()) {
      it = out.emplace(k.x, TPoly(tvars_)).first;
    }
    it->second.add_term(k.t, c);
  }
  return out;
}

TPoly GradedLaurent::coeff_at_x(const std::vector<int>& xexp) const {
  TPoly p(tvars_);
  for (const auto& [k, c] : terms_) {
    if (k.x == xexp) p.add_term(k.t, c);
  }
  return p;
}

}  // namespace ks
