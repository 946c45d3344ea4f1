#include "ks/tpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace ks {

void TPoly::check_same_vars(const TPoly& o) const {
  if (nvars_ != o.nvars_) {
    throw std::invalid_argument("TPoly: variable-count mismatch (" +
                                std::to_string(nvars_) + " vs " +
                                std::to_string(o.nvars_) + ")");
  }
}

void TPoly::add_term(Exp e, Int c) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw std::invalid_argument("TPoly: exponent length != variable count");
  }
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int TPoly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Int TPoly::constant_term() const {
  return coeff(Exp(static_cast<size_t>(nvars_), 0));
}

int TPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (d > deg) deg = d;
  }
  return deg;
}

bool TPoly::all_coeffs_nonnegative() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

TPoly TPoly::operator+(const TPoly& o) const {
  check_same_vars(o);
  TPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TPoly TPoly::operator-(const TPoly& o) const {
  check_same_vars(o);
  TPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

TPoly TPoly::operator-() const {
  TPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

TPoly TPoly::scaled(const Int& c) const {
  TPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
  check_same_vars(o);
  TPoly r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exp e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

TPoly TPoly::specialize_diagonal() const {
  TPoly r(1);
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    r.add_term(Exp{d}, c);
  }
  return r;
}

TPoly TPoly::truncated(int maxdeg) const {
  TPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) <= maxdeg) {
      r.terms_.emplace(e, c);
    }
  }
  return r;
}

}  // namespace ks
