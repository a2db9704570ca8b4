#pragma once

#include <map>
#include <string>

#include "matfp/rational.hpp"

namespace matfp {

// Sparse linear combination with exact rational coefficients.  Zero terms
// are dropped eagerly so equality is structural.
template <typename Key>
class FormalSum {
 public:
  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(key, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void scale(const Rational& factor) {
    if (factor == 0) {
      terms_.clear();
      return;
    }
    for (auto& [key, coeff] : terms_) coeff *= factor;
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.terms_ == b.terms_;
  }

  // Keys rendered by the supplied callable, terms joined with " + ".
  template <typename Render>
  std::string render(Render&& render_key) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, coeff] : terms_) {
      if (!out.empty()) out += " + ";
      out += render_rational(coeff) + "*" + render_key(key);
    }
    return out;
  }

 private:
  std::map<Key, Rational> terms_;
};

}  // namespace matfp
