#pragma once

#include <map>
#include <ostream>
#include <stdexcept>

#include "nilcohom/multiindex.hpp"
#include "nilcohom/scalar.hpp"

namespace nilcohom {

/// Exterior form of a fixed degree: finite map from monomials to nonzero
/// coefficients. Zero coefficients are never stored.
class Form {
 public:
  Form() = default;
  explicit Form(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("Form: negative degree");
  }

  static Form monomial(MultiIndex I, Scalar c = Scalar(1)) {
    Form f(static_cast<int>(I.size()));
    f.add_term(std::move(I), std::move(c));
    return f;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }

  void add_term(MultiIndex I, Scalar c) {
    if (static_cast<int>(I.size()) != degree_)
      throw std::invalid_argument("Form: monomial length does not match degree");
    if (c.is_zero()) return;
    const auto it = terms_.find(I);
    if (it == terms_.end()) {
      terms_.emplace(std::move(I), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coefficient(const MultiIndex& I) const {
    const auto it = terms_.find(I);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  friend Form operator+(const Form& a, const Form& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("Form: degree mismatch in +");
    Form out = a;
    for (const auto& [I, c] : b.terms_) out.accumulate(I, c);
    return out;
  }
  friend Form operator-(const Form& a, const Form& b) { return a + (Scalar(-1) * b); }
  friend Form operator*(const Scalar& c, const Form& f) {
    Form out(f.degree_);
    if (c.is_zero()) return out;
    for (const auto& [I, v] : f.terms_) out.terms_.emplace(I, c * v);
    return out;
  }

  Form conj() const {
    Form out(degree_);
    for (const auto& [I, c] : terms_) out.terms_.emplace(I, c.conj());
    return out;
  }

  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Form& f) {
    if (f.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [I, c] : f.terms_) {
      if (!first) os << " + ";
      first = false;
      os << c << "*e{";
      for (std::size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i];
      os << "}";
    }
    return os;
  }

 private:
  void accumulate(const MultiIndex& I, const Scalar& c) {
    auto it = terms_.find(I);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(I, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  int degree_ = 0;
  std::map<MultiIndex, Scalar> terms_;
};

/// Graded-commutative wedge product; monomial signs come from sorting the
/// concatenated index tuples, overlapping monomial pairs drop out.
inline Form wedge(const Form& a, const Form& b) {
  Form out(a.degree() + b.degree());
  for (const auto& [I, ca] : a.terms()) {
    for (const auto& [J, cb] : b.terms()) {
      const auto merged = merge_indices(I, J);
      if (!merged) continue;
      out.add_term(merged->second, Scalar(merged->first) * ca * cb);
    }
  }
  return out;
}

/// Contraction of a against the bivector pi = sum_{i<j} pi^{ij} e_i ^ e_j:
/// each term acts as pi^{ij} * iota_{e_j} iota_{e_i}. Forms of degree < 2
/// contract to zero.
inline Form contract_bivector(const Form& pi, const Form& a) {
  if (pi.degree() != 2) throw std::invalid_argument("contract_bivector: pi must have degree 2");
  if (a.degree() < 2) return Form(a.degree() >= 2 ? a.degree() - 2 : 0);
  Form out(a.degree() - 2);
  for (const auto& [IJ, c] : pi.terms()) {
    const int i = IJ[0], j = IJ[1];
    for (const auto& [M, cm] : a.terms()) {
      const auto r1 = remove_index(M, i);
      if (!r1) continue;
      const auto r2 = remove_index(r1->second, j);
      if (!r2) continue;
      out.add_term(r2->second, Scalar(r1->first * r2->first) * c * cm);
    }
  }
  return out;
}

}  // namespace nilcohom
