#pragma once

#include <stdexcept>
#include <vector>

#include "nilcohom/errors.hpp"
#include "nilcohom/linalg.hpp"

namespace nilcohom {

/// Presentation of a quotient N/D inside an ambient coordinate space.
/// Representatives are the rows of N's echelon basis that stay independent
/// modulo D, taken in order, so the presentation is deterministic.
class QuotientPresentation {
 public:
  QuotientPresentation(Subspace numerator, Subspace denominator)
      : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (numerator_.ambient() != denominator_.ambient())
      throw std::invalid_argument("quotient: ambient mismatch");
    if (!numerator_.contains(denominator_))
      throw std::invalid_argument("quotient: denominator not contained in numerator");
    Subspace span = denominator_;
    for (int i = 0; i < numerator_.basis().rows(); ++i) {
      const auto v = numerator_.basis().row(i);
      if (span.contains(v)) continue;
      reps_.push_back(v);
      span = sum(span, Subspace::span_rows(Matrix::from_rows({v}, span.ambient()), span.ambient()));
    }
  }

  int ambient() const { return numerator_.ambient(); }
  int dim() const { return static_cast<int>(reps_.size()); }
  const Subspace& numerator() const { return numerator_; }
  const Subspace& denominator() const { return denominator_; }
  const std::vector<std::vector<Scalar>>& representatives() const { return reps_; }

  /// Class coordinates of an ambient vector (must lie in the numerator):
  /// solve v = sum c_i rep_i + (element of D).
  std::vector<Scalar> coordinates(const std::vector<Scalar>& v) const {
    if (!numerator_.contains(v))
      throw std::invalid_argument("quotient: vector outside the numerator");
    const int n = ambient();
    Matrix cols(n, dim() + denominator_.dim());
    for (int j = 0; j < dim(); ++j)
      for (int i = 0; i < n; ++i) cols(i, j) = reps_[j][i];
    for (int j = 0; j < denominator_.dim(); ++j)
      for (int i = 0; i < n; ++i) cols(i, dim() + j) = denominator_.basis()(j, i);
    const auto x = solve(cols, v);
    if (!x) throw std::logic_error("quotient: coordinates solve failed");
    return std::vector<Scalar>(x->begin(), x->begin() + dim());
  }

 private:
  Subspace numerator_;
  Subspace denominator_;
  std::vector<std::vector<Scalar>> reps_;
};

/// Matrix of the map on quotients induced by the ambient operator
/// `ambient_op` (dst coordinates x src coordinates). Well-definedness is
/// checked: the operator must carry numerator into numerator and
/// denominator into denominator.
inline Matrix induced_on_quotients(const Matrix& ambient_op, const QuotientPresentation& src,
                                   const QuotientPresentation& dst) {
  if (ambient_op.cols() != src.ambient() || ambient_op.rows() != dst.ambient())
    throw std::invalid_argument("induced_on_quotients: shape mismatch");
  for (int i = 0; i < src.denominator().basis().rows(); ++i) {
    const auto w = ambient_op.apply(src.denominator().basis().row(i));
    if (!dst.denominator().contains(w))
      throw TheoremTrap("induced map not well defined: denominator escapes");
  }
  Matrix out(dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    const auto w = ambient_op.apply(src.representatives()[j]);
    if (!dst.numerator().contains(w))
      throw TheoremTrap("induced map not well defined: numerator escapes");
    const auto coords = dst.coordinates(w);
    for (int i = 0; i < dst.dim(); ++i) out(i, j) = coords[i];
  }
  return out;
}

}  // namespace nilcohom
