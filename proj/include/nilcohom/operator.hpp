#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "nilcohom/linalg.hpp"

namespace nilcohom {

struct DescriptorMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// Matrix bound to named domain/codomain bases. Composition and addition
/// require descriptor equality; this catches basis-order mixups at the
/// point of use instead of as wrong ranks later.
class LinearOperator {
 public:
  LinearOperator() = default;
  LinearOperator(std::string domain, std::string codomain, Matrix m)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), m_(std::move(m)) {}

  const std::string& domain() const { return domain_; }
  const std::string& codomain() const { return codomain_; }
  const Matrix& matrix() const { return m_; }
  int domain_dim() const { return m_.cols(); }
  int codomain_dim() const { return m_.rows(); }

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const { return m_.apply(x); }

  /// this ∘ other.
  LinearOperator compose(const LinearOperator& other) const {
    if (other.codomain_ != domain_)
      throw DescriptorMismatch("compose: " + other.codomain_ + " != " + domain_);
    return LinearOperator(other.domain_, codomain_, m_ * other.m_);
  }

  friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
    if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_)
      throw DescriptorMismatch("operator+: descriptor mismatch");
    return LinearOperator(a.domain_, a.codomain_, a.m_ + b.m_);
  }

 private:
  std::string domain_;
  std::string codomain_;
  Matrix m_;
};

}  // namespace nilcohom
