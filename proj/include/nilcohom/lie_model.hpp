#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "nilcohom/errors.hpp"
#include "nilcohom/form.hpp"
#include "nilcohom/operator.hpp"

namespace nilcohom {

/// Finite geometric model: an n-dimensional Lie algebra given through the
/// values of d on the degree-1 generators (structure equations). d extends
/// to all degrees as a graded derivation; d^2 = 0 is the Jacobi identity.
class LieAlgebraModel {
 public:
  LieAlgebraModel(int n, std::string name, std::vector<Form> d1)
      : n_(n), name_(std::move(name)), d1_(std::move(d1)) {
    if (n_ <= 0) throw ValidationError("model dimension must be positive");
    if (static_cast<int>(d1_.size()) != n_)
      throw ValidationError("model '" + name_ + "': d must list all " + std::to_string(n_) +
                            " generators");
    for (const auto& f : d1_) {
      if (f.degree() != 2) throw ValidationError("structure equation is not a 2-form");
      for (const auto& [I, c] : f.terms()) {
        if (I.back() > n_) throw ValidationError("structure equation index out of range");
        if (!c.is_real()) throw ValidationError("structure constants must be real");
      }
    }
  }

  int dimension() const { return n_; }
  const std::string& name() const { return name_; }
  const Form& d_generator(int i) const { return d1_.at(i - 1); }

  /// Derivation extension of the structure equations.
  Form d(const Form& a) const {
    Form out(a.degree() + 1);
    if (a.degree() >= n_) return out;
    for (const auto& [I, c] : a.terms()) {
      for (std::size_t pos = 0; pos < I.size(); ++pos) {
        const Form& dgen = d1_[I[pos] - 1];
        if (dgen.is_zero()) continue;
        MultiIndex rest;
        for (std::size_t t = 0; t < I.size(); ++t)
          if (t != pos) rest.push_back(I[t]);
        const Scalar sign(pos % 2 == 0 ? 1 : -1);
        out = out + wedge(sign * c * dgen, Form::monomial(rest));
      }
    }
    return out;
  }

  /// Checks d∘d = 0 in every degree; on failure names the first generator
  /// and monomial where the extension fails to square to zero.
  Verdict validate_jacobi() const {
    for (int i = 1; i <= n_; ++i) {
      const Form dd = d(d1_[i - 1]);
      if (!dd.is_zero()) {
        std::ostringstream os;
        os << "d^2(e^" << i << ") = " << dd << " != 0 (Jacobi identity fails)";
        return {false, os.str()};
      }
    }
    // derivation property makes degree-1 vanishing sufficient, but the
    // higher degrees are cheap and this is a trap, not a proof
    for (int k = 2; k < n_; ++k) {
      for (const auto& I : enumerate_basis(n_, k)) {
        const Form dd = d(d(Form::monomial(I)));
        if (!dd.is_zero()) {
          std::ostringstream os;
          os << "d^2 fails on degree-" << k << " monomial: " << dd;
          return {false, os.str()};
        }
      }
    }
    return {true, ""};
  }

  std::string basis_tag(int k) const {
    return "L^" + std::to_string(k) + "(" + name_ + ")";
  }

  /// Matrix of d: Λ^k -> Λ^{k+1} in the global monomial order.
  LinearOperator ce_differential(int k) const {
    const auto dom = enumerate_basis(n_, k);
    const auto cod = enumerate_basis(n_, k + 1);
    Matrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (std::size_t j = 0; j < dom.size(); ++j) {
      const Form img = d(Form::monomial(dom[j]));
      for (const auto& [I, c] : img.terms()) {
        const int r = basis_position(cod, I);
        m(r, static_cast<int>(j)) = c;
      }
    }
    return LinearOperator(basis_tag(k), basis_tag(k + 1), std::move(m));
  }

  std::vector<int> betti_numbers() const {
    std::vector<int> b(n_ + 1);
    std::vector<int> rk(n_ + 1, 0);
    for (int k = 0; k < n_; ++k) rk[k] = rank(ce_differential(k).matrix());
    for (int k = 0; k <= n_; ++k) {
      const int dim = static_cast<int>(enumerate_basis(n_, k).size());
      b[k] = dim - rk[k] - (k > 0 ? rk[k - 1] : 0);
    }
    return b;
  }

 private:
  int n_;
  std::string name_;
  std::vector<Form> d1_;
};

}  // namespace nilcohom
