#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilcohom/errors.hpp"
#include "nilcohom/lie_model.hpp"

namespace nilcohom {

/// Symplectic form on a model: a d-closed nondegenerate real 2-form,
/// with its inverse (Poisson) bivector cached. The bivector coefficient
/// convention is pinned by the sl2 identity [Lambda, L] = (n/2 - k) Id,
/// not trusted: SymplecticComplex re-checks it on construction.
class SymplecticForm {
 public:
  SymplecticForm(const LieAlgebraModel& model, Form omega_form)
      : n_(model.dimension()), omega_(std::move(omega_form)) {
    if (omega_.degree() != 2) throw ValidationError("omega must be a 2-form");
    if (n_ % 2 != 0) throw ValidationError("symplectic form needs even dimension");
    for (const auto& [I, c] : omega_.terms())
      if (!c.is_real() || I.back() > n_)
        throw ValidationError("omega must be real with indices in range");
    if (!model.d(omega_).is_zero()) throw ValidationError("omega is not d-closed");
    W_ = Matrix(n_, n_);
    for (const auto& [I, c] : omega_.terms()) {
      W_(I[0] - 1, I[1] - 1) = c;
      W_(I[1] - 1, I[0] - 1) = -c;
    }
    // top power: nondegeneracy check and the Liouville volume
    Form top(0);
    top.add_term({}, Scalar(1));
    for (int i = 0; i < n_ / 2; ++i) top = wedge(omega_, top);
    if (top.is_zero()) throw ValidationError("omega^{n/2} = 0: omega is degenerate");
    Integer fact = 1;
    for (int i = 2; i <= n_ / 2; ++i) fact *= i;
    MultiIndex all;
    for (int i = 1; i <= n_; ++i) all.push_back(i);
    volume_coeff_ = top.coefficient(all) / Scalar(Rational(fact));
    pairing_ = inverse(W_);
    pi_ = Form(2);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        pi_.add_term({i + 1, j + 1}, pairing_(j, i));  // transpose of W^{-1}
  }

  int dimension() const { return n_; }
  const Form& omega() const { return omega_; }
  /// Inverse bivector (coefficients of omega^{-1}).
  const Form& pi() const { return pi_; }
  const Matrix& coefficient_matrix() const { return W_; }
  const Matrix& inverse_pairing() const { return pairing_; }
  /// Coefficient of the Liouville volume omega^{n/2} / (n/2)! on e_{1..n}.
  const Scalar& volume_coeff() const { return volume_coeff_; }

 private:
  int n_;
  Form omega_;
  Matrix W_;
  Matrix pairing_;
  Form pi_;
  Scalar volume_coeff_;
};

/// Symplectic Hodge star: the unique (n-k)-form with
/// alpha ^ star(beta) = (omega^{-1})^k(alpha, beta) * omega^n / n!  for
/// every k-form alpha, where the pairing on simple forms is the Gram
/// determinant of omega^{-1}.
inline Form star_symplectic(const SymplecticForm& w, const Form& a) {
  const int n = w.dimension();
  const int k = a.degree();
  const auto kbasis = enumerate_basis(n, k);
  Form out(n - k);
  for (const auto& I : kbasis) {
    Scalar pair(0);
    for (const auto& [J, c] : a.terms()) {
      // det of the omega^{-1} Gram block for (I, J)
      Matrix g(k, k);
      for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) g(r, s) = w.inverse_pairing()(I[r] - 1, J[s] - 1);
      pair += determinant(g) * c;
    }
    if (pair.is_zero()) continue;
    const MultiIndex Ic = complement(I, n);
    const auto merged = merge_indices(I, Ic);
    out.add_term(Ic, pair * w.volume_coeff() / Scalar(merged->first));
  }
  return out;
}

/// The graded complex of a symplectic model with the operators d, L,
/// Lambda, star and the Brylinski codifferential d^Lambda, all as
/// matrices per degree. Construction cross-checks every convention:
/// the sl2 identity, star^2 = id, the two d^Lambda constructions, and
/// the relations (d^Lambda)^2 = 0, d d^Lambda + d^Lambda d = 0.
class SymplecticComplex {
 public:
  SymplecticComplex(const LieAlgebraModel& model, const SymplecticForm& w)
      : n_(model.dimension()), name_(model.name()) {
    const int n = n_;
    dims_.resize(n + 1);
    d_.assign(n + 1, Matrix());
    L_.assign(n + 1, Matrix());
    lam_.assign(n + 1, Matrix());
    star_.assign(n + 1, Matrix());
    dlam_.assign(n + 1, Matrix());
    std::vector<std::vector<MultiIndex>> bases(n + 1);
    for (int k = 0; k <= n; ++k) {
      bases[k] = enumerate_basis(n, k);
      dims_[k] = static_cast<int>(bases[k].size());
    }
    auto mat_of = [&](int kin, int kout, auto&& fn) {
      Matrix m(kout < 0 || kout > n ? 0 : dims_[kout], dims_[kin]);
      if (kout < 0 || kout > n) return m;
      for (int j = 0; j < dims_[kin]; ++j) {
        const Form img = fn(Form::monomial(bases[kin][j]));
        for (const auto& [I, c] : img.terms()) m(basis_position(bases[kout], I), j) = c;
      }
      return m;
    };
    for (int k = 0; k <= n; ++k) {
      d_[k] = mat_of(k, k + 1, [&](const Form& f) { return model.d(f); });
      L_[k] = mat_of(k, k + 2, [&](const Form& f) { return wedge(w.omega(), f); });
      lam_[k] = mat_of(k, k - 2, [&](const Form& f) { return contract_bivector(w.pi(), f); });
      star_[k] = mat_of(k, n - k, [&](const Form& f) { return star_symplectic(w, f); });
    }
    const int half = n / 2;
    for (int k = 0; k <= n; ++k) {
      // sl2 normalization trap
      Matrix comm(dims_[k], dims_[k]);
      if (k + 2 <= n) comm = comm + lam_[k + 2] * L_[k];
      if (k - 2 >= 0) comm = comm - L_[k - 2] * lam_[k];
      if (!(comm == Scalar(half - k) * Matrix::identity(dims_[k])))
        throw TheoremTrap("sl2 identity [Lambda,L] = (n/2-k)Id fails in degree " +
                          std::to_string(k));
      if (!(star_[n - k] * star_[k] == Matrix::identity(dims_[k])))
        throw TheoremTrap("star^2 != id in degree " + std::to_string(k));
      // d^Lambda via the commutator ...
      Matrix a(k - 1 >= 0 ? dims_[k - 1] : 0, dims_[k]);
      if (k >= 2) a = a + d_[k - 2] * lam_[k];
      if (k >= 1 && k <= n - 1) a = a - lam_[k + 1] * d_[k];
      // ... and via (-1)^{k+1} star d star
      Matrix b(k - 1 >= 0 ? dims_[k - 1] : 0, dims_[k]);
      if (k >= 1) {
        b = Scalar(k % 2 == 0 ? -1 : 1) * (star_[n - k + 1] * d_[n - k] * star_[k]);
      }
      if (!(a == b))
        throw TheoremTrap("d^Lambda conventions disagree in degree " + std::to_string(k));
      dlam_[k] = std::move(a);
    }
    for (int k = 0; k <= n; ++k) {
      if (k >= 2 && !(dlam_[k - 1] * dlam_[k]).is_zero())
        throw TheoremTrap("(d^Lambda)^2 != 0 in degree " + std::to_string(k));
      Matrix anti(dims_[k], dims_[k]);
      if (k >= 1) anti = anti + d_[k - 1] * dlam_[k];
      if (k <= n - 1) anti = anti + dlam_[k + 1] * d_[k];
      if (!anti.is_zero())
        throw TheoremTrap("d d^Lambda + d^Lambda d != 0 in degree " + std::to_string(k));
    }
  }

  int dimension() const { return n_; }
  int half_dim() const { return n_ / 2; }
  const std::string& name() const { return name_; }
  int dim(int k) const { return k < 0 || k > n_ ? 0 : dims_[k]; }

  /// d: A^k -> A^{k+1}; empty-shaped outside [0, n].
  const Matrix& d(int k) const { return at(d_, k); }
  /// d^Lambda: A^k -> A^{k-1}.
  const Matrix& d_lambda(int k) const { return at(dlam_, k); }
  /// Lefschetz L = omega ^ - : A^k -> A^{k+2}.
  const Matrix& lefschetz(int k) const { return at(L_, k); }
  /// Lambda: A^k -> A^{k-2}.
  const Matrix& lambda(int k) const { return at(lam_, k); }
  /// Symplectic star: A^k -> A^{n-k}.
  const Matrix& star(int k) const { return at(star_, k); }

 private:
  const Matrix& at(const std::vector<Matrix>& v, int k) const {
    static const Matrix empty;
    if (k < 0 || k > n_) return empty;
    return v[k];
  }

  int n_;
  std::string name_;
  std::vector<int> dims_;
  std::vector<Matrix> d_, dlam_, L_, lam_, star_;
};

/// Compatible triple (omega, J, g): validates J-invariance and positivity
/// and produces the Riemannian Gram matrix g = omega(., J..) on the
/// generators.
struct CompatibleTriple {
  SymplecticForm omega;
  Matrix J;
  Matrix gram;

  CompatibleTriple(const SymplecticForm& w, const Matrix& j) : omega(w), J(j) {
    const int n = w.dimension();
    if (j.rows() != n || j.cols() != n) throw IncompatiblePair("J dimension mismatch");
    const Matrix& W = w.coefficient_matrix();
    if (!(j.transpose() * W * j == W))
      throw IncompatiblePair("omega is not J-invariant");
    gram = W * j;
    if (!(gram == gram.transpose()))
      throw IncompatiblePair("g = omega(.,J..) is not symmetric");
    // positive definiteness over the rationals: leading principal minors
    for (int k = 1; k <= n; ++k) {
      Matrix minor(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) minor(r, c) = gram(r, c);
      const Scalar det = determinant(minor);
      if (!(det.is_real() && det.re > 0))
        throw IncompatiblePair("g is not positive definite (leading minor " +
                               std::to_string(k) + " is not positive)");
    }
  }
};

}  // namespace nilcohom
