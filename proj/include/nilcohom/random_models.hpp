#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilcohom/lie_model.hpp"
#include "nilcohom/symplectic.hpp"

namespace nilcohom {

/// Random nilpotent model: d(e^i) is a sparse combination of e^a ^ e^b
/// with b < i, resampled until the Jacobi identity holds. The filtration
/// makes nilpotency automatic; Jacobi is checked, not assumed.
inline LieAlgebraModel random_nilpotent_model(int n, std::mt19937& rng) {
  if (n < 2 || n > 6) throw ValidationError("random models are generated for dimension 2..6");
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> density(0, 3);
  for (int attempt = 0; attempt < 400; ++attempt) {
    // later attempts get sparser, so termination is near-certain
    const int keep_threshold = attempt < 200 ? 1 : 0;
    std::vector<Form> d1;
    for (int i = 1; i <= n; ++i) {
      Form f(2);
      for (int a = 1; a < i; ++a)
        for (int b = a + 1; b < i; ++b) {
          if (density(rng) > keep_threshold) continue;
          const int c = coef(rng);
          if (c) f.add_term({a, b}, Scalar(c));
        }
      d1.push_back(std::move(f));
    }
    LieAlgebraModel model(n, "random", std::move(d1));
    if (model.validate_jacobi().ok) return model;
  }
  // all-zero equations always satisfy Jacobi
  return LieAlgebraModel(n, "random", std::vector<Form>(n, Form(2)));
}

/// Random d-closed nondegenerate 2-form, sampled from the kernel of d on
/// degree 2; nullopt when no nondegenerate combination shows up.
inline std::optional<SymplecticForm> random_symplectic_form(const LieAlgebraModel& model,
                                                            std::mt19937& rng) {
  const int n = model.dimension();
  if (n % 2 != 0) return std::nullopt;
  const Subspace closed = kernel(model.ce_differential(2).matrix());
  if (closed.dim() == 0) return std::nullopt;
  const auto basis2 = enumerate_basis(n, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::vector<Scalar> v(closed.ambient(), Scalar(0));
    for (int i = 0; i < closed.dim(); ++i) {
      const Scalar c(coef(rng));
      for (int j = 0; j < closed.ambient(); ++j) v[j] += c * closed.basis()(i, j);
    }
    Form omega(2);
    for (std::size_t j = 0; j < basis2.size(); ++j)
      if (!v[j].is_zero()) omega.add_term(basis2[j], v[j]);
    if (omega.is_zero()) continue;
    try {
      return SymplecticForm(model, omega);
    } catch (const ValidationError&) {
      continue;  // degenerate draw
    }
  }
  return std::nullopt;
}

}  // namespace nilcohom
