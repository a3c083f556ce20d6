#include <random>

#include <catch_amalgamated.hpp>

#include "nilcohom/random_models.hpp"
#include "nilcohom/symplectic_cohom.hpp"

using namespace nilcohom;

TEST_CASE("random nilpotent models satisfy Jacobi and Poincare duality") {
  std::mt19937 rng(314159);
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const LieAlgebraModel m = random_nilpotent_model(n, rng);
    CHECK(m.validate_jacobi().ok);
    const auto b = m.betti_numbers();
    CHECK(b[0] == 1);
    for (int k = 0; k <= n; ++k) CHECK(b[k] == b[n - k]);  // nilpotent => unimodular
  }
}

TEST_CASE("symplectic theorems hold across a random sweep") {
  std::mt19937 rng(2718);
  int symplectic_hits = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 4 + 2 * static_cast<int>(rng() % 2);  // 4 or 6
    const LieAlgebraModel m = random_nilpotent_model(n, rng);
    const auto w = random_symplectic_form(m, rng);
    if (!w) continue;
    ++symplectic_hits;
    const SymplecticComplex sc(m, *w);  // construction traps check sl2, star^2, d^Lambda
    CHECK(delta_tilde(sc, 1) == 0);
    for (int k = 0; k <= n; ++k) {
      const int dt = delta_tilde(sc, k);
      CHECK(dt >= 0);
      CHECK(dt == delta_tilde(sc, n - k));
      CHECK(delta_sympl(sc, k) == 2 * dt);
    }
    CHECK(ledger_ok(verify_tseng_yau_square(sc)));
    CHECK(ledger_ok(verify_tseng_yau_maps(sc)));
    if (n == 4) {
      const bool via_maps = hlc_check(sc).holds;
      const bool via_degree = delta_tilde(sc, 2) == 0;
      CHECK(via_maps == via_degree);
      CHECK(ledger_ok(verify_dim4_bounds(sc)));
    }
  }
  CHECK(symplectic_hits >= 10);  // the sweep must actually exercise the theorems
}
