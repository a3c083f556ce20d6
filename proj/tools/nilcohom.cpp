// Command-line front end: model analysis and the self-test suite.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilcohom/random_models.hpp"
#include "nilcohom/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitTrap = 3;

int run_analyze(const std::string& model_arg, bool want_complex, bool want_symplectic,
                const std::string& format, int window, unsigned seed) {
  const nilcohom::ModelFile mf = nilcohom::resolve_model(model_arg);
  if (!want_complex && !want_symplectic) {
    want_complex = mf.J.has_value();
    want_symplectic = mf.omega.has_value();
  }
  const nilcohom::AnalysisResult r =
      nilcohom::analyze(mf, want_complex, want_symplectic, window, seed);
  if (format == "json")
    std::cout << nilcohom::render_json(r).dump(2) << "\n";
  else
    std::cout << nilcohom::render_text(r);
  bool all_pass = true;
  auto scan = [&](const nilcohom::Ledger& l) { all_pass = all_pass && nilcohom::ledger_ok(l); };
  if (r.complex_part) {
    scan(r.complex_part->dualities);
    scan(r.complex_part->bounds);
    scan(r.complex_part->hodge_kernels);
    scan(r.complex_part->star_check);
    if (r.complex_part->surface) scan(*r.complex_part->surface);
  }
  if (r.symplectic_part) {
    scan(r.symplectic_part->tseng_yau);
    scan(r.symplectic_part->tseng_yau_maps);
    if (r.symplectic_part->harmonic_square) scan(*r.symplectic_part->harmonic_square);
    scan(r.symplectic_part->bounds);
    if (r.symplectic_part->dim4_bounds) scan(*r.symplectic_part->dim4_bounds);
    scan(r.symplectic_part->strip);
    scan(r.symplectic_part->hodge_kernels);
  }
  if (!all_pass) throw nilcohom::TheoremTrap("analysis ledger reported a failing check");
  return kExitOk;
}

const std::vector<std::string> kBundled = {"torus2", "torus4", "torus6", "kt",
                                           "g34",    "g41",    "iwasawa"};

void selftest_one(const nilcohom::ModelFile& mf, unsigned seed) {
  nilcohom::analyze(mf, mf.J.has_value(), mf.omega.has_value(), 1, seed);
}

int run_selftest(unsigned seed) {
  nilcohom::ModelFile current;
  try {
    for (const auto& name : kBundled) {
      current = nilcohom::resolve_model(name);
      std::cout << "selftest " << name << "..." << std::flush;
      selftest_one(current, seed);
      std::cout << " ok\n";
    }
    std::mt19937 rng(seed);
    int symplectic_hits = 0;
    for (int trial = 0; trial < 120; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const nilcohom::LieAlgebraModel model = nilcohom::random_nilpotent_model(n, rng);
      current = nilcohom::ModelFile{};
      current.name = "random-" + std::to_string(trial);
      current.dimension = n;
      for (int i = 1; i <= n; ++i) current.d.push_back(model.d_generator(i));
      if (!model.validate_jacobi().ok) throw nilcohom::TheoremTrap("random model fails Jacobi");
      model.betti_numbers();  // exercises rank paths
      if (n % 2 == 0) {
        const auto omega = nilcohom::random_symplectic_form(model, rng);
        if (omega) {
          current.omega = omega->omega();
          const nilcohom::SymplecticComplex sc(model, *omega);
          for (int k = 0; k <= n; ++k) nilcohom::delta_sympl(sc, k);
          if (nilcohom::delta_tilde(sc, 1) != 0)
            throw nilcohom::TheoremTrap("dTilde^1 != 0 on a random symplectic model");
          if (!nilcohom::ledger_ok(nilcohom::verify_tseng_yau_square(sc)))
            throw nilcohom::TheoremTrap("duality square fails on a random symplectic model");
          ++symplectic_hits;
        }
      }
    }
    std::cout << "selftest random models: 120 generated, " << symplectic_hits
              << " with symplectic structure, all traps quiet\n";
    if (symplectic_hits < 50)
      throw nilcohom::TheoremTrap("random sweep produced too few symplectic models");
  } catch (const nilcohom::TheoremTrap&) {
    std::ofstream out("selftest_failure.json");
    out << nilcohom::serialize_model(current).dump(2) << "\n";
    std::cerr << "offending model written to selftest_failure.json\n";
    throw;
  }
  std::cout << "selftest: all checks passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology tables and theorem checks for Lie-algebra models"};
  app.require_subcommand(1);

  std::string model_arg, format = "text";
  bool want_complex = false, want_symplectic = false;
  int window = 1;
  unsigned seed = 1;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze a model file or bundled model");
  analyze->add_option("model", model_arg, "model name or path")->required();
  analyze->add_flag("--complex", want_complex, "complex (bigraded) analysis");
  analyze->add_flag("--symplectic", want_symplectic, "symplectic analysis");
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--window", window, "strip q-window half-width")->check(CLI::Range(1, 6));
  analyze->add_option("--seed", seed, "seed for randomized inner products");

  CLI::App* selftest = app.add_subcommand("selftest", "run the full invariant suite");
  selftest->add_option("--seed", seed, "seed for the random model sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInput : kExitOk;
  }

  try {
    if (analyze->parsed())
      return run_analyze(model_arg, want_complex, want_symplectic, format, window, seed);
    return run_selftest(seed);
  } catch (const nilcohom::TheoremTrap& e) {
    std::cerr << "theorem trap: " << e.what() << "\n";
    return kExitTrap;
  } catch (const nilcohom::ValidationError& e) {  // ParseError included
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitTrap;
  }
}
