#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nilcohom/hodge.hpp"
#include "nilcohom/invariants.hpp"
#include "nilcohom/model_io.hpp"
#include "nilcohom/symplectic_cohom.hpp"

namespace nilcohom {

struct ComplexAnalysis {
  InvariantReport report;
  Ledger dualities;
  Ledger bounds;
  Ledger hodge_kernels;        // orthonormal metric
  Ledger star_check;
  std::map<PQ, int> star_square_sign;  // observed sign of the antilinear star squared
  std::optional<Ledger> surface;       // dim 4 with surface flag
};

struct SymplecticAnalysis {
  std::vector<int> betti;
  SymplecticTable d_lambda, bott_chern, aeppli;
  std::vector<int> delta_tilde;
  HlcVerdict hlc;
  Ledger tseng_yau;
  Ledger tseng_yau_maps;
  std::optional<Ledger> harmonic_square;  // needs a unit Darboux omega
  Ledger bounds;
  std::optional<Ledger> dim4_bounds;
  Ledger strip;
  Ledger hodge_kernels;
};

struct AnalysisResult {
  ModelFile file;
  std::vector<int> betti;
  std::optional<ComplexAnalysis> complex_part;
  std::optional<SymplecticAnalysis> symplectic_part;
};

inline ComplexAnalysis analyze_complex(const ModelFile& mf) {
  if (!mf.J) throw ValidationError("model '" + mf.name + "' has no J block");
  const LieAlgebraModel model = mf.model();
  const AlmostComplexStructure acs(*mf.J);
  const BigradedModel bm(model, acs);
  const DoubleComplex& dc = bm.complex();
  ComplexAnalysis out;
  out.report = invariant_report(dc);
  out.dualities = verify_dualities(dc, bm.half_dim());
  out.bounds = verify_bounds_thm21(dc);
  out.hodge_kernels = verify_complex_hodge(dc, orthonormal_pq(dc));
  out.star_check = antilinear_star_check(bm);
  const int m = bm.half_dim();
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q <= m; ++q) {
      if (dc.dim(p, q) == 0) continue;
      const Matrix twice = antilinear_star(bm, m - p, m - q) * antilinear_star(bm, p, q).conj();
      if (twice == Matrix::identity(dc.dim(p, q)))
        out.star_square_sign[{p, q}] = 1;
      else if (twice == Scalar(-1) * Matrix::identity(dc.dim(p, q)))
        out.star_square_sign[{p, q}] = -1;
      else
        out.star_square_sign[{p, q}] = 0;  // not a scalar: recorded, not asserted
    }
  if (mf.flags.surface && m == 2) out.surface = verify_surface_dichotomy(dc);
  return out;
}

inline SymplecticAnalysis analyze_symplectic(const ModelFile& mf, int window, unsigned seed) {
  if (!mf.omega) throw ValidationError("model '" + mf.name + "' has no omega block");
  const LieAlgebraModel model = mf.model();
  const SymplecticForm w(model, *mf.omega);
  const SymplecticComplex sc(model, w);
  SymplecticAnalysis out;
  out.betti.resize(sc.dimension() + 1);
  for (int k = 0; k <= sc.dimension(); ++k)
    out.betti[k] = sympl_de_rham_presentation(sc, k).dim();
  out.d_lambda = d_lambda_cohomology(sc);
  out.bott_chern = sympl_bott_chern(sc);
  out.aeppli = sympl_aeppli(sc);
  for (int k = 0; k <= sc.dimension(); ++k) out.delta_tilde.push_back(delta_tilde(sc, k));
  out.hlc = hlc_check(sc);
  out.tseng_yau = verify_tseng_yau_square(sc);
  out.tseng_yau_maps = verify_tseng_yau_maps(sc);
  try {
    out.harmonic_square = verify_tseng_yau_harmonic(sc, w);
  } catch (const ValidationError&) {
    // omega not in unit Darboux form: the square is only checked at the
    // dimension level for such models
  }
  out.bounds = verify_bounds_thm62(sc);
  if (sc.dimension() == 4) out.dim4_bounds = verify_dim4_bounds(sc);
  const StripComplexSpec strip = strip_complex(sc, -window, window);
  out.strip = verify_strip_bridge(sc, strip, 0);
  out.hodge_kernels = verify_symplectic_hodge(sc, seeded_gram_k(sc, seed));
  return out;
}

inline AnalysisResult analyze(const ModelFile& mf, bool want_complex, bool want_symplectic,
                              int window, unsigned seed) {
  AnalysisResult r;
  r.file = mf;
  r.betti = mf.model().betti_numbers();
  if (want_complex) r.complex_part = analyze_complex(mf);
  if (want_symplectic) r.symplectic_part = analyze_symplectic(mf, window, seed);
  return r;
}

// ---- text rendering -------------------------------------------------

inline std::string render_diamond(const CohomologyTable& t, int m, const std::string& title) {
  std::ostringstream os;
  os << title << "\n";
  const int cell = 4;
  for (int k = 0; k <= 2 * m; ++k) {
    os << std::string(static_cast<std::size_t>(cell / 2 * (2 * m - std::min(k, 2 * m - k))), ' ');
    bool first = true;
    for (int p = std::min(k, m); p >= std::max(0, k - m); --p) {
      if (!first) os << std::setw(cell);
      else os << std::setw(1);
      os << t.at(p, k - p);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

inline std::string render_vector(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

inline std::string render_ledger(const Ledger& l, const std::string& title) {
  std::ostringstream os;
  int failed = 0;
  for (const auto& e : l)
    if (!e.pass) ++failed;
  os << title << ": " << (l.size() - failed) << "/" << l.size() << " checks pass\n";
  for (const auto& e : l)
    if (!e.pass) os << "  FAIL " << e.name << " (" << e.details << ")\n";
  return os.str();
}

inline std::string render_text(const AnalysisResult& r) {
  std::ostringstream os;
  os << "model: " << r.file.name << " (dim " << r.file.dimension << ")\n";
  os << "b = " << render_vector(r.betti) << "\n";
  if (r.complex_part) {
    const auto& c = *r.complex_part;
    const int m = r.file.dimension / 2;
    os << "\n" << render_diamond(c.report.bott_chern, m, "Bott-Chern diamond");
    os << "\n" << render_diamond(c.report.aeppli, m, "Aeppli diamond");
    os << "\n" << render_diamond(c.report.dolbeault, m, "Dolbeault diamond");
    os << "\nDelta = " << render_vector(c.report.delta) << "\n";
    os << "del-delbar-lemma: " << (c.report.ddbar.holds ? "true" : "false") << "\n";
    os << render_ledger(c.dualities, "dualities");
    os << render_ledger(c.bounds, "degree bounds");
    os << render_ledger(c.hodge_kernels, "Laplacian kernels");
    os << render_ledger(c.star_check, "antilinear star");
    if (c.surface) os << render_ledger(*c.surface, "surface dichotomy");
  }
  if (r.symplectic_part) {
    const auto& s = *r.symplectic_part;
    const int n = r.file.dimension;
    os << "\nk:        ";
    for (int k = 0; k <= n; ++k) os << std::setw(4) << k;
    os << "\nb_k:      ";
    for (int k = 0; k <= n; ++k) os << std::setw(4) << s.betti[k];
    os << "\nh_dL:     ";
    for (int k = 0; k <= n; ++k) os << std::setw(4) << s.d_lambda.at(k);
    os << "\nh_d+dL:   ";
    for (int k = 0; k <= n; ++k) os << std::setw(4) << s.bott_chern.at(k);
    os << "\nh_ddL:    ";
    for (int k = 0; k <= n; ++k) os << std::setw(4) << s.aeppli.at(k);
    os << "\ndTilde:   ";
    for (int k = 0; k <= n; ++k) os << std::setw(4) << s.delta_tilde[k];
    os << "\n";
    os << "HLC: " << (s.hlc.holds ? "true" : "false")
       << ", dTilde = " << render_vector(s.delta_tilde) << "\n";
    os << "dTilde^2 = " << s.delta_tilde[std::min<std::size_t>(2, s.delta_tilde.size() - 1)]
       << "\n";
    os << render_ledger(s.tseng_yau, "duality square");
    os << render_ledger(s.tseng_yau_maps, "Lefschetz isomorphisms");
    if (s.harmonic_square) os << render_ledger(*s.harmonic_square, "harmonic square");
    os << render_ledger(s.bounds, "parity bounds");
    if (s.dim4_bounds) os << render_ledger(*s.dim4_bounds, "dim-4 bounds");
    os << render_ledger(s.strip, "strip bridge");
    os << render_ledger(s.hodge_kernels, "Laplacian kernels");
  }
  return os.str();
}

// ---- json rendering -------------------------------------------------

inline json table_to_json(const CohomologyTable& t) {
  json out = json::object();
  if (!t.bigraded.empty()) {
    for (const auto& [pq, v] : t.bigraded)
      out[std::to_string(pq.first) + "," + std::to_string(pq.second)] = v;
  } else {
    for (const auto& [k, v] : t.graded) out[std::to_string(k)] = v;
  }
  return out;
}

inline json ledger_to_json(const Ledger& l) {
  json out = json::array();
  for (const auto& e : l)
    out.push_back({{"name", e.name}, {"pass", e.pass}, {"details", e.details}});
  return out;
}

inline json render_json(const AnalysisResult& r) {
  json root;
  root["model"] = r.file.name;
  root["dimension"] = r.file.dimension;
  root["betti"] = r.betti;
  if (r.complex_part) {
    const auto& c = *r.complex_part;
    json cx;
    cx["bott_chern"] = table_to_json(c.report.bott_chern);
    cx["aeppli"] = table_to_json(c.report.aeppli);
    cx["dolbeault"] = table_to_json(c.report.dolbeault);
    cx["conj_dolbeault"] = table_to_json(c.report.conj_dolbeault);
    cx["de_rham"] = table_to_json(c.report.de_rham);
    cx["delta"] = c.report.delta;
    cx["ddbar_lemma"] = c.report.ddbar.holds;
    cx["dualities"] = ledger_to_json(c.dualities);
    cx["bounds"] = ledger_to_json(c.bounds);
    cx["laplacian_kernels"] = ledger_to_json(c.hodge_kernels);
    cx["antilinear_star"] = ledger_to_json(c.star_check);
    json signs = json::object();
    for (const auto& [pq, s] : c.star_square_sign)
      signs[std::to_string(pq.first) + "," + std::to_string(pq.second)] = s;
    cx["star_square_sign"] = std::move(signs);
    if (c.surface) cx["surface_dichotomy"] = ledger_to_json(*c.surface);
    root["complex"] = std::move(cx);
  }
  if (r.symplectic_part) {
    const auto& s = *r.symplectic_part;
    json sy;
    sy["betti"] = s.betti;
    sy["h_d_lambda"] = s.d_lambda.dims;
    sy["h_d_plus_d_lambda"] = s.bott_chern.dims;
    sy["h_dd_lambda"] = s.aeppli.dims;
    sy["delta_tilde"] = s.delta_tilde;
    sy["hlc"] = s.hlc.holds;
    json maps = json::array();
    for (const auto& m : s.hlc.maps)
      maps.push_back({{"k", m.k},
                      {"domain", m.domain_dim},
                      {"codomain", m.codomain_dim},
                      {"rank", m.rank},
                      {"bijective", m.bijective}});
    sy["lefschetz_maps"] = std::move(maps);
    sy["duality_square"] = ledger_to_json(s.tseng_yau);
    sy["canonical_isomorphisms"] = ledger_to_json(s.tseng_yau_maps);
    if (s.harmonic_square) sy["harmonic_square"] = ledger_to_json(*s.harmonic_square);
    sy["parity_bounds"] = ledger_to_json(s.bounds);
    if (s.dim4_bounds) sy["dim4_bounds"] = ledger_to_json(*s.dim4_bounds);
    sy["strip_bridge"] = ledger_to_json(s.strip);
    sy["laplacian_kernels"] = ledger_to_json(s.hodge_kernels);
    root["symplectic"] = std::move(sy);
  }
  return root;
}

}  // namespace nilcohom
