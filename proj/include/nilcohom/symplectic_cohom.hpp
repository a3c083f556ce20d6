#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "nilcohom/double_complex.hpp"
#include "nilcohom/quotient.hpp"
#include "nilcohom/symplectic.hpp"

namespace nilcohom {

enum class SymplFlavor { DeRham, DLambda, DPlusDLambda, DDLambda };

struct SymplecticTable {
  SymplFlavor flavor = SymplFlavor::DeRham;
  std::vector<int> dims;  // index k = 0..2n

  int at(int k) const {
    return (k < 0 || k >= static_cast<int>(dims.size())) ? 0 : dims[k];
  }
};

struct LedgerEntry {
  std::string name;
  bool pass = false;
  std::string details;
};
using Ledger = std::vector<LedgerEntry>;

inline bool ledger_ok(const Ledger& l) {
  for (const auto& e : l)
    if (!e.pass) return false;
  return true;
}

// ---- presentations --------------------------------------------------

inline QuotientPresentation d_lambda_presentation(const SymplecticComplex& sc, int k) {
  const Matrix out = k >= 1 ? sc.d_lambda(k) : Matrix(0, sc.dim(k));
  const Matrix in = k + 1 <= sc.dimension() ? sc.d_lambda(k + 1) : Matrix(sc.dim(k), 0);
  return {kernel(out), image(in)};
}

/// d d^Lambda as an endomorphism of A^k.
inline Matrix dd_lambda(const SymplecticComplex& sc, int k) {
  if (k < 1 || k > sc.dimension() - 1) return Matrix(sc.dim(k), sc.dim(k));
  return sc.d(k - 1) * sc.d_lambda(k);
}

/// Ker(d + d^Lambda) ∩ A^k: on homogeneous forms the mixed-degree operator
/// splits, so the numerator is ker d ∩ ker d^Lambda.
inline QuotientPresentation sympl_bott_chern_presentation(const SymplecticComplex& sc, int k) {
  const int n = sc.dimension();
  const Matrix dk = k <= n - 1 ? sc.d(k) : Matrix(0, sc.dim(k));
  const Matrix dlk = k >= 1 ? sc.d_lambda(k) : Matrix(0, sc.dim(k));
  const Subspace num = intersect(kernel(dk), kernel(dlk));
  const Subspace den = image(dd_lambda(sc, k));
  if (!num.contains(den)) throw TheoremTrap("sympl BC: im dd^Lambda escapes the kernel");
  return {num, den};
}

inline QuotientPresentation sympl_aeppli_presentation(const SymplecticComplex& sc, int k) {
  const int n = sc.dimension();
  const Subspace num = kernel(dd_lambda(sc, k));
  Subspace den(sc.dim(k));
  if (k >= 1) den = sum(den, image(sc.d(k - 1)));
  if (k <= n - 1) den = sum(den, image(sc.d_lambda(k + 1)));
  if (!num.contains(den)) throw TheoremTrap("sympl A: image sum escapes ker dd^Lambda");
  return {num, den};
}

inline QuotientPresentation sympl_de_rham_presentation(const SymplecticComplex& sc, int k) {
  const int n = sc.dimension();
  const Matrix out = k <= n - 1 ? sc.d(k) : Matrix(0, sc.dim(k));
  const Matrix in = k >= 1 ? sc.d(k - 1) : Matrix(sc.dim(k), 0);
  return {kernel(out), image(in)};
}

// ---- tables ---------------------------------------------------------

inline SymplecticTable sympl_table(const SymplecticComplex& sc, SymplFlavor f) {
  SymplecticTable t;
  t.flavor = f;
  const int n = sc.dimension();
  t.dims.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    int h = 0;
    switch (f) {
      case SymplFlavor::DeRham: h = sympl_de_rham_presentation(sc, k).dim(); break;
      case SymplFlavor::DLambda: h = d_lambda_presentation(sc, k).dim(); break;
      case SymplFlavor::DPlusDLambda: h = sympl_bott_chern_presentation(sc, k).dim(); break;
      case SymplFlavor::DDLambda: h = sympl_aeppli_presentation(sc, k).dim(); break;
    }
    t.dims[k] = h;
  }
  return t;
}

inline SymplecticTable d_lambda_cohomology(const SymplecticComplex& sc) {
  return sympl_table(sc, SymplFlavor::DLambda);
}
inline SymplecticTable sympl_bott_chern(const SymplecticComplex& sc) {
  return sympl_table(sc, SymplFlavor::DPlusDLambda);
}
inline SymplecticTable sympl_aeppli(const SymplecticComplex& sc) {
  return sympl_table(sc, SymplFlavor::DDLambda);
}
inline SymplecticTable sympl_de_rham(const SymplecticComplex& sc) {
  return sympl_table(sc, SymplFlavor::DeRham);
}

// ---- hard Lefschetz -------------------------------------------------

struct HlcVerdict {
  bool holds = true;
  struct MapInfo {
    int k;            // L^k : H^{n-k} -> H^{n+k}
    int domain_dim;
    int codomain_dim;
    int rank;
    bool bijective;
  };
  std::vector<MapInfo> maps;
};

/// Decides HLC through explicit induced-map matrices of L^k on de Rham
/// presentations, so failures come with an explicit non-bijective map
/// rather than a dimension mismatch.
inline HlcVerdict hlc_check(const SymplecticComplex& sc) {
  const int half = sc.half_dim();
  HlcVerdict v;
  for (int k = 0; k <= half; ++k) {
    Matrix pow = Matrix::identity(sc.dim(half - k));
    for (int step = 0; step < k; ++step) pow = sc.lefschetz(half - k + 2 * step) * pow;
    const auto src = sympl_de_rham_presentation(sc, half - k);
    const auto dst = sympl_de_rham_presentation(sc, half + k);
    const Matrix ind = induced_on_quotients(pow, src, dst);
    const int r = rank(ind);
    const bool bij = (r == src.dim() && r == dst.dim());
    v.maps.push_back({k, src.dim(), dst.dim(), r, bij});
    if (!bij) v.holds = false;
  }
  return v;
}

// ---- non-HLC degrees ------------------------------------------------

/// tilde-Delta^k = h^k_{d+dLambda} - b_k. Asserts the identities that are
/// theorems for every symplectic model: non-negativity, tilde-Delta^0 = 0
/// and the duality tilde-Delta^k = tilde-Delta^{2n-k}.
inline int delta_tilde(const SymplecticComplex& sc, int k) {
  const int n = sc.dimension();
  if (k < 0 || k > n) return 0;
  const int h = sympl_bott_chern_presentation(sc, k).dim();
  const int b = sympl_de_rham_presentation(sc, k).dim();
  const int dt = h - b;
  if (dt < 0) throw TheoremTrap("tilde-Delta^" + std::to_string(k) + " < 0");
  if (k == 0 && dt != 0) throw TheoremTrap("tilde-Delta^0 != 0");
  const int hm = sympl_bott_chern_presentation(sc, n - k).dim();
  const int bm = sympl_de_rham_presentation(sc, n - k).dim();
  if (dt != hm - bm) throw TheoremTrap("tilde-Delta duality k <-> 2n-k fails");
  return dt;
}

/// Delta^k = h^k_{d+dLambda} + h^k_{ddLambda} - 2 b_k; always 2*tilde-Delta^k.
inline int delta_sympl(const SymplecticComplex& sc, int k) {
  const int n = sc.dimension();
  if (k < 0 || k > n) return 0;
  const int h1 = sympl_bott_chern_presentation(sc, k).dim();
  const int h2 = sympl_aeppli_presentation(sc, k).dim();
  const int b = sympl_de_rham_presentation(sc, k).dim();
  const int d = h1 + h2 - 2 * b;
  if (d != 2 * delta_tilde(sc, k))
    throw TheoremTrap("Delta^k != 2 tilde-Delta^k in degree " + std::to_string(k));
  return d;
}

// ---- theorem ledgers ------------------------------------------------

inline LedgerEntry check_equal(std::string name, int lhs, int rhs) {
  std::ostringstream os;
  os << lhs << " vs " << rhs;
  return {std::move(name), lhs == rhs, os.str()};
}

inline LedgerEntry check_leq(std::string name, long lhs, long rhs) {
  std::ostringstream os;
  os << lhs << " <= " << rhs;
  return {std::move(name), lhs <= rhs, os.str()};
}

/// h^k_{d+dL} = h^{2n-k}_{d+dL} = h^k_{ddL} = h^{2n-k}_{ddL} for all k;
/// unconditional on every symplectic model, HLC or not.
inline Ledger verify_tseng_yau_square(const SymplecticComplex& sc) {
  Ledger out;
  const int n = sc.dimension();
  const SymplecticTable bc = sympl_bott_chern(sc);
  const SymplecticTable a = sympl_aeppli(sc);
  for (int k = 0; k <= n; ++k) {
    out.push_back(check_equal("h^" + std::to_string(k) + "_{d+dL} = h^{2n-k}_{d+dL}",
                              bc.at(k), bc.at(n - k)));
    out.push_back(check_equal("h^" + std::to_string(k) + "_{d+dL} = h^k_{ddL}",
                              bc.at(k), a.at(k)));
    out.push_back(check_equal("h^" + std::to_string(k) + "_{ddL} = h^{2n-k}_{ddL}",
                              a.at(k), a.at(n - k)));
  }
  return out;
}

/// Lefschetz isomorphisms on the d+dL cohomology itself: L^{n-k}
/// carries H^k_{d+dL} onto H^{2n-k}_{d+dL} on every symplectic model,
/// hard Lefschetz or not. (The star half of the canonical square lives
/// at the harmonic level; see the hodge module.)
inline Ledger verify_tseng_yau_maps(const SymplecticComplex& sc) {
  Ledger out;
  const int n = sc.dimension();
  for (int k = 0; 2 * k <= n; ++k) {
    const auto bc_k = sympl_bott_chern_presentation(sc, k);
    Matrix pow = Matrix::identity(sc.dim(k));
    for (int step = 0; step < (n - 2 * k) / 2; ++step) pow = sc.lefschetz(k + 2 * step) * pow;
    const auto bc_mirror = sympl_bott_chern_presentation(sc, n - k);
    const Matrix l_ind = induced_on_quotients(pow, bc_k, bc_mirror);
    const int rl = rank(l_ind);
    out.push_back({"L^{n-k}: H^" + std::to_string(k) + "_{d+dL} ~ H^{2n-k}_{d+dL}",
                   rl == bc_k.dim() && rl == bc_mirror.dim(),
                   std::to_string(bc_k.dim()) + " -> " + std::to_string(bc_mirror.dim()) +
                       ", rank " + std::to_string(rl)});
  }
  return out;
}

///// Parity-sum bounds: for each parity, sum of h^h_{d+dL} (and of h^h_{ddL})
/// is at most 2(2n+1) * sum of all Betti numbers.
inline Ledger verify_bounds_thm62(const SymplecticComplex& sc) {
  Ledger out;
  const int n = sc.dimension();
  const SymplecticTable bc = sympl_bott_chern(sc);
  const SymplecticTable a = sympl_aeppli(sc);
  const SymplecticTable b = sympl_de_rham(sc);
  long btotal = 0;
  for (int k = 0; k <= n; ++k) btotal += b.at(k);
  const long bound = 2L * (n + 1) * btotal;  // n here is 2n in manifold terms
  for (int parity = 0; parity <= 1; ++parity) {
    long sbc = 0, sa = 0;
    for (int k = parity; k <= n; k += 2) {
      sbc += bc.at(k);
      sa += a.at(k);
    }
    out.push_back(check_leq("parity " + std::to_string(parity) + " sum h_{d+dL}", sbc, bound));
    out.push_back(check_leq("parity " + std::to_string(parity) + " sum h_{ddL}", sa, bound));
  }
  // b_k <= h^k_{d+dL} for k = 1..n/2
  for (int k = 1; k <= n / 2; ++k)
    out.push_back(check_leq("b_" + std::to_string(k) + " <= h^k_{d+dL}", b.at(k), bc.at(k)));
  return out;
}

/// Four-dimensional bounds: b2 <= h^2_{d+dL} <= 10 b2 + 20 b1 + 18 and
/// 0 <= tilde-Delta^2 <= 9 b2 + 20 b1 + 18.
inline Ledger verify_dim4_bounds(const SymplecticComplex& sc) {
  if (sc.dimension() != 4)
    throw ValidationError("dim-4 bounds need a 4-dimensional model");
  Ledger out;
  const SymplecticTable bc = sympl_bott_chern(sc);
  const SymplecticTable b = sympl_de_rham(sc);
  const long b1 = b.at(1), b2 = b.at(2), h2 = bc.at(2);
  const long dt2 = delta_tilde(sc, 2);
  out.push_back(check_leq("b2 <= h^2_{d+dL}", b2, h2));
  out.push_back(check_leq("h^2_{d+dL} <= 10 b2 + 20 b1 + 18", h2, 10 * b2 + 20 * b1 + 18));
  out.push_back(check_leq("0 <= tilde-Delta^2", 0, dt2));
  out.push_back(check_leq("tilde-Delta^2 <= 9 b2 + 20 b1 + 18", dt2, 9 * b2 + 20 * b1 + 18));
  return out;
}

// ---- strip complex --------------------------------------------------

/// The double complex B^{p,q} = A^{p-q} ⊗ beta^q over a finite q-window,
/// with del = d ⊗ id and delbar = d^Lambda ⊗ beta. BC/A rows at interior q
/// reproduce the symplectic BC/A tables.
struct StripComplexSpec {
  int q_min = 0;
  int q_max = 0;
  DoubleComplex complex;

  bool interior(int q0) const { return q0 - 1 >= q_min && q0 + 1 <= q_max; }
};

inline StripComplexSpec strip_complex(const SymplecticComplex& sc, int q_min, int q_max) {
  if (q_min > q_max) throw ValidationError("strip_complex: empty q-window");
  const int n = sc.dimension();
  StripComplexSpec spec;
  spec.q_min = q_min;
  spec.q_max = q_max;
  for (int q = q_min; q <= q_max; ++q)
    for (int k = 0; k <= n; ++k) spec.complex.set_space(k + q, q, sc.dim(k));
  for (int q = q_min; q <= q_max; ++q)
    for (int k = 0; k <= n; ++k) {
      const int p = k + q;
      if (k < n) spec.complex.set_del(p, q, sc.d(k));          // (p,q) -> (p+1,q), degree k -> k+1
      if (q < q_max && k >= 1) spec.complex.set_delbar(p, q, sc.d_lambda(k));
    }
  const Verdict v = spec.complex.validate();
  if (!v.ok) throw TheoremTrap("strip complex failed validation: " + v.message);
  return spec;
}

/// BC and A rows of the strip at probe row q0 against the symplectic
/// tables (interior rows only).
inline Ledger verify_strip_bridge(const SymplecticComplex& sc, const StripComplexSpec& strip,
                                  int q0) {
  if (!strip.interior(q0))
    throw ValidationError("strip probe row must be interior to the q-window");
  Ledger out;
  const int n = sc.dimension();
  const CohomologyTable bc = strip.complex.bott_chern();
  const CohomologyTable a = strip.complex.aeppli();
  const SymplecticTable sbc = sympl_bott_chern(sc);
  const SymplecticTable sa = sympl_aeppli(sc);
  for (int k = 0; k <= n; ++k) {
    out.push_back(check_equal("strip BC (" + std::to_string(k + q0) + "," + std::to_string(q0) +
                                  ") = h^" + std::to_string(k) + "_{d+dL}",
                              bc.at(k + q0, q0), sbc.at(k)));
    out.push_back(check_equal("strip A (" + std::to_string(k + q0) + "," + std::to_string(q0) +
                                  ") = h^" + std::to_string(k) + "_{ddL}",
                              a.at(k + q0, q0), sa.at(k)));
  }
  return out;
}

}  // namespace nilcohom
