#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilcohom/double_complex.hpp"
#include "nilcohom/symplectic_cohom.hpp"  // LedgerEntry / check_equal / check_leq

namespace nilcohom {

inline std::set<int> total_degrees(const DoubleComplex& dc) {
  std::set<int> ks;
  for (const auto& [pq, d] : dc.support()) ks.insert(pq.first + pq.second);
  return ks;
}

/// Delta^k = sum_{p+q=k} (h_BC + h_A) - 2 b_k; non-negative by theorem,
/// enforced with a trap.
inline int delta_k(const DoubleComplex& dc, int k) {
  const CohomologyTable bc = dc.bott_chern();
  const CohomologyTable a = dc.aeppli();
  const int b = dc.de_rham().at(k);
  const int d = bc.diagonal_sum(k) + a.diagonal_sum(k) - 2 * b;
  if (d < 0) throw TheoremTrap("Delta^" + std::to_string(k) + " < 0");
  return d;
}

inline std::vector<int> delta_profile(const DoubleComplex& dc) {
  std::vector<int> out;
  int kmax = 0;
  for (int k : total_degrees(dc)) kmax = std::max(kmax, k);
  for (int k = 0; k <= kmax; ++k) out.push_back(delta_k(dc, k));
  return out;
}

/// The three characterizations of the del-delbar-lemma, cross-checked
/// against each other. The diagonal-difference criterion needs a
/// conjugation and is skipped (not defaulted) without one.
struct DdbarVerdict {
  bool holds = false;
  bool delta_vanishes = false;       // Delta^k = 0 for all k
  bool bc_to_a_injective = false;    // identity-induced BC -> A injective everywhere
  bool diagonal_differences = false; // sum_{p+q=k} (h_BC - h_A) = 0 for all k
  bool used_conjugation = false;
  std::string details;
};

inline DdbarVerdict ddbar_lemma(const DoubleComplex& dc) {
  DdbarVerdict v;
  std::ostringstream os;

  v.delta_vanishes = true;
  for (int k : total_degrees(dc))
    if (delta_k(dc, k) != 0) {
      v.delta_vanishes = false;
      os << "Delta^" << k << " = " << delta_k(dc, k) << "; ";
    }

  v.bc_to_a_injective = true;
  for (const auto& [pq, d] : dc.support()) {
    const auto [p, q] = pq;
    const Matrix m = dc.induced_map(Flavor::BottChern, Flavor::Aeppli, p, q);
    if (rank(m) != m.cols()) {
      v.bc_to_a_injective = false;
      os << "BC->A not injective at (" << p << "," << q << "); ";
    }
  }

  if (dc.has_conjugation()) {
    v.used_conjugation = true;
    const CohomologyTable bc = dc.bott_chern();
    const CohomologyTable a = dc.aeppli();
    v.diagonal_differences = true;
    for (int k : total_degrees(dc))
      if (bc.diagonal_sum(k) != a.diagonal_sum(k)) v.diagonal_differences = false;
    if (v.diagonal_differences != v.bc_to_a_injective)
      throw TheoremTrap("ddbar characterizations disagree: diagonal differences vs injectivity");
  }

  if (v.delta_vanishes != v.bc_to_a_injective)
    throw TheoremTrap("ddbar characterizations disagree: Delta^k vs injectivity");
  v.holds = v.bc_to_a_injective;
  v.details = os.str();
  return v;
}

/// Duality and symmetry ledger for a bigraded complex of complex
/// dimension m with conjugation:
///   h_BC^{p,q} = h_BC^{q,p},  h_A^{p,q} = h_A^{q,p},
///   h_delbar^{p,q} = h_del^{q,p},
///   h_BC^{p,q} = h_A^{m-q,m-p}   (Schweitzer duality),
///   h_delbar^{p,q} = h_delbar^{m-p,m-q}  (Serre duality).
inline Ledger verify_dualities(const DoubleComplex& dc, int m) {
  if (!dc.has_conjugation())
    throw ValidationError("duality ledger needs a conjugation witness");
  Ledger out;
  const CohomologyTable bc = dc.bott_chern();
  const CohomologyTable a = dc.aeppli();
  const CohomologyTable dol = dc.dolbeault();
  const CohomologyTable cdol = dc.conj_dolbeault();
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q <= m; ++q) {
      const std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      out.push_back(check_equal("h_BC" + at + " = h_BC(q,p)", bc.at(p, q), bc.at(q, p)));
      out.push_back(check_equal("h_A" + at + " = h_A(q,p)", a.at(p, q), a.at(q, p)));
      out.push_back(check_equal("h_delbar" + at + " = h_del(q,p)", dol.at(p, q), cdol.at(q, p)));
      out.push_back(check_equal("h_BC" + at + " = h_A(m-q,m-p)", bc.at(p, q), a.at(m - q, m - p)));
      out.push_back(
          check_equal("h_delbar" + at + " = h_delbar(m-p,m-q)", dol.at(p, q), dol.at(m - p, m - q)));
    }
  return out;
}

/// Frolicher-type bounds: for every total degree k,
///   sum_{p+q=k} h_delbar >= b_k,  sum h_del >= b_k, and
///   sum (h_BC + h_A) >= 2 b_k  (i.e. Delta^k >= 0).
inline Ledger verify_bounds_thm21(const DoubleComplex& dc) {
  Ledger out;
  const CohomologyTable bc = dc.bott_chern();
  const CohomologyTable a = dc.aeppli();
  const CohomologyTable dol = dc.dolbeault();
  const CohomologyTable cdol = dc.conj_dolbeault();
  const CohomologyTable dr = dc.de_rham();
  for (int k : total_degrees(dc)) {
    const std::string deg = std::to_string(k);
    out.push_back(check_leq("b_" + deg + " <= sum h_delbar", dr.at(k), dol.diagonal_sum(k)));
    out.push_back(check_leq("b_" + deg + " <= sum h_del", dr.at(k), cdol.diagonal_sum(k)));
    out.push_back(check_leq("2 b_" + deg + " <= sum (h_BC + h_A)", 2 * dr.at(k),
                            bc.diagonal_sum(k) + a.diagonal_sum(k)));
  }
  return out;
}

/// Surface dichotomy: for complex dimension 2, Delta^1 = 0 and
/// Delta^2 is 0 or 2.
inline Ledger verify_surface_dichotomy(const DoubleComplex& dc) {
  Ledger out;
  const int d1 = delta_k(dc, 1);
  const int d2 = delta_k(dc, 2);
  out.push_back(check_equal("Delta^1 = 0", d1, 0));
  out.push_back({"Delta^2 in {0, 2}", d2 == 0 || d2 == 2, "Delta^2 = " + std::to_string(d2)});
  return out;
}

/// One-stop numeric summary of a bigraded complex.
struct InvariantReport {
  CohomologyTable bott_chern, aeppli, dolbeault, conj_dolbeault, de_rham;
  std::vector<int> delta;  // index k
  DdbarVerdict ddbar;
};

inline InvariantReport invariant_report(const DoubleComplex& dc) {
  InvariantReport r;
  r.bott_chern = dc.bott_chern();
  r.aeppli = dc.aeppli();
  r.dolbeault = dc.dolbeault();
  r.conj_dolbeault = dc.conj_dolbeault();
  r.de_rham = dc.de_rham();
  r.delta = delta_profile(dc);
  r.ddbar = ddbar_lemma(dc);
  return r;
}

}  // namespace nilcohom
