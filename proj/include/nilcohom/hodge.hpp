#pragma once

#include <functional>
#include <random>
#include <string>

#include "nilcohom/complex_structure.hpp"
#include "nilcohom/double_complex.hpp"
#include "nilcohom/invariants.hpp"
#include "nilcohom/symplectic_cohom.hpp"

namespace nilcohom {

/// Adjoint of M : (X, g_dom) -> (Y, g_cod), i.e. the unique matrix with
/// <Mx, y>_cod = <x, M*y>_dom.
inline Matrix adjoint(const Matrix& m, const Matrix& g_dom, const Matrix& g_cod) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.cols(), m.rows());
  if (g_dom.rows() != m.cols() || g_cod.rows() != m.rows())
    throw ValidationError("adjoint: Gram shape mismatch");
  return inverse(g_dom) * m.conj().transpose() * g_cod;
}

inline void check_gram(const Matrix& g) {
  if (g.rows() != g.cols()) throw ValidationError("Gram matrix must be square");
  if (!(g == g.conj().transpose())) throw ValidationError("Gram matrix must be Hermitian");
}

/// Deterministic positive-definite Gram R^T R + I with small integer R.
inline Matrix random_gram(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  Matrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = Scalar(coef(rng));
  return r.transpose() * r + Matrix::identity(n);
}

// ---- complex-side Laplacians ---------------------------------------

/// Inner products per bidegree. The default declares the monomial bases
/// orthonormal, so adjoints are plain conjugate transposes.
using GramPQ = std::function<Matrix(int, int)>;

inline GramPQ orthonormal_pq(const DoubleComplex& dc) {
  return [&dc](int p, int q) { return Matrix::identity(dc.dim(p, q)); };
}

inline GramPQ seeded_gram_pq(const DoubleComplex& dc, unsigned seed) {
  auto store = std::make_shared<std::map<PQ, Matrix>>();
  std::mt19937 rng(seed);
  for (const auto& [pq, d] : dc.support()) (*store)[pq] = random_gram(d, rng);
  return [store, &dc](int p, int q) {
    const auto it = store->find({p, q});
    return it == store->end() ? Matrix::identity(dc.dim(p, q)) : it->second;
  };
}

/// The six Laplacians of a bigraded complex with respect to a choice of
/// inner products. All are endomorphisms of B^{p,q} (de Rham of the
/// totalized C^k).
class ComplexHodge {
 public:
  ComplexHodge(const DoubleComplex& dc, GramPQ gram) : dc_(dc), gram_(std::move(gram)) {
    for (const auto& [pq, d] : dc.support()) check_gram(gram_(pq.first, pq.second));
  }

  Matrix adj_del(int p, int q) const {
    return adjoint(dc_.del(p, q), gram_(p, q), gram_(p + 1, q));
  }
  Matrix adj_delbar(int p, int q) const {
    return adjoint(dc_.delbar(p, q), gram_(p, q), gram_(p, q + 1));
  }
  Matrix adj_deldelbar(int p, int q) const {
    return adjoint(dc_.deldelbar(p, q), gram_(p, q), gram_(p + 1, q + 1));
  }

  Matrix laplacian_dolbeault(int p, int q) const {
    return adj_delbar(p, q) * dc_.delbar(p, q) + dc_.delbar(p, q - 1) * adj_delbar(p, q - 1);
  }
  Matrix laplacian_conj_dolbeault(int p, int q) const {
    return adj_del(p, q) * dc_.del(p, q) + dc_.del(p - 1, q) * adj_del(p - 1, q);
  }

  Matrix laplacian_bott_chern(int p, int q) const {
    const Matrix in = dc_.deldelbar(p - 1, q - 1);           // (p-1,q-1) -> (p,q)
    const Matrix out = dc_.deldelbar(p, q);                  // (p,q) -> (p+1,q+1)
    const Matrix r = adj_delbar(p + 1, q - 1) * dc_.del(p, q);       // delbar* del, out
    const Matrix s = adj_delbar(p, q) * dc_.del(p - 1, q + 1);       // delbar* del, in
    return in * adj_deldelbar(p - 1, q - 1) + adj_deldelbar(p, q) * out +
           adjoint(r, gram_(p, q), gram_(p + 1, q - 1)) * r +
           s * adjoint(s, gram_(p - 1, q + 1), gram_(p, q)) +
           adj_delbar(p, q) * dc_.delbar(p, q) + adj_del(p, q) * dc_.del(p, q);
  }

  Matrix laplacian_aeppli(int p, int q) const {
    const Matrix in = dc_.deldelbar(p - 1, q - 1);
    const Matrix out = dc_.deldelbar(p, q);
    const Matrix t = dc_.delbar(p - 1, q) * adj_del(p - 1, q);       // delbar del*, out
    const Matrix u = dc_.delbar(p, q - 1) * adj_del(p, q - 1);       // delbar del*, in
    return dc_.del(p - 1, q) * adj_del(p - 1, q) + dc_.delbar(p, q - 1) * adj_delbar(p, q - 1) +
           adj_deldelbar(p, q) * out + in * adj_deldelbar(p - 1, q - 1) +
           adjoint(t, gram_(p, q), gram_(p - 1, q + 1)) * t +
           u * adjoint(u, gram_(p + 1, q - 1), gram_(p, q));
  }

  /// Hodge-de Rham Laplacian on the totalized degree k, with the
  /// block-diagonal inner product.
  Matrix laplacian_de_rham(int k) const {
    const Matrix dk = dc_.total_d(k);
    const Matrix dkm = dc_.total_d(k - 1);
    const Matrix gk = total_gram(k);
    return adjoint(dk, gk, total_gram(k + 1)) * dk + dkm * adjoint(dkm, total_gram(k - 1), gk);
  }

  Matrix total_gram(int k) const {
    Matrix g(dc_.total_dim(k), dc_.total_dim(k));
    for (const auto& [p, q] : dc_.diagonal(k)) {
      const int off = dc_.block_offset(k, p, q);
      const Matrix block = gram_(p, q);
      for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) g(off + i, off + j) = block(i, j);
    }
    return g;
  }

 private:
  const DoubleComplex& dc_;
  GramPQ gram_;
};

/// dim ker(Laplacian) = cohomology dimension, for every flavor and every
/// bidegree, for the given inner products. Any inner product must do.
inline Ledger verify_complex_hodge(const DoubleComplex& dc, GramPQ gram) {
  Ledger out;
  const ComplexHodge h(dc, std::move(gram));
  const CohomologyTable bc = dc.bott_chern();
  const CohomologyTable a = dc.aeppli();
  const CohomologyTable dol = dc.dolbeault();
  const CohomologyTable cdol = dc.conj_dolbeault();
  for (const auto& [pq, d] : dc.support()) {
    const auto [p, q] = pq;
    const std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    out.push_back(check_equal("dim ker Delta_delbar" + at,
                              kernel(h.laplacian_dolbeault(p, q)).dim(), dol.at(p, q)));
    out.push_back(check_equal("dim ker Delta_del" + at,
                              kernel(h.laplacian_conj_dolbeault(p, q)).dim(), cdol.at(p, q)));
    out.push_back(check_equal("dim ker Delta_BC" + at,
                              kernel(h.laplacian_bott_chern(p, q)).dim(), bc.at(p, q)));
    out.push_back(check_equal("dim ker Delta_A" + at,
                              kernel(h.laplacian_aeppli(p, q)).dim(), a.at(p, q)));
  }
  const CohomologyTable dr = dc.de_rham();
  for (int k : total_degrees(dc))
    out.push_back(check_equal("dim ker Delta_d^" + std::to_string(k),
                              kernel(h.laplacian_de_rham(k)).dim(), dr.at(k)));
  return out;
}

// ---- antilinear star ------------------------------------------------

/// Antilinear Hodge star of the orthonormal monomial metric on a
/// bigraded model: mu_S |-> sgn(S, S^c) mu_{S^c} extended antilinearly
/// (the matrix acts on conjugated coordinates). Maps A^{p,q} to
/// A^{m-p, m-q}.
inline Matrix antilinear_star(const BigradedModel& bm, int p, int q) {
  const int m = bm.half_dim();
  const auto& dom = bm.basis(p, q);
  const auto& cod = bm.basis(m - p, m - q);
  Matrix out(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (std::size_t j = 0; j < dom.size(); ++j) {
    const MultiIndex ic = complement(dom[j], 2 * m);
    const auto merged = merge_indices(dom[j], ic);
    out(basis_position(cod, ic), static_cast<int>(j)) = Scalar(merged->first);
  }
  return out;
}

/// The antilinear star carries harmonic Bott-Chern representatives to
/// harmonic Aeppli representatives of complementary bidegree,
/// bijectively, for the orthonormal metric it is built from.
inline Ledger antilinear_star_check(const BigradedModel& bm) {
  Ledger out;
  const DoubleComplex& dc = bm.complex();
  const ComplexHodge h(dc, orthonormal_pq(dc));
  const int m = bm.half_dim();
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q <= m; ++q) {
      const Subspace hbc = kernel(h.laplacian_bott_chern(p, q));
      const Subspace ha = kernel(h.laplacian_aeppli(m - p, m - q));
      const Matrix star = antilinear_star(bm, p, q);
      const Matrix image_basis = star * hbc.basis().conj().transpose();
      const Subspace img = Subspace::span_cols(image_basis);
      const std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const bool ok = img.dim() == hbc.dim() && ha.contains(img) && img.dim() == ha.dim();
      out.push_back({"star: harmonic BC" + at + " ~ harmonic A(m-p,m-q)", ok,
                     std::to_string(hbc.dim()) + " -> " + std::to_string(img.dim()) + " of " +
                         std::to_string(ha.dim())});
    }
  return out;
}

// ---- symplectic Laplacians ------------------------------------------

using GramK = std::function<Matrix(int)>;

inline GramK orthonormal_k(const SymplecticComplex& sc) {
  return [&sc](int k) { return Matrix::identity(sc.dim(k)); };
}

inline GramK seeded_gram_k(const SymplecticComplex& sc, unsigned seed) {
  auto store = std::make_shared<std::vector<Matrix>>();
  std::mt19937 rng(seed);
  for (int k = 0; k <= sc.dimension(); ++k) store->push_back(random_gram(sc.dim(k), rng));
  return [store](int k) { return (*store)[k]; };
}

/// The symplectic Laplacians Delta_{dL}, Delta_{d+dL}, Delta_{ddL} on
/// each degree, for a choice of inner products.
class SymplecticHodge {
 public:
  SymplecticHodge(const SymplecticComplex& sc, GramK gram) : sc_(sc), gram_(std::move(gram)) {
    for (int k = 0; k <= sc.dimension(); ++k) check_gram(gram_(k));
  }

  /// d and d^Lambda with zero-matrix shapes extended past the ends of
  /// the complex, so all Laplacian terms compose.
  Matrix d_of(int k) const {
    if (k >= 0 && k <= sc_.dimension()) return sc_.d(k);
    return Matrix(dim(k + 1), dim(k));
  }
  Matrix dl_of(int k) const {
    if (k >= 0 && k <= sc_.dimension()) return sc_.d_lambda(k);
    return Matrix(dim(k - 1), dim(k));
  }
  Matrix adj_d(int k) const { return adjoint(d_of(k), gram(k), gram(k + 1)); }
  Matrix adj_dl(int k) const { return adjoint(dl_of(k), gram(k), gram(k - 1)); }

  Matrix laplacian_d_lambda(int k) const {
    return adj_dl(k) * dl_of(k) + dl_of(k + 1) * adj_dl(k + 1);
  }

  Matrix laplacian_bott_chern(int k) const {
    const Matrix ddl = dd_lambda(sc_, k);                    // endomorphism of A^k
    const Matrix ddl_adj = adjoint(ddl, gram(k), gram(k));
    Matrix out = ddl * ddl_adj + ddl_adj * ddl;
    out = out + adj_d(k) * dl_of(k + 2) * adj_dl(k + 2) * d_of(k);
    out = out + adj_dl(k) * d_of(k - 2) * adj_d(k - 2) * dl_of(k);
    out = out + adj_d(k) * d_of(k) + adj_dl(k) * dl_of(k);
    return out;
  }

  Matrix laplacian_aeppli(int k) const {
    const Matrix ddl = dd_lambda(sc_, k);
    const Matrix ddl_adj = adjoint(ddl, gram(k), gram(k));
    Matrix out = ddl * ddl_adj + ddl_adj * ddl;
    out = out + d_of(k - 1) * adj_dl(k - 1) * dl_of(k - 1) * adj_d(k - 1);
    out = out + dl_of(k + 1) * adj_d(k + 1) * d_of(k + 1) * adj_dl(k + 1);
    out = out + d_of(k - 1) * adj_d(k - 1) + dl_of(k + 1) * adj_dl(k + 1);
    return out;
  }

 private:
  int dim(int k) const { return sc_.dim(k); }
  Matrix gram(int k) const {
    if (k < 0 || k > sc_.dimension()) return Matrix();
    return gram_(k);
  }

  const SymplecticComplex& sc_;
  GramK gram_;
};

/// omega-compatible almost-complex structure read off a unit Darboux
/// form (omega a disjoint sum of +1 monomials): J e_a = e_b per pair, so
/// the induced metric g = omega(., J..) is the identity on generators.
inline Matrix darboux_compatible_j(const SymplecticForm& w) {
  const int n = w.dimension();
  Matrix j(n, n);
  std::vector<bool> used(n, false);
  for (const auto& [I, c] : w.omega().terms()) {
    if (!(c == Scalar(1)))
      throw ValidationError("omega is not in unit Darboux form (coefficient != 1)");
    const int a = I[0] - 1, b = I[1] - 1;
    if (used[a] || used[b]) throw ValidationError("omega does not pair generators disjointly");
    used[a] = used[b] = true;
    j(b, a) = Scalar(1);
    j(a, b) = Scalar(-1);
  }
  for (bool u : used)
    if (!u) throw ValidationError("omega is degenerate: unpaired generator");
  return j;
}

/// Riemannian Hodge star of the metric that makes the generators
/// orthonormal: e_S |-> sgn(S, S^c) e_{S^c}.
inline Matrix riemannian_star(int n, int k) {
  const auto dom = enumerate_basis(n, k);
  const auto cod = enumerate_basis(n, n - k);
  Matrix out(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (std::size_t j = 0; j < dom.size(); ++j) {
    const MultiIndex ic = complement(dom[j], n);
    const auto merged = merge_indices(dom[j], ic);
    out(basis_position(cod, ic), static_cast<int>(j)) = Scalar(merged->first);
  }
  return out;
}

/// The canonical harmonic square for a compatible triple with identity
/// metric: the Riemannian star maps ker Delta_{d+dL}^k onto
/// ker Delta_{ddL}^{2n-k}, L^{n-k} maps ker Delta_{d+dL}^k onto
/// ker Delta_{d+dL}^{2n-k}, and Lambda^{n-k} maps ker Delta_{ddL}^{2n-k}
/// onto ker Delta_{ddL}^k.
inline Ledger verify_tseng_yau_harmonic(const SymplecticComplex& sc, const SymplecticForm& w) {
  const CompatibleTriple triple(w, darboux_compatible_j(w));
  if (!(triple.gram == Matrix::identity(sc.dimension())))
    throw ValidationError("harmonic square needs the identity metric on generators");
  Ledger out;
  const int n = sc.dimension();
  const SymplecticHodge h(sc, orthonormal_k(sc));
  auto carries = [](const Matrix& op, const Subspace& src, const Subspace& dst) {
    const Subspace img = Subspace::span_cols(op * src.basis().transpose());
    return img.dim() == src.dim() && dst.contains(img) && src.dim() == dst.dim();
  };
  for (int k = 0; k <= n; ++k) {
    const Subspace hbc = kernel(h.laplacian_bott_chern(k));
    const Subspace ha_mirror = kernel(h.laplacian_aeppli(n - k));
    const std::string deg = std::to_string(k);
    out.push_back({"star: harm^" + deg + "_{d+dL} ~ harm^{2n-k}_{ddL}",
                   carries(riemannian_star(n, k), hbc, ha_mirror),
                   std::to_string(hbc.dim()) + " vs " + std::to_string(ha_mirror.dim())});
    if (2 * k > n) continue;
    Matrix lpow = Matrix::identity(sc.dim(k));
    for (int s = 0; s < (n - 2 * k) / 2; ++s) lpow = sc.lefschetz(k + 2 * s) * lpow;
    out.push_back({"L^{n-k}: harm^" + deg + "_{d+dL} ~ harm^{2n-k}_{d+dL}",
                   carries(lpow, hbc, kernel(h.laplacian_bott_chern(n - k))), ""});
    Matrix lampow = Matrix::identity(sc.dim(n - k));
    for (int s = 0; s < (n - 2 * k) / 2; ++s) lampow = sc.lambda(n - k - 2 * s) * lampow;
    out.push_back({"Lambda^{n-k}: harm^{2n-k}_{ddL} ~ harm^" + deg + "_{ddL}",
                   carries(lampow, ha_mirror, kernel(h.laplacian_aeppli(k))), ""});
  }
  return out;
}

inline Ledger verify_symplectic_hodge(const SymplecticComplex& sc, GramK gram) {
  Ledger out;
  const SymplecticHodge h(sc, std::move(gram));
  const SymplecticTable dl = d_lambda_cohomology(sc);
  const SymplecticTable bc = sympl_bott_chern(sc);
  const SymplecticTable a = sympl_aeppli(sc);
  for (int k = 0; k <= sc.dimension(); ++k) {
    const std::string deg = std::to_string(k);
    out.push_back(check_equal("dim ker Delta_{dL}^" + deg,
                              kernel(h.laplacian_d_lambda(k)).dim(), dl.at(k)));
    out.push_back(check_equal("dim ker Delta_{d+dL}^" + deg,
                              kernel(h.laplacian_bott_chern(k)).dim(), bc.at(k)));
    out.push_back(check_equal("dim ker Delta_{ddL}^" + deg,
                              kernel(h.laplacian_aeppli(k)).dim(), a.at(k)));
  }
  return out;
}

}  // namespace nilcohom
