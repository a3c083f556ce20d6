#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilcohom/errors.hpp"
#include "nilcohom/linalg.hpp"
#include "nilcohom/quotient.hpp"

namespace nilcohom {

using PQ = std::pair<int, int>;

enum class Flavor { DeRham, Dolbeault, ConjDolbeault, BottChern, Aeppli };

inline const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::DeRham: return "dR";
    case Flavor::Dolbeault: return "dolbeault";
    case Flavor::ConjDolbeault: return "conj_dolbeault";
    case Flavor::BottChern: return "BC";
    case Flavor::Aeppli: return "A";
  }
  return "?";
}

/// Dimension table of one cohomology flavor: bigraded flavors key on
/// (p,q), de Rham keys on the total degree.
struct CohomologyTable {
  Flavor flavor = Flavor::DeRham;
  std::map<PQ, int> bigraded;
  std::map<int, int> graded;

  int at(int p, int q) const {
    const auto it = bigraded.find({p, q});
    return it == bigraded.end() ? 0 : it->second;
  }
  int at(int k) const {
    const auto it = graded.find(k);
    return it == graded.end() ? 0 : it->second;
  }
  /// Sum over the diagonal p+q = k (bigraded flavors only).
  int diagonal_sum(int k) const {
    int s = 0;
    for (const auto& [pq, v] : bigraded)
      if (pq.first + pq.second == k) s += v;
    return s;
  }
};

/// Bounded double complex of finite-dimensional vector spaces with two
/// anticommuting squaring-to-zero differentials, and an optional
/// conjugation witness C: B^{p,q} -> B^{q,p} acting antilinearly as
/// v |-> C * conj(v).
class DoubleComplex {
 public:
  void set_space(int p, int q, int dim) {
    if (dim < 0) throw ValidationError("double complex: negative dimension");
    if (dim > 0) dims_[{p, q}] = dim;
  }
  void set_del(int p, int q, Matrix m) {
    check_shape(m, p, q, p + 1, q, "del");
    if (m.rows() && m.cols()) del_[{p, q}] = std::move(m);
  }
  void set_delbar(int p, int q, Matrix m) {
    check_shape(m, p, q, p, q + 1, "delbar");
    if (m.rows() && m.cols()) delbar_[{p, q}] = std::move(m);
  }
  void set_conjugation(int p, int q, Matrix m) {
    check_shape(m, p, q, q, p, "conjugation");
    has_conjugation_ = true;
    conj_[{p, q}] = std::move(m);
  }

  int dim(int p, int q) const {
    const auto it = dims_.find({p, q});
    return it == dims_.end() ? 0 : it->second;
  }
  const std::map<PQ, int>& support() const { return dims_; }
  bool has_conjugation() const { return has_conjugation_; }

  Matrix del(int p, int q) const { return fetch(del_, p, q, p + 1, q); }
  Matrix delbar(int p, int q) const { return fetch(delbar_, p, q, p, q + 1); }
  Matrix conjugation(int p, int q) const {
    if (!has_conjugation_) throw ValidationError("double complex has no conjugation");
    return fetch(conj_, p, q, q, p);
  }

  /// del_{p,q+1} ∘ delbar_{p,q}  (the ∂∂̄ square out of (p,q)).
  Matrix deldelbar(int p, int q) const { return del(p, q + 1) * delbar(p, q); }

  /// Checks ∂²=0, ∂̄²=0, ∂∂̄+∂̄∂=0 (and conjugation compatibility when
  /// present), reporting the first failing bidegree.
  Verdict validate() const {
    for (const auto& [pq, d] : dims_) {
      const auto [p, q] = pq;
      if (!(del(p + 1, q) * del(p, q)).is_zero()) return fail("del^2 != 0", p, q);
      if (!(delbar(p, q + 1) * delbar(p, q)).is_zero()) return fail("delbar^2 != 0", p, q);
      if (!(del(p, q + 1) * delbar(p, q) + delbar(p + 1, q) * del(p, q)).is_zero())
        return fail("del*delbar + delbar*del != 0", p, q);
      if (has_conjugation_) {
        const Matrix c = conjugation(p, q);
        if (!(conjugation(q, p) * c.conj() == Matrix::identity(d)))
          return fail("conjugation is not an involution", p, q);
        if (!(conjugation(p + 1, q) * del(p, q).conj() == delbar(q, p) * c))
          return fail("conjugation does not carry del to delbar", p, q);
      }
    }
    return {true, ""};
  }

  // ---- cohomology presentations ------------------------------------

  QuotientPresentation dolbeault_presentation(int p, int q) const {
    return {kernel(delbar(p, q)), image(delbar(p, q - 1))};
  }
  QuotientPresentation conj_dolbeault_presentation(int p, int q) const {
    return {kernel(del(p, q)), image(del(p - 1, q))};
  }
  QuotientPresentation bott_chern_presentation(int p, int q) const {
    const Subspace num = intersect(kernel(del(p, q)), kernel(delbar(p, q)));
    const Subspace den = image(deldelbar(p - 1, q - 1));
    if (!num.contains(den))
      throw TheoremTrap("BC: image of deldelbar escapes ker del ∩ ker delbar");
    return {num, den};
  }
  QuotientPresentation aeppli_presentation(int p, int q) const {
    const Subspace num = kernel(deldelbar(p, q));
    const Subspace den = sum(image(del(p - 1, q)), image(delbar(p, q - 1)));
    if (!num.contains(den)) throw TheoremTrap("A: image sum escapes ker deldelbar");
    return {num, den};
  }

  CohomologyTable dolbeault() const { return bigraded_table(Flavor::Dolbeault); }
  CohomologyTable conj_dolbeault() const { return bigraded_table(Flavor::ConjDolbeault); }
  CohomologyTable bott_chern() const { return bigraded_table(Flavor::BottChern); }
  CohomologyTable aeppli() const { return bigraded_table(Flavor::Aeppli); }

  // ---- totalization -------------------------------------------------

  /// Bidegrees on the diagonal p+q = k, in ascending p; the concatenation
  /// of their bases is the coordinate order of the totalized space C^k.
  std::vector<PQ> diagonal(int k) const {
    std::vector<PQ> out;
    for (const auto& [pq, d] : dims_)
      if (pq.first + pq.second == k) out.push_back(pq);
    return out;  // std::map order is already ascending in p
  }

  int total_dim(int k) const {
    int s = 0;
    for (const auto& pq : diagonal(k)) s += dim(pq.first, pq.second);
    return s;
  }

  int block_offset(int k, int p, int q) const {
    int off = 0;
    for (const auto& pq : diagonal(k)) {
      if (pq == PQ{p, q}) return off;
      off += dim(pq.first, pq.second);
    }
    throw std::invalid_argument("block_offset: bidegree not on diagonal");
  }

  /// d = del + delbar on the totalized complex.
  Matrix total_d(int k) const {
    Matrix m(total_dim(k + 1), total_dim(k));
    for (const auto& [p, q] : diagonal(k)) {
      const int src = block_offset(k, p, q);
      copy_block(m, del(p, q), k + 1, p + 1, q, src);
      copy_block(m, delbar(p, q), k + 1, p, q + 1, src);
    }
    return m;
  }

  QuotientPresentation de_rham_presentation(int k) const {
    return {kernel(total_d(k)), image(total_d(k - 1))};
  }

  CohomologyTable de_rham() const {
    CohomologyTable t;
    t.flavor = Flavor::DeRham;
    std::set<int> degrees;
    for (const auto& [pq, d] : dims_) degrees.insert(pq.first + pq.second);
    for (int k : degrees) {
      const int dk = total_dim(k) - rank(total_d(k)) - rank(total_d(k - 1));
      if (dk) t.graded[k] = dk;
    }
    return t;
  }

  /// Inclusion of B^{p,q} into the totalized C^{p+q}.
  Matrix total_inclusion(int p, int q) const {
    const int k = p + q;
    Matrix m(total_dim(k), dim(p, q));
    const int off = block_offset(k, p, q);
    for (int j = 0; j < dim(p, q); ++j) m(off + j, j) = Scalar(1);
    return m;
  }

  /// Totalized Aeppli presentation on the degree-k diagonal: a de Rham
  /// class decomposes into components each killed by deldelbar, so the
  /// identity-induced map lands in the direct sum of the Aeppli groups.
  QuotientPresentation total_aeppli_presentation(int k) const {
    Subspace num(total_dim(k));
    Subspace den(total_dim(k));
    for (const auto& [p, q] : diagonal(k)) {
      const Matrix inc = total_inclusion(p, q);
      const QuotientPresentation a = aeppli_presentation(p, q);
      num = sum(num, Subspace::span_cols(inc * a.numerator().basis().transpose()));
      den = sum(den, Subspace::span_cols(inc * a.denominator().basis().transpose()));
    }
    return {num, den};
  }

  // ---- identity-induced maps ----------------------------------------

  /// The edges of the cohomology diagram: BC maps into the Dolbeault
  /// groups and de Rham, which all map into Aeppli (plus the composite
  /// BC -> A). Any other pair is not induced by the identity.
  Matrix induced_map(Flavor src, Flavor dst, int p, int q) const {
    const int k = p + q;
    const Matrix id_pq = Matrix::identity(dim(p, q));
    if (src == Flavor::BottChern && dst == Flavor::Dolbeault)
      return induced_on_quotients(id_pq, bott_chern_presentation(p, q),
                                  dolbeault_presentation(p, q));
    if (src == Flavor::BottChern && dst == Flavor::ConjDolbeault)
      return induced_on_quotients(id_pq, bott_chern_presentation(p, q),
                                  conj_dolbeault_presentation(p, q));
    if (src == Flavor::BottChern && dst == Flavor::Aeppli)
      return induced_on_quotients(id_pq, bott_chern_presentation(p, q),
                                  aeppli_presentation(p, q));
    if (src == Flavor::BottChern && dst == Flavor::DeRham)
      return induced_on_quotients(total_inclusion(p, q), bott_chern_presentation(p, q),
                                  de_rham_presentation(k));
    if (src == Flavor::Dolbeault && dst == Flavor::Aeppli)
      return induced_on_quotients(id_pq, dolbeault_presentation(p, q),
                                  aeppli_presentation(p, q));
    if (src == Flavor::ConjDolbeault && dst == Flavor::Aeppli)
      return induced_on_quotients(id_pq, conj_dolbeault_presentation(p, q),
                                  aeppli_presentation(p, q));
    if (src == Flavor::DeRham && dst == Flavor::Aeppli)
      return induced_on_quotients(Matrix::identity(total_dim(k)), de_rham_presentation(k),
                                  total_aeppli_presentation(k));
    throw std::invalid_argument(std::string("induced_map: ") + flavor_name(src) + " -> " +
                                flavor_name(dst) + " is not an edge of the diagram");
  }

 private:
  static Verdict fail(const std::string& what, int p, int q) {
    std::ostringstream os;
    os << what << " at bidegree (" << p << "," << q << ")";
    return {false, os.str()};
  }

  void check_shape(const Matrix& m, int p, int q, int tp, int tq, const char* what) const {
    if (m.cols() != dim(p, q) || m.rows() != dim(tp, tq))
      throw ValidationError(std::string("double complex: ") + what + " shape mismatch at (" +
                            std::to_string(p) + "," + std::to_string(q) + ")");
  }

  Matrix fetch(const std::map<PQ, Matrix>& store, int p, int q, int tp, int tq) const {
    const auto it = store.find({p, q});
    if (it != store.end()) return it->second;
    return Matrix(dim(tp, tq), dim(p, q));
  }

  void copy_block(Matrix& total, const Matrix& block, int k_out, int tp, int tq, int src_off) const {
    if (block.rows() == 0 || block.cols() == 0) return;
    if (dim(tp, tq) == 0) return;
    const int dst_off = block_offset(k_out, tp, tq);
    for (int i = 0; i < block.rows(); ++i)
      for (int j = 0; j < block.cols(); ++j) total(dst_off + i, src_off + j) = block(i, j);
  }

  CohomologyTable bigraded_table(Flavor f) const {
    CohomologyTable t;
    t.flavor = f;
    for (const auto& [pq, d] : dims_) {
      const auto [p, q] = pq;
      int h = 0;
      switch (f) {
        case Flavor::Dolbeault: h = dolbeault_presentation(p, q).dim(); break;
        case Flavor::ConjDolbeault: h = conj_dolbeault_presentation(p, q).dim(); break;
        case Flavor::BottChern: h = bott_chern_presentation(p, q).dim(); break;
        case Flavor::Aeppli: h = aeppli_presentation(p, q).dim(); break;
        default: throw std::logic_error("bigraded_table: bad flavor");
      }
      if (h < 0) throw TheoremTrap("negative cohomology dimension");
      if (h) t.bigraded[pq] = h;
    }
    return t;
  }

  std::map<PQ, int> dims_;
  std::map<PQ, Matrix> del_, delbar_;
  std::map<PQ, Matrix> conj_;
  bool has_conjugation_ = false;
};

}  // namespace nilcohom
