#include "forge/entwining.hpp"

#include <stdexcept>

namespace forge {

Entwining flip_entwining(const Algebra& a, const Coalgebra& c) {
  return {a, c, flip(a.field, c.dim, a.dim), flip(a.field, a.dim, c.dim)};
}

std::vector<std::string> check_bowtie(const Entwining& e) {
  const Field& f = e.algebra.field;
  std::size_t na = e.algebra.dim, nc = e.coalgebra.dim;
  if (e.psi.rows() != na * nc || e.psi.cols() != nc * na) return {"shape"};
  std::vector<std::string> bad;
  Matrix ia = Matrix::identity(f, na);
  Matrix ic = Matrix::identity(f, nc);
  const Matrix& mul = e.algebra.mul;
  const Matrix& cm = e.coalgebra.comul;

  if (e.psi * ic.kron(mul) != mul.kron(ic) * ia.kron(e.psi) * e.psi.kron(ia))
    bad.push_back("left-pentagon");
  if (ia.kron(cm) * e.psi != e.psi.kron(ic) * ic.kron(e.psi) * cm.kron(ia))
    bad.push_back("right-pentagon");
  Matrix u = Matrix::column(f, e.algebra.unit);
  if (e.psi * ic.kron(u) != u.kron(ic)) bad.push_back("left-triangle");
  if (ia.kron(e.coalgebra.counit) * e.psi != e.coalgebra.counit.kron(ia))
    bad.push_back("right-triangle");
  if (e.psi_inverse) {
    if (e.psi * *e.psi_inverse != Matrix::identity(f, na * nc) ||
        *e.psi_inverse * e.psi != Matrix::identity(f, nc * na))
      bad.push_back("inverse");
  }
  return bad;
}

std::optional<Matrix> invert_psi(const Entwining& e) { return inverse(e.psi); }

std::vector<std::string> check_hopf(const HopfAlgebra& h) {
  std::vector<std::string> bad = check_algebra(h.algebra);
  for (const auto& v : check_coalgebra(h.coalgebra)) bad.push_back(v);
  if (!bad.empty()) return bad;
  if (!(h.algebra.field == h.coalgebra.field) || h.algebra.dim != h.coalgebra.dim)
    return {"carrier-mismatch"};

  const Field& f = h.algebra.field;
  std::size_t n = h.algebra.dim;
  Matrix id = Matrix::identity(f, n);
  const Matrix& mul = h.algebra.mul;
  const Matrix& cm = h.coalgebra.comul;
  const Matrix& eps = h.coalgebra.counit;
  Matrix u = Matrix::column(f, h.algebra.unit);

  // Bialgebra compatibility: comul and counit are algebra maps.
  Matrix mid_swap = id.kron(flip(f, n, n)).kron(id);
  if (cm * mul != mul.kron(mul) * mid_swap * cm.kron(cm))
    bad.push_back("comul-multiplicative");
  if (!eq_vec(f, cm.apply(h.algebra.unit), tensor_vec(f, h.algebra.unit, h.algebra.unit)))
    bad.push_back("comul-unital");
  if (eps * mul != eps.kron(eps)) bad.push_back("counit-multiplicative");
  if (eps.apply(h.algebra.unit) != Vec{f.one()}) bad.push_back("counit-unital");

  // Antipode: mul(S (x) id)comul = unit . counit = mul(id (x) S)comul.
  Matrix target = u * eps;
  if (mul * h.antipode.kron(id) * cm != target) bad.push_back("antipode-left");
  if (mul * id.kron(h.antipode) * cm != target) bad.push_back("antipode-right");
  if (h.antipode_inverse) {
    if (h.antipode * *h.antipode_inverse != id || *h.antipode_inverse * h.antipode != id)
      bad.push_back("antipode-inverse");
  }
  return bad;
}

std::vector<std::string> check_comodule_algebra(const ComoduleAlgebra& a, const HopfAlgebra& h) {
  std::vector<std::string> bad;
  const Field& f = a.algebra.field;
  std::size_t na = a.algebra.dim, nh = h.algebra.dim;
  if (a.coaction.rows() != na * nh || a.coaction.cols() != na) return {"shape"};
  Matrix ia = Matrix::identity(f, na);
  Matrix ih = Matrix::identity(f, nh);

  if (ia.kron(h.coalgebra.comul) * a.coaction != a.coaction.kron(ih) * a.coaction)
    bad.push_back("coaction-coassociativity");
  if (ia.kron(h.coalgebra.counit) * a.coaction != ia) bad.push_back("coaction-counit");

  // rho is a unital algebra map into A (x) H with componentwise product.
  Matrix mid_swap = ia.kron(flip(f, na, nh)).kron(ih);
  if (a.coaction * a.algebra.mul !=
      a.algebra.mul.kron(h.algebra.mul) * mid_swap * a.coaction.kron(a.coaction))
    bad.push_back("coaction-multiplicative");
  if (!eq_vec(f, a.coaction.apply(a.algebra.unit),
              tensor_vec(f, a.algebra.unit, h.algebra.unit)))
    bad.push_back("coaction-unital");
  return bad;
}

Entwining doi_koppinen(const DoiKoppinenData& d) {
  const Field& f = d.hopf.algebra.field;
  std::size_t na = d.amod.algebra.dim, nh = d.hopf.algebra.dim, nc = d.c.dim;

  auto demand = [](const std::vector<std::string>& bad, const char* what) {
    if (!bad.empty()) throw std::invalid_argument(std::string(what) + ": " + bad.front());
  };
  demand(check_hopf(d.hopf), "hopf data");
  demand(check_comodule_algebra(d.amod, d.hopf), "comodule algebra");
  demand(check_coalgebra(d.c), "quotient coalgebra");

  if (d.pi.rows() != nc || d.pi.cols() != nh) throw std::invalid_argument("pi: shape");
  if (rank(d.pi) != nc) throw std::invalid_argument("pi: not surjective");
  if (d.c.comul * d.pi != d.pi.kron(d.pi) * d.hopf.coalgebra.comul)
    throw std::invalid_argument("pi: not a coalgebra map");
  if (d.c.counit * d.pi != d.hopf.coalgebra.counit)
    throw std::invalid_argument("pi: counit not preserved");

  AModule cmod{d.hopf.algebra, Side::right, nc, d.c_act};
  demand(check_module(cmod), "right action on C");
  if (d.c_act * d.pi.kron(Matrix::identity(f, nh)) != d.pi * d.hopf.algebra.mul)
    throw std::invalid_argument("pi: not right H-linear");

  Matrix ia = Matrix::identity(f, na);
  Matrix ic = Matrix::identity(f, nc);
  const Matrix& rho = d.amod.coaction;

  // psi: c (x) a -> sum a_0 (x) (c . a_1).
  Matrix psi = ia.kron(d.c_act) * flip(f, nc, na).kron(Matrix::identity(f, nh)) * ic.kron(rho);

  Entwining e{d.amod.algebra, d.c, psi, std::nullopt};
  if (d.hopf.antipode_inverse) {
    const Matrix& sinv = *d.hopf.antipode_inverse;
    // a (x) c -> sum (c . Sinv(a_1)) (x) a_0.
    Matrix formula = d.c_act.kron(ia) * ic.kron(sinv).kron(ia) *
                     flip(f, nh, nc).kron(ia) * flip(f, na, nh * nc) * rho.kron(ic);
    auto generic = inverse(psi);
    if (!generic || *generic != formula)
      throw std::invalid_argument("antipode formula does not invert psi");
    e.psi_inverse = formula;
  }
  return e;
}

}  // namespace forge
