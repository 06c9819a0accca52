#include "forge/coring.hpp"

#include <stdexcept>

namespace forge {

Coring trivial_coring(const Algebra& a) {
  const Field& f = a.field;
  Coring c;
  c.base = a;
  c.dim = a.dim;
  c.lact = a.mul;
  c.ract = a.mul;
  c.cc = tensor_over_A(regular_right_module(a), regular_left_module(a));
  c.comul = c.cc.q.projection * Matrix::column(f, a.unit).kron(Matrix::identity(f, a.dim));
  c.counit = Matrix::identity(f, a.dim);
  return c;
}

CoringMorphism counit_morphism(const Coring& c) {
  return {c, trivial_coring(c.base), Matrix::identity(c.base.field, c.base.dim), c.counit};
}

Coring sweedler_coring(const Algebra& s, const Algebra& a, const Matrix& emb,
                       BalancedTensor* presentation) {
  const Field& f = a.field;
  if (!(s.field == f)) throw std::invalid_argument("sweedler_coring: field mismatch");
  if (emb.rows() != a.dim || emb.cols() != s.dim)
    throw std::invalid_argument("sweedler_coring: embedding shape");
  if (emb * s.mul != a.mul * emb.kron(emb) || !eq_vec(f, emb.apply(s.unit), a.unit))
    throw std::invalid_argument("sweedler_coring: not a unital algebra map");
  if (rank(emb) != s.dim) throw std::invalid_argument("sweedler_coring: not injective");

  Matrix ia = Matrix::identity(f, a.dim);
  AModule a_right_s{s, Side::right, a.dim, a.mul * ia.kron(emb)};
  AModule a_left_s{s, Side::left, a.dim, a.mul * emb.kron(ia)};
  BalancedTensor t = tensor_over_A(a_right_s, a_left_s);

  Coring c;
  c.base = a;
  c.dim = t.dim();
  c.lact = induced_on_quotients(a.mul.kron(ia), tensor_quotient_left(f, a.dim, t.q), t.q);
  c.ract = induced_on_quotients(ia.kron(a.mul), tensor_quotient_right(f, t.q, a.dim), t.q);
  c.cc = tensor_over_A({a, Side::right, c.dim, c.ract}, {a, Side::left, c.dim, c.lact});

  // a (x) a' -> (a (x) 1) (x) (1 (x) a'), pushed through both quotients.
  Matrix u = Matrix::column(f, a.unit);
  Matrix rho1 = t.q.projection * ia.kron(u);
  Matrix rho2 = t.q.projection * u.kron(ia);
  c.comul = induced_on_quotients(rho1.kron(rho2), t.q, c.cc.q);
  c.counit = induced_on_quotients(a.mul, t.q, identity_quotient(f, a.dim));
  if (presentation) *presentation = t;
  return c;
}

Coring coring_from_entwining(const Entwining& e) {
  auto bad = check_bowtie(e);
  if (!bad.empty()) throw std::invalid_argument("coring_from_entwining: " + bad.front());
  const Field& f = e.algebra.field;
  std::size_t na = e.algebra.dim, nc = e.coalgebra.dim;
  Matrix ia = Matrix::identity(f, na);
  Matrix ic = Matrix::identity(f, nc);

  Coring c;
  c.base = e.algebra;
  c.dim = na * nc;
  c.lact = e.algebra.mul.kron(ic);
  c.ract = e.algebra.mul.kron(ic) * ia.kron(e.psi);
  c.cc = tensor_over_A({e.algebra, Side::right, c.dim, c.ract},
                       {e.algebra, Side::left, c.dim, c.lact});

  // a (x) c -> (a (x) c_1) (x) (1 (x) c_2).
  Matrix u = Matrix::column(f, e.algebra.unit);
  Matrix insert = Matrix::identity(f, na * nc).kron(u.kron(ic));
  c.comul = c.cc.q.projection * insert * ia.kron(e.coalgebra.comul);
  c.counit = ia.kron(e.coalgebra.counit);
  return c;
}

Coring coring_from_coalgebra(const Coalgebra& co) {
  const Field& f = co.field;
  Algebra k = scalar_algebra(f);
  Coring c;
  c.base = k;
  c.dim = co.dim;
  c.lact = Matrix::identity(f, co.dim);
  c.ract = Matrix::identity(f, co.dim);
  c.cc = tensor_over_A({k, Side::right, co.dim, c.ract}, {k, Side::left, co.dim, c.lact});
  c.comul = c.cc.q.projection * co.comul;
  c.counit = co.counit;
  return c;
}

std::vector<std::string> check_coring(const Coring& c) {
  const Field& f = c.base.field;
  std::size_t na = c.base.dim, nc = c.dim;
  if (c.lact.rows() != nc || c.lact.cols() != na * nc || c.ract.rows() != nc ||
      c.ract.cols() != nc * na || c.cc.q.ambient != nc * nc || c.comul.rows() != c.cc.dim() ||
      c.comul.cols() != nc || c.counit.rows() != na || c.counit.cols() != nc)
    return {"shape"};

  std::vector<std::string> bad;
  Matrix ia = Matrix::identity(f, na);
  Matrix ic = Matrix::identity(f, nc);
  if (!check_module(c.left_module()).empty()) bad.push_back("left-action");
  if (!check_module(c.right_module()).empty()) bad.push_back("right-action");
  if (c.lact * ia.kron(c.ract) != c.ract * c.lact.kron(ia)) bad.push_back("action-commute");
  if (!bad.empty()) return bad;  // the rest presumes a genuine bimodule

  if (c.counit * c.lact != c.base.mul * ia.kron(c.counit)) bad.push_back("counit-left-linear");
  if (c.counit * c.ract != c.base.mul * c.counit.kron(ia)) bad.push_back("counit-right-linear");

  try {
    Matrix lcc = induced_on_quotients(c.lact.kron(ic), tensor_quotient_left(f, na, c.cc.q), c.cc.q);
    if (c.comul * c.lact != lcc * ia.kron(c.comul)) bad.push_back("comul-left-linear");
  } catch (const coherence_error&) {
    bad.push_back("comul-left-linear");
  }
  try {
    Matrix rcc = induced_on_quotients(ic.kron(c.ract), tensor_quotient_right(f, c.cc.q, na), c.cc.q);
    if (c.comul * c.ract != rcc * c.comul.kron(ia)) bad.push_back("comul-right-linear");
  } catch (const coherence_error&) {
    bad.push_back("comul-right-linear");
  }

  ChainTensor ccc = chain_quotient({f, {nc, nc, nc}, na, {c.ract, c.ract}, {c.lact, c.lact}});
  Matrix dl = c.comul_lift();
  if (ccc.q.projection * dl.kron(ic) * dl != ccc.q.projection * ic.kron(dl) * dl)
    bad.push_back("coassociativity");

  if (c.lact * c.counit.kron(ic) * dl != ic) bad.push_back("counit-law-left");
  if (c.ract * ic.kron(c.counit) * dl != ic) bad.push_back("counit-law-right");
  return bad;
}

bool coring_grouplike(const Coring& c, const Vec& g) {
  const Field& f = c.base.field;
  return eq_vec(f, c.comul.apply(g), c.cc.pure(f, g, g)) &&
         eq_vec(f, c.counit.apply(g), c.base.unit);
}

std::vector<std::string> check_coring_morphism(const Coring& c, const Coring& d,
                                               const Matrix& alpha, const Matrix& gamma) {
  const Field& f = c.base.field;
  std::size_t na = c.base.dim, nb = d.base.dim;
  if (alpha.rows() != nb || alpha.cols() != na || gamma.rows() != d.dim || gamma.cols() != c.dim)
    return {"shape"};
  std::vector<std::string> bad;

  if (alpha * c.base.mul != d.base.mul * alpha.kron(alpha)) bad.push_back("alpha-multiplicative");
  if (!eq_vec(f, alpha.apply(c.base.unit), d.base.unit)) bad.push_back("alpha-unital");
  if (gamma * c.lact != d.lact * alpha.kron(gamma)) bad.push_back("gamma-left-linear");
  if (gamma * c.ract != d.ract * gamma.kron(alpha)) bad.push_back("gamma-right-linear");

  // chi realises D (x)_A D -> D (x)_B D on lifted representatives.
  if (d.cc.q.projection * gamma.kron(gamma) * c.comul_lift() != d.comul * gamma)
    bad.push_back("comul-compatible");
  if (d.counit * gamma != alpha * c.counit) bad.push_back("counit-compatible");
  return bad;
}

std::optional<Matrix> find_coring_isomorphism(const Coring& c, const Coring& d) {
  const Field& f = c.base.field;
  if (!(f == d.base.field) || c.base.mul != d.base.mul || c.dim != d.dim) return std::nullopt;
  std::size_t na = c.base.dim;
  Matrix ia = Matrix::identity(f, na);

  auto lin = [&](const std::function<Matrix(const Matrix&)>& phi) {
    return linearize(f, d.dim, c.dim, phi);
  };
  Matrix left_sys = lin([&](const Matrix& g) { return g * c.lact - d.lact * ia.kron(g); });
  Matrix right_sys = lin([&](const Matrix& g) { return g * c.ract - d.ract * g.kron(ia); });
  Matrix counit_sys = lin([&](const Matrix& g) { return d.counit * g; });

  auto x = solve_affine({{left_sys, zero_vec(left_sys.rows())},
                         {right_sys, zero_vec(right_sys.rows())},
                         {counit_sys, flatten(c.counit)}});
  if (!x) return std::nullopt;
  Matrix gamma = unflatten(f, d.dim, c.dim, *x);
  if (rank(gamma) != c.dim) return std::nullopt;
  if (!check_coring_morphism(c, d, ia, gamma).empty()) return std::nullopt;
  return gamma;
}

}  // namespace forge
