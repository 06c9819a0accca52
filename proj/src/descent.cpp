#include "forge/descent.hpp"

#include <stdexcept>
#include <string>

namespace forge {

namespace {

Matrix map_span(const Field& f, std::size_t rows, std::size_t cols,
                const std::vector<Matrix>& basis) {
  Matrix span(f, rows * cols, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) span.set_col(b, flatten(basis[b]));
  return span;
}

Vec coords_in(const Matrix& span, const Matrix& m, const char* who) {
  auto c = solve(span, flatten(m));
  if (!c) throw std::logic_error(std::string(who) + ": map lies outside the expected span");
  return *c;
}

Matrix combine(const Field& f, const std::vector<Matrix>& basis, const Vec& coords,
               std::size_t rows, std::size_t cols) {
  Matrix out(f, rows, cols);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (f.is_zero(coords[b])) continue;
    out = out + basis[b].scaled(coords[b]);
  }
  return out;
}

// S (x) M -> M, s (x) m -> s(m), through the basis operators of S.
Matrix endo_multiplication(const Field& f, const EndoRing& s, std::size_t mdim) {
  Matrix act(f, mdim, s.basis.size() * mdim);
  for (std::size_t t = 0; t < s.basis.size(); ++t)
    for (std::size_t j = 0; j < mdim; ++j)
      act.set_col(tensor_index(t, j, mdim), s.basis[t].col_vec(j));
  return act;
}

// Solutions L of L . dom_ops[t] = cod_ops[t] . L, one unknown rows x cols
// matrix, as a basis in kernel order.
std::vector<Matrix> intertwiner_basis(const Field& f, std::size_t rows, std::size_t cols,
                                      const std::vector<Matrix>& dom_ops,
                                      const std::vector<Matrix>& cod_ops) {
  Matrix sys(f, 0, rows * cols);
  for (std::size_t t = 0; t < dom_ops.size(); ++t) {
    const Matrix& d = dom_ops[t];
    const Matrix& c = cod_ops[t];
    sys = sys.vstack(linearize(f, rows, cols, [&](const Matrix& l) { return l * d - c * l; }));
  }
  Matrix ker = kernel_basis(sys);
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < ker.cols(); ++j)
    out.push_back(unflatten(f, rows, cols, ker.col_vec(j)));
  return out;
}

// Composition algebra on a basis of module endomorphisms.
Algebra composition_ring(const Field& f, const std::vector<Matrix>& basis, std::size_t mdim,
                         const char* who) {
  std::size_t n = basis.size();
  Matrix span = map_span(f, mdim, mdim, basis);
  Matrix mul(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mul.set_col(tensor_index(i, j, n), coords_in(span, basis[i] * basis[j], who));
  Vec unit = coords_in(span, Matrix::identity(f, mdim), who);
  return Algebra{f, n, mul, unit};
}

// The operator x -> v . xi(x) on M for a module element v and a functional
// xi: M -> A.
Matrix scaled_functional(const Comodule& m, const Vec& v, const Matrix& xi) {
  const Field& f = m.coring.base.field;
  Matrix ia = Matrix::identity(f, m.coring.base.dim);
  return m.action * Matrix::column(f, v).kron(ia) * xi;
}

struct HatRing {
  std::vector<Matrix> basis;  // all module endomorphisms of M over the base
  Matrix span;                // flattened basis columns
  Algebra ring;
  Vec one;  // coordinates of the identity operator
  std::vector<Matrix> right_by_s;  // per S-basis element t, coords of b . s_t
  std::vector<Matrix> left_by_s;   // per S-basis element t, coords of s_t . b
};

HatRing hat_ring(const GaloisDatum& g, const char* who) {
  const Field& f = g.m.coring.base.field;
  std::size_t md = g.m.dim;
  HatRing h;
  h.basis = module_hom(g.m.module(), g.m.module());
  h.span = map_span(f, md, md, h.basis);
  h.ring = composition_ring(f, h.basis, md, who);
  h.one = h.ring.unit;
  std::size_t n = h.basis.size();
  for (std::size_t t = 0; t < g.endo.basis.size(); ++t) {
    Matrix r(f, n, n), l(f, n, n);
    for (std::size_t b = 0; b < n; ++b) {
      r.set_col(b, coords_in(h.span, h.basis[b] * g.endo.basis[t], who));
      l.set_col(b, coords_in(h.span, g.endo.basis[t] * h.basis[b], who));
    }
    h.right_by_s.push_back(r);
    h.left_by_s.push_back(l);
  }
  return h;
}

// Unit-preserving sigma: full endomorphisms -> S, linear over S on the
// requested sides. The unknown is r x h over the scalars.
std::optional<Matrix> sigma_search(const Field& f, const EndoRing& s, const HatRing& hat,
                                   bool right_linear, bool left_linear) {
  std::size_t r = s.basis.size(), h = hat.basis.size();
  std::vector<std::pair<Matrix, Vec>> pairs;
  for (std::size_t t = 0; t < r; ++t) {
    if (right_linear) {
      Matrix rt = s.ring.right_mult(unit_vec(r, t));
      const Matrix& ph = hat.right_by_s[t];
      pairs.emplace_back(
          linearize(f, r, h, [&](const Matrix& sg) { return sg * ph - rt * sg; }),
          zero_vec(r * h));
    }
    if (left_linear) {
      Matrix lt = s.ring.left_mult(unit_vec(r, t));
      const Matrix& lh = hat.left_by_s[t];
      pairs.emplace_back(
          linearize(f, r, h, [&](const Matrix& sg) { return sg * lh - lt * sg; }),
          zero_vec(r * h));
    }
  }
  Matrix one_col = Matrix::column(f, hat.one);
  pairs.emplace_back(linearize(f, r, h, [&](const Matrix& sg) { return sg * one_col; }),
                     s.ring.unit);
  auto sol = solve_affine(pairs);
  if (!sol) return std::nullopt;
  return unflatten(f, r, h, *sol);
}

}  // namespace

Comodule cofree_comodule(const Comodule& m) {
  if (m.side != CoSide::right)
    throw std::invalid_argument("cofree_comodule: needs a right comodule");
  const Coring& c = m.coring;
  const Field& f = c.base.field;
  Matrix im = Matrix::identity(f, m.dim);
  Matrix ic = Matrix::identity(f, c.dim);
  Matrix act = induced_on_quotients(im.kron(c.ract),
                                    tensor_quotient_right(f, m.mc.q, c.base.dim), m.mc.q);
  AModule mod{c.base, Side::right, m.mc.dim(), act};
  BalancedTensor mc2 = tensor_over_A(mod, c.left_module());
  Matrix amb = mc2.q.projection * m.mc.q.projection.kron(ic) * im.kron(c.comul_lift());
  Matrix co = induced_on_quotients(amb, m.mc.q, identity_quotient(f, mc2.dim()));
  Comodule w{c, CoSide::right, mod.dim, act, mc2, co};
  auto bad = check_comodule(w);
  if (!bad.empty()) throw std::logic_error("cofree_comodule: axioms fail: " + bad.front());
  return w;
}

InductionDatum induction_datum(const GaloisDatum& g, const CoringMorphism& f) {
  auto bad = check_coring_morphism(f);
  if (!bad.empty())
    throw std::invalid_argument("induction_datum: morphism fails " + bad.front());
  const Coring& c = g.m.coring;
  if (f.source.dim != c.dim || f.source.base.dim != c.base.dim ||
      f.source.comul != c.comul || f.source.ract != c.ract)
    throw std::invalid_argument("induction_datum: morphism does not start at the coring of the datum");
  const Algebra& a = f.source.base;
  const Algebra& b = f.target.base;
  const Field& fl = a.field;
  Matrix ib = Matrix::identity(fl, b.dim);

  Comodule induced = induced_comodule(g.m, f);
  AModule b_left{a, Side::left, b.dim, b.mul * f.alpha.kron(ib)};
  BalancedTensor icar = tensor_over_A(g.m.module(), b_left);
  if (icar.dim() != induced.dim)
    throw std::logic_error("induction_datum: carrier does not match the induced comodule");
  auto bad_ind = check_comodule(induced);
  if (!bad_ind.empty())
    throw std::logic_error("induction_datum: induced comodule fails " + bad_ind.front());

  Comodule left = induced_left_comodule(regular_left_comodule(f.source), f);
  AModule b_right{a, Side::right, b.dim, b.mul * ib.kron(f.alpha)};
  BalancedTensor lcar = tensor_over_A(b_right, f.source.left_module());
  if (lcar.dim() != left.dim)
    throw std::logic_error("induction_datum: carrier does not match the left comodule");
  auto bad_left = check_comodule(left);
  if (!bad_left.empty())
    throw std::logic_error("induction_datum: left comodule fails " + bad_left.front());

  EndoRing t = endomorphism_ring(induced);
  return InductionDatum{f, g, induced, icar, t, left, lcar};
}

ThetaMap theta_map(const InductionDatum& d, const Comodule& n) {
  const Coring& target = d.morphism.target;
  if (n.side != CoSide::right || n.coring.dim != target.dim ||
      n.coring.base.dim != target.base.dim)
    throw std::invalid_argument("theta_map: n must be a right comodule over the target coring");
  if (!is_galois(d.source).galois)
    throw std::invalid_argument("theta_map: source datum is not Galois");
  const Field& fl = target.base.field;
  const EndoRing& s = d.source.endo;
  const Comodule& m = d.source.m;
  std::size_t md = m.dim;
  std::size_t sd = s.basis.size();
  std::size_t cd = m.coring.dim;
  Matrix ib = Matrix::identity(fl, target.base.dim);
  Matrix ic = Matrix::identity(fl, cd);

  ThetaMap out;
  out.homs = colinear_hom(d.induced, n);
  std::size_t hd = out.homs.size();
  Matrix span = map_span(fl, n.dim, d.induced.dim, out.homs);
  Matrix hact(fl, hd, hd * sd);
  for (std::size_t t = 0; t < sd; ++t) {
    Matrix sb = induced_on_quotients(s.basis[t].kron(ib), d.induced_carrier.q,
                                     d.induced_carrier.q);
    for (std::size_t b = 0; b < hd; ++b) {
      auto c = solve(span, flatten(out.homs[b] * sb));
      if (!c) throw std::logic_error("theta_map: hom space not closed under the S-action");
      hact.set_col(tensor_index(b, t, sd), *c);
    }
  }
  AModule homs_mod{s.ring, Side::right, hd, hact};
  AModule m_mod{s.ring, Side::left, md, endo_multiplication(fl, s, md)};
  out.domain = tensor_over_A(homs_mod, m_mod);
  out.codomain = cotensor(n, d.left_comodule);

  Matrix to_ind = d.induced_carrier.q.projection *
                  Matrix::identity(fl, md).kron(Matrix::column(fl, target.base.unit));
  Matrix to_left = d.left_carrier.q.projection *
                   Matrix::column(fl, target.base.unit).kron(ic);
  Matrix rho = m.coaction_lift();
  Matrix amb(fl, out.codomain.carrier.dim(), hd * md);
  for (std::size_t p = 0; p < hd; ++p) {
    std::vector<Vec> applied;
    for (std::size_t i = 0; i < md; ++i) applied.push_back(out.homs[p].apply(to_ind.col_vec(i)));
    for (std::size_t j = 0; j < md; ++j) {
      Vec w = rho.col_vec(j);
      Vec val = zero_vec(out.codomain.carrier.dim());
      for (std::size_t i = 0; i < md; ++i)
        for (std::size_t t = 0; t < cd; ++t) {
          const Scalar& c = w[tensor_index(i, t, cd)];
          if (fl.is_zero(c)) continue;
          Vec term = out.codomain.carrier.pure(fl, applied[i], to_left.col_vec(t));
          val = add_vec(fl, val, scale_vec(fl, c, term));
        }
      amb.set_col(tensor_index(p, j, md), val);
    }
  }
  Matrix on_domain =
      induced_on_quotients(amb, out.domain.q, identity_quotient(fl, out.codomain.carrier.dim()));
  out.theta = Matrix(fl, out.codomain.basis.cols(), out.domain.dim());
  for (std::size_t j = 0; j < out.domain.dim(); ++j) {
    auto c = solve(out.codomain.basis, on_domain.col_vec(j));
    if (!c) throw std::logic_error("theta_map: image lands outside the cotensor space");
    out.theta.set_col(j, *c);
  }
  out.bijective =
      out.domain.dim() == out.codomain.basis.cols() && rank(out.theta) == out.theta.cols();
  return out;
}

bool theta_natural(const InductionDatum& d, const Comodule& n, const Comodule& n2,
                   const Matrix& w) {
  const Field& fl = d.morphism.target.base.field;
  if (w.rows() != n2.dim || w.cols() != n.dim)
    throw std::invalid_argument("theta_natural: map has the wrong shape");
  Matrix ib = Matrix::identity(fl, d.morphism.target.base.dim);
  if (w * n.action != n2.action * w.kron(ib))
    throw std::invalid_argument("theta_natural: map is not linear over the base");
  Matrix id_d = Matrix::identity(fl, d.morphism.target.dim);
  Matrix wd = induced_on_quotients(w.kron(id_d), n.mc.q, n2.mc.q);
  if (n2.coaction * w != wd * n.coaction)
    throw std::invalid_argument("theta_natural: map is not colinear");

  ThetaMap t1 = theta_map(d, n);
  ThetaMap t2 = theta_map(d, n2);
  Matrix span2 = map_span(fl, n2.dim, d.induced.dim, t2.homs);
  Matrix homw(fl, t2.homs.size(), t1.homs.size());
  for (std::size_t p = 0; p < t1.homs.size(); ++p)
    homw.set_col(p, coords_in(span2, w * t1.homs[p], "theta_natural"));
  Matrix im = Matrix::identity(fl, d.source.m.dim);
  Matrix dmove = induced_on_quotients(homw.kron(im), t1.domain.q, t2.domain.q);

  Matrix il = Matrix::identity(fl, d.left_comodule.dim);
  Matrix wbox =
      induced_on_quotients(w.kron(il), t1.codomain.carrier.q, t2.codomain.carrier.q);
  Matrix wcoords(fl, t2.codomain.basis.cols(), t1.codomain.basis.cols());
  for (std::size_t j = 0; j < t1.codomain.basis.cols(); ++j) {
    auto c = solve(t2.codomain.basis, wbox.apply(t1.codomain.basis.col_vec(j)));
    if (!c) throw std::logic_error("theta_natural: induced map leaves the cotensor space");
    wcoords.set_col(j, *c);
  }
  return wcoords * t1.theta == t2.theta * dmove;
}

Matrix gamma_tilde_map(const InductionDatum& d) {
  const Coring& target = d.morphism.target;
  const Field& fl = target.base.field;
  Matrix ib = Matrix::identity(fl, target.base.dim);
  Matrix push = target.lact * ib.kron(d.morphism.gamma);
  return induced_on_quotients(push, d.left_carrier.q, identity_quotient(fl, target.dim));
}

std::optional<Matrix> gamma_tilde_split(const InductionDatum& d) {
  const Coring& target = d.morphism.target;
  const Field& fl = target.base.field;
  Matrix gt = gamma_tilde_map(d);
  std::vector<Matrix> homs = colinear_hom(regular_left_comodule(target), d.left_comodule);
  Matrix sys(fl, target.dim * target.dim, homs.size());
  for (std::size_t b = 0; b < homs.size(); ++b) sys.set_col(b, flatten(gt * homs[b]));
  auto lambda = solve(sys, flatten(Matrix::identity(fl, target.dim)));
  if (!lambda) return std::nullopt;
  Matrix sec = combine(fl, homs, *lambda, d.left_comodule.dim, target.dim);
  if (gt * sec != Matrix::identity(fl, target.dim))
    throw std::logic_error("gamma_tilde_split: combined section fails to split the map");
  return sec;
}

InducedPrincipalVerdict induce_principal(const InductionDatum& d) {
  InducedPrincipalVerdict v;
  v.source_principal = principal_verdict(d.source).principal;
  v.split = gamma_tilde_split(d).has_value();
  v.applicable = v.source_principal && v.split;
  if (!v.applicable) return v;
  GaloisDatum ind = [&] {
    try {
      return galois_datum(d.induced);
    } catch (const std::invalid_argument&) {
      throw std::logic_error(
          "induce_principal: induced comodule is not finitely generated projective");
    }
  }();
  PrincipalVerdict pv = principal_verdict(ind);
  v.induced = pv;
  v.principal = pv.principal;
  if (!v.principal)
    throw std::logic_error("induce_principal: hypotheses hold but the induced comodule is not principal");
  return v;
}

DualityIso duality_iso(const GaloisDatum& g, const Comodule& w) {
  if (!principal_verdict(g).principal)
    throw std::invalid_argument("duality_iso: datum is not principal");
  if (w.side != CoSide::right || w.coring.dim != g.m.coring.dim ||
      w.coring.base.dim != g.m.coring.base.dim)
    throw std::invalid_argument("duality_iso: w must be a right comodule over the same coring");
  const Field& fl = g.m.coring.base.field;
  const EndoRing& s = g.endo;
  std::size_t r = s.basis.size();

  DualityIso out;
  out.into = colinear_hom(w, g.m);
  out.from = colinear_hom(g.m, w);
  std::size_t p = out.into.size();
  std::size_t q = out.from.size();

  Matrix fspan = map_span(fl, w.dim, g.m.dim, out.from);
  std::vector<Matrix> dom_ops, cod_ops;
  for (std::size_t t = 0; t < r; ++t) {
    Matrix pt(fl, q, q);
    for (std::size_t b = 0; b < q; ++b)
      pt.set_col(b, coords_in(fspan, out.from[b] * s.basis[t], "duality_iso"));
    dom_ops.push_back(pt);
    cod_ops.push_back(s.ring.right_mult(unit_vec(r, t)));
  }
  out.functionals = intertwiner_basis(fl, r, q, dom_ops, cod_ops);

  Matrix sspan = map_span(fl, g.m.dim, g.m.dim, s.basis);
  Matrix lspan = map_span(fl, r, q, out.functionals);
  out.iso = Matrix(fl, out.functionals.size(), p);
  for (std::size_t i = 0; i < p; ++i) {
    Matrix di(fl, r, q);
    for (std::size_t b = 0; b < q; ++b)
      di.set_col(b, coords_in(sspan, out.into[i] * out.from[b], "duality_iso"));
    out.iso.set_col(i, coords_in(lspan, di, "duality_iso"));
  }
  out.bijective = p == out.functionals.size() && rank(out.iso) == p;

  Matrix ispan = map_span(fl, g.m.dim, w.dim, out.into);
  out.left_linear = true;
  for (std::size_t t = 0; t < r && out.left_linear; ++t) {
    Matrix lt = s.ring.left_mult(unit_vec(r, t));
    for (std::size_t i = 0; i < p && out.left_linear; ++i) {
      Vec moved = coords_in(ispan, s.basis[t] * out.into[i], "duality_iso");
      Vec lhs = out.iso.apply(moved);
      Matrix li = combine(fl, out.functionals, out.iso.col_vec(i), r, q);
      Vec rhs = coords_in(lspan, lt * li, "duality_iso");
      out.left_linear = eq_vec(fl, lhs, rhs);
    }
  }
  return out;
}

ReflexivityCheck reflexivity_check(const GaloisDatum& g) {
  if (!is_galois(g).galois)
    throw std::invalid_argument("reflexivity_check: datum is not Galois");
  const Field& fl = g.m.coring.base.field;
  const Algebra& sr = g.endo.ring;
  std::size_t r = sr.dim;
  std::vector<Matrix> rt, lt;
  for (std::size_t t = 0; t < r; ++t) {
    rt.push_back(sr.right_mult(unit_vec(r, t)));
    lt.push_back(sr.left_mult(unit_vec(r, t)));
  }

  ReflexivityCheck out;
  out.functionals = intertwiner_basis(fl, r, r, rt, rt);
  std::size_t y = out.functionals.size();
  Matrix yspan = map_span(fl, r, r, out.functionals);
  Matrix dmat(fl, y, r);
  for (std::size_t i = 0; i < r; ++i)
    dmat.set_col(i, coords_in(yspan, lt[i], "reflexivity_check"));
  auto dinv = inverse(dmat);
  if (!dinv)
    throw std::invalid_argument("reflexivity_check: duality on the endomorphism ring is not invertible");

  out.twice = Matrix(fl, r * y, r);
  out.evaluation = Matrix(fl, r * y, r);
  for (std::size_t i = 0; i < r; ++i) {
    Matrix tw(fl, r, y), ev(fl, r, y);
    for (std::size_t b = 0; b < y; ++b) {
      tw.set_col(b, sr.multiply(unit_vec(r, i), dinv->col_vec(b)));
      ev.set_col(b, out.functionals[b].col_vec(i));
    }
    out.twice.set_col(i, flatten(tw));
    out.evaluation.set_col(i, flatten(ev));
  }
  out.agree = out.twice == out.evaluation;

  // the double-dual space: right-linear maps out of the functional space,
  // where a ring element acts on a functional through left multiplication
  // inside the argument
  std::vector<Matrix> arg_ops;
  for (std::size_t t = 0; t < r; ++t) {
    Matrix a(fl, y, y);
    for (std::size_t b = 0; b < y; ++b)
      a.set_col(b, coords_in(yspan, out.functionals[b] * lt[t], "reflexivity_check"));
    arg_ops.push_back(a);
  }
  std::vector<Matrix> dd = intertwiner_basis(fl, r, y, arg_ops, rt);
  Matrix ddspan = map_span(fl, r, y, dd);
  for (std::size_t i = 0; i < r; ++i)
    if (!solve(ddspan, out.twice.col_vec(i)))
      throw std::logic_error("reflexivity_check: double dual image leaves the linear space");
  out.bijective = dd.size() == r && rank(out.twice) == r;
  return out;
}

EntwinedBase entwined_base(const Entwining& e, const Vec& grouplike) {
  auto bad = check_bowtie(e);
  if (!bad.empty()) throw std::invalid_argument("entwined_base: entwining fails " + bad.front());
  if (!verify_grouplike(e.coalgebra, grouplike))
    throw std::invalid_argument("entwined_base: element is not group-like");
  const Field& fl = e.algebra.field;
  Coring cor = coring_from_entwining(e);
  Vec g = tensor_vec(fl, e.algebra.unit, grouplike);
  Comodule rb = grouplike_comodule(cor, g);
  Comodule lb = grouplike_left_comodule(cor, g);
  return EntwinedBase{e, grouplike, cor, rb, lb};
}

AssociatedModules associated_modules(const EntwinedBase& b, const Comodule& u,
                                     const Comodule& x) {
  const Field& fl = b.e.algebra.field;
  std::size_t ad = b.e.algebra.dim;
  std::size_t cd = b.e.coalgebra.dim;
  if (u.side != CoSide::left || u.coring.base.dim != 1 || u.coring.dim != cd)
    throw std::invalid_argument("associated_modules: u must be a left comodule over the coalgebra");
  if (x.side != CoSide::right || x.coring.base.dim != 1 || x.coring.dim != cd)
    throw std::invalid_argument("associated_modules: x must be a right comodule over the coalgebra");
  std::size_t ud = u.dim;
  std::size_t xd = x.dim;
  Matrix ia = Matrix::identity(fl, ad);
  Matrix ic = Matrix::identity(fl, cd);
  Matrix iu = Matrix::identity(fl, ud);
  Matrix ix = Matrix::identity(fl, xd);
  Matrix unit_col = Matrix::column(fl, b.e.algebra.unit);
  Vec rho_one = b.e.psi.apply(tensor_vec(fl, b.grouplike, b.e.algebra.unit));
  Matrix unit_then = b.e.algebra.mul.kron(ic) * ia.kron(Matrix::column(fl, rho_one));
  Matrix gcol = Matrix::column(fl, tensor_vec(fl, b.e.algebra.unit, b.grouplike));
  Matrix rho_a = b.e.psi * Matrix::column(fl, b.grouplike).kron(ia);
  Matrix u_co = u.coaction_lift();
  Matrix x_co = x.coaction_lift();

  AssociatedModules out;

  {
    AModule vmod{b.e.algebra, Side::left, ad * ud, b.e.algebra.mul.kron(iu)};
    BalancedTensor vmc = tensor_over_A(b.coring.right_module(), vmod);
    Matrix ins = Matrix::identity(fl, ad * cd).kron(unit_col).kron(iu);
    Matrix co = vmc.q.projection * ins * ia.kron(u_co);
    Comodule v{b.coring, CoSide::left, ad * ud, vmod.action, vmc, co};
    auto bad = check_comodule(v);
    if (!bad.empty())
      throw std::logic_error("associated_modules: extended left comodule fails " + bad.front());
    out.extended_left = v;
    out.left_homs = colinear_hom(v, b.left_base);
    Matrix law = linearize(fl, ad, ud, [&](const Matrix& fm) {
      return b.e.psi * ic.kron(fm) * u_co - unit_then * fm;
    });
    Matrix ker = kernel_basis(law);
    for (std::size_t j = 0; j < ker.cols(); ++j)
      out.entwined_homs.push_back(unflatten(fl, ad, ud, ker.col_vec(j)));

    Matrix wspan = map_span(fl, ad, ad * ud, out.left_homs);
    Matrix pspan = map_span(fl, ad, ud, out.entwined_homs);
    bool ok = true;
    Matrix restr(fl, out.entwined_homs.size(), out.left_homs.size());
    for (std::size_t bb = 0; bb < out.left_homs.size() && ok; ++bb) {
      auto c = solve(pspan, flatten(out.left_homs[bb] * unit_col.kron(iu)));
      ok = c.has_value();
      if (c) restr.set_col(bb, *c);
    }
    Matrix ext(fl, out.left_homs.size(), out.entwined_homs.size());
    for (std::size_t bb = 0; bb < out.entwined_homs.size() && ok; ++bb) {
      auto c = solve(wspan, flatten(b.e.algebra.mul * ia.kron(out.entwined_homs[bb])));
      ok = c.has_value();
      if (c) ext.set_col(bb, *c);
    }
    out.left_restriction = restr;
    out.left_iso = ok && restr * ext == Matrix::identity(fl, out.entwined_homs.size()) &&
                   ext * restr == Matrix::identity(fl, out.left_homs.size());
    out.left_fixed =
        kernel_basis(v.coaction - v.mc.q.projection * gcol.kron(Matrix::identity(fl, ad * ud)));
    out.left_cotensor = kernel_basis(rho_a.kron(iu) - ia.kron(u_co));
    out.left_spaces_equal = span_equal(out.left_fixed, out.left_cotensor);
  }

  {
    AModule wmod{b.e.algebra, Side::right, xd * ad, ix.kron(b.e.algebra.mul)};
    BalancedTensor wmc = tensor_over_A(wmod, b.coring.left_module());
    Matrix pre = ix.kron(b.e.psi) * x_co.kron(ia);
    Matrix ins = Matrix::identity(fl, xd * ad).kron(unit_col).kron(ic);
    Comodule w{b.coring, CoSide::right, xd * ad, wmod.action, wmc, wmc.q.projection * ins * pre};
    auto bad = check_comodule(w);
    if (!bad.empty())
      throw std::logic_error("associated_modules: extended right comodule fails " + bad.front());
    out.extended_right = w;
    out.right_homs = colinear_hom(w, b.right_base);
    Matrix law = linearize(fl, ad, xd, [&](const Matrix& fm) {
      return rho_a * fm - fm.kron(ic) * x_co;
    });
    Matrix ker = kernel_basis(law);
    for (std::size_t j = 0; j < ker.cols(); ++j)
      out.coalgebra_homs.push_back(unflatten(fl, ad, xd, ker.col_vec(j)));

    Matrix wspan = map_span(fl, ad, xd * ad, out.right_homs);
    Matrix pspan = map_span(fl, ad, xd, out.coalgebra_homs);
    bool ok = true;
    Matrix restr(fl, out.coalgebra_homs.size(), out.right_homs.size());
    for (std::size_t bb = 0; bb < out.right_homs.size() && ok; ++bb) {
      auto c = solve(pspan, flatten(out.right_homs[bb] * ix.kron(unit_col)));
      ok = c.has_value();
      if (c) restr.set_col(bb, *c);
    }
    Matrix ext(fl, out.right_homs.size(), out.coalgebra_homs.size());
    for (std::size_t bb = 0; bb < out.coalgebra_homs.size() && ok; ++bb) {
      auto c = solve(wspan, flatten(b.e.algebra.mul * out.coalgebra_homs[bb].kron(ia)));
      ok = c.has_value();
      if (c) ext.set_col(bb, *c);
    }
    out.right_restriction = restr;
    out.right_iso = ok && restr * ext == Matrix::identity(fl, out.coalgebra_homs.size()) &&
                    ext * restr == Matrix::identity(fl, out.right_homs.size());
    out.right_fixed = kernel_basis(
        w.coaction - w.mc.q.projection * Matrix::identity(fl, xd * ad).kron(gcol));
    out.right_zero_space = kernel_basis(pre - ix.kron(unit_then));
    out.right_spaces_equal = span_equal(out.right_fixed, out.right_zero_space);
  }

  return out;
}

SplitExtensionCheck split_extension_check(const GaloisDatum& g) {
  GaloisVerdict gv = is_galois(g);
  if (!gv.galois) throw std::invalid_argument("split_extension_check: datum is not Galois");
  const Field& fl = g.m.coring.base.field;
  const EndoRing& s = g.endo;
  const Comodule& m = g.m;
  std::size_t md = m.dim;
  std::size_t cd = m.coring.dim;
  std::size_t r = s.basis.size();
  std::size_t ds = g.dual.functionals.size();
  Matrix ic = Matrix::identity(fl, cd);

  SplitExtensionCheck out;
  HatRing hat = hat_ring(g, "split_extension_check");
  std::size_t h = hat.basis.size();
  out.full_endo = EndoRing{hat.basis, hat.ring};

  std::vector<Matrix> rt;
  for (std::size_t t = 0; t < r; ++t) rt.push_back(s.ring.right_mult(unit_vec(r, t)));
  out.sigma_basis = intertwiner_basis(fl, r, h, hat.right_by_s, rt);

  Comodule cofree = cofree_comodule(m);
  out.retraction_basis = colinear_hom(cofree, m);

  // coordinates, in the full ring, of the operators x -> m_i . xi_a(x)
  std::vector<std::vector<Vec>> hatc(md);
  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t a = 0; a < ds; ++a)
      hatc[i].push_back(coords_in(
          hat.span, scaled_functional(m, unit_vec(md, i), g.dual.functionals[a]),
          "split_extension_check"));

  Matrix caninv_amb = g.carrier.q.section * *gv.can_inverse;

  auto theta_of = [&](const Matrix& sigma) -> Matrix {
    Matrix amb(fl, md, md * cd);
    for (std::size_t j = 0; j < cd; ++j) {
      Vec w = caninv_amb.col_vec(j);
      for (std::size_t i = 0; i < md; ++i) {
        Vec val = zero_vec(md);
        for (std::size_t a = 0; a < ds; ++a)
          for (std::size_t u = 0; u < md; ++u) {
            const Scalar& cw = w[tensor_index(a, u, md)];
            if (fl.is_zero(cw)) continue;
            Matrix op = combine(fl, s.basis, sigma.apply(hatc[i][a]), md, md);
            val = add_vec(fl, val, scale_vec(fl, cw, op.col_vec(u)));
          }
        amb.set_col(tensor_index(i, j, cd), val);
      }
    }
    return induced_on_quotients(amb, m.mc.q, identity_quotient(fl, md));
  };
  auto theta_inv_of = [&](const Matrix& pi) -> Matrix {
    Matrix sspan = map_span(fl, md, md, s.basis);
    Matrix sig(fl, r, h);
    for (std::size_t b = 0; b < h; ++b) {
      Matrix mid = induced_on_quotients(hat.basis[b].kron(ic), m.mc.q, m.mc.q);
      sig.set_col(b, coords_in(sspan, pi * mid * m.coaction, "split_extension_check"));
    }
    return sig;
  };

  Matrix rspan = map_span(fl, md, cofree.dim, out.retraction_basis);
  out.theta = Matrix(fl, out.retraction_basis.size(), out.sigma_basis.size());
  for (std::size_t z = 0; z < out.sigma_basis.size(); ++z)
    out.theta.set_col(z, coords_in(rspan, theta_of(out.sigma_basis[z]), "split_extension_check"));
  Matrix sigspan = map_span(fl, r, h, out.sigma_basis);
  out.theta_inverse = Matrix(fl, out.sigma_basis.size(), out.retraction_basis.size());
  for (std::size_t p = 0; p < out.retraction_basis.size(); ++p)
    out.theta_inverse.set_col(
        p, coords_in(sigspan, theta_inv_of(out.retraction_basis[p]), "split_extension_check"));
  out.theta_bijective =
      out.sigma_basis.size() == out.retraction_basis.size() &&
      out.theta * out.theta_inverse ==
          Matrix::identity(fl, out.retraction_basis.size()) &&
      out.theta_inverse * out.theta == Matrix::identity(fl, out.sigma_basis.size());

  out.right_sigma = sigma_search(fl, s, hat, true, false);
  out.bimodule_sigma = sigma_search(fl, s, hat, true, true);
  out.retraction = is_relatively_injective(m);
  out.matches_injectivity = out.right_sigma.has_value() == out.retraction.has_value();

  if (out.right_sigma) out.induced_retraction = theta_of(*out.right_sigma);
  if (out.retraction) out.recovered_sigma = theta_inv_of(*out.retraction);
  if (out.matches_injectivity) {
    if (!out.right_sigma) {
      out.units_correspond = true;
    } else {
      bool retracts = *out.induced_retraction * m.coaction == Matrix::identity(fl, md);
      Vec unit_val = out.recovered_sigma->apply(hat.one);
      bool unital = eq_vec(fl, unit_val, s.ring.unit);
      coords_in(sigspan, *out.recovered_sigma, "split_extension_check");
      out.units_correspond = retracts && unital;
    }
  }
  return out;
}

std::vector<std::string> check_canonical_inverse(const GaloisDatum& g) {
  GaloisVerdict gv = is_galois(g);
  if (!gv.galois)
    throw std::invalid_argument("check_canonical_inverse: datum is not Galois");
  const Field& fl = g.m.coring.base.field;
  const EndoRing& s = g.endo;
  const Comodule& m = g.m;
  std::size_t md = m.dim;
  std::size_t cd = m.coring.dim;
  std::size_t ds = g.dual.functionals.size();
  std::size_t r = s.basis.size();
  std::vector<std::string> bad;

  Matrix caninv_amb = g.carrier.q.section * *gv.can_inverse;
  Matrix rho = m.coaction_lift();

  if (g.can_lift * caninv_amb != Matrix::identity(fl, cd)) bad.push_back("evaluation");

  bool carrier_ok = true;
  for (std::size_t b = 0; b < ds && carrier_ok; ++b)
    for (std::size_t j = 0; j < md && carrier_ok; ++j) {
      Vec lhs = g.carrier.pure(fl, unit_vec(ds, b), unit_vec(md, j));
      Vec rhs = zero_vec(g.carrier.dim());
      Vec w = rho.col_vec(j);
      for (std::size_t i = 0; i < md; ++i)
        for (std::size_t t = 0; t < cd; ++t) {
          const Scalar& cw = w[tensor_index(i, t, cd)];
          if (fl.is_zero(cw)) continue;
          Vec aval = g.dual.functionals[b].col_vec(i);
          Vec moved =
              g.comatrix.lact.apply(tensor_vec(fl, aval, gv.can_inverse->col_vec(t)));
          rhs = add_vec(fl, rhs, scale_vec(fl, cw, moved));
        }
      carrier_ok = eq_vec(fl, lhs, rhs);
    }
  if (!carrier_ok) bad.push_back("carrier");

  HatRing hat = hat_ring(g, "check_canonical_inverse");
  std::size_t h = hat.basis.size();
  Matrix hact(fl, h, h * r);
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t b = 0; b < h; ++b)
      hact.set_col(tensor_index(b, t, r), hat.right_by_s[t].col_vec(b));
  AModule hat_mod{s.ring, Side::right, h, hact};
  AModule m_mod{s.ring, Side::left, md, endo_multiplication(fl, s, md)};
  BalancedTensor ht = tensor_over_A(hat_mod, m_mod);
  bool op_ok = true;
  for (std::size_t b = 0; b < h && op_ok; ++b)
    for (std::size_t j = 0; j < md && op_ok; ++j) {
      Vec lhs = ht.pure(fl, unit_vec(h, b), unit_vec(md, j));
      Vec rhs = zero_vec(ht.dim());
      Vec w = rho.col_vec(j);
      for (std::size_t i = 0; i < md; ++i)
        for (std::size_t t = 0; t < cd; ++t) {
          const Scalar& cw = w[tensor_index(i, t, cd)];
          if (fl.is_zero(cw)) continue;
          Vec applied = hat.basis[b].col_vec(i);
          Vec inv = caninv_amb.col_vec(t);
          for (std::size_t a = 0; a < ds; ++a)
            for (std::size_t u = 0; u < md; ++u) {
              const Scalar& iw = inv[tensor_index(a, u, md)];
              if (fl.is_zero(iw)) continue;
              Vec op = coords_in(hat.span,
                                 scaled_functional(m, applied, g.dual.functionals[a]),
                                 "check_canonical_inverse");
              Vec term = ht.pure(fl, op, unit_vec(md, u));
              rhs = add_vec(fl, rhs, scale_vec(fl, fl.mul(cw, iw), term));
            }
        }
      op_ok = eq_vec(fl, lhs, rhs);
    }
  if (!op_ok) bad.push_back("operator");
  return bad;
}

FlatnessVerdict faithful_flatness_verdict(const GaloisDatum& g) {
  FlatnessVerdict v;
  GaloisVerdict gv = is_galois(g);
  v.galois = gv.galois;
  if (!v.galois) {
    v.route = "uncertified";
    return v;
  }
  const Field& fl = g.m.coring.base.field;
  const EndoRing& s = g.endo;
  std::size_t md = g.m.dim;
  std::size_t r = s.basis.size();

  v.principal_route = principal_verdict(g).principal;
  HatRing hat = hat_ring(g, "faithful_flatness_verdict");
  auto left_sigma = sigma_search(fl, s, hat, false, true);
  auto bimodule_sigma = sigma_search(fl, s, hat, true, true);
  v.section_route = s_linear_section(s, md).has_value() && left_sigma.has_value();
  v.split_route = bimodule_sigma.has_value() &&
                  find_dual_basis(g.m.coring.left_module()).has_value();
  v.certified = v.principal_route || v.section_route || v.split_route;
  v.route = v.principal_route  ? "principal"
            : v.section_route  ? "projective-section"
            : v.split_route    ? "bimodule-splitting"
                               : "uncertified";

  AdjunctionUnit au = adjunction_unit(regular_right_module(s.ring), g.m, s);
  v.nu = au.nu;
  v.nu_bijective = au.homs.size() == r && rank(au.nu) == r;

  std::optional<Matrix> sigma = left_sigma ? left_sigma : bimodule_sigma;
  if (sigma && v.nu_bijective) {
    const DualBasis& db = g.dual.db;
    Matrix nuinv(fl, r, au.homs.size());
    for (std::size_t p = 0; p < au.homs.size(); ++p) {
      Vec val = zero_vec(r);
      for (std::size_t i = 0; i < db.elements.size(); ++i) {
        Vec img = au.homs[p].apply(db.elements[i]);
        Vec w = au.target.carrier.q.section.apply(img);
        for (std::size_t t = 0; t < r; ++t)
          for (std::size_t u = 0; u < md; ++u) {
            const Scalar& cw = w[tensor_index(t, u, md)];
            if (fl.is_zero(cw)) continue;
            Vec op = coords_in(hat.span,
                               scaled_functional(g.m, unit_vec(md, u), db.functionals[i]),
                               "faithful_flatness_verdict");
            Vec prod = s.ring.multiply(unit_vec(r, t), sigma->apply(op));
            val = add_vec(fl, val, scale_vec(fl, cw, prod));
          }
      }
      nuinv.set_col(p, val);
    }
    v.nu_formula_inverts = nuinv * au.nu == Matrix::identity(fl, r) &&
                           au.nu * nuinv == Matrix::identity(fl, au.homs.size());
  }
  return v;
}

FgpVerdict fgp_associated_check(const GaloisDatum& g, const Comodule& v) {
  if (v.side != CoSide::left || v.coring.dim != g.m.coring.dim ||
      v.coring.base.dim != g.m.coring.base.dim || v.coring.comul != g.m.coring.comul)
    throw std::invalid_argument("fgp_associated_check: v must be a left comodule over the same coring");
  if (!find_dual_basis(v.module()))
    throw std::invalid_argument(
        "fgp_associated_check: v must be finitely generated projective over the base");

  FgpVerdict out;
  GaloisVerdict gv = is_galois(g);
  if (!gv.galois) {
    out.route = "none";
    return out;
  }
  const Field& fl = g.m.coring.base.field;
  const EndoRing& s = g.endo;
  const Comodule& dual = g.dual.dual;
  std::size_t r = s.basis.size();
  std::size_t ds = g.dual.functionals.size();
  std::size_t cd = g.m.coring.dim;
  Matrix ia = Matrix::identity(fl, g.m.coring.base.dim);
  Matrix ic = Matrix::identity(fl, cd);
  Matrix ids = Matrix::identity(fl, ds);
  Matrix ir = Matrix::identity(fl, r);

  // right S-action operators on the dual, per ring basis element
  Matrix fspan = map_span(fl, g.m.coring.base.dim, g.m.dim, g.dual.functionals);
  std::vector<Matrix> op;
  for (std::size_t t = 0; t < r; ++t) {
    Matrix o(fl, ds, ds);
    for (std::size_t b = 0; b < ds; ++b)
      o.set_col(b, coords_in(fspan, g.dual.functionals[b] * s.basis[t], "fgp_associated_check"));
    op.push_back(o);
  }
  Matrix act(fl, ds, ds * r);
  for (std::size_t b = 0; b < ds; ++b)
    for (std::size_t t = 0; t < r; ++t) act.set_col(tensor_index(b, t, r), op[t].col_vec(b));

  std::vector<Matrix> rt;
  for (std::size_t t = 0; t < r; ++t) rt.push_back(s.ring.right_mult(unit_vec(r, t)));

  auto section_pairs = [&](bool equivariant) {
    std::vector<std::pair<Matrix, Vec>> pairs;
    pairs.emplace_back(linearize(fl, ds * r, ds, [&](const Matrix& sg) { return act * sg; }),
                       flatten(ids));
    for (std::size_t t = 0; t < r; ++t)
      pairs.emplace_back(linearize(fl, ds * r, ds,
                                   [&](const Matrix& sg) {
                                     return sg * op[t] - ids.kron(rt[t]) * sg;
                                   }),
                         zero_vec(ds * r * ds));
    if (equivariant) {
      const Matrix& dualact = dual.action;
      pairs.emplace_back(
          linearize(fl, ds * r, ds,
                    [&](const Matrix& sg) {
                      return sg * dualact - dualact.kron(ir) * ia.kron(sg);
                    }),
          zero_vec(ds * r * g.m.coring.base.dim * ds));
      QuotientSpace q = tensor_quotient_right(fl, dual.mc.q, r);
      Matrix lift = dual.mc.q.section * dual.coaction;
      pairs.emplace_back(
          linearize(fl, ds * r, ds,
                    [&](const Matrix& sg) {
                      return q.projection * dual.coaction_lift().kron(ir) * sg -
                             q.projection * ic.kron(sg) * lift;
                    }),
          zero_vec(q.dim * ds));
    }
    return pairs;
  };

  FlatnessVerdict fv = faithful_flatness_verdict(g);
  bool route_a = fv.certified && solve_affine(section_pairs(true)).has_value();
  bool route_b = fv.split_route && solve_affine(section_pairs(false)).has_value();
  out.route = route_a ? "equivariant-section" : route_b ? "split-extension" : "none";
  out.applicable = route_a || route_b;

  out.homs = colinear_hom(v, dual);
  if (!out.applicable) return out;

  std::size_t hd = out.homs.size();
  Matrix hspan = map_span(fl, ds, v.dim, out.homs);
  Matrix hact(fl, hd, hd * r);
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t b = 0; b < hd; ++b)
      hact.set_col(tensor_index(b, t, r),
                   coords_in(hspan, op[t] * out.homs[b], "fgp_associated_check"));
  AModule hom_mod{s.ring, Side::right, hd, hact};
  out.dual_basis = find_dual_basis(hom_mod);
  out.fgp = out.dual_basis.has_value();
  if (!out.fgp)
    throw std::logic_error(
        "fgp_associated_check: hypotheses hold but no dual basis exists over S");
  return out;
}

}  // namespace forge
