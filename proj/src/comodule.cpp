#include "forge/comodule.hpp"

#include <stdexcept>

namespace forge {

namespace {

// Induced right action of A on M (x)_A C through the C factor.
Matrix mc_right_action(const Comodule& m) {
  const Field& f = m.coring.base.field;
  Matrix im = Matrix::identity(f, m.dim);
  return induced_on_quotients(im.kron(m.coring.ract),
                              tensor_quotient_right(f, m.mc.q, m.coring.base.dim), m.mc.q);
}

// Induced left action of A on C (x)_A M through the C factor.
Matrix cm_left_action(const Comodule& m) {
  const Field& f = m.coring.base.field;
  Matrix im = Matrix::identity(f, m.dim);
  return induced_on_quotients(m.coring.lact.kron(im),
                              tensor_quotient_left(f, m.coring.base.dim, m.mc.q), m.mc.q);
}

void require_same_setting(const Comodule& m, const Comodule& n, const char* who) {
  if (m.side != n.side || m.coring.dim != n.coring.dim ||
      m.coring.base.dim != n.coring.base.dim || m.coring.base.field != n.coring.base.field)
    throw std::invalid_argument(std::string(who) + ": comodules live over different settings");
}

Matrix flat_span(const Field& f, std::size_t rows, std::size_t cols,
                 const std::vector<Matrix>& basis) {
  Matrix s(f, rows * cols, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) s.set_col(j, flatten(basis[j]));
  return s;
}

}  // namespace

Comodule regular_comodule(const Coring& c) {
  return {c, CoSide::right, c.dim, c.ract, c.cc, c.comul};
}

Comodule regular_left_comodule(const Coring& c) {
  return {c, CoSide::left, c.dim, c.lact, c.cc, c.comul};
}

Comodule grouplike_comodule(const Coring& c, const Vec& g) {
  if (!coring_grouplike(c, g))
    throw std::invalid_argument("grouplike_comodule: element is not group-like");
  const Field& f = c.base.field;
  Matrix ia = Matrix::identity(f, c.base.dim);
  Matrix ic = Matrix::identity(f, c.dim);
  Comodule m;
  m.coring = c;
  m.side = CoSide::right;
  m.dim = c.base.dim;
  m.action = c.base.mul;
  m.mc = tensor_over_A(regular_right_module(c.base), c.left_module());
  Matrix u = Matrix::column(f, c.base.unit);
  Matrix gc = Matrix::column(f, g);
  m.coaction = m.mc.q.projection * u.kron(ic) * c.ract * gc.kron(ia);
  return m;
}

Comodule grouplike_left_comodule(const Coring& c, const Vec& g) {
  if (!coring_grouplike(c, g))
    throw std::invalid_argument("grouplike_left_comodule: element is not group-like");
  const Field& f = c.base.field;
  Matrix ia = Matrix::identity(f, c.base.dim);
  Matrix ic = Matrix::identity(f, c.dim);
  Comodule m;
  m.coring = c;
  m.side = CoSide::left;
  m.dim = c.base.dim;
  m.action = c.base.mul;
  m.mc = tensor_over_A(c.right_module(), regular_left_module(c.base));
  Matrix u = Matrix::column(f, c.base.unit);
  Matrix gc = Matrix::column(f, g);
  m.coaction = m.mc.q.projection * ic.kron(u) * c.lact * ia.kron(gc);
  return m;
}

std::vector<std::string> check_comodule(const Comodule& m) {
  const Coring& c = m.coring;
  const Field& f = c.base.field;
  std::size_t na = c.base.dim, nc = c.dim;
  bool right = m.side == CoSide::right;

  std::size_t ambient = right ? m.dim * nc : nc * m.dim;
  std::size_t act_cols = right ? m.dim * na : na * m.dim;
  if (m.action.rows() != m.dim || m.action.cols() != act_cols ||
      m.coaction.rows() != m.mc.dim() || m.coaction.cols() != m.dim ||
      m.mc.q.ambient != ambient)
    return {"shape"};
  if (!check_module(m.module()).empty()) return {"module"};

  std::vector<std::string> bad;
  Matrix im = Matrix::identity(f, m.dim);
  Matrix ia = Matrix::identity(f, na);
  Matrix ic = Matrix::identity(f, nc);
  Matrix rl = m.coaction_lift();
  Matrix dl = c.comul_lift();

  try {
    if (right) {
      Matrix ract_mc = mc_right_action(m);
      if (m.coaction * m.action != ract_mc * m.coaction.kron(ia)) bad.push_back("coaction-linear");
    } else {
      Matrix lact_cm = cm_left_action(m);
      if (m.coaction * m.action != lact_cm * ia.kron(m.coaction)) bad.push_back("coaction-linear");
    }
  } catch (const coherence_error&) {
    bad.push_back("coaction-linear");
  }

  ChainSpec spec;
  spec.field = f;
  spec.adim = na;
  if (right) {
    spec.dims = {m.dim, nc, nc};
    spec.ract = {m.action, c.ract};
    spec.lact = {c.lact, c.lact};
  } else {
    spec.dims = {nc, nc, m.dim};
    spec.ract = {c.ract, c.ract};
    spec.lact = {c.lact, m.action};
  }
  ChainTensor ct = chain_quotient(spec);
  Matrix lhs = right ? ct.q.projection * rl.kron(ic) * rl : ct.q.projection * dl.kron(im) * rl;
  Matrix rhs = right ? ct.q.projection * im.kron(dl) * rl : ct.q.projection * ic.kron(rl) * rl;
  if (lhs != rhs) bad.push_back("coassociativity");

  Matrix counit_side = right ? m.action * im.kron(c.counit) * rl : m.action * c.counit.kron(im) * rl;
  if (counit_side != im) bad.push_back("counit-law");
  return bad;
}

std::vector<Matrix> colinear_hom(const Comodule& m, const Comodule& n) {
  require_same_setting(m, n, "colinear_hom");
  const Field& f = m.coring.base.field;
  Matrix ia = Matrix::identity(f, m.coring.base.dim);
  Matrix ic = Matrix::identity(f, m.coring.dim);
  Matrix rlm = m.coaction_lift();
  bool right = m.side == CoSide::right;

  Matrix colin = linearize(f, n.dim, m.dim, [&](const Matrix& w) {
    Matrix pushed = right ? n.mc.q.projection * w.kron(ic) * rlm
                          : n.mc.q.projection * ic.kron(w) * rlm;
    return n.coaction * w - pushed;
  });
  Matrix alin = linearize(f, n.dim, m.dim, [&](const Matrix& w) {
    return right ? n.action * w.kron(ia) - w * m.action : n.action * ia.kron(w) - w * m.action;
  });
  Matrix k = kernel_basis(colin.vstack(alin));
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < k.cols(); ++j)
    out.push_back(unflatten(f, n.dim, m.dim, k.col_vec(j)));
  return out;
}

EndoRing endomorphism_ring(const Comodule& m) {
  const Field& f = m.coring.base.field;
  std::vector<Matrix> basis = colinear_hom(m, m);
  std::size_t r = basis.size();
  Matrix span = flat_span(f, m.dim, m.dim, basis);

  auto unit = solve(span, flatten(Matrix::identity(f, m.dim)));
  if (!unit) throw std::logic_error("endomorphism_ring: identity missing from hom space");

  Matrix mul(f, r, r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Matrix comp = m.side == CoSide::right ? basis[i] * basis[j] : basis[j] * basis[i];
      auto coords = solve(span, flatten(comp));
      if (!coords) throw std::logic_error("endomorphism_ring: hom space not closed");
      mul.set_col(tensor_index(i, j, r), *coords);
    }
  return {basis, Algebra{f, r, mul, *unit}};
}

CotensorSpace cotensor(const Comodule& m, const Comodule& n) {
  if (m.side != CoSide::right || n.side != CoSide::left)
    throw std::invalid_argument("cotensor: wants a right and a left comodule");
  if (m.coring.dim != n.coring.dim || m.coring.base.dim != n.coring.base.dim)
    throw std::invalid_argument("cotensor: different corings");
  const Coring& c = m.coring;
  const Field& f = c.base.field;

  BalancedTensor carrier = tensor_over_A(m.module(), n.module());
  ChainSpec spec;
  spec.field = f;
  spec.adim = c.base.dim;
  spec.dims = {m.dim, c.dim, n.dim};
  spec.ract = {m.action, c.ract};
  spec.lact = {c.lact, n.action};
  ChainTensor mcn = chain_quotient(spec);

  Matrix im = Matrix::identity(f, m.dim);
  Matrix in = Matrix::identity(f, n.dim);
  Matrix amb = m.coaction_lift().kron(in) - im.kron(n.coaction_lift());
  Matrix omega = induced_on_quotients(mcn.q.projection * amb, carrier.q,
                                      identity_quotient(f, mcn.dim()));
  return {carrier, kernel_basis(omega)};
}

Coinvariants coinvariants(const Comodule& w, const Vec& g) {
  if (w.side != CoSide::right)
    throw std::invalid_argument("coinvariants: right comodules only");
  const Coring& c = w.coring;
  if (!coring_grouplike(c, g))
    throw std::invalid_argument("coinvariants: element is not group-like");
  const Field& f = c.base.field;
  Matrix ia = Matrix::identity(f, c.base.dim);
  Matrix iw = Matrix::identity(f, w.dim);
  Matrix gc = Matrix::column(f, g);

  Coinvariants out;
  out.basis = kernel_basis(w.coaction - w.mc.q.projection * iw.kron(gc));
  out.stabilizer = kernel_basis(c.lact * ia.kron(gc) - c.ract * gc.kron(ia));

  for (std::size_t j = 0; j < out.stabilizer.cols(); ++j) {
    Matrix op = w.action * iw.kron(Matrix::column(f, out.stabilizer.col_vec(j)));
    Matrix act(f, out.basis.cols(), out.basis.cols());
    for (std::size_t i = 0; i < out.basis.cols(); ++i) {
      auto coords = solve(out.basis, op.apply(out.basis.col_vec(i)));
      if (!coords) throw std::logic_error("coinvariants: stabiliser does not preserve them");
      act.set_col(i, *coords);
    }
    out.action.push_back(act);
  }
  return out;
}

DualComodule dual_left_comodule(const Comodule& m) {
  if (m.side != CoSide::right)
    throw std::invalid_argument("dual_left_comodule: right comodules only");
  const Coring& c = m.coring;
  const Algebra& a = c.base;
  const Field& f = a.field;

  auto db = find_dual_basis(m.module());
  if (!db)
    throw std::invalid_argument("dual_left_comodule: carrier is not finitely generated projective");

  std::vector<Matrix> fx = module_hom(m.module(), regular_right_module(a));
  std::size_t ds = fx.size();
  Matrix span = flat_span(f, a.dim, m.dim, fx);

  Matrix coords(f, ds, m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    auto x = solve(span, flatten(db->functionals[i]));
    if (!x) throw std::logic_error("dual_left_comodule: dual functional outside hom basis");
    coords.set_col(i, *x);
  }

  // a . xi = (left multiplication by a) composed with xi.
  Matrix act(f, ds, a.dim * ds);
  for (std::size_t k = 0; k < a.dim; ++k) {
    Matrix la = a.left_mult(unit_vec(a.dim, k));
    for (std::size_t b = 0; b < ds; ++b) {
      auto x = solve(span, flatten(la * fx[b]));
      if (!x) throw std::logic_error("dual_left_comodule: scalars do not preserve hom basis");
      act.set_col(tensor_index(k, b, ds), *x);
    }
  }
  AModule dual_mod{a, Side::left, ds, act};
  BalancedTensor cm = tensor_over_A(c.right_module(), dual_mod);

  Matrix rl = m.coaction_lift();
  Matrix ic = Matrix::identity(f, c.dim);
  Matrix co(f, cm.dim(), ds);
  for (std::size_t b = 0; b < ds; ++b) {
    Matrix push = c.lact * fx[b].kron(ic);  // m (x) c -> xi_b(m) . c
    Vec val = zero_vec(cm.dim());
    for (std::size_t i = 0; i < m.dim; ++i) {
      Vec cpart = push.apply(rl.apply(unit_vec(m.dim, i)));
      val = add_vec(f, val, cm.pure(f, cpart, coords.col_vec(i)));
    }
    co.set_col(b, val);
  }

  return {Comodule{c, CoSide::left, ds, act, cm, co}, fx, *db, coords};
}

GammaIso gamma_iso(const Comodule& m) { return gamma_iso(m, dual_left_comodule(m)); }

GammaIso gamma_iso(const Comodule& m, const DualComodule& dual) {
  const Field& f = m.coring.base.field;
  std::size_t ds = dual.dual.dim;
  EndoRing s = endomorphism_ring(m);
  EndoRing t = endomorphism_ring(dual.dual);

  Matrix fspan = flat_span(f, m.coring.base.dim, m.dim, dual.functionals);
  Matrix sspan = flat_span(f, m.dim, m.dim, s.basis);
  Matrix tspan = flat_span(f, ds, ds, t.basis);

  Matrix gamma(f, t.basis.size(), s.basis.size());
  for (std::size_t j = 0; j < s.basis.size(); ++j) {
    Matrix g(f, ds, ds);
    for (std::size_t b = 0; b < ds; ++b) {
      auto x = solve(fspan, flatten(dual.functionals[b] * s.basis[j]));
      if (!x) throw std::logic_error("gamma_iso: xi . s left the functional basis");
      g.set_col(b, *x);
    }
    auto y = solve(tspan, flatten(g));
    if (!y) throw std::logic_error("gamma_iso: image is not colinear on the dual");
    gamma.set_col(j, *y);
  }

  Matrix gamma_inverse(f, s.basis.size(), t.basis.size());
  for (std::size_t j = 0; j < t.basis.size(); ++j) {
    Matrix total(f, m.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
      Vec w = t.basis[j].apply(dual.db_coords.col_vec(i));
      Matrix tf(f, m.coring.base.dim, m.dim);
      for (std::size_t b = 0; b < ds; ++b)
        if (w[b] != 0) tf = tf + dual.functionals[b].scaled(w[b]);
      Matrix ei = Matrix::column(f, unit_vec(m.dim, i));
      total = total + m.action * ei.kron(tf);
    }
    auto x = solve(sspan, flatten(total));
    if (!x) throw std::logic_error("gamma_iso: preimage is not colinear");
    gamma_inverse.set_col(j, *x);
  }
  return {s, t, gamma, gamma_inverse};
}

std::optional<Matrix> is_relatively_injective(const Comodule& m) {
  if (m.side != CoSide::right)
    throw std::invalid_argument("is_relatively_injective: right comodules only");
  const Coring& c = m.coring;
  const Field& f = c.base.field;
  Matrix im = Matrix::identity(f, m.dim);
  Matrix ia = Matrix::identity(f, c.base.dim);
  Matrix ic = Matrix::identity(f, c.dim);
  std::size_t md = m.mc.dim();

  Matrix ract_mc = mc_right_action(m);
  // Coaction of M (x)_A C, with the projection split off so the unknown
  // retraction occurs linearly: lift, coact on the C factor, project the
  // first two factors back into M (x)_A C.
  Matrix inner = m.mc.q.projection.kron(ic) * im.kron(c.comul_lift()) * m.mc.q.section;

  std::vector<std::pair<Matrix, Vec>> sys;
  sys.emplace_back(linearize(f, m.dim, md, [&](const Matrix& p) { return p * m.coaction; }),
                   flatten(im));
  sys.emplace_back(linearize(f, m.dim, md,
                             [&](const Matrix& p) { return p * ract_mc - m.action * p.kron(ia); }),
                   zero_vec(m.dim * md * c.base.dim));
  sys.emplace_back(
      linearize(f, m.dim, md,
                [&](const Matrix& p) {
                  return m.coaction * p - m.mc.q.projection * p.kron(ic) * inner;
                }),
      zero_vec(md * md));

  auto x = solve_affine(sys);
  if (!x) return std::nullopt;
  return unflatten(f, m.dim, md, *x);
}

Comodule induced_comodule(const Comodule& m, const CoringMorphism& f) {
  if (m.side != CoSide::right)
    throw std::invalid_argument("induced_comodule: right comodules only");
  if (m.coring.dim != f.source.dim || m.coring.base.dim != f.source.base.dim)
    throw std::invalid_argument("induced_comodule: comodule not over the source coring");
  const Algebra& b = f.target.base;
  const Field& fl = b.field;
  Matrix im = Matrix::identity(fl, m.dim);
  Matrix ib = Matrix::identity(fl, b.dim);

  AModule b_left{m.coring.base, Side::left, b.dim, b.mul * f.alpha.kron(ib)};
  BalancedTensor x = tensor_over_A(m.module(), b_left);
  Matrix xact = induced_on_quotients(im.kron(b.mul), tensor_quotient_right(fl, x.q, b.dim), x.q);

  BalancedTensor xd = tensor_over_A({b, Side::right, x.dim(), xact}, f.target.left_module());

  Matrix to_x = x.q.projection * im.kron(Matrix::column(fl, b.unit));  // m -> m (x) 1
  Matrix push = f.target.ract * f.gamma.kron(ib);                      // c (x) b -> gamma(c) b
  Matrix amb = xd.q.projection * to_x.kron(push) * m.coaction_lift().kron(ib);
  Matrix co = induced_on_quotients(amb, x.q, identity_quotient(fl, xd.dim()));

  return {f.target, CoSide::right, x.dim(), xact, xd, co};
}

Comodule induced_left_comodule(const Comodule& n, const CoringMorphism& f) {
  if (n.side != CoSide::left)
    throw std::invalid_argument("induced_left_comodule: left comodules only");
  if (n.coring.dim != f.source.dim || n.coring.base.dim != f.source.base.dim)
    throw std::invalid_argument("induced_left_comodule: comodule not over the source coring");
  const Algebra& b = f.target.base;
  const Field& fl = b.field;
  Matrix in = Matrix::identity(fl, n.dim);
  Matrix ib = Matrix::identity(fl, b.dim);

  AModule b_right{n.coring.base, Side::right, b.dim, b.mul * ib.kron(f.alpha)};
  BalancedTensor x = tensor_over_A(b_right, n.module());
  Matrix xact = induced_on_quotients(b.mul.kron(in), tensor_quotient_left(fl, b.dim, x.q), x.q);

  BalancedTensor dx = tensor_over_A(f.target.right_module(), {b, Side::left, x.dim(), xact});

  Matrix push = f.target.lact * ib.kron(f.gamma);                      // b (x) c -> b gamma(c)
  Matrix to_x = x.q.projection * Matrix::column(fl, b.unit).kron(in);  // n -> 1 (x) n
  Matrix amb = dx.q.projection * push.kron(to_x) * ib.kron(n.coaction_lift());
  Matrix co = induced_on_quotients(amb, x.q, identity_quotient(fl, dx.dim()));

  return {f.target, CoSide::left, x.dim(), xact, dx, co};
}

}  // namespace forge
