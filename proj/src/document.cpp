#include "forge/document.hpp"

#include <json.hpp>

#include <algorithm>

#include "forge/models.hpp"
#include "forge/tensor.hpp"

namespace forge {

using json = nlohmann::ordered_json;

namespace {

// ---- helpers shared by parse and serialize -------------------------------

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' || c == '/';
    if (!ok) return false;
  }
  return true;
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw document_error(path, "missing key \"" + key + "\"");
  return *it;
}

std::string get_string(const json& j, const std::string& key, const std::string& path) {
  const json& v = member(j, key, path);
  if (!v.is_string()) throw document_error(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

std::size_t get_dim(const json& j, const std::string& key, const std::string& path) {
  const json& v = member(j, key, path);
  if (!v.is_number_unsigned()) throw document_error(path + "/" + key, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

Scalar get_scalar(const Field& f, const json& v, const std::string& path) {
  if (!v.is_string()) throw document_error(path, "expected a scalar string");
  try {
    return f.parse(v.get<std::string>());
  } catch (const field_error& e) {
    throw document_error(path, e.what());
  }
}

Matrix get_matrix(const Field& f, const json& j, const std::string& key, std::size_t rows,
                  std::size_t cols, const std::string& path) {
  const json& v = member(j, key, path);
  std::string here = path + "/" + key;
  if (!v.is_array()) throw document_error(here, "expected an array of scalar strings");
  if (v.size() != rows * cols)
    throw document_error(here, "expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                                   " = " + std::to_string(rows * cols) + " entries, got " +
                                   std::to_string(v.size()));
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j2 = 0; j2 < cols; ++j2) {
      std::size_t k = i * cols + j2;
      m.set(i, j2, get_scalar(f, v[k], here + "[" + std::to_string(k) + "]"));
    }
  return m;
}

Vec get_vector(const Field& f, const json& j, const std::string& key, std::size_t n,
               const std::string& path) {
  Matrix m = get_matrix(f, j, key, 1, n, path);
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = m.at(0, i);
  return v;
}

json matrix_json(const Field& f, const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(f.to_string(m.at(i, j)));
  return a;
}

json vector_json(const Field& f, const Vec& v) {
  json a = json::array();
  for (const Scalar& x : v) a.push_back(f.to_string(x));
  return a;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw document_error(path, "unknown key \"" + it.key() + "\"");
  }
}

// Named sections arrive as JSON objects; we keep them sorted by name so
// serialization and every sweep order is canonical.
template <typename T, typename Fn>
std::vector<std::pair<std::string, T>> parse_section(const json& doc, const std::string& key,
                                                     Fn parse_one) {
  std::vector<std::pair<std::string, T>> out;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  if (!it->is_object()) throw document_error("/" + key, "expected an object of named entries");
  for (auto e = it->begin(); e != it->end(); ++e) {
    std::string path = "/" + key + "/" + e.key();
    if (!valid_name(e.key())) throw document_error(path, "invalid name");
    if (!e.value().is_object()) throw document_error(path, "expected an object");
    out.emplace_back(e.key(), parse_one(e.value(), path));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].first == out[i - 1].first)
      throw document_error("/" + key + "/" + out[i].first, "duplicate name");
  return out;
}

Field parse_field(const json& doc) {
  const json& fj = member(doc, "field", "/");
  if (!fj.is_object()) throw document_error("/field", "expected an object");
  reject_unknown_keys(fj, {"kind", "p"}, "/field");
  std::string kind = get_string(fj, "kind", "/field");
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    std::size_t p = get_dim(fj, "p", "/field");
    try {
      return Field::prime(static_cast<unsigned long>(p));
    } catch (const field_error& e) {
      throw document_error("/field/p", e.what());
    }
  }
  throw document_error("/field/kind", "expected \"Q\" or \"Fp\"");
}

json field_json(const Field& f) {
  json j = json::object();
  if (f.kind() == Field::Kind::rationals) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "Fp";
    j["p"] = f.characteristic();
  }
  return j;
}

}  // namespace

Document parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw document_error("/", std::string("JSON syntax: ") + e.what());
  }
  if (!doc.is_object()) throw document_error("/", "expected a JSON object");
  reject_unknown_keys(doc,
                      {"field", "algebras", "coalgebras", "entwinings", "corings", "comodules",
                       "morphisms", "grouplikes", "checks"},
                      "/");

  Document d;
  d.field = parse_field(doc);
  const Field& f = d.field;

  d.algebras = parse_section<Algebra>(doc, "algebras", [&](const json& j, const std::string& p) {
    reject_unknown_keys(j, {"dim", "mul", "unit"}, p);
    std::size_t n = get_dim(j, "dim", p);
    Matrix mul = get_matrix(f, j, "mul", n, n * n, p);
    Vec unit = get_vector(f, j, "unit", n, p);
    return Algebra{f, n, mul, unit};
  });

  d.coalgebras =
      parse_section<Coalgebra>(doc, "coalgebras", [&](const json& j, const std::string& p) {
        reject_unknown_keys(j, {"dim", "comul", "counit"}, p);
        std::size_t n = get_dim(j, "dim", p);
        Matrix comul = get_matrix(f, j, "comul", n * n, n, p);
        Matrix counit = get_matrix(f, j, "counit", 1, n, p);
        return Coalgebra{f, n, comul, counit};
      });

  d.entwinings =
      parse_section<EntwiningDecl>(doc, "entwinings", [&](const json& j, const std::string& p) {
        reject_unknown_keys(j, {"algebra", "coalgebra", "psi", "psi_inverse"}, p);
        EntwiningDecl e;
        e.algebra = get_string(j, "algebra", p);
        e.coalgebra = get_string(j, "coalgebra", p);
        // psi dims depend on the referenced objects; checked when building.
        if (!member(j, "psi", p).is_array()) throw document_error(p + "/psi", "expected an array");
        std::size_t n = j["psi"].size();
        std::size_t side = 0;
        while (side * side < n) ++side;
        if (side * side != n)
          throw document_error(p + "/psi", "psi must be square over A (x) C");
        e.psi = get_matrix(f, j, "psi", side, side, p);
        if (j.contains("psi_inverse"))
          e.psi_inverse = get_matrix(f, j, "psi_inverse", side, side, p);
        return e;
      });

  d.corings = parse_section<CoringDecl>(doc, "corings", [&](const json& j, const std::string& p) {
    CoringDecl c;
    c.kind = get_string(j, "kind", p);
    if (c.kind == "trivial") {
      reject_unknown_keys(j, {"kind", "algebra"}, p);
      c.algebra = get_string(j, "algebra", p);
    } else if (c.kind == "coalgebra") {
      reject_unknown_keys(j, {"kind", "coalgebra"}, p);
      c.coalgebra = get_string(j, "coalgebra", p);
    } else if (c.kind == "entwining") {
      reject_unknown_keys(j, {"kind", "entwining"}, p);
      c.entwining = get_string(j, "entwining", p);
    } else if (c.kind == "sweedler") {
      reject_unknown_keys(j, {"kind", "subalgebra", "ambient", "embedding"}, p);
      c.subalgebra = get_string(j, "subalgebra", p);
      c.ambient = get_string(j, "ambient", p);
      if (!member(j, "embedding", p).is_array())
        throw document_error(p + "/embedding", "expected an array");
      // dims checked against the two algebras when building
      std::size_t n = j["embedding"].size();
      c.embedding = get_matrix(f, j, "embedding", n, 1, p);
    } else if (c.kind == "explicit") {
      reject_unknown_keys(
          j, {"kind", "algebra", "dim", "left_action", "right_action", "comul_lift", "counit"}, p);
      c.algebra = get_string(j, "algebra", p);
      c.dim = get_dim(j, "dim", p);
    } else {
      throw document_error(p + "/kind", "unknown coring kind \"" + c.kind + "\"");
    }
    return c;
  });
  // explicit corings need the base algebra dimension for their matrices
  for (auto& [name, c] : d.corings) {
    if (c.kind != "explicit") continue;
    std::string p = "/corings/" + name;
    const json& j = doc["corings"][name];
    std::size_t ad = 0;
    for (const auto& [an, a] : d.algebras)
      if (an == c.algebra) ad = a.dim;
    if (ad == 0) throw document_error(p + "/algebra", "unknown algebra \"" + c.algebra + "\"");
    c.left_action = get_matrix(f, j, "left_action", c.dim, ad * c.dim, p);
    c.right_action = get_matrix(f, j, "right_action", c.dim, c.dim * ad, p);
    c.comul_lift = get_matrix(f, j, "comul_lift", c.dim * c.dim, c.dim, p);
    c.counit = get_matrix(f, j, "counit", ad, c.dim, p);
  }

  d.comodules =
      parse_section<ComoduleDecl>(doc, "comodules", [&](const json& j, const std::string& p) {
        ComoduleDecl m;
        m.coring = get_string(j, "coring", p);
        m.kind = get_string(j, "kind", p);
        if (m.kind == "regular") {
          reject_unknown_keys(j, {"coring", "kind"}, p);
        } else if (m.kind == "grouplike") {
          reject_unknown_keys(j, {"coring", "kind", "grouplike"}, p);
          m.grouplike = get_string(j, "grouplike", p);
        } else if (m.kind == "explicit") {
          reject_unknown_keys(j, {"coring", "kind", "dim", "action", "coaction"}, p);
          m.dim = get_dim(j, "dim", p);
          // action and coaction dims depend on the coring; read when building
        } else {
          throw document_error(p + "/kind", "unknown comodule kind \"" + m.kind + "\"");
        }
        return m;
      });

  d.morphisms =
      parse_section<MorphismDecl>(doc, "morphisms", [&](const json& j, const std::string& p) {
        reject_unknown_keys(j, {"source", "target", "alpha", "gamma"}, p);
        MorphismDecl m;
        m.source = get_string(j, "source", p);
        m.target = get_string(j, "target", p);
        return m;  // matrices read when building, once dims are known
      });

  d.grouplikes =
      parse_section<GrouplikeDecl>(doc, "grouplikes", [&](const json& j, const std::string& p) {
        GrouplikeDecl g;
        if (j.contains("coring") == j.contains("coalgebra"))
          throw document_error(p, "expected exactly one of \"coring\" or \"coalgebra\"");
        if (j.contains("coring")) {
          reject_unknown_keys(j, {"coring", "vector"}, p);
          g.coring = get_string(j, "coring", p);
        } else {
          reject_unknown_keys(j, {"coalgebra", "vector"}, p);
          g.coalgebra = get_string(j, "coalgebra", p);
        }
        if (!member(j, "vector", p).is_array())
          throw document_error(p + "/vector", "expected an array");
        g.vector = get_vector(f, j, "vector", j["vector"].size(), p);
        return g;
      });

  // matrices whose shape depends on another object: second pass with dims
  auto coring_dims = [&](const std::string& name) -> std::pair<std::size_t, std::size_t> {
    for (const auto& [cn, c] : d.corings) {
      if (cn != name) continue;
      if (c.kind == "trivial") {
        for (const auto& [an, a] : d.algebras)
          if (an == c.algebra) return {a.dim, a.dim};
      } else if (c.kind == "coalgebra") {
        for (const auto& [con, co] : d.coalgebras)
          if (con == c.coalgebra) return {co.dim, 1};
      } else if (c.kind == "entwining") {
        for (const auto& [en, e] : d.entwinings)
          for (const auto& [an, a] : d.algebras)
            if (en == c.entwining && an == e.algebra)
              for (const auto& [con, co] : d.coalgebras)
                if (con == e.coalgebra) return {a.dim * co.dim, a.dim};
      } else if (c.kind == "sweedler") {
        for (const auto& [an, a] : d.algebras)
          if (an == c.ambient) return {0, a.dim};  // carrier dim known only after the quotient
      } else {
        for (const auto& [an, a] : d.algebras)
          if (an == c.algebra) return {c.dim, a.dim};
      }
    }
    return {0, 0};
  };

  for (auto& [name, m] : d.comodules) {
    if (m.kind != "explicit") continue;
    std::string p = "/comodules/" + name;
    auto [cd, ad] = coring_dims(m.coring);
    if (ad == 0) throw document_error(p + "/coring", "unknown coring \"" + m.coring + "\"");
    if (cd == 0) throw document_error(p, "explicit comodules over sweedler corings are unsupported");
    const json& j = doc["comodules"][name];
    m.action = get_matrix(f, j, "action", m.dim, m.dim * ad, p);
    m.coaction = get_matrix(f, j, "coaction", m.dim * cd, m.dim, p);
  }
  for (auto& [name, mo] : d.morphisms) {
    std::string p = "/morphisms/" + name;
    auto [scd, sad] = coring_dims(mo.source);
    auto [tcd, tad] = coring_dims(mo.target);
    if (sad == 0) throw document_error(p + "/source", "unknown coring \"" + mo.source + "\"");
    if (tad == 0) throw document_error(p + "/target", "unknown coring \"" + mo.target + "\"");
    if (scd == 0 || tcd == 0)
      throw document_error(p, "morphisms touching sweedler corings are unsupported");
    const json& j = doc["morphisms"][name];
    mo.alpha = get_matrix(f, j, "alpha", tad, sad, p);
    mo.gamma = get_matrix(f, j, "gamma", tcd, scd, p);
  }

  if (doc.contains("checks")) {
    const json& cj = doc["checks"];
    if (!cj.is_array()) throw document_error("/checks", "expected an array");
    for (std::size_t i = 0; i < cj.size(); ++i) {
      std::string p = "/checks[" + std::to_string(i) + "]";
      if (!cj[i].is_object()) throw document_error(p, "expected an object");
      reject_unknown_keys(cj[i], {"op", "target"}, p);
      CheckRequest r;
      r.op = get_string(cj[i], "op", p);
      if (cj[i].contains("target")) r.target = get_string(cj[i], "target", p);
      d.checks.push_back(r);
    }
  }
  return d;
}

std::string serialize_document(const Document& d) {
  const Field& f = d.field;
  json doc = json::object();
  doc["field"] = field_json(f);

  json alg = json::object();
  for (const auto& [name, a] : d.algebras) {
    json j = json::object();
    j["dim"] = a.dim;
    j["mul"] = matrix_json(f, a.mul);
    j["unit"] = vector_json(f, a.unit);
    alg[name] = j;
  }
  doc["algebras"] = alg;

  json coa = json::object();
  for (const auto& [name, c] : d.coalgebras) {
    json j = json::object();
    j["dim"] = c.dim;
    j["comul"] = matrix_json(f, c.comul);
    j["counit"] = matrix_json(f, c.counit);
    coa[name] = j;
  }
  doc["coalgebras"] = coa;

  json ent = json::object();
  for (const auto& [name, e] : d.entwinings) {
    json j = json::object();
    j["algebra"] = e.algebra;
    j["coalgebra"] = e.coalgebra;
    j["psi"] = matrix_json(f, e.psi);
    if (e.psi_inverse) j["psi_inverse"] = matrix_json(f, *e.psi_inverse);
    ent[name] = j;
  }
  doc["entwinings"] = ent;

  json cor = json::object();
  for (const auto& [name, c] : d.corings) {
    json j = json::object();
    j["kind"] = c.kind;
    if (c.kind == "trivial") {
      j["algebra"] = c.algebra;
    } else if (c.kind == "coalgebra") {
      j["coalgebra"] = c.coalgebra;
    } else if (c.kind == "entwining") {
      j["entwining"] = c.entwining;
    } else if (c.kind == "sweedler") {
      j["subalgebra"] = c.subalgebra;
      j["ambient"] = c.ambient;
      j["embedding"] = matrix_json(f, c.embedding);
    } else {
      j["algebra"] = c.algebra;
      j["dim"] = c.dim;
      j["left_action"] = matrix_json(f, c.left_action);
      j["right_action"] = matrix_json(f, c.right_action);
      j["comul_lift"] = matrix_json(f, c.comul_lift);
      j["counit"] = matrix_json(f, c.counit);
    }
    cor[name] = j;
  }
  doc["corings"] = cor;

  json com = json::object();
  for (const auto& [name, m] : d.comodules) {
    json j = json::object();
    j["coring"] = m.coring;
    j["kind"] = m.kind;
    if (m.kind == "grouplike") j["grouplike"] = m.grouplike;
    if (m.kind == "explicit") {
      j["dim"] = m.dim;
      j["action"] = matrix_json(f, m.action);
      j["coaction"] = matrix_json(f, m.coaction);
    }
    com[name] = j;
  }
  doc["comodules"] = com;

  json mor = json::object();
  for (const auto& [name, m] : d.morphisms) {
    json j = json::object();
    j["source"] = m.source;
    j["target"] = m.target;
    j["alpha"] = matrix_json(f, m.alpha);
    j["gamma"] = matrix_json(f, m.gamma);
    mor[name] = j;
  }
  doc["morphisms"] = mor;

  json grp = json::object();
  for (const auto& [name, g] : d.grouplikes) {
    json j = json::object();
    if (!g.coring.empty())
      j["coring"] = g.coring;
    else
      j["coalgebra"] = g.coalgebra;
    j["vector"] = vector_json(f, g.vector);
    grp[name] = j;
  }
  doc["grouplikes"] = grp;

  json chk = json::array();
  for (const CheckRequest& r : d.checks) {
    json j = json::object();
    j["op"] = r.op;
    if (!r.target.empty()) j["target"] = r.target;
    chk.push_back(j);
  }
  doc["checks"] = chk;

  return doc.dump(1) + "\n";
}

// ---- workspace ------------------------------------------------------------

namespace {

template <typename T>
const T& lookup(const std::vector<std::pair<std::string, T>>& v, const std::string& name,
                const std::string& what, const std::string& path) {
  for (const auto& [n, x] : v)
    if (n == name) return x;
  throw document_error(path, "unknown " + what + " \"" + name + "\"");
}

}  // namespace

const Algebra& Workspace::algebra(const std::string& name) const {
  return lookup(doc.algebras, name, "algebra", "/algebras");
}
const Coalgebra& Workspace::coalgebra(const std::string& name) const {
  return lookup(doc.coalgebras, name, "coalgebra", "/coalgebras");
}
const Entwining& Workspace::entwining(const std::string& name) const {
  return lookup(entwinings, name, "entwining", "/entwinings");
}
const Coring& Workspace::coring(const std::string& name) const {
  return lookup(corings, name, "coring", "/corings");
}
const Comodule& Workspace::comodule(const std::string& name) const {
  return lookup(comodules, name, "comodule", "/comodules");
}

Workspace build_workspace(const Document& d) {
  Workspace w;
  w.doc = d;
  const Field& f = d.field;

  for (const auto& [name, e] : d.entwinings) {
    std::string p = "/entwinings/" + name;
    const Algebra& a = lookup(d.algebras, e.algebra, "algebra", p + "/algebra");
    const Coalgebra& c = lookup(d.coalgebras, e.coalgebra, "coalgebra", p + "/coalgebra");
    if (e.psi.rows() != a.dim * c.dim)
      throw document_error(p + "/psi", "expected a " + std::to_string(a.dim * c.dim) +
                                           "-dimensional square matrix");
    if (e.psi_inverse && e.psi_inverse->rows() != c.dim * a.dim)
      throw document_error(p + "/psi_inverse", "dimension mismatch with psi");
    w.entwinings.emplace_back(name, Entwining{a, c, e.psi, e.psi_inverse});
  }

  for (const auto& [name, c] : d.corings) {
    std::string p = "/corings/" + name;
    try {
      if (c.kind == "trivial") {
        const Algebra& a = lookup(d.algebras, c.algebra, "algebra", p + "/algebra");
        w.corings.emplace_back(name, trivial_coring(a));
      } else if (c.kind == "coalgebra") {
        const Coalgebra& co = lookup(d.coalgebras, c.coalgebra, "coalgebra", p + "/coalgebra");
        w.corings.emplace_back(name, coring_from_coalgebra(co));
      } else if (c.kind == "entwining") {
        const Entwining& e = lookup(w.entwinings, c.entwining, "entwining", p + "/entwining");
        w.corings.emplace_back(name, coring_from_entwining(e));
      } else if (c.kind == "sweedler") {
        const Algebra& s = lookup(d.algebras, c.subalgebra, "algebra", p + "/subalgebra");
        const Algebra& a = lookup(d.algebras, c.ambient, "algebra", p + "/ambient");
        if (c.embedding.rows() != a.dim || c.embedding.cols() != s.dim)
          throw document_error(p + "/embedding", "expected a " + std::to_string(a.dim) + "x" +
                                                     std::to_string(s.dim) + " matrix");
        w.corings.emplace_back(name, sweedler_coring(s, a, c.embedding));
      } else {
        const Algebra& a = lookup(d.algebras, c.algebra, "algebra", p + "/algebra");
        AModule rm{a, Side::right, c.dim, c.right_action};
        AModule lm{a, Side::left, c.dim, c.left_action};
        BalancedTensor cc = tensor_over_A(rm, lm);
        Matrix comul = cc.q.projection * c.comul_lift;
        w.corings.emplace_back(
            name, Coring{a, c.dim, c.left_action, c.right_action, cc, comul, c.counit});
      }
    } catch (const document_error&) {
      throw;
    } catch (const std::exception& e) {
      throw document_error(p, e.what());
    }
  }

  for (const auto& [name, g] : d.grouplikes) {
    std::string p = "/grouplikes/" + name;
    if (!g.coring.empty()) {
      const Coring& c = lookup(w.corings, g.coring, "coring", p + "/coring");
      if (g.vector.size() != c.dim)
        throw document_error(p + "/vector", "expected " + std::to_string(c.dim) + " entries");
    } else {
      const Coalgebra& c = lookup(d.coalgebras, g.coalgebra, "coalgebra", p + "/coalgebra");
      if (g.vector.size() != c.dim)
        throw document_error(p + "/vector", "expected " + std::to_string(c.dim) + " entries");
    }
  }

  for (const auto& [name, m] : d.comodules) {
    std::string p = "/comodules/" + name;
    const Coring& c = lookup(w.corings, m.coring, "coring", p + "/coring");
    try {
      if (m.kind == "regular") {
        w.comodules.emplace_back(name, regular_comodule(c));
      } else if (m.kind == "grouplike") {
        const GrouplikeDecl& g =
            lookup(d.grouplikes, m.grouplike, "group-like", p + "/grouplike");
        if (g.coring != m.coring)
          throw document_error(p + "/grouplike",
                               "group-like \"" + m.grouplike + "\" lives on a different coring");
        w.comodules.emplace_back(name, grouplike_comodule(c, g.vector));
      } else {
        if (m.action.rows() != m.dim || m.action.cols() != m.dim * c.base.dim)
          throw document_error(p + "/action", "dimension mismatch with the base algebra");
        if (m.coaction.rows() != m.dim * c.dim || m.coaction.cols() != m.dim)
          throw document_error(p + "/coaction", "dimension mismatch with the coring");
        AModule mod{c.base, Side::right, m.dim, m.action};
        BalancedTensor mc = tensor_over_A(mod, c.left_module());
        Matrix co = mc.q.projection * m.coaction;
        w.comodules.emplace_back(name, Comodule{c, CoSide::right, m.dim, m.action, mc, co});
      }
    } catch (const document_error&) {
      throw;
    } catch (const std::exception& e) {
      throw document_error(p, e.what());
    }
  }

  for (const auto& [name, m] : d.morphisms) {
    std::string p = "/morphisms/" + name;
    const Coring& s = lookup(w.corings, m.source, "coring", p + "/source");
    const Coring& t = lookup(w.corings, m.target, "coring", p + "/target");
    if (m.alpha.rows() != t.base.dim || m.alpha.cols() != s.base.dim)
      throw document_error(p + "/alpha", "dimension mismatch between the base algebras");
    if (m.gamma.rows() != t.dim || m.gamma.cols() != s.dim)
      throw document_error(p + "/gamma", "dimension mismatch between the corings");
    w.morphisms.emplace_back(name, CoringMorphism{s, t, m.alpha, m.gamma});
  }

  return w;
}

// ---- builtin fixtures ------------------------------------------------------

namespace {

void sort_document(Document& d) {
  auto by_name = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(d.algebras.begin(), d.algebras.end(), by_name);
  std::sort(d.coalgebras.begin(), d.coalgebras.end(), by_name);
  std::sort(d.entwinings.begin(), d.entwinings.end(), by_name);
  std::sort(d.corings.begin(), d.corings.end(), by_name);
  std::sort(d.comodules.begin(), d.comodules.end(), by_name);
  std::sort(d.morphisms.begin(), d.morphisms.end(), by_name);
  std::sort(d.grouplikes.begin(), d.grouplikes.end(), by_name);
}

// Shared skeleton for the Hopf-algebra fixtures: H entwined with itself by
// its comultiplication, the comodule A along the group-like 1 (x) 1, and the
// counit morphism onto the trivial coring for the induction pipeline.
Document hopf_self_document(const HopfAlgebra& h) {
  const Field& f = h.algebra.field;
  Document d;
  d.field = f;
  Entwining e = doi_koppinen(models::self_dk(h));
  d.algebras.emplace_back("A", h.algebra);
  d.coalgebras.emplace_back("C", h.coalgebra);
  EntwiningDecl ed{"A", "C", e.psi, invert_psi(e)};
  d.entwinings.emplace_back("E", ed);
  CoringDecl dc;
  dc.kind = "entwining";
  dc.entwining = "E";
  d.corings.emplace_back("D", dc);
  CoringDecl tc;
  tc.kind = "trivial";
  tc.algebra = "A";
  d.corings.emplace_back("T", tc);
  GrouplikeDecl ge;
  ge.coalgebra = "C";
  ge.vector = unit_vec(h.coalgebra.dim, 0);
  d.grouplikes.emplace_back("e", ge);
  GrouplikeDecl gg;
  gg.coring = "D";
  gg.vector = tensor_vec(f, h.algebra.unit, unit_vec(h.coalgebra.dim, 0));
  d.grouplikes.emplace_back("g", gg);
  ComoduleDecl m;
  m.coring = "D";
  m.kind = "grouplike";
  m.grouplike = "g";
  d.comodules.emplace_back("M", m);
  CoringMorphism down = counit_morphism(coring_from_entwining(e));
  MorphismDecl md{"D", "T", down.alpha, down.gamma};
  d.morphisms.emplace_back("down", md);
  sort_document(d);
  return d;
}

Document trivial_a2_document() {
  Field f = Field::rationals();
  Document d;
  d.field = f;
  d.algebras.emplace_back("A", models::dual_numbers_algebra(f));
  CoringDecl tc;
  tc.kind = "trivial";
  tc.algebra = "A";
  d.corings.emplace_back("T", tc);
  ComoduleDecl m;
  m.coring = "T";
  m.kind = "regular";
  d.comodules.emplace_back("M", m);
  return d;
}

Document sweedler_coring_document() {
  Field f = Field::rationals();
  Document d;
  d.field = f;
  Algebra s = scalar_algebra(f);
  Algebra a = models::dual_numbers_algebra(f);
  d.algebras.emplace_back("A", a);
  d.algebras.emplace_back("S", s);
  CoringDecl c;
  c.kind = "sweedler";
  c.subalgebra = "S";
  c.ambient = "A";
  c.embedding = Matrix::column(f, a.unit);
  d.corings.emplace_back("D", c);
  BalancedTensor pres;
  sweedler_coring(s, a, c.embedding, &pres);
  GrouplikeDecl g;
  g.coring = "D";
  g.vector = pres.pure(f, a.unit, a.unit);
  d.grouplikes.emplace_back("g", g);
  ComoduleDecl m;
  m.coring = "D";
  m.kind = "grouplike";
  m.grouplike = "g";
  d.comodules.emplace_back("M", m);
  return d;
}

Document matrix_coalgebra_document() {
  Field f = Field::rationals();
  Document d;
  d.field = f;
  Coalgebra c = matrix_coalgebra(f, 2);
  d.coalgebras.emplace_back("C", c);
  CoringDecl dc;
  dc.kind = "coalgebra";
  dc.coalgebra = "C";
  d.corings.emplace_back("D", dc);
  ComoduleDecl m;
  m.coring = "D";
  m.kind = "explicit";
  m.dim = 2;
  m.action = Matrix::identity(f, 2);
  m.coaction = Matrix(f, 8, 2);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 2; ++i)
      m.coaction.set(tensor_index(i, i * 2 + j, 4), j, f.one());
  d.comodules.emplace_back("M", m);
  return d;
}

// The regular comodule of the dual-numbers coalgebra extended by a second
// copy of its socle line. The canonical map of this comodule has both a
// kernel and a cokernel, which is the negative witness pair the galois
// pipeline is expected to certify.
Document twisted_sum_document() {
  Field f = Field::rationals();
  Document d;
  d.field = f;
  Coalgebra c = models::dual_numbers_coalgebra(f);
  d.coalgebras.emplace_back("C", c);
  CoringDecl dc;
  dc.kind = "coalgebra";
  dc.coalgebra = "C";
  d.corings.emplace_back("D", dc);
  ComoduleDecl m;
  m.coring = "D";
  m.kind = "explicit";
  m.dim = 3;
  m.action = Matrix::identity(f, 3);
  m.coaction = Matrix(f, 6, 3);
  // basis u0, u1 spanning the regular comodule and w a socle line:
  // u0 -> u0 (x) c0, u1 -> u0 (x) c1 + u1 (x) c0, w -> w (x) c0
  m.coaction.set(tensor_index(0, 0, 2), 0, f.one());
  m.coaction.set(tensor_index(0, 1, 2), 1, f.one());
  m.coaction.set(tensor_index(1, 0, 2), 1, f.one());
  m.coaction.set(tensor_index(2, 0, 2), 2, f.one());
  d.comodules.emplace_back("M", m);
  return d;
}

Document graded_line_document() {
  Field f = Field::rationals();
  Document d;
  d.field = f;
  HopfAlgebra h = models::group_hopf(f, 2);
  Algebra a = models::dual_numbers_algebra(f);
  Matrix co(f, 4, 2);
  co.set(tensor_index(0, 0, 2), 0, f.one());
  co.set(tensor_index(1, 1, 2), 1, f.one());
  DoiKoppinenData dk{h, {a, co}, h.coalgebra, Matrix::identity(f, 2), h.algebra.mul};
  Entwining e = doi_koppinen(dk);
  d.algebras.emplace_back("A", a);
  d.coalgebras.emplace_back("C", h.coalgebra);
  EntwiningDecl ed{"A", "C", e.psi, invert_psi(e)};
  d.entwinings.emplace_back("E", ed);
  CoringDecl dc;
  dc.kind = "entwining";
  dc.entwining = "E";
  d.corings.emplace_back("D", dc);
  GrouplikeDecl g;
  g.coring = "D";
  g.vector = tensor_vec(f, a.unit, unit_vec(2, 0));
  d.grouplikes.emplace_back("g", g);
  ComoduleDecl m;
  m.coring = "D";
  m.kind = "grouplike";
  m.grouplike = "g";
  d.comodules.emplace_back("M", m);
  return d;
}

Document flip_corner_document() {
  Field f = Field::rationals();
  Document d;
  d.field = f;
  Algebra a = models::cyclic_group_algebra(f, 2);
  Coalgebra c = models::dual_numbers_coalgebra(f);
  Entwining e = flip_entwining(a, c);
  d.algebras.emplace_back("A", a);
  d.coalgebras.emplace_back("C", c);
  EntwiningDecl ed{"A", "C", e.psi, invert_psi(e)};
  d.entwinings.emplace_back("E", ed);
  CoringDecl dc;
  dc.kind = "entwining";
  dc.entwining = "E";
  d.corings.emplace_back("D", dc);
  GrouplikeDecl g;
  g.coring = "D";
  g.vector = tensor_vec(f, a.unit, unit_vec(2, 0));
  d.grouplikes.emplace_back("g", g);
  ComoduleDecl m;
  m.coring = "D";
  m.kind = "grouplike";
  m.grouplike = "g";
  d.comodules.emplace_back("M", m);
  return d;
}

Document non_injective_f2_document() {
  Field f = Field::prime(2);
  Document d;
  d.field = f;
  Coalgebra c = models::dual_numbers_coalgebra(f);
  d.coalgebras.emplace_back("C", c);
  CoringDecl dc;
  dc.kind = "coalgebra";
  dc.coalgebra = "C";
  d.corings.emplace_back("D", dc);
  GrouplikeDecl g;
  g.coring = "D";
  g.vector = unit_vec(2, 0);
  d.grouplikes.emplace_back("g", g);
  ComoduleDecl m;
  m.coring = "D";
  m.kind = "grouplike";
  m.grouplike = "g";
  d.comodules.emplace_back("M", m);
  return d;
}

}  // namespace

std::vector<std::string> builtin_fixture_names() {
  return {"trivial-A2",  "hopf-z2",     "hopf-z3",     "sweedler-coring", "sweedler-h4",
          "matrix-coalgebra-2", "twisted-sum", "graded-line", "flip-corner",     "non-injective-f2"};
}

Document builtin_fixture(const std::string& name) {
  Field q = Field::rationals();
  if (name == "trivial-A2") return trivial_a2_document();
  if (name == "hopf-z2") return hopf_self_document(models::group_hopf(q, 2));
  if (name == "hopf-z3") return hopf_self_document(models::group_hopf(q, 3));
  if (name == "sweedler-coring") return sweedler_coring_document();
  if (name == "sweedler-h4") return hopf_self_document(models::small_quantum_hopf(q));
  if (name == "matrix-coalgebra-2") return matrix_coalgebra_document();
  if (name == "twisted-sum") return twisted_sum_document();
  if (name == "graded-line") return graded_line_document();
  if (name == "flip-corner") return flip_corner_document();
  if (name == "non-injective-f2") return non_injective_f2_document();
  throw document_error("/", "unknown builtin fixture \"" + name + "\"");
}

namespace {

std::string prefixed(const std::string& prefix, const std::string& name) {
  return prefix + "/" + name;
}

void prefix_document(Document& d, const std::string& p) {
  for (auto& [name, e] : d.entwinings) {
    e.algebra = prefixed(p, e.algebra);
    e.coalgebra = prefixed(p, e.coalgebra);
  }
  for (auto& [name, c] : d.corings) {
    if (!c.algebra.empty()) c.algebra = prefixed(p, c.algebra);
    if (!c.coalgebra.empty()) c.coalgebra = prefixed(p, c.coalgebra);
    if (!c.entwining.empty()) c.entwining = prefixed(p, c.entwining);
    if (!c.subalgebra.empty()) c.subalgebra = prefixed(p, c.subalgebra);
    if (!c.ambient.empty()) c.ambient = prefixed(p, c.ambient);
  }
  for (auto& [name, m] : d.comodules) {
    m.coring = prefixed(p, m.coring);
    if (!m.grouplike.empty()) m.grouplike = prefixed(p, m.grouplike);
  }
  for (auto& [name, m] : d.morphisms) {
    m.source = prefixed(p, m.source);
    m.target = prefixed(p, m.target);
  }
  for (auto& [name, g] : d.grouplikes) {
    if (!g.coring.empty()) g.coring = prefixed(p, g.coring);
    if (!g.coalgebra.empty()) g.coalgebra = prefixed(p, g.coalgebra);
  }
  for (auto& r : d.checks)
    if (!r.target.empty()) r.target = prefixed(p, r.target);
  auto rename = [&](auto& section) {
    for (auto& [name, x] : section) name = prefixed(p, name);
  };
  rename(d.algebras);
  rename(d.coalgebras);
  rename(d.entwinings);
  rename(d.corings);
  rename(d.comodules);
  rename(d.morphisms);
  rename(d.grouplikes);
}

}  // namespace

Document merged_fixture_library() {
  Document out;
  out.field = Field::rationals();
  for (const std::string& name : builtin_fixture_names()) {
    Document d = builtin_fixture(name);
    if (d.field != out.field) continue;  // prime-field fixtures ship standalone
    prefix_document(d, name);
    auto append = [](auto& dst, const auto& src) { dst.insert(dst.end(), src.begin(), src.end()); };
    append(out.algebras, d.algebras);
    append(out.coalgebras, d.coalgebras);
    append(out.entwinings, d.entwinings);
    append(out.corings, d.corings);
    append(out.comodules, d.comodules);
    append(out.morphisms, d.morphisms);
    append(out.grouplikes, d.grouplikes);
    append(out.checks, d.checks);
  }
  sort_document(out);
  return out;
}

Document restrict_to_fixture(const Document& d, const std::string& prefix) {
  Document out;
  out.field = d.field;
  std::string p = prefix + "/";
  bool found = false;
  auto keep = [&](auto& dst, const auto& src) {
    for (const auto& [name, x] : src)
      if (name.rfind(p, 0) == 0) {
        dst.emplace_back(name, x);
        found = true;
      }
  };
  keep(out.algebras, d.algebras);
  keep(out.coalgebras, d.coalgebras);
  keep(out.entwinings, d.entwinings);
  keep(out.corings, d.corings);
  keep(out.comodules, d.comodules);
  keep(out.morphisms, d.morphisms);
  keep(out.grouplikes, d.grouplikes);
  for (const auto& r : d.checks)
    if (r.target.rfind(p, 0) == 0) out.checks.push_back(r);
  if (!found) throw document_error("/", "no objects named \"" + prefix + "/...\" in this document");
  return out;
}

}  // namespace forge
