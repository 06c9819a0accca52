#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forge/comodule.hpp"
#include "forge/coring.hpp"
#include "forge/entwining.hpp"

// Document ingestion and the command surface behind the forge binary. A
// document is a JSON description of named structures plus requested checks;
// parsing validates shapes, building resolves names into live objects, and
// run_command sweeps a pipeline over them producing a machine-readable
// report. Serialization is canonical: serializing any parsed or builtin
// document always yields the same bytes, which is what the determinism
// guarantees and the shipped fixture files rely on.

namespace forge {

// Input rejection with the JSON-pointer-ish location of the offending entry.
class document_error : public std::runtime_error {
 public:
  document_error(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), path(std::move(where)) {}
  std::string path;
};

struct EntwiningDecl {
  std::string algebra;
  std::string coalgebra;
  Matrix psi;
  std::optional<Matrix> psi_inverse;
};

// kind selects the constructor; only the fields that kind names are read.
struct CoringDecl {
  std::string kind;  // trivial | coalgebra | entwining | sweedler | explicit
  std::string algebra;     // trivial, explicit
  std::string coalgebra;   // coalgebra
  std::string entwining;   // entwining
  std::string subalgebra;  // sweedler: the base of the inclusion
  std::string ambient;     // sweedler: the algebra being extended
  Matrix embedding;        // sweedler: unital injective subalgebra -> ambient
  std::size_t dim = 0;     // explicit
  Matrix left_action;      // explicit: C -> C, columns indexed by A (x) C
  Matrix right_action;     // explicit: columns indexed by C (x) A
  Matrix comul_lift;       // explicit: C -> C (x) C before the quotient
  Matrix counit;           // explicit: C -> A
};

struct ComoduleDecl {
  std::string coring;
  std::string kind;       // regular | grouplike | explicit
  std::string grouplike;  // grouplike: name of a declared coring group-like
  std::size_t dim = 0;    // explicit
  Matrix action;          // explicit: M -> M, columns indexed by M (x) A
  Matrix coaction;        // explicit: M -> M (x) C before the quotient
};

struct MorphismDecl {
  std::string source;
  std::string target;
  Matrix alpha;
  Matrix gamma;
};

// A declared group-like element of a coring or a coalgebra (exactly one of
// the two host names is set). Comodules reference coring group-likes; the
// connection pipeline consumes coalgebra ones.
struct GrouplikeDecl {
  std::string coring;
  std::string coalgebra;
  Vec vector;
};

struct CheckRequest {
  std::string op;      // a command name
  std::string target;  // restrict to this object name; empty means all
};

// Parsed document: named declarations in sorted name order plus the check
// list. Scalars are canonical (rationals reduced, prime-field values in
// [0, p)), so equal documents serialize to equal bytes.
struct Document {
  Field field = Field::rationals();
  std::vector<std::pair<std::string, Algebra>> algebras;
  std::vector<std::pair<std::string, Coalgebra>> coalgebras;
  std::vector<std::pair<std::string, EntwiningDecl>> entwinings;
  std::vector<std::pair<std::string, CoringDecl>> corings;
  std::vector<std::pair<std::string, ComoduleDecl>> comodules;
  std::vector<std::pair<std::string, MorphismDecl>> morphisms;
  std::vector<std::pair<std::string, GrouplikeDecl>> grouplikes;
  std::vector<CheckRequest> checks;
};

Document parse_document(const std::string& text);
std::string serialize_document(const Document& d);

// The compiled-in fixture library. Each builtin is also shipped under
// fixtures/<name>.json with byte-identical serialization, and the rational
// ones are merged, names prefixed "<fixture>/", into fixtures/corings.json.
std::vector<std::string> builtin_fixture_names();
Document builtin_fixture(const std::string& name);
Document merged_fixture_library();

// Keep only the objects named "<prefix>/..."; document_error when the
// prefix matches nothing.
Document restrict_to_fixture(const Document& d, const std::string& prefix);

// Name-resolved live objects in declaration (sorted) order. Construction
// validates dimensions and throws document_error with the path on any
// dangling reference or shape mismatch.
struct Workspace {
  Document doc;
  std::vector<std::pair<std::string, Entwining>> entwinings;
  std::vector<std::pair<std::string, Coring>> corings;
  std::vector<std::pair<std::string, Comodule>> comodules;
  std::vector<std::pair<std::string, CoringMorphism>> morphisms;

  const Algebra& algebra(const std::string& name) const;
  const Coalgebra& coalgebra(const std::string& name) const;
  const Entwining& entwining(const std::string& name) const;
  const Coring& coring(const std::string& name) const;
  const Comodule& comodule(const std::string& name) const;
};

Workspace build_workspace(const Document& d);

// One verification record. verdict is "pass", "fail", or "not-applicable";
// a fail always carries notes naming the violated laws or a witness
// certifying the negative answer, and witnesses are matrices in the scalar
// string form of the wire format.
struct CheckRecord {
  std::string id;
  std::string law;
  std::string verdict;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, Matrix>> witnesses;
  double ms = 0.0;
};

struct Report {
  std::string command;
  Field field = Field::rationals();
  std::vector<std::string> conventions;
  std::vector<CheckRecord> records;
};

// Commands: check | cointegral | galois | principal | connection |
// injectivity | induce | duality | report (everything, plus the flatness,
// canonical-inverse, and split-extension sweeps). parallel evaluates the
// records concurrently and collects them in the same order, so the report
// is byte-identical to the serial one. Timings are only rendered when
// with_timings is set, keeping the default output deterministic.
Report run_command(const Workspace& w, const std::string& command, bool parallel = false);

std::string report_text(const Report& r, bool with_timings = false);
std::string report_json(const Report& r, bool with_timings = false);

// 0 when no record fails, 1 otherwise; not-applicable never affects it.
int report_exit_code(const Report& r);

}  // namespace forge
