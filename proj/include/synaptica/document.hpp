#pragma once

// JSON workspace documents: loading, schema validation and conversion into
// library structures. Every schema problem raises document_error.

#include <synaptica/effect_algebra.hpp>
#include <synaptica/order_unit_space.hpp>
#include <synaptica/poset.hpp>
#include <synaptica/polytope.hpp>
#include <synaptica/rational.hpp>
#include <synaptica/real_function.hpp>
#include <synaptica/sym_matrix.hpp>

#include <json.hpp>

#include <array>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace synaptica::doc {

using Json = nlohmann::ordered_json;

class document_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::array<const char*, 7> kKinds = {"poset",      "ortholattice",     "effect_algebra", "mv_algebra",
                                                      "sym_matrix", "function_algebra", "state"};

inline bool known_kind(const std::string& k) {
  for (const char* c : kKinds)
    if (k == c) return true;
  return false;
}

struct Document {
  std::string file;
  std::string kind;
  std::string label;
  Json body;
};

namespace detail {

[[noreturn]] inline void fail(const Document& d, const std::string& what) {
  throw document_error(d.file + ": document '" + d.label + "': " + what);
}

inline const Json& field(const Document& d, const char* name) {
  if (!d.body.contains(name)) fail(d, std::string("missing field '") + name + "'");
  return d.body.at(name);
}

inline std::string text(const Document& d, const Json& j, const char* what) {
  if (!j.is_string()) fail(d, std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline double real(const Document& d, const Json& j, const char* what) {
  if (!j.is_number()) fail(d, std::string(what) + " must be a number");
  return j.get<double>();
}

inline std::vector<std::string> labels(const Document& d, const char* name) {
  const Json& j = field(d, name);
  if (!j.is_array()) fail(d, std::string("'") + name + "' must be an array of labels");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& x : j) {
    auto s = text(d, x, name);
    if (!seen.insert(s).second) fail(d, "duplicate label '" + s + "'");
    out.push_back(std::move(s));
  }
  return out;
}

inline Elem index(const Document& d, const std::vector<std::string>& labels, const Json& j) {
  const auto s = text(d, j, "element reference");
  for (Elem i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return i;
  fail(d, "unknown element '" + s + "'");
}

/// Rows of a fixed arity, each a list of element labels.
inline std::vector<std::vector<Elem>> tuples(const Document& d, const std::vector<std::string>& labels,
                                             const char* name, std::size_t arity) {
  const Json& j = field(d, name);
  if (!j.is_array()) fail(d, std::string("'") + name + "' must be an array");
  std::vector<std::vector<Elem>> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != arity)
      fail(d, std::string("entries of '") + name + "' must have " + std::to_string(arity) + " labels");
    std::vector<Elem> t;
    for (const auto& x : row) t.push_back(index(d, labels, x));
    out.push_back(std::move(t));
  }
  return out;
}

inline Rational rational(const Document& d, const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number()) return from_double(j.get<double>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(d, e.what());
  }
  fail(d, "state values must be numbers or \"p/q\" strings");
}

inline std::vector<double> reals(const Document& d, const Json& j, const char* what) {
  if (!j.is_array()) fail(d, std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(real(d, x, what));
  return out;
}

}  // namespace detail

/// Reads a file holding one document object or an array of them.
inline std::vector<Document> load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw document_error(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json root;
  try {
    root = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw document_error(path + ": " + e.what());
  }
  if (root.is_object()) root = Json::array({root});
  if (!root.is_array() || root.empty()) throw document_error(path + ": expected a document or a non-empty array");
  std::vector<Document> out;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const Json& j = root[i];
    if (!j.is_object()) throw document_error(path + ": document " + std::to_string(i) + " is not an object");
    if (!j.contains("kind") || !j["kind"].is_string())
      throw document_error(path + ": document " + std::to_string(i) + " has no kind");
    Document d{path, j["kind"].get<std::string>(), "", j};
    if (!known_kind(d.kind)) throw document_error(path + ": unknown kind '" + d.kind + "'");
    if (j.contains("label")) {
      if (!j["label"].is_string()) throw document_error(path + ": label must be a string");
      d.label = j["label"].get<std::string>();
    } else {
      d.label = d.kind + "#" + std::to_string(i);
    }
    for (const auto& o : out)
      if (o.label == d.label) throw document_error(path + ": duplicate document label '" + d.label + "'");
    out.push_back(std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Order structures

struct PosetInput {
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq;  // reflexive-transitive closure of the pairs
};

inline PosetInput poset_input(const Document& d) {
  PosetInput p;
  p.labels = detail::labels(d, "elements");
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& t : detail::tuples(d, p.labels, "leq", 2)) pairs.emplace_back(t[0], t[1]);
  p.leq = FinitePoset::closure(p.labels.size(), pairs);
  return p;
}

struct OrtholatticeInput {
  PosetInput order;
  std::vector<Elem> perp;  // kUndefined where no complement is given
  std::optional<Elem> zero;
  std::optional<Elem> one;
};

/// `perp` pairs [a, b] mean b = a'; the reverse pair is implied.
inline OrtholatticeInput ortholattice_input(const Document& d) {
  OrtholatticeInput o;
  o.order = poset_input(d);
  const auto& labels = o.order.labels;
  o.perp.assign(labels.size(), kUndefined);
  const auto pairs = detail::tuples(d, labels, "perp", 2);
  auto assign = [&](Elem a, Elem b) {
    if (o.perp[a] != kUndefined && o.perp[a] != b) detail::fail(d, "conflicting complements for '" + labels[a] + "'");
    o.perp[a] = b;
  };
  for (const auto& t : pairs) assign(t[0], t[1]);
  for (const auto& t : pairs)
    if (o.perp[t[1]] == kUndefined) o.perp[t[1]] = t[0];
  if (d.body.contains("zero")) o.zero = detail::index(d, labels, d.body["zero"]);
  if (d.body.contains("one")) o.one = detail::index(d, labels, d.body["one"]);
  return o;
}

// ---------------------------------------------------------------------------
// Effect and MV algebras

/// Cells listed in `osum` are set as given; the mirrored cell is filled
/// only when it is not listed itself. A cell listed twice with different
/// sums is a schema error.
inline OrthosumTable effect_table(const Document& d) {
  const auto labels = detail::labels(d, "elements");
  if (labels.empty()) detail::fail(d, "no elements");
  OrthosumTable t(labels, detail::index(d, labels, detail::field(d, "zero")),
                  detail::index(d, labels, detail::field(d, "one")));
  const auto rows = detail::tuples(d, labels, "osum", 3);
  for (const auto& r : rows) {
    const Elem old = t.at(r[0], r[1]);
    if (old != kUndefined && old != r[2])
      detail::fail(d, "conflicting sums for (" + labels[r[0]] + ", " + labels[r[1]] + ")");
    t.set(r[0], r[1], r[2]);
  }
  for (const auto& r : rows)
    if (t.at(r[1], r[0]) == kUndefined) t.set(r[1], r[0], r[2]);
  return t;
}

inline MVTable mv_table(const Document& d) {
  MVTable m;
  m.labels = detail::labels(d, "elements");
  const std::size_t n = m.labels.size();
  if (n == 0) detail::fail(d, "no elements");
  m.zero = detail::index(d, m.labels, detail::field(d, "zero"));
  m.one = detail::index(d, m.labels, detail::field(d, "one"));
  m.plus.assign(n * n, kUndefined);
  for (const auto& r : detail::tuples(d, m.labels, "plus", 3)) {
    Elem& cell = m.plus[r[0] * n + r[1]];
    if (cell != kUndefined && cell != r[2]) detail::fail(d, "conflicting sums in 'plus'");
    cell = r[2];
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (m.plus[x * n + y] == kUndefined) detail::fail(d, "'plus' must be total");
  m.perp.assign(n, kUndefined);
  for (const auto& r : detail::tuples(d, m.labels, "perp", 2)) {
    if (m.perp[r[0]] != kUndefined && m.perp[r[0]] != r[1]) detail::fail(d, "conflicting entries in 'perp'");
    m.perp[r[0]] = r[1];
  }
  for (Elem x = 0; x < n; ++x)
    if (m.perp[x] == kUndefined) detail::fail(d, "'perp' must be total");
  return m;
}

// ---------------------------------------------------------------------------
// Numeric instances

/// Row-major entries; symmetry is checked by the caller.
inline Eigen::MatrixXd matrix_entries(const Document& d) {
  const Json& jn = detail::field(d, "n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) detail::fail(d, "'n' must be a positive integer");
  const auto n = static_cast<Eigen::Index>(jn.get<long long>());
  const auto entries = detail::reals(d, detail::field(d, "entries"), "'entries'");
  if (entries.size() != static_cast<std::size_t>(n * n)) detail::fail(d, "'entries' must hold n*n numbers");
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = entries[static_cast<std::size_t>(i * n + j)];
  return m;
}

inline SymMatrix sym_matrix(const Document& d) {
  try {
    return SymMatrix(matrix_entries(d));
  } catch (const std::invalid_argument& e) {
    detail::fail(d, e.what());
  }
}

struct FunctionInput {
  FunctionAlgebra algebra{std::size_t{0}};
  std::vector<std::string> names;
  std::vector<RealFunction> elements;
};

inline FunctionInput function_input(const Document& d) {
  FunctionInput f;
  const auto points = detail::labels(d, "points");
  f.algebra = FunctionAlgebra(points);
  const Json& values = detail::field(d, "values");
  if (!values.is_object()) detail::fail(d, "'values' must map element labels to arrays");
  for (const auto& [name, v] : values.items()) {
    const auto xs = detail::reals(d, v, "element values");
    if (xs.size() != points.size()) detail::fail(d, "element '" + name + "' needs one value per point");
    f.names.push_back(name);
    f.elements.emplace_back(std::span<const double>(xs));
  }
  return f;
}

// ---------------------------------------------------------------------------
// States

struct StateInput {
  std::string over;
  /// Exact value table over an effect algebra, in element order.
  std::optional<RationalVector> table;
  /// Probability weights over the points of a function algebra.
  std::optional<RealFunction> vector;
  /// Density matrix for a state on Sym(n).
  std::optional<Eigen::MatrixXd> density;
};

inline const Document& find(const std::vector<Document>& docs, const std::string& label) {
  for (const auto& d : docs)
    if (d.label == label) return d;
  throw document_error("no document labelled '" + label + "'");
}

/// A table or vector may be an array in element order or an object keyed by
/// element (point) labels covering every element.
inline StateInput state_input(const Document& d, const std::vector<Document>& workspace) {
  StateInput s;
  s.over = detail::text(d, detail::field(d, "over"), "'over'");
  const Document& target = find(workspace, s.over);
  auto keyed = [&](const Json& j, const std::vector<std::string>& names, auto convert) {
    using T = decltype(convert(j));
    std::vector<T> out;
    if (j.is_array()) {
      if (j.size() != names.size()) detail::fail(d, "state needs one value per element of '" + s.over + "'");
      for (const auto& x : j) out.push_back(convert(x));
    } else if (j.is_object()) {
      if (j.size() != names.size()) detail::fail(d, "state needs one value per element of '" + s.over + "'");
      for (const auto& name : names) {
        if (!j.contains(name)) detail::fail(d, "state has no value for '" + name + "'");
        out.push_back(convert(j.at(name)));
      }
    } else {
      detail::fail(d, "state values must be an array or an object");
    }
    return out;
  };
  const int forms = d.body.contains("table") + d.body.contains("vector") + d.body.contains("density");
  if (forms != 1) detail::fail(d, "state needs exactly one of 'table', 'vector', 'density'");
  if (d.body.contains("table")) {
    std::vector<std::string> names;
    if (target.kind == "effect_algebra") names = detail::labels(target, "elements");
    else detail::fail(d, "'table' states need an effect_algebra");
    s.table = keyed(d.body["table"], names, [&](const Json& x) { return detail::rational(d, x); });
  } else if (d.body.contains("vector")) {
    if (target.kind != "function_algebra") detail::fail(d, "'vector' states need a function_algebra");
    const auto xs = keyed(d.body["vector"], detail::labels(target, "points"),
                          [&](const Json& x) { return detail::real(d, x, "state value"); });
    s.vector = RealFunction(std::span<const double>(xs));
  } else {
    if (target.kind != "sym_matrix") detail::fail(d, "'density' states need a sym_matrix");
    const auto n = static_cast<Eigen::Index>(sym_matrix(target).n());
    const auto xs = detail::reals(d, d.body["density"], "'density'");
    if (xs.size() != static_cast<std::size_t>(n * n)) detail::fail(d, "'density' must hold n*n numbers");
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = xs[static_cast<std::size_t>(i * n + j)];
    s.density = m;
  }
  return s;
}

}  // namespace synaptica::doc
