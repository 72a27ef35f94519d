#include "hompre/document.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "hompre/errors.hpp"
#include "json.hpp"

namespace hompre {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, 12> kKindNames = {
    "hom_lie",   "hom_pre_lie", "representation", "matched_pair_lie", "matched_pair_pre_lie", "bilinear_form",
    "tensor2",   "linear_map",  "dendriform",     "bialgebra",        "manin_triple",         "o_operator",
};

// ---- writing ----

ojson matrix_json(const LinearMap& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson tensor3_json(const Tensor3& t) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = 0; j < t.dim(1); ++j)
      for (std::size_t k = 0; k < t.dim(2); ++k) {
        if (t(i, j, k).is_zero()) continue;
        ojson e = ojson::object();
        e["i"] = i + 1;
        e["j"] = j + 1;
        e["k"] = k + 1;
        e["c"] = t(i, j, k).str();
        out.push_back(std::move(e));
      }
  return out;
}

ojson tensor2_entries(const Tensor2& t) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < t.dim_left(); ++i)
    for (std::size_t j = 0; j < t.dim_right(); ++j) {
      if (t(i, j).is_zero()) continue;
      ojson e = ojson::object();
      e["i"] = i + 1;
      e["j"] = j + 1;
      e["c"] = t(i, j).str();
      out.push_back(std::move(e));
    }
  return out;
}

ojson family_json(const MapFamily& f) {
  ojson out = ojson::array();
  for (const auto& m : f) out.push_back(matrix_json(m));
  return out;
}

ojson indices_json(const std::vector<std::size_t>& idx) {
  ojson out = ojson::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

ojson head(Kind k) {
  ojson j = ojson::object();
  j["kind"] = std::string(kind_name(k));
  return j;
}

ojson to_json(const Document& doc);

struct Writer {
  ojson operator()(const HomLieAlgebra& g) const {
    ojson j = head(Kind::hom_lie);
    j["dim"] = g.dim;
    j["bracket"] = tensor3_json(g.bracket);
    j["twist"] = matrix_json(g.twist);
    return j;
  }
  ojson operator()(const HomPreLieAlgebra& a) const {
    ojson j = head(Kind::hom_pre_lie);
    j["dim"] = a.dim;
    j["product"] = tensor3_json(a.product);
    j["twist"] = matrix_json(a.twist);
    return j;
  }
  ojson operator()(const HomLieRep& r) const {
    ojson j = head(Kind::representation);
    j["algebra"] = (*this)(r.algebra);
    j["space_dim"] = r.space_dim;
    j["beta"] = matrix_json(r.beta);
    j["rho"] = family_json(r.rho);
    return j;
  }
  ojson operator()(const HomPreLieRep& r) const {
    ojson j = head(Kind::representation);
    j["algebra"] = (*this)(r.algebra);
    j["space_dim"] = r.space_dim;
    j["beta"] = matrix_json(r.beta);
    j["rho"] = family_json(r.rho);
    j["mu"] = family_json(r.mu);
    return j;
  }
  ojson operator()(const LieMatchedPair& mp) const {
    ojson j = head(Kind::matched_pair_lie);
    j["g"] = (*this)(mp.g);
    j["h"] = (*this)(mp.h);
    j["rho"] = family_json(mp.rho);
    j["rho2"] = family_json(mp.rho2);
    return j;
  }
  ojson operator()(const PreLieMatchedPair& mp) const {
    ojson j = head(Kind::matched_pair_pre_lie);
    j["a"] = (*this)(mp.a);
    j["b"] = (*this)(mp.b);
    j["l_a"] = family_json(mp.lA);
    j["r_a"] = family_json(mp.rA);
    j["l_b"] = family_json(mp.lB);
    j["r_b"] = family_json(mp.rB);
    return j;
  }
  ojson operator()(const BilinearForm& b) const {
    ojson j = head(Kind::bilinear_form);
    j["dim"] = b.dim;
    j["symmetry"] = b.symmetry == Symmetry::skew ? "skew" : "symmetric";
    j["matrix"] = matrix_json(b.matrix.as_map());
    return j;
  }
  ojson operator()(const Tensor2& t) const {
    ojson j = head(Kind::tensor2);
    j["dim_left"] = t.dim_left();
    j["dim_right"] = t.dim_right();
    j["entries"] = tensor2_entries(t);
    return j;
  }
  ojson operator()(const LinearMap& m) const {
    ojson j = head(Kind::linear_map);
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["matrix"] = matrix_json(m);
    return j;
  }
  ojson operator()(const HomLDendriform& d) const {
    ojson j = head(Kind::dendriform);
    j["dim"] = d.dim;
    j["left"] = tensor3_json(d.left);
    j["right"] = tensor3_json(d.right);
    j["twist"] = matrix_json(d.twist);
    return j;
  }
  ojson operator()(const Bialgebra& b) const {
    ojson j = head(Kind::bialgebra);
    j["primal"] = (*this)(b.primal);
    j["dual"] = (*this)(b.dual);
    j["phi_star"] = matrix_json(b.phi_star);
    j["psi_star"] = matrix_json(b.psi_star);
    return j;
  }
  ojson operator()(const ManinTriple& m) const {
    ojson j = head(Kind::manin_triple);
    j["total"] = (*this)(m.total);
    j["form"] = (*this)(m.form);
    j["part1"] = indices_json(m.part1);
    j["part2"] = indices_json(m.part2);
    return j;
  }
  ojson operator()(const OOperator& o) const {
    ojson j = head(Kind::o_operator);
    j["representation"] = (*this)(o.rep);
    j["T"] = matrix_json(o.T);
    return j;
  }
};

ojson to_json(const Document& doc) { return std::visit(Writer{}, doc.value()); }

bool is_flat(const ojson& j) { return j.is_primitive(); }

void print(const ojson& j, std::size_t indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    const bool inline_ = std::all_of(j.begin(), j.end(), is_flat);
    out += inline_ ? "{" : "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += inline_ ? ", " : ",\n";
      first = false;
      if (!inline_) out += pad;
      out += ojson(it.key()).dump() + ": ";
      print(it.value(), indent + 2, out);
    }
    out += inline_ ? "}" : "\n" + std::string(indent, ' ') + "}";
    return;
  }
  if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    const bool inline_ = std::all_of(j.begin(), j.end(), is_flat);
    out += inline_ ? "[" : "[\n";
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += inline_ ? ", " : ",\n";
      first = false;
      if (!inline_) out += pad;
      print(e, indent + 2, out);
    }
    out += inline_ ? "]" : "\n" + std::string(indent, ' ') + "]";
    return;
  }
  out += j.dump();
}

std::string render(const ojson& j) {
  std::string out;
  print(j, 0, out);
  out += '\n';
  return out;
}

// ---- reading ----

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError((path.empty() ? std::string("document") : path) + ": " + msg);
}

class Obj {
public:
  Obj(const json& j, std::string path, std::initializer_list<const char*> keys) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) fail(path_, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
      if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }) == keys.end())
        fail(path_, "unknown field \"" + it.key() + "\"");
    for (const char* k : keys)
      if (!j.contains(k)) fail(path_, std::string("missing field \"") + k + "\"");
  }
  const json& operator[](const char* key) const { return j_.at(key); }
  std::string path(const char* key) const { return path_ + "/" + key; }

private:
  const json& j_;
  std::string path_;
};

std::size_t read_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > 64) fail(path, "dimension too large");
  return static_cast<std::size_t>(v);
}

std::size_t read_index(const json& j, const std::string& path, std::size_t bound) {
  if (!j.is_number_unsigned()) fail(path, "expected a one-based index");
  const auto v = j.get<std::uint64_t>();
  if (v < 1 || v > bound) fail(path, "index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
  return static_cast<std::size_t>(v - 1);
}

Scalar read_scalar(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

LinearMap read_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  LinearMap m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "/" + std::to_string(i);
    const json& row = j[i];
    if (!row.is_array()) fail(rp, "expected a row array");
    if (row.size() != cols)
      fail(rp, "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = read_scalar(row[c], rp + "/" + std::to_string(c));
  }
  return m;
}

Tensor3 read_tensor3(const json& j, const std::string& path, std::size_t n) {
  if (!j.is_array()) fail(path, "expected an array of entries");
  Tensor3 t = Tensor3::cube(n);
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string ep = path + "/" + std::to_string(e);
    const Obj o(j[e], ep, {"i", "j", "k", "c"});
    const std::array<std::size_t, 3> idx{read_index(o["i"], o.path("i"), n), read_index(o["j"], o.path("j"), n),
                                         read_index(o["k"], o.path("k"), n)};
    if (!seen.insert(idx).second) fail(ep, "duplicate entry");
    t(idx[0], idx[1], idx[2]) = read_scalar(o["c"], o.path("c"));
  }
  return t;
}

Tensor2 read_tensor2_entries(const json& j, const std::string& path, std::size_t dl, std::size_t dr) {
  if (!j.is_array()) fail(path, "expected an array of entries");
  Tensor2 t(dl, dr);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string ep = path + "/" + std::to_string(e);
    const Obj o(j[e], ep, {"i", "j", "c"});
    const auto i = read_index(o["i"], o.path("i"), dl), k = read_index(o["j"], o.path("j"), dr);
    if (!seen.insert({i, k}).second) fail(ep, "duplicate entry");
    t(i, k) = read_scalar(o["c"], o.path("c"));
  }
  return t;
}

MapFamily read_family(const json& j, const std::string& path, std::size_t count, std::size_t rows,
                      std::size_t cols) {
  if (!j.is_array()) fail(path, "expected an array of matrices");
  if (j.size() != count)
    fail(path, "expected " + std::to_string(count) + " matrices, found " + std::to_string(j.size()));
  MapFamily f;
  for (std::size_t i = 0; i < count; ++i) f.push_back(read_matrix(j[i], path + "/" + std::to_string(i), rows, cols));
  return f;
}

std::vector<std::size_t> read_indices(const json& j, const std::string& path, std::size_t bound) {
  if (!j.is_array()) fail(path, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_index(j[i], path + "/" + std::to_string(i), bound));
  return out;
}

Kind peek_kind(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (!j.contains("kind")) fail(path, "missing field \"kind\"");
  if (!j["kind"].is_string()) fail(path + "/kind", "expected a string");
  try {
    return kind_from_name(j["kind"].get<std::string>());
  } catch (const ParseError& e) {
    fail(path + "/kind", e.what());
  }
}

Document read_doc(const json& j, const std::string& path);

template <typename T>
T read_as(const json& j, const std::string& path, Kind expected) {
  if (peek_kind(j, path) != expected) fail(path, "expected kind \"" + std::string(kind_name(expected)) + "\"");
  const Document d = read_doc(j, path);
  if (!d.holds<T>()) fail(path, "unexpected representation type");
  return d.as<T>();
}

Document read_doc(const json& j, const std::string& path) {
  switch (peek_kind(j, path)) {
    case Kind::hom_lie: {
      const Obj o(j, path, {"kind", "dim", "bracket", "twist"});
      const auto n = read_count(o["dim"], o.path("dim"));
      return HomLieAlgebra{n, read_tensor3(o["bracket"], o.path("bracket"), n),
                           read_matrix(o["twist"], o.path("twist"), n, n)};
    }
    case Kind::hom_pre_lie: {
      const Obj o(j, path, {"kind", "dim", "product", "twist"});
      const auto n = read_count(o["dim"], o.path("dim"));
      return HomPreLieAlgebra{n, read_tensor3(o["product"], o.path("product"), n),
                              read_matrix(o["twist"], o.path("twist"), n, n)};
    }
    case Kind::representation: {
      if (!j.is_object() || !j.contains("algebra")) fail(path, "missing field \"algebra\"");
      const Kind ak = peek_kind(j["algebra"], path + "/algebra");
      if (ak == Kind::hom_lie) {
        const Obj o(j, path, {"kind", "algebra", "space_dim", "beta", "rho"});
        auto g = read_as<HomLieAlgebra>(o["algebra"], o.path("algebra"), Kind::hom_lie);
        const auto m = read_count(o["space_dim"], o.path("space_dim"));
        auto beta = read_matrix(o["beta"], o.path("beta"), m, m);
        auto rho = read_family(o["rho"], o.path("rho"), g.dim, m, m);
        return HomLieRep{std::move(g), m, std::move(beta), std::move(rho)};
      }
      const Obj o(j, path, {"kind", "algebra", "space_dim", "beta", "rho", "mu"});
      auto a = read_as<HomPreLieAlgebra>(o["algebra"], o.path("algebra"), Kind::hom_pre_lie);
      const auto m = read_count(o["space_dim"], o.path("space_dim"));
      auto beta = read_matrix(o["beta"], o.path("beta"), m, m);
      auto rho = read_family(o["rho"], o.path("rho"), a.dim, m, m);
      auto mu = read_family(o["mu"], o.path("mu"), a.dim, m, m);
      return HomPreLieRep{std::move(a), m, std::move(beta), std::move(rho), std::move(mu)};
    }
    case Kind::matched_pair_lie: {
      const Obj o(j, path, {"kind", "g", "h", "rho", "rho2"});
      auto g = read_as<HomLieAlgebra>(o["g"], o.path("g"), Kind::hom_lie);
      auto h = read_as<HomLieAlgebra>(o["h"], o.path("h"), Kind::hom_lie);
      auto rho = read_family(o["rho"], o.path("rho"), g.dim, h.dim, h.dim);
      auto rho2 = read_family(o["rho2"], o.path("rho2"), h.dim, g.dim, g.dim);
      return LieMatchedPair{std::move(g), std::move(h), std::move(rho), std::move(rho2)};
    }
    case Kind::matched_pair_pre_lie: {
      const Obj o(j, path, {"kind", "a", "b", "l_a", "r_a", "l_b", "r_b"});
      auto a = read_as<HomPreLieAlgebra>(o["a"], o.path("a"), Kind::hom_pre_lie);
      auto b = read_as<HomPreLieAlgebra>(o["b"], o.path("b"), Kind::hom_pre_lie);
      auto la = read_family(o["l_a"], o.path("l_a"), a.dim, b.dim, b.dim);
      auto ra = read_family(o["r_a"], o.path("r_a"), a.dim, b.dim, b.dim);
      auto lb = read_family(o["l_b"], o.path("l_b"), b.dim, a.dim, a.dim);
      auto rb = read_family(o["r_b"], o.path("r_b"), b.dim, a.dim, a.dim);
      return PreLieMatchedPair{std::move(a), std::move(b), std::move(la), std::move(ra), std::move(lb), std::move(rb)};
    }
    case Kind::bilinear_form: {
      const Obj o(j, path, {"kind", "dim", "symmetry", "matrix"});
      const auto n = read_count(o["dim"], o.path("dim"));
      const json& s = o["symmetry"];
      Symmetry sym;
      if (s == "skew")
        sym = Symmetry::skew;
      else if (s == "symmetric")
        sym = Symmetry::symmetric;
      else
        fail(o.path("symmetry"), "expected \"skew\" or \"symmetric\"");
      const auto m = read_matrix(o["matrix"], o.path("matrix"), n, n);
      return BilinearForm{n, Tensor2::from_map(m), sym};
    }
    case Kind::tensor2: {
      const Obj o(j, path, {"kind", "dim_left", "dim_right", "entries"});
      const auto dl = read_count(o["dim_left"], o.path("dim_left"));
      const auto dr = read_count(o["dim_right"], o.path("dim_right"));
      return read_tensor2_entries(o["entries"], o.path("entries"), dl, dr);
    }
    case Kind::linear_map: {
      const Obj o(j, path, {"kind", "rows", "cols", "matrix"});
      const auto r = read_count(o["rows"], o.path("rows"));
      const auto c = read_count(o["cols"], o.path("cols"));
      return read_matrix(o["matrix"], o.path("matrix"), r, c);
    }
    case Kind::dendriform: {
      const Obj o(j, path, {"kind", "dim", "left", "right", "twist"});
      const auto n = read_count(o["dim"], o.path("dim"));
      return HomLDendriform{n, read_tensor3(o["left"], o.path("left"), n),
                            read_tensor3(o["right"], o.path("right"), n),
                            read_matrix(o["twist"], o.path("twist"), n, n)};
    }
    case Kind::bialgebra: {
      const Obj o(j, path, {"kind", "primal", "dual", "phi_star", "psi_star"});
      auto p = read_as<HomPreLieAlgebra>(o["primal"], o.path("primal"), Kind::hom_pre_lie);
      auto d = read_as<HomPreLieAlgebra>(o["dual"], o.path("dual"), Kind::hom_pre_lie);
      const auto n = p.dim;
      auto phi = read_matrix(o["phi_star"], o.path("phi_star"), n * n, n);
      auto psi = read_matrix(o["psi_star"], o.path("psi_star"), d.dim * d.dim, d.dim);
      return Bialgebra{std::move(p), std::move(d), std::move(phi), std::move(psi)};
    }
    case Kind::manin_triple: {
      const Obj o(j, path, {"kind", "total", "form", "part1", "part2"});
      auto t = read_as<HomPreLieAlgebra>(o["total"], o.path("total"), Kind::hom_pre_lie);
      auto w = read_as<BilinearForm>(o["form"], o.path("form"), Kind::bilinear_form);
      auto p1 = read_indices(o["part1"], o.path("part1"), t.dim);
      auto p2 = read_indices(o["part2"], o.path("part2"), t.dim);
      return ManinTriple{std::move(t), std::move(w), std::move(p1), std::move(p2)};
    }
    case Kind::o_operator: {
      const Obj o(j, path, {"kind", "representation", "T"});
      auto r = read_as<HomPreLieRep>(o["representation"], o.path("representation"), Kind::representation);
      auto t = read_matrix(o["T"], o.path("T"), r.algebra.dim, r.space_dim);
      return OOperator{std::move(r), std::move(t)};
    }
  }
  fail(path, "unreachable kind");
}

json parse_json(std::string_view text) {
  std::vector<std::set<std::string>> keys;
  json::parser_callback_t cb = [&keys](int, json::parse_event_t ev, json& parsed) {
    if (ev == json::parse_event_t::object_start) keys.emplace_back();
    if (ev == json::parse_event_t::object_end) keys.pop_back();
    if (ev == json::parse_event_t::key && !keys.back().insert(parsed.get<std::string>()).second)
      throw ParseError("duplicate key \"" + parsed.get<std::string>() + "\"");
    return true;
  };
  try {
    return json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("] "); p != std::string::npos) msg = msg.substr(p + 2);
    if (msg.rfind("parse error at", 0) == 0)
      if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    throw ParseError(msg, line, col);
  }
}

}  // namespace

std::string_view kind_name(Kind k) { return kKindNames[static_cast<std::size_t>(k)]; }

Kind kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<Kind>(i);
  throw ParseError("unknown kind \"" + std::string(name) + "\"");
}

Kind Document::kind() const {
  struct V {
    Kind operator()(const HomLieAlgebra&) const { return Kind::hom_lie; }
    Kind operator()(const HomPreLieAlgebra&) const { return Kind::hom_pre_lie; }
    Kind operator()(const HomLieRep&) const { return Kind::representation; }
    Kind operator()(const HomPreLieRep&) const { return Kind::representation; }
    Kind operator()(const LieMatchedPair&) const { return Kind::matched_pair_lie; }
    Kind operator()(const PreLieMatchedPair&) const { return Kind::matched_pair_pre_lie; }
    Kind operator()(const BilinearForm&) const { return Kind::bilinear_form; }
    Kind operator()(const Tensor2&) const { return Kind::tensor2; }
    Kind operator()(const LinearMap&) const { return Kind::linear_map; }
    Kind operator()(const HomLDendriform&) const { return Kind::dendriform; }
    Kind operator()(const Bialgebra&) const { return Kind::bialgebra; }
    Kind operator()(const ManinTriple&) const { return Kind::manin_triple; }
    Kind operator()(const OOperator&) const { return Kind::o_operator; }
  };
  return std::visit(V{}, value_);
}

void Document::throw_wrong_kind(std::string_view role) const {
  throw UnsupportedKind(std::string(role) + ": unexpected document kind \"" + std::string(kind_name(kind())) + "\"");
}

Document parse_document(std::string_view text) { return read_doc(parse_json(text), ""); }

std::vector<Document> parse_documents(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array()) fail("", "expected an array of documents");
  std::vector<Document> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_doc(j[i], "/" + std::to_string(i)));
  return out;
}

std::string serialize(const Document& doc) { return render(to_json(doc)); }

std::string serialize_documents(const std::vector<Document>& docs) {
  ojson arr = ojson::array();
  for (const auto& d : docs) arr.push_back(to_json(d));
  return render(arr);
}

std::string serialize_report(const ValidationReport& report) {
  ojson j = ojson::object();
  j["valid"] = report.valid();
  j["failure_count"] = report.failure_count();
  ojson verdicts = ojson::array();
  for (const auto& [name, value] : report.verdicts()) {
    ojson v = ojson::object();
    v["name"] = name;
    v["holds"] = value;
    verdicts.push_back(std::move(v));
  }
  j["verdicts"] = std::move(verdicts);
  ojson failures = ojson::array();
  for (const auto& f : report.failures()) {
    ojson o = ojson::object();
    o["identity"] = f.identity;
    o["witness"] = indices_json(f.witness);
    ojson res = ojson::array();
    for (const auto& s : f.residual) res.push_back(s.str());
    o["residual"] = std::move(res);
    failures.push_back(std::move(o));
  }
  j["failures"] = std::move(failures);
  return render(j);
}

}  // namespace hompre
