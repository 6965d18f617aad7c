#include "hombra/structure_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hombra/errors.hpp"

namespace hombra {

namespace {

using nlohmann::json;

// Walks a parsed document, keeping a JSON pointer for error messages.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(where() + ": " + what);
  }
  [[noreturn]] void mismatch(const std::string& what) const { throw DimensionMismatch(where() + ": " + what); }

  [[nodiscard]] bool has(const char* key) const { return j_.is_object() && j_.contains(key); }
  [[nodiscard]] Reader field(const char* key) const {
    if (!has(key)) fail(std::string("missing key \"") + key + "\"");
    return {j_.at(key), path_ + "/" + key};
  }
  [[nodiscard]] Reader at(std::size_t i) const { return {j_.at(i), path_ + "/" + std::to_string(i)}; }

  std::size_t size(std::optional<std::size_t> expected = {}) const {
    if (!j_.is_array()) fail("expected an array");
    if (expected && j_.size() != *expected) {
      mismatch("expected " + std::to_string(*expected) + " entries, got " + std::to_string(j_.size()));
    }
    return j_.size();
  }

  [[nodiscard]] std::size_t index(std::size_t bound) const {
    if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<long long>() >= 0)) {
      fail("expected a non-negative integer");
    }
    const auto v = j_.get<unsigned long long>();
    if (v >= bound) mismatch("index " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
  }

  [[nodiscard]] std::size_t positive() const {
    if (!j_.is_number_integer() || j_.get<long long>() <= 0) fail("expected a positive integer");
    return static_cast<std::size_t>(j_.get<long long>());
  }

  [[nodiscard]] std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  [[nodiscard]] Scalar scalar() const {
    if (j_.is_number_integer()) return Scalar(j_.get<long>());
    if (!j_.is_string()) fail("expected a coefficient string");
    try {
      return Scalar::parse(j_.get<std::string>());
    } catch (const DivisionByZero&) {
      throw DivisionByZero(path_);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  [[nodiscard]] Vec vec(std::size_t n) const {
    size(n);
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = at(i).scalar();
    return v;
  }

  // rows x cols matrix written row by row
  [[nodiscard]] LinMap matrix(std::size_t rows, std::size_t cols) const {
    size(rows);
    LinMap f(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Vec row = at(r).vec(cols);
      for (std::size_t c = 0; c < cols; ++c) f(r, c) = row[c];
    }
    return f;
  }

  [[nodiscard]] const json& raw() const { return j_; }

 private:
  [[nodiscard]] std::string where() const { return path_.empty() ? std::string("/") : path_; }

  const json& j_;
  std::string path_;
};

json scalar_json(const Scalar& s) { return s.to_string(); }

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

json matrix_json(const LinMap& f) {
  json out = json::array();
  for (std::size_t r = 0; r < f.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(scalar_json(f(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

const std::set<std::string> kKnownKeys = {"alpha", "antipode", "antipode_exponent", "basis", "beta",    "comul",
                                          "counit", "dim",     "mul",     "params",   "scalars", "truncation",
                                          "unit"};

}  // namespace

std::vector<std::string> default_basis(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

HomBialgebra StructureFile::bialgebra() const {
  if (!algebra) throw DimensionMismatch("structure has no algebra part (mul, unit, alpha)");
  if (!coalgebra) throw DimensionMismatch("structure has no coalgebra part (comul, counit, beta)");
  return {*algebra, *coalgebra};
}

HomHopfCandidate StructureFile::hopf() const {
  if (!antipode) throw DimensionMismatch("structure has no antipode");
  return {bialgebra(), *antipode};
}

StructureFile StructureFile::of(const HomBialgebra& b, std::vector<std::string> basis) {
  b.validate();
  StructureFile s;
  s.dim = b.dim();
  s.basis = basis.empty() ? default_basis(s.dim) : std::move(basis);
  if (s.basis.size() != s.dim) throw DimensionMismatch("wrong number of basis names");
  s.algebra = b.algebra;
  s.coalgebra = b.coalgebra;
  return s;
}

StructureFile StructureFile::of(const HomHopfCandidate& h, std::vector<std::string> basis) {
  h.validate();
  StructureFile s = of(h.bialgebra, std::move(basis));
  s.antipode = h.antipode;
  return s;
}

StructureFile parse_structure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  const Reader root(doc, "");
  if (!doc.is_object()) root.fail("expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (!kKnownKeys.count(key)) root.fail("unknown key \"" + key + "\"");
  }

  StructureFile s;
  const std::size_t n = s.dim = root.field("dim").positive();
  if (root.has("scalars") && root.field("scalars").string() != "rational") {
    root.field("scalars").fail("only \"rational\" scalars are supported");
  }
  if (root.has("basis")) {
    const Reader b = root.field("basis");
    b.size(n);
    for (std::size_t i = 0; i < n; ++i) s.basis.push_back(b.at(i).string());
  } else {
    s.basis = default_basis(n);
  }

  const bool any_alg = root.has("mul") || root.has("unit") || root.has("alpha");
  if (any_alg) {
    HomAlgebra a;
    a.dim = n;
    a.mul = LinMap(n, n * n);
    const Reader mul = root.field("mul");
    mul.size(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Reader row = mul.at(i);
      row.size(n);
      for (std::size_t j = 0; j < n; ++j) a.mul.set_column(i * n + j, row.at(j).vec(n));
    }
    a.unit = root.field("unit").vec(n);
    a.alpha = root.field("alpha").matrix(n, n);
    if (root.has("truncation")) {
      const Reader t = root.field("truncation");
      Truncation tr;
      const Reader deg = t.field("degree");
      deg.size(n);
      for (std::size_t i = 0; i < n; ++i) tr.degree.push_back(static_cast<unsigned>(deg.at(i).index(1u << 20)));
      tr.max_degree = static_cast<unsigned>(t.field("max_degree").index(1u << 20));
      a.truncation = std::move(tr);
    }
    s.algebra = std::move(a);
  } else if (root.has("truncation")) {
    root.field("truncation").fail("truncation needs an algebra part");
  }

  const bool any_co = root.has("comul") || root.has("counit") || root.has("beta");
  if (any_co) {
    HomCoalgebra c;
    c.dim = n;
    c.comul = LinMap(n * n, n);
    const Reader comul = root.field("comul");
    comul.size(n);
    for (std::size_t x = 0; x < n; ++x) {
      const Reader terms = comul.at(x);
      const std::size_t count = terms.size();
      for (std::size_t t = 0; t < count; ++t) {
        const Reader term = terms.at(t);
        term.size(3);
        const Scalar coef = term.at(0).scalar();
        const std::size_t i = term.at(1).index(n);
        const std::size_t j = term.at(2).index(n);
        c.comul(i * n + j, x) += coef;
      }
    }
    c.counit = LinMap::row(root.field("counit").vec(n));
    c.beta = root.field("beta").matrix(n, n);
    s.coalgebra = std::move(c);
  }

  if (root.has("antipode")) s.antipode = root.field("antipode").matrix(n, n);
  if (root.has("antipode_exponent")) {
    s.antipode_exponent = static_cast<unsigned>(root.field("antipode_exponent").index(1u << 20));
  }
  if (root.has("params")) {
    const Reader p = root.field("params");
    if (!p.raw().is_object()) p.fail("expected an object");
    for (const auto& [key, value] : p.raw().items()) s.params.emplace(key, p.field(key.c_str()).scalar());
  }
  return s;
}

StructureFile load_structure(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

std::string emit_structure(const StructureFile& s) {
  const std::size_t n = s.dim;
  // key -> (value, one element per line)
  std::map<std::string, std::pair<json, bool>> fields;
  fields["dim"] = {n, false};
  fields["basis"] = {s.basis, false};
  fields["scalars"] = {"rational", false};
  if (s.algebra) {
    const HomAlgebra& a = *s.algebra;
    json mul = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(vec_json(a.mul.column(i * n + j)));
      mul.push_back(std::move(row));
    }
    fields["mul"] = {std::move(mul), true};
    fields["unit"] = {vec_json(a.unit), false};
    fields["alpha"] = {matrix_json(a.alpha), true};
    if (a.truncation) {
      fields["truncation"] = {json{{"degree", a.truncation->degree}, {"max_degree", a.truncation->max_degree}},
                              false};
    }
  }
  if (s.coalgebra) {
    const HomCoalgebra& c = *s.coalgebra;
    json comul = json::array();
    for (std::size_t x = 0; x < n; ++x) {
      json terms = json::array();
      for (std::size_t idx = 0; idx < n * n; ++idx) {
        const Scalar& v = c.comul(idx, x);
        if (!v.is_zero()) terms.push_back(json::array({scalar_json(v), idx / n, idx % n}));
      }
      comul.push_back(std::move(terms));
    }
    fields["comul"] = {std::move(comul), true};
    Vec counit(n);
    for (std::size_t i = 0; i < n; ++i) counit[i] = c.counit(0, i);
    fields["counit"] = {vec_json(counit), false};
    fields["beta"] = {matrix_json(c.beta), true};
  }
  if (s.antipode) fields["antipode"] = {matrix_json(*s.antipode), true};
  if (s.antipode_exponent) fields["antipode_exponent"] = {*s.antipode_exponent, false};
  if (!s.params.empty()) {
    json p = json::object();
    for (const auto& [k, v] : s.params) p[k] = scalar_json(v);
    fields["params"] = {std::move(p), false};
  }

  std::string out = "{\n";
  std::size_t i = 0;
  for (const auto& [key, entry] : fields) {
    const auto& [value, per_line] = entry;
    out += "  " + json(key).dump() + ": ";
    if (per_line && !value.empty()) {
      out += "[\n";
      for (std::size_t k = 0; k < value.size(); ++k) {
        out += "    " + value[k].dump() + (k + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += (++i < fields.size() ? ",\n" : "\n");
  }
  out += "}\n";
  return out;
}

void save_structure(const StructureFile& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << emit_structure(s);
}

}  // namespace hombra
