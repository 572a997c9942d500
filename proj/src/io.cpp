#include "cyclotome/io.hpp"

#include <fstream>
#include <sstream>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw InputError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, "missing field \"" + key + "\"");
  return *it;
}

long long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long long>();
}

int small_int(const Json& j, const std::string& path) {
  const long long v = integer(j, path);
  if (v < -1'000'000 || v > 1'000'000) bad(path, "integer out of range");
  return static_cast<int>(v);
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }

std::vector<std::string> names(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(text(j[i], at(path, i)));
  return out;
}

// Rethrows library-level validation failures with the document path.
template <class F>
auto validated(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    bad(path, e.what());
  }
}

}  // namespace

Json parse_json_text(const std::string& body, const std::string& origin) {
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < body.size() && i + 1 < e.byte; ++i) {
      if (body[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON: " + msg);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

mpq_class parse_rational(const std::string& s) {
  auto fail = [&]() -> mpq_class { throw InputError("not an exact rational: \"" + s + "\""); };
  if (s.empty()) return fail();
  const auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      mpq_class q(s, 10);
      if (q.get_den() == 0) return fail();
      q.canonicalize();
      return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac = s.size() - dot - 1;
    if (s.find('/') != std::string::npos || frac == 0) return fail();
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    return fail();
  }
}

FiniteMonoid monoid_from_json(const Json& j) {
  FiniteMonoid M;
  M.elements = names(field(j, "elements", ""), "/elements");
  const Json& rows = array(field(j, "table", ""), "/table");
  for (std::size_t a = 0; a < rows.size(); ++a) {
    std::vector<int> row;
    for (std::size_t b = 0; b < array(rows[a], at("/table", a)).size(); ++b) {
      row.push_back(small_int(rows[a][b], at(at("/table", a), b)));
    }
    M.table.push_back(std::move(row));
  }
  M.identity = small_int(field(j, "identity", ""), "/identity");
  validated("/", [&] {
    M.validate();
    return 0;
  });
  return M;
}

FiniteCategory category_from_json(const Json& j) {
  FiniteCategory C;
  C.objects = names(field(j, "objects", ""), "/objects");
  const Json& arrows = array(field(j, "arrows", ""), "/arrows");
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    const std::string p = at("/arrows", f);
    C.arrows.push_back(text(field(arrows[f], "name", p), at(p, "name")));
    C.source.push_back(small_int(field(arrows[f], "source", p), at(p, "source")));
    C.target.push_back(small_int(field(arrows[f], "target", p), at(p, "target")));
  }
  const Json& ids = array(field(j, "identities", ""), "/identities");
  for (std::size_t c = 0; c < ids.size(); ++c) C.identities.push_back(small_int(ids[c], at("/identities", c)));
  const Json& rows = array(field(j, "table", ""), "/table");
  for (std::size_t f = 0; f < rows.size(); ++f) {
    std::vector<int> row;
    for (std::size_t g = 0; g < array(rows[f], at("/table", f)).size(); ++g) {
      const Json& v = rows[f][g];
      row.push_back(v.is_null() ? -1 : small_int(v, at(at("/table", f), g)));
    }
    C.compose.push_back(std::move(row));
  }
  validated("/", [&] {
    C.validate();
    return 0;
  });
  return C;
}

CyclicPresentation presentation_from_json(const Json& j) {
  CyclicPresentation P;
  const Json& cells = array(field(j, "cells", ""), "/cells");
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const std::string p = at("/cells", c);
    const int dim = small_int(field(cells[c], "dim", p), at(p, "dim"));
    if (dim < 0 || dim > 16) bad(at(p, "dim"), "cell dimension must lie in 0..16");
    P.cell_dims.push_back(dim);
  }
  if (P.cell_dims.empty()) bad("/cells", "a presentation needs at least one cell");
  const Json empty = Json::array();
  const Json& rels = j.contains("relations") ? array(j["relations"], "/relations") : empty;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::string p = at("/relations", r);
    const int level = small_int(field(rels[r], "level", p), at(p, "level"));
    if (level < 0 || level > 16) bad(at(p, "level"), "level must lie in 0..16");
    CyclicPresentation::Relation rel;
    for (const char* side : {"left", "right"}) {
      const std::string sp = at(p, side);
      const Json& s = field(rels[r], side, p);
      const int cell = small_int(field(s, "cell", sp), at(sp, "cell"));
      if (cell < 0 || static_cast<std::size_t>(cell) >= P.cell_dims.size()) bad(at(sp, "cell"), "cell index out of range");
      const int n = P.cell_dims[static_cast<std::size_t>(cell)];
      const Json& vals = array(field(s, "values", sp), at(sp, "values"));
      if (vals.size() != static_cast<std::size_t>(level) + 1) {
        bad(at(sp, "values"), "expected " + std::to_string(level + 1) + " values F(0)..F(level)");
      }
      std::vector<std::int64_t> samples;
      for (std::size_t k = 0; k < vals.size(); ++k) samples.push_back(integer(vals[k], at(at(sp, "values"), k)));
      samples.push_back(samples.front() + n + 1);
      const LambdaMor f = validated(at(sp, "values"), [&] { return normal_form(level, n, samples); });
      if (std::string(side) == "left") {
        rel.left_cell = cell;
        rel.left = f;
      } else {
        rel.right_cell = cell;
        rel.right = f;
      }
    }
    P.relations.push_back(rel);
  }
  validated("/", [&] {
    P.validate();
    return 0;
  });
  return P;
}

GradedAlgebra algebra_from_json(const Json& j) {
  GradedAlgebra A;
  const Json& f = field(j, "field", "");
  if (f.is_string()) {
    if (f.get<std::string>() != "Q") bad("/field", "expected \"Q\" or {\"Fp\": p}");
    A.field = Ring::rationals();
  } else if (f.is_object() && f.contains("Fp")) {
    const long long p = integer(f["Fp"], "/field/Fp");
    if (p < 2 || p > 2'147'483'647) bad("/field/Fp", "prime out of range");
    A.field = validated("/field/Fp", [&] { return Ring::prime_field(static_cast<std::uint32_t>(p)); });
  } else {
    bad("/field", "expected \"Q\" or {\"Fp\": p}");
  }
  const Json& basis = array(field(j, "basis", ""), "/basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string p = at("/basis", i);
    A.names.push_back(text(field(basis[i], "name", p), at(p, "name")));
    A.degrees.push_back(small_int(field(basis[i], "degree", p), at(p, "degree")));
  }
  if (A.names.empty()) bad("/basis", "the basis is empty");
  A.unit = small_int(field(j, "unit", ""), "/unit");
  if (A.unit < 0 || static_cast<std::size_t>(A.unit) >= A.dim()) bad("/unit", "unit index out of range");
  A.mult.assign(A.dim(), std::vector<std::vector<GradedAlgebra::Term>>(A.dim()));
  const Json& products = array(field(j, "products", ""), "/products");
  for (std::size_t r = 0; r < products.size(); ++r) {
    const std::string p = at("/products", r);
    const Json& e = array(products[r], p);
    if (e.size() != 4) bad(p, "expected [i, j, k, \"coefficient\"]");
    const int a = small_int(e[0], at(p, 0)), b = small_int(e[1], at(p, 1)), c = small_int(e[2], at(p, 2));
    const mpq_class coeff = validated(at(p, 3), [&] {
      if (e[3].is_number_integer()) return mpq_class(e[3].get<long>());
      return parse_rational(text(e[3], at(p, 3)));
    });
    validated(p, [&] {
      A.add_product(a, b, c, coeff);
      return 0;
    });
  }
  if (j.contains("commutative")) {
    if (!j["commutative"].is_boolean()) bad("/commutative", "expected a boolean");
    A.commutative = j["commutative"].get<bool>();
  }
  validated("/", [&] {
    A.validate();
    return 0;
  });
  return A;
}

Json to_json(const FiniteMonoid& M) {
  Json j;
  j["kind"] = "monoid";
  j["elements"] = M.elements;
  j["table"] = M.table;
  j["identity"] = M.identity;
  return j;
}

Json to_json(const GradedAlgebra& A) {
  Json j;
  if (A.field.kind == Ring::Kind::Fp) {
    j["field"] = {{"Fp", A.field.p}};
  } else {
    j["field"] = "Q";
  }
  j["basis"] = Json::array();
  for (std::size_t i = 0; i < A.dim(); ++i) j["basis"].push_back({{"name", A.names[i]}, {"degree", A.degrees[i]}});
  j["unit"] = A.unit;
  j["products"] = Json::array();
  for (std::size_t a = 0; a < A.dim(); ++a) {
    for (std::size_t b = 0; b < A.dim(); ++b) {
      for (const auto& [k, c] : A.mult[a][b]) j["products"].push_back({a, b, k, c.get_str()});
    }
  }
  j["commutative"] = A.commutative;
  return j;
}

std::shared_ptr<const CyclicSet> cyclic_set_from_json(const Json& j, int truncation) {
  const std::string kind = text(field(j, "kind", ""), "/kind");
  if (kind == "monoid") return std::make_shared<CyclicNerve>(monoid_from_json(j), truncation);
  if (kind == "category") return std::make_shared<CyclicNerve>(category_from_json(j), truncation);
  if (kind == "colimit") return std::make_shared<ColimitCyclicSet>(presentation_from_json(j), truncation);
  if (kind == "representable") {
    const int n = small_int(field(j, "n", ""), "/n");
    if (n < 0 || n > 16) bad("/n", "n must lie in 0..16");
    return std::make_shared<ColimitCyclicSet>(CyclicPresentation::representable(n), truncation);
  }
  bad("/kind", "unknown kind \"" + kind + "\" (expected monoid, category, colimit or representable)");
}

}  // namespace cyclotome
