#include "contra/io.hpp"

#include <regex>

#include "contra/sampling.hpp"

namespace contra {

namespace {

const json& member(const json& j, const char* key, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(ptr + "/" + key, "missing field");
  return *it;
}

std::size_t as_index(const json& j, const std::string& ptr) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw SchemaError(ptr, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Scalar scalar_from_json(const json& j, const Field& f, const std::string& ptr) {
  try {
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(ptr, e.what());
  }
  throw SchemaError(ptr, "expected an exact scalar (integer or \"num/den\" string)");
}

/// Triples [a, b, k, "val"]: entry val at row a * inner + b, column k.
Mat quad_from_json(const json& j, const Field& f, std::size_t rows, std::size_t inner,
                   std::size_t cols, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array of [i, j, k, value]");
  std::vector<Triplet> t;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string p = ptr + "/" + std::to_string(e);
    const json& q = j[e];
    if (!q.is_array() || q.size() != 4) throw SchemaError(p, "expected [i, j, k, value]");
    const std::size_t a = as_index(q[0], p + "/0"), b = as_index(q[1], p + "/1"),
                      k = as_index(q[2], p + "/2");
    if (b >= inner || a * inner + b >= rows) throw SchemaError(p, "tensor index out of range");
    if (k >= cols) throw SchemaError(p + "/2", "index out of range");
    t.push_back({a * inner + b, k, scalar_from_json(q[3], f, p + "/3")});
  }
  return Mat::from_triplets(f, rows, cols, std::move(t));
}

json quad_to_json(const Mat& m, std::size_t inner) {
  json out = json::array();
  for (const Triplet& t : m.triplets()) {
    out.push_back({t.row / inner, t.row % inner, t.col, t.value.to_string()});
  }
  return out;
}

Field context_field(const json& j, const ParseContext& ctx, const std::string& ptr) {
  if (j.is_object() && j.contains("field")) {
    const Field f = field_from_json(j["field"], ptr + "/field");
    if (ctx.field && !(*ctx.field == f)) {
      throw SchemaError(ptr + "/field", "field mismatch: " + f.name() + " vs " + ctx.field->name());
    }
    return f;
  }
  if (ctx.field) return *ctx.field;
  return Field::rationals();
}

}  // namespace

json to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

Field field_from_json(const json& j, const std::string& ptr) {
  try {
    if (j.is_string()) return Field::parse(j.get<std::string>());
    if (j.is_object() && j.contains("Fp")) return Field::prime(as_index(j["Fp"], ptr + "/Fp"));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(ptr, e.what());
  }
  throw SchemaError(ptr, "expected \"Q\" or {\"Fp\": p}");
}

json to_json(const Mat& m) {
  json entries = json::array();
  for (const Triplet& t : m.triplets()) entries.push_back({t.row, t.col, t.value.to_string()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Mat mat_from_json(const json& j, const Field& f, const std::string& ptr) {
  const std::size_t rows = as_index(member(j, "rows", ptr), ptr + "/rows");
  const std::size_t cols = as_index(member(j, "cols", ptr), ptr + "/cols");
  const json& e = member(j, "entries", ptr);
  if (!e.is_array()) throw SchemaError(ptr + "/entries", "expected an array");
  std::vector<Triplet> t;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const std::string p = ptr + "/entries/" + std::to_string(k);
    if (!e[k].is_array() || e[k].size() != 3) throw SchemaError(p, "expected [row, col, value]");
    const std::size_t r = as_index(e[k][0], p + "/0"), c = as_index(e[k][1], p + "/1");
    if (r >= rows || c >= cols) throw SchemaError(p, "entry outside the matrix");
    t.push_back({r, c, scalar_from_json(e[k][2], f, p + "/2")});
  }
  return Mat::from_triplets(f, rows, cols, std::move(t));
}

json to_json(const Coalgebra& c) {
  json eps = json::array();
  for (std::size_t k = 0; k < c.dim; ++k) eps.push_back(c.epsilon.at(0, k).to_string());
  return {{"field", to_json(c.field)},
          {"dim", c.dim},
          {"name", c.name},
          {"delta", quad_to_json(c.delta, c.dim)},
          {"epsilon", eps}};
}

CoalgebraPtr coalgebra_from_json(const json& j, const ParseContext& ctx, const std::string& ptr) {
  if (j.is_string()) {
    const Field f = ctx.field.value_or(Field::rationals());
    try {
      return catalog_coalgebra(j.get<std::string>(), f);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(ptr, e.what());
    }
  }
  if (j.is_object() && j.contains("catalog")) {
    ParseContext inner{context_field(j, ctx, ptr)};
    return coalgebra_from_json(j["catalog"], inner, ptr + "/catalog");
  }
  const Field f = context_field(j, ctx, ptr);
  auto c = std::make_shared<Coalgebra>();
  c->field = f;
  c->dim = as_index(member(j, "dim", ptr), ptr + "/dim");
  c->name = j.value("name", std::string("inline"));
  c->delta = quad_from_json(member(j, "delta", ptr), f, c->dim * c->dim, c->dim, c->dim, ptr + "/delta");
  const json& eps = member(j, "epsilon", ptr);
  if (!eps.is_array() || eps.size() != c->dim) {
    throw SchemaError(ptr + "/epsilon", "expected " + std::to_string(c->dim) + " values");
  }
  std::vector<Triplet> t;
  for (std::size_t k = 0; k < c->dim; ++k) {
    t.push_back({0, k, scalar_from_json(eps[k], f, ptr + "/epsilon/" + std::to_string(k))});
  }
  c->epsilon = Mat::from_triplets(f, 1, c->dim, std::move(t));
  return c;
}

json to_json(const Comodule& m) {
  const std::size_t inner = m.side == Side::left ? m.dim : m.coalgebra->dim;
  return {{"coalgebra", to_json(*m.coalgebra)},
          {"side", m.side == Side::left ? "left" : "right"},
          {"dim", m.dim},
          {"label", m.label},
          {"coaction", quad_to_json(m.coaction, inner)}};
}

Comodule comodule_from_json(const json& j, const ParseContext& ctx, const std::string& ptr) {
  if (j.is_object() && j.contains("rational")) {
    const std::string name = member(j, "rational", ptr).get<std::string>();
    const std::size_t r = as_index(member(j, "r", ptr), ptr + "/r");
    if (ctx.field && ctx.field->characteristic() != 2) {
      throw SchemaError(ptr, "SL2 catalog modules live over F2");
    }
    try {
      return restrict_to_kernel(catalog_rational(name), static_cast<unsigned>(r));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(ptr + "/rational", e.what());
    }
  }
  const CoalgebraPtr c = coalgebra_from_json(member(j, "coalgebra", ptr), ctx, ptr + "/coalgebra");
  if (ctx.field && !(*ctx.field == c->field)) throw SchemaError(ptr + "/coalgebra", "field mismatch");
  const std::string side = j.value("side", std::string("left"));
  if (side != "left" && side != "right") throw SchemaError(ptr + "/side", "expected left or right");
  const json& kind = j.contains("cofree") ? j["cofree"] : json();
  if (!kind.is_null()) {
    Comodule m = cofree(c, as_index(kind, ptr + "/cofree"));
    if (side == "right") m = dual_comodule(dual_comodule(m));
    return m;
  }
  if (j.value("regular", false)) return regular_comodule(c, side == "left" ? Side::left : Side::right);
  Comodule m;
  m.coalgebra = c;
  m.side = side == "left" ? Side::left : Side::right;
  m.dim = as_index(member(j, "dim", ptr), ptr + "/dim");
  m.label = j.value("label", std::string("M"));
  const std::size_t inner = m.side == Side::left ? m.dim : c->dim;
  m.coaction = quad_from_json(member(j, "coaction", ptr), c->field, c->dim * m.dim, inner, m.dim,
                              ptr + "/coaction");
  return m;
}

json to_json(const Contramodule& b) {
  return {{"coalgebra", to_json(*b.coalgebra)},
          {"dim", b.dim},
          {"label", b.label},
          {"theta", [&] {
             json out = json::array();
             for (const Triplet& t : b.theta.triplets()) {
               out.push_back({t.row, t.col / std::max<std::size_t>(b.dim, 1),
                              t.col % std::max<std::size_t>(b.dim, 1), t.value.to_string()});
             }
             return out;
           }()}};
}

Contramodule contramodule_from_json(const json& j, const ParseContext& ctx, const std::string& ptr) {
  if (j.is_object() && j.contains("from_comodule")) {
    return contra_from_comodule(comodule_from_json(j["from_comodule"], ctx, ptr + "/from_comodule"));
  }
  const CoalgebraPtr c = coalgebra_from_json(member(j, "coalgebra", ptr), ctx, ptr + "/coalgebra");
  if (ctx.field && !(*ctx.field == c->field)) throw SchemaError(ptr + "/coalgebra", "field mismatch");
  if (j.contains("free")) return free_contramodule(c, as_index(j["free"], ptr + "/free"));
  if (j.value("trivial", false)) {
    try {
      return trivial_contramodule(c);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(ptr + "/trivial", e.what());
    }
  }
  Contramodule b;
  b.coalgebra = c;
  b.dim = as_index(member(j, "dim", ptr), ptr + "/dim");
  b.label = j.value("label", std::string("B"));
  const json& th = member(j, "theta", ptr);
  if (!th.is_array()) throw SchemaError(ptr + "/theta", "expected an array of [i, j, k, value]");
  std::vector<Triplet> t;
  for (std::size_t e = 0; e < th.size(); ++e) {
    const std::string p = ptr + "/theta/" + std::to_string(e);
    const json& q = th[e];
    if (!q.is_array() || q.size() != 4) throw SchemaError(p, "expected [i, j, k, value]");
    const std::size_t i = as_index(q[0], p + "/0"), dj = as_index(q[1], p + "/1"),
                      k = as_index(q[2], p + "/2");
    if (i >= b.dim || dj >= c->dim || k >= b.dim) throw SchemaError(p, "index out of range");
    t.push_back({i, dj * b.dim + k, scalar_from_json(q[3], c->field, p + "/3")});
  }
  b.theta = Mat::from_triplets(c->field, b.dim, c->dim * b.dim, std::move(t));
  return b;
}

json to_json(const CoalgebraMorphism& rho) {
  return {{"source", to_json(*rho.source)},
          {"target", to_json(*rho.target)},
          {"matrix", to_json(rho.matrix)},
          {"surjective", rho.surjective}};
}

CoalgebraMorphism morphism_from_json(const json& j, const ParseContext& ctx, const std::string& ptr) {
  if (j.is_object() && j.contains("catalog")) {
    const Field f = context_field(j, ctx, ptr);
    const std::string name = member(j, "catalog", ptr).get<std::string>();
    static const std::regex dp(R"(divided_power_map\((\d+),\s*(\d+),\s*(\d+)\))");
    static const std::regex wrap(R"((identity|counit)\((.+)\))");
    static const std::regex diag(R"(diagonal\((\d+)\))");
    std::smatch m;
    try {
      if (std::regex_match(name, m, dp)) {
        return divided_power_map(f, std::stoul(m[1]), std::stoul(m[2]), std::stoul(m[3]));
      }
      if (std::regex_match(name, m, diag)) return diagonal_morphism(f, std::stoul(m[1]));
      if (std::regex_match(name, m, wrap)) {
        const CoalgebraPtr c = catalog_coalgebra(m[2], f);
        return m[1] == "identity" ? identity_morphism(c) : counit_morphism(c);
      }
    } catch (const std::invalid_argument& e) {
      throw SchemaError(ptr + "/catalog", e.what());
    }
    throw SchemaError(ptr + "/catalog", "unknown morphism '" + name + "'");
  }
  CoalgebraMorphism rho;
  rho.source = coalgebra_from_json(member(j, "source", ptr), ctx, ptr + "/source");
  rho.target = coalgebra_from_json(member(j, "target", ptr), ctx, ptr + "/target");
  if (!(rho.source->field == rho.target->field)) throw SchemaError(ptr + "/target", "field mismatch");
  rho.matrix = mat_from_json(member(j, "matrix", ptr), rho.source->field, ptr + "/matrix");
  rho.surjective = j.value("surjective", false);
  return rho;
}

ContraSES ses_from_json(const json& j, const ParseContext& ctx, const std::string& ptr) {
  const Contramodule b = contramodule_from_json(member(j, "b", ptr), ctx, ptr + "/b");
  const Mat sub = mat_from_json(member(j, "sub", ptr), b.field(), ptr + "/sub");
  if (sub.rows() != b.dim) throw SchemaError(ptr + "/sub", "basis rows must equal dim b");
  if (rank(sub) != sub.cols()) throw SchemaError(ptr + "/sub", "basis columns are dependent");
  try {
    return ses_from_sub(b, sub);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(ptr + "/sub", e.what());
  }
}

json to_json(const Verdict& v) { return {{"ok", v.ok()}, {"failures", v.failures}}; }

}  // namespace contra
