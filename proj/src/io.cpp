#include "cires/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cires/hash.hpp"
#include "cires/parse.hpp"

namespace cires {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw InputError("field " + field + ": " + msg);
}

void require_keys(const json& obj, const std::string& field, const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(field, "expected an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) fail(field, "unknown key \"" + k + "\"");
}

std::string get_string(const json& v, const std::string& field) {
  if (!v.is_string()) fail(field, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> get_strings(const json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_string(v[i], field + "/" + std::to_string(i)));
  return out;
}

StringMatrix get_matrix(const json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) fail(field, "expected a nonempty array of rows");
  StringMatrix out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(get_strings(v[i], field + "/" + std::to_string(i)));
    if (out.back().size() != out.front().size()) fail(field, "rows of unequal length");
  }
  return out;
}

std::size_t get_count(const json& v, const std::string& field) {
  if (!v.is_number_unsigned()) fail(field, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

std::string canonical_poly(const std::string& s, const RingPtr& ring, const std::string& field) {
  try {
    return poly_parse(s, ring).to_string();
  } catch (const ParseError& e) {
    fail(field, std::string("polynomial syntax error in \"") + s + "\": " + e.what());
  }
}

void canonicalize(StringMatrix& m, const RingPtr& ring, const std::string& field) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      m[i][j] = canonical_poly(m[i][j], ring, field + "/" + std::to_string(i) + "/" + std::to_string(j));
}

GradedMatrix build_matrix(const StringMatrix& m, const RingPtr& ring, std::vector<int> row_twists,
                          const std::string& field,
                          std::optional<std::vector<int>> col_twists = std::nullopt) {
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : m) {
    rows.emplace_back();
    for (const auto& s : r) rows.back().push_back(poly_parse(s, ring));
  }
  try {
    GradedMatrix g = GradedMatrix::from_rows(ring, rows, std::move(row_twists), std::move(col_twists));
    if (!g.is_homogeneous()) fail(field, "matrix is not homogeneous for the given twists");
    return g;
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
}

json matrix_strings(const StringMatrix& m) {
  json out = json::array();
  for (const auto& r : m) out.push_back(r);
  return out;
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

InputSpec parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at " + line_column(text, e.byte) + ": " + e.what());
  }
  require_keys(doc, "/", {"characteristic", "variables", "ci", "module", "mf", "ulrich", "parameters"});
  InputSpec spec;
  if (doc.contains("characteristic")) {
    const json& c = doc["characteristic"];
    if (!c.is_number_unsigned() || c.get<std::uint64_t>() > 0xFFFFFFFFu)
      fail("/characteristic", "expected a positive integer");
    spec.characteristic = c.get<std::uint32_t>();
  }
  if (!doc.contains("variables")) fail("/variables", "missing");
  spec.variables = get_strings(doc["variables"], "/variables");
  if (!doc.contains("ci")) fail("/ci", "missing");
  spec.ci = get_strings(doc["ci"], "/ci");
  try {
    spec.ring = make_ring(spec.characteristic, spec.variables);
  } catch (const std::exception& e) {
    fail("/variables", e.what());
  }
  std::vector<Poly> f;
  for (std::size_t i = 0; i < spec.ci.size(); ++i) {
    spec.ci[i] = canonical_poly(spec.ci[i], spec.ring, "/ci/" + std::to_string(i));
    f.push_back(poly_parse(spec.ci[i], spec.ring));
  }
  try {
    spec.algebra = std::make_shared<const CIPresentation>(spec.ring, f);
  } catch (const std::invalid_argument& e) {
    fail("/ci", e.what());
  }

  if (doc.contains("module")) {
    const json& m = doc["module"];
    require_keys(m, "/module", {"matrix", "row_twists"});
    if (!m.contains("matrix")) fail("/module/matrix", "missing");
    ModuleSpec ms;
    ms.matrix = get_matrix(m["matrix"], "/module/matrix");
    if (m.contains("row_twists")) {
      if (!m["row_twists"].is_array()) fail("/module/row_twists", "expected an array of integers");
      for (std::size_t i = 0; i < m["row_twists"].size(); ++i) {
        const json& t = m["row_twists"][i];
        if (!t.is_number_integer()) fail("/module/row_twists/" + std::to_string(i), "expected an integer");
        ms.row_twists.push_back(t.get<int>());
      }
      if (ms.row_twists.size() != ms.matrix.size())
        fail("/module/row_twists", "length differs from the number of rows");
    } else {
      ms.row_twists.assign(ms.matrix.size(), 0);
    }
    canonicalize(ms.matrix, spec.ring, "/module/matrix");
    spec.presentation = build_matrix(ms.matrix, spec.ring, ms.row_twists, "/module/matrix");
    spec.module = std::move(ms);
  }

  if (doc.contains("mf") && doc.contains("ulrich")) fail("/", "give at most one of \"mf\" and \"ulrich\"");
  if (doc.contains("mf")) {
    const json& m = doc["mf"];
    require_keys(m, "/mf", {"f", "phi", "psi"});
    if (!m.contains("f") || !m.contains("phi")) fail("/mf", "needs \"f\" and \"phi\"");
    MFSpec ms;
    ms.f = canonical_poly(get_string(m["f"], "/mf/f"), spec.ring, "/mf/f");
    ms.phi = get_matrix(m["phi"], "/mf/phi");
    canonicalize(ms.phi, spec.ring, "/mf/phi");
    if (m.contains("psi")) {
      ms.psi = get_matrix(m["psi"], "/mf/psi");
      canonicalize(*ms.psi, spec.ring, "/mf/psi");
    }
    Poly fp = poly_parse(ms.f, spec.ring);
    if (fp.is_zero() || !fp.is_homogeneous()) fail("/mf/f", "expected a nonzero form");
    GradedMatrix phi = build_matrix(ms.phi, spec.ring, std::vector<int>(ms.phi.size(), 0), "/mf/phi");
    try {
      if (ms.psi) {
        std::vector<int> ct = phi.row_twists();
        for (auto& t : ct) t += fp.degree();
        GradedMatrix psi = build_matrix(*ms.psi, spec.ring, phi.col_twists(), "/mf/psi", ct);
        if (!mf_validate(phi, psi, fp)) fail("/mf", "psi * phi and phi * psi are not f * I");
        spec.factorization = MatrixFactorization{phi, psi, fp};
      } else {
        spec.factorization = mf_from_projdim1(phi, fp);
      }
    } catch (const std::invalid_argument& e) {
      fail("/mf", e.what());
    }
    spec.mf = std::move(ms);
  }
  if (doc.contains("ulrich")) {
    const json& u = doc["ulrich"];
    require_keys(u, "/ulrich", {"kind", "factors", "L"});
    UlrichSpec us;
    us.kind = u.contains("kind") ? get_string(u["kind"], "/ulrich/kind") : "";
    try {
      if (us.kind == "product") {
        if (u.contains("factors")) {
          us.factors = get_strings(u["factors"], "/ulrich/factors");
          std::vector<Poly> fs;
          for (std::size_t i = 0; i < us.factors.size(); ++i) {
            us.factors[i] = canonical_poly(us.factors[i], spec.ring, "/ulrich/factors/" + std::to_string(i));
            fs.push_back(poly_parse(us.factors[i], spec.ring));
          }
          spec.factorization = ulrich_product(*spec.algebra, fs);
        } else {
          spec.factorization = ulrich_product(*spec.algebra);
        }
      } else if (us.kind == "determinantal") {
        if (!u.contains("L")) fail("/ulrich/L", "missing");
        us.L = get_matrix(u["L"], "/ulrich/L");
        canonicalize(us.L, spec.ring, "/ulrich/L");
        std::vector<std::vector<Poly>> rows;
        for (const auto& r : us.L) {
          rows.emplace_back();
          for (const auto& s : r) rows.back().push_back(poly_parse(s, spec.ring));
        }
        GradedMatrix L = GradedMatrix::from_rows(spec.ring, rows, std::vector<int>(rows.size(), 0));
        spec.factorization = ulrich_determinantal(*spec.algebra, L);
      } else {
        fail("/ulrich/kind", "expected \"product\" or \"determinantal\"");
      }
    } catch (const std::invalid_argument& e) {
      fail("/ulrich", e.what());
    }
    spec.ulrich = std::move(us);
  }

  if (doc.contains("parameters")) {
    const json& p = doc["parameters"];
    require_keys(p, "/parameters", {"length", "window", "r_max", "seed", "b"});
    if (p.contains("length")) spec.params.length = get_count(p["length"], "/parameters/length");
    if (p.contains("window")) spec.params.window = get_count(p["window"], "/parameters/window");
    if (p.contains("r_max")) spec.params.r_max = get_count(p["r_max"], "/parameters/r_max");
    if (p.contains("seed")) {
      if (!p["seed"].is_number_unsigned()) fail("/parameters/seed", "expected a nonnegative integer");
      spec.params.seed = p["seed"].get<std::uint64_t>();
    }
    if (p.contains("b")) {
      spec.params.b = get_strings(p["b"], "/parameters/b");
      for (std::size_t i = 0; i < spec.params.b.size(); ++i)
        spec.params.b[i] = canonical_poly(spec.params.b[i], spec.ring, "/parameters/b/" + std::to_string(i));
    }
  }
  return spec;
}

InputSpec parse_input_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_input(ss.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json to_json(const InputSpec& spec) {
  json out{{"characteristic", spec.characteristic}, {"variables", spec.variables}, {"ci", spec.ci}};
  if (spec.module)
    out["module"] = {{"matrix", matrix_strings(spec.module->matrix)}, {"row_twists", spec.module->row_twists}};
  if (spec.mf) {
    out["mf"] = {{"f", spec.mf->f}, {"phi", matrix_strings(spec.mf->phi)}};
    if (spec.mf->psi) out["mf"]["psi"] = matrix_strings(*spec.mf->psi);
  }
  if (spec.ulrich) {
    out["ulrich"] = {{"kind", spec.ulrich->kind}};
    if (!spec.ulrich->factors.empty()) out["ulrich"]["factors"] = spec.ulrich->factors;
    if (!spec.ulrich->L.empty()) out["ulrich"]["L"] = matrix_strings(spec.ulrich->L);
  }
  json p = json::object();
  if (spec.params.length) p["length"] = *spec.params.length;
  if (spec.params.window) p["window"] = *spec.params.window;
  if (spec.params.r_max) p["r_max"] = *spec.params.r_max;
  if (spec.params.seed) p["seed"] = *spec.params.seed;
  if (!spec.params.b.empty()) p["b"] = spec.params.b;
  if (!p.empty()) out["parameters"] = p;
  return out;
}

std::string canonical_serialization(const InputSpec& spec) { return to_json(spec).dump(2) + "\n"; }

std::string content_hash(const InputSpec& spec) { return sha256_hex(canonical_serialization(spec)); }

json matrix_to_json(const GradedMatrix& m) {
  return json{{"entries", m.to_strings()}, {"row_twists", m.row_twists()}, {"col_twists", m.col_twists()}};
}

}  // namespace cires
