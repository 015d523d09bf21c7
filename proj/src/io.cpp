#include "ternalg/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "ternalg/errors.hpp"

namespace ternalg::io {

using json = nlohmann::ordered_json;

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::Algebra: return "algebra";
    case Kind::Coalgebra: return "coalgebra";
    case Kind::Bialgebra: return "bialgebra";
    case Kind::Module: return "module";
    case Kind::MatchedPair: return "matched_pair";
    case Kind::Map: return "map";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

// Reader for one document; `path` is a JSON-pointer-like location for diagnostics.
struct Reader {
  int radicand = 1;

  const json& field(const json& obj, const std::string& key, const std::string& path) const {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing field \"" + key + "\"");
    return *it;
  }

  std::size_t positive(const json& obj, const std::string& key, const std::string& path) const {
    const json& v = field(obj, key, path);
    if (!v.is_number_integer() || v.get<long long>() < 1) fail(path + "/" + key, "expected a positive integer");
    return v.get<std::size_t>();
  }

  std::size_t index(const json& v, std::size_t bound, const std::string& path) const {
    if (!v.is_number_integer()) fail(path, "expected an integer index");
    const long long k = v.get<long long>();
    if (k < 1 || static_cast<std::size_t>(k) > bound) {
      fail(path, "index " + std::to_string(k) + " outside 1.." + std::to_string(bound));
    }
    return static_cast<std::size_t>(k - 1);
  }

  QuadScalar scalar(const json& v, const std::string& path) const {
    if (!v.is_string()) fail(path, "scalars are written as strings");
    try {
      return parse_scalar(v.get<std::string>(), radicand);
    } catch (const ParseError& e) {
      fail(path, e.what());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  Matrix matrix(const json& v, std::size_t n, const std::string& path) const {
    if (!v.is_array() || v.size() != n) fail(path, "expected " + std::to_string(n) + " rows");
    Matrix m(n);
    for (std::size_t k = 0; k < n; ++k) {
      const json& row = v[k];
      const std::string rp = path + "/" + std::to_string(k);
      if (!row.is_array() || row.size() != n) fail(rp, "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) m(k, j) = scalar(row[j], rp + "/" + std::to_string(j));
    }
    return m;
  }

  Matrix optional_matrix(const json& obj, const std::string& key, std::size_t n, const std::string& path) const {
    auto it = obj.find(key);
    if (it == obj.end()) return Matrix::identity(n);
    return matrix(*it, n, path + "/" + key);
  }

  // Entries {"args": [r,s,t], "out": {"l": c}} into T(l, r, s, t).
  Tensor4 product(const json& v, const Tensor4::Extents& ext, const std::string& path) const {
    Tensor4 t(ext);
    if (!v.is_array()) fail(path, "expected a list of entries");
    std::vector<bool> seen(ext[1] * ext[2] * ext[3]);
    for (std::size_t e = 0; e < v.size(); ++e) {
      const std::string ep = path + "/" + std::to_string(e);
      const json& args = field(v[e], "args", ep);
      if (!args.is_array() || args.size() != 3) fail(ep + "/args", "expected three indices");
      const std::size_t r = index(args[0], ext[1], ep + "/args/0");
      const std::size_t s = index(args[1], ext[2], ep + "/args/1");
      const std::size_t u = index(args[2], ext[3], ep + "/args/2");
      const std::size_t key = (r * ext[2] + s) * ext[3] + u;
      if (seen[key]) fail(ep, "duplicate entry");
      seen[key] = true;
      const json& out = field(v[e], "out", ep);
      if (!out.is_object()) fail(ep + "/out", "expected an object");
      for (const auto& [label, coeff] : out.items()) {
        long long l = 0;
        try {
          std::size_t used = 0;
          l = std::stoll(label, &used);
          if (used != label.size()) l = 0;
        } catch (const std::exception&) {
          l = 0;
        }
        if (l < 1 || static_cast<std::size_t>(l) > ext[0]) fail(ep + "/out", "bad output index \"" + label + "\"");
        t(static_cast<std::size_t>(l - 1), r, s, u) = scalar(coeff, ep + "/out/" + label);
      }
    }
    return t;
  }

  // Entries {"arg": l, "out": [{"into": [r,s,t], "coeff": c}]} into D(l, r, s, t).
  Tensor4 coproduct(const json& v, std::size_t n, const std::string& path) const {
    Tensor4 t = Tensor4::cube(n);
    if (!v.is_array()) fail(path, "expected a list of entries");
    std::vector<bool> seen(n);
    for (std::size_t e = 0; e < v.size(); ++e) {
      const std::string ep = path + "/" + std::to_string(e);
      const std::size_t l = index(field(v[e], "arg", ep), n, ep + "/arg");
      if (seen[l]) fail(ep, "duplicate entry");
      seen[l] = true;
      const json& out = field(v[e], "out", ep);
      if (!out.is_array()) fail(ep + "/out", "expected a list");
      for (std::size_t m = 0; m < out.size(); ++m) {
        const std::string mp = ep + "/out/" + std::to_string(m);
        const json& into = field(out[m], "into", mp);
        if (!into.is_array() || into.size() != 3) fail(mp + "/into", "expected three indices");
        const std::size_t r = index(into[0], n, mp + "/into/0");
        const std::size_t s = index(into[1], n, mp + "/into/1");
        const std::size_t u = index(into[2], n, mp + "/into/2");
        t(l, r, s, u) += scalar(field(out[m], "coeff", mp), mp + "/coeff");
      }
    }
    return t;
  }

  TernaryAlgebra algebra(const json& obj, const std::string& path) const {
    const std::size_t n = positive(obj, "dim", path);
    return TernaryAlgebra(product(field(obj, "mu", path), {n, n, n, n}, path + "/mu"),
                          optional_matrix(obj, "alpha1", n, path), optional_matrix(obj, "alpha2", n, path));
  }

  TrimoduleActions actions(const json& obj, std::size_t da, std::size_t dv, const std::string& path) const {
    TrimoduleActions act = TrimoduleActions::zero(da, dv);
    if (auto it = obj.find("L"); it != obj.end()) act.L = product(*it, {dv, da, da, dv}, path + "/L");
    if (auto it = obj.find("M"); it != obj.end()) act.M = product(*it, {dv, da, dv, da}, path + "/M");
    if (auto it = obj.find("R"); it != obj.end()) act.R = product(*it, {dv, dv, da, da}, path + "/R");
    return act;
  }
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t k = 0; k < end; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Kind parse_kind(const std::string& name) {
  static const std::map<std::string, Kind> kinds = {
      {"algebra", Kind::Algebra}, {"coalgebra", Kind::Coalgebra}, {"bialgebra", Kind::Bialgebra},
      {"module", Kind::Module},   {"matched_pair", Kind::MatchedPair}, {"map", Kind::Map}};
  auto it = kinds.find(name);
  if (it == kinds.end()) fail("/kind", "unknown kind \"" + name + "\"");
  return it->second;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": invalid JSON",
                     line, column);
  }
  Reader rd;
  const json& kind = rd.field(doc, "kind", "");
  if (!kind.is_string()) fail("/kind", "expected a string");
  if (auto it = doc.find("radicand"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 1 || !is_square_free(it->get<long>())) {
      fail("/radicand", "expected a positive square-free integer");
    }
    rd.radicand = it->get<int>();
  }

  StructureFile file;
  file.kind = parse_kind(kind.get<std::string>());
  try {
    switch (file.kind) {
      case Kind::Algebra:
        file.algebra = rd.algebra(doc, "");
        break;
      case Kind::Coalgebra: {
        const std::size_t n = rd.positive(doc, "dim", "");
        file.coalgebra = TernaryCoalgebra(rd.coproduct(rd.field(doc, "delta", ""), n, "/delta"),
                                          rd.optional_matrix(doc, "alpha1", n, ""),
                                          rd.optional_matrix(doc, "alpha2", n, ""));
        break;
      }
      case Kind::Bialgebra: {
        const std::size_t n = rd.positive(doc, "dim", "");
        file.bialgebra = TernaryBialgebra(rd.product(rd.field(doc, "mu", ""), {n, n, n, n}, "/mu"),
                                          rd.coproduct(rd.field(doc, "delta", ""), n, "/delta"),
                                          rd.optional_matrix(doc, "alpha1", n, ""),
                                          rd.optional_matrix(doc, "alpha2", n, ""));
        break;
      }
      case Kind::Module: {
        ModuleData m;
        m.dim_a = rd.positive(doc, "dim", "");
        const std::size_t dv = rd.positive(doc, "dim_v", "");
        if (auto it = doc.find("algebra"); it != doc.end()) {
          m.algebra = rd.algebra(*it, "/algebra");
          if (m.algebra->dim() != m.dim_a) fail("/algebra/dim", "does not match the module's dim");
        }
        m.module = BihomModule(rd.optional_matrix(doc, "beta1", dv, ""), rd.optional_matrix(doc, "beta2", dv, ""));
        m.actions = rd.actions(doc, m.dim_a, dv, "");
        file.module = std::move(m);
        break;
      }
      case Kind::MatchedPair: {
        MatchedPairData mp;
        mp.A = rd.algebra(rd.field(doc, "A", ""), "/A");
        mp.B = rd.algebra(rd.field(doc, "B", ""), "/B");
        mp.a_on_b = rd.actions(rd.field(doc, "A_on_B", ""), mp.A.dim(), mp.B.dim(), "/A_on_B");
        mp.b_on_a = rd.actions(rd.field(doc, "B_on_A", ""), mp.B.dim(), mp.A.dim(), "/B_on_A");
        mp.validate();
        file.matched_pair = std::move(mp);
        break;
      }
      case Kind::Map: {
        const std::size_t n = rd.positive(doc, "dim", "");
        file.map = rd.matrix(rd.field(doc, "matrix", ""), n, "/matrix");
        break;
      }
    }
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("inconsistent shapes: ") + e.what());
  }
  return file;
}

StructureFile load_structure(const std::string& path, std::string* raw) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  StructureFile file = parse_structure(text);
  if (raw) *raw = std::move(text);
  return file;
}

namespace {

struct Writer {
  int radicand = 1;

  std::string scalar(const QuadScalar& c) {
    radicand = common_radicand(radicand, c.radicand());
    return c.str();
  }

  json matrix(const Matrix& m) {
    json rows = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) {
      json row = json::array();
      for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(scalar(m(k, j)));
      rows.push_back(std::move(row));
    }
    return rows;
  }

  json product(const Tensor4& t) {
    const auto& ext = t.extents();
    json entries = json::array();
    for (std::size_t r = 0; r < ext[1]; ++r) {
      for (std::size_t s = 0; s < ext[2]; ++s) {
        for (std::size_t u = 0; u < ext[3]; ++u) {
          json out = json::object();
          for (std::size_t l = 0; l < ext[0]; ++l) {
            if (!t(l, r, s, u).is_zero()) out[std::to_string(l + 1)] = scalar(t(l, r, s, u));
          }
          if (out.empty()) continue;
          entries.push_back(json{{"args", {r + 1, s + 1, u + 1}}, {"out", std::move(out)}});
        }
      }
    }
    return entries;
  }

  json coproduct(const Tensor4& t) {
    const std::size_t n = t.extent(0);
    json entries = json::array();
    for (std::size_t l = 0; l < n; ++l) {
      json out = json::array();
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
          for (std::size_t u = 0; u < n; ++u) {
            if (t(l, r, s, u).is_zero()) continue;
            out.push_back(json{{"into", {r + 1, s + 1, u + 1}}, {"coeff", scalar(t(l, r, s, u))}});
          }
        }
      }
      if (!out.empty()) entries.push_back(json{{"arg", l + 1}, {"out", std::move(out)}});
    }
    return entries;
  }

  void algebra_fields(json& obj, const TernaryAlgebra& A) {
    obj["dim"] = A.dim();
    obj["mu"] = product(A.mu());
    obj["alpha1"] = matrix(A.alpha1());
    obj["alpha2"] = matrix(A.alpha2());
  }

  void action_fields(json& obj, const TrimoduleActions& act) {
    obj["L"] = product(act.L);
    obj["M"] = product(act.M);
    obj["R"] = product(act.R);
  }
};

// Objects expand one key per line; lists of entries or rows put one element per line.
void emit(std::string& out, const json& v, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (v.is_object() && !v.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : v.items()) {
      out += pad + json(key).dump() + ": ";
      emit(out, value, indent + 2);
      out += ++k < v.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
    return;
  }
  const bool nested = v.is_array() && !v.empty() && (v.front().is_array() || v.front().is_object());
  if (!nested) {
    out += v.dump();
    return;
  }
  out += "[\n";
  for (std::size_t k = 0; k < v.size(); ++k) {
    out += pad + v[k].dump();
    out += k + 1 < v.size() ? ",\n" : "\n";
  }
  out += std::string(indent, ' ') + "]";
}

std::string finish(json body, Kind kind, int radicand) {
  json doc;
  doc["kind"] = std::string(kind_name(kind));
  doc["radicand"] = radicand;
  for (auto& [key, value] : body.items()) doc[key] = std::move(value);
  std::string out;
  emit(out, doc, 0);
  out += "\n";
  return out;
}

}  // namespace

std::string serialize(const StructureFile& file) {
  Writer w;
  json body;
  switch (file.kind) {
    case Kind::Algebra:
      w.algebra_fields(body, file.algebra.value());
      break;
    case Kind::Coalgebra: {
      const auto& C = file.coalgebra.value();
      body["dim"] = C.dim();
      body["delta"] = w.coproduct(C.delta());
      body["alpha1"] = w.matrix(C.alpha1());
      body["alpha2"] = w.matrix(C.alpha2());
      break;
    }
    case Kind::Bialgebra: {
      const auto& B = file.bialgebra.value();
      body["dim"] = B.dim();
      body["mu"] = w.product(B.alg().mu());
      body["delta"] = w.coproduct(B.coalg().delta());
      body["alpha1"] = w.matrix(B.alpha1());
      body["alpha2"] = w.matrix(B.alpha2());
      break;
    }
    case Kind::Module: {
      const auto& m = file.module.value();
      body["dim"] = m.dim_a;
      body["dim_v"] = m.module.dim();
      if (m.algebra) {
        json alg;
        w.algebra_fields(alg, *m.algebra);
        body["algebra"] = std::move(alg);
      }
      body["beta1"] = w.matrix(m.module.beta1());
      body["beta2"] = w.matrix(m.module.beta2());
      w.action_fields(body, m.actions);
      break;
    }
    case Kind::MatchedPair: {
      const auto& mp = file.matched_pair.value();
      json a, b, ab, ba;
      w.algebra_fields(a, mp.A);
      w.algebra_fields(b, mp.B);
      w.action_fields(ab, mp.a_on_b);
      w.action_fields(ba, mp.b_on_a);
      body["A"] = std::move(a);
      body["B"] = std::move(b);
      body["A_on_B"] = std::move(ab);
      body["B_on_A"] = std::move(ba);
      break;
    }
    case Kind::Map:
      body["dim"] = file.map.value().dim();
      body["matrix"] = w.matrix(file.map.value());
      break;
  }
  return finish(std::move(body), file.kind, w.radicand);
}

StructureFile wrap(TernaryAlgebra A) {
  StructureFile f;
  f.kind = Kind::Algebra;
  f.algebra = std::move(A);
  return f;
}

StructureFile wrap(TernaryCoalgebra C) {
  StructureFile f;
  f.kind = Kind::Coalgebra;
  f.coalgebra = std::move(C);
  return f;
}

StructureFile wrap(TernaryBialgebra B) {
  StructureFile f;
  f.kind = Kind::Bialgebra;
  f.bialgebra = std::move(B);
  return f;
}

StructureFile wrap(Matrix m) {
  StructureFile f;
  f.kind = Kind::Map;
  f.map = std::move(m);
  return f;
}

std::string serialize(const TernaryAlgebra& A) { return serialize(wrap(A)); }
std::string serialize(const TernaryCoalgebra& C) { return serialize(wrap(C)); }
std::string serialize(const TernaryBialgebra& B) { return serialize(wrap(B)); }
std::string serialize(const Matrix& f) { return serialize(wrap(f)); }

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", digest[k]);
    hex += buf;
  }
  return hex;
}

namespace {

void flatten(const LawReport& r, std::size_t depth, std::vector<std::pair<const LawReport*, std::size_t>>& out) {
  out.emplace_back(&r, depth);
  for (const auto& p : r.parts) flatten(p, depth + 1, out);
}

std::string tuple_str(const std::vector<std::size_t>& index) {
  std::string s = "(";
  for (std::size_t k = 0; k < index.size(); ++k) s += (k ? "," : "") + std::to_string(index[k]);
  return s + ")";
}

bool all_passed(const std::vector<LawReport>& laws) {
  return std::all_of(laws.begin(), laws.end(), [](const LawReport& r) { return r.passed(); });
}

}  // namespace

std::string report_json(const ReportContext& ctx, const std::vector<LawReport>& laws) {
  std::vector<std::pair<const LawReport*, std::size_t>> flat;
  for (const auto& r : laws) flatten(r, 0, flat);
  json records = json::array();
  for (const auto& [r, depth] : flat) {
    json violations = json::array();
    for (std::size_t k = 0; k < r->violations.size() && k < kReportedViolations; ++k) {
      const Violation& v = r->violations[k];
      json residual = json::array();
      for (const auto& c : v.residual) residual.push_back(c.str());
      violations.push_back(json{{"index", v.index}, {"relation", v.relation}, {"residual", std::move(residual)}});
    }
    records.push_back(json{{"law", r->law},
                           {"statement", r->statement},
                           {"depth", depth},
                           {"passed", r->passed()},
                           {"violation_count", r->violation_count()},
                           {"violations", std::move(violations)}});
  }
  json doc{{"tool", std::string(kToolName)},
           {"version", std::string(kToolVersion)},
           {"input_digest", "sha256:" + ctx.input_digest},
           {"command", ctx.command},
           {"mode", ctx.mode},
           {"passed", all_passed(laws)},
           {"laws", std::move(records)}};
  return doc.dump(2) + "\n";
}

std::string report_text(const ReportContext& ctx, const std::vector<LawReport>& laws) {
  std::vector<std::pair<const LawReport*, std::size_t>> flat;
  for (const auto& r : laws) flatten(r, 0, flat);
  std::ostringstream os;
  os << kToolName << " " << kToolVersion << "  " << ctx.command;
  if (!ctx.mode.empty()) os << "  mode=" << ctx.mode;
  os << "  input sha256:" << ctx.input_digest << "\n";
  for (const auto& [r, depth] : flat) {
    const std::string pad(2 * depth, ' ');
    os << pad << (r->passed() ? "PASS " : "FAIL ") << r->law;
    if (!r->passed()) os << "  (" << r->violation_count() << " violations)";
    os << "\n";
    for (std::size_t k = 0; k < r->violations.size() && k < kReportedViolations; ++k) {
      const Violation& v = r->violations[k];
      os << pad << "    at " << tuple_str(v.index) << "  " << v.relation << "  residual [";
      for (std::size_t m = 0; m < v.residual.size(); ++m) os << (m ? ", " : "") << v.residual[m].str();
      os << "]\n";
    }
    if (r->violations.size() > kReportedViolations) {
      os << pad << "    ... " << r->violations.size() - kReportedViolations << " more\n";
    }
  }
  os << "result: " << (all_passed(laws) ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace ternalg::io
