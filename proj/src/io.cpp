#include "fimod/io.hpp"

#include <fstream>
#include <sstream>

namespace fimod {

using nlohmann::json;

namespace {

json matrix_to_json(const SparseMatrix& m) {
  // Row i of the file is column i of the internal matrix.
  json rows = json::array();
  for (int j = 0; j < m.cols(); ++j) {
    json row = json::array();
    for (int i = 0; i < m.rows(); ++i) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational entry_from_json(const json& e, const std::string& where) {
  try {
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_integer()) return Rational(e.get<long>());
  } catch (const std::invalid_argument& err) {
    throw InvalidModuleFile(where + ": " + err.what());
  }
  throw InvalidModuleFile(where + ": entries must be \"p/q\" strings");
}

SparseMatrix matrix_from_json(const json& j, int sourceDim, int targetDim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != sourceDim) {
    throw InvalidModuleFile(where + ": expected " + std::to_string(sourceDim) + " rows");
  }
  SparseMatrix m(targetDim, sourceDim);
  for (int s = 0; s < sourceDim; ++s) {
    const json& row = j[static_cast<std::size_t>(s)];
    if (!row.is_array() || static_cast<int>(row.size()) != targetDim) {
      throw InvalidModuleFile(where + ": row " + std::to_string(s) + " must have " + std::to_string(targetDim) +
                              " entries");
    }
    SparseVector col;
    for (int t = 0; t < targetDim; ++t) {
      Rational x = entry_from_json(row[static_cast<std::size_t>(t)], where);
      if (x != 0) col.emplace_back(t, x);
    }
    m.set_column(s, std::move(col));
  }
  return m;
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InvalidModuleFile(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& f = field(j, key, where);
  if (!f.is_number_integer() || f.get<long>() < 0) {
    throw InvalidModuleFile(where + ": \"" + key + "\" must be a nonnegative integer");
  }
  return f.get<int>();
}

json degree_json(const ObservedDegree& d) { return {{"value", d.value}, {"flag", to_string(d.flag)}}; }

json onset_json(const Onset& o) { return {{"level", o.level}, {"flag", to_string(o.flag)}}; }

json bound_line_json(const BoundLine& l) {
  json j = {{"expression", l.derived.to_string()}, {"value", l.value}};
  if (l.published) {
    j["published"] = l.published->to_string();
    j["matchesPublished"] = l.matchesPublished;
  }
  return j;
}

std::string compact(const BoundExpr& e) { return e.to_string("k", true); }

}  // namespace

json module_to_json(const TruncatedFIModule& v) {
  json levels = json::array();
  for (int n = 0; n <= v.max_level(); ++n) {
    json gens = json::array();
    for (const auto& g : v.level(n).generators()) gens.push_back(matrix_to_json(g));
    levels.push_back({{"n", n},
                      {"dim", v.dim(n)},
                      {"generators", std::move(gens)},
                      {"inclusion", n == 0 ? json(nullptr) : matrix_to_json(v.inclusion(n))}});
  }
  return {{"maxLevel", v.max_level()}, {"levels", std::move(levels)}};
}

TruncatedFIModule module_from_json(const json& j) {
  const int top = int_field(j, "maxLevel", "module");
  const json& levels = field(j, "levels", "module");
  if (!levels.is_array() || static_cast<int>(levels.size()) != top + 1) {
    throw InvalidModuleFile("module: expected " + std::to_string(top + 1) + " levels");
  }
  std::vector<FILevel> out;
  int previousDim = 0;
  for (int n = 0; n <= top; ++n) {
    const json& l = levels[static_cast<std::size_t>(n)];
    const std::string where = "level " + std::to_string(n);
    if (int_field(l, "n", where) != n) throw InvalidModuleFile(where + ": levels must be listed in order");
    const int dim = int_field(l, "dim", where);
    const json& gens = field(l, "generators", where);
    if (!gens.is_array() || static_cast<int>(gens.size()) != std::max(n - 1, 0)) {
      throw InvalidModuleFile(where + ": expected " + std::to_string(std::max(n - 1, 0)) + " generators");
    }
    std::vector<SparseMatrix> mats;
    for (int i = 1; i < n; ++i) {
      mats.push_back(matrix_from_json(gens[static_cast<std::size_t>(i - 1)], dim, dim,
                                      where + " s_" + std::to_string(i)));
    }
    FILevel level{Representation(n, dim, std::move(mats)), std::nullopt};
    const json& inc = field(l, "inclusion", where);
    if (n == 0) {
      if (!inc.is_null()) throw InvalidModuleFile(where + ": inclusion must be null");
    } else {
      level.inclusion = matrix_from_json(inc, previousDim, dim, where + " inclusion");
    }
    out.push_back(std::move(level));
    previousDim = dim;
  }
  TruncatedFIModule v(std::move(out));
  if (auto problem = v.validate()) throw InvalidModuleFile(*problem);
  return v;
}

TruncatedFIModule load_module(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidModuleFile("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidModuleFile(path.string() + ": " + e.what());
  }
  return module_from_json(j);
}

void save_module(const TruncatedFIModule& v, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump(module_to_json(v));
}

json character_table_to_json(const CharacterTable& table) {
  json classes = json::array();
  for (const auto& c : cycle_types(table.n)) classes.push_back({c.partition.parts(), c.classSize.get_si()});
  json irreducibles = json::object();
  for (std::size_t i = 0; i < table.shapes.size(); ++i) {
    json values = json::array();
    for (const auto& x : table.characters[i].values()) values.push_back(to_string(x));
    irreducibles[table.shapes[i].to_string()] = std::move(values);
  }
  return {{"n", table.n}, {"classes", std::move(classes)}, {"irreducibles", std::move(irreducibles)}};
}

json character_polynomial_to_json(const CharacterPolynomial& q) {
  json monomials = json::array();
  for (const auto& [m, c] : q.coefficients()) {
    json mj = json::object();
    for (const auto& [ell, e] : m) mj[std::to_string(ell)] = e;
    monomials.push_back({{"m", std::move(mj)}, {"coeff", to_string(c)}});
  }
  return {{"monomials", std::move(monomials)}};
}

json bound_table_to_json(const BoundTable& t) {
  json trace = json::array();
  for (const auto& s : t.trace) {
    trace.push_back({{"rule", s.rule}, {"index", s.index}, {"delta", s.delta}, {"hmax", s.hmax}, {"note", s.note}});
  }
  json j = {{"preset", to_string(t.preset)},
            {"k", t.k},
            {"lambda", t.lambda},
            {"delta", t.delta.derived.to_string()},
            {"hmax", t.hmax.derived.to_string()},
            {"t0", t.t0.derived.to_string()},
            {"t1", t.t1.derived.to_string()},
            {"stableRange", t.stableRange.derived.to_string()},
            {"values",
             {{"delta", t.delta.value},
              {"hmax", t.hmax.value},
              {"t0", t.t0.value},
              {"t1", t.t1.value},
              {"stableRange", t.stableRange.value}}},
            {"lines",
             {{"delta", bound_line_json(t.delta)},
              {"hmax", bound_line_json(t.hmax)},
              {"t0", bound_line_json(t.t0)},
              {"t1", bound_line_json(t.t1)},
              {"stableRange", bound_line_json(t.stableRange)}}},
            {"trace", std::move(trace)}};
  if (t.rationalStableRange) {
    j["rationalStableRange"] = t.rationalStableRange->derived.to_string();
    j["values"]["rationalStableRange"] = t.rationalStableRange->value;
    j["lines"]["rationalStableRange"] = bound_line_json(*t.rationalStableRange);
  }
  return j;
}

json config_bounds_to_json(int manifoldDim, bool orientable, long q) {
  ConfigSpaceBounds b = config_space_rule(manifoldDim, orientable);
  ConfigSpaceValues v = config_space_rule(manifoldDim, orientable, q);
  return {{"dim", manifoldDim},
          {"orientable", orientable ? 1 : 0},
          {"q", q},
          {"values", {{"delta", v.delta}, {"hmax", v.hmax}, {"t0", v.t0}, {"t1", v.t1}}},
          {"delta", b.profile.delta.to_string("q")},
          {"hmax", b.profile.hmax.to_string("q")},
          {"t0", b.presentation.t0.to_string("q")},
          {"t1", b.presentation.t1.to_string("q")}};
}

json analysis_to_json(const Analysis& a) {
  const DegreeReport& d = a.degrees;
  json levels = json::array();
  for (const auto& p : d.profile) {
    levels.push_back({{"n", p.n},
                      {"dim", p.dim},
                      {"inducedDim", p.inducedDim},
                      {"naturalRank", p.naturalRank},
                      {"differenceRank", p.differenceRank},
                      {"surjective", p.surjective},
                      {"kernelIsImage", p.kernelIsImage}});
  }
  json poly = json::array();
  for (const auto& c : d.dimensionPolynomial) poly.push_back(to_string(c));

  json mult = json::array();
  for (const auto& l : a.multiplicities) {
    json m = json::object();
    for (const auto& [tail, x] : l.byTail) m[tail.to_string()] = x.get_str();
    mult.push_back({{"n", l.n}, {"dim", l.dim}, {"multiplicities", std::move(m)}});
  }
  json stability = {{"levels", std::move(mult)}};
  if (a.onset) stability["onset"] = onset_json(*a.onset);

  json fit = {{"found", a.fit.found}, {"window", {a.fit.windowStart, a.fit.windowEnd}}};
  if (a.fit.found) {
    json residuals = json::array();
    for (const auto& r : a.fit.residuals) {
      residuals.push_back({{"n", r.n}, {"inWindow", r.inWindow}, {"mismatches", r.mismatches}});
    }
    fit["polynomial"] = character_polynomial_to_json(a.fit.polynomial);
    fit["text"] = a.fit.polynomial.to_string();
    fit["degree"] = a.fit.degree;
    fit["variables"] = a.fit.variables;
    fit["unique"] = a.fit.unique;
    fit["residuals"] = std::move(residuals);
  }

  json j = {{"maxLevel", static_cast<int>(a.dims.size()) - 1},
            {"dims", a.dims},
            {"degrees",
             {{"generation", degree_json(d.generation)},
              {"relation", degree_json(d.relation)},
              {"stable", degree_json(d.stable)},
              {"local", degree_json(d.local)},
              {"window", {d.windowStart, d.windowEnd}},
              {"dimensionPolynomial", std::move(poly)},
              {"derivativeCheck", d.derivativeCheck},
              {"presentationBoundsHold", a.boundsHold}}},
            {"levels", std::move(levels)},
            {"stability", std::move(stability)},
            {"characterPolynomial", std::move(fit)}};
  if (a.innerProducts) {
    json values = json::array();
    for (std::size_t i = 0; i < a.innerProducts->levels.size(); ++i) {
      values.push_back({{"n", a.innerProducts->levels[i]}, {"value", to_string(a.innerProducts->values[i])}});
    }
    j["innerProducts"] = {{"levels", std::move(values)}, {"onset", onset_json(a.innerProducts->onset)}};
  }
  return j;
}

std::string bound_table_to_text(const BoundTable& t) {
  std::ostringstream os;
  os << "preset " << to_string(t.preset) << ", k = " << t.k << ", lambda = " << t.lambda << "\n";
  auto row = [&](const char* name, const BoundLine& l) {
    os << "  " << name << " = " << l.value << "    " << compact(l.derived);
    if (l.published) os << (l.matchesPublished ? "    (matches " : "    (DIFFERS from ") << compact(*l.published) << ")";
    os << "\n";
  };
  row("delta      ", t.delta);
  row("h^max      ", t.hmax);
  row("t0         ", t.t0);
  row("t1         ", t.t1);
  row("stable from", t.stableRange);
  if (t.rationalStableRange) row("rational   ", *t.rationalStableRange);
  os << "derivation:\n";
  for (const auto& s : t.trace) {
    os << "  " << s.rule << " [" << s.index << "]: " << s.delta;
    if (!s.hmax.empty()) os << " ; " << s.hmax;
    if (!s.note.empty()) os << "    -- " << s.note;
    os << "\n";
  }
  return os.str();
}

std::string config_bounds_to_text(int manifoldDim, bool orientable, long q) {
  ConfigSpaceValues v = config_space_rule(manifoldDim, orientable, q);
  std::ostringstream os;
  os << "H^" << q << "(PConf(M)), dim M = " << manifoldDim << ", " << (orientable ? "orientable" : "non-orientable")
     << "\n  delta = " << v.delta << "\n  h^max = " << v.hmax << "\n  t0    = " << v.t0 << "\n  t1    = " << v.t1
     << "\n";
  return os.str();
}

std::string analysis_to_text(const Analysis& a) {
  const DegreeReport& d = a.degrees;
  std::ostringstream os;
  os << "dims:";
  for (int x : a.dims) os << " " << x;
  auto deg = [&](const char* name, const ObservedDegree& o) {
    os << "\n" << name << o.value << "  (" << to_string(o.flag) << ")";
  };
  deg("generation degree  ", d.generation);
  deg("relation degree    ", d.relation);
  deg("stable degree      ", d.stable);
  deg("local degree       ", d.local);
  os << "\npolynomial window  [" << d.windowStart << ", " << d.windowEnd << "]"
     << (d.derivativeCheck ? ", derivative chain agrees" : ", derivative chain disagrees")
     << "\npresentation bounds " << (a.boundsHold ? "hold" : "VIOLATED") << "\n\nlevel  dim  ind  rank  surj  ker=im\n";
  for (const auto& p : d.profile) {
    os << p.n << "  " << p.dim << "  " << p.inducedDim << "  " << p.naturalRank << "  " << (p.surjective ? "y" : "n")
       << "  " << (p.kernelIsImage ? "y" : "n") << "\n";
  }
  os << "\nmultiplicities by tail:\n";
  for (const auto& l : a.multiplicities) {
    os << "  n=" << l.n << ":";
    for (const auto& [tail, x] : l.byTail) os << " " << tail.to_string() << "^" << x.get_str();
    os << "\n";
  }
  if (a.onset) os << "stabilizes from n = " << a.onset->level << " (" << to_string(a.onset->flag) << ")\n";
  os << "\ncharacter polynomial on [" << a.fit.windowStart << ", " << a.fit.windowEnd << "]: ";
  if (!a.fit.found) {
    os << "no exact fit\n";
    return os.str();
  }
  os << a.fit.polynomial.to_string() << "  (degree " << a.fit.degree << ", r = " << a.fit.variables
     << (a.fit.unique ? ", unique" : ", not unique") << ")\n";
  for (const auto& r : a.fit.residuals) {
    if (r.mismatches != 0) os << "  mismatch at n=" << r.n << " (" << r.mismatches << " classes)\n";
  }
  if (a.innerProducts) {
    os << "inner products:";
    for (std::size_t i = 0; i < a.innerProducts->levels.size(); ++i) {
      os << " " << a.innerProducts->levels[i] << ":" << to_string(a.innerProducts->values[i]);
    }
    os << "\nconstant from n = " << a.innerProducts->onset.level << " (" << to_string(a.innerProducts->onset.flag)
       << ")\n";
  }
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fimod
