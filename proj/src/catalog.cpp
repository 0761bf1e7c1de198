#include "liemod/catalog.hpp"

#include "liemod/expression.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

namespace liemod {

namespace detail {
extern const std::vector<const char*> table_dim3;
extern const std::vector<const char*> table_dim4;
extern const std::vector<const char*> table_dim5;
extern const std::vector<const char*> table_nilpotent;
extern const std::vector<const char*> table_quarantine;
} // namespace detail

std::string betti_to_string(const BettiVector& b) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s;
}

BettiVector parse_betti(std::string_view text) {
  BettiVector out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw SyntaxError("bad Betti vector '" + s + "'", 0, 1);
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw SyntaxError("empty Betti vector", 0, 1);
  return out;
}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::string rest_of_line(const std::string& line, const Token& after) {
  std::size_t i = static_cast<std::size_t>(after.column - 1) + after.text.size();
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  std::string r = line.substr(std::min(i, line.size()));
  while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
  return r;
}

int parse_index(const Token& t, int line) {
  if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
    throw SyntaxError("expected an index, got '" + t.text + "'", line, t.column);
  return std::stoi(t.text);
}

Scalar parse_value(const std::string& text, const AlgebraDef& def, int line, int column) {
  Scalar v = parse_scalar(text, def.params, line, column);
  if (def.params.empty() && !v.parameters().empty())
    throw SyntaxError("parameter '" + *v.parameters().begin() + "' used without a params line", line, column);
  return v;
}

} // namespace

AlgebraDef parse_lie(std::string_view text) {
  AlgebraDef def;
  bool have_dim = false;
  std::set<BasisTerm> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    const auto toks = split(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (!have_dim) {
      if (kw != "dim") throw SyntaxError("first line must be 'dim N'", lineno, toks[0].column);
      if (toks.size() != 2) throw SyntaxError("expected 'dim N'", lineno, toks[0].column);
      def.dim = parse_index(toks[1], lineno);
      if (def.dim < 1 || def.dim > 32) throw SyntaxError("dimension must be in 1..32", lineno, toks[1].column);
      def.d = ScalarCochain(def.dim, 2);
      have_dim = true;
      continue;
    }
    if (kw == "dim") {
      throw SyntaxError("repeated 'dim'", lineno, toks[0].column);
    } else if (kw == "id") {
      if (toks.size() != 2) throw SyntaxError("expected 'id NAME'", lineno, toks[0].column);
      def.id = toks[1].text;
    } else if (kw == "params") {
      if (!seen.empty() || !def.params.empty())
        throw SyntaxError("'params' must come once, before any psi line", lineno, toks[0].column);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto& name = toks[i].text;
        const bool ok = std::isalpha(static_cast<unsigned char>(name[0])) &&
                        std::all_of(name.begin(), name.end(), [](char c) {
                          return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                        });
        if (!ok) throw SyntaxError("bad parameter name '" + name + "'", lineno, toks[i].column);
        if (std::find(def.params.begin(), def.params.end(), name) != def.params.end())
          throw SyntaxError("parameter '" + name + "' declared twice", lineno, toks[i].column);
        def.params.push_back(name);
      }
    } else if (kw == "projective") {
      def.projective = true;
    } else if (kw == "psi") {
      // psi i j -> k : EXPR
      std::vector<int> inputs;
      std::size_t t = 1;
      for (; t < toks.size() && toks[t].text != "->"; ++t) {
        const int idx = parse_index(toks[t], lineno);
        if (idx < 1 || idx > def.dim)
          throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(lineno) + ": index " +
                                                      std::to_string(idx) + " outside 1.." + std::to_string(def.dim));
        if (!inputs.empty() && idx <= inputs.back())
          throw SyntaxError("input indices must be strictly increasing", lineno, toks[t].column);
        inputs.push_back(idx);
      }
      if (t >= toks.size()) throw SyntaxError("expected '->'", lineno, toks.back().column);
      if (inputs.size() != 2) throw SyntaxError("a structure constant takes exactly 2 inputs", lineno, toks[t].column);
      if (t + 2 >= toks.size() || toks[t + 2].text != ":")
        throw SyntaxError("expected 'k : EXPR' after '->'", lineno, toks[t].column);
      const int out = parse_index(toks[t + 1], lineno);
      if (out < 1 || out > def.dim)
        throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(lineno) + ": index " +
                                                    std::to_string(out) + " outside 1.." + std::to_string(def.dim));
      const std::string expr = rest_of_line(line, toks[t + 2]);
      if (expr.empty()) throw SyntaxError("missing coefficient", lineno, toks[t + 2].column + 1);
      const int col = static_cast<int>(line.find(expr, toks[t + 2].column)) + 1;
      const BasisTerm b = BasisTerm::make(inputs, out);
      if (!seen.insert(b).second)
        throw Error(ErrorCode::DuplicateTerm, "line " + std::to_string(lineno) + ": " + b.to_string() + " given twice");
      def.d.add(b, parse_value(expr, def, lineno, col));
    } else if (kw == "avoid") {
      const std::string expr = rest_of_line(line, toks[0]);
      if (expr.empty()) throw SyntaxError("missing polynomial", lineno, toks[0].column + 5);
      const Scalar v = parse_value(expr, def, lineno, static_cast<int>(line.find(expr, toks[0].column)) + 1);
      if (!v.denominator().is_constant())
        throw SyntaxError("avoid expects a polynomial", lineno, toks[0].column);
      def.avoid.push_back(v.numerator());
    } else if (kw == "betti") {
      if (toks.size() != 2) throw SyntaxError("expected 'betti h0,h1,...'", lineno, toks[0].column);
      try {
        def.expected_betti = parse_betti(toks[1].text);
      } catch (const SyntaxError&) {
        throw SyntaxError("bad Betti vector", lineno, toks[1].column);
      }
    } else if (kw == "point") {
      if (toks.size() < 2) throw SyntaxError("expected 'point NAME ...'", lineno, toks[0].column);
      SpecialPoint sp;
      sp.name = toks[1].text;
      for (std::size_t t = 2; t < toks.size(); ++t) {
        if (toks[t].text == "betti") {
          if (t + 2 != toks.size()) throw SyntaxError("expected one Betti vector at the end", lineno, toks[t].column);
          try {
            sp.betti = parse_betti(toks[t + 1].text);
          } catch (const SyntaxError&) {
            throw SyntaxError("bad Betti vector", lineno, toks[t + 1].column);
          }
          break;
        }
        const auto eq = toks[t].text.find('=');
        if (eq == std::string::npos || eq == 0)
          throw SyntaxError("expected NAME=VALUE", lineno, toks[t].column);
        const std::string name = toks[t].text.substr(0, eq);
        if (std::find(def.params.begin(), def.params.end(), name) == def.params.end())
          throw SyntaxError("unknown parameter '" + name + "'", lineno, toks[t].column);
        if (sp.values.count(name)) throw SyntaxError("parameter '" + name + "' assigned twice", lineno, toks[t].column);
        sp.values[name] = parse_value(toks[t].text.substr(eq + 1), def, lineno, toks[t].column + static_cast<int>(eq) + 1);
      }
      def.points.push_back(std::move(sp));
    } else if (kw == "group") {
      if (toks.size() != 2) throw SyntaxError("expected 'group NAME'", lineno, toks[0].column);
      def.symmetry_group = toks[1].text;
    } else if (kw == "note") {
      def.notes.push_back(rest_of_line(raw, toks[0]));
    } else {
      throw SyntaxError("unknown keyword '" + kw + "'", lineno, toks[0].column);
    }
  }
  if (!have_dim) throw SyntaxError("missing 'dim N'", lineno, 1);
  return def;
}

namespace {

std::string compact(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

} // namespace

std::string serialize(const AlgebraDef& def) {
  std::ostringstream os;
  os << "dim " << def.dim << "\n";
  if (!def.id.empty()) os << "id " << def.id << "\n";
  if (!def.params.empty()) {
    os << "params";
    for (const auto& p : def.params) os << ' ' << p;
    os << "\n";
  }
  if (def.projective) os << "projective\n";
  for (const auto& [b, c] : def.d.terms()) {
    const auto idx = b.indices();
    os << "psi " << idx[0] << ' ' << idx[1] << " -> " << b.output + 1 << " : " << c.to_string() << "\n";
  }
  for (const auto& a : def.avoid) os << "avoid " << a.to_string() << "\n";
  if (def.expected_betti) os << "betti " << betti_to_string(*def.expected_betti) << "\n";
  for (const auto& sp : def.points) {
    os << "point " << sp.name;
    for (const auto& p : def.params) {
      auto it = sp.values.find(p);
      if (it != sp.values.end()) os << ' ' << p << '=' << compact(it->second.to_string());
    }
    if (sp.betti) os << " betti " << betti_to_string(*sp.betti);
    os << "\n";
  }
  if (def.symmetry_group) os << "group " << *def.symmetry_group << "\n";
  for (const auto& n : def.notes) os << "note " << n << "\n";
  return os.str();
}

namespace {

std::vector<AlgebraDef> load(const std::vector<const char*>& texts) {
  std::vector<AlgebraDef> out;
  for (const char* t : texts) out.push_back(parse_lie(t));
  return out;
}

std::string short_id(const AlgebraDef& d) {
  const auto dot = d.id.find('.');
  return dot == std::string::npos ? d.id : d.id.substr(dot + 1);
}

} // namespace

const std::vector<AlgebraDef>& catalog(int dim) {
  static const std::vector<AlgebraDef> c3 = load(detail::table_dim3);
  static const std::vector<AlgebraDef> c4 = load(detail::table_dim4);
  static const std::vector<AlgebraDef> c5 = load(detail::table_dim5);
  switch (dim) {
  case 3: return c3;
  case 4: return c4;
  case 5: return c5;
  case 0: return nilpotent_table();
  default: throw Error(ErrorCode::UnknownId, "no catalog for dimension " + std::to_string(dim));
  }
}

const std::vector<AlgebraDef>& nilpotent_table() {
  static const std::vector<AlgebraDef> n = load(detail::table_nilpotent);
  return n;
}

const std::vector<AlgebraDef>& quarantine() {
  static const std::vector<AlgebraDef> q = load(detail::table_quarantine);
  return q;
}

const AlgebraDef& get(int dim, std::string_view id) {
  if (dim == 0 || dim == 3 || dim == 4 || dim == 5) {
    for (const auto& d : catalog(dim))
      if (short_id(d) == id || d.id == id) return d;
    for (const auto& d : quarantine())
      if (d.dim == dim && (short_id(d) == id || d.id == id)) return d;
  }
  throw Error(ErrorCode::UnknownId, "no algebra '" + std::string(id) + "' in dimension " + std::to_string(dim));
}

const SpecialPoint* AlgebraDef::find_point(std::string_view name) const {
  for (const auto& p : points)
    if (p.name == name) return &p;
  return nullptr;
}

ScalarCochain AlgebraDef::at(const SpecialPoint& point) const {
  ScalarCochain out(dim, 2);
  for (const auto& [b, c] : d.terms()) out.add_unchecked(b, c.substitute(point.values));
  return out;
}

RationalCochain AlgebraDef::at(const Assignment& values) const { return evaluate(d, values); }

std::vector<std::string> AlgebraDef::free_params(const SpecialPoint& point) const {
  std::set<std::string> used;
  for (const auto& [name, v] : point.values) {
    const auto ps = v.parameters();
    used.insert(ps.begin(), ps.end());
  }
  std::vector<std::string> out;
  for (const auto& p : params)
    if (!point.values.count(p) || used.count(p)) out.push_back(p);
  return out;
}

std::vector<Polynomial> AlgebraDef::avoid_on(const SpecialPoint& point) const {
  std::vector<Polynomial> out;
  for (const auto& a : avoid) {
    const Scalar s = Scalar(a).substitute(point.values);
    if (!s.is_zero() && !s.numerator().is_constant()) out.push_back(s.numerator());
  }
  return out;
}

Assignment sample_generic(const AlgebraDef& def, std::uint64_t seed) {
  return sample_generic(def, SpecialPoint{}, seed);
}

Assignment sample_generic(const AlgebraDef& def, const SpecialPoint& sub, std::uint64_t seed) {
  const auto free = def.free_params(sub);
  const auto avoid = def.avoid_on(sub);
  const ScalarCochain d = def.at(sub);
  std::vector<Polynomial> poles;
  for (const auto& [b, c] : d.terms())
    if (!c.denominator().is_constant()) poles.push_back(c.denominator());
  if (free.size() > 96) throw Error(ErrorCode::NoValidSample, "too many parameters for distinct values");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(2, 97);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Assignment a;
    std::set<long> seen;
    bool ok = true;
    for (const auto& p : free) {
      const long v = dist(rng);
      ok = ok && seen.insert(v).second;
      a[p] = Rational(v);
    }
    if (!ok) continue;
    auto vanishes = [&](const Polynomial& f) { return f.evaluate(a).is_zero(); };
    if (std::any_of(avoid.begin(), avoid.end(), vanishes)) continue;
    if (std::any_of(poles.begin(), poles.end(), vanishes)) continue;
    return a;
  }
  throw Error(ErrorCode::NoValidSample, "no admissible point for " + def.id + " after 1000 tries");
}

SpecialPoint point_from_label(const AlgebraDef& def, std::string_view label) {
  if (const SpecialPoint* p = def.find_point(label)) return *p;
  std::vector<std::string> parts;
  std::string cur;
  for (char c : label) {
    if (c == ':') { parts.push_back(cur); cur.clear(); }
    else cur += c;
  }
  parts.push_back(cur);
  if (parts.size() != def.params.size())
    throw Error(ErrorCode::InvalidArgument, "point '" + std::string(label) + "' needs " +
                                                std::to_string(def.params.size()) + " coordinates for " + def.id);
  SpecialPoint sp;
  sp.name = std::string(label);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Scalar v = parse_scalar(parts[i], def.params, 0, 1);
    if (v == Scalar::parameter(def.params[i]) ) continue;
    sp.values[def.params[i]] = v;
  }
  return sp;
}

CatalogRef resolve_ref(std::string_view ref) {
  constexpr std::string_view prefix = "catalog:";
  if (ref.substr(0, prefix.size()) != prefix)
    throw Error(ErrorCode::InvalidArgument, "catalog references look like catalog:5/d5@0:0:0");
  ref.remove_prefix(prefix.size());
  const auto slash = ref.find('/');
  if (slash == std::string_view::npos)
    throw Error(ErrorCode::InvalidArgument, "catalog references look like catalog:5/d5@0:0:0");
  const std::string_view dim_text = ref.substr(0, slash);
  int dim = 0;
  if (dim_text == "nil") dim = 0;
  else if (dim_text == "3" || dim_text == "4" || dim_text == "5") dim = dim_text[0] - '0';
  else throw Error(ErrorCode::UnknownId, "unknown catalog section '" + std::string(dim_text) + "'");
  std::string_view rest = ref.substr(slash + 1);
  const auto at = rest.find('@');
  CatalogRef out;
  out.def = &get(dim, rest.substr(0, at));
  if (at != std::string_view::npos) out.point = point_from_label(*out.def, rest.substr(at + 1));
  return out;
}

} // namespace liemod
