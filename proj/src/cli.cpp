#include "liemod/cli.hpp"

#include "liemod/catalog.hpp"
#include "liemod/cohomology.hpp"
#include "liemod/deformation.hpp"
#include "liemod/expression.hpp"
#include "liemod/extension.hpp"
#include "liemod/tables.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace liemod::cli {

namespace {

struct Input {
  AlgebraDef def;
  std::optional<SpecialPoint> point;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Input load(const std::string& arg) {
  if (arg.starts_with("catalog:")) {
    const CatalogRef ref = resolve_ref(arg);
    return {*ref.def, ref.point};
  }
  return {parse_lie(read_file(arg)), std::nullopt};
}

// Structure after the point label and the --at values.
ScalarCochain structure(const Input& in, const std::string& at) {
  ScalarCochain d = in.point ? in.def.at(*in.point) : in.def.d;
  if (at.empty()) return d;
  std::map<std::string, Scalar> values;
  for (const auto& [name, v] : parse_assignment(at)) {
    if (std::find(in.def.params.begin(), in.def.params.end(), name) == in.def.params.end())
      throw Error(ErrorCode::InvalidArgument, "unknown parameter '" + name + "' in --at");
    values[name] = Scalar(v);
  }
  return d.map<Scalar>([&](const Scalar& s) { return s.substitute(values); });
}

std::vector<Polynomial> avoid_of(const Input& in) { return in.point ? in.def.avoid_on(*in.point) : in.def.avoid; }

bool is_rational(const ScalarCochain& d) {
  for (const auto& [b, c] : d.terms())
    if (!c.is_rational()) return false;
  return true;
}

RationalCochain rational(const ScalarCochain& d) {
  std::set<std::string> free;
  for (const auto& [b, c] : d.terms()) {
    const auto ps = c.parameters();
    free.insert(ps.begin(), ps.end());
  }
  if (!free.empty()) {
    std::string names;
    for (const auto& p : free) names += (names.empty() ? "" : ",") + p;
    throw Error(ErrorCode::MissingParameter, "parameters " + names + " need values (use --at)");
  }
  return d.map<Rational>([](const Scalar& s) { return s.to_rational(); });
}

ScalarMatrix read_matrix(const std::string& path) {
  std::vector<std::vector<Scalar>> rows;
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Scalar> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_scalar(tok, {}, lineno));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  ScalarMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n)
      throw Error(ErrorCode::DimensionMismatch, "witness must be a square matrix");
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rows[i][j];
  }
  return g;
}

int code_for(ErrorCode c) {
  switch (c) {
  case ErrorCode::JacobiFails: return False;
  case ErrorCode::NoValidSample: return Inconclusive;
  default: return Usage;
  }
}

int emit_table(const TableReport& rep, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const std::string tsv = rep.to_tsv();
  if (out_path.empty()) out << tsv;
  else {
    std::ofstream f(out_path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + out_path + "'");
    f << tsv;
  }
  std::size_t failed = 0;
  for (const auto& r : rep.rows) failed += r.failed();
  err << "rows " << rep.rows.size() << ": match " << rep.count(TableRow::Status::Match) << ", mismatch "
      << rep.count(TableRow::Status::Mismatch) << ", no-expectation " << rep.count(TableRow::Status::NoExpectation)
      << ", inconsistent " << failed << "\n";
  for (const auto& r : rep.rows)
    if (r.status == TableRow::Status::Mismatch)
      err << "note: " << r.id << " " << r.point << " printed " << betti_to_string(*r.expected)
          << (r.expected_euler_ok == false ? " (alternating sum " + std::to_string(alternating_sum(*r.expected)) + ")" : "")
          << ", computed " << betti_to_string(r.computed) << "\n";
  return rep.consistent() ? Ok : False;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"liemod: exact cohomology and deformations of low-dimensional Lie algebras", "liemod"};
  app.require_subcommand(1);

  std::string file, file_b, at, witness, mode = "generic", out_path, family, which, point_text, dim_text, ref, dir;
  std::uint64_t seed = 0;
  int order = 3, tries = 200;

  auto* jac = app.add_subcommand("jacobi", "check [d,d] = 0 (symbolically unless --at is given)");
  jac->add_option("file", file, ".lie file or catalog:DIM/ID[@POINT]")->required();
  jac->add_option("--at", at, "parameter values, e.g. p=2,q=3");

  auto* coh = app.add_subcommand("cohomology", "Betti numbers h^0..h^n");
  coh->add_option("file", file)->required();
  coh->add_option("--at", at);
  coh->add_option("--mode", mode, "generic | symbolic (parametric input only)")
      ->check(CLI::IsMember({"generic", "symbolic"}));
  coh->add_option("--seed", seed);

  auto* tab = app.add_subcommand("tables", "cohomology table for dim 3, 4, 5 or nil");
  tab->add_option("dim", dim_text)->required()->check(CLI::IsMember({"3", "4", "5", "nil"}));
  tab->add_option("--seed", seed);
  tab->add_option("--out", out_path);

  auto* nil = app.add_subcommand("nilpotent-table", "cohomology of the nilpotent table");
  nil->add_option("--seed", seed);
  nil->add_option("--out", out_path);

  auto* ver = app.add_subcommand("versal", "truncated versal deformation");
  ver->add_option("file", file)->required();
  ver->add_option("--order", order, "truncation order (>= 2)");
  ver->add_option("--at", at);

  auto* inv = app.add_subcommand("invariants", "center, series and Betti numbers");
  inv->add_option("file", file)->required();
  inv->add_option("--at", at);

  auto* isv = app.add_subcommand("iso-verify", "check that WITNESS maps A onto B");
  isv->add_option("a", file)->required();
  isv->add_option("b", file_b)->required();
  isv->add_option("witness", witness, "matrix file, one row per line")->required();
  isv->add_option("--at", at, "values for parameters of A");

  auto* iss = app.add_subcommand("iso-search", "randomized search for an isomorphism A -> B");
  iss->add_option("a", file)->required();
  iss->add_option("b", file_b)->required();
  iss->add_option("--tries", tries)->check(CLI::PositiveNumber);
  iss->add_option("--seed", seed);

  auto* sym = app.add_subcommand("symmetry", "apply sigma or tau of the d5 / d6 family");
  sym->add_option("family", family)->required()->check(CLI::IsMember({"d5", "d6", "5.d5", "5.d6"}));
  sym->add_option("map", which)->required()->check(CLI::IsMember({"sigma", "tau"}));
  sym->add_option("point", point_text, "projective point, e.g. 1:2 (use -- before negative values)")->required();

  auto* cat = app.add_subcommand("catalog", "list, show or export catalog entries");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "ids, parameters and expected vectors");
  cat_list->add_option("dim", dim_text)->check(CLI::IsMember({"3", "4", "5", "nil"}));
  auto* cat_show = cat->add_subcommand("show", "print one entry in .lie form");
  cat_show->add_option("ref", ref, "catalog:DIM/ID")->required();
  auto* cat_export = cat->add_subcommand("export", "write every entry as DIR/<id>.lie");
  cat_export->add_option("dir", dir)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return Ok;
    }
    err << "usage error: " << e.what() << "\n";
    return Usage;
  }

  try {
    if (*jac) {
      const Input in = load(file);
      const ScalarCochain d = structure(in, at);
      const ScalarCochain dd = nr_bracket(d, d);
      if (dd.is_zero()) {
        out << "jacobi: holds\n";
        return Ok;
      }
      out << "jacobi: fails\n";
      for (const auto& [b, c] : dd.terms()) out << "[d,d]\t" << b.to_string() << "\t" << c.to_string() << "\n";
      return False;
    }
    if (*coh) {
      const Input in = load(file);
      const ScalarCochain d = structure(in, at);
      CohomologyReport rep;
      if (is_rational(d)) {
        const RationalCochain r = rational(d);
        rep = betti(r);
        out << "mode\t" << to_string(rep.mode) << "\n";
        out << "betti\t" << rep.betti_string() << "\n";
        out << "euler\t" << rep.euler() << "\n";
        out << "center\t" << center(r) << "\n";
        return Ok;
      }
      rep = mode == "symbolic" ? betti(d, RankMode::ExactSymbolic) : betti_checked(d, seed, avoid_of(in));
      out << "mode\t" << to_string(rep.mode) << "\n";
      out << "betti\t" << rep.betti_string() << "\n";
      out << "euler\t" << rep.euler() << "\n";
      if (rep.mode == RankMode::GenericProbabilistic || rep.escalated) {
        out << "seed\t" << seed << "\n";
        if (rep.resampled) out << "resampled\ttrue\n";
        if (rep.escalated) out << "escalated\ttrue\n";
      }
      return Ok;
    }
    if (*tab) return emit_table(make_table(dim_text == "nil" ? 0 : std::stoi(dim_text), seed), out_path, out, err);
    if (*nil) return emit_table(make_table(0, seed), out_path, out, err);
    if (*ver) {
      if (order < 2) {
        err << "usage error: --order must be at least 2\n";
        return Usage;
      }
      const Input in = load(file);
      out << versal(rational(structure(in, at)), order).to_string();
      return Ok;
    }
    if (*inv) {
      const Input in = load(file);
      out << series_invariants(rational(structure(in, at))).to_string() << "\n";
      return Ok;
    }
    if (*isv) {
      const Input a = load(file), b = load(file_b);
      const ScalarCochain da = structure(a, at), db = structure(b, "");
      const ScalarMatrix g = read_matrix(witness);
      if (g.rows() != da.dim()) throw Error(ErrorCode::DimensionMismatch, "witness size does not match the algebra");
      const bool ok = verify_parametric_iso(da, db, g);
      out << (ok ? "iso: verified\n" : "iso: not verified\n");
      return ok ? Ok : False;
    }
    if (*iss) {
      const Input a = load(file), b = load(file_b);
      const WitnessResult r = iso_witness_search(rational(structure(a, "")), rational(structure(b, "")), tries, seed);
      out << "status\t" << to_string(r.status) << "\n";
      out << "trials\t" << r.trials << "\n";
      if (!r.detail.empty()) out << "detail\t" << r.detail << "\n";
      if (r.witness) {
        out << "witness\n";
        for (Eigen::Index i = 0; i < r.witness->rows(); ++i) {
          for (Eigen::Index j = 0; j < r.witness->cols(); ++j) out << (j ? " " : "") << to_string((*r.witness)(i, j));
          out << "\n";
        }
      }
      switch (r.status) {
      case WitnessResult::Status::Found: return Ok;
      case WitnessResult::Status::InvariantMismatch: return False;
      case WitnessResult::Status::BudgetExhausted: return Inconclusive;
      }
    }
    if (*sym) {
      out << to_string(symmetry_map(family, parse_symmetry_map(which), parse_projective(point_text))) << "\n";
      return Ok;
    }
    if (*cat_list) {
      std::vector<int> dims;
      if (dim_text.empty()) dims = {3, 4, 5, 0};
      else dims = {dim_text == "nil" ? 0 : std::stoi(dim_text)};
      for (int dm : dims)
        for (const auto& def : dm == 0 ? nilpotent_table() : catalog(dm)) {
          std::string ps;
          for (const auto& p : def.params) ps += (ps.empty() ? "" : ":") + p;
          out << def.id << '\t' << (ps.empty() ? "-" : ps) << '\t'
              << (def.expected_betti ? betti_to_string(*def.expected_betti) : "-") << '\t' << def.points.size()
              << " points\n";
        }
      return Ok;
    }
    if (*cat_show) {
      const Input in = load(ref);
      out << serialize(in.def);
      return Ok;
    }
    if (*cat_export) {
      std::filesystem::create_directories(dir);
      std::size_t n = 0;
      for (int dm : {3, 4, 5, 0})
        for (const auto& def : dm == 0 ? nilpotent_table() : catalog(dm)) {
          std::ofstream f(std::filesystem::path(dir) / (def.id + ".lie"));
          f << serialize(def);
          ++n;
        }
      out << "wrote " << n << " files to " << dir << "\n";
      return Ok;
    }
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << " (line " << e.line() << ", column " << e.column() << ")\n";
    return Usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return code_for(e.code());
  }
  return Usage;
}

} // namespace liemod::cli
