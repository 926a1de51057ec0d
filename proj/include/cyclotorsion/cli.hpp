#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it with in-memory streams.
//
// Exit codes: 0 finite result or success, 2 infinitely many torsion points,
// 1 any error (including a failed verify-example).

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclotorsion/fixtures.hpp"
#include "cyclotorsion/parser.hpp"
#include "cyclotorsion/report.hpp"

namespace cyclotorsion::cli {

inline constexpr int kExitFinite = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfinite = 2;

inline constexpr const char* kQuotedFormNote =
    "the Q(xi) form of this matrix usually quoted, a = -xi^3-xi^2+xi+1, b = xi^3-xi^2-xi-1, c = 1, d = -xi^2-1 "
    "(xi = -zeta_30^3), gives f(1,1) = -xi^2 != 0; conductor reduction of the level-30 matrix gives a = xi^3+xi+1, "
    "b = -xi^3-xi^2-xi-1, c = 1, d = -xi^2-1";

inline MatrixFile load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix_file(buf.str());
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

struct VerifyResult {
  ReportDocument doc;
  bool match = true;
  std::vector<std::string> mismatches;
};

/// Runs the pipeline on a built-in reference map and compares every table
/// with its stored value.
inline VerifyResult verify_example(const std::string& name, const ExecutionOptions& opt = {}) {
  MobiusMap g = MobiusMap::identity();
  long order = 1;
  std::vector<fixtures::ExponentPair> points;
  std::vector<std::vector<fixtures::ExponentPair>> table;
  std::vector<long> nontorsion;  // -1: not recorded
  if (name == "s1") {
    g = fixtures::gamma1();
    order = fixtures::kGamma1Order;
    points = fixtures::gamma1_points();
    table = fixtures::gamma1_distribution();
    nontorsion.assign(7, -1);
  } else if (name == "s2") {
    g = fixtures::gamma2();
    order = fixtures::kGamma2Order;
    points = fixtures::gamma2_points();
    table = fixtures::gamma2_distribution();
    nontorsion = {-1, -1, -1, -1, 2, 2, -1};
  } else {
    throw Error("unknown example '" + name + "' (expected s1 or s2)");
  }
  auto records = [order](const std::vector<fixtures::ExponentPair>& pairs) {
    std::vector<TorsionPoint> pts;
    for (const auto& [j, k] : pairs) pts.push_back(TorsionPoint::joint(order, j, k));
    sort_unique(pts);
    return to_records(pts);
  };

  const TorusCurve f = graph_curve(g);
  const EnumerationResult e = enumerate_torsion(f, opt);
  const BoundReport b = bound_torsion(f, opt);
  const DistributionTable t = distribute(f, opt);

  VerifyResult r;
  r.doc = enumeration_report(e);
  r.doc.bound = bound_record(b);
  r.doc.distribution = distribution_records(t);
  auto check = [&r](bool ok, const std::string& what) {
    if (!ok) {
      r.match = false;
      r.mismatches.push_back(what);
    }
  };
  check(!e.infinite(), "enumeration is infinite");
  check(*r.doc.points == records(points), "torsion point list");
  check(b.total == 18, "bound total " + std::to_string(b.total));
  check(t.rows.size() == table.size(), "family size");
  for (std::size_t i = 0; i < std::min(t.rows.size(), table.size()); ++i) {
    check((*r.doc.distribution)[i].points == records(table[i]), "points on " + t.rows[i].label);
    if (nontorsion[i] >= 0) check(t.rows[i].nontorsion == nontorsion[i], "non-torsion count on " + t.rows[i].label);
  }
  if (name == "s1") r.doc.notes.push_back(kQuotedFormNote);
  r.doc.notes.push_back(std::to_string(points.size()) + " points, match: " + (r.match ? "OK" : "FAIL"));
  return r;
}

struct Options {
  bool json = false;
  ExecutionOptions exec;
};

inline void emit(std::ostream& out, const Options& o, const ReportDocument& d) {
  if (o.json) out << to_json(d).dump(2) << "\n";
  else out << render_text(d);
}

inline int cmd_enumerate(const std::string& file, const Options& o, std::ostream& out) {
  const EnumerationResult e = enumerate_torsion(graph_curve(load_matrix(file).map()), o.exec);
  emit(out, o, enumeration_report(e));
  return e.infinite() ? kExitInfinite : kExitFinite;
}

inline int cmd_bound(const std::string& file, const Options& o, std::ostream& out) {
  const BoundReport b = bound_torsion(graph_curve(load_matrix(file).map()), o.exec);
  ReportDocument d;
  d.case_tag = to_string(b.case_tag);
  d.conductor = b.minimal_n;
  d.bound = bound_record(b);
  d.notes = b.notes;
  emit(out, o, d);
  return b.infinite ? kExitInfinite : kExitFinite;
}

inline int cmd_distribute(const std::string& file, const Options& o, std::ostream& out) {
  const DistributionTable t = distribute(graph_curve(load_matrix(file).map()), o.exec);
  ReportDocument d;
  d.case_tag = to_string(t.case_tag);
  d.conductor = t.conductor;
  std::vector<TorsionPoint> all;
  for (const auto& row : t.rows) all.insert(all.end(), row.points.begin(), row.points.end());
  sort_unique(all);
  d.points = to_records(all);
  d.distribution = distribution_records(t);
  emit(out, o, d);
  return kExitFinite;
}

inline int cmd_verify(const std::string& name, const Options& o, std::ostream& out, std::ostream& err) {
  const VerifyResult r = verify_example(name, o.exec);
  if (o.json) {
    out << to_json(r.doc).dump(2) << "\n";
  } else {
    out << render_text(r.doc);
  }
  for (const auto& m : r.mismatches) err << "mismatch: " << m << "\n";
  return r.match ? kExitFinite : kExitError;
}

inline int cmd_oracle(const std::string& file, long max_order, const Options& o, std::ostream& out) {
  const auto pts = to_records(brute_force_torsion(graph_curve(load_matrix(file).map()), max_order, o.exec.threads));
  if (o.json) {
    OrderedJson j;
    j["max_order"] = max_order;
    j["points"] = to_json(pts);
    out << j.dump(2) << "\n";
  } else {
    out << pts.size() << " torsion points of joint order <= " << max_order << "\n";
    for (const auto& p : pts) out << std::setw(6) << p.n << std::setw(6) << p.x << std::setw(6) << p.y << "\n";
  }
  return kExitFinite;
}

inline int cmd_reduce(const std::string& file, const Options& o, std::ostream& out) {
  const MatrixFile mf = load_matrix(file);
  MatrixFile reduced;
  long level = 1;
  for (int k = 0; k < 4; ++k) {
    reduced.entries[k] = conductor_reduce(mf.entries[k]);
    level = std::lcm(level, reduced.entries[k].level());
  }
  reduced.order = level;
  for (auto& v : reduced.entries) v = v.lift(level);
  if (o.json) {
    OrderedJson j;
    j["order"] = level;
    const char* keys[4] = {"a", "b", "c", "d"};
    for (int k = 0; k < 4; ++k) j[keys[k]] = reduced.entries[k].to_string("z");
    out << j.dump(2) << "\n";
  } else {
    out << format_matrix_file(reduced);
  }
  return kExitFinite;
}

inline int cmd_polytope(const std::string& file1, const std::string& file2, const Options& o, std::ostream& out) {
  const TorusCurve f = graph_curve(load_matrix(file1).map()), g = graph_curve(load_matrix(file2).map());
  const auto p = newton(f), q = newton(g);
  const Rational sum = minkowski_sum(p, q).area();
  const Rational bound = toric_bezout_bound(f, g);
  if (o.json) {
    OrderedJson j;
    j["area_f"] = p.area().get_str();
    j["area_g"] = q.area().get_str();
    j["area_sum"] = sum.get_str();
    j["bound"] = bound.get_str();
    out << j.dump(2) << "\n";
  } else {
    out << "area(Newt f)          " << p.area().get_str() << "\n"
        << "area(Newt g)          " << q.area().get_str() << "\n"
        << "area(Newt f + Newt g) " << sum.get_str() << "\n"
        << "toric Bezout bound    " << bound.get_str() << "\n";
  }
  return kExitFinite;
}

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsion points on graph curves of Möbius maps with cyclotomic coefficients", "cyclotorsion"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print JSON instead of tables");
  app.add_option("--threads", o.exec.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--translate-modulus", o.exec.translate_modulus, "Translate search modulus (0: default)")
      ->check(CLI::NonNegativeNumber);

  std::string file, file2, example;
  long max_order = 0;
  auto* en = app.add_subcommand("enumerate", "All torsion points on the graph of the map in FILE");
  en->add_option("file", file, "Matrix file")->required();
  auto* bo = app.add_subcommand("bound", "Uniform bound, member by member");
  bo->add_option("file", file, "Matrix file")->required();
  auto* di = app.add_subcommand("distribute", "Torsion points on each conjugate family member");
  di->add_option("file", file, "Matrix file")->required();
  auto* ve = app.add_subcommand("verify-example", "Check a built-in reference map against stored tables");
  ve->add_option("name", example, "s1 or s2")->required()->check(CLI::IsMember({"s1", "s2"}));
  auto* orc = app.add_subcommand("oracle", "Brute-force scan of all pairs up to a joint order");
  orc->add_option("file", file, "Matrix file")->required();
  orc->add_option("--max-order", max_order, "Largest joint order scanned")->required()->check(CLI::PositiveNumber);
  auto* re = app.add_subcommand("reduce", "Rewrite the entries over their smallest cyclotomic field");
  re->add_option("file", file, "Matrix file")->required();
  auto* po = app.add_subcommand("polytope", "Toric Bezout bound of two graph curves");
  po->add_option("file1", file, "Matrix file")->required();
  po->add_option("file2", file2, "Matrix file")->required();

  std::vector<std::string> argv_store{"cyclotorsion"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitFinite : kExitError;
  }

  try {
    if (en->parsed()) return cmd_enumerate(file, o, out);
    if (bo->parsed()) return cmd_bound(file, o, out);
    if (di->parsed()) return cmd_distribute(file, o, out);
    if (ve->parsed()) return cmd_verify(example, o, out, err);
    if (orc->parsed()) return cmd_oracle(file, max_order, o, out);
    if (re->parsed()) return cmd_reduce(file, o, out);
    if (po->parsed()) return cmd_polytope(file, file2, o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace cyclotorsion::cli
