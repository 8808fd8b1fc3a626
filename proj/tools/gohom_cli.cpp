// Command-line front end: build spaces from JSON specs, decide geodesic-orbit
// properties, scan metric grids to CSV, compute principal isotropy, and
// validate the bundled catalog.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gohom/catalog.hpp"
#include "gohom/geodesic.hpp"
#include "gohom/isotropy.hpp"

using json = nlohmann::ordered_json;
using namespace gohom;

namespace {

json read_spec(const std::string& arg) {
  // Inline JSON starts with '{'; anything else is a file path.
  if (!arg.empty() && arg.front() == '{') return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw Error("cannot open space spec: " + arg);
  return json::parse(in);
}

Embedding make_embedding(AlgebraPtr k, const json& g, const json& emb) {
  if (g.is_object() && g.contains("from_rep"))
    return embedding_from_rep(
        build_rep_tree(k, g.at("from_rep").get<std::string>()));
  AlgebraPtr target = build_classical(g.at("family").get<std::string>(),
                                      g.at("n").get<int>());
  std::string how = emb.is_null() ? "defining-block" : emb.get<std::string>();
  if (how == "defining-block")
    return target->name() == k->name() ? identity_embedding(k)
                                       : block_embedding(k, target);
  Embedding e = embedding_from_rep(build_rep_tree(k, how));
  if (e.target->name() != target->name())
    throw DimMismatch("embedding target " + e.target->name() +
                      " does not match declared " + target->name());
  return e;
}

SpacePtr space_from_json(const json& spec) {
  AlgebraPtr k = build_classical(spec.at("k").at("family").get<std::string>(),
                                 spec.at("k").at("n").get<int>());
  Embedding e1 = make_embedding(k, spec.at("g1"),
                                spec.value("embedding1", json()));
  Embedding e2 = spec.value("same_group", false)
                     ? e1
                     : make_embedding(k, spec.at("g2"),
                                      spec.value("embedding2", json()));
  return build_pair_space(k, e1.target, e1, e2.target, e2);
}

MetricSpec metric_from_flags(double x0, double x, double y, double a, double b,
                             double c, bool coupled) {
  return coupled ? MetricSpec::coupled(a, b, c, x0)
                 : MetricSpec::diagonal(x, y, x0);
}

json vector_to_json(const VectorXd& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  out << text;
}

// "x=0.25:3.0:0.25,y=0.25:3.0:0.25" or "a=...,b=...,c=-0.4:0.4:0.2".
GridSpec parse_grid(const std::string& s, double x0) {
  GridSpec grid;
  grid.x0 = x0;
  bool saw_first = false, saw_second = false;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw Error("bad grid component: " + part);
    std::string key = part.substr(0, eq);
    double lo, hi, step;
    char c1, c2;
    std::stringstream vs(part.substr(eq + 1));
    if (!(vs >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':')
      throw Error("bad grid range: " + part);
    if (key == "x" || key == "a") {
      grid.lo = lo; grid.hi = hi; grid.step = step;
      saw_first = true;
      if (key == "a") grid.kind = MetricSpec::Kind::coupled;
    } else if (key == "y" || key == "b") {
      grid.lo2 = lo; grid.hi2 = hi; grid.step2 = step;
      saw_second = true;
      if (key == "b") grid.kind = MetricSpec::Kind::coupled;
    } else if (key == "c") {
      for (double t = lo; t <= hi + 1e-12; t += step) grid.c_values.push_back(t);
      grid.kind = MetricSpec::Kind::coupled;
    } else {
      throw Error("unknown grid axis: " + key);
    }
  }
  if (!saw_first) throw Error("grid needs an x= or a= range");
  if (!saw_second) grid.lo2 = std::numeric_limits<double>::quiet_NaN();
  return grid;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

json report_json(const ReductiveSpace& space, const MetricSpec& spec,
                 const GOReport& rep, bool with_witnesses) {
  json j;
  j["x0"] = spec.x0;
  if (spec.kind == MetricSpec::Kind::diagonal) {
    j["x"] = spec.x;
    j["y"] = spec.y;
  } else {
    j["a"] = spec.a;
    j["b"] = spec.b;
    j["c"] = spec.c;
  }
  j["c1"] = space.c1();
  j["c2"] = space.c2();
  j["ratio_residual"] = rep.ratio_residual;
  j["max_residual"] = rep.max_residual;
  j["decision"] = rep.go ? "GO" : "NOT_GO";
  j["seed"] = rep.seed;
  j["samples"] = rep.samples;
  j["tol"] = rep.tol;
  j["worst_X"] = vector_to_json(rep.worst_X);
  if (with_witnesses) {
    json w = json::array();
    for (const auto& z : rep.witnesses) w.push_back(vector_to_json(z));
    j["witnesses"] = w;
  }
  return j;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "x0,x,y,a,b,c,c1,c2,ratio_residual,max_residual,decision,seed,samples\n";
  for (const auto& r : rows) {
    os << format_double(r.spec.x0) << ',';
    if (r.spec.kind == MetricSpec::Kind::diagonal)
      os << format_double(r.spec.x) << ',' << format_double(r.spec.y) << ",,,,";
    else
      os << ",," << format_double(r.spec.a) << ',' << format_double(r.spec.b)
         << ',' << format_double(r.spec.c) << ',';
    os << format_double(r.c1) << ',' << format_double(r.c2) << ','
       << format_double(r.ratio_residual) << ','
       << format_double(r.max_residual) << ','
       << (r.go ? "GO" : "NOT_GO") << ',' << r.seed << ',' << r.samples
       << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic-orbit analysis of (G1 x G2)/diag K spaces"};
  app.require_subcommand(1);

  std::string space_arg, grid_arg, out_path = "-", format = "json";
  std::string algebra_arg, rep_tree, data_path =
      std::string(GOHOM_DATA_DIR) + "/pair_cases.txt";
  double x0 = 1.0, x = 1.0, y = 1.0, a = 1.0, b = 1.0, c = 0.0;
  bool coupled = false, do_assert = false, with_witnesses = false;
  int samples = 200, trials = 20;
  std::uint64_t seed = 42;
  double tol = 1e-8;

  auto add_space = [&](CLI::App* cmd) {
    cmd->add_option("--space", space_arg, "space spec: JSON file or inline JSON")
        ->required();
  };
  auto add_metric = [&](CLI::App* cmd) {
    cmd->add_option("--x0", x0, "metric value on m0");
    cmd->add_option("--x", x, "metric value on m1");
    cmd->add_option("--y", y, "metric value on m2");
    cmd->add_option("--a", a, "coupled diagonal value on m1")->excludes("--x");
    cmd->add_option("--b", b, "coupled diagonal value on m2");
    cmd->add_option("--c", c, "coupling between m1 and m2");
    cmd->add_flag("--coupled", coupled, "use the coupled [[a,c],[c,b]] family");
  };
  auto add_run = [&](CLI::App* cmd) {
    cmd->add_option("--samples", samples, "random unit samples in m");
    cmd->add_option("--seed", seed, "RNG seed (recorded in output)");
    cmd->add_option("--tol", tol, "decision tolerance");
    cmd->add_option("--out", out_path, "output path ('-' = stdout)");
  };

  CLI::App* cmd_build = app.add_subcommand("build-space", "space summary");
  add_space(cmd_build);
  cmd_build->add_option("--out", out_path, "output path ('-' = stdout)");

  CLI::App* cmd_check = app.add_subcommand("check-go", "decide GO for a metric");
  add_space(cmd_check);
  add_metric(cmd_check);
  add_run(cmd_check);
  cmd_check->add_flag("--assert", do_assert, "exit 1 when NOT_GO");
  cmd_check->add_flag("--witnesses", with_witnesses, "include all witnesses");

  CLI::App* cmd_scan = app.add_subcommand("scan", "grid scan to CSV");
  add_space(cmd_scan);
  cmd_scan->add_option("--grid", grid_arg,
                       "e.g. \"x=0.25:3:0.25,y=0.25:3:0.25\" or "
                       "\"a=0.5:2:0.25,b=0.5:2:0.25,c=-0.4:0.4:0.2\"")
      ->required();
  cmd_scan->add_option("--x0", x0, "metric value on m0");
  add_run(cmd_scan);
  cmd_scan->add_option("--format", format, "csv|json");
  cmd_scan->add_flag("--assert", do_assert, "exit 1 when any point is NOT_GO");

  CLI::App* cmd_iso = app.add_subcommand("isotropy", "principal isotropy");
  cmd_iso->add_option("--algebra", algebra_arg, "e.g. so:5")->required();
  cmd_iso->add_option("--rep", rep_tree, "rep tree, e.g. alt2(defining)")
      ->required();
  cmd_iso->add_option("--trials", trials, "random trials");
  cmd_iso->add_option("--seed", seed, "RNG seed");
  cmd_iso->add_option("--out", out_path, "output path ('-' = stdout)");

  CLI::App* cmd_cat = app.add_subcommand("validate-catalog", "check data file");
  cmd_cat->add_option("--data", data_path, "catalog data file");
  cmd_cat->add_option("--out", out_path, "output path ('-' = stdout)");
  cmd_cat->add_flag("--assert", do_assert, "exit 1 on any failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_check &&
        (cmd_check->count("--a") || cmd_check->count("--b") ||
         cmd_check->count("--c")))
      coupled = true;
    if (*cmd_build) {
      SpacePtr s = space_from_json(read_spec(space_arg));
      json j;
      j["k"] = s->k()->name();
      j["g1"] = s->g1()->name();
      j["g2"] = s->g2()->name();
      j["same_group"] = s->same_group();
      j["c1"] = s->c1();
      j["c2"] = s->c2();
      j["dims"] = {{"ambient", s->ambient_dim()}, {"h", s->k()->dim()},
                   {"m0", s->m0_dim()}, {"m1", s->m1_dim()},
                   {"m2", s->m2_dim()}};
      j["gram_residual"] = s->gram_residual();
      j["ad_invariance_residual"] = s->ad_invariance_residual();
      write_out(out_path, j.dump(2) + "\n");
    } else if (*cmd_check) {
      SpacePtr s = space_from_json(read_spec(space_arg));
      MetricSpec spec = metric_from_flags(x0, x, y, a, b, c, coupled);
      GOReport rep = go_decision(*s, spec, samples, seed, tol);
      write_out(out_path,
                report_json(*s, spec, rep, with_witnesses).dump(2) + "\n");
      if (do_assert && !rep.go) return 1;
    } else if (*cmd_scan) {
      SpacePtr s = space_from_json(read_spec(space_arg));
      GridSpec grid = parse_grid(grid_arg, x0);
      auto rows = scan_metrics(*s, grid, samples, seed, tol);
      if (format == "csv") {
        write_out(out_path, scan_csv(rows));
      } else {
        json arr = json::array();
        for (const auto& r : rows) {
          GOReport rep;
          rep.ratio_residual = r.ratio_residual;
          rep.max_residual = r.max_residual;
          rep.go = r.go;
          rep.seed = r.seed;
          rep.samples = r.samples;
          rep.tol = tol;
          arr.push_back(report_json(*s, r.spec, rep, false));
        }
        write_out(out_path, arr.dump(2) + "\n");
      }
      if (do_assert)
        for (const auto& r : rows)
          if (!r.go) return 1;
    } else if (*cmd_iso) {
      auto colon = algebra_arg.find(':');
      if (colon == std::string::npos)
        throw Error("--algebra must look like so:5");
      auto alg = build_classical(algebra_arg.substr(0, colon),
                                 std::stoi(algebra_arg.substr(colon + 1)));
      StabilizerReport r = generic_stabilizer(build_rep_tree(alg, rep_tree),
                                              trials, seed);
      json j;
      j["rep"] = r.rep_label;
      j["algebra"] = alg->name();
      j["trials"] = r.trials;
      j["attained"] = r.attained;
      j["dim"] = r.dim;
      j["structure"] = stabilizer_class_name(r.cls);
      j["abelian_residual"] = r.abelian_residual;
      j["seed"] = seed;
      write_out(out_path, j.dump(2) + "\n");
    } else if (*cmd_cat) {
      Catalog cat(data_path);
      json arr = json::array();
      bool all_pass = true;
      for (const auto& e : cat.entries()) {
        ValidationReport r = validate_entry(e);
        all_pass = all_pass && r.pass;
        json j;
        j["case"] = r.case_id;
        j["pass"] = r.pass;
        j["message"] = r.message;
        j["classification"] = classify_expected(e);
        if (e.constructible) {
          j["c1"] = r.c1;
          j["c2"] = r.c2;
        }
        arr.push_back(j);
      }
      json top;
      top["entries"] = arr;
      top["total"] = cat.entries().size();
      top["all_pass"] = all_pass;
      write_out(out_path, top.dump(2) + "\n");
      if (do_assert && !all_pass) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
