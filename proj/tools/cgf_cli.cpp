// cgf: command-line front end.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgf/catalog.hpp"
#include "cgf/covering.hpp"
#include "cgf/diagram.hpp"
#include "cgf/io.hpp"
#include "cgf/perturbation.hpp"
#include "cgf/verify.hpp"

using namespace cgf;
using ojson = nlohmann::ordered_json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Side parse_side(const std::string& s) {
  if (s == "minus") return Side::minus;
  if (s == "plus") return Side::plus;
  if (s == "at") return Side::at;
  throw InputError("side must be minus, at or plus");
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for piecewise linear cut-generating functions"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "Run kernels single-threaded");
  int code = 0;
  auto exec = [&] { return serial ? Exec::serial : Exec::parallel; };

  // eval / limit
  std::string func, xs, side = "at";
  auto* eval = app.add_subcommand("eval", "Value or one-sided limit of a function");
  eval->add_option("function", func, "Catalog name or function file")->required();
  eval->add_option("x", xs, "Point")->required();
  eval->add_option("--side", side, "minus, at or plus");
  eval->callback([&] {
    const Side sd = parse_side(side);
    const QNum x = parse_qnum(xs);
    if (func == "kzh_lifted") {
      if (sd != Side::at) throw InputError("kzh_lifted supports values only");
      std::cout << format_qnum(kzh_lifted().eval(x)) << "\n";
      return;
    }
    std::cout << format_qnum(load_function(func).limit(x, sd)) << "\n";
  });

  auto* limit = app.add_subcommand("limit", "One-sided limit of a function");
  limit->add_option("function", func, "Catalog name or function file")->required();
  limit->add_option("x", xs, "Point")->required();
  limit->add_option("--side", side, "minus or plus")->required();
  limit->callback([&] {
    std::cout << format_qnum(load_function(func).limit(parse_qnum(xs), parse_side(side))) << "\n";
  });

  // minimality
  bool json = false;
  std::string fs;
  auto* mini = app.add_subcommand("minimality", "Minimality test");
  mini->add_option("function", func)->required();
  mini->add_option("--f", fs, "Override f");
  mini->add_flag("--json", json);
  mini->callback([&] {
    const PwlFunction pi = load_function(func);
    const QNum f = fs.empty() ? pi.f() : parse_qnum(fs);
    const auto r = minimality_test(pi, f, exec());
    if (json) {
      ojson j{{"schema_version", 1}, {"function", pi.name()}, {"minimal", r.minimal},
              {"condition", r.condition}, {"detail", r.detail}};
      std::cout << j.dump(2) << "\n";
    } else if (r.minimal) {
      std::cout << "minimal\n";
    } else {
      std::cout << "not minimal: " << r.condition << " (" << r.detail << ")\n";
    }
    code = r.minimal ? 0 : 1;
  });

  // additive-faces
  std::string format = "text", output;
  int dim = -1;
  auto* add = app.add_subcommand("additive-faces", "Additive and limit-additive faces of Delta P");
  add->add_option("function", func)->required();
  add->add_option("--format", format, "text, json or svg")->check(CLI::IsMember({"text", "json", "svg"}));
  add->add_option("--dim", dim, "Only faces of this dimension");
  add->add_option("-o,--output", output);
  add->callback([&] {
    const PwlFunction pi = load_function(func);
    const auto report = additive_face_report(pi, exec());
    if (format == "json") {
      write_out(output, additivity_json(report, pi.special_intervals()) + "\n");
    } else if (format == "svg") {
      write_out(output, render_svg(pi, report));
    } else {
      std::ostringstream os;
      for (auto cls : {FaceClass::additive, FaceClass::limit_additive}) {
        const auto faces = report.faces_of(cls, dim);
        os << to_string(cls) << ": " << faces.size() << "\n";
        for (auto i : faces) os << "  " << report.complex.label(report.complex[i]) << "\n";
      }
      write_out(output, os.str());
    }
  });

  // covering
  auto* cov = app.add_subcommand("covering", "Covered components and uncovered intervals");
  cov->add_option("function", func)->required();
  cov->add_flag("--json", json);
  cov->callback([&] {
    const PwlFunction pi = load_function(func);
    const auto report = additive_face_report(pi, exec());
    const auto c = covering(report);
    if (json) {
      std::cout << covering_json(c, pi.complex()) << "\n";
      return;
    }
    std::cout << "components: " << c.components.size() << "\n";
    for (std::size_t i = 0; i < c.components.size(); ++i) {
      std::cout << "  " << i << ":";
      for (auto p : c.components[i].pieces) {
        std::cout << " (" << format_qnum(pi.breakpoint(p)) << ", " << format_qnum(pi.breakpoint(p + 1)) << ")";
      }
      std::cout << "\n";
    }
    std::cout << "uncovered: " << c.uncovered.size() << "\n";
    for (const auto& u : c.uncovered) std::cout << "  (" << format_qnum(u.lo) << ", " << format_qnum(u.hi) << ")\n";
  });

  // perturbation-rank
  bool no_symmetry = false, dump = false;
  auto* rk = app.add_subcommand("perturbation-rank", "Rank of the finite perturbation system");
  rk->add_option("function", func)->required();
  rk->add_flag("--no-symmetry", no_symmetry);
  rk->add_flag("--dump", dump, "Print the system");
  rk->add_flag("--json", json);
  rk->callback([&] {
    const PwlFunction pi = load_function(func);
    const auto report = additive_face_report(pi, exec());
    const auto c = covering(report);
    const PerturbationModel model(pi, c, !no_symmetry);
    const auto sys = build_system(report, model, zero_slack_selection(report, c, false), false);
    const auto e = eliminate(sys);
    if (dump) std::cout << sys.dump();
    if (json) {
      ojson j{{"schema_version", 1}, {"function", pi.name()}, {"variables", sys.cols()},
              {"equations", sys.rows.size()}, {"rank", e.rank}, {"nullity", e.nullity},
              {"uncovered", c.uncovered.size()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "variables: " << sys.cols() << "\nequations: " << sys.rows.size() << "\nrank: " << e.rank
                << "\nnullity: " << e.nullity << "\n";
      if (!c.uncovered.empty()) std::cout << "uncovered intervals: " << c.uncovered.size() << "\n";
    }
  });

  // epsilon
  std::string kind, pert;
  auto* eps = app.add_subcommand("epsilon", "Epsilon of an effective perturbation");
  eps->add_option("kind", kind, "lipschitz or scaling")->required()->check(CLI::IsMember({"lipschitz", "scaling"}));
  eps->add_option("function", func)->required();
  eps->add_option("perturbation", pert, "Function file of the perturbation")->required();
  eps->add_flag("--json", json);
  eps->callback([&] {
    const PwlFunction pi = load_function(func);
    const PwlFunction bar = load_function(pert);
    ojson j{{"schema_version", 1}, {"kind", kind}};
    QNum e;
    if (kind == "lipschitz") {
      const auto c = lipschitz_epsilon(pi, bar, exec());
      e = c.epsilon;
      j["m"] = format_qnum(c.m);
      j["M"] = format_qnum(c.M);
      j["C"] = format_qnum(c.C);
      j["degenerate"] = c.degenerate;
      j["in_perturbation_space"] = c.in_perturbation_space;
    } else {
      e = scaling_epsilon(pi, bar, exec());
    }
    j["epsilon"] = format_qnum(e);
    const bool ok = e.sign() > 0 && verify_effective(pi, bar, e, exec());
    j["effective"] = ok;
    if (json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "epsilon: " << format_qnum(e) << "\neffective: " << (ok ? "yes" : "no") << "\n";
    }
    code = ok ? 0 : 1;
  });

  // verify
  std::string suite;
  auto* ver = app.add_subcommand("verify", "Run a claim suite");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember({"psi", "kzh-slacks", "kzh-rank", "lifted", "all"}));
  ver->add_flag("--json", json);
  ver->callback([&] {
    std::vector<ClaimReport> reports;
    if (suite == "psi") reports.push_back(verify_psi_separation(psi_function(), psi_prime_function(), exec()));
    if (suite == "kzh-slacks") reports.push_back(verify_kzh_claim_slacks(kzh_function(), exec()));
    if (suite == "kzh-rank") reports.push_back(verify_kzh_perturbation_rank(kzh_function(), exec()));
    if (suite == "lifted") reports.push_back(verify_lifted(kzh_function(), {}, exec()));
    if (suite == "all") reports = verify_all(exec());
    bool ok = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      ok = ok && reports[i].verified();
      std::cout << (json ? report_json(reports[i]) + "\n" : format_report(reports[i]));
    }
    code = ok ? 0 : 1;
  });

  // catalog
  auto* cat = app.add_subcommand("catalog", "Built-in functions");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list");
  list->callback([] {
    for (const auto& n : catalog_names()) std::cout << n << "\n";
  });
  std::string name;
  auto* exp = cat->add_subcommand("export");
  exp->add_option("name", name)->required()->check(CLI::IsMember(catalog_names()));
  exp->add_option("-o,--output", output);
  exp->callback([&] {
    std::string text = format_function(load_function(name));
    if (name == "kzh_lifted") {
      text = "# piecewise linear part; the lift adds +-s on coset classes of the special intervals\n" + text;
    }
    write_out(output, text);
  });

  // diagram
  std::string sidecar;
  bool nf = false, no_cones = false, no_additive = false;
  auto* dia = app.add_subcommand("diagram", "SVG drawing of Delta P");
  dia->add_option("function", func)->required();
  dia->add_option("-o,--output", output, "SVG path (default stdout)");
  dia->add_option("--json", sidecar, "Path of the JSON sidecar");
  dia->add_flag("--nf", nf, "Shade faces by n_F");
  dia->add_flag("--no-cones", no_cones);
  dia->add_flag("--no-additive", no_additive);
  dia->callback([&] {
    const PwlFunction pi = load_function(func);
    const auto report = additive_face_report(pi, exec());
    DiagramOptions opts;
    opts.color_by_nf = nf;
    opts.show_limit_cones = !no_cones;
    opts.show_additive = !no_additive;
    if (func == "kzh_lifted") opts.note = "piecewise linear part of the lifted function";
    write_out(output, render_svg(pi, report, opts));
    if (!sidecar.empty()) write_out(sidecar, render_json(pi, report) + "\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
