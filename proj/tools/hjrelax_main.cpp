#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "hjrelax/corpus.hpp"
#include "hjrelax/godunov.hpp"
#include "hjrelax/guerand.hpp"
#include "hjrelax/io.hpp"
#include "hjrelax/relaxation.hpp"
#include "hjrelax/solver.hpp"

namespace {

using namespace hjrelax;

struct Options {
  std::string spec_path;
  std::string out_dir = ".";
  int cases = 200;
  std::uint64_t seed = 1;
  bool strict_semicoercive = false;
  std::string probe = "0";
};

ProblemSpec load_spec(const Options& opt) {
  if (opt.spec_path.empty()) throw ValidationError("this command needs --spec PATH");
  return parse_spec(read_file(opt.spec_path));
}

const PLFunction& need_hamiltonian(const ProblemSpec& spec) {
  if (!spec.hamiltonian) throw ValidationError("spec has no hamiltonian");
  return *spec.hamiltonian;
}

PLFunction boundary_function(const ProblemSpec& spec) {
  if (!spec.boundary) throw ValidationError("spec has no boundary block");
  const PLFunction& H = need_hamiltonian(spec);
  if (const auto* dyn = std::get_if<DynamicBC>(&*spec.boundary)) return dyn->f0;
  if (const auto* neu = std::get_if<NeumannBC>(&*spec.boundary)) return neumann_relaxed(H, neu->h);
  return dirichlet_relaxed(H, std::get<DirichletBC>(*spec.boundary).g);
}

std::string out_path(const Options& opt, const std::string& name) {
  std::filesystem::create_directories(opt.out_dir);
  return (std::filesystem::path(opt.out_dir) / name).string();
}

int run_command(const std::string& cmd, const Options& opt) {
  if (cmd == "verify-corpus") {
    CorpusReport report = run_corpus(opt.seed, opt.cases);
    write_file_atomic(out_path(opt, "report.json"), corpus_report_json(report));
    for (const auto& [name, passes] : report.pass_counts)
      std::cout << name << ": " << passes << "/" << report.cases << "\n";
    std::cout << "wall_seconds: " << report.wall_seconds << "\n";
    if (!report.ok()) {
      std::cerr << report.failures.size() << " identity failure(s); replay data in report.json\n";
      for (const auto& f : report.failures)
        std::cerr << "  case " << f.index << " [" << f.identity << "] " << f.detail << "\n    H=" << f.h_repr
                  << "\n    F0=" << f.f0_repr << "\n";
      return 2;
    }
    return 0;
  }

  ProblemSpec spec = load_spec(opt);
  const PLFunction& H = need_hamiltonian(spec);
  const bool fallback = !opt.strict_semicoercive;

  if (cmd == "relax") {
    PLFunction F0 = boundary_function(spec);
    write_file_atomic(out_path(opt, "function.csv"), function_csv(relax(H, F0)));
    return 0;
  }
  if (cmd == "guerand") {
    PLFunction F0 = boundary_function(spec);
    write_file_atomic(out_path(opt, "function.csv"), function_csv(guerand_operator(H, F0, fallback)));
    return 0;
  }
  if (cmd == "godunov-apply") {
    PLFunction F0 = boundary_function(spec);
    Rational p = Rational::parse(opt.probe);
    auto res = apply_godunov_witnesses(H, F0, p, fallback);
    std::cout << res.value << " (witnesses q in [" << res.witness_lo << ", " << res.witness_hi << "])\n";
    return 0;
  }
  if (cmd == "charpoints") {
    PLFunction F0 = boundary_function(spec);
    write_file_atomic(out_path(opt, "charpoints.csv"), charpoints_csv(characteristic_points(H, relax(H, F0))));
    return 0;
  }
  if (cmd == "limiters") {
    PLFunction F0 = boundary_function(spec);
    write_file_atomic(out_path(opt, "limiters.csv"), limiters_csv(limiter_points(H, F0, fallback)));
    return 0;
  }
  if (cmd == "germ") {
    PLFunction F0 = boundary_function(spec);
    write_file_atomic(out_path(opt, "germ.csv"), germ_csv(germ(H, F0)));
    return 0;
  }
  if (cmd == "neumann") {
    if (!spec.boundary || !std::holds_alternative<NeumannBC>(*spec.boundary))
      throw ValidationError("neumann command needs a neumann boundary block");
    Rational h = std::get<NeumannBC>(*spec.boundary).h;
    write_file_atomic(out_path(opt, "function.csv"), function_csv(neumann_relaxed(H, h)));
    return 0;
  }
  if (cmd == "dirichlet") {
    if (!spec.boundary || !std::holds_alternative<DirichletBC>(*spec.boundary))
      throw ValidationError("dirichlet command needs a dirichlet boundary block");
    Rational g = std::get<DirichletBC>(*spec.boundary).g;
    write_file_atomic(out_path(opt, "function.csv"), function_csv(dirichlet_relaxed(H, g)));
    return 0;
  }
  if (cmd == "bln") {
    if (!spec.boundary || !std::holds_alternative<NeumannBC>(*spec.boundary))
      throw ValidationError("bln command needs a neumann boundary block (the level h)");
    Rational h = std::get<NeumannBC>(*spec.boundary).h;
    Rational p = Rational::parse(opt.probe);
    bool ok = bln_check(H, h, p);
    std::cout << (ok ? "true" : "false") << "\n";
    return 0;
  }
  if (cmd == "solve") {
    if (!spec.boundary) throw ValidationError("solve needs a boundary block");
    if (!spec.solver) throw ValidationError("solve needs a solver block");
    auto u0 = spec.solver->u0.materialize(spec.solver->cfg);
    GridSolution sol = solve(H, *spec.boundary, std::move(u0), spec.solver->cfg);
    write_file_atomic(out_path(opt, "solution.csv"), solution_csv(sol));
    return 0;
  }
  if (cmd == "refine") {
    if (!spec.boundary || !std::holds_alternative<DynamicBC>(*spec.boundary))
      throw ValidationError("refine needs a dynamic boundary block");
    if (!spec.solver) throw ValidationError("refine needs a solver block");
    PLFunction F0 = std::get<DynamicBC>(*spec.boundary).f0;
    PLFunction R = relax(H, F0);
    const auto& block = *spec.solver;
    std::vector<Rational> ladder = {block.cfg.dx, block.cfg.dx / Rational(2), block.cfg.dx / Rational(4)};
    auto u0fn = [&block](double x) {
      switch (block.u0.kind) {
        case U0Spec::Kind::Linear:
          return block.u0.gradient.to_double() * x;
        case U0Spec::Kind::Constant:
          return block.u0.value.to_double();
        default:
          throw ValidationError("refine needs a linear or constant u0");
      }
    };
    auto diffs = refinement_study(H, F0, R, u0fn, block.cfg, ladder);
    write_file_atomic(out_path(opt, "refine.csv"), refine_csv(ladder, diffs));
    return 0;
  }
  if (cmd == "plot") {
    const PLFunction* F0 = nullptr;
    PLFunction f0_store = PLFunction::constant(Rational(0));
    PLFunction relaxed_store = PLFunction::constant(Rational(0));
    const PLFunction* relaxed = nullptr;
    if (spec.boundary) {
      f0_store = boundary_function(spec);
      F0 = &f0_store;
      relaxed_store = relax(H, f0_store);
      relaxed = &relaxed_store;
    }
    write_file_atomic(out_path(opt, "plot.svg"), plot_svg(H, F0, relaxed));
    return 0;
  }
  throw ValidationError("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact relaxed boundary conditions for coercive Hamilton-Jacobi equations"};
  Options opt;
  std::string command;
  app.add_option("command", command,
                 "relax | guerand | godunov-apply | charpoints | limiters | germ | neumann | "
                 "dirichlet | bln | solve | refine | verify-corpus | plot")
      ->required();
  app.add_option("--spec", opt.spec_path, "problem JSON file");
  app.add_option("--out", opt.out_dir, "output directory");
  app.add_option("--cases", opt.cases, "number of corpus cases");
  app.add_option("--seed", opt.seed, "corpus seed");
  app.add_option("--probe", opt.probe, "probe gradient p (rational)");
  app.add_flag("--strict-semicoercive", opt.strict_semicoercive,
               "error out instead of upgrading F0 to max(F0, H-)");

  CLI11_PARSE(app, argc, argv);
  try {
    return run_command(command, opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidHamiltonian& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidBoundary& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const NotSemiCoercive& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const CflViolation& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const DomainTooShort& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidInputs& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const InternalMismatch& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return 2;
  } catch (const RootNotFound& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
