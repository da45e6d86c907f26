#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fsing/job.hpp"

namespace {

struct CliOptions {
  fsing::JobSpec spec;
  std::string fFile;
  std::string windowText;
};

void addCommonFlags(CLI::App* cmd, CliOptions& opt, bool needsPoly) {
  cmd->add_option("--p", opt.spec.p, "prime characteristic")
      ->default_val(2);
  cmd->add_option("--n", opt.spec.n, "largest variable index (ring is F_p[x0..xn])")
      ->default_val(1);
  if (needsPoly) {
    cmd->add_option("--f", opt.spec.f, "homogeneous polynomial in x0..xn");
    cmd->add_option("--f-file", opt.fFile, "read the polynomial from a file");
  }
  cmd->add_option("--e", opt.spec.e, "Frobenius level")->default_val(1);
  cmd->add_option("--e-max", opt.spec.eMax, "largest Frobenius level")
      ->default_val(4);
  cmd->add_option("--window", opt.windowText, "degree window LO..HI");
  cmd->add_option("--max-dim", opt.spec.maxDim,
                  "largest ambient dimension for linear algebra")
      ->envname("FSING_MAX_DIM");
  cmd->add_flag("--json", opt.spec.json, "emit the structured report");
}

int finish(CliOptions& opt, const std::string& command) {
  opt.spec.command = command;
  if (!opt.fFile.empty()) {
    std::ifstream in(opt.fFile);
    if (!in) {
      std::cerr << "error: cannot open " << opt.fFile << "\n";
      return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();
    opt.spec.f = text.str();
  }
  if (!opt.windowText.empty()) {
    auto sep = opt.windowText.find("..");
    try {
      if (sep == std::string::npos) throw std::invalid_argument("window");
      std::int64_t lo = std::stoll(opt.windowText.substr(0, sep));
      std::int64_t hi = std::stoll(opt.windowText.substr(sep + 2));
      if (lo > hi) throw std::invalid_argument("window");
      opt.spec.window = {lo, hi};
    } catch (const std::exception&) {
      std::cerr << "error: --window expects LO..HI with LO <= HI\n";
      return 2;
    }
  }
  fsing::JobOutcome outcome = fsing::runJob(opt.spec);
  if (opt.spec.json)
    std::cout << outcome.report.dump(2) << "\n";
  else
    std::cout << outcome.text;
  return outcome.exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fsing: exact invariants of hypersurface singularities in "
      "characteristic p (test ideals, M_e, delta, Frobenius actions on "
      "graded local cohomology)"};
  app.require_subcommand(1);

  struct Entry {
    const char* name;
    const char* help;
    bool needsPoly;
  };
  const Entry entries[] = {
      {"test-ideal", "generators of tau(f^(1-1/p^e))", true},
      {"fedder", "F-purity of R/fR at the maximal ideal", true},
      {"me", "M_e and witnesses for e = e0..eMax", true},
      {"delta", "the stable value of M_e - (n+1)p^e with certification", true},
      {"isolated", "isolated non-F-pure point verdict", true},
      {"injectivity", "degree bound for injectivity of Frobenius", true},
      {"hn-dims", "dimensions of graded pieces of H^n_m(R/fR)", true},
      {"kernel-dims", "Frobenius kernel dimensions (two methods)", true},
      {"witness", "a nonzero class killed by the Frobenius action", true},
      {"sigma", "stabilized test ideal estimate", true},
      {"repro-example-1", "reference problem: x0^2*x1^2+x1^2*x2^2+x2^2*x0^2, p>2",
       false},
      {"repro-example-2", "reference problem: six variables over F_2", false},
  };

  std::vector<std::unique_ptr<CliOptions>> options;
  CliOptions* selected = nullptr;
  std::string selectedName;
  for (const auto& entry : entries) {
    auto opt = std::make_unique<CliOptions>();
    CLI::App* cmd = app.add_subcommand(entry.name, entry.help);
    addCommonFlags(cmd, *opt, entry.needsPoly);
    CliOptions* raw = opt.get();
    std::string name = entry.name;
    cmd->callback([raw, name, &selected, &selectedName] {
      selected = raw;
      selectedName = name;
    });
    options.push_back(std::move(opt));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!selected) return 2;
  return finish(*selected, selectedName);
}
