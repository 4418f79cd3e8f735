#include "prolate/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "prolate/darboux/spaces.hpp"
#include "prolate/exactalg/text.hpp"
#include "prolate/numverify/commutator.hpp"
#include "prolate/numverify/psi.hpp"

namespace prolate::cli {

namespace fs = std::filesystem;
using exactalg::to_text;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::FactorizationFails:
    case ErrorCode::DualFactorizationFails:
    case ErrorCode::EvennessViolation:
    case ErrorCode::NotInSubalgebra:
    case ErrorCode::BoundViolated:
      return 2;
    case ErrorCode::NoNonconstantSolution:
    case ErrorCode::SearchBudgetExceeded:
      return 3;
    case ErrorCode::NotSymmetricGenerator:
      return 5;
    default:
      return 1;
  }
}

namespace {

void write(const JobConfig& job, const std::string& name, const std::string& text) {
  if (job.out_dir.empty()) return;
  fs::create_directories(job.out_dir);
  std::ofstream out(fs::path(job.out_dir) / name);
  if (!out) throw Error(ErrorCode::Config, "cannot write " + (fs::path(job.out_dir) / name).string());
  out << text;
}

std::string certificate_text(const JobConfig& job, const darboux::Certificate& c,
                             const std::optional<darboux::DualPresentation>& dual, const std::string& dual_error) {
  std::ostringstream s;
  s << "certificate:\n";
  s << "  source: \"" << job.source << "\"\n";
  s << "  family: " << job.data.family.to_string() << "\n";
  s << "  R: \"" << to_text(job.data.R) << "\"\n";
  s << "  status: " << (c.ok() ? "ok" : std::string(to_string(*c.failure))) << "\n";
  if (!c.ok()) {
    s << "  message: \"" << c.message << "\"\n";
    s << "  residual: \"" << to_text(c.residual) << "\"\n";
    return s.str();
  }
  s << "  epsilon: " << c.epsilon << "\n";
  s << "  epsilon_is_parity: " << (c.epsilon_is_parity ? "true" : "false") << "\n";
  s << "  rho1: " << c.rho1 << "\n";
  s << "  rho2: " << c.rho2 << "\n";
  s << "  bR: \"" << to_text(c.bR) << "\"\n";
  if (dual) {
    s << "  dual: ok\n";
    s << "  dual_epsilon: " << dual->epsilon << "\n";
  } else {
    s << "  dual: \"" << dual_error << "\"\n";
  }
  return s.str();
}

darboux::DarbouxData certified(const JobConfig& job) {
  darboux::DarbouxData d = job.data;
  darboux::certify(d);
  return d;
}

const commute::ContourSpec& need(const std::optional<commute::ContourSpec>& c, const char* name) {
  if (!c) throw Error(ErrorCode::Config, std::string("contours.") + name + " is required");
  return *c;
}

}  // namespace

CommandResult cmd_verify(const JobConfig& job) {
  CommandResult r;
  const darboux::Certificate c = darboux::darboux_verify(job.data);
  std::optional<darboux::DualPresentation> dual;
  std::string dual_error;
  if (c.ok()) {
    darboux::DarbouxData d = job.data;
    d.verified = true;
    try {
      dual = darboux::dual_presentation(d);
    } catch (const Error& e) {
      dual_error = e.what();
      r.exit_code = exit_code_for(e.code());
    }
  } else {
    r.exit_code = exit_code_for(*c.failure);
    r.diagnostics = std::string(to_string(*c.failure)) + ": " + c.message + "\nresidual: " + to_text(c.residual);
  }
  r.report = certificate_text(job, c, dual, dual_error);
  write(job, "certificate.yaml", r.report);
  return r;
}

CommandResult cmd_dims(const JobConfig& job) {
  CommandResult r;
  const darboux::DarbouxData d = certified(job);
  std::ostringstream s;
  s << "dims:\n";
  s << "  source: \"" << job.source << "\"\n";
  s << "  columns: [l1, l2, dim_s1, dim_s2, dim_cap, dim_sum, sum_bound, cap_bound, status]\n";
  s << "  rows:\n";
  bool all = true;
  for (int l1 = 0; l1 <= job.max_l; ++l1)
    for (int l2 = 0; l2 <= job.max_l; ++l2) {
      const darboux::DimReport rep = darboux::dim_bounds_check(d, l1, l2, false);
      all = all && rep.ok();
      s << "    - [" << l1 << ", " << l2 << ", " << rep.dim_s1 << ", " << rep.dim_s2 << ", " << rep.dim_intersection
        << ", " << rep.dim_sum << ", " << rep.sum_bound << ", "
        << (rep.intersection_bound_applies ? std::to_string(rep.intersection_bound) : std::string("-")) << ", "
        << (rep.ok() ? "pass" : "FAIL") << "]\n";
    }
  s << "  all_pass: " << (all ? "true" : "false") << "\n";
  r.report = s.str();
  if (!all) {
    r.exit_code = exit_code_for(ErrorCode::BoundViolated);
    r.diagnostics = "BoundViolated: a dimension bound failed (implementation bug signal)";
  }
  write(job, "dims.yaml", r.report);
  return r;
}

CommandResult cmd_solve(const JobConfig& job) {
  CommandResult r;
  const darboux::DarbouxData d = certified(job);
  const auto& g1 = need(job.gamma1, "gamma1");
  const auto& g2 = need(job.gamma2, "gamma2");
  commute::CommutingSolution sol;
  try {
    sol = commute::solve_commuting(d, g1, g2, job.search);
  } catch (const Error& e) {
    r.exit_code = exit_code_for(e.code());
    r.diagnostics = e.what();
    return r;
  }
  const std::string solution = commute::report(sol);
  write(job, "solution.yaml", solution);

  numverify::KernelSetup ks = job.kernel;
  ks.gamma1 = g1;
  ks.gamma2 = g2;
  const numverify::KernelMatrix km = numverify::kernel_matrix(d, ks);
  numverify::CommutatorOptions opt;
  opt.tests = job.tests;
  opt.threads = ks.threads;
  const numverify::CommutatorReport cr = numverify::commutator_report(km, sol, g1, opt);
  std::ostringstream s;
  s << solution;
  s << "kernel:\n";
  s << "  kind: " << numverify::to_string(ks.kind) << "\n";
  s << "  error_estimate: " << std::scientific << km.error_estimate << std::defaultfloat << "\n";
  s << numverify::to_text(cr);
  s << "tolerance: " << job.residual_tolerance << "\n";
  const bool pass = cr.max_residual <= job.residual_tolerance;
  s << "certified: " << (pass ? "true" : "false") << "\n";
  r.report = s.str();
  write(job, "commutator.yaml", numverify::to_text(cr));
  write(job, "kernel.csv", numverify::kernel_csv(km));
  write(job, "residuals.csv", numverify::residual_csv(cr));
  if (!pass) {
    r.exit_code = 4;
    r.diagnostics = "commutator residual above tolerance";
  }
  return r;
}

CommandResult cmd_eval(const JobConfig& job) {
  CommandResult r;
  const darboux::DarbouxData d = certified(job);
  const numverify::PsiEvaluator psi(d);
  std::ostringstream s;
  s.precision(17);
  s << "x_re,x_im,z_re,z_im,psi_re,psi_im\n";
  for (const auto& [x, z] : job.points) {
    const auto v = psi.value(x, z);
    s << x.real() << ',' << x.imag() << ',' << z.real() << ',' << z.imag() << ',' << v.real() << ',' << v.imag()
      << '\n';
  }
  r.report = s.str();
  write(job, "psi.csv", r.report);
  return r;
}

CommandResult run(const std::string& command, const std::string& config_path, const Overrides& o) {
  try {
    JobConfig job = load_config(config_path);
    apply(job, o);
    if (command == "verify") return cmd_verify(job);
    if (command == "dims") return cmd_dims(job);
    if (command == "solve") return cmd_solve(job);
    if (command == "eval") return cmd_eval(job);
    return {1, "", "unknown command '" + command + "'"};
  } catch (const Error& e) {
    return {exit_code_for(e.code()), "", e.what()};
  } catch (const std::exception& e) {
    return {1, "", e.what()};
  }
}

}  // namespace prolate::cli
