// bsent: command-line front end over the C API.
//
// Subcommands: compute, sweep, optimize, ppt, verify. Data goes to stdout
// (or --out FILE) as JSON or CSV with fixed key order and %.17g floats, so
// identical invocations produce byte-identical output. A one-line human
// summary goes to stderr. Exit codes: 0 success / verification pass,
// 1 verification fail, 2 usage or input error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <bsent.h>

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON scalar: non-finite values become strings
std::string jnum(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return fmt17(v);
}

// CSV field: bare nan/inf spellings
std::string cnum(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt17(v);
}

struct Options {
  bsent_params params{};
  bool degrees = false;
  std::string format = "json";
  std::string out_path;
  // sweep
  std::string sweep_param;
  double from = 0.0, to = 0.0;
  std::int64_t steps = 0;
  // optimize
  std::string free_list = "theta,phi0,phi1";
  // verify
  int cutoff = 40;
};

int emit(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(data.c_str(), stdout);
    return 0;
  }
  std::FILE* f = std::fopen(out_path.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "error: cannot open %s for writing\n", out_path.c_str());
    return 2;
  }
  std::fputs(data.c_str(), f);
  std::fclose(f);
  return 0;
}

int fail_status(bsent_status st) {
  std::fprintf(stderr, "error: %s\n", bsent_status_message(st));
  return 2;
}

// Attach the shared state flags to a subcommand; returns the angle options
// so --degrees can convert exactly the values the user supplied.
std::vector<CLI::Option*> add_state_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--ra", o.params.r_a, "squeeze magnitude, mode a (0 to 3)")
      ->check(CLI::Range(0.0, 3.0));
  cmd->add_option("--rb", o.params.r_b, "squeeze magnitude, mode b (0 to 3)")
      ->check(CLI::Range(0.0, 3.0));
  std::vector<CLI::Option*> angles;
  angles.push_back(cmd->add_option("--chia", o.params.chi_a, "squeeze phase, mode a"));
  angles.push_back(cmd->add_option("--chib", o.params.chi_b, "squeeze phase, mode b"));
  angles.push_back(cmd->add_option("--theta", o.params.theta, "beam-splitter mixing angle"));
  angles.push_back(cmd->add_option("--phi0", o.params.phi0, "transmission phase"));
  angles.push_back(cmd->add_option("--phi1", o.params.phi1, "reflection phase"));
  cmd->add_flag("--degrees", o.degrees, "interpret supplied angles as degrees");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out_path, "write data to FILE instead of stdout");
  return angles;
}

void convert_angles(const std::vector<CLI::Option*>& angles, const Options& o,
                    bsent_params& p) {
  if (!o.degrees) return;
  const double f = kPi / 180.0;
  // option order matches add_state_flags: chia, chib, theta, phi0, phi1
  double* fields[] = {&p.chi_a, &p.chi_b, &p.theta, &p.phi0, &p.phi1};
  for (std::size_t i = 0; i < angles.size(); ++i)
    if (angles[i]->count() > 0) *fields[i] *= f;
}

const char* verdict(int inseparable) { return inseparable ? "inseparable" : "separable"; }

int run_compute(const Options& o, const bsent_params& p, bool ppt_only) {
  bsent_report rep;
  if (bsent_status st = bsent_compute(&p, &rep); st != BSENT_OK) return fail_status(st);
  std::string data;
  if (o.format == "json") {
    if (ppt_only) {
      data = "{\"ppt_verdict\":\"" + std::string(verdict(rep.inseparable)) +
             "\",\"lambda_min\":" + jnum(rep.lambda_min) + "}\n";
    } else {
      data = "{\"m11\":" + jnum(rep.m11) + ",\"m12\":" + jnum(rep.m12) +
             ",\"m22\":" + jnum(rep.m22) + ",\"delta\":" + jnum(rep.delta) +
             ",\"beta\":" + jnum(rep.beta) + ",\"entropy_nats\":" + jnum(rep.entropy_nats) +
             ",\"ppt_verdict\":\"" + verdict(rep.inseparable) +
             "\",\"lambda_min\":" + jnum(rep.lambda_min) + "}\n";
    }
  } else {
    if (ppt_only) {
      data = "ppt_verdict,lambda_min\n" + std::string(verdict(rep.inseparable)) + "," +
             cnum(rep.lambda_min) + "\n";
    } else {
      data = "m11,m12,m22,delta,beta,entropy_nats,ppt_verdict,lambda_min\n" + cnum(rep.m11) +
             "," + cnum(rep.m12) + "," + cnum(rep.m22) + "," + cnum(rep.delta) + "," +
             cnum(rep.beta) + "," + cnum(rep.entropy_nats) + "," + verdict(rep.inseparable) +
             "," + cnum(rep.lambda_min) + "\n";
    }
  }
  if (int rc = emit(data, o.out_path); rc != 0) return rc;
  if (ppt_only)
    std::fprintf(stderr, "%s (lambda_min=%.6g)\n", verdict(rep.inseparable), rep.lambda_min);
  else
    std::fprintf(stderr, "delta=%.6f entropy=%.6f nats (%s)\n", rep.delta, rep.entropy_nats,
                 verdict(rep.inseparable));
  return 0;
}

int run_sweep(const Options& o, const bsent_params& p, const std::string& canonical_param,
              double from, double to) {
  std::vector<double> values(std::size_t(o.steps)), deltas(std::size_t(o.steps)),
      entropies(std::size_t(o.steps));
  if (bsent_status st = bsent_sweep(&p, canonical_param.c_str(), from, to, o.steps,
                                    values.data(), deltas.data(), entropies.data());
      st != BSENT_OK)
    return fail_status(st);
  std::string data;
  if (o.format == "json") {
    data = "{\"param\":\"" + canonical_param + "\",\"rows\":[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) data += ",";
      data += "{\"value\":" + jnum(values[i]) + ",\"delta\":" + jnum(deltas[i]) +
              ",\"entropy_nats\":" + jnum(entropies[i]) + "}";
    }
    data += "]}\n";
  } else {
    data = "param,value,delta,entropy_nats\n";
    for (std::size_t i = 0; i < values.size(); ++i)
      data += canonical_param + "," + cnum(values[i]) + "," + cnum(deltas[i]) + "," +
              cnum(entropies[i]) + "\n";
  }
  if (int rc = emit(data, o.out_path); rc != 0) return rc;
  std::size_t imax = 0;
  for (std::size_t i = 1; i < entropies.size(); ++i)
    if (entropies[i] > entropies[imax]) imax = i;
  std::fprintf(stderr, "swept %s over [%g, %g] in %lld points; max entropy %.6f at %s=%.6g\n",
               canonical_param.c_str(), from, to, (long long)o.steps, entropies[imax],
               canonical_param.c_str(), values[imax]);
  return 0;
}

int run_optimize(const Options& o, const bsent_params& p) {
  static const std::map<std::string, unsigned> kMaskNames = {
      {"theta", BSENT_FREE_THETA}, {"phi0", BSENT_FREE_PHI0},   {"phi1", BSENT_FREE_PHI1},
      {"chia", BSENT_FREE_CHI_A},  {"chi_a", BSENT_FREE_CHI_A}, {"chib", BSENT_FREE_CHI_B},
      {"chi_b", BSENT_FREE_CHI_B},
  };
  unsigned mask = 0;
  std::string token;
  for (std::size_t i = 0; i <= o.free_list.size(); ++i) {
    if (i == o.free_list.size() || o.free_list[i] == ',') {
      if (!token.empty()) {
        auto it = kMaskNames.find(token);
        if (it == kMaskNames.end()) {
          std::fprintf(stderr, "error: unknown free parameter '%s'\n", token.c_str());
          return 2;
        }
        mask |= it->second;
        token.clear();
      }
    } else {
      token += o.free_list[i];
    }
  }
  if (mask == 0) {
    std::fprintf(stderr, "error: --free selects no parameters\n");
    return 2;
  }
  bsent_opt_result r;
  if (bsent_status st = bsent_optimize(&p, mask, &r); st != BSENT_OK) return fail_status(st);
  std::string data;
  if (o.format == "json") {
    data = "{\"argmax\":{\"r_a\":" + jnum(r.argmax.r_a) + ",\"chi_a\":" + jnum(r.argmax.chi_a) +
           ",\"r_b\":" + jnum(r.argmax.r_b) + ",\"chi_b\":" + jnum(r.argmax.chi_b) +
           ",\"theta\":" + jnum(r.argmax.theta) + ",\"phi0\":" + jnum(r.argmax.phi0) +
           ",\"phi1\":" + jnum(r.argmax.phi1) + "},\"delta_max\":" + jnum(r.delta_max) +
           ",\"entropy_max\":" + jnum(r.entropy_max) +
           ",\"k_branch\":" + std::to_string(r.k_branch) +
           ",\"phase_residual\":" + jnum(r.phase_residual) + ",\"flat_objective\":" +
           (r.flat_objective ? "true" : "false") + "}\n";
  } else {
    data =
        "r_a,chi_a,r_b,chi_b,theta,phi0,phi1,delta_max,entropy_max,k_branch,phase_residual,"
        "flat_objective\n" +
        cnum(r.argmax.r_a) + "," + cnum(r.argmax.chi_a) + "," + cnum(r.argmax.r_b) + "," +
        cnum(r.argmax.chi_b) + "," + cnum(r.argmax.theta) + "," + cnum(r.argmax.phi0) + "," +
        cnum(r.argmax.phi1) + "," + cnum(r.delta_max) + "," + cnum(r.entropy_max) + "," +
        std::to_string(r.k_branch) + "," + cnum(r.phase_residual) + "," +
        (r.flat_objective ? "true" : "false") + "\n";
  }
  if (int rc = emit(data, o.out_path); rc != 0) return rc;
  if (r.flat_objective)
    std::fprintf(stderr, "objective is flat over the free parameters; entropy %.6f nats\n",
                 r.entropy_max);
  else
    std::fprintf(stderr,
                 "max entropy %.6f nats at theta=%.6f (delta=%.6f); phase residual %.3g\n",
                 r.entropy_max, r.argmax.theta, r.delta_max, r.phase_residual);
  return 0;
}

int run_verify(const Options& o, const bsent_params& p) {
  const double r_max = p.r_a > p.r_b ? p.r_a : p.r_b;
  if (!bsent_cutoff_adequate(o.cutoff, r_max))
    std::fprintf(stderr, "note: cutoff %d is low for r_max=%g; expect truncation loss\n",
                 o.cutoff, r_max);
  bsent_verify_result r;
  if (bsent_status st = bsent_verify(&p, o.cutoff, &r); st != BSENT_OK) return fail_status(st);
  std::string data;
  if (o.format == "json") {
    data = "{\"gaussian_entropy\":" + jnum(r.gaussian_entropy) +
           ",\"oracle_entropy\":" + jnum(r.oracle_entropy) + ",\"abs_diff\":" + jnum(r.abs_diff) +
           ",\"truncation_budget\":" + jnum(r.truncation_budget) +
           ",\"pass\":" + (r.pass ? "true" : "false") + "}\n";
  } else {
    data = "gaussian_entropy,oracle_entropy,abs_diff,truncation_budget,pass\n" +
           cnum(r.gaussian_entropy) + "," + cnum(r.oracle_entropy) + "," + cnum(r.abs_diff) +
           "," + cnum(r.truncation_budget) + "," + (r.pass ? "true" : "false") + "\n";
  }
  if (int rc = emit(data, o.out_path); rc != 0) return rc;
  std::fprintf(stderr, "%s |E_gaussian - E_fock| = %.3g, truncation budget %.3g\n",
               r.pass ? "PASS" : "FAIL", r.abs_diff, r.truncation_budget);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement of two squeezed vacua mixed on a lossless beam splitter"};
  app.require_subcommand(1);

  Options o;
  bsent_params_init(&o.params);

  CLI::App* compute = app.add_subcommand("compute", "closed-form entanglement report");
  auto compute_angles = add_state_flags(compute, o);

  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter over a grid");
  auto sweep_angles = add_state_flags(sweep, o);
  sweep->add_option("--param", o.sweep_param, "parameter to sweep")->required();
  sweep->add_option("--from", o.from, "start value")->required();
  sweep->add_option("--to", o.to, "end value")->required();
  sweep->add_option("--steps", o.steps, "number of grid points (endpoints inclusive)")
      ->required()
      ->check(CLI::Range(std::int64_t(2), std::int64_t(1000000)));

  CLI::App* optimize = app.add_subcommand("optimize", "maximize entanglement over parameters");
  auto optimize_angles = add_state_flags(optimize, o);
  optimize->add_option("--free", o.free_list,
                       "comma-separated free parameters out of theta,phi0,phi1,chia,chib");

  CLI::App* ppt = app.add_subcommand("ppt", "partial-transpose separability verdict");
  auto ppt_angles = add_state_flags(ppt, o);

  CLI::App* verify = app.add_subcommand("verify", "independent Fock-space check");
  auto verify_angles = add_state_flags(verify, o);
  verify->add_option("--cutoff", o.cutoff, "Fock-space photon-number cutoff")
      ->check(CLI::Range(4, 80));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bsent_params p = o.params;

  if (compute->parsed()) {
    convert_angles(compute_angles, o, p);
    return run_compute(o, p, false);
  }
  if (ppt->parsed()) {
    convert_angles(ppt_angles, o, p);
    return run_compute(o, p, true);
  }
  if (sweep->parsed()) {
    convert_angles(sweep_angles, o, p);
    static const std::map<std::string, std::string> kAliases = {
        {"ra", "r_a"},     {"rb", "r_b"},     {"chia", "chi_a"}, {"chib", "chi_b"},
        {"r_a", "r_a"},    {"r_b", "r_b"},    {"chi_a", "chi_a"}, {"chi_b", "chi_b"},
        {"theta", "theta"}, {"phi0", "phi0"}, {"phi1", "phi1"},
    };
    auto it = kAliases.find(o.sweep_param);
    if (it == kAliases.end()) {
      std::fprintf(stderr, "error: unknown sweep parameter '%s'\n", o.sweep_param.c_str());
      return 2;
    }
    const std::string canonical = it->second;
    double from = o.from, to = o.to;
    const bool is_angle = canonical != "r_a" && canonical != "r_b";
    if (o.degrees && is_angle) {
      from *= kPi / 180.0;
      to *= kPi / 180.0;
    }
    if (!(from < to)) {
      std::fprintf(stderr, "error: sweep requires --from < --to\n");
      return 2;
    }
    if (canonical == "r_a" || canonical == "r_b") {
      if (from < 0.0 || to > 3.0) {
        std::fprintf(stderr, "error: squeeze-magnitude sweeps must stay within [0, 3]\n");
        return 2;
      }
    }
    return run_sweep(o, p, canonical, from, to);
  }
  if (optimize->parsed()) {
    convert_angles(optimize_angles, o, p);
    return run_optimize(o, p);
  }
  if (verify->parsed()) {
    convert_angles(verify_angles, o, p);
    return run_verify(o, p);
  }
  return 2;  // unreachable: require_subcommand enforces one
}
