#include "hartogs/cli.hpp"

#include <CLI11.hpp>
#include <random>
#include <sstream>

#include "hartogs/dsl.hpp"
#include "hartogs/numeric.hpp"

namespace hartogs {

namespace {

constexpr const char* kSchemaVersion = "1";

struct Options {
  int p = 0;
  int q = 1;
  int window = 16;
  int nodes = 64;
  unsigned long long seed = 12345;
  bool json = false;
  bool table = false;
};

std::string describe(const CohomologyReport& r) {
  std::ostringstream os;
  os << "H^{" << r.p << "," << r.q << "}: " << to_string(r.cls)
     << " (cardinality " << to_string(r.cardinality) << ", multiplicity "
     << r.multiplicity << ")\n";
  if (r.reduced) {
    os << "  reduced spectrum boxes:";
    for (const LatticeBox& b : r.reduced->spectrum.boxes()) {
      os << " [";
      for (std::size_t i = 0; i < b.iv.size(); ++i) {
        if (i) os << " x ";
        os << to_string(b.iv[i].lo) << ".." << to_string(b.iv[i].hi);
      }
      os << "]";
    }
    os << "\n  reduced convergence: " << to_string(r.reduced->convergence)
       << "\n";
  }
  if (r.indiscrete) {
    os << "  indiscrete numerator convergence: "
       << to_string(r.indiscrete->first.convergence) << "\n"
       << "  indiscrete denominator convergence: "
       << to_string(r.indiscrete->second.convergence) << "\n";
  }
  for (const JustificationEntry& e : r.justification) {
    os << "  [" << e.rule << "] " << e.statement << " (" << e.anchor << ")\n";
  }
  return os.str();
}

bool numeric_spot_checks(const Options& opt, Json& out) {
  bool ok = true;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long long> exp_dist(-8, 8);
  std::uniform_real_distribution<double> coef_dist(-1.0, 1.0);

  // Coefficient recovery on a random 2-D Laurent polynomial.
  LaurentPolynomial poly;
  poly.dim = 2;
  for (int t = 0; t < 8; ++t) {
    poly.coeffs[{exp_dist(rng), exp_dist(rng)}] =
        Complex(coef_dist(rng), coef_dist(rng));
  }
  TorusSpec torus{{0.7, 0.7}, opt.nodes};
  double worst = 0.0;
  for (const auto& [alpha, c] : poly.coeffs) {
    Complex got = torus_coefficient(
        [&](std::span<const Complex> z) { return poly.eval(z); }, alpha,
        torus);
    worst = std::max(worst, std::abs(got - c) / (1.0 + std::abs(c)));
  }
  out["coefficient_recovery_error"] = worst;
  ok = ok && worst < 1e-10;

  // Residue obstruction certifying non-density of disc restrictions.
  ObstructionResult obs = obstruction_bound(
      1, 0.75, [](Complex) { return Complex(0.0); });
  out["obstruction_bound"] = obs.bound;
  out["obstruction_sampled_sup"] = obs.sampled_sup;
  ok = ok && obs.bound <= obs.sampled_sup + 1e-9 &&
       std::abs(obs.bound - 4.0 / 3.0) < 1e-9;

  // Runge density decay for 1/(s - z) on a smaller circle.
  const double s = 0.6, rho = 0.4;
  std::vector<Complex> taylor;
  for (int j = 0; j <= 64; ++j) {
    taylor.push_back(std::pow(s, -(j + 1)));
  }
  std::vector<int> degrees{4, 8, 12, 16, 20, 24};
  DecayResult decay = density_decay(
      [&](Complex z) { return 1.0 / (s - z); }, taylor, rho, degrees);
  out["density_fitted_ratio"] = decay.fitted_ratio;
  ok = ok && std::abs(decay.fitted_ratio - rho / s) < 0.05;
  if (opt.table) {
    Json tbl = Json::array();
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      tbl.push_back(Json::array(
          {degrees[i], decay.errors[i]}));
    }
    out["density_table"] = tbl;
  }
  return ok;
}

bool oracle_check(const HartogsFigure& h, int W) {
  CohomologyReport r = cohomology(h, 0, 1);
  Spectrum engine = r.reduced ? r.reduced->spectrum.window(W)
                              : Spectrum(h.dim());
  return engine == graded_reduced_spectrum(h, W);
}

int run_impl(const std::vector<std::string>& args, RunResult& res) {
  CLI::App app{"Cohomology engine for generalized Hartogs figures"};
  app.require_subcommand(1);
  Options opt;
  std::string expr, expr2;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "emit the JSON document");
    sub->add_option("--window", opt.window, "oracle window half-width");
    sub->add_option("--quadrature-nodes", opt.nodes, "torus nodes per axis");
    sub->add_option("--seed", opt.seed, "seed for randomized spot checks");
    sub->add_flag("--table", opt.table, "emit the density-decay error table");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify-pair", "classify (Z0, Z)");
  classify_cmd->add_option("Z0", expr, "inner domain")->required();
  classify_cmd->add_option("Z", expr2, "outer domain")->required();
  add_common(classify_cmd);

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "monomial spectrum");
  spectrum_cmd->add_option("domain", expr, "domain expression")->required();
  add_common(spectrum_cmd);

  CLI::App* cohom = app.add_subcommand("cohomology", "one bidegree (p,q)");
  cohom->add_option("figure", expr, "hartogs figure expression")->required();
  cohom->add_option("--p", opt.p, "form degree p");
  cohom->add_option("--q", opt.q, "cohomological degree q");
  add_common(cohom);

  CLI::App* env = app.add_subcommand("envelope", "Stein certificate");
  env->add_option("figure", expr, "hartogs figure expression")->required();
  add_common(env);

  CLI::App* verify = app.add_subcommand("verify", "numeric harness");
  add_common(verify);

  CLI::App* report = app.add_subcommand("report", "full report + cross-checks");
  report->add_option("figure", expr, "hartogs figure expression")->required();
  add_common(report);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);

  Json& doc = res.doc;
  doc["schema_version"] = kSchemaVersion;
  std::ostringstream text;

  if (classify_cmd->parsed()) {
    Ast a0 = parse(expr), a1 = parse(expr2);
    doc["input"] = Json{{"Z0", print(a0)}, {"Z", print(a1)}};
    PairClass pc = classify(to_domain(a0.domain), to_domain(a1.domain));
    doc["pair"] = to_json(pc);
    text << "pair (" << print(a0) << ", " << print(a1)
         << "): " << to_string(pc.tag) << "\n";
    if (pc.tag == PairTag::Unsupported) {
      res.text = text.str();
      return 3;
    }
  } else if (spectrum_cmd->parsed()) {
    Ast a = parse(expr);
    doc["input"] = print(a);
    Spectrum s = spectrum_of(to_domain(a.domain));
    doc["spectrum"] = to_json(s);
    text << "spectrum of " << print(a) << ": " << doc["spectrum"].dump()
         << "\n";
  } else if (cohom->parsed()) {
    Ast a = parse(expr);
    doc["input"] = print(a);
    CohomologyReport r = cohomology(to_figure(a), opt.p, opt.q);
    doc["cohomology"] = to_json(r);
    text << describe(r);
  } else if (env->parsed()) {
    Ast a = parse(expr);
    doc["input"] = print(a);
    SteinCertificate c = stein_certificate(to_figure(a));
    doc["certificate"] = to_json(c);
    text << "is_stein: false; envelope: " << to_string(c.envelope) << "\n";
  } else if (verify->parsed()) {
    Json checks;
    bool ok = numeric_spot_checks(opt, checks);
    doc["checks"] = checks;
    doc["pass"] = ok;
    text << "numeric harness: " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) {
      res.text = text.str();
      return 4;
    }
  } else if (report->parsed()) {
    Ast a = parse(expr);
    doc["input"] = print(a);
    HartogsFigure h = to_figure(a);

    PairClass cx = classify(h.X0, h.X);
    PairClass cy = classify(h.Y0, h.Y);
    doc["pairs"] = Json{{"x", to_json(cx)}, {"y", to_json(cy)}};
    if (cx.tag == PairTag::Unsupported || cy.tag == PairTag::Unsupported) {
      res.text = "unsupported pair classification\n";
      return 3;
    }

    Json groups = Json::array();
    for (int q = 0; q <= 2; ++q) {
      for (int p = 0; p <= h.dim(); ++p) {
        CohomologyReport r = cohomology(h, p, q);
        groups.push_back(to_json(r));
        text << describe(r);
      }
    }
    doc["cohomology"] = groups;

    SteinCertificate cert = stein_certificate(h);
    doc["certificate"] = to_json(cert);

    Json checks;
    bool oracle_ok = oracle_check(h, opt.window);
    checks["oracle_agreement"] = oracle_ok;
    bool witness_ok = cert.witness.has_value();
    checks["hull_witness"] = witness_ok;
    bool numeric_ok = numeric_spot_checks(opt, checks);
    doc["checks"] = checks;
    bool ok = oracle_ok && witness_ok && numeric_ok;
    doc["pass"] = ok;
    text << "cross-checks: " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) {
      res.text = text.str();
      return 4;
    }
  }

  res.text = opt.json ? doc.dump(2) + "\n" : text.str();
  return 0;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult res;
  try {
    res.exit_code = run_impl(args, res);
  } catch (const CLI::ParseError& e) {
    res.text = std::string("usage error: ") + e.what() + "\n";
    res.exit_code = 2;
  } catch (const ParseError& e) {
    res.text = std::string("parse error: ") + e.what() + "\n";
    res.exit_code = 2;
  } catch (const UnsupportedError& e) {
    res.text = std::string("unsupported: ") + e.what() + "\n";
    res.exit_code = 3;
  } catch (const ValidationError& e) {
    res.text = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
  } catch (const DimensionError& e) {
    res.text = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
  } catch (const std::exception& e) {
    res.text = std::string("internal error: ") + e.what() + "\n";
    res.exit_code = 1;
  }
  return res;
}

}  // namespace hartogs
