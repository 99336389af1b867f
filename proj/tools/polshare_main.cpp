// polshare: exact bias of shared polarization and its entanglement regions.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polshare/bounds.hpp"
#include "polshare/closed_forms.hpp"
#include "polshare/errors.hpp"
#include "polshare/report.hpp"

namespace {

using namespace polshare;
using ordered_json = nlohmann::ordered_json;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

std::string render(const ordered_json& doc, const std::string& format, const std::string& text) {
  return format == "json" ? doc.dump(2) + '\n' : text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polarization-sharing calculator: pseudopure bias, entanglement regions, critical sizes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kGeneratorVersion));

  // share
  auto* share = app.add_subcommand("share", "Bias and region for each k in a range");
  std::optional<unsigned> share_n;
  unsigned share_p = 0;
  std::string share_sigma = "1";
  unsigned share_kmin = 2;
  unsigned share_kmax = 16;
  std::string share_bound = "gb";
  std::string share_format = "csv";
  int share_precision = 15;
  std::string share_out;
  share->add_option("--n", share_n, "Total qubits (default max(k-max, p))");
  share->add_option("--p", share_p, "Polarized qubits")->required();
  share->add_option("--sigma", share_sigma, "Polarization, decimal or num/den")->capture_default_str();
  share->add_option("--k-min", share_kmin)->capture_default_str();
  share->add_option("--k-max", share_kmax)->capture_default_str();
  share->add_option("--bound", share_bound)->check(CLI::IsMember({"braunstein", "gb"}))->capture_default_str();
  share->add_option("--format", share_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  share->add_option("--precision", share_precision, "Significant digits of decimal columns")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  share->add_option("--out", share_out, "Output file (default stdout)");

  // critical
  auto* critical = app.add_subcommand("critical", "Critical subspace size ceil(2p log2(1+sigma))");
  unsigned crit_p = 1;
  std::string crit_sigma = "1";
  std::optional<std::string> crit_exp2;
  std::string crit_format = "text";
  critical->add_option("--p", crit_p)->required();
  auto* crit_sigma_opt = critical->add_option("--sigma", crit_sigma, "Polarization, decimal or num/den");
  critical->add_option("--sigma-exp2", crit_exp2, "Give sigma as 2^E - 1 by the rational exponent E")
      ->excludes(crit_sigma_opt);
  critical->add_option("--format", crit_format)->check(CLI::IsMember({"text", "json"}));

  // threshold
  auto* threshold = app.add_subcommand("threshold", "Smallest sigma keeping p spins shared over k entanglable");
  unsigned thr_p = 1;
  unsigned thr_k = 2;
  int thr_precision = 50;
  std::string thr_format = "text";
  threshold->add_option("--p", thr_p)->required();
  threshold->add_option("--k", thr_k)->required();
  threshold->add_option("--precision", thr_precision)->check(CLI::Range(1, 1000));
  threshold->add_option("--format", thr_format)->check(CLI::IsMember({"text", "json"}));

  // crossover
  auto* crossover = app.add_subcommand("crossover", "First k where a sharing curve changes region");
  unsigned cross_p = 1;
  std::string cross_sigma = "1";
  std::string cross_bound = "gb";
  std::string cross_from = "E";
  std::string cross_to = "ES";
  unsigned cross_kmax = 256;
  std::string cross_format = "text";
  crossover->add_option("--p", cross_p)->required();
  crossover->add_option("--sigma", cross_sigma);
  crossover->add_option("--bound", cross_bound)->check(CLI::IsMember({"braunstein", "gb"}));
  crossover->add_option("--from", cross_from)->check(CLI::IsMember({"S", "ES", "E"}));
  crossover->add_option("--to", cross_to)->check(CLI::IsMember({"S", "ES", "E"}));
  crossover->add_option("--k-max", cross_kmax);
  crossover->add_option("--format", cross_format)->check(CLI::IsMember({"text", "json"}));

  // thermal
  auto* thermal = app.add_subcommand("thermal", "First k where a thermal pseudopure state leaves S");
  std::string therm_b;
  std::string therm_convention = "per_transition";
  unsigned therm_kmax = 256;
  std::string therm_format = "text";
  thermal->add_option("-B,--boltzmann", therm_b, "Boltzmann factor, decimal or num/den")->required();
  thermal->add_option("--convention", therm_convention)
      ->check(CLI::IsMember({"eq1_half", "per_transition"}))
      ->capture_default_str();
  thermal->add_option("--k-max", therm_kmax);
  thermal->add_option("--format", therm_format)->check(CLI::IsMember({"text", "json"}));

  // verify-appendix
  auto* verify = app.add_subcommand("verify-appendix", "Check pure sharing never reaches S, for all p <= k <= k-max");
  unsigned verify_kmax = 64;
  std::string verify_format = "text";
  verify->add_option("--k-max", verify_kmax)->check(CLI::Range(2U, 4096U));
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  // figure
  auto* figure = app.add_subcommand("figure", "Curve and boundary series for plotting");
  std::string fig_which;
  std::string fig_format = "csv";
  int fig_precision = 15;
  std::string fig_out;
  figure->add_option("which", fig_which)->check(CLI::IsMember({"fig2", "fig3"}))->required();
  figure->add_option("--format", fig_format)->check(CLI::IsMember({"csv", "json"}));
  figure->add_option("--precision", fig_precision)->check(CLI::Range(1, 1000));
  figure->add_option("--out", fig_out, "Output directory; writes <which>.<format> (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*share) {
      ShareRequest req;
      req.n = share_n;
      req.p = share_p;
      req.sigma = parse_exact(share_sigma);
      req.k_min = share_kmin;
      req.k_max = share_kmax;
      req.bound = parse_bound_family(share_bound);
      req.precision = share_precision;
      const SharingReport report = build_share_report(req);
      write_output(share_format == "json" ? to_json(report) : to_csv(report), share_out);
    } else if (*critical) {
      const CriticalSize kc = crit_exp2 ? critical_k_partial(crit_p, PowerOfTwoSigma{parse_exact(*crit_exp2)})
                                        : critical_k_partial(crit_p, parse_exact(crit_sigma));
      const std::string sigma_text = crit_exp2 ? "2^(" + *crit_exp2 + ")-1" : to_exact_string(parse_exact(crit_sigma));
      ordered_json doc = {{"p", crit_p},
                          {"sigma", sigma_text},
                          {"k_c", kc.k_c},
                          {"argument", kc.argument_decimal},
                          {"argument_exact", kc.exact_argument.has_value()}};
      const std::string text = "k_c=" + std::to_string(kc.k_c) + "\nargument=" + kc.argument_decimal +
                               (kc.exact_argument ? " (exact)" : "") + "\n";
      std::cout << render(doc, crit_format, text);
    } else if (*threshold) {
      const SigmaThreshold t = sigma_threshold(thr_p, thr_k);
      ordered_json doc = {{"p", thr_p},
                          {"k", thr_k},
                          {"exponent", to_exact_string(t.exponent)},
                          {"sigma", t.decimal(thr_precision)},
                          {"reachable", t.reachable}};
      std::string text = "sigma=2^(" + to_exact_string(t.exponent) + ")-1=" + t.decimal(thr_precision) + "\n";
      if (!t.reachable) text += "unreachable: sigma* exceeds 1\n";
      std::cout << render(doc, thr_format, text);
    } else if (*crossover) {
      const Crossover c = sharing_crossover(cross_p, parse_exact(cross_sigma), parse_bound_family(cross_bound),
                                            parse_region(cross_from), parse_region(cross_to), cross_kmax);
      ordered_json doc = {{"p", cross_p},
                          {"sigma", to_exact_string(parse_exact(cross_sigma))},
                          {"bound", cross_bound},
                          {"from", cross_from},
                          {"to", cross_to},
                          {"k", c.k ? ordered_json(*c.k) : ordered_json(nullptr)},
                          {"at_start", c.at_start}};
      const std::string text = c.k ? "k=" + std::to_string(*c.k) + (c.at_start ? " (already at first valid k)" : "") + "\n"
                                   : "none <= " + std::to_string(cross_kmax) + "\n";
      std::cout << render(doc, cross_format, text);
    } else if (*thermal) {
      const Rational b = parse_exact(therm_b);
      const auto k = thermal_crossover(b, parse_thermal_convention(therm_convention), therm_kmax);
      ordered_json doc = {{"B", to_exact_string(b)},
                          {"convention", therm_convention},
                          {"bound", "gb"},
                          {"k", k ? ordered_json(*k) : ordered_json(nullptr)}};
      const std::string text = k ? "k=" + std::to_string(*k) + "\n" : "none <= " + std::to_string(therm_kmax) + "\n";
      std::cout << render(doc, therm_format, text);
    } else if (*verify) {
      const AppendixSweep sweep = verify_appendix(verify_kmax);
      ordered_json violations = ordered_json::array();
      for (auto [p, k] : sweep.violations) violations.push_back({{"p", p}, {"k", k}});
      ordered_json doc = {{"k_max", verify_kmax},
                          {"cases", sweep.cases},
                          {"minimum_at_p1", sweep.minimum_at_p1},
                          {"violations", violations},
                          {"ok", sweep.ok()}};
      std::string text;
      if (sweep.ok()) {
        text = "OK, " + std::to_string(sweep.cases) + " cases\n";
      } else {
        text = "FAIL, " + std::to_string(sweep.violations.size()) + " violations in " + std::to_string(sweep.cases) +
               " cases" + (sweep.minimum_at_p1 ? "" : "; minimum not at p=1") + "\n";
        for (auto [p, k] : sweep.violations) text += "  p=" + std::to_string(p) + " k=" + std::to_string(k) + "\n";
      }
      std::cout << render(doc, verify_format, text);
      return sweep.ok() ? 0 : 1;
    } else if (*figure) {
      const FigureData data = build_figure(parse_figure(fig_which), fig_precision);
      const std::string text = fig_format == "json" ? figure_json(data) : figure_csv(data);
      std::string path;
      if (!fig_out.empty()) {
        path = (std::filesystem::path(fig_out) / (fig_which + "." + fig_format)).string();
      }
      write_output(text, path);
      if (!path.empty()) std::cerr << "wrote " << path << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
