#include "cmreg/cli.hpp"

#include <chrono>
#include <fstream>

#include "CLI11.hpp"
#include "cmreg/cohomology.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/harness.hpp"
#include "cmreg/io.hpp"
#include "cmreg/resolution.hpp"

namespace cmreg {

namespace {

std::string reg_text(int reg) {
  return reg == kRegMinusInfinity ? "-infinity" : std::to_string(reg);
}

void print_generators(std::ostream& out, const Ideal& ideal) {
  if (ideal.generators().empty()) out << "  0\n";
  for (const Polynomial& f : ideal.generators()) out << "  " << format_polynomial(f) << "\n";
}

void print_betti_lines(std::ostream& out, const BettiTable& table) {
  for (const auto& [ij, v] : table.ranks)
    out << "beta_" << ij.first << "_" << ij.second << "=" << v << "\n";
}

int cmd_reg(const Ideal& ideal, std::ostream& out) {
  BettiTable table = betti_table(minimal_free_resolution(ideal));
  int reg = regularity(table);
  out << "regularity = " << reg_text(reg) << "\n";
  out << "betti table:\n" << render_betti_table(table);
  out << "reg=" << reg_text(reg) << "\n";
  print_betti_lines(out, table);
  return 0;
}

int cmd_betti(const Ideal& ideal, std::ostream& out) {
  BettiTable table = betti_table(minimal_free_resolution(ideal));
  out << "betti table:\n" << render_betti_table(table);
  print_betti_lines(out, table);
  return 0;
}

int cmd_sheaf_reg(const Ideal& ideal, std::ostream& out) {
  int sreg = sheaf_regularity(ideal);
  int n = ideal.context()->num_vars - 1;
  CohomologyTable table = cohomology_table(ideal, sreg - n - 2, sreg + 2);
  out << "sheaf regularity = " << sreg << "\n";
  out << "cohomology table:\n" << render_cohomology_table(table);
  out << "sheaf_reg=" << sreg << "\n";
  for (int i = 0; i <= table.n; ++i)
    for (int d = table.d_lo; d <= table.d_hi; ++d) {
      int64_t v = table.h[static_cast<size_t>(i)][static_cast<size_t>(d - table.d_lo)];
      if (v != 0) out << "h" << i << "(" << d << ")=" << v << "\n";
    }
  return 0;
}

int cmd_saturate(const Ideal& ideal, std::ostream& out) {
  Ideal sat = saturate(ideal);
  out << "saturation has " << sat.generators().size() << " generator"
      << (sat.generators().size() == 1 ? "" : "s") << ":\n";
  print_generators(out, sat);
  out << "gens=" << sat.generators().size() << "\n";
  out << "saturated=" << (equal_ideals(ideal, sat) ? "true" : "false") << "\n";
  return 0;
}

int cmd_product(const Ideal& a, const Ideal& b, std::ostream& out) {
  Ideal prod = product(a, b);
  out << "product has " << prod.generators().size() << " generator"
      << (prod.generators().size() == 1 ? "" : "s") << ":\n";
  print_generators(out, prod);
  int reg_a = regularity_betti(a);
  int reg_b = regularity_betti(b);
  int reg_p = regularity_betti(prod);
  int meet = krull_dim(sum(a, b));
  out << "regularity = " << reg_text(reg_p) << "\n";
  out << "reg_i=" << reg_text(reg_a) << "\n";
  out << "reg_j=" << reg_text(reg_b) << "\n";
  out << "reg_prod=" << reg_text(reg_p) << "\n";
  out << "dim_sum=" << meet << "\n";
  if (meet > 1) {
    out << "hypothesis: dim(S/(I+J)) = " << meet << " > 1, bound not applicable\n";
    return 0;
  }
  // a zero factor zeroes the product, so the bound holds vacuously there
  bool finite = reg_a != kRegMinusInfinity && reg_b != kRegMinusInfinity;
  bool holds = reg_p == kRegMinusInfinity || (finite && reg_p <= reg_a + reg_b);
  out << "bound=" << (finite ? std::to_string(reg_a + reg_b) : "-infinity") << "\n";
  out << "hypothesis: dim(S/(I+J)) = " << meet << " <= 1, bound applies\n";
  out << "verdict: reg(I*J) <= reg(I) + reg(J) " << (holds ? "PASS" : "FAIL") << "\n";
  return holds ? 0 : 1;
}

int cmd_campaign(const CampaignConfig& cfg, std::ostream& out, std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  CampaignResult result = run_campaign(cfg);
  auto t1 = std::chrono::steady_clock::now();
  out << render_campaign_report(result);
  err << "campaign wall time: "
      << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
  for (const TrialRecord& rec : result.records) {
    if (rec.verdict != Verdict::fail) continue;
    std::string name = "replay-" + cfg.campaign + "-draw" + std::to_string(rec.draw_index) + ".ring";
    std::ofstream file(name);
    file << "# " << rec.description << "\n" << rec.replay;
    err << "wrote " << name << "\n";
  }
  return result.ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Castelnuovo-Mumford regularity computations over GF(p)"};
  app.require_subcommand(1);

  std::string file, first, second;
  auto add_file_cmd = [&](const std::string& name, const std::string& help, bool two_names) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file, "input document")->required();
    cmd->add_option(two_names ? "I" : "ideal", first, "ideal or arrangement name")->required();
    if (two_names) cmd->add_option("J", second, "second ideal name")->required();
    return cmd;
  };
  CLI::App* reg_cmd = add_file_cmd("reg", "regularity through a minimal free resolution", false);
  CLI::App* sheaf_cmd = add_file_cmd("sheaf-reg", "regularity through sheaf cohomology", false);
  CLI::App* betti_cmd = add_file_cmd("betti", "Betti table of a minimal free resolution", false);
  CLI::App* sat_cmd = add_file_cmd("saturate", "saturation with respect to the irrelevant ideal", false);
  CLI::App* prod_cmd = add_file_cmd("product", "product ideal and its regularity bound", true);

  CampaignConfig cfg;
  CLI::App* camp_cmd = app.add_subcommand("campaign", "run a randomized verification campaign");
  camp_cmd->add_option("name", cfg.campaign,
                       "thm-prod | disjoint-union | lines | two-planes | cone | reg-equiv")
      ->required();
  camp_cmd->add_option("--trials", cfg.trials, "accepted trials to run");
  camp_cmd->add_option("--seed", cfg.seed, "campaign seed");
  camp_cmd->add_option("--n", cfg.ambient_n, "ambient projective dimension");
  camp_cmd->add_option("--d", cfg.d, "size parameter");
  camp_cmd->add_option("--p", cfg.char_p, "field characteristic");
  camp_cmd->add_option("--window", cfg.window, "vanishing-check window");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*camp_cmd) return cmd_campaign(cfg, out, err);
    InputDocument doc = load_document(file);
    if (*reg_cmd) return cmd_reg(doc.find_ideal(first), out);
    if (*sheaf_cmd) return cmd_sheaf_reg(doc.find_ideal(first), out);
    if (*betti_cmd) return cmd_betti(doc.find_ideal(first), out);
    if (*sat_cmd) return cmd_saturate(doc.find_ideal(first), out);
    if (*prod_cmd) return cmd_product(doc.find_ideal(first), doc.find_ideal(second), out);
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cmreg
