#include "cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>

#include "sympieri/branching.hpp"
#include "sympieri/character.hpp"
#include "sympieri/json_io.hpp"
#include "sympieri/lr.hpp"
#include "sympieri/oracle_guard.hpp"
#include "sympieri/pieri.hpp"
#include "sympieri/reciprocity.hpp"
#include "sympieri/stable.hpp"
#include "sympieri/young_diagram.hpp"

namespace sympieri {

namespace {

void print_decomposition(std::ostream& out, const Decomposition& dec, const std::string& format) {
  if (format == "json") {
    out << decomposition_to_json(dec, dec.rank <= oracle_rank_cap()).dump(2) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [f, mult] : dec.terms) width = std::max(width, f.str().size());
  for (auto it = dec.terms.rbegin(); it != dec.terms.rend(); ++it)
    out << std::left << std::setw(static_cast<int>(width) + 2) << it->first.str() << it->second
        << "\n";
  out << "total_multiplicity " << dec.total_multiplicity() << "\n";
  if (dec.rank <= oracle_rank_cap()) {
    long long total_dim = 0;
    for (const auto& [f, mult] : dec.terms) total_dim += mult * sp_dim(f, dec.rank);
    out << "total_dimension " << total_dim << "\n";
  }
}

void print_branch(std::ostream& out, const std::vector<BranchTerm>& terms, int n,
                  const std::string& format) {
  if (format == "json") {
    out << branch_to_json(terms, n, n <= oracle_rank_cap()).dump(2) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const BranchTerm& term : terms) width = std::max(width, term.e.str().size());
  for (const BranchTerm& term : terms) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << term.e.str() << "sl2:";
    for (const auto& [ell, mult] : term.sl2) out << " " << ell << ":" << mult;
    out << "\n";
  }
}

int print_duality(std::ostream& out, const DualityReport& report, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["check"] = "duality";
    j["n"] = report.n;
    j["m"] = report.m;
    j["pass"] = report.pass;
    j["mass"] = report.mass;
    j["discrepancies"] = report.discrepancies;
    out << j.dump(2) << "\n";
  } else {
    out << "duality n=" << report.n << " m=" << report.m << ": "
        << (report.pass ? "PASS" : "FAIL") << " (mass " << report.mass << ")\n";
    std::size_t shown = 0;
    for (const std::string& line : report.discrepancies) {
      if (++shown > 20) {
        out << "  ... " << report.discrepancies.size() - 20 << " more\n";
        break;
      }
      out << "  " << line << "\n";
    }
  }
  return report.pass ? 0 : 1;
}

int print_cross(std::ostream& out, const CrossReport& report, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["check"] = "cross";
    j["m"] = report.m;
    j["pass"] = report.pass;
    j["identities"] = nlohmann::ordered_json::array();
    for (const CrossIdentity& item : report.identities)
      j["identities"].push_back({{"name", item.name},
                                 {"checked", item.checked},
                                 {"pass", item.pass},
                                 {"detail", item.detail}});
    out << j.dump(2) << "\n";
  } else {
    for (const CrossIdentity& item : report.identities) {
      out << std::left << std::setw(34) << item.name << (item.pass ? "PASS" : "FAIL") << "  ("
          << item.checked << " instances)";
      if (!item.detail.empty()) out << "  " << item.detail;
      out << "\n";
    }
    out << "cross m=" << report.m << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of Sp(2m) representations: involutions on Young "
               "diagrams, branching, tensor products, and Pieri rules"};
  app.name("sympieri");
  app.require_subcommand(1);
  int exit_code = 0;

  // iota
  std::string iota_diagram;
  int iota_n = 0, iota_m = 0;
  CLI::App* iota_cmd = app.add_subcommand("iota", "Box-complement involution iota_{n,m}");
  iota_cmd->add_option("--diagram", iota_diagram, "diagram, rows as d1,d2,...")->required();
  iota_cmd->add_option("--n", iota_n, "box rows")->required();
  iota_cmd->add_option("--m", iota_m, "box columns")->required();
  iota_cmd->callback([&] {
    out << iota(YoungDiagram::parse(iota_diagram), {iota_n, iota_m}).str() << "\n";
  });

  // conjugate
  std::string conj_diagram;
  CLI::App* conj_cmd = app.add_subcommand("conjugate", "Transpose a diagram");
  conj_cmd->add_option("--diagram", conj_diagram, "diagram, rows as d1,d2,...")->required();
  conj_cmd->callback([&] { out << conjugate(YoungDiagram::parse(conj_diagram)).str() << "\n"; });

  // branch
  std::string branch_diagram, branch_format = "table";
  int branch_n = 0;
  CLI::App* branch_cmd =
      app.add_subcommand("branch", "Restrict an Sp(2n+2) irreducible to Sp(2n) x Sp(2)");
  branch_cmd->add_option("--diagram", branch_diagram, "highest weight G, at most n+1 rows")
      ->required();
  branch_cmd->add_option("--n", branch_n, "target rank n")->required();
  branch_cmd->add_option("--format", branch_format)->check(CLI::IsMember({"table", "json"}));
  branch_cmd->callback([&] {
    print_branch(out, branch(YoungDiagram::parse(branch_diagram), branch_n), branch_n,
                 branch_format);
  });

  // pieri
  std::string pieri_diagram, pieri_format = "table";
  int pieri_r = 0, pieri_m = 0, pieri_n = 0;
  CLI::App* pieri_cmd =
      app.add_subcommand("pieri", "Tensor with a fundamental representation: tau^D (x) omega_r");
  pieri_cmd->add_option("--diagram", pieri_diagram, "highest weight D")->required();
  pieri_cmd->add_option("--r", pieri_r, "fundamental index, 1..m")->required();
  pieri_cmd->add_option("--m", pieri_m, "rank")->required();
  CLI::Option* pieri_n_opt = pieri_cmd->add_option("--n", pieri_n, "auxiliary rank, >= d1");
  pieri_cmd->add_option("--format", pieri_format)->check(CLI::IsMember({"table", "json"}));
  pieri_cmd->callback([&] {
    std::optional<int> n;
    if (pieri_n_opt->count()) n = pieri_n;
    print_decomposition(out, skew_pieri(YoungDiagram::parse(pieri_diagram), pieri_r, pieri_m, n),
                        pieri_format);
  });

  // tensor
  std::string tensor_d1, tensor_d2, tensor_format = "table";
  int tensor_m = 0;
  CLI::App* tensor_cmd = app.add_subcommand("tensor", "Tensor product tau^D1 (x) tau^D2");
  tensor_cmd->add_option("--d1", tensor_d1, "first factor")->required();
  tensor_cmd->add_option("--d2", tensor_d2, "second factor")->required();
  tensor_cmd->add_option("--m", tensor_m, "rank")->required();
  tensor_cmd->add_option("--format", tensor_format)->check(CLI::IsMember({"table", "json"}));
  CLI::App* tensor_mode = tensor_cmd->add_option_group("mode", "computation path");
  bool tensor_stable = false, tensor_oracle = false;
  tensor_mode->add_flag("--stable", tensor_stable,
                        "triple Littlewood-Richardson sum (stable range)");
  tensor_mode->add_flag("--oracle", tensor_oracle, "character convolution (desk scale)");
  tensor_mode->require_option(1);
  tensor_cmd->callback([&] {
    YoungDiagram d1 = YoungDiagram::parse(tensor_d1);
    YoungDiagram d2 = YoungDiagram::parse(tensor_d2);
    Decomposition dec = tensor_stable ? stable_tensor(d1, d2, tensor_m)
                                      : tensor_decompose(d1, d2, tensor_m);
    print_decomposition(out, dec, tensor_format);
  });

  // lr
  std::string lr_f, lr_d, lr_e;
  CLI::App* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^F_{D,E}");
  lr_cmd->add_option("--f", lr_f, "outer shape F")->required();
  lr_cmd->add_option("--d", lr_d, "factor D")->required();
  lr_cmd->add_option("--e", lr_e, "factor E")->required();
  lr_cmd->callback([&] {
    out << lr_coeff(YoungDiagram::parse(lr_f), YoungDiagram::parse(lr_d),
                    YoungDiagram::parse(lr_e))
        << "\n";
  });

  // dim
  std::string dim_diagram;
  int dim_n = 0;
  CLI::App* dim_cmd = app.add_subcommand("dim", "Dimension of the Sp(2n) irreducible tau^D");
  dim_cmd->add_option("--diagram", dim_diagram, "highest weight D")->required();
  dim_cmd->add_option("--n", dim_n, "rank")->required();
  dim_cmd->callback([&] { out << sp_dim(YoungDiagram::parse(dim_diagram), dim_n) << "\n"; });

  // verify
  CLI::App* verify_cmd = app.add_subcommand("verify", "Machine-check the structural identities");
  verify_cmd->require_subcommand(1);

  int dual_n = 0, dual_m = 0;
  std::string dual_format = "table";
  CLI::App* dual_cmd = verify_cmd->add_subcommand(
      "duality", "Exterior algebra of C^2n (x) C^m vs the sum of tau^D (x) tau^{iota(D)}");
  dual_cmd->add_option("--n", dual_n)->required();
  dual_cmd->add_option("--m", dual_m)->required();
  dual_cmd->add_option("--format", dual_format)->check(CLI::IsMember({"table", "json"}));
  dual_cmd->callback([&] { exit_code = print_duality(out, verify_duality(dual_n, dual_m),
                                                     dual_format); });

  std::vector<int> main_parts;
  std::vector<std::string> main_ds;
  std::string main_e, main_format = "table";
  int main_m = 0;
  CLI::App* main_cmd = verify_cmd->add_subcommand(
      "main", "Restriction multiplicity vs tensor multiplicity of the iota-images");
  main_cmd->add_option("--parts", main_parts, "ranks n1,n2,...")->required()->delimiter(',');
  main_cmd->add_option("--m", main_m, "rank of the tensor side")->required();
  main_cmd->add_option("--d", main_ds, "one diagram per part (repeat the flag)")->required();
  main_cmd->add_option("--e", main_e, "diagram E")->required();
  main_cmd->add_option("--format", main_format)->check(CLI::IsMember({"table", "json"}));
  main_cmd->callback([&] {
    std::vector<YoungDiagram> ds;
    for (const std::string& s : main_ds) ds.push_back(YoungDiagram::parse(s));
    MainTheoremResult res =
        verify_main_theorem(main_parts, main_m, ds, YoungDiagram::parse(main_e));
    if (main_format == "json") {
      nlohmann::ordered_json j;
      j["check"] = "main";
      j["lhs"] = res.lhs;
      j["rhs"] = res.rhs;
      j["equal"] = res.equal;
      out << j.dump(2) << "\n";
    } else {
      out << "main: lhs=" << res.lhs << " rhs=" << res.rhs << " "
          << (res.equal ? "EQUAL" : "DIFFER") << "\n";
    }
    exit_code = res.equal ? 0 : 1;
  });

  int cross_m = 0, cross_depth = -1, cross_size = 6;
  std::string cross_format = "table";
  CLI::App* cross_cmd =
      verify_cmd->add_subcommand("cross", "Sweep the cross-module rule agreements");
  cross_cmd->add_option("--m", cross_m, "rank")->required();
  cross_cmd->add_option("--depth-cap", cross_depth, "max diagram depth (default m)");
  cross_cmd->add_option("--size-cap", cross_size, "max diagram size (default 6)");
  cross_cmd->add_option("--format", cross_format)->check(CLI::IsMember({"table", "json"}));
  cross_cmd->callback([&] {
    int depth = cross_depth < 0 ? cross_m : cross_depth;
    exit_code = print_cross(out, verify_cross(cross_m, depth, cross_size), cross_format);
  });

  try {
    std::vector<const char*> argv;
    argv.push_back("sympieri");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace sympieri
