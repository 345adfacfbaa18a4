#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "walg/lax.hpp"
#include "walg/verify.hpp"

namespace {

using namespace walg;

int output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generators and checks for finite W-algebras of classical type"};
  app.require_subcommand(1);

  std::string kind_s = "so", partition_s, out_path, format = "text", suite, check;
  int p_max = -1;
  int floor = 0;
  bool have_floor = false;

  auto add_common = [&](CLI::App* cmd, bool need_kind) {
    cmd->add_option("--partition", partition_s, "comma separated parts, e.g. 3,1")->required();
    if (need_kind) cmd->add_option("--kind", kind_s, "gl|so|sp")->required();
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* pyramid_cmd = app.add_subcommand("pyramid", "print the box diagram of a partition");
  pyramid_cmd->add_option("--partition", partition_s, "comma separated parts")->required();
  pyramid_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* gens_cmd = app.add_subcommand("gens", "extract generator records as JSON");
  add_common(gens_cmd, true);
  gens_cmd->add_option("--p-max", p_max, "unused override hook; ranges follow the theorems");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites or one named check");
  verify_cmd->add_option("--suite", suite, "standard");
  verify_cmd->add_option("--check", check, "zy|skv1|help|membership|grzeta|generation|negative");
  verify_cmd->add_option("--kind", kind_s, "gl|so|sp");
  verify_cmd->add_option("--partition", partition_s, "comma separated parts");
  verify_cmd->add_option("--floor", floor, "doubled truncation floor (default -2*(lambda_1+1))")
      ->each([&](const std::string&) { have_floor = true; });
  verify_cmd->add_option("--out", out_path, "output file (default stdout)");
  verify_cmd->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

  CLI::App* ident_cmd = app.add_subcommand("identities", "run the operator identities for one realization");
  add_common(ident_cmd, true);
  ident_cmd->add_option("--floor", floor, "doubled truncation floor")->each([&](const std::string&) { have_floor = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pyramid_cmd->parsed()) {
      Pyramid p(Partition::parse(partition_s));
      return output(p.render(), out_path);
    }

    if (gens_cmd->parsed()) {
      Realization r = Realization::build(kind_parse(kind_s), Partition::parse(partition_s));
      auto recs = extract_generators(r);
      return output(records_to_json(r, recs), out_path);
    }

    if (verify_cmd->parsed()) {
      VerificationReport rep;
      if (!suite.empty()) {
        if (suite != "standard") {
          std::cerr << "unknown suite '" << suite << "'\n";
          return 2;
        }
        rep = run_standard_suite(have_floor ? floor : -10);
      } else if (!check.empty()) {
        if (partition_s.empty()) {
          std::cerr << "--check needs --kind and --partition\n";
          return 2;
        }
        Realization r = Realization::build(kind_parse(kind_s), Partition::parse(partition_s));
        Half f = have_floor ? floor : -2 * (r.pyr().lambda().longest() + 1);
        rep.suite = check;
        if (check == "zy") {
          rep.checks.push_back(check_identity_zy(r, f));
        } else if (check == "skv1") {
          rep.checks.push_back(check_identity_shift_commutator(r));
        } else if (check == "help") {
          rep.checks.push_back(check_identity_bracket_transfer(r, f));
        } else if (check == "membership") {
          rep.checks.push_back(check_records_membership(r, extract_generators(r)));
        } else if (check == "grzeta") {
          rep.checks.push_back(check_records_gr_zeta(r, extract_generators(r)));
        } else if (check == "generation") {
          rep.checks.push_back(check_generation(r, extract_generators(r)));
        } else if (check == "negative") {
          rep.checks.push_back(check_negative_control(r));
        } else {
          std::cerr << "unknown check '" << check << "'\n";
          return 2;
        }
      } else {
        std::cerr << "verify needs --suite or --check\n";
        return 2;
      }
      int rc = output(format == "json" ? rep.json() : rep.text(), out_path);
      if (rc != 0) return rc;
      return rep.pass() ? 0 : 1;
    }

    if (ident_cmd->parsed()) {
      Realization r = Realization::build(kind_parse(kind_s), Partition::parse(partition_s));
      Half f = have_floor ? floor : -2 * (r.pyr().lambda().longest() + 1);
      VerificationReport rep;
      rep.suite = r.id() + " identities";
      rep.checks.push_back(check_identity_shift_commutator(r));
      rep.checks.push_back(check_identity_zy(r, f));
      rep.checks.push_back(check_identity_bracket_transfer(r, f));
      int rc = output(format == "json" ? rep.json() : rep.text(), out_path);
      if (rc != 0) return rc;
      return rep.pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
