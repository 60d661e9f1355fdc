#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "galint/expr.hpp"
#include "galint/pipeline.hpp"

namespace {

std::vector<galint::GaussRat> parse_balance(const std::string& text) {
  std::vector<galint::GaussRat> c;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) c.push_back(galint::parse_gauss(item));
  if (c.empty()) throw galint::InputError("--balance: empty vector");
  return c;
}

std::string karabut_text(int n) {
  auto vars = galint::karabut_variables(n);
  auto F = galint::karabut(n);
  std::string out;
  for (size_t j = 0; j < F.size(); ++j) out += vars[j] + "' = " + F[j].to_string(vars) + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integrability checks for polynomial vector fields"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input, output, format = "json";
  app.add_option("--input", input, "System document (JSON)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", output, "Write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Verify the declared tensors");
  auto* ve = app.add_subcommand("ve", "Variational equations and the declared reduction chain");
  auto* pipeline = app.add_subcommand("pipeline", "Full run ending in an obstruction verdict");

  auto* kovacic = app.add_subcommand("kovacic", "Classify y'' = r y");
  std::string r_text, var = "x";
  kovacic->add_option("r", r_text, "Rational function r")->required();
  kovacic->add_option("--var", var, "Independent variable");

  auto* kova = app.add_subcommand("kovalevskaya", "Kovalevskaya exponents at a balance");
  std::string balance;
  kova->add_option("--balance", balance, "Comma-separated balance, e.g. -i,-1,1,i,0")->required();

  auto* kb = app.add_subcommand("karabut", "Print the Karabut system of odd dimension n");
  int n = 3;
  kb->add_option("--n", n, "Dimension")->required();

  CLI11_PARSE(app, argc, argv);

  auto fmt = format == "text" ? galint::Format::Text : galint::Format::Json;
  try {
    auto need_input = [&] {
      if (input.empty()) throw galint::InputError("--input is required for this subcommand");
      return galint::load_system_file(input);
    };
    std::string text;
    if (*verify) text = emit_report(galint::run_pipeline(need_input(), galint::Scope::Verify), fmt);
    else if (*ve) text = emit_report(galint::run_pipeline(need_input(), galint::Scope::Variational), fmt);
    else if (*pipeline) text = emit_report(galint::run_pipeline(need_input(), galint::Scope::Full), fmt);
    else if (*kovacic) text = emit_report(galint::kovacic_report(galint::parse_ratfn(r_text, var), var), fmt);
    else if (*kova) text = emit_report(galint::kovalevskaya_report(need_input(), parse_balance(balance)), fmt);
    else if (*kb) text = fmt == galint::Format::Json ? galint::karabut_document(n).dump(2) + "\n" : karabut_text(n);

    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      if (!out) throw galint::InputError("cannot open " + output + " for writing");
      out << text;
    }
  } catch (const galint::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const galint::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
