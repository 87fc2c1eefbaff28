#include <iostream>

#include "CLI11.hpp"

#include "monreg_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace monreg::cli;
  CLI::App app{"monreg: regular and initially regular linear sums on powers of monomial ideals"};
  CommandOptions o;
  std::string form;
  std::string vertex;
  std::string commands;
  for (const std::string& c : command_names()) commands += (commands.empty() ? "" : " | ") + c;
  app.add_option("command", o.command, commands)->required();
  app.add_option("file", o.file, "problem file");
  app.add_option("--power", o.power, "work with I^t")->check(CLI::PositiveNumber);
  app.add_option("--form", form, "form id (comma-separated for regular-check)");
  app.add_option("--vertex", vertex, "vertex name for graph-bound");
  app.add_flag("--json", o.json, "one JSON object per line");
  app.add_flag("--strict", o.strict, "regular-check tests each form against J_i");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (!form.empty()) o.form = form;
  if (!vertex.empty()) o.vertex = vertex;
  return run(o, std::cout, std::cerr);
}
