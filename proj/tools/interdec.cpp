// interdec: check or decompose projector families, measures and split functors.
//
//   interdec check     --kind projectors --input family.json
//   interdec decompose --kind measure --input m.json --output report.json --format text
//
// Exit status: 0 decomposable, 1 not decomposable, 2 invalid input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "interdec/cli.hpp"

int main(int argc, char** argv) {
  using namespace interdec;
  CLI::App app{"Interaction decompositions of projector families and split functors"};
  app.require_subcommand(1);

  const std::map<std::string, InputKind> kinds{
      {"projectors", InputKind::kProjectors}, {"measure", InputKind::kMeasure}, {"split", InputKind::kSplit}};
  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::kJson}, {"text", OutputFormat::kText}};

  CliRequest req;
  std::string input;
  std::string output;
  bool timing = false;
  for (const auto& [name, cmd] : {std::pair{"check", Command::kCheck}, std::pair{"decompose", Command::kDecompose}}) {
    auto* sub = app.add_subcommand(name, cmd == Command::kCheck ? "Decide decomposability"
                                                                : "Write the full decomposition");
    sub->add_option("--kind", req.kind, "projectors | measure | split")
        ->required()
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    sub->add_option("--input", input, "JSON document")->required();
    sub->add_option("--output", output, "Report path (default stdout)");
    sub->add_option("--format", req.format, "json | text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--timing", timing, "Print elapsed time to stderr");
    sub->callback([&req, c = cmd] { req.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  const auto start = std::chrono::steady_clock::now();
  const CliResult res = run_request_file(req, input);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!res.error.empty()) std::cerr << "interdec: " << res.error << "\n";
  if (output.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "interdec: cannot write '" << output << "'\n";
      return kExitInvalidInput;
    }
    out << res.output;
  }
  if (timing) std::cerr << "elapsed: " << elapsed << " s\n";
  return res.exit_code;
}
