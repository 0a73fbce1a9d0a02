#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

#include "CLI11.hpp"
#include "hadamard_cli/commands.hpp"

using hadamard::cli::json;

int main(int argc, char** argv) {
  CLI::App app{"Exact Hadamard products of projective linear spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  hadamard::cli::JobSpec job;
  std::string in_path, out_path, format = "json";
  app.add_option("--seed", job.seed, "seed for all randomness")->default_val(hadamard::cli::kDefaultSeed);
  app.add_option("--in", in_path, "input JSON file (default: standard input)");
  app.add_option("--out", out_path, "output file (default: standard output)");
  app.add_option("--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  app.add_flag("--symbolic", job.symbolic, "bracket verify: expand symbolically instead of sampling");
  app.add_flag("--transcript", job.transcript, "degree: include the fan computation");
  app.add_flag("--notation", job.notation, "bracket quadric/cubic: include the bracket notation");

  std::optional<std::string> bracket_mode;
  for (const auto& name : hadamard::cli::subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    if (name == "bracket") sub->add_option("mode", bracket_mode, "quadric, cubic or verify");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : hadamard::cli::kValidation;
  }
  job.subcommand = app.get_subcommands().front()->get_name();

  hadamard::cli::JobResult result;
  if (hadamard::cli::needs_payload(job.subcommand)) {
    std::string text;
    if (in_path.empty()) {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(in_path);
      if (!in) {
        std::cerr << "cannot read " << in_path << "\n";
        return hadamard::cli::kValidation;
      }
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    job.payload = json::parse(text, nullptr, false);
    if (job.payload.is_discarded()) {
      result = {hadamard::cli::kValidation,
                {{"error", {{"kind", "validation"}, {"message", "input is not valid JSON"}, {"pointer", "/"}}}}};
    } else if (bracket_mode && job.payload.is_object()) {
      job.payload["mode"] = *bracket_mode;
    }
  }
  if (result.document.is_null()) result = hadamard::cli::run(job);

  std::string text = format == "pretty" ? result.document.dump(2) : result.document.dump();
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    out << text << "\n";
  }
  if (auto it = result.document.find("error"); it != result.document.end()) {
    std::cerr << "error: " << it->at("message").get<std::string>() << "\n";
  }
  return result.exit_code;
}
