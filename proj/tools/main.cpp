// multitype: Catlin multitype at the origin of a sum-of-squares hypersurface.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "multitype/errors.hpp"
#include "multitype/io.hpp"
#include "multitype/kolar.hpp"
#include "multitype/mixed_kolar.hpp"

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kInfiniteType = 2, kNontermination = 3, kVerifyMismatch = 4 };

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catlin multitype of a sum-of-squares domain from its generator ideal"};

  std::string input_path;
  std::string format = "text";
  bool trace = false;
  std::optional<std::size_t> max_steps;
  std::optional<unsigned> beta;
  std::optional<std::string> strategy;
  bool verify = false;

  app.add_option("-i,--input", input_path, "Input file (default: standard input)");
  app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("-t,--trace", trace, "Print the per-step trace in text output");
  app.add_option("--max-steps", max_steps, "Step cap before reporting nontermination")
      ->check(CLI::PositiveNumber);
  app.add_option("--beta", beta, "Truncate generators to this total degree")->check(CLI::PositiveNumber);
  app.add_option("--strategy", strategy, "Row reduction strategy")
      ->check(CLI::IsMember({"greedy", "exhaustive"}));
  app.add_flag("--verify", verify, "Cross-check against the mixed-polynomial algorithm");

  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (input_path.empty() || input_path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "error: cannot open " << input_path << "\n";
      return kInputError;
    }
    text = read_all(in);
  }

  try {
    multitype::InputSpec spec = multitype::parse_input(text);
    auto& config = spec.config;
    if (max_steps) config.max_steps = *max_steps;
    if (beta) config.truncation_order = *beta;
    if (strategy) {
      config.strategy = *strategy == "exhaustive" ? multitype::Strategy::Exhaustive
                                                  : multitype::Strategy::Greedy;
    }
    config.output_format = format == "json" ? multitype::OutputFormat::Json : multitype::OutputFormat::Text;
    config.cross_check = verify;

    multitype::MultitypeReport report = multitype::run(spec.generators, config);

    int status = kOk;
    if (config.cross_check) {
      const auto mixed = multitype::run_mixed_kolar(spec.generators, config);
      if (mixed.report.final_weight != report.final_weight) {
        report.warnings.push_back("mixed-polynomial algorithm reached final weight " +
                                  multitype::to_string(mixed.report.final_weight.sorted()));
        status = kVerifyMismatch;
      } else {
        std::cerr << "verify: mixed-polynomial algorithm agrees\n";
      }
    }

    std::cout << multitype::emit_report(report, spec.variable_names, {config.output_format, trace});
    return status;
  } catch (const multitype::InfiniteTypeError& e) {
    std::cerr << "infinite type: " << e.what() << "\n";
    return kInfiniteType;
  } catch (const multitype::NonterminationError& e) {
    std::cerr << "nontermination: " << e.what() << "\n";
    return kNontermination;
  } catch (const multitype::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
