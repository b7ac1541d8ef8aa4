#include "commands.hpp"

#include "gkz/matrixio.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"exact toric / A-hypergeometric analysis and rank-jump certificates"};
  app.require_subcommand(1);

  gkzcli::Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("matrix", opt.matrix_path, "matrix file: header 'd n', then d rows of n integers")
        ->required();
    sub->add_option("--weight", opt.weight, "comma-separated rational weight vector (default: refined -e1)");
    sub->add_option("--radius", opt.radius, "series truncation radius")->default_val(6);
    sub->add_option("--cap", opt.cap, "lattice search cap for unbounded regions")->default_val(50);
    sub->add_option("--seed", opt.seed, "seed for the alpha sampler")->default_val(0);
    sub->add_flag("--json", opt.json, "emit the JSON report instead of text");
    sub->add_flag("--strict", opt.strict, "exit 4 when any result is inconclusive at the cap");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "toric ideal, initial ideal, standard pairs, volume");
  add_common(analyze);
  CLI::App* exceptional = app.add_subcommand("exceptional", "exceptional-parameter candidate and rank certificate");
  add_common(exceptional);
  CLI::App* series = app.add_subcommand("series", "truncated canonical series for a parameter");
  add_common(series);
  series->add_option("--beta", opt.beta, "parameter vector, entries like '1+a', '2', 'a'");
  series->add_option("--exponent", opt.exponent, "exponent vector with minimal negative support");
  series->add_flag("--all", opt.all, "all minimal-negative-support fake exponents");
  CLI::App* stdpairs = app.add_subcommand("stdpairs", "standard pair decomposition of the initial ideal");
  add_common(stdpairs);
  CLI::App* toric = app.add_subcommand("toric", "minimal generators of the toric ideal");
  add_common(toric);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return gkzcli::cmd_analyze(opt);
    if (exceptional->parsed()) return gkzcli::cmd_exceptional(opt);
    if (series->parsed()) return gkzcli::cmd_series(opt);
    if (stdpairs->parsed()) return gkzcli::cmd_stdpairs(opt);
    if (toric->parsed()) return gkzcli::cmd_toric(opt);
  } catch (const gkz::InternalInvariant& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const gkz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
