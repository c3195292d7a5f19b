#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "behmm/entangled.hpp"
#include "behmm/io.hpp"

namespace {

struct Options {
  std::string model_path;
  std::string query_path;
  std::string format = "table";
  std::string dump_channels;
  std::optional<int> horizon;
  std::optional<double> tol;
  bool oracle = false;
};

const char* kind_name(behmm::QueryKind k) {
  switch (k) {
    case behmm::QueryKind::validate: return "validate";
    case behmm::QueryKind::joint: return "joint";
    case behmm::QueryKind::hidden: return "hidden";
    case behmm::QueryKind::recurrence: return "recurrence";
    case behmm::QueryKind::diagonal: return "diagonal";
  }
  return "unknown";
}

int run_command(const std::string& cmd, const Options& opt) {
  const behmm::HiddenModel model = behmm::load_model(opt.model_path);

  behmm::QueryFile query;
  if (!opt.query_path.empty()) {
    query = behmm::load_query(opt.query_path);
    if (kind_name(query.kind) != cmd)
      throw behmm::ValidationError("query kind '" + std::string(kind_name(query.kind)) +
                                   "' does not match subcommand '" + cmd + "'");
  } else if (cmd != "validate") {
    throw behmm::ValidationError("subcommand '" + cmd + "' requires --query");
  }
  if (opt.horizon) {
    if (*opt.horizon < 1)
      throw behmm::ValidationError("--horizon must be >= 1, got " + std::to_string(*opt.horizon));
    query.horizon = *opt.horizon;
  }
  if (opt.tol) {
    if (!(*opt.tol > 0.0)) throw behmm::ValidationError("--tol must be positive");
    query.tol = *opt.tol;
  }
  if (opt.oracle) query.oracle = true;

  const behmm::Json report = behmm::run_query(model, query);
  if (opt.format == "structured")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << behmm::render_table(report);

  if (cmd == "validate") {
    if (!opt.dump_channels.empty()) {
      behmm::Json channels;
      channels["transition"] =
          behmm::channel_to_json(behmm::channel_from_pair_map(model, behmm::PairMapKind::H));
      channels["emission"] =
          behmm::channel_to_json(behmm::channel_from_pair_map(model, behmm::PairMapKind::HO));
      channels["underlying"] = behmm::channel_to_json(
          behmm::channel_from_pair_map(model, behmm::PairMapKind::O_underlying));
      std::ofstream out(opt.dump_channels, std::ios::binary);
      if (!out) throw behmm::ValidationError("cannot write to '" + opt.dump_channels + "'");
      out << channels.dump(2) << "\n";
    }
    if (!report.at("ok").get<bool>()) {
      std::cerr << "error: channel validation failed\n";
      return static_cast<int>(behmm::ErrorCode::validation);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-entangled hidden Markov model engine: entangled transition expectations, "
               "joint expectations of operator words, recurrence diagnostics, and classical "
               "diagonal restriction."};
  app.require_subcommand(1);
  app.footer("Exit codes:\n"
             "  0  success\n"
             "  2  parse error (bad flags or malformed input file)\n"
             "  3  validation error (invalid model, word, projection, or failed channel axioms)\n"
             "  4  summand budget exceeded\n"
             "  5  degenerate quantity (vanishing trace or undefined recurrence)\n"
             "  6  internal error");

  Options opt;
  int exit_code = 0;

  auto add_common = [&](CLI::App* sub, bool query_required) {
    sub->add_option("--model", opt.model_path, "model JSON file")->required();
    auto* q = sub->add_option("--query", opt.query_path, "query JSON file");
    if (query_required) q->required();
    sub->add_option("--horizon", opt.horizon, "truncation horizon (default 20)");
    sub->add_option("--tol", opt.tol, "numerical tolerance (default 1e-8)");
    sub->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"table", "structured"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "check the three channels' axioms");
  add_common(validate, false);
  validate->add_option("--dump-channels", opt.dump_channels,
                       "write the three channel block matrices to this JSON file");

  CLI::App* joint = app.add_subcommand("joint", "joint expectation of an operator word");
  add_common(joint, true);
  joint->add_flag("--oracle", opt.oracle, "also evaluate the flattened-sum oracle");

  CLI::App* hidden = app.add_subcommand("hidden", "expectation of a hidden-layer word");
  add_common(hidden, true);
  CLI::App* recurrence = app.add_subcommand("recurrence", "recurrence and accessibility diagnostics");
  add_common(recurrence, true);
  CLI::App* diagonal = app.add_subcommand("diagonal", "diagonal word vs classical Markov probability");
  add_common(diagonal, true);

  for (CLI::App* sub : {validate, joint, hidden, recurrence, diagonal})
    sub->callback([&, name = sub->get_name()]() { exit_code = run_command(name, opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(behmm::ErrorCode::parse);
  } catch (const behmm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(behmm::ErrorCode::internal);
  }
  return exit_code;
}
