// qsym verify: runs named checks and writes JSON / markdown reports.
//
// Exit codes: 0 all checks passed, 1 some check failed or errored, 2 usage or
// configuration error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsym/checks.hpp"
#include "qsym/errors.hpp"

namespace {

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto comma = item.find(',', start);
      const auto end = comma == std::string::npos ? item.size() : comma;
      if (end > start) out.push_back(item.substr(start, end - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

int verify(const qsym::RunConfig& config) {
  const auto results = qsym::run(config);
  if (config.json_out) qsym::write_text_file(*config.json_out, qsym::render_json(results));
  if (config.md_out) qsym::write_text_file(*config.md_out, qsym::render_markdown(results));
  int failed = 0;
  for (const auto& r : results) {
    std::cout << qsym::status_name(r.status) << "  " << r.check_id;
    if (config.timings) std::cout << "  (" << static_cast<long long>(r.duration_ms) << " ms)";
    std::cout << "\n";
    if (r.status != qsym::CheckStatus::Pass) {
      ++failed;
      std::cout << "    " << r.details.substr(0, r.details.find('\n')) << "\n";
    }
  }
  std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for twisted quantum permutation groups"};
  app.require_subcommand(1);

  qsym::RunConfig config;
  std::vector<std::string> checks = {"all"};
  std::string json_out, md_out;

  CLI::App* v = app.add_subcommand("verify", "run verification checks");
  v->add_option("--checks", checks, "comma-separated check ids, or all")->delimiter(',');
  v->add_option("--max-n", config.max_n, "bound for increasing-sequence sweeps")
      ->check(CLI::Range(1, qsym::kMaxNCap));
  v->add_option("--json-out", json_out, "write the JSON report here");
  v->add_option("--md-out", md_out, "write the markdown report here");
  v->add_flag("--parallel", config.parallel, "run checks concurrently");
  v->add_flag("--timings", config.timings, "record wall-clock durations in the reports");

  CLI::App* l = app.add_subcommand("list", "list check ids and statements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (l->parsed()) {
    for (const auto& c : qsym::registry()) std::cout << c.id << "\n    " << c.statement << "\n";
    return 0;
  }

  config.checks = split_ids(checks);
  if (config.checks.empty()) config.checks = {"all"};
  if (!json_out.empty()) config.json_out = json_out;
  if (!md_out.empty()) config.md_out = md_out;

  try {
    return verify(config);
  } catch (const qsym::UnknownCheck& e) {
    std::cerr << "qsym: " << e.what() << "\n";
    return 2;
  } catch (const qsym::InvalidArgument& e) {
    std::cerr << "qsym: " << e.what() << "\n";
    return 2;
  } catch (const qsym::Error& e) {
    std::cerr << "qsym: " << e.what() << "\n";
    return 2;
  }
}
