#pragma once

// Named verification checks over the whole library, a batch runner and the
// JSON / markdown report renderers.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsym {

enum class CheckStatus { Pass, Fail, Error };

std::string status_name(CheckStatus s);

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::Pass;
  std::map<std::string, std::int64_t> metrics;
  std::map<std::string, std::string> labels;
  std::string details;
  double duration_ms = 0;  ///< 0 unless timings are requested
};

inline constexpr int kDefaultMaxN = 6;
inline constexpr int kMaxNCap = 8;

struct RunConfig {
  std::vector<std::string> checks = {"all"};
  int max_n = kDefaultMaxN;  ///< bound for the increasing-sequence sweeps
  std::optional<std::string> json_out;
  std::optional<std::string> md_out;
  bool parallel = false;
  bool timings = false;
};

/// Working state of a single check. Metrics and labels are reported; a check
/// passes when it returns without a failed expectation or exception.
class CheckContext {
 public:
  explicit CheckContext(const RunConfig& config) : config_(config) {}

  const RunConfig& config() const { return config_; }

  void metric(const std::string& key, std::int64_t value) { metrics_[key] = value; }
  void label(const std::string& key, std::string value) { labels_[key] = std::move(value); }
  /// Records a failed expectation when ok is false.
  void expect(bool ok, const std::string& what);
  void note(const std::string& line);

  const std::map<std::string, std::int64_t>& metrics() const { return metrics_; }
  const std::map<std::string, std::string>& labels() const { return labels_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  const RunConfig& config_;
  std::map<std::string, std::int64_t> metrics_;
  std::map<std::string, std::string> labels_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct CheckInfo {
  std::string id;
  std::string statement;  ///< the claim being verified, for the markdown report
  std::function<void(CheckContext&)> body;
};

/// All checks, sorted by id.
const std::vector<CheckInfo>& registry();

/// Runs one registered check, turning exceptions into status error. Throws
/// UnknownCheck.
CheckResult run_check(const std::string& id, const RunConfig& config);

/// Every requested check ("all" expands to the registry), sorted by id.
/// Throws UnknownCheck for an unregistered id and InvalidArgument when
/// max_n is outside [1, kMaxNCap].
std::vector<CheckResult> run(const RunConfig& config);

/// JSON array of result objects.
std::string render_json(const std::vector<CheckResult>& results);
/// Header plus one section per check.
std::string render_markdown(const std::vector<CheckResult>& results);

/// Throws Error when the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qsym
