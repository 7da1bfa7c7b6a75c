#pragma once
#include <bcn/types.hpp>

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bcn {

// One verification check: a name, the measured worst error, the tolerance it
// was held to, and optional named metrics (condition numbers, sample counts).
struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> metrics;
};

// Structured verification report. Serializes to a versioned JSON document or
// an aligned text summary. Matrices are emitted row-major as [re, im] pairs
// regardless of realness so the format stays uniform and diffable. Timing
// lives in its own top-level key so byte-identity checks can exclude it.
class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  void config_number(const std::string& key, double v);
  void config_integer(const std::string& key, long long v);
  void config_text(const std::string& key, const std::string& v);
  void config_real_vector(const std::string& key, const VecR& v);

  void add_check(CheckResult r);
  void add_matrix(const std::string& name, const MatC& M);
  void add_matrix(const std::string& name, const MatR& M);
  void add_real_vector(const std::string& name, const VecR& v);
  void set_wall_seconds(double s) { wall_seconds_ = s; }

  bool all_passed() const;
  const std::vector<CheckResult>& checks() const { return checks_; }

  std::string to_json_string(bool include_timing = true) const;
  std::string to_text() const;

 private:
  using ConfigValue = std::variant<double, long long, std::string, VecR>;
  std::string title_;
  std::vector<std::pair<std::string, ConfigValue>> config_;
  std::vector<CheckResult> checks_;
  std::vector<std::pair<std::string, MatC>> matrices_;
  std::vector<std::pair<std::string, VecR>> vectors_;
  double wall_seconds_ = 0.0;
};

}  // namespace bcn
