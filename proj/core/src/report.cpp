#include <bcn/report.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bcn {

using ordered_json = nlohmann::ordered_json;

void Report::config_number(const std::string& key, double v) {
  config_.emplace_back(key, v);
}
void Report::config_integer(const std::string& key, long long v) {
  config_.emplace_back(key, v);
}
void Report::config_text(const std::string& key, const std::string& v) {
  config_.emplace_back(key, v);
}
void Report::config_real_vector(const std::string& key, const VecR& v) {
  config_.emplace_back(key, v);
}

void Report::add_check(CheckResult r) { checks_.push_back(std::move(r)); }

void Report::add_matrix(const std::string& name, const MatC& M) {
  matrices_.emplace_back(name, M);
}
void Report::add_matrix(const std::string& name, const MatR& M) {
  matrices_.emplace_back(name, M.cast<Complex>());
}
void Report::add_real_vector(const std::string& name, const VecR& v) {
  vectors_.emplace_back(name, v);
}

bool Report::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

ordered_json json_of(const VecR& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

ordered_json json_of(const MatC& M) {
  ordered_json entries = ordered_json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      entries.push_back({M(i, j).real(), M(i, j).imag()});
    }
  }
  return ordered_json{{"rows", M.rows()}, {"cols", M.cols()},
                      {"entries", entries}};
}

}  // namespace

std::string Report::to_json_string(bool include_timing) const {
  ordered_json doc;
  doc["schema"] = "bcnlab-report/1";
  doc["title"] = title_;
  ordered_json cfg;
  for (const auto& [key, value] : config_) {
    std::visit([&](const auto& v) {
      using T = std::decay_t<decltype(v)>;
      if constexpr (std::is_same_v<T, VecR>) {
        cfg[key] = json_of(v);
      } else {
        cfg[key] = v;
      }
    }, value);
  }
  doc["config"] = cfg;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : checks_) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.passed ? "pass" : "fail";
    jc["max_error"] = c.max_error;
    jc["tolerance"] = c.tolerance;
    if (!c.metrics.empty()) {
      ordered_json jm;
      for (const auto& [k, v] : c.metrics) jm[k] = v;
      jc["metrics"] = jm;
    }
    checks.push_back(jc);
  }
  doc["checks"] = checks;
  if (!vectors_.empty()) {
    ordered_json jv;
    for (const auto& [name, v] : vectors_) jv[name] = json_of(v);
    doc["vectors"] = jv;
  }
  if (!matrices_.empty()) {
    ordered_json jm;
    for (const auto& [name, M] : matrices_) jm[name] = json_of(M);
    doc["matrices"] = jm;
  }
  doc["overall"] = all_passed() ? "pass" : "fail";
  if (include_timing) {
    doc["timing"] = ordered_json{{"wall_seconds", wall_seconds_}};
  }
  return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "== " << title_ << " ==\n";
  if (!config_.empty()) {
    os << "config:\n";
    for (const auto& [key, value] : config_) {
      os << "  " << key << " = ";
      std::visit([&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, VecR>) {
          os << json_of(v).dump();
        } else if constexpr (std::is_same_v<T, std::string>) {
          os << v;
        } else {
          os << ordered_json(v).dump();
        }
      }, value);
      os << "\n";
    }
  }
  if (!checks_.empty()) {
    os << "checks:\n";
    for (const CheckResult& c : checks_) {
      char line[256];
      std::snprintf(line, sizeof(line), "  [%s] %-40s max_error=%.3e tol=%.1e",
                    c.passed ? "PASS" : "FAIL", c.name.c_str(), c.max_error,
                    c.tolerance);
      os << line;
      for (const auto& [k, v] : c.metrics) {
        std::snprintf(line, sizeof(line), "  %s=%.3e", k.c_str(), v);
        os << line;
      }
      os << "\n";
    }
  }
  for (const auto& [name, v] : vectors_) {
    os << name << " = " << json_of(v).dump() << "\n";
  }
  for (const auto& [name, M] : matrices_) {
    os << name << " (" << M.rows() << "x" << M.cols() << "):\n";
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
      os << "  ";
      for (Eigen::Index j = 0; j < M.cols(); ++j) {
        char buf[80];
        if (M.imag().cwiseAbs().maxCoeff() > 0.0) {
          std::snprintf(buf, sizeof(buf), "%+12.6e%+12.6ei  ", M(i, j).real(),
                        M(i, j).imag());
        } else {
          std::snprintf(buf, sizeof(buf), "%+12.6e  ", M(i, j).real());
        }
        os << buf;
      }
      os << "\n";
    }
  }
  os << "overall: " << (all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace bcn
