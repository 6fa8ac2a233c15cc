#pragma once

// Reports are dual-emitted: a human-readable table and a machine-readable
// key=value document with stable ordering.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace corad {

struct Report {
  std::vector<std::pair<std::string, std::string>> kv;
  std::vector<std::string> violations;

  void add(const std::string& key, const std::string& value) { kv.emplace_back(key, value); }
  void add(const std::string& key, long long value) { kv.emplace_back(key, std::to_string(value)); }
  void add(const std::string& key, int value) { kv.emplace_back(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { kv.emplace_back(key, value ? "true" : "false"); }
  void add_dims(const std::string& key, const std::vector<int>& dims) {
    std::ostringstream os;
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    kv.emplace_back(key, os.str());
  }
  void violation(const std::string& what) { violations.push_back(what); }

  bool ok() const { return violations.empty(); }

  std::string human() const {
    std::size_t width = 0;
    for (const auto& [k, v] : kv) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : kv) {
      os << k;
      for (std::size_t i = k.size(); i < width; ++i) os << ' ';
      os << " : " << v << "\n";
    }
    for (const std::string& v : violations) os << "VIOLATION: " << v << "\n";
    return os.str();
  }

  std::string machine() const {
    std::ostringstream os;
    for (const auto& [k, v] : kv) os << k << "=" << v << "\n";
    for (std::size_t i = 0; i < violations.size(); ++i)
      os << "violation." << i << "=" << violations[i] << "\n";
    os << "ok=" << (ok() ? "true" : "false") << "\n";
    return os.str();
  }
};

}  // namespace corad
