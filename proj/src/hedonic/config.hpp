#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hedonic {

// Flat "key = value" run configuration. Later assignments override earlier
// ones, so CLI flags can be appended after file contents. '#' starts a
// comment; blank lines are skipped.
class Config {
public:
  static Config parse_text(std::string_view text);
  static Config parse_file(const std::string& path);

  void merge(const Config& overrides);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const;
  // "lo:hi" ranges for search-space bounds.
  std::pair<double, double> get_range(const std::string& key, double lo,
                                      double hi) const;

  // Throws Error(InvalidArgument) naming the first key outside `known`.
  void require_known(const std::vector<std::string>& known) const;

  std::string to_text() const;

private:
  std::map<std::string, std::string> values_;
};

}  // namespace hedonic
