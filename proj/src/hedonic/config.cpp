#include "hedonic/config.hpp"

#include <algorithm>

#include "hedonic/csv.hpp"
#include "hedonic/errors.hpp"

namespace hedonic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Config Config::parse_text(std::string_view text) {
  Config cfg;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw_invalid("config line " + std::to_string(line_no) +
                    ": expected key = value");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty())
      throw_invalid("config line " + std::to_string(line_no) + ": empty key");
    cfg.values_[key] = value;
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  return parse_text(read_file(path));
}

void Config::merge(const Config& overrides) {
  for (const auto& [k, v] : overrides.values_) values_[k] = v;
}

void Config::set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::optional<std::string> Config::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  auto d = parse_double(*v);
  if (!d) throw_invalid("config key " + key + ": expected a number, got '" + *v + "'");
  return *d;
}

long long Config::get_int(const std::string& key, long long fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  auto i = parse_int(*v);
  if (!i) throw_invalid("config key " + key + ": expected an integer, got '" + *v + "'");
  return *i;
}

std::uint64_t Config::get_seed(const std::string& key,
                               std::uint64_t fallback) const {
  long long v = get_int(key, static_cast<long long>(fallback));
  return static_cast<std::uint64_t>(v);
}

std::pair<double, double> Config::get_range(const std::string& key, double lo,
                                            double hi) const {
  auto v = get(key);
  if (!v) return {lo, hi};
  auto colon = v->find(':');
  if (colon == std::string::npos)
    throw_invalid("config key " + key + ": expected lo:hi, got '" + *v + "'");
  auto a = parse_double(std::string_view(*v).substr(0, colon));
  auto b = parse_double(std::string_view(*v).substr(colon + 1));
  if (!a || !b || !(*a <= *b))
    throw_invalid("config key " + key + ": bad range '" + *v + "'");
  return {*a, *b};
}

void Config::require_known(const std::vector<std::string>& known) const {
  for (const auto& [k, v] : values_) {
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw_invalid("unknown config key: " + k);
  }
}

std::string Config::to_text() const {
  std::string out;
  for (const auto& [k, v] : values_) {
    out += k;
    out += " = ";
    out += v;
    out.push_back('\n');
  }
  return out;
}

}  // namespace hedonic
