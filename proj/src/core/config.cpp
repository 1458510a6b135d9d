#include "core/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace eaqt {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value, int line) {
  try {
    size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw config_error("key '" + key + "': expected a number, got '" + value + "'", line);
  }
}

}  // namespace

void ConfigMap::set(const std::string& key, const std::string& value, int line) {
  entries_[key] = Entry{value, line, false};
}

void ConfigMap::merge_from(const ConfigMap& other) {
  for (const auto& [key, entry] : other.entries_)
    entries_[key] = Entry{entry.value, entry.line, false};
}

const ConfigMap::Entry* ConfigMap::find(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return nullptr;
  it->second.consumed = true;
  return &it->second;
}

bool ConfigMap::contains(const std::string& key) const {
  return entries_.count(key) != 0;
}

std::optional<std::string> ConfigMap::peek(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

std::string ConfigMap::get_string(const std::string& key, const std::string& fallback) {
  const Entry* e = find(key);
  return e ? e->value : fallback;
}

double ConfigMap::get_double(const std::string& key, double fallback) {
  const Entry* e = find(key);
  return e ? parse_double(key, e->value, e->line) : fallback;
}

std::optional<double> ConfigMap::maybe_double(const std::string& key) {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  return parse_double(key, e->value, e->line);
}

int ConfigMap::get_int(const std::string& key, int fallback) {
  const Entry* e = find(key);
  if (!e) return fallback;
  int v = 0;
  const char* first = e->value.data();
  const char* last = first + e->value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw config_error("key '" + key + "': expected an integer, got '" + e->value + "'",
                       e->line);
  return v;
}

bool ConfigMap::get_bool(const std::string& key, bool fallback) {
  const Entry* e = find(key);
  if (!e) return fallback;
  if (e->value == "true" || e->value == "1" || e->value == "on") return true;
  if (e->value == "false" || e->value == "0" || e->value == "off") return false;
  throw config_error("key '" + key + "': expected true/false, got '" + e->value + "'",
                     e->line);
}

std::vector<double> ConfigMap::get_double_list(const std::string& key,
                                               const std::vector<double>& fallback) {
  const Entry* e = find(key);
  if (!e) return fallback;
  std::vector<double> out;
  std::stringstream ss(e->value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw config_error("key '" + key + "': empty list element", e->line);
    out.push_back(parse_double(key, item, e->line));
  }
  if (out.empty()) throw config_error("key '" + key + "': empty list", e->line);
  return out;
}

void ConfigMap::reject_unconsumed() const {
  std::string bad;
  for (const auto& [key, entry] : entries_) {
    if (entry.consumed) continue;
    if (!bad.empty()) bad += ", ";
    bad += "'" + key + "'";
    if (entry.line > 0) bad += " (line " + std::to_string(entry.line) + ")";
  }
  if (!bad.empty())
    throw config_error("unknown or unused configuration keys: " + bad);
}

std::vector<std::string> ConfigMap::effective_entries() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) out.push_back(key + "=" + entry.value);
  return out;  // std::map iteration is already key-sorted
}

ConfigMap parse_config_text(const std::string& text) {
  ConfigMap map;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw config_error("unterminated section header '" + line + "'", lineno);
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw config_error("empty section name", lineno);
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("expected 'key = value', got '" + line + "'", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw config_error("empty key", lineno);
    if (value.empty()) throw config_error("key '" + key + "' has no value", lineno);
    map.set(section.empty() ? key : section + "." + key, value, lineno);
  }
  return map;
}

ConfigMap parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace eaqt
