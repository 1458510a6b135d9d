#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eaqt {

/// Flat key/value store behind the run-configuration format: `key = value`
/// lines grouped under `[section]` headers, `#` comments. Keys are addressed
/// as "section.key". Reads mark keys consumed so that leftovers (typos,
/// keys from another mode) can be rejected after a mode has pulled
/// everything it understands.
class ConfigMap {
 public:
  /// Later sets override earlier ones (file < flag precedence).
  void set(const std::string& key, const std::string& value, int line = 0);

  /// Copies every entry of `other` into this map, overriding duplicates.
  void merge_from(const ConfigMap& other);

  bool contains(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback);
  double get_double(const std::string& key, double fallback);
  int get_int(const std::string& key, int fallback);
  bool get_bool(const std::string& key, bool fallback);
  std::vector<double> get_double_list(const std::string& key,
                                      const std::vector<double>& fallback);

  std::optional<double> maybe_double(const std::string& key);

  /// Raw value without marking the key consumed.
  std::optional<std::string> peek(const std::string& key) const;

  /// Throws config_error naming every key that was set but never read.
  void reject_unconsumed() const;

  /// Deterministic "key=value" dump of everything set, sorted by key.
  std::vector<std::string> effective_entries() const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
    mutable bool consumed = false;
  };
  const Entry* find(const std::string& key) const;
  std::map<std::string, Entry> entries_;
};

/// Parses configuration text. Throws config_error with a 1-based line number
/// on malformed lines.
ConfigMap parse_config_text(const std::string& text);

/// Reads and parses a configuration file. Throws config_error if the file
/// cannot be opened.
ConfigMap parse_config_file(const std::string& path);

}  // namespace eaqt
