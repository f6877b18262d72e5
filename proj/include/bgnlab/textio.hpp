#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bgnlab/algebra.hpp"

namespace bgnlab {

// Ordered `key=value` records, one per line. Keys keep insertion order so
// that formatted output is stable and diffable.
class KeyValues {
 public:
  static KeyValues parse(std::string_view text);

  void set(const std::string& key, std::string value);
  void set(const std::string& key, const BigInt& value) { set(key, value.get_str()); }

  bool contains(std::string_view key) const { return find(key).has_value(); }
  std::optional<std::string> find(std::string_view key) const;
  // Throws malformed naming the field when absent.
  const std::string& get(std::string_view key) const;
  BigInt get_int(std::string_view key) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string format() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Strict decimal: optional leading '-', digits only.
BigInt parse_decimal(std::string_view text, std::string_view field);

KeyValues read_key_values(const std::filesystem::path& path);
void write_key_values(const std::filesystem::path& path, const KeyValues& kv);

}  // namespace bgnlab
