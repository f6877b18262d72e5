#include "bgnlab/textio.hpp"

#include <fstream>
#include <sstream>

namespace bgnlab {

namespace {

Error malformed(const std::string& what) { return Error(ErrorKind::malformed, what); }

}  // namespace

KeyValues KeyValues::parse(std::string_view text) {
  KeyValues kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw malformed("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key(line.substr(0, eq));
    if (kv.contains(key)) {
      throw malformed("line " + std::to_string(line_no) + ": duplicate field '" + key + "'");
    }
    kv.entries_.emplace_back(key, std::string(line.substr(eq + 1)));
  }
  return kv;
}

void KeyValues::set(const std::string& key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(key, std::move(value));
}

std::optional<std::string> KeyValues::find(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const std::string& KeyValues::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  throw malformed("missing field '" + std::string(key) + "'");
}

BigInt KeyValues::get_int(std::string_view key) const { return parse_decimal(get(key), key); }

std::string KeyValues::format() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

BigInt parse_decimal(std::string_view text, std::string_view field) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  bool ok = !digits.empty();
  for (char ch : digits) ok = ok && ch >= '0' && ch <= '9';
  if (!ok) {
    throw malformed("field '" + std::string(field) + "': not a decimal integer: '" +
                    std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

KeyValues read_key_values(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::invalid_argument, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return KeyValues::parse(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_key_values(const std::filesystem::path& path, const KeyValues& kv) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::invalid_argument, "cannot write '" + path.string() + "'");
  }
  out << kv.format();
  if (!out) {
    throw Error(ErrorKind::invalid_argument, "write failed for '" + path.string() + "'");
  }
}

}  // namespace bgnlab
