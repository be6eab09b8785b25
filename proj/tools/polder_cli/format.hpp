// Deterministic output formatting for the command line tool: every floating
// point value is emitted with 17 significant digits (enough to round-trip a
// double), key order is fixed by construction, and the config hash is a
// 64-bit FNV-1a over the canonical config serialization. Identical inputs
// therefore produce byte-identical outputs.

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace polder::cli {

std::string fmt17(double v);

std::string csv_field(const std::string& s);  // RFC 4180 quoting when needed

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

// Minimal JSON writer with insertion-ordered keys and fmt17 numbers.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(std::size_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(const char* s);
  JsonWriter& value(const std::string& s);
  JsonWriter& raw(const std::string& r);

  // Convenience: key followed by value.
  template <typename T>
  JsonWriter& kv(const std::string& k, const T& v) {
    key(k);
    return value(v);
  }

  std::string str() const { return out_.str(); }

 private:
  void maybe_comma();
  std::ostringstream out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

}  // namespace polder::cli
