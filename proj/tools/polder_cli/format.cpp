#include "format.hpp"

#include <cstdio>

namespace polder::cli {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void JsonWriter::maybe_comma() {
  if (!first_in_scope_.empty()) {
    if (pending_key_) {
      pending_key_ = false;
      return;  // value follows its key, no comma
    }
    if (!first_in_scope_.back())
      out_ << ',';
    else
      first_in_scope_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  maybe_comma();
  out_ << '{';
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ << '}';
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  maybe_comma();
  out_ << '[';
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ << ']';
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  maybe_comma();
  out_ << '"' << k << "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  maybe_comma();
  out_ << fmt17(v);
  return *this;
}

JsonWriter& JsonWriter::value(int v) {
  maybe_comma();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(std::size_t v) {
  maybe_comma();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  maybe_comma();
  out_ << (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
  maybe_comma();
  out_ << '"';
  for (char c : s) {
    switch (c) {
      case '"': out_ << "\\\""; break;
      case '\\': out_ << "\\\\"; break;
      case '\n': out_ << "\\n"; break;
      case '\r': out_ << "\\r"; break;
      case '\t': out_ << "\\t"; break;
      default: out_ << c;
    }
  }
  out_ << '"';
  return *this;
}

JsonWriter& JsonWriter::value(const char* s) { return value(std::string(s)); }

JsonWriter& JsonWriter::raw(const std::string& r) {
  maybe_comma();
  out_ << r;
  return *this;
}

}  // namespace polder::cli
