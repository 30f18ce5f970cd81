#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace actig {

// Error with a stable machine-parsable code ("config_error", "shape_error", ...)
// plus a human message. The CLI prints "error: <code>: <msg>" on one line.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}

#define ACTIG_CHECK(cond, code, msg)        \
  do {                                      \
    if (!(cond)) ::actig::fail(code, msg);  \
  } while (0)

// FNV-1a, used for config hashes and checkpoint checksums.
inline uint64_t fnv1a(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t fnv1a(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
  return fnv1a(s.data(), s.size(), h);
}

std::string to_hex(uint64_t v);
uint64_t from_hex(const std::string& s);

}  // namespace actig
