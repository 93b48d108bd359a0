#pragma once

#include <stdexcept>
#include <string>

namespace factroid {

enum class errc { parse, domain, budget, unsupported, internal };

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse: return "parse";
    case errc::domain: return "domain";
    case errc::budget: return "budget";
    case errc::unsupported: return "unsupported";
    case errc::internal: return "internal";
  }
  return "internal";
}

}  // namespace factroid
