#pragma once

#include <filesystem>
#include <string>

#include "shadow/parser.hpp"

namespace testing_support {

/// Agents a b robot, times t0 .. t3; other symbols are accepted as written.
inline const shadow::Declarations& decls() {
  static const shadow::Declarations d = [] {
    shadow::Declarations out;
    out.agents = {{"a"}, {"b"}, {"robot"}};
    out.times = {{0, "t0"}, {1, "t1"}, {2, "t2"}, {3, "t3"}};
    return out;
  }();
  return d;
}

inline shadow::Formula F(const std::string& text) { return shadow::parse_formula(text, decls()); }
inline shadow::Term T(const std::string& text) { return shadow::parse_term(text, decls()); }
inline shadow::LiteralList C(const std::string& text) { return shadow::parse_clause(text, decls()); }
inline shadow::TimeSym time(int i) { return decls().times.at(i); }
inline shadow::AgentSym agent(const std::string& name) { return {name}; }

inline std::filesystem::path source_dir() { return SHADOW_SOURCE_DIR; }
inline std::filesystem::path corpus_dir() { return source_dir() / "corpus"; }

}  // namespace testing_support
