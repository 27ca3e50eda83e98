#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "typik/parser.hpp"

namespace typik::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(TYPIK_FIXTURES_DIR) + "/" + name + ".tkb";
}

inline Document fixture(const std::string& name) { return read_document_file(fixture_path(name)); }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace typik::testing
