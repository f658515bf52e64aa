#pragma once

// Tab-separated fixture files; '#' starts a comment line.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef FLAGCALC_FIXTURE_DIR
#error "FLAGCALC_FIXTURE_DIR must be defined"
#endif

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(FLAGCALC_FIXTURE_DIR) + "/" + name; }

inline std::vector<std::vector<std::string>> load(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing fixture " + path(name));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace fixtures
