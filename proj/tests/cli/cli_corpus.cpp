// Runs every invocation in the CLI corpus and checks the exit code and a
// substring of the combined output.

#include "../support/fixtures.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#ifndef FLAGCALC_CLI
#error "FLAGCALC_CLI must be defined"
#endif

namespace {

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::string substitute(std::string s) {
  const std::string key = "@FIXTURES@";
  for (auto p = s.find(key); p != std::string::npos; p = s.find(key)) s.replace(p, key.size(), FLAGCALC_FIXTURE_DIR);
  return s;
}

}  // namespace

int main() {
  const auto rows = fixtures::load("cli_corpus.tsv");
  int failures = 0;
  for (const auto& row : rows) {
    if (row.size() != 3) {
      std::cout << "FAIL malformed corpus line\n";
      ++failures;
      continue;
    }
    std::string cmd = quote(FLAGCALC_CLI);
    std::istringstream args(substitute(row[0]));
    for (std::string a; args >> a;) cmd += " " + quote(a);
    cmd += " 2>&1";

    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    for (std::size_t n; p && (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    const int status = p ? pclose(p) : -1;
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    const bool ok = code == std::stoi(row[1]) && out.find(row[2]) != std::string::npos;
    std::cout << (ok ? "ok   " : "FAIL ") << row[0] << " -> exit " << code << "\n";
    if (!ok) {
      std::cout << "     expected exit " << row[1] << " and '" << row[2] << "'\n     output: " << out << "\n";
      ++failures;
    }
  }
  std::cout << rows.size() << " invocations, " << failures << " failed\n";
  return failures == 0 && rows.size() >= 30 ? 0 : 1;
}
