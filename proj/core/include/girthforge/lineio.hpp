#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "girthforge/util.hpp"

namespace girthforge::detail {

// Line-oriented reader shared by the text formats: skips blank lines
// and `#` comments, splits the rest on whitespace, and remembers the
// line number for error reporting.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-comment line as tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int lineno() const { return lineno_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(lineno_, msg);
  }

  long long to_int(const std::string& tok) const {
    try {
      size_t pos = 0;
      long long v = std::stoll(tok, &pos);
      if (pos != tok.size()) fail("bad integer '" + tok + "'");
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail("bad integer '" + tok + "'");
    }
  }

 private:
  std::istream& in_;
  int lineno_ = 0;
};

inline std::ifstream open_or_throw(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open " + path);
  return f;
}

}  // namespace girthforge::detail
