#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "model.hpp"

namespace rcusp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Text format, line oriented. First data line: `n C H`. Then n lines
/// `p h k s_min s_max`, all integers, space separated. `#` starts a comment,
/// blank lines are ignored.
Instance parseInstance(std::string_view text);
std::string serializeInstance(const Instance& instance);

/// File wrappers; throw std::runtime_error on I/O failure, ParseError on
/// malformed content.
Instance loadInstance(const std::string& path);
void saveInstance(const Instance& instance, const std::string& path);

}  // namespace rcusp
