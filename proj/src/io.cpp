#include "io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace rcusp {
namespace {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  // Returns the next whitespace separated token with its line number, or
  // empty when the input is exhausted. Comments run to end of line.
  std::pair<std::string_view, int> next() {
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '\n') {
        ++line;
        ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
      } else {
        break;
      }
    }
    if (pos >= text.size()) return {std::string_view{}, line};
    const std::size_t begin = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != '\r' && text[pos] != '\n' && text[pos] != '#') {
      ++pos;
    }
    return {text.substr(begin, pos - begin), line};
  }
};

Time parseInt(Tokenizer& tok, const char* field) {
  auto [token, line] = tok.next();
  if (token.empty()) {
    throw ParseError(line, std::string("missing value for ") + field);
  }
  Time value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid integer for ") + field + ": '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

Instance parseInstance(std::string_view text) {
  Tokenizer tok{text};

  Instance instance;
  const Time n = parseInt(tok, "activity count n");
  if (n < 0) throw ParseError(tok.line, "activity count must be >= 0");
  instance.capacity = parseInt(tok, "capacity C");
  if (instance.capacity < 1) throw ParseError(tok.line, "capacity must be >= 1");
  instance.horizon = parseInt(tok, "horizon H");

  instance.activities.reserve(static_cast<std::size_t>(n));
  for (Time a = 0; a < n; ++a) {
    ActivitySpec spec;
    spec.duration = parseInt(tok, "duration p");
    const int line = tok.line;
    spec.height = parseInt(tok, "height h");
    spec.slack = parseInt(tok, "slack k");
    const Time s_min = parseInt(tok, "s_min");
    const Time s_max = parseInt(tok, "s_max");
    if (spec.duration < 1) throw ParseError(line, "duration must be >= 1");
    if (spec.height < 1) throw ParseError(line, "height must be >= 1");
    if (spec.slack < 0) throw ParseError(line, "slack must be >= 0");
    if (s_min < 0) throw ParseError(line, "s_min must be >= 0");
    if (s_min > s_max) throw ParseError(line, "s_min exceeds s_max");
    if (s_max + spec.duration + spec.slack > instance.horizon) {
      throw ParseError(line, "latest end plus slack exceeds the horizon");
    }
    instance.activities.push_back(spec);
    instance.start_min.push_back(s_min);
    instance.start_max.push_back(s_max);
  }

  auto [extra, line] = tok.next();
  if (!extra.empty()) {
    throw ParseError(line, "unexpected trailing token '" + std::string(extra) + "'");
  }
  return instance;
}

std::string serializeInstance(const Instance& instance) {
  std::ostringstream out;
  out << instance.size() << ' ' << instance.capacity << ' ' << instance.horizon << '\n';
  for (ActivityId a = 0; a < instance.size(); ++a) {
    const ActivitySpec& spec = instance.activities[a];
    out << spec.duration << ' ' << spec.height << ' ' << spec.slack << ' '
        << instance.start_min[a] << ' ' << instance.start_max[a] << '\n';
  }
  return out.str();
}

Instance loadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseInstance(buffer.str());
}

void saveInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << serializeInstance(instance);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace rcusp
