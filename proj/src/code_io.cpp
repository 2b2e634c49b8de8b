#include "qcc/code_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qcc/errors.hpp"

namespace qcc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

std::string_view after(std::string_view s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) {
    throw InvalidInput("expected '" + std::string(prefix) + "' in '" + std::string(s) + "'");
  }
  return s.substr(prefix.size());
}

Codeword parse_word(std::string_view line, int q, int n) {
  if (q <= 10) return Codeword::from_digits(line, q, n);
  std::vector<int> symbols;
  while (true) {
    const auto comma = line.find(',');
    symbols.push_back(parse_int(trim(line.substr(0, comma)), "symbol"));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  if (static_cast<int>(symbols.size()) != n) {
    throw InvalidInput("codeword has " + std::to_string(symbols.size()) + " symbols, expected " +
                       std::to_string(n));
  }
  return Codeword(q, std::move(symbols));
}

}  // namespace

std::string write_code(const Code& code) {
  std::string out = "q=" + std::to_string(code.q()) + " n=" + std::to_string(code.length()) + "\n";
  if (code.declared_distance) out += "# d=" + std::to_string(*code.declared_distance) + "\n";
  if (code.declared_composition) out += "# comp=" + code.declared_composition->to_string() + "\n";
  for (const auto& w : code) out += w.to_string() + "\n";
  return out;
}

Code read_code(std::string_view text) {
  std::optional<int> q;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<Partition> comp;
  std::vector<Codeword> words;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const auto line = trim(text.substr(0, eol));
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (line.empty()) continue;
    try {
      if (!q) {
        const auto space = line.find(' ');
        if (space == std::string_view::npos) throw InvalidInput("header must be 'q=<q> n=<n>'");
        q = parse_int(after(line.substr(0, space), "q="), "q");
        n = parse_int(after(trim(line.substr(space + 1)), "n="), "n");
        continue;
      }
      if (line.front() == '#') {
        const auto body = trim(line.substr(1));
        if (body.substr(0, 2) == "d=") d = parse_int(body.substr(2), "distance");
        if (body.substr(0, 5) == "comp=") comp = Partition::parse(body.substr(5));
        continue;
      }
      words.push_back(parse_word(line, *q, *n));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!q) throw InvalidInput("missing 'q=<q> n=<n>' header");
  Code code(*q, *n, std::move(words));
  code.declared_distance = d;
  code.declared_composition = comp;
  return code;
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_code(buffer.str());
}

void write_code_file(const Code& code, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << write_code(code);
}

}  // namespace qcc
