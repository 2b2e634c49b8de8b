#pragma once

#include <string>
#include <string_view>

#include "qcc/codes.hpp"

namespace qcc {

// Text format:
//   q=<q> n=<n>
//   # d=<d>          (optional)
//   # comp=<parts>   (optional)
//   one codeword per line: n digits for q <= 10, comma-separated otherwise
// LF line endings, no trailing whitespace.
std::string write_code(const Code& code);

// Accepts CRLF and trailing blanks on input. Other '#' lines are ignored.
// Codeword lines for q <= 10 shorter than n are padded with zeros. Throws
// InvalidInput on malformed text.
Code read_code(std::string_view text);

Code read_code_file(const std::string& path);
void write_code_file(const Code& code, const std::string& path);

}  // namespace qcc
