#pragma once

#include <span>
#include <string_view>

namespace qcc {

namespace detail {

struct EmbeddedFile {
  std::string_view path;
  std::string_view contents;
};

std::span<const EmbeddedFile> embedded_files();

}  // namespace detail

// Contents of a data file shipped under data/, e.g. "catalog/index.txt".
// Throws NotFound for unknown paths.
std::string_view embedded_file(std::string_view path);

}  // namespace qcc
