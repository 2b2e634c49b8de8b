#include "qcc/embedded.hpp"

#include <string>

#include "qcc/errors.hpp"

namespace qcc {

std::string_view embedded_file(std::string_view path) {
  for (const auto& file : detail::embedded_files()) {
    if (file.path == path) return file.contents;
  }
  throw NotFound("no embedded data file '" + std::string(path) + "'");
}

}  // namespace qcc
