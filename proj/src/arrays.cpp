#include "qcc/arrays.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "qcc/errors.hpp"

namespace qcc {

std::vector<int> LambdaArray::column(std::size_t j) const {
  std::vector<int> entries;
  for (const auto& row : rows) {
    if (j < row.size() && row[j]) entries.push_back(*row[j]);
  }
  return entries;
}

int array_scope(const Grid& rows) {
  int scope = 0;
  for (const auto& row : rows) {
    std::vector<int> entries;
    for (const auto& cell : row) {
      if (cell) entries.push_back(*cell);
    }
    if (entries.empty()) continue;
    auto [lo, hi] = std::minmax_element(entries.begin(), entries.end());
    scope = std::max(scope, *hi - *lo);
    scope = std::max(scope, (*hi + 1) / 2);
  }
  return scope;
}

ArrayReport verify_array(const Grid& rows, const Partition& shape) {
  if (shape.empty()) throw InvalidInput("verify_array: empty shape");
  const auto height = static_cast<std::size_t>(shape.largest());
  const std::size_t width = shape.size();
  if (rows.size() != height) {
    throw InvalidInput("verify_array: expected " + std::to_string(height) + " rows, got " +
                       std::to_string(rows.size()));
  }
  for (const auto& row : rows) {
    if (row.size() != width) {
      throw InvalidInput("verify_array: expected " + std::to_string(width) + " columns");
    }
    for (const auto& cell : row) {
      if (cell && *cell < 0) throw InvalidInput("verify_array: negative entry");
    }
  }

  ArrayReport report;
  const int modulus = shape.largest();
  for (std::size_t i = 0; i < height; ++i) {
    const int residue = static_cast<int>(i + 1) % modulus;
    for (std::size_t j = 0; j < width; ++j) {
      if (rows[i][j] && *rows[i][j] % modulus != residue) {
        report.residue_violations.push_back("entry " + std::to_string(*rows[i][j]) + " in row " +
                                            std::to_string(i + 1) + " is not congruent to " +
                                            std::to_string(residue) + " mod " +
                                            std::to_string(modulus));
      }
    }
  }
  for (std::size_t j = 0; j < width; ++j) {
    int filled = 0;
    for (std::size_t i = 0; i < height; ++i) filled += rows[i][j] ? 1 : 0;
    if (filled != shape[j]) {
      report.column_violations.push_back("column " + std::to_string(j + 1) + " has " +
                                         std::to_string(filled) + " entries, expected " +
                                         std::to_string(shape[j]));
    }
  }
  std::map<int, std::string> differences;
  std::set<int> entries;
  for (std::size_t i = 0; i < height; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (!rows[i][j]) continue;
      if (!entries.insert(*rows[i][j]).second) {
        report.repeated_entries.push_back("entry " + std::to_string(*rows[i][j]) + " repeats");
      }
      for (std::size_t k = 0; k < width; ++k) {
        if (k == j || !rows[i][k]) continue;
        const int diff = *rows[i][j] - *rows[i][k];
        const std::string where = "row " + std::to_string(i + 1) + ": " +
                                  std::to_string(*rows[i][j]) + "-" + std::to_string(*rows[i][k]);
        if (diff == 0) {
          report.difference_violations.push_back(where + " is zero");
          continue;
        }
        auto [it, inserted] = differences.emplace(diff, where);
        if (!inserted && diff > 0) {
          report.difference_violations.push_back(where + " repeats difference " +
                                                 std::to_string(diff) + " of " + it->second);
        }
      }
    }
  }
  report.scope = array_scope(rows);
  report.valid = report.residue_violations.empty() && report.column_violations.empty() &&
                 report.difference_violations.empty() && report.repeated_entries.empty();
  return report;
}

LambdaArray array_from_gdts(const Gdts& set, const Partition& shape) {
  const Partition sizes = conjugate(shape);
  if (set.blocks.size() != sizes.size()) {
    throw InvalidInput("array_from_gdts: GDTS has " + std::to_string(set.blocks.size()) +
                       " blocks, conjugate shape " + sizes.to_string() + " needs " +
                       std::to_string(sizes.size()));
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (static_cast<int>(set.blocks[i].size()) != sizes[i]) {
      throw InvalidInput("array_from_gdts: block sizes must equal " + sizes.to_string() +
                         " (largest first)");
    }
  }
  const int modulus = shape.largest();
  LambdaArray array;
  array.shape = shape;
  array.rows.assign(static_cast<std::size_t>(modulus), std::vector<Cell>(shape.size()));
  for (std::size_t i = 0; i < set.blocks.size(); ++i) {
    const int residue = static_cast<int>(i + 1) % modulus;
    for (std::size_t j = 0; j < set.blocks[i].size(); ++j) {
      array.rows[i][j] = set.blocks[i][j] * modulus + residue;
    }
  }
  array.scope = array_scope(array.rows);
  return array;
}

LambdaArray array_for_partition(const Partition& shape) {
  const Partition sizes = conjugate(shape);
  const Gdts ruler = build_golomb_ruler(sizes.sum());
  return array_from_gdts(gdts_from_ruler(ruler.blocks.front(), sizes), shape);
}

std::string to_json(const LambdaArray& array) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : array.rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& cell : row) {
      if (cell) {
        out.push_back(*cell);
      } else {
        out.push_back(nullptr);
      }
    }
    rows.push_back(std::move(out));
  }
  nlohmann::json doc = {{"shape", array.shape.to_string()}, {"rows", std::move(rows)}};
  return doc.dump();
}

LambdaArray array_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed array text: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("shape") || !doc.contains("rows") ||
      !doc["shape"].is_string() || !doc["rows"].is_array()) {
    throw InvalidInput("array text needs a \"shape\" string and a \"rows\" list");
  }
  LambdaArray array;
  array.shape = Partition::parse(doc["shape"].get<std::string>());
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw InvalidInput("array rows must be lists");
    std::vector<Cell> cells;
    for (const auto& cell : row) {
      if (cell.is_null()) {
        cells.emplace_back();
      } else if (cell.is_number_integer()) {
        cells.emplace_back(cell.get<int>());
      } else {
        throw InvalidInput("array cells must be integers or null");
      }
    }
    array.rows.push_back(std::move(cells));
  }
  const ArrayReport report = verify_array(array.rows, array.shape);
  if (!report.valid) throw InvalidInput("array text does not describe a valid lambda-array");
  array.scope = report.scope;
  return array;
}

}  // namespace qcc
