#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/partition.hpp"
#include "qcc/rulers.hpp"

namespace qcc {

using Cell = std::optional<int>;
// rows[i][j]: row i (0-based, row index i+1 in the usual 1-based numbering),
// column j.
using Grid = std::vector<std::vector<Cell>>;

// A lambda-array of shape lambda: lambda_1 rows, N columns, with
//  (P1) every entry in 1-based row i congruent to i mod lambda_1,
//  (P2) column j holding exactly lambda_j entries,
//  (P3) within-row differences nonzero and distinct, pooled over all rows.
struct LambdaArray {
  Partition shape;
  Grid rows;
  int scope = 0;

  // Entries of column j (0-based), top to bottom.
  std::vector<int> column(std::size_t j) const;
};

struct ArrayReport {
  bool valid = false;
  int scope = 0;
  std::vector<std::string> residue_violations;   // P1
  std::vector<std::string> column_violations;    // P2
  std::vector<std::string> difference_violations;  // P3
  std::vector<std::string> repeated_entries;
};

// max over rows of (positive within-row differences and ceil(b/2) per entry).
int array_scope(const Grid& rows);

// Throws InvalidInput when the grid is not lambda_1 x N or has a negative entry.
ArrayReport verify_array(const Grid& rows, const Partition& shape);

// Row i holds a_{i,j} * lambda_1 + (i mod lambda_1) for block i of `set`; the
// filled cells take the Ferrers shape of conjugate(shape). Throws InvalidInput
// unless the block sizes, largest first, equal conjugate(shape).
LambdaArray array_from_gdts(const Gdts& set, const Partition& shape);

// conjugate -> Golomb ruler -> contiguous GDTS split -> array.
LambdaArray array_for_partition(const Partition& shape);

// {"shape":"3,2,2","rows":[[1,7,16],[2,null,14],[0,3,null]]}
std::string to_json(const LambdaArray& array);
// Parses and verifies; throws InvalidInput if the array is not valid.
LambdaArray array_from_json(std::string_view text);

}  // namespace qcc
