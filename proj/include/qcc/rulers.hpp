#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/partition.hpp"

namespace qcc {

using Marks = std::vector<int>;

// Generalized difference triangle set: zero-based ascending blocks whose
// within-block differences are distinct across all blocks. Blocks form a
// multiset; identical singleton blocks are legitimate. A Golomb ruler is the
// single-block case.
struct Gdts {
  std::vector<Marks> blocks;

  // Largest mark over all blocks (0 for an empty set).
  int scope() const;
  // Block sizes, largest first.
  Partition profile() const;

  bool operator==(const Gdts&) const = default;
};

struct DifferenceSite {
  std::size_t block = 0;
  int high = 0;  // larger mark
  int low = 0;   // smaller mark
};

struct DifferenceCollision {
  int difference = 0;
  DifferenceSite first;
  DifferenceSite second;
};

struct GdtsReport {
  bool valid = false;
  bool normalized = false;  // every block starts at 0 and strictly increases
  int scope = 0;
  std::vector<DifferenceCollision> violations;
};

// Throws InvalidInput for an empty block list, an empty block or a negative mark.
GdtsReport verify_gdts(std::span<const Marks> blocks);
inline GdtsReport verify_gdts(const Gdts& set) { return verify_gdts(set.blocks); }

// Optimal ruler with the given number of marks, if it is in the shipped table
// (1 to 14 marks).
std::optional<Marks> known_optimal_ruler(int marks);

// Sidon set {2pi + (i^2 mod p)} for p the smallest prime >= marks, sorted and
// translated to start at 0.
Marks erdos_turan_ruler(int marks);

// Best verified ruler available: the table entry when present, else the
// Erdos-Turan construction. Throws InvalidInput for marks < 1.
Gdts build_golomb_ruler(int marks);

// Reference value (J-1) * smallest_prime_power(J-1); 0 for J = 1.
long atkinson_bound(int marks);

// Splits the first sum(sizes) marks of `ruler` into contiguous runs, largest
// size first, each translated to start at 0.
Gdts gdts_from_ruler(const Marks& ruler, const Partition& sizes);

// [[0,1,10,18],[0,2,7,13],[0,3]]
std::string to_json(const Gdts& set);
// Accepts the JSON list-of-lists form; lines starting with '#' are skipped.
Gdts gdts_from_json(std::string_view text);

}  // namespace qcc
