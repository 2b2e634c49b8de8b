#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcc/codes.hpp"

namespace qcc {

struct ConditionViolation {
  std::string condition;   // "C3a", "C3b", "C4", "C5a", "C5b", "C6", "C7"
  int base_i = 0;          // 0-based base indices (both 0 for a single base)
  int base_j = 0;
  std::vector<int> positions;  // witnessing tuple, in the order w, x, y, z
};

struct ConditionReport {
  bool passed = true;
  std::size_t violation_count = 0;
  // First violations only; see violation_count for the total.
  std::vector<ConditionViolation> violations;

  std::string summary() const;
};

inline constexpr std::size_t kMaxListedViolations = 32;

// Base codeword of a w1-quasicyclic code of length n = g.length().
ConditionReport check_base_ccc(const Codeword& g, int w1);
// Base codewords of an ell-quasicyclic constant-weight code.
ConditionReport check_bases_cwc(const std::vector<Codeword>& bases, int ell);

}  // namespace qcc
