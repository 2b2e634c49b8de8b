#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcc/codes.hpp"

namespace qcc {

// Point (group, level) with group in 1..n and level in 1..q.
using Point = std::pair<int, int>;
using Block = std::vector<Point>;

// H(n, q, w, t) design: points [n] x [q] grouped by first coordinate.
struct GSDesign {
  int n = 0;
  int q = 0;
  int w = 0;
  int t = 0;
  std::vector<Block> blocks;
};

struct GSReport {
  bool valid = false;
  long expected_blocks = 0;
  bool block_count_ok = false;
  bool uniform = false;         // every block has w points
  bool transverse = false;      // no block meets a group twice
  long uncovered = 0;           // t-transverses in no block
  long multiply_covered = 0;    // t-transverses in two or more blocks
  std::vector<std::string> problems;
};

// q^t C(n,t) / C(w,t), or -1 when not integral.
long gs_block_count(int n, int q, int w, int t);

// Throws InvalidInput on points outside [n] x [q].
GSReport verify_gs(const GSDesign& design);

// Code over alphabet q+1 with distance >= 2(w-t)+1 and the exact block count.
// Throws NotASteinerSystem on size mismatch, DistanceTooSmall on distance.
GSDesign code_to_gs(const Code& code, int t);
// Throws InvalidInput if the design fails verify_gs.
Code gs_to_code(const GSDesign& design);

// Header "n q w t", then one block per line as "i:j" pairs.
std::string write_gs(const GSDesign& design);
GSDesign read_gs(std::string_view text);

}  // namespace qcc
