#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/partition.hpp"

namespace qcc {

// Vector over {0, ..., q-1}.
class Codeword {
 public:
  // Throws InvalidInput if q < 2 or a symbol is outside [0, q).
  Codeword(int q, std::vector<int> symbols);

  // Digit string (q <= 10) padded with zeros to length n; n = 0 keeps the
  // string's own length.
  static Codeword from_digits(std::string_view digits, int q, int n = 0);

  int q() const noexcept { return q_; }
  int length() const noexcept { return static_cast<int>(symbols_.size()); }
  const std::vector<int>& symbols() const noexcept { return symbols_; }
  int operator[](std::size_t x) const { return symbols_[x]; }

  int weight() const;
  std::vector<int> support() const;
  // Cyclic shift T^k: result[x] = self[x - k mod n].
  Codeword shifted(long k) const;

  // Digits for q <= 10, comma-separated decimals otherwise.
  std::string to_string() const;

  auto operator<=>(const Codeword&) const = default;

 private:
  int q_;
  std::vector<int> symbols_;
};

// Throws InvalidInput on length or alphabet mismatch.
int hamming_distance(const Codeword& u, const Codeword& v);
// counts[s-1] = occurrences of symbol s, for s = 1..q-1.
std::vector<int> symbol_counts(const Codeword& u);
// Symbol counts for 1..q-1, sorted descending, zeros dropped.
Partition composition_of(const Codeword& u);

// Set of codewords sharing (q, n).
class Code {
 public:
  Code() = default;
  // Throws InvalidInput on mismatched (q, n) or duplicate codewords.
  Code(int q, int n, std::vector<Codeword> words);

  int q() const noexcept { return q_; }
  int length() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Codeword>& words() const noexcept { return words_; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  // Same codewords as `other`, ignoring order.
  bool same_words(const Code& other) const;

  std::optional<int> declared_distance;
  std::optional<Partition> declared_composition;

 private:
  int q_ = 2;
  int n_ = 0;
  std::vector<Codeword> words_;
};

// Base codewords developed by shifting in steps of `shift`.
struct BaseCodewordSet {
  std::vector<Codeword> bases;
  int shift = 1;

  int length() const { return bases.empty() ? 0 : bases.front().length(); }
};

// {T^{shift*i}(g) : g in bases, 0 <= i < n/shift}. Throws InvalidInput unless
// shift | n, DegenerateBase if two developed codewords coincide.
Code develop(const BaseCodewordSet& set);

struct CodeReport {
  std::size_t size = 0;
  // Minimum pairwise distance; nullopt stands for infinity (size < 2).
  std::optional<int> min_distance;
  std::optional<int> constant_weight;
  // Present when every codeword has the same number of each symbol; parts
  // listed largest first.
  std::optional<Partition> constant_composition;
  // Pairwise support-intersection and shared-symbol conditions for d = 2w-1;
  // evaluated only for constant-weight codes.
  std::optional<bool> supports_meet_at_most_once;
  std::optional<bool> shared_positions_differ;

  bool distance_at_least(int d) const { return !min_distance || *min_distance >= d; }
};

CodeReport verify_code(const Code& code);

// Appends `extra` zero coordinates.
Code lengthen(const Code& code, int extra);
// Drops codewords nonzero at `pos`, then deletes coordinate `pos`.
Code shorten(const Code& code, int pos);

// Splits symbols according to `witness` (groups[j] = target parts forming
// coarse part j). Codewords must use the canonical labeling: symbol s occurs
// coarse[s-1] times. Within each codeword the occurrences of a split symbol,
// in increasing position, receive the group's new symbols in increasing order.
Code refine_code(const Code& code, const Partition& target, const RefinementWitness& witness);

}  // namespace qcc
