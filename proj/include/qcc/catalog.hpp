#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcc/codes.hpp"

namespace qcc {

// Union of clauses "n>=K" and "n=K".
class LengthCondition {
 public:
  struct Clause {
    bool at_least = false;
    long n = 0;
  };

  static LengthCondition parse(std::string_view text);

  bool holds(long n) const;
  // Smallest admissible length.
  long minimal() const;
  // The single length when the condition is one "n=K" clause.
  std::optional<long> exact() const;
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  std::string to_string() const;

 private:
  std::vector<Clause> clauses_;
};

// "floor(n/K)", "n" or a constant.
class SizeFormula {
 public:
  static SizeFormula parse(std::string_view text);

  long evaluate(long n) const;
  std::string to_string() const;

 private:
  enum class Kind { FloorDiv, Length, Constant } kind_ = Kind::Constant;
  long k_ = 0;
};

enum class EntryKind { BaseCodeword, ExplicitCode, Derivation, TableValue };
enum class Derivation { None, Lengthen, Shorten, Refine };

struct CatalogEntry {
  std::string tag;
  EntryKind kind = EntryKind::BaseCodeword;
  Partition composition;
  int q = 0;
  // Base codeword as printed, trailing zeros omitted.
  std::string base;
  std::string file;
  Derivation derivation = Derivation::None;
  std::string source_tag;
  std::optional<long> source_n;
  LengthCondition condition;
  SizeFormula size;
  std::string remark;
  // Table values: Table II size, or Table III N (text, since one is an
  // interval) with its bounds.
  std::optional<long> value;
  std::string n_text;
  std::optional<std::pair<long, long>> bounds;

  // Index line "tag | composition | source | condition | size [| remark]".
  std::string to_string() const;
};

class Catalog {
 public:
  // The embedded data/catalog files.
  static const Catalog& embedded();

  // Throws NotFound.
  const CatalogEntry& lookup(std::string_view tag) const;
  // Entries whose tag starts with `prefix` ("" for all), in file order.
  std::vector<const CatalogEntry*> list(std::string_view prefix = "") const;

  // Code of entry `tag` at length n (n may be omitted for single-length
  // entries). Throws InvalidInput if n is not admissible, and on cyclic or
  // dangling derivations.
  Code materialize(std::string_view tag, std::optional<long> n = std::nullopt) const;

  // Table II value at (composition, n), falling back to Table I for empty
  // cells; nullopt when neither table determines it.
  std::optional<long> known_size(const Partition& composition, long n) const;

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

  static Catalog parse(std::string_view index, std::string_view table2, std::string_view table3,
                       std::string (*read_file)(std::string_view));

 private:
  Code materialize_at(const CatalogEntry& e, long n, std::vector<std::string>& stack) const;

  std::vector<CatalogEntry> entries_;
  std::string (*read_file_)(std::string_view) = nullptr;
};

// Develops a Table I base at n: fully when w1 | n, else at the largest
// multiple of w1 that is admissible and then lengthened, else the first
// ⌊n/w1⌋ shifts at length n.
Code develop_table_base(const CatalogEntry& entry, long n);

struct CatalogReport {
  std::size_t checks = 0;
  // Build-breaking mismatches.
  std::vector<std::string> failures;
  // Disagreements between printed tables that the data cannot settle.
  std::vector<std::string> inconsistencies;

  bool ok() const { return failures.empty(); }
};

CatalogReport verify_catalog(const Catalog& catalog = Catalog::embedded());

// Implied [lo, hi] for N_ccc from Tables I and II together with the lower
// bound of nccc_bounds.
std::pair<long, long> implied_nccc(const Catalog& catalog, const Partition& composition);

}  // namespace qcc
