#include "qcc/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "qcc/bounds.hpp"
#include "qcc/code_io.hpp"
#include "qcc/embedded.hpp"
#include "qcc/errors.hpp"

namespace qcc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

long parse_long(std::string_view s, std::string_view what) {
  s = trim(s);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput("catalog: bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

std::vector<std::string_view> data_lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.front() != '#') out.push_back(line);
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::string embedded_catalog_file(std::string_view name) {
  return std::string(embedded_file("catalog/" + std::string(name)));
}

}  // namespace

LengthCondition LengthCondition::parse(std::string_view text) {
  LengthCondition c;
  std::string normalized(text);
  for (std::size_t pos; (pos = normalized.find(" or ")) != std::string::npos;) normalized.replace(pos, 4, "|");
  for (auto clause : split(normalized, '|')) {
    if (starts_with(clause, "n>=")) {
      c.clauses_.push_back({true, parse_long(clause.substr(3), "condition")});
    } else if (starts_with(clause, "n=")) {
      c.clauses_.push_back({false, parse_long(clause.substr(2), "condition")});
    } else {
      throw InvalidInput("catalog: bad condition clause '" + std::string(clause) + "'");
    }
  }
  return c;
}

bool LengthCondition::holds(long n) const {
  return std::any_of(clauses_.begin(), clauses_.end(),
                     [n](const Clause& c) { return c.at_least ? n >= c.n : n == c.n; });
}

long LengthCondition::minimal() const {
  long best = -1;
  for (const auto& c : clauses_) best = best < 0 ? c.n : std::min(best, c.n);
  return best;
}

std::optional<long> LengthCondition::exact() const {
  if (clauses_.size() == 1 && !clauses_.front().at_least) return clauses_.front().n;
  return std::nullopt;
}

std::string LengthCondition::to_string() const {
  std::string out;
  for (const auto& c : clauses_) {
    if (!out.empty()) out += " or ";
    out += (c.at_least ? "n>=" : "n=") + std::to_string(c.n);
  }
  return out;
}

SizeFormula SizeFormula::parse(std::string_view text) {
  text = trim(text);
  SizeFormula f;
  if (text == "n") {
    f.kind_ = Kind::Length;
  } else if (starts_with(text, "floor(n/") && text.back() == ')') {
    f.kind_ = Kind::FloorDiv;
    f.k_ = parse_long(text.substr(8, text.size() - 9), "size formula");
    if (f.k_ < 1) throw InvalidInput("catalog: size divisor must be positive");
  } else {
    f.kind_ = Kind::Constant;
    f.k_ = parse_long(text, "size");
  }
  return f;
}

long SizeFormula::evaluate(long n) const {
  switch (kind_) {
    case Kind::FloorDiv: return n / k_;
    case Kind::Length: return n;
    case Kind::Constant: return k_;
  }
  return 0;
}

std::string SizeFormula::to_string() const {
  switch (kind_) {
    case Kind::FloorDiv: return "floor(n/" + std::to_string(k_) + ")";
    case Kind::Length: return "n";
    case Kind::Constant: return std::to_string(k_);
  }
  return "";
}

std::string CatalogEntry::to_string() const {
  std::string source;
  switch (kind) {
    case EntryKind::BaseCodeword: source = "base:" + base; break;
    case EntryKind::ExplicitCode: source = "file:" + file; break;
    case EntryKind::Derivation:
      source = derivation == Derivation::Lengthen ? "lengthen:" : derivation == Derivation::Shorten ? "shorten:" : "refine:";
      source += source_tag;
      if (source_n) source += "@" + std::to_string(*source_n);
      break;
    case EntryKind::TableValue:
      if (bounds) {
        return tag + " | " + composition.to_string() + " | " + n_text + " | " + std::to_string(bounds->first) +
               "," + std::to_string(bounds->second);
      }
      return tag + " | " + composition.to_string() + " | " + (value ? std::to_string(*value) : "-") +
             (remark.empty() ? "" : " | " + remark);
  }
  std::string out = tag + " | " + composition.to_string() + " | " + source + " | " + condition.to_string() +
                    " | " + size.to_string();
  if (!remark.empty()) out += " | " + remark;
  return out;
}

Catalog Catalog::parse(std::string_view index, std::string_view table2, std::string_view table3,
                       std::string (*read_file)(std::string_view)) {
  Catalog cat;
  cat.read_file_ = read_file;
  for (auto line : data_lines(index)) {
    const auto f = split(line, '|');
    if (f.size() < 5 || f.size() > 6) {
      throw InvalidInput("catalog index: expected 5 or 6 fields in '" + std::string(line) + "'");
    }
    CatalogEntry e;
    e.tag = std::string(f[0]);
    e.composition = Partition::parse(f[1]);
    e.q = static_cast<int>(e.composition.size()) + 1;
    const auto source = f[2];
    if (starts_with(source, "base:")) {
      e.kind = EntryKind::BaseCodeword;
      e.base = std::string(source.substr(5));
    } else if (starts_with(source, "file:")) {
      e.kind = EntryKind::ExplicitCode;
      e.file = std::string(source.substr(5));
    } else {
      e.kind = EntryKind::Derivation;
      const auto colon = source.find(':');
      const auto op = source.substr(0, colon);
      e.derivation = op == "lengthen" ? Derivation::Lengthen
                     : op == "shorten" ? Derivation::Shorten
                     : op == "refine"  ? Derivation::Refine
                                       : Derivation::None;
      if (e.derivation == Derivation::None || colon == std::string_view::npos) {
        throw InvalidInput("catalog index: unknown source '" + std::string(source) + "'");
      }
      auto ref = source.substr(colon + 1);
      if (const auto at = ref.find('@'); at != std::string_view::npos) {
        e.source_n = parse_long(ref.substr(at + 1), "source length");
        ref = ref.substr(0, at);
      }
      e.source_tag = std::string(ref);
    }
    e.condition = LengthCondition::parse(f[3]);
    e.size = SizeFormula::parse(f[4]);
    if (f.size() == 6) e.remark = std::string(f[5]);
    cat.entries_.push_back(std::move(e));
  }

  const std::size_t table_one_end = cat.entries_.size();
  for (auto line : data_lines(table2)) {
    const auto f = split(line, '|');
    if (f.size() != 2) throw InvalidInput("table2: expected 'composition | cells'");
    const auto comp = Partition::parse(f[0]);
    std::istringstream cells{std::string(f[1])};
    std::string cell;
    for (long n = 6; cells >> cell; ++n) {
      CatalogEntry e;
      e.tag = "II:" + std::to_string(n) + ":" + comp.to_string();
      e.kind = EntryKind::TableValue;
      e.composition = comp;
      e.q = static_cast<int>(comp.size()) + 1;
      e.condition = LengthCondition::parse("n=" + std::to_string(n));
      if (cell != "-") {
        e.value = parse_long(cell, "table2 cell");
      } else {
        // Empty cell: determined by a Table I row when one applies.
        for (std::size_t i = 0; i < table_one_end; ++i) {
          const auto& t = cat.entries_[i];
          if (starts_with(t.tag, "I:") && t.composition == comp && t.condition.holds(n)) {
            e.value = t.size.evaluate(n);
            e.remark = "from " + t.tag;
          }
        }
        if (!e.value) continue;
      }
      cat.entries_.push_back(std::move(e));
    }
  }
  for (auto line : data_lines(table3)) {
    const auto f = split(line, '|');
    if (f.size() != 3) throw InvalidInput("table3: expected 'composition | N | lower,upper'");
    CatalogEntry e;
    e.composition = Partition::parse(f[0]);
    e.tag = "III:" + e.composition.to_string();
    e.kind = EntryKind::TableValue;
    e.q = static_cast<int>(e.composition.size()) + 1;
    e.n_text = std::string(f[1]);
    const auto b = split(f[2], ',');
    if (b.size() != 2) throw InvalidInput("table3: bounds must be 'lower,upper'");
    e.bounds = std::pair{parse_long(b[0], "lower bound"), parse_long(b[1], "upper bound")};
    cat.entries_.push_back(std::move(e));
  }

  std::map<std::string, int> seen;
  for (const auto& e : cat.entries_) {
    if (seen[e.tag]++ > 0) throw InvalidInput("catalog: duplicate tag " + e.tag);
  }
  return cat;
}

const Catalog& Catalog::embedded() {
  static const Catalog cat = parse(embedded_file("catalog/index.txt"), embedded_file("catalog/table2.txt"),
                                   embedded_file("catalog/table3.txt"), &embedded_catalog_file);
  return cat;
}

const CatalogEntry& Catalog::lookup(std::string_view tag) const {
  for (const auto& e : entries_) {
    if (e.tag == tag) return e;
  }
  throw NotFound("catalog: no entry '" + std::string(tag) + "'");
}

std::vector<const CatalogEntry*> Catalog::list(std::string_view prefix) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_) {
    if (starts_with(e.tag, prefix)) out.push_back(&e);
  }
  return out;
}

Code develop_table_base(const CatalogEntry& e, long n) {
  if (e.kind != EntryKind::BaseCodeword) throw InvalidInput(e.tag + " is not a base codeword entry");
  if (!e.condition.holds(n)) throw InvalidInput(e.tag + " does not admit n=" + std::to_string(n));
  const long w1 = e.composition.largest();
  const long whole = n / w1 * w1;
  Code code;
  if (n % w1 != 0 && e.condition.holds(whole)) {
    code = lengthen(develop({{Codeword::from_digits(e.base, e.q, static_cast<int>(whole))}, static_cast<int>(w1)}),
                    static_cast<int>(n - whole));
  } else {
    const Codeword g = Codeword::from_digits(e.base, e.q, static_cast<int>(n));
    std::vector<Codeword> words;
    for (long i = 0; i < n / w1; ++i) words.push_back(g.shifted(w1 * i));
    code = Code(e.q, static_cast<int>(n), std::move(words));
  }
  code.declared_distance = 2 * e.composition.sum() - 1;
  code.declared_composition = e.composition;
  return code;
}

Code Catalog::materialize(std::string_view tag, std::optional<long> n) const {
  const auto& e = lookup(tag);
  long length = 0;
  if (n) {
    length = *n;
  } else if (const auto only = e.condition.exact()) {
    length = *only;
  } else {
    throw InvalidInput(e.tag + " needs a length (" + e.condition.to_string() + ")");
  }
  std::vector<std::string> stack;
  return materialize_at(e, length, stack);
}

Code Catalog::materialize_at(const CatalogEntry& e, long n, std::vector<std::string>& stack) const {
  if (std::find(stack.begin(), stack.end(), e.tag) != stack.end()) {
    throw InvalidInput("catalog: cyclic derivation through " + e.tag);
  }
  if (!e.condition.holds(n)) throw InvalidInput(e.tag + " does not admit n=" + std::to_string(n));
  stack.push_back(e.tag);
  Code code;
  switch (e.kind) {
    case EntryKind::BaseCodeword:
      code = develop_table_base(e, n);
      break;
    case EntryKind::ExplicitCode: {
      if (!read_file_) throw InvalidInput("catalog: no file reader");
      code = read_code(read_file_(e.file));
      if (code.length() != n) throw InvalidInput(e.file + " has length " + std::to_string(code.length()));
      break;
    }
    case EntryKind::Derivation: {
      const auto& src = lookup(e.source_tag);
      long src_n = e.source_n ? *e.source_n : src.condition.exact().value_or(n);
      if (e.derivation == Derivation::Shorten && !e.source_n && !src.condition.exact()) src_n = n + 1;
      const Code source = materialize_at(src, src_n, stack);
      if (e.derivation == Derivation::Lengthen) {
        if (src_n > n) throw InvalidInput(e.tag + ": cannot lengthen from n=" + std::to_string(src_n));
        code = lengthen(source, static_cast<int>(n - src_n));
      } else if (e.derivation == Derivation::Shorten) {
        if (src_n != n + 1) throw InvalidInput(e.tag + ": shortening source must have length n+1");
        // Largest position that keeps the claimed size.
        const long want = e.size.evaluate(n);
        bool done = false;
        for (int pos = source.length() - 1; pos >= 0 && !done; --pos) {
          Code candidate = shorten(source, pos);
          if (static_cast<long>(candidate.size()) == want) {
            code = std::move(candidate);
            done = true;
          }
        }
        if (!done) throw InvalidInput(e.tag + ": no shortening position gives size " + std::to_string(want));
      } else {
        if (src_n != n) throw InvalidInput(e.tag + ": refinement source must have the same length");
        const auto witness = refinement_witness(e.composition, src.composition);
        if (!witness) {
          throw InvalidInput(e.tag + ": " + e.composition.to_string() + " does not refine " +
                             src.composition.to_string());
        }
        code = refine_code(source, e.composition, *witness);
      }
      break;
    }
    case EntryKind::TableValue:
      throw InvalidInput(e.tag + " is a table value, not a code");
  }
  stack.pop_back();
  code.declared_distance = 2 * e.composition.sum() - 1;
  code.declared_composition = e.composition;
  return code;
}

std::optional<long> Catalog::known_size(const Partition& composition, long n) const {
  const std::string tag = "II:" + std::to_string(n) + ":" + composition.to_string();
  for (const auto& e : entries_) {
    if (e.tag == tag) return e.value;
  }
  for (const auto& e : entries_) {
    if (starts_with(e.tag, "I:") && e.composition == composition && e.condition.holds(n)) return e.size.evaluate(n);
  }
  return std::nullopt;
}

std::pair<long, long> implied_nccc(const Catalog& catalog, const Partition& composition) {
  long threshold = -1;  // least K over Table I clauses n>=K
  for (const auto* e : catalog.list("I:")) {
    if (e->composition != composition) continue;
    for (const auto& c : e->condition.clauses()) {
      if (c.at_least) threshold = threshold < 0 ? c.n : std::min(threshold, c.n);
    }
  }
  if (threshold < 0) throw NotFound("no Table I row for " + composition.to_string());
  const long w1 = composition.largest();
  long hi = threshold;
  bool contiguous = true;
  long lo = 1;
  for (long n = threshold - 1; n >= 1; --n) {
    const auto v = catalog.known_size(composition, n);
    const bool matches = v && *v == n / w1;
    if (contiguous && matches) {
      hi = n;
    } else {
      contiguous = false;
    }
    if (v && !matches) {
      lo = n + 1;
      break;
    }
  }
  lo = std::max(lo, nccc_bounds(composition).first);
  return {lo, std::max(lo, hi)};
}

namespace {

class Checker {
 public:
  explicit Checker(CatalogReport& report) : r_(report) {}

  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) r_.failures.push_back(what);
  }

  void check_code(const std::string& what, const Code& code, const CatalogEntry& e, long n, bool exact_distance) {
    const auto rep = verify_code(code);
    const long want = e.size.evaluate(n);
    const int d = 2 * e.composition.sum() - 1;
    expect(static_cast<long>(rep.size) == want,
           what + ": size " + std::to_string(rep.size) + ", expected " + std::to_string(want));
    expect(rep.constant_composition && *rep.constant_composition == e.composition,
           what + ": composition is not " + e.composition.to_string());
    expect(code.q() == e.q, what + ": alphabet " + std::to_string(code.q()) + ", expected " + std::to_string(e.q));
    if (exact_distance && rep.size > 1) {
      expect(rep.min_distance == d, what + ": distance " + std::to_string(rep.min_distance.value_or(-1)) +
                                        ", expected exactly " + std::to_string(d));
    } else {
      expect(rep.distance_at_least(d), what + ": distance " + std::to_string(rep.min_distance.value_or(-1)) +
                                           " below " + std::to_string(d));
    }
  }

 private:
  CatalogReport& r_;
};

}  // namespace

CatalogReport verify_catalog(const Catalog& catalog) {
  CatalogReport report;
  Checker check(report);
  auto guarded = [&](const std::string& what, auto&& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      check.expect(false, what + ": " + ex.what());
    }
  };

  for (const auto* e : catalog.list("I:")) {
    guarded(e->tag, [&] {
      const auto base = Codeword::from_digits(e->base, e->q, static_cast<int>(e->base.size()));
      check.expect(composition_of(base) == e->composition, e->tag + ": base composition mismatch");
      const long w1 = e->composition.largest();
      std::vector<long> lengths;
      for (const auto& c : e->condition.clauses()) {
        lengths.push_back(c.n);
        if (c.at_least) {
          lengths.push_back(c.n + w1);
          lengths.push_back(c.n + 5 * w1);
        }
      }
      for (long n : lengths) {
        check.check_code(e->tag + " at n=" + std::to_string(n), develop_table_base(*e, n), *e, n, true);
      }
      // Refined rows must be reproduced by the refinement rule bit-exactly.
      if (starts_with(e->remark, "refines ")) {
        const auto& coarse = catalog.lookup(e->remark.substr(8));
        const long n = static_cast<long>(std::max(coarse.base.size(), e->base.size()));
        const Code source(coarse.q, static_cast<int>(n), {Codeword::from_digits(coarse.base, coarse.q, static_cast<int>(n))});
        const auto witness = refinement_witness(e->composition, coarse.composition);
        check.expect(witness.has_value(), e->tag + ": does not refine " + coarse.tag);
        if (witness) {
          const auto refined = refine_code(source, e->composition, *witness);
          check.expect(refined.words().front() == Codeword::from_digits(e->base, e->q, static_cast<int>(n)),
                       e->tag + ": refining " + coarse.tag + " gives " + refined.words().front().to_string());
        }
      }
    });
  }

  for (const auto* e : catalog.list("A:")) {
    guarded(e->tag, [&] {
      const long n = e->condition.exact().value();
      const Code code = catalog.materialize(e->tag);
      check.check_code(e->tag, code, *e, n, false);
      if (e->kind == EntryKind::ExplicitCode) {
        const auto listed = read_code(embedded_file("catalog/" + e->file));
        check.expect(listed.declared_composition == e->composition && listed.declared_distance &&
                         *listed.declared_distance == 2 * e->composition.sum() - 1,
                     e->tag + ": listing header disagrees with the index");
      }
      const auto table = catalog.known_size(e->composition, n);
      check.expect(table && *table == e->size.evaluate(n), e->tag + ": Table II gives " +
                                                                (table ? std::to_string(*table) : std::string("nothing")));
    });
  }

  for (const auto* e : catalog.list("II:")) {
    guarded(e->tag, [&] {
      const long n = e->condition.exact().value();
      const int d = 2 * e->composition.sum() - 1;
      const long johnson = johnson_ccc(static_cast<int>(n), d, e->composition);
      const long trivial = trivial_upper(static_cast<int>(n), e->composition).value;
      check.expect(*e->value <= std::min(johnson, trivial),
                   e->tag + ": value " + std::to_string(*e->value) + " exceeds the upper bound " +
                       std::to_string(std::min(johnson, trivial)));
    });
  }

  for (const auto* e : catalog.list("III:")) {
    guarded(e->tag, [&] {
      const auto b = nccc_bounds(e->composition);
      check.expect(b == *e->bounds, e->tag + ": bounds [" + std::to_string(b.first) + "," +
                                        std::to_string(b.second) + "] differ from the printed [" +
                                        std::to_string(e->bounds->first) + "," + std::to_string(e->bounds->second) + "]");
      const auto [lo, hi] = implied_nccc(catalog, e->composition);
      const std::string implied = lo == hi ? std::to_string(lo) : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
      if (implied != e->n_text) {
        report.inconsistencies.push_back(e->tag + ": printed N=" + e->n_text + " but Tables I and II imply " + implied);
      }
    });
  }
  return report;
}

}  // namespace qcc
