#include "qcc/codes.hpp"

#include <algorithm>
#include <set>

#include "qcc/errors.hpp"

namespace qcc {

Codeword::Codeword(int q, std::vector<int> symbols) : q_(q), symbols_(std::move(symbols)) {
  if (q_ < 2) throw InvalidInput("alphabet size must be at least 2");
  for (int s : symbols_) {
    if (s < 0 || s >= q_) {
      throw InvalidInput("symbol " + std::to_string(s) + " outside alphabet of size " +
                         std::to_string(q_));
    }
  }
}

Codeword Codeword::from_digits(std::string_view digits, int q, int n) {
  if (n != 0 && static_cast<int>(digits.size()) > n) {
    throw InvalidInput("codeword '" + std::string(digits) + "' longer than " + std::to_string(n));
  }
  std::vector<int> symbols;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidInput("non-digit in codeword '" + std::string(digits) + "'");
    symbols.push_back(c - '0');
  }
  if (n != 0) symbols.resize(static_cast<std::size_t>(n), 0);
  return Codeword(q, std::move(symbols));
}

int Codeword::weight() const {
  return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(), [](int s) { return s != 0; }));
}

std::vector<int> Codeword::support() const {
  std::vector<int> result;
  for (std::size_t x = 0; x < symbols_.size(); ++x) {
    if (symbols_[x] != 0) result.push_back(static_cast<int>(x));
  }
  return result;
}

Codeword Codeword::shifted(long k) const {
  const long n = length();
  std::vector<int> out(symbols_.size());
  if (n == 0) return *this;
  const long offset = ((k % n) + n) % n;
  for (long x = 0; x < n; ++x) out[static_cast<std::size_t>((x + offset) % n)] = symbols_[static_cast<std::size_t>(x)];
  return Codeword(q_, std::move(out));
}

std::string Codeword::to_string() const {
  std::string out;
  for (std::size_t x = 0; x < symbols_.size(); ++x) {
    if (q_ <= 10) {
      out += static_cast<char>('0' + symbols_[x]);
    } else {
      if (x > 0) out += ',';
      out += std::to_string(symbols_[x]);
    }
  }
  return out;
}

int hamming_distance(const Codeword& u, const Codeword& v) {
  if (u.q() != v.q() || u.length() != v.length()) {
    throw InvalidInput("hamming_distance: codewords differ in length or alphabet");
  }
  int d = 0;
  for (std::size_t x = 0; x < u.symbols().size(); ++x) d += u[x] != v[x];
  return d;
}

std::vector<int> symbol_counts(const Codeword& u) {
  std::vector<int> counts(static_cast<std::size_t>(u.q()), 0);
  for (int s : u.symbols()) ++counts[static_cast<std::size_t>(s)];
  counts.erase(counts.begin());
  return counts;
}

Partition composition_of(const Codeword& u) { return Partition::from_counts(symbol_counts(u)); }

Code::Code(int q, int n, std::vector<Codeword> words) : q_(q), n_(n), words_(std::move(words)) {
  if (q_ < 2 || n_ < 0) throw InvalidInput("code needs q >= 2 and n >= 0");
  for (const auto& w : words_) {
    if (w.q() != q_ || w.length() != n_) {
      throw InvalidInput("codeword " + w.to_string() + " does not match q=" + std::to_string(q_) +
                         " n=" + std::to_string(n_));
    }
  }
  std::vector<const Codeword*> sorted;
  for (const auto& w : words_) sorted.push_back(&w);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i] == *sorted[i - 1]) {
      throw InvalidInput("duplicate codeword " + sorted[i]->to_string());
    }
  }
}

bool Code::same_words(const Code& other) const {
  if (q_ != other.q_ || n_ != other.n_ || size() != other.size()) return false;
  auto a = words_;
  auto b = other.words_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Code develop(const BaseCodewordSet& set) {
  if (set.bases.empty()) throw InvalidInput("develop: no base codewords");
  const int n = set.length();
  const int q = set.bases.front().q();
  if (set.shift < 1 || n % set.shift != 0) {
    throw InvalidInput("develop: shift " + std::to_string(set.shift) + " does not divide n=" +
                       std::to_string(n));
  }
  std::vector<Codeword> words;
  std::set<Codeword> seen;
  for (const auto& base : set.bases) {
    if (base.length() != n || base.q() != q) throw InvalidInput("develop: bases differ in shape");
    for (int i = 0; i < n / set.shift; ++i) {
      Codeword w = base.shifted(static_cast<long>(set.shift) * i);
      if (!seen.insert(w).second) {
        throw DegenerateBase("develop: shift " + std::to_string(set.shift * i) + " of base " +
                             base.to_string() + " repeats a codeword");
      }
      words.push_back(std::move(w));
    }
  }
  return Code(q, n, std::move(words));
}

namespace {

struct SparseWord {
  std::vector<std::pair<int, int>> entries;  // (position, symbol), ascending position
};

SparseWord sparse(const Codeword& w) {
  SparseWord s;
  for (std::size_t x = 0; x < w.symbols().size(); ++x) {
    if (w[x] != 0) s.entries.emplace_back(static_cast<int>(x), w[x]);
  }
  return s;
}

struct Overlap {
  int common = 0;        // |supp u ∩ supp v|
  int equal_symbol = 0;  // common positions carrying the same symbol
};

Overlap overlap(const SparseWord& u, const SparseWord& v) {
  Overlap o;
  auto a = u.entries.begin();
  auto b = v.entries.begin();
  while (a != u.entries.end() && b != v.entries.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      ++o.common;
      o.equal_symbol += a->second == b->second;
      ++a;
      ++b;
    }
  }
  return o;
}

}  // namespace

CodeReport verify_code(const Code& code) {
  CodeReport report;
  report.size = code.size();
  if (code.size() == 0) return report;

  std::vector<SparseWord> words;
  words.reserve(code.size());
  for (const auto& w : code) words.push_back(sparse(w));

  const Codeword& first = code.words().front();
  const auto counts = symbol_counts(first);
  bool same_weight = true;
  bool same_comp = true;
  for (const auto& w : code) {
    same_weight = same_weight && w.weight() == first.weight();
    same_comp = same_comp && symbol_counts(w) == counts;
  }
  if (same_weight) report.constant_weight = first.weight();
  if (same_comp) report.constant_composition = Partition::from_counts(counts);

  bool c1 = true;
  bool c2 = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const int wi = static_cast<int>(words[i].entries.size());
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const int wj = static_cast<int>(words[j].entries.size());
      const Overlap o = overlap(words[i], words[j]);
      const int d = wi + wj - o.common - o.equal_symbol;
      if (!report.min_distance || d < *report.min_distance) report.min_distance = d;
      c1 = c1 && o.common <= 1;
      c2 = c2 && o.equal_symbol == 0;
    }
  }
  if (same_weight) {
    report.supports_meet_at_most_once = c1;
    report.shared_positions_differ = c2;
  }
  return report;
}

Code lengthen(const Code& code, int extra) {
  if (extra < 0) throw InvalidInput("lengthen: negative extension");
  std::vector<Codeword> words;
  for (const auto& w : code) {
    auto symbols = w.symbols();
    symbols.resize(symbols.size() + static_cast<std::size_t>(extra), 0);
    words.emplace_back(code.q(), std::move(symbols));
  }
  Code out(code.q(), code.length() + extra, std::move(words));
  out.declared_distance = code.declared_distance;
  out.declared_composition = code.declared_composition;
  return out;
}

Code shorten(const Code& code, int pos) {
  if (pos < 0 || pos >= code.length()) throw InvalidInput("shorten: position out of range");
  std::vector<Codeword> words;
  for (const auto& w : code) {
    if (w[static_cast<std::size_t>(pos)] != 0) continue;
    auto symbols = w.symbols();
    symbols.erase(symbols.begin() + pos);
    words.emplace_back(code.q(), std::move(symbols));
  }
  Code out(code.q(), code.length() - 1, std::move(words));
  out.declared_distance = code.declared_distance;
  out.declared_composition = code.declared_composition;
  return out;
}

Code refine_code(const Code& code, const Partition& target, const RefinementWitness& witness) {
  if (code.size() == 0) throw InvalidInput("refine_code: empty code");
  const Partition coarse = composition_of(code.words().front());
  if (witness.size() != coarse.size()) {
    throw InvalidInput("refine_code: witness has " + std::to_string(witness.size()) +
                       " groups for composition " + coarse.to_string());
  }
  std::vector<bool> covered(target.size(), false);
  for (std::size_t j = 0; j < witness.size(); ++j) {
    int total = 0;
    for (std::size_t t : witness[j]) {
      if (t >= target.size() || covered[t]) throw InvalidInput("refine_code: malformed witness");
      covered[t] = true;
      total += target[t];
    }
    if (total != coarse[j] || !std::is_sorted(witness[j].begin(), witness[j].end())) {
      throw InvalidInput("refine_code: witness group " + std::to_string(j + 1) +
                         " does not sum to coarse part " + std::to_string(coarse[j]));
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw InvalidInput("refine_code: witness leaves target parts uncovered");
  }

  const int q = static_cast<int>(target.size()) + 1;
  std::vector<Codeword> words;
  for (const auto& w : code) {
    std::vector<int> counts(coarse.size() + 1, 0);
    for (int s : w.symbols()) ++counts[static_cast<std::size_t>(s)];
    for (std::size_t s = 1; s <= coarse.size(); ++s) {
      if (counts[s] != coarse[s - 1]) {
        throw InvalidInput("refine_code: codeword " + w.to_string() +
                           " does not use the canonical labeling of " + coarse.to_string());
      }
    }
    std::vector<int> seen(coarse.size() + 1, 0);
    std::vector<int> out(w.symbols().size(), 0);
    for (std::size_t x = 0; x < out.size(); ++x) {
      const int s = w[x];
      if (s == 0) continue;
      // Walk the group of coarse part s until the occurrence index fits.
      int k = seen[static_cast<std::size_t>(s)]++;
      for (std::size_t t : witness[static_cast<std::size_t>(s) - 1]) {
        if (k < target[t]) {
          out[x] = static_cast<int>(t) + 1;
          break;
        }
        k -= target[t];
      }
    }
    words.emplace_back(q, std::move(out));
  }
  Code result(q, code.length(), std::move(words));
  result.declared_distance = code.declared_distance;
  result.declared_composition = target;
  return result;
}

}  // namespace qcc
