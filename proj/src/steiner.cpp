#include "qcc/steiner.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qcc/errors.hpp"

namespace qcc {

namespace {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Calls f on every t-subset of `items`.
template <class F>
void for_each_subset(const std::vector<Point>& items, int t, F&& f) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(t));
  std::vector<Point> chosen(static_cast<std::size_t>(t));
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == idx.size()) {
      f(chosen);
      return;
    }
    for (std::size_t i = start; i + (idx.size() - depth) <= items.size(); ++i) {
      chosen[depth] = items[i];
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

long gs_block_count(int n, int q, int w, int t) {
  const long num = ipow(q, t) * binomial(n, t);
  const long den = binomial(w, t);
  if (den == 0 || num % den != 0) return -1;
  return num / den;
}

GSReport verify_gs(const GSDesign& d) {
  if (d.n < 1 || d.q < 1 || d.w < 1 || d.t < 0 || d.t > d.w) {
    throw InvalidInput("design parameters out of range");
  }
  GSReport r;
  r.expected_blocks = gs_block_count(d.n, d.q, d.w, d.t);
  r.block_count_ok = r.expected_blocks >= 0 && static_cast<long>(d.blocks.size()) == r.expected_blocks;
  if (!r.block_count_ok) {
    r.problems.push_back("block count " + std::to_string(d.blocks.size()) + ", expected " +
                         std::to_string(r.expected_blocks));
  }
  r.uniform = true;
  r.transverse = true;
  std::map<std::vector<Point>, long> coverage;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    auto block = d.blocks[b];
    for (const auto& [g, j] : block) {
      if (g < 1 || g > d.n || j < 1 || j > d.q) {
        throw InvalidInput("block " + std::to_string(b + 1) + " has point " + std::to_string(g) +
                           ":" + std::to_string(j) + " outside the point set");
      }
    }
    std::sort(block.begin(), block.end());
    if (static_cast<int>(block.size()) != d.w) {
      r.uniform = false;
      r.problems.push_back("block " + std::to_string(b + 1) + " has " + std::to_string(block.size()) +
                           " points");
    }
    bool ok = true;
    for (std::size_t i = 1; i < block.size(); ++i) ok = ok && block[i].first != block[i - 1].first;
    if (!ok) {
      r.transverse = false;
      r.problems.push_back("block " + std::to_string(b + 1) + " meets a group twice");
      continue;
    }
    for_each_subset(block, d.t, [&](const std::vector<Point>& s) { ++coverage[s]; });
  }
  const long transversals = ipow(d.q, d.t) * binomial(d.n, d.t);
  for (const auto& [s, count] : coverage) {
    if (count > 1) ++r.multiply_covered;
  }
  r.uncovered = transversals - static_cast<long>(coverage.size());
  if (r.uncovered > 0) r.problems.push_back(std::to_string(r.uncovered) + " t-transverses uncovered");
  if (r.multiply_covered > 0) {
    r.problems.push_back(std::to_string(r.multiply_covered) + " t-transverses covered more than once");
  }
  r.valid = r.block_count_ok && r.uniform && r.transverse && r.uncovered == 0 && r.multiply_covered == 0;
  return r;
}

GSDesign code_to_gs(const Code& code, int t) {
  const auto report = verify_code(code);
  if (!report.constant_weight) throw NotASteinerSystem("code is not constant-weight");
  const int w = *report.constant_weight;
  const int q = code.q() - 1;
  const long expected = gs_block_count(code.length(), q, w, t);
  if (expected < 0 || static_cast<long>(code.size()) != expected) {
    throw NotASteinerSystem("code has " + std::to_string(code.size()) + " codewords, a GS(" +
                            std::to_string(t) + "," + std::to_string(w) + "," +
                            std::to_string(code.length()) + "," + std::to_string(q) + ") needs " +
                            std::to_string(expected));
  }
  if (!report.distance_at_least(2 * (w - t) + 1)) {
    throw DistanceTooSmall("code distance " + std::to_string(*report.min_distance) + " below " +
                           std::to_string(2 * (w - t) + 1));
  }
  GSDesign d{code.length(), q, w, t, {}};
  for (const auto& u : code) {
    Block b;
    for (int x : u.support()) b.emplace_back(x + 1, u[static_cast<std::size_t>(x)]);
    d.blocks.push_back(std::move(b));
  }
  return d;
}

Code gs_to_code(const GSDesign& d) {
  const auto report = verify_gs(d);
  if (!report.valid) throw InvalidInput("not a generalized Steiner system: " + report.problems.front());
  std::vector<Codeword> words;
  for (const auto& b : d.blocks) {
    std::vector<int> u(static_cast<std::size_t>(d.n), 0);
    for (const auto& [g, j] : b) u[static_cast<std::size_t>(g - 1)] = j;
    words.emplace_back(d.q + 1, std::move(u));
  }
  Code code(d.q + 1, d.n, std::move(words));
  code.declared_distance = 2 * (d.w - d.t) + 1;
  return code;
}

std::string write_gs(const GSDesign& d) {
  std::string out = std::to_string(d.n) + " " + std::to_string(d.q) + " " + std::to_string(d.w) + " " +
                    std::to_string(d.t) + "\n";
  for (const auto& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(b[i].first) + ":" + std::to_string(b[i].second);
    }
    out += '\n';
  }
  return out;
}

GSDesign read_gs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  GSDesign d;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') {
      continue;
    }
    std::istringstream fields(line);
    if (!header) {
      if (!(fields >> d.n >> d.q >> d.w >> d.t)) throw InvalidInput("design header must be 'n q w t'");
      header = true;
      continue;
    }
    Block b;
    std::string token;
    while (fields >> token) {
      const auto colon = token.find(':');
      if (colon == std::string::npos) throw InvalidInput("point '" + token + "' is not i:j");
      int g = 0;
      int j = 0;
      try {
        std::size_t used_i = 0;
        std::size_t used_j = 0;
        g = std::stoi(token.substr(0, colon), &used_i);
        j = std::stoi(token.substr(colon + 1), &used_j);
        if (used_i != colon || used_j != token.size() - colon - 1) throw std::invalid_argument(token);
      } catch (const std::logic_error&) {
        throw InvalidInput("point '" + token + "' is not i:j");
      }
      if (g < 1 || g > d.n || j < 1 || j > d.q) {
        throw InvalidInput("point '" + token + "' lies outside [" + std::to_string(d.n) + "] x [" +
                           std::to_string(d.q) + "]");
      }
      b.emplace_back(g, j);
    }
    d.blocks.push_back(std::move(b));
  }
  if (!header) throw InvalidInput("missing design header");
  return d;
}

}  // namespace qcc
