#include "qcc/conditions.hpp"

#include "qcc/errors.hpp"

namespace qcc {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

class Collector {
 public:
  explicit Collector(ConditionReport& report) : report_(report) {}

  void add(std::string condition, int i, int j, std::vector<int> positions) {
    report_.passed = false;
    ++report_.violation_count;
    if (report_.violations.size() < kMaxListedViolations) {
      report_.violations.push_back({std::move(condition), i, j, std::move(positions)});
    }
  }

 private:
  ConditionReport& report_;
};

void check_lengths(const std::vector<Codeword>& bases, int ell) {
  if (bases.empty()) throw InvalidInput("no base codewords to check");
  const int n = bases.front().length();
  for (const auto& g : bases) {
    if (g.length() != n) throw InvalidInput("base codewords differ in length");
  }
  if (ell < 1 || n % ell != 0) {
    throw InvalidInput("shift " + std::to_string(ell) + " does not divide n=" + std::to_string(n));
  }
}

// Pair conditions shared by both families. `same` marks i == j, where the
// two pairs must differ as sets.
void check_pairs(const std::vector<int>& si, const std::vector<int>& sj, bool same, long ell, long n,
                 const std::string& tag, int i, int j, Collector& out) {
  for (int w : si) {
    for (int x : si) {
      if (w == x) continue;
      for (int y : sj) {
        if (mod(y - w, ell) != 0) continue;
        for (int z : sj) {
          if (y == z) continue;
          if (same && ((w == y && x == z) || (w == z && x == y))) continue;
          if (mod(x - w, n) == mod(z - y, n)) out.add(tag + "b", i, j, {w, x, y, z});
        }
      }
    }
  }
}

void check_half_turn(const std::vector<int>& s, long ell, long n, const std::string& tag, int i,
                     Collector& out) {
  for (int w : s) {
    for (int x : s) {
      if (w == x || mod(x - w, ell) != 0) continue;
      if (mod(2L * (x - w), n) == 0) out.add(tag + "a", i, i, {w, x});
    }
  }
}

}  // namespace

std::string ConditionReport::summary() const {
  if (passed) return "pass";
  std::string out = "fail (" + std::to_string(violation_count) + " violations)";
  for (const auto& v : violations) {
    out += "\n  " + v.condition + " bases " + std::to_string(v.base_i + 1) + "," +
           std::to_string(v.base_j + 1) + " at";
    for (int p : v.positions) out += " " + std::to_string(p);
  }
  return out;
}

ConditionReport check_base_ccc(const Codeword& g, int w1) {
  check_lengths({g}, w1);
  ConditionReport report;
  Collector out(report);
  const long n = g.length();
  const auto s = g.support();
  check_half_turn(s, w1, n, "C3", 0, out);
  check_pairs(s, s, true, w1, n, "C3", 0, 0, out);
  for (int x : s) {
    for (int y : s) {
      if (x < y && g[static_cast<std::size_t>(x)] == g[static_cast<std::size_t>(y)] &&
          mod(x - y, w1) == 0) {
        out.add("C4", 0, 0, {x, y});
      }
    }
  }
  return report;
}

ConditionReport check_bases_cwc(const std::vector<Codeword>& bases, int ell) {
  check_lengths(bases, ell);
  ConditionReport report;
  Collector out(report);
  const long n = bases.front().length();
  std::vector<std::vector<int>> supports;
  for (const auto& g : bases) supports.push_back(g.support());
  const int m = static_cast<int>(bases.size());

  for (int i = 0; i < m; ++i) check_half_turn(supports[i], ell, n, "C5", i, out);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) check_pairs(supports[i], supports[j], i == j, ell, n, "C5", i, j, out);
  }
  for (int i = 0; i < m; ++i) {
    const auto& gi = bases[static_cast<std::size_t>(i)];
    for (int j = i; j < m; ++j) {
      const auto& gj = bases[static_cast<std::size_t>(j)];
      for (int z : supports[i]) {
        for (int y : supports[j]) {
          if (i == j && z >= y) continue;
          if (gi[static_cast<std::size_t>(z)] != gj[static_cast<std::size_t>(y)]) continue;
          if (mod(z - y, ell) == 0) out.add(i == j ? "C6" : "C7", i, j, {z, y});
        }
      }
    }
  }
  return report;
}

}  // namespace qcc
