// qcc: command-line front end for the construction and verification library.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failed, 3 search
// target missed.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "qcc/arrays.hpp"
#include "qcc/bounds.hpp"
#include "qcc/catalog.hpp"
#include "qcc/code_io.hpp"
#include "qcc/codes.hpp"
#include "qcc/construct.hpp"
#include "qcc/errors.hpp"
#include "qcc/rulers.hpp"
#include "qcc/search.hpp"
#include "qcc/steiner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kFailed = 2;
constexpr int kMissed = 3;

struct Flags {
  std::string comp;
  int q = 0;
  int n = 0;
  int w = 0;
  int d = 0;
  int t = 1;
  int marks = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000;
  std::size_t target = 0;
  int lanes = 1;
  int threads = 1;
  int scope_cap = 0;
  std::string out;
  std::string file;
  std::string tag;
  std::string prefix;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qcc::InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty() || f.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream o(f.out, std::ios::binary);
  if (!o) throw qcc::InvalidInput("cannot write " + f.out);
  o << text;
}

qcc::Partition need_comp(const Flags& f) {
  if (f.comp.empty()) throw qcc::InvalidInput("--comp is required");
  return qcc::Partition::parse(f.comp);
}

void need(bool present, const char* what) {
  if (!present) throw qcc::InvalidInput(std::string(what) + " is required");
}

std::string describe(const qcc::CodeReport& r) {
  std::ostringstream s;
  s << "size=" << r.size << " d=";
  if (r.min_distance) s << *r.min_distance; else s << "inf";
  if (r.constant_weight) s << " w=" << *r.constant_weight;
  if (r.constant_composition) s << " comp=" << r.constant_composition->to_string();
  return s.str();
}

int cmd_bound_ccc(const Flags& f) {
  const auto comp = need_comp(f);
  need(f.n > 0 && f.d > 0, "--n and --d");
  const long johnson = qcc::johnson_ccc(f.n, f.d, comp);
  if (f.d != 2 * comp.sum() - 1) {
    std::cout << "johnson=" << johnson << " min=" << johnson << "\n";
    return kOk;
  }
  const auto trivial = qcc::trivial_upper(f.n, comp);
  std::cout << "johnson=" << johnson << " trivial=" << trivial.value << " min=" << std::min(johnson, trivial.value)
            << "\n";
  return kOk;
}

int cmd_bound_cwc(const Flags& f) {
  need(f.n > 0 && f.d > 0 && f.w > 0 && f.q > 1, "--n, --d, --w and --q");
  const long johnson = qcc::johnson_cwc(f.n, f.d, f.w, f.q);
  const auto th = qcc::cwc_thresholds(f.q, f.w);
  std::cout << "johnson=" << johnson << " etzion=" << th.etzion << " direct=" << th.direct
            << " ncwc_upper=" << th.ncwc_upper << "\n";
  return kOk;
}

int cmd_construct_ccc(const Flags& f) {
  const auto comp = need_comp(f);
  need(f.n > 0, "--n");
  const int q = f.q ? f.q : static_cast<int>(comp.size()) + 1;
  emit(f, qcc::write_code(qcc::construct_optimal_ccc(comp, q, f.n)));
  return kOk;
}

int cmd_construct_cwc(const Flags& f) {
  need(f.n > 0 && f.w > 0 && f.q > 1, "--n, --w and --q");
  emit(f, qcc::write_code(qcc::construct_optimal_cwc(f.q, f.w, f.n)));
  return kOk;
}

int cmd_verify(const Flags& f) {
  need(!f.file.empty(), "--file");
  const auto code = qcc::read_code(slurp(f.file));
  const auto r = qcc::verify_code(code);
  std::cout << describe(r) << "\n";
  bool ok = true;
  const auto d = f.d ? std::optional<int>(f.d) : code.declared_distance;
  if (d && !r.distance_at_least(*d)) {
    std::cout << "FAIL: minimum distance below " << *d << "\n";
    ok = false;
  }
  const auto comp = !f.comp.empty() ? std::optional(qcc::Partition::parse(f.comp)) : code.declared_composition;
  if (comp && r.constant_composition != comp) {
    std::cout << "FAIL: not of constant composition " << comp->to_string() << "\n";
    ok = false;
  }
  if (f.w && r.constant_weight != f.w) {
    std::cout << "FAIL: not of constant weight " << f.w << "\n";
    ok = false;
  }
  if (f.q && code.q() != f.q) {
    std::cout << "FAIL: alphabet size " << code.q() << ", expected " << f.q << "\n";
    ok = false;
  }
  std::cout << (ok ? "verified\n" : "not verified\n");
  return ok ? kOk : kFailed;
}

int cmd_ruler(const Flags& f) {
  if (!f.file.empty()) {
    const auto set = qcc::gdts_from_json(slurp(f.file));
    const auto r = qcc::verify_gdts(set);
    std::cout << (r.valid ? "valid" : "invalid") << " scope=" << r.scope << " collisions=" << r.violations.size()
              << "\n";
    return r.valid ? kOk : kFailed;
  }
  need(f.marks > 0, "--marks or --file");
  const auto ruler = qcc::build_golomb_ruler(f.marks);
  emit(f, qcc::to_json(ruler) + "\n");
  std::cerr << "scope=" << ruler.scope() << " atkinson=" << qcc::atkinson_bound(f.marks)
            << (qcc::known_optimal_ruler(f.marks) ? " optimal" : " erdos-turan") << "\n";
  return kOk;
}

int cmd_gdts(const Flags& f) {
  if (!f.file.empty()) return cmd_ruler(f);
  const auto sizes = need_comp(f);
  const auto ruler = qcc::build_golomb_ruler(sizes.sum());
  const auto set = qcc::gdts_from_ruler(ruler.blocks.front(), sizes);
  emit(f, qcc::to_json(set) + "\n");
  std::cerr << "scope=" << set.scope() << "\n";
  return kOk;
}

int cmd_array(const Flags& f) {
  if (!f.file.empty()) {
    try {
      const auto a = qcc::array_from_json(slurp(f.file));
      std::cout << "valid shape=" << a.shape.to_string() << " scope=" << a.scope << "\n";
      return kOk;
    } catch (const qcc::InvalidInput& e) {
      std::cout << "invalid: " << e.what() << "\n";
      return kFailed;
    }
  }
  const auto shape = need_comp(f);
  std::optional<qcc::LambdaArray> a;
  if (f.scope_cap > 0) {
    a = qcc::min_scope_array(shape, f.scope_cap);
    if (!a) {
      std::cerr << "no array of scope <= " << f.scope_cap << "\n";
      return kMissed;
    }
  } else {
    a = qcc::array_for_partition(shape);
  }
  emit(f, qcc::to_json(*a) + "\n");
  std::cerr << "scope=" << a->scope << " threshold=" << 2 * a->scope + 1 << "\n";
  return kOk;
}

qcc::SearchSpec search_spec(const Flags& f) {
  need(f.n > 0 && f.d > 0, "--n and --d");
  qcc::SearchSpec spec;
  spec.n = f.n;
  spec.d = f.d;
  if (!f.comp.empty()) {
    const auto comp = qcc::Partition::parse(f.comp);
    spec.target = qcc::CompositionTarget{comp, f.q ? f.q : static_cast<int>(comp.size()) + 1};
  } else {
    need(f.w > 0 && f.q > 1, "--comp, or --w and --q");
    spec.target = qcc::WeightTarget{f.w, f.q};
  }
  spec.seed = f.seed;
  spec.budget = f.budget;
  if (f.target) spec.target_size = f.target;
  spec.validate();
  return spec;
}

int cmd_search_exact(const Flags& f) {
  const auto spec = search_spec(f);
  const auto r = qcc::exact_max_code(spec);
  emit(f, qcc::write_code(r.witness));
  std::cerr << "size=" << r.size << (r.optimal ? " optimal" : " budget-exhausted") << " nodes=" << r.nodes << "\n";
  return kOk;
}

int cmd_search_hill(const Flags& f) {
  auto spec = search_spec(f);
  if (!spec.target_size) spec.target_size = static_cast<std::size_t>(qcc::search_upper_bound(spec));
  qcc::HillOptions opt;
  opt.lanes = f.lanes;
  opt.threads = f.threads;
  const auto r = qcc::hill_climb(spec, opt);
  emit(f, qcc::write_code(r.code));
  const auto side = qcc::sidecar_line(spec, r) + "\n";
  if (!f.out.empty() && f.out != "-") {
    std::ofstream(f.out + ".meta") << side;
  }
  std::cerr << side;
  return r.found ? kOk : kMissed;
}

int cmd_catalog_list(const Flags& f) {
  for (const auto* e : qcc::Catalog::embedded().list(f.prefix)) std::cout << e->to_string() << "\n";
  return kOk;
}

int cmd_catalog_show(const Flags& f) {
  need(!f.tag.empty(), "--tag");
  const auto& cat = qcc::Catalog::embedded();
  const auto& e = cat.lookup(f.tag);
  std::cout << e.to_string() << "\n";
  if (e.kind == qcc::EntryKind::TableValue) return kOk;
  std::optional<long> n;
  if (f.n) n = f.n;
  if (!n && !e.condition.exact()) n = e.condition.minimal();
  emit(f, qcc::write_code(cat.materialize(f.tag, n)));
  return kOk;
}

int cmd_catalog_verify(const Flags&) {
  const auto r = qcc::verify_catalog();
  for (const auto& s : r.failures) std::cout << "FAIL " << s << "\n";
  for (const auto& s : r.inconsistencies) std::cout << "NOTE " << s << "\n";
  std::cout << r.checks << " checks, " << r.failures.size() << " failures, " << r.inconsistencies.size()
            << " table inconsistencies\n";
  return r.ok() ? kOk : kFailed;
}

int cmd_gs_from_code(const Flags& f) {
  need(!f.file.empty(), "--file");
  emit(f, qcc::write_gs(qcc::code_to_gs(qcc::read_code(slurp(f.file)), f.t)));
  return kOk;
}

int cmd_gs_to_code(const Flags& f) {
  need(!f.file.empty(), "--file");
  emit(f, qcc::write_code(qcc::gs_to_code(qcc::read_gs(slurp(f.file)))));
  return kOk;
}

int cmd_gs_verify(const Flags& f) {
  need(!f.file.empty(), "--file");
  const auto r = qcc::verify_gs(qcc::read_gs(slurp(f.file)));
  for (const auto& p : r.problems) std::cout << p << "\n";
  std::cout << (r.valid ? "valid" : "invalid") << " blocks_expected=" << r.expected_blocks
            << " uncovered=" << r.uncovered << " multiply_covered=" << r.multiply_covered << "\n";
  return r.valid ? kOk : kFailed;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

int cmd_table_one(const Flags&) {
  const auto entries = qcc::Catalog::embedded().list("I:");
  std::size_t wc = 11, wb = 4, wn = 9;
  for (const auto* e : entries) {
    wc = std::max(wc, e->composition.to_string().size());
    wb = std::max(wb, e->base.size());
    wn = std::max(wn, e->condition.to_string().size());
  }
  std::cout << pad("composition", wc) << "  " << pad("base", wb) << "  " << pad("condition", wn) << "  size\n";
  for (const auto* e : entries) {
    std::cout << pad(e->composition.to_string(), wc) << "  " << pad(e->base, wb) << "  "
              << pad(e->condition.to_string(), wn) << "  " << e->size.to_string() << "\n";
  }
  return kOk;
}

int cmd_table_two(const Flags&) {
  // Printed cells only; cells left empty are the ones Table I determines.
  std::vector<std::string> order;
  std::map<std::string, std::map<long, long>> cells;
  for (const auto* e : qcc::Catalog::embedded().list("II:")) {
    const auto comp = e->composition.to_string();
    if (!cells.count(comp)) order.push_back(comp);
    auto& row = cells[comp];
    if (e->remark.empty()) row[*e->condition.exact()] = *e->value;
  }
  std::size_t wc = 11;
  for (const auto& c : order) wc = std::max(wc, c.size());
  std::cout << pad("composition", wc);
  for (long n = 6; n <= 32; ++n) std::cout << std::setw(4) << n;
  std::cout << "\n";
  for (const auto& c : order) {
    std::cout << pad(c, wc);
    for (long n = 6; n <= 32; ++n) {
      const auto it = cells[c].find(n);
      std::cout << std::setw(4) << (it == cells[c].end() ? std::string() : std::to_string(it->second));
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_table_three(const Flags&) {
  const auto entries = qcc::Catalog::embedded().list("III:");
  std::size_t wc = 11;
  for (const auto* e : entries) wc = std::max(wc, e->composition.to_string().size());
  std::cout << pad("composition", wc) << "  " << pad("N", 8) << "  lower  upper\n";
  for (const auto* e : entries) {
    std::cout << pad(e->composition.to_string(), wc) << "  " << pad(e->n_text, 8) << "  "
              << std::setw(5) << e->bounds->first << "  " << std::setw(5) << e->bounds->second << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal constant-composition and constant-weight code toolkit"};
  app.require_subcommand(1);
  Flags f;
  int (*action)(const Flags&) = nullptr;

  auto on = [&](CLI::App* sub, int (*fn)(const Flags&)) {
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto comp = [&](CLI::App* s) { s->add_option("--comp", f.comp, "composition, comma-separated parts"); };
  auto qnwd = [&](CLI::App* s, bool w, bool d) {
    s->add_option("--q", f.q, "alphabet size");
    s->add_option("--n", f.n, "length");
    if (w) s->add_option("--w", f.w, "weight");
    if (d) s->add_option("--d", f.d, "minimum distance");
  };
  auto out = [&](CLI::App* s) { s->add_option("--out", f.out, "output path (default stdout)"); };
  auto file = [&](CLI::App* s) { s->add_option("--file", f.file, "input path"); };

  auto* bound = app.add_subcommand("bound", "upper bounds")->require_subcommand(1);
  {
    auto* s = on(bound->add_subcommand("ccc", "constant-composition bounds"), cmd_bound_ccc);
    comp(s);
    qnwd(s, false, true);
    s = on(bound->add_subcommand("cwc", "constant-weight bounds"), cmd_bound_cwc);
    qnwd(s, true, true);
  }
  auto* construct = app.add_subcommand("construct", "build an optimal code")->require_subcommand(1);
  {
    auto* s = on(construct->add_subcommand("ccc", "constant composition"), cmd_construct_ccc);
    comp(s);
    qnwd(s, false, false);
    out(s);
    s = on(construct->add_subcommand("cwc", "constant weight"), cmd_construct_cwc);
    qnwd(s, true, false);
    out(s);
  }
  {
    auto* s = on(app.add_subcommand("verify", "check a code file"), cmd_verify);
    file(s);
    comp(s);
    qnwd(s, true, true);
  }
  {
    auto* s = on(app.add_subcommand("ruler", "Golomb ruler, or verify a ruler/GDTS file"), cmd_ruler);
    s->add_option("--marks", f.marks, "number of marks");
    file(s);
    out(s);
    s = on(app.add_subcommand("gdts", "GDTS with block sizes --comp, or verify --file"), cmd_gdts);
    comp(s);
    file(s);
    out(s);
    s = on(app.add_subcommand("array", "lambda-array of shape --comp, or verify --file"), cmd_array);
    comp(s);
    s->add_option("--min-scope", f.scope_cap, "exhaustive minimum-scope search up to this scope");
    file(s);
    out(s);
  }
  auto* search = app.add_subcommand("search", "code search")->require_subcommand(1);
  {
    for (auto [name, fn] : {std::pair{"exact", cmd_search_exact}, std::pair{"hill", cmd_search_hill}}) {
      auto* s = on(search->add_subcommand(name, name == std::string("exact") ? "branch and bound" : "hill climbing"),
                   fn);
      comp(s);
      qnwd(s, true, true);
      s->add_option("--seed", f.seed, "random seed");
      s->add_option("--budget", f.budget, "node budget (exact) or step budget per lane (hill)");
      s->add_option("--target", f.target, "target size (hill; default the best upper bound)");
      s->add_option("--lanes", f.lanes, "independent restarts (hill)");
      s->add_option("--threads", f.threads, "worker threads (hill)");
      out(s);
    }
  }
  auto* catalog = app.add_subcommand("catalog", "embedded tables and listings")->require_subcommand(1);
  {
    auto* s = on(catalog->add_subcommand("list", "list entries"), cmd_catalog_list);
    s->add_option("--prefix", f.prefix, "tag prefix, e.g. I: or A:");
    s = on(catalog->add_subcommand("show", "show an entry and its code"), cmd_catalog_show);
    s->add_option("--tag", f.tag, "entry tag")->required();
    s->add_option("--n", f.n, "length for entries admitting several");
    out(s);
    on(catalog->add_subcommand("verify-all", "verify every entry"), cmd_catalog_verify);
  }
  auto* gs = app.add_subcommand("gs", "generalized Steiner systems")->require_subcommand(1);
  {
    auto* s = on(gs->add_subcommand("from-code", "code to design"), cmd_gs_from_code);
    file(s);
    s->add_option("--t", f.t, "strength");
    out(s);
    s = on(gs->add_subcommand("to-code", "design to code"), cmd_gs_to_code);
    file(s);
    out(s);
    s = on(gs->add_subcommand("verify", "check a design file"), cmd_gs_verify);
    file(s);
  }
  auto* tables = app.add_subcommand("tables", "print the embedded tables")->require_subcommand(1);
  on(tables->add_subcommand("I", "linear-size base codewords"), cmd_table_one);
  on(tables->add_subcommand("II", "small optimal sizes"), cmd_table_two);
  on(tables->add_subcommand("III", "N values and bounds"), cmd_table_three);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }
  try {
    return action ? action(f) : kInvalid;
  } catch (const qcc::UnsupportedLength& e) {
    std::cerr << "error: " << e.what() << " (threshold " << e.threshold() << ")\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInvalid;
}
