// Command-line front end. Exit codes: 0 pass, 1 fail, 2 usage, 3 internal.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ramsey/clique_engine.hpp"
#include "ramsey/constructors.hpp"
#include "ramsey/cyclic_search.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/formats.hpp"
#include "ramsey/full_enum.hpp"
#include "ramsey/signature_search.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kInternal = 3;

struct Common {
  int k = 0, j = 0, s = 0, d = 0;
  uint64_t threshold = 0;
};

void add_params(CLI::App* cmd, Common& p, bool signature) {
  cmd->add_option("--k", p.k, "forbidden clique order of color 0")->required();
  cmd->add_option("--j", p.j, "forbidden clique order of color 1")->required();
  if (!signature) return;
  cmd->add_option("--s", p.s, "signature size")->required();
  cmd->add_option("--d", p.d, "minimum interesting order")->required();
  cmd->add_option("--threshold", p.threshold, "link-coloring tests per signature before giving up (0: none)");
}

SearchParams to_params(const Common& c) {
  SearchParams p;
  p.k = c.k;
  p.j = c.j;
  p.s = c.s;
  p.d = c.d;
  if (c.threshold) p.abort_threshold = c.threshold;
  p.validate();
  return p;
}

// Writes to the file, or stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw UsageError("cannot write " + path);
  }
  std::ostream& get() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<DistanceColoring> load_colorings(const std::string& path) {
  std::vector<DistanceColoring> out;
  for (const auto& r : read_records_file(path)) out.push_back(record_coloring(r));
  return out;
}

void write_colorings(std::ostream& out, const std::vector<DistanceColoring>& cs) {
  for (const auto& c : cs) out << (is_cyclic(c) ? format_certificate(to_certificate(c)) : format_distance(c)) << '\n';
}

int run_enumerate(const Common& c, int jobs, const std::string& out, const EnumOptions& base) {
  EnumOptions o = base;
  o.jobs = jobs;
  const Census census = enumerate(to_params(c), o);
  Output dst(out);
  write_census(dst.get(), census);
  std::cerr << "longest " << census.longest << ", " << census.signatures << " signatures, " << census.tests
            << " tests" << (census.complete ? "" : ", incomplete") << '\n';
  return kPass;
}

int run_connect(const Common& c, const std::string& seeds_path, const std::string& out, bool resume,
                const ComponentOptions& opts) {
  const SearchParams p = to_params(c);
  std::vector<Signature> seeds;
  for (const auto& col : load_colorings(seeds_path)) {
    if (col.order() < p.s) throw UsageError("seed of order " + std::to_string(col.order()) + " is shorter than s");
    seeds.emplace_back(col.colors().resized(static_cast<std::size_t>(p.s - 1)));
  }
  SignatureStore store;
  if (resume && std::filesystem::exists(out)) {
    std::ifstream in(out);
    store = SignatureStore::read(in);
  }
  store = component_search(seeds, p, opts, std::move(store));
  Output dst(out);
  store.write(dst.get());
  std::cerr << store.size() << " signatures, " << store.with_status(SigStatus::kExtensible).size()
            << " extensible, " << store.pending().size() << " pending\n";
  return kPass;
}

int run_cyclic(const Common& c, const std::string& seeds_path, const std::string& out, int lmin_fixed,
               CyclicSearchOptions opts) {
  if (lmin_fixed > 0) {
    opts.lmin = lmin_fixed;
    opts.fixed_lmin = true;
  }
  const auto seeds = load_colorings(seeds_path);
  const CyclicSearchResult r = cyclic_local_search(seeds, c.k, c.j, opts);
  Output dst(out);
  write_colorings(dst.get(), r.colorings);
  std::map<int, int> by_order;
  for (const auto& x : r.colorings) ++by_order[x.order()];
  std::cerr << r.colorings.size() << " colorings in " << r.classes << " classes, best order " << r.best_order
            << ", lmin " << r.final_lmin << ", " << r.checked << " checked in " << r.seconds << " s\n";
  for (const auto& [n, m] : by_order) std::cerr << "  order " << n << ": " << m << '\n';
  return kPass;
}

int run_verify(const std::vector<std::string>& files, int k, int j, bool json) {
  nlohmann::json all = nlohmann::json::array();
  bool ok = true;
  for (const auto& path : files) {
    const auto recs = read_records_file(path);
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const Verdict v = std::holds_alternative<Certificate>(recs[i])
                            ? verify_certificate(std::get<Certificate>(recs[i]), k, j)
                            : verify_coloring(std::get<DistanceColoring>(recs[i]), k, j);
      ok = ok && v.passed();
      const std::string id = std::filesystem::path(path).filename().string() + "#" + std::to_string(i + 1);
      if (json) {
        all.push_back(verdict_json(v, id));
      } else {
        std::cout << id << " order " << v.order << " clique " << v.clique0 << '/' << v.clique1 << ' '
                  << (v.passed() ? "pass" : "FAIL") << " (" << orientation_name(v.orientation) << ", " << v.seconds
                  << " s)\n";
      }
    }
  }
  if (json) std::cout << all.dump(2) << '\n';
  return ok ? kPass : kFail;
}

int run_stats(const std::vector<std::string>& files, bool reflect) {
  ColoringDatabase db(reflect);
  std::size_t dup = 0;
  for (const auto& path : files)
    for (const auto& c : load_colorings(path))
      if (db.insert(c) == ColoringDatabase::Insert::kDuplicate) ++dup;
  std::cout << "records " << db.size() << " duplicates " << dup << '\n';
  for (const auto& [n, st] : db.stats()) std::cout << "order " << n << " classes " << st.classes << " raw " << st.raw << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-coloring search and verification for two-color Ramsey lower bounds"};
  app.require_subcommand(1);
  int code = kPass;

  Common ec;
  int e_jobs = 1;
  std::string e_out;
  EnumOptions eo;
  auto* en = app.add_subcommand("enumerate", "exhaustive search over distance colorings");
  add_params(en, ec, true);
  en->add_option("--jobs", e_jobs, "worker threads");
  en->add_option("--out", e_out, "census file (default stdout)");
  en->add_option("--journal", eo.journal, "resumable per-signature log");
  en->add_option("--max-order", eo.max_order, "stop growing colorings at this order");
  en->add_option("--store-from", eo.store_from, "keep colorings from this order (default d)");
  en->add_option("--budget", eo.budget_seconds, "wall-clock limit in seconds");
  en->add_flag("--lookahead", eo.lookahead, "closure pruning below d (counts below d become inexact)");
  bool e_no_forcing = false, e_no_reflection = false;
  en->add_flag("--no-forcing", e_no_forcing, "disable forced links");
  en->add_flag("--no-reflection", e_no_reflection, "do not fix the first link when k = j");
  en->callback([&] {
    eo.forcing = !e_no_forcing;
    eo.reflection = !e_no_reflection;
    code = run_enumerate(ec, e_jobs, e_out, eo);
  });

  Common cc;
  std::string c_seeds, c_out;
  bool c_resume = false, c_no_relabel = false;
  ComponentOptions co;
  auto* cn = app.add_subcommand("connect", "explore the extensible signatures connected to the seeds");
  add_params(cn, cc, true);
  cn->add_option("--seeds", c_seeds, "colorings whose first s-1 bits are the seeds")->required()->check(CLI::ExistingFile);
  cn->add_option("--out", c_out, "signature store")->required();
  cn->add_flag("--resume", c_resume, "continue from the pending entries of --out");
  cn->add_flag("--no-relabel", c_no_relabel, "neighbor flips only");
  cn->add_option("--max-mismatch", co.max_mismatch, "asymmetric pairs repaired when looking for cyclic colorings");
  cn->add_option("--jobs", co.jobs, "worker threads");
  cn->add_option("--budget", co.budget_seconds, "wall-clock limit in seconds");
  cn->callback([&] {
    co.use_relabel = !c_no_relabel;
    code = run_connect(cc, c_seeds, c_out, c_resume, co);
  });

  Common yc;
  std::string y_seeds, y_out;
  int y_lmin_fixed = 0;
  CyclicSearchOptions yo;
  auto* cy = app.add_subcommand("cyclic", "local search over cyclic colorings");
  add_params(cy, yc, false);
  cy->add_option("--seeds", y_seeds, "valid cyclic seed colorings")->required()->check(CLI::ExistingFile);
  cy->add_option("--out", y_out, "found colorings (default stdout)");
  cy->add_option("--lmin-fixed", y_lmin_fixed, "hold the minimum order at this value");
  cy->add_option("--lmin", yo.lmin, "initial minimum order (default: smallest seed)");
  cy->add_option("--window", yo.window, "minimum order trails the best order by this much");
  cy->add_option("--reflect-flips", yo.reflect_flips, "flips after relabel and reflection (1 or 2)");
  cy->add_option("--budget", yo.budget_seconds, "wall-clock limit in seconds");
  cy->add_flag("!--until-budget", yo.stop_when_stalled, "with --lmin-fixed, keep trying random moves until the budget");
  cy->add_option("--seed", yo.seed, "random seed");
  cy->callback([&] { code = run_cyclic(yc, y_seeds, y_out, y_lmin_fixed, yo); });

  auto* co_cmd = app.add_subcommand("construct", "algebraic constructions");
  co_cmd->require_subcommand(1);
  std::string k_out;
  co_cmd->add_option("--out", k_out, "certificate file (default stdout)");
  auto emit = [&](const std::vector<DistanceColoring>& cs) {
    Output dst(k_out);
    write_colorings(dst.get(), cs);
  };
  int pn = 0;
  auto* pa = co_cmd->add_subcommand("paley", "quadratic-residue coloring of a prime N = 1 mod 4");
  pa->add_option("--n", pn, "order")->required();
  pa->callback([&] { emit({paley(pn)}); });
  int dn = 0, dq = 0;
  auto* dg = co_cmd->add_subcommand("degenerate", "prime-order colorings constant on cosets");
  dg->add_option("--n", dn, "prime order")->required();
  dg->add_option("--q", dq, "generator (default smallest primitive root)");
  dg->callback([&] { emit(degenerate_prime(dn, dq)); });
  int tp = 0, tq = 0, tcode = -1;
  auto* tw = co_cmd->add_subcommand("2p", "order 2p colorings keyed by links 2, q, 2q, p");
  tw->add_option("--p", tp, "prime p = 1 mod 4")->required();
  tw->add_option("--q", tq, "generator mod 2p (default smallest)");
  tw->add_option("--code", tcode, "single member 0..15 (default all 16)");
  tw->callback([&] { emit(tcode >= 0 ? std::vector{degenerate_2p(tp, tcode, tq)} : degenerate_2p_family(tp, tq)); });
  int qn = 0;
  std::vector<int> qgens;
  std::string qmode = "generator";
  auto* qu = co_cmd->add_subcommand("quotient", "colorings constant on the orbits of a unit subgroup");
  qu->add_option("--n", qn, "order")->required();
  qu->add_option("--gens", qgens, "subgroup generators");
  qu->add_option("--mode", qmode, "fixed or generator")->check(CLI::IsMember({"fixed", "generator"}));
  qu->callback([&] {
    const GroupStructure g = group_structure(qn, qgens);
    emit(degenerate_quotient(g, qmode == "fixed" ? QuotientMode::kFixedAction : QuotientMode::kGeneratorAction));
  });
  std::string b_in;
  int b_center = 1;
  auto* bl = co_cmd->add_subcommand("block", "order 2n block coloring (A, ~A; ~A, A)");
  bl->add_option("--in", b_in, "cyclic coloring of odd order")->required()->check(CLI::ExistingFile);
  bl->add_option("--center", b_center, "color of link n");
  bl->callback([&] {
    std::vector<DistanceColoring> out;
    for (const auto& a : load_colorings(b_in)) out.push_back(block_double(a, b_center));
    emit(out);
  });
  std::string q_in;
  int q_k = 0, q_j = 0;
  QuadrupleOptions qo;
  auto* qd = co_cmd->add_subcommand("quadruple", "order 4N colorings built from four copies");
  qd->add_option("--in", q_in, "valid cyclic coloring")->required()->check(CLI::ExistingFile);
  qd->add_option("--k", q_k, "clique orders of the input")->required();
  qd->add_option("--j", q_j)->required();
  qd->add_option("--target-k", qo.k, "default 2k-1");
  qd->add_option("--target-j", qo.j, "default j+1");
  qd->add_option("--budget", qo.budget, "candidates examined");
  qd->add_option("--seed", qo.seed, "random seed for sampled searches");
  qd->callback([&] {
    std::vector<DistanceColoring> out;
    for (const auto& c : load_colorings(q_in)) {
      auto part = quadruple_candidates(c, q_k, q_j, qo);
      out.insert(out.end(), part.begin(), part.end());
    }
    emit(out);
  });

  std::vector<std::string> v_files;
  int v_k = 0, v_j = 0;
  bool v_json = false;
  auto* ve = app.add_subcommand("verify", "check colorings with the reference clique search");
  ve->add_option("--k", v_k)->required();
  ve->add_option("--j", v_j)->required();
  ve->add_flag("--json", v_json, "print verdicts as JSON");
  ve->add_option("files", v_files, "certificate or distance files")->required()->check(CLI::ExistingFile);
  ve->callback([&] { code = run_verify(v_files, v_k, v_j, v_json); });

  std::vector<std::string> s_files;
  bool s_reflect = false;
  auto* st = app.add_subcommand("stats", "per-order counts after dedup");
  st->add_option("files", s_files, "coloring files")->required()->check(CLI::ExistingFile);
  st->add_flag("--reflect", s_reflect, "treat color exchange as equivalent");
  st->callback([&] { code = run_stats(s_files, s_reflect); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return code;
}
