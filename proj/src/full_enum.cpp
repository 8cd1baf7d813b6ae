#include "ramsey/full_enum.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "dfs.hpp"
#include "ramsey/clique_engine.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/formats.hpp"

namespace ramsey {
namespace {

// Integer order of the bit mask: the highest differing bit decides.
bool value_less(const BitMask& a, const BitMask& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  const std::size_t n = std::max(wa.size(), wb.size());
  for (std::size_t k = n; k-- > 0;) {
    const uint64_t x = k < wa.size() ? wa[k] : 0;
    const uint64_t y = k < wb.size() ? wb[k] : 0;
    if (x != y) return x < y;
  }
  return false;
}

template <int W>
kernel::Masks<W> masks_of(const BitMask& bits) {
  kernel::Masks<W> m;
  for (std::size_t i = 0; i < bits.size(); ++i) m.assign(static_cast<int>(i), bits.test(i) ? 1 : 0);
  return m;
}

void add_counts(std::map<int, uint64_t>& into, const std::vector<uint64_t>& counts) {
  for (std::size_t o = 0; o < counts.size(); ++o)
    if (counts[o]) into[static_cast<int>(o)] += counts[o];
}

std::string counts_field(const std::map<int, uint64_t>& counts) {
  std::string s;
  for (const auto& [o, n] : counts) {
    if (!s.empty()) s += ',';
    s += std::to_string(o) + ':' + std::to_string(n);
  }
  return s.empty() ? "-" : s;
}

std::map<int, uint64_t> parse_counts(const std::string& s) {
  std::map<int, uint64_t> out;
  if (s == "-") return out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("bad count entry '" + item + "'", 0, 0);
    out[std::stoi(item.substr(0, colon))] = std::stoull(item.substr(colon + 1));
  }
  return out;
}

// key=value fields of one line.
std::map<std::string, std::string> fields(std::istringstream& in) {
  std::map<std::string, std::string> f;
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq != std::string::npos) f[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return f;
}

std::string journal_header(const SearchParams& p, const EnumOptions& o) {
  std::ostringstream h;
  h << "# journal k=" << p.k << " j=" << p.j << " s=" << p.s << " d=" << p.d << " threshold=" << p.abort_threshold
    << " max_order=" << o.max_order << " lookahead=" << o.lookahead << " reflection=" << o.reflection
    << " store_from=" << o.store_from;
  return h.str();
}

struct JournalEntry {
  uint64_t tests = 0;
  bool aborted = false;
  bool truncated = false;
  int longest = 0;
  std::map<int, uint64_t> counts;
  std::vector<DistanceColoring> colorings;
};

// Completed signatures of an earlier run, keyed by signature hex.
std::unordered_map<std::string, JournalEntry> load_journal(const std::string& path, const std::string& header) {
  std::unordered_map<std::string, JournalEntry> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  int line_no = 0;
  std::vector<DistanceColoring> pending;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != header) throw UsageError("journal " + path + " was written with different parameters");
      continue;
    }
    if (line.starts_with("distance")) {
      pending.push_back(parse_distance(line, line_no));
    } else if (line.starts_with("done ")) {
      std::istringstream ls(line.substr(5));
      std::string hex;
      ls >> hex;
      auto f = fields(ls);
      JournalEntry e;
      e.tests = std::stoull(f["tests"]);
      e.aborted = f["aborted"] == "1";
      e.truncated = f["truncated"] == "1";
      e.longest = std::stoi(f["longest"]);
      e.counts = parse_counts(f["counts"]);
      e.colorings = std::move(pending);
      pending.clear();
      done[hex] = std::move(e);
    }
    // A trailing block without its done line belongs to an interrupted
    // signature and is dropped.
  }
  return done;
}

}  // namespace

void Census::merge(const Census& o) {
  for (const auto& [order, n] : o.counts) counts[order] += n;
  longest = std::max(longest, o.longest);
  colorings.insert(colorings.end(), o.colorings.begin(), o.colorings.end());
  complete = complete && o.complete;
  truncated = truncated || o.truncated;
  tests += o.tests;
  signatures += o.signatures;
  aborted_signatures += o.aborted_signatures;
}

std::vector<Signature> valid_signatures(const SearchParams& params, bool reflection) {
  if (params.s < 2 || params.s > 65) throw UsageError("signature size must be in 2..65");
  DfsConfig cfg;
  cfg.K = {params.k, params.j};
  cfg.d = params.s;
  cfg.max_links = params.s - 1;
  cfg.store_from = params.s;
  cfg.reflect = reflection && params.diagonal();
  cfg.lookahead = false;
  std::vector<Signature> out;
  dispatch_width(params.s - 1, [&]<int W>() {
    Dfs<W> dfs(cfg);
    auto r = dfs.run(kernel::Masks<W>{});
    for (auto& b : r.colorings) out.emplace_back(std::move(b));
  });
  std::sort(out.begin(), out.end(), [](const Signature& a, const Signature& b) { return value_less(a.bits, b.bits); });
  return out;
}

SignatureOutcome extend_signature(const Signature& sig, const SearchParams& params, const ExtendOptions& opts) {
  params.validate();
  if (sig.size() != params.s) throw UsageError("signature size does not match params.s");
  SignatureOutcome out;
  if (!is_valid(sig.to_coloring(), params.k, params.j)) {
    out.rejected = true;
    return out;
  }
  const int max_order =
      opts.max_order > 0 ? opts.max_order : 64 * width_for(std::max(params.d, params.s + 1)) + 1;
  if (max_order - 1 > kMaxLinkBits) throw UsageError("max order too large");
  DfsConfig cfg;
  cfg.K = {params.k, params.j};
  cfg.d = params.d;
  cfg.max_links = max_order - 1;
  cfg.count_above = params.s;
  cfg.store_from = opts.store_from;
  cfg.forcing = opts.forcing;
  cfg.lookahead = opts.lookahead;
  cfg.out_of_order = opts.out_of_order;
  cfg.lookahead_from = params.s - 1;
  cfg.max_gap = opts.max_gap;
  cfg.threshold = params.abort_threshold;
  cfg.stop_at_d = opts.stop_at_d;
  dispatch_width(max_order - 1, [&]<int W>() {
    Dfs<W> dfs(cfg);
    DfsResult r = dfs.run(masks_of<W>(sig.bits));
    out.reached_d = r.reached_d;
    out.max_order = std::max(r.longest, params.s);
    add_counts(out.counts, r.counts);
    out.tests_used = r.tests;
    out.aborted = r.aborted;
    out.truncated = r.truncated;
    out.stopped = r.stopped;
    for (auto& b : r.colorings) out.colorings.push_back(DistanceColoring(static_cast<int>(b.size()) + 1, b));
  });
  return out;
}

Census enumerate(const SearchParams& params, const EnumOptions& opts) {
  params.validate();
  if (opts.max_order < params.d || opts.max_order - 1 > kMaxLinkBits)
    throw UsageError("max order must lie in d.." + std::to_string(kMaxLinkBits + 1));
  if (opts.jobs < 1) throw UsageError("jobs must be positive");
  const bool reflect = opts.reflection && params.diagonal();
  const int store_from = opts.store_from > 0 ? opts.store_from : params.d;

  Census census;
  census.k = params.k;
  census.j = params.j;
  census.s = params.s;
  census.d = params.d;
  census.reflection = reflect;
  census.exact_from = opts.lookahead ? params.d : 2;

  // Orders up to s come from the signature pass itself.
  std::vector<Signature> sigs;
  {
    DfsConfig cfg;
    cfg.K = {params.k, params.j};
    cfg.d = params.s;
    cfg.max_links = params.s - 1;
    cfg.store_from = params.s;
    cfg.reflect = reflect;
    cfg.lookahead = false;
    dispatch_width(params.s - 1, [&]<int W>() {
      Dfs<W> dfs(cfg);
      DfsResult r = dfs.run(kernel::Masks<W>{});
      add_counts(census.counts, r.counts);
      census.longest = r.longest;
      census.tests += r.tests;
      for (auto& b : r.colorings) {
        if (store_from <= params.s) census.colorings.push_back(DistanceColoring(params.s, b));
        sigs.emplace_back(std::move(b));
      }
    });
    std::sort(sigs.begin(), sigs.end(), [](const Signature& a, const Signature& b) { return value_less(a.bits, b.bits); });
  }

  const std::string header = journal_header(params, opts);
  std::unordered_map<std::string, JournalEntry> done;
  std::ofstream journal;
  if (!opts.journal.empty()) {
    done = load_journal(opts.journal, header);
    const bool fresh = done.empty() && !std::ifstream(opts.journal).good();
    journal.open(opts.journal, std::ios::app);
    if (!journal) throw std::runtime_error("cannot open journal " + opts.journal);
    if (fresh) journal << header << '\n' << std::flush;
  }

  DfsConfig cfg;
  cfg.K = {params.k, params.j};
  cfg.d = params.d;
  cfg.max_links = opts.max_order - 1;
  cfg.count_above = params.s;
  cfg.store_from = store_from;
  cfg.forcing = opts.forcing;
  cfg.lookahead = opts.lookahead;
  cfg.out_of_order = opts.out_of_order;
  cfg.lookahead_from = params.s - 1;
  cfg.max_gap = opts.max_gap;
  cfg.threshold = params.abort_threshold;
  std::atomic<bool> stop{false};
  cfg.stop = &stop;
  if (opts.budget_seconds > 0)
    cfg.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(opts.budget_seconds));

  std::mutex mu;
  std::vector<Census> partial(static_cast<std::size_t>(opts.jobs));
  auto worker = [&](int w) {
    Census& mine = partial[static_cast<std::size_t>(w)];
    for (std::size_t i = static_cast<std::size_t>(w); i < sigs.size(); i += static_cast<std::size_t>(opts.jobs)) {
      const std::string hex = to_hex(sigs[i].bits);
      JournalEntry e;
      if (auto it = done.find(hex); it != done.end()) {
        e = it->second;
      } else {
        bool stopped = false;
        dispatch_width(cfg.max_links, [&]<int W>() {
          Dfs<W> dfs(cfg);
          DfsResult r = dfs.run(masks_of<W>(sigs[i].bits));
          stopped = r.stopped;
          e.tests = r.tests;
          e.aborted = r.aborted;
          e.truncated = r.truncated;
          e.longest = r.longest;
          add_counts(e.counts, r.counts);
          for (auto& b : r.colorings) e.colorings.push_back(DistanceColoring(static_cast<int>(b.size()) + 1, b));
        });
        if (stopped) {
          mine.complete = false;
          return;
        }
        if (journal.is_open()) {
          std::ostringstream block;
          for (const auto& c : e.colorings) block << format_distance(c) << '\n';
          block << "done " << hex << " tests=" << e.tests << " aborted=" << e.aborted
                << " truncated=" << e.truncated << " longest=" << e.longest << " counts=" << counts_field(e.counts)
                << '\n';
          std::lock_guard lock(mu);
          journal << block.str() << std::flush;
        }
      }
      for (const auto& [o, n] : e.counts) mine.counts[o] += n;
      mine.longest = std::max(mine.longest, e.longest);
      mine.tests += e.tests;
      ++mine.signatures;
      if (e.aborted) {
        ++mine.aborted_signatures;
        mine.complete = false;
      }
      if (e.truncated) {
        mine.truncated = true;
        mine.complete = false;
      }
      mine.colorings.insert(mine.colorings.end(), std::make_move_iterator(e.colorings.begin()),
                            std::make_move_iterator(e.colorings.end()));
    }
  };
  if (opts.jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < opts.jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& p : partial) census.merge(p);
  std::sort(census.colorings.begin(), census.colorings.end(), [](const DistanceColoring& a, const DistanceColoring& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return value_less(a.colors(), b.colors());
  });
  return census;
}

void write_census(std::ostream& out, const Census& c) {
  out << "census k=" << c.k << " j=" << c.j << " s=" << c.s << " d=" << c.d << " reflection=" << c.reflection
      << " complete=" << c.complete << " truncated=" << c.truncated << " exact_from=" << c.exact_from
      << " longest=" << c.longest << " tests=" << c.tests << " signatures=" << c.signatures
      << " aborted=" << c.aborted_signatures << '\n';
  for (const auto& [order, n] : c.counts) out << "count " << order << ' ' << n << '\n';
  for (const auto& col : c.colorings) out << format_distance(col) << '\n';
}

Census read_census(std::istream& in) {
  Census c;
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "census") {
      auto f = fields(ls);
      auto num = [&](const char* key) {
        const auto it = f.find(key);
        if (it == f.end()) throw ParseError(std::string("census header lacks ") + key, line_no, 1);
        return std::stoll(it->second);
      };
      c.k = static_cast<int>(num("k"));
      c.j = static_cast<int>(num("j"));
      c.s = static_cast<int>(num("s"));
      c.d = static_cast<int>(num("d"));
      c.reflection = num("reflection") != 0;
      c.complete = num("complete") != 0;
      c.truncated = num("truncated") != 0;
      c.exact_from = static_cast<int>(num("exact_from"));
      c.longest = static_cast<int>(num("longest"));
      c.tests = static_cast<uint64_t>(num("tests"));
      c.signatures = static_cast<uint64_t>(num("signatures"));
      c.aborted_signatures = static_cast<uint64_t>(num("aborted"));
      header = true;
    } else if (kind == "count") {
      int order = 0;
      uint64_t n = 0;
      if (!(ls >> order >> n)) throw ParseError("malformed count line", line_no, 1);
      c.counts[order] = n;
    } else if (kind == "distance") {
      c.colorings.push_back(parse_distance(line, line_no));
    } else {
      throw ParseError("unknown census line '" + kind + "'", line_no, 1);
    }
  }
  if (!header) throw ParseError("census header missing", 0, 0);
  return c;
}

}  // namespace ramsey
