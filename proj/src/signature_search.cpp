#include "ramsey/signature_search.hpp"

#include <chrono>
#include <deque>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "ramsey/clique_engine.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/formats.hpp"
#include "ramsey/full_enum.hpp"

namespace ramsey {

std::vector<Signature> neighbors(const Signature& sig) {
  std::vector<Signature> out;
  for (std::size_t i = 0; i < sig.bits.size(); ++i) {
    Signature n = sig;
    n.bits.flip(i);
    out.push_back(std::move(n));
  }
  return out;
}

std::vector<DistanceColoring> nearby_cyclic(const DistanceColoring& c, int k, int j, int max_mismatch,
                                            int min_order) {
  if (!c.complete()) throw UsageError("nearby_cyclic needs a complete coloring");
  if (max_mismatch < 0 || max_mismatch > 20) throw UsageError("max_mismatch must be in 0..20");
  if (min_order <= 0) min_order = 3;
  std::vector<DistanceColoring> out;
  for (int m = c.order(); m >= std::max(min_order, 2); --m) {
    const int links = m - 1;
    std::vector<int> bad;
    for (int i = 0; 2 * i < links - 1; ++i) {
      if (c.colors().test(static_cast<std::size_t>(i)) != c.colors().test(static_cast<std::size_t>(links - 1 - i))) {
        bad.push_back(i);
        if (static_cast<int>(bad.size()) > max_mismatch) break;
      }
    }
    if (static_cast<int>(bad.size()) > max_mismatch) continue;
    const BitMask base = c.colors().resized(static_cast<std::size_t>(links));
    for (uint32_t pick = 0; pick < (1u << bad.size()); ++pick) {
      BitMask bits = base;
      for (std::size_t t = 0; t < bad.size(); ++t) {
        const bool v = (pick >> t) & 1u;
        bits.set(static_cast<std::size_t>(bad[t]), v);
        bits.set(static_cast<std::size_t>(links - 1 - bad[t]), v);
      }
      DistanceColoring cand(m, std::move(bits));
      if (is_valid(cand, k, j)) out.push_back(std::move(cand));
    }
  }
  return out;
}

const char* status_name(SigStatus s) {
  switch (s) {
    case SigStatus::kExtensible: return "extensible";
    case SigStatus::kNotExtensible: return "not-extensible";
    case SigStatus::kAborted: return "aborted";
    default: return "pending";
  }
}

const char* discovery_name(Discovery d) {
  switch (d) {
    case Discovery::kNeighbor: return "neighbor";
    case Discovery::kRelabel: return "relabel";
    default: return "seed";
  }
}

bool SignatureStore::insert_if_absent(const Signature& sig, Discovery via) {
  return entries_.emplace(sig, SigEntry{SigStatus::kPending, 0, via}).second;
}

void SignatureStore::decide(const Signature& sig, SigStatus status, uint64_t tests) {
  auto it = entries_.find(sig);
  if (it == entries_.end()) throw UsageError("decide: unknown signature");
  if (it->second.status != SigStatus::kPending) throw UsageError("decide: status already set");
  it->second.status = status;
  it->second.tests = tests;
}

std::vector<Signature> SignatureStore::with_status(SigStatus s) const {
  std::vector<Signature> out;
  for (const auto& [sig, e] : entries_)
    if (e.status == s) out.push_back(sig);
  return out;
}

void SignatureStore::write(std::ostream& out) const {
  for (const auto& [sig, e] : entries_)
    out << "sig " << sig.size() << ' ' << to_hex(sig.bits) << ' ' << status_name(e.status) << " tests=" << e.tests
        << " via=" << discovery_name(e.via) << '\n';
}

SignatureStore SignatureStore::read(std::istream& in) {
  SignatureStore store;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag, hex, status, tests, via;
    int s = 0;
    if (!(ls >> tag >> s >> hex >> status >> tests >> via) || tag != "sig" || s < 2)
      throw ParseError("malformed store line", line_no, 1);
    SigEntry e;
    const std::pair<const char*, SigStatus> statuses[] = {{"pending", SigStatus::kPending},
                                                          {"extensible", SigStatus::kExtensible},
                                                          {"not-extensible", SigStatus::kNotExtensible},
                                                          {"aborted", SigStatus::kAborted}};
    bool known = false;
    for (const auto& [name, st] : statuses)
      if (status == name) {
        e.status = st;
        known = true;
      }
    if (!known) throw ParseError("unknown status '" + status + "'", line_no, 1);
    if (!tests.starts_with("tests=") || !via.starts_with("via=")) throw ParseError("malformed store line", line_no, 1);
    e.tests = std::stoull(tests.substr(6));
    const std::string v = via.substr(4);
    e.via = v == "neighbor" ? Discovery::kNeighbor : v == "relabel" ? Discovery::kRelabel : Discovery::kSeed;
    BitMask bits;
    try {
      bits = from_hex(hex, static_cast<std::size_t>(s - 1));
    } catch (const ParseError& err) {
      throw ParseError(err.what(), line_no, 1);
    }
    store.entries_.emplace(Signature(std::move(bits)), e);
  }
  return store;
}

SignatureStore component_search(const std::vector<Signature>& seeds, const SearchParams& params,
                                const ComponentOptions& opts, SignatureStore store) {
  params.validate();
  if (opts.jobs < 1) throw UsageError("jobs must be positive");
  std::deque<Signature> queue;
  for (const Signature& p : store.pending()) queue.push_back(p);
  for (const Signature& s : seeds) {
    if (s.size() != params.s) throw UsageError("seed size does not match s");
    if (store.insert_if_absent(s, Discovery::kSeed)) queue.push_back(s);
  }
  const auto start = std::chrono::steady_clock::now();
  auto out_of_budget = [&] {
    if (opts.max_signatures && store.size() >= opts.max_signatures) return true;
    if (opts.budget_seconds <= 0) return false;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > opts.budget_seconds;
  };

  ExtendOptions ext;
  ext.stop_at_d = true;
  ext.store_from = params.d;
  ext.lookahead = false;

  std::mutex mu;
  std::size_t in_flight = 0;
  bool halt = false;

  // Vets one signature and queues what it connects to.
  auto process = [&](const Signature& sig) {
    const SignatureOutcome r = extend_signature(sig, params, ext);
    SigStatus st = r.aborted     ? SigStatus::kAborted
                   : r.reached_d ? SigStatus::kExtensible
                                 : SigStatus::kNotExtensible;
    std::vector<std::pair<Signature, Discovery>> found;
    if (st == SigStatus::kExtensible) {
      for (auto& n : neighbors(sig)) found.emplace_back(std::move(n), Discovery::kNeighbor);
      if (opts.use_relabel && !r.colorings.empty()) {
        const DistanceColoring& top = r.colorings.front();
        std::set<BitMask> seen;
        for (const auto& cyc : nearby_cyclic(top, params.k, params.j, opts.max_mismatch, params.s + 1)) {
          for (const auto& rel : relabel_orbit(cyc)) {
            BitMask head = rel.colors().resized(static_cast<std::size_t>(params.s - 1));
            if (seen.insert(head).second) found.emplace_back(Signature(std::move(head)), Discovery::kRelabel);
          }
        }
      }
    }
    std::lock_guard lock(mu);
    store.decide(sig, st, r.tests_used);
    for (auto& [n, via] : found)
      if (store.insert_if_absent(n, via)) queue.push_back(std::move(n));
  };

  auto worker = [&] {
    while (true) {
      Signature sig;
      {
        std::unique_lock lock(mu);
        if (halt || queue.empty()) {
          if (in_flight == 0 || halt) return;
          lock.unlock();
          std::this_thread::yield();
          continue;
        }
        if (out_of_budget()) {
          halt = true;
          return;
        }
        sig = std::move(queue.front());
        queue.pop_front();
        ++in_flight;
      }
      process(sig);
      std::lock_guard lock(mu);
      --in_flight;
    }
  };
  if (opts.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < opts.jobs; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return store;
}

}  // namespace ramsey
