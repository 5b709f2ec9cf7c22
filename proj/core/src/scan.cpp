#include "straus/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "straus/arith.hpp"

namespace straus {
namespace {

bool has_type1_at(u64 p, u64 x) {
  const auto ws = witnesses_at(p, x);
  return std::any_of(ws.begin(), ws.end(), [](const Witness& w) { return w.type == SolutionType::TypeI; });
}

std::vector<u64> divisors_of(u64 n) {
  std::vector<u64> small, large;
  for (u64 i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::string_view to_string(ScanMode m) { return m == ScanMode::FirstOnly ? "first-only" : "exhaustive"; }

bool is_hard_residue_840(u64 residue) {
  return std::find(kHardResidues840.begin(), kHardResidues840.end(), residue) != kHardResidues840.end();
}

ScanRecord scan_prime(u64 p, ScanMode mode) {
  ScanRecord rec;
  rec.p = p;
  rec.residue_24 = p % 24;
  rec.residue_840 = p % 840;
  if (mode == ScanMode::FirstOnly) {
    rec.first = first_witness(p);
    return rec;
  }
  const std::vector<Witness> all = enumerate_witnesses(p);
  if (!all.empty()) rec.first = all.front();
  for (const Witness& w : all) {
    // Witnesses arrive ordered by x, so ks come out sorted; dedupe against the tail.
    auto& ks = w.type == SolutionType::TypeI ? rec.type1_ks : rec.type2_ks;
    if (ks.empty() || ks.back() != w.k()) ks.push_back(w.k());
    ++(w.type == SolutionType::TypeI ? rec.witness_count_by_type.first : rec.witness_count_by_type.second);
  }
  return rec;
}

ScanReport scan_primes(u64 lo, u64 hi, ScanMode mode, const ScanOptions& opts) {
  if (lo < 2 || lo > hi) throw DomainError("scan_primes: need 2 <= lo <= hi");
  if (hi > kScanMaxHi) throw DomainError("scan_primes: hi exceeds 2^32");
  if (opts.chunk_span == 0) throw DomainError("scan_primes: chunk_span must be positive");

  const auto start = std::chrono::steady_clock::now();
  const u64 chunk_count = (hi - lo) / opts.chunk_span + 1;
  std::vector<std::vector<ScanRecord>> chunks(chunk_count);

  std::atomic<u64> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (u64 i = next++; i < chunk_count; i = next++) {
      try {
        const u64 chunk_lo = lo + i * opts.chunk_span;
        const u64 chunk_hi = std::min(hi, chunk_lo + (opts.chunk_span - 1));
        for_each_prime(chunk_lo, chunk_hi, [&](u64 p) { chunks[i].push_back(scan_prime(p, mode)); });
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunk_count;
      }
    }
  };

  unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<u64>(threads, chunk_count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ScanReport report;
  report.lo = lo;
  report.hi = hi;
  report.mode = mode;
  for (auto& chunk : chunks) {
    for (auto& rec : chunk) report.records.push_back(std::move(rec));
  }
  for (const ScanRecord& rec : report.records) {
    ResidueSummary& s = report.residue_summary[rec.residue_840];
    if (!rec.first) {
      report.counterexamples.push_back(rec.p);
      ++s.counterexamples;
    } else {
      const u64 k = rec.first->k();
      const bool first_seen = s.prime_count == s.counterexamples;
      s.min_first_k = first_seen ? k : std::min(s.min_first_k, k);
      s.max_first_k = first_seen ? k : std::max(s.max_first_k, k);
    }
    ++s.prime_count;
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<u64> check_k0_type1_rule(u64 hi) {
  if (hi < 3) throw DomainError("check_k0_type1_rule: hi must be at least 3");
  std::vector<u64> violations;
  for_each_prime(3, hi, [&](u64 p) {
    if (p % 24 == 1) return;
    if (!has_type1_at(p, ceil_div(p, 4))) violations.push_back(p);
  });
  return violations;
}

std::vector<std::pair<u64, u64>> check_divisor_k_rule(u64 hi) {
  if (hi < 3) throw DomainError("check_divisor_k_rule: hi must be at least 3");
  std::vector<std::pair<u64, u64>> violations;
  for_each_prime(3, hi, [&](u64 p) {
    if (p % 4 != 3) return;
    const XRange r = x_range(p);
    for (u64 k : divisors_of(r.lo)) {
      if (k > r.max_k()) break;
      if (!has_type1_at(p, r.lo + k)) violations.emplace_back(p, k);
    }
  });
  return violations;
}

std::map<u64, ResidueStats> residue_stats(const ScanReport& report, u64 modulus) {
  if (modulus < 2) throw DomainError("residue_stats: modulus must be at least 2");
  if (report.mode != ScanMode::Exhaustive) throw DomainError("residue_stats: needs an exhaustive scan report");
  std::map<u64, ResidueStats> out;
  for (const ScanRecord& rec : report.records) {
    const u64 r = rec.p % modulus;
    ResidueStats& s = out[r];
    const u64 total = rec.witness_count_by_type.first + rec.witness_count_by_type.second;
    s.min_witnesses = s.prime_count == 0 ? total : std::min(s.min_witnesses, total);
    s.max_witnesses = s.prime_count == 0 ? total : std::max(s.max_witnesses, total);
    ++s.prime_count;
    if (!rec.type1_ks.empty() && rec.type1_ks.front() == 0) ++s.k0_type1_count;
    s.hard = modulus == 840 && is_hard_residue_840(r);
  }
  return out;
}

}  // namespace straus
