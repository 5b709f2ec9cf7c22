#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "straus/witness.hpp"

namespace straus {

enum class ScanMode { FirstOnly, Exhaustive };

std::string_view to_string(ScanMode m);

/// Residues mod 840 not covered by the Mordell-type identities.
inline constexpr std::array<u64, 6> kHardResidues840 = {1, 121, 169, 289, 361, 529};

bool is_hard_residue_840(u64 residue);

/// Largest upper bound accepted by scan_primes; keeps every product used by the
/// witness search inside 128 bits.
inline constexpr u64 kScanMaxHi = u64{1} << 32;

/// Per-prime outcome of the witness search.
struct ScanRecord {
  u64 p = 0;
  std::optional<Witness> first;
  std::vector<u64> type1_ks;  // Exhaustive mode only; sorted, distinct.
  std::vector<u64> type2_ks;
  std::pair<u64, u64> witness_count_by_type{0, 0};
  u64 residue_24 = 0;
  u64 residue_840 = 0;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// Aggregate over one residue class mod 840 of first-witness offsets.
struct ResidueSummary {
  u64 prime_count = 0;
  u64 counterexamples = 0;
  u64 min_first_k = 0;
  u64 max_first_k = 0;

  friend bool operator==(const ResidueSummary&, const ResidueSummary&) = default;
};

struct ScanReport {
  u64 lo = 0;
  u64 hi = 0;
  ScanMode mode = ScanMode::FirstOnly;
  std::vector<ScanRecord> records;  // ascending p
  std::vector<u64> counterexamples;  // primes without any witness
  std::map<u64, ResidueSummary> residue_summary;  // keyed by p mod 840
  double elapsed_seconds = 0.0;
};

struct ScanOptions {
  unsigned threads = 0;        // 0 picks std::thread::hardware_concurrency()
  u64 chunk_span = 1u << 16;   // integers per work unit
};

/// One ScanRecord per prime in [lo, hi]. The prime range is cut into fixed chunks
/// processed independently; results are merged in ascending p, so the output does
/// not depend on options.threads. Throws DomainError unless 2 <= lo <= hi <= kScanMaxHi.
ScanReport scan_primes(u64 lo, u64 hi, ScanMode mode, const ScanOptions& opts = {});

/// Record for a single prime, as scan_primes would produce it.
ScanRecord scan_prime(u64 p, ScanMode mode);

/// Primes p <= hi, p != 2, p mod 24 != 1, lacking a TypeI witness at x = ceil(p/4).
std::vector<u64> check_k0_type1_rule(u64 hi);

/// (p, k) with p <= hi, p = 3 mod 4, k | ceil(p/4), k <= max offset, lacking a TypeI
/// witness at x = ceil(p/4) + k.
std::vector<std::pair<u64, u64>> check_divisor_k_rule(u64 hi);

struct ResidueStats {
  u64 prime_count = 0;
  u64 k0_type1_count = 0;  // primes with a TypeI witness at k = 0
  u64 min_witnesses = 0;   // over both types
  u64 max_witnesses = 0;
  bool hard = false;       // residue is one of kHardResidues840 (modulus 840 only)

  double k0_type1_fraction() const {
    return prime_count == 0 ? 0.0 : static_cast<double>(k0_type1_count) / static_cast<double>(prime_count);
  }
  friend bool operator==(const ResidueStats&, const ResidueStats&) = default;
};

/// Groups an exhaustive report by p mod modulus. Throws DomainError for modulus < 2
/// or a first-only report.
std::map<u64, ResidueStats> residue_stats(const ScanReport& report, u64 modulus);

}  // namespace straus
