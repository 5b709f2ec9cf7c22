#include "cli/scan_io.hpp"

#include <ostream>

namespace straus::cli {

using nlohmann::ordered_json;

ordered_json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  ordered_json j;
  j["x"] = w->x;
  j["k"] = w->k();
  j["d"] = w->d;
  j["type"] = std::string(to_string(w->type));
  return j;
}

ordered_json record_json(const ScanRecord& rec, ScanMode mode) {
  ordered_json j;
  j["p"] = rec.p;
  j["residue_24"] = rec.residue_24;
  j["residue_840"] = rec.residue_840;
  j["first"] = witness_json(rec.first);
  if (mode == ScanMode::Exhaustive) {
    j["type1_ks"] = rec.type1_ks;
    j["type2_ks"] = rec.type2_ks;
    j["type1_count"] = rec.witness_count_by_type.first;
    j["type2_count"] = rec.witness_count_by_type.second;
  } else {
    j["type1_ks"] = nullptr;
    j["type2_ks"] = nullptr;
    j["type1_count"] = nullptr;
    j["type2_count"] = nullptr;
  }
  return j;
}

ordered_json summary_json(const ScanReport& report) {
  ordered_json j;
  j["lo"] = report.lo;
  j["hi"] = report.hi;
  j["mode"] = std::string(to_string(report.mode));
  j["prime_count"] = report.records.size();
  j["counterexamples"] = report.counterexamples;
  ordered_json residues = ordered_json::object();
  for (const auto& [residue, s] : report.residue_summary) {
    ordered_json r;
    r["primes"] = s.prime_count;
    r["counterexamples"] = s.counterexamples;
    r["min_first_k"] = s.min_first_k;
    r["max_first_k"] = s.max_first_k;
    r["hard"] = is_hard_residue_840(residue);
    residues[std::to_string(residue)] = std::move(r);
  }
  j["residue_summary_mod_840"] = std::move(residues);
  return j;
}

void write_jsonl(const ScanReport& report, std::ostream& os) {
  for (const ScanRecord& rec : report.records) os << record_json(rec, report.mode).dump() << '\n';
}

}  // namespace straus::cli
