#include "straus/crosscheck.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "straus/recover.hpp"

namespace straus {
namespace {

using Key = std::tuple<u64, u128, u128>;

std::size_t index(SolutionType t) { return t == SolutionType::TypeI ? 0 : 1; }

std::string show(const Key& k) {
  return "(" + std::to_string(std::get<0>(k)) + ", " + to_string(std::get<1>(k)) + ", " + to_string(std::get<2>(k)) +
         ")";
}

}  // namespace

std::vector<std::string> structural_violations(u64 p, const Triple& t) {
  std::vector<std::string> out;
  const std::string where = "p=" + std::to_string(p) + " " + show({t.x, t.y, t.z}) + ": ";
  const u128 p2 = static_cast<u128>(p) * p;
  if (t.x % p == 0) out.push_back(where + "p divides x");
  if (t.z % p != 0) out.push_back(where + "p does not divide z");
  if (t.x % p2 == 0) out.push_back(where + "p^2 divides x");
  if (t.y % p2 == 0) out.push_back(where + "p^2 divides y");
  if (t.z % p2 == 0) out.push_back(where + "p^2 divides z");
  return out;
}

CrossCheckResult cross_check_prime(u64 p, u64 oracle_cap) {
  CrossCheckResult result;
  result.p = p;
  auto& bad = result.mismatches;
  const std::string tag = "p=" + std::to_string(p) + ": ";

  std::set<Key> from_witness[2];
  for (const Witness& w : enumerate_witnesses(p)) {
    ++result.witness_count[index(w.type)];
    Solution s;
    try {
      s = build_solution(w);
    } catch (const std::exception& e) {
      bad.push_back(tag + e.what());
      continue;
    }
    if (!from_witness[index(w.type)].insert({s.x, s.y, s.z}).second) {
      bad.push_back(tag + "two witnesses build " + show({s.x, s.y, s.z}));
    }
    try {
      const Witness back = w.type == SolutionType::TypeI ? recover_type1(p, s.x, s.y) : recover_type2(p, s.x, s.y);
      if (back != w) bad.push_back(tag + "recovered d=" + std::to_string(back.d) + " from witness d=" + std::to_string(w.d));
    } catch (const std::exception& e) {
      bad.push_back(tag + "forward round trip: " + e.what());
    }
  }

  std::set<Key> from_oracle[2];
  for (const Triple& t : solve_bruteforce(p, oracle_cap)) {
    const Key key{t.x, t.y, t.z};
    for (auto& v : structural_violations(p, t)) bad.push_back(std::move(v));
    try {
      const SolutionType type = classify_solution(p, t.x, t.y, t.z);
      ++result.oracle_count[index(type)];
      from_oracle[index(type)].insert(key);
      const Witness w = recover(p, t.x, t.y, t.z);
      const Solution s = build_solution(w);
      if (Key{s.x, s.y, s.z} != key) bad.push_back(tag + "backward round trip rebuilt " + show({s.x, s.y, s.z}));
    } catch (const std::exception& e) {
      bad.push_back(tag + "backward round trip " + show(key) + ": " + e.what());
    }
  }

  for (std::size_t i = 0; i < 2; ++i) {
    const char* type = i == 0 ? "I" : "II";
    if (result.witness_count[i] != result.oracle_count[i]) {
      bad.push_back(tag + "type " + type + " witness count " + std::to_string(result.witness_count[i]) +
                    " != oracle count " + std::to_string(result.oracle_count[i]));
    }
    std::vector<Key> only_witness, only_oracle;
    std::set_difference(from_witness[i].begin(), from_witness[i].end(), from_oracle[i].begin(), from_oracle[i].end(),
                        std::back_inserter(only_witness));
    std::set_difference(from_oracle[i].begin(), from_oracle[i].end(), from_witness[i].begin(), from_witness[i].end(),
                        std::back_inserter(only_oracle));
    for (const Key& k : only_witness) bad.push_back(tag + "type " + type + " only from witnesses: " + show(k));
    for (const Key& k : only_oracle) bad.push_back(tag + "type " + type + " only from oracle: " + show(k));
  }
  return result;
}

}  // namespace straus
