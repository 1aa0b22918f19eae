// Finitely generated abelian groups in invariant-factor form, plus the
// coefficient operations used throughout (tensor with Z_p, localization,
// multiplication by an integer).
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace chromahom {

// Z^rank + Z_{d_1} + ... + Z_{d_t} with 2 <= d_1 | d_2 | ... | d_t.
struct AbelianGroup {
  int rank = 0;
  std::vector<long long> invariant_factors;

  bool operator==(const AbelianGroup&) const = default;

  bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
  bool torsion_free() const { return invariant_factors.empty(); }

  static AbelianGroup free_group(int r) { return AbelianGroup{r, {}}; }

  // Canonicalizes an arbitrary multiset of cyclic orders (1s dropped) into
  // the divisibility chain via the primary decomposition.
  static AbelianGroup from_factors(int rank, std::vector<long long> factors);

  AbelianGroup torsion() const { return AbelianGroup{0, invariant_factors}; }
  AbelianGroup free_part() const { return AbelianGroup{rank, {}}; }

  // dim_{Z_p} (G tensor Z_p) = rank + #{d_i : p | d_i}.
  int tensor_zp(long long p) const;

  // Kills the p-primary part (G tensor Z[1/p]), keeps the rest.
  AbelianGroup localize_away(long long p) const;

  // Image subgroup n*G: Z_d becomes Z_{d/gcd(d,n)}, free part unchanged.
  AbelianGroup multiply_by(long long n) const;

  // prime -> ascending exponent list e (one entry per Z_{p^e} summand).
  std::map<long long, std::vector<int>> primary() const;

  std::string str() const;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// {"rank": r, "invariant_factors": [d1,...], "primary": {"2": [e,...], ...}}
nlohmann::json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& j);

std::vector<std::pair<long long, int>> factorize(long long n);

}  // namespace chromahom
