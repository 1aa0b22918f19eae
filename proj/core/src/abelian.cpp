#include "chromahom/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chromahom {

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n <= 0) throw std::invalid_argument("factorize: need n > 0");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

AbelianGroup AbelianGroup::from_factors(int rank, std::vector<long long> factors) {
  // prime -> exponents, sorted descending so index s picks the s-th largest.
  std::map<long long, std::vector<int>> expo;
  for (long long d : factors) {
    if (d < 0) d = -d;
    if (d == 0) throw std::invalid_argument("from_factors: zero factor (use rank)");
    if (d == 1) continue;
    for (auto [p, e] : factorize(d)) expo[p].push_back(e);
  }
  size_t t = 0;
  for (auto& [p, es] : expo) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    t = std::max(t, es.size());
  }
  std::vector<long long> chain(t, 1);
  for (auto& [p, es] : expo) {
    for (size_t s = 0; s < es.size(); ++s) {
      long long q = 1;
      for (int k = 0; k < es[s]; ++k) {
        if (q > (1LL << 61) / p) throw std::overflow_error("from_factors: factor overflow");
        q *= p;
      }
      // s-th largest power goes into the s-th factor from the end.
      chain[t - 1 - s] *= q;
    }
  }
  return AbelianGroup{rank, std::move(chain)};
}

int AbelianGroup::tensor_zp(long long p) const {
  int dim = rank;
  for (long long d : invariant_factors)
    if (d % p == 0) ++dim;
  return dim;
}

AbelianGroup AbelianGroup::localize_away(long long p) const {
  std::vector<long long> fs;
  for (long long d : invariant_factors) {
    while (d % p == 0) d /= p;
    if (d > 1) fs.push_back(d);
  }
  return from_factors(rank, std::move(fs));
}

AbelianGroup AbelianGroup::multiply_by(long long n) const {
  if (n == 0) throw std::invalid_argument("multiply_by: n must be nonzero");
  if (n < 0) n = -n;
  std::vector<long long> fs;
  for (long long d : invariant_factors) {
    long long r = d / std::gcd(d, n);
    if (r > 1) fs.push_back(r);
  }
  return from_factors(rank, std::move(fs));
}

std::map<long long, std::vector<int>> AbelianGroup::primary() const {
  std::map<long long, std::vector<int>> out;
  for (long long d : invariant_factors)
    for (auto [p, e] : factorize(d)) out[p].push_back(e);
  for (auto& [p, es] : out) std::sort(es.begin(), es.end());
  return out;
}

std::string AbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  for (size_t i = 0; i < invariant_factors.size();) {
    size_t j = i;
    while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
    sep();
    os << "Z_" << invariant_factors[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  if (rank > 0) {
    sep();
    os << "Z";
    if (rank > 1) os << "^" << rank;
  }
  return os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<long long> fs = a.invariant_factors;
  fs.insert(fs.end(), b.invariant_factors.begin(), b.invariant_factors.end());
  return AbelianGroup::from_factors(a.rank + b.rank, std::move(fs));
}

nlohmann::json group_to_json(const AbelianGroup& g) {
  nlohmann::json pj = nlohmann::json::object();
  for (auto& [p, es] : g.primary()) pj[std::to_string(p)] = es;
  return nlohmann::json{{"rank", g.rank},
                        {"invariant_factors", g.invariant_factors},
                        {"primary", pj}};
}

AbelianGroup group_from_json(const nlohmann::json& j) {
  AbelianGroup g;
  g.rank = j.at("rank").get<int>();
  auto fs = j.at("invariant_factors").get<std::vector<long long>>();
  return AbelianGroup::from_factors(g.rank, std::move(fs));
}

}  // namespace chromahom
