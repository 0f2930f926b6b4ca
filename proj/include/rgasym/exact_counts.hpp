#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "rgasym/errors.hpp"
#include "rgasym/polynomial.hpp"
#include "rgasym/rational.hpp"
#include "rgasym/series.hpp"

namespace rgasym {

enum class Provenance { formula, brute, ingested, degree_dp, cycles };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::formula: return "formula";
    case Provenance::brute: return "brute";
    case Provenance::ingested: return "ingested";
    case Provenance::degree_dp: return "degree_dp";
    case Provenance::cycles: return "cycles";
  }
  return "?";
}

inline Provenance parse_provenance(const std::string& s) {
  if (s == "formula") return Provenance::formula;
  if (s == "brute") return Provenance::brute;
  if (s == "ingested") return Provenance::ingested;
  if (s == "degree_dp") return Provenance::degree_dp;
  if (s == "cycles") return Provenance::cycles;
  throw Error("unknown provenance '" + s + "'");
}

/// Exact counts keyed by (k, n, connected).
class CountTable {
 public:
  struct Entry {
    Integer count;
    Provenance provenance;
  };
  using Key = std::tuple<int, int, bool>;

  /// Inserts or overwrites. Rejects values that break the structural zeros.
  void insert(int k, int n, const Integer& count, Provenance provenance, bool connected = false) {
    if (count < 0) throw Error("negative count for k=" + std::to_string(k) + " n=" + std::to_string(n));
    if (!connected && n == 0 && count != 1) throw Error("the empty graph gives count 1 at n=0");
    if (structurally_zero(k, n) && count != 0) {
      throw Error("nonzero count where none can exist: k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
    entries_[{k, n, connected}] = {count, provenance};
  }

  bool contains(int k, int n, bool connected = false) const { return entries_.count({k, n, connected}) != 0; }

  const Entry& entry(int k, int n, bool connected = false) const {
    auto it = entries_.find({k, n, connected});
    if (it == entries_.end()) throw MissingCount(k, n);
    return it->second;
  }

  const Integer& count(int k, int n, bool connected = false) const { return entry(k, n, connected).count; }

  const std::map<Key, Entry>& entries() const { return entries_; }

  /// Zero for odd nk and for 1 <= n <= k.
  static bool structurally_zero(int k, int n) { return (n * k) % 2 != 0 || (n >= 1 && n <= k); }

 private:
  std::map<Key, Entry> entries_;
};

/// [y^k] exp(-i sum_j x_j y^j) (1 - y^2)^(-1/2), as a polynomial in x_1..x_k.
inline GaussianPolynomial hadamard_inner_bracket(int k) {
  TruncatedSeries<GaussianPolynomial> a(k);
  for (int j = 1; j <= k; ++j) {
    a.set(j, GaussianPolynomial::term(Monomial::variable(static_cast<std::size_t>(j)), GaussianRational(0, -1)));
  }
  TruncatedSeries<GaussianPolynomial> e = exp_series(a);
  Series root = pow_rational(Series({Rational(1), Rational(0), Rational(-1)}, k), make_rational(-1, 2));
  GaussianPolynomial out;
  for (int m = 0; m <= k; ++m) {
    if (is_zero(root[m])) continue;
    out += e[k - m] * root[m];
  }
  return out;
}

/// Count of labeled k-regular graphs on n vertices from the Gaussian
/// Hadamard-product formula.
inline Integer count_hadamard(int k, int n) {
  if (k < 2 || n < 0) throw Error("count_hadamard needs k >= 2 and n >= 0");
  if ((n * k) % 2 != 0) throw BadParity("nk must be even, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  const long max_weight = static_cast<long>(n) * k;
  auto weight = [](std::size_t v) { return static_cast<long>(v); };
  auto prune = [&](const GaussianPolynomial& p) {
    return p.filtered([&](const Monomial& m) { return m.weighted_degree(weight) <= max_weight; });
  };

  GaussianPolynomial base = hadamard_inner_bracket(k);
  GaussianPolynomial power(1);
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) power = prune(power * base);
    if (e > 1) base = prune(base * base);
  }

  MomentWeights alphas;
  for (int j = 1; j <= k; ++j) alphas[static_cast<std::size_t>(j)] = make_rational(1, j);
  GaussianRational value = gaussian_hadamard(power, alphas);
  if ((n * k / 2) % 2 != 0) value = -value;
  if (!is_zero(value.im)) throw NonRealResult("imaginary part " + to_string(value.im) + " in count_hadamard");
  if (!is_integer(value.re)) throw NonIntegerResult("non-integer count " + to_string(value.re));
  return value.re.get_num();
}

/// Backtracking over the upper triangle of the adjacency matrix.
inline Integer count_brute(int k, int n, int limit = 10) {
  if (n > limit) throw LimitExceeded("brute force limited to n <= " + std::to_string(limit));
  if (n == 0) return 1;
  if (k < 0 || k >= n) return 0;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::uint64_t total = 0;

  // Vertex i picks its remaining neighbours among j > i, in increasing j.
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == n) {
      ++total;
      return;
    }
    int need = k - deg[static_cast<std::size_t>(i)];
    if (need == 0) {
      self(self, i + 1, i + 2);
      return;
    }
    for (int c = j; c < n; ++c) {
      if (n - c < need) break;
      if (deg[static_cast<std::size_t>(c)] >= k) continue;
      ++deg[static_cast<std::size_t>(i)];
      ++deg[static_cast<std::size_t>(c)];
      self(self, i, c + 1);
      --deg[static_cast<std::size_t>(i)];
      --deg[static_cast<std::size_t>(c)];
    }
  };
  rec(rec, 0, 1);
  return Integer(static_cast<unsigned long>(total));
}

/// 2-regular graphs as sets of cycles of length at least 3: the cycle
/// through vertex n has m vertices, chosen and ordered in C(n-1, m-1) (m-1)!/2 ways.
inline Integer count_two_regular(int n) {
  if (n < 0) throw Error("negative n");
  std::vector<Integer> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Integer total = 0;
    Integer ways = 1;  // (i-1)!/(i-m)!, cycles through vertex i of length m before halving
    for (int m = 2; m <= i; ++m) {
      ways *= i - m + 1;
      if (m >= 3) total += ways * a[static_cast<std::size_t>(i - m)];
    }
    a[static_cast<std::size_t>(i)] = total / 2;
  }
  return a[static_cast<std::size_t>(n)];
}

namespace detail {

struct ResidualKeyHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

/// state[d-1] = number of unprocessed vertices still needing d edges.
/// A vertex of smallest residual degree is removed together with all of its
/// edges; the neighbours are chosen class by class.
class ResidualDegreeCounter {
 public:
  explicit ResidualDegreeCounter(int k) : k_(k) {}

  Integer count(int n) {
    if (n == 0) return 1;
    if ((n * k_) % 2 != 0) return 0;
    if (k_ == 0) return 1;
    std::vector<std::uint16_t> start(static_cast<std::size_t>(k_), 0);
    start.back() = static_cast<std::uint16_t>(n);
    return solve(start);
  }

  std::size_t states() const { return memo_.size(); }

 private:
  Integer solve(const std::vector<std::uint16_t>& state) {
    int d = 0;
    for (int i = 0; i < k_; ++i) {
      if (state[static_cast<std::size_t>(i)] > 0) {
        d = i + 1;
        break;
      }
    }
    if (d == 0) return 1;
    if (auto it = memo_.find(state); it != memo_.end()) return it->second;

    std::vector<std::uint16_t> rest = state;
    --rest[static_cast<std::size_t>(d - 1)];
    Integer total = 0;
    std::vector<std::uint16_t> next = rest;
    choose(rest, next, 1, d, Integer(1), total);
    memo_.emplace(state, total);
    return total;
  }

  void choose(const std::vector<std::uint16_t>& rest, std::vector<std::uint16_t>& next, int cls, int remaining,
              const Integer& ways, Integer& total) {
    if (remaining == 0) {
      total += ways * solve(next);
      return;
    }
    if (cls > k_) return;
    int avail = rest[static_cast<std::size_t>(cls - 1)];
    for (int c = 0; c <= std::min(avail, remaining); ++c) {
      next[static_cast<std::size_t>(cls - 1)] = static_cast<std::uint16_t>(rest[static_cast<std::size_t>(cls - 1)] - c);
      if (cls > 1) next[static_cast<std::size_t>(cls - 2)] += static_cast<std::uint16_t>(c);
      choose(rest, next, cls + 1, remaining - c, ways * binomial(avail, c), total);
      if (cls > 1) next[static_cast<std::size_t>(cls - 2)] -= static_cast<std::uint16_t>(c);
    }
    next[static_cast<std::size_t>(cls - 1)] = rest[static_cast<std::size_t>(cls - 1)];
  }

  int k_;
  std::unordered_map<std::vector<std::uint16_t>, Integer, ResidualKeyHash> memo_;
};

}  // namespace detail

/// Counts for n = 0..nmax by dynamic programming over residual-degree
/// multisets. Independent of the Hadamard formula.
inline std::vector<Integer> count_degree_dp(int k, int nmax) {
  if (k < 0 || nmax < 0) throw Error("count_degree_dp needs k >= 0 and nmax >= 0");
  detail::ResidualDegreeCounter counter(k);
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) out.push_back(counter.count(n));
  return out;
}

/// sum_{m <= order} SG_m x^m / m! from the table.
inline Series count_egf(int k, int order, const CountTable& counts, bool connected = false) {
  Series egf(order);
  for (int m = 0; m <= order; ++m) {
    egf.set(m, Rational(counts.count(k, m, connected)) / Rational(factorial(m)));
  }
  return egf;
}

/// [x^j] 1 / SG(x) for j = 0..jmax.
inline std::vector<Rational> egf_reciprocal_coeffs(int k, int jmax, const CountTable& counts) {
  return inverse(count_egf(k, jmax, counts)).coefficients();
}

/// Connected counts n!·[x^n] log SG(x), n = 0..nmax.
inline std::vector<Integer> connected_counts(int k, int nmax, const CountTable& counts) {
  Series l = log_series(count_egf(k, nmax, counts));
  std::vector<Integer> out;
  for (int n = 0; n <= nmax; ++n) {
    Rational c = l[n] * Rational(factorial(n));
    if (!is_integer(c)) throw NonIntegerResult("non-integer connected count at n=" + std::to_string(n));
    out.push_back(c.get_num());
  }
  return out;
}

/// Fills connected entries for n = 0..nmax from the regular ones.
inline void add_connected_counts(CountTable& table, int k, int nmax) {
  auto c = connected_counts(k, nmax, table);
  for (int n = 0; n <= nmax; ++n) {
    Provenance p = n == 0 ? Provenance::formula : table.entry(k, n).provenance;
    table.insert(k, n, c[static_cast<std::size_t>(n)], p, true);
  }
}

// Cache file: one "k n count provenance" record per line.

inline void load_cache(CountTable& table, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int k = 0;
    int n = 0;
    std::string count;
    std::string prov;
    if (!(ss >> k >> n >> count >> prov)) throw ParseError(lineno, "expected 'k n count provenance'");
    Integer value;
    if (value.set_str(count, 10) != 0) throw ParseError(lineno, "bad integer '" + count + "'");
    table.insert(k, n, value, parse_provenance(prov));
  }
}

inline void save_cache(const CountTable& table, const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw Error("cannot write cache file " + file.string());
  for (const auto& [key, e] : table.entries()) {
    auto [k, n, connected] = key;
    if (connected) continue;
    out << k << ' ' << n << ' ' << e.count.get_str() << ' ' << to_string(e.provenance) << '\n';
  }
}

/// Flag beats the RGASYM_CACHE_DIR environment variable.
inline std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv("RGASYM_CACHE_DIR"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

}  // namespace rgasym
