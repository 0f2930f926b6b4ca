#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rgasym/big_float.hpp"
#include "rgasym/errors.hpp"
#include "rgasym/exact_counts.hpp"

namespace rgasym {

/// log of the envelope (nk/e)^(nk/2) / k!^n * e^(-(k^2-1)/4) / sqrt(2).
inline BigFloat log_envelope(int k, int n, mpfr_prec_t prec) {
  BigFloat nk(static_cast<long>(n) * k, prec);
  BigFloat half_nk(make_rational(static_cast<long>(n) * k, 2), prec);
  BigFloat log_kfact(0L, prec);
  for (long i = 2; i <= k; ++i) log_kfact = log_kfact + log(BigFloat(i, prec));
  BigFloat two(2L, prec);
  return half_nk * log(nk) - half_nk - BigFloat(static_cast<long>(n), prec) * log_kfact -
         BigFloat(make_rational(static_cast<long>(k) * k - 1, 4), prec) - log(two) * BigFloat(make_rational(1, 2), prec);
}

/// (count / envelope - sum_{j<r} c_j n^-j) n^r in log space.
inline BigFloat residual(int k, int n, int r, const Integer& count, const std::vector<Rational>& coeffs,
                         mpfr_prec_t prec = 256) {
  if (count <= 0) throw Error("residual needs a positive count at k=" + std::to_string(k) + " n=" + std::to_string(n));
  if (static_cast<int>(coeffs.size()) < r) throw InsufficientOrder("residual needs " + std::to_string(r) + " coefficients");
  BigFloat ratio = exp(log(BigFloat(count, prec)) - log_envelope(k, n, prec));
  BigFloat nn(static_cast<long>(n), prec);
  BigFloat partial(0L, prec);
  for (int j = 0; j < r; ++j) partial = partial + BigFloat(coeffs[static_cast<std::size_t>(j)], prec) / pow(nn, j);
  BigFloat diff = ratio - partial;
  long lost = diff.is_zero() ? static_cast<long>(prec) : ratio.exponent() - diff.exponent();
  if (lost > static_cast<long>(prec) - 32) {
    throw PrecisionUnderflow("cancellation consumed " + std::to_string(lost) + " of " + std::to_string(prec) + " bits");
  }
  return diff * pow(nn, r);
}

/// Doubles the precision on PrecisionUnderflow, up to `max_prec`.
inline BigFloat residual_adaptive(int k, int n, int r, const Integer& count, const std::vector<Rational>& coeffs,
                                  mpfr_prec_t prec = 256, mpfr_prec_t max_prec = 1 << 16) {
  for (;;) {
    try {
      return residual(k, n, r, count, coeffs, prec);
    } catch (const PrecisionUnderflow&) {
      if (prec * 2 > max_prec) throw;
      prec *= 2;
    }
  }
}

struct ResidualRow {
  int k = 0;
  std::vector<std::optional<BigFloat>> cells;
};

struct ResidualTable {
  std::vector<int> ns;
  std::vector<ResidualRow> rows;
};

enum class Which { sg, csg };

inline std::string to_string(Which w) { return w == Which::sg ? "sg" : "csg"; }

/// One row per k. `coeffs_for(k)` supplies c_0..c_{r-1}; failed cells stay empty
/// and are logged to `log`.
inline ResidualTable residual_table(const std::vector<int>& ks, const std::vector<int>& ns, int r,
                                    const CountTable& counts, Which which,
                                    const std::function<std::vector<Rational>(int)>& coeffs_for,
                                    mpfr_prec_t prec = 256, std::ostream* log = &std::cerr) {
  ResidualTable table{ns, {}};
  for (int k : ks) {
    ResidualRow row{k, {}};
    std::optional<std::vector<Rational>> coeffs;
    std::string coeff_error;
    try {
      coeffs = coeffs_for(k);
    } catch (const InternalAssertion&) {
      throw;
    } catch (const Error& e) {
      coeff_error = e.what();
    }
    for (int n : ns) {
      try {
        if (!coeffs) throw Error(coeff_error);
        const Integer& c = counts.count(k, n, which == Which::csg);
        row.cells.emplace_back(residual_adaptive(k, n, r, c, *coeffs, prec));
      } catch (const InternalAssertion&) {
        throw;
      } catch (const Error& e) {
        if (log) *log << "residual k=" << k << " n=" << n << ": " << e.what() << '\n';
        row.cells.emplace_back(std::nullopt);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// "n,10,20,..." then "k=3,5.04,..." with cells rounded half-even to 2 decimals.
inline std::string to_csv(const ResidualTable& t) {
  std::ostringstream os;
  os << "n";
  for (int n : t.ns) os << ',' << n;
  os << '\n';
  for (const auto& row : t.rows) {
    os << "k=" << row.k;
    for (const auto& cell : row.cells) os << ',' << (cell ? cell->to_fixed_half_even(2) : std::string("NA"));
    os << '\n';
  }
  return os.str();
}

/// Parsed CSV table: row label k -> (n -> printed cell).
struct GoldenTable {
  std::vector<int> ns;
  std::vector<std::pair<int, std::vector<std::string>>> rows;
};

inline GoldenTable parse_residual_csv(std::istream& in) {
  GoldenTable g;
  std::string line;
  std::size_t lineno = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, ',')) out.push_back(cur);
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line);
    if (g.ns.empty() && !fields.empty() && fields[0] == "n") {
      for (std::size_t i = 1; i < fields.size(); ++i) {
        try {
          g.ns.push_back(std::stoi(fields[i]));
        } catch (const std::logic_error&) {
          throw ParseError(lineno, "bad n value '" + fields[i] + "'");
        }
      }
      continue;
    }
    if (fields.empty() || fields[0].rfind("k=", 0) != 0) throw ParseError(lineno, "expected a 'k=' row");
    if (fields.size() != g.ns.size() + 1) throw ParseError(lineno, "row width does not match the header");
    int k = 0;
    try {
      k = std::stoi(fields[0].substr(2));
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "bad row label '" + fields[0] + "'");
    }
    g.rows.emplace_back(k, std::vector<std::string>(fields.begin() + 1, fields.end()));
  }
  return g;
}

struct GoldenMismatch {
  int k;
  int n;
  std::string expected;
  std::string actual;
};

/// Cells of `t` differing from the golden table by more than `tolerance`.
/// Cells absent from the golden table are not compared.
inline std::vector<GoldenMismatch> compare_to_golden(const ResidualTable& t, const GoldenTable& g,
                                                     double tolerance = 0.01) {
  std::vector<GoldenMismatch> out;
  for (const auto& row : t.rows) {
    const std::vector<std::string>* golden_row = nullptr;
    for (const auto& [k, cells] : g.rows) {
      if (k == row.k) golden_row = &cells;
    }
    if (!golden_row) continue;
    for (std::size_t i = 0; i < t.ns.size(); ++i) {
      for (std::size_t gi = 0; gi < g.ns.size(); ++gi) {
        if (g.ns[gi] != t.ns[i]) continue;
        const std::string& expected = (*golden_row)[gi];
        const auto& cell = row.cells[i];
        std::string actual = cell ? cell->to_fixed_half_even(2) : "NA";
        bool ok = false;
        if (cell && expected != "NA") {
          // compare in hundredths to avoid binary rounding at the boundary
          long want = std::lround(std::stod(expected) * 100);
          long got = std::lround(std::stod(actual) * 100);
          ok = std::labs(want - got) <= std::lround(tolerance * 100);
        } else {
          ok = expected == actual;
        }
        if (!ok) out.push_back({row.k, t.ns[i], expected, actual});
      }
    }
  }
  return out;
}

}  // namespace rgasym
