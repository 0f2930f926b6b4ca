#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rgasym/rgasym.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace rgasym;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kInternal = 3, kDegree = 4, kCountMismatch = 5, kGolden = 6 };

struct UsageError : Error {
  using Error::Error;
};

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string plain_list(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out;
}

/// "a:b:step", "a:b" (step 1) or "a,b,c".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  try {
    if (text.find(':') != std::string::npos) {
      std::vector<int> parts;
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ':')) parts.push_back(std::stoi(item));
      if (parts.size() < 2 || parts.size() > 3) throw UsageError("range must be a:b or a:b:step");
      int step = parts.size() == 3 ? parts[2] : 1;
      if (step <= 0) throw UsageError("range step must be positive");
      for (int n = parts[0]; n <= parts[1]; n += step) out.push_back(n);
      return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse range '" + text + "'");
  }
  return out;
}

struct Common {
  std::string data_dir = RGASYM_DATA_DIR;
  std::string cache_dir;
};

CountTable load_table(const Common& c) {
  CountTable table;
  if (auto dir = resolve_cache_dir(c.cache_dir)) load_cache(table, *dir / "counts.txt");
  return table;
}

void store_table(const Common& c, const CountTable& table) {
  if (auto dir = resolve_cache_dir(c.cache_dir)) save_cache(table, *dir / "counts.txt");
}

int run(int argc, char** argv) {
  CLI::App app{"Exact asymptotic expansions for labeled regular graphs"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  Common common;

  std::string expand_format = "plain";
  std::string formal_format = "json";
  std::string count_format = "plain";
  std::string validate_format = "csv";
  std::string stirling_format = "plain";
  auto add_common = [&](CLI::App* sub, std::string& format, std::vector<std::string> formats) {
    sub->add_option("--data-dir", common.data_dir, "Directory holding counts/ and golden/");
    sub->add_option("--cache-dir", common.cache_dir, "Count cache directory (overrides RGASYM_CACHE_DIR)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  };

  // expand
  auto* expand = app.add_subcommand("expand", "Coefficients [z^0..z^r] of S~G (sg) or C~SG (csg)");
  std::string which = "sg";
  int k = 3;
  int order = 2;
  std::string cutoff = "fixed";
  expand->add_option("which", which, "sg or csg")->required()->check(CLI::IsMember({"sg", "csg"}));
  expand->add_option("--k", k, "Degree")->required();
  expand->add_option("--order,-r", order, "Last coefficient index r")->check(CLI::NonNegativeNumber);
  expand->add_option("--j-cutoff", cutoff, "csg only: fixed (j <= 2r) or dynamic")
      ->check(CLI::IsMember({"fixed", "dynamic"}));
  add_common(expand, expand_format, {"plain", "json"});

  // formal-k
  auto* formal = app.add_subcommand("formal-k", "k^r [z^r] S~G as a polynomial in k, by interpolation");
  int formal_r = 1;
  formal->add_option("--order,-r", formal_r, "Coefficient index r")->check(CLI::NonNegativeNumber);
  formal->add_option("--format", formal_format, "Output format")->check(CLI::IsMember({"plain", "json"}));

  // count
  auto* count = app.add_subcommand("count", "Exact number of labeled k-regular graphs on n vertices");
  int count_n = 4;
  std::string method = "auto";
  int brute_limit = 10;
  count->add_option("--k", k, "Degree")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--n", count_n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--method", method, "formula, brute, dp or auto (formula, checked by brute when n <= limit)")
      ->check(CLI::IsMember({"formula", "brute", "dp", "auto"}));
  count->add_option("--brute-limit", brute_limit, "Largest n for brute force")->check(CLI::NonNegativeNumber);
  add_common(count, count_format, {"plain", "json"});

  // validate
  auto* validate = app.add_subcommand("validate", "Residual table against exact counts");
  std::string ks_text = "2,3,4,5";
  std::string ns_text = "10:100:10";
  int validate_r = 3;
  int precision = 256;
  std::string golden;
  bool no_golden = false;
  validate->add_option("--which", which, "sg or csg")->check(CLI::IsMember({"sg", "csg"}));
  validate->add_option("--k", ks_text, "Comma-separated k values");
  validate->add_option("--n", ns_text, "n values: a:b:step, a:b or a,b,c");
  validate->add_option("--r", validate_r, "Truncation order r")->check(CLI::NonNegativeNumber);
  validate->add_option("--precision", precision, "Working precision in bits")->check(CLI::Range(64, 1 << 16));
  validate->add_option("--golden", golden, "Golden CSV (default: <data-dir>/golden/<which>_residuals.csv)");
  validate->add_flag("--no-golden", no_golden, "Skip the golden comparison");
  add_common(validate, validate_format, {"csv", "json"});

  // stirling
  auto* stirling = app.add_subcommand("stirling", "Coefficients of the Stirling series of n!");
  int stirling_r = 3;
  stirling->add_option("--order,-r", stirling_r, "Last coefficient index r")->check(CLI::NonNegativeNumber);
  stirling->add_option("--format", stirling_format, "Output format")->check(CLI::IsMember({"plain", "json"}));

  // bfile
  auto* bfile = app.add_subcommand("bfile", "Write a b-file of counts computed by the residual-degree DP");
  int nmax = 100;
  bool connected = false;
  std::string out_path;
  bfile->add_option("--k", k, "Degree")->required()->check(CLI::NonNegativeNumber);
  bfile->add_option("--nmax", nmax, "Last index")->check(CLI::NonNegativeNumber);
  bfile->add_flag("--connected", connected, "Connected graphs (log of the EGF)");
  bfile->add_option("--out", out_path, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*expand) {
    if (which == "sg" && k < 2) throw UsageError("expand sg needs k >= 2");
    if (which == "csg" && k < 3) throw UsageError("expand csg needs k >= 3");
    std::vector<Rational> coeffs;
    json j{{"which", which}, {"k", k}, {"r", order}};
    if (which == "sg") {
      coeffs = sg_tilde_series(k, order);
    } else {
      CountTable table = load_table(common);
      ensure_counts(table, common.data_dir, k, 2 * order + 2, false);
      coeffs = csg_tilde(k, order, table, cutoff == "fixed" ? JCutoff::fixed : JCutoff::dynamic);
      if (order >= predicted_gap(k)) j["gap_valuation"] = valuation_gap(k, order, table).valuation;
    }
    j["coefficients"] = rational_list(coeffs);
    if (expand_format == "json") {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << plain_list(coeffs) << '\n';
    }
    return kOk;
  }

  if (*formal) {
    FormalKPolynomial p = formal_k_interpolate(formal_r);
    if (formal_format == "json") {
      json j{{"r", formal_r}, {"poly", rational_list(p.numerator)}, {"denom_power", formal_r}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "(" << plain_list(p.numerator) << ") / k^" << formal_r << '\n';
    }
    return kOk;
  }

  if (*count) {
    Integer value;
    std::string provenance;
    if (method == "brute") {
      value = count_brute(k, count_n, brute_limit);
      provenance = "brute";
    } else if (method == "dp") {
      value = count_degree_dp(k, count_n).back();
      provenance = "degree_dp";
    } else {
      CountTable table = load_table(common);
      bool odd = (k * count_n) % 2 != 0;
      if (odd) {
        value = 0;
      } else if (table.contains(k, count_n) && method == "auto") {
        value = table.count(k, count_n);
        provenance = to_string(table.entry(k, count_n).provenance);
      } else if (k < 2) {
        value = count_brute(k, count_n, std::max(brute_limit, count_n));
      } else {
        value = count_hadamard(k, count_n);
      }
      if (provenance.empty()) provenance = "formula";
      if (method == "auto" && count_n <= brute_limit) {
        Integer check = count_brute(k, count_n, brute_limit);
        if (check != value) {
          std::cerr << "count mismatch: " << provenance << " gives " << value << ", brute gives " << check << '\n';
          return kCountMismatch;
        }
      }
      if (!odd && k >= 2) {
        table.insert(k, count_n, value, parse_provenance(provenance));
        store_table(common, table);
      }
    }
    if (count_format == "json") {
      json j{{"k", k}, {"n", count_n}, {"count", value.get_str()}, {"provenance", provenance}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << value << '\n';
    }
    return kOk;
  }

  if (*validate) {
    std::vector<int> ks = parse_range(ks_text);
    std::vector<int> ns = parse_range(ns_text);
    Which w = which == "sg" ? Which::sg : Which::csg;
    for (int kk : ks) {
      if (kk < (w == Which::sg ? 2 : 3)) throw UsageError("k=" + std::to_string(kk) + " is out of range for " + which);
    }
    CountTable table = load_table(common);
    int nmax = 2 * validate_r + 2;
    for (int n : ns) nmax = std::max(nmax, n);
    if (!ns.empty()) {
      for (int kk : ks) {
        ensure_counts(table, common.data_dir, kk, nmax, false);
        if (w == Which::csg) ensure_counts(table, common.data_dir, kk, nmax, true);
      }
    }
    auto coeffs_for = [&](int kk) {
      if (w == Which::sg) return sg_tilde_series(kk, validate_r);
      return csg_tilde(kk, validate_r, table);
    };
    ResidualTable t = residual_table(ks, ns, validate_r, table, w, coeffs_for, precision);
    if (validate_format == "json") {
      json j{{"which", which}, {"r", validate_r}, {"precision", precision}, {"n", ns}, {"rows", json::array()}};
      for (const auto& row : t.rows) {
        json cells = json::array();
        for (const auto& c : row.cells) cells.push_back(c ? json(c->to_string(40)) : json(nullptr));
        j["rows"].push_back({{"k", row.k}, {"cells", cells}});
      }
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << to_csv(t);
    }
    if (!no_golden && !ns.empty()) {
      fs::path path = golden.empty() ? fs::path(common.data_dir) / "golden" / (which + "_residuals.csv") : fs::path(golden);
      std::ifstream in(path);
      if (!in) throw Error("cannot open golden table " + path.string());
      auto mismatches = compare_to_golden(t, parse_residual_csv(in));
      for (const auto& m : mismatches) {
        std::cerr << "golden mismatch k=" << m.k << " n=" << m.n << ": expected " << m.expected << ", got " << m.actual
                  << '\n';
      }
      if (!mismatches.empty()) return kGolden;
    }
    return kOk;
  }

  if (*stirling) {
    Series s = stirling_series(stirling_r);
    if (stirling_format == "json") {
      std::cout << json{{"r", stirling_r}, {"coefficients", rational_list(s.coefficients())}}.dump(2) << '\n';
    } else {
      std::cout << plain_list(s.coefficients()) << '\n';
    }
    return kOk;
  }

  if (*bfile) {
    std::vector<Integer> values = count_degree_dp(k, nmax);
    std::vector<std::string> header;
    if (connected) {
      CountTable table;
      for (int n = 0; n <= nmax; ++n) table.insert(k, n, values[static_cast<std::size_t>(n)], Provenance::degree_dp);
      values = connected_counts(k, nmax, table);
      header.push_back("Connected labeled " + std::to_string(k) + "-regular graphs on n vertices, n = 0.." +
                       std::to_string(nmax) + ".");
      header.push_back("Computed as n! [x^n] log of the EGF of all labeled " + std::to_string(k) +
                       "-regular graphs, themselves counted by the residual-degree DP.");
    } else {
      header.push_back("Labeled " + std::to_string(k) + "-regular graphs on n vertices, n = 0.." + std::to_string(nmax) +
                       ".");
      header.push_back("Computed by `rgasym bfile`: DP over multisets of residual degrees.");
    }
    if (out_path.empty()) {
      write_bfile(std::cout, header, 0, values);
    } else {
      std::ofstream out(out_path);
      if (!out) throw Error("cannot write " + out_path);
      write_bfile(out, header, 0, values);
    }
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegreeOverflow& e) {
    std::cerr << "degree overflow: " << e.what() << '\n';
    return kDegree;
  } catch (const InternalAssertion& e) {
    std::cerr << "internal assertion: " << e.what() << '\n';
    return kInternal;
  } catch (const LimitExceeded& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
