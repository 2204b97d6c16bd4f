// asmtss: enumerate ASMs, NILPs and TSSCPPs, print doubly refined
// generating polynomials, and run verification suites.
//
// Exit codes: 0 all checks pass, 1 counterexample found, 2 usage error.

#include "asmtss/asm.hpp"
#include "asmtss/lgv.hpp"
#include "asmtss/nilp.hpp"
#include "asmtss/residue.hpp"
#include "asmtss/suites.hpp"
#include "asmtss/tsscpp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace asmtss;

constexpr int kEnumerateLimit = 7;
constexpr int kBruteForceLimit = 7;
constexpr int kIntegralLimit = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kJson, kCsv, kPretty };

struct NRange {
  int from = 1;
  int to = 1;
};

NRange parse_n(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw UsageError("--n: expected N or A..B, got '" + text + "'");
    return std::stoi(s);
  };
  NRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.from = r.to = parse_int(text);
  } else {
    r.from = parse_int(text.substr(0, dots));
    r.to = parse_int(text.substr(dots + 2));
  }
  if (r.from < 1 || r.to < r.from) throw UsageError("--n: need 1 <= A <= B, got '" + text + "'");
  return r;
}

void check_limit(const NRange& r, int lo, int hi, const std::string& what) {
  if (r.from < lo || r.to > hi)
    throw UsageError(what + " supports n in " + std::to_string(lo) + ".." + std::to_string(hi) + " (got " +
                     std::to_string(r.from) + ".." + std::to_string(r.to) + ")");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// ---- enumerate ------------------------------------------------------------

json asm_json(const asm6v::Asm& a) { return a.rows(); }

json nilp_json(const nilp::Nilp& p) {
  std::string extra;
  for (auto s : p.extra()) extra += nilp::to_string(s);
  return {{"paths", p.path_strings()}, {"extra", extra}};
}

json tsscpp_json(const nilp::Tsscpp& t) { return {{"rows", t.row_strings()}, {"triangle", t.triangle()}}; }

std::string pretty_object(const json& j) {
  if (j.is_array()) {
    std::string out;
    for (const auto& row : j) {
      std::string line;
      for (const auto& v : row) {
        const int x = v.get<int>();
        line += x < 0 ? " -" : x == 0 ? " 0" : " +";
      }
      out += " " + line + "\n";
    }
    return out;
  }
  if (j.contains("paths")) {
    std::string out;
    int t = 0;
    for (const auto& p : j["paths"]) out += "  path " + std::to_string(t++) + ": " + p.get<std::string>() + "\n";
    return out + "  extra:  " + j["extra"].get<std::string>() + "\n";
  }
  std::string out;
  for (const auto& r : j["rows"]) out += "  " + r.get<std::string>() + "\n";
  return out;
}

int cmd_enumerate(const std::string& kind, const NRange& range, Format format, std::ostream& os) {
  check_limit(range, 1, kEnumerateLimit, "enumerate " + kind);
  if (format == Format::kJson) os << "{\"schema\":\"v1\",\"command\":\"enumerate\",\"kind\":\"" << kind << "\",\"results\":[";
  if (format == Format::kCsv) os << "n,index,object\n";
  for (int n = range.from; n <= range.to; ++n) {
    std::uint64_t count = 0;
    if (format == Format::kJson) os << (n > range.from ? "," : "") << "\n{\"n\":" << n << ",\"objects\":[";
    auto emit = [&](const json& j) {
      switch (format) {
        case Format::kJson:
          os << (count ? ",\n" : "\n") << j.dump();
          break;
        case Format::kCsv:
          os << n << "," << count << "," << csv_field(j.dump()) << "\n";
          break;
        case Format::kPretty:
          os << kind << " n=" << n << " #" << count << "\n" << pretty_object(j);
          break;
      }
      ++count;
    };
    if (kind == "asm") {
      asm6v::for_each_asm(n, [&](const asm6v::Asm& a) { emit(asm_json(a)); });
    } else if (kind == "nilp") {
      nilp::for_each_nilp(n, [&](const nilp::Nilp& p) { emit(nilp_json(p)); });
    } else {
      for (const auto& t : nilp::enumerate_tsscpps(n)) emit(tsscpp_json(t));
    }
    if (format == Format::kJson) os << "\n],\"count\":" << count << "}";
    if (format == Format::kPretty) os << kind << " n=" << n << " count: " << count << "\n";
  }
  if (format == Format::kJson) os << "\n]}\n";
  return 0;
}

// ---- genfun ---------------------------------------------------------------

struct GenfunOptions {
  std::string weights = "x,y";
  std::string form = "raw";
  std::string a = "zero";
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

residue::AVector parse_a(const std::string& text, int n, std::uint64_t seed) {
  if (text == "zero") return residue::AVector(n - 1, MultiPoly<Rational>());
  if (text == "u") return residue::a_vector_u(n);
  if (text == "random") return residue::a_vector_random(n, suites::seed_for(seed, n));
  const auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != n - 1)
    throw UsageError("--a: need n-1 = " + std::to_string(n - 1) + " comma-separated rationals, or zero|u|random");
  residue::AVector a;
  for (const auto& p : parts) {
    try {
      a.emplace_back(Rational::parse(p));
    } catch (const std::exception&) {
      throw UsageError("--a: cannot parse '" + p + "'");
    }
  }
  return a;
}

// Each weight is a rational or a variable name; missing weights are 1.
std::vector<MultiPoly<Rational>> parse_weights(const std::string& text, int n, std::vector<std::string>& symbols) {
  std::vector<MultiPoly<Rational>> t;
  for (const auto& w : split(text, ',')) {
    if (w.empty()) throw UsageError("--weights: empty entry");
    if (std::isalpha(static_cast<unsigned char>(w[0]))) {
      if (!std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; }))
        throw UsageError("--weights: bad variable name '" + w + "'");
      t.push_back(MultiPoly<Rational>::variable(w));
      if (std::find(symbols.begin(), symbols.end(), w) == symbols.end()) symbols.push_back(w);
    } else {
      try {
        t.emplace_back(Rational::parse(w));
      } catch (const std::exception&) {
        throw UsageError("--weights: cannot parse '" + w + "'");
      }
    }
  }
  while (static_cast<int>(t.size()) < n) t.emplace_back(1);
  return t;
}

struct GenfunResult {
  int n;
  std::string polynomial;
  std::optional<GenPoly> table;
  std::string x = "x", y = "y";
};

GenfunResult genfun_one(const std::string& kind, int n, const GenfunOptions& o) {
  GenfunResult r{n, "", std::nullopt};
  auto set = [&](GenPoly g) {
    r.polynomial = g.to_string();
    r.table = std::move(g);
  };
  if (kind == "asm-tilde") {
    set(asm6v::genfun_doubly_refined(n, Convention::kTilde, o.workers));
  } else if (kind == "asm-reversed") {
    set(asm6v::genfun_doubly_refined(n, Convention::kReversed, o.workers));
  } else if (kind == "nilp") {
    set(nilp::genfun_U(n, 0, 1, o.workers));
  } else if (kind == "lgv") {
    std::vector<std::string> symbols;
    const auto t = parse_weights(o.weights, n, symbols);
    const auto p = nilp::lgv_genfun(n, t);
    r.polynomial = p.to_string();
    if (symbols.size() <= 2) {
      r.x = symbols.size() > 0 ? symbols[0] : "x";
      r.y = symbols.size() > 1 ? symbols[1] : (r.x == "y" ? "x" : "y");
      try {
        GenPoly g = GenPoly::from_poly(p, r.x, r.y);
        r.polynomial = g.to_string(r.x, r.y);
        r.table = std::move(g);
      } catch (const std::exception&) {
        // not a table with nonnegative integer entries: keep the polynomial only
      }
    }
  } else if (kind == "integral-A") {
    set(residue::integral_A(n));
  } else if (kind == "integral-U") {
    if (o.form != "raw" && o.form != "after-u1") throw UsageError("--form must be raw or after-u1");
    set(residue::integral_U(n, o.form == "raw" ? residue::UForm::kRaw : residue::UForm::kAfterU1));
  } else {
    set(residue::integral_I(n, parse_a(o.a, n, o.seed)));
  }
  return r;
}

int cmd_genfun(const std::string& kind, const NRange& range, const GenfunOptions& o, Format format, std::ostream& os) {
  const bool integral = kind.rfind("integral-", 0) == 0;
  check_limit(range, 1, integral ? kIntegralLimit : kBruteForceLimit, "genfun " + kind);
  std::vector<GenfunResult> results;
  for (int n = range.from; n <= range.to; ++n) results.push_back(genfun_one(kind, n, o));

  if (format == Format::kJson) {
    json out = {{"schema", "v1"}, {"command", "genfun"}, {"kind", kind}};
    if (kind == "lgv") out["weights"] = o.weights;
    if (kind == "integral-U") out["form"] = o.form;
    if (kind == "integral-I") out["a"] = o.a;
    json arr = json::array();
    for (const auto& r : results) {
      json j = {{"n", r.n}, {"polynomial", r.polynomial}};
      if (r.table) {
        j["variables"] = {r.x, r.y};
        j["coefficients"] = r.table->matrix();
        j["total"] = r.table->total();
      }
      arr.push_back(std::move(j));
    }
    out["results"] = std::move(arr);
    os << out.dump(2) << "\n";
  } else if (format == Format::kCsv) {
    for (const auto& r : results)
      if (!r.table) throw UsageError("csv output needs an integer coefficient table; use --format json");
    os << "n,i,j,coefficient\n";
    for (const auto& r : results) {
      for (const auto& [ij, c] : r.table->coefficients()) os << r.n << "," << ij.first << "," << ij.second << "," << c << "\n";
    }
  } else {
    for (const auto& r : results) {
      os << kind << " n=" << r.n << ": " << r.polynomial << "\n";
      if (!r.table) continue;
      os << "  rows " << r.x << "^i, columns " << r.y << "^j\n";
      for (const auto& row : r.table->matrix()) {
        os << " ";
        for (auto c : row) os << " " << std::setw(6) << c;
        os << "\n";
      }
    }
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

json record_json(const CheckRecord& c) {
  return {{"check", c.check}, {"n", c.n}, {"point", c.point}, {"expected", c.expected}, {"got", c.got},
          {"pass", c.pass}};
}

int cmd_verify(const std::string& suite, const NRange& range, const suites::SuiteOptions& o, Format format,
               std::ostream& os) {
  const auto& info = suites::suite_info(suite);
  check_limit(range, info.min_n, info.max_n, "verify " + suite);
  Report all;
  std::vector<std::pair<int, std::size_t>> per_n;
  for (int n = range.from; n <= range.to; ++n) {
    const Report r = suites::run_suite(suite, n, o);
    per_n.emplace_back(n, r.size());
    append(all, r);
  }
  const CheckRecord* failure = nullptr;
  for (const auto& c : all)
    if (!c.pass) {
      failure = &c;
      break;
    }
  const int samples = o.samples < 0 ? info.default_samples : o.samples;

  if (format == Format::kJson) {
    json checks = json::array();
    for (const auto& c : all) checks.push_back(record_json(c));
    json out = {{"schema", "v1"},
                {"command", "verify"},
                {"suite", suite},
                {"n", {{"from", range.from}, {"to", range.to}}},
                {"seed", o.seed},
                {"samples", samples},
                {"pass", failure == nullptr},
                {"check_count", all.size()},
                {"checks", std::move(checks)},
                {"counterexample", failure ? record_json(*failure) : json(nullptr)}};
    os << out.dump(2) << "\n";
  } else if (format == Format::kCsv) {
    os << "check,n,point,expected,got,pass\n";
    for (const auto& c : all)
      os << csv_field(c.check) << "," << c.n << "," << csv_field(join(c.point, ";")) << "," << csv_field(c.expected)
         << "," << csv_field(c.got) << "," << (c.pass ? "true" : "false") << "\n";
  } else {
    std::size_t offset = 0;
    for (const auto& [n, count] : per_n) {
      std::size_t ok = 0;
      for (std::size_t k = offset; k < offset + count; ++k) ok += all[k].pass;
      os << (ok == count ? "PASS " : "FAIL ") << suite << " n=" << n << ": " << ok << "/" << count << " checks\n";
      offset += count;
    }
    for (const auto& c : all)
      if (!c.pass)
        os << "  counterexample " << c.check << " n=" << c.n << " at [" << join(c.point, "; ") << "]\n    expected "
           << c.expected << "\n    got      " << c.got << "\n";
  }
  if (failure) {
    std::cerr << "counterexample: " << record_json(*failure).dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and verification for ASMs, TSSCPPs and NILPs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "asmtss 0.1.0");

  std::string n_text = "1", format_text = "json", out_path;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n,--n-range", n_text, "size N or range A..B")->required();
    sub->add_option("--format", format_text, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "write to this file instead of stdout");
    sub->add_option("--workers", workers, "worker threads (results do not depend on it)")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
  };

  std::string enum_kind;
  auto* enumerate = app.add_subcommand("enumerate", "list all objects of size n (n <= 7)");
  enumerate->add_option("kind", enum_kind, "asm, nilp or tsscpp")
      ->required()
      ->check(CLI::IsMember({"asm", "nilp", "tsscpp"}));
  add_common(enumerate);

  std::string genfun_kind;
  GenfunOptions gopts;
  auto* genfun = app.add_subcommand(
      "genfun", "doubly refined generating polynomial (brute force n <= 7, integral routes n <= 5)");
  genfun->add_option("kind", genfun_kind, "asm-tilde, asm-reversed, nilp, lgv, integral-A, integral-U, integral-I")
      ->required()
      ->check(CLI::IsMember({"asm-tilde", "asm-reversed", "nilp", "lgv", "integral-A", "integral-U", "integral-I"}));
  genfun->add_option("--weights", gopts.weights, "lgv slice weights t_0,t_1,...; names or rationals, rest 1")
      ->capture_default_str();
  genfun->add_option("--form", gopts.form, "integral-U form: raw or after-u1")->capture_default_str();
  genfun->add_option("--a", gopts.a, "integral-I a-vector: zero, u, random or n-1 rationals")->capture_default_str();
  genfun->add_option("--seed", seed, "seed for --a random")->capture_default_str();
  add_common(genfun);

  std::string suite;
  int samples = -1;
  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 1 on a counterexample");
  std::vector<std::string> suite_names;
  for (const auto& s : suites::suite_table()) suite_names.push_back(s.name);
  verify->add_option("suite", suite, join(suite_names, ", "))->required()->check(CLI::IsMember(suite_names));
  verify->add_option("--seed", seed, "seed for every random sample")->capture_default_str();
  verify->add_option("--samples", samples, "samples per size (default depends on the suite)")
      ->check(CLI::NonNegativeNumber);
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const NRange range = parse_n(n_text);
    const Format format = format_text == "csv" ? Format::kCsv : format_text == "pretty" ? Format::kPretty : Format::kJson;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw UsageError("cannot open '" + out_path + "' for writing");
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    if (enumerate->parsed()) return cmd_enumerate(enum_kind, range, format, os);
    if (genfun->parsed()) {
      gopts.seed = seed;
      gopts.workers = workers;
      return cmd_genfun(genfun_kind, range, gopts, format, os);
    }
    return cmd_verify(suite, range, {samples, seed, workers}, format, os);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
