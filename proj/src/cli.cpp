#include "nlf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "nlf/boolfn.hpp"
#include "nlf/cipher.hpp"
#include "nlf/gatecount.hpp"
#include "nlf/mmfunc.hpp"
#include "nlf/params.hpp"
#include "nlf/security.hpp"
#include "nlf/tapsearch.hpp"

namespace nlf::cli {

namespace {

using nlohmann::json;

const std::vector<int> kLevelList(std::begin(cipher::kLevels), std::end(cipher::kLevels));

std::vector<int> selected_levels(int level) {
  return level == 0 ? kLevelList : std::vector<int>{level};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_params(std::ostream& out, int level) {
  json all = json::array();
  for (int lv : selected_levels(level)) all.push_back(cipher::to_json(cipher::load_params(lv)));
  print_json(out, level == 0 ? all : all.front());
  return kExitOk;
}

int cmd_keystream(std::ostream& out, int level, const std::string& key_hex,
                  const std::string& iv_hex, std::uint64_t nbits, const std::string& format) {
  const auto p = cipher::load_params(level);
  const Bits key = cipher::parse_key_hex(key_hex, level, "key");
  const Bits iv = cipher::parse_key_hex(iv_hex, level, "iv");
  cipher::KeystreamGenerator gen(p, key, iv);

  // Chunks are whole bytes so the hex digits of consecutive chunks line up.
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 20;
  if (format == "json") {
    if (nbits > (std::uint64_t{1} << 27)) {
      throw std::invalid_argument("json output is limited to 2^27 bits; use hex or bin");
    }
    const Bits z = gen.generate(nbits);
    print_json(out, {{"level", level}, {"bits", nbits}, {"keystream", z.to_hex()}});
    return kExitOk;
  }
  std::uint64_t left = nbits;
  while (left > 0) {
    const std::uint64_t n = std::min(left, kChunk);
    if (format == "bin") {
      const auto bytes = gen.generate_bytes(n);
      out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    } else {
      out << gen.generate(n).to_hex();
    }
    left -= n;
  }
  if (format == "hex" && nbits > 0) out << '\n';
  return kExitOk;
}

int cmd_analyze(std::ostream& out, std::ostream& err, int n, const std::string& table,
                bool random, std::uint64_t seed) {
  if (n < 4 || n > 12) throw std::invalid_argument("analyze supports 4 <= n <= 12");
  json j;
  if (random) {
    std::mt19937_64 rng(seed);
    Bits t(std::size_t{1} << n);
    for (std::size_t x = 0; x < t.size(); ++x) t.set(x, rng() & 1);
    j = boolfn::report(boolfn::BooleanFunction(n, std::move(t)));
    j["seed"] = seed;
    err << "seed " << seed << '\n';
  } else if (!table.empty()) {
    j = boolfn::report(boolfn::BooleanFunction::from_hex(n, table));
  } else {
    j = boolfn::report(mm::small_instance(n));
    j["function"] = "MM_" + std::to_string(n);
  }
  print_json(out, j);
  return kExitOk;
}

int cmd_tapsearch(std::ostream& out, std::ostream& err, int level, int kappa, std::size_t L,
                  std::size_t m, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (level != 0) {
    const auto& r = params::row(level);
    kappa = r.level;
    L = r.L;
    m = r.m;
  }
  if (kappa == 0 || L == 0 || m == 0) {
    throw std::invalid_argument("tapsearch needs --level or all of --kappa, --L, --m");
  }
  err << "seed " << seed << '\n';
  const auto res = taps::search(kappa, L, m, trials, seed, threads);
  json j = taps::to_json(res);
  j["fsga"] = taps::to_json(taps::fsga_margin(2 * m + 1, L, res.delta, kappa));
  print_json(out, j);
  return kExitOk;
}

int cmd_security(std::ostream& out, int level, int B, bool budget_is_kappa,
                 const std::string& format) {
  json all = json::array();
  bool ok = true;
  std::ostringstream text;
  text << "level\tB\tlog2_alpha\tfca\tlog2_beta\tlog2_gamma\tlog2_d_sum\tfsga_c\tlog2_fsga\tchi\tpass\n";
  for (int lv : selected_levels(level)) {
    const auto p = cipher::load_params(lv);
    const auto r = security::report(p, budget_is_kappa ? lv : B);
    ok = ok && r.passed();
    all.push_back(security::to_json(r));
    text << std::fixed << std::setprecision(2) << lv << '\t' << r.B << '\t' << r.alpha.log2_alpha
         << '\t' << (r.fca.all() ? "ok" : "FAIL") << '\t' << r.log2_beta << '\t'
         << r.gamma.log2_gamma << '\t' << r.gamma.log2_d_sum << '\t' << r.fsga.c << '\t'
         << r.fsga.log2_complexity << '\t' << r.chi << '\t' << (r.passed() ? "PASS" : "FAIL")
         << '\n';
  }
  if (format == "text") {
    out << text.str();
  } else {
    print_json(out, level == 0 ? all : all.front());
  }
  return ok ? kExitOk : kExitDomain;
}

int cmd_gates(std::ostream& out, int level, int flipflop, const std::string& format) {
  json all = json::array();
  std::ostringstream text;
  text << "level\tL\tm\tlfsr\tfilter\tnb\tir\ttotal\n";
  for (int lv : selected_levels(level)) {
    const auto p = cipher::load_params(lv);
    const auto g = gates::cipher_units(p, flipflop);
    json j = gates::to_json(g);
    j["level"] = lv;
    j["flipflop"] = flipflop;
    j["adders"] = gates::to_json(gates::weight_adders(p.m));
    const auto t = gates::threshold_circuit(p.m);
    j["threshold"] = {{"or", t.or_gates}, {"and", t.and_gates}};
    all.push_back(j);
    text << std::fixed << std::setprecision(1) << lv << '\t' << p.L << '\t' << p.m << '\t'
         << g.lfsr << '\t' << g.filter << '\t' << g.nb << '\t' << g.ir << '\t' << g.total << '\n';
  }
  if (format == "text") {
    out << text.str();
  } else {
    print_json(out, level == 0 ? all : all.front());
  }
  return kExitOk;
}

void line(std::ostream& out, bool ok, const std::string& what, bool& all_ok) {
  out << (ok ? "PASS " : "FAIL ") << what << '\n';
  all_ok = all_ok && ok;
}

int cmd_verify(std::ostream& out, const std::string& which) {
  bool ok = true;
  const bool every = which == "all";
  for (const auto& r : params::table()) {
    const auto v = params::check_row(r);
    auto passed = [&](std::initializer_list<const char*> names) {
      for (auto n : names) {
        const auto* c = v.find(n);
        if (!c || !c->passed) return false;
      }
      return true;
    };
    const std::string tag = " level=" + std::to_string(r.level);
    if (every || which == "1") {
      const auto p = cipher::load_params(r.level);
      const bool margins = security::beta(p.L, p.m) > r.level &&
                           security::gamma(p.L, p.m).log2_gamma > r.level;
      line(out, passed({"deg", "lb", "ai", "fai", "L_first_prime", "m_bound"}) && margins,
           "table1" + tag + " L=" + std::to_string(r.L) + " m=" + std::to_string(r.m), ok);
    }
    if (every || which == "4") {
      line(out, passed({"nu", "delta", "nu_half_m"}),
           "table4" + tag + " nu=" + std::to_string(r.nu) + " delta=" + std::to_string(r.delta), ok);
    }
    if (every || which == "7") {
      std::ostringstream g;
      g << r.gates[4];
      line(out, passed({"gates"}), "table7" + tag + " total=" + g.str(), ok);
    }
    if (which == "params") {
      for (const auto& c : v.checks) {
        if (c.informational) {
          out << "INFO " << c.name << tag << ' ' << c.detail << '\n';
        } else {
          line(out, c.passed, c.name + tag + (c.detail.empty() ? "" : " " + c.detail), ok);
        }
      }
    }
  }
  return ok ? kExitOk : kExitDomain;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonlinear filter generator toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int level = 0;
  std::string key, iv, format = "hex", table, which = "all";
  std::uint64_t bits = 0, seed = 1, trials = 10000;
  int flipflop = 8, B = security::kDefaultBudget, n = 0, kappa = 0;
  std::size_t L = 0, m = 0;
  unsigned threads = 0;
  bool random = false, budget_is_kappa = false;
  const auto levels = CLI::IsMember(kLevelList);

  auto* params_cmd = app.add_subcommand("params", "Print an embedded parameter set as JSON");
  params_cmd->add_option("--level", level, "Security level (all levels if omitted)")->check(levels);

  auto* ks = app.add_subcommand("keystream", "Generate keystream");
  ks->add_option("--level", level, "Security level")->required()->check(levels);
  ks->add_option("--key", key, "Key, kappa/4 hex digits")->required();
  ks->add_option("--iv", iv, "IV, kappa/4 hex digits")->required();
  ks->add_option("--bits", bits, "Number of keystream bits")->required();
  ks->add_option("--format", format, "hex, bin (raw bytes) or json")
      ->check(CLI::IsMember({"hex", "bin", "json"}));

  auto* an = app.add_subcommand("analyze", "Boolean-function metrics of MM_n or a given table");
  an->add_option("--n", n, "Variable count, 4..12")->required()->check(CLI::Range(4, 12));
  an->add_option("--table", table, "Truth table as hex (default: MM_n)");
  an->add_flag("--random", random, "Analyze a random table drawn from --seed");
  an->add_option("--seed", seed, "PRNG seed");

  auto* ts = app.add_subcommand("tapsearch", "Randomized tap-position search");
  ts->add_option("--level", level, "Take kappa, L and m from a level")->check(levels);
  ts->add_option("--kappa", kappa, "Security level in bits");
  ts->add_option("--L", L, "Register length");
  ts->add_option("--m", m, "Half the filter variable count");
  ts->add_option("--trials", trials, "Number of random candidates")->check(CLI::PositiveNumber);
  ts->add_option("--seed", seed, "PRNG seed");
  ts->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* sec = app.add_subcommand("security", "Attack-margin report");
  sec->add_option("--level", level, "Security level (all levels if omitted)")->check(levels);
  sec->add_option("--B", B, "Keystream budget exponent")->check(CLI::PositiveNumber);
  sec->add_flag("--B-kappa", budget_is_kappa, "Use B = kappa for each level");
  sec->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* gt = app.add_subcommand("gates", "NAND-unit gate-count estimate");
  gt->add_option("--level", level, "Security level (all levels if omitted)")->check(levels);
  gt->add_option("--flipflop", flipflop, "Flip-flop price")->check(CLI::IsMember({8, 12}));
  gt->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* vf = app.add_subcommand("verify", "Recompute the reference tables");
  vf->add_option("--table", which, "1, 4, 7, all or params")
      ->check(CLI::IsMember({"1", "4", "7", "all", "params"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*params_cmd) return cmd_params(out, level);
    if (*ks) return cmd_keystream(out, level, key, iv, bits, format);
    if (*an) return cmd_analyze(out, err, n, table, random, seed);
    if (*ts) return cmd_tapsearch(out, err, level, kappa, L, m, trials, seed, threads);
    if (*sec) return cmd_security(out, level, B, budget_is_kappa, format == "hex" ? "json" : format);
    if (*gt) return cmd_gates(out, level, flipflop, format == "hex" ? "json" : format);
    if (*vf) return cmd_verify(out, which);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace nlf::cli
