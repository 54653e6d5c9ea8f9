#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <regex>
#include <sstream>

#include "swdeg/errors.hpp"
#include "swdeg/json_io.hpp"
#include "swdeg/numutil.hpp"

using namespace swdeg;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "text";
  std::string table_path;
};

bool json_mode(const Options& opts) { return opts.format == "json"; }

std::string resolve_table_file(const Options& opts, const std::string& spec) {
  namespace fs = std::filesystem;
  if (fs::exists(spec)) return spec;
  if (spec.find('/') == std::string::npos && !opts.table_path.empty()) {
    std::stringstream dirs(opts.table_path);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty()) continue;
      fs::path candidate = fs::path(dir) / spec;
      if (fs::exists(candidate)) return candidate.string();
    }
  }
  throw PreconditionError("character table file not found: " + spec);
}

// Group spec grammar: Z<n> and products Z<n>xZ<m>...; anything else is
// treated as a character-table file.
Group parse_group_spec(const Options& opts, const std::string& spec) {
  static const std::regex abelian_re("Z[0-9]+(xZ[0-9]+)*");
  if (std::regex_match(spec, abelian_re)) {
    std::vector<long> orders;
    std::stringstream parts(spec);
    std::string part;
    while (std::getline(parts, part, 'x')) {
      orders.push_back(std::stol(part.substr(1)));
    }
    return Group::abelian(std::move(orders));
  }
  return Group::tabled(parse_character_table_file(resolve_table_file(opts, spec)));
}

// "x*[L2(G)] + y*rho_triv" when the rep is x*regular + y*trivial; empty
// otherwise.
std::string closed_form(const VirtualRep& v) {
  const Group& g = v.group();
  mpz_class x = g.num_irreps() > 1 ? v.coeff(g.num_irreps() - 1) /
                                         g.irrep_dim(g.num_irreps() - 1)
                                   : mpz_class(0);
  VirtualRep candidate = VirtualRep::regular(g) * x;
  mpz_class y = v.coeff(0) - candidate.coeff(0);
  candidate += VirtualRep::trivial(g) * y;
  if (candidate != v) return {};
  std::ostringstream os;
  os << x.get_str() << "*[L2(" << g.name() << ")]";
  if (y == 1) {
    os << " + rho_triv";
  } else if (y != 0) {
    os << " + " << y.get_str() << "*rho_triv";
  }
  return "(" + os.str() + ")";
}

void print_degree(const Options& opts, const EquivElem& x, const std::string& closed,
                  const json& extra = json::object()) {
  if (json_mode(opts)) {
    json out = equiv_to_json(x);
    if (!closed.empty()) out["closed_form"] = closed;
    for (const auto& [k, v] : extra.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (!closed.empty()) std::cout << closed << "(1 - c)\n";
  auto d = x.decompose();
  // Degrees of the shape alpha_0 (1 - c) print as one expansion line.
  if (d.alpha_h.empty() && d.alpha0 == d.alpha0_tilde) {
    std::cout << d.alpha0.to_string() << " \xE2\x8A\x97 (1 - c)\n";
  } else {
    std::cout << x.to_string() << "\n";
  }
  if (!extra.empty()) {
    for (const auto& [k, v] : extra.items()) {
      if (v.is_string()) std::cout << k << ": " << v.get<std::string>() << "\n";
    }
  }
}

int print_report(const Options& opts, const VerificationReport& report) {
  if (json_mode(opts)) {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << report.to_text() << "\n";
  }
  return report.pass ? kExitPass : kExitVerifyFail;
}

int print_reports(const Options& opts, const std::vector<VerificationReport>& reports) {
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
  }
  if (json_mode(opts)) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(report_to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.to_text() << "\n";
    std::cout << reports.size() - failed << "/" << reports.size() << " checks passed\n";
  }
  return failed == 0 ? kExitPass : kExitVerifyFail;
}

std::vector<long> parse_prime_list(const std::string& text) {
  std::vector<long> primes;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ',')) {
    long p = std::stol(part);
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
      throw PreconditionError("prime list entries must be odd primes, got " + part);
    }
    primes.push_back(p);
  }
  if (primes.empty()) throw PreconditionError("empty prime list");
  return primes;
}

void parse_grid(const std::string& text, VerifyAllConfig& config) {
  static const std::regex grid_re("(-?[0-9]+)\\.\\.(-?[0-9]+),(-?[0-9]+)\\.\\.(-?[0-9]+)");
  std::smatch m;
  if (!std::regex_match(text, m, grid_re)) {
    throw PreconditionError("grid must look like m0..m1,k0..k1, got '" + text + "'");
  }
  config.m_min = std::stol(m[1]);
  config.m_max = std::stol(m[2]);
  config.k_min = std::stol(m[3]);
  config.k_max = std::stol(m[4]);
  if (config.m_min > config.m_max || config.k_min > config.k_max || config.m_min < 1 ||
      config.k_min < 0) {
    throw PreconditionError("grid bounds must be positive and ordered");
  }
}

std::pair<long, long> parse_params_spec(const std::string& text) {
  static const std::regex params_re("N=([0-9]+),M=([0-9]+)");
  std::smatch m;
  if (!std::regex_match(text, m, params_re)) {
    throw PreconditionError("params must look like N=<int>,M=<int>, got '" + text + "'");
  }
  return {std::stol(m[1]), std::stol(m[2])};
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"swdeg - exact equivariant Seiberg-Witten degrees over R(G)xR(Pin(2))"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI config file");
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--table-path", opts.table_path,
                 "colon-separated directories searched for character tables")
      ->envname("SWDEG_CHARTAB_PATH");

  // degree
  auto* degree = app.add_subcommand("degree", "compute a closed-form degree");
  degree->require_subcommand(1);
  long m = 0, k = 0, p = 0, q = 0;
  std::string group_spec;
  bool bryan_ack = false;

  auto* furuta = degree->add_subcommand("furuta", "Pin(2) degree of the base map");
  furuta->add_option("--m", m, "b+ of the base manifold")->required();
  furuta->add_option("--k", k, "-sigma/16 of the base manifold")->required();

  auto* zp = degree->add_subcommand("zp", "degree over Z_p, p an odd prime");
  zp->add_option("--p", p, "odd prime covering order")->required();
  zp->add_option("--m", m)->required();
  zp->add_option("--k", k)->required();

  auto* bryan = degree->add_subcommand("bryan", "Bryan's degree over (Z_2)^q");
  bryan->add_option("--q", q, "rank of the (Z_2)^q action")->required();
  bryan->add_option("--m", m)->required();
  bryan->add_option("--k", k)->required();
  bryan->add_flag("--assert-bryan-hypothesis", bryan_ack,
                  "acknowledge the hypothesis b+(X) != b+(X/<g>) for nontrivial g");

  auto* odd_sum = degree->add_subcommand(
      "odd-sum", "alpha_0 + alpha~_0 constraint for odd-order groups");
  odd_sum->add_option("--group", group_spec, "group spec (Z<n>xZ<m>...) or table file")
      ->required();
  odd_sum->add_option("--m", m)->required();
  odd_sum->add_option("--k", k)->required();

  // solve
  auto* solve = app.add_subcommand("solve", "solve a covering linear system");
  solve->require_subcommand(1);
  long mx = 0, kx = 0;
  std::string beta0_text = "0", beta1_text = "0";
  auto* solve_z6 = solve->add_subcommand("z6", "the index-six covering system");
  solve_z6->add_option("--mx", mx, "b+ of the covering space")->required();
  solve_z6->add_option("--kx", kx, "-sigma/16 of the covering space")->required();
  solve_z6->add_option("--beta0", beta0_text, "Pin(2) expression for beta_0");
  solve_z6->add_option("--beta1", beta1_text, "Pin(2) expression for beta_1");

  // verify
  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->require_subcommand(1);
  VerifyAllConfig config;
  std::string primes_text, grid_text, params_text;
  auto* verify_all = verify->add_subcommand("all", "the full verification suite");
  verify_all->add_option("--max-n", config.max_n, "largest odd n for the product-identity sweep")
      ->check(CLI::PositiveNumber);
  verify_all->add_option("--primes", primes_text, "comma-separated odd primes");
  verify_all->add_option("--grid", grid_text, "m0..m1,k0..k1 bounds for (m,k) sweeps");
  verify_all->add_option("--params", params_text, "extra N=<int>,M=<int> preset");
  verify_all->add_option("--seed", config.seed, "seed for randomized checks");

  long lemma_n = 0;
  auto* verify_lemma = verify->add_subcommand("lemma", "two-path product identity");
  verify_lemma->add_option("--n", lemma_n, "odd n")->required();

  long cover_n = 0, cover_m = 1;
  auto* verify_cover = verify->add_subcommand("cover", "covering ring identity");
  verify_cover->add_option("--p", p, "odd prime")->required();
  verify_cover->add_option("--m", m)->required();
  verify_cover->add_option("--k", k)->required();
  verify_cover->add_option("--N", cover_n, "uniform N_lambda")->default_val(1);
  verify_cover->add_option("--M", cover_m, "uniform M_lambda")->default_val(1);

  auto* verify_z6 = verify->add_subcommand("z6", "index-six consistency");
  verify_z6->add_option("--mx", mx)->required();
  verify_z6->add_option("--kx", kx)->required();
  verify_z6->add_option("--beta0", beta0_text);
  verify_z6->add_option("--beta1", beta1_text);

  // chartab
  auto* chartab = app.add_subcommand("chartab", "character table utilities");
  chartab->require_subcommand(1);
  std::string table_file;
  auto* chartab_check = chartab->add_subcommand("check", "parse and validate a table");
  chartab_check->add_option("file", table_file, "table file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (furuta->parsed()) {
      Pin2Elem d = furuta_degree(m, k);
      if (json_mode(opts)) {
        json out = pin2_to_json(d);
        out["text"] = d.to_string();
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << d.to_string() << "\n";
      }
      return kExitPass;
    }
    if (zp->parsed()) {
      EquivElem d = zp_degree(p, m, k);
      print_degree(opts, d, closed_form(d.decompose().alpha0));
      return kExitPass;
    }
    if (bryan->parsed()) {
      EquivElem d = bryan_degree(q, m, k);
      json extra;
      if (json_mode(opts)) {
        extra["hypothesis_acknowledged"] = bryan_ack;
      } else if (!bryan_ack) {
        extra["note"] =
            "assumes b+(X) != b+(X/<g>) for every nontrivial g; pass "
            "--assert-bryan-hypothesis to acknowledge";
      }
      print_degree(opts, d, closed_form(d.decompose().alpha0), extra);
      return kExitPass;
    }
    if (odd_sum->parsed()) {
      Group g = parse_group_spec(opts, group_spec);
      VirtualRep v = odd_sum_alpha0(g, m, k);
      if (json_mode(opts)) {
        json out = vr_to_json(v);
        std::string closed = closed_form(v);
        if (!closed.empty()) out["closed_form"] = closed;
        std::cout << out.dump(2) << "\n";
      } else {
        std::string closed = closed_form(v);
        if (!closed.empty()) std::cout << closed << "\n";
        std::cout << v.to_string() << "\n";
      }
      return kExitPass;
    }
    if (solve_z6->parsed()) {
      Pin2Elem beta0 = Pin2Elem::parse(beta0_text);
      Pin2Elem beta1 = Pin2Elem::parse(beta1_text);
      Z6Constants consts = z6_constants(mx, kx);
      Z6Betas sol = z6_solve(mx, kx, beta0, beta1);
      if (json_mode(opts)) {
        json out{{"A", pin2_to_json(consts.a)},   {"B", pin2_to_json(consts.b)},
                 {"C", pin2_to_json(consts.c)},   {"beta0", pin2_to_json(beta0)},
                 {"beta1", pin2_to_json(beta1)},  {"beta2", pin2_to_json(sol.beta2)},
                 {"beta3", pin2_to_json(sol.beta3)}, {"beta4", pin2_to_json(sol.beta4)},
                 {"beta5", pin2_to_json(sol.beta5)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "A = " << consts.a.to_string() << "\n"
                  << "B = " << consts.b.to_string() << "\n"
                  << "C = " << consts.c.to_string() << "\n"
                  << "beta2 = " << sol.beta2.to_string() << "\n"
                  << "beta3 = " << sol.beta3.to_string() << "\n"
                  << "beta4 = " << sol.beta4.to_string() << "\n"
                  << "beta5 = " << sol.beta5.to_string() << "\n";
      }
      return kExitPass;
    }
    if (verify_all->parsed()) {
      if (!primes_text.empty()) config.primes = parse_prime_list(primes_text);
      if (!grid_text.empty()) parse_grid(grid_text, config);
      if (!params_text.empty()) config.param_presets.push_back(parse_params_spec(params_text));
      return print_reports(opts, run_all_checks(config));
    }
    if (verify_lemma->parsed()) {
      return print_report(opts, check_product_lemma(lemma_n));
    }
    if (verify_cover->parsed()) {
      if (!is_prime(p) || p % 2 == 0) {
        throw PreconditionError("p must be an odd prime, got " + std::to_string(p));
      }
      Group g = Group::abelian({p});
      return print_report(opts,
                          check_cover_identity(g, m, k, zp_degree(p, m, k),
                                               ApproximationParams::uniform(cover_n, cover_m)));
    }
    if (verify_z6->parsed()) {
      return print_report(opts, check_z6_consistency(mx, kx, Pin2Elem::parse(beta0_text),
                                                     Pin2Elem::parse(beta1_text)));
    }
    if (chartab_check->parsed()) {
      CharacterTable table =
          parse_character_table_file(resolve_table_file(opts, table_file));
      if (json_mode(opts)) {
        json out{{"ok", true},
                 {"group", table.name},
                 {"order", table.order},
                 {"classes", table.classes.size()}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "ok: group " << table.name << ", order " << table.order << ", "
                  << table.classes.size() << " classes, all invariants hold\n";
      }
      return kExitPass;
    }
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    if (json_mode(opts)) {
      std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
