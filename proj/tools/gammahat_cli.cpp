// Command-line front end. Talks to the library only through gammahat.h.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gammahat/gammahat.h"
#include "json.hpp"

namespace {

struct Options {
  std::string format = "plain";
  bool reduced = false;
  bool no_reduced = false;
  bool numeric = false;
  int precision = 30;
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(gh_status s) {
  if (s != GH_OK) throw CliError(gh_last_error());
}

std::string take(char* s) {
  std::string out(s);
  gh_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using Sequence = Handle<gh_sequence, gh_sequence_free>;
using Manifold = Handle<gh_manifold, gh_manifold_free>;
using Value = Handle<gh_value, gh_value_free>;

gh_format format_of(const Options& o) {
  if (o.format == "latex") return GH_FORMAT_LATEX;
  if (o.format == "json") return GH_FORMAT_JSON;
  return GH_FORMAT_PLAIN;
}

bool reduced_or(const Options& o, bool fallback) {
  if (o.reduced) return true;
  if (o.no_reduced) return false;
  return fallback;
}

std::string with_unicode_minus(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '-' ? std::string("−") : std::string(1, c);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Prints a value, optionally followed by its decimal expansion.
void print_value(const gh_value* v, const Options& o, bool reduced) {
  char* text = nullptr;
  check(gh_value_render(v, format_of(o), reduced ? 1 : 0, &text));
  std::string rendered = take(text);
  if (!o.numeric) {
    std::cout << rendered << "\n";
    return;
  }
  char* num = nullptr;
  check(gh_value_numeric(v, o.precision, 15, &num));
  const std::string decimal = take(num);
  if (o.format == "json") {
    auto doc = nlohmann::ordered_json::parse(rendered);
    doc["numeric"] = decimal;
    doc["precision"] = o.precision;
    std::cout << doc.dump(2) << "\n";
  } else if (o.format == "latex") {
    std::cout << rendered << " \\approx " << decimal << "\n";
  } else {
    std::cout << rendered << " ≈ " << with_unicode_minus(decimal) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicative genera, Hoffman homomorphisms and zeta-regularized products"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gh_version()));

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "json"}))
      ->capture_default_str();
  auto* red = app.add_flag("--reduced", opt.reduced, "Rewrite even zeta values as powers of zeta(2)");
  app.add_flag("--no-reduced", opt.no_reduced, "Keep even zeta values as free generators")->excludes(red);
  app.add_flag("--numeric", opt.numeric, "Also print decimal values");
  app.add_option("--precision", opt.precision, "Working precision in decimal digits (15-100)")
      ->capture_default_str();
  app.fallthrough();

  std::string genus_name, spec, partition, map, scale, sequence_file;
  int n_max = 0, power = 1, order = 0, rank = 0, degree = 0;
  long k = 0;
  bool hoffman_route = false, real_case = false;

  auto* seq_cmd = app.add_subcommand("sequence", "Print K_1..K_n of a multiplicative sequence");
  seq_cmd->add_option("genus", genus_name, "gamma-hat, gamma, a-hat, todd or l")->required();
  seq_cmd->add_option("n_max", n_max, "Highest degree (at most 12)")->required();
  seq_cmd->add_flag("--hoffman", hoffman_route, "Build the gamma-hat sequence through symmetric functions");

  auto* genus_cmd = app.add_subcommand("genus", "Evaluate a genus on a manifold");
  genus_cmd->add_option("genus", genus_name, "gamma-hat, gamma, a-hat, todd or l")->required();
  genus_cmd->add_option("manifold", spec, "cpn:<n>, k3, s2, lebrun:<n>, point, product(<a>,<b>) or file:<path>")
      ->required();
  genus_cmd->add_option("--sequence-file", sequence_file,
                        "Use a sequence saved with 'sequence --format json' instead of the named genus");

  auto* hoff_cmd = app.add_subcommand("hoffman", "Apply Z or Zhat to a monomial symmetric function");
  hoff_cmd->add_option("partition", partition, "Comma-separated weakly decreasing parts, e.g. 2,1")->required();
  hoff_cmd->add_option("map", map, "Z or Zhat")->required()->check(CLI::IsMember({"Z", "Zhat"}));

  auto* reg_cmd = app.add_subcommand("regprod", "Zeta-regularized product over n of (scale * n), raised to a power");
  reg_cmd->add_option("scale", scale, "q * (2pi)^a * u^b with a, b integers or halves")->required();
  reg_cmd->add_option("power", power, "Exponent m")->required();

  auto* psi_cmd = app.add_subcommand("psireg", "Partial products of (1 + z/n) exp(-z/n)");
  psi_cmd->add_option("k", k, "Number of factors (at most 10^6)")->required();
  psi_cmd->add_option("order", order, "Truncation order (at most 8)")->required();

  auto* euler_cmd = app.add_subcommand("euler", "Regularized equivariant Euler class in universal form");
  euler_cmd->add_option("rank", rank, "Complex rank m")->required();
  euler_cmd->add_option("n_max", n_max, "Highest degree (at most 12)")->required();
  euler_cmd->add_flag("--real", real_case, "Use the real form (1/A-hat instead of 1/Gamma-hat)");

  auto* pont_cmd = app.add_subcommand("pontryagin", "Rewrite an even-degree term in Pontryagin classes");
  pont_cmd->add_option("genus", genus_name, "gamma-hat, gamma, a-hat, todd or l")->required();
  pont_cmd->add_option("degree", degree, "Even degree")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const gh_format fmt = format_of(opt);
    if (*seq_cmd) {
      Sequence s;
      if (hoffman_route) {
        if (genus_name != "gamma-hat") throw CliError("--hoffman applies to gamma-hat only");
        check(gh_sequence_create_hoffman(n_max, &s.p));
      } else {
        check(gh_sequence_create(genus_name.c_str(), n_max, &s.p));
      }
      char* out = nullptr;
      check(gh_sequence_render(s.p, fmt, reduced_or(opt, false) ? 1 : 0, &out));
      std::cout << take(out);
      if (fmt == GH_FORMAT_JSON) std::cout << "\n";
    } else if (*genus_cmd) {
      Manifold m;
      check(gh_manifold_parse(spec.c_str(), &m.p));
      Sequence s;
      if (!sequence_file.empty()) {
        check(gh_sequence_from_json(read_file(sequence_file).c_str(), &s.p));
      } else {
        check(gh_sequence_create(genus_name.c_str(), gh_manifold_dimension(m.p), &s.p));
      }
      Value v;
      check(gh_genus_evaluate(s.p, m.p, &v.p));
      print_value(v.p, opt, reduced_or(opt, true));
    } else if (*hoff_cmd) {
      Value v;
      check(gh_hoffman(partition.c_str(), map.c_str(), &v.p));
      print_value(v.p, opt, reduced_or(opt, false));
    } else if (*reg_cmd) {
      char* out = nullptr;
      check(gh_regprod(scale.c_str(), power, fmt, &out));
      std::cout << take(out) << "\n";
    } else if (*psi_cmd) {
      char* out = nullptr;
      check(gh_psireg(k, order, opt.numeric ? 1 : 0, opt.precision, fmt, &out));
      std::cout << take(out);
      if (fmt == GH_FORMAT_JSON) std::cout << "\n";
    } else if (*euler_cmd) {
      char* out = nullptr;
      check(gh_reg_euler(rank, n_max, real_case ? 1 : 0, fmt, &out));
      std::cout << take(out);
    } else if (*pont_cmd) {
      Sequence s;
      check(gh_sequence_create(genus_name.c_str(), degree, &s.p));
      char* out = nullptr;
      check(gh_sequence_pontryagin(s.p, degree, fmt, &out));
      std::cout << take(out) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "gammahat: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
