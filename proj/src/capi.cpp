#include "gammahat/gammahat.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "gammahat/chern.hpp"
#include "gammahat/error.hpp"
#include "gammahat/genus.hpp"
#include "gammahat/numeric.hpp"
#include "gammahat/regprod.hpp"
#include "gammahat/render.hpp"
#include "gammahat/series.hpp"
#include "gammahat/symfun.hpp"

struct gh_sequence {
  gammahat::MultiplicativeSequence seq;
};

struct gh_manifold {
  gammahat::ChernData data;
};

struct gh_value {
  gammahat::ZetaPoly poly;
};

namespace {

using namespace gammahat;

thread_local std::string last_error;

// Exact partial products beyond this length are printed numerically.
constexpr long kExactPsiRegLimit = 20;
constexpr long kMaxPsiRegFactors = 1000000;
constexpr int kMaxPsiRegOrder = 8;

gh_status status_of(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return GH_ERR_INVALID_ARGUMENT;
    case Errc::parse_error: return GH_ERR_PARSE;
    case Errc::guard_exceeded: return GH_ERR_GUARD;
    case Errc::dimension_mismatch: return GH_ERR_DIMENSION;
    case Errc::non_unit_constant:
    case Errc::nonzero_constant: return GH_ERR_PRECONDITION;
    case Errc::precision_unachievable: return GH_ERR_PRECISION;
    case Errc::zero_scale:
    case Errc::not_representable: return GH_ERR_NOT_REPRESENTABLE;
  }
  return GH_ERR_INTERNAL;
}

template <typename F>
gh_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return GH_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return GH_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return GH_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(Errc::invalid_argument, std::string(what) + " is null");
}

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Format format_of(gh_format f) {
  switch (f) {
    case GH_FORMAT_PLAIN: return Format::plain;
    case GH_FORMAT_LATEX: return Format::latex;
    case GH_FORMAT_JSON: return Format::json;
  }
  throw Error(Errc::invalid_argument, "unknown output format");
}

unsigned checked_digits(int digits) {
  if (digits < static_cast<int>(kMinRequestDigits) || digits > static_cast<int>(kMaxRequestDigits))
    throw Error(Errc::precision_unachievable, "precision must be between " + std::to_string(kMinRequestDigits) +
                                                  " and " + std::to_string(kMaxRequestDigits) + " digits");
  return static_cast<unsigned>(digits);
}

std::string power_of_z(int j) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  if (j == 1) return "z";
  return std::string("z") + digits[j];
}

std::string psireg_text(long k, int order, bool numeric, unsigned digits, Format format) {
  if (k < 1 || k > kMaxPsiRegFactors)
    throw Error(Errc::guard_exceeded, "k must be in [1, " + std::to_string(kMaxPsiRegFactors) + "]");
  if (order < 0 || order > kMaxPsiRegOrder)
    throw Error(Errc::guard_exceeded, "order must be in [0, " + std::to_string(kMaxPsiRegOrder) + "]");

  const NumericContext ctx(digits);
  std::vector<Real> approx;
  std::string series_text;
  if (k <= kExactPsiRegLimit) {
    const PowerSeries exact = psi_reg_partial_product(k, order);
    series_text = render_series(exact, format);
    for (const auto& c : exact.coefficients()) approx.push_back(ctx.eval(c));
  } else {
    approx = psi_reg_partial_product_numeric(k, order);
    if (format == Format::json) {
      series_text = "[";
      for (int j = 0; j <= order; ++j) series_text += (j ? "," : "") + std::string("\"") + to_fixed(approx[j], 20) + "\"";
      series_text += "]";
    } else {
      for (int j = 0; j <= order; ++j) {
        const bool negative = approx[j] < 0;
        const std::string c = to_fixed(negative ? Real(-approx[j]) : approx[j], 20);
        if (j == 0) {
          series_text = negative ? "−" + c : c;
          continue;
        }
        series_text += negative ? " − " : " + ";
        series_text += c + "·" + (format == Format::latex ? "z^{" + std::to_string(j) + "}" : power_of_z(j));
      }
    }
  }
  if (!numeric) return series_text + (format == Format::json ? "" : "\n");

  const PowerSeries limit = series_gamma_hat_recip(order);
  if (format == Format::json) {
    std::string out = "{\"k\":" + std::to_string(k) + ",\"series\":" + series_text + ",\"distance\":[";
    for (int j = 0; j <= order; ++j) {
      const Real d = boost::multiprecision::abs(approx[j] - ctx.eval(limit[j]));
      out += (j ? "," : "") + std::string("\"") + d.str(6, std::ios_base::scientific) + "\"";
    }
    return out + "]}";
  }
  std::string out = series_text + "\n";
  out += "order\tcoefficient\tlimit\tdistance\n";
  for (int j = 0; j <= order; ++j) {
    const Real lim = ctx.eval(limit[j]);
    const Real d = boost::multiprecision::abs(approx[j] - lim);
    out += std::to_string(j) + "\t" + unicode_minus(to_fixed(approx[j], 15)) + "\t" +
           unicode_minus(to_fixed(lim, 15)) + "\t" + d.str(6, std::ios_base::scientific) + "\n";
  }
  return out;
}

}  // namespace

extern "C" {

const char* gh_last_error(void) { return last_error.c_str(); }

void gh_string_free(char* s) { std::free(s); }

const char* gh_version(void) { return "0.1.0"; }

gh_status gh_sequence_create(const char* genus, int n_max, gh_sequence** out) {
  return guarded([&] {
    require(genus, "genus");
    require(out, "out");
    auto kind = parse_genus_name(genus);
    if (!kind)
      throw Error(Errc::invalid_argument,
                  std::string("unknown genus '") + genus + "' (expected gamma-hat, gamma, a-hat, todd or l)");
    *out = new gh_sequence{builtin_sequence(*kind, n_max)};
  });
}

gh_status gh_sequence_create_hoffman(int n_max, gh_sequence** out) {
  return guarded([&] {
    require(out, "out");
    *out = new gh_sequence{sequence_via_hoffman(n_max)};
  });
}

gh_status gh_sequence_from_json(const char* json, gh_sequence** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new gh_sequence{sequence_from_json(json)};
  });
}

gh_status gh_sequence_render(const gh_sequence* seq, gh_format format, int reduced, char** out) {
  return guarded([&] {
    require(seq, "sequence");
    require(out, "out");
    *out = to_c_string(render_sequence(seq->seq, format_of(format), reduced != 0));
  });
}

int gh_sequence_equal(const gh_sequence* a, const gh_sequence* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->seq == b->seq ? 1 : 0;
}

gh_status gh_sequence_pontryagin(const gh_sequence* seq, int degree, gh_format format, char** out) {
  return guarded([&] {
    require(seq, "sequence");
    require(out, "out");
    auto expr = pontryagin_reduce(seq->seq, degree);
    if (!expr)
      throw Error(Errc::not_representable,
                  "degree " + std::to_string(degree) + " term is not a combination of Pontryagin classes");
    *out = to_c_string(render_pontryagin(*expr, format_of(format)));
  });
}

void gh_sequence_free(gh_sequence* seq) { delete seq; }

gh_status gh_manifold_parse(const char* spec, gh_manifold** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new gh_manifold{parse_manifold_spec(spec)};
  });
}

gh_status gh_manifold_from_json(const char* json, gh_manifold** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new gh_manifold{chern_from_json(json)};
  });
}

gh_status gh_manifold_to_json(const gh_manifold* m, char** out) {
  return guarded([&] {
    require(m, "manifold");
    require(out, "out");
    *out = to_c_string(chern_to_json(m->data));
  });
}

int gh_manifold_dimension(const gh_manifold* m) { return m ? m->data.dimension() : -1; }

void gh_manifold_free(gh_manifold* m) { delete m; }

gh_status gh_genus_evaluate(const gh_sequence* seq, const gh_manifold* m, gh_value** out) {
  return guarded([&] {
    require(seq, "sequence");
    require(m, "manifold");
    require(out, "out");
    *out = new gh_value{genus_evaluate(seq->seq, m->data)};
  });
}

gh_status gh_hoffman(const char* partition, const char* map, gh_value** out) {
  return guarded([&] {
    require(partition, "partition");
    require(map, "map");
    require(out, "out");
    const Partition lambda = Partition::parse(partition);
    if (lambda.weight() > kMaxSequenceDegree)
      throw Error(Errc::guard_exceeded, "partition weight exceeds " + std::to_string(kMaxSequenceDegree));
    const auto v = SymFunVector::basis_element(Basis::monomial, lambda);
    const std::string name(map);
    if (name == "Z") {
      *out = new gh_value{hoffman_Z(v)};
    } else if (name == "Zhat") {
      *out = new gh_value{hoffman_Zhat(v)};
    } else {
      throw Error(Errc::invalid_argument, "unknown map '" + name + "' (expected Z or Zhat)");
    }
  });
}

gh_status gh_value_from_json(const char* json, gh_value** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new gh_value{zeta_poly_from_json(json)};
  });
}

gh_status gh_value_render(const gh_value* v, gh_format format, int reduced, char** out) {
  return guarded([&] {
    require(v, "value");
    require(out, "out");
    *out = to_c_string(render_value(v->poly, format_of(format), reduced != 0));
  });
}

gh_status gh_value_numeric(const gh_value* v, int digits, int decimals, char** out) {
  return guarded([&] {
    require(v, "value");
    require(out, "out");
    if (decimals < 0 || decimals > digits)
      throw Error(Errc::invalid_argument, "decimals must be between 0 and the precision");
    const NumericContext ctx(checked_digits(digits));
    *out = to_c_string(to_fixed(ctx.eval(v->poly), decimals));
  });
}

int gh_value_equal(const gh_value* a, const gh_value* b) {
  if (a == nullptr || b == nullptr) return 0;
  return equal_reduced(a->poly, b->poly) ? 1 : 0;
}

void gh_value_free(gh_value* v) { delete v; }

gh_status gh_regprod(const char* scale, int power, gh_format format, char** out) {
  return guarded([&] {
    require(scale, "scale");
    require(out, "out");
    const RadicalScalar value = scalar_pow(zeta_reg_product_linear(parse_scale_expression(scale)), power);
    *out = to_c_string(render_radical(value, format_of(format)));
  });
}

gh_status gh_psireg(long k, int order, int numeric, int digits, gh_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = to_c_string(psireg_text(k, order, numeric != 0, checked_digits(digits), format_of(format)));
  });
}

gh_status gh_reg_euler(int rank, int n_max, int real, gh_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    const RegEulerClass e = real ? reg_equivariant_euler_real(rank, n_max) : reg_equivariant_euler(rank, n_max);
    *out = to_c_string(render_euler_class(e, format_of(format)));
  });
}

}  // extern "C"
