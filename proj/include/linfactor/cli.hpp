#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success, 2 bad input (usage, parse, or a violated
// precondition), 1 an internal cross-check failed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "linfactor/construct.hpp"
#include "linfactor/distribution.hpp"
#include "linfactor/error.hpp"
#include "linfactor/explicit.hpp"
#include "linfactor/factor.hpp"
#include "linfactor/field_spec.hpp"
#include "linfactor/linearized.hpp"
#include "linfactor/poly_text.hpp"

namespace linfactor::cli {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string histogram_text(const Histogram& h) {
  std::string out;
  for (const auto& [key, count] : h) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + "):" + std::to_string(count);
  }
  return out.empty() ? "(empty)" : out;
}

inline Json histogram_json(const Histogram& h) {
  Json arr = Json::array();
  for (const auto& [key, count] : h) arr.push_back({{"degree", key.first}, {"multiplicity", key.second}, {"count", count}});
  return arr;
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) parts.push_back(item);
  return parts;
}

inline std::optional<u64> applicable_ni_bound(const Poly& f, const Poly& g) {
  if (g.degree() < 1 || g[0] == 0) return std::nullopt;
  if (f.monic() == Poly::x(f.field())) return std::nullopt;
  return ni_lower_bound(f, g);
}

inline void print_distribution(std::ostream& out, const DegreeDistribution& d) {
  out << "frobenius_power: " << d.frobenius_power << "\n";
  out << "classes:\n";
  for (const auto& c : d.classes) {
    out << "  order " << to_string(c.order) << "  degree " << c.degree << "  count " << c.count << "\n";
  }
  out << "total_degree: " << d.total_degree << "\n";
}

inline Json distribution_json(const DegreeDistribution& d) {
  Json classes = Json::array();
  for (const auto& c : d.classes) {
    Json order = std::holds_alternative<Poly>(c.order) ? Json(to_string(std::get<Poly>(c.order))) : Json(std::get<u64>(c.order));
    classes.push_back({{"order", order}, {"degree", c.degree}, {"count", c.count}});
  }
  return classes;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factor-degree distributions of f(L_g(x)) over finite fields", "linfactor"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  bool json = false;
  app.add_option("--seed", seed, "Seed for randomized equal-degree splitting")->default_val(0);
  app.add_flag("--json", json, "Machine-readable output");

  std::string field_text, f_text, g_text, modulus_text, element_text, chain_text, closed_form, a_text, b_text;
  std::uint64_t m = 0;

  auto field_opt = [&](CLI::App* sub) {
    sub->add_option("--field", field_text, "Field, e.g. p=5 or p=2,k=2,mod=t^2+t+1")->required();
  };

  auto* compose = app.add_subcommand("compose", "Print f(L_g(x))");
  field_opt(compose);
  compose->add_option("--f", f_text)->required();
  compose->add_option("--g", g_text)->required();

  auto* fqorder = app.add_subcommand("fq-order", "F_q-order of an element of F_q[z]/(modulus)");
  field_opt(fqorder);
  fqorder->add_option("--modulus", modulus_text, "Irreducible polynomial in x defining the extension")->required();
  fqorder->add_option("--element", element_text, "Element as a polynomial in z")->required();

  auto* distribution = app.add_subcommand("distribution", "Predicted factor classes of f(L_g(x)) or f(x^m)");
  field_opt(distribution);
  distribution->add_option("--f", f_text, "Irreducible polynomial in x")->required();
  auto* dist_g = distribution->add_option("--g", g_text, "Polynomial with g(0) != 0, or x^s times one");
  auto* dist_m = distribution->add_option("--multiplicative-m", m, "Predict f(x^m) instead");
  dist_g->excludes(dist_m);

  auto* factor_cmd = app.add_subcommand("factor", "Complete factorization");
  field_opt(factor_cmd);
  factor_cmd->add_option("--f", f_text)->required();

  auto* construct = app.add_subcommand("construct", "Irreducible polynomials from a chain of primitive polynomials");
  field_opt(construct);
  construct->add_option("--f", f_text)->required();
  construct->add_option("--chain", chain_text, "Comma-separated primitive polynomials")->required();

  auto* explicit_cmd = app.add_subcommand("explicit", "Explicit factorization of f(x^q - x)");
  field_opt(explicit_cmd);
  auto* explicit_f = explicit_cmd->add_option("--f", f_text, "Irreducible f with zero trace and deg f prime to p");
  auto* explicit_cf = explicit_cmd->add_option("--closed-form", closed_form)->check(CLI::IsMember({"quadratic", "cubic2"}));
  explicit_cmd->add_option("--a", a_text, "Coefficient a, an element of the field");
  explicit_cmd->add_option("--b", b_text, "Coefficient b for cubic2");
  explicit_f->excludes(explicit_cf);

  auto* verify = app.add_subcommand("verify", "Compare the predicted distribution with the factorization");
  field_opt(verify);
  verify->add_option("--f", f_text)->required();
  auto* verify_g = verify->add_option("--g", g_text);
  auto* verify_m = verify->add_option("--multiplicative-m", m);
  verify_g->excludes(verify_m);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    const Field field = parse_field_spec(field_text);
    const std::string fs = field_spec_string(field);
    auto poly = [&](const std::string& text) { return parse_poly(text, field); };

    if (compose->parsed()) {
      const Poly f = poly(f_text), g = poly(g_text);
      const Poly r = compose_f_Lg(f, g);
      if (json) {
        out << Json{{"field", fs}, {"f", to_string(f)}, {"g", to_string(g)}, {"result", to_string(r)}, {"degree", r.degree()}}.dump(2) << "\n";
      } else {
        out << to_string(r) << "\n";
      }
      return 0;
    }

    if (fqorder->parsed()) {
      const ExtContext ctx = ExtField::make(poly(modulus_text));
      const ExtElement a(ctx, parse_poly(element_text, field, 'z'));
      const Poly h = fq_order(a).poly();
      const u64 deg = element_degree(a);
      if (json) {
        out << Json{{"field", fs}, {"modulus", to_string(ctx->modulus())}, {"element", to_string(a.value(), 'z')},
                    {"order", to_string(h)}, {"degree", deg}}
                   .dump(2)
            << "\n";
      } else {
        out << "order: " << to_string(h) << "\n" << "degree: " << deg << "\n";
      }
      return 0;
    }

    if (distribution->parsed()) {
      const Poly f = poly(f_text);
      require(dist_g->count() + dist_m->count() == 1, Errc::PreconditionViolated, "give exactly one of --g or --multiplicative-m");
      DegreeDistribution d;
      std::optional<u64> bound;
      std::optional<Poly> g;
      if (dist_g->count()) {
        g = poly(g_text);
        d = additive_distribution(f, *g);
        bound = detail::applicable_ni_bound(f, *g);
      } else {
        d = butler_distribution(f, m);
      }
      if (json) {
        Json j{{"field", fs}, {"f", to_string(f)}};
        if (g) j["g"] = to_string(*g);
        else j["m"] = m;
        j["frobenius_power"] = d.frobenius_power;
        j["classes"] = detail::distribution_json(d);
        j["total_degree"] = d.total_degree;
        j["ni_lower_bound"] = bound ? Json(*bound) : Json(nullptr);
        out << j.dump(2) << "\n";
      } else {
        out << "field: " << fs << "\n" << "f: " << to_string(f) << "\n";
        if (g) out << "g: " << to_string(*g) << "\n";
        else out << "m: " << m << "\n";
        detail::print_distribution(out, d);
        out << "ni_lower_bound: " << (bound ? std::to_string(*bound) : std::string("n/a")) << "\n";
      }
      return 0;
    }

    if (factor_cmd->parsed()) {
      const Poly f = poly(f_text);
      const Factorization fac = factor(f, seed);
      if (json) {
        Json fs_json = Json::array();
        for (const auto& [p, e] : fac.factors) fs_json.push_back({{"factor", to_string(p)}, {"multiplicity", e}, {"degree", p.degree()}});
        out << Json{{"field", fs}, {"f", to_string(f)}, {"unit", to_string(fac.unit)}, {"factors", fs_json}}.dump(2) << "\n";
      } else {
        out << "unit: " << to_string(fac.unit) << "\n";
        for (const auto& [p, e] : fac.factors) {
          if (e == 1) out << to_string(p) << "\n";
          else out << "(" << to_string(p) << ")^" << e << "\n";
        }
      }
      return 0;
    }

    if (construct->parsed()) {
      const Poly f = poly(f_text);
      std::vector<Poly> gs;
      for (const auto& part : detail::split_commas(chain_text)) gs.push_back(poly(part));
      std::vector<ConstructionStep> steps;
      if (field->q() == 2) {
        steps = iterate_f2(f, gs);
      } else {
        steps.push_back({f.monic(), Poly::one(field), Poly::one(field), f.monic()});
        for (const Poly& g : gs) steps.push_back(extend_by_primitive(steps.back().output(), g));
      }
      if (json) {
        Json arr = Json::array();
        for (const auto& s : steps) {
          arr.push_back({{"g", to_string(s.g)}, {"degree", s.output().degree()}, {"G1", to_string(s.G1)}, {"G2", to_string(s.G2)}});
        }
        out << Json{{"field", fs}, {"f", to_string(f)}, {"steps", arr}}.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < steps.size(); ++i) {
          out << "step " << i << ": g = " << to_string(steps[i].g) << ", degree " << steps[i].output().degree() << "\n";
          out << "  " << to_string(steps[i].output()) << "\n";
        }
      }
      return 0;
    }

    if (explicit_cmd->parsed()) {
      Poly f(field);
      const ShiftFactorization sf = [&] {
        if (closed_form.empty()) {
          require(!f_text.empty(), Errc::PreconditionViolated, "give --f or --closed-form");
          f = poly(f_text);
          return factor_f_xq_minus_x(f);
        }
        require(!a_text.empty(), Errc::PreconditionViolated, "--closed-form needs --a");
        const FieldElement a = parse_element(a_text, field);
        if (closed_form == "quadratic") {
          f = Poly(field, {field->neg(a.code()), 0, 1});
          return closed_form_quadratic(a);
        }
        require(!b_text.empty(), Errc::PreconditionViolated, "--closed-form cubic2 needs --b");
        const FieldElement b = parse_element(b_text, field);
        f = Poly(field, {b.code(), a.code(), 0, 1});
        return closed_form_cubic_char2(a, b);
      }();
      if (json) {
        Json shifts = Json::array();
        for (std::size_t a = 0; a < sf.shifts.size(); ++a) {
          const FieldElement e(field, static_cast<FiniteField::Code>(a));
          shifts.push_back({{"a", to_string(e)}, {"factor", to_string(sf.shifts[a])}});
        }
        out << Json{{"field", fs}, {"f", to_string(f)}, {"g0", to_string(sf.g0)}, {"shifts", shifts}}.dump(2) << "\n";
      } else {
        out << "f: " << to_string(f) << "\n" << "g0: " << to_string(sf.g0) << "\n" << "shifts:\n";
        for (std::size_t a = 0; a < sf.shifts.size(); ++a) {
          const FieldElement e(field, static_cast<FiniteField::Code>(a));
          out << "  a=" << to_string(e) << ": " << to_string(sf.shifts[a]) << "\n";
        }
      }
      return 0;
    }

    if (verify->parsed()) {
      const Poly f = poly(f_text);
      require(verify_g->count() + verify_m->count() == 1, Errc::PreconditionViolated, "give exactly one of --g or --multiplicative-m");
      Histogram predicted, actual;
      if (verify_g->count()) {
        const Poly g = poly(g_text);
        predicted = additive_distribution(f, g).histogram();
        actual = histogram_of(factor(compose_f_Lg(f, g), seed));
      } else {
        predicted = butler_distribution(f, m).histogram();
        require(static_cast<u128>(f.degree()) * m <= max_coeffs(), Errc::SizeExceeded, "deg(f) * m exceeds LINFACTOR_MAX_COEFFS");
        actual = histogram_of(factor(f.substitute_power(m), seed));
      }
      const bool match = predicted == actual;
      if (json) {
        Json j{{"field", fs}, {"f", to_string(f)}};
        if (verify_g->count()) j["g"] = to_string(poly(g_text));
        else j["m"] = m;
        j["match"] = match;
        j["predicted"] = detail::histogram_json(predicted);
        j["actual"] = detail::histogram_json(actual);
        out << j.dump(2) << "\n";
      } else {
        out << "predicted: " << detail::histogram_text(predicted) << "\n";
        out << "actual:    " << detail::histogram_text(actual) << "\n";
        out << (match ? "MATCH" : "MISMATCH") << "\n";
      }
      return match ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n" << e.caret() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.internal() ? 1 : 2;
  }
  return 2;
}

}  // namespace linfactor::cli
