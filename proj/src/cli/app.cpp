#include "twobridge/cli/app.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "twobridge/alexander.hpp"
#include "twobridge/casson.hpp"
#include "twobridge/cli/document.hpp"
#include "twobridge/cli/knot_spec.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/knot_table.hpp"
#include "twobridge/obstruction.hpp"
#include "twobridge/slopes.hpp"

namespace twobridge::cli {
namespace {

struct Options {
  std::string knot;
  std::string kx;
  std::string slope = "1/1";
  bool json = false;
  bool jsonl = false;
  std::optional<int> census;
  std::vector<std::string> filters;
  unsigned threads = 0;
};

struct Input {
  std::string text;
  SchubertForm form;
};

Input resolve_knot(const Options& o) {
  if (!o.kx.empty() && !o.knot.empty()) throw ParseError("give either a knot or --kx, not both");
  if (!o.kx.empty()) return {"K_" + o.kx, kx_family(parse_bigint(o.kx))};
  if (o.knot.empty()) throw ParseError("no knot given (use S(a,b), C[...], a name like 9_27, or --kx x)");
  return {o.knot, parse_knot_spec(o.knot)};
}

void print_document(std::ostream& out, const std::string& command, Json payload) {
  out << make_document(command, std::move(payload)).dump(2) << '\n';
}

void print_header(std::ostream& out, const Input& in, const CanonicalKnot& canon) {
  out << "knot       " << canon.form.str();
  if (canon.mirrored) out << "  (mirror of input " << in.text << ")";
  out << '\n';
  if (auto name = knot_name(canon.form)) out << "name       " << *name << '\n';
}

int cmd_info(const Options& o, std::ostream& out) {
  const Input in = resolve_knot(o);
  const CanonicalKnot canon = canonicalize(in.form);
  const ConwayForm conway = conway_even_form(canon.form);
  const ContinuedFraction simple = simple_cf(canon.form.fraction());
  const BigInt crossings = crossing_number(canon.form);
  const auto name = knot_name(canon.form);
  if (o.json) {
    print_document(out, "info",
                   Json{{"input", in.text},
                        {"knot", to_json(canon.form)},
                        {"mirrored", canon.mirrored},
                        {"name", name ? Json(*name) : Json(nullptr)},
                        {"crossing_number", integer_json(crossings)},
                        {"genus", conway.genus()},
                        {"conway", to_json(ContinuedFraction(conway.entries()))},
                        {"simple_cf", to_json(simple)}});
    return kExitOk;
  }
  print_header(out, in, canon);
  out << "crossings  " << crossings << '\n'
      << "genus      " << conway.genus() << '\n'
      << "conway     " << conway.str() << '\n'
      << "simple cf  " << simple.str() << '\n';
  return kExitOk;
}

int cmd_slopes(const Options& o, std::ostream& out) {
  const Input in = resolve_knot(o);
  const CanonicalKnot canon = canonicalize(in.form);
  const SlopeSystem sys = enumerate_bscf(canon.form);
  if (o.json) {
    Json payload = to_json(sys);
    payload["mirrored"] = canon.mirrored;
    print_document(out, "slopes", std::move(payload));
    return kExitOk;
  }
  print_header(out, in, canon);
  out << "records    " << sys.records.size() << "\n\n";
  out << std::left << std::setw(4) << "#" << std::setw(44) << "continued fraction" << std::right << std::setw(5)
      << "n+" << std::setw(5) << "n-" << std::setw(8) << "N" << std::setw(12) << "W" << '\n';
  for (std::size_t i = 0; i < sys.records.size(); ++i) {
    const auto& r = sys.records[i];
    out << std::left << std::setw(4) << i + 1 << std::setw(44) << r.cf.str() << std::right << std::setw(5)
        << r.n_plus << std::setw(5) << r.n_minus << std::setw(8) << r.slope << std::setw(12) << r.weight
        << (i == sys.longitude_index ? "  longitude" : "") << '\n';
  }
  return kExitOk;
}

std::string field_text(const ObstructionReport& r, const std::string& key) {
  if (key == "sigma") return std::to_string(r.sigma);
  if (key == "delta_second") return r.delta_second.str();
  if (key == "casson_difference") return r.casson_difference.str();
  if (key == "verdict") return to_string(r.verdict);
  if (key == "crossing_number") return r.crossing_number.str();
  if (key == "name") return r.name.value_or("");
  if (key == "mirrored") return r.mirrored ? "true" : "false";
  throw ParseError("unknown filter field '" + key +
                   "' (sigma, delta_second, casson_difference, verdict, crossing_number, name, mirrored)");
}

bool passes(const ObstructionReport& r, const std::vector<std::pair<std::string, std::string>>& filters) {
  return std::all_of(filters.begin(), filters.end(),
                     [&](const auto& f) { return field_text(r, f.first) == f.second; });
}

void print_report(std::ostream& out, const ObstructionReport& r) {
  out << "knot               " << r.knot.str() << (r.mirrored ? "  (mirrored)" : "") << '\n';
  if (r.name) out << "name               " << *r.name << '\n';
  out << "crossings          " << r.crossing_number << '\n'
      << "delta''(1)         " << r.delta_second << '\n'
      << "signature          " << r.sigma << '\n'
      << "casson difference  " << r.casson_difference << '\n'
      << "verdict            " << to_string(r.verdict) << '\n';
  for (const auto& c : r.caveats) out << "caveat             " << c << '\n';
}

int cmd_obstruct(const Options& o, std::ostream& out) {
  if (!o.census) {
    if (!o.filters.empty()) throw ParseError("--filter only applies to --census");
    const Input in = resolve_knot(o);
    const ObstructionReport report = obstruct(in.form);
    if (o.json || o.jsonl) {
      print_document(out, "obstruct", to_json(report));
      return kExitOk;
    }
    print_report(out, report);
    return kExitOk;
  }

  if (!o.knot.empty() || !o.kx.empty()) throw ParseError("--census does not take a knot");
  std::vector<std::pair<std::string, std::string>> filters;
  for (const auto& f : o.filters) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw ParseError("filter must look like field=value, got '" + f + "'");
    filters.emplace_back(f.substr(0, eq), f.substr(eq + 1));
  }
  const std::vector<ObstructionReport> all = census({*o.census, o.threads});
  std::vector<const ObstructionReport*> kept;
  for (const auto& r : all) {
    if (passes(r, filters)) kept.push_back(&r);
  }

  if (o.jsonl) {
    for (const auto* r : kept) out << to_json(*r).dump() << '\n';
    return kExitOk;
  }
  if (o.json) {
    Json reports = Json::array();
    for (const auto* r : kept) reports.push_back(to_json(*r));
    print_document(out, "obstruct",
                   Json{{"max_crossings", *o.census},
                        {"filters", o.filters},
                        {"count", kept.size()},
                        {"reports", std::move(reports)}});
    return kExitOk;
  }
  out << std::left << std::setw(8) << "name" << std::setw(12) << "knot" << std::right << std::setw(4) << "c"
      << std::setw(8) << "D''(1)" << std::setw(6) << "sig" << std::setw(8) << "cdiff" << "  verdict\n";
  for (const auto* r : kept) {
    out << std::left << std::setw(8) << r->name.value_or("-") << std::setw(12) << r->knot.str() << std::right
        << std::setw(4) << r->crossing_number << std::setw(8) << r->delta_second << std::setw(6) << r->sigma
        << std::setw(8) << r->casson_difference.str() << "  " << to_string(r->verdict) << '\n';
  }
  out << kept.size() << " knot(s)\n";
  return kExitOk;
}

int cmd_alexander(const Options& o, std::ostream& out) {
  const Input in = resolve_knot(o);
  const CanonicalKnot canon = canonicalize(in.form);
  const SeifertMatrix seifert = seifert_from_conway(conway_even_form(canon.form));
  const LaurentPolynomial delta = alexander_poly(seifert);
  const BigInt d2 = second_derivative_at_one(delta);
  const std::int64_t sigma = signature(seifert);
  if (o.json) {
    print_document(out, "alexander",
                   Json{{"knot", to_json(canon.form)},
                        {"mirrored", canon.mirrored},
                        {"alexander_polynomial", to_json(delta)},
                        {"alexander_text", delta.str()},
                        {"delta_second", integer_json(d2)},
                        {"sigma", sigma},
                        {"tau_zero", is_tau_zero(sigma)}});
    return kExitOk;
  }
  print_header(out, in, canon);
  out << "alexander  " << delta << '\n'
      << "delta''(1) " << d2 << '\n'
      << "signature  " << sigma << (canon.mirrored ? "  (of the canonical form)" : "") << '\n';
  return kExitOk;
}

int cmd_casson(const Options& o, std::ostream& out) {
  const Input in = resolve_knot(o);
  const SurgerySlope slope = SurgerySlope::parse(o.slope);
  if (slope.is_meridian()) throw MeridianError("the meridian 1/0 is not a surgery slope");
  const CanonicalKnot canon = canonicalize(in.form);
  const SlopeSystem sys = enumerate_bscf(canon.form);
  const Rational seminorm = total_seminorm(sys, canon.mirrored ? -slope : slope);
  const LambdaValue lambda = lambda_surgery(in.form, slope);
  // Mirroring negates the difference lambda(1/q) - lambda(-1/q).
  const Rational difference = canon.mirrored ? -cosmetic_difference(sys) : cosmetic_difference(sys);
  if (o.json) {
    print_document(out, "casson",
                   Json{{"knot", to_json(canon.form)},
                        {"mirrored", canon.mirrored},
                        {"slope", slope.str()},
                        {"seminorm", rational_json(seminorm)},
                        {"lambda", to_json(lambda)},
                        {"cosmetic_difference", rational_json(difference)}});
    return kExitOk;
  }
  print_header(out, in, canon);
  out << "slope         " << slope.str() << '\n'
      << "seminorm      " << seminorm << '\n'
      << "lambda        " << (lambda.value ? lambda.value->str() : std::string("-")) << '\n'
      << "hypotheses    " << (lambda.hypotheses_ok ? "ok" : "not verified") << '\n';
  for (const auto& c : lambda.caveats) out << "caveat        " << c << '\n';
  out << "lambda(1/q) - lambda(-1/q)  " << difference << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants and cosmetic-surgery obstructions for two-bridge knots", "twobridge"};
  app.require_subcommand(1);
  Options o;

  auto add_knot = [&](CLI::App* sub) {
    sub->add_option("knot", o.knot, "S(a,b), C[e1,...], or a name such as 9_27");
    sub->add_option("--kx", o.kx, "the knot K_x = C[2x,2,-2x,2x,2,-2x]");
    sub->add_flag("--json", o.json, "emit a JSON document");
  };
  auto* info = app.add_subcommand("info", "canonical form, crossing number, genus, Conway form");
  add_knot(info);
  auto* slopes = app.add_subcommand("slopes", "boundary-slope continued fractions with n+, n-, N, W");
  add_knot(slopes);
  auto* obstruct_cmd = app.add_subcommand("obstruct", "cosmetic-surgery verdict for a knot or a census");
  add_knot(obstruct_cmd);
  obstruct_cmd->add_option("--census", o.census, "all two-bridge knots up to this crossing number");
  obstruct_cmd->add_option("--filter", o.filters, "keep reports with field=value (repeatable)");
  obstruct_cmd->add_option("--threads", o.threads, "census worker threads (default: hardware)");
  obstruct_cmd->add_flag("--jsonl", o.jsonl, "one JSON report per line");
  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial, Delta''(1) and signature");
  add_knot(alexander);
  auto* casson = app.add_subcommand("casson", "SL(2,C) Casson invariant of p/q-surgery");
  add_knot(casson);
  auto* slope_opt = casson->add_option("slope", o.slope, "surgery slope p/q (default 1/1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  // With --kx the only positional of casson is the slope.
  if (casson->parsed() && !o.kx.empty() && !o.knot.empty() && slope_opt->count() == 0) {
    o.slope = std::move(o.knot);
    o.knot.clear();
  }

  try {
    if (info->parsed()) return cmd_info(o, out);
    if (slopes->parsed()) return cmd_slopes(o, out);
    if (obstruct_cmd->parsed()) return cmd_obstruct(o, out);
    if (alexander->parsed()) return cmd_alexander(o, out);
    if (casson->parsed()) return cmd_casson(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const MeridianError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace twobridge::cli
