#include "cli.hpp"

#include "nefslope/generators.hpp"
#include "nefslope/json_io.hpp"
#include "nefslope/simplicity.hpp"
#include "nefslope/slope.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace nefslope::cli {

namespace {

struct Options {
  std::string input;
  std::string inline_json;
  std::string output;
  std::string level = "syntactic";
  std::string width;
  unsigned jobs = 1;
  // gen
  std::string kind = "surface";
  unsigned n = 2;
  std::int64_t bound = 10;
  std::int64_t den = 1;
  std::uint64_t seed = 0;
  std::size_t count = 10;
};

const Rational kDefaultWidth = Rational(1, Integer(1) << 64);

void add_io_options(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "instance JSON file ('-' for stdin)");
  sub->add_option("--json", o.inline_json, "instance JSON given inline");
  sub->add_option("--output", o.output, "write JSON here instead of stdout");
  sub->add_option("--level", o.level, "validation level")
      ->check(CLI::IsMember({"syntactic", "spectral", "hodge"}));
  sub->add_option("--width", o.width, "interval width for displayed roots (rational, e.g. 1/1000000 or 1e-12)");
}

Json read_input(const Options& o) {
  if (!o.input.empty() && !o.inline_json.empty()) throw InputError("give either --input or --json, not both");
  if (!o.inline_json.empty()) return parse_json(o.inline_json);
  if (o.input.empty()) throw InputError("missing --input or --json");
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(o.input, std::ios::binary);
    if (!f) throw InputError("cannot open '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return parse_json(text);
}

Rational display_width(const Options& o, const std::optional<std::string>& width_env) {
  Rational w = kDefaultWidth;
  if (width_env && !width_env->empty()) w = parse_rational(*width_env);
  if (!o.width.empty()) w = parse_rational(o.width);
  if (w <= 0) throw InputError("width must be positive");
  return w;
}

void check_level(const IntersectionProfile& p, const Options& o) {
  const ValidationReport report = validate(p, parse_validation_level(o.level));
  if (!report.ok())
    throw InputError("validation (" + o.level + ") failed: " + report.violation->check + ": " +
                     report.violation->detail);
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw InputError("cannot write '" + o.output + "'");
  f << text;
}

std::string approx(const AlgebraicNumber& a) {
  std::ostringstream s;
  s.precision(12);
  s << a.approx();
  return s.str();
}

int cmd_slope(const Options& o, const Rational& width, std::ostream& out, std::ostream& err) {
  const IntersectionProfile p = any_profile_from_json(read_input(o));
  check_level(p, o);
  SlopeResult r = slope(p);
  if (r.finite) {
    r.finite->zeta = refine(r.finite->zeta, width);
    r.finite->slope = refine(r.finite->slope, width);
  }
  emit(to_json(r), o, out);
  if (r.is_infinite()) {
    err << "slope: infinite (no positive root of the chi-polynomial)\n";
  } else {
    const auto& f = *r.finite;
    err << "slope: " << approx(f.slope) << " ("
        << (f.rationality.verdict == Verdict::Rational
                ? "rational " + to_string(f.rationality.p) + "/" + to_string(f.rationality.q)
                : std::string("irrational"))
        << "), zeta = " << approx(f.zeta) << "\n";
  }
  return kSuccess;
}

int cmd_nef(const Options& o, std::ostream& out, std::ostream& err) {
  const Json j = read_input(o);
  IntersectionProfile p = any_profile_from_json(j);
  check_level(p, o);
  // optional {"a": .., "b": ..} forms B = aL + bM from the profile of M
  if (j.contains("a") || j.contains("b")) {
    const Integer a = j.contains("a") ? integer_from_json(j.at("a")) : Integer(0);
    const Integer b = j.contains("b") ? integer_from_json(j.at("b")) : Integer(0);
    p = binary_profile(p, a, b);
  }
  const NefReport r = is_nef(p);
  emit(to_json(r), o, out);
  err << "nef: " << (r.nef ? (r.ample ? "nef and ample" : "nef, not ample") : "not nef") << "\n";
  return kSuccess;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const IntersectionProfile p = any_profile_from_json(read_input(o));
  check_level(p, o);
  const Rationality r = certify_rationality(p);
  emit(to_json(r), o, out);
  if (r.verdict == Verdict::Rational)
    err << "certify: rational slope " << r.p << "/" << r.q << " (" << r.p << " | L^n, " << r.q << " | M^n)\n";
  else
    err << "certify: irrational; " << r.trace.candidates.size() << " positive candidates excluded\n";
  return kSuccess;
}

int cmd_bound(const Options& o, std::ostream& out, std::ostream& err) {
  const IntersectionProfile p = any_profile_from_json(read_input(o));
  check_level(p, o);
  const Rational b = slope_lower_bound(p);
  Json j;
  j["bound"] = to_string(b);
  j["approx"] = to_double(b);
  emit(j, o, out);
  err << "bound: slope >= " << to_string(b) << "\n";
  return kSuccess;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const Json j = read_input(o);
  std::vector<ScanInstance> instances = scan_instances_from_json(j);
  for (const auto& inst : instances) check_level(inst.profile, o);
  std::optional<Integer> Ln;
  if (j.is_object() && j.contains("Ln")) Ln = integer_from_json(j.at("Ln"));
  const SimplicityScan s = scan(instances, Ln, o.jobs);
  emit(to_json(s), o, out);
  std::size_t witnesses = 0;
  for (const auto& e : s.entries) witnesses += e.verdict == ScanVerdict::RationalSlopeWitness;
  err << "scan: " << to_string(s.overall) << " (" << witnesses << " witness(es) in " << s.entries.size()
      << " instance(s))\n";
  return s.overall == ScanOverall::NonSimpleWitnessFound ? kWitnessFound : kSuccess;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  GenSpec spec;
  spec.kind = parse_gen_kind(o.kind);
  spec.n = o.n;
  spec.bound = o.bound;
  spec.den_bound = o.den;
  spec.seed = o.seed;
  spec.count = o.count;
  Json arr = Json::array();
  for (const auto& inst : gen_random(spec)) arr.push_back(to_json(inst));
  emit(arr, o, out);
  err << "gen: " << arr.size() << " " << o.kind << " instance(s), seed " << o.seed << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& width_env) {
  CLI::App app{"Nef thresholds on polarized abelian varieties from intersection data", "nefslope"};
  app.require_subcommand(1);
  Options o;

  auto* slope_cmd = app.add_subcommand("slope", "nef threshold sigma(L,M) with certificate");
  auto* nef_cmd = app.add_subcommand("nef", "nefness of a class from its profile against L");
  auto* certify_cmd = app.add_subcommand("certify", "rationality certificate of sigma(L,M)");
  auto* bound_cmd = app.add_subcommand("bound", "Cauchy lower bound for sigma(L,M)");
  auto* scan_cmd = app.add_subcommand("scan", "scan classes for rational slopes (non-simplicity witnesses)");
  auto* gen_cmd = app.add_subcommand("gen", "emit seeded instances as JSON");
  for (auto* sub : {slope_cmd, nef_cmd, certify_cmd, bound_cmd, scan_cmd}) add_io_options(sub, o);
  scan_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  gen_cmd->add_option("--output", o.output, "write JSON here instead of stdout");
  gen_cmd->add_option("--kind", o.kind, "instance kind")->check(CLI::IsMember({"product-matrix", "surface", "random"}));
  gen_cmd->add_option("--n", o.n, "dimension")->check(CLI::Range(1u, 12u));
  gen_cmd->add_option("--bound", o.bound, "entry bound")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--den", o.den, "denominator bound (product-matrix)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", o.seed, "64-bit seed");
  gen_cmd->add_option("--count", o.count, "number of instances");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*gen_cmd) return cmd_gen(o, out, err);
    const Rational width = display_width(o, width_env);
    if (*slope_cmd) return cmd_slope(o, width, out, err);
    if (*nef_cmd) return cmd_nef(o, out, err);
    if (*certify_cmd) return cmd_certify(o, out, err);
    if (*bound_cmd) return cmd_bound(o, out, err);
    if (*scan_cmd) return cmd_scan(o, out, err);
  } catch (const NegationIsNef& e) {
    err << "NegationIsNef: " << e.what() << "\n";
    return kPreconditionViolation;
  } catch (const PreconditionError& e) {
    err << "PreconditionError: " << e.what() << "\n";
    return kPreconditionViolation;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace nefslope::cli
