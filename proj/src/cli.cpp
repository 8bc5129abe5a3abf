#include "nsgreedy/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <json.hpp>
#include <ostream>

#include "nsgreedy/checker.hpp"
#include "nsgreedy/families.hpp"
#include "nsgreedy/representation.hpp"
#include "nsgreedy/semigroup.hpp"

namespace nsgreedy::cli {

namespace {

using json = nlohmann::json;

constexpr Int kGeneratorLimit = Int{1} << 31;
constexpr Int kSurveyLimit = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool trace = false;
  bool verify = false;
  std::string method = "auto";
  Int min_gen = 2;
  Int max_gen = 15;
  std::optional<Int> modulus;
  bool timing = false;
  bool verbose = false;
  std::string generators;
  std::string target;
};

Int parse_int(std::string_view text, std::string_view what) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError("cannot parse " + std::string(what) + " '" +
                     std::string(text) + "'");
  }
  return value;
}

GeneratorSet parse_generators(const std::string& text) {
  std::vector<Int> values;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    const auto token = std::string_view(text).substr(
        begin, comma == std::string::npos ? std::string::npos : comma - begin);
    const Int v = parse_int(token, "generator");
    if (v > kGeneratorLimit) {
      throw UsageError("generator " + std::to_string(v) + " exceeds 2^31");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return GeneratorSet::from_values(values);
}

json to_json(const RepresentationVector& r) {
  return {{"coefficients", r.coefficients}, {"value", r.value}, {"cost", r.cost}};
}

json to_json(const CriticalRange& r) { return {{"lo", r.lo}, {"hi", r.hi}}; }

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string vector_text(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string joined(const std::vector<Int>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

void emit_envelope(std::ostream& out, std::string_view command, json input,
                   json result) {
  json envelope = {{"command", command},
                   {"input", std::move(input)},
                   {"result", std::move(result)},
                   {"schema_version", "1"}};
  out << envelope.dump() << '\n';
}

json generators_json(const GeneratorSet& gens) {
  return json(std::vector<Int>(gens.elements().begin(), gens.elements().end()));
}

void reject_csv(const Options& opts, std::string_view command) {
  if (opts.format == "csv") {
    throw UsageError("--format csv is not available for " + std::string(command));
  }
}

class Stopwatch {
 public:
  Stopwatch(bool enabled, std::ostream& err) : enabled_(enabled), err_(err) {}
  ~Stopwatch() {
    if (!enabled_) return;
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    err_ << "elapsed: "
         << std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count()
         << " us\n";
  }

 private:
  bool enabled_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool same_outcome(const GreedyReport& a, const GreedyReport& b) {
  return a.verdict == b.verdict && a.witness == b.witness;
}

int cmd_check(const Options& opts, std::ostream& out, std::ostream& err) {
  reject_csv(opts, "check");
  const auto table = SemigroupTable::build(parse_generators(opts.generators));
  const GeneratorSet& gens = table.generators();
  const bool three = gens.size() == 3;
  if (opts.method == "three-gen" && !three) {
    throw UsageError("--method three-gen needs exactly 3 generators, got " +
                     std::to_string(gens.size()));
  }
  if (opts.verbose && gens.size() >= 3) {
    const CriticalRange range = critical_range(table);
    err << "critical range [" << range.lo << "," << range.hi << "]: "
        << range.size() << " values to scan\n";
  }

  const bool use_three = opts.method == "three-gen" || (opts.method == "auto" && three);
  const GreedyReport report = use_three ? three_gen_scan(table) : decide_greedy(table);

  std::optional<bool> verified;
  if (opts.verify) {
    bool ok = true;
    if (three) {
      const GreedyReport other = use_three ? decide_greedy(table) : three_gen_scan(table);
      ok = same_outcome(report, other);
    }
    const Int margin = checked_mul(3, gens.largest());
    const Int hi = report.range ? checked_add(report.range->hi, margin)
                                : checked_add(table.frobenius(), margin);
    const auto oracle = smallest_counterexample_bruteforce(table, hi);
    ok = ok && oracle == report.witness;
    verified = ok;
    if (!ok) {
      err << "error: verification failed for " << gens.to_string() << '\n';
      return kVerifyFailed;
    }
  }

  std::optional<Int> rest_cost;
  if (report.witness && report.witness_generator) {
    rest_cost = greedy_cost(table, *report.witness - *report.witness_generator);
  }

  if (opts.format == "json") {
    json input = {{"generators", generators_json(gens)},
                  {"method", opts.method},
                  {"verify", opts.verify}};
    json result = {{"verdict", to_string(report.verdict)},
                   {"method", to_string(report.method)},
                   {"range", report.range ? to_json(*report.range) : json(nullptr)},
                   {"witness", optional_json(report.witness)},
                   {"witness_generator", optional_json(report.witness_generator)},
                   {"greedy_cost_after_generator", optional_json(rest_cost)},
                   {"greedy", nullptr},
                   {"minimal", nullptr}};
    if (report.counterexample_detail) {
      result["greedy"] = to_json(report.counterexample_detail->greedy);
      result["minimal"] = to_json(report.counterexample_detail->minimal);
    }
    if (verified) result["verified"] = *verified;
    emit_envelope(out, "check", std::move(input), std::move(result));
  } else if (report.is_greedy()) {
    if (report.range) {
      out << "GREEDY (range [" << report.range->lo << "," << report.range->hi
          << "] clear)\n";
    } else {
      out << "GREEDY (at most two generators)\n";
    }
  } else {
    const Int k = *report.witness;
    const Int s = *report.witness_generator;
    out << "NOT GREEDY: witness k=" << k
        << " (GC=" << report.counterexample_detail->greedy.cost << ", via s_i=" << s
        << " GC(" << k - s << ")+1=" << *rest_cost + 1 << ")\n";
    if (opts.verbose) {
      out << "greedy " << vector_text(report.counterexample_detail->greedy.coefficients)
          << " cost " << report.counterexample_detail->greedy.cost << "; minimal "
          << vector_text(report.counterexample_detail->minimal.coefficients) << " cost "
          << report.counterexample_detail->minimal.cost << '\n';
    }
  }
  if (opts.verbose) err << "method: " << to_string(report.method) << '\n';
  return report.is_greedy() ? kOk : kNegative;
}

int cmd_repr(const Options& opts, std::ostream& out, std::ostream& err) {
  reject_csv(opts, "repr");
  const auto table = SemigroupTable::build(parse_generators(opts.generators));
  const Int k = parse_int(opts.target, "target");
  if (k < 0) throw UsageError("target must be nonnegative, got " + std::to_string(k));
  json input = {{"generators", generators_json(table.generators())},
                {"k", k},
                {"trace", opts.trace}};

  if (!table.contains(k)) {
    err << "k not representable; Frobenius = " << table.frobenius() << '\n';
    if (opts.format == "json") {
      emit_envelope(out, "repr", std::move(input),
                    {{"representable", false}, {"frobenius", table.frobenius()}});
    }
    return kNegative;
  }

  const RepresentationVector greedy = greedy_repr_divide(table, k);
  const RepresentationVector minimal = min_repr(table, k);
  const auto steps = opts.trace ? greedy_division_trace(table, k)
                                : std::vector<DivisionStep>{};

  if (opts.format == "json") {
    json result = {{"representable", true},
                   {"greedy", to_json(greedy)},
                   {"minimal", to_json(minimal)}};
    if (opts.trace) {
      json rows = json::array();
      for (const auto& s : steps) {
        rows.push_back({{"index", s.index},
                        {"target", s.target},
                        {"generator", s.generator},
                        {"quotient", s.quotient},
                        {"remainder", s.remainder}});
      }
      result["trace"] = std::move(rows);
    }
    emit_envelope(out, "repr", std::move(input), std::move(result));
    return kOk;
  }

  out << "greedy " << vector_text(greedy.coefficients) << " cost " << greedy.cost << '\n';
  out << "minimal " << vector_text(minimal.coefficients) << " cost " << minimal.cost
      << '\n';
  if (opts.trace) {
    out << "i target s_i q r\n";
    for (const auto& s : steps) {
      out << s.index << ' ' << s.target << ' ' << s.generator << ' ' << s.quotient
          << ' ' << s.remainder << '\n';
    }
  }
  return kOk;
}

void emit_list(const Options& opts, std::ostream& out, std::string_view command,
               json input, std::string_view key, const std::vector<Int>& values,
               json extra = json::object()) {
  if (opts.format == "json") {
    json result = std::move(extra);
    result[std::string(key)] = values;
    emit_envelope(out, command, std::move(input), std::move(result));
  } else if (opts.format == "csv") {
    out << key << '\n';
    for (Int v : values) out << v << '\n';
  } else {
    out << joined(values, " ") << '\n';
  }
}

int cmd_frobenius(const Options& opts, std::ostream& out) {
  const auto table = SemigroupTable::build(parse_generators(opts.generators));
  json input = {{"generators", generators_json(table.generators())}};
  if (opts.format == "json") {
    emit_envelope(out, "frobenius", std::move(input),
                  {{"frobenius", table.frobenius()}, {"genus", table.genus()}});
  } else if (opts.format == "csv") {
    out << "frobenius\n" << table.frobenius() << '\n';
  } else {
    out << table.frobenius() << '\n';
  }
  return kOk;
}

int cmd_gaps(const Options& opts, std::ostream& out) {
  const auto table = SemigroupTable::build(parse_generators(opts.generators));
  emit_list(opts, out, "gaps", {{"generators", generators_json(table.generators())}},
            "gaps", table.gaps(), {{"count", table.genus()}});
  return kOk;
}

int cmd_apery(const Options& opts, std::ostream& out) {
  const auto table = SemigroupTable::build(parse_generators(opts.generators));
  const Int n = opts.modulus.value_or(table.generators().largest());
  emit_list(opts, out, "apery",
            {{"generators", generators_json(table.generators())}, {"mod", n}}, "apery",
            table.apery_set(n));
  return kOk;
}

std::string csv_field(const std::optional<Int>& v) {
  return v ? std::to_string(*v) : std::string();
}

int cmd_survey(const Options& opts, std::ostream& out, std::ostream& err) {
  if (opts.min_gen < 2 || opts.min_gen >= opts.max_gen || opts.max_gen > kSurveyLimit) {
    throw UsageError("survey bounds need 2 <= min < max <= 64, got min=" +
                     std::to_string(opts.min_gen) + " max=" + std::to_string(opts.max_gen));
  }
  const auto records = survey_triples(opts.min_gen, opts.max_gen);
  std::size_t greedy = 0;
  for (const auto& r : records) greedy += r.verdict == Verdict::Greedy;
  const std::size_t not_greedy = records.size() - greedy;

  if (opts.format == "json") {
    json rows = json::array();
    for (const auto& r : records) {
      rows.push_back({{"generators", generators_json(r.generators)},
                      {"frobenius", r.frobenius},
                      {"range", to_json(r.range)},
                      {"verdict", to_string(r.verdict)},
                      {"witness", optional_json(r.witness)},
                      {"gc_at_witness", optional_json(r.greedy_cost_at_witness)},
                      {"mc_at_witness", optional_json(r.min_cost_at_witness)}});
    }
    emit_envelope(out, "survey", {{"min", opts.min_gen}, {"max", opts.max_gen}},
                  {{"records", std::move(rows)},
                   {"greedy", greedy},
                   {"not_greedy", not_greedy}});
  } else {
    out << "s1,s2,s3,frobenius,range_lo,range_hi,verdict,witness,gc_at_witness,"
           "mc_at_witness\n";
    for (const auto& r : records) {
      out << r.generators[0] << ',' << r.generators[1] << ',' << r.generators[2] << ','
          << r.frobenius << ',' << r.range.lo << ',' << r.range.hi << ','
          << to_string(r.verdict) << ',' << csv_field(r.witness) << ','
          << csv_field(r.greedy_cost_at_witness) << ','
          << csv_field(r.min_cost_at_witness) << '\n';
    }
  }
  err << "greedy: " << greedy << ", not greedy: " << not_greedy << " of "
      << records.size() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether a numerical semigroup is greedy", "nsgreedy"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--timing", opts.timing, "Print elapsed time to stderr");
    sub->add_flag("--verbose", opts.verbose, "Extra diagnostics on stderr");
  };
  auto add_generators = [&](CLI::App* sub) {
    sub->add_option("generators", opts.generators, "Comma-separated generators, e.g. 3,7,10")
        ->required();
  };

  auto* check = app.add_subcommand("check", "Decide greediness");
  add_generators(check);
  add_common(check);
  check->add_flag("--verify", opts.verify, "Cross-check against the other methods");
  check->add_option("--method", opts.method, "auto|full|three-gen")
      ->check(CLI::IsMember({"auto", "full", "three-gen"}));

  auto* repr = app.add_subcommand("repr", "Greedy and minimal representations of k");
  add_generators(repr);
  repr->add_option("k", opts.target, "Target value")->required();
  add_common(repr);
  repr->add_flag("--trace", opts.trace, "Print the division-version step table");

  auto* frob = app.add_subcommand("frobenius", "Frobenius number");
  add_generators(frob);
  add_common(frob);

  auto* gaps = app.add_subcommand("gaps", "Sorted gaps");
  add_generators(gaps);
  add_common(gaps);

  auto* apery = app.add_subcommand("apery", "Apery set (default modulus: largest generator)");
  add_generators(apery);
  add_common(apery);
  apery->add_option("--mod", opts.modulus, "Modulus n, a positive member");

  auto* survey = app.add_subcommand("survey", "Classify every gcd-1 triple in a box");
  add_common(survey);
  survey->add_option("--min", opts.min_gen, "Smallest generator (>= 2)");
  survey->add_option("--max", opts.max_gen, "Largest generator (<= 64)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (survey->parsed() && opts.format == "text") opts.format = "csv";

  Stopwatch stopwatch(opts.timing, err);
  try {
    if (check->parsed()) return cmd_check(opts, out, err);
    if (repr->parsed()) return cmd_repr(opts, out, err);
    if (frob->parsed()) return cmd_frobenius(opts, out);
    if (gaps->parsed()) return cmd_gaps(opts, out);
    if (apery->parsed()) return cmd_apery(opts, out);
    return cmd_survey(opts, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Internal ? kVerifyFailed : kUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kUsage;
  }
}

}  // namespace nsgreedy::cli
