#pragma once

// Command-line front end. Kept as a header so the test suite can drive
// run_cli() in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brieskorn.hpp"

namespace brieskorn::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidInput = 2 };

/// Splits "4,5,9,19" / "4 5 9 19" style tokens into integers.
inline std::vector<BigInt> parse_entries(const std::vector<std::string>& tokens) {
  std::vector<BigInt> out;
  for (const auto& tok : tokens) {
    std::string part;
    std::stringstream ss(tok);
    while (std::getline(ss, part, ',')) {
      if (part.empty()) continue;
      out.push_back(parse_bigint(part));
    }
  }
  return out;
}

/// Splits on "+" tokens (also "a+b" inside one token) into summand tuples.
inline std::vector<ExponentTuple> parse_summands(const std::vector<std::string>& tokens) {
  std::vector<std::vector<std::string>> groups(1);
  for (const auto& tok : tokens) {
    std::string cur;
    for (char ch : tok) {
      if (ch == '+') {
        if (!cur.empty()) groups.back().push_back(cur);
        cur.clear();
        groups.emplace_back();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) groups.back().push_back(cur);
  }
  std::vector<ExponentTuple> out;
  for (const auto& g : groups) {
    if (g.empty()) throw InvalidInput("empty summand in connected sum");
    out.push_back(ExponentTuple::make(parse_entries(g)));
  }
  return out;
}

inline Json encode_optional(const std::optional<BigRational>& q) {
  return q ? json_io::encode(*q) : Json(nullptr);
}

inline Json encode_indices(const std::vector<std::size_t>& idx) {
  Json arr = Json::array();
  for (auto i : idx) arr.push_back(i);
  return arr;
}

/// Rounds toward zero to `digits` significant digits using integer
/// arithmetic only; display helper, never fed back into computations.
inline std::string decimal(const BigRational& q, int digits = 6) {
  if (q.num() == 0) return "0";
  const BigInt num = abs(q.num());
  const BigInt& den = q.den();
  auto pow10 = [](long long k) {
    BigInt p = 1;
    for (long long i = 0; i < k; ++i) p *= 10;
    return p;
  };
  // find s with 10^(digits-1) <= floor(num * 10^s / den) < 10^digits
  long long s = digits - static_cast<long long>(num.str().size() - den.str().size());
  auto scaled = [&](long long shift) {
    return shift >= 0 ? BigInt(num * pow10(shift) / den) : BigInt(num / (den * pow10(-shift)));
  };
  BigInt v = scaled(s);
  const BigInt lo = pow10(digits - 1), hi = pow10(digits);
  while (v >= hi) v = scaled(--s);
  while (v < lo) v = scaled(++s);
  std::string d = v.str();
  const long long point = static_cast<long long>(d.size()) - s;  // digits before the point
  std::string out = q.sign() < 0 ? "-" : "";
  if (point >= 1 && point <= static_cast<long long>(d.size())) {
    out += d.substr(0, static_cast<std::size_t>(point));
    if (point < static_cast<long long>(d.size())) out += "." + d.substr(static_cast<std::size_t>(point));
  } else if (point <= 0 && point > -4) {
    out += "0." + std::string(static_cast<std::size_t>(-point), '0') + d;
  } else {
    out += d.substr(0, 1) + "." + d.substr(1) + "e" + std::to_string(point - 1);
  }
  return out;
}

struct Context {
  bool json = false;
  Limits limits;
  std::ostream& out;
  std::ostream& err;
  Json input = Json::object();
  std::vector<std::string> warnings;
};

inline void emit(Context& ctx, const std::string& command, Json result) {
  Json env{{"schema_version", kSchemaVersion},
           {"command", command},
           {"input", ctx.input},
           {"result", std::move(result)},
           {"warnings", ctx.warnings}};
  ctx.out << env.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

inline int cmd_criterion(Context& ctx, const std::vector<std::string>& tokens) {
  const ExponentTuple a = ExponentTuple::make(parse_entries(tokens));
  ctx.input["tuple"] = json_io::encode(a);
  const SphereVerdict v = evaluate_criterion(a);
  const DivisorGraph g = build_graph(a);
  if (ctx.json) {
    Json edges = Json::array();
    for (auto [k, l] : g.edges) edges.push_back({k, l});
    Json comps = Json::array();
    for (const auto& c : g.components) comps.push_back(encode_indices(c));
    Json iso_labels = Json::array();
    for (auto i : v.isolated_points) iso_labels.push_back(a[i].str());
    emit(ctx, "criterion",
         Json{{"tuple", json_io::encode(a)},
              {"verdict", to_string(v.kind)},
              {"condition_i", v.condition_i},
              {"condition_ii", v.condition_ii},
              {"isolated_points", encode_indices(v.isolated_points)},
              {"isolated_labels", iso_labels},
              {"edges", edges},
              {"components", comps},
              {"even_component", encode_indices(g.even_component)},
              {"even_component_size", v.even_component_size},
              {"even_component_pairwise_gcd2", v.even_component_pairwise_gcd2}});
    return kOk;
  }
  auto labels = [&](const std::vector<std::size_t>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + a[idx[i]].str();
    return s + "}";
  };
  ctx.out << "tuple            " << a.str() << "  (dimension " << a.dimension() << ")\n";
  ctx.out << "verdict          " << to_string(v.kind) << "\n";
  ctx.out << "components      ";
  for (const auto& c : g.components) ctx.out << " " << labels(c);
  ctx.out << "\n";
  ctx.out << "isolated points  " << labels(v.isolated_points) << "\n";
  ctx.out << "even component   " << labels(g.even_component) << "  size "
          << v.even_component_size << ", pairwise gcd 2: "
          << (v.even_component_pairwise_gcd2 ? "yes" : "no") << "\n";
  ctx.out << "condition (i)    " << (v.condition_i ? "holds" : "fails") << "\n";
  ctx.out << "condition (ii)   " << (v.condition_ii ? "holds" : "fails") << "\n";
  if (a.size() == 3) {
    ctx.out << "note             length 3: integral homology sphere conditions only\n";
  }
  return kOk;
}

inline Json encode_stratum(const Stratum& s) {
  return Json{{"period", s.period.str()},
              {"indices", encode_indices(s.indices)},
              {"subtuple", json_io::encode(s.subtuple)},
              {"m", s.m},
              {"dim", s.dim},
              {"quotient_dim", s.quotient_dim},
              {"mu_rs", s.mu_rs.str()},
              {"chi_s1", s.chi_s1.str()},
              {"frequency", s.frequency.str()}};
}

inline int cmd_invariants(Context& ctx, const std::vector<std::string>& tokens, bool show_strata) {
  const ExponentTuple a = ExponentTuple::make(parse_entries(tokens));
  ctx.input["tuple"] = json_io::encode(a);
  ctx.input["strata"] = show_strata;
  const BigInt k = kappa(a, ctx.limits);
  const BigInt chi = chi_s1(a, ctx.limits);
  const MeanEulerReport r = mean_euler(a, ctx.limits);
  const bool isolated = has_isolated_exponent(a);
  std::optional<SphereVerdict> verdict;
  if (a.size() >= 3) verdict = evaluate_criterion(a);
  std::optional<BigRational> closed;
  if (is_pairwise_coprime(a)) closed = mean_euler_coprime(a);
  if (!r.defined()) ctx.warnings.push_back("mean Euler characteristic undefined: total mu_RS = 0");

  if (ctx.json) {
    Json res{{"tuple", json_io::encode(a)},
             {"n", a.n()},
             {"dimension", a.dimension()},
             {"d", a.lcm().str()},
             {"sphere_verdict", verdict ? Json(to_string(verdict->kind)) : Json(nullptr)},
             {"kappa", k.str()},
             {"chi_s1", chi.str()},
             {"total_mu_rs", r.total_mu_rs.str()},
             {"has_isolated_exponent", isolated},
             {"chi_m_defined", r.defined()},
             {"chi_m", encode_optional(r.value)},
             {"chi_m_coprime_closed_form", encode_optional(closed)},
             {"period_count", r.strata.size()}};
    if (show_strata) {
      Json arr = Json::array();
      for (const auto& s : r.strata) arr.push_back(encode_stratum(s));
      res["strata"] = arr;
    }
    emit(ctx, "invariants", std::move(res));
    return kOk;
  }
  ctx.out << "tuple              " << a.str() << "  (n = " << a.n() << ", dimension "
          << a.dimension() << ")\n";
  if (verdict) ctx.out << "sphere criterion   " << to_string(verdict->kind) << "\n";
  ctx.out << "d = lcm            " << a.lcm() << "\n";
  ctx.out << "kappa              " << k << "\n";
  ctx.out << "chi_S1             " << chi << "\n";
  ctx.out << "total mu_RS        " << r.total_mu_rs << "\n";
  ctx.out << "isolated exponent  " << (isolated ? "yes" : "no") << "\n";
  if (r.defined()) {
    ctx.out << "chi_m              " << *r.value << "  (~" << decimal(*r.value) << ")\n";
  } else {
    ctx.out << "chi_m              undefined (mu_RS = 0)\n";
  }
  if (closed) ctx.out << "chi_m closed form  " << *closed << "\n";
  if (show_strata) {
    ctx.out << "\n" << std::setw(14) << "T" << "  " << std::setw(16) << std::left << "b"
            << std::right << std::setw(5) << "dim" << std::setw(10) << "mu_RS" << std::setw(12)
            << "phi" << std::setw(8) << "chi_S1" << "\n";
    for (const auto& s : r.strata) {
      ctx.out << std::setw(14) << s.period.str() << "  " << std::setw(16) << std::left
              << s.subtuple.str() << std::right << std::setw(5) << s.dim << std::setw(10)
              << s.mu_rs.str() << std::setw(12) << s.frequency.str() << std::setw(8)
              << s.chi_s1.str() << "\n";
    }
  }
  return kOk;
}

inline int cmd_sum(Context& ctx, const std::vector<std::string>& tokens) {
  const std::vector<ExponentTuple> summands = parse_summands(tokens);
  Json in = Json::array();
  for (const auto& a : summands) in.push_back(json_io::encode(a));
  ctx.input["summands"] = in;
  for (const auto& a : summands) {
    if (a.size() != 4) {
      throw InvalidInput("connected sums are taken in dimension 5: " + a.str() + " has length " +
                         std::to_string(a.size()) + ", expected 4");
    }
  }
  std::vector<BigRational> values;
  Json rows = Json::array();
  bool all_spheres = true;
  for (const auto& a : summands) {
    const MeanEulerReport r = mean_euler(a, ctx.limits);
    if (!r.defined()) {
      throw PreconditionError("mean Euler characteristic of " + a.str() +
                              " is undefined (mu_RS = 0)");
    }
    const SphereKind kind = evaluate_criterion(a).kind;
    all_spheres = all_spheres && is_sphere(kind);
    values.push_back(*r.value);
    rows.push_back(Json{{"tuple", json_io::encode(a)},
                        {"sphere_verdict", to_string(kind)},
                        {"chi_m", json_io::encode(*r.value)}});
  }
  const BigRational total = connected_sum_chi(values, 3);
  const bool certified = summands.size() >= 2 && all_spheres && total <= BigRational(0);
  if (!all_spheres) {
    ctx.warnings.push_back("not every summand is a Brieskorn sphere; no certificate is issued");
  }
  if (ctx.json) {
    emit(ctx, "sum",
         Json{{"summands", rows},
              {"chi_m_sum", json_io::encode(total)},
              {"certified_non_brieskorn", certified},
              {"boundary", certified && total == BigRational(0)}});
    return kOk;
  }
  for (std::size_t i = 0; i < summands.size(); ++i) {
    ctx.out << "chi_m" << summands[i].str() << " = " << values[i] << "\n";
  }
  ctx.out << "chi_m(sum) = " << total << "  (~" << decimal(total) << ")\n";
  if (certified) {
    ctx.out << "certified non-Brieskorn: every 5-dimensional Brieskorn sphere has "
               "chi_m > 0\n";
  }
  for (const auto& w : ctx.warnings) ctx.err << "warning: " << w << "\n";
  return kOk;
}

inline Json encode_row(const FamilyRow& row) {
  return Json{{"m", row.parameter.str()},
              {"tuple", json_io::encode(row.tuple)},
              {"sphere_verdict", to_string(row.verdict.kind)},
              {"pairwise_coprime", row.pairwise_coprime},
              {"chi_m", encode_optional(row.chi_m)},
              {"closed_form", encode_optional(row.closed_form)},
              {"agrees", row.agrees ? Json(*row.agrees) : Json(nullptr)}};
}

inline Json encode_checks(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return arr;
}

inline int cmd_sigma_m(Context& ctx, const BigInt& from, const BigInt& to) {
  ctx.input["family"] = "sigma-m";
  ctx.input["from"] = from.str();
  ctx.input["to"] = to.str();
  std::vector<FamilyRow> rows;
  std::optional<SigmaFamilyReport> report;
  if (from >= 4 && to > from) {
    report = verify_sigma_family(from, to, ctx.limits);
    rows = report->rows;
  } else {
    rows = sigma_m_rows(from, to, ctx.limits);
  }
  bool agree = true;
  for (const auto& row : rows) agree = agree && row.agrees.value_or(true);

  if (ctx.json) {
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(encode_row(row));
    Json res{{"rows", arr}, {"all_closed_forms_agree", agree}};
    if (report) {
      res["checks"] = encode_checks(report->checks);
      res["notes"] = report->notes;
      res["passed"] = report->passed();
    }
    emit(ctx, "family sigma-m", std::move(res));
    return kOk;
  }
  ctx.out << std::setw(5) << "m" << "  " << std::setw(22) << std::left << "tuple" << std::setw(14)
          << "verdict" << std::right << std::setw(24) << "chi_m" << "  closed form\n";
  for (const auto& row : rows) {
    std::string cf;
    if (!row.closed_form) {
      cf = "closed form n/a (3 | m)";
    } else {
      cf = row.closed_form->str() + (*row.agrees ? "  ✓" : "  ✗ MISMATCH");
    }
    ctx.out << std::setw(5) << row.parameter.str() << "  " << std::setw(22) << std::left
            << row.tuple.str() << std::setw(14) << to_string(row.verdict.kind) << std::right
            << std::setw(24) << (row.chi_m ? row.chi_m->str() : "undefined") << "  " << cf << "\n";
  }
  ctx.out << "\nclosed-form agreement: " << (agree ? "all rows agree" : "MISMATCH") << "\n";
  if (report) {
    for (const auto& c : report->checks) {
      ctx.out << (c.passed ? "PASS  " : "FAIL  ") << c.name
              << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    }
    for (const auto& n : report->notes) ctx.out << "note  " << n << "\n";
  }
  return kOk;
}

inline int cmd_fermat(Context& ctx, std::size_t ell, std::size_t n, std::size_t scan) {
  ctx.input["family"] = "fermat";
  ctx.input["ell"] = ell;
  ctx.input["n"] = n;
  ctx.input["scan"] = scan;
  const ExponentTuple a = fermat_tuple(ell, n, ctx.limits);
  const SphereVerdict v = evaluate_criterion(a);
  const BigRational closed = mean_euler_coprime(a);
  const FermatAsymptoticsReport rep = fermat_asymptotics(ell, ell + scan, n, ctx.limits);

  if (ctx.json) {
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
      rows.push_back(Json{{"ell", row.ell},
                          {"tuple", json_io::encode(row.tuple)},
                          {"chi_m", json_io::encode(row.chi_m)},
                          {"signed_chi_m", json_io::encode(row.signed_chi)},
                          {"ratio", json_io::encode(row.ratio)},
                          {"signed_self_sum", json_io::encode(row.signed_self_sum)}});
    }
    emit(ctx, "family fermat",
         Json{{"tuple", json_io::encode(a)},
              {"sphere_verdict", to_string(v.kind)},
              {"pairwise_coprime", true},
              {"chi_m", json_io::encode(closed)},
              {"rows", rows},
              {"first_below_quarter",
               rep.first_below_quarter ? Json(*rep.first_below_quarter) : Json(nullptr)},
              {"checks", encode_checks(rep.checks)},
              {"passed", rep.passed()}});
    return kOk;
  }
  ctx.out << "tuple    (F_" << ell << ", ..., F_" << ell + n << ") = " << a << "\n";
  ctx.out << "verdict  " << to_string(v.kind) << " (pairwise coprime)\n";
  ctx.out << "chi_m    " << closed << "  (~" << decimal(closed) << ")\n\n";
  ctx.out << std::setw(4) << "l" << std::setw(22) << "(-1)^(n+1) chi_m" << std::setw(22)
          << "ratio to 1/(2x^3)" << std::setw(22) << "(-1)^(n+1) chi(a#a)" << "\n";
  for (const auto& row : rep.rows) {
    ctx.out << std::setw(4) << row.ell << std::setw(22) << decimal(row.signed_chi, 8)
            << std::setw(22) << decimal(row.ratio, 12) << std::setw(22)
            << decimal(row.signed_self_sum, 8) << "\n";
  }
  ctx.out << "\n";
  for (const auto& c : rep.checks) {
    ctx.out << (c.passed ? "PASS  " : "FAIL  ") << c.name
            << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  }
  return kOk;
}

inline int cmd_search(Context& ctx, std::uint64_t max_exponent, const std::string& out_path,
                      std::size_t show) {
  ctx.input["max_exponent"] = max_exponent;
  ctx.input["out"] = out_path.empty() ? Json(nullptr) : Json(out_path);
  const std::vector<ExponentTuple> tuples = enumerate_sphere_tuples(max_exponent, 4, ctx.limits);
  const std::vector<CertifiedTuple> prepared = prepare_certification(tuples, ctx.limits);

  std::optional<CertificateWriter> writer;
  if (!out_path.empty()) writer.emplace(out_path);
  std::set<BigRational> classes;
  std::uint64_t boundary = 0;
  std::vector<NonBrieskornCertificate> sample;
  const std::uint64_t count = for_each_certificate(
      std::span<const CertifiedTuple>(prepared), [&](NonBrieskornCertificate&& c) {
        if (writer) writer->write(c);
        classes.insert(c.chi_sum);
        if (c.boundary) ++boundary;
        if (sample.size() < show) sample.push_back(std::move(c));
      });
  if (writer) writer->close();
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(prepared.size()) * (prepared.size() + 1) / 2;

  if (ctx.json) {
    Json arr = Json::array();
    for (const auto& c : sample) arr.push_back(certificate_to_json(c));
    emit(ctx, "search",
         Json{{"sphere_tuples", prepared.size()},
              {"pairs_examined", pairs},
              {"certificates", count},
              {"boundary_certificates", boundary},
              {"distinct_chi_sum_classes", classes.size()},
              {"sample", arr}});
    return kOk;
  }
  ctx.out << "sphere 4-tuples with entries <= " << max_exponent << ": " << prepared.size() << "\n";
  ctx.out << "unordered pairs examined:        " << pairs << "\n";
  ctx.out << "non-Brieskorn certificates:      " << count << " (" << boundary << " boundary)\n";
  ctx.out << "distinct chi_m(sum) values:      " << classes.size() << "\n";
  if (writer) ctx.out << "written to " << out_path << "\n";
  for (const auto& c : sample) {
    ctx.out << "  " << c.tuple_a << " # " << c.tuple_b << "  chi_m = " << c.chi_a << " + "
            << c.chi_b << " - 1/2 = " << c.chi_sum << "\n";
  }
  return kOk;
}

inline int cmd_verify(Context& ctx) {
  const auto results = run_reproduction_suite(ctx.limits);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.check.passed;
  if (ctx.json) {
    Json arr = Json::array();
    for (const auto& r : results) {
      arr.push_back(Json{{"item", r.id},
                         {"name", r.check.name},
                         {"passed", r.check.passed},
                         {"detail", r.check.detail},
                         {"seconds", r.seconds}});
    }
    emit(ctx, "verify-paper", Json{{"items", arr}, {"all_passed", ok}});
  } else {
    for (const auto& r : results) {
      ctx.out << (r.check.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] "
              << r.check.name << "  (" << r.check.detail << ")\n";
    }
    ctx.out << (ok ? "all items passed\n" : "some items FAILED\n");
  }
  return ok ? kOk : kInternal;
}

// ---------------------------------------------------------------------------

/// Runs one CLI invocation. args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of Brieskorn manifolds and non-Brieskorn certificates",
               "brieskorn"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  Limits limits;
  app.add_flag("--json", json, "Emit a single JSON object on stdout");
  app.add_option("--cap-subsets", limits.subset_cap, "Max tuple length for subset enumeration")
      ->envname("BK_CAP_SUBSETS");
  app.add_option("--cap-antichain", limits.antichain_cap, "Max inclusion-exclusion antichain")
      ->envname("BK_CAP_ANTICHAIN");
  app.add_option("--cap-fermat", limits.fermat_cap, "Max Fermat index")->envname("BK_CAP_FERMAT");
  app.add_option("--direct-count-limit", limits.direct_count_limit,
                 "Multiplier range up to which direct counting cross-checks")
      ->envname("BK_DIRECT_COUNT_LIMIT");
  app.add_option("--search-budget", limits.search_budget, "Max candidate tuples in search")
      ->envname("BK_SEARCH_BUDGET");

  std::vector<std::string> tuple_tokens;
  auto* criterion = app.add_subcommand("criterion", "Brieskorn sphere criterion for a tuple");
  criterion->add_option("tuple", tuple_tokens, "Exponents, space or comma separated")->required();

  bool strata = false;
  auto* invariants = app.add_subcommand("invariants", "Topological and contact invariants");
  invariants->add_option("tuple", tuple_tokens, "Exponents, space or comma separated")->required();
  invariants->add_flag("--strata", strata, "Print the Reeb period strata table");

  auto* sum = app.add_subcommand("sum", "Mean Euler characteristic of a contact connected sum");
  sum->add_option("summands", tuple_tokens, "Tuples separated by '+'")->required();

  auto* family = app.add_subcommand("family", "Parametric families");
  family->require_subcommand(1);
  std::string from_text = "4", to_text = "10";
  auto* sigma = family->add_subcommand("sigma-m", "Sigma(m, m+1, 2m+1, 4m+3)");
  sigma->add_option("--from", from_text, "First m")->required();
  sigma->add_option("--to", to_text, "Last m")->required();
  std::size_t ell = 2, fermat_n = 3, scan = 0;
  auto* fermat_cmd = family->add_subcommand("fermat", "Consecutive Fermat numbers (F_l..F_(l+n))");
  fermat_cmd->add_option("--ell", ell, "Starting index l")->required();
  fermat_cmd->add_option("--n", fermat_n, "n (tuple length n + 1)")->required();
  fermat_cmd->add_option("--scan", scan, "Also scan l+1 .. l+K for the asymptotic checks");

  std::uint64_t max_exponent = 0;
  std::string out_path;
  std::size_t show = 10;
  auto* search = app.add_subcommand("search", "Search sphere pairs with non-Brieskorn sums");
  search->add_option("--max-exponent", max_exponent, "Largest exponent")->required();
  search->add_option("--out", out_path, "JSONL certificate file");
  search->add_option("--show", show, "Certificates echoed to stdout");

  auto* verify = app.add_subcommand("verify-paper", "Run the full reproduction suite");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  Context ctx{json, limits, out, err};
  std::string command = "unknown";
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    err << "error: " << message << "\n";
    if (ctx.json) {
      Json env{{"schema_version", kSchemaVersion},
               {"command", command},
               {"input", ctx.input},
               {"result", nullptr},
               {"warnings", ctx.warnings},
               {"error", Json{{"kind", kind}, {"message", message}}}};
      out << env.dump(2) << "\n";
    }
    return code;
  };
  try {
    if (*criterion) {
      command = "criterion";
      return cmd_criterion(ctx, tuple_tokens);
    }
    if (*invariants) {
      command = "invariants";
      return cmd_invariants(ctx, tuple_tokens, strata);
    }
    if (*sum) {
      command = "sum";
      return cmd_sum(ctx, tuple_tokens);
    }
    if (*sigma) {
      command = "family sigma-m";
      return cmd_sigma_m(ctx, parse_bigint(from_text), parse_bigint(to_text));
    }
    if (*fermat_cmd) {
      command = "family fermat";
      return cmd_fermat(ctx, ell, fermat_n, scan);
    }
    if (*search) {
      command = "search";
      return cmd_search(ctx, max_exponent, out_path, show);
    }
    if (*verify) {
      command = "verify-paper";
      return cmd_verify(ctx);
    }
  } catch (const InvalidInput& e) {
    return fail(kInvalidInput, "invalid_input", e.what());
  } catch (const CapacityError& e) {
    return fail(kInternal, "capacity", e.what());
  } catch (const Error& e) {
    return fail(kInternal, "internal", e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, "internal", e.what());
  }
  return fail(kInvalidInput, "invalid_input", "no command given");
}

}  // namespace brieskorn::cli
