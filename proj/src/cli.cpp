#include "moonexp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "moonexp/arith.hpp"
#include "moonexp/congruence.hpp"
#include "moonexp/deligne.hpp"
#include "moonexp/errors.hpp"
#include "moonexp/etaforms.hpp"
#include "moonexp/supersingular.hpp"

namespace moonexp {

using ojson = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::int64_t kMaxDefaultPrime = 271;

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::int64_t require_prime(std::int64_t p) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  return p;
}

ojson valuation_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

std::string valuation_text(const Valuation& v) { return v.to_string(); }

ojson fp2_json(const Fp2Elem& x) { return ojson::array({x.a, x.b}); }

ojson s2_json(const std::vector<std::pair<Fp2Elem, Fp2Elem>>& pairs) {
  ojson out = ojson::array();
  for (const auto& [x, y] : pairs) out.push_back(ojson::array({fp2_json(x), fp2_json(y)}));
  return out;
}

ojson optional_int(const std::optional<std::int64_t>& v) {
  if (!v) return nullptr;
  return *v;
}

ojson table2_json(const std::optional<SsJ1Row>& row) {
  if (!row) return nullptr;
  return ojson{{"minus744", optional_int(row->minus744)},
               {"c984", optional_int(row->c984)},
               {"other", row->other}};
}

ojson a1_json(const std::vector<A1Check>& checks) {
  ojson out = ojson::array();
  for (const auto& c : checks) {
    out.push_back(ojson{{"alpha", c.alpha},
                        {"class", to_string(c.cls)},
                        {"valuation", c.valuation},
                        {"expected", c.expected}});
  }
  return out;
}

ojson deligne_json(const std::optional<DeligneSummary>& d) {
  if (!d) return nullptr;
  return ojson{{"K", d->K},
               {"a1_valuations", a1_json(d->a1)},
               {"residual_valuation", valuation_json(d->residual_valuation)}};
}

const char* const kRemarkKeys[] = {"r11", "r13a", "r13b", "r13c", "faber_probe"};

std::string remark(const PrimeReport& r, const std::string& key) {
  const auto it = r.remarks.find(key);
  return it == r.remarks.end() ? "n/a" : it->second;
}

ojson report_json(const PrimeReport& r) {
  ojson remarks;
  for (const char* key : kRemarkKeys) remarks[key] = remark(r, key);
  return ojson{{"p", r.p},
               {"vp_monster", r.vp_monster},
               {"term_plus", valuation_json(r.term_plus)},
               {"term_p", valuation_json(r.term_p)},
               {"term_p2", valuation_json(r.term_p2)},
               {"rhs11", r.rhs11},
               {"rhs12", r.rhs12},
               {"m_p", r.m_p},
               {"s1", r.s1},
               {"s2_pairs", s2_json(r.s2_pairs)},
               {"table2_row", table2_json(r.table2_row)},
               {"deligne", deligne_json(r.deligne)},
               {"remarks", remarks},
               {"expected_discrepancy", r.expected_discrepancy},
               {"pass", r.pass}};
}

ojson config_echo(const RunConfig& c) {
  return ojson{{"command", c.command}, {"primes", c.primes}, {"window", c.window},
               {"K", c.K},             {"format", c.format}};
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <typename T>
std::string joined(const std::vector<T>& xs, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string fp2_text(const Fp2Elem& x) {
  if (x.in_base_field()) return std::to_string(x.a);
  return std::to_string(x.a) + "+" + std::to_string(x.b) + "t";
}

std::string s2_text(const std::vector<std::pair<Fp2Elem, Fp2Elem>>& pairs) {
  std::vector<std::string> parts;
  for (const auto& [x, y] : pairs) parts.push_back("{" + fp2_text(x) + " " + fp2_text(y) + "}");
  return joined(parts, ";");
}

std::string table2_text(const std::optional<SsJ1Row>& row) {
  if (!row) return "";
  const auto cell = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  return cell(row->minus744) + " | " + cell(row->c984) + " | " +
         (row->other.empty() ? std::string("-") : joined(row->other, " "));
}

std::string render_csv(const std::vector<PrimeReport>& reports) {
  std::ostringstream os;
  os << "p,vp_monster,term_plus,term_p,term_p2,rhs11,rhs12,m_p,s1,s2_pairs,table2_row,"
        "deligne_K,deligne_a1_valuations,deligne_residual_valuation,r11,r13a,r13b,r13c,"
        "faber_probe,expected_discrepancy,pass\n";
  for (const auto& r : reports) {
    std::vector<std::string> cells{std::to_string(r.p),
                                   std::to_string(r.vp_monster),
                                   valuation_text(r.term_plus),
                                   valuation_text(r.term_p),
                                   valuation_text(r.term_p2),
                                   std::to_string(r.rhs11),
                                   std::to_string(r.rhs12),
                                   std::to_string(r.m_p),
                                   joined(r.s1, ";"),
                                   s2_text(r.s2_pairs),
                                   table2_text(r.table2_row)};
    if (r.deligne) {
      std::vector<std::string> a1;
      for (const auto& c : r.deligne->a1) a1.push_back(std::to_string(c.alpha) + ":" + std::to_string(c.valuation));
      cells.push_back(std::to_string(r.deligne->K));
      cells.push_back(joined(a1, ";"));
      cells.push_back(valuation_text(r.deligne->residual_valuation));
    } else {
      cells.insert(cells.end(), {"", "", ""});
    }
    for (const char* key : kRemarkKeys) cells.push_back(remark(r, key));
    cells.push_back(r.expected_discrepancy ? "true" : "false");
    cells.push_back(r.pass ? "true" : "false");
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_text(const std::vector<PrimeReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "p = " << r.p << ": v_p(#M) = " << r.vp_monster << ", summands " << valuation_text(r.term_plus)
       << " + " << valuation_text(r.term_p) << " + " << valuation_text(r.term_p2) << " = " << r.rhs11
       << ", m_p formula = " << r.rhs12 << ", m_p = " << r.m_p;
    if (r.expected_discrepancy) os << " (p <= 3: exponent formula not expected to hold)";
    os << "\n    s1 = {" << joined(r.s1, ", ") << "}";
    if (!r.s2_pairs.empty()) os << ", s2 = " << s2_text(r.s2_pairs);
    if (r.table2_row) os << ", J_1 row: " << table2_text(r.table2_row);
    os << "\n";
    if (r.deligne) {
      os << "    partial fractions mod p^" << r.deligne->K << ": residual valuation "
         << valuation_text(r.deligne->residual_valuation) << ", v_p(A_1) =";
      for (const auto& c : r.deligne->a1) os << " " << c.alpha << ":" << c.valuation;
      os << (r.deligne->ok ? "" : " FAILED") << "\n";
    }
    os << "    remarks:";
    for (const char* key : kRemarkKeys) os << " " << key << "=" << remark(r, key);
    os << "\n    " << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  const auto passed = std::count_if(reports.begin(), reports.end(), [](const PrimeReport& r) { return r.pass; });
  os << passed << "/" << reports.size() << " primes pass\n";
  return os.str();
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv" && format != "text") {
    throw UsageError("unknown format '" + format + "' (json, csv, text)");
  }
}

void check_primes(const RunConfig& config) {
  for (std::int64_t p : config.primes) {
    if (p > kMaxDefaultPrime && !config.allow_large_primes) {
      throw UsageError("prime " + std::to_string(p) + " is above " + std::to_string(kMaxDefaultPrime) +
                       "; pass --allow-large-primes to run it anyway");
    }
  }
}

void emit(const RunConfig& config, const std::string& payload, std::ostream& out) {
  if (config.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + config.out + "'");
  file << payload;
}

std::string json_payload(const RunConfig& config, const ojson& results) {
  ojson doc{{"schema_version", kSchemaVersion}, {"config_echo", config_echo(config)}, {"results", results}};
  return doc.dump(2) + "\n";
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  VerifyConfig vc;
  vc.window = config.window;
  vc.K = config.K;
  std::vector<PrimeReport> reports;
  for (std::int64_t p : config.primes) reports.push_back(verify_prime(p, vc));
  emit(config, render_report(reports, config.format, config), out);
  const bool all = std::all_of(reports.begin(), reports.end(), [](const PrimeReport& r) { return r.pass; });
  return all ? kPass : kMismatch;
}

QSeries named_series(const RunConfig& config) {
  const std::string& n = config.name;
  const std::int64_t prec = config.prec;
  if (n == "j1") return j1_series(prec);
  if (n == "tn") return tn_series(config.level, prec);
  if (n == "jn") return hauptmodul_jn(config.level, prec);
  if (n == "sn") return sn_series(config.level, prec);
  if (n == "jnplus") return jn_plus_series(config.level, prec);
  if (n == "pj1up") return p_j1_up(require_prime(config.level), prec);
  if (n == "eta") return eta_unit_series(prec);
  if (n == "e4") return e4_series(prec);
  if (n == "delta") return delta_series(prec);
  throw UsageError("unknown series '" + n + "' (j1, tn, jn, sn, jnplus, pj1up, eta, e4, delta)");
}

int cmd_series(const RunConfig& config, std::ostream& out) {
  if (config.prec < 1 || config.prec > 20000) throw UsageError("--prec must lie in [1, 20000]");
  const QSeries f = named_series(config);
  std::ostringstream os;
  if (config.format == "json") {
    std::vector<std::string> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
    ojson doc{{"schema_version", kSchemaVersion},
              {"series", config.name},
              {"level", config.level},
              {"lo", f.lo()},
              {"prec", f.prec()},
              {"coeffs", coeffs}};
    os << doc.dump(2) << "\n";
  } else if (config.format == "csv") {
    os << "exponent,coefficient\n";
    for (std::int64_t n = f.lo(); n < f.prec(); ++n) os << n << "," << f.coeff(n).get_str() << "\n";
  } else {
    os << f.to_string(static_cast<std::size_t>(std::max<std::int64_t>(f.prec() - f.lo(), 1))) << "\n";
  }
  emit(config, os.str(), out);
  return kPass;
}

int cmd_ss(const RunConfig& config, std::ostream& out) {
  ojson results = ojson::array();
  std::ostringstream text, csv;
  csv << "p,s1,s2_pairs,m_p,mass,table2_row\n";
  bool ok = true;
  for (std::int64_t p : config.primes) {
    const SupersingularData data = ss_j_set(p);
    std::optional<SsJ1Row> row;
    if (is_genus0_plus(p)) row = ss_j1_table(p);
    std::string mass = "";
    if (p > 3) {
      const mpq_class m = eichler_mass(data);
      mass = m.get_str();
      mpq_class expected(p - 1, 24);
      expected.canonicalize();
      ok = ok && m == expected;
    }
    results.push_back(ojson{{"p", p},
                            {"s1", data.s1},
                            {"s2_pairs", s2_json(data.s2)},
                            {"m_p", data.m_p},
                            {"mass", mass},
                            {"table2_row", table2_json(row)}});
    text << "p = " << p << ": s1 = {" << joined(data.s1, ", ") << "}";
    if (!data.s2.empty()) text << ", s2 = " << s2_text(data.s2);
    text << ", m_p = " << data.m_p;
    if (!mass.empty()) text << ", mass = " << mass;
    if (row) text << "\n    J_1 values (-744 | 984 | other): " << table2_text(row);
    text << "\n";
    csv << p << "," << csv_cell(joined(data.s1, ";")) << "," << csv_cell(s2_text(data.s2)) << "," << data.m_p
        << "," << mass << "," << csv_cell(table2_text(row)) << "\n";
  }
  if (config.format == "json") {
    emit(config, json_payload(config, results), out);
  } else {
    emit(config, config.format == "csv" ? csv.str() : text.str(), out);
  }
  return ok ? kPass : kMismatch;
}

int cmd_deligne(const RunConfig& config, std::ostream& out) {
  ojson results = ojson::array();
  std::ostringstream text, csv;
  csv << "p,K,alpha,class,n,A_mod_pK,valuation,bound\n";
  bool ok = true;
  for (std::int64_t p : config.primes) {
    if (p <= 3 || !is_genus0_plus(p)) {
      throw UsageError("deligne needs a prime p > 3 dividing the monster's order, got " + std::to_string(p));
    }
    const DeligneFit fit = fit_partial_fractions(p, config.K);
    const auto a1 = check_a1_valuations(fit);
    const Valuation r2 = congruence_mod_p2_residual(fit);
    const Valuation r3 = congruence_mod_p3_residual(fit);
    const auto at_least = [](const Valuation& v, std::int64_t k) { return v.is_infinite() || v.value() >= k; };
    bool this_ok = fit.bounds_ok() && at_least(r2, 2) && at_least(r3, 3);
    for (const auto& c : a1) this_ok = this_ok && c.ok;
    ok = ok && this_ok;

    ojson coeffs = ojson::array();
    text << "p = " << p << ", K = " << fit.K << ", nmax = " << fit.nmax << ", residual valuation "
         << fit.residual_valuation.to_string() << ", mod p^2 residual " << r2.to_string()
         << ", mod p^3 residual " << r3.to_string() << (this_ok ? "" : "  FAILED") << "\n";
    for (const auto& [alpha, cls] : fit.lifts) {
      text << "    alpha = " << alpha << " (" << to_string(cls) << "):";
      for (std::int64_t n = 1; n <= fit.nmax; ++n) {
        const std::int64_t v = fit.a_valuation(alpha, n);
        const std::int64_t bound = a_n_valuation_bound(cls, p, n);
        const std::string value = fit.A.at({alpha, n}).get_str();
        coeffs.push_back(ojson{{"alpha", alpha}, {"class", to_string(cls)}, {"n", n}, {"A", value},
                               {"valuation", v}, {"bound", bound}});
        text << " v(A_" << n << ")=" << v;
        csv << p << "," << fit.K << "," << alpha << "," << to_string(cls) << "," << n << "," << value << "," << v
            << "," << bound << "\n";
      }
      text << "\n";
    }
    results.push_back(ojson{{"p", p},
                            {"K", fit.K},
                            {"nmax", fit.nmax},
                            {"residual_valuation", valuation_json(fit.residual_valuation)},
                            {"a1_valuations", a1_json(a1)},
                            {"mod_p2_residual", valuation_json(r2)},
                            {"mod_p3_residual", valuation_json(r3)},
                            {"coefficients", coeffs},
                            {"pass", this_ok}});
  }
  if (config.format == "json") {
    emit(config, json_payload(config, results), out);
  } else {
    emit(config, config.format == "csv" ? csv.str() : text.str(), out);
  }
  return ok ? kPass : kMismatch;
}

int cmd_probe(const RunConfig& config, std::ostream& out) {
  ojson results = ojson::array();
  std::ostringstream text, csv;
  csv << "p,a,b,c,m_p\n";
  for (std::int64_t p : config.primes) {
    if (p > 31) throw UsageError("probe-faber is limited to p <= 31");
    const FaberProbe probe = remark12_faber_probe(p, config.window);
    results.push_back(ojson{{"p", p},
                            {"a", valuation_json(probe.a)},
                            {"b", valuation_json(probe.b)},
                            {"c", valuation_json(probe.c)},
                            {"m_p", probe.m_p}});
    text << "p = " << p << ": (a) " << probe.a.to_string() << "  (b) " << probe.b.to_string() << "  (c) "
         << probe.c.to_string() << "  m_p = " << probe.m_p << "\n";
    csv << p << "," << probe.a.to_string() << "," << probe.b.to_string() << "," << probe.c.to_string() << ","
        << probe.m_p << "\n";
  }
  if (config.format == "json") {
    emit(config, json_payload(config, results), out);
  } else {
    emit(config, config.format == "csv" ? csv.str() : text.str(), out);
  }
  return kPass;
}

}  // namespace

std::vector<std::int64_t> parse_prime_spec(const std::string& spec) {
  std::vector<std::int64_t> primes;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const std::int64_t lo = parse_int(spec.substr(0, dots));
    const std::int64_t hi = parse_int(spec.substr(dots + 2));
    if (lo > hi) throw UsageError("empty prime range '" + spec + "'");
    if (hi - lo > 100000) throw UsageError("prime range too wide: '" + spec + "'");
    return primes_in(lo, hi);
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) primes.push_back(require_prime(parse_int(item)));
  if (primes.empty()) throw UsageError("no primes given");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::string render_report(const std::vector<PrimeReport>& reports, const std::string& format,
                          const RunConfig& config) {
  check_format(format);
  if (format == "json") {
    ojson results = ojson::array();
    for (const auto& r : reports) results.push_back(report_json(r));
    return json_payload(config, results);
  }
  if (format == "csv") return render_csv(reports);
  return render_text(reports);
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string primes = "2..71";
  std::string prime;

  CLI::App app{"Exact q-series checks of the monster's prime exponents"};
  app.require_subcommand(1, 1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "json, csv or text");
    sub->add_option("--out", config.out, "write the report here instead of stdout");
    sub->add_flag("--allow-large-primes", config.allow_large_primes, "lift the p <= 271 guard");
  };
  auto add_primes = [&](CLI::App* sub) {
    sub->add_option("--primes", primes, "prime list (5,7,11), range (2..71) or single prime");
    sub->add_option("--prime", prime, "a single prime");
  };
  CLI::App* verify = app.add_subcommand("verify", "both sides of the exponent formulas, per prime");
  add_primes(verify);
  verify->add_option("--window", config.window, "valuation window (>= 20)");
  verify->add_option("--K", config.K, "p-adic precision of the partial-fraction fit (>= 2)");
  add_common(verify);

  CLI::App* series = app.add_subcommand("series", "print a q-expansion");
  series->add_option("--name", config.name, "j1, tn, jn, sn, jnplus, pj1up, eta, e4, delta");
  series->add_option("--level", config.level, "level N (prime p for pj1up)");
  series->add_option("--prec", config.prec, "coefficients below q^prec");
  add_common(series);

  CLI::App* ss = app.add_subcommand("ss", "supersingular j-invariants and J_1-values");
  add_primes(ss);
  add_common(ss);

  CLI::App* deligne = app.add_subcommand("deligne", "partial-fraction fit of p J_1|U_p");
  add_primes(deligne);
  deligne->add_option("--K", config.K, "p-adic precision (>= 2)");
  add_common(deligne);

  CLI::App* probe = app.add_subcommand("probe-faber", "valuations of the Faber-polynomial readings");
  add_primes(probe);
  probe->add_option("--window", config.window, "valuation window (>= 20)");
  add_common(probe);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  try {
    check_format(config.format);
    if (config.window < 20) throw UsageError("--window must be >= 20");
    if (config.K < 2) throw UsageError("--K must be >= 2");
    if (config.command != "series") {
      config.primes = prime.empty() ? parse_prime_spec(primes) : std::vector<std::int64_t>{require_prime(parse_int(prime))};
      check_primes(config);
    }
    if (config.command == "verify") return cmd_verify(config, out);
    if (config.command == "series") return cmd_series(config, out);
    if (config.command == "ss") return cmd_ss(config, out);
    if (config.command == "deligne") return cmd_deligne(config, out);
    return cmd_probe(config, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DeligneFitError& e) {
    err << "fit failed: " << e.what() << " (best residual valuation " << e.best_residual_valuation() << ")\n";
    return kMismatch;
  } catch (const PrecisionError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace moonexp
