#include "dyndeg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <regex>
#include <sstream>

#include "dyndeg/cremona.hpp"
#include "dyndeg/degree_dynamics.hpp"
#include "dyndeg/diophantine.hpp"
#include "dyndeg/errors.hpp"
#include "dyndeg/lambda_solver.hpp"

namespace dyndeg::cli {

namespace {

using json = nlohmann::ordered_json;

std::string str(const Int& v) { return v.get_str(); }
std::string str(unsigned long v) { return std::to_string(v); }

Int parse_coefficient(const std::string& sign, const std::string& digits) {
  Int v = digits.empty() ? Int(1) : Int(digits);
  return sign == "-" ? Int(-v) : v;
}

struct Options {
  std::string zeta = "1+2i";
  long precision_bits = 128;
  int digits = 12;
  std::uint64_t seed = 0;
  unsigned max_iter = 3;
  std::string format = "text";
  std::string out;
  std::size_t count = 200;
  unsigned long n = 0;
  std::string window = "5";
  std::size_t depth = 20;
  std::string fault;
  unsigned line_trials = 0;
};

struct Context {
  RunConfig cfg;
  const Options& opt;
  std::ostream& out;
};

const char* regime_of(const Int& l2, const RealInterval& lambda) {
  RealInterval t = RealInterval::from_int(l2, lambda.prec());
  if (t.certainly_less(lambda)) return "small topological degree";
  if (lambda.certainly_less(t)) return "large topological degree";
  return "undecided";
}

std::string interval_text(const RealInterval& x, int digits) {
  return "[" + x.lo_string(digits) + ", " + x.hi_string(digits) + "]";
}

// degrees ------------------------------------------------------------------

int cmd_degrees(const Context& c) {
  const std::size_t count = c.opt.count;
  MonomialDegrees md = d_sequence(c.cfg.zeta, count);
  DegreeSequence e = e_sequence(md.d, count);
  switch (c.cfg.format) {
    case Format::Text:
      c.out << "j d_j gamma(j) e_j\n";
      for (std::size_t j = 1; j <= count; ++j) {
        c.out << j << ' ' << md.d.at(j) << ' ' << to_string(md.gamma[j - 1]) << ' ' << e.at(j) << '\n';
      }
      break;
    case Format::Csv:
      c.out << "j,d,gamma,e\n";
      for (std::size_t j = 1; j <= count; ++j) {
        c.out << j << ',' << md.d.at(j) << ',' << to_string(md.gamma[j - 1]) << ',' << e.at(j) << '\n';
      }
      break;
    case Format::Json: {
      json rows = json::array();
      for (std::size_t j = 1; j <= count; ++j) {
        rows.push_back({{"j", str(j)},
                        {"d", str(md.d.at(j))},
                        {"gamma", std::string(to_string(md.gamma[j - 1]))},
                        {"e", str(e.at(j))}});
      }
      json doc = {{"zeta", to_string(c.cfg.zeta)}, {"count", str(count)}, {"rows", rows}};
      c.out << doc.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

// lambda -------------------------------------------------------------------

LambdaResult solve(const Context& c) {
  LambdaSettings s;
  s.initial_precision = c.cfg.precision_bits;
  return solve_lambda(c.cfg.zeta, Dyadic::from_decimal_digits(c.cfg.target_digits), s);
}

int cmd_lambda(const Context& c) {
  LambdaResult r = solve(c);
  const int shown = c.cfg.target_digits + 5;
  const std::string lo = r.lambda.lo_string(shown);
  const std::string hi = r.lambda.hi_string(shown);
  const std::string width = format_mpfr(r.width.get(), 6, MPFR_RNDU);
  switch (c.cfg.format) {
    case Format::Text: {
      Int l2 = lambda2(c.cfg.zeta);
      c.out << "zeta " << to_string(c.cfg.zeta) << '\n'
            << "lambda [" << lo << ", " << hi << "]\n"
            << "width " << width << '\n'
            << "N_used " << r.n_used << '\n'
            << "precision_bits " << r.precision_bits << '\n'
            << "lambda2 " << l2 << '\n'
            << "regime " << regime_of(l2, r.lambda) << '\n';
      break;
    }
    case Format::Csv:
      c.out << "zeta,lambda_lo,lambda_hi,width,N_used,precision_bits\n"
            << to_string(c.cfg.zeta) << ',' << lo << ',' << hi << ',' << width << ',' << r.n_used
            << ',' << r.precision_bits << '\n';
      break;
    case Format::Json: {
      json doc = {{"zeta", to_string(c.cfg.zeta)},
                  {"lambda_lo", lo},
                  {"lambda_hi", hi},
                  {"width", width},
                  {"N_used", str(r.n_used)},
                  {"precision_bits", std::to_string(r.precision_bits)}};
      c.out << doc.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

// oracle -------------------------------------------------------------------

struct OracleRow {
  unsigned n;
  Int recursion;
  unsigned long oracle;
  std::optional<unsigned long> line;
  bool match;
};

int cmd_oracle(const Context& c) {
  const unsigned max_n = c.cfg.max_iterate;
  std::vector<OracleRow> rows;
  bool all_match = true;
  std::optional<std::string> failure;
  if (max_n > 0) {
    MonomialDegrees md = d_sequence(c.cfg.zeta, max_n);
    DegreeSequence e = e_sequence(md.d, max_n);
    const bool skip = c.opt.fault == "skip-reduce";
    PlaneRationalMap f = compose(g_map(), monomial_map(IntMatrix2x2::of(c.cfg.zeta)));
    PlaneRationalMap acc = f;
    for (unsigned n = 1; n <= max_n; ++n) {
      if (n > 1) acc = skip ? compose_raw(f, acc) : compose(f, acc);
      OracleRow row{n, e.at(n), acc.degree(), std::nullopt, false};
      if (c.opt.line_trials > 0) {
        row.line = random_line_degree_check(acc.f[0], acc.f[1], acc.f[2], c.opt.line_trials,
                                            c.cfg.seed);
      }
      row.match = Int(row.oracle) == row.recursion && (!row.line || *row.line == row.oracle);
      all_match = all_match && row.match;
      rows.push_back(std::move(row));
      if (!all_match) break;
    }
  }
  switch (c.cfg.format) {
    case Format::Text:
      c.out << "n e_n oracle_degree" << (c.opt.line_trials ? " line_degree" : "") << " match\n";
      for (const auto& r : rows) {
        c.out << r.n << ' ' << r.recursion << ' ' << r.oracle;
        if (r.line) c.out << ' ' << *r.line;
        c.out << ' ' << (r.match ? "yes" : "no") << '\n';
      }
      break;
    case Format::Csv:
      c.out << "n,e_n,oracle_degree,line_degree,match\n";
      for (const auto& r : rows) {
        c.out << r.n << ',' << r.recursion << ',' << r.oracle << ','
              << (r.line ? std::to_string(*r.line) : "") << ',' << (r.match ? "true" : "false") << '\n';
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json row = {{"n", std::to_string(r.n)}, {"e_n", str(r.recursion)}, {"oracle_degree", str(r.oracle)}};
        if (r.line) row["line_degree"] = str(*r.line);
        row["match"] = r.match;
        arr.push_back(std::move(row));
      }
      json doc = {{"zeta", to_string(c.cfg.zeta)}, {"max_iter", std::to_string(max_n)},
                  {"rows", arr}, {"all_match", all_match}};
      c.out << doc.dump(2) << '\n';
      break;
    }
  }
  return all_match ? kOk : kMismatch;
}

// cf -----------------------------------------------------------------------

int cmd_cf(const Context& c) {
  ThetaContext ctx(c.cfg.zeta, c.cfg.precision_bits);
  ContinuedFraction cf = cf_expand(ctx, c.opt.depth);
  std::optional<ApproximationDiagnostics> diag;
  if (c.opt.depth >= 2) diag = badly_approximable_diagnostics(cf);
  const int dg = 12;
  std::ostringstream list;
  list << '[' << cf.coefficients[0];
  for (std::size_t i = 1; i < cf.coefficients.size(); ++i) list << (i == 1 ? ";" : ",") << cf.coefficients[i];
  list << ']';
  switch (c.cfg.format) {
    case Format::Text:
      c.out << "zeta " << to_string(c.cfg.zeta) << '\n'
            << "theta " << interval_text(cf.context.theta(), 30) << '\n'
            << "precision_bits " << cf.precision_bits() << '\n'
            << "cf " << list.str() << '\n'
            << "i a_i m_i n_i n_i|n_i*theta-m_i|\n";
      for (std::size_t i = 0; i < cf.convergents.size(); ++i) {
        c.out << i << ' ' << cf.coefficients[i] << ' ' << cf.convergents[i].m << ' ' << cf.convergents[i].n;
        if (diag) c.out << ' ' << interval_text(diag->scaled_errors[i], dg);
        c.out << '\n';
      }
      if (diag) {
        c.out << "max_coefficient " << diag->max_coefficient << '\n'
              << "kappa " << interval_text(diag->kappa, dg) << '\n'
              << "delta " << interval_text(diag->delta, dg) << '\n'
              << "max_ratio " << diag->max_ratio.get_str() << '\n'
              << "bounds_certified " << (diag->bounds_certified ? "yes" : "no") << '\n'
              << "alternation_certified " << (diag->alternation_certified ? "yes" : "no") << '\n';
      }
      break;
    case Format::Csv:
      c.out << "i,a,m,n,scaled_error_lo,scaled_error_hi\n";
      for (std::size_t i = 0; i < cf.convergents.size(); ++i) {
        c.out << i << ',' << cf.coefficients[i] << ',' << cf.convergents[i].m << ',' << cf.convergents[i].n << ',';
        if (diag) c.out << diag->scaled_errors[i].lo_string(dg) << ',' << diag->scaled_errors[i].hi_string(dg);
        else c.out << ',';
        c.out << '\n';
      }
      break;
    case Format::Json: {
      json coeffs = json::array();
      for (const Int& a : cf.coefficients) coeffs.push_back(str(a));
      json convs = json::array();
      for (std::size_t i = 0; i < cf.convergents.size(); ++i) {
        json row = {{"m", str(cf.convergents[i].m)}, {"n", str(cf.convergents[i].n)}};
        if (diag) {
          row["scaled_error_lo"] = diag->scaled_errors[i].lo_string(dg);
          row["scaled_error_hi"] = diag->scaled_errors[i].hi_string(dg);
        }
        convs.push_back(std::move(row));
      }
      json doc = {{"zeta", to_string(c.cfg.zeta)},
                  {"depth", str(c.opt.depth)},
                  {"precision_bits", std::to_string(cf.precision_bits())},
                  {"theta_lo", cf.context.theta().lo_string(30)},
                  {"theta_hi", cf.context.theta().hi_string(30)},
                  {"coefficients", coeffs},
                  {"convergents", convs}};
      if (diag) {
        doc["diagnostics"] = {{"max_coefficient", str(diag->max_coefficient)},
                              {"kappa_lo", diag->kappa.lo_string(dg)},
                              {"kappa_hi", diag->kappa.hi_string(dg)},
                              {"delta_lo", diag->delta.lo_string(dg)},
                              {"delta_hi", diag->delta.hi_string(dg)},
                              {"max_ratio", diag->max_ratio.get_str()},
                              {"bounds_certified", diag->bounds_certified},
                              {"alternation_certified", diag->alternation_certified}};
      } else {
        doc["diagnostics"] = nullptr;
      }
      c.out << doc.dump(2) << '\n';
      break;
    }
  }
  if (diag && !(diag->bounds_certified && diag->alternation_certified)) return kMismatch;
  return kOk;
}

// irregular ----------------------------------------------------------------

std::string opt_str(const std::optional<unsigned long>& v) { return v ? std::to_string(*v) : ""; }

json opt_json(const std::optional<unsigned long>& v) {
  return v ? json(std::to_string(*v)) : json(nullptr);
}

int cmd_irregular(const Context& c) {
  if (c.opt.n == 0) throw std::invalid_argument("irregular: --n must be positive");
  mpq_class mult;
  if (mult.set_str(c.opt.window, 10) != 0) throw std::invalid_argument("bad --window: " + c.opt.window);
  mult.canonicalize();
  ThetaContext ctx(c.cfg.zeta, c.cfg.precision_bits);
  RegularWindowResult rw = regular_window_check(ctx, c.opt.n, mult);
  if (rw.window_end <= c.opt.n) throw std::invalid_argument("irregular: window must extend past n");
  IrregularityReport rep = irregular_indices(ctx, c.opt.n, rw.window_end);
  switch (c.cfg.format) {
    case Format::Text: {
      c.out << "zeta " << to_string(c.cfg.zeta) << '\n'
            << "n " << rep.n << '\n'
            << "window (" << rep.n << ", " << rep.window_end << "]\n"
            << "irregular_count " << rep.irregular.size() << '\n'
            << "irregular";
      for (unsigned long j : rep.irregular) c.out << ' ' << j;
      c.out << '\n'
            << "min_offset " << opt_str(rep.min_offset) << '\n'
            << "min_pairwise_gap " << opt_str(rep.min_pairwise_gap) << '\n'
            << "min_shifted_gap " << opt_str(rep.min_shifted_gap) << '\n'
            << "epsilon " << rw.epsilon.get_str() << '\n'
            << "nearest_m " << rw.nearest_m << '\n'
            << "approximation_hypothesis " << (rw.hypothesis ? "yes" : "no") << '\n'
            << "window_regular " << (rw.passed() ? "yes" : "no") << '\n'
            << "i j beta\n";
      for (const BetaEntry& b : rep.beta) c.out << b.i << ' ' << b.j << ' ' << to_string(b.value) << '\n';
      break;
    }
    case Format::Csv:
      c.out << "n,i,j,beta_re,beta_im\n";
      for (const BetaEntry& b : rep.beta) {
        c.out << rep.n << ',' << b.i << ',' << b.j << ',' << b.value.re << ',' << b.value.im << '\n';
      }
      break;
    case Format::Json: {
      json irr = json::array();
      for (unsigned long j : rep.irregular) irr.push_back(std::to_string(j));
      json beta = json::array();
      for (const BetaEntry& b : rep.beta) {
        beta.push_back({{"i", str(b.i)}, {"j", str(b.j)}, {"re", str(b.value.re)}, {"im", str(b.value.im)}});
      }
      json doc = {{"zeta", to_string(c.cfg.zeta)},
                  {"n", str(rep.n)},
                  {"window", mult.get_str()},
                  {"window_end", str(rep.window_end)},
                  {"irregular", irr},
                  {"min_offset", opt_json(rep.min_offset)},
                  {"min_pairwise_gap", opt_json(rep.min_pairwise_gap)},
                  {"min_shifted_gap", opt_json(rep.min_shifted_gap)},
                  {"epsilon", rw.epsilon.get_str()},
                  {"nearest_m", str(rw.nearest_m)},
                  {"approximation_hypothesis", rw.hypothesis},
                  {"window_regular", rw.passed()},
                  {"beta", beta}};
      c.out << doc.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

// report -------------------------------------------------------------------

int cmd_report(const Context& c) {
  const GaussianInt& z = c.cfg.zeta;
  LambdaResult r = solve(c);
  Int l2 = lambda2(z);
  const std::size_t order = std::max<std::size_t>(c.opt.count, 1);
  MonomialDegrees md = d_sequence(z, order);
  DegreeSequence e = e_sequence(md.d, order);
  long series = series_identity_check(md.d, e, order);
  RealInterval star = star_enclosure(z, r.lambda, 64);
  ThetaContext ctx(z, c.cfg.precision_bits);
  ContinuedFraction cf = cf_expand(ctx, 20);
  ApproximationDiagnostics diag = badly_approximable_diagnostics(cf);
  std::vector<unsigned long> ns = c.opt.n ? std::vector<unsigned long>{c.opt.n}
                                          : std::vector<unsigned long>{50, 100, 200};
  std::vector<LemmaCheck> lemmas;
  for (unsigned long n : ns) lemmas.push_back(lemma_check(z, n));
  const int shown = c.cfg.target_digits + 5;
  const int dg = 12;
  bool ok = series == static_cast<long>(order) && star.contains_decimal("1") &&
            diag.bounds_certified && diag.alternation_certified;
  for (const auto& l : lemmas) ok = ok && l.certified();

  switch (c.cfg.format) {
    case Format::Text:
      c.out << "zeta " << to_string(z) << '\n'
            << "lambda " << interval_text(r.lambda, shown) << '\n'
            << "lambda2 " << l2 << '\n'
            << "regime " << regime_of(l2, r.lambda) << '\n'
            << "series_identity_order " << series << '\n'
            << "star_sum " << interval_text(star, dg) << '\n'
            << "theta " << interval_text(cf.context.theta(), 30) << '\n'
            << "max_coefficient " << diag.max_coefficient << '\n'
            << "kappa " << interval_text(diag.kappa, dg) << '\n';
      for (const auto& l : lemmas) {
        c.out << "lemma n=" << l.n << " digits=" << l.lambda_digits
              << " re_phi_n " << interval_text(l.re_phi_n, dg)
              << " psi_n " << interval_text(l.psi.value, dg)
              << " certified " << (l.certified() ? "yes" : "no") << '\n';
      }
      break;
    case Format::Csv:
      c.out << "key,value\n"
            << "zeta," << to_string(z) << '\n'
            << "lambda_lo," << r.lambda.lo_string(shown) << '\n'
            << "lambda_hi," << r.lambda.hi_string(shown) << '\n'
            << "lambda2," << l2 << '\n'
            << "regime," << regime_of(l2, r.lambda) << '\n'
            << "series_identity_order," << series << '\n'
            << "kappa_lo," << diag.kappa.lo_string(dg) << '\n';
      for (const auto& l : lemmas) c.out << "lemma_" << l.n << ',' << (l.certified() ? "true" : "false") << '\n';
      break;
    case Format::Json: {
      json lem = json::array();
      for (const auto& l : lemmas) {
        lem.push_back({{"n", str(l.n)},
                       {"lambda_digits", std::to_string(l.lambda_digits)},
                       {"re_phi_n_lo", l.re_phi_n.lo_string(dg)},
                       {"re_phi_n_hi", l.re_phi_n.hi_string(dg)},
                       {"psi_n_lo", l.psi.value.lo_string(dg)},
                       {"psi_n_hi", l.psi.value.hi_string(dg)},
                       {"certified", l.certified()}});
      }
      json doc = {{"zeta", to_string(z)},
                  {"lambda_lo", r.lambda.lo_string(shown)},
                  {"lambda_hi", r.lambda.hi_string(shown)},
                  {"lambda2", str(l2)},
                  {"regime", regime_of(l2, r.lambda)},
                  {"series_identity_order", std::to_string(series)},
                  {"star_sum_lo", star.lo_string(dg)},
                  {"star_sum_hi", star.hi_string(dg)},
                  {"max_coefficient", str(diag.max_coefficient)},
                  {"kappa_lo", diag.kappa.lo_string(dg)},
                  {"kappa_hi", diag.kappa.hi_string(dg)},
                  {"lemmas", lem}};
      c.out << doc.dump(2) << '\n';
      break;
    }
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

GaussianInt parse_zeta(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  static const std::regex real_only(R"(([+-]?)(\d+))");
  static const std::regex imag_only(R"(([+-]?)(\d*)i)");
  static const std::regex both(R"(([+-]?)(\d+)([+-])(\d*)i)");
  std::smatch m;
  if (std::regex_match(s, m, real_only)) return {parse_coefficient(m[1], m[2]), Int(0)};
  if (std::regex_match(s, m, imag_only)) return {Int(0), parse_coefficient(m[1], m[2])};
  if (std::regex_match(s, m, both)) return {parse_coefficient(m[1], m[2]), parse_coefficient(m[3], m[4])};
  throw std::invalid_argument("cannot parse Gaussian integer '" + std::string(text) +
                              "' (expected a+bi, a-bi, a or bi)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree growth and dynamical degrees of g o h_zeta"};
  app.name("dyndeg");
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--zeta", opt.zeta, "Gaussian integer zeta, e.g. 1+2i");
  app.add_option("--count", opt.count, "number of sequence terms");
  app.add_option("--digits", opt.digits, "target decimal width of the lambda interval")
      ->check(CLI::Range(1, 20000));
  app.add_option("--precision-bits", opt.precision_bits, "initial working precision")
      ->check(CLI::Range(16L, 1L << 24));
  app.add_option("--max-iter", opt.max_iter, "largest iterate for the oracle");
  app.add_option("--n", opt.n, "period n");
  app.add_option("--window", opt.window, "window multiplier C (integer or p/q)");
  app.add_option("--depth", opt.depth, "continued fraction depth");
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", opt.out, "write output to this file");
  app.add_option("--fault", opt.fault, "test hook")->check(CLI::IsMember({"skip-reduce"}));
  app.add_option("--line-trials", opt.line_trials, "random-line trials per oracle row (0 disables)");

  std::function<int(const Context&)> handler;
  auto sub = [&](const char* name, const char* desc, int (*fn)(const Context&)) {
    app.add_subcommand(name, desc)->callback([&handler, fn] { handler = fn; });
  };
  sub("degrees", "d_j, gamma(j) and e_j", cmd_degrees);
  sub("lambda", "certified dynamical degree", cmd_lambda);
  sub("oracle", "iterate degrees against the recursion", cmd_oracle);
  sub("cf", "continued fraction of theta", cmd_cf);
  sub("irregular", "n-irregular indices and beta table", cmd_irregular);
  sub("report", "summary of all checks", cmd_report);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  RunConfig cfg;
  try {
    cfg.zeta = parse_zeta(opt.zeta);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.precision_bits = opt.precision_bits;
  cfg.target_digits = opt.digits;
  cfg.seed = opt.seed;
  cfg.max_iterate = opt.max_iter;
  cfg.format = opt.format == "json" ? Format::Json : opt.format == "csv" ? Format::Csv : Format::Text;

  std::ofstream file;
  std::ostringstream buffer;
  try {
    require_admissible(cfg.zeta);
    int code = handler(Context{cfg, opt, buffer});
    if (opt.out.empty()) {
      out << buffer.str();
    } else {
      file.open(opt.out, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << opt.out << '\n';
        return kUsage;
      }
      file << buffer.str();
    }
    return code;
  } catch (const AdmissibilityError& e) {
    err << "error: " << e.what() << '\n';
    return kInadmissible;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const ResourceExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace dyndeg::cli
