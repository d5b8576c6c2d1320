#include "schur_ohno/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "schur_ohno/error.hpp"
#include "schur_ohno/mzv.hpp"
#include "schur_ohno/ohno.hpp"
#include "schur_ohno/text.hpp"

namespace schur_ohno::cli {

namespace {

// --lambda/--mu/--k, or --index for an EZ index (read as a column).
struct IndexArgs {
  std::string lambda;
  std::string mu;
  std::string rows;
  std::string index;

  void attach(CLI::App& app, const std::string& prefix = "") {
    const std::string what = prefix.empty() ? "" : "dual ";
    app.add_option("--" + prefix + "lambda", lambda, "outer partition of the " + what + "shape, e.g. 2,1");
    app.add_option("--" + prefix + "mu", mu, "inner partition (default empty)");
    app.add_option("--" + prefix + "k", rows, "exponent rows, e.g. \"1 2 / 2\"");
    const std::string index_flag = prefix.empty() ? "--index" : "--dual-index,--dual";
    app.add_option(index_flag, index, "EZ " + what + "index as a column, e.g. 1,2");
  }

  bool given() const { return !index.empty() || !lambda.empty() || !rows.empty(); }

  TableauIndex tableau() const {
    if (!index.empty()) {
      if (!lambda.empty() || !rows.empty()) throw InvalidArgument("give either an EZ index or a shape, not both");
      return TableauIndex::column(parse_ez(index));
    }
    if (lambda.empty() || rows.empty()) throw InvalidArgument("an index needs --lambda and --k (or --index)");
    return parse_index_spec(lambda, mu, rows);
  }
};

struct Common {
  int max_entry = 2000;
  unsigned threads = 0;
  std::string out_path;

  void attach(CLI::App& app) {
    app.add_option("--max-entry", max_entry, "largest entry summed")
        ->envname("SCHUR_OHNO_MAX_ENTRY")
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads (0: all cores)")->capture_default_str();
    app.add_option("--out", out_path, "write output to this file");
  }

  TruncationConfig truncation() const { return {max_entry, true, threads}; }
};

void print_result(std::ostream& os, const EvalResult& r) {
  os << "value      " << format_complex(r.value) << '\n'
     << "err_est    " << format_number(r.err_est) << '\n'
     << "half_diff  " << format_number(r.half_diff) << '\n'
     << "max_entry  " << r.max_entry << '\n';
}

std::string print_tableau(const TableauIndex& k) {
  std::string s = "--lambda " + format_partition(k.shape().outer());
  if (!k.shape().inner().empty()) s += " --mu " + format_partition(k.shape().inner());
  return s + " --k \"" + format_rows(k) + "\"";
}

std::vector<std::complex<double>> sweep_points(double from, double to, double step, double im) {
  if (!(step > 0.0)) throw InvalidArgument("sweep step must be positive");
  if (!(from > -1.0)) throw InvalidArgument("sweep must start at Re(s) > -1");
  std::vector<std::complex<double>> pts;
  for (long i = 0;; ++i) {
    const double re = from + static_cast<double>(i) * step;
    if (re > to + 1e-9 * step) break;
    pts.emplace_back(re, im);
  }
  return pts;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur multiple zeta values, O-sums and Ohno functions"};
  app.require_subcommand(1);

  Common common;
  IndexArgs idx;
  IndexArgs dual_idx;
  int ell = 0;
  std::string s_text = "0";
  std::string method = "series";
  double tol = 1e-10;
  std::vector<std::string> point_texts;
  std::optional<double> re_from;
  double re_to = 0.0;
  double re_step = 0.1;
  double im = 0.0;

  auto* zeta = app.add_subcommand("zeta", "truncated Schur (or EZ) multiple zeta value");
  auto* osum = app.add_subcommand("osum", "truncated O-sum O(k : ell)");
  auto* dual = app.add_subcommand("dual", "dual index or dual tableau");
  auto* ohno = app.add_subcommand("ohno", "Ohno function I_k(s)");
  auto* verify = app.add_subcommand("verify-duality", "CSV comparison of I_k(s) and I_kdual(s)");
  auto* sweep = app.add_subcommand("sweep", "CSV table of I_k(s) along a horizontal line");

  for (auto* sub : {zeta, osum, dual, ohno, verify, sweep}) idx.attach(*sub);
  for (auto* sub : {zeta, osum, ohno, verify, sweep}) common.attach(*sub);
  dual->add_option("--out", common.out_path, "write output to this file");
  osum->add_option("--ell", ell, "total bump")->required();
  ohno->add_option("--s", s_text, "complex point: a, a+bi or a-bi")->capture_default_str();
  ohno->add_option("--method", method, "series, quadrature or direct")
      ->check(CLI::IsMember({"series", "quadrature", "direct"}))
      ->capture_default_str();
  ohno->add_option("--tol", tol, "quadrature absolute tolerance")
      ->envname("SCHUR_OHNO_QTOL")
      ->capture_default_str();
  dual_idx.attach(*verify, "dual-");
  verify->add_option("--point", point_texts, "evaluation point (repeatable)");
  for (auto* sub : {verify, sweep}) {
    sub->add_option("--re-from", re_from, "first real part");
    sub->add_option("--re-to", re_to, "last real part");
    sub->add_option("--re-step", re_step, "real step");
    sub->add_option("--im", im, "fixed imaginary part");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!common.out_path.empty()) {
    file.open(common.out_path);
    if (!file) {
      err << "error: cannot open " << common.out_path << '\n';
      return kUsage;
    }
    os = &file;
  }

  try {
    if (zeta->parsed()) {
      if (!idx.index.empty()) {
        print_result(*os, zeta_ez(parse_ez(idx.index), common.truncation()));
      } else {
        print_result(*os, zeta_schur(idx.tableau(), common.truncation()));
      }
    } else if (osum->parsed()) {
      if (ell < 0) throw InvalidArgument("--ell must be nonnegative");
      print_result(*os, osum_schur(idx.tableau(), ell, common.truncation()));
    } else if (dual->parsed()) {
      if (!idx.index.empty()) {
        *os << format_ez(schur_ohno::dual(parse_ez(idx.index))) << '\n';
      } else {
        *os << print_tableau(dual_tableau(idx.tableau())) << '\n';
      }
    } else if (ohno->parsed()) {
      const OhnoConfig cfg{common.max_entry, tol, true, common.threads};
      const auto s = parse_complex(s_text);
      if (method == "direct") {
        const auto k = idx.tableau();
        if (!k.shape().is_single_column()) throw InvalidArgument("--method direct needs a single column");
        print_result(*os, ohno_ez_direct(column(k, k.shape().cells().front().col), s, cfg));
      } else {
        print_result(*os, ohno_schur(idx.tableau(), s, cfg,
                                     method == "quadrature" ? OhnoMethod::quadrature : OhnoMethod::series));
      }
    } else if (verify->parsed()) {
      const auto k = idx.tableau();
      const auto kd = dual_idx.given() ? dual_idx.tableau() : dual_tableau(k);
      std::vector<std::complex<double>> pts;
      for (const auto& p : point_texts) pts.push_back(parse_complex(p));
      if (re_from) {
        const auto line = sweep_points(*re_from, re_to, re_step, im);
        pts.insert(pts.end(), line.begin(), line.end());
      }
      if (pts.empty()) throw InvalidArgument("give --point or a sweep (--re-from/--re-to/--re-step)");
      const auto report = verify_duality(k, kd, pts, {common.max_entry, tol, true, common.threads});
      *os << "re_s,im_s,re_lhs,im_lhs,re_rhs,im_rhs,abs_diff,err_lhs,err_rhs,pass\n";
      for (const auto& p : report.points) {
        *os << format_number(p.s.real()) << ',' << format_number(p.s.imag()) << ','
            << format_number(p.lhs.value.real()) << ',' << format_number(p.lhs.value.imag()) << ','
            << format_number(p.rhs.value.real()) << ',' << format_number(p.rhs.value.imag()) << ','
            << format_number(p.abs_diff) << ',' << format_number(p.lhs.err_est) << ','
            << format_number(p.rhs.err_est) << ',' << (p.pass ? 1 : 0) << '\n';
      }
      return report.all_pass() ? kOk : kCheckFailed;
    } else if (sweep->parsed()) {
      const auto k = idx.tableau();
      const auto pts = sweep_points(re_from.value_or(0.0), re_to, re_step, im);
      const OhnoConfig cfg{common.max_entry, tol, true, common.threads};
      *os << "re_s,im_s,re_I,im_I,err_est,max_entry\n";
      for (const auto s : pts) {
        const auto r = ohno_schur(k, s, cfg);
        *os << format_number(s.real()) << ',' << format_number(s.imag()) << ','
            << format_number(r.value.real()) << ',' << format_number(r.value.imag()) << ','
            << format_number(r.err_est) << ',' << r.max_entry << '\n';
      }
    }
  } catch (const InadmissibleIndex& e) {
    err << "error: " << e.what() << '\n';
    return kInadmissible;
  } catch (const UnsupportedShape& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupportedDual;
  } catch (const ConvergenceFailure& e) {
    err << "error: " << e.what() << '\n';
    return kConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace schur_ohno::cli
