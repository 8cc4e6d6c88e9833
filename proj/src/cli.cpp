#include "schubert/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "schubert/action.hpp"
#include "schubert/format.hpp"
#include "schubert/parse.hpp"
#include "schubert/verify.hpp"

namespace schubert {
namespace {

enum class Format { text, json, latex };

Format pick_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  return Format::text;
}

// Shared input plumbing: a class is named either by a partition label or by
// an expression in the e/h generators. With --n the class is its image in
// the quotient ring.
SchurExpansion read_class(int r, std::optional<int> n,
                          const std::string& schur_text,
                          const std::string& expr_text) {
  SchurExpansion x(r, std::nullopt);
  if (!schur_text.empty()) {
    x.add(parse_partition(schur_text), Int(1));
  } else {
    x = straighten(parse_ring_element(expr_text, r), r);
  }
  if (n) return project(x, *n);
  return x;
}

constexpr int kDefaultSpan = 6;

// Default z truncation: with a box, far enough to cover every i < n; without
// one, the heaviest weight plus a fixed span.
int default_zmax(const SchurExpansion& x) {
  int w = 0;
  for (const auto& [lam, c] : x.terms()) w = std::max(w, lam.weight());
  if (x.box()) return w + x.rank() * x.cols() + x.rank();
  return w + kDefaultSpan;
}

void print_class(const SchurExpansion& y, Format f, std::ostream& out) {
  switch (f) {
    case Format::text:
      out << "e-polynomial: " << to_text(y.to_ring_element()) << "\n";
      out << "Schur form: " << to_text(y) << "\n";
      break;
    case Format::json: {
      nlohmann::json j;
      j["ring"] = to_json(y.to_ring_element());
      j["schur"] = to_json(y);
      out << j.dump() << "\n";
      break;
    }
    case Format::latex:
      out << to_latex(y.to_ring_element()) << " = " << to_latex(y) << "\n";
      break;
  }
}

void print_series(const LaurentWindow& s, Format f, std::ostream& out) {
  switch (f) {
    case Format::text:
      out << to_text(s) << "\n";
      break;
    case Format::json:
      out << to_json(s).dump() << "\n";
      break;
    case Format::latex:
      out << to_latex(s) << "\n";
      break;
  }
}

// The matrix argument is either inline JSON or a path to a JSON file.
nlohmann::json load_json_argument(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() != '{') {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open matrix file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return nlohmann::json::parse(text);
}

int cmd_verify(const VerifyOptions& opts, const std::vector<std::string>& only,
               std::ostream& out, std::ostream& err) {
  const std::vector<std::string> known = verification_suites();
  for (const auto& name : only) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      err << "error: unknown suite '" << name << "'\n";
      return 2;
    }
  }
  VerifyReport rep = run_verification(opts, only);
  std::size_t width = 5;
  for (const auto& s : rep.suites) width = std::max(width, s.name.size());
  out << std::left << std::setw(static_cast<int>(width)) << "suite"
      << std::right << std::setw(10) << "checks" << std::setw(10)
      << "failures" << "\n";
  for (const auto& s : rep.suites) {
    out << std::left << std::setw(static_cast<int>(width)) << s.name
        << std::right << std::setw(10) << s.checks << std::setw(10)
        << s.failures << "\n";
  }
  out << std::left << std::setw(static_cast<int>(width)) << "total"
      << std::right << std::setw(10) << rep.checks() << std::setw(10)
      << rep.failures() << "\n";
  if (rep.ok()) return 0;
  out << "counterexamples:\n";
  int shown = 0;
  for (const auto& s : rep.suites) {
    for (const auto& ce : s.counterexamples) {
      if (shown == 10) break;
      out << "  [" << s.name << "] " << ce << "\n";
      ++shown;
    }
  }
  return 3;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact Schur-basis computations on Grassmannian cohomology"};
  app.require_subcommand(1);

  int r = 0;
  std::optional<int> n;
  int ei = 0;
  int ej = 0;
  std::optional<int> zmax;
  std::string schur_text;
  std::string expr_text;
  std::string format_name = "text";
  std::string form_name = "det";
  std::string variant_name = "down-inverse";
  std::string matrix_arg;
  bool star = false;

  auto add_common = [&](CLI::App* sub, bool with_box) {
    sub->add_option("--r", r, "rank of the ground ring")->required();
    if (with_box)
      sub->add_option("--n", n, "quotient bound (requires n >= r)");
    auto* g = sub->add_option_group("class", "input class");
    g->add_option("--schur", schur_text, "partition label, e.g. 2,1 or (2,1)");
    g->add_option("--expr", expr_text,
                  "polynomial in e1,...,er and h1,h2,..., e.g. 'e1^2 - e2'");
    g->require_option(1);
    sub->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
  };

  CLI::App* act = app.add_subcommand(
      "act", "apply an elementary matrix to a class");
  add_common(act, true);
  act->add_option("--i", ei, "row of the elementary matrix")->required();
  act->add_option("--j", ej, "column of the elementary matrix")->required();

  CLI::App* series = app.add_subcommand(
      "series", "expand the full generating series of elementary actions");
  add_common(series, true);
  series->add_option("--zmax", zmax, "exact z truncation order");
  series->add_option("--form", form_name, "closed form to evaluate")
      ->check(CLI::IsMember({"det", "vertex"}));

  CLI::App* gamma = app.add_subcommand(
      "gamma", "apply the raising (or, with --star, lowering) vertex operator");
  add_common(gamma, false);
  gamma->add_option("--zmax", zmax, "exact z truncation order (raising only)");
  auto* star_opt = gamma->add_flag("--star", star, "lowering operator");
  auto* variant_opt =
      gamma->add_option("--variant", variant_name, "downward substitution used")
          ->check(CLI::IsMember({"down-inverse", "down"}));
  star_opt->excludes(variant_opt);

  CLI::App* matrix_act = app.add_subcommand(
      "matrix-act", "apply an integer matrix given as JSON to a class");
  add_common(matrix_act, true);
  matrix_act
      ->add_option("--matrix", matrix_arg,
                   "matrix JSON, inline or a file path")
      ->required();

  CLI::App* str = app.add_subcommand(
      "straighten", "rewrite an expression in the Schur basis");
  add_common(str, true);

  VerifyOptions vopts;
  std::vector<std::string> only;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the self-verification suites");
  verify->add_option("--max-r", vopts.max_r, "largest rank in the grids");
  verify->add_option("--max-n", vopts.max_n, "largest quotient bound");
  verify->add_option("--max-deg", vopts.max_deg, "largest degree / order");
  verify->add_option("--trials", vopts.trials, "randomized trial count");
  verify->add_option("--seed", vopts.seed, "seed for the randomized suites");
  verify->add_option("--workers", vopts.workers,
                     "thread count (0 = hardware)");
  verify->add_option("--only", only, "run only the named suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Format fmt = pick_format(format_name);
  try {
    if (act->parsed()) {
      SchurExpansion x = read_class(r, n, schur_text, expr_text);
      print_class(act_elementary(ei, ej, x), fmt, out);
    } else if (series->parsed()) {
      SchurExpansion x = read_class(r, n, schur_text, expr_text);
      const int order = zmax ? *zmax : default_zmax(x);
      HSequence H(r);
      std::optional<LaurentWindow> acc;
      for (const auto& [lam, c] : x.terms()) {
        LaurentWindow part = form_name == "vertex"
                                 ? action_vertex(lam, H, order)
                                 : action_determinantal(lam, H, order);
        part = part * RingElement::constant(r, c);
        acc = acc ? *acc + part : part;
      }
      LaurentWindow s =
          acc ? *acc : LaurentWindow(Window{0, order, -kNoBound, 0});
      if (n) s = project_series(s, r, *n);
      print_series(s, fmt, out);
    } else if (gamma->parsed()) {
      SchurExpansion x = read_class(r, std::nullopt, schur_text, expr_text);
      if (star) {
        print_series(vertex_lowering(x), fmt, out);
      } else {
        const int order = zmax ? *zmax : default_zmax(x);
        const RaisingVariant variant = variant_name == "down"
                                           ? RaisingVariant::down
                                           : RaisingVariant::down_inverse;
        print_series(vertex_raising(x, order, variant), fmt, out);
      }
    } else if (matrix_act->parsed()) {
      SchurExpansion x = read_class(r, n, schur_text, expr_text);
      GlMatrix A = matrix_from_json(load_json_argument(matrix_arg));
      print_class(act_matrix(A, x), fmt, out);
    } else if (str->parsed()) {
      print_class(read_class(r, n, schur_text, expr_text), fmt, out);
    } else if (verify->parsed()) {
      return cmd_verify(vopts, only, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: json: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}
