// Command-line front end for the symquot library.
//
// Exit codes: 0 success, 1 verification failure (s3, positivity), 2 usage,
// parse or domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symquot/symquot.hpp"

namespace {

using namespace symquot;
using nlohmann::json;

struct Options {
  int k = 0;
  int n = 0;
  std::string mu;
  std::string lambda;
  std::string alpha, beta, gamma;
  int j = 0;
  int m = 1;
  std::string poly;
  std::string family = "h";
  std::string spec;
  std::string format = "text";
  std::string output;
  int jobs = 1;
  int n_min = 2;
  int n_max = 8;
};

class Printer {
 public:
  explicit Printer(const Options& opt) : json_(opt.format == "json") {
    if (!opt.output.empty()) {
      file_.open(opt.output);
      if (!file_) throw std::runtime_error("cannot open output file " + opt.output);
    }
  }
  [[nodiscard]] bool json_mode() const { return json_; }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
  void emit(const json& j) { out() << j.dump(2) << '\n'; }
  void line(const std::string& s) { out() << s << '\n'; }

 private:
  bool json_;
  std::ofstream file_;
};

void print_elem(Printer& p, const QuotElem& f, const std::string& spec) {
  if (spec.empty()) {
    if (p.json_mode())
      p.emit(to_json(f));
    else
      p.line(to_string(f));
    return;
  }
  const auto s = specialize_elem(f, parse_specialization(spec, f.context().k));
  if (p.json_mode())
    p.emit(to_json(f.context(), s));
  else
    p.line(to_string(s));
}

Partition need_partition(const std::string& text, const char* flag) {
  if (text.empty()) throw std::invalid_argument(std::string("missing ") + flag);
  return parse_partition(text);
}

int run_straighten(const Options& o, Printer& p) {
  const QuotContext ctx(o.k, o.n);
  print_elem(p, straighten_schur(ctx, need_partition(o.mu, "--mu")), o.spec);
  return 0;
}

int run_multiply(const Options& o, Printer& p) {
  const QuotContext ctx(o.k, o.n);
  const Partition a = need_partition(o.lambda, "--lambda");
  const Partition b = need_partition(o.mu, "--mu");
  print_elem(p, multiply(QuotElem::basis(ctx, a), QuotElem::basis(ctx, b)), o.spec);
  return 0;
}

int run_pieri(const Options& o, Printer& p) {
  const QuotContext ctx(o.k, o.n);
  print_elem(p, pieri_h(ctx, need_partition(o.lambda, "--lambda"), o.j), o.spec);
  return 0;
}

int run_expand(const Options& o, Printer& p) {
  const QuotContext ctx(o.k, o.n);
  const std::string& part = o.lambda.empty() ? o.mu : o.lambda;
  print_elem(p, expand(ctx, parse_family(o.family), need_partition(part, "--lambda")), o.spec);
  return 0;
}

int run_hoverflow(const Options& o, Printer& p) {
  const QuotContext ctx(o.k, o.n);
  print_elem(p, reduce_h_overflow(ctx, o.m), o.spec);
  return 0;
}

int run_structure(const Options& o, Printer& p) {
  const QuotContext ctx(o.k, o.n);
  const APoly g = structure_constant(ctx, need_partition(o.alpha, "--alpha"), need_partition(o.beta, "--beta"),
                                     need_partition(o.gamma, "--gamma"));
  if (p.json_mode())
    p.emit({{"k", ctx.k}, {"n", ctx.n}, {"alpha", o.alpha}, {"beta", o.beta}, {"gamma", o.gamma}, {"g", to_string(g)}});
  else
    p.line(to_string(g));
  return 0;
}

int run_nf(const Options& o, Printer& p) {
  const QuotContext ctx(o.k, o.n);
  if (o.poly.empty()) throw std::invalid_argument("missing --poly");
  const XPoly r = normal_form(ctx, parse_xpoly(o.poly, ctx.k));
  if (p.json_mode())
    p.emit({{"k", ctx.k}, {"n", ctx.n}, {"input", o.poly}, {"normal_form", to_string(r)}});
  else
    p.line(to_string(r));
  return 0;
}

int run_s3(const Options& o, Printer& p) {
  const QuotContext ctx(o.k, o.n);
  const S3Report r = s3_report(ctx, o.jobs);
  if (p.json_mode()) {
    json bad = json::array();
    for (const auto& v : r.counterexamples)
      bad.push_back({{"alpha", to_string(v.alpha)}, {"beta", to_string(v.beta)}, {"gamma", to_string(v.gamma)},
                     {"detail", v.detail}});
    p.emit({{"k", ctx.k}, {"n", ctx.n}, {"ok", r.ok}, {"triples_checked", r.triples_checked},
            {"counterexamples", std::move(bad)}});
  } else {
    for (const auto& v : r.counterexamples)
      p.line("counterexample " + to_string(v.alpha) + " " + to_string(v.beta) + " " + to_string(v.gamma) + ": " + v.detail);
    p.line(std::string(r.ok ? "ok" : "FAILED") + ": " + std::to_string(r.triples_checked) + " triples, " +
           std::to_string(r.counterexamples.size()) + " counterexamples");
  }
  return r.ok ? 0 : 1;
}

int run_positivity(const Options& o, Printer& p) {
  const QuotContext ctx(o.k, o.n);
  const PositivityReport r = positivity_scan(ctx, o.jobs);
  if (p.json_mode()) {
    json bad = json::array();
    for (const auto& v : r.violations)
      bad.push_back({{"lambda", to_string(v.lambda)}, {"mu", to_string(v.mu)}, {"nu", to_string(v.nu)},
                     {"offending", to_string(v.offending)}});
    p.emit({{"k", ctx.k}, {"n", ctx.n}, {"ok", r.ok}, {"coefficients_checked", r.coefficients_checked},
            {"violations", std::move(bad)}});
  } else {
    for (const auto& v : r.violations)
      p.line("violation " + to_string(v.lambda) + " " + to_string(v.mu) + " " + to_string(v.nu) + ": " +
             to_string(v.offending));
    p.line(std::string(r.ok ? "ok" : "FAILED") + ": " + std::to_string(r.coefficients_checked) + " coefficients, " +
           std::to_string(r.violations.size()) + " violations");
  }
  return r.ok ? 0 : 1;
}

int run_basis_table(const Options& o, Printer& p) {
  const BasisFamily family = parse_family(o.family);
  if (o.n_min < 2 || o.n_max < o.n_min) throw std::invalid_argument("need 2 <= --n-min <= --n-max");
  struct Cell {
    int n, k;
    Classification c;
  };
  std::vector<Cell> cells;
  for (int n = o.n_min; n <= o.n_max; ++n)
    for (int k = 1; k < n; ++k) cells.push_back({n, k, {}});
  // Cells run one at a time; each matrix is assembled with --jobs threads.
  for (Cell& cell : cells) cell.c = classify_family(QuotContext(cell.k, cell.n), family, o.jobs);

  if (p.json_mode()) {
    json arr = json::array();
    for (const Cell& c : cells)
      arr.push_back({{"n", c.n}, {"k", c.k}, {"result", to_string(c.c)}, {"det", to_string(c.c.determinant)}});
    p.emit({{"family", to_string(family)}, {"cells", std::move(arr)}});
    return 0;
  }
  // Column width follows the longest label in that column.
  std::vector<std::size_t> width(static_cast<std::size_t>(o.n_max), 0);
  width[0] = ("n=" + std::to_string(o.n_max)).size();
  for (const Cell& c : cells) {
    auto& w = width[static_cast<std::size_t>(c.k)];
    w = std::max(w, to_string(c.c).size());
  }
  for (int k = 1; k < o.n_max; ++k) {
    auto& w = width[static_cast<std::size_t>(k)];
    w = std::max(w, ("k=" + std::to_string(k)).size());
  }
  auto cell_text = [&](std::string s, int col) {
    s.resize(width[static_cast<std::size_t>(col)] + 2, ' ');
    return s;
  };
  auto trim = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  std::string header = cell_text("", 0);
  for (int k = 1; k < o.n_max; ++k) header += cell_text("k=" + std::to_string(k), k);
  p.line(trim(header));
  std::size_t idx = 0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    std::string row = cell_text("n=" + std::to_string(n), 0);
    for (int k = 1; k < n; ++k) row += cell_text(to_string(cells[idx++].c), k);
    p.line(trim(row));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the quotient S/I of symmetric polynomials"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", o.output, "Write output to a file instead of stdout");
  };
  auto add_ctx = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Number of variables")->required();
    sub->add_option("--n", o.n, "n >= k")->required();
    add_common(sub);
  };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "Specialization: classical, quantum, or a1=..,a2=..");
  };

  auto* straighten = app.add_subcommand("straighten", "Expand s_mu in the Schur basis of S/I");
  add_ctx(straighten);
  add_spec(straighten);
  straighten->add_option("--mu", o.mu, "Partition such as [5,4,1]")->required();

  auto* mult = app.add_subcommand("multiply", "Product of two Schur basis elements");
  add_ctx(mult);
  add_spec(mult);
  mult->add_option("--lambda", o.lambda)->required();
  mult->add_option("--mu", o.mu)->required();

  auto* pieri = app.add_subcommand("pieri", "s_lambda times h_j by the closed Pieri formula");
  add_ctx(pieri);
  add_spec(pieri);
  pieri->add_option("--lambda", o.lambda)->required();
  pieri->add_option("--j", o.j)->required();

  auto* exp = app.add_subcommand("expand", "Expand a family element in the Schur basis");
  add_ctx(exp);
  add_spec(exp);
  exp->add_option("--family", o.family, "h, m, e, p or ht")->check(CLI::IsMember({"h", "m", "e", "p", "ht"}));
  exp->add_option("--lambda,--mu", o.lambda)->required();

  auto* hover = app.add_subcommand("hoverflow", "Reduce h_{n+m} into the Schur basis");
  add_ctx(hover);
  add_spec(hover);
  hover->add_option("--m", o.m)->required();

  auto* structure = app.add_subcommand("structure", "Structure constant g_{alpha,beta,gamma}");
  add_ctx(structure);
  structure->add_option("--alpha", o.alpha)->required();
  structure->add_option("--beta", o.beta)->required();
  structure->add_option("--gamma", o.gamma)->required();

  auto* nf = app.add_subcommand("nf", "Normal form modulo the Groebner basis of J");
  add_ctx(nf);
  nf->add_option("--poly", o.poly, "Polynomial in x1..xk and a1..ak")->required();

  auto* s3 = app.add_subcommand("s3", "Verify S3 symmetry of all structure constants");
  add_ctx(s3);
  s3->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  auto* pos = app.add_subcommand("positivity", "Scan structure constants for sign positivity");
  add_ctx(pos);
  pos->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("basis-table", "Classify a family as basis / non-basis over a range of (n,k)");
  add_common(table);
  table->add_option("--family", o.family)->required()->check(CLI::IsMember({"h", "m", "e", "p", "ht"}));
  table->add_option("--n-min", o.n_min);
  table->add_option("--n-max", o.n_max);
  table->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Printer printer(o);
    if (*straighten) return run_straighten(o, printer);
    if (*mult) return run_multiply(o, printer);
    if (*pieri) return run_pieri(o, printer);
    if (*exp) return run_expand(o, printer);
    if (*hover) return run_hoverflow(o, printer);
    if (*structure) return run_structure(o, printer);
    if (*nf) return run_nf(o, printer);
    if (*s3) return run_s3(o, printer);
    if (*pos) return run_positivity(o, printer);
    if (*table) return run_basis_table(o, printer);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
