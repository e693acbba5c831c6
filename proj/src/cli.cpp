#include "dcx/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "dcx/errors.hpp"
#include "dcx/grothendieck.hpp"
#include "dcx/io.hpp"
#include "dcx/render.hpp"
#include "dcx/spectral.hpp"

namespace dcx {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string format = "table";

  bool json() const { return format == "json"; }
  void emit(const Json& doc) const { out << doc.dump(2) << '\n'; }
};

std::string bidegree(const Bidegree& b) {
  return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")";
}

DoubleComplex load_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

// A complex document yields its multiplicities; a multiplicity document is read as is.
MultiplicityVector load_multiplicities(const std::string& path) {
  const Json doc = read_json_file(path);
  if (doc.is_object() && doc.contains("multiplicities")) return multiplicities_from_json(doc);
  return multiplicities(complex_from_json(doc));
}

Json table_json(const std::map<Bidegree, int>& t, const char* value_key) {
  Json list = Json::array();
  for (const auto& [b, v] : t) list.push_back({{"p", b.first}, {"q", b.second}, {value_key, v}});
  return list;
}

void print_table(std::ostream& out, const std::map<Bidegree, int>& t) {
  if (t.empty()) out << "(all zero)\n";
  for (const auto& [b, v] : t) out << bidegree(b) << ": " << v << '\n';
}

int cmd_validate(const Context& ctx, const std::string& path) {
  const DoubleComplex a = load_complex(path);
  const auto violations = validate(a);
  if (ctx.json()) {
    Json list = Json::array();
    for (const auto& v : violations) list.push_back({{"p", v.at.first}, {"q", v.at.second}, {"identity", v.identity}});
    ctx.emit({{"valid", violations.empty()}, {"violations", list}});
  } else if (violations.empty()) {
    ctx.out << "valid\n";
  } else {
    for (const auto& v : violations) ctx.out << v.describe() << '\n';
  }
  return violations.empty() ? 0 : 1;
}

int cmd_mults(const Context& ctx, const std::string& path) {
  const DoubleComplex a = load_complex(path);
  const MultiplicityVector m = multiplicities(a);
  if (ctx.json()) {
    Json doc = multiplicities_to_json(m);
    doc["reconciled"] = reconciles(a, m);
    ctx.emit(doc);
  } else {
    for (const auto& [s, c] : m.entries()) ctx.out << s.label() << "  " << c << '\n';
  }
  return 0;
}

int cmd_cohomology(const Context& ctx, const std::string& path, const std::string& theory) {
  const DoubleComplex a = load_complex(path);
  if (theory == "derham") {
    const auto betti = betti_numbers(a);
    if (ctx.json()) {
      Json list = Json::array();
      for (const auto& [k, v] : betti) list.push_back({{"degree", k}, {"dim", v}});
      ctx.emit({{"theory", theory}, {"dims", list}});
    } else {
      if (betti.empty()) ctx.out << "(all zero)\n";
      for (const auto& [k, v] : betti) ctx.out << "H^" << k << ": " << v << '\n';
    }
    return 0;
  }
  std::map<Bidegree, int> t;
  if (theory == "dolbeault1") t = dolbeault(a, Side::first);
  else if (theory == "dolbeault2") t = dolbeault(a, Side::second);
  else if (theory == "bc") t = bott_chern_aeppli(a).bott_chern;
  else t = bott_chern_aeppli(a).aeppli;
  if (ctx.json()) ctx.emit({{"theory", theory}, {"dims", table_json(t, "dim")}});
  else print_table(ctx.out, t);
  return 0;
}

int cmd_pages(const Context& ctx, const std::string& path, int side_number, int max_page) {
  const DoubleComplex a = load_complex(path);
  const Side side = side_number == 1 ? Side::first : Side::second;
  if (max_page <= 0) max_page = stable_page(a, side);
  const auto pages = spectral_sequence(a, side, max_page);
  Json list = Json::array();
  for (const SSPage& page : pages) {
    std::map<Bidegree, int> dims;
    for (const auto& [b, e] : page.entries)
      if (e.dim != 0) dims[b] = e.dim;
    Json diffs = Json::array();
    if (!ctx.json()) {
      ctx.out << "E_" << page.r << " (side " << side_number << ")\n";
      if (dims.empty()) ctx.out << "  (all zero)\n";
      for (const auto& [b, v] : dims) ctx.out << "  " << bidegree(b) << ": " << v << '\n';
    }
    for (const auto& [b, d] : page.differentials) {
      const Index r = rank(d);
      const Bidegree t = page.target(b.first, b.second);
      if (ctx.json()) {
        Json rows = Json::array();
        for (Index i = 0; i < d.rows(); ++i) {
          Json row = Json::array();
          for (Index j = 0; j < d.cols(); ++j) row.push_back(to_string(d(i, j)));
          rows.push_back(row);
        }
        diffs.push_back({{"p", b.first}, {"q", b.second}, {"target", {t.first, t.second}}, {"rank", r}, {"matrix", rows}});
      } else if (r != 0) {
        ctx.out << "  d_" << page.r << " " << bidegree(b) << " -> " << bidegree(t) << ": rank " << r << '\n';
      }
    }
    list.push_back({{"r", page.r}, {"entries", table_json(dims, "dim")}, {"differentials", diffs}});
  }
  if (ctx.json()) ctx.emit({{"side", side_number}, {"pages", list}});
  return 0;
}

int cmd_delta(const Context& ctx, const std::string& path) {
  const Json doc = read_json_file(path);
  const bool counted = doc.is_object() && doc.contains("multiplicities");
  const auto delta = counted ? delta_from_zigzags(multiplicities_from_json(doc)) : delta_degrees(complex_from_json(doc));
  if (ctx.json()) {
    Json list = Json::array();
    for (const auto& [k, v] : delta) list.push_back({{"degree", k}, {"delta", v}});
    ctx.emit({{"delta", list}});
    return 0;
  }
  bool any = false;
  for (const auto& [k, v] : delta) {
    if (v == 0) continue;
    ctx.out << "Δ^" << k << " = " << v << '\n';
    any = true;
  }
  if (!any) ctx.out << "Δ^k = 0 for all k\n";
  return 0;
}

int cmd_predicates(const Context& ctx, const std::string& path) {
  const Predicates p = predicates(load_complex(path));
  if (ctx.json()) {
    Json pure = Json::array();
    for (const auto& [d, v] : p.pure) pure.push_back({{"degree", d}, {"pure", v}});
    ctx.emit({{"degeneration_page_1", p.degeneration_page_1},
              {"degeneration_page_2", p.degeneration_page_2},
              {"ddbar", p.ddbar},
              {"pure_hodge", pure}});
    return 0;
  }
  ctx.out << "side 1 degenerates at E_" << p.degeneration_page_1 << '\n';
  ctx.out << "side 2 degenerates at E_" << p.degeneration_page_2 << '\n';
  ctx.out << "ddbar lemma: " << (p.ddbar ? "true" : "false") << '\n';
  for (const auto& [d, v] : p.pure) ctx.out << "pure Hodge structure on H^" << d << ": " << (v ? "true" : "false") << '\n';
  return 0;
}

int parse_page(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "∞") return kInfinitePage;
  std::size_t used = 0;
  const int r = std::stoi(text, &used);
  if (used != text.size() || r < 1) throw std::invalid_argument("page must be a positive integer or 'inf'");
  return r;
}

int cmd_compare(const Context& ctx, const std::string& a, const std::string& b, const std::string& page) {
  const int r = parse_page(page);
  const bool eq = er_equivalent(load_multiplicities(a), load_multiplicities(b), r);
  if (ctx.json()) ctx.emit({{"r", page}, {"equivalent", eq}});
  else ctx.out << (eq ? "equivalent" : "not equivalent") << '\n';
  return eq ? 0 : 1;
}

int cmd_ring(const Context& ctx, const std::string& expression, const std::string& level_text) {
  const Level level = parse_level(level_text);
  const RingClass x = evaluate_expression(expression, level);
  const bool has_nf = level != Level::R0;
  const std::string nf = has_nf ? normal_form(x).to_string() : "";
  if (ctx.json()) {
    Json terms = Json::array();
    for (const auto& [s, c] : x.terms()) terms.push_back({{"shape", s.label()}, {"coefficient", c}});
    Json doc{{"level", to_string(level)}, {"class", to_string(x)}, {"terms", terms},
             {"first_quadrant", is_first_quadrant(x)}};
    if (has_nf) doc["normal_form"] = nf;
    ctx.emit(doc);
    return 0;
  }
  ctx.out << "class: " << to_string(x) << '\n';
  if (has_nf) ctx.out << "normal form: " << nf << '\n';
  ctx.out << "first quadrant: " << (is_first_quadrant(x) ? "true" : "false") << '\n';
  return 0;
}

int cmd_render(const Context& ctx, const std::string& path, bool svg) {
  const Json doc = read_json_file(path);
  if (doc.is_object() && doc.contains("multiplicities")) {
    const MultiplicityVector m = multiplicities_from_json(doc);
    ctx.out << (svg ? render_svg(m) : render_ascii(m));
    return 0;
  }
  const DoubleComplex a = complex_from_json(doc);
  const MultiplicityVector m = multiplicities(a);
  ctx.out << (svg ? render_svg(m) : render_ascii(a, m));
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Exact computations with bounded double complexes", "dcx"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::string file, file2, theory = "derham", page = "1", level = "R1", expression, output, field = "Q", label;
  int side = 1, max_page = 0, p = 0, q = 0, n = 0, k = 0, u = 0, v = 1, r = 2, m = 0;
  bool svg = false;
  std::function<int()> action;

  const auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "Complex document")->required(); };

  auto* validate_cmd = app.add_subcommand("validate", "Check the double complex identities");
  with_file(validate_cmd);
  validate_cmd->callback([&] { action = [&] { return cmd_validate(ctx, file); }; });

  auto* mults_cmd = app.add_subcommand("mults", "Multiplicities of squares and zigzags");
  with_file(mults_cmd);
  mults_cmd->callback([&] { action = [&] { return cmd_mults(ctx, file); }; });

  auto* coh_cmd = app.add_subcommand("cohomology", "Cohomology dimensions");
  with_file(coh_cmd);
  coh_cmd->add_option("--theory", theory, "derham, dolbeault1 (H_d2), dolbeault2 (H_d1), bc or aeppli")
      ->check(CLI::IsMember({"derham", "dolbeault1", "dolbeault2", "bc", "aeppli"}));
  coh_cmd->callback([&] { action = [&] { return cmd_cohomology(ctx, file, theory); }; });

  auto* pages_cmd = app.add_subcommand("pages", "Pages of a Frölicher spectral sequence");
  with_file(pages_cmd);
  pages_cmd->add_option("--side", side, "1 or 2")->check(CLI::IsMember({1, 2}));
  pages_cmd->add_option("--max-page", max_page, "Last page (default: the stable page)");
  pages_cmd->callback([&] { action = [&] { return cmd_pages(ctx, file, side, max_page); }; });

  auto* delta_cmd = app.add_subcommand("delta", "Non-ddbar degrees of a complex or multiplicity document");
  with_file(delta_cmd);
  delta_cmd->callback([&] { action = [&] { return cmd_delta(ctx, file); }; });

  auto* pred_cmd = app.add_subcommand("predicates", "Degeneration, ddbar lemma and purity");
  with_file(pred_cmd);
  pred_cmd->callback([&] { action = [&] { return cmd_predicates(ctx, file); }; });

  auto* cmp_cmd = app.add_subcommand("compare", "E_r equivalence of two complexes or multiplicity documents");
  cmp_cmd->add_option("a", file, "First document")->required();
  cmp_cmd->add_option("b", file2, "Second document")->required();
  cmp_cmd->add_option("--r", page, "Page: a positive integer or 'inf'");
  cmp_cmd->callback([&] { action = [&] { return cmd_compare(ctx, file, file2, page); }; });

  auto* ring_cmd = app.add_subcommand("ring", "Evaluate an expression in the Grothendieck ring");
  ring_cmd->add_option("expression", expression, "e.g. \"2*S_1^{0,0} + S_{1,2}^{0,1}\"")->required();
  ring_cmd->add_option("--level", level, "R0, R1 or Rinf")->check(CLI::IsMember({"R0", "R1", "Rinf"}));
  ring_cmd->callback([&] { action = [&] { return cmd_ring(ctx, expression, level); }; });

  auto* render_cmd = app.add_subcommand("render", "Draw the shapes of a complex or multiplicity document");
  with_file(render_cmd);
  render_cmd->add_flag("--svg", svg, "SVG instead of text");
  render_cmd->callback([&] { action = [&] { return cmd_render(ctx, file, svg); }; });

  auto* build = app.add_subcommand("build", "Write a complex or multiplicity document");
  build->require_subcommand(1);
  build->add_option("-o,--output", output, "Output file (default: standard output)");
  const auto put = [&](const Json& doc) {
    if (output.empty()) out << doc.dump(2) << '\n';
    else write_json_file(output, doc);
    return 0;
  };
  const auto field_option = [&](CLI::App* sub) { sub->add_option("--field", field, "Q, Q(i) or F_p"); };

  auto* b_square = build->add_subcommand("square", "Elementary square with top-right corner (p,q)");
  b_square->add_option("--p", p)->required();
  b_square->add_option("--q", q)->required();
  field_option(b_square);
  b_square->callback([&] { action = [&] { return put(complex_to_json(elementary(Square{p, q}, FieldSpec::parse(field)))); }; });

  auto* b_zigzag = build->add_subcommand("zigzag", "Elementary complex of a shape label");
  b_zigzag->add_option("shape", label, "e.g. S_1^{0,0} or S_{1,2}^{0,1}")->required();
  field_option(b_zigzag);
  b_zigzag->callback([&] { action = [&] { return put(complex_to_json(elementary(Shape::parse(label), FieldSpec::parse(field)))); }; });

  const auto binary = [&](const char* name, const char* help, DoubleComplex (*op)(const DoubleComplex&, const DoubleComplex&)) {
    auto* sub = build->add_subcommand(name, help);
    sub->add_option("a", file)->required();
    sub->add_option("b", file2)->required();
    sub->callback([&, op] { action = [&, op] { return put(complex_to_json(op(load_complex(file), load_complex(file2)))); }; });
  };
  binary("tensor", "Tensor product", &tensor);
  binary("sum", "Direct sum", &direct_sum);

  auto* b_dual = build->add_subcommand("dual", "Dual complex reflected at p+q = n");
  b_dual->add_option("a", file)->required();
  b_dual->add_option("--n", n)->required();
  b_dual->callback([&] { action = [&] { return put(complex_to_json(dual(load_complex(file), n))); }; });

  auto* b_shift = build->add_subcommand("shift", "Shift by (k,k)");
  b_shift->add_option("a", file)->required();
  b_shift->add_option("--k", k)->required();
  b_shift->callback([&] { action = [&] { return put(complex_to_json(shift(load_complex(file), k))); }; });

  auto* b_transpose = build->add_subcommand("transpose", "Swap p and q");
  b_transpose->add_option("a", file)->required();
  b_transpose->callback([&] { action = [&] { return put(complex_to_json(transpose_pq(load_complex(file)))); }; });

  auto* b_conj = build->add_subcommand("conjugate", "Swap p and q and conjugate entries");
  b_conj->add_option("a", file)->required();
  b_conj->callback([&] { action = [&] { return put(complex_to_json(conjugate(load_complex(file)))); }; });

  auto* b_lie = build->add_subcommand("lie", "Dolbeault model of a Lie algebra with complex structure");
  b_lie->add_option("file", file, "Lie data document")->required();
  b_lie->callback([&] { action = [&] { return put(complex_to_json(lie_complex(lie_data_from_json(read_json_file(file))))); }; });

  auto* b_hodge = build->add_subcommand("hodge", "Complex with zero differentials from a Hodge table");
  b_hodge->add_option("file", file, "Hodge table document")->required();
  field_option(b_hodge);
  b_hodge->callback([&] {
    action = [&] { return put(complex_to_json(hodge_complex(hodge_table_from_json(read_json_file(file)), FieldSpec::parse(field)))); };
  });

  auto* b_hopf = build->add_subcommand("hopf", "Model of a Hopf surface");
  field_option(b_hopf);
  b_hopf->callback([&] { action = [&] { return put(complex_to_json(hopf_model(FieldSpec::parse(field)))); }; });

  auto* b_ce = build->add_subcommand("calabi-eckmann", "Model of a Calabi-Eckmann manifold, u < v");
  b_ce->add_option("--u", u)->required();
  b_ce->add_option("--v", v)->required();
  field_option(b_ce);
  b_ce->callback([&] { action = [&] { return put(complex_to_json(calabi_eckmann_model(u, v, FieldSpec::parse(field)))); }; });

  auto* b_blowup = build->add_subcommand("blowup-class", "Multiplicities of a blowup of X along Z of codimension r");
  b_blowup->add_option("x", file, "Document for X")->required();
  b_blowup->add_option("z", file2, "Document for Z")->required();
  b_blowup->add_option("--r", r)->required();
  b_blowup->callback([&] {
    action = [&] { return put(multiplicities_to_json(blowup_class(load_multiplicities(file), load_multiplicities(file2), r))); };
  });

  auto* b_pb = build->add_subcommand("pb-class", "Multiplicities of a projective bundle of rank m+1 over X");
  b_pb->add_option("x", file, "Document for X")->required();
  b_pb->add_option("--m", m)->required();
  b_pb->callback([&] { action = [&] { return put(multiplicities_to_json(projective_bundle_class(load_multiplicities(file), m))); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  if (!action) {
    err << "usage error: no command given\n";
    return 2;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dcx
