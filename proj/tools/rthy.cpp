// rthy: command-line front end. One JSON document per invocation on stdout.
#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rthy/channels.hpp"
#include "rthy/errors.hpp"
#include "rthy/guard.hpp"
#include "rthy/io.hpp"
#include "rthy/majorize.hpp"
#include "rthy/measures.hpp"
#include "rthy/monotone.hpp"
#include "rthy/possibilistic.hpp"
#include "rthy/quantale.hpp"

using namespace rthy;
using io::json;

namespace {

constexpr const char* kSchemas = R"(File formats (rationals are strings "p/q" or "p"):
  encoding   {"hypotheses": h, "outcomes": n, "columns": [["1/2","1/2"], ...]}   one column per hypothesis
  distrib.   ["3/4","1/4"]  or  {"distribution": [...]}
  preorder   {"size": n, "pairs": [[i, j], ...]}                                  i >= j generators
  module     {"T": [...], "X": [...], "unit": [...], "free": [...],
              "star": {"t,u": [...]}, "act": {"t,x": [...]}}                      absent keys are empty
  valuation  {"x": "value", ...}                                                  values may be "+inf", "-inf"
  group      {"generators": [[image of X[0], image of X[1], ...], ...]}
  quantale   {"R": [...], "unit": [...], "free": [...], "box": {"a,b": [...]}}
  channel    {"hypotheses": h, "input": a, "output": b, "columns": {"h,a": [...]}}  h, a from 0
Exit codes: 0 computed (any decision), 2 usage or input error, 3 enumeration guard exceeded.
RTHY_ENUM_GUARD=<int> overrides every enumeration guard.)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

ElementSet names_to_set(const std::string& list, const std::vector<std::string>& names) {
  return io::set_from_json(json(split_names(list)), names);
}

json certificate(const LpProblem& p, const Vector& farkas) {
  LpOutcome o;
  o.status = LpStatus::Infeasible;
  o.farkas = farkas;
  return json{{"farkas", io::to_json(farkas)}, {"verified", verify_certificate(p, o)}};
}

json majorization_json(const Encoding& x, const Encoding& y) {
  Majorization r = majorizes(x, y);
  json out{{"convertible", r.convertible}};
  if (r.convertible)
    out["witness"] = io::matrix_to_json(r.witness->matrix());
  else
    out["certificate"] = certificate(majorization_lp(x, y), *r.farkas);
  return out;
}

json yield_json(const ChannelYield& y) {
  return json{{"value", io::to_json(y.value)},
              {"argmax", io::to_json(y.argmax)},
              {"exact", y.exact},
              {"evaluated", y.evaluated}};
}

void print_csv(const std::vector<Point2>& pts) {
  std::cout << "x,y\n";
  for (const auto& [a, b] : pts) std::cout << a.str() << "," << b.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact resource-theory toolkit: majorization, monotones, quantale modules."};
  app.footer(kSchemas);
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "json, or csv for vertex lists")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option_function<unsigned>("--threads", [](unsigned n) { set_thread_count(n); },
                                    "worker threads for parallel evaluation")
      ->check(CLI::PositiveNumber);

  json doc;
  std::optional<std::vector<Point2>> points;

  // check-order
  auto* check = app.add_subcommand("check-order", "does x majorize y (is y a post-processing of x)");
  std::string x_path, y_path;
  check->add_option("x", x_path, "encoding")->required();
  check->add_option("y", y_path, "encoding")->required();
  check->callback([&] {
    doc = majorization_json(io::encoding_from_json(io::read_file(x_path)), io::encoding_from_json(io::read_file(y_path)));
  });

  // zonotope
  auto* zono = app.add_subcommand("zonotope", "2-hypothesis zonotope vertices; with y, inclusion both ways");
  std::string zy_path;
  zono->add_option("x", x_path, "encoding with 2 hypotheses")->required();
  zono->add_option("y", zy_path, "second encoding");
  zono->callback([&] {
    Encoding x = io::encoding_from_json(io::read_file(x_path));
    Zonotope2 zx = zonotope(x);
    doc = json{{"vertices", io::points_to_json(zx.vertices)}};
    if (!zy_path.empty()) {
      Encoding y = io::encoding_from_json(io::read_file(zy_path));
      doc["vertices_y"] = io::points_to_json(zonotope(y).vertices);
      doc["x_includes_y"] = zonotope_includes(x, y);
      doc["y_includes_x"] = zonotope_includes(y, x);
    }
    points = zx.vertices;
  });

  // lorenz
  auto* lor = app.add_subcommand("lorenz", "Lorenz curve of a distribution relative to a reference");
  std::string ref = "uniform";
  lor->add_option("d", x_path, "distribution")->required();
  lor->add_option("--ref", ref, "uniform, or a distribution file");
  lor->callback([&] {
    Vector d = io::distribution_from_json(io::read_file(x_path));
    Vector r;
    if (ref == "uniform")
      r.assign(d.size(), d.empty() ? Rational(0) : Rational(1, static_cast<long>(d.size())));
    else
      r = io::distribution_from_json(io::read_file(ref));
    auto curve = lorenz(d, r);
    doc = json{{"vertices", io::points_to_json(curve)}};
    points = curve;
  });

  // markotope
  auto* mark = app.add_subcommand("markotope", "is z in the k-outcome post-processings of x (k = outcomes of z)");
  mark->add_option("x", x_path, "encoding")->required();
  mark->add_option("z", y_path, "encoding")->required();
  mark->callback([&] {
    Encoding x = io::encoding_from_json(io::read_file(x_path)), z = io::encoding_from_json(io::read_file(y_path));
    doc = majorization_json(x, z);
    doc["k"] = z.outcomes();
    doc["contains"] = markotope_contains(x, z, z.outcomes());
  });

  // weight
  auto* wt = app.add_subcommand("weight", "weight; with --m/--k, the rank-stratified weight f_{m,k}");
  std::size_t m = 0, k = 0;
  wt->add_option("x", x_path, "encoding")->required();
  auto* m_opt = wt->add_option("--m", m, "lower rank bound");
  auto* k_opt = wt->add_option("--k", k, "upper rank bound");
  m_opt->needs(k_opt);
  k_opt->needs(m_opt);
  wt->callback([&] {
    Encoding x = io::encoding_from_json(io::read_file(x_path));
    if (m_opt->count())
      doc = json{{"value", io::to_json(weight_fmk(x, m, k))}, {"m", m}, {"k", k}};
    else
      doc = json{{"value", io::to_json(weight(x))}};
  });

  // robustness
  auto* rob = app.add_subcommand("robustness", "robustness-type measures");
  std::string kind = "global";
  rob->add_option("x", x_path, "encoding")->required();
  rob->add_option("--kind", kind, "global | free | weight | nonconvexity")
      ->check(CLI::IsMember({"global", "free", "weight", "nonconvexity"}));
  rob->callback([&] {
    Encoding x = io::encoding_from_json(io::read_file(x_path));
    Extended v = kind == "global" ? Extended(robustness(x))
                 : kind == "free" ? free_robustness(x)
                 : kind == "weight" ? Extended(weight(x))
                                    : nonconvexity(x);
    doc = json{{"kind", kind}, {"value", io::to_json(v)}};
  });

  // possibilistic
  auto* pos = app.add_subcommand("possibilistic", "Boolean reduction: exhaustive search for a Boolean map");
  pos->add_option("x", x_path, "encoding (support is taken)")->required();
  pos->add_option("y", y_path, "encoding (support is taken)")->required();
  pos->callback([&] {
    BoolEncoding x = ceil(io::encoding_from_json(io::read_file(x_path)));
    BoolEncoding y = ceil(io::encoding_from_json(io::read_file(y_path)));
    BoolMajorization r = bool_majorizes(x, y);
    doc = json{{"convertible", r.convertible},
               {"nodes", r.nodes},
               {"hypergraph_x", to_hypergraph(x)},
               {"hypergraph_y", to_hypergraph(y)}};
    if (r.convertible) {
      doc["witness"] = io::bool_matrix_to_json(*r.witness);
    } else {
      const auto& f = *r.refutation;
      json c{{"verified", verify_refutation(x, y, f)}};
      if (f.kind == BoolRefutation::Kind::NoAdmissibleTarget) {
        c["kind"] = "NoAdmissibleTarget";
        c["x_outcome"] = f.index;
      } else {
        c["kind"] = "Uncoverable";
        c["y_outcome"] = f.index;
        c["hypothesis"] = f.hyp;
      }
      doc["certificate"] = c;
    }
  });

  // channel
  auto* chan = app.add_subcommand("channel", "channel encodings");
  chan->require_subcommand(1);
  auto* cyield = chan->add_subcommand("yield", "max of a state monotone over evaluated inputs");
  std::string monotone = "fmk", mode = "deltas";
  std::size_t grid = 2;
  cyield->add_option("psi", x_path, "channel")->required();
  cyield->add_option("--monotone", monotone, "fmk | weight")->check(CLI::IsMember({"fmk", "weight"}));
  cyield->add_option("--m", m, "lower rank bound (fmk)");
  cyield->add_option("--k", k, "upper rank bound (fmk)");
  cyield->add_option("--mode", mode, "deltas | grid")->check(CLI::IsMember({"deltas", "grid"}));
  cyield->add_option("--grid", grid, "grid denominator")->check(CLI::PositiveNumber);
  cyield->callback([&] {
    ChannelEncoding psi = io::channel_from_json(io::read_file(x_path));
    StateMonotone f;
    if (monotone == "fmk") {
      if (m == 0 || k == 0) throw UsageError("--monotone fmk needs --m and --k");
      f = [=](const Encoding& z) { return weight_fmk(z, m, k); };
    } else {
      f = [](const Encoding& z) { return Extended(weight(z)); };
    }
    doc = yield_json(channel_yield(psi, f, mode == "grid" ? YieldMode::grid_of(grid) : YieldMode::deltas()));
  });
  auto* csim = chan->add_subcommand("simulate", "does the state x simulate psi through an input-copy comb");
  csim->add_option("x", x_path, "encoding")->required();
  csim->add_option("psi", y_path, "channel")->required();
  csim->callback([&] {
    Encoding x = io::encoding_from_json(io::read_file(x_path));
    ChannelEncoding psi = io::channel_from_json(io::read_file(y_path));
    CombSimulation r = comb_simulates(x, psi);
    doc = json{{"convertible", r.convertible}};
    if (r.convertible) {
      json w = json::array();
      for (const auto& s : *r.witness) w.push_back(io::matrix_to_json(s.matrix()));
      doc["witness"] = w;
    } else {
      doc["certificate"] = certificate(comb_lp(x, psi), *r.farkas);
    }
  });
  auto* cequiv = chan->add_subcommand("equivalent", "are psi and x interconvertible");
  cequiv->add_option("psi", x_path, "channel")->required();
  cequiv->add_option("x", y_path, "encoding")->required();
  cequiv->callback([&] {
    doc = json{{"equivalent", channel_equivalent(io::channel_from_json(io::read_file(x_path)),
                                                 io::encoding_from_json(io::read_file(y_path)))}};
  });

  // module
  auto* mod = app.add_subcommand("module", "finite quantale modules");
  mod->require_subcommand(1);
  std::string module_path, gold_path, at, set_list, group_path;
  auto load_module = [&] { return io::module_from_json(io::read_file(module_path)); };
  auto module_opt = [&](CLI::App* sub) { sub->add_option("--module", module_path, "module file")->required(); };

  auto* mval = mod->add_subcommand("validate", "check the module axioms");
  module_opt(mval);
  mval->callback([&] {
    auto md = load_module();
    doc = json{{"valid", md.is_valid()}, {"violations", io::violations_to_json(md.violations())}};
  });

  auto* mord = mod->add_subcommand("order", "reachability preorder of the free transformations");
  module_opt(mord);
  mord->callback([&] {
    auto md = load_module();
    FinitePreorder p = reachability(md);
    json pairs = json::array();
    for (auto [a, b] : p.strict_pairs()) pairs.push_back({md.x_name(a), md.x_name(b)});
    doc = json{{"X", md.tables().x_names}, {"pairs", pairs}};
  });

  auto yield_cost = [&](bool is_yield) {
    auto md = load_module();
    PartialValuation gold = io::valuation_from_json(io::read_file(gold_path), md.tables().x_names);
    TSet set = set_list.empty() ? md.free() : names_to_set(set_list, md.tables().t_names);
    std::vector<std::size_t> atoms;
    if (at.empty())
      for (std::size_t x = 0; x < md.num_x(); ++x) atoms.push_back(x);
    else
      atoms.push_back(md.x_index(at));
    json values = json::object();
    for (auto x : atoms) {
      Extended v = is_yield ? yield(md, set, gold, x) : cost(md, set, gold, x);
      auto w = is_yield ? yield_witness(md, set, gold, x) : cost_witness(md, set, gold, x);
      values[md.x_name(x)] = json{{"value", io::to_json(v)}, {"witness", w ? json(md.x_name(*w)) : json(nullptr)}};
    }
    doc = json{{is_yield ? "yield" : "cost", values}, {"set", io::set_to_json(set, md.tables().t_names)}};
  };
  for (bool is_yield : {true, false}) {
    auto* sub = mod->add_subcommand(is_yield ? "yield" : "cost",
                                    is_yield ? "sup of the gold valuation over D |> {x}"
                                             : "inf of the gold valuation over resources S-converting to x");
    module_opt(sub);
    sub->add_option("--gold", gold_path, "valuation file")->required();
    sub->add_option("--at", at, "resource name (default: all)");
    sub->add_option("--set", set_list, "comma-separated transformation names (default: the free set)");
    sub->callback([&, is_yield] { yield_cost(is_yield); });
  }

  auto* mcov = mod->add_subcommand("covariant", "atoms commuting with a group action on resources");
  module_opt(mcov);
  mcov->add_option("--group", group_path, "group file")->required();
  mcov->add_option("--set", set_list, "also test this set for compatibility");
  mcov->callback([&] {
    auto md = load_module();
    PermutationAction g = io::action_from_json(io::read_file(group_path), md.tables().x_names);
    doc = json{{"covariant", io::set_to_json(covariant_transformations(md, g), md.tables().t_names)},
               {"group_size", g.size()}};
    if (!set_list.empty()) doc["set_compatible"] = g_compatible(md, g, names_to_set(set_list, md.tables().t_names));
  });

  auto* maug = mod->add_subcommand("augment", "quotient of resources by a reflexive, transitive set");
  module_opt(maug);
  maug->add_option("--set", set_list, "comma-separated transformation names")->required();
  maug->callback([&] {
    auto md = load_module();
    Augmentation a = augment(md, names_to_set(set_list, md.tables().t_names));
    json classes = json::array(), pairs = json::array();
    for (const auto& c : a.classes) {
      json names = json::array();
      for (auto x : c) names.push_back(md.x_name(x));
      classes.push_back(names);
    }
    for (auto [i, j] : a.order.strict_pairs()) pairs.push_back({i, j});
    doc = json{{"classes", classes}, {"pairs", pairs}};
  });

  // ucrt
  auto* ucrt = app.add_subcommand("ucrt", "commutative quantales with a free element");
  ucrt->require_subcommand(1);
  std::string q_path, from, to, catalyst;
  auto ucrt_opts = [&](CLI::App* sub) {
    sub->add_option("quantale", q_path, "quantale file")->required();
    sub->add_option("--from", from, "comma-separated names")->required();
    sub->add_option("--to", to, "comma-separated names")->required();
  };
  auto* uord = ucrt->add_subcommand("order", "free (x) S contains T");
  ucrt_opts(uord);
  uord->callback([&] {
    auto q = io::quantale_from_json(io::read_file(q_path));
    if (!q.is_valid()) throw Error(ErrorKind::InvalidModule, "quantale fails its axioms");
    doc = json{{"convertible", ucrt_order(q, names_to_set(from, q.tables().names), names_to_set(to, q.tables().names))}};
  });
  auto* ucat = ucrt->add_subcommand("catalytic", "order after combining both sides with a catalyst");
  ucrt_opts(ucat);
  ucat->add_option("--catalyst", catalyst, "atom name")->required();
  ucat->callback([&] {
    auto q = io::quantale_from_json(io::read_file(q_path));
    if (!q.is_valid()) throw Error(ErrorKind::InvalidModule, "quantale fails its axioms");
    const auto& n = q.tables().names;
    doc = json{{"convertible", catalytic_order(q, q.index(catalyst), names_to_set(from, n), names_to_set(to, n))},
               {"plain", ucrt_order(q, names_to_set(from, n), names_to_set(to, n))}};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << "\n" << kSchemas << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "rthy: " << e.what() << "\n";
    return e.is_guard() ? 3 : 2;
  } catch (const UsageError& e) {
    std::cerr << "rthy: " << e.what() << "\n" << kSchemas << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rthy: internal error: " << e.what() << "\n";
    return 1;
  }

  if (format == "csv") {
    if (!points) {
      std::cerr << "rthy: --format csv applies only to zonotope and lorenz\n";
      return 2;
    }
    print_csv(*points);
    return 0;
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}
