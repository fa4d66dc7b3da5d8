// silverbig: construct designs, build intersection graphs, screen and decide
// silver colorings from the command line.
//
// Exit codes: 0 ok, 1 negative answer, 2 usage or input error, 3 budget
// exhausted.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "silverbig.hpp"

namespace fs = std::filesystem;
using namespace silverbig;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::uint64_t env_budget(std::uint64_t fallback) {
  const char *s = std::getenv("SILVERBIG_BUDGET");
  if (!s || !*s)
    return fallback;
  char *end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end || v == 0)
    throw ParameterError("SILVERBIG_BUDGET must be a positive integer");
  return v;
}

std::uint64_t budget_or(std::uint64_t flag, std::uint64_t fallback) {
  return flag ? flag : env_budget(fallback);
}

void print_set(std::ostream &os, const std::vector<int> &s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    os << (i ? " " : "") << s[i];
}

void print_certificate(const TripleCertificate &c) {
  std::cout << "  certificate b=(" << c.b1 << "," << c.b2 << "," << c.b3 << ") total " << c.total
            << " > " << c.num_colors << " colors\n";
}

// ---- make ----

struct MakeArgs {
  std::string family;
  int v = 0;
  int n = 0;
  std::string out;
};

int cmd_make(const MakeArgs &a) {
  const int size = a.v ? a.v : a.n;
  if (!size)
    throw ParameterError("give --v or --n");
  Design d;
  if (a.family == "sts-bose")
    d = make_sts(size, StsVariant::bose);
  else if (a.family == "sts-skolem")
    d = make_sts(size, StsVariant::skolem);
  else if (a.family == "sts13-cyclic")
    d = make_sts(size, StsVariant::cyclic13);
  else if (a.family == "sts13-noncyclic")
    d = make_sts(size, StsVariant::noncyclic13);
  else if (a.family == "kts")
    d = make_kts(size);
  else if (a.family == "ag")
    d = make_affine_plane(size);
  else if (a.family == "pg")
    d = make_projective_plane(size);
  io::save_design(a.out, d);
  std::cout << a.family << ": v=" << d.v << " k=" << d.k << " b=" << d.b() << " r=" << d.r();
  if (d.resolution)
    std::cout << " classes=" << d.resolution->classes.size();
  std::cout << " -> " << a.out << "\n";
  return exit_ok;
}

// ---- verify ----

int cmd_verify(const std::string &path) {
  auto d = io::load_design(path);
  auto rep = verify_design(d);
  std::cout << "v=" << d.v << " k=" << d.k << " lambda=" << d.lambda << " b=" << rep.b
            << " r=" << rep.r << "\n";
  std::cout << "pair coverage:";
  for (auto [times, pairs] : rep.pair_histogram)
    std::cout << " " << pairs << "x" << times;
  std::cout << "\n";
  if (d.resolution)
    std::cout << "resolution: " << d.resolution->classes.size() << " classes, "
              << (rep.resolution_ok ? "valid" : "INVALID") << "\n";
  for (const auto &p : rep.problems)
    std::cout << "problem: " << p << "\n";
  for (auto [x, y] : rep.violating_pairs)
    std::cout << "violating pair " << x << " " << y << "\n";
  std::cout << (rep.ok ? "ok" : "NOT a design") << "\n";
  return rep.ok ? exit_ok : exit_negative;
}

// ---- big ----

int cmd_big(const std::string &path, int i, const std::string &out) {
  auto g = build_big(io::load_design(path), i);
  io::save_graph(out, g);
  std::cout << i << "-BIG: " << g.order() << " vertices, " << g.edge_count() << " edges";
  if (auto r = g.regular_degree())
    std::cout << ", " << *r << "-regular";
  std::cout << " -> " << out << "\n";
  return exit_ok;
}

// ---- alpha ----

int cmd_alpha(const std::string &path, bool enumerate, std::uint64_t budget_flag) {
  auto g = io::load_graph(path);
  const auto budget = budget_or(budget_flag, default_search_budget);
  auto mis = max_independent_set(g, budget);
  std::cout << "alpha " << mis.vertices.size() << (mis.exact ? " exact" : " lower-bound") << "\n";
  std::cout << "set ";
  print_set(std::cout, mis.vertices);
  std::cout << "\n";
  if (!mis.exact)
    return exit_budget;
  if (enumerate) {
    auto sets = enumerate_alpha_sets(g, static_cast<int>(mis.vertices.size()), budget);
    std::cout << sets.sets.size() << " alpha-sets" << (sets.complete ? "" : " (incomplete)")
              << "\n";
    for (const auto &s : sets.sets) {
      print_set(std::cout, s);
      std::cout << "\n";
    }
    if (!sets.complete)
      return exit_budget;
  }
  return exit_ok;
}

// ---- screen ----

struct Facts {
  StructureFacts facts;
  bool complete = true;
};

// Parallel classes from the attached resolution when there is one, otherwise
// by exact cover; alpha of the relevant graph by exact search.
Facts gather_facts(const Design &d, int i, std::uint64_t budget) {
  Facts f;
  if (d.resolution && !d.resolution->classes.empty()) {
    f.facts.parallel_class = d.resolution->classes.front();
  } else {
    auto pc = find_parallel_class(d, ClassMode::full, budget);
    if (pc.status == SearchStatus::found)
      f.facts.parallel_class = pc.blocks;
    f.complete = f.complete && pc.status != SearchStatus::unknown;
  }
  auto npc = find_parallel_class(d, ClassMode::near, budget);
  if (npc.status == SearchStatus::found)
    f.facts.near_parallel_class = npc.blocks;
  f.complete = f.complete && npc.status != SearchStatus::unknown;
  auto mis = max_independent_set(build_big(d, i), budget);
  if (mis.exact)
    f.facts.alpha = static_cast<int>(mis.vertices.size());
  f.complete = f.complete && mis.exact;
  return f;
}

int cmd_screen(const std::string &path, int i, std::uint64_t budget_flag) {
  auto d = io::load_design(path);
  auto f = gather_facts(d, i, budget_or(budget_flag, default_search_budget));
  std::cout << "parallel class: " << (f.facts.parallel_class ? "yes" : "no")
            << ", near parallel class: " << (f.facts.near_parallel_class ? "yes" : "no")
            << ", alpha: "
            << (f.facts.alpha ? std::to_string(*f.facts.alpha) : std::string("unknown")) << "\n";
  auto verdicts = screen(d, i, f.facts);
  for (const auto &v : verdicts)
    std::cout << to_string(v.outcome) << " " << to_string(v.reason) << ": " << v.detail << "\n";
  if (!verdicts.empty())
    return exit_negative;
  std::cout << "no theorem applies\n";
  return f.complete ? exit_ok : exit_budget;
}

// ---- silver check ----

struct CheckArgs {
  std::string graph, design, coloring, alpha_set, certificate;
  int i = -1;
};

Graph graph_from(const std::string &graph, const std::string &design, int i) {
  if (!graph.empty())
    return io::load_graph(graph);
  if (design.empty() || i < 0)
    throw ParameterError("give --graph, or --design with --i");
  return build_big(io::load_design(design), i);
}

int cmd_check(const CheckArgs &a) {
  auto g = graph_from(a.graph, a.design, a.i);
  auto I = io::load_vertex_set(a.alpha_set);
  if (!a.certificate.empty()) {
    auto c = io::load_certificate(a.certificate);
    const bool ok = verify_certificate(g, I, c);
    std::cout << "certificate " << (ok ? "valid" : "INVALID") << "\n";
    return ok ? exit_ok : exit_negative;
  }
  if (a.coloring.empty())
    throw ParameterError("give --coloring or --certificate");
  auto c = io::load_coloring(a.coloring);
  const bool proper = is_proper(g, c);
  const bool silver = is_silver(g, c, I);
  std::cout << "proper: " << (proper ? "yes" : "no") << "\n";
  if (auto r = g.regular_degree(); r && *r + 1 == c.num_colors)
    std::cout << "rainbow vertices: " << rainbow_vertices(g, c).size() << " of " << g.order()
              << "\n";
  std::cout << (silver ? "silver" : "NOT silver") << " for the given set of " << I.size()
            << " vertices\n";
  return silver ? exit_ok : exit_negative;
}

// ---- silver decide ----

struct DecideArgs {
  std::string design, alpha_set, out;
  int i = 0;
  bool all_alpha = false;
  std::uint64_t budget = 0;
};

int report_verdict(const Verdict &v, const Graph &g, const fs::path &out) {
  std::cout << to_string(v.outcome);
  if (v.outcome == Outcome::not_silver)
    std::cout << " (" << to_string(v.reason) << ")";
  std::cout << ": " << v.detail << "\n";
  if (!out.empty())
    fs::create_directories(out);
  if (v.outcome == Outcome::silver) {
    std::cout << "alpha-set ";
    print_set(std::cout, v.alpha_set);
    std::cout << "\n";
    if (!out.empty()) {
      io::save_graph(out / "graph.txt", g);
      io::save_coloring(out / "coloring.txt", *v.coloring);
      io::save_vertex_set(out / "alpha.txt", v.alpha_set);
    }
    return exit_ok;
  }
  if (v.outcome == Outcome::unknown)
    return exit_budget;
  int certificates = 0;
  for (std::size_t s = 0; s < v.refutations.size(); ++s) {
    const auto &ref = v.refutations[s];
    std::cout << "alpha-set ";
    print_set(std::cout, ref.alpha_set);
    std::cout << ": unsat\n";
    if (ref.certificate) {
      ++certificates;
      print_certificate(*ref.certificate);
      if (!out.empty()) {
        io::save_vertex_set(out / ("alpha" + std::to_string(s) + ".txt"), ref.alpha_set);
        io::save_certificate(out / ("certificate" + std::to_string(s) + ".txt"), *ref.certificate);
      }
    }
  }
  std::cout << certificates << " certificates\n";
  return exit_negative;
}

int cmd_decide(const DecideArgs &a) {
  auto d = io::load_design(a.design);
  auto g = build_big(d, a.i);
  const auto budget = budget_or(a.budget, default_decider_budget);
  const fs::path out = a.out;
  if (a.all_alpha)
    return report_verdict(decide_silver_any(g, budget), g, out);
  if (a.alpha_set.empty())
    throw ParameterError("give --alpha-set <file> or --all-alpha");
  auto I = io::load_vertex_set(a.alpha_set);
  if (auto cert = find_triple_certificate(g, I)) {
    std::cout << "Unsat (certificate)\n";
    print_certificate(*cert);
    if (!out.empty()) {
      fs::create_directories(out);
      io::save_certificate(out / "certificate.txt", *cert);
    }
    return exit_negative;
  }
  DecideOptions opts;
  opts.budget = budget;
  auto r = decide_silver(g, I, opts);
  std::cout << to_string(r.decision) << " after " << r.steps << " steps\n";
  if (r.decision == Decision::sat) {
    if (!out.empty()) {
      fs::create_directories(out);
      io::save_graph(out / "graph.txt", g);
      io::save_coloring(out / "coloring.txt", *r.coloring);
      io::save_vertex_set(out / "alpha.txt", I);
    }
    return exit_ok;
  }
  return r.decision == Decision::unsat ? exit_negative : exit_budget;
}

// ---- silver construct ----

struct ConstructArgs {
  bool canonical = false, product = false;
  std::string design, rbibd, out;
  int i = -1;
  int plane = 0;
};

int cmd_construct(const ConstructArgs &a) {
  if (a.canonical == a.product)
    throw ParameterError("give exactly one of --canonical and --product");
  const fs::path out = a.out;
  fs::create_directories(out);
  if (a.canonical) {
    if (a.design.empty() || a.i < 0)
      throw ParameterError("--canonical needs --design and --i");
    auto d = io::load_design(a.design);
    auto c = construct_silver_canonical(d, a.i);
    if (!c) {
      std::cout << "no explicit construction for this design\n";
      return exit_negative;
    }
    auto g = build_big(d, a.i);
    if (!is_silver(g, c->coloring, c->alpha_set))
      throw std::logic_error("canonical coloring failed verification");
    io::save_design(out / "design.blk", d);
    io::save_graph(out / "graph.txt", g);
    io::save_coloring(out / "coloring.txt", c->coloring);
    io::save_vertex_set(out / "alpha.txt", c->alpha_set);
    std::cout << "silver " << a.i << "-BIG coloring with " << c->coloring.num_colors
              << " colors -> " << out.string() << "\n";
    return exit_ok;
  }
  if (a.rbibd.empty() || !a.plane)
    throw ParameterError("--product needs --plane and --rbibd");
  auto p = product_design(make_affine_plane(a.plane), io::load_design(a.rbibd));
  auto g = build_big(p.design, 1);
  if (!verify_design(p.design).ok || !is_silver(g, p.coloring, p.alpha_set))
    throw std::logic_error("product construction failed verification");
  io::save_design(out / "design.blk", p.design);
  io::save_graph(out / "graph.txt", g);
  io::save_coloring(out / "coloring.txt", p.coloring);
  io::save_vertex_set(out / "alpha.txt", p.alpha_set);
  io::write_file(out / "legend.txt", [&](std::ostream &os) {
    os << "# color a_block beta (a_block -1: shared color)\n";
    for (std::size_t c = 0; c < p.color_legend.size(); ++c)
      os << c << " " << p.color_legend[c].a_block << " " << p.color_legend[c].beta << "\n";
  });
  std::cout << "RBIBD(" << p.design.v << "," << p.design.k << ",1): " << p.design.b()
            << " blocks, " << p.design.resolution->classes.size() << " classes, "
            << p.coloring.num_colors << " colors -> " << out.string() << "\n";
  return exit_ok;
}

// ---- report ----

int cmd_report(const std::string &path, const std::string &out_flag, std::uint64_t budget_flag) {
  const auto t0 = std::chrono::steady_clock::now();
  auto d = io::load_design(path);
  const fs::path out = out_flag.empty() ? fs::path(path).replace_extension(".report") : fs::path(out_flag);
  fs::create_directories(out);
  auto rep = verify_design(d);
  std::cout << "design " << path << ": v=" << d.v << " k=" << d.k << " lambda=" << d.lambda
            << " b=" << d.b() << " r=" << d.r() << " " << (rep.ok ? "verified" : "NOT VERIFIED")
            << "\n";
  if (!rep.ok)
    return exit_negative;
  const auto search_budget = budget_or(budget_flag, default_search_budget);
  const auto decide_budget = budget_or(budget_flag, default_decider_budget);
  bool budget_hit = false;
  for (int i : {0, 1}) {
    auto g = build_big(d, i);
    const fs::path gpath = out / ("big" + std::to_string(i) + ".txt");
    io::save_graph(gpath, g);
    std::cout << "i=" << i << ": " << g.order() << " vertices, " << g.edge_count()
              << " edges -> " << gpath.string() << "\n";
    if (d.lambda == 1) {
      auto srg = verify_srg(g, expected_srg(d.v, d.k, i));
      std::cout << "  strongly regular as expected: " << (srg.ok ? "yes" : "NO") << "\n";
    }
    auto mis = max_independent_set(g, search_budget);
    std::cout << "  alpha " << mis.vertices.size() << (mis.exact ? " (exact)" : " (lower bound)")
              << "\n";
    if (auto c = construct_silver_canonical(d, i); c && is_silver(g, c->coloring, c->alpha_set)) {
      const fs::path cdir = out / ("silver" + std::to_string(i));
      fs::create_directories(cdir);
      io::save_coloring(cdir / "coloring.txt", c->coloring);
      io::save_vertex_set(cdir / "alpha.txt", c->alpha_set);
      std::cout << "  verdict Silver (explicit construction) -> " << cdir.string() << "\n";
      continue;
    }
    if (d.lambda == 1) {
      auto f = gather_facts(d, i, search_budget);
      auto vs = screen(d, i, f.facts);
      if (!vs.empty()) {
        for (const auto &v : vs)
          std::cout << "  verdict NotSilver (" << to_string(v.reason) << "): " << v.detail << "\n";
        continue;
      }
    }
    auto v = decide_silver_any(g, decide_budget);
    const fs::path vdir = out / ("decide" + std::to_string(i));
    std::cout << "  verdict ";
    std::cout.flush();
    const int code = report_verdict(v, g, vdir);
    budget_hit = budget_hit || code == exit_budget;
  }
  std::cout << "wall time "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
            << " s\n";
  return budget_hit ? exit_budget : exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Steiner designs, block intersection graphs and silver colorings"};
  app.require_subcommand(1);
  std::function<int()> action;

  MakeArgs make;
  auto *mk = app.add_subcommand("make", "construct a design");
  mk->add_option("--family", make.family, "design family")
      ->required()
      ->check(CLI::IsMember(
          {"sts-bose", "sts-skolem", "sts13-cyclic", "sts13-noncyclic", "kts", "ag", "pg"}));
  auto *vopt = mk->add_option("--v", make.v, "number of points");
  mk->add_option("--n", make.n, "plane order")->excludes(vopt);
  mk->add_option("-o,--output", make.out, "output .blk file")->required();
  mk->callback([&] { action = [&] { return cmd_make(make); }; });

  std::string verify_path;
  auto *ver = app.add_subcommand("verify", "check a design file");
  ver->add_option("design", verify_path)->required();
  ver->callback([&] { action = [&] { return cmd_verify(verify_path); }; });

  std::string big_path, big_out;
  int big_i = 0;
  auto *big = app.add_subcommand("big", "write the i-intersection graph");
  big->add_option("--i", big_i, "intersection size")->required();
  big->add_option("design", big_path)->required();
  big->add_option("-o,--output", big_out)->required();
  big->callback([&] { action = [&] { return cmd_big(big_path, big_i, big_out); }; });

  std::string alpha_path;
  bool alpha_enum = false;
  std::uint64_t alpha_budget = 0;
  auto *alp = app.add_subcommand("alpha", "independence number of a graph");
  alp->add_option("graph", alpha_path)->required();
  alp->add_flag("--enumerate", alpha_enum, "list every maximum independent set");
  alp->add_option("--budget", alpha_budget, "search node limit");
  alp->callback([&] { action = [&] { return cmd_alpha(alpha_path, alpha_enum, alpha_budget); }; });

  std::string screen_path;
  int screen_i = 1;
  std::uint64_t screen_budget = 0;
  auto *scr = app.add_subcommand("screen", "apply the non-silverness criteria");
  scr->add_option("--design", screen_path)->required();
  scr->add_option("--i", screen_i)->required()->check(CLI::Range(0, 1));
  scr->add_option("--budget", screen_budget);
  scr->callback([&] { action = [&] { return cmd_screen(screen_path, screen_i, screen_budget); }; });

  auto *silver = app.add_subcommand("silver", "silver colorings");
  silver->require_subcommand(1);

  CheckArgs check;
  auto *chk = silver->add_subcommand("check", "verify a coloring or certificate");
  chk->add_option("--graph", check.graph);
  chk->add_option("--design", check.design);
  chk->add_option("--i", check.i);
  chk->add_option("--coloring", check.coloring);
  chk->add_option("--alpha-set", check.alpha_set)->required();
  chk->add_option("--certificate", check.certificate);
  chk->callback([&] { action = [&] { return cmd_check(check); }; });

  DecideArgs dec;
  auto *dcd = silver->add_subcommand("decide", "decide silverness by search");
  dcd->add_option("--design", dec.design)->required();
  dcd->add_option("--i", dec.i)->required();
  auto *aset = dcd->add_option("--alpha-set", dec.alpha_set);
  dcd->add_flag("--all-alpha", dec.all_alpha)->excludes(aset);
  dcd->add_option("--budget", dec.budget);
  dcd->add_option("-o,--output", dec.out, "directory for colorings and certificates");
  dcd->callback([&] { action = [&] { return cmd_decide(dec); }; });

  ConstructArgs con;
  auto *cst = silver->add_subcommand("construct", "explicit silver colorings");
  cst->add_flag("--canonical", con.canonical);
  cst->add_flag("--product", con.product);
  cst->add_option("--design", con.design);
  cst->add_option("--i", con.i);
  cst->add_option("--plane", con.plane);
  cst->add_option("--rbibd", con.rbibd);
  cst->add_option("-o,--output", con.out)->required();
  cst->callback([&] { action = [&] { return cmd_construct(con); }; });

  std::string report_path, report_out;
  std::uint64_t report_budget = 0;
  auto *rpt = app.add_subcommand("report", "full pipeline on one design");
  rpt->add_option("design", report_path)->required();
  rpt->add_option("-o,--output", report_out, "artifact directory (default <design>.report)");
  rpt->add_option("--budget", report_budget);
  rpt->callback([&] {
    action = [&] { return cmd_report(report_path, report_out, report_budget); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }
  try {
    return action();
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParameterError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const fs::filesystem_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
