#include "blowup/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "json.hpp"

#include "blowup/errors.hpp"
#include "blowup/generate.hpp"
#include "blowup/graph.hpp"
#include "blowup/iterate.hpp"
#include "blowup/oracle.hpp"

namespace blowup {
namespace cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

bool log_enabled() {
  const char* lvl = std::getenv("BLOWUP_LOG");
  return lvl && std::string(lvl) != "" && std::string(lvl) != "quiet";
}

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

struct PatternSpec {
  Graph pattern;
  std::string pipeline;  // triangle | clique | pattern
  int h = 0;
};

PatternSpec resolve_pattern(const std::string& name) {
  PatternSpec spec;
  if (name == "k3") {
    spec.pattern = complete_graph(3);
    spec.pipeline = "triangle";
    spec.h = 3;
    return spec;
  }
  if (name.rfind("kclique:", 0) == 0) {
    int h = 0;
    try {
      h = std::stoi(name.substr(8));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad pattern spec: " + name);
    }
    if (h < 3) fail(Errc::BadParams, "kclique pattern needs h >= 3");
    spec.pattern = complete_graph(h);
    spec.pipeline = h == 3 ? "triangle" : "clique";
    spec.h = h;
    return spec;
  }
  spec.pattern = read_edge_list_file(name);
  spec.pipeline = "pattern";
  spec.h = spec.pattern.n();
  return spec;
}

json pattern_json(const Graph& p) {
  json edges = json::array();
  for (int u = 0; u < p.n(); ++u)
    for (int v = p.neighbors(u).next(u); v >= 0; v = p.neighbors(u).next(v))
      edges.push_back({u, v});
  return json{{"n", p.n()}, {"edges", edges}};
}

json certificate_json(const BlowupCertificate& cert) {
  json classes = json::array();
  for (const auto& cls : cert.classes) classes.push_back(cls.to_vector());
  return json{{"t", cert.t}, {"degenerate", cert.degenerate}, {"classes", classes}};
}

json trace_json(const RunTrace& trace) {
  int advisory_failures = 0;
  for (const auto& s : trace.steps)
    if (!s.advisory_ok) ++advisory_failures;
  return json{{"steps", trace.steps.size()},
              {"partial", trace.partial},
              {"s_steps", trace.s_side},
              {"kst_t", trace.kst_t},
              {"advisory_failures", advisory_failures},
              {"note", trace.note}};
}

void write_full_trace(const std::string& path, const RunTrace& trace) {
  if (path.empty()) return;
  json steps = json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"step", s.step},
                     {"c_star", s.c_star},
                     {"part_sizes", s.part_sizes},
                     {"density", s.density},
                     {"log2_energy", double(s.log2_e)},
                     {"balanced_exact", s.balanced_exact},
                     {"advisory_ok", s.advisory_ok}});
  json out{{"steps", steps}, {"partial", trace.partial}, {"note", trace.note}};
  std::ofstream f(path);
  f << out.dump(2) << "\n";
}

int code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError: return 1;
    case Errc::NotEnoughCliques: return 2;
    default: return 3;
  }
}

}  // namespace

int cmd_gen(const std::string& kind, int n, double param, const std::vector<int>& part_sizes,
            uint64_t seed, const std::string& out_path, std::ostream& err) {
  try {
    Graph g;
    if (kind == "gnp") {
      g = gen_gnp(n, param, seed);
    } else if (kind == "multipartite") {
      if (part_sizes.empty()) fail(Errc::BadParams, "multipartite needs part sizes");
      g = gen_multipartite(part_sizes, param, seed);
    } else if (kind == "hard") {
      g = gen_hard(n, param, seed);
    } else {
      fail(Errc::BadParams, "unknown generator kind: " + kind);
    }
    write_edge_list_file(out_path, g);
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return code_for(e);
  }
}

int cmd_find(const std::string& in_path, const FindOptions& opt, std::ostream& out,
             std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  json report{{"schema", 1}, {"version", kVersion}};
  try {
    Graph g = read_edge_list_file(in_path);
    PatternSpec spec = resolve_pattern(opt.pattern);
    report["input"] = json{{"file", in_path}, {"n", g.n()}, {"seed", opt.seed}};
    report["pattern"] = pattern_json(spec.pattern);
    report["pipeline"] = spec.pipeline;

    double nh = std::pow(double(g.n()), spec.h);
    double gamma_labeled =
        opt.gamma ? *opt.gamma
                  : (nh > 0 ? double(count_labeled_copies(g, spec.pattern)) / nh : 0.0);
    report["gamma_labeled"] = gamma_labeled;
    report["gamma_unlabeled"] = gamma_labeled / factorial(spec.h);

    RunTrace trace;
    BlowupCertificate cert;
    if (spec.pipeline == "triangle") {
      cert = find_triangle_blowup(g, gamma_labeled, opt.seed, &trace);
    } else if (spec.pipeline == "clique") {
      cert = find_clique_blowup(g, spec.h, gamma_labeled, opt.seed, &trace);
    } else {
      cert = find_h_blowup(g, spec.pattern, gamma_labeled, opt.seed, &trace);
    }
    if (!verify_blowup(g, cert)) fail(Errc::PreconditionFailed, "emitted certificate is invalid");

    report["order_t"] = cert.t;
    report["certificate"] = certificate_json(cert);
    report["trace"] = trace_json(trace);
    write_full_trace(opt.trace_path, trace);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report["wall_ms"] = ms;
    out << report.dump(2) << "\n";
    if (log_enabled()) err << "find: order " << cert.t << " (" << trace.note << ")\n";
    return 0;
  } catch (const Error& e) {
    report["error"] = json{{"code", errc_name(e.code())}, {"message", e.what()}};
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report["wall_ms"] = ms;
    out << report.dump(2) << "\n";
    err << e.what() << "\n";
    return code_for(e);
  }
}

int cmd_verify(const std::string& in_path, const std::string& report_path, std::ostream& err) {
  try {
    Graph g = read_edge_list_file(in_path);
    std::ifstream f(report_path);
    if (!f) fail(Errc::ParseError, "cannot open " + report_path);
    json report;
    try {
      f >> report;
    } catch (const json::exception& e) {
      fail(Errc::ParseError, std::string("bad report JSON: ") + e.what());
    }
    if (!report.contains("certificate")) fail(Errc::ParseError, "report has no certificate");

    BlowupCertificate cert;
    const json& pj = report.at("pattern");
    cert.pattern = Graph(pj.at("n").get<int>());
    for (const auto& e : pj.at("edges")) cert.pattern.add_edge(e.at(0), e.at(1));
    const json& cj = report.at("certificate");
    cert.t = cj.at("t").get<int>();
    cert.degenerate = cj.value("degenerate", cert.t == 0);
    for (const auto& cls : cj.at("classes")) {
      VertexSet s(g.n());
      for (int v : cls) {
        if (v < 0 || v >= g.n()) fail(Errc::ParseError, "class vertex out of range");
        s.set(v);
      }
      cert.classes.push_back(s);
    }
    if (cert.t == 0) {
      err << "warning: certificate is empty (t = 0); vacuously valid\n";
      return 0;
    }
    if (verify_blowup(g, cert)) return 0;
    err << "certificate does not verify against " << in_path << "\n";
    return 3;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return code_for(e);
  }
}

int cmd_sweep(const std::vector<SweepCell>& grid, const std::vector<uint64_t>& seeds,
              const std::string& out_csv, std::ostream& err) {
  if (grid.empty() || seeds.empty()) {
    err << "BadParams: sweep needs a nonempty grid and seed list\n";
    return 3;
  }
  std::vector<SweepCell> cells = grid;
  std::sort(cells.begin(), cells.end(), [](const SweepCell& a, const SweepCell& b) {
    return a.n != b.n ? a.n < b.n : a.p < b.p;
  });
  std::vector<uint64_t> sorted_seeds = seeds;
  std::sort(sorted_seeds.begin(), sorted_seeds.end());

  std::ofstream out(out_csv);
  if (!out) {
    err << "ParseError: cannot open " << out_csv << " for writing\n";
    return 1;
  }
  out << kSweepHeader << "\n";
  for (const auto& cell : cells) {
    for (uint64_t seed : sorted_seeds) {
      Graph g = gen_gnp(cell.n, cell.p, seed);
      double n3 = std::pow(double(cell.n), 3);
      double gamma = n3 > 0 ? double(count_labeled_copies(g, complete_graph(3))) / n3 : 0;
      RunTrace trace;
      int order = 0;
      std::string pipeline = "triangle";
      try {
        BlowupCertificate cert = find_triangle_blowup(g, gamma, seed, &trace);
        order = cert.t;
      } catch (const Error& e) {
        pipeline = std::string("failed:") + errc_name(e.code());
      }
      int advisory_failures = 0;
      for (const auto& s : trace.steps)
        if (!s.advisory_ok) ++advisory_failures;
      out << cell.n << "," << seed << "," << gamma << "," << pipeline << "," << order << ","
          << trace.s_side << "," << trace.kst_t << "," << trace.steps.size() << ","
          << advisory_failures << "\n";
      if (log_enabled())
        err << "sweep n=" << cell.n << " seed=" << seed << " order=" << order << "\n";
    }
  }
  return 0;
}

int cmd_oracle(const std::string& in_path, const std::string& pattern, std::ostream& out,
               std::ostream& err) {
  try {
    Graph g = read_edge_list_file(in_path);
    PatternSpec spec = resolve_pattern(pattern);
    BlowupCertificate best = oracle::max_blowup_bruteforce(g, spec.pattern);
    json report{{"schema", 1},
                {"version", kVersion},
                {"input", json{{"file", in_path}, {"n", g.n()}}},
                {"pattern", pattern_json(spec.pattern)},
                {"order_t", best.t},
                {"certificate", certificate_json(best)}};
    out << report.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return code_for(e);
  }
}

}  // namespace cli
}  // namespace blowup
