#include "k2t/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "k2t/errors.hpp"
#include "k2t/minor.hpp"
#include "k2t/records.hpp"
#include "k2t/spectral.hpp"

namespace k2t {

namespace {

AuditCheck inapplicable(std::string id, std::string name, std::string why) {
  AuditCheck c;
  c.id = std::move(id);
  c.name = std::move(name);
  c.detail = std::move(why);
  return c;
}

AuditCheck evaluated(std::string id, std::string name, double lhs, double rhs, double tol, std::string detail) {
  AuditCheck c;
  c.id = std::move(id);
  c.name = std::move(name);
  c.applicable = true;
  c.lhs = lhs;
  c.rhs = rhs;
  c.pass = lhs <= rhs + tol;
  c.detail = std::move(detail);
  return c;
}

VertexId top_entry(const std::vector<double>& x) {
  const double top = *std::max_element(x.begin(), x.end());
  for (std::size_t v = 0; v < x.size(); ++v)
    if (x[v] >= top - 1e-9) return static_cast<VertexId>(v);
  return 0;
}

}  // namespace

bool AuditReport::all_applicable_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return !c.applicable || c.pass; });
}

AuditReport audit(const Graph& g, int t) {
  if (t < 2) throw DomainError("audit: need t >= 2");
  const std::size_t n = g.order();
  const double nd = static_cast<double>(n);
  const double td = static_cast<double>(t);
  AuditReport report;

  const bool connected = n > 0 && is_connected(g);
  const bool subgraph_free = !k2t_subgraph_test(g, t);
  const std::string no_subgraph = "graph contains K_{2," + std::to_string(t) + "} as a subgraph";

  std::optional<SpectralResult> spec;
  if (n > 0) spec = connected ? perron_vector(g) : spectral_radius(g);

  // C1
  if (subgraph_free) {
    const auto worst = static_cast<double>(max_common_neighbors(g));
    report.checks.push_back(evaluated("C1", "two-walks", worst, td - 1, 0.0, "max common neighbors over pairs"));
  } else {
    report.checks.push_back(inapplicable("C1", "two-walks", no_subgraph));
  }

  // C2
  if (subgraph_free && n >= 2) {
    const VertexId v1 = max_degree_vertex(g);
    double worst = -1.0;
    VertexId arg = v1;
    for (VertexId u = 0; u < n; ++u) {
      if (u == v1) continue;
      const auto sum = static_cast<double>(g.degree(u) + g.degree(v1));
      if (sum > worst) {
        worst = sum;
        arg = u;
      }
    }
    report.checks.push_back(evaluated("C2", "degree-sum", worst, nd + td - 1, 0.0,
                                      "v1=" + std::to_string(v1) + " worst u=" + std::to_string(arg)));
  } else {
    report.checks.push_back(
        inapplicable("C2", "degree-sum", subgraph_free ? "fewer than two vertices" : no_subgraph));
  }

  // C3 and C4 need the Perron vector.
  if (subgraph_free && connected) {
    const auto& x = *spec->vector;
    const double mu = spec->mu;
    double worst_slack = -INFINITY;
    double lhs = 0.0;
    double rhs = 0.0;
    VertexId arg = 0;
    for (VertexId u = 0; u < n; ++u) {
      const double bound = mu * mu + td - 1 - (td - 1) * std::sqrt(nd) / x[u];
      const auto deg = static_cast<double>(g.degree(u));
      if (bound - deg > worst_slack) {
        worst_slack = bound - deg;
        lhs = bound;
        rhs = deg;
        arg = u;
      }
    }
    report.checks.push_back(evaluated("C3", "degree lower bound", lhs, rhs, kAuditNumericTolerance,
                                      "worst u=" + std::to_string(arg)));

    if (mu * mu > nd - 1 && n >= 2) {
      const VertexId top = top_entry(x);
      double worst = -INFINITY;
      VertexId worst_u = top;
      for (VertexId u = 0; u < n; ++u) {
        if (u != top && x[u] > worst) {
          worst = x[u];
          worst_u = u;
        }
      }
      report.checks.push_back(evaluated("C4", "entry bound", worst, 2 * (td - 1) / std::sqrt(nd),
                                        kAuditNumericTolerance,
                                        "top entry at " + std::to_string(top) + ", worst u=" + std::to_string(worst_u)));
    } else {
      report.checks.push_back(inapplicable("C4", "entry bound", "mu^2 <= n-1"));
    }
  } else {
    const std::string why = subgraph_free ? "graph is disconnected" : no_subgraph;
    report.checks.push_back(inapplicable("C3", "degree lower bound", why));
    report.checks.push_back(inapplicable("C4", "entry bound", why));
  }

  // C5
  const bool minor_free = k2t_minor_test(g, t).verdict == Verdict::absent;
  if (minor_free) {
    report.checks.push_back(evaluated("C5", "edge bound", 2.0 * static_cast<double>(g.size()),
                                      (td + 1) * (nd - 1), 0.0, "2|E| vs (t+1)(n-1)"));
  } else {
    report.checks.push_back(inapplicable("C5", "edge bound", "graph has a K_{2,t} minor"));
  }

  // C6
  const auto hub = n > 0 ? dominating_vertex(g) : std::nullopt;
  bool low_degrees = hub.has_value();
  if (hub) {
    for (VertexId u = 0; u < n; ++u)
      if (u != *hub && g.degree(u) > static_cast<std::size_t>(t)) low_degrees = false;
  }
  if (low_degrees) {
    const double mu = spec->mu;
    report.checks.push_back(evaluated("C6", "quadratic relation", mu * (mu - td + 1), nd - 1,
                                      kAuditNumericTolerance, "hub=" + std::to_string(*hub)));
  } else {
    report.checks.push_back(inapplicable("C6", "quadratic relation",
                                         hub ? "a non-hub vertex has degree > t" : "no dominating vertex"));
  }

  // C7
  if (hub && minor_free) {
    const Graph rest = remove_vertex(g, *hub);
    const Graph star = star_graph(static_cast<std::size_t>(t) + 1);
    const long long extra = static_cast<long long>(t) * (t - 3) / 2;
    bool any = false;
    double worst_slack = -INFINITY;
    double lhs = 0.0;
    double rhs = 0.0;
    std::size_t checked = 0;
    for (const auto& comp : components(rest)) {
      const Graph h = induced_subgraph(rest, comp);
      if (has_minor(h, star).present()) continue;
      any = true;
      ++checked;
      const auto e = static_cast<double>(h.size());
      const double cap = static_cast<double>(static_cast<long long>(h.order()) + extra);
      if (e - cap > worst_slack) {
        worst_slack = e - cap;
        lhs = e;
        rhs = cap;
      }
    }
    if (any) {
      report.checks.push_back(evaluated("C7", "component edge cap", lhs, rhs, 0.0,
                                        std::to_string(checked) + " K_{1,t}-minor-free components"));
    } else {
      report.checks.push_back(
          inapplicable("C7", "component edge cap", "every component of g - v1 has a K_{1,t} minor"));
    }
  } else {
    report.checks.push_back(inapplicable("C7", "component edge cap",
                                         hub ? "graph has a K_{2,t} minor" : "no dominating vertex"));
  }
  return report;
}

bool verify_equality_structure(const Graph& g, int t) {
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError("verify_equality_structure: graph is disconnected");
  const auto hub = dominating_vertex(g);
  if (!hub) throw PreconditionError("verify_equality_structure: no dominating vertex");
  const Graph rest = remove_vertex(g, *hub);
  if (rest.order() == 0) return false;
  const auto tt = static_cast<std::size_t>(t);
  for (const auto& comp : components(rest)) {
    if (comp.size() != tt) return false;
    if (induced_subgraph(rest, comp).size() != tt * (tt - 1) / 2) return false;
  }
  return true;
}

bool lemma1_hub_check(const Graph& g, [[maybe_unused]] int t) {
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError("lemma1_hub_check: graph is disconnected");
  const auto result = perron_vector(g);
  const VertexId top = top_entry(*result.vector);
  return g.degree(top) + 1 == g.order();
}

std::string to_jsonl(const AuditReport& report, std::string_view graph6) {
  std::string out;
  for (const AuditCheck& c : report.checks) {
    nlohmann::ordered_json j;
    if (!graph6.empty()) j["graph6"] = graph6;
    j["check"] = c.id;
    j["name"] = c.name;
    j["applicable"] = c.applicable;
    j["pass"] = c.pass;
    j["lhs"] = round_significant(c.lhs);
    j["rhs"] = round_significant(c.rhs);
    j["detail"] = c.detail;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string to_table(const AuditReport& report) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-4s %-20s %-6s %-20s %-20s %s\n", "id", "check", "result", "lhs", "rhs",
                "detail");
  os << line;
  for (const AuditCheck& c : report.checks) {
    const char* result = !c.applicable ? "n/a" : (c.pass ? "pass" : "FAIL");
    const std::string lhs = c.applicable ? format_real(c.lhs) : "-";
    const std::string rhs = c.applicable ? format_real(c.rhs) : "-";
    std::snprintf(line, sizeof line, "%-4s %-20s %-6s %-20s %-20s %s\n", c.id.c_str(), c.name.c_str(), result,
                  lhs.c_str(), rhs.c_str(), c.detail.c_str());
    os << line;
  }
  return os.str();
}

}  // namespace k2t
