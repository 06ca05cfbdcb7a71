#pragma once

#include "listcrit/alon_tarsi.hpp"
#include "listcrit/gallai.hpp"
#include "listcrit/graph.hpp"
#include "listcrit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace listcrit {

enum class Sense { ge, le, eq };

struct AuditReport {
  std::string id;
  Rational lhs, rhs;
  Sense sense = Sense::le;
  bool pass = false;
  std::string note;
};

/// How AT-/OC-irreducibility of the audit subject was established.
enum class IrreducibilityEvidence { asserted, certified_by_search, implied_by_criticality };
std::string evidence_name(IrreducibilityEvidence e);

/// Bipartite graph with one part Y and the other the components of g - Y;
/// y ~ T iff some neighbor of y lies in a K_{k-1} of T.
struct ComponentBipartite {
  std::vector<int> y;
  std::vector<std::vector<int>> components;      // vertex lists, sorted
  std::vector<std::vector<int>> adjacency;       // adjacency[i] = component indices tied to y[i]
  int y_degree(size_t i) const { return static_cast<int>(adjacency[i].size()); }
};
ComponentBipartite build_component_bipartite(const Graph& g, const std::vector<int>& y, int k,
                                             const SearchLimits& limits = {});

/// The auxiliary bipartite graph F from the q-bound argument. Part B is the
/// set of degree-k vertices; part A is A1 (components of L containing K_{k-1})
/// plus degree-one stubs A2 (one per L'-to-B edge) and A3 (d_H(y) per y in B).
struct AuxiliaryBipartite {
  int k = 0;
  std::vector<int> b;                           // V(H^-)
  std::vector<std::vector<int>> d_components;   // A1, vertex lists in g
  int a2_size = 0;
  int a3_size = 0;
  Graph f_graph;  // nodes: [0,|B|) = B, then A1, then A2 stubs, then A3 stubs
  std::vector<int> b_f_degree;

  // Bookkeeping for the counting step.
  long long edges_h_l = 0;          // ||H, L||
  long long edges_hplus_l = 0;      // ||H+, L||
  long long edges_hplus_lprime = 0; // ||H+, L'||
  int q = 0;
  bool l_gallai_no_kk = false;  // L is a Gallai forest with no K_k component

  /// |A2| equals this exactly whenever l_gallai_no_kk holds.
  long long a2_identity() const { return edges_h_l - q - edges_hplus_lprime; }
  /// The coarser bookkeeping form ||H,L|| - q(L); an upper bound for |A2|
  /// under l_gallai_no_kk, and exact when no L' vertex meets H+.
  long long a2_upper() const { return edges_h_l - q; }
};
AuxiliaryBipartite build_auxiliary_f(const Graph& g, int k, const SearchLimits& limits = {});

struct QAuditResult {
  AuditReport basic;                  // q <= c* + 4|H^-| + ||H+, L||
  AuditReport strong;                 // q <= 2c* + 3|H^-| + ||H+, L|| (stated for k >= 7)
  bool violated = false;
  std::optional<ReducibleConfiguration> extracted;  // certified configuration, when small enough
  std::vector<int> extraction_candidate;            // vertices of a configuration to certify
  std::string extraction_note;
  IrreducibilityEvidence evidence = IrreducibilityEvidence::asserted;
};

/// Audits the two upper bounds on q(L). Requires k >= 5, min degree k-1, and
/// a non-complete graph. On violation the auxiliary-graph pipeline extracts a
/// reducible configuration and certifies it by is_f_at within the guards
/// (beyond them the candidate is reported unverified).
QAuditResult audit_q_bounds(const Graph& g, int k,
                            IrreducibilityEvidence evidence = IrreducibilityEvidence::asserted,
                            const SearchLimits& limits = {});

/// beta(L) <= (2/lambda)||H|| + (2||G|| - (k-2)|G| - (k/2 + (k-1)/lambda)|H| - 1)/(k-1)
/// for 2 <= lambda <= 6(k-1)/k. Requires min degree k-1.
AuditReport audit_beta_bound(const Graph& g, int k, const Rational& lambda,
                             const SearchLimits& limits = {});

/// 2||G|| >= (k-2)|G| + mic(G) + 1. Requires min degree k-1.
AuditReport audit_kernel_magic(const Graph& g, int k,
                               IrreducibilityEvidence evidence = IrreducibilityEvidence::asserted,
                               const SearchLimits& limits = {});

/// alpha(G) >= (2/3)|G| - (1/3)||G||, plus the sharper
/// alpha(G) >= (2/3)|G| - (1/4)||G|| - 1/3. Requires connected input.
std::pair<AuditReport, AuditReport> check_alpha_bound(const Graph& g,
                                                      const SearchLimits& limits = {});

/// The four degree-counting relations (three inequalities and one identity)
/// over the degree partition. Requires min degree >= k-1.
std::vector<AuditReport> audit_counting_identities(const Graph& g, int k);

/// Everything at once, as run by `check-graph`: criticality oracle where the
/// guards allow, the q/beta/kernel-magic/counting/alpha audits, and the
/// average-degree comparison against the registered bound.
struct GraphAuditResult {
  int k = 0;
  int order = 0, size = 0;
  Rational average_degree;
  bool min_degree_ok = false;   // min degree == k-1
  bool complete = false;
  std::optional<bool> critical;  // nullopt when beyond the chromatic guard
  IrreducibilityEvidence evidence = IrreducibilityEvidence::asserted;
  LStats l;
  std::vector<AuditReport> reports;
  std::optional<QAuditResult> q_audit;
  std::optional<Rational> bound_excess;  // best known bound for this k
  bool average_degree_ok = true;         // d(G) >= bound, when applicable
  bool pass = true;
};
GraphAuditResult check_graph_audit(const Graph& g, int k,
                                   const std::optional<Rational>& lambda = std::nullopt,
                                   const SearchLimits& limits = {});

}  // namespace listcrit
