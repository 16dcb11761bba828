#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dwalk/graph.hpp"
#include "dwalk/linalg.hpp"

namespace dwalk {

// Throughout, the d-support of a graph is the set of pairs at distance
// exactly d: the diagonal for d = 0 and unordered pairs i < j otherwise.
// A_0 is the identity and m(0) = n.

enum class Verdict { Regular, NotRegular, Inconclusive };
enum class Criterion { Window, Schur, Exponential };

const char* to_string(Verdict v) noexcept;
const char* to_string(Criterion c) noexcept;

/// Two pairs of the d-support whose length-k walk counts differ.
struct Witness {
  Vertex i, j;
  Vertex i2, j2;
  std::size_t k;
  Integer count_ij;
  Integer count_i2j2;
};

struct DWalkReport {
  std::size_t d = 0;
  Verdict verdict = Verdict::Inconclusive;
  Criterion criterion = Criterion::Window;
  std::size_t k_low = 0;
  std::size_t k_high = 0;
  /// Common walk count on the d-support for each examined k.
  std::map<std::size_t, Integer> f_values;
  std::optional<Witness> witness;
  std::vector<std::string> notes;

  // Exponential criterion only: the common truncated value (when all
  // supported entries agree), its certified error, and the order used.
  std::optional<Rational> scalar;
  std::optional<Rational> tail_bound;
  std::optional<std::size_t> truncation;
};

/// The support matrix A_d (identity for d = 0) and its pairs, after checking
/// connectivity, range and non-emptiness.
struct DistanceClass {
  std::size_t d;
  IntMatrix indicator;
  std::vector<Edge> pairs;
  /// Number of ordered entries of A_d: 2 m(d) for d >= 1 and n for d = 0.
  std::size_t weight;
};

DistanceClass distance_class(const Graph& g, const DistanceMatrix& dist, std::size_t d);

// ---------------------------------------------------------------- oracle

inline constexpr std::size_t kOracleMaxOrder = 12;
inline constexpr std::size_t kOracleMaxLength = 10;

/// Number of length-k walks from i to j by explicit depth-first enumeration.
/// Throws OracleTooLarge beyond n <= 12, k <= 10.
Integer walk_count_oracle(const Graph& g, Vertex i, Vertex j, std::size_t k);

/// table[k][j] = number of length-k walks from i to j for k <= k_max, from a
/// single enumeration of the walk tree rooted at i.
std::vector<std::vector<Integer>> walk_count_oracle_table(const Graph& g, Vertex i,
                                                          std::size_t k_max);

// ---------------------------------------------------------------- criteria

/// Authoritative classifier: walk counts on the d-support are compared for
/// every k in [d, n + d - 1].
DWalkReport check_window(const Graph& g, std::size_t d);

/// Same comparison over [d, k_high]; used to confirm that the window above
/// is long enough.
DWalkReport check_window_range(const Graph& g, std::size_t d, std::size_t k_high);

/// tr(A_d A^k) divided by the support weight (2 m(d), or n when d = 0).
Rational f_trace(const Graph& g, std::size_t d, std::size_t k);

/// Tests A^k o A_d = c(k) A_d for k in [1, n + d - 1], with c(k) taken from
/// sum(A^k o A_d) over the support weight.
DWalkReport check_schur(const Graph& g, std::size_t d);

inline constexpr std::size_t kKroneckerMaxOrder = 40;

struct KroneckerStep {
  std::size_t k;
  Rational c;           // sum(A^k (x) A_d) / (2 n m(d))
  bool identity_holds;  // A^k (x) A_d == c (A_d (x) A_d)
};

/// Experimental probe of the Kronecker form of the Schur criterion, read
/// literally. Never used to classify.
struct KroneckerProbe {
  std::size_t d = 0;
  std::vector<KroneckerStep> steps;  // k in [1, n - 1]
  bool all_hold = false;
  Verdict schur_verdict = Verdict::Inconclusive;
  bool agrees_with_schur = false;
};

KroneckerProbe check_kronecker(const Graph& g, std::size_t d);

/// Entries of the truncated exponential on the d-support, separated with a
/// certified tail bound. NOT_REGULAR only when the spread exceeds twice the
/// bound; REGULAR only when the spread is zero and check_window agrees.
DWalkReport check_exponential(const Graph& g, std::size_t d, std::size_t order);

/// Default truncation order max(30, 2 R) for max row sum R.
std::size_t default_truncation(const Graph& g);

/// Starts at `order` (0 picks the default) and doubles up to 120 while the
/// result stays INCONCLUSIVE.
DWalkReport check_exponential_auto(const Graph& g, std::size_t d, std::size_t order = 0);

// ---------------------------------------------------------------- algebra

struct PowerDecomposition {
  /// Common value of A^k on the d-support, if there is one.
  std::optional<Integer> f;
  /// A^k - f A_d when f exists (zero on the support), else A^k.
  IntMatrix remainder;
};

PowerDecomposition decompose_power(const Graph& g, std::size_t d, std::size_t k);

struct WalkFunction {
  std::size_t d = 0;
  std::map<std::size_t, Integer> values;
  IntPolynomial recurrence;
};

/// f_d over the window, with the characteristic polynomial of A attached.
/// Throws NotWalkRegular if the graph is not d-walk regular.
WalkFunction walk_function(const Graph& g, std::size_t d);

/// Extends f by f(N) = -(p_{n-1} f(N-1) + ... + p_0 f(N-n)). Needs the n
/// consecutive values ending at the largest stored index.
Integer extend_f_recurrence(const WalkFunction& wf, const IntPolynomial& p, std::size_t k);

// ---------------------------------------------------------------- complete graphs

/// Walks of length 2j+1 between adjacent vertices of K_N: ((N-1)^{2j+1} + 1) / N.
Integer odd_walks_complete(std::size_t n_complete, std::size_t j);

/// True iff every edge carries exactly odd_walks_complete(N, j) walks of
/// length 2j+1 for 1 <= j <= j_max (0 selects 2n).
bool is_unfolded_complete(const Graph& g, std::size_t n_complete, std::size_t j_max = 0);

// ---------------------------------------------------------------- consequences

struct ScalingCheck {
  std::size_t k = 0;
  Integer c;
  IntPolynomial distance_poly;  // char poly of A_d, coefficients a_i
  IntPolynomial schur_poly;     // char poly of A^k o A_d, coefficients b_i
  bool holds = false;           // b_i = a_i c^{n-i} for all i
  bool printed_law_holds = false;  // b_i = a_i c^i for 1 <= i <= n
};

/// Characteristic polynomial of A^k o A_d against that of A_d. Throws
/// NotWalkRegular unless the graph is d-walk regular.
ScalingCheck check_charpoly_scaling(const Graph& g, std::size_t d, std::size_t k);

struct Prop5Result {
  bool g_regular = false;
  bool gd_regular = false;
  bool zero_walk_regular = false;
  /// d = 0: G is regular. d > 0: 0-walk regular iff G_d regular.
  bool consistent = false;
};

Prop5Result check_prop5(const Graph& g, std::size_t d);

/// 0-walk regularity through vertex-deleted subgraphs: true iff every
/// G \ {i} has the same characteristic polynomial.
bool godsil_mckay_check(const Graph& g);

struct Prop6Result {
  bool one_walk_regular = false;
  bool line_zero_walk_regular = false;
  bool edge_deleted_polys_equal = false;
  bool consistent = false;
};

/// Throws NotRegularGraph unless g is regular.
Prop6Result check_prop6(const Graph& g);

struct Classification {
  std::vector<DWalkReport> reports;  // d = 0 .. diameter
  bool distance_regular = false;
  /// Largest D such that every d <= D is REGULAR, if d = 0 is.
  std::optional<std::size_t> regular_up_to;
};

Classification classify(const Graph& g);

}  // namespace dwalk
