#ifndef PHI_ENGINE_HPP
#define PHI_ENGINE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phi/plane_graph.hpp"
#include "phi/series.hpp"

namespace phi {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParityViolation : EngineError {
    using EngineError::EngineError;
};
struct DecompositionMismatch : EngineError {
    using EngineError::EngineError;
};
struct Disconnected : EngineError {
    using EngineError::EngineError;
};
struct BoxTooLarge : EngineError {
    using EngineError::EngineError;
};
struct NegativeDiscriminant : EngineError {
    using EngineError::EngineError;
};

// Integer assignment: a on bounded faces (by face index), b on vertices.
// a_infinity = 0 is implicit; in reduced mode b_root = 0.
struct AdmissibleState {
    std::vector<long long> a;
    std::map<std::string, long long> b;
};

enum class Mode { reduced, unreduced };

// Finite enumeration box: every admissible state with weight
// (A+B)/2 <= N lies inside. Face windows additionally carry the quadratic
// cap |a_p + min_b(p)| <= quad_cap[p] from the completed-square form.
struct StateBounds {
    long long cap = 0;  // N
    std::map<std::string, std::pair<long long, long long>> b;
    std::vector<std::pair<long long, long long>> a;
    std::vector<long long> quad_cap;
};

// Per-depth enumeration counters for the b-vector search.
struct EngineStats {
    std::vector<long long> states;
    std::vector<long long> pruned;
    void merge(const EngineStats& o);
};

// A(a,b) = sum_p [l(p) a_p^2 + 2 a_p sum_{v in p} b_v] + 2 sum_{edges} b_v b_v'
// (edge sum over all edges of G, each once).
long long eval_A(const PlaneGraph& g, const AdmissibleState& s);

// B(a,b) = 2 sum_v b_v + sum_p (l(p)-2) a_p.
long long eval_B(const PlaneGraph& g, const AdmissibleState& s);

// The manifestly nonnegative terms of the completed-square form of A:
// per bounded face l(a+bbar)^2, 2(a+bbar)*sum(b-bbar), sum of cycle-edge
// products, then the outer-face term. Their sum must equal eval_A, else
// DecompositionMismatch.
std::vector<long long> eval_A_decomposed(const PlaneGraph& g, const AdmissibleState& s);

StateBounds propagate_bounds(const PlaneGraph& g, long long cap, Mode mode);

// floor((-c + sqrt(c^2 + 2d)) / 2), exact integer arithmetic.
long long u_bound(long long c, long long d);

// Phi_G(q) mod q^(N+1). Internally reduces, splits at bridges, and runs the
// pruned iterated summation per 2-edge-connected factor.
TruncatedSeries compute_phi(const PlaneGraph& g, int order, int jobs = 1, EngineStats* stats = nullptr);

// Phi^TQFT = Phi / (1-q).
TruncatedSeries compute_phi_tqft(const PlaneGraph& g, int order, int jobs = 1);

// Same sum without pinning the root's b to zero; equals compute_phi_tqft.
// Pre: g validated and 2-edge-connected.
TruncatedSeries compute_phi_unrooted(const PlaneGraph& g, int order);

// Brute force over the whole propagate_bounds box, admissibility and weight
// filtered, each state evaluated through eval_A/eval_B directly. Throws
// BoxTooLarge when the box volume exceeds max_box_points.
TruncatedSeries compute_phi_oracle(const PlaneGraph& g, int order, long long max_box_points = 2000000000LL);

// Phi_{L8a7} via an explicit iterated summation fixed for this one graph (nested b-windows, then
// the three a-windows through u_bound), multiplied by (q)_inf^8.
TruncatedSeries compute_phi_l8a7(int order);

// lhs: truncated evaluation of the S(b_{r-1}, 0) sum with b_{r-1} = b_last;
// rhs: (q)_inf^{-(r-1)} * h_r. The two agree for all b_last >= 0.
std::pair<TruncatedSeries, TruncatedSeries> verify_sbb(int r, long long b_last, int order);

}  // namespace phi

#endif
