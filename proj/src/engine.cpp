#include "phi/engine.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

namespace phi {

void EngineStats::merge(const EngineStats& o) {
    if (states.size() < o.states.size()) states.resize(o.states.size(), 0);
    if (pruned.size() < o.pruned.size()) pruned.resize(o.pruned.size(), 0);
    for (size_t i = 0; i < o.states.size(); ++i) states[i] += o.states[i];
    for (size_t i = 0; i < o.pruned.size(); ++i) pruned[i] += o.pruned[i];
}

namespace {

struct IndexedGraph {
    int nv = 0;
    std::vector<std::string> names;
    std::map<std::string, int> index;
    int root = 0;
    std::vector<std::vector<int>> faces;               // bounded face cycles
    std::vector<std::pair<int, int>> edges;            // distinct undirected edges
    std::vector<std::array<int, 3>> outer_inc;         // (u, v, multiplicity on outer face)
    std::vector<char> on_outer;                        // per vertex
    std::vector<std::vector<int>> vfaces;              // bounded faces containing vertex
};

IndexedGraph index_graph(const PlaneGraph& g) {
    IndexedGraph ig;
    ig.nv = static_cast<int>(g.vertices.size());
    ig.names = g.vertices;
    for (int i = 0; i < ig.nv; ++i) ig.index[g.vertices[i]] = i;
    ig.root = ig.index.at(g.root);
    ig.vfaces.resize(static_cast<size_t>(ig.nv));
    for (const auto& f : g.bounded_faces) {
        std::vector<int> fi;
        for (const auto& v : f) fi.push_back(ig.index.at(v));
        int fid = static_cast<int>(ig.faces.size());
        for (int v : fi) ig.vfaces[static_cast<size_t>(v)].push_back(fid);
        ig.faces.push_back(std::move(fi));
    }
    std::map<std::pair<int, int>, int> bounded_count;
    for (const auto& f : ig.faces) {
        size_t n = f.size();
        for (size_t i = 0; i < n; ++i) {
            int u = f[i], v = f[(i + 1) % n];
            bounded_count[std::minmax(u, v)] += 1;
        }
    }
    for (const auto& [e, n] : edge_incidences(g)) {
        (void)n;
        int u = ig.index.at(e.first), v = ig.index.at(e.second);
        auto key = std::minmax(u, v);
        ig.edges.push_back(key);
        int bc = bounded_count.count(key) ? bounded_count[key] : 0;
        int oc = 2 - bc;
        if (oc < 0) throw EdgeIncidenceError(g.name + ": edge on more than two bounded faces");
        if (oc > 0) ig.outer_inc.push_back({key.first, key.second, oc});
    }
    ig.on_outer.assign(static_cast<size_t>(ig.nv), 0);
    for (const auto& v : g.outer_face) ig.on_outer[static_cast<size_t>(ig.index.at(v))] = 1;
    return ig;
}

std::vector<long long> state_b_values(const IndexedGraph& ig, const AdmissibleState& s,
                                      const PlaneGraph& g) {
    std::vector<long long> b(static_cast<size_t>(ig.nv), 0);
    for (const auto& [name, val] : s.b) {
        auto it = ig.index.find(name);
        if (it == ig.index.end()) throw EngineError(g.name + ": state names unknown vertex '" + name + "'");
        b[static_cast<size_t>(it->second)] = val;
    }
    return b;
}

long long isqrt_floor(long long m) {
    if (m < 0) throw NegativeDiscriminant("isqrt of negative value");
    long long r = static_cast<long long>(std::max(0.0, std::sqrt(static_cast<double>(m)))) ;
    while (r > 0 && r * r > m) --r;
    while ((r + 1) * (r + 1) <= m) ++r;
    return r;
}

long long floordiv2(long long t) { return t >= 0 ? t / 2 : -((-t + 1) / 2); }

// Largest x with 2x^2 + 2c*x <= d, where d is given doubled (d2 = 2d).
long long u_bound_doubled(long long c, long long d2) {
    long long disc = c * c + d2;
    if (disc < 0) throw NegativeDiscriminant("u_bound: c^2 + 2d < 0");
    return floordiv2(-c + isqrt_floor(disc));
}

// Largest x >= 0 with 2x^2 + c*x <= d (d doubled as d2 = 2d); -1 if none.
long long quad_window_max(long long c, long long d2) {
    long long disc = c * c + 4 * d2;
    if (disc < 0) return -1;
    long long t = -c + isqrt_floor(disc);
    return t >= 0 ? t / 4 : -((-t + 3) / 4);
}

}  // namespace

long long u_bound(long long c, long long d) { return u_bound_doubled(c, 2 * d); }

long long eval_A(const PlaneGraph& g, const AdmissibleState& s) {
    IndexedGraph ig = index_graph(g);
    auto b = state_b_values(ig, s, g);
    if (s.a.size() != ig.faces.size()) throw EngineError(g.name + ": state has wrong face count");
    long long A = 0;
    for (size_t p = 0; p < ig.faces.size(); ++p) {
        long long l = static_cast<long long>(ig.faces[p].size());
        long long sigma = 0;
        for (int v : ig.faces[p]) sigma += b[static_cast<size_t>(v)];
        A += l * s.a[p] * s.a[p] + 2 * s.a[p] * sigma;
    }
    for (const auto& [u, v] : ig.edges) A += 2 * b[static_cast<size_t>(u)] * b[static_cast<size_t>(v)];
    return A;
}

long long eval_B(const PlaneGraph& g, const AdmissibleState& s) {
    IndexedGraph ig = index_graph(g);
    auto b = state_b_values(ig, s, g);
    if (s.a.size() != ig.faces.size()) throw EngineError(g.name + ": state has wrong face count");
    long long B = 0;
    for (long long bv : b) B += 2 * bv;
    for (size_t p = 0; p < ig.faces.size(); ++p)
        B += (static_cast<long long>(ig.faces[p].size()) - 2) * s.a[p];
    return B;
}

std::vector<long long> eval_A_decomposed(const PlaneGraph& g, const AdmissibleState& s) {
    IndexedGraph ig = index_graph(g);
    auto b = state_b_values(ig, s, g);
    std::vector<long long> terms;
    long long total = 0;
    for (size_t p = 0; p < ig.faces.size(); ++p) {
        const auto& f = ig.faces[p];
        long long l = static_cast<long long>(f.size());
        long long bbar = b[static_cast<size_t>(f[0])];
        for (int v : f) bbar = std::min(bbar, b[static_cast<size_t>(v)]);
        long long x = s.a[p] + bbar;
        long long sdiff = 0;
        for (int v : f) sdiff += b[static_cast<size_t>(v)] - bbar;
        long long tau = 0;
        for (size_t i = 0; i < f.size(); ++i) {
            long long d1 = b[static_cast<size_t>(f[i])] - bbar;
            long long d2 = b[static_cast<size_t>(f[(i + 1) % f.size()])] - bbar;
            tau += d1 * d2;
        }
        terms.push_back(l * x * x);
        terms.push_back(2 * x * sdiff);
        terms.push_back(tau);
        total += l * x * x + 2 * x * sdiff + tau;
    }
    long long outer = 0;
    for (const auto& [u, v, m] : ig.outer_inc)
        outer += static_cast<long long>(m) * b[static_cast<size_t>(u)] * b[static_cast<size_t>(v)];
    terms.push_back(outer);
    total += outer;
    if (total != eval_A(g, s))
        throw DecompositionMismatch(g.name + ": completed-square terms do not sum to A");
    return terms;
}

StateBounds propagate_bounds(const PlaneGraph& g, long long cap, Mode mode) {
    IndexedGraph ig = index_graph(g);
    StateBounds sb;
    sb.cap = cap;
    long long two_n = 2 * cap;

    size_t nf = ig.faces.size();
    std::vector<char> bknown(static_cast<size_t>(ig.nv), 0), aknown(nf, 0);
    std::vector<std::pair<long long, long long>> bw(static_cast<size_t>(ig.nv)), aw(nf);

    auto tighten = [](std::pair<long long, long long>& w, char& known, long long lo, long long hi) {
        if (!known) {
            w = {lo, hi};
            known = 1;
            return true;
        }
        long long nlo = std::max(w.first, lo), nhi = std::min(w.second, hi);
        if (nlo == w.first && nhi == w.second) return false;
        w = {nlo, nhi};
        return true;
    };

    if (mode == Mode::reduced) {
        tighten(bw[static_cast<size_t>(ig.root)], bknown[static_cast<size_t>(ig.root)], 0, 0);
    } else {
        for (int v = 0; v < ig.nv; ++v)
            if (ig.on_outer[static_cast<size_t>(v)])
                tighten(bw[static_cast<size_t>(v)], bknown[static_cast<size_t>(v)], 0, two_n);
    }
    if (nf == 0) {
        // Only P_2-shaped inputs land here; B = 2*sum(b) <= 2N pins everything.
        for (int v = 0; v < ig.nv; ++v)
            tighten(bw[static_cast<size_t>(v)], bknown[static_cast<size_t>(v)], 0, two_n);
    }

    // a_p + b_v in [0, 2N] at every bounded incidence, to a fixpoint.
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 1000) {
        changed = false;
        for (size_t p = 0; p < nf; ++p) {
            for (int v : ig.faces[p]) {
                if (!bknown[static_cast<size_t>(v)]) continue;
                const auto& w = bw[static_cast<size_t>(v)];
                changed |= tighten(aw[p], aknown[p], -w.second, two_n - w.first);
            }
        }
        for (int v = 0; v < ig.nv; ++v) {
            for (int p : ig.vfaces[static_cast<size_t>(v)]) {
                if (!aknown[static_cast<size_t>(p)]) continue;
                const auto& w = aw[static_cast<size_t>(p)];
                changed |= tighten(bw[static_cast<size_t>(v)], bknown[static_cast<size_t>(v)],
                                   -w.second, two_n - w.first);
            }
        }
    }
    for (int v = 0; v < ig.nv; ++v)
        if (!bknown[static_cast<size_t>(v)])
            throw Disconnected(g.name + ": bound propagation never reached vertex '" +
                               ig.names[static_cast<size_t>(v)] + "'");
    for (size_t p = 0; p < nf; ++p)
        if (!aknown[p]) throw Disconnected(g.name + ": bound propagation never reached a face");

    // Quadratic refinement: l(p) * (a_p + min_b(p))^2 <= A <= 2N.
    for (size_t p = 0; p < nf; ++p) {
        long long l = static_cast<long long>(ig.faces[p].size());
        long long k = 0;
        while (l * (k + 1) * (k + 1) <= two_n) ++k;
        sb.quad_cap.push_back(k);
        long long blo = bw[static_cast<size_t>(ig.faces[p][0])].first;
        long long bhi = bw[static_cast<size_t>(ig.faces[p][0])].second;
        for (int v : ig.faces[p]) {
            blo = std::min(blo, bw[static_cast<size_t>(v)].first);
            bhi = std::min(bhi, bw[static_cast<size_t>(v)].second);
        }
        aw[p].first = std::max(aw[p].first, -k - bhi);
        aw[p].second = std::min(aw[p].second, k - blo);
    }

    for (int v = 0; v < ig.nv; ++v) sb.b[ig.names[static_cast<size_t>(v)]] = bw[static_cast<size_t>(v)];
    sb.a = aw;
    return sb;
}

namespace {

// Shared inverse-Pochhammer table: inv_poch[k] = 1/(q)_k mod q^(N+1),
// with (q)_k = (q)_N for k >= N.
struct PochTable {
    int N;
    std::vector<TruncatedSeries> inv;
    explicit PochTable(int order) : N(order) {
        TruncatedSeries p = TruncatedSeries::one(order);
        inv.push_back(p.inverted());
        for (int k = 1; k <= order; ++k) {
            TruncatedSeries next(order);
            for (int j = 0; j <= order; ++j) {
                BigInt v = p.coeff(j);
                if (j >= k) v -= p.coeff(j - k);
                next.set_coeff(j, std::move(v));
            }
            p = std::move(next);
            inv.push_back(p.inverted());
        }
    }
    const TruncatedSeries& operator[](long long k) const {
        return inv[static_cast<size_t>(std::min<long long>(k, N))];
    }
};

// Pruned iterated summation over one 2-edge-connected factor.
class FactorSummation {
public:
    FactorSummation(const PlaneGraph& g, int order, Mode mode, const PochTable& poch)
        : g_(g), ig_(index_graph(g)), N_(order), two_n_(2LL * order), mode_(mode), poch_(poch) {
        box_ = propagate_bounds(g, order, mode);
        build_order();
        nf_ = ig_.faces.size();
        face_len_.resize(nf_);
        face_sigma_.resize(nf_, 0);
        for (size_t p = 0; p < nf_; ++p) face_len_[p] = static_cast<long long>(ig_.faces[p].size());
        bval_.assign(static_cast<size_t>(ig_.nv), 0);
        face_dec_count_.assign(nf_, 0);
        face_min_dec_.assign(nf_, 0);
        face_max_dec_.assign(nf_, 0);
        box_blo_.resize(static_cast<size_t>(ig_.nv));
        box_bhi_.resize(static_cast<size_t>(ig_.nv));
        for (int v = 0; v < ig_.nv; ++v) {
            auto w = box_.b.at(ig_.names[static_cast<size_t>(v)]);
            box_blo_[static_cast<size_t>(v)] = w.first;
            box_bhi_[static_cast<size_t>(v)] = w.second;
        }
        // Outer products/faces become "ready" at the depth setting their last vertex.
        pos_.assign(static_cast<size_t>(ig_.nv), 0);
        for (size_t d = 0; d < ord_.size(); ++d) pos_[static_cast<size_t>(ord_[d])] = static_cast<int>(d);
        outer_ready_.resize(ord_.size());
        for (const auto& [u, v, m] : ig_.outer_inc)
            outer_ready_[static_cast<size_t>(std::max(pos_[static_cast<size_t>(u)], pos_[static_cast<size_t>(v)]))]
                .push_back({u, v, m});
        faces_ready_.resize(ord_.size());
        for (size_t p = 0; p < nf_; ++p) {
            int last = 0;
            for (int v : ig_.faces[p]) last = std::max(last, pos_[static_cast<size_t>(v)]);
            faces_ready_[static_cast<size_t>(last)].push_back(static_cast<int>(p));
        }
        stats_.states.assign(ord_.size(), 0);
        stats_.pruned.assign(ord_.size(), 0);
    }

    // Runs the b-vector search; at the partition depth only value indexes
    // congruent to worker_id mod workers are taken, so partial sums from
    // different workers add up to the full sum.
    TruncatedSeries run(int workers, int worker_id) {
        acc_ = TruncatedSeries::zero(N_);
        workers_ = std::max(1, workers);
        worker_id_ = worker_id;
        partition_depth_ = (mode_ == Mode::reduced && ord_.size() > 1) ? 1 : 0;
        dfs(0);
        return acc_;
    }

    const EngineStats& stats() const { return stats_; }

private:
    void build_order() {
        std::vector<char> placed(static_cast<size_t>(ig_.nv), 0);
        auto place = [&](int v) {
            if (!placed[static_cast<size_t>(v)]) {
                placed[static_cast<size_t>(v)] = 1;
                ord_.push_back(v);
            }
        };
        place(ig_.root);
        // Outer walk order starting after the root, most constrained first.
        std::vector<int> walk;
        for (const auto& nm : g_.outer_face) walk.push_back(ig_.index.at(nm));
        auto rit = std::find(walk.begin(), walk.end(), ig_.root);
        std::rotate(walk.begin(), rit, walk.end());
        for (int v : walk) place(v);
        // Interior vertices layer by layer over shared bounded faces, ties by name.
        while (ord_.size() < static_cast<size_t>(ig_.nv)) {
            std::set<std::string> frontier;
            for (int v : ord_)
                for (int p : ig_.vfaces[static_cast<size_t>(v)])
                    for (int w : ig_.faces[static_cast<size_t>(p)])
                        if (!placed[static_cast<size_t>(w)]) frontier.insert(ig_.names[static_cast<size_t>(w)]);
            if (frontier.empty()) {
                for (int v = 0; v < ig_.nv; ++v) place(v);
                break;
            }
            place(ig_.index.at(*frontier.begin()));
        }
    }

    std::pair<long long, long long> window(int v) const {
        long long lo = box_blo_[static_cast<size_t>(v)];
        long long hi = box_bhi_[static_cast<size_t>(v)];
        if (ig_.on_outer[static_cast<size_t>(v)]) {
            lo = std::max(lo, 0LL);
            hi = std::min(hi, two_n_);
        }
        for (int p : ig_.vfaces[static_cast<size_t>(v)]) {
            if (face_dec_count_[static_cast<size_t>(p)] == 0) continue;
            lo = std::max(lo, face_max_dec_[static_cast<size_t>(p)] - two_n_);
            hi = std::min(hi, two_n_ + face_min_dec_[static_cast<size_t>(p)]);
        }
        return {lo, hi};
    }

    long long undecided_lower(int v) const {
        long long lo = box_blo_[static_cast<size_t>(v)];
        if (ig_.on_outer[static_cast<size_t>(v)]) lo = std::max(lo, 0LL);
        for (int p : ig_.vfaces[static_cast<size_t>(v)])
            if (face_dec_count_[static_cast<size_t>(p)] > 0)
                lo = std::max(lo, face_max_dec_[static_cast<size_t>(p)] - two_n_);
        return lo;
    }

    long long undecided_upper(int v) const {
        long long hi = box_bhi_[static_cast<size_t>(v)];
        if (ig_.on_outer[static_cast<size_t>(v)]) hi = std::min(hi, two_n_);
        for (int p : ig_.vfaces[static_cast<size_t>(v)])
            if (face_dec_count_[static_cast<size_t>(p)] > 0)
                hi = std::min(hi, two_n_ + face_min_dec_[static_cast<size_t>(p)]);
        return hi;
    }

    // Doubled lower bound for A+B over all completions of the current prefix:
    // decided nonnegative completed-square pieces, plus interval floors for
    // the linear part. Sound for every admissible state below this node.
    long long prefix_bound2(size_t depth) const {
        long long r = quad_partial2_;  // tau of full faces + outer products (doubled share is 1:1)
        long long linear = sum_dec_;
        for (size_t d = depth; d < ord_.size(); ++d) linear += undecided_lower(ord_[d]);
        r += 2 * linear;
        for (size_t p = 0; p < nf_; ++p) {
            long long ub;
            if (face_dec_count_[p] > 0) {
                ub = face_min_dec_[p];
            } else {
                ub = std::numeric_limits<long long>::max();
                for (int v : ig_.faces[p]) ub = std::min(ub, undecided_upper(v));
            }
            r -= (face_len_[p] - 2) * ub;
        }
        return r;
    }

    void assign(int v, long long val) {
        bval_[static_cast<size_t>(v)] = val;
        sum_dec_ += val;
        for (int p : ig_.vfaces[static_cast<size_t>(v)]) {
            auto up = static_cast<size_t>(p);
            if (face_dec_count_[up] == 0) {
                face_min_dec_[up] = face_max_dec_[up] = val;
            } else {
                face_min_dec_[up] = std::min(face_min_dec_[up], val);
                face_max_dec_[up] = std::max(face_max_dec_[up], val);
            }
            ++face_dec_count_[up];
            face_sigma_[up] += val;
        }
    }

    void unassign(int v, long long val, const std::vector<long long>& saved_min,
                  const std::vector<long long>& saved_max) {
        sum_dec_ -= val;
        for (int p : ig_.vfaces[static_cast<size_t>(v)]) {
            auto up = static_cast<size_t>(p);
            --face_dec_count_[up];
            face_sigma_[up] -= val;
            face_min_dec_[up] = saved_min[up];
            face_max_dec_[up] = saved_max[up];
        }
    }

    void dfs(size_t depth) {
        if (depth == ord_.size()) {
            leaf();
            return;
        }
        int v = ord_[depth];
        auto [lo, hi] = window(v);
        bool last = depth + 1 == ord_.size();
        long long index = 0;
        for (long long val = lo; val <= hi; ++val, ++index) {
            if (depth == partition_depth_ && workers_ > 1 && (index % workers_) != worker_id_) continue;
            if (depth >= partition_depth_ || worker_id_ == 0) ++stats_.states[depth];
            auto saved_min = face_min_dec_;
            auto saved_max = face_max_dec_;
            long long saved_quad = quad_partial2_;
            assign(v, val);
            if (last) {
                // The exact leaf gate subsumes the prefix bound here.
                leaf();
            } else {
                for (const auto& [u, w, m] : outer_ready_[depth])
                    quad_partial2_ += static_cast<long long>(m) * bval_[static_cast<size_t>(u)] *
                                      bval_[static_cast<size_t>(w)];
                for (int p : faces_ready_[depth]) quad_partial2_ += face_tau(static_cast<size_t>(p));
                if (prefix_bound2(depth + 1) > two_n_) {
                    ++stats_.pruned[depth];
                } else {
                    dfs(depth + 1);
                }
            }
            quad_partial2_ = saved_quad;
            unassign(v, val, saved_min, saved_max);
        }
    }

    long long face_bbar(size_t p) const {
        long long m = bval_[static_cast<size_t>(ig_.faces[p][0])];
        for (int v : ig_.faces[p]) m = std::min(m, bval_[static_cast<size_t>(v)]);
        return m;
    }

    long long face_tau(size_t p) const {
        const auto& f = ig_.faces[p];
        long long bbar = face_bbar(p);
        long long tau = 0;
        for (size_t i = 0; i < f.size(); ++i)
            tau += (bval_[static_cast<size_t>(f[i])] - bbar) *
                   (bval_[static_cast<size_t>(f[(i + 1) % f.size()])] - bbar);
        return tau;
    }

    void leaf() {
        // Exact minimal weight over a: E(b) + sum_p g_p(-bbar_p), doubled.
        long long E = 0;
        for (const auto& [u, v] : ig_.edges)
            E += bval_[static_cast<size_t>(u)] * bval_[static_cast<size_t>(v)];
        for (int v = 0; v < ig_.nv; ++v) E += bval_[static_cast<size_t>(v)];
        long long L2 = 2 * E;
        for (size_t p = 0; p < nf_; ++p) {
            long long bbar = face_bbar(p);
            L2 += face_len_[p] * bbar * bbar - 2 * bbar * face_sigma_[p] - (face_len_[p] - 2) * bbar;
        }
        if (L2 % 2 != 0)
            throw ParityViolation(g_.name + ": state with odd A+B encountered");
        long long L = L2 / 2;
        if (L > N_) {
            if (!ord_.empty()) ++stats_.pruned[ord_.size() - 1];
            return;
        }
        if ((leaf_counter_++ & 63) == 0) sampled_invariants();

        int M = static_cast<int>(N_ - L);
        TruncatedSeries term = TruncatedSeries::one(M);
        for (int v = 0; v < ig_.nv; ++v)
            if (ig_.on_outer[static_cast<size_t>(v)] && bval_[static_cast<size_t>(v)] > 0)
                term = mul_trunc(term, poch_[bval_[static_cast<size_t>(v)]], M);
        for (size_t p = 0; p < nf_; ++p) term = mul_trunc(term, face_series(p, M), M);
        acc_.add_shifted(term, static_cast<int>(L));
    }

    const TruncatedSeries& face_series(size_t p, int M) {
        const auto& f = ig_.faces[p];
        long long l = face_len_[p];
        long long bbar = face_bbar(p);
        std::vector<long long> diffs;
        for (int v : ig_.faces[p]) diffs.push_back(bval_[static_cast<size_t>(v)] - bbar);
        std::sort(diffs.begin(), diffs.end());
        int parity = (l % 2 != 0) ? static_cast<int>(((bbar % 2) + 2) % 2) : 0;
        std::string key;
        key.reserve(32);
        key += std::to_string(l);
        key += '|';
        key += std::to_string(parity);
        key += '|';
        key += std::to_string(M);
        for (long long d : diffs) {
            key += ',';
            key += std::to_string(d);
        }
        auto it = face_memo_.find(key);
        if (it != face_memo_.end()) return it->second;

        long long sdiff = 0;
        for (long long d : diffs) sdiff += d;
        TruncatedSeries F(M);
        for (long long x = 0;; ++x) {
            long long delta2 = l * x * x + x * (2 * sdiff + l - 2);
            if (delta2 > 2 * M) break;
            assert(delta2 % 2 == 0);
            int delta = static_cast<int>(delta2 / 2);
            TruncatedSeries prod = TruncatedSeries::one(M - delta);
            for (long long d : diffs)
                if (x + d > 0) prod = mul_trunc(prod, poch_[x + d], M - delta);
            bool negative = (l % 2 != 0) && (((x + parity) % 2) != 0);
            if (negative) prod = -prod;
            F.add_shifted(prod, delta);
        }
        (void)f;
        return face_memo_.emplace(std::move(key), std::move(F)).first->second;
    }

    void sampled_invariants() {
        AdmissibleState s;
        s.b.clear();
        for (int v = 0; v < ig_.nv; ++v)
            s.b[ig_.names[static_cast<size_t>(v)]] = bval_[static_cast<size_t>(v)];
        for (size_t p = 0; p < nf_; ++p) s.a.push_back(-face_bbar(p));
        for (long long t : eval_A_decomposed(g_, s))
            if (t < 0) throw DecompositionMismatch(g_.name + ": negative completed-square term");
        long long B = eval_B(g_, s);
        for (size_t p = 0; p < nf_; ++p)
            for (int v : ig_.faces[p])
                if (B < s.a[p] + bval_[static_cast<size_t>(v)])
                    throw EngineError(g_.name + ": B >= a_p + b_v violated; bounds unsound");
    }

    const PlaneGraph& g_;
    IndexedGraph ig_;
    int N_;
    long long two_n_;
    Mode mode_;
    const PochTable& poch_;
    StateBounds box_;
    std::vector<int> ord_;
    std::vector<int> pos_;
    size_t nf_ = 0;
    std::vector<long long> face_len_, face_sigma_;
    std::vector<long long> bval_;
    std::vector<long long> box_blo_, box_bhi_;
    std::vector<int> face_dec_count_;
    std::vector<long long> face_min_dec_, face_max_dec_;
    std::vector<std::vector<std::array<int, 3>>> outer_ready_;
    std::vector<std::vector<int>> faces_ready_;
    long long quad_partial2_ = 0;  // doubled tau/outer partial (enters A once, B never)
    long long sum_dec_ = 0;
    size_t partition_depth_ = 0;
    int workers_ = 1, worker_id_ = 0;
    unsigned leaf_counter_ = 0;
    TruncatedSeries acc_ = TruncatedSeries::zero(0);
    EngineStats stats_;
    std::unordered_map<std::string, TruncatedSeries> face_memo_;
};

TruncatedSeries factor_phi(const PlaneGraph& f, int order, Mode mode, int jobs, const PochTable& poch,
                           EngineStats* stats) {
    int workers = std::max(1, jobs);
    std::vector<TruncatedSeries> parts;
    std::vector<EngineStats> part_stats(static_cast<size_t>(workers));
    parts.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) parts.push_back(TruncatedSeries::zero(order));
    if (workers == 1) {
        FactorSummation fs(f, order, mode, poch);
        parts[0] = fs.run(1, 0);
        part_stats[0] = fs.stats();
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    FactorSummation fs(f, order, mode, poch);
                    parts[static_cast<size_t>(w)] = fs.run(workers, w);
                    part_stats[static_cast<size_t>(w)] = fs.stats();
                } catch (...) {
                    errors[static_cast<size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    TruncatedSeries sum = TruncatedSeries::zero(order);
    for (const auto& p : parts) sum = add(sum, p);
    if (stats)
        for (const auto& ps : part_stats) stats->merge(ps);
    long long c2 = static_cast<long long>(edge_list(f).size());
    TruncatedSeries euler_pow = euler_infinity(order).pow(static_cast<int>(c2));
    return mul(euler_pow, sum);
}

}  // namespace

TruncatedSeries compute_phi(const PlaneGraph& g, int order, int jobs, EngineStats* stats) {
    PlaneGraph r = reduce(g);  // validates; also accepts loop/parallel-edge presentations
    auto factors = split_bridges(r);
    PochTable poch(order);
    TruncatedSeries result = TruncatedSeries::one(order);
    for (const auto& f : factors) result = mul(result, factor_phi(f, order, Mode::reduced, jobs, poch, stats));
    return result;
}

TruncatedSeries compute_phi_tqft(const PlaneGraph& g, int order, int jobs) {
    TruncatedSeries phi = compute_phi(g, order, jobs);
    TruncatedSeries one_minus_q = TruncatedSeries::one(order);
    one_minus_q.set_coeff(1, BigInt(-1));
    return mul(phi, one_minus_q.inverted());
}

TruncatedSeries compute_phi_unrooted(const PlaneGraph& g, int order) {
    PlaneGraph v = validate(g);
    PochTable poch(order);
    return factor_phi(v, order, Mode::unreduced, 1, poch, nullptr);
}

namespace {

class OracleSummation {
public:
    OracleSummation(const PlaneGraph& g, int order, const PochTable& poch)
        : g_(g), ig_(index_graph(g)), N_(order), poch_(poch) {
        box_ = propagate_bounds(g, order, Mode::reduced);
        // Same vertex order as the engine: root, outer walk, interior.
        std::vector<char> placed(static_cast<size_t>(ig_.nv), 0);
        auto place = [&](int v) {
            if (!placed[static_cast<size_t>(v)]) {
                placed[static_cast<size_t>(v)] = 1;
                ord_.push_back(v);
            }
        };
        place(ig_.root);
        for (const auto& nm : g.outer_face) place(ig_.index.at(nm));
        for (int v = 0; v < ig_.nv; ++v) place(v);
        bval_.assign(static_cast<size_t>(ig_.nv), 0);
        aval_.assign(ig_.faces.size(), 0);
    }

    long long volume() const {
        long long vol = 1;
        for (int v : ord_) {
            auto w = bwindow(v);
            long long size = std::max(0LL, w.second - w.first + 1);
            if (size == 0) return 0;
            if (vol > (1LL << 62) / size) return 1LL << 62;
            vol *= size;
        }
        for (size_t p = 0; p < ig_.faces.size(); ++p) {
            long long size = box_.quad_cap[p] + 1;
            if (vol > (1LL << 62) / size) return 1LL << 62;
            vol *= size;
        }
        return vol;
    }

    TruncatedSeries run() {
        acc_ = TruncatedSeries::zero(N_);
        enumerate_b(0);
        long long c2 = static_cast<long long>(ig_.edges.size());
        return mul(euler_infinity(N_).pow(static_cast<int>(c2)), acc_);
    }

private:
    std::pair<long long, long long> bwindow(int v) const {
        auto w = box_.b.at(ig_.names[static_cast<size_t>(v)]);
        if (ig_.on_outer[static_cast<size_t>(v)]) w.first = std::max(w.first, 0LL);
        return w;
    }

    void enumerate_b(size_t depth) {
        if (depth == ord_.size()) {
            edge_sum_ = 0;
            for (const auto& [u, v] : ig_.edges)
                edge_sum_ += bval_[static_cast<size_t>(u)] * bval_[static_cast<size_t>(v)];
            b_sum_ = 0;
            for (int v = 0; v < ig_.nv; ++v) b_sum_ += bval_[static_cast<size_t>(v)];
            enumerate_a(0, 0, 0);
            return;
        }
        int v = ord_[depth];
        auto [lo, hi] = bwindow(v);
        for (long long val = lo; val <= hi; ++val) {
            bval_[static_cast<size_t>(v)] = val;
            enumerate_b(depth + 1);
        }
    }

    void enumerate_a(size_t p, long long a_faces, long long b_faces) {
        if (p == ig_.faces.size()) {
            long long A = a_faces + 2 * edge_sum_;
            long long B = b_faces + 2 * b_sum_;
            long long w2 = A + B;
            if (w2 % 2 != 0) throw ParityViolation(g_.name + ": admissible state with odd A+B");
            long long w = w2 / 2;
            if (w > N_ || w < 0) return;
            int M = static_cast<int>(N_ - w);
            TruncatedSeries term = TruncatedSeries::one(M);
            for (size_t q = 0; q < ig_.faces.size(); ++q)
                for (int v : ig_.faces[q]) {
                    long long k = aval_[q] + bval_[static_cast<size_t>(v)];
                    if (k > 0) term = mul_trunc(term, poch_[k], M);
                }
            for (int v = 0; v < ig_.nv; ++v)
                if (ig_.on_outer[static_cast<size_t>(v)] && bval_[static_cast<size_t>(v)] > 0)
                    term = mul_trunc(term, poch_[bval_[static_cast<size_t>(v)]], M);
            if (B % 2 != 0) term = -term;
            acc_.add_shifted(term, static_cast<int>(w));
            return;
        }
        const auto& f = ig_.faces[p];
        long long l = static_cast<long long>(f.size());
        long long bbar = bval_[static_cast<size_t>(f[0])];
        long long sigma = 0;
        for (int v : f) {
            bbar = std::min(bbar, bval_[static_cast<size_t>(v)]);
            sigma += bval_[static_cast<size_t>(v)];
        }
        long long lo = std::max(box_.a[p].first, -bbar);
        long long hi = std::min(box_.a[p].second, -bbar + box_.quad_cap[p]);
        for (long long a = lo; a <= hi; ++a) {
            aval_[p] = a;
            enumerate_a(p + 1, a_faces + l * a * a + 2 * a * sigma, b_faces + (l - 2) * a);
        }
    }

    const PlaneGraph& g_;
    IndexedGraph ig_;
    int N_;
    const PochTable& poch_;
    StateBounds box_;
    std::vector<int> ord_;
    std::vector<long long> bval_, aval_;
    long long edge_sum_ = 0, b_sum_ = 0;
    TruncatedSeries acc_ = TruncatedSeries::zero(0);
};

}  // namespace

TruncatedSeries compute_phi_oracle(const PlaneGraph& g, int order, long long max_box_points) {
    PlaneGraph r = reduce(g);
    auto factors = split_bridges(r);
    PochTable poch(order);
    TruncatedSeries result = TruncatedSeries::one(order);
    for (const auto& f : factors) {
        OracleSummation os(f, order, poch);
        long long vol = os.volume();
        if (vol > max_box_points)
            throw BoxTooLarge(f.name + ": oracle box has " + std::to_string(vol) +
                              " points (budget " + std::to_string(max_box_points) + ")");
        result = mul(result, os.run());
    }
    return result;
}

TruncatedSeries compute_phi_l8a7(int order) {
    const long long N = order;
    PochTable poch(static_cast<int>(N));
    TruncatedSeries acc = TruncatedSeries::zero(order);
    const long long b1 = 0;
    for (long long b2 = 0; b2 <= N; ++b2)
        for (long long b3 = 0; b3 + b2 <= N; ++b3)
            for (long long b4 = 0; b2 + b3 + b4 <= N; ++b4) {
                long long R = N - b2 - b3 - b4;
                for (long long b5 = -2 * R; b5 <= 2 * R; ++b5)
                    for (long long b6 = -4 * R; b6 <= 4 * R; ++b6) {
                        long long bb1 = std::min(std::min(b1, b4), std::min(b5, b6));
                        long long bb2 = std::min(std::min(b3, b4), std::min(b5, b6));
                        long long bb3 = std::min(std::min(b1, b2), std::min(b3, b6));
                        long long bt1 = b1 + b4 + b5 + b6 - 4 * bb1;
                        long long bt2 = b3 + b4 + b5 + b6 - 4 * bb2;
                        long long bt3 = b1 + b2 + b3 + b6 - 4 * bb3;
                        // D doubled: the three per-face edge-product groups plus
                        // the outer products.
                        long long D2 = (b1 - bb1) * (b6 - bb1) + (b6 - bb1) * (b5 - bb1) +
                                       (b5 - bb1) * (b4 - bb1) + (b4 - bb1) * (b1 - bb1) +
                                       (b3 - bb2) * (b4 - bb2) + (b4 - bb2) * (b5 - bb2) +
                                       (b5 - bb2) * (b6 - bb2) + (b6 - bb2) * (b3 - bb2) +
                                       (b1 - bb3) * (b2 - bb3) + (b2 - bb3) * (b3 - bb3) +
                                       (b3 - bb3) * (b6 - bb3) + (b6 - bb3) * (b1 - bb3) +
                                       b1 * b2 + b2 * b3 + b3 * b4 + b4 * b1;
                        long long Dt2 = D2 + 2 * (b2 + b3 + b4);
                        if (Dt2 > 2 * N) continue;
                        long long x1max = quad_window_max(bt1, 2 * N - Dt2);
                        for (long long x1 = 0; x1 <= x1max; ++x1) {
                            long long C1 = 2 * x1 * x1 + x1 * bt1;
                            long long a1 = x1 - bb1;
                            long long x2max = quad_window_max(bt2, 2 * N - Dt2 - 2 * C1);
                            for (long long x2 = 0; x2 <= x2max; ++x2) {
                                long long C2 = 2 * x2 * x2 + x2 * bt2;
                                long long a2 = x2 - bb2;
                                long long x3max = quad_window_max(bt3, 2 * N - Dt2 - 2 * C1 - 2 * C2);
                                for (long long x3 = 0; x3 <= x3max; ++x3) {
                                    long long C3 = 2 * x3 * x3 + x3 * bt3;
                                    long long a3 = x3 - bb3;
                                    long long w2 = 2 * (C1 + C2 + C3) + D2 +
                                                   2 * (a1 + a2 + a3 + b1 + b2 + b3 + b4 + b5 + b6);
                                    if (w2 % 2 != 0)
                                        throw ParityViolation("L8a7: odd A+B in reference summation");
                                    long long w = w2 / 2;
                                    if (w < 0 || w > N) continue;
                                    int M = static_cast<int>(N - w);
                                    TruncatedSeries term = TruncatedSeries::one(M);
                                    const long long idx[16] = {a1 + b1, a1 + b4, a1 + b5, a1 + b6,
                                                               a2 + b3, a2 + b4, a2 + b5, a2 + b6,
                                                               a3 + b1, a3 + b2, a3 + b3, a3 + b6,
                                                               b1,      b2,      b3,      b4};
                                    for (long long k : idx)
                                        if (k > 0) term = mul_trunc(term, poch[k], M);
                                    acc.add_shifted(term, static_cast<int>(w));
                                }
                            }
                        }
                    }
            }
    return mul(euler_infinity(order).pow(8), acc);
}

std::pair<TruncatedSeries, TruncatedSeries> verify_sbb(int r, long long b_last, int order) {
    if (r < 3) throw std::invalid_argument("verify_sbb: r must be >= 3");
    const long long N = order;
    PochTable poch(order);
    TruncatedSeries lhs = TruncatedSeries::zero(order);

    int inner = r - 2;  // free variables b_1 .. b_{r-2}
    std::vector<long long> b(static_cast<size_t>(inner), 0);
    // Exponent pieces, each nonnegative once a >= 0 and b_i >= 0, so partial
    // sums bound the final exponent from below and loops can stop early.
    std::function<void(int, long long, long long)> rec = [&](int i, long long a, long long partial) {
        if (partial > N) return;
        if (i == inner) {
            long long expo = partial;
            if (expo > N) return;
            int M = static_cast<int>(N - expo);
            TruncatedSeries term = TruncatedSeries::one(M);
            for (int j = 0; j < inner; ++j)
                if (b[static_cast<size_t>(j)] > 0)
                    term = mul_trunc(term, poch[b[static_cast<size_t>(j)]], M);
            for (int j = 0; j < inner; ++j)
                if (b[static_cast<size_t>(j)] + a > 0)
                    term = mul_trunc(term, poch[b[static_cast<size_t>(j)] + a], M);
            if (b_last + a > 0) term = mul_trunc(term, poch[b_last + a], M);  // b_{r-1}
            if (a > 0) term = mul_trunc(term, poch[a], M);                    // b_r = 0
            if ((static_cast<long long>(r) * a) % 2 != 0) term = -term;
            lhs.add_shifted(term, static_cast<int>(expo));
            return;
        }
        for (long long v = 0;; ++v) {
            // contribution of b_i: linear term + a*b_i + product with the
            // previous consecutive variable (and with b_{r-1} when i = r-3).
            long long prev = i == 0 ? 0 : b[static_cast<size_t>(i - 1)];
            long long add = v + a * v + prev * v;
            if (i == inner - 1) add += v * b_last;
            if (partial + add > N) break;
            b[static_cast<size_t>(i)] = v;
            rec(i + 1, a, partial + add);
        }
        b[static_cast<size_t>(i)] = 0;
    };

    for (long long a = 0;; ++a) {
        long long base2 = static_cast<long long>(r) * a * a + (static_cast<long long>(r) - 2) * a;
        if (base2 % 2 != 0) throw ParityViolation("verify_sbb: odd quadratic exponent");
        long long base = base2 / 2 + a * b_last;  // a * (b_{r-1} + b_r), b_r = 0
        if (base > N) break;
        rec(0, a, base);
    }

    TruncatedSeries rhs = mul(euler_infinity(order).inverted().pow(r - 1), theta_h(r, order));
    return {lhs, rhs};
}

}  // namespace phi
