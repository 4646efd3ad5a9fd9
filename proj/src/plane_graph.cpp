#include "phi/plane_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace phi {

Edge make_edge(const std::string& a, const std::string& b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

namespace {

std::vector<std::vector<std::string>> all_cycles(const PlaneGraph& g) {
    std::vector<std::vector<std::string>> cycles = g.bounded_faces;
    cycles.push_back(g.outer_face);
    return cycles;
}

void collect_cycle_edges(const std::vector<std::string>& cycle, std::map<Edge, int>& out) {
    size_t n = cycle.size();
    if (n < 2) return;
    if (n == 2) {
        // A length-2 cycle is one edge carrying both of its incidences (P_2).
        out[make_edge(cycle[0], cycle[1])] += 2;
        return;
    }
    for (size_t i = 0; i < n; ++i) out[make_edge(cycle[i], cycle[(i + 1) % n])] += 1;
}

}  // namespace

std::map<Edge, int> edge_incidences(const PlaneGraph& g) {
    std::map<Edge, int> m;
    for (const auto& c : all_cycles(g)) collect_cycle_edges(c, m);
    return m;
}

std::vector<Edge> edge_list(const PlaneGraph& g) {
    std::vector<Edge> r;
    for (const auto& [e, n] : edge_incidences(g)) {
        (void)n;
        r.push_back(e);
    }
    return r;
}

PlaneGraph validate(const PlaneGraph& raw) {
    const PlaneGraph& g = raw;
    std::set<std::string> vs(g.vertices.begin(), g.vertices.end());
    if (vs.size() != g.vertices.size()) throw NonSimple(g.name + ": duplicate vertex ids");
    if (g.vertices.empty()) throw EulerViolation(g.name + ": no vertices");
    if (!vs.count(g.root)) throw RootNotOnOuterFace(g.name + ": root '" + g.root + "' is not a vertex");
    if (std::find(g.outer_face.begin(), g.outer_face.end(), g.root) == g.outer_face.end())
        throw RootNotOnOuterFace(g.name + ": root '" + g.root + "' not on the outer face");

    for (const auto& c : all_cycles(g)) {
        for (const auto& v : c)
            if (!vs.count(v)) throw EdgeIncidenceError(g.name + ": face uses unknown vertex '" + v + "'");
        size_t n = c.size();
        for (size_t i = 0; i < n; ++i)
            if (n > 1 && c[i] == c[(i + 1) % n]) throw NonSimple(g.name + ": loop at vertex '" + c[i] + "'");
    }
    for (const auto& f : g.bounded_faces) {
        if (f.size() < 3) throw NonSimple(g.name + ": bounded face of length < 3 (loop or parallel edge)");
        std::set<std::string> fs(f.begin(), f.end());
        if (fs.size() != f.size()) throw NonSimple(g.name + ": bounded face repeats a vertex");
    }
    if (g.outer_face.size() < 2) throw EdgeIncidenceError(g.name + ": outer face too short");

    auto inc = edge_incidences(g);
    for (const auto& [e, n] : inc) {
        if (n == 4) throw NonSimple(g.name + ": parallel edge " + e.first + "-" + e.second);
        if (n != 2)
            throw EdgeIncidenceError(g.name + ": edge " + e.first + "-" + e.second + " occurs " +
                                     std::to_string(n) + " times across face cycles (expected 2)");
    }

    // Every vertex must be met by some cycle, and the edge set must connect them.
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [e, n] : inc) {
        (void)n;
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    for (const auto& v : g.vertices)
        if (!adj.count(v)) throw EulerViolation(g.name + ": isolated vertex '" + v + "'");
    std::set<std::string> seen{g.vertices.front()};
    std::vector<std::string> stack{g.vertices.front()};
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (const auto& w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != vs.size()) throw EulerViolation(g.name + ": graph is not connected");

    long long V = static_cast<long long>(g.vertices.size());
    long long E = static_cast<long long>(inc.size());
    long long F = static_cast<long long>(g.bounded_faces.size()) + 1;
    if (V - E + F != 2)
        throw EulerViolation(g.name + ": V - E + F = " + std::to_string(V - E + F) + " (expected 2)");
    return g;
}

PlaneGraph polygon(int r) {
    if (r < 2) throw BadArity("polygon: r must be >= 2, got " + std::to_string(r));
    PlaneGraph g;
    g.name = "P" + std::to_string(r);
    for (int i = 1; i <= r; ++i) g.vertices.push_back("v" + std::to_string(i));
    g.root = "v1";
    if (r == 2) {
        g.outer_face = {"v1", "v2"};
        return validate(g);
    }
    g.outer_face = g.vertices;
    g.bounded_faces = {g.vertices};
    return validate(g);
}

namespace {

// Index of i such that (cycle[i], cycle[i+1]) == (a, b); -1 if absent.
int find_directed(const std::vector<std::string>& cycle, const std::string& a, const std::string& b) {
    size_t n = cycle.size();
    for (size_t i = 0; i < n; ++i)
        if (cycle[i] == a && cycle[(i + 1) % n] == b) return static_cast<int>(i);
    return -1;
}

// The outer walk from b around to a, dropping one a->b step.
std::vector<std::string> walk_avoiding(const std::vector<std::string>& cycle, const std::string& a,
                                       const std::string& b) {
    int i = find_directed(cycle, a, b);
    size_t n = cycle.size();
    std::vector<std::string> w;
    for (size_t k = 0; k < n; ++k) w.push_back(cycle[(static_cast<size_t>(i) + 1 + k) % n]);
    return w;  // starts at b, ends at a
}

}  // namespace

PlaneGraph edge_connect(const PlaneGraph& g1, const Edge& e1, const PlaneGraph& g2, const Edge& e2) {
    auto check_outer = [](const PlaneGraph& g, const Edge& e) {
        if (find_directed(g.outer_face, e.first, e.second) < 0 &&
            find_directed(g.outer_face, e.second, e.first) < 0)
            throw EdgeNotOnOuterFace(g.name + ": edge " + e.first + "-" + e.second + " not on the outer face");
    };
    check_outer(g1, e1);
    check_outer(g2, e2);

    // Orient both walks: w1 runs v1..u1, w2 runs u2..v2 (interior only), so
    // that gluing u1=u2, v1=v2 splices the two boundaries into one cycle.
    std::string u1 = e1.first, v1 = e1.second;
    if (find_directed(g1.outer_face, u1, v1) < 0) std::swap(u1, v1);
    std::vector<std::string> w1 = walk_avoiding(g1.outer_face, u1, v1);

    std::string u2 = e2.first, v2 = e2.second;
    bool flip = false;
    if (find_directed(g2.outer_face, v2, u2) < 0) flip = true;  // stored as u2->v2: walk would run v2..u2
    std::vector<std::string> w2 =
        flip ? walk_avoiding(g2.outer_face, u2, v2) : walk_avoiding(g2.outer_face, v2, u2);
    if (flip) std::reverse(w2.begin(), w2.end());  // now runs u2..v2

    // Rename g2 vertices, identifying the glued pair.
    std::map<std::string, std::string> rename;
    rename[u2] = u1;
    rename[v2] = v1;
    std::set<std::string> used(g1.vertices.begin(), g1.vertices.end());
    PlaneGraph r;
    r.name = g1.name + "." + g2.name;
    r.vertices = g1.vertices;
    for (const auto& v : g2.vertices) {
        if (rename.count(v)) continue;
        std::string nv = v;
        while (used.count(nv)) nv += "'";
        rename[v] = nv;
        used.insert(nv);
        r.vertices.push_back(nv);
    }

    r.bounded_faces = g1.bounded_faces;
    for (const auto& f : g2.bounded_faces) {
        std::vector<std::string> nf;
        for (const auto& v : f) nf.push_back(rename.at(v));
        r.bounded_faces.push_back(std::move(nf));
    }

    r.outer_face = w1;  // v1 .. u1
    for (size_t k = 1; k + 1 < w2.size(); ++k) r.outer_face.push_back(rename.at(w2[k]));
    r.root = g1.root;
    if (std::find(r.outer_face.begin(), r.outer_face.end(), r.root) == r.outer_face.end())
        r.root = r.outer_face.front();
    return validate(r);
}

PlaneGraph reduce(const PlaneGraph& raw) {
    PlaneGraph g = raw;
    bool changed = true;
    while (changed) {
        changed = false;
        // Loops: a face [v], paired with a consecutive v,v in another cycle.
        auto strip_dups = [&](std::vector<std::string>& c) {
            for (size_t i = 0; i < c.size() && c.size() > 1;) {
                if (c[i] == c[(i + 1) % c.size()]) {
                    c.erase(c.begin() + static_cast<long>(i));
                    changed = true;
                } else {
                    ++i;
                }
            }
        };
        for (auto& f : g.bounded_faces) strip_dups(f);
        strip_dups(g.outer_face);
        for (size_t i = 0; i < g.bounded_faces.size();) {
            if (g.bounded_faces[i].size() <= 1) {
                g.bounded_faces.erase(g.bounded_faces.begin() + static_cast<long>(i));
                changed = true;
            } else {
                ++i;
            }
        }
        // Parallel edges: a bounded bigon [u,v] merges the pair into one edge
        // once the bigon face is dropped.
        for (size_t i = 0; i < g.bounded_faces.size();) {
            if (g.bounded_faces[i].size() == 2) {
                g.bounded_faces.erase(g.bounded_faces.begin() + static_cast<long>(i));
                changed = true;
            } else {
                ++i;
            }
        }
    }
    // Drop vertices that lost all their edges.
    auto inc = edge_incidences(g);
    std::set<std::string> touched;
    for (const auto& [e, n] : inc) {
        (void)n;
        touched.insert(e.first);
        touched.insert(e.second);
    }
    std::vector<std::string> keep;
    for (const auto& v : g.vertices)
        if (touched.count(v)) keep.push_back(v);
    g.vertices = std::move(keep);
    return validate(g);
}

std::vector<PlaneGraph> split_bridges(const PlaneGraph& g) {
    auto edges = edge_list(g);
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    auto connected_without = [&](const Edge& cut) {
        // Does the graph minus `cut` still connect cut.first to cut.second?
        std::set<std::string> seen{cut.first};
        std::vector<std::string> stack{cut.first};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto& w : adj[v]) {
                if (make_edge(v, w) == cut) continue;
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        return seen.count(cut.second) > 0;
    };
    std::set<Edge> bridges;
    for (const auto& e : edges)
        if (!connected_without(e)) bridges.insert(e);
    if (bridges.empty()) return {g};

    // Components of G minus the bridges.
    std::map<std::string, int> comp;
    int ncomp = 0;
    for (const auto& v : g.vertices) {
        if (comp.count(v)) continue;
        int c = ncomp++;
        std::vector<std::string> stack{v};
        comp[v] = c;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (const auto& w : adj[x]) {
                if (bridges.count(make_edge(x, w))) continue;
                if (!comp.count(w)) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<PlaneGraph> factors;
    for (int c = 0; c < ncomp; ++c) {
        PlaneGraph f;
        for (const auto& v : g.vertices)
            if (comp[v] == c) f.vertices.push_back(v);
        if (f.vertices.size() < 2) continue;  // isolated vertex: Phi = 1, dropped
        std::set<std::string> cs(f.vertices.begin(), f.vertices.end());
        for (const auto& face : g.bounded_faces) {
            bool inside = true;
            for (const auto& v : face) inside &= cs.count(v) > 0;
            if (inside) f.bounded_faces.push_back(face);
        }
        // Outer walk: restriction of the original walk, consecutive (and
        // wrap-around) duplicates collapsed.
        for (const auto& v : g.outer_face) {
            if (!cs.count(v)) continue;
            if (!f.outer_face.empty() && f.outer_face.back() == v) continue;
            f.outer_face.push_back(v);
        }
        while (f.outer_face.size() > 2 && f.outer_face.front() == f.outer_face.back()) f.outer_face.pop_back();
        f.root = cs.count(g.root) ? g.root : f.outer_face.front();
        f.name = g.name + "#" + std::to_string(static_cast<int>(factors.size()) + 1);
        factors.push_back(validate(f));
    }
    return factors;
}

GraphStats stats(const PlaneGraph& g) {
    GraphStats s;
    s.c1 = static_cast<long long>(g.vertices.size());
    auto edges = edge_list(g);
    s.c2 = static_cast<long long>(edges.size());
    std::set<Edge> es(edges.begin(), edges.end());
    for (size_t i = 0; i < g.vertices.size(); ++i)
        for (size_t j = i + 1; j < g.vertices.size(); ++j)
            for (size_t k = j + 1; k < g.vertices.size(); ++k) {
                if (es.count(make_edge(g.vertices[i], g.vertices[j])) &&
                    es.count(make_edge(g.vertices[j], g.vertices[k])) &&
                    es.count(make_edge(g.vertices[i], g.vertices[k])))
                    ++s.c3;
            }
    return s;
}

std::array<long long, 3> theorem1_prefix(const PlaneGraph& g) {
    GraphStats s = stats(g);
    long long d = s.c1 - s.c2;
    long long num = d * d - 2 * s.c3 - s.c1 + s.c2;
    if (num % 2 != 0)
        throw ParityError(g.name + ": (c1-c2)^2 - 2c3 - c1 + c2 is odd; stats are inconsistent");
    return {1, d - 1, num / 2};
}

std::string to_json(const PlaneGraph& g) {
    nlohmann::json j;
    j["name"] = g.name;
    j["vertices"] = g.vertices;
    j["root"] = g.root;
    j["outer_face"] = g.outer_face;
    j["bounded_faces"] = g.bounded_faces;
    return j.dump();
}

PlaneGraph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PlaneGraph g;
    g.name = j.at("name").get<std::string>();
    g.vertices = j.at("vertices").get<std::vector<std::string>>();
    g.root = j.at("root").get<std::string>();
    g.outer_face = j.at("outer_face").get<std::vector<std::string>>();
    g.bounded_faces = j.at("bounded_faces").get<std::vector<std::vector<std::string>>>();
    return g;
}

namespace {

std::string canonical_candidate(const PlaneGraph& g, size_t start, bool reversed) {
    // Label vertices by first appearance along the chosen outer walk, then
    // grow over bounded faces, always taking the face whose labeled-vertex
    // key is smallest.
    std::vector<std::string> walk = g.outer_face;
    if (reversed) std::reverse(walk.begin(), walk.end());
    std::rotate(walk.begin(), walk.begin() + static_cast<long>(start % walk.size()), walk.end());

    std::map<std::string, int> label;
    auto get_label = [&](const std::string& v) {
        auto it = label.find(v);
        if (it != label.end()) return it->second;
        int l = static_cast<int>(label.size());
        label[v] = l;
        return l;
    };
    std::vector<int> outer_labels;
    for (const auto& v : walk) outer_labels.push_back(get_label(v));

    std::vector<bool> done(g.bounded_faces.size(), false);
    std::vector<std::vector<int>> face_labelings;
    for (size_t round = 0; round < g.bounded_faces.size(); ++round) {
        int best = -1;
        std::vector<int> best_key;
        for (size_t i = 0; i < g.bounded_faces.size(); ++i) {
            if (done[i]) continue;
            std::vector<int> key;
            for (const auto& v : g.bounded_faces[i])
                if (label.count(v)) key.push_back(label[v]);
            std::sort(key.begin(), key.end());
            if (key.empty()) continue;
            if (best < 0 || key < best_key) {
                best = static_cast<int>(i);
                best_key = key;
            }
        }
        if (best < 0) break;  // disconnected face sets never reach here on valid input
        done[static_cast<size_t>(best)] = true;
        // Normalize the face cycle: among rotations/reflections pick the
        // lexicographically least under current labels (unlabeled = large).
        const auto& f = g.bounded_faces[static_cast<size_t>(best)];
        size_t n = f.size();
        std::vector<std::string> bestwalk;
        std::vector<int> bestlab;
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<std::string> c = f;
            if (dir) std::reverse(c.begin(), c.end());
            for (size_t s = 0; s < n; ++s) {
                std::vector<std::string> cand(c.begin(), c.end());
                std::rotate(cand.begin(), cand.begin() + static_cast<long>(s), cand.end());
                std::vector<int> lab;
                for (const auto& v : cand) lab.push_back(label.count(v) ? label[v] : 1 << 20);
                if (bestwalk.empty() || lab < bestlab) {
                    bestwalk = cand;
                    bestlab = lab;
                }
            }
        }
        std::vector<int> assigned;
        for (const auto& v : bestwalk) assigned.push_back(get_label(v));
        face_labelings.push_back(std::move(assigned));
    }

    std::ostringstream os;
    os << "O:";
    for (int l : outer_labels) os << l << ",";
    for (const auto& f : face_labelings) {
        os << "|F:";
        for (int l : f) os << l << ",";
    }
    return os.str();
}

}  // namespace

std::string canonical_form(const PlaneGraph& g) {
    std::string best;
    for (int dir = 0; dir < 2; ++dir)
        for (size_t s = 0; s < g.outer_face.size(); ++s) {
            std::string c = canonical_candidate(g, s, dir != 0);
            if (best.empty() || c < best) best = c;
        }
    return best;
}

}  // namespace phi
