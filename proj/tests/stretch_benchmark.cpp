// Stretch benchmark: G8_7 to order 50. No external reference exists at this
// depth, so only internal invariants gate it; the point is the recorded time.
#include <chrono>
#include <iostream>

#include "phi/catalog.hpp"
#include "phi/engine.hpp"
#include "phi/plane_graph.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    phi::PlaneGraph g = phi::catalog("G8_7");
    auto t0 = clock::now();
    phi::EngineStats stats;
    phi::TruncatedSeries s = phi::compute_phi(g, 50, 2, &stats);
    double secs = std::chrono::duration<double>(clock::now() - t0).count();

    long long states = 0, pruned = 0;
    for (long long v : stats.states) states += v;
    for (long long v : stats.pruned) pruned += v;
    std::cout << "graph=G8_7 order=50 seconds=" << secs << " states=" << states
              << " pruned=" << pruned << "\n";
    std::cout << "q^48..q^50: " << s.coeff(48).to_string() << " " << s.coeff(49).to_string() << " "
              << s.coeff(50).to_string() << "\n";

    auto prefix = phi::theorem1_prefix(g);
    bool ok = s.coeff(0) == phi::BigInt(prefix[0]) && s.coeff(1) == phi::BigInt(prefix[1]) &&
              s.coeff(2) == phi::BigInt(prefix[2]);
    std::cout << (ok ? "invariants hold" : "INVARIANT FAILURE") << "\n";
    return ok ? 0 : 1;
}
