#include "triwalk/kernels.hpp"

#include <omp.h>

namespace triwalk::kernels {

namespace {

// Neighbour indices per point and step; npos marks a step leaving the simplex.
std::vector<std::vector<std::size_t>> neighbours(const Simplex& simplex, Orientation o) {
    const int m = simplex.dim() + 1;
    std::vector<std::vector<std::size_t>> out(simplex.size());
    for (std::size_t z = 0; z < simplex.size(); ++z) {
        out[z].reserve(m);
        for (int j = 1; j <= m; ++j) {
            const std::size_t w = simplex.neighbor(z, {j, o});
            if (w != Simplex::npos) out[z].push_back(w);
        }
    }
    return out;
}

void relax(const std::vector<std::vector<std::size_t>>& adj, const std::vector<BigInt>& prev,
           std::vector<BigInt>& next, Exec exec) {
    const auto count = static_cast<long long>(adj.size());
    if (exec == Exec::Serial) {
        for (long long z = 0; z < count; ++z) {
            BigInt total = 0;
            for (std::size_t w : adj[z]) total += prev[w];
            next[z] = std::move(total);
        }
        return;
    }
#pragma omp parallel for schedule(static)
    for (long long z = 0; z < count; ++z) {
        BigInt total = 0;
        for (std::size_t w : adj[z]) total += prev[w];
        next[z] = std::move(total);
    }
}

}  // namespace

std::vector<BigInt> count_table(const Simplex& simplex, const DirectionVector& dv, Exec exec) {
    const auto fwd_adj = neighbours(simplex, Orientation::Forward);
    const auto bwd_adj = neighbours(simplex, Orientation::Backward);
    std::vector<BigInt> table(simplex.size(), 1);
    std::vector<BigInt> next(simplex.size());
    // Walk the direction vector from its end: table holds suffix counts.
    for (auto it = dv.rbegin(); it != dv.rend(); ++it) {
        relax(*it == Orientation::Forward ? fwd_adj : bwd_adj, table, next, exec);
        table.swap(next);
    }
    return table;
}

std::vector<BigInt> generic_count_table(const Simplex& simplex, std::size_t n, Exec exec) {
    auto adj = neighbours(simplex, Orientation::Forward);
    const auto bwd_adj = neighbours(simplex, Orientation::Backward);
    for (std::size_t z = 0; z < adj.size(); ++z)
        adj[z].insert(adj[z].end(), bwd_adj[z].begin(), bwd_adj[z].end());
    std::vector<BigInt> table(simplex.size(), 1);
    std::vector<BigInt> next(simplex.size());
    for (std::size_t k = 0; k < n; ++k) {
        relax(adj, table, next, exec);
        table.swap(next);
    }
    return table;
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace triwalk::kernels
