// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/constants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <thread>

#include "graphcalc/error.hpp"
#include "graphcalc/linalg.hpp"
#include "graphcalc/spectral.hpp"

namespace graphcalc {
namespace {

using Mask = std::uint32_t;

struct Candidate {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    Mask set = 0;
    bool valid = false;
};

// Lexicographic order of the sorted index sequences of two masks.
bool lex_less(Mask a, Mask b) {
    while (a != 0 && b != 0) {
        const int la = std::countr_zero(a);
        const int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

bool better(const Candidate& a, const Candidate& b) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    const std::uint64_t lhs = a.num * b.den;
    const std::uint64_t rhs = b.num * a.den;
    if (lhs != rhs) return lhs < rhs;
    return lex_less(a.set, b.set);
}

struct Enumerator {
    std::size_t n = 0;
    std::vector<Mask> adjacency;
    std::vector<std::uint64_t> degree;
    std::uint64_t total_volume = 0;

    explicit Enumerator(const Graph& g) : n(g.vertex_count()), adjacency(n, 0), degree(n, 0) {
        for (Vertex x = 0; x < n; ++x) {
            for (Vertex y : g.neighbors(x)) adjacency[x] |= Mask{1} << y;
            degree[x] = g.degree(x);
            total_volume += degree[x];
        }
    }

    Mask full() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

    std::uint64_t vol(Mask s) const {
        std::uint64_t v = 0;
        for (Mask m = s; m != 0; m &= m - 1) v += degree[std::countr_zero(m)];
        return v;
    }

    std::uint64_t edge_cut(Mask s) const {
        std::uint64_t c = 0;
        for (Mask m = s; m != 0; m &= m - 1) c += std::popcount(adjacency[std::countr_zero(m)] & ~s);
        return c;
    }

    std::uint64_t vertex_cut(Mask s) const {
        Mask reach = 0;
        for (Mask m = s; m != 0; m &= m - 1) reach |= adjacency[std::countr_zero(m)];
        return std::popcount(reach & ~s);
    }
};

void check_enumerable(const Graph& g) {
    if (g.vertex_count() < 2) throw ValidationError("too_small", "Cheeger constants need at least 2 vertices");
    if (g.vertex_count() > kMaxCheegerSize) {
        throw ValidationError("size_exceeds_bound", std::to_string(g.vertex_count()) +
                                                        " vertices exceed the exhaustive bound " +
                                                        std::to_string(kMaxCheegerSize));
    }
    if (!is_connected(g)) throw ValidationError("disconnected", "Cheeger constants need a connected graph");
}

template <class Score>
Candidate search(Mask first, Mask last, unsigned threads, Score score) {
    const std::uint64_t span = last - first;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(span, 1))));
    std::vector<Candidate> partial(threads);
    auto work = [&](unsigned t) {
        const Mask lo = static_cast<Mask>(first + span * t / threads);
        const Mask hi = static_cast<Mask>(first + span * (t + 1) / threads);
        Candidate best;
        for (Mask s = lo; s < hi; ++s) {
            const Candidate c = score(s);
            if (better(c, best)) best = c;
        }
        partial[t] = best;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    Candidate best;
    for (const auto& c : partial) {
        if (better(c, best)) best = c;
    }
    return best;
}

VertexSet mask_to_set(Mask s) {
    VertexSet out;
    for (Mask m = s; m != 0; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return out;
}

}  // namespace

CutReport cut_report(const Graph& g, std::span<const Vertex> subset) {
    const VertexSet s = make_vertex_set(g, {subset.begin(), subset.end()});
    if (s.empty() || s.size() == g.vertex_count()) {
        throw ValidationError("improper_subset", "cut needs a proper nonempty subset");
    }
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex x : s) in[x] = true;
    CutReport r;
    r.subset = s;
    std::vector<bool> boundary(g.vertex_count(), false);
    for (Vertex x : s) {
        for (Vertex y : g.neighbors(x)) {
            if (!in[y]) {
                ++r.edge_boundary_size;
                boundary[y] = true;
            }
        }
    }
    r.vertex_boundary_size = static_cast<std::size_t>(std::count(boundary.begin(), boundary.end(), true));
    double total = 0.0;
    for (Vertex x = 0; x < g.vertex_count(); ++x) total += static_cast<double>(g.degree(x));
    r.vol_S = volume(g, s);
    r.vol_complement = total - r.vol_S;
    const double denom = std::min(r.vol_S, r.vol_complement);
    r.h_value = static_cast<double>(r.edge_boundary_size) / denom;
    r.g_value = static_cast<double>(r.vertex_boundary_size) / denom;
    return r;
}

CheegerResult cheeger_h(const Graph& g, unsigned threads) {
    check_enumerable(g);
    const Enumerator e(g);
    const Mask last_bit = Mask{1} << (e.n - 1);
    const Candidate best = search(1, last_bit, threads, [&](Mask s) {
        const std::uint64_t vs = e.vol(s);
        const Mask complement = e.full() & ~s;
        return Candidate{e.edge_cut(s), std::min(vs, e.total_volume - vs),
                         lex_less(complement, s) ? complement : s, true};
    });
    CheegerResult r;
    r.witness = cut_report(g, mask_to_set(best.set));
    r.value = r.witness.h_value;
    return r;
}

CheegerResult cheeger_g(const Graph& g, unsigned threads) {
    check_enumerable(g);
    const Enumerator e(g);
    const Candidate best = search(1, e.full(), threads, [&](Mask s) {
        const std::uint64_t vs = e.vol(s);
        return Candidate{e.vertex_cut(s), std::min(vs, e.total_volume - vs), s, true};
    });
    CheegerResult r;
    r.witness = cut_report(g, mask_to_set(best.set));
    r.value = r.witness.g_value;
    return r;
}

FunctionalCheeger cheeger_functional(const Graph& g, const VertexFunction& f) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> all(n);
    for (Vertex x = 0; x < n; ++x) all[x] = x;
    f.require(all);

    double numerator = 0.0;
    for (const auto& [x, y] : g.edges()) numerator += std::abs(f.at(y) - f.at(x));

    std::vector<Vertex> order = all;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return f.at(a) < f.at(b); });
    if (n == 0 || f.at(order.front()) == f.at(order.back())) {
        throw ValidationError("constant_function", "functional Cheeger ratio is undefined for constant f");
    }
    const double total = volume(g, all);
    double running = 0.0;
    double c = f.at(order.back());
    for (Vertex x : order) {
        running += static_cast<double>(g.degree(x));
        if (2.0 * running >= total) {
            c = f.at(x);
            break;
        }
    }
    double denominator = 0.0;
    for (Vertex x : all) denominator += static_cast<double>(g.degree(x)) * std::abs(f.at(x) - c);
    return {numerator / denominator, c};
}

namespace {

// Smallest (or second smallest) generalized eigenpair of A u = c D u, D diagonal positive.
std::pair<double, std::vector<double>> generalized_pair(const DenseMatrix& a, std::span<const double> d,
                                                        std::size_t which) {
    const std::size_t n = d.size();
    DenseMatrix sym(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) sym(i, j) = a(i, j) / std::sqrt(d[i] * d[j]);
    }
    const auto eig = jacobi_eigen(sym);
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = eig.vectors(i, which) / std::sqrt(d[i]);
    return {eig.values[which], u};
}

}  // namespace

PoincareResult poincare_dirichlet_constant(const SubgraphWindow& w) {
    const Graph& g = w.host();
    const auto& interior = w.interior();
    const std::size_t n = interior.size();
    if (n > kMaxSpectralSize) {
        throw ValidationError("size_exceeds_bound", "interior exceeds the dense bound");
    }
    DenseMatrix a(n, n);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex x = interior[i];
        d[i] = static_cast<double>(g.degree(x));
        for (Vertex y : g.neighbors(x)) {
            if (w.in_interior(y)) {
                a(i, i) += 2.0;
                a(i, w.local_index(y)) -= 2.0;
            } else {
                a(i, i) += 1.0;
            }
        }
    }
    auto [c, local] = generalized_pair(a, d, 0);
    PoincareResult r{c, VertexFunction(g, w.closure())};
    for (std::size_t i = 0; i < n; ++i) r.extremal.set(interior[i], local[i]);
    return r;
}

PoincareResult poincare_neumann_constant(const Graph& g) {
    if (g.vertex_count() < 2) throw ValidationError("too_small", "Neumann Poincare constant needs 2 vertices");
    if (!is_connected(g)) throw ValidationError("disconnected", "Neumann Poincare constant needs a connected graph");
    const auto es = eigensystem(OperatorSpec{whole_graph_window(g), std::nullopt, BoundaryCondition::none, {}});
    return {2.0 * es.values()[1], es.function(1)};
}

}  // namespace graphcalc
