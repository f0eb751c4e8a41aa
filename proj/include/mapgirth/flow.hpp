#pragma once

#include <queue>
#include <vector>

#include "mapgirth/biorientation.hpp"
#include "mapgirth/combinatorial_map.hpp"

namespace mapgirth {

namespace detail {

// Arc-list max flow (Edmonds-Karp). Arcs come in even/odd residual pairs.
struct FlowNetwork {
    struct Arc {
        int to;
        long long cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj;

    explicit FlowNetwork(int nodes) : adj(nodes) {}

    int add_arc(int from, int to, long long cap) {
        int id = static_cast<int>(arcs.size());
        arcs.push_back({to, cap});
        arcs.push_back({from, 0});
        adj[from].push_back(id);
        adj[to].push_back(id + 1);
        return id;
    }

    long long max_flow(int s, int t) {
        long long total = 0;
        for (;;) {
            std::vector<int> prev_arc(adj.size(), -1);
            std::queue<int> q;
            q.push(s);
            prev_arc[s] = -2;
            while (!q.empty() && prev_arc[t] == -1) {
                int u = q.front();
                q.pop();
                for (int id : adj[u]) {
                    int v = arcs[id].to;
                    if (prev_arc[v] == -1 && arcs[id].cap > 0) {
                        prev_arc[v] = id;
                        q.push(v);
                    }
                }
            }
            if (prev_arc[t] == -1) return total;
            long long push = -1;
            for (int v = t; v != s;) {
                int id = prev_arc[v];
                if (push < 0 || arcs[id].cap < push) push = arcs[id].cap;
                v = arcs[id ^ 1].to;
            }
            for (int v = t; v != s;) {
                int id = prev_arc[v];
                arcs[id].cap -= push;
                arcs[id ^ 1].cap += push;
                v = arcs[id ^ 1].to;
            }
            total += push;
        }
    }

    // Nodes reachable from s in the residual graph.
    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(adj.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int id : adj[u])
                if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
                    seen[arcs[id].to] = 1;
                    stack.push_back(arcs[id].to);
                }
        }
        return seen;
    }
};

}  // namespace detail

struct AlphaBetaSpec {
    std::vector<long long> alpha;  // by vertex id
    std::vector<long long> beta;   // by edge id
};

struct FlowResult {
    bool feasible = false;
    ZBiorientation orientation;  // N-weights; meaningful only when feasible
    bool totals_mismatch = false;
    long long alpha_total = 0;
    long long beta_total = 0;
    // When infeasible with matching totals: a vertex set S whose alpha sum is
    // smaller than the beta sum of the edges with both ends in S.
    std::vector<int> violating_vertices;
};

// Distribute beta(e) over the two half-edges of e so that the halves kept by
// each vertex v sum to alpha(v). Network: source -> edge node (cap beta) ->
// endpoint vertex nodes (cap unbounded, one arc per half-edge) -> sink
// (cap alpha). The per-half weights are read off the middle arcs.
inline FlowResult find_alpha_beta(const CombinatorialMap& m, const AlphaBetaSpec& spec) {
    int E = m.edge_count(), V = m.vertex_count();
    if (static_cast<int>(spec.alpha.size()) != V || static_cast<int>(spec.beta.size()) != E)
        throw validation_error("alpha/beta sizes do not match the map");
    for (long long a : spec.alpha)
        if (a < 0) throw validation_error("negative alpha demand");
    for (long long b : spec.beta)
        if (b < 0) throw validation_error("negative beta demand");

    FlowResult out;
    for (long long a : spec.alpha) out.alpha_total += a;
    for (long long b : spec.beta) out.beta_total += b;

    int source = 0, sink = 1 + E + V;
    detail::FlowNetwork net(E + V + 2);
    long long huge = out.beta_total + 1;
    std::vector<int> dart_arc(m.dart_count() + 1, -1);
    for (int e = 0; e < E; ++e) {
        net.add_arc(source, 1 + e, spec.beta[e]);
        int d = m.edge_dart(e);
        dart_arc[d] = net.add_arc(1 + e, 1 + E + m.vertex_of[d], huge);
        dart_arc[m.alpha[d]] = net.add_arc(1 + e, 1 + E + m.vertex_of[m.alpha[d]], huge);
    }
    for (int v = 0; v < V; ++v) net.add_arc(1 + E + v, sink, spec.alpha[v]);

    long long flow = net.max_flow(source, sink);
    if (flow == out.beta_total && out.alpha_total == out.beta_total) {
        out.feasible = true;
        out.orientation = make_orientation(m.dart_count());
        for (int d = 1; d <= m.dart_count(); ++d) {
            long long w = net.arcs[dart_arc[d] ^ 1].cap;  // reverse cap = pushed flow
            out.orientation.weight[d] = static_cast<int>(w);
            out.orientation.ingoing[d] = w >= 1;
        }
        return out;
    }
    if (out.alpha_total != out.beta_total) {
        out.totals_mismatch = true;
        return out;
    }
    std::vector<char> cut = net.residual_reachable(source);
    for (int v = 0; v < V; ++v)
        if (cut[1 + E + v]) out.violating_vertices.push_back(v);
    return out;
}

}  // namespace mapgirth
