#include "pcp/special.hpp"

#include <algorithm>
#include <queue>

namespace pcp {

Solution solve_q1(const PcpInstance& inst) {
    const int q = inst.max_part_size();
    if (q > 1 || inst.k > 2)
        throw NotApplicable("solve_q1 handles q=1 with k<=2 only");

    const int p = inst.num_parts();
    Selection sel;
    sel.chosen.assign(p, 0); // singleton parts: the selection is forced

    Solution sol;
    sol.solver_tag = inst.k == 1 ? "q1-edgeless" : "q1-bipartite";

    if (inst.k == 1) {
        if (inst.num_edges() != 0) return sol;
        Coloring col;
        for (Vertex v = 0; v < inst.n; ++v) col.assignment.emplace_back(v, 1);
        sol.yes = true;
        sol.certificate = {std::move(sel), std::move(col)};
        return sol;
    }

    // k=2: breadth-first 2-coloring
    std::vector<std::vector<Vertex>> adj(inst.n);
    for (auto [u, v] : inst.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> color(inst.n, 0);
    for (Vertex s = 0; s < inst.n; ++s) {
        if (color[s]) continue;
        color[s] = 1;
        std::queue<Vertex> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            Vertex u = bfs.front();
            bfs.pop();
            for (Vertex v : adj[u]) {
                if (!color[v]) {
                    color[v] = 3 - color[u];
                    bfs.push(v);
                } else if (color[v] == color[u]) {
                    return sol; // odd cycle
                }
            }
        }
    }
    Coloring col;
    for (Vertex v = 0; v < inst.n; ++v) col.assignment.emplace_back(v, color[v]);
    sol.yes = true;
    sol.certificate = {std::move(sel), std::move(col)};
    return sol;
}

TwoSatFormula build_2sat(const PcpInstance& inst) {
    if (inst.max_part_size() > 2)
        throw NotApplicable("build_2sat requires q <= 2");

    const int p = inst.num_parts();
    TwoSatFormula f;
    f.num_vars = p;

    // literal of each vertex: first vertex of part j -> x_j, second -> not x_j
    std::vector<Literal> lit(inst.n);
    for (int j = 0; j < p; ++j) {
        lit[inst.parts[j][0]] = {j, true};
        if (inst.parts[j].size() == 2) lit[inst.parts[j][1]] = {j, false};
    }

    for (int j = 0; j < p; ++j) {
        if (inst.parts[j].size() == 1)
            f.clauses.push_back({{j, true}});
        else
            f.clauses.push_back({{j, true}, {j, false}}); // tautological, kept as emitted
    }
    for (auto [u, v] : inst.edges)
        f.clauses.push_back({{lit[u].var, !lit[u].positive}, {lit[v].var, !lit[v].positive}});
    return f;
}

namespace {

// Iterative Tarjan SCC over the implication graph. Node 2v is literal x_v,
// node 2v+1 its negation. Components are numbered in reverse topological
// order, so "comp[pos] < comp[neg]" means the positive literal is implied
// later and can safely be set true.
class TwoSatSolver {
public:
    explicit TwoSatSolver(const TwoSatFormula& f) : nodes_(2 * f.num_vars), adj_(nodes_) {
        for (const auto& cl : f.clauses) {
            if (cl.size() == 1) {
                add_implication(negate(node(cl[0])), node(cl[0]));
            } else {
                add_implication(negate(node(cl[0])), node(cl[1]));
                add_implication(negate(node(cl[1])), node(cl[0]));
            }
        }
    }

    std::optional<std::vector<bool>> solve() {
        comp_.assign(nodes_, -1);
        index_.assign(nodes_, -1);
        low_.assign(nodes_, 0);
        on_stack_.assign(nodes_, 0);
        for (int v = 0; v < nodes_; ++v)
            if (index_[v] < 0) tarjan(v);

        std::vector<bool> assignment(nodes_ / 2);
        for (int v = 0; v < nodes_ / 2; ++v) {
            if (comp_[2 * v] == comp_[2 * v + 1]) return std::nullopt;
            assignment[v] = comp_[2 * v] < comp_[2 * v + 1];
        }
        return assignment;
    }

private:
    static int node(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }
    static int negate(int node) { return node ^ 1; }

    void add_implication(int from, int to) { adj_[from].push_back(to); }

    void tarjan(int root) {
        struct Frame {
            int v;
            size_t edge;
        };
        std::vector<Frame> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [v, edge] = stack.back();
            if (edge == 0) {
                index_[v] = low_[v] = counter_++;
                scc_stack_.push_back(v);
                on_stack_[v] = 1;
            }
            bool descended = false;
            while (edge < adj_[v].size()) {
                int w = adj_[v][edge++];
                if (index_[w] < 0) {
                    stack.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack_[w]) low_[v] = std::min(low_[v], index_[w]);
            }
            if (descended) continue;
            if (low_[v] == index_[v]) {
                int w;
                do {
                    w = scc_stack_.back();
                    scc_stack_.pop_back();
                    on_stack_[w] = 0;
                    comp_[w] = comp_count_;
                } while (w != v);
                ++comp_count_;
            }
            int finished = v;
            stack.pop_back();
            if (!stack.empty()) low_[stack.back().v] = std::min(low_[stack.back().v], low_[finished]);
        }
    }

    int nodes_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> comp_, index_, low_;
    std::vector<char> on_stack_;
    std::vector<int> scc_stack_;
    int counter_ = 0;
    int comp_count_ = 0;
};

} // namespace

std::optional<std::vector<bool>> solve_2sat(const TwoSatFormula& f) {
    return TwoSatSolver(f).solve();
}

Solution solve_q2k1(const PcpInstance& inst) {
    if (inst.max_part_size() > 2 || inst.k != 1)
        throw NotApplicable("solve_q2k1 handles q<=2, k=1 only");

    Solution sol;
    sol.solver_tag = "2sat";
    auto assignment = solve_2sat(build_2sat(inst));
    if (!assignment) return sol;

    // select a vertex iff its associated literal is true
    Selection sel;
    Coloring col;
    const int p = inst.num_parts();
    sel.chosen.resize(p);
    for (int j = 0; j < p; ++j) {
        sel.chosen[j] = ((*assignment)[j] || inst.parts[j].size() == 1) ? 0 : 1;
        col.assignment.emplace_back(inst.parts[j][sel.chosen[j]], 1);
    }
    sol.yes = true;
    sol.certificate = {std::move(sel), std::move(col)};
    return sol;
}

Solution dispatch(const PcpInstance& inst, const DispatchConfig& cfg) {
    const int q = inst.max_part_size();
    if (q == 1 && inst.k <= 2) return solve_q1(inst);
    if (q <= 2 && inst.k == 1) return solve_q2k1(inst);
    const uint64_t space = selection_space_size(inst);
    const uint64_t lattice = LatticeShape::from_instance(inst).size;
    if (space <= cfg.oracle_cap && space < lattice) return oracle_solve(inst, cfg.oracle_cap);
    return solve_exact(inst, cfg.exact);
}

} // namespace pcp
