#include "orthoext/twosat.hpp"

#include <algorithm>

namespace orthoext {

namespace {

// Iterative Tarjan SCC over the implication graph. Node 2v is "v true",
// 2v+1 is "v false".
struct SccSolver {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> index, low, comp;
    std::vector<char> on_stack;
    std::vector<int> stack;
    int counter = 0, comp_count = 0;

    explicit SccSolver(int nodes) : n(nodes), adj(nodes), index(nodes, -1), low(nodes, 0),
                                    comp(nodes, -1), on_stack(nodes, 0) {}

    void add_implication(int a, int b) { adj[a].push_back(b); }

    void run(int root) {
        struct Frame {
            int v;
            std::size_t child;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = comp_count;
                        if (w == f.v) break;
                    }
                    ++comp_count;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
};

int node_of(TwoSatFormula::Literal l, bool value) {
    // Node for "literal l holds == value".
    bool truth = value != l.negated;
    return 2 * l.var + (truth ? 0 : 1);
}

}  // namespace

std::optional<std::vector<bool>> solve_two_sat(const TwoSatFormula& f) {
    SccSolver s(2 * f.variables);
    auto imply = [&](TwoSatFormula::Literal a, TwoSatFormula::Literal b) {
        // a false forces b true.
        s.add_implication(node_of(a, false), node_of(b, true));
        s.add_implication(node_of(b, false), node_of(a, true));
    };
    for (const auto& [a, b] : f.clauses) imply(a, b);
    for (const auto& u : f.units) s.add_implication(node_of(u, false), node_of(u, true));

    for (int v = 0; v < 2 * f.variables; ++v)
        if (s.index[v] < 0) s.run(v);

    std::vector<bool> value(f.variables);
    for (int v = 0; v < f.variables; ++v) {
        if (s.comp[2 * v] == s.comp[2 * v + 1]) return std::nullopt;
        // Tarjan numbers components in reverse topological order, so the
        // later component is the implied one.
        value[v] = s.comp[2 * v] < s.comp[2 * v + 1];
    }
    return value;
}

}  // namespace orthoext
