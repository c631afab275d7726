#include "tropint/trees.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tropint {

namespace {

std::string format_label_set(Mask m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int label = 1; m; ++label, m >>= 1) {
        if (m & 1) {
            if (!first) os << ',';
            os << label;
            first = false;
        }
    }
    os << '}';
    return os.str();
}

std::vector<int> mask_labels(Mask m) {
    std::vector<int> out;
    for (int label = 1; m; ++label, m >>= 1)
        if (m & 1) out.push_back(label);
    return out;
}

// Rotate an n-bit mask left by one within the low n bits.
Mask rotl1(Mask m, int n) {
    return ((m << 1) | (m >> (n - 1))) & full_mask(n);
}

// True iff the position set m is a contiguous arc of the n-cycle.
bool cyclic_arc(Mask m, int n) {
    return std::popcount(m ^ rotl1(m, n)) == 2;
}

}  // namespace

Split::Split(int n_, Mask side) : n(n_) {
    if (side & label_bit(n)) side = full_mask(n) & ~side;
    members = side;
    const int sz = std::popcount(members);
    if (sz < 2 || sz > n - 2)
        throw std::invalid_argument("split side size " + std::to_string(sz) +
                                    " out of range for n=" + std::to_string(n));
}

bool splits_compatible(Mask a, Mask b) {
    const Mask c = a & b;
    return c == 0 || c == a || c == b;
}

std::string Tree::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < splits.size(); ++i) {
        if (i) os << '|';
        os << format_label_set(splits[i]);
    }
    return os.str();
}

std::string DegenerateTree::str() const {
    if (n == 5 && splits.size() == 1) {
        const auto pair = mask_labels(splits[0]);
        const Mask rest = full_mask(5) & ~splits[0];
        std::ostringstream os;
        os << '(' << pair[0] << pair[1] << ")(";
        for (int label : mask_labels(rest)) os << label;
        os << ')';
        return os.str();
    }
    if (splits.empty()) return "(star)";
    std::ostringstream os;
    for (std::size_t i = 0; i < splits.size(); ++i) {
        if (i) os << '|';
        os << format_label_set(splits[i]);
    }
    return os.str();
}

SplitTreeStructure structure_from_splits(int n, std::vector<Mask> splits) {
    std::sort(splits.begin(), splits.end());
    if (std::adjacent_find(splits.begin(), splits.end()) != splits.end())
        throw std::invalid_argument("duplicate split");
    for (Mask s : splits) Split(n, s);  // size validation
    for (std::size_t i = 0; i < splits.size(); ++i)
        for (std::size_t j = i + 1; j < splits.size(); ++j)
            if (!splits_compatible(splits[i], splits[j]))
                throw std::invalid_argument("incompatible splits " +
                                            format_label_set(splits[i]) + " and " +
                                            format_label_set(splits[j]));

    const int k = static_cast<int>(splits.size());
    // parent[i]: index of the smallest split strictly containing splits[i],
    // or -1 when none (vertex 0, where leaf n lives, is above everything).
    std::vector<int> parent(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i) {
        int best = -1;
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const Mask a = splits[static_cast<std::size_t>(i)];
            const Mask b = splits[static_cast<std::size_t>(j)];
            if ((a & b) == a && a != b) {
                if (best < 0 ||
                    std::popcount(b) < std::popcount(splits[static_cast<std::size_t>(best)]))
                    best = j;
            }
        }
        parent[static_cast<std::size_t>(i)] = best;
    }

    SplitTreeStructure st;
    st.n = n;
    st.splits = splits;
    st.branches.assign(static_cast<std::size_t>(k + 1), {});

    // Children splits hang below their parent's vertex.
    for (int i = 0; i < k; ++i) {
        const int v = parent[static_cast<std::size_t>(i)] + 1;
        st.branches[static_cast<std::size_t>(v)].push_back(splits[static_cast<std::size_t>(i)]);
    }
    // Each leaf attaches below the smallest split containing it.
    for (int label = 1; label <= n; ++label) {
        int best = -1;
        if (label != n) {
            for (int j = 0; j < k; ++j)
                if (splits[static_cast<std::size_t>(j)] & label_bit(label)) {
                    if (best < 0 ||
                        std::popcount(splits[static_cast<std::size_t>(j)]) <
                            std::popcount(splits[static_cast<std::size_t>(best)]))
                        best = j;
                }
        }
        st.branches[static_cast<std::size_t>(best + 1)].push_back(label_bit(label));
    }
    // Upward branch of each split vertex: everything outside the split.
    for (int i = 0; i < k; ++i)
        st.branches[static_cast<std::size_t>(i + 1)].push_back(
            full_mask(n) & ~splits[static_cast<std::size_t>(i)]);

    for (auto& b : st.branches) std::sort(b.begin(), b.end());
    return st;
}

std::vector<Tree> enumerate_all_trees(int n) {
    if (n < 4 || n > 8)
        throw std::invalid_argument("enumerate_all_trees supports 4 <= n <= 8 "
                                    "((2n-5)!! trees; 10395 at the n=8 cap)");

    // Edge-list surgery: leaves are vertices 1..n, internal vertices get ids
    // from n+1 upward as they are created.
    using EdgeList = std::vector<std::pair<int, int>>;
    std::vector<EdgeList> current;
    current.push_back({{1, n + 1}, {2, n + 1}, {3, n + 1}});
    int next_internal = n + 2;
    for (int leaf = 4; leaf <= n; ++leaf) {
        std::vector<EdgeList> grown;
        grown.reserve(current.size() * (2 * static_cast<std::size_t>(leaf) - 5));
        for (const EdgeList& tree : current) {
            for (std::size_t e = 0; e < tree.size(); ++e) {
                EdgeList t = tree;
                auto [u, v] = t[e];
                const int w = next_internal;
                t[e] = {u, w};
                t.push_back({w, v});
                t.push_back({w, leaf});
                grown.push_back(std::move(t));
            }
        }
        ++next_internal;
        current = std::move(grown);
    }

    std::vector<Tree> out;
    out.reserve(current.size());
    std::vector<std::vector<int>> adj;
    for (const EdgeList& edges : current) {
        adj.assign(static_cast<std::size_t>(next_internal), {});
        for (auto [u, v] : edges) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        Tree t;
        t.n = n;
        for (auto [u, v] : edges) {
            if (u <= n || v <= n) continue;  // leaf edge
            // Leaves on the u side of edge (u,v), by DFS.
            Mask side = 0;
            std::vector<int> stack{u};
            std::vector<bool> seen(static_cast<std::size_t>(next_internal), false);
            seen[static_cast<std::size_t>(u)] = true;
            seen[static_cast<std::size_t>(v)] = true;
            while (!stack.empty()) {
                const int w = stack.back();
                stack.pop_back();
                if (w <= n) {
                    side |= label_bit(w);
                    continue;
                }
                for (int x : adj[static_cast<std::size_t>(w)])
                    if (!seen[static_cast<std::size_t>(x)]) {
                        seen[static_cast<std::size_t>(x)] = true;
                        stack.push_back(x);
                    }
            }
            t.splits.push_back(Split(n, side).members);
        }
        std::sort(t.splits.begin(), t.splits.end());
        out.push_back(std::move(t));
    }
    return out;
}

bool is_planar(const Tree& t, const Ordering& o) {
    if (t.n != o.n())
        throw std::invalid_argument("tree/ordering size mismatch");
    const int n = t.n;
    const auto pos = o.positions();
    for (Mask s : t.splits) {
        Mask posmask = 0;
        for (Mask m = s; m;) {
            const int label = std::countr_zero(m) + 1;
            m &= m - 1;
            posmask |= Mask{1} << pos[static_cast<std::size_t>(label)];
        }
        if (!cyclic_arc(posmask, n)) return false;
    }
    return true;
}

namespace {

// Triangulations of the sub-polygon on corners i..j of the o-labeled n-gon;
// each is returned as the list of diagonal splits it uses.
void triangulations(int i, int j, const std::vector<Mask>& prefix_or, int n,
                    std::vector<Mask>& acc, std::vector<Tree>& out) {
    if (j == i + 1) {
        if (acc.size() + 1 == static_cast<std::size_t>(n) - 2) {
            // placeholder; actual emission happens at the top level
        }
        return;
    }
    (void)prefix_or;
    (void)acc;
    (void)out;
}

}  // namespace

std::vector<Tree> enumerate_planar(const Ordering& o) {
    const int n = o.n();
    // prefix_or[k] = labels of the first k cycle positions.
    std::vector<Mask> prefix_or(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k < n; ++k)
        prefix_or[static_cast<std::size_t>(k + 1)] =
            prefix_or[static_cast<std::size_t>(k)] | label_bit(o[k]);

    auto arc_split = [&](int i, int j) {  // leaves on sides i..j-1
        const Mask arc = prefix_or[static_cast<std::size_t>(j)] &
                         ~prefix_or[static_cast<std::size_t>(i)];
        return Split(n, arc).members;
    };

    std::vector<Tree> out;
    std::vector<Mask> acc;
    // Recursive fan decomposition on the base chord (i,j).
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (j == i + 1) {
            if (acc.size() == static_cast<std::size_t>(n - 3) &&
                i == 0)  // unreachable guard; emission is below
                ;
            return;
        }
        (void)self;
    };
    (void)rec;

    // Explicit recursion with emission when the whole polygon is processed.
    struct Rec {
        int n;
        const std::vector<Mask>& prefix_or;
        std::vector<Mask>& acc;
        std::vector<Tree>& out;
        Mask (*unused)(int, int) = nullptr;
        std::function<Mask(int, int)> arc;

        void run(int i, int j, const std::function<void()>& done) {
            if (j == i + 1) {
                done();
                return;
            }
            for (int k = i + 1; k <= j - 1; ++k) {
                std::size_t pushed = 0;
                if (k - i >= 2) {
                    acc.push_back(arc(i, k));
                    ++pushed;
                }
                if (j - k >= 2) {
                    acc.push_back(arc(k, j));
                    ++pushed;
                }
                run(i, k, [&] { run(k, j, done); });
                acc.resize(acc.size() - pushed);
            }
        }
    };

    Rec r{n, prefix_or, acc, out, nullptr, arc_split};
    r.run(0, n - 1, [&] {
        Tree t;
        t.n = n;
        t.splits = acc;
        std::sort(t.splits.begin(), t.splits.end());
        out.push_back(std::move(t));
    });
    (void)triangulations;
    return out;
}

std::vector<DegenerateTree> enumerate_codim1(int n) {
    if (n < 4 || n > 7)
        throw std::invalid_argument("enumerate_codim1 supports 4 <= n <= 7");
    if (n == 4) return {DegenerateTree{4, {}}};

    std::map<std::vector<Mask>, int> hits;
    for (const Tree& t : enumerate_all_trees(n)) {
        for (std::size_t drop = 0; drop < t.splits.size(); ++drop) {
            std::vector<Mask> rest;
            rest.reserve(t.splits.size() - 1);
            for (std::size_t i = 0; i < t.splits.size(); ++i)
                if (i != drop) rest.push_back(t.splits[i]);
            ++hits[rest];
        }
    }
    std::vector<DegenerateTree> out;
    out.reserve(hits.size());
    for (const auto& [splits, count] : hits) {
        if (count != 3)
            throw std::logic_error("degenerate tree with " + std::to_string(count) +
                                   " smoothings");
        out.push_back(DegenerateTree{n, splits});
    }
    return out;
}

std::vector<Tree> smoothings(const DegenerateTree& d) {
    if (static_cast<int>(d.splits.size()) != d.n - 4)
        throw std::invalid_argument("degenerate tree needs n-4 splits");
    const SplitTreeStructure st = structure_from_splits(d.n, d.splits);

    const std::vector<Mask>* four = nullptr;
    for (const auto& b : st.branches) {
        if (b.size() == 4) {
            if (four) throw std::invalid_argument("more than one degree-4 vertex");
            four = &b;
        } else if (b.size() != 3) {
            throw std::invalid_argument("vertex of degree " + std::to_string(b.size()) +
                                        " in degenerate tree");
        }
    }
    if (!four) throw std::invalid_argument("no degree-4 vertex");

    std::vector<Tree> out;
    for (int other = 1; other <= 3; ++other) {
        const Mask pair_mask = (*four)[0] | (*four)[static_cast<std::size_t>(other)];
        Tree t;
        t.n = d.n;
        t.splits = d.splits;
        t.splits.push_back(Split(d.n, pair_mask).members);
        std::sort(t.splits.begin(), t.splits.end());
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> LinkGraph::degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const auto& [u, v, t] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

int LinkGraph::girth() const {
    const int nv = static_cast<int>(vertices.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nv));
    for (const auto& [u, v, t] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    int best = nv + 1;
    // BFS from every vertex; shortest cycle through the root is detected
    // when two BFS branches meet.
    for (int root = 0; root < nv; ++root) {
        std::vector<int> dist(static_cast<std::size_t>(nv), -1);
        std::vector<int> par(static_cast<std::size_t>(nv), -1);
        std::vector<int> queue{root};
        dist[static_cast<std::size_t>(root)] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (v == par[static_cast<std::size_t>(u)]) continue;
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    par[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                } else {
                    best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                              dist[static_cast<std::size_t>(v)] + 1);
                }
            }
        }
    }
    return best;
}

std::vector<int> LinkGraph::edges_of(const Ordering& o) const {
    std::map<Tree, int> edge_of_tree;
    for (std::size_t e = 0; e < edges.size(); ++e)
        edge_of_tree[std::get<2>(edges[e])] = static_cast<int>(e);
    std::vector<int> out;
    for (const Tree& t : enumerate_planar(o)) out.push_back(edge_of_tree.at(t));
    return out;
}

bool LinkGraph::is_five_cycle(const std::vector<int>& edge_ids) const {
    if (edge_ids.size() != 5) return false;
    std::map<int, int> deg;
    for (int e : edge_ids) {
        ++deg[std::get<0>(edges[static_cast<std::size_t>(e)])];
        ++deg[std::get<1>(edges[static_cast<std::size_t>(e)])];
    }
    if (deg.size() != 5) return false;
    for (const auto& [v, d] : deg)
        if (d != 2) return false;
    // 5 vertices all of degree 2 with 5 edges: a single 5-cycle.
    return true;
}

LinkGraph link_graph5() {
    LinkGraph g;
    g.vertices = enumerate_codim1(5);
    std::map<std::vector<Mask>, int> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        index[g.vertices[i].splits] = static_cast<int>(i);
    for (const Tree& t : enumerate_all_trees(5)) {
        const int a = index.at({t.splits[1]});  // drop first split
        const int b = index.at({t.splits[0]});  // drop second split
        g.edges.emplace_back(std::min(a, b), std::max(a, b), t);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<std::pair<int, int>> common_cherries(const Ordering& a, const Ordering& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("ordering size mismatch");
    const int n = a.n();
    std::set<std::pair<int, int>> in_a;
    for (int i = 0; i < n; ++i) {
        const int u = a[i], v = a[(i + 1) % n];
        in_a.emplace(std::min(u, v), std::max(u, v));
    }
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        const int u = b[i], v = b[(i + 1) % n];
        const auto key = std::make_pair(std::min(u, v), std::max(u, v));
        if (in_a.count(key)) out.push_back(key);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tropint
