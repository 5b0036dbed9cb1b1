#include "catwalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace catwalk {

namespace {

constexpr size_t kInf = std::numeric_limits<size_t>::max();

std::vector<size_t> bfs_distances(const LabeledDigraph& g, size_t start) {
    std::vector<size_t> dist(g.room_count(), kInf);
    dist[start] = 0;
    std::deque<size_t> queue{start};
    while (!queue.empty()) {
        size_t u = queue.front();
        queue.pop_front();
        for (size_t v : g.neighbors(u)) {
            if (dist[v] == kInf) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::string pair_text(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

} // namespace

LabeledDigraph LabeledDigraph::create(GraphMode mode, std::vector<std::string> rooms, EdgeMap edges) {
    LabeledDigraph g;
    g.mode_ = mode;
    g.rooms_ = std::move(rooms);
    g.edges_ = std::move(edges);

    if (g.rooms_.empty()) throw Error(ErrorCode::InvalidGraph, "graph needs at least one room");
    for (size_t i = 0; i < g.rooms_.size(); ++i) {
        if (g.rooms_[i].empty()) throw Error(ErrorCode::InvalidGraph, "empty room name");
        if (!g.index_.emplace(g.rooms_[i], i).second)
            throw Error(ErrorCode::InvalidGraph, "duplicate room '" + g.rooms_[i] + "'");
    }

    for (const auto& [key, label] : g.edges_) {
        const auto& [from, to] = key;
        if (!g.index_.count(from) || !g.index_.count(to))
            throw Error(ErrorCode::InvalidGraph, "edge " + pair_text(from, to) + " uses unknown room");
        if (from != to && !g.edges_.count({to, from}))
            throw Error(ErrorCode::InvalidGraph,
                        "edge " + pair_text(from, to) + " has no reverse edge");

        if (mode == GraphMode::probabilistic) {
            if (!label.is_constant())
                throw Error(ErrorCode::InvalidGraph,
                            "probabilistic label " + pair_text(from, to) + " must be constant");
            Rational p = label.constant_value();
            if (p < Rational(0) || p > Rational(1))
                throw Error(ErrorCode::InvalidGraph,
                            "probability " + p.str() + " on " + pair_text(from, to) + " outside [0,1]");
        } else {
            if (!label.is_monic_monomial())
                throw Error(ErrorCode::InvalidGraph,
                            "distance label on " + pair_text(from, to) + " must be a coefficient-1 monomial");
            if (from == to && label != Polynomial(1))
                throw Error(ErrorCode::InvalidGraph, "distance self-loop on '" + from + "' must be 1");
        }
    }

    for (const auto& room : g.rooms_) {
        if (!g.edges_.count({room, room})) {
            if (mode == GraphMode::probabilistic)
                throw Error(ErrorCode::InvalidGraph, "room '" + room + "' lacks a self-loop");
            g.edges_[{room, room}] = Polynomial(1);
        }
    }

    g.adjacency_.assign(g.rooms_.size(), {});
    for (const auto& [key, _] : g.edges_) {
        if (key.first != key.second)
            g.adjacency_[g.index_.at(key.first)].push_back(g.index_.at(key.second));
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());

    std::vector<size_t> dist = bfs_distances(g, 0);
    for (size_t i = 0; i < g.room_count(); ++i) {
        if (dist[i] == kInf)
            throw Error(ErrorCode::InvalidGraph, "graph is not connected (room '" + g.rooms_[i] + "')");
    }
    return g;
}

size_t LabeledDigraph::index_of(const std::string& room) const {
    auto it = index_.find(room);
    if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "unknown room '" + room + "'");
    return it->second;
}

bool LabeledDigraph::has_edge(const std::string& from, const std::string& to) const {
    return edges_.count({from, to}) > 0;
}

const Polynomial& LabeledDigraph::label(const std::string& from, const std::string& to) const {
    auto it = edges_.find({from, to});
    if (it == edges_.end())
        throw Error(ErrorCode::InvalidArgument, "no edge " + pair_text(from, to));
    return it->second;
}

LabeledDigraph LabeledDigraph::induced(const std::vector<std::string>& keep) const {
    std::set<std::string> kept(keep.begin(), keep.end());
    EdgeMap sub_edges;
    for (const auto& [key, label] : edges_) {
        if (kept.count(key.first) && kept.count(key.second)) sub_edges.emplace(key, label);
    }
    return create(mode_, keep, std::move(sub_edges));
}

LabeledDigraph LabeledDigraph::reordered(const std::vector<std::string>& new_order) const {
    if (new_order.size() != rooms_.size())
        throw Error(ErrorCode::InvalidArgument, "room reordering must be a permutation");
    for (const auto& room : new_order) index_of(room);
    std::set<std::string> seen(new_order.begin(), new_order.end());
    if (seen.size() != new_order.size())
        throw Error(ErrorCode::InvalidArgument, "room reordering must be a permutation");
    return create(mode_, new_order, edges_);
}

MinimalSequenceSet minimal_sequences(const LabeledDigraph& g, const std::string& from,
                                     const std::string& to, size_t explosion_cap) {
    size_t src = g.index_of(from);
    size_t dst = g.index_of(to);

    MinimalSequenceSet out;
    out.source = from;
    out.target = to;
    if (src == dst) {
        out.length = 0;
        out.sequences = {{from}};
        return out;
    }

    std::vector<size_t> from_src = bfs_distances(g, src);
    if (from_src[dst] == kInf)
        throw Error(ErrorCode::Unreachable, "no directed path " + pair_text(from, to));
    // Edge symmetry makes backward reachability equal forward reachability.
    std::vector<size_t> to_dst = bfs_distances(g, dst);
    const size_t total = from_src[dst];
    out.length = total;

    // Depth-first walk of the shortest-path DAG, restricted to rooms lying
    // on some geodesic.
    std::vector<std::vector<size_t>> sequences;
    std::vector<size_t> path{src};

    auto on_geodesic = [&](size_t v) {
        return from_src[v] != kInf && to_dst[v] != kInf && from_src[v] + to_dst[v] == total;
    };

    auto walk = [&](auto&& self, size_t u) -> void {
        if (u == dst) {
            sequences.push_back(path);
            if (sequences.size() > explosion_cap)
                throw Error(ErrorCode::ExplosionCap,
                            "more than " + std::to_string(explosion_cap) + " minimal sequences for " +
                                pair_text(from, to));
            return;
        }
        for (size_t v : g.neighbors(u)) {
            if (on_geodesic(v) && from_src[v] == from_src[u] + 1) {
                path.push_back(v);
                self(self, v);
                path.pop_back();
            }
        }
    };
    walk(walk, src);

    out.sequences.reserve(sequences.size());
    for (const auto& seq : sequences) {
        std::vector<std::string> named;
        named.reserve(seq.size());
        for (size_t idx : seq) named.push_back(g.rooms()[idx]);
        out.sequences.push_back(std::move(named));
    }
    return out;
}

namespace {

Polynomial product_along(const LabeledDigraph& g, const std::vector<std::string>& seq) {
    Polynomial prod(1);
    for (size_t i = 0; i + 1 < seq.size(); ++i) prod *= g.label(seq[i], seq[i + 1]);
    return prod;
}

} // namespace

SquareMatrix path_product_matrix(const LabeledDigraph& g, Exec exec) {
    const size_t n = g.room_count();
    SquareMatrix matrix(g.rooms());
    const int64_t sources = static_cast<int64_t>(n);
    // Column B of the result holds the labels of walks out of room B; each
    // source column is filled independently from one BFS parent tree.
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (int64_t b = 0; b < sources; ++b) {
        std::vector<size_t> parent(n, kInf);
        std::vector<size_t> dist(n, kInf);
        std::deque<size_t> queue{static_cast<size_t>(b)};
        dist[b] = 0;
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            for (size_t v : g.neighbors(u)) {
                if (dist[v] == kInf) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        for (size_t a = 0; a < n; ++a) {
            if (a == static_cast<size_t>(b)) {
                // Self entry: the self-loop label (distance mode forces 1).
                matrix.at(a, b) = g.label(g.rooms()[a], g.rooms()[a]);
                continue;
            }
            Polynomial prod(1);
            size_t v = a;
            while (v != static_cast<size_t>(b)) {
                size_t u = parent[v];
                prod *= g.label(g.rooms()[u], g.rooms()[v]);
                v = u;
            }
            matrix.at(a, b) = prod;
        }
    }
    return matrix;
}

ValidationReport validate_axioms(const LabeledDigraph& g) {
    ValidationReport report;
    const size_t n = g.room_count();

    // Multiset and extension checks over every ordered pair.
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            MinimalSequenceSet ms = minimal_sequences(g, g.rooms()[a], g.rooms()[b]);
            if (ms.sequences.size() < 2) continue;

            std::vector<std::string> reference;
            Polynomial ref_product;
            for (size_t s = 0; s < ms.sequences.size(); ++s) {
                std::vector<std::string> labels;
                for (size_t i = 0; i + 1 < ms.sequences[s].size(); ++i)
                    labels.push_back(g.label(ms.sequences[s][i], ms.sequences[s][i + 1]).str());
                std::sort(labels.begin(), labels.end());
                Polynomial product = product_along(g, ms.sequences[s]);
                if (s == 0) {
                    reference = std::move(labels);
                    ref_product = std::move(product);
                    continue;
                }
                if (labels != reference) {
                    report.multiset_ok = false;
                    report.issues.push_back({"multiset",
                                             {g.rooms()[a], g.rooms()[b]},
                                             "minimal sequences carry different label multisets"});
                    break;
                }
                if (product != ref_product) {
                    report.extension_ok = false;
                    report.issues.push_back({"extension",
                                             {g.rooms()[a], g.rooms()[b]},
                                             "minimal-sequence products disagree"});
                    break;
                }
            }
        }
    }

    SquareMatrix ext = path_product_matrix(g);
    if (g.mode() == GraphMode::probabilistic) {
        for (size_t b = 0; b < n; ++b) {
            Polynomial sum;
            for (size_t a = 0; a < n; ++a) sum += ext.at(a, b);
            if (sum != Polynomial(1)) {
                report.normalization_ok = false;
                report.issues.push_back({"row-sum",
                                         {g.rooms()[b]},
                                         "extended probabilities sum to " + sum.str()});
            }
        }
    } else {
        for (size_t a = 0; a < n; ++a) {
            if (g.label(g.rooms()[a], g.rooms()[a]) != Polynomial(1)) {
                report.normalization_ok = false;
                report.issues.push_back({"diagonal", {g.rooms()[a]}, "self distance must be 1"});
            }
        }
    }
    return report;
}

ExtendedKernel extended_kernel(const LabeledDigraph& g, Exec exec) {
    ValidationReport report = validate_axioms(g);
    if (!report.passed()) throw AxiomError(std::move(report));
    return ExtendedKernel{path_product_matrix(g, exec), g.mode()};
}

bool check_dual(const LabeledDigraph& gp, const LabeledDigraph& gd,
                const std::map<std::string, Rational>& sigma) {
    if (gp.mode() != GraphMode::probabilistic || gd.mode() != GraphMode::distance)
        throw Error(ErrorCode::ModeMismatch, "check_dual needs a probabilistic and a distance graph");
    std::set<std::string> rp(gp.rooms().begin(), gp.rooms().end());
    std::set<std::string> rd(gd.rooms().begin(), gd.rooms().end());
    if (rp != rd) throw Error(ErrorCode::InvalidArgument, "check_dual needs identical room sets");

    ExtendedKernel kp = extended_kernel(gp);
    ExtendedKernel kd = extended_kernel(gd);
    const size_t n = gd.room_count();

    for (size_t a = 0; a < n; ++a) {
        const std::string& room_a = gd.rooms()[a];
        Rational denom(0);
        for (size_t c = 0; c < n; ++c) denom += kd.matrix.at(c, a).eval(sigma);
        for (size_t b = 0; b < n; ++b) {
            const std::string& room_b = gd.rooms()[b];
            Rational p = kp.matrix.at(room_b, room_a).constant_value(); // p(A,B) at column A
            if (p * denom != kd.matrix.at(b, a).eval(sigma)) return false;
        }
    }
    return true;
}

LabeledDigraph normalized_dual(const LabeledDigraph& gd, const std::map<std::string, Rational>& sigma) {
    if (gd.mode() != GraphMode::distance)
        throw Error(ErrorCode::ModeMismatch, "normalized_dual needs a distance graph");
    ExtendedKernel kd = extended_kernel(gd);
    const size_t n = gd.room_count();

    LabeledDigraph::EdgeMap edges;
    for (size_t a = 0; a < n; ++a) {
        Rational denom(0);
        for (size_t c = 0; c < n; ++c) denom += kd.matrix.at(c, a).eval(sigma);
        if (denom.sign() <= 0)
            throw Error(ErrorCode::InvalidArgument, "normalization needs a positive assignment");
        for (size_t b = 0; b < n; ++b) {
            Rational d = kd.matrix.at(b, a).eval(sigma);
            edges[{gd.rooms()[a], gd.rooms()[b]}] = Polynomial(d / denom);
        }
    }
    return LabeledDigraph::create(GraphMode::probabilistic, gd.rooms(), std::move(edges));
}

} // namespace catwalk
