#include "catwalk/corridor.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace catwalk {

namespace {

constexpr size_t kInf = std::numeric_limits<size_t>::max();

std::vector<size_t> distances_from(const LabeledDigraph& g, size_t start) {
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

void check_sequence_closure(const LabeledDigraph& g, const std::vector<std::string>& block,
                            int condition) {
    std::set<std::string> members(block.begin(), block.end());
    for (const auto& a : block) {
        for (const auto& b : block) {
            if (a == b) continue;
            MinimalSequenceSet ms = minimal_sequences(g, a, b);
            for (const auto& seq : ms.sequences) {
                for (const auto& room : seq) {
                    if (!members.count(room))
                        throw CorridorError(condition, {a, b},
                                            "minimal sequence leaves the block through '" + room + "'");
                }
            }
        }
    }
}

} // namespace

size_t CorridorPartition::block_of(const std::string& room) const {
    for (size_t l = 0; l < blocks.size(); ++l) {
        if (std::find(blocks[l].begin(), blocks[l].end(), room) != blocks[l].end()) return l;
    }
    throw Error(ErrorCode::InvalidArgument, "room '" + room + "' is in no block");
}

CorridorPartition corridor_partition(const LabeledDigraph& g, const CorridorSet& corridor) {
    const auto& entrances = corridor.entrances;
    if (entrances.empty()) throw Error(ErrorCode::InvalidArgument, "corridor needs at least one entrance");
    std::set<std::string> entrance_set(entrances.begin(), entrances.end());
    if (entrance_set.size() != entrances.size())
        throw Error(ErrorCode::InvalidArgument, "corridor lists an entrance twice");
    for (const auto& room : entrances) g.index_of(room);

    // Condition 1, adjacency half: distinct entrances must be 2-adjacent.
    for (const auto& a : entrances) {
        for (const auto& b : entrances) {
            if (a != b && !g.has_edge(a, b))
                throw CorridorError(1, {a, b}, "entrances are not adjacent");
        }
    }

    // Candidate blocks: components after deleting the intra-corridor edges.
    const size_t n = g.room_count();
    std::vector<size_t> component(n, kInf);
    size_t component_count = 0;
    for (size_t start = 0; start < n; ++start) {
        if (component[start] != kInf) continue;
        size_t id = component_count++;
        std::deque<size_t> queue{start};
        component[start] = id;
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            for (size_t v : g.neighbors(u)) {
                if (component[v] != kInf) continue;
                if (entrance_set.count(g.rooms()[u]) && entrance_set.count(g.rooms()[v])) continue;
                component[v] = id;
                queue.push_back(v);
            }
        }
    }

    CorridorPartition partition;
    partition.blocks.assign(component_count, {});
    partition.entrances.assign(component_count, {});
    for (size_t i = 0; i < n; ++i) {
        partition.blocks[component[i]].push_back(g.rooms()[i]);
        if (entrance_set.count(g.rooms()[i])) partition.entrances[component[i]].push_back(g.rooms()[i]);
    }

    // Condition 1, uniqueness half: one entrance per block.
    for (size_t l = 0; l < partition.blocks.size(); ++l) {
        if (partition.entrances[l].size() == 1) continue;
        if (partition.entrances[l].empty())
            throw CorridorError(1, {partition.blocks[l].front(), ""}, "block contains no entrance");
        throw CorridorError(1, {partition.entrances[l][0], partition.entrances[l][1]},
                            "entrances share a block");
    }

    // Condition 2: blocks are closed under minimal sequences.
    for (const auto& block : partition.blocks) check_sequence_closure(g, block, 2);

    // Condition 3: cross-block geodesics factor through the entrances, which
    // is the length identity l(A,B) = l(A,C_i) + 1 + l(C_j,B).
    std::vector<std::vector<size_t>> dist(n);
    for (size_t i = 0; i < n; ++i) dist[i] = distances_from(g, i);
    for (size_t li = 0; li < partition.blocks.size(); ++li) {
        for (size_t lj = 0; lj < partition.blocks.size(); ++lj) {
            if (li == lj) continue;
            size_t ci = g.index_of(partition.entrances[li][0]);
            size_t cj = g.index_of(partition.entrances[lj][0]);
            for (const auto& a : partition.blocks[li]) {
                for (const auto& b : partition.blocks[lj]) {
                    size_t ia = g.index_of(a), ib = g.index_of(b);
                    if (dist[ia][ib] != dist[ia][ci] + 1 + dist[cj][ib])
                        throw CorridorError(3, {a, b},
                                            "geodesic does not factor through the corridor");
                }
            }
        }
    }
    return partition;
}

namespace {

// Deterministic presentation: rooms in graph order inside each block, blocks
// ordered by their first room.
void sort_partition(const LabeledDigraph& g, CorridorPartition& partition) {
    auto room_index = [&](const std::string& room) { return g.index_of(room); };
    std::vector<size_t> order(partition.blocks.size());
    for (size_t l = 0; l < partition.blocks.size(); ++l) {
        auto& block = partition.blocks[l];
        std::sort(block.begin(), block.end(),
                  [&](const auto& a, const auto& b) { return room_index(a) < room_index(b); });
        auto& entr = partition.entrances[l];
        std::sort(entr.begin(), entr.end(),
                  [&](const auto& a, const auto& b) { return room_index(a) < room_index(b); });
        order[l] = l;
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return room_index(partition.blocks[a].front()) < room_index(partition.blocks[b].front());
    });
    CorridorPartition sorted;
    for (size_t l : order) {
        sorted.blocks.push_back(std::move(partition.blocks[l]));
        sorted.entrances.push_back(std::move(partition.entrances[l]));
    }
    partition = std::move(sorted);
}

} // namespace

CorridorPartition multi_corridor_partition(const LabeledDigraph& g,
                                           const std::vector<CorridorSet>& corridors) {
    std::set<std::string> seen;
    for (const auto& corridor : corridors) {
        for (const auto& room : corridor.entrances) {
            if (!seen.insert(room).second)
                throw Error(ErrorCode::InvalidArgument,
                            "corridors are not pairwise disjoint at room '" + room + "'");
        }
    }

    CorridorPartition current;
    current.blocks.push_back(g.rooms());
    current.entrances.push_back({});

    for (const auto& corridor : corridors) {
        CorridorPartition refinement = corridor_partition(g, corridor);

        // Locate the unique block holding this corridor.
        size_t host = current.blocks.size();
        for (const auto& room : corridor.entrances) {
            size_t l = current.block_of(room);
            if (host == current.blocks.size()) {
                host = l;
            } else if (host != l) {
                throw Error(ErrorCode::NotNested,
                            "corridor entrance '" + room + "' straddles two blocks");
            }
        }

        std::set<std::string> host_rooms(current.blocks[host].begin(), current.blocks[host].end());
        CorridorPartition next;
        for (size_t l = 0; l < current.blocks.size(); ++l) {
            if (l == host) continue;
            next.blocks.push_back(current.blocks[l]);
            next.entrances.push_back(current.entrances[l]);
        }
        for (size_t w = 0; w < refinement.blocks.size(); ++w) {
            std::vector<std::string> piece;
            for (const auto& room : refinement.blocks[w]) {
                if (host_rooms.count(room)) piece.push_back(room);
            }
            if (piece.empty())
                throw Error(ErrorCode::NotNested, "corridor refinement left an empty block");
            std::vector<std::string> piece_entrances;
            for (const auto& room : piece) {
                if (seen.count(room)) piece_entrances.push_back(room);
            }
            next.blocks.push_back(std::move(piece));
            next.entrances.push_back(std::move(piece_entrances));
        }
        current = std::move(next);
    }

    // Verify the partition size and both block conditions of the refinement.
    if (!corridors.empty()) {
        size_t expected = 1;
        for (const auto& corridor : corridors) expected += corridor.entrances.size() - 1;
        if (current.blocks.size() != expected)
            throw Error(ErrorCode::NotNested,
                        "refinement produced " + std::to_string(current.blocks.size()) +
                            " blocks, expected " + std::to_string(expected));
        for (size_t l = 0; l < current.blocks.size(); ++l) {
            if (current.entrances[l].empty())
                throw Error(ErrorCode::NotNested, "a block contains no corridor entrance");
            std::set<std::string> block_rooms(current.blocks[l].begin(), current.blocks[l].end());
            for (const auto& corridor : corridors) {
                size_t hits = 0;
                for (const auto& room : corridor.entrances) hits += block_rooms.count(room);
                if (hits > 1)
                    throw Error(ErrorCode::NotNested, "a block meets a corridor in two rooms");
            }
            check_sequence_closure(g, current.blocks[l], 2);
        }
    }

    sort_partition(g, current);
    return current;
}

SquareMatrix build_Mq(const BlockGlueSpec& spec) {
    if (spec.matrices.empty()) throw Error(ErrorCode::InvalidArgument, "build_Mq needs at least one block");
    if (!spec.first_index.empty() && spec.first_index.size() != spec.matrices.size())
        throw Error(ErrorCode::InvalidArgument, "one distinguished index per block required");

    std::vector<std::string> all_labels;
    std::vector<std::string> first(spec.matrices.size());
    for (size_t k = 0; k < spec.matrices.size(); ++k) {
        const auto& labels = spec.matrices[k].labels();
        all_labels.insert(all_labels.end(), labels.begin(), labels.end());
        first[k] = spec.first_index.empty() ? labels.front() : spec.first_index[k];
        spec.matrices[k].index_of(first[k]); // must belong to the block
    }

    SquareMatrix out(all_labels); // rejects duplicate labels across blocks

    size_t row_base = 0;
    for (size_t h = 0; h < spec.matrices.size(); ++h) {
        const auto& block_h = spec.matrices[h];
        size_t col_base = 0;
        for (size_t k = 0; k < spec.matrices.size(); ++k) {
            const auto& block_k = spec.matrices[k];
            for (size_t i = 0; i < block_h.size(); ++i) {
                for (size_t j = 0; j < block_k.size(); ++j) {
                    if (h == k) {
                        out.at(row_base + i, col_base + j) = block_h.at(i, j);
                    } else {
                        out.at(row_base + i, col_base + j) =
                            spec.q * block_h.at(block_h.labels()[i], first[h]) *
                            block_k.at(first[k], block_k.labels()[j]);
                    }
                }
            }
            col_base += block_k.size();
        }
        row_base += block_h.size();
    }
    return out;
}

std::pair<LabeledDigraph, ValidationReport> glue_graphs(const std::vector<LabeledDigraph>& parts,
                                                        const std::vector<std::string>& entrances,
                                                        const Polynomial& label) {
    if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "glue needs at least one part");
    if (entrances.size() != parts.size())
        throw Error(ErrorCode::InvalidArgument, "one entrance per part required");

    GraphMode mode = parts.front().mode();
    for (const auto& part : parts) {
        if (part.mode() != mode) throw Error(ErrorCode::ModeMismatch, "parts mix graph modes");
    }
    if (mode == GraphMode::distance) {
        if (!label.is_monic_monomial())
            throw Error(ErrorCode::ModeMismatch, "distance corridor label must be a coefficient-1 monomial");
    } else {
        if (!label.is_constant() || label.constant_value() < Rational(0) ||
            label.constant_value() > Rational(1))
            throw Error(ErrorCode::ModeMismatch, "probabilistic corridor label must be in [0,1]");
    }

    std::vector<std::string> rooms;
    LabeledDigraph::EdgeMap edges;
    for (size_t k = 0; k < parts.size(); ++k) {
        parts[k].index_of(entrances[k]);
        for (const auto& room : parts[k].rooms()) rooms.push_back(room);
        for (const auto& [key, l] : parts[k].edges()) edges.emplace(key, l);
    }
    for (size_t i = 0; i < entrances.size(); ++i) {
        for (size_t j = 0; j < entrances.size(); ++j) {
            if (i != j) edges[{entrances[i], entrances[j]}] = label;
        }
    }

    LabeledDigraph glued = LabeledDigraph::create(mode, std::move(rooms), std::move(edges));
    return {glued, validate_axioms(glued)};
}

} // namespace catwalk
