#pragma once

#include "catwalk/graph.hpp"
#include "catwalk/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace catwalk {

// A set of entrance rooms joined pairwise by corridor edges that all carry
// one shared label: a constant in a probabilistic host, a single variable in
// a distance host.
struct CorridorSet {
    std::vector<std::string> entrances;
    Polynomial label;
};

// Block decomposition of the room set. Block l holds the rooms of one
// apartment; entrances[l] lists the corridor entrances lying in it.
struct CorridorPartition {
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::vector<std::string>> entrances;

    size_t block_of(const std::string& room) const;
};

class CorridorError : public Error {
public:
    CorridorError(int condition, std::pair<std::string, std::string> witness, const std::string& message)
        : Error(ErrorCode::NotACorridor, "condition " + std::to_string(condition) + ": " + message),
          condition_(condition), witness_(std::move(witness)) {}

    int condition() const { return condition_; }
    const std::pair<std::string, std::string>& witness() const { return witness_; }

private:
    int condition_;
    std::pair<std::string, std::string> witness_;
};

// Splits the rooms along one corridor: candidate blocks are the components
// left after removing the edges between distinct entrances, then all three
// corridor conditions are re-verified against the host graph's minimal
// sequences. Throws CorridorError naming the violated condition.
CorridorPartition corridor_partition(const LabeledDigraph& g, const CorridorSet& corridor);

// Iterated refinement over several pairwise-disjoint corridors; the result
// has sum(#U_i) - r + 1 blocks, each closed under minimal sequences and
// meeting every corridor in at most one room (both verified). An empty
// corridor list yields the single block V. Throws NotNested when a corridor
// straddles two blocks of the partial partition.
CorridorPartition multi_corridor_partition(const LabeledDigraph& g,
                                           const std::vector<CorridorSet>& corridors);

// Block matrices glued through one distinguished index per block.
struct BlockGlueSpec {
    std::vector<SquareMatrix> matrices;
    // One label per matrix; empty means "first label of each".
    std::vector<std::string> first_index;
    Polynomial q;
};

// The square matrix with the given diagonal blocks and off-diagonal entries
// q * a(i, first_h) * a(first_k, j) for i in block h, j in block k.
SquareMatrix build_Mq(const BlockGlueSpec& spec);

// Disjoint union of the parts plus corridor edges between every pair of
// distinct entrances, all carrying `label`. Distance-mode results satisfy
// the axioms; probabilistic gluing changes row sums, so the validation
// report is returned for the caller to act on.
std::pair<LabeledDigraph, ValidationReport> glue_graphs(const std::vector<LabeledDigraph>& parts,
                                                        const std::vector<std::string>& entrances,
                                                        const Polynomial& label);

} // namespace catwalk
