#pragma once

#include "catwalk/errors.hpp"
#include "catwalk/exec.hpp"
#include "catwalk/matrix.hpp"
#include "catwalk/polynomial.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace catwalk {

enum class GraphMode {
    probabilistic, // labels are rational constants in [0,1]
    distance,      // labels are coefficient-1 monomials, self-loops are 1
};

// Connected digraph of rooms with labeled directed edges and mandatory
// self-loops. Edges between distinct rooms come in symmetric pairs (the
// labels may differ). Immutable after construction.
class LabeledDigraph {
public:
    using EdgeMap = std::map<std::pair<std::string, std::string>, Polynomial>;

    // Validates the structural invariants and throws InvalidGraph on any
    // violation. Distance mode fills in missing self-loops with 1.
    static LabeledDigraph create(GraphMode mode, std::vector<std::string> rooms, EdgeMap edges);

    GraphMode mode() const { return mode_; }
    const std::vector<std::string>& rooms() const { return rooms_; }
    const EdgeMap& edges() const { return edges_; }
    size_t room_count() const { return rooms_.size(); }

    size_t index_of(const std::string& room) const;
    bool has_room(const std::string& room) const { return index_.count(room) > 0; }
    bool has_edge(const std::string& from, const std::string& to) const;
    const Polynomial& label(const std::string& from, const std::string& to) const;

    // Non-self-loop out-neighbors as room indices, in room order.
    const std::vector<size_t>& neighbors(size_t room_index) const { return adjacency_[room_index]; }

    // Subgraph induced by the given rooms (their order is kept). The subset
    // must stay connected.
    LabeledDigraph induced(const std::vector<std::string>& keep) const;

    // Same graph with rooms permuted into the given order.
    LabeledDigraph reordered(const std::vector<std::string>& new_order) const;

private:
    LabeledDigraph() = default;

    GraphMode mode_ = GraphMode::distance;
    std::vector<std::string> rooms_;
    std::map<std::string, size_t> index_;
    EdgeMap edges_;
    std::vector<std::vector<size_t>> adjacency_;
};

// All minimal sequences (shortest directed paths) between two rooms.
// `length` counts edges; the single sequence from a room to itself is (A)
// with length 0.
struct MinimalSequenceSet {
    std::string source;
    std::string target;
    size_t length = 0;
    std::vector<std::vector<std::string>> sequences;
};

MinimalSequenceSet minimal_sequences(const LabeledDigraph& g, const std::string& from,
                                     const std::string& to, size_t explosion_cap = 1'000'000);

struct ValidationIssue {
    std::string check;              // "multiset" | "extension" | "row-sum" | "diagonal"
    std::vector<std::string> rooms; // the violating pair or room
    std::string detail;
};

struct ValidationReport {
    bool multiset_ok = true;
    bool extension_ok = true;
    bool normalization_ok = true; // row sums (probabilistic) or unit diagonal (distance)
    std::vector<ValidationIssue> issues;

    bool passed() const { return multiset_ok && extension_ok && normalization_ok; }
};

// Checks the walking-cat axioms: equal label multisets across all minimal
// sequences of every pair, well-definedness of the extension, and extended
// row sums of 1 (probabilistic) or a unit diagonal (distance). Violations
// are report entries, never exceptions.
ValidationReport validate_axioms(const LabeledDigraph& g);

class AxiomError : public Error {
public:
    explicit AxiomError(ValidationReport report)
        : Error(ErrorCode::AxiomViolation, "graph fails the walking-cat axioms"),
          report_(std::move(report)) {}

    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

struct ExtendedKernel {
    // entry(row A, col B) = extended label of B -> A, i.e. the S_G / D_G
    // column convention: column B holds the labels out of room B.
    SquareMatrix matrix;
    GraphMode mode;
};

// Extends the edge labels to all room pairs by multiplying along minimal
// sequences. Throws AxiomError when validate_axioms fails.
ExtendedKernel extended_kernel(const LabeledDigraph& g, Exec exec = Exec::parallel);

// Same matrix without the axiom check: the product is taken along one
// arbitrary minimal sequence per pair.
SquareMatrix path_product_matrix(const LabeledDigraph& g, Exec exec = Exec::parallel);

// True iff p(A,B) = d(A,B)(sigma) / sum_C d(A,C)(sigma) for every ordered
// pair, both sides taken from the extended kernels. Requires equal room
// sets; the edge sets may differ.
bool check_dual(const LabeledDigraph& gp, const LabeledDigraph& gd,
                const std::map<std::string, Rational>& sigma);

// The probabilistic graph defined by normalizing a distance graph at a
// positive assignment. Every room pair becomes an edge, so the result's
// extension is the normalization itself.
LabeledDigraph normalized_dual(const LabeledDigraph& gd, const std::map<std::string, Rational>& sigma);

} // namespace catwalk
