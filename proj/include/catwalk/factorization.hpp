#pragma once

#include "catwalk/corridor.hpp"
#include "catwalk/determinant.hpp"
#include "catwalk/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace catwalk {

// Determinant identity check: a fully expanded left-hand side against a
// factored right-hand side. equal == false is a first-class outcome, never
// an exception.
struct FactorizationReport {
    Polynomial lhs;
    std::vector<std::pair<std::string, Polynomial>> rhs_factors;
    Polynomial rhs_expanded;
    bool equal = false;

    static FactorizationReport make(Polynomial lhs,
                                    std::vector<std::pair<std::string, Polynomial>> factors);
};

// det of the n x n matrix with a_1..a_n on the diagonal and 1 elsewhere:
// prod a_i plus the alternating sum over index subsets of size <= n-2.
// Needs n >= 2.
Polynomial lemat_rhs(const std::vector<std::string>& vars);

// The matrix that lemat_rhs factors.
SquareMatrix lemat_matrix(const std::vector<std::string>& vars);

// The scalar factor of the block-glue determinant: 1 plus the alternating
// sum over subsets K of blocks (|K| >= 2) of q * a(first_k, first_k).
Polynomial thmat_corridor_factor(const std::vector<SquareMatrix>& blocks,
                                 const std::vector<std::string>& first_index, const Polynomial& q);

// det M_q(A_1..A_r) == corridor factor * prod det A_k.
FactorizationReport verify_thmat(const std::vector<SquareMatrix>& blocks, const Polynomial& q);

// det S_G == prod over corridors of (1 + alternating sum over entrance
// subsets of c_i * p(A,A)) * prod over blocks of det S_{G_k}.
FactorizationReport verify_th1(const LabeledDigraph& g, const std::vector<CorridorSet>& corridors);

// det D_G == prod over corridors of (1 + (#U_i - 1) q_i)(1 - q_i)^(#U_i - 1)
// * prod over blocks of det D_{G_k}.
FactorizationReport verify_th2(const LabeledDigraph& g, const std::vector<CorridorSet>& corridors);

// (1 + (m-1)q)(1-q)^(m-1) == 1 + sum_{k=2..m} (-1)^(k-1) (k-1) C(m,k) q^k.
bool th2_binomial_identity(unsigned m);

} // namespace catwalk
