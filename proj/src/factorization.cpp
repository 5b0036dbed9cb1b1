#include "catwalk/factorization.hpp"

#include <set>

namespace catwalk {

FactorizationReport FactorizationReport::make(Polynomial lhs,
                                              std::vector<std::pair<std::string, Polynomial>> factors) {
    FactorizationReport report;
    report.lhs = std::move(lhs);
    report.rhs_factors = std::move(factors);
    report.rhs_expanded = Polynomial(1);
    for (const auto& [_, f] : report.rhs_factors) report.rhs_expanded *= f;
    report.equal = report.lhs == report.rhs_expanded;
    return report;
}

Polynomial lemat_rhs(const std::vector<std::string>& vars) {
    const size_t n = vars.size();
    if (n < 2) throw Error(ErrorCode::BadArity, "lemat_rhs needs at least two variables");

    Polynomial sum(1); // placeholder, rebuilt below
    sum = Polynomial();
    Polynomial full(1);
    for (const auto& v : vars) full *= Polynomial::variable(v);
    sum += full;

    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        size_t size = static_cast<size_t>(__builtin_popcount(mask));
        if (size > n - 2) continue;
        long missing = static_cast<long>(n - size);
        Polynomial term((missing - 1) % 2 == 0 ? missing - 1 : -(missing - 1));
        for (size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) term *= Polynomial::variable(vars[i]);
        }
        sum += term;
    }
    return sum;
}

SquareMatrix lemat_matrix(const std::vector<std::string>& vars) {
    if (vars.size() < 2) throw Error(ErrorCode::BadArity, "lemat_matrix needs at least two variables");
    SquareMatrix m(vars);
    for (size_t i = 0; i < vars.size(); ++i) {
        for (size_t j = 0; j < vars.size(); ++j)
            m.at(i, j) = i == j ? Polynomial::variable(vars[i]) : Polynomial(1);
    }
    return m;
}

namespace {

// 1 + sum over K (|K| >= 2) of (-1)^(|K|-1) (|K|-1) prod_{k in K} atoms[k].
// The corridor factor of every theorem here has this shape; the atoms vary.
Polynomial alternating_subset_factor(const std::vector<Polynomial>& atoms) {
    Polynomial factor(1);
    const size_t r = atoms.size();
    for (uint32_t mask = 0; mask < (1u << r); ++mask) {
        size_t size = static_cast<size_t>(__builtin_popcount(mask));
        if (size < 2) continue;
        Polynomial term(size % 2 == 0 ? -static_cast<long>(size - 1) : static_cast<long>(size - 1));
        for (size_t k = 0; k < r; ++k) {
            if (mask & (1u << k)) term *= atoms[k];
        }
        factor += term;
    }
    return factor;
}

} // namespace

Polynomial thmat_corridor_factor(const std::vector<SquareMatrix>& blocks,
                                 const std::vector<std::string>& first_index, const Polynomial& q) {
    std::vector<Polynomial> atoms;
    atoms.reserve(blocks.size());
    for (size_t k = 0; k < blocks.size(); ++k) {
        const std::string& first = first_index.empty() ? blocks[k].labels().front() : first_index[k];
        atoms.push_back(q * blocks[k].at(first, first));
    }
    return alternating_subset_factor(atoms);
}

FactorizationReport verify_thmat(const std::vector<SquareMatrix>& blocks, const Polynomial& q) {
    BlockGlueSpec spec{blocks, {}, q};
    Polynomial lhs = det_bareiss(build_Mq(spec));

    std::vector<std::pair<std::string, Polynomial>> factors;
    factors.emplace_back("corridor factor", thmat_corridor_factor(blocks, {}, q));
    for (size_t k = 0; k < blocks.size(); ++k)
        factors.emplace_back("det A_" + std::to_string(k + 1), det_bareiss(blocks[k]));
    return FactorizationReport::make(std::move(lhs), std::move(factors));
}

namespace {

// Hypothesis shared by both corridor theorems: inside each corridor, all
// entrance-to-entrance labels equal the corridor's label.
void check_corridor_labels(const LabeledDigraph& g, const CorridorSet& corridor) {
    if (g.mode() == GraphMode::probabilistic) {
        if (!corridor.label.is_constant() || corridor.label.constant_value() < Rational(0) ||
            corridor.label.constant_value() > Rational(1))
            throw Error(ErrorCode::LabelMismatch, "corridor label must be a constant in [0,1]");
    } else {
        if (!corridor.label.is_monic_monomial() || corridor.label.monic_monomial().degree() != 1)
            throw Error(ErrorCode::LabelMismatch, "corridor label must be a single variable");
    }
    for (const auto& a : corridor.entrances) {
        for (const auto& b : corridor.entrances) {
            if (a == b) continue;
            if (g.label(a, b) != corridor.label)
                throw Error(ErrorCode::LabelMismatch, "edge (" + a + "," + b + ") is labeled " +
                                                          g.label(a, b).str() + ", corridor expects " +
                                                          corridor.label.str());
        }
    }
}

FactorizationReport verify_corridor_theorem(const LabeledDigraph& g,
                                            const std::vector<CorridorSet>& corridors) {
    for (const auto& corridor : corridors) check_corridor_labels(g, corridor);

    CorridorPartition partition = multi_corridor_partition(g, corridors);
    ExtendedKernel kernel = extended_kernel(g);
    Polynomial lhs = det_bareiss(kernel.matrix);

    std::vector<std::pair<std::string, Polynomial>> factors;
    for (size_t i = 0; i < corridors.size(); ++i) {
        const auto& corridor = corridors[i];
        const std::string tag = "corridor " + std::to_string(i + 1);
        if (g.mode() == GraphMode::probabilistic) {
            std::vector<Polynomial> atoms;
            for (const auto& room : corridor.entrances)
                atoms.push_back(corridor.label * kernel.matrix.at(room, room));
            factors.emplace_back(tag, alternating_subset_factor(atoms));
        } else {
            const long width = static_cast<long>(corridor.entrances.size());
            Polynomial q = corridor.label;
            factors.emplace_back(tag + " (1+(#U-1)q)", Polynomial(1) + Polynomial(width - 1) * q);
            factors.emplace_back(tag + " (1-q)^(#U-1)",
                                 (Polynomial(1) - q).pow(static_cast<unsigned>(width - 1)));
        }
    }
    for (size_t k = 0; k < partition.blocks.size(); ++k) {
        factors.emplace_back("det block " + std::to_string(k + 1),
                             det_bareiss(kernel.matrix.submatrix(partition.blocks[k])));
    }
    return FactorizationReport::make(std::move(lhs), std::move(factors));
}

} // namespace

FactorizationReport verify_th1(const LabeledDigraph& g, const std::vector<CorridorSet>& corridors) {
    if (g.mode() != GraphMode::probabilistic)
        throw Error(ErrorCode::ModeMismatch, "verify_th1 needs a probabilistic graph");
    return verify_corridor_theorem(g, corridors);
}

FactorizationReport verify_th2(const LabeledDigraph& g, const std::vector<CorridorSet>& corridors) {
    if (g.mode() != GraphMode::distance)
        throw Error(ErrorCode::ModeMismatch, "verify_th2 needs a distance graph");
    return verify_corridor_theorem(g, corridors);
}

bool th2_binomial_identity(unsigned m) {
    if (m < 1) throw Error(ErrorCode::BadArity, "identity needs m >= 1");
    Polynomial q = Polynomial::variable("q");
    Polynomial lhs = (Polynomial(1) + Polynomial(static_cast<long>(m - 1)) * q) *
                     (Polynomial(1) - q).pow(m - 1);

    // Binomial coefficients C(m, k) as exact integers.
    std::vector<Rational> binom(m + 1);
    binom[0] = Rational(1);
    for (unsigned k = 1; k <= m; ++k)
        binom[k] = binom[k - 1] * Rational(static_cast<long>(m - k + 1)) / Rational(static_cast<long>(k));

    Polynomial rhs(1);
    for (unsigned k = 2; k <= m; ++k) {
        Rational coef = binom[k] * Rational(static_cast<long>(k - 1));
        if (k % 2 == 0) coef = -coef;
        rhs += Polynomial(Monomial::var("q", static_cast<int>(k)), coef);
    }
    return lhs == rhs;
}

} // namespace catwalk
