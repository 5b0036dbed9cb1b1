#include "catwalk/matrix.hpp"

#include "catwalk/errors.hpp"

namespace catwalk {

SquareMatrix::SquareMatrix(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error(ErrorCode::InvalidArgument, "matrix needs at least one label");
    for (size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate matrix label '" + labels_[i] + "'");
    }
    entries_.assign(labels_.size() * labels_.size(), Polynomial());
}

SquareMatrix SquareMatrix::identity(std::vector<std::string> labels) {
    SquareMatrix m(std::move(labels));
    for (size_t i = 0; i < m.size(); ++i) m.at(i, i) = Polynomial(1);
    return m;
}

size_t SquareMatrix::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "unknown matrix label '" + label + "'");
    return it->second;
}

SquareMatrix SquareMatrix::submatrix(const std::vector<std::string>& keep) const {
    SquareMatrix out(keep);
    for (size_t i = 0; i < keep.size(); ++i) {
        size_t src_i = index_of(keep[i]);
        for (size_t j = 0; j < keep.size(); ++j) out.at(i, j) = at(src_i, index_of(keep[j]));
    }
    return out;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
    if (size() != o.size()) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch in product");
    SquareMatrix out(labels_);
    for (size_t i = 0; i < size(); ++i) {
        for (size_t j = 0; j < size(); ++j) {
            Polynomial sum;
            for (size_t k = 0; k < size(); ++k) sum += at(i, k) * o.at(k, j);
            out.at(i, j) = sum;
        }
    }
    return out;
}

} // namespace catwalk
