#pragma once

#include "catwalk/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace catwalk {

// Dense square matrix over the polynomial ring with named row/column labels.
// Label order is the storage order; labels must be unique.
class SquareMatrix {
public:
    explicit SquareMatrix(std::vector<std::string> labels);

    static SquareMatrix identity(std::vector<std::string> labels);

    size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    size_t index_of(const std::string& label) const;

    Polynomial& at(size_t row, size_t col) { return entries_[row * labels_.size() + col]; }
    const Polynomial& at(size_t row, size_t col) const { return entries_[row * labels_.size() + col]; }
    Polynomial& at(const std::string& row, const std::string& col) { return at(index_of(row), index_of(col)); }
    const Polynomial& at(const std::string& row, const std::string& col) const {
        return at(index_of(row), index_of(col));
    }

    // Restriction to the given labels, in the given order.
    SquareMatrix submatrix(const std::vector<std::string>& keep) const;

    SquareMatrix operator*(const SquareMatrix& o) const;
    bool operator==(const SquareMatrix& o) const { return labels_ == o.labels_ && entries_ == o.entries_; }

private:
    std::vector<std::string> labels_;
    std::map<std::string, size_t> index_;
    std::vector<Polynomial> entries_; // row-major
};

} // namespace catwalk
