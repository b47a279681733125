#pragma once

#include <vector>

#include "segrecalc/poly.hpp"
#include "segrecalc/rng.hpp"

namespace segrecalc {

// Square matrix over GF(p); rows[j][i] is the coefficient of x_i in the image
// of x_j under the associated coordinate change.
class FieldMatrix {
public:
    FieldMatrix(PrimeField field, int n);

    int size() const { return n_; }
    const PrimeField& field() const { return field_; }
    std::uint32_t at(int r, int c) const { return rows_[static_cast<std::size_t>(r * n_ + c)]; }
    void set(int r, int c, std::uint32_t v) { rows_[static_cast<std::size_t>(r * n_ + c)] = v; }

    static FieldMatrix identity(PrimeField field, int n);
    static FieldMatrix random(PrimeField field, int n, Rng& rng);
    // Redraws until invertible; consumes rng deterministically.
    static FieldMatrix random_invertible(PrimeField field, int n, Rng& rng);

    bool invertible() const;
    FieldMatrix inverse() const;  // throws input_error if singular
    FieldMatrix operator*(const FieldMatrix& o) const;

private:
    PrimeField field_;
    int n_;
    std::vector<std::uint32_t> rows_;
};

// Substitutes x_j -> sum_i M[j][i] * x_i in every generator. Preserves
// homogeneity and degrees; throws input_error on a singular matrix.
std::vector<Poly> linear_change(const std::vector<Poly>& gens, const FieldMatrix& m);

// Gaussian elimination helpers used by the sampling code and the test
// oracles: reduce a row against pivots in place, returning true if a new
// nonzero pivot row remains.
class RowSpace {
public:
    explicit RowSpace(PrimeField field, std::size_t width)
        : field_(field), width_(width) {}

    // Returns true (and absorbs the row) if the row enlarges the span.
    bool insert(std::vector<std::uint32_t> row);
    // True iff the row already lies in the span.
    bool contains(std::vector<std::uint32_t> row) const;
    std::size_t rank() const { return pivots_.size(); }

private:
    void reduce(std::vector<std::uint32_t>& row) const;

    PrimeField field_;
    std::size_t width_;
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> pivots_;
};

}  // namespace segrecalc
