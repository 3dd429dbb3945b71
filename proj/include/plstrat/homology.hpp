#pragma once

#include "plstrat/complex.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace plstrat {

/// Dense Z/2 matrix with bit-packed columns.
class BoundaryMatrix {
public:
    BoundaryMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);

    /// Rank over Z/2 by column reduction on a copy.
    std::size_t rank() const;

    /// this * other over Z/2.
    BoundaryMatrix multiply(const BoundaryMatrix& other) const;
    bool is_zero() const;

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;  // column-major, words_ words per column
};

/// Boundary map C_d -> C_{d-1} of K over Z/2. For d == 0 this is the
/// augmentation onto the single (-1)-dimensional empty simplex.
BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d);

/// Reduced Betti numbers indexed from degree -1: entry i is beta~_{i-1}.
/// The vector runs up to degree max(dim K, -1).
struct BettiVector {
    std::vector<std::size_t> values;

    std::size_t degree(int d) const;
    bool any_nonzero() const;
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector reduced_betti(const SimplicialComplex& k);

/// True iff some reduced Betti number (including degree -1) is nonzero.
bool is_h_nontrivial(const SimplicialComplex& k);

}  // namespace plstrat
