#include "plstrat/homology.hpp"

#include "plstrat/errors.hpp"

#include <algorithm>
#include <bit>

namespace plstrat {

BoundaryMatrix::BoundaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((rows + 63) / 64), bits_(words_ * cols, 0) {}

bool BoundaryMatrix::get(std::size_t r, std::size_t c) const {
    return (bits_[c * words_ + r / 64] >> (r % 64)) & 1u;
}

void BoundaryMatrix::set(std::size_t r, std::size_t c, bool value) {
    auto& w = bits_[c * words_ + r / 64];
    const std::uint64_t mask = std::uint64_t{1} << (r % 64);
    w = value ? (w | mask) : (w & ~mask);
}

std::size_t BoundaryMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    std::vector<std::uint64_t> m = bits_;
    // pivot_of[row] = column whose lowest set bit is `row`
    std::vector<std::size_t> pivot_of(rows_, cols_);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::uint64_t* col = &m[c * words_];
        while (true) {
            std::size_t low = rows_;
            for (std::size_t w = words_; w-- > 0;) {
                if (col[w]) {
                    low = w * 64 + (63 - static_cast<std::size_t>(std::countl_zero(col[w])));
                    break;
                }
            }
            if (low == rows_) break;
            if (pivot_of[low] == cols_) {
                pivot_of[low] = c;
                ++rank;
                break;
            }
            const std::uint64_t* other = &m[pivot_of[low] * words_];
            for (std::size_t w = 0; w < words_; ++w) col[w] ^= other[w];
        }
    }
    return rank;
}

BoundaryMatrix BoundaryMatrix::multiply(const BoundaryMatrix& other) const {
    if (cols_ != other.rows_) fail(ErrorKind::Structural, "matrix shapes do not compose");
    BoundaryMatrix out(rows_, other.cols_);
    for (std::size_t c = 0; c < other.cols_; ++c)
        for (std::size_t k = 0; k < cols_; ++k)
            if (other.get(k, c))
                for (std::size_t w = 0; w < words_; ++w)
                    out.bits_[c * words_ + w] ^= bits_[k * words_ + w];
    return out;
}

bool BoundaryMatrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    auto cols = k.of_dimension(d);
    if (d == 0) {
        BoundaryMatrix m(1, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) m.set(0, c);
        return m;
    }
    auto rows = k.of_dimension(d - 1);
    BoundaryMatrix m(rows.size(), cols.size());
    // of_dimension returns contiguous index ranges, so row position is an offset.
    const std::size_t first_row = rows.empty() ? 0 : rows.front();
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (auto f : k.faces_of(cols[c])) m.set(f - first_row, c);
    return m;
}

std::size_t BettiVector::degree(int d) const {
    auto i = static_cast<std::size_t>(d + 1);
    return i < values.size() ? values[i] : 0;
}

bool BettiVector::any_nonzero() const {
    return std::any_of(values.begin(), values.end(), [](std::size_t v) { return v != 0; });
}

BettiVector reduced_betti(const SimplicialComplex& k) {
    const int top = k.dimension();
    BettiVector b;
    if (k.empty()) {
        b.values = {1};
        return b;
    }
    // rank_of[d + 1] = rank of the boundary map out of degree d (d = 0 .. top)
    std::vector<std::size_t> rank_of(static_cast<std::size_t>(top + 3), 0);
    for (int d = 0; d <= top; ++d) rank_of[static_cast<std::size_t>(d + 1)] = boundary_matrix(k, d).rank();
    for (int d = -1; d <= top; ++d) {
        std::size_t chains = d == -1 ? 1 : k.of_dimension(d).size();
        std::size_t out_rank = rank_of[static_cast<std::size_t>(d + 1)];
        std::size_t in_rank = rank_of[static_cast<std::size_t>(d + 2)];
        b.values.push_back(chains - out_rank - in_rank);
    }
    return b;
}

bool is_h_nontrivial(const SimplicialComplex& k) { return reduced_betti(k).any_nonzero(); }

}  // namespace plstrat
