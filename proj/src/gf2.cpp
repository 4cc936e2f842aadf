#include "k2/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace k2::gf2 {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      bits_(static_cast<size_t>(rows) * words_, 0) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

BitMatrix BitMatrix::from_signs(const std::vector<std::vector<int>>& grid) {
    if (grid.empty() || grid[0].empty()) throw std::invalid_argument("empty sign grid");
    size_t cols = grid[0].size();
    for (const auto& row : grid)
        if (row.size() != cols) throw std::invalid_argument("ragged sign grid");
    BitMatrix m(static_cast<int>(grid.size()), static_cast<int>(cols));
    for (int r = 0; r < m.rows_; ++r)
        for (int c = 0; c < m.cols_; ++c)
            m.set(r, c, grid[r][c] < 0);
    return m;
}

bool BitMatrix::get(int r, int c) const {
    return (bits_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
}

void BitMatrix::set(int r, int c, bool v) {
    uint64_t& w = bits_[static_cast<size_t>(r) * words_ + c / 64];
    uint64_t mask = uint64_t{1} << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
}

int BitMatrix::rank() const {
    std::vector<uint64_t> work(bits_);
    if (words_ == 1) return rank_rows64({work.data(), static_cast<size_t>(rows_)}, cols_);

    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int word = c / 64;
        uint64_t mask = uint64_t{1} << (c % 64);
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (work[static_cast<size_t>(r) * words_ + word] & mask) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        for (int w = 0; w < words_; ++w)
            std::swap(work[static_cast<size_t>(rank) * words_ + w],
                      work[static_cast<size_t>(pivot) * words_ + w]);
        for (int r = 0; r < rows_; ++r) {
            if (r != rank && (work[static_cast<size_t>(r) * words_ + word] & mask)) {
                for (int w = 0; w < words_; ++w)
                    work[static_cast<size_t>(r) * words_ + w] ^=
                        work[static_cast<size_t>(rank) * words_ + w];
            }
        }
        ++rank;
    }
    return rank;
}

int rank_rows64(std::span<uint64_t> rows, int cols) {
    int rank = 0;
    int n = static_cast<int>(rows.size());
    for (int c = 0; c < cols && rank < n; ++c) {
        uint64_t mask = uint64_t{1} << c;
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (rows[r] & mask) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < n; ++r)
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace k2::gf2
