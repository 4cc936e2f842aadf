#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace k2::gf2 {

/// Row-major bit-packed matrix over the two-element field.
class BitMatrix {
public:
    BitMatrix(int rows, int cols);

    /// +1 entries map to bit 0, -1 entries to bit 1.
    /// Throws std::invalid_argument on an empty or ragged grid.
    static BitMatrix from_signs(const std::vector<std::vector<int>>& grid);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const;
    void set(int r, int c, bool v);

    int rank() const;

private:
    int rows_;
    int cols_;
    int words_;
    std::vector<uint64_t> bits_;
};

/// Rank of up-to-64-column rows packed as single words. Overwrites `rows`.
int rank_rows64(std::span<uint64_t> rows, int cols);

}  // namespace k2::gf2
