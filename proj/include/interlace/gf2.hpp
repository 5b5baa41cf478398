#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace interlace {

// Square symmetric 0/1 matrix over GF(2), indexed by an ordered list of
// element labels. Rows are bit-packed into one machine word, which caps the
// dimension at 64; the state sums that drive this code are 2^n or 3^n in
// the dimension, so the cap is never the binding constraint.
//
// Matrices are immutable values once built (the setters exist for
// construction); every operation below returns a fresh value.
class Gf2Matrix {
public:
    static constexpr std::size_t kMaxDim = 64;

    Gf2Matrix() = default;
    explicit Gf2Matrix(std::size_t n);  // labels "0".."n-1", zero matrix
    explicit Gf2Matrix(std::vector<std::string> labels);

    static Gf2Matrix identity(std::size_t n);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(const std::string& label) const;  // InvalidIndexError

    bool get(std::size_t i, std::size_t j) const;
    // Sets entry (i, j) and its mirror (j, i); diagonal allowed.
    void set_sym(std::size_t i, std::size_t j, bool value);
    uint64_t row(std::size_t i) const { return rows_[i]; }

    uint64_t full_mask() const;
    // Mask for a set of labels; throws InvalidIndexError naming the label.
    uint64_t mask_of(std::span<const std::string> subset) const;

    // Rank and nullity of the principal submatrix indexed by `mask`.
    std::pair<std::size_t, std::size_t> rank_nullity(uint64_t mask) const;
    std::pair<std::size_t, std::size_t> rank_nullity(std::span<const std::string> subset) const;
    bool invertible(uint64_t mask) const;

    // Principal pivot transform A*T. Requires A[T] invertible; throws
    // PivotError naming T otherwise. The empty pivot returns the matrix
    // unchanged (the empty principal submatrix counts as invertible).
    Gf2Matrix ppt(uint64_t mask) const;
    Gf2Matrix ppt(std::span<const std::string> subset) const;

    // Matrix-vector product y = A x over GF(2), vectors as bit masks.
    uint64_t apply(uint64_t x) const;

    // Principal submatrix keeping only the indices in `mask` (labels kept).
    Gf2Matrix restrict_to(uint64_t mask) const;
    // A \ v: drop one index.
    Gf2Matrix drop(std::size_t v) const;
    // Same entries with the label strings of two indices exchanged.
    Gf2Matrix with_labels_swapped(std::size_t a, std::size_t b) const;

    // Label-respecting equality: same label set, same entries between
    // equal labels, regardless of storage order.
    bool operator==(const Gf2Matrix& o) const;
    bool operator!=(const Gf2Matrix& o) const { return !(*this == o); }

private:
    std::vector<std::string> labels_;
    std::vector<uint64_t> rows_;
};

// Rank of a set of GF(2) row vectors (used by the isotropic-system code,
// shared here with the matrix elimination).
std::size_t gf2_rank(std::vector<uint64_t> rows);

}  // namespace interlace
