#include "interlace/gf2.hpp"

#include <bit>
#include <sstream>

#include "interlace/error.hpp"

namespace interlace {

namespace {

std::vector<std::string> numbered_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t n) : Gf2Matrix(numbered_labels(n)) {}

Gf2Matrix::Gf2Matrix(std::vector<std::string> labels)
    : labels_(std::move(labels)), rows_(labels_.size(), 0) {
    if (labels_.size() > kMaxDim)
        throw SizeCapError("matrix dimension " + std::to_string(labels_.size()) +
                           " exceeds cap of " + std::to_string(kMaxDim));
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set_sym(i, i, true);
    return m;
}

std::size_t Gf2Matrix::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw InvalidIndexError("unknown label '" + label + "'");
}

bool Gf2Matrix::get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1; }

void Gf2Matrix::set_sym(std::size_t i, std::size_t j, bool value) {
    if (i >= dim() || j >= dim()) throw InvalidIndexError("matrix index out of range");
    if (value) {
        rows_[i] |= uint64_t{1} << j;
        rows_[j] |= uint64_t{1} << i;
    } else {
        rows_[i] &= ~(uint64_t{1} << j);
        rows_[j] &= ~(uint64_t{1} << i);
    }
}

uint64_t Gf2Matrix::full_mask() const {
    return dim() == 64 ? ~uint64_t{0} : (uint64_t{1} << dim()) - 1;
}

uint64_t Gf2Matrix::mask_of(std::span<const std::string> subset) const {
    uint64_t mask = 0;
    for (const auto& label : subset) mask |= uint64_t{1} << index_of(label);
    return mask;
}

std::pair<std::size_t, std::size_t> Gf2Matrix::rank_nullity(uint64_t mask) const {
    // Eliminate the masked rows restricted to the masked columns; no
    // compaction needed, the untouched columns are zeroed out.
    uint64_t basis[kMaxDim];
    std::size_t rank = 0;
    for (uint64_t rest = mask; rest;) {
        std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
        rest &= rest - 1;
        uint64_t row = rows_[v] & mask;
        for (std::size_t b = 0; b < rank; ++b) {
            uint64_t lead = basis[b] & (~basis[b] + 1);
            if (row & lead) row ^= basis[b];
        }
        if (row) basis[rank++] = row;
    }
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    return {rank, size - rank};
}

std::pair<std::size_t, std::size_t> Gf2Matrix::rank_nullity(
    std::span<const std::string> subset) const {
    return rank_nullity(mask_of(subset));
}

bool Gf2Matrix::invertible(uint64_t mask) const {
    return rank_nullity(mask).second == 0;
}

Gf2Matrix Gf2Matrix::ppt(uint64_t mask) const {
    if (mask == 0) return *this;  // empty pivot is the identity operation
    std::size_t n = dim();

    // Gauss-Jordan on [P | I] with P = A[T], tracking the T positions.
    std::vector<std::size_t> t_pos;
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) t_pos.push_back(i);
    std::size_t t = t_pos.size();

    // P compacted to t x t, augmented with the identity on the right.
    std::vector<uint64_t> aug(t, 0);
    for (std::size_t r = 0; r < t; ++r) {
        for (std::size_t c = 0; c < t; ++c)
            if (get(t_pos[r], t_pos[c])) aug[r] |= uint64_t{1} << c;
        aug[r] |= uint64_t{1} << (t + r);
    }
    for (std::size_t col = 0; col < t; ++col) {
        std::size_t pivot = col;
        while (pivot < t && !((aug[pivot] >> col) & 1)) ++pivot;
        if (pivot == t) {
            std::ostringstream os;
            os << "pivot not defined: singular principal submatrix {";
            for (std::size_t i = 0; i < t; ++i) os << (i ? "," : "") << labels_[t_pos[i]];
            os << "}";
            throw PivotError(os.str());
        }
        std::swap(aug[col], aug[pivot]);
        for (std::size_t r = 0; r < t; ++r)
            if (r != col && ((aug[r] >> col) & 1)) aug[r] ^= aug[col];
    }
    // Pinv compacted.
    std::vector<uint64_t> pinv(t, 0);
    for (std::size_t r = 0; r < t; ++r) pinv[r] = aug[r] >> t;

    // Complement positions.
    std::vector<std::size_t> u_pos;
    for (std::size_t i = 0; i < n; ++i)
        if (!((mask >> i) & 1)) u_pos.push_back(i);
    std::size_t u = u_pos.size();

    // Q[t][u], R = Q^T by symmetry of A.
    auto q_entry = [&](std::size_t r, std::size_t c) { return get(t_pos[r], u_pos[c]); };

    // PinvQ[t][u]
    std::vector<uint64_t> pinv_q(t, 0);
    for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = 0; c < u; ++c) {
            bool bit = false;
            for (std::size_t k = 0; k < t; ++k)
                if (((pinv[r] >> k) & 1) && q_entry(k, c)) bit = !bit;
            if (bit) pinv_q[r] |= uint64_t{1} << c;
        }

    Gf2Matrix out(labels_);
    // T x T block: Pinv.
    for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = 0; c < t; ++c)
            if ((pinv[r] >> c) & 1) out.set_sym(t_pos[r], t_pos[c], true);
    // T x U and U x T blocks: Pinv Q (signs vanish over GF(2)).
    for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = 0; c < u; ++c)
            if ((pinv_q[r] >> c) & 1) out.set_sym(t_pos[r], u_pos[c], true);
    // U x U block: S + R Pinv Q = S + Q^T (Pinv Q).
    for (std::size_t r = 0; r < u; ++r)
        for (std::size_t c = r; c < u; ++c) {
            bool bit = get(u_pos[r], u_pos[c]);
            for (std::size_t k = 0; k < t; ++k)
                if (q_entry(k, r) && ((pinv_q[k] >> c) & 1)) bit = !bit;
            out.set_sym(u_pos[r], u_pos[c], bit);
        }
    return out;
}

Gf2Matrix Gf2Matrix::ppt(std::span<const std::string> subset) const {
    return ppt(mask_of(subset));
}

uint64_t Gf2Matrix::apply(uint64_t x) const {
    uint64_t y = 0;
    for (std::size_t i = 0; i < dim(); ++i)
        if (std::popcount(rows_[i] & x) & 1) y |= uint64_t{1} << i;
    return y;
}

Gf2Matrix Gf2Matrix::restrict_to(uint64_t mask) const {
    std::vector<std::string> labels;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < dim(); ++i)
        if ((mask >> i) & 1) {
            labels.push_back(labels_[i]);
            keep.push_back(i);
        }
    Gf2Matrix out(std::move(labels));
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = r; c < keep.size(); ++c)
            if (get(keep[r], keep[c])) out.set_sym(r, c, true);
    return out;
}

Gf2Matrix Gf2Matrix::drop(std::size_t v) const {
    if (v >= dim()) throw InvalidIndexError("matrix index out of range");
    return restrict_to(full_mask() & ~(uint64_t{1} << v));
}

Gf2Matrix Gf2Matrix::with_labels_swapped(std::size_t a, std::size_t b) const {
    if (a >= dim() || b >= dim()) throw InvalidIndexError("matrix index out of range");
    Gf2Matrix out = *this;
    std::swap(out.labels_[a], out.labels_[b]);
    return out;
}

bool Gf2Matrix::operator==(const Gf2Matrix& o) const {
    if (dim() != o.dim()) return false;
    std::vector<std::size_t> map(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < dim(); ++j)
            if (o.labels_[j] == labels_[i]) {
                map[i] = j;
                found = true;
                break;
            }
        if (!found) return false;
    }
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (get(i, j) != o.get(map[i], map[j])) return false;
    return true;
}

std::size_t gf2_rank(std::vector<uint64_t> rows) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        uint64_t row = rows[i];
        for (std::size_t b = 0; b < rank; ++b) {
            uint64_t lead = rows[b] & (~rows[b] + 1);
            if (row & lead) row ^= rows[b];
        }
        if (row) rows[rank++] = row;
    }
    return rank;
}

}  // namespace interlace
