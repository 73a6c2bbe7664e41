#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "rsel/value_sequence.hpp"

namespace rsel {

namespace detail {

inline constexpr std::size_t kMaxBlock = 12;

/// Ballot numbers C(p, q) for 0 <= p <= q <= kMaxBlock; C(b, b) is the b-th Catalan number.
struct BallotTable {
    std::array<std::array<std::uint32_t, kMaxBlock + 1>, kMaxBlock + 1> c{};

    constexpr BallotTable() {
        c[0][0] = 1;
        for (std::size_t q = 1; q <= kMaxBlock; ++q)
            for (std::size_t p = 0; p <= q; ++p)
                c[p][q] = (p <= q - 1 ? c[p][q - 1] : 0) + (p >= 1 ? c[p - 1][q] : 0);
    }

    constexpr std::uint32_t operator()(std::size_t p, std::size_t q) const { return p <= q ? c[p][q] : 0; }
    constexpr std::uint32_t catalan(std::size_t b) const { return c[b][b]; }
};

inline constexpr BallotTable kBallot{};

/// Cartesian-tree number of a block of `width` positions, in [0, Catalan(width)).
///
/// `less(a, b)` compares block offsets. An element pops only strictly greater
/// stack entries, so equal values keep the earlier one as the ancestor; two
/// blocks with equal numbers therefore agree on every leftmost-minimum query.
template <typename Less>
std::uint32_t cartesian_number(std::size_t width, Less less) {
    assert(width <= kMaxBlock);
    std::array<std::size_t, kMaxBlock> stack{};
    std::size_t height = 0;
    std::size_t q = width;
    std::uint32_t number = 0;
    for (std::size_t t = 0; t < width; ++t) {
        while (height > 0 && less(t, stack[height - 1])) {
            number += kBallot(width - t - 1, q);
            --q;
            --height;
        }
        stack[height++] = t;
    }
    return number;
}

}  // namespace detail

/// Linear-space range-minimum index with constant-time leftmost-minimum queries.
///
/// Three tiers over the array:
///   - blocks of b = ceil(lg n / 4) elements, answered by lookup tables keyed by
///     the block's Cartesian-tree number (one b*b table per shape that occurs);
///   - superblocks of m = ceil(lg^2 n / b) blocks, each with a sparse table over
///     its block minima stored as 16-bit offsets;
///   - one sparse table over superblock minima.
/// The last two tiers take O(n lg lg n / lg n) and O(n / lg n) words, the shape
/// tables O(sqrt(n) lg^2 n) bytes, and the per-block shape slots n / b words.
template <std::totally_ordered T>
class BlockRmq {
public:
    static constexpr const char* name = "block";

    BlockRmq() = default;

    explicit BlockRmq(ValueSequence<T> seq) : seq_(std::move(seq)) {
        const std::size_t n = seq_.size();
        if (n == 0)
            return;
        const std::size_t lg = std::max<std::size_t>(1, std::bit_width(n - 1));
        block_ = std::clamp<std::size_t>((lg + 3) / 4, 1, detail::kMaxBlock);
        per_super_ = std::max<std::size_t>(1, (lg * lg + block_ - 1) / block_);
        super_ = block_ * per_super_;
        assert(super_ <= std::numeric_limits<std::uint16_t>::max());
        num_blocks_ = (n + block_ - 1) / block_;
        num_supers_ = (num_blocks_ + per_super_ - 1) / per_super_;

        build_shapes();
        build_local();
        build_top();
    }

    std::size_t size() const noexcept { return seq_.size(); }
    const ValueSequence<T>& sequence() const noexcept { return seq_; }

    std::size_t block_size() const noexcept { return block_; }
    std::size_t blocks_per_superblock() const noexcept { return per_super_; }
    std::size_t distinct_shapes() const noexcept { return block_ == 0 ? 0 : answers_.size() / (block_ * block_); }

    /// Leftmost position of a minimum in [lo, hi], 0-based inclusive. Unchecked.
    std::size_t argmin(std::size_t lo, std::size_t hi) const noexcept {
        assert(lo <= hi && hi < size());
        const std::size_t first = lo / block_;
        const std::size_t last = hi / block_;
        if (first == last)
            return in_block(first, lo - first * block_, hi - first * block_);

        std::size_t best = in_block(first, lo - first * block_, block_ - 1);
        if (first + 1 < last)
            best = leftmost(best, blocks_argmin(first + 1, last - 1));
        return leftmost(best, in_block(last, 0, hi - last * block_));
    }

    /// Auxiliary storage in 64-bit words; the indexed values themselves are not counted.
    std::size_t space_in_words() const noexcept {
        const std::size_t bytes = shape_of_block_.size() * sizeof(std::uint32_t) + answers_.size() +
                                  local_.size() * sizeof(std::uint16_t) + top_.size() * sizeof(std::size_t);
        constexpr std::size_t scalars = 8;
        return (bytes + sizeof(std::uint64_t) - 1) / sizeof(std::uint64_t) + scalars;
    }

private:
    // a lies left of b; ties keep a.
    std::size_t leftmost(std::size_t a, std::size_t b) const noexcept { return seq_[b] < seq_[a] ? b : a; }

    std::size_t in_block(std::size_t block, std::size_t from, std::size_t to) const noexcept {
        const std::uint8_t* table = &answers_[std::size_t{shape_of_block_[block]} * block_ * block_];
        return block * block_ + table[from * block_ + to];
    }

    std::size_t local_levels() const noexcept { return static_cast<std::size_t>(std::bit_width(per_super_)); }

    // Leftmost minimum over blocks [x, y] of superblock s, offsets relative to s.
    std::size_t local_argmin(std::size_t s, std::size_t x, std::size_t y) const noexcept {
        const std::size_t level = static_cast<std::size_t>(std::bit_width(y - x + 1)) - 1;
        const std::uint16_t* row = &local_[(s * local_levels() + level) * per_super_];
        const std::size_t base = s * super_;
        return leftmost(base + row[x], base + row[y + 1 - (std::size_t{1} << level)]);
    }

    // Leftmost minimum over superblocks [x, y].
    std::size_t top_argmin(std::size_t x, std::size_t y) const noexcept {
        const std::size_t level = static_cast<std::size_t>(std::bit_width(y - x + 1)) - 1;
        const std::size_t* row = &top_[level * num_supers_];
        return leftmost(row[x], row[y + 1 - (std::size_t{1} << level)]);
    }

    // Leftmost minimum over whole blocks [x, y].
    std::size_t blocks_argmin(std::size_t x, std::size_t y) const noexcept {
        const std::size_t sx = x / per_super_;
        const std::size_t sy = y / per_super_;
        if (sx == sy)
            return local_argmin(sx, x - sx * per_super_, y - sx * per_super_);
        std::size_t best = local_argmin(sx, x - sx * per_super_, per_super_ - 1);
        if (sx + 1 < sy)
            best = leftmost(best, top_argmin(sx + 1, sy - 1));
        return leftmost(best, local_argmin(sy, 0, y - sy * per_super_));
    }

    void build_shapes() {
        const std::size_t n = size();
        const std::size_t cells = block_ * block_;
        std::vector<std::uint32_t> slot_of_number(detail::kBallot.catalan(block_),
                                                  std::numeric_limits<std::uint32_t>::max());
        shape_of_block_.resize(num_blocks_);
        for (std::size_t block = 0; block < num_blocks_; ++block) {
            const std::size_t start = block * block_;
            // Positions past the end of a short final block act as +infinity.
            auto less = [&](std::size_t a, std::size_t b) {
                if (start + b >= n)
                    return start + a < n;
                if (start + a >= n)
                    return false;
                return seq_[start + a] < seq_[start + b];
            };
            const std::uint32_t number = detail::cartesian_number(block_, less);
            std::uint32_t& slot = slot_of_number[number];
            if (slot == std::numeric_limits<std::uint32_t>::max()) {
                slot = static_cast<std::uint32_t>(answers_.size() / cells);
                answers_.resize(answers_.size() + cells);
                std::uint8_t* table = &answers_[std::size_t{slot} * cells];
                for (std::size_t from = 0; from < block_; ++from) {
                    std::size_t best = from;
                    for (std::size_t to = from; to < block_; ++to) {
                        if (less(to, best))
                            best = to;
                        table[from * block_ + to] = static_cast<std::uint8_t>(best);
                    }
                }
            }
            shape_of_block_[block] = slot;
        }
        answers_.shrink_to_fit();
    }

    void build_local() {
        const std::size_t levels = local_levels();
        local_.assign(num_supers_ * levels * per_super_, 0);
        for (std::size_t s = 0; s < num_supers_; ++s) {
            const std::size_t first_block = s * per_super_;
            const std::size_t count = std::min(per_super_, num_blocks_ - first_block);
            const std::size_t base = s * super_;
            std::uint16_t* row0 = &local_[s * levels * per_super_];
            for (std::size_t q = 0; q < count; ++q) {
                const std::size_t block = first_block + q;
                const std::size_t last = std::min(block_, size() - block * block_) - 1;
                row0[q] = static_cast<std::uint16_t>(in_block(block, 0, last) - base);
            }
            for (std::size_t level = 1; level < levels; ++level) {
                const std::size_t half = std::size_t{1} << (level - 1);
                const std::uint16_t* prev = row0 + (level - 1) * per_super_;
                std::uint16_t* cur = row0 + level * per_super_;
                for (std::size_t q = 0; q + 2 * half <= count; ++q)
                    cur[q] = static_cast<std::uint16_t>(leftmost(base + prev[q], base + prev[q + half]) - base);
            }
        }
    }

    void build_top() {
        const std::size_t levels = static_cast<std::size_t>(std::bit_width(num_supers_));
        top_.assign(levels * num_supers_, 0);
        for (std::size_t s = 0; s < num_supers_; ++s) {
            const std::size_t count = std::min(per_super_, num_blocks_ - s * per_super_);
            top_[s] = local_argmin(s, 0, count - 1);
        }
        for (std::size_t level = 1; level < levels; ++level) {
            const std::size_t half = std::size_t{1} << (level - 1);
            const std::size_t* prev = &top_[(level - 1) * num_supers_];
            std::size_t* cur = &top_[level * num_supers_];
            for (std::size_t s = 0; s + 2 * half <= num_supers_; ++s)
                cur[s] = leftmost(prev[s], prev[s + half]);
        }
    }

    ValueSequence<T> seq_;
    std::size_t block_ = 0;
    std::size_t per_super_ = 0;
    std::size_t super_ = 0;
    std::size_t num_blocks_ = 0;
    std::size_t num_supers_ = 0;
    std::vector<std::uint32_t> shape_of_block_;
    std::vector<std::uint8_t> answers_;
    std::vector<std::uint16_t> local_;
    std::vector<std::size_t> top_;
};

}  // namespace rsel
