#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace graphlink {

/// Square matrix over Z/2, stored as bit-packed rows (64 entries per word).
///
/// Values are immutable from the point of view of the free functions below:
/// every operation returns a new matrix. The 0x0 matrix is a legal value.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(std::size_t n);

    static Gf2Matrix identity(std::size_t n);
    /// Rows given as 0/1 integers; throws IndexOutOfRange on a ragged or non-square table.
    static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);
    static Gf2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] bool empty() const noexcept { return n_ == 0; }

    [[nodiscard]] bool get(std::size_t i, std::size_t j) const noexcept {
        return (data_[i * stride_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool value) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        auto& word = data_[i * stride_ + j / 64];
        word = value ? (word | bit) : (word & ~bit);
    }
    void flip(std::size_t i, std::size_t j) noexcept { data_[i * stride_ + j / 64] ^= std::uint64_t{1} << (j % 64); }

    [[nodiscard]] std::span<const std::uint64_t> row(std::size_t i) const noexcept {
        return {data_.data() + i * stride_, stride_};
    }
    [[nodiscard]] std::size_t words_per_row() const noexcept { return stride_; }

    [[nodiscard]] bool is_symmetric() const noexcept;
    [[nodiscard]] std::vector<int> diagonal() const;

    /// One row per line, '0'/'1' characters, trailing newline after each row.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) noexcept = default;

private:
    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);

[[nodiscard]] std::size_t rank(const Gf2Matrix& m);
[[nodiscard]] std::size_t corank(const Gf2Matrix& m);
/// det over Z/2; the 0x0 matrix has determinant 1.
[[nodiscard]] int determinant(const Gf2Matrix& m);
/// Gauss-Jordan on the augmented block [m | E]. Throws SingularMatrix.
[[nodiscard]] Gf2Matrix inverse(const Gf2Matrix& m);
/// Removes the listed rows and the same-numbered columns. Duplicates are ignored.
[[nodiscard]] Gf2Matrix delete_rows_cols(const Gf2Matrix& m, std::span<const std::size_t> indices);
[[nodiscard]] Gf2Matrix delete_rows_cols(const Gf2Matrix& m, std::initializer_list<std::size_t> indices);
/// m + E_ii.
[[nodiscard]] Gf2Matrix flip_diagonal_entry(const Gf2Matrix& m, std::size_t i);

}  // namespace graphlink
