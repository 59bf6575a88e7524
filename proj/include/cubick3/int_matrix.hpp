#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cubick3 {

using IntVector = std::vector<mpz_class>;
using RatVector = std::vector<mpq_class>;

IntVector make_vector(std::initializer_list<long> values);

/* Dense row-major matrix over arbitrary-precision integers. */
class IntMatrix
{
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;

  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::span<IntVector const> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    mpz_class & operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    mpz_class const & operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    void set_row(std::size_t i, IntVector const & v);
    void append_row(IntVector const & v);

    IntMatrix transposed() const;
    bool is_symmetric() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /* row[dst] += factor * row[src] */
    void add_row_multiple(std::size_t dst, std::size_t src, mpz_class const & factor);
    void add_col_multiple(std::size_t dst, std::size_t src, mpz_class const & factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    friend bool operator==(IntMatrix const &, IntMatrix const &) = default;
};

IntMatrix operator*(IntMatrix const & a, IntMatrix const & b);
IntMatrix operator-(IntMatrix const & a);
IntVector operator*(IntMatrix const & a, IntVector const & v);
IntMatrix scaled(IntMatrix const & a, mpz_class const & k);
IntMatrix block_diagonal(std::span<IntMatrix const> blocks);

mpz_class dot(IntVector const & a, IntVector const & b);
IntVector operator+(IntVector const & a, IntVector const & b);
IntVector operator-(IntVector const & a, IntVector const & b);
IntVector operator-(IntVector const & a);
IntVector operator*(mpz_class const & k, IntVector const & v);
bool is_zero(IntVector const & v);
/* gcd of all entries; zero for the zero vector */
mpz_class content(IntVector const & v);

RatVector to_rational(IntVector const & v);
/* The integer vector equal to v, or an empty vector if some entry is not integral. */
IntVector to_integral(RatVector const & v);

std::string to_string(IntVector const & v);
std::string to_string(RatVector const & v);
std::string to_string(IntMatrix const & m);
std::ostream & operator<<(std::ostream & os, IntMatrix const & m);

} // namespace cubick3
