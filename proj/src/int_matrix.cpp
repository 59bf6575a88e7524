#include "cubick3/int_matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "cubick3/error.hpp"

namespace cubick3 {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidGram: return "InvalidGram";
    case ErrorKind::InvalidTwist: return "InvalidTwist";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::DependentGenerators: return "DependentGenerators";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::UnknownLattice: return "UnknownLattice";
    case ErrorKind::NotSpecialDiscriminant: return "NotSpecialDiscriminant";
    case ErrorKind::InvalidNLVector: return "InvalidNLVector";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::InvalidParity: return "InvalidParity";
    case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorKind::NotHyperbolicPair: return "NotHyperbolicPair";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    }
    return "Unknown";
}

IntVector make_vector(std::initializer_list<long> values)
{
    IntVector v;
    v.reserve(values.size());
    for (long x : values)
        v.emplace_back(x);
    return v;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto const & r : rows) {
        if (r.size() != cols_)
            throw LatticeError(ErrorKind::DimensionMismatch, "ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::span<IntVector const> rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        m.set_row(i, rows[i]);
    return m;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::col(std::size_t j) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_row(std::size_t i, IntVector const & v)
{
    if (v.size() != cols_)
        throw LatticeError(ErrorKind::DimensionMismatch,
                           "row of length " + std::to_string(v.size()) + " in matrix with "
                               + std::to_string(cols_) + " columns");
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = v[j];
}

void IntMatrix::append_row(IntVector const & v)
{
    if (rows_ == 0 && cols_ == 0)
        cols_ = v.size();
    if (v.size() != cols_)
        throw LatticeError(ErrorKind::DimensionMismatch, "appended row has wrong length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, mpz_class const & factor)
{
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, mpz_class const & factor)
{
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(IntMatrix const & a, IntMatrix const & b)
{
    if (a.cols() != b.rows())
        throw LatticeError(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntMatrix operator-(IntMatrix const & a)
{
    return scaled(a, -1);
}

IntVector operator*(IntMatrix const & a, IntVector const & v)
{
    if (a.cols() != v.size())
        throw LatticeError(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    IntVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r[i] += a(i, j) * v[j];
    return r;
}

IntMatrix scaled(IntMatrix const & a, mpz_class const & k)
{
    IntMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) *= k;
    return r;
}

IntMatrix block_diagonal(std::span<IntMatrix const> blocks)
{
    std::size_t n = 0;
    for (auto const & b : blocks)
        n += b.rows();
    IntMatrix m(n, n);
    std::size_t off = 0;
    for (auto const & b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

mpz_class dot(IntVector const & a, IntVector const & b)
{
    if (a.size() != b.size())
        throw LatticeError(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

IntVector operator+(IntVector const & a, IntVector const & b)
{
    if (a.size() != b.size())
        throw LatticeError(ErrorKind::DimensionMismatch, "vector sum of unequal lengths");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

IntVector operator-(IntVector const & a, IntVector const & b)
{
    return a + (-b);
}

IntVector operator-(IntVector const & a)
{
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

IntVector operator*(mpz_class const & k, IntVector const & v)
{
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = k * v[i];
    return r;
}

bool is_zero(IntVector const & v)
{
    for (auto const & x : v)
        if (x != 0)
            return false;
    return true;
}

mpz_class content(IntVector const & v)
{
    mpz_class g = 0;
    for (auto const & x : v)
        g = gcd(g, x);
    return g;
}

RatVector to_rational(IntVector const & v)
{
    return RatVector(v.begin(), v.end());
}

IntVector to_integral(RatVector const & v)
{
    IntVector r;
    r.reserve(v.size());
    for (auto const & x : v) {
        if (x.get_den() != 1)
            return {};
        r.push_back(x.get_num());
    }
    return r;
}

namespace {
template <class V>
std::string join(V const & v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i].get_str();
    os << ']';
    return os.str();
}
} // namespace

std::string to_string(IntVector const & v) { return join(v); }
std::string to_string(RatVector const & v) { return join(v); }

std::string to_string(IntMatrix const & m)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i)
        s += (i ? "," : "") + to_string(m.row(i));
    return s + "]";
}

std::ostream & operator<<(std::ostream & os, IntMatrix const & m)
{
    return os << to_string(m);
}

} // namespace cubick3
