#include "singulant/matrix.hpp"

#include "singulant/error.hpp"

namespace singulant {

ModuleElement::ModuleElement(RingPtr ring, std::size_t rank)
    : ring_(ring), coords_(rank, Polynomial(ring))
{
}

ModuleElement::ModuleElement(RingPtr ring, std::vector<Polynomial> coords)
    : ring_(std::move(ring)), coords_(std::move(coords))
{
}

ModuleElement ModuleElement::unit(RingPtr ring, std::size_t rank, std::size_t i)
{
    ModuleElement v(ring, rank);
    v.coords_.at(i) = Polynomial::constant(ring, Scalar(1));
    return v;
}

bool ModuleElement::is_zero() const
{
    for (const auto& c : coords_)
        if (!c.is_zero())
            return false;
    return true;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& v)
{
    if (v.rank() != rank())
        throw StructuralError("module elements of different rank");
    for (std::size_t i = 0; i < rank(); ++i)
        coords_[i] += v.coords_[i];
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& v)
{
    if (v.rank() != rank())
        throw StructuralError("module elements of different rank");
    for (std::size_t i = 0; i < rank(); ++i)
        coords_[i] -= v.coords_[i];
    return *this;
}

ModuleElement ModuleElement::scaled(const Polynomial& f) const
{
    ModuleElement r(*this);
    for (auto& c : r.coords_)
        c = c * f;
    return r;
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring))
{
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n)
{
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Polynomial::constant(ring, Scalar(1));
    return m;
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows, const std::vector<ModuleElement>& cols)
{
    PolyMatrix m(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].rank() != rows)
            throw StructuralError("column rank does not match the row count");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows)
{
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    PolyMatrix m(ring, rows.size(), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != ncols)
            throw StructuralError("ragged matrix rows");
        for (std::size_t j = 0; j < ncols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

ModuleElement PolyMatrix::column(std::size_t j) const
{
    std::vector<Polynomial> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c.push_back((*this)(i, j));
    return ModuleElement(ring_, std::move(c));
}

std::vector<ModuleElement> PolyMatrix::columns() const
{
    std::vector<ModuleElement> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        out.push_back(column(j));
    return out;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix PolyMatrix::kron_identity(std::size_t k) const
{
    PolyMatrix out(ring_, rows_ * k, cols_ * k);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t t = 0; t < k; ++t)
                out(i * k + t, j * k + t) = (*this)(i, j);
    return out;
}

ModuleElement PolyMatrix::apply(const ModuleElement& v) const
{
    if (v.rank() != cols_)
        throw StructuralError("matrix-vector dimension mismatch");
    ModuleElement out(ring_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero())
            continue;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!(*this)(i, j).is_zero())
                out[i] += (*this)(i, j) * v[j];
    }
    return out;
}

bool PolyMatrix::is_zero() const
{
    for (const auto& p : data_)
        if (!p.is_zero())
            return false;
    return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw StructuralError("matrix product dimension mismatch");
    PolyMatrix out(a.ring_ ? a.ring_ : b.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += aik * b(k, j);
        }
    return out;
}

}  // namespace singulant
