#pragma once

#include <vector>

#include "singulant/polynomial.hpp"

namespace singulant {

/// Element of a free module P^r (or R^r, with the quotient implied by the
/// caller), stored densely as r coordinates.
class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(RingPtr ring, std::size_t rank);
    ModuleElement(RingPtr ring, std::vector<Polynomial> coords);

    static ModuleElement unit(RingPtr ring, std::size_t rank, std::size_t i);

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return coords_.size(); }
    const Polynomial& operator[](std::size_t i) const { return coords_[i]; }
    Polynomial& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Polynomial>& coords() const { return coords_; }
    bool is_zero() const;

    ModuleElement& operator+=(const ModuleElement& v);
    ModuleElement& operator-=(const ModuleElement& v);
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    ModuleElement scaled(const Polynomial& f) const;

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

private:
    RingPtr ring_;
    std::vector<Polynomial> coords_;
};

/// Dense rows x cols matrix of polynomials. Column j is the image of the
/// j-th basis vector, so a matrix represents a map P^cols -> P^rows.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(RingPtr ring, std::size_t n);
    static PolyMatrix from_columns(RingPtr ring, std::size_t rows, const std::vector<ModuleElement>& cols);
    static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    ModuleElement column(std::size_t j) const;
    std::vector<ModuleElement> columns() const;
    PolyMatrix transpose() const;
    /// (*this) tensor I_k: each entry a becomes the block a * I_k.
    PolyMatrix kron_identity(std::size_t k) const;
    ModuleElement apply(const ModuleElement& v) const;
    bool is_zero() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    RingPtr ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> data_;
};

}  // namespace singulant
