#pragma once

#include <string>
#include <vector>

#include "singulant/ideal.hpp"
#include "singulant/matrix.hpp"

namespace singulant {

struct JacobianData {
    PolyMatrix matrix;  // c x n, entry (i,j) = d f_i / d x_j
    int h = 0;
    std::vector<Polynomial> minors;  // unreduced, lexicographic in (rows, cols)
    IdealHandle jac_ideal;
    std::vector<std::string> warnings;
};

PolyMatrix jacobian_matrix(const RingPresentation& R);

/// Determinant by cofactor expansion up to 3x3, Bareiss above.
Polynomial determinant(const PolyMatrix& square);

/// All k x k minors, row sets outer and column sets inner, both in
/// lexicographic order. The parallel version distributes minors over
/// OpenMP threads and returns the same list.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);
std::vector<Polynomial> minors_serial(const PolyMatrix& m, std::size_t k);

/// PreconditionError when the defining ideal is the unit ideal.
JacobianData jacobian_data(const RingPresentation& R);
IdealHandle jacobian_ideal(const RingPresentation& R);

enum class CriterionFlag { JacobianCriterion, Unknown };
std::string to_string(CriterionFlag f);

struct SingularLocusCertificate {
    IdealHandle ideal;
    CriterionFlag valid = CriterionFlag::Unknown;
};

SingularLocusCertificate singular_locus_certificate(const RingPresentation& R);

/// A prime generated by variables that contains the defining ideal and at
/// which R is not regular, found for monomial defining ideals.
struct SingularWitness {
    std::vector<std::size_t> variables;
    bool contains_jac = false;
};

/// Non-maximal singular primes generated by variables. Empty unless the
/// defining ideal has a monomial Groebner basis.
std::vector<SingularWitness> singular_witnesses(const RingPresentation& R);

struct IsolatedResult {
    Tristate value = Tristate::Unknown;
    bool regular = false;
    CriterionFlag criterion = CriterionFlag::Unknown;
    std::vector<SingularWitness> witnesses;
};

IsolatedResult is_isolated_singularity(const RingPresentation& R);

}  // namespace singulant
