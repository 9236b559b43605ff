#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singulant/homalg.hpp"
#include "singulant/jacobian.hpp"

namespace singulant {

/// Why an element belongs to the lower annihilator bound.
struct AnnCertificate {
    std::string element;
    /// "stable-annihilation" (per corpus module) or "regular-ring".
    std::string method;
    std::vector<std::string> modules;
    /// Syzygy shift j at which the test passed on Omega^j of each module.
    std::vector<std::size_t> shifts;
};

/// r * Ext^degree(M, N) != 0, which proves r is not in ca^degree(R).
struct ExclusionCertificate {
    std::string element;
    std::string module_m;
    std::string module_n;
    std::size_t degree = 1;
    std::string claim;
};

/// Certified sandwich around ann_R D_sg(R); the exact ideal is never
/// claimed.
struct AnnihilatorBounds {
    IdealHandle lower;
    std::vector<Polynomial> lower_gens;
    std::vector<AnnCertificate> certificates;
    std::vector<ExclusionCertificate> exclusions;
    /// Candidates whose tests ran out of budget or errored.
    std::vector<std::string> undecided;
    bool regular = false;
};

/// Tests socle generators, Jacobian minors, the variables and `extra` by
/// stable annihilation on Omega^j(M), j = 0..max_shift, for every module M
/// of the default corpus drawn from `seed`.
AnnihilatorBounds annihilator_bounds(const RingPresentation& R, const std::vector<Polynomial>& extra = {},
                                     std::uint64_t seed = 42, std::size_t max_shift = 2);

struct BoundData {
    IdealHandle ideal;
    int nu = 0;
    int loewy = 0;
    int depth = 0;
    int bound = 0;
    int dim_bound = 0;
    bool assumed_annihilates = false;
};

/// (nu(I) - depth R + 1) * ll(R/I), with dim_bound = bound - 1. Throws
/// PreconditionError unless I is m-primary and inside the lower bound (or
/// assume_annihilates is set).
BoundData generation_time_bound(const RingPresentation& R, const IdealHandle& I,
                                const AnnihilatorBounds* bounds = nullptr, bool assume_annihilates = false,
                                std::uint64_t seed = 42);

enum class RadicalRelation { Equal, LowerStrictlySmaller, JacStrictlySmaller, Incomparable };
std::string to_string(RadicalRelation r);

struct RadicalComparison {
    RadicalRelation relation = RadicalRelation::Incomparable;
    /// Generators of jac outside sqrt(lower).
    std::vector<std::string> jac_outside_lower;
    /// Generators of lower outside sqrt(jac).
    std::vector<std::string> lower_outside_jac;
    /// Non-equidimensional rings: singular primes not containing jac.
    std::vector<std::string> witness_primes;
    bool failure_pattern = false;
};

RadicalComparison radical_comparison_report(const RingPresentation& R, const AnnihilatorBounds& bounds);

struct SingularityReport {
    RingPresentation ring;
    int dim = 0;
    int depth = 0;
    bool depth_graded = true;
    JacobianData jac;
    Tristate equidimensional = Tristate::Unknown;
    SingularLocusCertificate locus;
    IsolatedResult isolated;
    IdealHandle socle;
    AnnihilatorBounds bounds;
    std::optional<RadicalComparison> radical;
    std::optional<BoundData> bound;
    std::vector<std::string> hypotheses;
};

struct ReportOptions {
    std::vector<Polynomial> extra_elements;
    std::optional<IdealHandle> ideal;
    bool assume_annihilates = false;
    std::uint64_t seed = 42;
};

SingularityReport singularity_report(const RingPresentation& R, const ReportOptions& options = {});
nlohmann::ordered_json to_json(const SingularityReport& report);

// ---------------------------------------------------------------------------

enum class LedgerStatus { Pass, Fail, Skipped };
std::string to_string(LedgerStatus s);

struct LedgerEntry {
    std::string id;
    std::string claim;
    LedgerStatus status = LedgerStatus::Fail;
    std::string detail;
};

struct PaperCheckOptions {
    /// Squares every Jacobian minor before comparison (fault injection).
    bool corrupt_jacobian = false;
    Field field = Field::rationals();
    std::uint64_t seed = 42;
};

/// Runs the worked examples and returns one entry per claim.
std::vector<LedgerEntry> verify_paper_examples(const PaperCheckOptions& options = {});

}  // namespace singulant
