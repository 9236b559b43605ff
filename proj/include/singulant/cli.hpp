#pragma once

#include <iosfwd>
#include <string_view>

#include "singulant/resolve.hpp"

namespace singulant {

/// `ring <FIELD>[v1,...,vn] / (g1, ..., gc)` with FIELD one of Q, F<p>;
/// the quotient part is optional. Throws ParseError.
RingPresentation parse_ring(std::string_view text, MonomialOrder order = MonomialOrder::grevlex());

/// `R`, `R^n`, `k`, `R/(g1, ...)` or a presentation matrix `[[a, b], [c, d]]`
/// whose columns are the relations. Throws ParseError.
FinitelyPresentedModule parse_module(std::string_view text, const RingPresentation& ring);

enum ExitCode { ExitOk = 0, ExitPrecondition = 1, ExitParse = 2, ExitBudget = 3 };

/// Command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace singulant
