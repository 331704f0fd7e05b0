#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repspace/splitting.hpp"

namespace repspace
{

// Verification suites shared by `repspace verify` and the acceptance runner.

/// Smith form axioms on random small matrices: U M V = D, det U = det V = +-1,
/// divisibility chain, agreement with the sparse elimination route.
Report suite_snf(long trials, std::uint64_t seed);

/// d∘d = 0 and mod-2 universal coefficients on every property-catalog space,
/// plus the suspension shift law on five small spaces.
Report suite_simplicial(const HomologyOptions& options = {});

Report suite_homology_prop(int n_max = 4);
Report suite_rep_u();
Report suite_rep_sp();
/// Every family up to its guard (or up to n_max when that is smaller).
Report suite_splitting(int n_max = 5, const HomologyOptions& options = {});
/// Recurrences for 1 <= n <= 20 and the fixed spot values.
Report suite_counts();
/// psi realizations over every type for n = 2..4 and SO(3) invariance runs.
Report suite_su2(long runs, std::uint64_t seed);

std::vector<std::string> suite_names();
/// Throws UnknownSpace for an unknown suite name.
Report run_suite(const std::string& name, std::uint64_t seed, const HomologyOptions& options = {});

} // namespace repspace
