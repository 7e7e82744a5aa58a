#pragma once

#include <string>

#include "fsq/restricted.hpp"

// Persistent sweep cache: one binary file per rho holding the packed
// k-values. A request is served from disk when the stored bound covers it;
// otherwise the sweep is recomputed and written atomically (temp file +
// rename), so concurrent invocations never see a torn file. Corrupt files
// are treated as misses with a warning.

namespace fsq {

std::string cache_file_path(const std::string& dir, uint64_t rho);

// Returns a report identical field-for-field to sweep(rho, bound, config).
// `dir` must exist or be creatable. Warnings are written to stderr.
SweepReport cache_get_or_compute(ForbiddenValue rho, uint64_t bound,
                                 const std::string& dir,
                                 const SweepConfig& config = {});

}  // namespace fsq
