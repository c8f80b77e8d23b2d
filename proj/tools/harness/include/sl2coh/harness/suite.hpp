#pragma once

#include <functional>

#include "sl2coh/harness/config.hpp"
#include "sl2coh/harness/report.hpp"

namespace sl2coh::harness {

/// Called after every record, for progress output.
using RecordSink = std::function<void(const CheckRecord&)>;

/// Runs the selected suites over the grid, in the order of suite_names().
VerificationReport run_suite(const SuiteConfig& config, const RecordSink& sink = {});

RunMetadata make_metadata(const SuiteConfig& config);

}  // namespace sl2coh::harness
