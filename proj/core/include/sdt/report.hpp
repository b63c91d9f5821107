#pragma once

#include "sdt/verify.hpp"

#include <span>
#include <string>

namespace sdt::report {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// One `record` line per sample point followed by a `summary` line per report:
///   record pair=2.1 d=2 f=exp_decay:1 k=1 t=1 lhs=... rhs=... abs_err=... rel_err=... status=ok
///   summary pair=2.1 d=2 f=exp_decay:1 points=20 max_rel_err=... tol=1e-06 passed=true
std::string to_text(std::span<const verify::VerificationReport> reports,
                    std::span<const verify::SkipRecord> skipped = {});

/// Top-level array, one object per report with the VerificationReport fields and
/// "schema": 1. Non-finite numbers are written as null.
std::string to_json(std::span<const verify::VerificationReport> reports);

/// Writes `content` to `path`; throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace sdt::report
