#pragma once

// The identity suite behind `cqrel verify-identities`: every algebraic and
// field-theoretic identity the library relies on, evaluated on seeded random
// inputs and reported as measured-vs-tolerance entries.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqrel/algebra.hpp"
#include "cqrel/io.hpp"

namespace cqrel {

struct CheckResult {
    std::string id;
    std::string description;
    /// Identity being tested, written as a formula. Unique within a report.
    std::string anchor;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::optional<double> tolerance_override;
    std::string backend;
    std::vector<CheckResult> checks;

    bool pass() const;
    io::json to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    /// Replaces every check's own tolerance when set.
    std::optional<double> tolerance;
    /// Table used by the basis-table check; lets tests inject a corrupted table.
    const StructureConstants* table = nullptr;
};

VerificationReport verify_identities(const VerifyOptions& options = {});

/// Hand-entered product table of the eight basis units, written directly from
/// the generator relations. Independent of make_structure_constants().
const StructureConstants& reference_basis_table();

}  // namespace cqrel
