#ifndef GENT_VERIFY_HPP
#define GENT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gent {

/// One verification check: a named comparison with expected value,
/// actual value, and tolerance.
struct CheckResult {
    int criterion;      // 1..12
    std::string name;
    std::string expected;
    std::string actual;
    double tolerance;
    bool pass;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    bool quick = false; // sample mode for the splitting sweep
    int threads = 0;    // 0 = hardware concurrency
};

/// Deterministic reference checks on fixed inputs.
std::vector<CheckResult> verify_paper_suite(const VerifyOptions& opt = {});

/// Seeded randomized property checks.
std::vector<CheckResult> verify_properties_suite(const VerifyOptions& opt = {});

std::vector<CheckResult> verify_all(const VerifyOptions& opt = {});

/// Labeled-graph census: one canonical representative per isomorphism class
/// on exactly n vertices, as edge masks over vertex pairs in lexicographic
/// order. Supports n <= 7.
std::vector<std::uint64_t> nonisomorphic_graph_masks(int n);

} // namespace gent

#endif
