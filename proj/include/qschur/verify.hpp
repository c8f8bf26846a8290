#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qschur/drinfeld.hpp"
#include "qschur/hecke.hpp"
#include "qschur/tensor.hpp"

namespace qschur {

/// Shared configuration of the operator-identity suites. The window bounds
/// the tuples the identities are quantified over; a nonempty window must
/// contain [1, n]. An empty window (lo > hi) makes every sweep vacuous.
struct SuiteConfig {
    int n = 3;
    int r = 2;
    int window_lo = 0;
    int window_hi = -1;
    int t_max = 2;
    std::uint64_t seed = 987654321;

    static SuiteConfig make(int n, int r); // window defaults to [-n, 2n]
};

struct Failure {
    std::string where;
    std::string lhs;
    std::string rhs;
};

enum class SuiteStatus { pass, fail, report_only };

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> config;
    long cases_checked = 0;
    std::vector<Failure> failures;
    SuiteStatus status = SuiteStatus::pass;
    long elapsed_ms = 0;

    /// report-only suites never count as failed
    bool ok() const { return status != SuiteStatus::fail; }
};

/// Defining relations of the quantized enveloping algebra, checked as
/// operator identities on every windowed pure tensor.
Report verify_qgl(const SuiteConfig& cfg);

/// Affine Hecke presentation relations for the right action on windowed
/// tuples, plus the X-free relations inside H(r) itself.
Report verify_affine_hecke(const SuiteConfig& cfg);

/// Left and right actions commute, generator by generator.
Report verify_commuting(const SuiteConfig& cfg);

enum class EvalWhich { En, Fn };

/// Evaluation compatibility on the [1,n]^r basis. The E_n comparison is
/// asserted; the F_n comparison is report-only.
Report verify_eval_compat(const SuiteConfig& cfg, EvalWhich which);

/// Closed formulas: the T_1..T_k sweep, the nested commutator action on
/// row-type tensors, and the central shifts as X power sums.
Report verify_lemmas(const SuiteConfig& cfg);

/// Residue congruences of the Murphy operators and the aggregate central
/// scalar congruence, modulo the ideal above each shape. Guarded at r <= 5.
Report verify_jm(int r, int t_max);

/// Drinfeld-polynomial identities over all partitions of r <= r_max.
Report verify_drinfeld(int r_max, int n, std::uint64_t seed);

/// partial_inverse(partial_map(s, n)) == s on random multisegments.
Report verify_roundtrip(int count, int max_total, int n, std::uint64_t seed);

nlohmann::ordered_json report_json(const Report& rep);
void print_report(const Report& rep, bool as_json, std::ostream& os);

/// Worker count from QSCHUR_WORKERS (default 1).
int worker_count();

} // namespace qschur
