#pragma once

/**
 * @file checks.hpp
 * @brief Batch verification of graph-theoretic statements over ring families.
 *
 * Each check pairs a hypothesis predicate with a conclusion; the conclusion is
 * evaluated only when the hypothesis holds, and a run whose hypothesis fails
 * is reported VACUOUS rather than PASS. Every FAIL carries a concrete
 * counterexample witness. The default family covers Z_n, products Z_a x Z_b
 * under componentwise and swap involutions, M_2(Z_m) under the transpose, and
 * the builtin Cayley-table rings under every enumerated involution.
 */

#include <functional>
#include <string>
#include <vector>

#include "zdg/ringspec.hpp"

namespace zdg {

enum class CheckStatus { Pass, Fail, Vacuous, Skipped };

std::string status_name(CheckStatus s);

struct CheckResult {
    std::string check_id;
    std::string ring;
    CheckStatus status = CheckStatus::Vacuous;
    std::string witness;  // evidence on PASS, counterexample on FAIL, reason on SKIPPED
};

/// A ring under test: the built star ring plus the spec it came from (checks
/// with structural hypotheses inspect the spec).
struct RingInstance {
    RingSpec spec;
    StarRing sr;
    std::string description;
};

RingInstance make_instance(const RingSpec& spec, const BuildOptions& options = {});
RingInstance make_instance(std::string_view text, const BuildOptions& options = {});

struct Verdict {
    bool ok = false;
    std::string witness;
};

struct TheoremCheck {
    std::string id;         // "T01" ... "T13"
    std::string title;      // short slug
    std::string statement;  // one-line mathematical statement
    std::function<bool(const RingInstance&)> hypothesis;
    std::function<Verdict(const RingInstance&)> conclusion;
};

const std::vector<TheoremCheck>& check_catalog();
const TheoremCheck* find_check(const std::string& id);  // nullptr when unknown

/// Evaluate one check on one ring; rings above `order_cap` report SKIPPED.
CheckResult run_check(const TheoremCheck& check, const RingInstance& instance,
                      long long order_cap = 4096);

struct FamilyOptions {
    int max_order = 256;  // global cap on instance ring order
    int zn_max = 200;
    int product_factor_max = 9;
    std::vector<int> matrix_moduli = {2, 3, 4};
    bool include_table_rings = true;
    int involution_cap = 16;
};

std::vector<RingInstance> default_family(const FamilyOptions& options = {});

struct SuiteRun {
    std::vector<CheckResult> results;  // ordered by (check id, ring description)
    int pass = 0, fail = 0, vacuous = 0, skipped = 0;
    std::vector<std::string> dead_checks;  // checks with no PASS/FAIL instance at all

    bool ok() const { return fail == 0 && dead_checks.empty(); }
};

SuiteRun run_suite(const std::vector<std::string>& check_ids,
                   const std::vector<RingInstance>& family);
SuiteRun run_suite(const std::vector<std::string>& check_ids, const FamilyOptions& options = {});

}  // namespace zdg
