#pragma once

#include "loopalg/mu.hpp"
#include "loopalg/randomgen.hpp"
#include "loopalg/tensoralg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace loopalg {

struct CaseResult {
    int id = 0;
    std::string inputs;
    std::string residual; // "0" when the identity holds
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    int samples = 0;
    std::vector<CaseResult> cases;

    int failures() const;
    bool passed() const { return failures() == 0; }
};

struct SuiteOptions {
    // Surfaces the groupoid suites run on, as (genus, boundary_extra) pairs.
    std::vector<std::pair<int, int>> surfaces = {{1, 1}};
    uint64_t seed = 1;
    int samples = 100;
    int max_len = 6;
    int tensor_dim = 4;
    // Harness sanity knob: override the rotation number of every d_j in the
    // main-theorem suite. Any value other than the standard 2g+j-1/2 must
    // produce nonzero residuals on the d generators.
    std::optional<Rational> delta_rot_override;
};

// Independent transcription of the generator table of kappa, written
// family-by-family; the engine's kappa_bracket must reproduce it verbatim.
Tensor2 kappa_expected(const Signature& sig, int c1, int c2);

SuiteReport suite_kappa_table(const SuiteOptions& opt);
SuiteReport suite_defect(const SuiteOptions& opt);
SuiteReport suite_main_theorem(const SuiteOptions& opt);
SuiteReport suite_modular_vanishing(const SuiteOptions& opt);
SuiteReport suite_lift(const SuiteOptions& opt);
SuiteReport suite_tdiv_mult(const SuiteOptions& opt);
SuiteReport suite_product_rules(const SuiteOptions& opt);
SuiteReport suite_modular_derivation(const SuiteOptions& opt);
SuiteReport suite_skew(const SuiteOptions& opt);
SuiteReport suite_tensor(const SuiteOptions& opt);
SuiteReport suite_structural(const SuiteOptions& opt);

const std::vector<std::string>& suite_names(); // excludes "all"
// Runs one suite by name ("all" runs every suite in order). Throws
// std::invalid_argument for unknown names.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt);

} // namespace loopalg
