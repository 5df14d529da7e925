#pragma once

#include "cliquesat/lab/records.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cliquesat::lab {

struct FormulaResult {
    std::string formula;
    // Ordered name/value pairs; exponents are exact rationals, values are reals.
    std::vector<std::pair<std::string, std::string>> fields;

    [[nodiscard]] const std::string& get(const std::string& name) const;
};

// Formulas and their parameters (optional ones in brackets):
//   balance  F
//   beta     F r
//   thm11    k n r t
//   kk       N r s
//   eskst    s t [k n]
//   gnp      F r [N n]
//   thm12    F r [alpha] [k n]
//   lemma41  u m n r s t
//   thm14    F r [n]
//   prop15   T r [k n]
//   conj     name r s t [eps] [k n]
// F and T are named graphs ("C4", "K2,3", "T:0,0,1").
FormulaResult evaluate_formula(const std::string& name, const Params& args);

const std::vector<std::string>& formula_names();

} // namespace cliquesat::lab
