#pragma once

// Numeric reference values for catalog entries. Shares only the parser and
// the catalog with the symbolic side.

#include <optional>
#include <string>
#include <vector>

#include "models/catalog.hpp"
#include "oracle/pipeline.hpp"

namespace sgeo::oracle {

// Bindings depend only on (family, branch, index); entries of one family
// share them, so a pipeline run serves all of them.
std::string sample_family(const catalog::Fixture& f);
Binding fixture_sample(const catalog::Fixture& f, int branch, int index);
std::vector<Binding> fixture_samples(const catalog::Fixture& f, int branch, int count);

// value obtained from the numeric pipeline, frame or determinant
NSN reference_value(const catalog::Fixture& f, int branch, const Binding& b);

// printed text evaluated numerically; nullopt for an entry defined as itself
std::optional<NSN> printed_numeric(const catalog::Fixture& f, int branch, const Binding& b);

// numeric frame E(A, L) for a raw-level binding
Mat numeric_frame(const Binding& b, catalog::Model m);

// CPI: sdet E = 1; QPI: sdet E = (eps - i thetabar theta / hbar)^-1.
// Overwrites bB and bS in place. throws SingularNumeric
void solve_constraint(Binding& b, catalog::Model m);

}  // namespace sgeo::oracle
