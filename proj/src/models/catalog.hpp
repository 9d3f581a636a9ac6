#pragma once

// Printed reference results, transcribed into the expression grammar.
// Pure data: no algebra happens here.

#include <string>
#include <vector>

namespace sgeo::catalog {

enum class Model { Cpi, Qpi };
enum class Regime { Static, Evolving };
enum class Quantity {
    VierbeinMetric,      // upper metric built from a general frame
    VierbeinInverse,     // inverse of the constrained classical frame
    VierbeinSdet,        // Berezinian of the constrained quantum frame
    UpperMetric,
    LowerMetric,
    Christoffel,
    Ricci,
    Scalar,
    DeterminantInverse,  // inverse of the regularized determinant
};

struct Term {
    enum class Kind {
        Text,  // expression text
        Ref,   // another printed entry of the catalog, scaled by sign
        Base,  // a classical entry read with pi_k -> qpi_k, a -> qpi7
        Self,  // the entry is defined as itself
    };
    Kind kind = Kind::Text;
    int sign = 1;
    std::string body;  // text or fixture id
};

struct Fixture {
    std::string id;
    std::string label;  // human-readable component, e.g. "Gamma^t_{t theta}"
    Model model = Model::Cpi;
    Regime regime = Regime::Static;
    Quantity quantity = Quantity::Christoffel;
    int i = 0, j = 0, k = 0;  // Christoffel: (upper, lower, lower); Ricci and matrices: (row, column)
    std::vector<Term> terms;
    bool implicit = false;     // covered by "all other components vanish"
    bool constrained = false;  // raw parameters obey the solved constraint family
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& id);  // throws std::out_of_range

std::string christoffel_id(Model m, Regime r, int c, int a, int b);
std::string ricci_id(Model m, Regime r, int a, int b);
std::string scalar_id(Model m, Regime r);

// "connection", "curvature", "evolving-curvature", "metric", "all"
bool in_suite(const Fixture& f, const std::string& suite);
const std::vector<std::string>& suite_names();

// ids of Ref/Base terms, recursively, in evaluation order
std::vector<std::string> dependencies(const Fixture& f);

}  // namespace sgeo::catalog
