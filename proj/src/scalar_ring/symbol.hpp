#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sgeo {

using SymId = std::uint32_t;

struct Symbol {
    std::string name;
    int order = 0;             // number of t-derivatives carried by the symbol
    bool time_dependent = true;
};

constexpr int kMaxDerivativeOrder = 2;

// Append-only, process-wide. Ids are dense and index the monomial order:
// a smaller id is a larger variable.
SymId intern(std::string_view name, int order = 0);
std::optional<SymId> find_symbol(std::string_view name, int order = 0);
const Symbol& symbol(SymId id);
std::size_t symbol_count();

// name followed by one quote per derivative order
std::string symbol_text(SymId id);

// id of d/dt of the symbol; throws DerivativeOrderExceeded past second order
SymId derived(SymId id);

}  // namespace sgeo
