#include "scalar_ring/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "common/errors.hpp"

namespace sgeo {
namespace {

// Parameters that never depend on t.
constexpr const char* kConstants[] = {"a", "aB", "aS", "eps", "hbar"};

// Registered up front so that canonical forms of the model expressions do not
// depend on which computation happened to touch a symbol first.
constexpr const char* kTimeFamilies[] = {
    "pi1", "pi2", "pi3", "pi4", "pi5",
    "qpi1", "qpi2", "qpi3", "qpi4", "qpi5", "qpi6", "qpi7",
};
constexpr const char* kRaw[] = {
    "gammat", "gammatb", "deltat", "deltatb", "alphat", "alphatb", "betat", "betatb",
    "bB", "bS", "cB", "cS", "dB", "dS", "eB", "eS", "p", "q", "r",
};

bool is_constant_name(std::string_view n) {
    for (const char* c : kConstants)
        if (n == c) return true;
    return false;
}

class Registry {
public:
    Registry() {
        for (const char* c : kConstants) add(c, 0);
        for (int ord = 0; ord <= kMaxDerivativeOrder; ++ord)
            for (const char* n : kTimeFamilies) add(n, ord);
        for (const char* n : kRaw) add(n, 0);
    }

    SymId intern(std::string_view name, int order) {
        {
            std::shared_lock lk(mu_);
            if (auto it = index_.find(key(name, order)); it != index_.end()) return it->second;
        }
        std::unique_lock lk(mu_);
        return add(name, order);
    }

    std::optional<SymId> find(std::string_view name, int order) const {
        std::shared_lock lk(mu_);
        auto it = index_.find(key(name, order));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const Symbol& get(SymId id) const {
        std::shared_lock lk(mu_);
        return syms_.at(id);
    }

    std::size_t size() const {
        std::shared_lock lk(mu_);
        return syms_.size();
    }

private:
    static std::string key(std::string_view name, int order) {
        std::string k(name);
        k.push_back('#');
        k += std::to_string(order);
        return k;
    }

    // caller holds the unique lock (or is the constructor)
    SymId add(std::string_view name, int order) {
        std::string k = key(name, order);
        if (auto it = index_.find(k); it != index_.end()) return it->second;
        SymId id = static_cast<SymId>(syms_.size());
        syms_.push_back(Symbol{std::string(name), order, !is_constant_name(name)});
        index_.emplace(std::move(k), id);
        return id;
    }

    mutable std::shared_mutex mu_;
    std::deque<Symbol> syms_;  // deque keeps references stable on growth
    std::unordered_map<std::string, SymId> index_;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

SymId intern(std::string_view name, int order) {
    if (name.empty()) throw Error("empty symbol name");
    if (order < 0 || order > kMaxDerivativeOrder)
        throw DerivativeOrderExceeded(std::string(name) + " with order " + std::to_string(order));
    return registry().intern(name, order);
}

std::optional<SymId> find_symbol(std::string_view name, int order) {
    return registry().find(name, order);
}

const Symbol& symbol(SymId id) { return registry().get(id); }

std::size_t symbol_count() { return registry().size(); }

std::string symbol_text(SymId id) {
    const Symbol& s = symbol(id);
    return s.name + std::string(static_cast<std::size_t>(s.order), '\'');
}

SymId derived(SymId id) {
    const Symbol& s = symbol(id);
    if (s.order >= kMaxDerivativeOrder)
        throw DerivativeOrderExceeded("d/dt of " + symbol_text(id));
    return intern(s.name, s.order + 1);
}

}  // namespace sgeo
