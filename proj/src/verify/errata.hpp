#pragma once

// The reviewed list of confirmed misprints: a markdown table whose first
// column is the fixture id.

#include <set>
#include <string>

namespace sgeo::verify {

struct Errata {
    std::set<std::string> ids;
    bool contains(const std::string& id) const { return ids.count(id) > 0; }
};

Errata parse_errata(const std::string& text);
// throws Error when the file cannot be read
Errata load_errata(const std::string& path);
// location of the copy shipped with the sources
std::string default_errata_path();

}  // namespace sgeo::verify
