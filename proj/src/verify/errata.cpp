#include "verify/errata.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "common/errors.hpp"

#ifndef SGEO_ERRATA_PATH
#define SGEO_ERRATA_PATH "docs/errata.md"
#endif

namespace sgeo::verify {
namespace {

std::string trim(std::string s) {
    auto notspace = [](unsigned char c) { return !std::isspace(c) && c != '`'; };
    while (!s.empty() && !notspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && !notspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

}  // namespace

Errata parse_errata(const std::string& text) {
    Errata e;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] != '|') continue;
        std::size_t end = t.find('|', 1);
        if (end == std::string::npos) continue;
        std::string id = trim(t.substr(1, end - 1));
        if (id.empty() || id == "id" || id.find_first_not_of("-: ") == std::string::npos) continue;
        e.ids.insert(id);
    }
    return e;
}

Errata load_errata(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot read errata file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_errata(ss.str());
}

std::string default_errata_path() { return SGEO_ERRATA_PATH; }

}  // namespace sgeo::verify
