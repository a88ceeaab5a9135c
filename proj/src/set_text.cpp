#include "sidon/set_text.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sidon::io {

namespace {

std::int64_t parse_int(const std::string& tok) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid integer token '" + tok + "'");
    }
    if (pos != tok.size()) throw std::invalid_argument("invalid integer token '" + tok + "'");
    return v;
}

}  // namespace

IntegerSet parse_set_text(std::istream& in) {
    Ambient ambient = Ambient::unbounded();
    bool saw_header = false;
    bool saw_element = false;
    std::vector<std::int64_t> elems;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "mod" || tok == "n") {
                if (saw_header) throw std::invalid_argument("duplicate ambient header");
                if (saw_element)
                    throw std::invalid_argument("ambient header must precede elements");
                std::string btok;
                if (!(ls >> btok)) throw std::invalid_argument("ambient header missing bound");
                std::int64_t b = parse_int(btok);
                ambient = tok == "mod" ? Ambient::cyclic(b) : Ambient::interval(b);
                saw_header = true;
            } else {
                elems.push_back(parse_int(tok));
                saw_element = true;
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw std::invalid_argument("duplicate set element");
    return IntegerSet(std::move(elems), ambient);
}

IntegerSet parse_set_string(const std::string& text) {
    std::istringstream in(text);
    return parse_set_text(in);
}

IntegerSet parse_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open set file '" + path + "'");
    return parse_set_text(in);
}

void write_set_text(std::ostream& out, const IntegerSet& set,
                    const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    if (set.ambient().kind == AmbientKind::Cyclic)
        out << "mod " << set.ambient().bound << "\n";
    else if (set.ambient().kind == AmbientKind::Interval)
        out << "n " << set.ambient().bound << "\n";
    const auto& e = set.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        out << e[i] << (i + 1 == e.size() || (i + 1) % 10 == 0 ? "\n" : " ");
}

}  // namespace sidon::io
