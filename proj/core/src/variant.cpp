#include "cft/fenwick/variant.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace cft {

std::string to_string(TreeVariant v) {
    std::string name;
    switch (v.compression) {
        case Compression::Fixed: name = "fixed"; break;
        case Compression::Byte: name = "byte"; break;
        case Compression::Bit: name = "bit"; break;
    }
    name += v.layout == Layout::Level ? "[l]" : "[F]";
    return name;
}

TreeVariant parse_variant(std::string_view tag) {
    std::string s;
    for (char c : tag)
        if (c != '[' && c != ']') s.push_back(c);
    if (s.size() < 2) throw std::invalid_argument("unknown tree variant '" + std::string(tag) + "'");

    TreeVariant v;
    const char layout = s.back();
    if (layout == 'l' || layout == 'L') {
        v.layout = Layout::Level;
    } else if (layout == 'F' || layout == 'f') {
        v.layout = Layout::Classical;
    } else {
        throw std::invalid_argument("unknown tree variant '" + std::string(tag) + "'");
    }
    s.pop_back();
    if (s == "fixed") {
        v.compression = Compression::Fixed;
    } else if (s == "byte") {
        v.compression = Compression::Byte;
    } else if (s == "bit") {
        v.compression = Compression::Bit;
    } else {
        throw std::invalid_argument("unknown tree variant '" + std::string(tag) + "'");
    }
    return v;
}

}  // namespace cft
