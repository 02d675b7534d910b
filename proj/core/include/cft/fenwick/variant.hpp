#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>

#include "cft/fenwick/classical.hpp"
#include "cft/fenwick/level.hpp"

namespace cft {

enum class Layout { Classical, Level };

/// A layout x compression pair, named bit[l], byte[F], fixed[l], ...
struct TreeVariant {
    Layout layout = Layout::Level;
    Compression compression = Compression::Byte;

    friend bool operator==(const TreeVariant&, const TreeVariant&) = default;
};

inline constexpr std::array<TreeVariant, 6> kAllVariants{{
    {Layout::Level, Compression::Bit},
    {Layout::Level, Compression::Byte},
    {Layout::Level, Compression::Fixed},
    {Layout::Classical, Compression::Bit},
    {Layout::Classical, Compression::Byte},
    {Layout::Classical, Compression::Fixed},
}};

std::string to_string(TreeVariant v);

/// Accepts "bit[l]", "byte[F]", ... and the bracket-free forms "bitl", "byteF".
/// Throws std::invalid_argument for anything else.
TreeVariant parse_variant(std::string_view tag);

template <TreeVariant V>
struct tree_type;
template <> struct tree_type<TreeVariant{Layout::Classical, Compression::Fixed}> { using type = FixedFenwick; };
template <> struct tree_type<TreeVariant{Layout::Classical, Compression::Byte}> { using type = ByteFenwick; };
template <> struct tree_type<TreeVariant{Layout::Classical, Compression::Bit}> { using type = BitFenwick; };
template <> struct tree_type<TreeVariant{Layout::Level, Compression::Fixed}> { using type = FixedLevelFenwick; };
template <> struct tree_type<TreeVariant{Layout::Level, Compression::Byte}> { using type = ByteLevelFenwick; };
template <> struct tree_type<TreeVariant{Layout::Level, Compression::Bit}> { using type = BitLevelFenwick; };

template <TreeVariant V>
using tree_type_t = typename tree_type<V>::type;

/// Calls fn(std::type_identity<Tree>{}) with the tree type selected at run time.
template <class Fn>
decltype(auto) dispatch_variant(TreeVariant v, Fn&& fn) {
    const bool level = v.layout == Layout::Level;
    switch (v.compression) {
        case Compression::Fixed:
            return level ? fn(std::type_identity<FixedLevelFenwick>{}) : fn(std::type_identity<FixedFenwick>{});
        case Compression::Byte:
            return level ? fn(std::type_identity<ByteLevelFenwick>{}) : fn(std::type_identity<ByteFenwick>{});
        case Compression::Bit:
            break;
    }
    return level ? fn(std::type_identity<BitLevelFenwick>{}) : fn(std::type_identity<BitFenwick>{});
}

}  // namespace cft

namespace cft {

template <class Tree>
struct variant_of;
template <> struct variant_of<FixedFenwick> : std::integral_constant<TreeVariant, TreeVariant{Layout::Classical, Compression::Fixed}> {};
template <> struct variant_of<ByteFenwick> : std::integral_constant<TreeVariant, TreeVariant{Layout::Classical, Compression::Byte}> {};
template <> struct variant_of<BitFenwick> : std::integral_constant<TreeVariant, TreeVariant{Layout::Classical, Compression::Bit}> {};
template <> struct variant_of<FixedLevelFenwick> : std::integral_constant<TreeVariant, TreeVariant{Layout::Level, Compression::Fixed}> {};
template <> struct variant_of<ByteLevelFenwick> : std::integral_constant<TreeVariant, TreeVariant{Layout::Level, Compression::Byte}> {};
template <> struct variant_of<BitLevelFenwick> : std::integral_constant<TreeVariant, TreeVariant{Layout::Level, Compression::Bit}> {};

template <class Tree>
inline constexpr TreeVariant variant_of_v = variant_of<Tree>::value;

}  // namespace cft
