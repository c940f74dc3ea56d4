#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fibtc {

// The real division algebras: reals, complex numbers, quaternions.
enum class Field { R, C, H };

inline int real_dimension(Field f)
{
    switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
    }
    return 1;
}

inline std::string to_string(Field f)
{
    switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
    }
    return "?";
}

inline std::optional<Field> parse_field(std::string_view s)
{
    if (s == "R")
        return Field::R;
    if (s == "C")
        return Field::C;
    if (s == "H")
        return Field::H;
    return std::nullopt;
}

}  // namespace fibtc
