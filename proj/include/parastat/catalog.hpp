#pragma once

#include <charconv>
#include <string>

#include "parastat/bosonisation.hpp"

namespace parastat {

/// A presentation together with its structure maps.
struct Algebra {
    PresentationPtr presentation;
    StructureMaps maps;
};

/// Resolves "pb:n", "pf:n", "pbg:n", "pbk:n".
inline Algebra resolve_preset(const std::string& name) {
    const auto colon = name.find(':');
    if (colon == std::string::npos)
        throw InvalidArgument("algebra name '" + name + "' must look like pb:1");
    const std::string family = name.substr(0, colon);
    const std::string digits = name.substr(colon + 1);
    int n = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || end != digits.data() + digits.size() || n < 1)
        throw InvalidArgument("algebra '" + name + "' needs a positive mode count");
    if (family == "pb") {
        auto p = parabosonic(n);
        return {p, parabosonic_maps(p)};
    }
    if (family == "pf") {
        auto p = parafermionic(n);
        return {p, parafermionic_maps(p)};
    }
    if (family == "pbg") {
        auto p = parabosonic(n);
        auto sp = bosonise(p, parabosonic_maps(p));
        return {sp.presentation, sp.maps};
    }
    if (family == "pbk") {
        auto [p, m] = kpm_extend(parabosonic(n));
        return {p, m};
    }
    throw InvalidArgument("unknown algebra family '" + family + "', expected pb, pf, pbg or pbk");
}

} // namespace parastat
