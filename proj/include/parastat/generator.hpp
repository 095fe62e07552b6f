#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "parastat/error.hpp"

namespace parastat {

enum class Family : std::uint8_t { b, f, g, K };
enum class Sign : std::int8_t { minus = -1, none = 0, plus = 1 };
enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}
inline int as_int(Parity p) { return static_cast<int>(p); }
inline int as_int(Sign s) { return static_cast<int>(s); }
inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

class Generator {
public:
    Generator(Family family, Sign sign, std::optional<int> index, Parity parity)
        : family_(family), sign_(sign), index_(index), parity_(parity) {
        const bool group_like = family == Family::g || family == Family::K;
        if (group_like && index)
            throw InvalidArgument("generators g and K carry no index");
        if (!group_like && (!index || *index < 1))
            throw InvalidArgument("b and f generators need a positive index");
        if (family == Family::g && sign != Sign::none)
            throw InvalidArgument("g carries no sign");
        if (family != Family::g && sign == Sign::none)
            throw InvalidArgument("b, f and K generators need a sign");
    }

    /// Paraboson b_i^s, odd.
    static Generator boson(int index, Sign s) { return {Family::b, s, index, Parity::odd}; }
    /// Parafermion f_i^s, even.
    static Generator fermion(int index, Sign s) { return {Family::f, s, index, Parity::even}; }
    static Generator involution() { return {Family::g, Sign::none, std::nullopt, Parity::even}; }
    static Generator twist(Sign s) { return {Family::K, s, std::nullopt, Parity::even}; }

    Family family() const { return family_; }
    Sign sign() const { return sign_; }
    std::optional<int> index() const { return index_; }
    Parity parity() const { return parity_; }

    /// Token used by the parser and printer: b1+, f2-, g, K+.
    std::string token() const {
        std::string t;
        switch (family_) {
        case Family::b: t = "b"; break;
        case Family::f: t = "f"; break;
        case Family::g: return "g";
        case Family::K: t = "K"; break;
        }
        if (index_)
            t += std::to_string(*index_);
        t += sign_ == Sign::plus ? '+' : '-';
        return t;
    }

    friend bool operator==(const Generator&, const Generator&) = default;

private:
    Family family_;
    Sign sign_;
    std::optional<int> index_;
    Parity parity_;
};

/// Ordered generator list of a presentation. Letter ids are positions in this
/// list and the declared order is the deglex letter order.
class Alphabet {
public:
    explicit Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
        if (gens_.size() > 250)
            throw InvalidArgument("alphabet too large");
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            auto [it, fresh] = by_token_.emplace(gens_[i].token(), static_cast<int>(i));
            if (!fresh)
                throw InvalidArgument("duplicate generator " + gens_[i].token());
        }
    }

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](int id) const { return gens_.at(static_cast<std::size_t>(id)); }
    const std::vector<Generator>& generators() const { return gens_; }

    std::optional<int> find(std::string_view token) const {
        auto it = by_token_.find(std::string(token));
        if (it == by_token_.end())
            return std::nullopt;
        return it->second;
    }
    int id_of(const Generator& g) const {
        auto id = find(g.token());
        if (!id || gens_[static_cast<std::size_t>(*id)] != g)
            throw InvalidArgument("generator " + g.token() + " not in alphabet");
        return *id;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.gens_ == b.gens_; }

private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, int> by_token_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<Generator> gens) {
    return std::make_shared<const Alphabet>(std::move(gens));
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace parastat
