#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "parastat/generator.hpp"

namespace parastat {

/// Finite sequence of letter ids of one alphabet. The empty word is the unit.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {}

    static Word letter(int id) { return Word(std::string(1, static_cast<char>(id))); }

    int degree() const { return static_cast<int>(letters_.size()); }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }

    Word sub(std::size_t pos, std::size_t len = std::string::npos) const {
        return Word(letters_.substr(pos, len));
    }
    const std::string& letters() const { return letters_; }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
    Word& operator+=(const Word& b) {
        letters_ += b.letters_;
        return *this;
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::string letters_;
};

/// Degree-lexicographic order: shorter words first, then lexicographic in the
/// alphabet's declared letter order.
struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.letters() < b.letters();
    }
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.letters()); }
};

inline Parity parity_of(const Word& w, const Alphabet& alphabet) {
    Parity p = Parity::even;
    for (std::size_t i = 0; i < w.size(); ++i)
        p = p + alphabet[w[i]].parity();
    return p;
}

inline int odd_letter_count(const Word& w, const Alphabet& alphabet) {
    int n = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        n += as_int(alphabet[w[i]].parity());
    return n;
}

inline Word reversed(const Word& w) {
    return Word(std::string(w.letters().rbegin(), w.letters().rend()));
}

/// True when `inner` occurs in `outer` as a contiguous factor.
inline bool contains_factor(const Word& outer, const Word& inner) {
    return outer.letters().find(inner.letters()) != std::string::npos;
}

} // namespace parastat
