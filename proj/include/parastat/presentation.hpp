#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "parastat/format.hpp"

namespace parastat {

/// Named algebra given by generators and defining relations of T(V)/I.
class Presentation {
public:
    Presentation(std::string name, AlphabetPtr alphabet, std::vector<Element> relations, int default_degree = 4)
        : name_(std::move(name)), alphabet_(std::move(alphabet)), relations_(std::move(relations)),
          default_degree_(default_degree) {
        if (default_degree_ < 0)
            throw InvalidArgument("default degree must be nonnegative");
        for (const auto& r : relations_) {
            if (!same_alphabet(r.alphabet(), alphabet_))
                throw AlphabetMismatch();
            if (!r.parity())
                throw HomogeneityError("relation " + to_string(r) + " is not parity-homogeneous");
        }
    }

    const std::string& name() const { return name_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Element>& relations() const { return relations_; }
    int default_degree() const { return default_degree_; }

    int max_relation_degree() const {
        int d = 0;
        for (const auto& r : relations_)
            d = std::max(d, r.degree());
        return d;
    }

    Element unit() const { return Element::unit(alphabet_); }
    Element generator(int id) const { return Element::generator(alphabet_, id); }
    Element generator(std::string_view token) const {
        auto id = alphabet_->find(token);
        if (!id)
            throw InvalidArgument("unknown generator " + std::string(token) + " in " + name_);
        return generator(*id);
    }
    Element generator(const Generator& g) const { return Element::generator(alphabet_, g); }

    /// Canonical text of generators and relations; equal fingerprints mean
    /// equal presentations.
    std::string fingerprint() const {
        std::string s;
        for (const auto& g : alphabet_->generators())
            s += g.token() + (g.parity() == Parity::odd ? ":odd;" : ":even;");
        for (const auto& r : relations_)
            s += to_string(r) + ";";
        return s;
    }

private:
    std::string name_;
    AlphabetPtr alphabet_;
    std::vector<Element> relations_;
    int default_degree_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

} // namespace parastat
