#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "parastat/catalog.hpp"
#include "parastat/expression.hpp"

namespace parastat {

// Line-oriented text format:
//
//   algebra pb:1
//   degree 4
//   flavor braided
//   generator b1+ parity=odd
//   relation [{b1+, b1-}, b1-] + 2*b1-
//   coproduct b1+ b1+ ox 1 + 1 ox b1+
//   counit b1+ 0
//   antipode b1+ -b1+
//
// Blank lines and lines starting with '#' are ignored. The map lines are
// optional; a file without them carries no structure maps.

inline Generator generator_from_token(const std::string& token, Parity parity) {
    if (token == "g")
        return {Family::g, Sign::none, std::nullopt, parity};
    if (token == "K+" || token == "K-")
        return {Family::K, token[1] == '+' ? Sign::plus : Sign::minus, std::nullopt, parity};
    if (token.size() >= 3 && (token[0] == 'b' || token[0] == 'f') && (token.back() == '+' || token.back() == '-')) {
        const std::string digits = token.substr(1, token.size() - 2);
        if (digits.find_first_not_of("0123456789") == std::string::npos)
            return {token[0] == 'b' ? Family::b : Family::f, token.back() == '+' ? Sign::plus : Sign::minus,
                    std::stoi(digits), parity};
    }
    throw InvalidArgument("bad generator token '" + token + "'");
}

struct LoadedPresentation {
    PresentationPtr presentation;
    std::optional<StructureMaps> maps;
};

namespace detail {

struct MapLine {
    std::string kind;
    std::string token;
    std::string expr;
    int line;
};

inline Element parse_element(const std::string& text, const AlphabetPtr& a, int line) {
    try {
        Value v = parastat::lower(parse(text, *a), a);
        if (!std::holds_alternative<Element>(v))
            throw InvalidArgument("expected an algebra element, got a tensor");
        return std::get<Element>(v);
    } catch (const Error& e) {
        throw InvalidArgument("line " + std::to_string(line) + ": " + e.what());
    }
}

inline TensorElement parse_tensor(const std::string& text, const AlphabetPtr& a, int line) {
    try {
        Value v = parastat::lower(parse(text, *a), a);
        if (!std::holds_alternative<TensorElement>(v) || std::get<TensorElement>(v).rank() != 2)
            throw InvalidArgument("expected a rank-2 tensor");
        return std::get<TensorElement>(v);
    } catch (const Error& e) {
        throw InvalidArgument("line " + std::to_string(line) + ": " + e.what());
    }
}

inline LoadedPresentation assemble(const std::string& name, int degree, std::optional<Flavor> flavor,
                                   const std::vector<Generator>& gens,
                                   const std::vector<std::pair<std::string, int>>& relation_text,
                                   const std::vector<MapLine>& maps) {
    if (gens.empty())
        throw InvalidArgument("presentation declares no generators");
    auto a = make_alphabet(gens);
    std::vector<Element> relations;
    for (const auto& [text, line] : relation_text)
        relations.push_back(parse_element(text, a, line));
    LoadedPresentation out{std::make_shared<const Presentation>(name, a, std::move(relations), degree), std::nullopt};
    if (maps.empty())
        return out;
    StructureMaps m(out.presentation, flavor.value_or(Flavor::plain));
    for (const auto& ml : maps) {
        const auto id = a->find(ml.token);
        if (!id)
            throw InvalidArgument("line " + std::to_string(ml.line) + ": unknown generator '" + ml.token + "'");
        if (ml.kind == "coproduct") {
            m.set_coproduct(*id, parse_tensor(ml.expr, a, ml.line));
        } else if (ml.kind == "antipode") {
            m.set_antipode(*id, parse_element(ml.expr, a, ml.line));
        } else {
            const Element e = parse_element(ml.expr, a, ml.line);
            if (e.degree() > 0)
                throw InvalidArgument("line " + std::to_string(ml.line) + ": counit value must be a scalar");
            m.set_counit(*id, e.coefficient(Word()));
        }
    }
    out.maps = std::move(m);
    return out;
}

inline Flavor parse_flavor(const std::string& s) {
    if (s == "braided")
        return Flavor::braided;
    if (s == "plain")
        return Flavor::plain;
    throw InvalidArgument("flavor must be braided or plain, got '" + s + "'");
}

inline Parity parse_parity(const std::string& s) {
    if (s == "odd")
        return Parity::odd;
    if (s == "even")
        return Parity::even;
    throw InvalidArgument("parity must be even or odd, got '" + s + "'");
}

} // namespace detail

inline LoadedPresentation read_presentation_text(std::istream& in) {
    std::string name = "custom";
    int degree = 4;
    std::optional<Flavor> flavor;
    std::vector<Generator> gens;
    std::vector<std::pair<std::string, int>> relations;
    std::vector<detail::MapLine> maps;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream line(raw);
        std::string key;
        if (!(line >> key) || key[0] == '#')
            continue;
        std::string rest;
        std::getline(line >> std::ws, rest);
        auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
        if (key == "algebra") {
            name = rest;
        } else if (key == "degree") {
            try {
                degree = std::stoi(rest);
            } catch (const std::exception&) {
                throw InvalidArgument(where() + "bad degree '" + rest + "'");
            }
        } else if (key == "flavor") {
            flavor = detail::parse_flavor(rest);
        } else if (key == "generator") {
            std::istringstream fields(rest);
            std::string token, parity;
            fields >> token >> parity;
            if (parity.rfind("parity=", 0) != 0)
                throw InvalidArgument(where() + "expected 'generator <token> parity=even|odd'");
            gens.push_back(generator_from_token(token, detail::parse_parity(parity.substr(7))));
        } else if (key == "relation") {
            relations.emplace_back(rest, line_no);
        } else if (key == "coproduct" || key == "counit" || key == "antipode") {
            std::istringstream fields(rest);
            std::string token;
            fields >> token;
            std::string expr;
            std::getline(fields >> std::ws, expr);
            maps.push_back({key, token, expr, line_no});
        } else {
            throw InvalidArgument(where() + "unknown directive '" + key + "'");
        }
    }
    return detail::assemble(name, degree, flavor, gens, relations, maps);
}

inline std::string write_presentation_text(const Presentation& p, const StructureMaps* m = nullptr) {
    std::ostringstream out;
    out << "algebra " << p.name() << "\n";
    out << "degree " << p.default_degree() << "\n";
    if (m)
        out << "flavor " << to_string(m->flavor()) << "\n";
    for (const auto& g : p.alphabet()->generators())
        out << "generator " << g.token() << " parity=" << (g.parity() == Parity::odd ? "odd" : "even") << "\n";
    for (const auto& r : p.relations())
        out << "relation " << to_string(r) << "\n";
    if (m) {
        for (int id = 0; id < static_cast<int>(p.alphabet()->size()); ++id) {
            const std::string tok = (*p.alphabet())[id].token();
            out << "coproduct " << tok << " " << to_string(m->coproduct(id)) << "\n";
            out << "counit " << tok << " " << to_string(m->counit(id)) << "\n";
            out << "antipode " << tok << " " << to_string(m->antipode(id)) << "\n";
        }
    }
    return out.str();
}

/// JSON mirror of the text format.
inline nlohmann::ordered_json presentation_to_json(const Presentation& p, const StructureMaps* m = nullptr) {
    nlohmann::ordered_json j;
    j["algebra"] = p.name();
    j["degree"] = p.default_degree();
    if (m)
        j["flavor"] = to_string(m->flavor());
    j["generators"] = nlohmann::ordered_json::array();
    for (const auto& g : p.alphabet()->generators())
        j["generators"].push_back({{"token", g.token()}, {"parity", g.parity() == Parity::odd ? "odd" : "even"}});
    j["relations"] = nlohmann::ordered_json::array();
    for (const auto& r : p.relations())
        j["relations"].push_back(to_string(r));
    if (m) {
        nlohmann::ordered_json maps = nlohmann::ordered_json::object();
        for (int id = 0; id < static_cast<int>(p.alphabet()->size()); ++id)
            maps[(*p.alphabet())[id].token()] = {{"coproduct", to_string(m->coproduct(id))},
                                                 {"counit", to_string(m->counit(id))},
                                                 {"antipode", to_string(m->antipode(id))}};
        j["maps"] = maps;
    }
    return j;
}

inline LoadedPresentation presentation_from_json(const nlohmann::json& j) {
    try {
        std::vector<Generator> gens;
        for (const auto& g : j.at("generators"))
            gens.push_back(generator_from_token(g.at("token").get<std::string>(),
                                                detail::parse_parity(g.at("parity").get<std::string>())));
        std::vector<std::pair<std::string, int>> relations;
        for (const auto& r : j.at("relations"))
            relations.emplace_back(r.get<std::string>(), 0);
        std::vector<detail::MapLine> maps;
        if (j.contains("maps"))
            for (const auto& [tok, images] : j.at("maps").items())
                for (const char* kind : {"coproduct", "counit", "antipode"})
                    maps.push_back({kind, tok, images.at(kind).get<std::string>(), 0});
        std::optional<Flavor> flavor;
        if (j.contains("flavor"))
            flavor = detail::parse_flavor(j.at("flavor").get<std::string>());
        return detail::assemble(j.value("algebra", std::string("custom")), j.value("degree", 4), flavor, gens,
                                relations, maps);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed presentation JSON: ") + e.what());
    }
}

/// Reads either format; JSON is recognised by a leading '{'.
inline LoadedPresentation read_presentation(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument(std::string("malformed presentation JSON: ") + e.what());
        }
        return presentation_from_json(j);
    }
    std::istringstream stream(text);
    return read_presentation_text(stream);
}

} // namespace parastat
