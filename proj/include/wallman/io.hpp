#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "certificates.hpp"
#include "duality.hpp"
#include "error.hpp"
#include "filters.hpp"
#include "lattice.hpp"
#include "space.hpp"

namespace wallman {

using json = nlohmann::json;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline std::string line_at(const std::string& text, std::size_t line)
{
    std::istringstream in(text);
    std::string s;
    for (std::size_t i = 0; i < line && std::getline(in, s); ++i) {
    }
    return s;
}

inline const json& field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::parse_error, where + ": missing \"" + key + "\"");
    return j.at(key);
}

template <typename T>
T as(const json& j, const std::string& where)
{
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, where + ": " + e.what());
    }
}

} // namespace detail

/// Parse JSON text; syntax errors report line, column and the offending line.
inline json parse_json(const std::string& text, const std::string& label = "<input>")
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = detail::line_column(text, e.byte);
        throw Error(ErrorCode::parse_error, label + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                                ": malformed JSON near `" + detail::line_at(text, line) + "`");
    }
}

inline std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::invalid_argument, "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json read_json(const std::filesystem::path& path) { return parse_json(read_text(path), path.string()); }

inline void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::invalid_argument, "cannot write '" + path.string() + "'");
    out << text;
}

// ---- lattices ----

inline LatticeDescription description_from_json(const json& j, const std::string& fallback_name = "lattice")
{
    const std::string where = "lattice";
    LatticeDescription d;
    d.name = j.contains("name") ? detail::as<std::string>(j.at("name"), where + ".name") : fallback_name;
    d.elements = detail::as<std::vector<std::string>>(detail::field(j, "elements", where), where + ".elements");
    const bool covers = j.contains("covers"), leq = j.contains("leq");
    if (covers == leq)
        throw Error(ErrorCode::parse_error, where + ": exactly one of \"covers\" and \"leq\" is required");
    d.relation = covers ? LatticeDescription::Relation::covers : LatticeDescription::Relation::leq;
    const char* key = covers ? "covers" : "leq";
    for (const auto& pair : j.at(key)) {
        auto p = detail::as<std::vector<std::string>>(pair, where + "." + key);
        if (p.size() != 2)
            throw Error(ErrorCode::parse_error, where + "." + key + ": pairs have two entries");
        d.pairs.emplace_back(p[0], p[1]);
    }
    return d;
}

inline FiniteLattice lattice_from_json(const json& j, const std::string& fallback_name = "lattice")
{
    return load_lattice(description_from_json(j, fallback_name));
}

/// Canonical form: name, elements in id order, covering pairs.
inline json lattice_to_json(const FiniteLattice& L)
{
    json covers = json::array();
    for (const auto& [a, b] : L.cover_pairs())
        covers.push_back({L.element_name(a), L.element_name(b)});
    return {{"name", L.name()}, {"elements", L.names()}, {"covers", covers}};
}

inline FiniteLattice read_lattice(const std::filesystem::path& path)
{
    return lattice_from_json(read_json(path), path.stem().string());
}

/// Hasse diagram in dot format, edges pointing up.
inline std::string lattice_to_dot(const FiniteLattice& L)
{
    std::ostringstream out;
    out << "digraph \"" << L.name() << "\" {\n  rankdir=BT;\n";
    for (ElementId a = 0; a < L.size(); ++a)
        out << "  n" << a << " [label=\"" << L.element_name(a) << "\"];\n";
    for (const auto& [a, b] : L.cover_pairs())
        out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

inline json names_of(const FiniteLattice& L, const Bitset& S)
{
    json out = json::array();
    S.for_each([&](std::size_t a) { out.push_back(L.element_name(static_cast<ElementId>(a))); });
    return out;
}

inline json names_of(const FiniteLattice& L, const std::vector<ElementId>& ids)
{
    json out = json::array();
    for (auto a : ids)
        out.push_back(L.element_name(a));
    return out;
}

// ---- filters and spaces ----

inline json filter_to_json(const FiniteLattice& L, const FilterSet& F)
{
    return {{"kind", to_string(F.kind)}, {"elements", names_of(L, F.members)}};
}

inline FilterSet filter_from_json(const FiniteLattice& L, const json& j)
{
    const auto names = detail::as<std::vector<std::string>>(detail::field(j, "elements", "filter"), "filter.elements");
    FilterSet F{L.set_of(names), FilterKind::unclassified};
    if (j.contains("kind")) {
        const auto kind = detail::as<std::string>(j.at("kind"), "filter.kind");
        for (auto k : {FilterKind::filter, FilterKind::ideal, FilterKind::prime, FilterKind::ultra,
                       FilterKind::unclassified})
            if (kind == to_string(k))
                F.kind = k;
    }
    return F;
}

/// Points as sorted element lists plus the closed base a -> a+ as point
/// indices.
inline json space_to_json(const WallmanSpace& S)
{
    const FiniteLattice& L = *S.lattice;
    json points = json::array(), base = json::array();
    for (const auto& p : S.points)
        points.push_back(names_of(L, p.members));
    for (ElementId a = 0; a < L.size(); ++a)
        base.push_back({{"element", L.element_name(a)}, {"points", S.plus(a).members()}});
    json out{{"lattice", L.name()}, {"kind", to_string(S.kind)}, {"points", points}, {"closed_base", base}};
    if (S.topology_materialized) {
        json closed = json::array();
        for (const auto& c : S.closed_sets)
            closed.push_back(c.members());
        out["closed_sets"] = closed;
    }
    return out;
}

// ---- homomorphisms ----

struct HomDescription {
    std::string source;
    std::string target;
    std::vector<std::pair<std::string, std::string>> map;
};

inline HomDescription hom_description_from_json(const json& j)
{
    HomDescription h;
    h.source = detail::as<std::string>(detail::field(j, "source", "hom"), "hom.source");
    h.target = detail::as<std::string>(detail::field(j, "target", "hom"), "hom.target");
    for (const auto& pair : detail::field(j, "map", "hom")) {
        auto p = detail::as<std::vector<std::string>>(pair, "hom.map");
        if (p.size() != 2)
            throw Error(ErrorCode::parse_error, "hom.map: pairs have two entries");
        h.map.emplace_back(p[0], p[1]);
    }
    return h;
}

inline json hom_to_json(const LatticeHom& h)
{
    json map = json::array();
    for (ElementId a = 0; a < h.source->size(); ++a)
        map.push_back({h.source->element_name(a), h.target->element_name(h(a))});
    return {{"source", h.source->name()}, {"target", h.target->name()}, {"map", map}};
}

inline json space_map_to_json(const SpaceMap& f)
{
    json out = json::array();
    for (std::size_t p = 0; p < f.point_map.size(); ++p)
        out.push_back({f.source->point_name(p), f.target->point_name(f(p))});
    return out;
}

// ---- families ----

/// Entries sharing an id are one member in several groups; their sets and
/// stages must agree.
inline CoverFamily family_from_json(const json& j)
{
    CoverFamily F;
    F.ground = detail::as<std::vector<std::string>>(detail::field(j, "ground", "family"), "family.ground");
    std::map<std::string, std::size_t> point;
    for (std::size_t i = 0; i < F.ground.size(); ++i)
        if (!point.emplace(F.ground[i], i).second)
            throw Error(ErrorCode::parse_error, "family.ground: duplicate point '" + F.ground[i] + "'");
    auto to_set = [&](const json& pts, const std::string& where) {
        Bitset s(F.ground.size());
        for (const auto& x : detail::as<std::vector<std::string>>(pts, where)) {
            auto it = point.find(x);
            if (it == point.end())
                throw Error(ErrorCode::parse_error, where + ": unknown point '" + x + "'");
            s.set(it->second);
        }
        return s;
    };
    for (const auto& m : detail::field(j, "members", "family")) {
        const auto id = detail::as<std::string>(detail::field(m, "id", "family.members"), "member.id");
        const std::string where = "member '" + id + "'";
        Member u{id, to_set(detail::field(m, "set", where), where + ".set"),
                 {detail::as<unsigned>(detail::field(m, "group", where), where + ".group")},
                 {}};
        if (m.contains("stages"))
            for (const auto& st : m.at("stages"))
                u.stages.push_back(to_set(st, where + ".stages"));
        if (auto i = F.find(id)) {
            Member& prev = F.members[*i];
            if (prev.set != u.set || prev.stages != u.stages)
                throw Error(ErrorCode::parse_error, where + ": repeated with a different set or stages");
            prev.groups.push_back(u.groups.front());
            normalize_groups(prev.groups);
        } else {
            F.members.push_back(std::move(u));
        }
    }
    try {
        validate_family(F);
    } catch (const Error& e) {
        throw Error(ErrorCode::parse_error, e.what());
    }
    return F;
}

/// One entry per (member, group).
inline json family_to_json(const CoverFamily& F)
{
    auto names = [&](const Bitset& s) {
        json out = json::array();
        s.for_each([&](std::size_t x) { out.push_back(F.ground[x]); });
        return out;
    };
    json members = json::array();
    for (const auto& m : F.members)
        for (auto g : m.groups) {
            json e{{"id", m.id}, {"set", names(m.set)}, {"group", g}};
            if (!m.stages.empty()) {
                json st = json::array();
                for (const auto& s : m.stages)
                    st.push_back(names(s));
                e["stages"] = st;
            }
            members.push_back(std::move(e));
        }
    return {{"ground", F.ground}, {"members", members}};
}

inline PhiAssignment phi_from_json(const CoverFamily& F, const json& j)
{
    if (!j.is_object())
        throw Error(ErrorCode::parse_error, "phi: expected an object keyed by member id");
    PhiAssignment phi;
    phi.values.resize(F.size());
    std::vector<bool> seen(F.size(), false);
    for (const auto& [id, values] : j.items()) {
        const auto u = F.find(id);
        if (!u)
            throw Error(ErrorCode::parse_error, "phi: unknown member '" + id + "'");
        auto v = detail::as<std::vector<unsigned>>(values, "phi." + id);
        normalize_groups(v);
        phi.values[*u] = std::move(v);
        seen[*u] = true;
    }
    for (std::size_t u = 0; u < F.size(); ++u)
        if (!seen[u])
            throw Error(ErrorCode::parse_error, "phi: no value for member '" + F.members[u].id + "'");
    validate_phi(F, phi);
    return phi;
}

inline json phi_to_json(const CoverFamily& F, const PhiAssignment& phi)
{
    json out = json::object();
    for (std::size_t u = 0; u < F.size(); ++u)
        out[F.members[u].id] = phi[u];
    return out;
}

} // namespace wallman
