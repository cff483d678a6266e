#include "defcoh/document.hpp"

#include "defcoh/combinatorics.hpp"

#include <fstream>

namespace defcoh {

namespace {

std::string at(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string at(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

void expect_object(const Json& j, const std::string& path, std::initializer_list<std::string_view> allowed)
{
    if (!j.is_object())
        throw DocumentError(path, "expected an object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (auto key : allowed)
            known = known || item.key() == key;
        if (!known)
            throw DocumentError(at(path, item.key()), "unknown field");
    }
}

const Json& field(const Json& j, const std::string& path, std::string_view key)
{
    const auto it = j.find(std::string(key));
    if (it == j.end())
        throw DocumentError(at(path, key), "missing field");
    return *it;
}

int parse_count(const Json& j, const std::string& path, int max)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw DocumentError(path, "expected a non-negative integer");
    if (j.get<long long>() > max)
        throw DocumentError(path, "at most " + std::to_string(max) + " is supported");
    return j.get<int>();
}

Rational parse_value(const Json& j, const std::string& path)
{
    if (!j.is_string())
        throw DocumentError(path, "expected a rational string such as \"-3/4\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
        throw DocumentError(path, e.what());
    }
}

Vector parse_out(const Json& j, const std::string& path, int dim)
{
    if (!j.is_object())
        throw DocumentError(path, "expected an object mapping 1-based indices to rationals");
    Vector v = zero_vector(dim);
    for (const auto& item : j.items()) {
        const std::string item_path = at(path, item.key());
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(item.key(), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.key().size() || k < 1 || k > dim)
            throw DocumentError(item_path, "index must be an integer between 1 and " + std::to_string(dim));
        v(k - 1) = parse_value(item.value(), item_path);
    }
    return v;
}

std::vector<int> parse_in(const Json& j, const std::string& path, int arity, int dim)
{
    if (!j.is_array() || static_cast<int>(j.size()) != arity)
        throw DocumentError(path, "expected an array of " + std::to_string(arity) + " indices");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& e = j[i];
        if (!e.is_number_integer() || e.get<long long>() < 1 || e.get<long long>() > dim)
            throw DocumentError(at(path, i), "index must be an integer between 1 and " + std::to_string(dim));
        out.push_back(e.get<int>() - 1);
    }
    return out;
}

void require_increasing(std::span<const int> block, const std::string& path)
{
    for (std::size_t i = 1; i < block.size(); ++i)
        if (block[i - 1] >= block[i])
            throw DocumentError(path, "inputs of a skew slot must be strictly increasing");
}

Matrix parse_matrix(const Json& j, const std::string& path, int n)
{
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw DocumentError(path, "expected " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (std::size_t r = 0; r < j.size(); ++r) {
        const std::string row_path = at(path, r);
        const Json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw DocumentError(row_path, "expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < row.size(); ++c)
            m(static_cast<Index>(r), static_cast<Index>(c)) = parse_value(row[c], at(row_path, c));
    }
    return m;
}

Algebra parse_algebra(const Json& j)
{
    const Json& kind_json = field(j, "", "kind");
    if (!kind_json.is_string())
        throw DocumentError("/kind", "expected a string");
    AlgebraKind kind;
    try {
        kind = parse_kind(kind_json.get<std::string>());
    } catch (const InputError& e) {
        throw DocumentError("/kind", e.what());
    }
    const int dim = parse_count(field(j, "", "dim"), "/dim", 64);
    const int arity = structure_arity(kind);

    std::vector<StructureEntry> entries;
    const auto it = j.find("constants");
    if (it != j.end()) {
        if (!it->is_array())
            throw DocumentError("/constants", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = at("/constants", i);
            const Json& e = (*it)[i];
            expect_object(e, path, {"in", "out"});
            std::vector<int> in = parse_in(field(e, path, "in"), at(path, "in"), arity, dim);
            if (is_skew_kind(kind))
                require_increasing(in, at(path, "in"));
            entries.push_back({std::move(in), parse_out(field(e, path, "out"), at(path, "out"), dim)});
        }
    }
    try {
        return Algebra::from_entries(kind, dim, entries);
    } catch (const InputError& e) {
        throw DocumentError("/constants", e.what());
    }
}

Representation parse_representation(const Json& j, const Algebra& a)
{
    const std::string path = "/representation";
    const auto names = map_names(a.kind());
    if (!j.is_object())
        throw DocumentError(path, "expected an object");
    for (const auto& item : j.items()) {
        bool known = item.key() == "dimV";
        for (auto name : names)
            known = known || item.key() == name;
        if (!known)
            throw DocumentError(at(path, item.key()), "unknown field for a " +
                                                          std::string(kind_name(a.kind())) +
                                                          " representation");
    }
    const int dim_v = parse_count(field(j, path, "dimV"), at(path, "dimV"), 256);
    const auto count = static_cast<std::size_t>(Representation::matrices_per_map(a.kind(), a.dim()));

    std::vector<std::vector<Matrix>> maps;
    for (auto name : names) {
        const std::string map_path = at(path, name);
        const Json& list = field(j, path, name);
        if (!list.is_array() || list.size() != count)
            throw DocumentError(map_path, "expected a list of " + std::to_string(count) + " matrices");
        std::vector<Matrix> matrices;
        for (std::size_t i = 0; i < list.size(); ++i)
            matrices.push_back(parse_matrix(list[i], at(map_path, i), dim_v));
        maps.push_back(std::move(matrices));
    }
    if (maps.size() == 1)
        return Representation(a, dim_v, std::move(maps[0]));
    return Representation(a, dim_v, std::move(maps[0]), std::move(maps[1]));
}

Cochain parse_cochain(const Json& j, const Algebra& a)
{
    const std::string path = "/cochain";
    expect_object(j, path, {"degree", "entries"});
    const int degree = parse_count(field(j, path, "degree"), at(path, "degree"), 12);
    const CochainSpace space = graded_space(a.kind(), degree, a.dim());
    Vector coords = zero_vector(space.dimension());

    const Json& entries = field(j, path, "entries");
    if (!entries.is_array())
        throw DocumentError(at(path, "entries"), "expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string entry_path = at(at(path, "entries"), i);
        const Json& e = entries[i];
        expect_object(e, entry_path, {"in", "out"});
        const std::string in_path = at(entry_path, "in");
        const std::vector<int> in = parse_in(field(e, entry_path, "in"), in_path, space.arity(), a.dim());
        std::size_t pos = 0;
        for (int block : space.blocks()) {
            require_increasing(std::span<const int>(in).subspan(pos, static_cast<std::size_t>(block)), in_path);
            pos += static_cast<std::size_t>(block);
        }
        const auto slot = space.locate(in);
        coords.segment(slot->offset, a.dim()) +=
            parse_out(field(e, entry_path, "out"), at(entry_path, "out"), a.dim());
    }
    return Cochain(space, std::move(coords));
}

std::vector<int> one_based(std::vector<int> in)
{
    for (int& i : in)
        ++i;
    return in;
}

} // namespace

Document parse_document(const Json& json)
{
    expect_object(json, "", {"kind", "dim", "constants", "representation", "cochain"});
    Document doc{parse_algebra(json), std::nullopt, std::nullopt};
    if (const auto it = json.find("representation"); it != json.end())
        doc.representation = parse_representation(*it, doc.algebra);
    if (const auto it = json.find("cochain"); it != json.end())
        doc.cochain = parse_cochain(*it, doc.algebra);
    return doc;
}

Document load_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    Json json;
    try {
        json = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DocumentError("", std::string("invalid JSON: ") + e.what());
    }
    return parse_document(json);
}

Json sparse_vector_json(const Vector& v)
{
    Json out = Json::object();
    for (Index k = 0; k < v.size(); ++k)
        if (!is_zero(v(k)))
            out[std::to_string(k + 1)] = format_rational(v(k));
    return out;
}

Json matrix_json(const Matrix& m)
{
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c)
            row.push_back(format_rational(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json algebra_json(const Algebra& a)
{
    Json constants = Json::array();
    for (const auto& e : a.entries())
        constants.push_back({{"in", one_based(e.in)}, {"out", sparse_vector_json(e.out)}});
    return {{"kind", std::string(kind_name(a.kind()))}, {"dim", a.dim()}, {"constants", constants}};
}

Json representation_json(const Representation& r)
{
    Json out = {{"dimV", r.dim_v()}};
    const auto names = map_names(r.kind());
    const std::vector<Matrix>* maps[] = {&r.first(), &r.second()};
    for (std::size_t i = 0; i < names.size(); ++i) {
        Json list = Json::array();
        for (const auto& m : *maps[i])
            list.push_back(matrix_json(m));
        out[std::string(names[i])] = std::move(list);
    }
    return out;
}

Json cochain_entries(const Cochain& c)
{
    const auto& space = c.space();
    const int dv = space.dim_v();
    Json entries = Json::array();
    for (Index k = 0; k < space.domain_size(); ++k) {
        const Vector value = c.coords().segment(k * dv, dv);
        if (all_zero(value))
            continue;
        entries.push_back({{"in", one_based(space.domain_tuple(k))}, {"out", sparse_vector_json(value)}});
    }
    return entries;
}

Json to_json(const Document& doc)
{
    Json out = algebra_json(doc.algebra);
    if (doc.representation)
        out["representation"] = representation_json(*doc.representation);
    if (doc.cochain)
        out["cochain"] = {{"degree", doc.cochain->graded_degree()}, {"entries", cochain_entries(*doc.cochain)}};
    return out;
}

} // namespace defcoh
