#include "liestruct/json_io.hpp"

#include <fstream>
#include <sstream>

#include "liestruct/catalog.hpp"

namespace liestruct {

FieldSpec field_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("field JSON needs a kind");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") {
        if (!j.contains("p")) throw ParseError("Fp field JSON needs p");
        return FieldSpec::prime(j["p"].get<std::uint32_t>());
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

AnyAlgebra algebra_from_json(const ordered_json& j, const std::optional<FieldSpec>& field_override) {
    FieldSpec spec = FieldSpec::rationals();
    if (field_override)
        spec = *field_override;
    else if (j.contains("field"))
        spec = field_from_json(j["field"]);
    else
        throw ParseError("algebra JSON needs a field (or pass --field)");
    if (spec.characteristic() == 0) return algebra_from_json_typed(QField{}, j);
    return algebra_from_json_typed(FpField{spec.characteristic()}, j);
}

namespace {

template <class F>
LieModule<F> lie_module_typed(const F& f, const ordered_json& j) {
    Algebra<F> alg = j["algebra"].is_string()
                         ? std::get<Algebra<F>>(catalog_build(f.spec(), j["algebra"].get<std::string>()))
                         : algebra_from_json_typed(f, j["algebra"]);
    LieModule<F> M{std::move(alg), j["dim"].get<int>(), {}, j.value("name", std::string{})};
    for (const auto& m : j["action"]) M.rho.push_back(matrix_from_json(f, m));
    certify_module(M);
    return M;
}

template <class F>
AssocModule<F> assoc_module_typed(const F& f, const ordered_json& j) {
    Algebra<F> alg = j["algebra"].is_string()
                         ? std::get<Algebra<F>>(catalog_build(f.spec(), j["algebra"].get<std::string>()))
                         : algebra_from_json_typed(f, j["algebra"]);
    AssocModule<F> V{std::move(alg), j["dim"].get<int>(), {}, j.value("unital", true),
                     j.value("name", std::string{})};
    for (const auto& m : j["action"]) V.rho.push_back(matrix_from_json(f, m));
    certify_module(V);
    return V;
}

FieldSpec module_field(const ordered_json& j, const std::optional<FieldSpec>& field_override) {
    if (field_override) return *field_override;
    if (j.contains("algebra") && j["algebra"].is_object() && j["algebra"].contains("field"))
        return field_from_json(j["algebra"]["field"]);
    throw ParseError("module JSON needs an inline algebra field (or pass --field)");
}

}  // namespace

AnyLieModule lie_module_from_json(const ordered_json& j,
                                  const std::optional<FieldSpec>& field_override) {
    if (!j.contains("algebra") || !j.contains("dim") || !j.contains("action"))
        throw ParseError("module JSON needs algebra, dim, action");
    auto spec = module_field(j, field_override);
    if (spec.characteristic() == 0) return lie_module_typed(QField{}, j);
    return lie_module_typed(FpField{spec.characteristic()}, j);
}

AnyAssocModule assoc_module_from_json(const ordered_json& j,
                                      const std::optional<FieldSpec>& field_override) {
    if (!j.contains("algebra") || !j.contains("dim") || !j.contains("action"))
        throw ParseError("module JSON needs algebra, dim, action");
    auto spec = module_field(j, field_override);
    if (spec.characteristic() == 0) return assoc_module_typed(QField{}, j);
    return assoc_module_typed(FpField{spec.characteristic()}, j);
}

Semigroup semigroup_from_json(const ordered_json& j) {
    if (!j.contains("order") || !j.contains("table"))
        throw ParseError("semigroup JSON needs order and table");
    const int order = j["order"].get<int>();
    std::vector<int> table;
    for (const auto& row : j["table"]) {
        if (row.is_array())
            for (const auto& v : row) table.push_back(v.get<int>());
        else
            table.push_back(row.get<int>());
    }
    return make_semigroup(order, table, j.value("name", std::string{}));
}

ordered_json semigroup_to_json(const Semigroup& G) {
    ordered_json j;
    j["order"] = G.order;
    ordered_json table = ordered_json::array();
    for (int a = 0; a < G.order; ++a) {
        ordered_json row = ordered_json::array();
        for (int b = 0; b < G.order; ++b) row.push_back(G.prod(a, b));
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

std::string canonical_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << canonical_dump(j);
}

}  // namespace liestruct
