// JSON serialization for algebras, modules, semigroups, and solver reports.
// Output is canonical: ordered keys, RREF basis rows, fixed two-space
// indentation, so identical inputs give byte-identical files.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "liestruct/algebra.hpp"
#include "liestruct/catalog.hpp"
#include "liestruct/constructors.hpp"
#include "liestruct/errors.hpp"
#include "liestruct/field.hpp"
#include "liestruct/matrix.hpp"
#include "liestruct/modules.hpp"
#include "liestruct/solvers.hpp"

namespace liestruct {

using ordered_json = nlohmann::ordered_json;

using AnyLieModule = std::variant<LieModule<QField>, LieModule<FpField>>;
using AnyAssocModule = std::variant<AssocModule<QField>, AssocModule<FpField>>;

inline ordered_json field_to_json(const FieldSpec& spec) {
    ordered_json j;
    if (spec.characteristic() == 0) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = spec.characteristic();
    }
    return j;
}

FieldSpec field_from_json(const ordered_json& j);

template <class F>
ordered_json algebra_to_json(const Algebra<F>& alg) {
    ordered_json j;
    j["name"] = alg.name;
    j["field"] = field_to_json(alg.fld.spec());
    j["dim"] = alg.dim;
    if (!alg.basis_names.empty()) {
        ordered_json names = ordered_json::array();
        for (int i = 0; i < alg.dim; ++i) names.push_back(alg.label(i));
        j["basis"] = names;
    }
    ordered_json products = ordered_json::array();
    for (int i = 0; i < alg.dim; ++i)
        for (int k = 0; k < alg.dim; ++k)
            for (const auto& [m, c] : alg.prod(i, k))
                products.push_back(ordered_json::array({i, k, m, alg.fld.str(c)}));
    j["products"] = products;
    j["flavor"] = flavor_name(alg.flavor);
    if (alg.unit_index) j["unit"] = *alg.unit_index;
    return j;
}

template <class F>
Algebra<F> algebra_from_json_typed(const F& f, const ordered_json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("algebra JSON needs an integer dim");
    const int dim = j["dim"].get<int>();
    if (dim < 0) throw ParseError("algebra dim must be nonnegative");
    Flavor fl = Flavor::Generic;
    if (j.contains("flavor")) fl = flavor_parse(j["flavor"].get<std::string>());
    Algebra<F> alg(f, dim, fl, j.value("name", std::string{}));
    if (j.contains("basis")) {
        for (const auto& b : j["basis"]) alg.basis_names.push_back(b.get<std::string>());
        if (static_cast<int>(alg.basis_names.size()) != dim)
            throw ParseError("basis name count does not match dim");
    }
    if (j.contains("products")) {
        for (const auto& entry : j["products"]) {
            if (!entry.is_array() || entry.size() != 4)
                throw ParseError("each product entry is [i, j, k, coeff]");
            const int a = entry[0].get<int>(), b = entry[1].get<int>(), k = entry[2].get<int>();
            if (a < 0 || a >= dim || b < 0 || b >= dim || k < 0 || k >= dim)
                throw ParseError("product entry index out of range");
            alg.add(a, b, k, f.parse(entry[3].get<std::string>()));
        }
    }
    if (j.contains("unit")) {
        const int u = j["unit"].get<int>();
        if (u < 0 || u >= dim) throw ParseError("unit index out of range");
        alg.unit_index = u;
    }
    return alg;
}

AnyAlgebra algebra_from_json(const ordered_json& j,
                             const std::optional<FieldSpec>& field_override = std::nullopt);

template <class F>
ordered_json subspace_to_json(const F& f, const SubspaceBasis<F>& basis) {
    ordered_json rows = ordered_json::array();
    for (const auto& v : basis.vectors) {
        ordered_json row = ordered_json::array();
        for (const auto& c : v) row.push_back(f.str(c));
        rows.push_back(row);
    }
    return rows;
}

template <class F>
ordered_json report_to_json(const F& f, const StructureSpaceReport<F>& rep) {
    ordered_json j;
    j["kind"] = space_kind_name(rep.kind);
    j["dim"] = rep.space.dim();
    if (rep.quotient_dim) j["quotient_dim"] = *rep.quotient_dim;
    j["basis"] = subspace_to_json(f, rep.space);
    j["verified"] = rep.verified;
    return j;
}

template <class F>
ordered_json matrix_to_json(const Mat<F>& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : m.a) {
        ordered_json row = ordered_json::array();
        for (const auto& c : r) row.push_back(m.fld.str(c));
        rows.push_back(row);
    }
    return rows;
}

template <class F>
Mat<F> matrix_from_json(const F& f, const ordered_json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a nonempty array");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    Mat<F> m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols) throw ParseError("ragged matrix JSON");
        for (int c = 0; c < cols; ++c) m.a[r][c] = f.parse(j[r][c].get<std::string>());
    }
    return m;
}

template <class F>
ordered_json lie_module_to_json(const LieModule<F>& M) {
    ordered_json j;
    j["algebra"] = algebra_to_json(M.alg);
    j["dim"] = M.dim;
    ordered_json action = ordered_json::array();
    for (const auto& m : M.rho) action.push_back(matrix_to_json(m));
    j["action"] = action;
    return j;
}

// "algebra" may be an inline algebra object or a catalog spec string.
AnyLieModule lie_module_from_json(const ordered_json& j,
                                  const std::optional<FieldSpec>& field_override = std::nullopt);
AnyAssocModule assoc_module_from_json(
    const ordered_json& j, const std::optional<FieldSpec>& field_override = std::nullopt);

Semigroup semigroup_from_json(const ordered_json& j);
ordered_json semigroup_to_json(const Semigroup& G);

// Reads the optional "chi" block of a semigroup file.
template <class F>
QuasiCharacter<F> quasicharacter_from_json(const F& f, const Semigroup& G,
                                           const ordered_json& j) {
    if (!j.contains("chi")) throw ParseError("semigroup JSON has no chi block");
    QuasiCharacter<F> chi{f, {}};
    for (const auto& v : j["chi"]) chi.values.push_back(f.parse(v.get<std::string>()));
    if (static_cast<int>(chi.values.size()) != G.order)
        throw ParseError("chi length does not match semigroup order");
    return chi;
}

std::string canonical_dump(const ordered_json& j);
ordered_json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const ordered_json& j);

}  // namespace liestruct
