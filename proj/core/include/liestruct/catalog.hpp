// Named algebra registry behind the construct/check CLI. Specs are strings:
// a head name, an optional ':' followed by comma-separated parameters, and
// composite heads whose parameters are themselves specs, e.g.
//   sl3          current:sl2,dual          dual_operad:novikov_vi,twisted_zn:7
#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "liestruct/algebra.hpp"
#include "liestruct/field.hpp"

namespace liestruct {

using AnyAlgebra = std::variant<Algebra<QField>, Algebra<FpField>>;

template <class F>
Algebra<F> catalog_build_typed(const F& f, const std::string& spec);

extern template Algebra<QField> catalog_build_typed(const QField&, const std::string&);
extern template Algebra<FpField> catalog_build_typed(const FpField&, const std::string&);

AnyAlgebra catalog_build(const FieldSpec& field, const std::string& spec);

// Heads understood by catalog_build, with a short usage note each.
std::vector<std::pair<std::string, std::string>> catalog_entries();

}  // namespace liestruct
