#pragma once

#include "bott/admissible.hpp"
#include "bott/cohomology.hpp"
#include "bott/core.hpp"
#include "bott/fan.hpp"
#include "bott/poly.hpp"

#include <json.hpp>

namespace bott {

using Json = nlohmann::ordered_json;

Json to_json(const BottMatrix& A);
BottMatrix matrix_from_json(const Json& j);  // {"n","rows"}, bare rows, or {"stage3":[a,b,c]}

Json to_json(const CohomologyClass& c);
CohomologyClass class_from_json(const Json& j);

Json to_json(const Mod2Class& w);

Json to_json(const Inequality& q);
Inequality inequality_from_json(const Json& j);

Json to_json(const Poly& p);  // coefficient strings, constant term first
Poly poly_from_json(const Json& j);

Json to_json(const AdmissibleData& d);
AdmissibleData admissible_from_json(const Json& j);

Json int_json(const Int& z);  // number when it fits in 64 bits, else decimal string

}  // namespace bott
