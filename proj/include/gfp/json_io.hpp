#pragma once

#include <json.hpp>

#include "gfp/family.hpp"
#include "gfp/gcd_theorems.hpp"
#include "gfp/identities.hpp"
#include "gfp/poly.hpp"

namespace gfp {

using Json = nlohmann::ordered_json;

// Array of base-10 coefficient strings, ascending degree; zero is [].
Json to_json(const Poly& p);

// Accepts coefficient arrays of strings or integers, or the text form.
// Throws ParseError.
Poly poly_from_json(const Json& j);

// {name, kind, d, g, p0, p1}
Json to_json(const Family& f);

// Throws ParseError on a malformed object. Does not validate side conditions.
Family family_from_json(const Json& j);

// {m, n, case_tag, closed_form, oracle, agrees}; absent values are null.
Json to_json(const GcdReport& r);

// {identity_id, family, params, pass, lhs, rhs, witness?}
Json to_json(const IdentityReport& r);

}  // namespace gfp
