#pragma once

#include <json.hpp>
#include <string>

#include "modrep/eigenspace.hpp"
#include "modrep/fock.hpp"
#include "modrep/seminormal.hpp"
#include "modrep/verify.hpp"

namespace modrep {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const mpz_class& x);
/// "a/b", or "a" when the denominator is 1.
std::string rational_string(const Rational& x);

Json to_json(const Partition& lambda);
Json to_json(const StandardTableau& t);
Json to_json(const LaurentPoly& f);
Json to_json(const FockVector& v);
Json to_json(const CanonicalBasisTable& table);
Json to_json(const SeminormalVector& v);
Json to_json(const GramReport& rep);
Json to_json(const VerificationReport& rep);
Json to_json(const ConsistencyResult& res);

/// Decomposition matrix as CSV: header row of μ, one row per τ.
std::string decomposition_csv(const VerificationReport& rep);

}  // namespace modrep
