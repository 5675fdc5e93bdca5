#pragma once

#include <string>

#include <json.hpp>

#include <qgrass/jfunction.hpp>
#include <qgrass/polynomial.hpp>
#include <qgrass/ring_g.hpp>

namespace qgrass
{

using Json = nlohmann::json;

/// {"vars": [...], "terms": [{"exp": [...], "coeff": "p/q"}]} in GradedLex order.
Json to_json(const SparsePolynomial &p);
/// Rebuilds the registry from the variable names; throws std::invalid_argument
/// on unknown layouts or malformed entries.
SparsePolynomial polynomial_from_json(const Json &j);

VariableRegistry registry_from_names(const std::vector<std::string> &names);

Json to_json(const Partition &mu);
Partition partition_from_json(const Json &j);

/// {"r","n","d","components":[{"k","hbar_exp","class":[{"partition","coeff"}]}]}.
Json to_json(const JSeries &j);
JSeries jseries_from_json(const Json &j);

/// {"mu","nu","rho","d","value","method"}; value is an exact string.
Json gw_to_json(const GWInvariant &gw, const std::string &method);

} // namespace qgrass
