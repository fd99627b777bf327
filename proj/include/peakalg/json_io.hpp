#pragma once

#include <string>

#include "json.hpp"
#include "peakalg/commutative.hpp"
#include "peakalg/nsqf.hpp"
#include "peakalg/nsym.hpp"
#include "peakalg/qsym.hpp"
#include "peakalg/tableaux.hpp"

namespace peakalg {

using Json = nlohmann::json;

/* {"basis": "Q", "terms": [{"index": [...], "coeff": "..."}...]},
 * terms in lex index order, coefficients exact strings. */
Json element_json(const NSymElement& a);
Json element_json(const QSymElement& a);
Json element_json(const SymElement& a);

Json matrix_json(const TransitionMatrix& m);
TransitionMatrix matrix_from_json(const Json& j);
std::string matrix_csv(const TransitionMatrix& m);

Json tableau_json(const Tableau& t);
Json polynomial_json(const TruncatedPolynomial& p);

std::string pretty_element(const NSymElement& a);
std::string pretty_element(const QSymElement& a);
std::string pretty_matrix(const TransitionMatrix& m);

}  // namespace peakalg
