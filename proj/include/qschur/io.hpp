// Text and JSON forms of scalars, algebra elements and combinatorial data.
#pragma once

#include <string>

#include <json.hpp>

#include "qschur/hecke.hpp"
#include "qschur/ring.hpp"
#include "qschur/tableaux.hpp"

namespace qschur {

using Json = nlohmann::json;

/// Raised on malformed text or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// e.g. "1*q^-1 + 2*Q1^1*Q2^1 - 1*q^1"; zero prints as "0"
std::string to_text(const ExactScalar& s);
ExactScalar parse_scalar(const std::string& text, ScalarContext ctx);
Json to_json(const ExactScalar& s);
ExactScalar scalar_from_json(const Json& j, ScalarContext ctx);

std::string to_text(const Rational& v);

// e.g. "1 + 1*T[2,1]", "(q^1 - 1*q^-1)*L1^1*T[2,1]"
std::string to_text(const ExactElement& e);
std::string to_text(const SpecElement& e);
ExactElement parse_element(const std::string& text, const std::shared_ptr<const ExactAlgebra>& alg);
Json to_json(const ExactElement& e);
ExactElement element_from_json(const Json& j, const std::shared_ptr<const ExactAlgebra>& alg);

Json to_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);

Json to_json(const Multicomposition& mu);
/// Parses [[3,1],[2,1],[2]]; when m is given the components are padded to it.
Multicomposition multicomposition_from_json(const Json& j, const std::vector<int>* m = nullptr);
Multicomposition parse_multicomposition(const std::string& text, const std::vector<int>* m = nullptr);
std::vector<int> parse_int_list(const std::string& text);

Json to_json(const TypedTableau& t);
TypedTableau tableau_from_json(const Json& j, const std::vector<int>* m = nullptr);

Json to_json(const Node& x);
Node node_from_json(const Json& j);

Json to_json(const Specialization& s);

}  // namespace qschur
