#ifndef ILRC_SERIALIZATION_HPP
#define ILRC_SERIALIZATION_HPP

#include <json.hpp>

#include <stdexcept>

#include "ilrc/interleaved.hpp"

namespace ilrc {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input documents.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"p", "m", "poly"}; poly is 0 for prime fields.
Json to_json(const FiniteField& field);
FiniteField field_from_json(const Json& j);

/// {"rows", "cols", "data"} with data row-major; the field lives in the enclosing document.
Json to_json(const GFMatrix& m);
GFMatrix matrix_from_json(const FiniteField& field, const Json& j);

/// A matrix document that carries its own field: {"field", "rows", "cols", "data"}.
Json matrix_document(const GFMatrix& m);
GFMatrix matrix_from_document(const Json& j);

/// {"r", "rho", "groups"}
Json to_json(const LocalityPartition& p);
LocalityPartition partition_from_json(const Json& j);

/// {"field", "n", "k", "generator", "locality"?, "distance"?}
Json to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

/// {"status", "support", "syndrome_rank", "locator_degree", "reason", "codeword"?, "error"?}
Json to_json(const DecodeOutcome& out);
DecodeStatus decode_status_from_string(const std::string& s);

}  // namespace ilrc

#endif  // ILRC_SERIALIZATION_HPP
