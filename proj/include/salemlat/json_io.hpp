#pragma once

// Canonical JSON for certificates and input files.  Integers and rationals
// are always written as decimal strings; objects keep a fixed key order.

#include "salemlat/isometry.hpp"
#include "salemlat/k3.hpp"
#include "salemlat/lattice.hpp"
#include "salemlat/polyalg.hpp"

#include "json.hpp"

namespace salemlat {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
class InputFormatError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const IntPolynomial& p);
Json to_json(const SignatureTriple& s);
Json to_json(const DiscriminantGroup& d);
Json to_json(const GramLattice& l);
Json to_json(const SalemCertificate& c);
Json to_json(const SalemClassification& c);
Json to_json(const IsometryClassification& c);
Json to_json(const PrimeSelection& p);
Json to_json(const QuarticAlgebraElement& x);
Json to_json(const PeriodPoint& p);
Json to_json(const NamedCheck& c);

/// Accepts a JSON integer or a decimal string.
Integer integer_from_json(const Json& j);
IntVector vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
/// {"rank": n, "gram": [[...]], "even": bool}; rank and even are optional
/// but must agree with the Gram matrix when present.
GramLattice lattice_from_json(const Json& j);
/// {"matrix": [[...]]} (an optional "lattice" key is ignored) or a bare array.
IntMatrix isometry_matrix_from_json(const Json& j);
/// {"vectors": [[...]]} or a bare array of equal-length vectors.
std::vector<IntVector> vectors_from_json(const Json& j);
/// {"p": ..., "q": ..., "p_list": [...], "q_list": [...]}.
PrimeSelection primes_from_json(const Json& j);

}  // namespace salemlat
