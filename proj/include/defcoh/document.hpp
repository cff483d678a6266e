#ifndef DEFCOH_DOCUMENT_HPP
#define DEFCOH_DOCUMENT_HPP

#include "defcoh/algebra.hpp"
#include "defcoh/cochain.hpp"
#include "defcoh/representation.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace defcoh {

using Json = nlohmann::json;

/// A malformed input document; `path` is a JSON pointer to the offending value.
class DocumentError : public InputError {
public:
    DocumentError(std::string path, const std::string& message)
        : InputError((path.empty() ? std::string("/") : path) + ": " + message), path_(std::move(path))
    {
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// The JSON interchange document:
///
///   {"kind": "lie", "dim": 2,
///    "constants": [{"in": [1, 2], "out": {"2": "1"}}],
///    "representation": {"dimV": 2, "rho": [[["0", "0"], ["0", "1"]], ...]},
///    "cochain": {"degree": 1, "entries": [{"in": [1, 2], "out": {"1": "1/2"}}]}}
///
/// Indices are 1-based, rationals are strings, unlisted constants are zero.
/// Inputs of skew kinds and of wedge slots must be strictly increasing.
/// The cochain is a graded element of the given degree with values in the algebra.
struct Document {
    Algebra algebra;
    std::optional<Representation> representation;
    std::optional<Cochain> cochain;
};

Document parse_document(const Json& json);
Document load_document(const std::string& path);

Json to_json(const Document& doc);
Json algebra_json(const Algebra& a);
Json representation_json(const Representation& r);

/// Nonzero coordinates as {"in": [...], "out": {...}} entries in basis order.
Json cochain_entries(const Cochain& c);

/// {"k": "p/q"} over the nonzero components, 1-based.
Json sparse_vector_json(const Vector& v);
Json matrix_json(const Matrix& m);

} // namespace defcoh

#endif // DEFCOH_DOCUMENT_HPP
