#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "cotensor/quiver.hpp"

namespace cotensor::io {

using Json = nlohmann::json;

/// Malformed or ill-shaped structured input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Written as a lowest-terms string "p" or "p/q" with the sign on the
/// numerator. Reading also accepts plain JSON integers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[...], ...]}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"dim": n, "delta": <Matrix>, "epsilon": <Matrix>}
Json to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const Json& j);

/// {"over": <Coalgebra>, "dim": m, "rho_l": <Matrix>, "rho_r": <Matrix>}; a
/// bicomodule over two different coalgebras uses "left" and "right" instead.
Json to_json(const Bicomodule& m);
/// "over" may also be a path to a coalgebra file, relative to base_dir.
Bicomodule bicomodule_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// {"degree": n, "value": <Matrix>}
Json to_json(const Cochain& f);
Cochain cochain_from_json(const Json& j);

/// {"ambient_dim": n, "dim": k, "basis": <Matrix>}
Json to_json(const Subspace& s);
/// Accepts the object above or a bare spanning Matrix.
Subspace subspace_from_json(const Json& j);

/// The total coalgebra plus "trunc", "grading", "base" and "input"; the block
/// inclusions and projections are added when with_maps is set.
Json to_json(const TruncatedCotensorCoalgebra& t, bool with_maps = false);
/// Rebuilds T from base, input and trunc and checks it against the stored total.
TruncatedCotensorCoalgebra truncated_from_json(const Json& j,
                                               const std::filesystem::path& base_dir = {});

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
/// Canonical text form: two-space indentation, sorted keys, arrays of scalars
/// on one line, trailing newline.
std::string dump(const Json& j);

/// Reads a quiver text file.
Quiver read_quiver_file(const std::filesystem::path& path);

}  // namespace cotensor::io
