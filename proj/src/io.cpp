#include "cotensor/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cotensor::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object with \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

Index count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw FormatError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<Index>();
}

template <typename F>
auto shaped(const char* what, F&& make) {
  try {
    return make();
  } catch (const DimensionMismatch& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

Coalgebra coalgebra_ref(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return coalgebra_from_json(read_json_file(base_dir / j.get<std::string>()));
  return coalgebra_from_json(j);
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Rational(Integer(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("matrix entries must be integers or \"p/q\" strings, got " + j.dump());
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  const Index rows = count_field(j, "rows");
  const Index cols = count_field(j, "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != rows) {
    throw FormatError("matrix \"entries\" must hold one array per row");
  }
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw FormatError("matrix row " + std::to_string(i) + " does not have " +
                        std::to_string(cols) + " entries");
    }
    for (Index k = 0; k < cols; ++k) m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json to_json(const Coalgebra& c) {
  return {{"dim", c.dim()}, {"delta", to_json(c.delta())}, {"epsilon", to_json(c.epsilon())}};
}

Coalgebra coalgebra_from_json(const Json& j) {
  const Index dim = count_field(j, "dim");
  Coalgebra c = shaped("coalgebra", [&] {
    return Coalgebra(matrix_from_json(field(j, "delta")), matrix_from_json(field(j, "epsilon")));
  });
  if (c.dim() != dim) throw FormatError("coalgebra: \"dim\" does not match the matrices");
  return c;
}

Json to_json(const Bicomodule& m) {
  Json j = {{"dim", m.dim()}, {"rho_l", to_json(m.rho_l())}, {"rho_r", to_json(m.rho_r())}};
  if (m.left() == m.right()) {
    j["over"] = to_json(m.left());
  } else {
    j["left"] = to_json(m.left());
    j["right"] = to_json(m.right());
  }
  return j;
}

Bicomodule bicomodule_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const Index dim = count_field(j, "dim");
  Coalgebra left;
  Coalgebra right;
  if (j.is_object() && j.contains("over")) {
    left = right = coalgebra_ref(j["over"], base_dir);
  } else {
    left = coalgebra_ref(field(j, "left"), base_dir);
    right = coalgebra_ref(field(j, "right"), base_dir);
  }
  Bicomodule m = shaped("bicomodule", [&] {
    return Bicomodule(left, right, matrix_from_json(field(j, "rho_l")),
                      matrix_from_json(field(j, "rho_r")));
  });
  if (m.dim() != dim) throw FormatError("bicomodule: \"dim\" does not match the matrices");
  return m;
}

Json to_json(const Cochain& f) { return {{"degree", f.degree}, {"value", to_json(f.value)}}; }

Cochain cochain_from_json(const Json& j) {
  return {static_cast<int>(count_field(j, "degree")), matrix_from_json(field(j, "value"))};
}

Json to_json(const Subspace& s) {
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j) {
  if (j.is_object() && j.contains("basis")) {
    Subspace s = Subspace::span(matrix_from_json(j["basis"]));
    if (j.contains("ambient_dim") && count_field(j, "ambient_dim") != s.ambient_dim()) {
      throw FormatError("subspace: \"ambient_dim\" does not match the basis");
    }
    return s;
  }
  return Subspace::span(matrix_from_json(j));
}

Json to_json(const TruncatedCotensorCoalgebra& t, bool with_maps) {
  Json j = to_json(t.total);
  j["trunc"] = t.trunc;
  j["grading"] = t.grading;
  j["base"] = to_json(t.base);
  j["input"] = to_json(t.input);
  if (with_maps) {
    Json inc = Json::array();
    Json proj = Json::array();
    for (int k = 0; k <= t.trunc; ++k) {
      inc.push_back(to_json(t.inclusion(k)));
      proj.push_back(to_json(t.projection(k)));
    }
    j["inclusions"] = std::move(inc);
    j["projections"] = std::move(proj);
  }
  return j;
}

TruncatedCotensorCoalgebra truncated_from_json(const Json& j,
                                               const std::filesystem::path& base_dir) {
  const Coalgebra total = coalgebra_from_json(j);
  const Coalgebra base = coalgebra_ref(field(j, "base"), base_dir);
  const Bicomodule input = bicomodule_from_json(field(j, "input"), base_dir);
  const int trunc = static_cast<int>(count_field(j, "trunc"));
  if (!(input.left() == base) || !(input.right() == base)) {
    throw FormatError("truncated coalgebra: \"input\" is not over \"base\"");
  }
  TruncatedCotensorCoalgebra t = build_truncated(base, input, trunc);
  if (!(t.total == total)) {
    throw FormatError("truncated coalgebra: stored total does not match base, input and trunc");
  }
  if (j.contains("grading") && j["grading"] != Json(t.grading)) {
    throw FormatError("truncated coalgebra: stored grading does not match");
  }
  return t;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << dump(j);
}

namespace {

// Arrays of scalars stay on one line so matrix rows read as rows.
void write_pretty(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(key).dump() + ": ";
      write_pretty(out, value, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array() && !j.empty() &&
             std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i > 0) out += ",\n";
      out += inner;
      write_pretty(out, j[i], indent + 2);
    }
    out += "\n" + pad + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i > 0 ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write_pretty(out, j, 0);
  return out + "\n";
}

Quiver read_quiver_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_quiver(text.str());
}

}  // namespace cotensor::io
