#include "cotensor/quiver.hpp"

#include <map>
#include <sstream>

namespace cotensor {

using linalg::compose;
using linalg::kron_apply;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_name(std::string_view s) {
  return !s.empty() && s.find_first_of(" \t\r:#") == std::string_view::npos &&
         s.find("->") == std::string_view::npos;
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  Quiver q;
  std::map<std::string, int, std::less<>> vertex_index;
  std::map<std::string, int, std::less<>> arrow_index;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto space = line.find_first_of(" \t");
    const std::string_view keyword = line.substr(0, space);
    const std::string_view rest =
        space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    if (keyword == "vertex") {
      if (!is_name(rest)) throw ParseError("expected `vertex NAME`", line_no);
      if (vertex_index.count(rest)) {
        throw ParseError("duplicate vertex `" + std::string(rest) + "`", line_no);
      }
      vertex_index.emplace(std::string(rest), static_cast<int>(q.vertices.size()));
      q.vertices.emplace_back(rest);
    } else if (keyword == "arrow") {
      const auto colon = rest.find(':');
      const auto arrow = rest.find("->");
      if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon) {
        throw ParseError("expected `arrow NAME: SRC -> TGT`", line_no);
      }
      const auto name = trim(rest.substr(0, colon));
      const auto src = trim(rest.substr(colon + 1, arrow - colon - 1));
      const auto tgt = trim(rest.substr(arrow + 2));
      if (!is_name(name) || !is_name(src) || !is_name(tgt)) {
        throw ParseError("expected `arrow NAME: SRC -> TGT`", line_no);
      }
      if (arrow_index.count(name)) {
        throw ParseError("duplicate arrow `" + std::string(name) + "`", line_no);
      }
      const auto s = vertex_index.find(src);
      const auto t = vertex_index.find(tgt);
      if (s == vertex_index.end()) throw ParseError("unknown vertex `" + std::string(src) + "`", line_no);
      if (t == vertex_index.end()) throw ParseError("unknown vertex `" + std::string(tgt) + "`", line_no);
      arrow_index.emplace(std::string(name), static_cast<int>(q.arrows.size()));
      q.arrows.push_back({std::string(name), s->second, t->second});
    } else {
      throw ParseError("unknown declaration `" + std::string(keyword) + "`", line_no);
    }
  }
  if (q.vertices.empty()) throw ParseError("quiver has no vertices", line_no);
  return q;
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream out;
  for (const auto& v : q.vertices) out << "vertex " << v << '\n';
  for (const auto& a : q.arrows) {
    out << "arrow " << a.name << ": " << q.vertices[static_cast<std::size_t>(a.source)] << " -> "
        << q.vertices[static_cast<std::size_t>(a.target)] << '\n';
  }
  return out.str();
}

Quiver loop_quiver() { return {{"v"}, {{"l", 0, 0}}}; }

Quiver kronecker_quiver() { return {{"v1", "v2"}, {{"a", 0, 1}, {"b", 0, 1}}}; }

Quiver cycle_quiver(int n) {
  Quiver q;
  for (int i = 0; i < n; ++i) q.vertices.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
  return q;
}

Quiver single_arrow_quiver() { return {{"v1", "v2"}, {{"a", 0, 1}}}; }

Coalgebra vertex_coalgebra(const Quiver& q) {
  return grouplike(static_cast<Index>(q.vertices.size()));
}

Bicomodule arrow_bicomodule(const Quiver& q) {
  const Index n = static_cast<Index>(q.vertices.size());
  const Index m = static_cast<Index>(q.arrows.size());
  Matrix rl = Matrix::Zero(n * m, m);
  Matrix rr = Matrix::Zero(m * n, m);
  for (Index a = 0; a < m; ++a) {
    const Arrow& arrow = q.arrows[static_cast<std::size_t>(a)];
    rl(arrow.target * m + a, a) = 1;
    rr(a * n + arrow.source, a) = 1;
  }
  return {vertex_coalgebra(q), std::move(rl), std::move(rr)};
}

PathBasis enumerate_paths(const Quiver& q, int trunc) {
  if (trunc < 0) throw DimensionMismatch("enumerate_paths: negative truncation");
  PathBasis basis{trunc, {}};
  std::vector<Path> layer;
  for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v) layer.push_back({{}, v, v});
  basis.paths = layer;
  for (int k = 1; k <= trunc; ++k) {
    std::vector<Path> next;
    if (k == 1) {
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        const Arrow& arrow = q.arrows[static_cast<std::size_t>(a)];
        next.push_back({{a}, arrow.source, arrow.target});
      }
    } else {
      for (const Path& p : layer) {
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
          const Arrow& arrow = q.arrows[static_cast<std::size_t>(a)];
          if (arrow.target != p.source) continue;
          Path longer = p;
          longer.arrows.push_back(a);
          longer.source = arrow.source;
          next.push_back(std::move(longer));
        }
      }
    }
    basis.paths.insert(basis.paths.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return basis;
}

std::vector<Index> path_counts(const Quiver& q, int trunc) {
  const std::size_t n = q.vertices.size();
  // starting[v]: paths of the current length with source v.
  std::vector<Index> starting(n, 1);
  std::vector<Index> counts{static_cast<Index>(n)};
  for (int k = 1; k <= trunc; ++k) {
    std::vector<Index> next(n, 0);
    for (const Arrow& a : q.arrows) {
      next[static_cast<std::size_t>(a.source)] += starting[static_cast<std::size_t>(a.target)];
    }
    Index total = 0;
    for (Index c : next) total += c;
    counts.push_back(total);
    starting = std::move(next);
  }
  return counts;
}

PathCoalgebra deconcatenation_oracle(const Quiver& q, int trunc) {
  PathBasis basis = enumerate_paths(q, trunc);
  const Index d = static_cast<Index>(basis.paths.size());
  std::map<std::vector<int>, Index> index;
  for (Index i = 0; i < d; ++i) {
    const Path& p = basis.paths[static_cast<std::size_t>(i)];
    if (p.length() > 0) index.emplace(p.arrows, i);
  }
  auto find = [&](std::vector<int> word) { return index.at(word); };
  Matrix delta = Matrix::Zero(d * d, d);
  Matrix eps = Matrix::Zero(1, d);
  for (Index i = 0; i < d; ++i) {
    const Path& p = basis.paths[static_cast<std::size_t>(i)];
    if (p.length() == 0) {
      delta(i * d + i, i) = 1;
      eps(0, i) = 1;
      continue;
    }
    delta(Index{p.target} * d + i, i) += 1;
    delta(i * d + p.source, i) += 1;
    for (std::size_t r = 1; r < p.length(); ++r) {
      const Index left = find({p.arrows.begin(), p.arrows.begin() + static_cast<long>(r)});
      const Index right = find({p.arrows.begin() + static_cast<long>(r), p.arrows.end()});
      delta(left * d + right, i) += 1;
    }
  }
  return {Coalgebra(std::move(delta), std::move(eps)), std::move(basis)};
}

Matrix oracle_compare(const Quiver& q, int trunc, const TruncatedCotensorCoalgebra& t) {
  const PathCoalgebra oracle = deconcatenation_oracle(q, trunc);
  const Index d = oracle.coalgebra.dim();
  if (t.trunc != trunc || t.total.dim() != d) {
    throw OracleMismatch("oracle_compare: T has dimension " + std::to_string(t.total.dim()) +
                         " but there are " + std::to_string(d) + " paths");
  }
  const Index m = static_cast<Index>(q.arrows.size());
  Matrix phi = Matrix::Zero(d, d);
  std::size_t next = 0;
  for (int k = 0; k <= trunc; ++k) {
    std::vector<Index> columns;
    std::vector<Index> words;
    for (; next < oracle.basis.paths.size() &&
           oracle.basis.paths[next].length() == static_cast<std::size_t>(k);
         ++next) {
      const Path& p = oracle.basis.paths[next];
      Index w = 0;
      for (int a : p.arrows) w = w * m + a;
      columns.push_back(static_cast<Index>(next));
      words.push_back(k == 0 ? p.source : w);
    }
    const Matrix& chi = t.powers->inclusion(k);
    Matrix units = Matrix::Zero(chi.rows(), static_cast<Index>(words.size()));
    for (std::size_t j = 0; j < words.size(); ++j) units(words[j], static_cast<Index>(j)) = 1;
    Matrix coords;
    try {
      coords = linalg::factor_through(chi, units);
    } catch (const NotInImage&) {
      throw OracleMismatch("oracle_compare: a path of length " + std::to_string(k) +
                           " is not in the cotensor power");
    }
    for (std::size_t j = 0; j < columns.size(); ++j) {
      phi.block(t.offsets[static_cast<std::size_t>(k)], columns[j], coords.rows(), 1) =
          coords.col(static_cast<Index>(j));
    }
  }
  if (linalg::rank(phi) != d) throw OracleMismatch("oracle_compare: basis map is not invertible");
  const auto describe = [&](const char* what, const Matrix& lhs, const Matrix& rhs) {
    if (auto e = linalg::first_difference(lhs, rhs)) {
      throw OracleMismatch(std::string("oracle_compare: ") + what + " differs at (" +
                           std::to_string(e->row) + ", " + std::to_string(e->col) + "): T gives " +
                           to_string(lhs(e->row, e->col)) + ", oracle gives " +
                           to_string(rhs(e->row, e->col)));
    }
  };
  describe("Delta", compose(t.total.delta(), phi), kron_apply(phi, phi, oracle.coalgebra.delta()));
  describe("epsilon", compose(t.total.epsilon(), phi), oracle.coalgebra.epsilon());
  return phi;
}

Matrix oracle_compare(const Quiver& q, int trunc) {
  return oracle_compare(q, trunc,
                        build_truncated(vertex_coalgebra(q), arrow_bicomodule(q), trunc));
}

}  // namespace cotensor
