#include "perslap/complex.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace perslap {

namespace {

std::string join_vertices(const std::vector<VertexId>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

// shortest round-trip decimal form
std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] < 0) throw DomainError("negative vertex id in simplex");
    if (i > 0 && vertices_[i] == vertices_[i - 1])
      throw DomainError("repeated vertex in simplex [" + join_vertices(vertices_) + "]");
  }
}

Simplex Simplex::facet(int i) const {
  if (i < 0 || i > dimension()) throw DomainError("facet index out of range");
  std::vector<VertexId> vs;
  vs.reserve(vertices_.size() - 1);
  for (size_t k = 0; k < vertices_.size(); ++k)
    if (static_cast<int>(k) != i) vs.push_back(vertices_[k]);
  return Simplex(std::move(vs), AlreadySorted{});
}

std::string Simplex::to_string() const { return "[" + join_vertices(vertices_) + "]"; }

int SimplicialComplex::simplex_count(int q) const {
  if (q < 0 || q >= static_cast<int>(simplices_.size())) return 0;
  return static_cast<int>(simplices_[q].size());
}

int SimplicialComplex::total_simplex_count() const {
  int total = 0;
  for (const auto& level : simplices_) total += static_cast<int>(level.size());
  return total;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  static const std::vector<Simplex> empty;
  if (q < 0 || q >= static_cast<int>(simplices_.size())) return empty;
  return simplices_[q];
}

const std::vector<double>& SimplicialComplex::weights(int q) const {
  static const std::vector<double> empty;
  if (q < 0 || q >= static_cast<int>(weights_.size())) return empty;
  return weights_[q];
}

std::optional<int> SimplicialComplex::index_of(const Simplex& s) const {
  const int q = s.dimension();
  if (q < 0 || q >= static_cast<int>(index_.size())) return std::nullopt;
  const auto& level = index_[q];
  auto it = std::lower_bound(
      level.begin(), level.end(), s,
      [](const std::pair<Simplex, int>& entry, const Simplex& key) { return entry.first < key; });
  if (it == level.end() || !(it->first == s)) return std::nullopt;
  return it->second;
}

bool SimplicialComplex::has_unit_weights(int q) const {
  auto level_is_unit = [&](int level) {
    for (double w : weights(level))
      if (w != 1.0) return false;
    return true;
  };
  if (q >= 0) return level_is_unit(q);
  for (int level = 0; level <= dimension(); ++level)
    if (!level_is_unit(level)) return false;
  return true;
}

const Int8Matrix& SimplicialComplex::boundary_matrix_int8(int q) const {
  if (q < 0 || q > dimension())
    throw DomainError("boundary matrix dimension " + std::to_string(q) + " out of range");
  return boundaries_[q];
}

Matrix SimplicialComplex::boundary_matrix(int q) const {
  if (q < 0) throw DomainError("boundary matrix dimension must be non-negative");
  if (q > dimension()) return Matrix::Zero(simplex_count(q - 1), 0);
  return boundaries_[q].cast<double>();
}

void SimplicialComplex::finalize() {
  vertex_count_ = 0;
  for (const auto& level : simplices_)
    for (const Simplex& s : level)
      vertex_count_ = std::max(vertex_count_, s.vertices().back() + 1);

  index_.assign(simplices_.size(), {});
  for (size_t q = 0; q < simplices_.size(); ++q) {
    auto& level = index_[q];
    level.reserve(simplices_[q].size());
    for (size_t i = 0; i < simplices_[q].size(); ++i)
      level.emplace_back(simplices_[q][i], static_cast<int>(i));
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < level.size(); ++i)
      if (level[i].first == level[i - 1].first)
        throw DomainError("duplicate simplex " + level[i].first.to_string());
  }

  boundaries_.assign(simplices_.size(), Int8Matrix());
  for (int q = 0; q <= dimension(); ++q) {
    const int rows = simplex_count(q - 1);
    const int cols = simplex_count(q);
    Int8Matrix b = Int8Matrix::Zero(rows, cols);
    if (q > 0) {
      for (int j = 0; j < cols; ++j) {
        const Simplex& s = simplices_[q][j];
        for (int i = 0; i <= q; ++i) {
          const auto row = index_of(s.facet(i));
          if (!row)
            throw DomainError("complex is not closed under faces: " +
                              s.facet(i).to_string() + " is missing");
          b(*row, j) = (i % 2 == 0) ? 1 : -1;
        }
      }
    }
    boundaries_[q] = std::move(b);
  }
}

std::string SimplicialComplex::to_text() const {
  std::string out;
  for (int q = 0; q <= dimension(); ++q) {
    for (int i = 0; i < simplex_count(q); ++i) {
      out += join_vertices(simplices_[q][i].vertices());
      if (weights_[q][i] != 1.0) out += " ; w=" + format_real(weights_[q][i]);
      out += '\n';
    }
  }
  return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  return simplices_ == other.simplices_ && weights_ == other.weights_;
}

ComplexBuilder& ComplexBuilder::add(Simplex s, double weight) {
  if (!(weight > 0.0) || !std::isfinite(weight))
    throw ParseError("weight of " + s.to_string() + " must be a positive real");
  entries_.emplace_back(std::move(s), weight);
  return *this;
}

ComplexBuilder& ComplexBuilder::add(std::initializer_list<VertexId> vertices, double weight) {
  return add(Simplex(std::vector<VertexId>(vertices)), weight);
}

SimplicialComplex ComplexBuilder::build(bool auto_close) const {
  int max_dim = -1;
  for (const auto& [s, w] : entries_) max_dim = std::max(max_dim, s.dimension());

  std::vector<std::vector<Simplex>> simplices(max_dim + 1);
  std::vector<std::vector<double>> weights(max_dim + 1);
  std::map<Simplex, double> seen;
  for (const auto& [s, w] : entries_) {
    auto [it, inserted] = seen.emplace(s, w);
    if (!inserted) {
      if (it->second != w)
        throw ParseError("simplex " + s.to_string() + " listed twice with different weights");
      continue;
    }
    simplices[s.dimension()].push_back(s);
    weights[s.dimension()].push_back(w);
  }

  for (int q = max_dim; q >= 1; --q) {
    for (size_t j = 0; j < simplices[q].size(); ++j) {
      const Simplex s = simplices[q][j];
      for (int i = 0; i <= q; ++i) {
        Simplex f = s.facet(i);
        if (seen.count(f)) continue;
        if (!auto_close)
          throw ParseError("missing face " + f.to_string() + " of " + s.to_string());
        seen.emplace(f, 1.0);
        simplices[q - 1].push_back(f);
        weights[q - 1].push_back(1.0);
      }
    }
  }

  // canonical form: lexicographic within each dimension
  for (int q = 0; q <= max_dim; ++q) {
    std::vector<size_t> by_lex(simplices[q].size());
    for (size_t i = 0; i < by_lex.size(); ++i) by_lex[i] = i;
    std::sort(by_lex.begin(), by_lex.end(),
              [&](size_t a, size_t b) { return simplices[q][a] < simplices[q][b]; });
    std::vector<Simplex> sorted_simplices;
    std::vector<double> sorted_weights;
    sorted_simplices.reserve(by_lex.size());
    sorted_weights.reserve(by_lex.size());
    for (size_t i : by_lex) {
      sorted_simplices.push_back(std::move(simplices[q][i]));
      sorted_weights.push_back(weights[q][i]);
    }
    simplices[q] = std::move(sorted_simplices);
    weights[q] = std::move(sorted_weights);
  }

  SimplicialComplex out;
  out.simplices_ = std::move(simplices);
  out.weights_ = std::move(weights);
  out.finalize();
  return out;
}

std::vector<int> SimplicialPair::removed_indices(int q) const {
  std::vector<int> out;
  for (int i = sub_.simplex_count(q); i < ambient_.simplex_count(q); ++i) out.push_back(i);
  return out;
}

SimplicialPair make_pair(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
  for (int q = 0; q <= sub.dimension(); ++q) {
    for (int i = 0; i < sub.simplex_count(q); ++i) {
      const Simplex& s = sub.simplices(q)[i];
      const auto pos = ambient.index_of(s);
      if (!pos)
        throw DomainError("not a subcomplex: " + s.to_string() + " is missing from the ambient complex");
      if (ambient.weight(q, *pos) != sub.weight(q, i))
        throw DomainError("weight mismatch on shared simplex " + s.to_string());
    }
  }

  SimplicialPair pair;
  pair.sub_ = sub;
  pair.sub_.vertex_count_ = std::max(sub.vertex_count(), ambient.vertex_count());

  const int dim = ambient.dimension();
  std::vector<std::vector<Simplex>> simplices(dim + 1);
  std::vector<std::vector<double>> weights(dim + 1);
  for (int q = 0; q <= dim; ++q) {
    for (int i = 0; i < sub.simplex_count(q); ++i) {
      simplices[q].push_back(sub.simplices(q)[i]);
      weights[q].push_back(sub.weight(q, i));
    }
    for (int i = 0; i < ambient.simplex_count(q); ++i) {
      const Simplex& s = ambient.simplices(q)[i];
      if (!sub.contains(s)) {
        simplices[q].push_back(s);
        weights[q].push_back(ambient.weight(q, i));
      }
    }
  }
  pair.ambient_.simplices_ = std::move(simplices);
  pair.ambient_.weights_ = std::move(weights);
  pair.ambient_.finalize();
  return pair;
}

int Filtration::count_at(int q, double t) const {
  if (q < 0 || q >= static_cast<int>(births_.size())) return 0;
  const auto& level = births_[q];
  return static_cast<int>(std::upper_bound(level.begin(), level.end(), t) - level.begin());
}

SimplicialComplex Filtration::slice(double t) const {
  SimplicialComplex out;
  const int dim = complex_.dimension();
  out.simplices_.reserve(dim + 1);
  for (int q = 0; q <= dim; ++q) {
    const int n = count_at(q, t);
    if (n == 0) break;
    out.simplices_.emplace_back(complex_.simplices(q).begin(), complex_.simplices(q).begin() + n);
    out.weights_.emplace_back(complex_.weights(q).begin(), complex_.weights(q).begin() + n);
  }
  out.finalize();
  return out;
}

SimplicialPair Filtration::pair_at(double s, double t) const {
  if (s > t) throw DomainError("pair_at needs s <= t");
  return make_pair(slice(s), slice(t));
}

std::string Filtration::to_text() const {
  std::string out;
  for (int q = 0; q <= complex_.dimension(); ++q) {
    for (int i = 0; i < complex_.simplex_count(q); ++i) {
      out += join_vertices(complex_.simplices(q)[i].vertices());
      if (births_[q][i] != 0.0) out += " ; t=" + format_real(births_[q][i]);
      if (complex_.weight(q, i) != 1.0) out += " ; w=" + format_real(complex_.weight(q, i));
      out += '\n';
    }
  }
  return out;
}

FiltrationBuilder& FiltrationBuilder::add(Simplex s, double birth, double weight) {
  if (!std::isfinite(birth)) throw ParseError("birth of " + s.to_string() + " must be finite");
  if (!(weight > 0.0) || !std::isfinite(weight))
    throw ParseError("weight of " + s.to_string() + " must be a positive real");
  entries_.emplace_back(std::move(s), std::make_pair(birth, weight));
  return *this;
}

FiltrationBuilder& FiltrationBuilder::add(std::initializer_list<VertexId> vertices, double birth,
                                          double weight) {
  return add(Simplex(std::vector<VertexId>(vertices)), birth, weight);
}

Filtration FiltrationBuilder::build(bool auto_close) const {
  int max_dim = -1;
  for (const auto& [s, bw] : entries_) max_dim = std::max(max_dim, s.dimension());

  struct Entry {
    double birth;
    double weight;
    bool automatic;
  };
  std::map<Simplex, Entry> table;
  for (const auto& [s, bw] : entries_) {
    auto [it, inserted] = table.emplace(s, Entry{bw.first, bw.second, false});
    if (!inserted && (it->second.birth != bw.first || it->second.weight != bw.second))
      throw ParseError("simplex " + s.to_string() +
                       " listed twice with a different birth or weight");
  }

  // close under faces, high dimension first, so inherited births propagate down
  for (int q = max_dim; q >= 1; --q) {
    // snapshot: closure of dimension q only appends at q-1
    std::vector<std::pair<Simplex, Entry>> level;
    for (const auto& [s, e] : table)
      if (s.dimension() == q) level.emplace_back(s, e);
    for (const auto& [s, e] : level) {
      for (int i = 0; i <= q; ++i) {
        Simplex f = s.facet(i);
        auto it = table.find(f);
        if (it == table.end()) {
          if (!auto_close)
            throw ParseError("missing face " + f.to_string() + " of " + s.to_string());
          table.emplace(std::move(f), Entry{e.birth, 1.0, true});
        } else if (it->second.automatic) {
          it->second.birth = std::min(it->second.birth, e.birth);
        } else if (it->second.birth > e.birth) {
          throw ParseError("face " + f.to_string() + " is born after its coface " + s.to_string());
        }
      }
    }
  }

  std::vector<std::vector<std::pair<double, Simplex>>> ordered(max_dim + 1);
  std::vector<std::vector<double>> level_weights(max_dim + 1);
  for (const auto& [s, e] : table) ordered[s.dimension()].emplace_back(e.birth, s);
  for (auto& level : ordered)
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });

  Filtration out;
  out.complex_.simplices_.assign(max_dim + 1, {});
  out.complex_.weights_.assign(max_dim + 1, {});
  out.births_.assign(max_dim + 1, {});
  for (int q = 0; q <= max_dim; ++q) {
    for (const auto& [birth, s] : ordered[q]) {
      out.complex_.simplices_[q].push_back(s);
      out.complex_.weights_[q].push_back(table.at(s).weight);
      out.births_[q].push_back(birth);
    }
  }
  out.complex_.finalize();

  // a face listed late in the text could still sort after its coface's birth
  for (int q = 1; q <= max_dim; ++q)
    for (size_t j = 0; j < out.complex_.simplices_[q].size(); ++j)
      for (int i = 0; i <= q; ++i) {
        const Simplex f = out.complex_.simplices_[q][j].facet(i);
        if (out.births_[q - 1][*out.complex_.index_of(f)] > out.births_[q][j])
          throw ParseError("face " + f.to_string() + " is born after its coface");
      }

  for (const auto& level : out.births_)
    for (double b : level) out.grid_.push_back(b);
  std::sort(out.grid_.begin(), out.grid_.end());
  out.grid_.erase(std::unique(out.grid_.begin(), out.grid_.end()), out.grid_.end());
  return out;
}

namespace {

struct ParsedLine {
  Simplex simplex;
  double birth = 0.0;
  double weight = 1.0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text, int line_no) {
  const std::string buf(text);
  size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(buf, &used);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad real value '" + buf + "'");
  }
  if (used != buf.size() || !std::isfinite(value))
    throw ParseError("line " + std::to_string(line_no) + ": bad real value '" + buf + "'");
  return value;
}

std::vector<ParsedLine> parse_lines(const std::string& text) {
  std::vector<ParsedLine> out;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
      const size_t semi = line.find(';', start);
      fields.push_back(trim(line.substr(start, semi - start)));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }

    std::vector<VertexId> vertices;
    {
      std::istringstream vs{std::string(fields[0])};
      std::string token;
      while (vs >> token) {
        int value = 0;
        const auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
          throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + token + "'");
        vertices.push_back(value);
      }
    }
    if (vertices.empty())
      throw ParseError("line " + std::to_string(line_no) + ": no vertices");

    ParsedLine parsed{Simplex(std::move(vertices))};
    bool saw_birth = false, saw_weight = false;
    for (size_t f = 1; f < fields.size(); ++f) {
      const std::string_view field = fields[f];
      const size_t eq = field.find('=');
      if (eq == std::string_view::npos)
        throw ParseError("line " + std::to_string(line_no) + ": expected key=value after ';'");
      const std::string_view key = trim(field.substr(0, eq));
      const std::string_view value = trim(field.substr(eq + 1));
      if (key == "t") {
        if (saw_birth) throw ParseError("line " + std::to_string(line_no) + ": duplicate t=");
        parsed.birth = parse_real(value, line_no);
        saw_birth = true;
      } else if (key == "w") {
        if (saw_weight) throw ParseError("line " + std::to_string(line_no) + ": duplicate w=");
        parsed.weight = parse_real(value, line_no);
        if (!(parsed.weight > 0.0))
          throw ParseError("line " + std::to_string(line_no) + ": weight must be positive");
        saw_weight = true;
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
      }
    }
    out.push_back(std::move(parsed));
  }
  return out;
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text, bool strict) {
  FiltrationBuilder builder;
  for (auto& line : parse_lines(text)) builder.add(std::move(line.simplex), 0.0, line.weight);
  return builder.build(!strict).max_complex();
}

Filtration parse_filtration(const std::string& text, bool strict) {
  FiltrationBuilder builder;
  for (auto& line : parse_lines(text))
    builder.add(std::move(line.simplex), line.birth, line.weight);
  return builder.build(!strict);
}

}  // namespace perslap
