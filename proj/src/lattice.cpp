#include "qrmult/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "qrmult/error.hpp"

namespace qrmult {

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::initializer_list<std::int64_t> coords) {
  coords_.reserve(coords.size());
  for (auto c : coords) coords_.emplace_back(c);
}

WeightVector WeightVector::from_integers(std::span<const std::int64_t> coords) {
  std::vector<Rational> out;
  out.reserve(coords.size());
  for (auto c : coords) out.emplace_back(c);
  return WeightVector(std::move(out));
}

WeightVector WeightVector::zero(std::size_t rank) {
  return WeightVector(std::vector<Rational>(rank, Rational(0)));
}

bool WeightVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return is_integer(c); });
}

bool WeightVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

std::vector<std::int64_t> WeightVector::to_integers() const {
  std::vector<std::int64_t> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (!is_integer(c)) throw Error("non_integral", "weight " + to_string() + " is not a lattice point");
    out.push_back(to_int64(boost::multiprecision::numerator(c)));
  }
  return out;
}

static void require_same_rank(const WeightVector& a, const WeightVector& b) {
  if (a.rank() != b.rank()) {
    throw Error("length_mismatch", "weight length mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

WeightVector WeightVector::operator+(const WeightVector& other) const {
  require_same_rank(*this, other);
  std::vector<Rational> out(coords_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coords_[i];
  return WeightVector(std::move(out));
}

WeightVector WeightVector::operator-(const WeightVector& other) const {
  require_same_rank(*this, other);
  std::vector<Rational> out(coords_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.coords_[i];
  return WeightVector(std::move(out));
}

WeightVector WeightVector::operator-() const { return *this * Rational(-1); }

WeightVector WeightVector::operator*(const Rational& factor) const {
  std::vector<Rational> out(coords_);
  for (auto& c : out) c *= factor;
  return WeightVector(std::move(out));
}

std::strong_ordering WeightVector::operator<=>(const WeightVector& other) const {
  const std::size_t n = std::min(coords_.size(), other.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (coords_[i] < other.coords_[i]) return std::strong_ordering::less;
    if (other.coords_[i] < coords_[i]) return std::strong_ordering::greater;
  }
  return coords_.size() <=> other.coords_.size();
}

std::string WeightVector::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += qrmult::to_string(coords_[i]);
  }
  return out;
}

std::string WeightVector::to_string() const { return "(" + to_csv() + ")"; }

WeightVector parse_weight(std::string_view csv) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    const auto token = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    coords.push_back(parse_rational(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return WeightVector(std::move(coords));
}

Rational pairing(const WeightVector& a, const WeightVector& b) {
  require_same_rank(a, b);
  Rational acc = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) acc += a[i] * b[i];
  return acc;
}

WeightVector pick_generic_direction(std::span<const WeightVector> weights, std::size_t rank) {
  for (const auto& w : weights) {
    if (w.rank() != rank) throw Error("length_mismatch", "weight " + w.to_string() + " has wrong rank");
    if (w.is_zero()) throw Error("zero_weight", "cannot pick a generic direction for a zero weight");
  }
  // A nonzero α vanishes on η_t for at most rank-1 values of t (a nonzero
  // polynomial in t of degree < rank), so the search terminates.
  for (std::int64_t t = 1;; ++t) {
    std::vector<Rational> coords(rank);
    Rational power = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      coords[i] = power;
      power *= t;
    }
    WeightVector eta(std::move(coords));
    const bool generic = std::none_of(weights.begin(), weights.end(),
                                      [&](const WeightVector& w) { return pairing(w, eta) == 0; });
    if (generic) return eta;
  }
}

// ---------------------------------------------------------------------------
// Linear algebra

namespace {

// Row-reduces [a | b] in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& a, std::vector<Rational>* b) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    if (b) std::swap((*b)[r], (*b)[pivot]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    if (b) (*b)[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      if (b) (*b)[i] -= f * (*b)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  if (a.size() != b.size()) throw Error("length_mismatch", "linear system: row count mismatch");
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw Error("length_mismatch", "linear system: ragged matrix");
  }
  const auto pivots = row_reduce(a, &b);
  for (std::size_t i = pivots.size(); i < b.size(); ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) { return row_reduce(rows, nullptr).size(); }

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t n, std::vector<std::int64_t> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw Error("length_mismatch", "matrix entry count is not n*n");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  std::vector<std::int64_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return IntMatrix(n, std::move(e));
}

WeightVector IntMatrix::apply(const WeightVector& x) const {
  if (x.rank() != n_) throw Error("length_mismatch", "matrix/vector size mismatch");
  std::vector<Rational> out(n_, Rational(0));
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (const auto v = at(r, c); v != 0) out[r] += x[c] * v;
    }
  }
  return WeightVector(std::move(out));
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  std::vector<std::int64_t> out(n_ * n_, 0);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t c = 0; c < n_; ++c) out[r * n_ + c] += at(r, k) * other.at(k, c);
  return IntMatrix(n_, std::move(out));
}

IntMatrix IntMatrix::transpose() const {
  std::vector<std::int64_t> out(n_ * n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out[c * n_ + r] = at(r, c);
  return IntMatrix(n_, std::move(out));
}

Integer IntMatrix::determinant() const {
  std::vector<std::vector<Rational>> a(n_, std::vector<Rational>(n_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) a[r][c] = at(r, c);
  Rational det = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t pivot = c;
    while (pivot < n_ && a[pivot][c] == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n_; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n_; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return boost::multiprecision::numerator(det);
}

// ---------------------------------------------------------------------------
// Root systems

bool RootSystem::is_root(const WeightVector& v) const {
  return std::any_of(positive_roots.begin(), positive_roots.end(),
                     [&](const WeightVector& b) { return b == v || -b == v; });
}

namespace {

IntMatrix simple_reflection(const WeightVector& root, const WeightVector& coroot) {
  // s(x) = x - <x, c> a  =>  M = I - a c^T
  const std::size_t n = root.rank();
  const auto a = root.to_integers();
  const auto c = coroot.to_integers();
  std::vector<std::int64_t> e(n * n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) e[r * n + k] = (r == k ? 1 : 0) - a[r] * c[k];
  return IntMatrix(n, std::move(e));
}

}  // namespace

RootSystem generate_weyl_group(std::vector<WeightVector> simple_roots, std::vector<WeightVector> cartan_pairing,
                               std::size_t element_cap) {
  if (simple_roots.size() != cartan_pairing.size()) {
    throw Error("bad_root_system", "cartan_pairing needs one row per simple root");
  }
  const std::size_t rank = simple_roots.empty() ? 0 : simple_roots.front().rank();
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    const auto& a = simple_roots[i];
    const auto& c = cartan_pairing[i];
    if (a.rank() != rank || c.rank() != rank) throw Error("bad_root_system", "root/coroot length mismatch");
    if (!a.is_integral() || !c.is_integral()) throw Error("bad_root_system", "roots and coroots must be integral");
    if (pairing(a, c) != 2) {
      throw Error("bad_root_system", "simple root " + std::to_string(i) + " does not pair to 2 with its coroot");
    }
  }
  {
    std::vector<std::vector<Rational>> rows;
    for (const auto& a : simple_roots) rows.push_back(a.coords());
    if (matrix_rank(rows) != simple_roots.size()) {
      throw Error("bad_root_system", "simple roots are linearly dependent");
    }
  }

  RootSystem rs;
  rs.rank = rank;
  rs.simple_roots = simple_roots;
  rs.simple_coroots = cartan_pairing;

  std::vector<IntMatrix> generators;
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    generators.push_back(simple_reflection(simple_roots[i], cartan_pairing[i]));
  }

  // Breadth-first closure; identity first so listings are deterministic.
  std::map<IntMatrix, std::size_t> index;
  const IntMatrix id = IntMatrix::identity(rank);
  rs.weyl_elements.push_back({id, 1});
  index.emplace(id, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      IntMatrix next = s * rs.weyl_elements[cur].matrix;
      if (index.contains(next)) continue;
      if (rs.weyl_elements.size() >= element_cap) {
        throw Error("not_finite_reflection_group",
                    "not a finite reflection group (more than " + std::to_string(element_cap) + " elements)");
      }
      index.emplace(next, rs.weyl_elements.size());
      rs.weyl_elements.push_back({next, -rs.weyl_elements[cur].sign});
      queue.push_back(rs.weyl_elements.size() - 1);
    }
  }

  // Roots are the W-orbit of the simple roots. A root β = w(α_i) has coroot
  // functional x ↦ <w⁻¹x, α_i^∨>, i.e. the vector (w⁻¹)ᵀ α_i^∨.
  std::map<WeightVector, WeightVector> roots;
  for (const auto& w : rs.weyl_elements) {
    const IntMatrix inverse_t = [&] {
      for (const auto& u : rs.weyl_elements) {
        if (u.matrix * w.matrix == id) return u.matrix.transpose();
      }
      throw Error("bad_root_system", "group element without inverse");
    }();
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
      roots.try_emplace(w.matrix.apply(simple_roots[i]), inverse_t.apply(cartan_pairing[i]));
    }
  }

  std::vector<std::vector<Rational>> basis(rank, std::vector<Rational>(simple_roots.size()));
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t i = 0; i < simple_roots.size(); ++i) basis[r][i] = simple_roots[i][r];

  WeightVector sum = WeightVector::zero(rank);
  for (const auto& [root, coroot] : roots) {
    const auto x = solve_linear_system(basis, root.coords());
    if (!x) throw Error("bad_root_system", "root outside the span of the simple roots");
    if (std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; })) {
      rs.positive_roots.push_back(root);
      rs.positive_coroots.push_back(coroot);
      sum = sum + root;
    }
  }
  rs.delta = sum * Rational(1, 2);
  return rs;
}

bool is_regular_dominant(const WeightVector& mu, const RootSystem& rs) {
  return std::all_of(rs.simple_coroots.begin(), rs.simple_coroots.end(),
                     [&](const WeightVector& c) { return pairing(mu, c) > 0; });
}

bool is_dominant(const WeightVector& mu, const RootSystem& rs) {
  return std::all_of(rs.simple_coroots.begin(), rs.simple_coroots.end(),
                     [&](const WeightVector& c) { return pairing(mu, c) >= 0; });
}

WeightVector positive_root_certificate(const RootSystem& rs) {
  if (rs.simple_roots.empty()) return pick_generic_direction({}, rs.rank);
  std::vector<std::vector<Rational>> a;
  for (const auto& root : rs.simple_roots) a.push_back(root.coords());
  const auto x = solve_linear_system(a, std::vector<Rational>(rs.simple_roots.size(), Rational(1)));
  if (!x) throw Error("bad_root_system", "no functional positive on the simple roots");
  Integer lcm = 1;
  for (const auto& v : *x) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
  return WeightVector(*x) * Rational(lcm);
}

}  // namespace qrmult
