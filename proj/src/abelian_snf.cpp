#include "specdec/abelian_snf.hpp"

#include <limits>
#include <stdexcept>
#include <tuple>

#include "specdec/error.hpp"
#include "specdec/number_theory.hpp"

namespace specdec {

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

IntegerMatrix IntegerMatrix::from_rows(
    const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty()) return {};
  IntegerMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw Error(ErrorKind::kInvalidArgument, "matrix rows differ in length");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<std::vector<BigInt>> IntegerMatrix::to_rows() const {
  std::vector<std::vector<BigInt>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntegerMatrix::add_row(std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}

void IntegerMatrix::add_col(std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::kInvalidArgument, "matrix dimensions do not match");
  }
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

BigInt determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) {
    throw Error(ErrorKind::kInvalidArgument, "determinant of a non-square matrix");
  }
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix m = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    out.push_back(d.at(i, i));
  }
  return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition s{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n)};
  IntegerMatrix& d = s.d;

  // Swaps (r, c) into (t, t), tracking the transforms.
  auto place_pivot = [&](std::size_t t, std::size_t r, std::size_t c) {
    d.swap_rows(t, r);
    s.u.swap_rows(t, r);
    d.swap_cols(t, c);
    s.v.swap_cols(t, c);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::tuple<BigInt, std::size_t, std::size_t> best{0, 0, 0};
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (d.at(i, j) == 0) continue;
        const BigInt v = abs_value(d.at(i, j));
        if (std::get<0>(best) == 0 || v < std::get<0>(best)) best = {v, i, j};
      }
    }
    if (std::get<0>(best) == 0) break;
    place_pivot(t, std::get<1>(best), std::get<2>(best));

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        const BigInt q = d.at(i, t) / d.at(t, t);
        d.add_row(i, t, -q);
        s.u.add_row(i, t, -q);
        clean = clean && d.at(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        const BigInt q = d.at(t, j) / d.at(t, t);
        d.add_col(j, t, -q);
        s.v.add_col(j, t, -q);
        clean = clean && d.at(t, j) == 0;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t.
        std::tuple<BigInt, std::size_t, std::size_t> next{
            abs_value(d.at(t, t)), t, t};
        for (std::size_t j = t + 1; j < n; ++j) {
          const BigInt v = abs_value(d.at(t, j));
          if (v != 0 && v < std::get<0>(next)) next = {v, t, j};
        }
        for (std::size_t i = t + 1; i < m; ++i) {
          const BigInt v = abs_value(d.at(i, t));
          if (v != 0 && v < std::get<0>(next)) next = {v, i, t};
        }
        place_pivot(t, std::get<1>(next), std::get<2>(next));
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row(t, i, 1);
            s.u.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  if (!verify_smith(a, s)) {
    throw std::logic_error("Smith normal form failed verification");
  }
  return s;
}

bool verify_smith(const IntegerMatrix& a, const SmithDecomposition& s) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (s.u.rows() != m || s.u.cols() != m || s.v.rows() != n || s.v.cols() != n ||
      s.d.rows() != m || s.d.cols() != n) {
    return false;
  }
  if (s.u * a * s.v != s.d) return false;
  if (abs_value(determinant(s.u)) != 1 || abs_value(determinant(s.v)) != 1) {
    return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && s.d.at(i, j) != 0) return false;
    }
  }
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size()) {
      if (diag[i] == 0 && diag[i + 1] != 0) return false;
      if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
    }
  }
  return true;
}

std::string FgAbelianType::to_string() const {
  std::string out;
  if (free_rank > 0) {
    out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  for (const BigInt& t : torsion) {
    if (!out.empty()) out += " x ";
    out += "Z/" + t.str();
  }
  return out.empty() ? "0" : out;
}

FgAbelianType quotient_invariants(std::size_t ambient_rank,
                                  const IntegerMatrix& generators) {
  FgAbelianType out;
  if (generators.rows() == 0) {
    out.free_rank = ambient_rank;
    return out;
  }
  if (generators.cols() != ambient_rank) {
    throw Error(ErrorKind::kInvalidArgument,
                "generator rows must have " + std::to_string(ambient_rank) +
                    " entries");
  }
  std::size_t nonzero = 0;
  for (const BigInt& d : smith_normal_form(generators).diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = ambient_rank - nonzero;
  return out;
}

bool is_prime_subgroup_fg_abelian(std::size_t ambient_rank,
                                  const IntegerMatrix& generators) {
  const FgAbelianType q = quotient_invariants(ambient_rank, generators);
  if (q.free_rank == 1 && q.torsion.empty()) return true;
  if (q.free_rank != 0 || q.torsion.size() != 1) return false;
  const BigInt& t = q.torsion[0];
  if (t > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::kUnsupportedParameter,
                "torsion factor " + t.str() + " exceeds 64 bits");
  }
  return nt::prime_power(t.convert_to<std::uint64_t>()).has_value();
}

IntegerSpec spec_of_integers(std::uint64_t n) {
  IntegerSpec out;
  if (n == 0) {
    out.all = true;
    return out;
  }
  for (const auto& [p, e] : nt::factorize(n)) {
    for (unsigned a = 1; a <= e; ++a) out.ideals.emplace_back(p, a);
  }
  return out;
}

}  // namespace specdec
