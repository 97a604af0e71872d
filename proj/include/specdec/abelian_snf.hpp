#pragma once

// Finitely generated abelian groups Z^r / L through exact Smith normal form.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace specdec {

using BigInt = boost::multiprecision::cpp_int;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Throws kInvalidArgument on ragged input. An empty list gives 0 x 0.
  static IntegerMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::vector<std::vector<BigInt>> to_rows() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k);
  void add_col(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Fraction-free Gaussian elimination. Square matrices only.
BigInt determinant(const IntegerMatrix& m);

struct SmithDecomposition {
  IntegerMatrix u;  // rows x rows, unimodular
  IntegerMatrix d;  // rows x cols, diagonal
  IntegerMatrix v;  // cols x cols, unimodular

  // The min(rows, cols) diagonal entries, nonnegative, d_i | d_{i+1}.
  std::vector<BigInt> diagonal() const;
};

// U·A·V = D. Pivots on the smallest nonzero |entry|, ties broken by
// (row, col). The result is re-verified before it is returned.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Checks U·A·V = D, |det U| = |det V| = 1, diagonal shape, signs and the
// divisibility chain with zeros trailing.
bool verify_smith(const IntegerMatrix& a, const SmithDecomposition& s);

struct FgAbelianType {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors, each > 1

  std::string to_string() const;  // "Z^2 x Z/2 x Z/6", "0"
  friend bool operator==(const FgAbelianType&, const FgAbelianType&) = default;
};

// Z^r modulo the row span of `generators`, which must have r columns (or
// no rows at all).
FgAbelianType quotient_invariants(std::size_t ambient_rank,
                                  const IntegerMatrix& generators);

// The quotient is Z or Z/p^n.
bool is_prime_subgroup_fg_abelian(std::size_t ambient_rank,
                                  const IntegerMatrix& generators);

// Prime-power ideals (p^a) containing (n). For n = 0 every one does.
struct IntegerSpec {
  bool all = false;
  std::vector<std::pair<std::uint64_t, unsigned>> ideals;  // sorted (p, a)

  friend bool operator==(const IntegerSpec&, const IntegerSpec&) = default;
};

IntegerSpec spec_of_integers(std::uint64_t n);

}  // namespace specdec
