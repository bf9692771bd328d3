#pragma once

// Permutation tableaux and derangement tableaux of a given half-perimeter.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qeuler/polynomial.hpp"

namespace qeuler {

/// Young diagram in English notation; rows may be empty.
class YoungShape {
 public:
  YoungShape() = default;
  /// Throws std::invalid_argument unless the lengths are weakly decreasing
  /// and nonnegative.
  explicit YoungShape(std::vector<int> row_lengths);

  const std::vector<int>& row_lengths() const { return rows_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  int columns() const { return rows_.empty() ? 0 : rows_.front(); }
  int half_perimeter() const { return rows() + columns(); }
  /// Number of cells in column c.
  int column_height(int c) const;

  friend bool operator==(const YoungShape&, const YoungShape&) = default;

 private:
  std::vector<int> rows_;
};

/// Shapes with half-perimeter n: n = 0 gives the empty shape, otherwise at
/// least one row and first row length n - rows.
std::vector<YoungShape> shapes_with_half_perimeter(int n);

class PermutationTableau {
 public:
  PermutationTableau() = default;
  /// filling[r] holds row r (length = row length). Throws
  /// std::invalid_argument if a column has no 1 or some 0 has a 1 to its
  /// left and a 1 above it.
  PermutationTableau(YoungShape shape, std::vector<std::vector<std::uint8_t>> filling);

  const YoungShape& shape() const { return shape_; }
  const std::vector<std::vector<std::uint8_t>>& filling() const { return filling_; }
  int at(int row, int column) const { return filling_[row][column]; }
  int rows() const { return shape_.rows(); }
  int columns() const { return shape_.columns(); }
  int ones() const;
  /// True when some row (possibly empty) contains no 1.
  bool has_zero_row() const;

  friend bool operator==(const PermutationTableau&, const PermutationTableau&) = default;

 private:
  YoungShape shape_;
  std::vector<std::vector<std::uint8_t>> filling_;
};

struct TableauStats {
  int r = 0;
  int c = 0;
  int o = 0;
  /// superfluous 1s: o - c
  int so = 0;
  friend bool operator==(const TableauStats&, const TableauStats&) = default;
};

TableauStats stats(const PermutationTableau& t);

struct TableauOptions {
  int bound = 7;
  unsigned jobs = 1;
};

/// Visits every valid filling of `shape`, column by column. With
/// no_zero_rows only derangement tableaux are visited.
void for_each_filling(const YoungShape& shape, bool no_zero_rows,
                      const std::function<void(const PermutationTableau&)>& visit);

void enumerate_pt(int n, const std::function<void(const PermutationTableau&)>& visit,
                  const TableauOptions& opts = {});
void enumerate_dt(int n, const std::function<void(const PermutationTableau&)>& visit,
                  const TableauOptions& opts = {});

/// sum over PT_n of y^r q^so
Poly gen_pt(int n, const TableauOptions& opts = {});
/// sum over DT_n of y^r q^so
Poly gen_dt(int n, const TableauOptions& opts = {});
/// sum over DT_n of (-1)^r q^{o-n}
Poly signed_dt_sum(int n, const TableauOptions& opts = {});

/// Reflects a derangement tableau along its diagonal. Throws
/// std::invalid_argument if t has a zero row and InvalidTranspose if the
/// result is not a derangement tableau.
PermutationTableau transpose(const PermutationTableau& t);

/// Shape line (comma-separated row lengths, "empty" for no rows) followed
/// by one line of 0/1 characters per row ("-" for an empty row).
std::string dump(const PermutationTableau& t);
/// Inverse of dump for a single tableau.
PermutationTableau parse_tableau(std::string_view text);

/// For a word in D and E, the sum of q^so over derangement tableaux of the
/// shape with one row per D (length = number of E after it) and one column
/// per E. Zero when some E precedes every D or the word ends in D.
Poly word_tableau_sum(std::string_view word);

}  // namespace qeuler
