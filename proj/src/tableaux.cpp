#include "qeuler/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qeuler/errors.hpp"
#include "qeuler/parallel.hpp"

namespace qeuler {

YoungShape::YoungShape(std::vector<int> row_lengths) : rows_(std::move(row_lengths)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0 || (i > 0 && rows_[i] > rows_[i - 1])) {
      throw std::invalid_argument("row lengths must be nonnegative and weakly decreasing");
    }
  }
}

int YoungShape::column_height(int c) const {
  return static_cast<int>(
      std::count_if(rows_.begin(), rows_.end(), [c](int len) { return len > c; }));
}

namespace {

void partitions_into(int remaining_rows, int max_len, std::vector<int>& current,
                     std::vector<YoungShape>& out) {
  if (remaining_rows == 0) {
    out.emplace_back(current);
    return;
  }
  for (int len = max_len; len >= 0; --len) {
    current.push_back(len);
    partitions_into(remaining_rows - 1, len, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<YoungShape> shapes_with_half_perimeter(int n) {
  if (n < 0) throw std::invalid_argument("negative half-perimeter");
  std::vector<YoungShape> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (int r = 1; r <= n; ++r) {
    const int c = n - r;
    std::vector<int> current{c};
    partitions_into(r - 1, c, current, out);
  }
  return out;
}

PermutationTableau::PermutationTableau(YoungShape shape,
                                       std::vector<std::vector<std::uint8_t>> filling)
    : shape_(std::move(shape)), filling_(std::move(filling)) {
  if (static_cast<int>(filling_.size()) != shape_.rows()) {
    throw std::invalid_argument("filling has the wrong number of rows");
  }
  for (int r = 0; r < shape_.rows(); ++r) {
    const auto& row = filling_[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != shape_.row_lengths()[static_cast<std::size_t>(r)]) {
      throw std::invalid_argument("row " + std::to_string(r) + " has the wrong length");
    }
    for (auto v : row) {
      if (v > 1) throw std::invalid_argument("filling entries must be 0 or 1");
    }
  }
  for (int c = 0; c < shape_.columns(); ++c) {
    const int h = shape_.column_height(c);
    bool one_above = false;
    for (int r = 0; r < h; ++r) {
      if (at(r, c) == 1) {
        one_above = true;
        continue;
      }
      bool one_left = false;
      for (int k = 0; k < c; ++k) one_left = one_left || at(r, k) == 1;
      if (one_left && one_above) {
        throw std::invalid_argument("0 at (" + std::to_string(r) + "," + std::to_string(c) +
                                    ") has a 1 to its left and a 1 above it");
      }
    }
    if (!one_above) {
      throw std::invalid_argument("column " + std::to_string(c) + " contains no 1");
    }
  }
}

int PermutationTableau::ones() const {
  int total = 0;
  for (const auto& row : filling_) total += static_cast<int>(std::count(row.begin(), row.end(), 1));
  return total;
}

bool PermutationTableau::has_zero_row() const {
  return std::any_of(filling_.begin(), filling_.end(), [](const auto& row) {
    return std::find(row.begin(), row.end(), 1) == row.end();
  });
}

TableauStats stats(const PermutationTableau& t) {
  TableauStats s;
  s.r = t.rows();
  s.c = t.columns();
  s.o = t.ones();
  s.so = s.o - s.c;
  return s;
}

namespace {

class FillingSearch {
 public:
  FillingSearch(const YoungShape& shape, bool no_zero_rows,
                const std::function<void(const PermutationTableau&)>& visit)
      : shape_(shape), no_zero_rows_(no_zero_rows), visit_(visit) {
    for (int len : shape.row_lengths()) filling_.emplace_back(static_cast<std::size_t>(len), 0);
    row_has_one_.assign(static_cast<std::size_t>(shape.rows()), false);
  }

  void run() {
    if (no_zero_rows_ && shape_.rows() > 0 && shape_.row_lengths().back() == 0) return;
    column(0);
  }

 private:
  void column(int c) {
    if (c == shape_.columns()) {
      visit_(PermutationTableau(shape_, filling_));
      return;
    }
    const int h = shape_.column_height(c);
    for (int top = 0; top < h; ++top) {
      // Below the topmost 1, a row that already has a 1 to the left must
      // take a 1 here; the other rows are free.
      std::vector<int> free_rows;
      for (int r = top + 1; r < h; ++r) {
        if (!row_has_one_[static_cast<std::size_t>(r)]) free_rows.push_back(r);
      }
      const std::size_t combos = std::size_t{1} << free_rows.size();
      for (std::size_t mask = 0; mask < combos; ++mask) {
        std::vector<bool> saved = row_has_one_;
        for (int r = 0; r < h; ++r) {
          std::uint8_t v = 0;
          if (r == top || (r > top && row_has_one_[static_cast<std::size_t>(r)])) v = 1;
          filling_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        }
        for (std::size_t b = 0; b < free_rows.size(); ++b) {
          if ((mask >> b) & 1U) {
            filling_[static_cast<std::size_t>(free_rows[b])][static_cast<std::size_t>(c)] = 1;
          }
        }
        bool ok = true;
        for (int r = 0; r < h; ++r) {
          if (filling_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == 1) {
            row_has_one_[static_cast<std::size_t>(r)] = true;
          }
          // Last cell of this row: a derangement tableau needs a 1 by now.
          if (no_zero_rows_ && shape_.row_lengths()[static_cast<std::size_t>(r)] == c + 1 &&
              !row_has_one_[static_cast<std::size_t>(r)]) {
            ok = false;
          }
        }
        if (ok) column(c + 1);
        row_has_one_ = std::move(saved);
      }
    }
    for (int r = 0; r < h; ++r) filling_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  }

  const YoungShape& shape_;
  bool no_zero_rows_;
  const std::function<void(const PermutationTableau&)>& visit_;
  std::vector<std::vector<std::uint8_t>> filling_;
  std::vector<bool> row_has_one_;
};

void check_bound(const char* what, int n, const TableauOptions& opts) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative half-perimeter");
  if (n > opts.bound) throw BudgetExceeded(what, n, opts.bound);
}

void enumerate(int n, bool no_zero_rows, const std::function<void(const PermutationTableau&)>& visit) {
  for (const auto& shape : shapes_with_half_perimeter(n)) {
    for_each_filling(shape, no_zero_rows, visit);
  }
}

/// Sums a per-tableau monomial over all shapes of half-perimeter n, one
/// shape per work item.
Poly shape_parallel_sum(int n, bool no_zero_rows, const TableauOptions& opts,
                        const std::function<Poly(const PermutationTableau&)>& weight) {
  const auto shapes = shapes_with_half_perimeter(n);
  auto partial = parallel_map(shapes.size(), opts.jobs, [&](std::size_t i) {
    std::vector<Term> terms;
    for_each_filling(shapes[i], no_zero_rows, [&](const PermutationTableau& t) {
      const Poly w = weight(t);
      terms.insert(terms.end(), w.terms().begin(), w.terms().end());
    });
    return Poly::from_terms(std::move(terms));
  });
  Poly total;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace

void for_each_filling(const YoungShape& shape, bool no_zero_rows,
                      const std::function<void(const PermutationTableau&)>& visit) {
  FillingSearch(shape, no_zero_rows, visit).run();
}

void enumerate_pt(int n, const std::function<void(const PermutationTableau&)>& visit,
                  const TableauOptions& opts) {
  check_bound("enumerate_pt", n, opts);
  enumerate(n, false, visit);
}

void enumerate_dt(int n, const std::function<void(const PermutationTableau&)>& visit,
                  const TableauOptions& opts) {
  check_bound("enumerate_dt", n, opts);
  enumerate(n, true, visit);
}

Poly gen_pt(int n, const TableauOptions& opts) {
  check_bound("gen_pt", n, opts);
  return shape_parallel_sum(n, false, opts, [](const PermutationTableau& t) {
    const auto s = stats(t);
    return Poly::monomial(1, s.r, s.so);
  });
}

Poly gen_dt(int n, const TableauOptions& opts) {
  check_bound("gen_dt", n, opts);
  return shape_parallel_sum(n, true, opts, [](const PermutationTableau& t) {
    const auto s = stats(t);
    return Poly::monomial(1, s.r, s.so);
  });
}

Poly signed_dt_sum(int n, const TableauOptions& opts) {
  check_bound("signed_dt_sum", n, opts);
  return shape_parallel_sum(n, true, opts, [n](const PermutationTableau& t) {
    const auto s = stats(t);
    return Poly::monomial(s.r % 2 == 0 ? 1 : -1, 0, s.o - n);
  });
}

PermutationTableau transpose(const PermutationTableau& t) {
  if (t.has_zero_row()) throw std::invalid_argument("transpose: not a derangement tableau");
  std::vector<int> rows;
  for (int c = 0; c < t.columns(); ++c) rows.push_back(t.shape().column_height(c));
  std::vector<std::vector<std::uint8_t>> filling;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    std::vector<std::uint8_t> row;
    for (int c = 0; c < rows[static_cast<std::size_t>(r)]; ++c) row.push_back(
        static_cast<std::uint8_t>(t.at(c, r)));
    filling.push_back(std::move(row));
  }
  try {
    PermutationTableau out(YoungShape(std::move(rows)), std::move(filling));
    if (out.has_zero_row()) throw InvalidTranspose("transpose has a zero row");
    return out;
  } catch (const std::invalid_argument& e) {
    throw InvalidTranspose(std::string("transpose is not a permutation tableau: ") + e.what());
  }
}

std::string dump(const PermutationTableau& t) {
  std::string out;
  if (t.rows() == 0) {
    out = "empty";
  } else {
    for (int r = 0; r < t.rows(); ++r) {
      if (r > 0) out += ",";
      out += std::to_string(t.shape().row_lengths()[static_cast<std::size_t>(r)]);
    }
  }
  out += "\n";
  for (const auto& row : t.filling()) {
    if (row.empty()) {
      out += "-";
    } else {
      for (auto v : row) out += v ? '1' : '0';
    }
    out += "\n";
  }
  return out;
}

PermutationTableau parse_tableau(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("parse_tableau: missing shape line");
  std::vector<int> lengths;
  if (line != "empty") {
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        lengths.push_back(std::stoi(field));
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_tableau: bad shape line '" + line + "'");
      }
    }
  }
  std::vector<std::vector<std::uint8_t>> filling;
  for (std::size_t r = 0; r < lengths.size(); ++r) {
    if (!std::getline(in, line)) throw std::invalid_argument("parse_tableau: missing row");
    std::vector<std::uint8_t> row;
    if (line != "-") {
      for (char ch : line) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("parse_tableau: bad cell");
        row.push_back(static_cast<std::uint8_t>(ch - '0'));
      }
    }
    filling.push_back(std::move(row));
  }
  return PermutationTableau(YoungShape(std::move(lengths)), std::move(filling));
}

Poly word_tableau_sum(std::string_view word) {
  std::vector<int> rows;
  int e_after = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == 'E') {
      ++e_after;
    } else if (*it == 'D') {
      rows.push_back(e_after);
    } else {
      throw std::invalid_argument("word_tableau_sum: letters must be D or E");
    }
  }
  const std::size_t first_d = word.find('D');
  if (first_d == std::string_view::npos ? !word.empty() : first_d > 0) return Poly();
  std::reverse(rows.begin(), rows.end());
  std::vector<Term> terms;
  for_each_filling(YoungShape(std::move(rows)), true, [&](const PermutationTableau& t) {
    terms.push_back(Term{1, 0, stats(t).so});
  });
  return Poly::from_terms(std::move(terms));
}

}  // namespace qeuler
