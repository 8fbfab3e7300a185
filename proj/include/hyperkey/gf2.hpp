#pragma once

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hyperkey {

using BitRow = boost::dynamic_bitset<>;

BitRow indicator(std::size_t width, std::size_t index);

/// Dense matrix over the binary field, stored as rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(std::size_t cols) : cols_(cols) {}
  Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, BitRow(cols)), cols_(cols) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_.at(r).set(c, value); }
  const BitRow& row(std::size_t r) const { return rows_.at(r); }

  void append_row(BitRow row);
  Gf2Matrix with_row(BitRow row) const;
  Gf2Matrix without_row(std::size_t r) const;

  std::size_t rank() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::vector<BitRow> rows_;
  std::size_t cols_ = 0;
};

/// Solves M x = y column by column for any right-hand side y, fixing free
/// variables to zero. x_k is the XOR of the y entries selected by
/// combination(k), so the elimination runs once per matrix.
class LinearDecoder {
 public:
  explicit LinearDecoder(const Gf2Matrix& m);

  /// Which right-hand-side rows XOR to x_k.
  const BitRow& combination(std::size_t k) const { return combination_.at(k); }
  /// True when x_k is fixed by the system (e_k lies in the row space).
  bool determined(std::size_t k) const { return determined_.at(k); }

 private:
  std::vector<BitRow> combination_;
  std::vector<bool> determined_;
};

}  // namespace hyperkey
