#include "hyperkey/gf2.hpp"

#include <stdexcept>

namespace hyperkey {

BitRow indicator(std::size_t width, std::size_t index) {
  BitRow row(width);
  row.set(index);
  return row;
}

void Gf2Matrix::append_row(BitRow row) {
  if (row.size() != cols_) throw std::invalid_argument("Gf2Matrix::append_row: width mismatch");
  rows_.push_back(std::move(row));
}

Gf2Matrix Gf2Matrix::with_row(BitRow row) const {
  Gf2Matrix out = *this;
  out.append_row(std::move(row));
  return out;
}

Gf2Matrix Gf2Matrix::without_row(std::size_t r) const {
  Gf2Matrix out = *this;
  out.rows_.erase(out.rows_.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

std::size_t Gf2Matrix::rank() const {
  std::vector<BitRow> work = rows_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < work.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < work.size() && !work[pivot].test(c)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rank], work[pivot]);
    for (std::size_t r = 0; r < work.size(); ++r)
      if (r != rank && work[r].test(c)) work[r] ^= work[rank];
    ++rank;
  }
  return rank;
}

LinearDecoder::LinearDecoder(const Gf2Matrix& m) : combination_(m.cols(), BitRow(m.rows())), determined_(m.cols()) {
  std::vector<BitRow> work;
  std::vector<BitRow> track;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    work.push_back(m.row(r));
    track.push_back(indicator(m.rows(), r));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < work.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < work.size() && !work[pivot].test(c)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rank], work[pivot]);
    std::swap(track[rank], track[pivot]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != rank && work[r].test(c)) {
        work[r] ^= work[rank];
        track[r] ^= track[rank];
      }
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  // Reduced row echelon form: row i reads x_{p_i} + (free columns) = track_i . y.
  for (std::size_t i = 0; i < rank; ++i) {
    const std::size_t c = pivot_cols[i];
    combination_[c] = track[i];
    determined_[c] = work[i].count() == 1;
  }
}

}  // namespace hyperkey
