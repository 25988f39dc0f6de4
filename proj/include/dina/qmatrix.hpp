#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dina/bits.hpp"

namespace dina {

// J x K binary item-by-attribute design matrix.
class QMatrix {
 public:
  // Row-major entries; J, K >= 1 and every entry 0/1, else ValidationError.
  QMatrix(int items, int attributes, std::vector<std::uint8_t> entries);

  int items() const { return items_; }            // J
  int attributes() const { return attributes_; }  // K

  std::uint8_t at(int item, int attribute) const {
    return entries_[static_cast<std::size_t>(item) * attributes_ + attribute];
  }
  std::span<const std::uint8_t> row(int item) const {
    return {entries_.data() + static_cast<std::size_t>(item) * attributes_,
            static_cast<std::size_t>(attributes_)};
  }
  Mask row_mask(int item) const;  // requires attributes() <= 32
  bool row_is_zero(int item) const;

  bool operator==(const QMatrix&) const = default;

 private:
  int items_;
  int attributes_;
  std::vector<std::uint8_t> entries_;
};

// CSV: one row per item, comma-separated 0/1 tokens, all rows equal length.
// Throws ParseError naming the offending 1-based line.
QMatrix parse_qmatrix(std::istream& in);
QMatrix parse_qmatrix(const std::string& text);
QMatrix load_qmatrix(const std::string& path);
std::string to_csv(const QMatrix& q);

struct StripResult {
  QMatrix matrix;                 // the nonzero rows, order preserved
  std::vector<int> removed_rows;  // 0-based indices of dropped all-zero rows
};
// DegenerateMatrixError when every row is zero.
StripResult strip_zero_rows(const QMatrix& q);

// For each attribute k the smallest row index whose row equals e_k, ordered
// by attribute; nullopt when some e_k is missing (the matrix is incomplete).
std::optional<std::vector<int>> find_identity_rows(const QMatrix& q);

struct Condition1 {
  bool complete;
  std::vector<int> attribute_counts;  // items requiring each attribute
  bool holds;                         // complete and every count >= 3
};
Condition1 check_condition1(const QMatrix& q);

// Columns of the submatrix left after removing the identity rows, each as a
// top-to-bottom vector over the remaining rows in order.
std::vector<std::vector<std::uint8_t>> qstar_columns(const QMatrix& q,
                                                     const std::vector<int>& identity_rows);

struct Condition2 {
  bool holds;  // all columns of Q* pairwise distinct
  std::vector<std::pair<int, int>> duplicate_column_pairs;  // 0-based, k < k'
};
Condition2 check_condition2(const QMatrix& q, const std::vector<int>& identity_rows);

enum class Verdict { identifiable, not_identifiable };

struct IdentifiabilityReport {
  bool complete = false;
  // 0-based rows of the *input* matrix forming the identity block, by
  // attribute; absent iff incomplete.
  std::optional<std::vector<int>> identity_rows;
  std::vector<int> attribute_counts;
  bool condition1_holds = false;
  // Vacuously true when the matrix is incomplete (no Q* to test); the
  // verdict is then decided by condition 1 alone.
  bool condition2_holds = false;
  std::vector<std::pair<int, int>> duplicate_column_pairs;  // 0-based
  std::vector<int> zero_rows;                               // 0-based
  Verdict verdict = Verdict::not_identifiable;
};

// Strips zero rows, evaluates both conditions on the reduced matrix, and
// declares the model identifiable iff both hold.
IdentifiabilityReport identifiability_verdict(const QMatrix& q);

// Unique permutation sorting the given columns into increasing lexicographic
// order (a < b iff a has 0 where they first differ); nullopt when two
// columns are equal.  Zero-length columns compare equal.
std::optional<std::vector<int>> lexicographic_column_order(
    const std::vector<std::vector<std::uint8_t>>& columns);

}  // namespace dina
