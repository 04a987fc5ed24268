#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "doldkit/arith.hpp"
#include "doldkit/seqkit.hpp"

namespace doldkit {

/// A self-map T of {0, ..., m-1}; entry i of the table is T(i).
class FiniteMap {
 public:
  FiniteMap() = default;
  /// Throws std::invalid_argument if any target is out of range.
  explicit FiniteMap(std::vector<std::size_t> table);

  std::size_t size() const noexcept { return table_.size(); }
  std::size_t operator()(std::size_t x) const { return table_.at(x); }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

 private:
  std::vector<std::size_t> table_;
};

/// Closed-orbit census: length n -> number O(n) of orbits of that length.
class OrbitSpec {
 public:
  OrbitSpec() = default;
  /// Zero counts are dropped; a zero length is rejected.
  explicit OrbitSpec(std::map<std::uint64_t, std::uint64_t> counts);

  const std::map<std::uint64_t, std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t count(std::uint64_t length) const;
  /// Sum of n * O(n): the number of periodic points.
  std::uint64_t points() const;
  /// O(1..N) as a rational window, the B-transform side of the duality.
  RatSeqPrefix window(std::size_t N) const;

  friend bool operator==(const OrbitSpec&, const OrbitSpec&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> counts_;
};

/// Square integer matrix, row-major. Dimension zero is allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t dim, std::vector<Int> entries);
  static IntMatrix identity(std::size_t dim);
  static IntMatrix zero(std::size_t dim);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const std::vector<Int>& entries() const noexcept { return entries_; }

  Int trace() const;
  Int determinant() const;
  IntMatrix pow(std::uint64_t e) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Int> entries_;
};

/// Block-diagonal sum of the given matrices.
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// Matrix text format: first token k, then k*k signed integers, whitespace separated.
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& m);

/// |{x : T^n x = x}|, computed from the cycle census.
std::uint64_t count_fixed(const FiniteMap& T, std::uint64_t n);
SeqPrefix fixed_point_counts(const FiniteMap& T, std::size_t N);

/// Cycle lengths of the functional graph; transient points are not counted.
OrbitSpec orbit_spec(const FiniteMap& T);

/// Disjoint union of cycles, shorter cycles first, on contiguous indices.
FiniteMap realize(const OrbitSpec& spec);

/// Raised by realize_sequence with the realizability verdict's witness.
class RealizabilityError : public Error {
 public:
  RealizabilityError(std::size_t n, Rat witness);
  std::size_t index() const noexcept { return n_; }
  const Rat& witness() const noexcept { return witness_; }

 private:
  std::size_t n_;
  Rat witness_;
};

/// Builds a map whose fixed-point counts match a on the whole window.
FiniteMap realize_sequence(const SeqPrefix& a);

/// trace(A^n) for n = 1..N.
SeqPrefix trace_sequence(const IntMatrix& A, std::size_t N);

/// trace(A^{p^r}) = trace(A^{p^{r-1}}) mod p^r.
bool euler_fermat_check(const IntMatrix& A, std::uint64_t p, unsigned r);

/// |det(I - A^n)| for n = 1..N.
SeqPrefix det_fix_sequence(const IntMatrix& A, std::size_t N);

/// |1 - d^n|: Nielsen numbers of iterates of a degree-d circle map.
SeqPrefix nielsen_circle(const Int& d, std::size_t N);
/// |u^n (v^n - 1)| if |u| > 1, else |v^n - 1|.
SeqPrefix nielsen_klein(const Int& u, const Int& v, std::size_t N);

/// Strict precedence in the Sharkovskii order 3, 5, 7, ..., 2*3, 2*5, ..., 4, 2, 1.
bool sharkovskii_precedes(std::uint64_t m, std::uint64_t n);

}  // namespace doldkit
