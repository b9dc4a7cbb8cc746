#pragma once

#include <cstdint>
#include <vector>

namespace steinberg {

// Dense matrix over F_p for a configurable prime p < 2^32, with exact rank
// computation via Gaussian elimination.  Entries are stored reduced mod p.
class PrimeFieldMatrix {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647;

  PrimeFieldMatrix() : PrimeFieldMatrix(0, 0) {}
  PrimeFieldMatrix(int rows, int cols, std::uint64_t prime = kDefaultPrime);

  static PrimeFieldMatrix identity(int n, std::uint64_t prime = kDefaultPrime);
  static PrimeFieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                    std::uint64_t prime = kDefaultPrime);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t prime() const { return prime_; }

  std::uint64_t at(int r, int c) const;
  void set(int r, int c, std::uint64_t value);
  void set_signed(int r, int c, std::int64_t value);

  std::uint64_t reduce_signed(std::int64_t value) const;
  std::uint64_t inverse(std::uint64_t value) const;

  PrimeFieldMatrix multiply(const PrimeFieldMatrix& other) const;
  PrimeFieldMatrix add(const PrimeFieldMatrix& other) const;
  PrimeFieldMatrix scaled(std::uint64_t factor) const;
  PrimeFieldMatrix transposed() const;
  PrimeFieldMatrix block(int row0, int col0, int rows, int cols) const;
  PrimeFieldMatrix column_block(int begin, int end) const;
  PrimeFieldMatrix augmented(const PrimeFieldMatrix& right) const;

  bool is_zero() const;
  int rank() const;

  bool operator==(const PrimeFieldMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::uint64_t prime_ = kDefaultPrime;
  std::vector<std::uint64_t> data_;
};

}  // namespace steinberg
