#include "steinberg/prime_field.hpp"

#include <string>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 32;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  thread_local std::uint64_t validated = 0;
  if (p == validated) return;
  if (p >= kMaxPrime || !is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " must be a prime below 2^32");
  }
  validated = p;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(int rows, int cols, std::uint64_t prime)
    : rows_(rows), cols_(cols), prime_(prime) {
  if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be nonnegative");
  require_prime(prime);
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

PrimeFieldMatrix PrimeFieldMatrix::identity(int n, std::uint64_t prime) {
  PrimeFieldMatrix m(n, n, prime);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

PrimeFieldMatrix PrimeFieldMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t prime) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  PrimeFieldMatrix m(r, c, prime);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
      throw DomainError("matrix rows must all have the same length");
    }
    for (int j = 0; j < c; ++j) {
      m.set_signed(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

std::uint64_t PrimeFieldMatrix::at(int r, int c) const {
  return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c)];
}

void PrimeFieldMatrix::set(int r, int c, std::uint64_t value) {
  data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
        static_cast<std::size_t>(c)] = value % prime_;
}

void PrimeFieldMatrix::set_signed(int r, int c, std::int64_t value) {
  set(r, c, reduce_signed(value));
}

std::uint64_t PrimeFieldMatrix::reduce_signed(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(prime_);
  std::int64_t v = value % p;
  if (v < 0) v += p;
  return static_cast<std::uint64_t>(v);
}

std::uint64_t PrimeFieldMatrix::inverse(std::uint64_t value) const {
  value %= prime_;
  if (value == 0) throw DomainError("zero has no inverse");
  return pow_mod(value, prime_ - 2, prime_);
}

PrimeFieldMatrix PrimeFieldMatrix::multiply(const PrimeFieldMatrix& other) const {
  if (cols_ != other.rows_ || prime_ != other.prime_) {
    throw DomainError("matrix product needs matching inner dimension and modulus");
  }
  PrimeFieldMatrix out(rows_, other.cols_, prime_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const std::uint64_t a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const std::uint64_t b = other.at(k, j);
        if (b == 0) continue;
        out.set(i, j, out.at(i, j) + a * b % prime_);
      }
    }
  }
  return out;
}

PrimeFieldMatrix PrimeFieldMatrix::add(const PrimeFieldMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || prime_ != other.prime_) {
    throw DomainError("matrix sum needs matching dimensions and modulus");
  }
  PrimeFieldMatrix out(rows_, cols_, prime_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = (data_[i] + other.data_[i]) % prime_;
  }
  return out;
}

PrimeFieldMatrix PrimeFieldMatrix::scaled(std::uint64_t factor) const {
  factor %= prime_;
  PrimeFieldMatrix out(rows_, cols_, prime_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * factor % prime_;
  return out;
}

PrimeFieldMatrix PrimeFieldMatrix::transposed() const {
  PrimeFieldMatrix out(cols_, rows_, prime_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  }
  return out;
}

PrimeFieldMatrix PrimeFieldMatrix::block(int row0, int col0, int rows, int cols) const {
  if (row0 < 0 || col0 < 0 || row0 + rows > rows_ || col0 + cols > cols_) {
    throw DomainError("block exceeds matrix bounds");
  }
  PrimeFieldMatrix out(rows, cols, prime_);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out.set(i, j, at(row0 + i, col0 + j));
  }
  return out;
}

PrimeFieldMatrix PrimeFieldMatrix::column_block(int begin, int end) const {
  return block(0, begin, rows_, end - begin);
}

PrimeFieldMatrix PrimeFieldMatrix::augmented(const PrimeFieldMatrix& right) const {
  if (rows_ != right.rows_ || prime_ != right.prime_) {
    throw DomainError("augmenting needs matching row count and modulus");
  }
  PrimeFieldMatrix out(rows_, cols_ + right.cols_, prime_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (int j = 0; j < right.cols_; ++j) out.set(i, cols_ + j, right.at(i, j));
  }
  return out;
}

bool PrimeFieldMatrix::is_zero() const {
  for (const std::uint64_t v : data_) {
    if (v != 0) return false;
  }
  return true;
}

int PrimeFieldMatrix::rank() const {
  PrimeFieldMatrix work = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = col; j < cols_; ++j) {
        const std::uint64_t tmp = work.at(rank, j);
        work.set(rank, j, work.at(pivot, j));
        work.set(pivot, j, tmp);
      }
    }
    const std::uint64_t inv = inverse(work.at(rank, col));
    for (int j = col; j < cols_; ++j) work.set(rank, j, work.at(rank, j) * inv % prime_);
    for (int r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      const std::uint64_t factor = work.at(r, col);
      if (factor == 0) continue;
      for (int j = col; j < cols_; ++j) {
        const std::uint64_t sub = factor * work.at(rank, j) % prime_;
        work.set(r, j, work.at(r, j) + prime_ - sub);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace steinberg
