#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace invk {

// Cell orderings for sequence arrangements.  RevLex ranks tuples with the
// first index varying fastest, Lex with the last index varying fastest.
enum class Ordering { RevLex, Lex };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required level lies beyond the truncation of a Gamma-category.
struct TruncationError : Error {
  int level;
  explicit TruncationError(int lvl)
      : Error("required level " + std::to_string(lvl) +
              " exceeds the truncation bound"),
        level(lvl) {}
};

// Preimage of a codomain block meets more than one domain block.
struct BlockMismatch : Error {
  using Error::Error;
};

// Malformed or inconsistent input data.
struct InputError : Error {
  using Error::Error;
};

// Rank of a tuple a with a[i] in {1..p[i]}, both 1-based.
//
//   lex:    rank = 1 + sum_i (a_i - 1) * p_{i+1} * ... * p_k
//   revlex: rank = a_1 + sum_{i>=2} (a_i - 1) * p_1 * ... * p_{i-1}
//
// The lex rank is the coordinate of the tuple under the left-normalized
// iterated smash identification; the revlex rank is the position of a cell
// in a sequence arrangement.
int lex_rank1(std::span<const int> a, std::span<const int> p);
int revlex_rank1(std::span<const int> a, std::span<const int> p);
void lex_unrank1(int rank, std::span<const int> p, std::vector<int>& out);
void revlex_unrank1(int rank, std::span<const int> p, std::vector<int>& out);

int cell_rank1(std::span<const int> a, std::span<const int> p, Ordering ord);
void cell_unrank1(int rank, std::span<const int> p, Ordering ord,
                  std::vector<int>& out);

long long checked_product(std::span<const int> xs);

// Mixed-radix counter with 0-based digits; the last digit advances fastest.
// Radix entries must be positive, otherwise the range is empty and `done`
// starts out true.  An empty radix vector yields exactly one (empty) tuple.
struct Odometer {
  std::vector<int> radix;
  std::vector<int> digits;
  bool done = false;

  explicit Odometer(std::vector<int> r) : radix(std::move(r)) {
    for (int x : radix)
      if (x <= 0) done = true;
    digits.assign(radix.size(), 0);
  }

  void advance() {
    for (std::size_t i = radix.size(); i-- > 0;) {
      if (++digits[i] < radix[i]) return;
      digits[i] = 0;
    }
    done = true;
  }

  // Rank of the current tuple with the last digit fastest.
  std::size_t rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < digits.size(); ++i)
      r = r * static_cast<std::size_t>(radix[i]) +
          static_cast<std::size_t>(digits[i]);
    return r;
  }
};

std::string join_ints(std::span<const int> xs, char sep = ',');

// Permutations are stored one-line, 0-based: perm[i] is the image of i.
bool is_permutation0(std::span<const int> perm);
std::vector<int> invert_permutation0(std::span<const int> perm);

}  // namespace invk
