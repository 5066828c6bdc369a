#include "invk/util.hpp"

namespace invk {

int lex_rank1(std::span<const int> a, std::span<const int> p) {
  int rank = 0;
  for (std::size_t i = 0; i < a.size(); ++i) rank = rank * p[i] + (a[i] - 1);
  return rank + 1;
}

int revlex_rank1(std::span<const int> a, std::span<const int> p) {
  int rank = 0;
  for (std::size_t i = a.size(); i-- > 0;) rank = rank * p[i] + (a[i] - 1);
  return rank + 1;
}

void lex_unrank1(int rank, std::span<const int> p, std::vector<int>& out) {
  out.assign(p.size(), 1);
  int r = rank - 1;
  for (std::size_t i = p.size(); i-- > 0;) {
    out[i] = r % p[i] + 1;
    r /= p[i];
  }
}

void revlex_unrank1(int rank, std::span<const int> p, std::vector<int>& out) {
  out.assign(p.size(), 1);
  int r = rank - 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = r % p[i] + 1;
    r /= p[i];
  }
}

int cell_rank1(std::span<const int> a, std::span<const int> p, Ordering ord) {
  return ord == Ordering::RevLex ? revlex_rank1(a, p) : lex_rank1(a, p);
}

void cell_unrank1(int rank, std::span<const int> p, Ordering ord,
                  std::vector<int>& out) {
  if (ord == Ordering::RevLex)
    revlex_unrank1(rank, p, out);
  else
    lex_unrank1(rank, p, out);
}

long long checked_product(std::span<const int> xs) {
  long long prod = 1;
  for (int x : xs) {
    prod *= x;
    if (prod < 0 || prod > (1LL << 40))
      throw InputError("product overflow in checked_product");
  }
  return prod;
}

std::string join_ints(std::span<const int> xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

bool is_permutation0(std::span<const int> perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[v])
      return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> invert_permutation0(std::span<const int> perm) {
  std::vector<int> inv(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i)
    inv[perm[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace invk
