#include "grl/error.hpp"
#include "grl/ring.hpp"

namespace grl {

FiniteRing integers_mod(std::size_t n) {
  if (n == 0) throw Error("Z_n needs n >= 1");
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = Element((a * b) % n);
  }
  return validate_ring(cyclic_additive_group(n), std::move(mul));
}

FiniteRing zero_multiplication_ring(std::size_t n) {
  if (n == 0) throw Error("zero ring needs n >= 1");
  return validate_ring(cyclic_additive_group(n), std::vector<Element>(n * n, 0));
}

FiniteRing field_f4() {
  std::vector<Element> add(16), neg(4), mul(16);
  for (Element a = 0; a < 4; ++a) {
    neg[a] = a;
    for (Element b = 0; b < 4; ++b) {
      add[a * 4 + b] = a ^ b;
      // carry-less product, then reduce x^2 = x + 1
      Element p = 0;
      for (int bit = 0; bit < 2; ++bit) {
        if (b & (1u << bit)) p ^= a << bit;
      }
      if (p & 4u) p ^= 0b111;
      mul[a * 4 + b] = p;
    }
  }
  return validate_ring(validate_additive_group(4, std::move(add), std::move(neg)), std::move(mul));
}

FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> add(n * n), neg(n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Element xa = Element(x / nb), xb = Element(x % nb);
    neg[x] = Element(a.neg(xa) * nb + b.neg(xb));
    for (std::size_t y = 0; y < n; ++y) {
      const Element ya = Element(y / nb), yb = Element(y % nb);
      add[x * n + y] = Element(a.add(xa, ya) * nb + b.add(xb, yb));
      mul[x * n + y] = Element(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  return validate_ring(validate_additive_group(n, std::move(add), std::move(neg)), std::move(mul));
}

std::vector<Element> decode_matrix(std::size_t base, std::size_t k, Element index) {
  std::vector<Element> entries(k * k);
  for (std::size_t p = k * k; p-- > 0;) {
    entries[p] = Element(index % base);
    index = Element(index / base);
  }
  return entries;
}

Element encode_matrix(std::size_t base, std::span<const Element> entries) {
  std::size_t index = 0;
  for (Element e : entries) index = index * base + e;
  return Element(index);
}

FiniteRing matrix_ring(const FiniteRing& a, std::size_t k) {
  const std::size_t q = a.order();
  std::size_t n = 1;
  for (std::size_t i = 0; i < k * k; ++i) {
    n *= q;
    if (n > 512) throw Error("matrix ring too large to tabulate");
  }
  std::vector<std::vector<Element>> decoded(n);
  for (Element x = 0; x < n; ++x) decoded[x] = decode_matrix(q, k, x);
  std::vector<Element> add(n * n), neg(n), mul(n * n), tmp(k * k);
  for (Element x = 0; x < n; ++x) {
    for (std::size_t p = 0; p < k * k; ++p) tmp[p] = a.neg(decoded[x][p]);
    neg[x] = encode_matrix(q, tmp);
    for (Element y = 0; y < n; ++y) {
      for (std::size_t p = 0; p < k * k; ++p) tmp[p] = a.add(decoded[x][p], decoded[y][p]);
      add[x * n + y] = encode_matrix(q, tmp);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          Element acc = 0;
          for (std::size_t l = 0; l < k; ++l) {
            acc = a.add(acc, a.mul(decoded[x][i * k + l], decoded[y][l * k + j]));
          }
          tmp[i * k + j] = acc;
        }
      }
      mul[x * n + y] = encode_matrix(q, tmp);
    }
  }
  return validate_ring(validate_additive_group(n, std::move(add), std::move(neg)), std::move(mul));
}

}  // namespace grl
