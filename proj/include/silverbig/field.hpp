#ifndef SILVERBIG_FIELD_HPP
#define SILVERBIG_FIELD_HPP

#include <string>
#include <vector>

#include "common.hpp"

namespace silverbig {

// Finite field GF(q) for the small orders used by the plane constructions.
// Elements are coded 0..q-1 as base-p digit vectors (coefficient of x^i in
// digit i); 0 and 1 are the field's zero and one. Prime orders use plain
// modular arithmetic; GF(4), GF(8), GF(9) reduce modulo x^2+x+1, x^3+x+1
// and x^2+1 respectively.
class GaloisField {
public:
  explicit GaloisField(int q) : q_(q) {
    switch (q) {
    case 2: case 3: case 5: case 7: case 11: case 13:
      p_ = q; m_ = 1; break;
    case 4: p_ = 2; m_ = 2; modulus_ = {1, 1, 1}; break;       // x^2 + x + 1
    case 8: p_ = 2; m_ = 3; modulus_ = {1, 1, 0, 1}; break;    // x^3 + x + 1
    case 9: p_ = 3; m_ = 2; modulus_ = {1, 0, 1}; break;       // x^2 + 1
    default:
      throw ParameterError("no field of order " + std::to_string(q) + " is available");
    }
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = slow_add(a, b);
        mul_[a * q + b] = slow_mul(a, b);
      }
  }

  static bool supported(int q) {
    switch (q) {
    case 2: case 3: case 4: case 5: case 7: case 8: case 9: case 11: case 13:
      return true;
    default:
      return false;
    }
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }

  int neg(int a) const {
    for (int x = 0; x < q_; ++x)
      if (add(a, x) == 0)
        return x;
    return 0;
  }

  int inv(int a) const {
    if (a == 0)
      throw ParameterError("zero has no inverse");
    for (int x = 1; x < q_; ++x)
      if (mul(a, x) == 1)
        return x;
    throw std::logic_error("field table has no inverse");
  }

private:
  std::vector<int> digits(int a) const {
    std::vector<int> d(m_, 0);
    for (int i = 0; i < m_; ++i, a /= p_)
      d[i] = a % p_;
    return d;
  }

  int encode(const std::vector<int> &d) const {
    int a = 0;
    for (int i = m_ - 1; i >= 0; --i)
      a = a * p_ + d[i];
    return a;
  }

  int slow_add(int a, int b) const {
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < m_; ++i)
      da[i] = (da[i] + db[i]) % p_;
    return encode(da);
  }

  int slow_mul(int a, int b) const {
    if (m_ == 1)
      return (a * b) % p_;
    auto da = digits(a), db = digits(b);
    std::vector<int> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // modulus_ is monic of degree m_
    for (int deg = 2 * m_ - 2; deg >= m_; --deg) {
      int c = prod[deg];
      if (!c)
        continue;
      for (int i = 0; i <= m_; ++i)
        prod[deg - m_ + i] = ((prod[deg - m_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    prod.resize(m_);
    return encode(prod);
  }

  int q_ = 0;
  int p_ = 0;
  int m_ = 1;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

} // namespace silverbig

#endif
