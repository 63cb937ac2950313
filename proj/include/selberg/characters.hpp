#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace selberg {

// Dirichlet character mod q, represented through generator images so that
// conductor and primitivity come out exact. Values are roots of unity stored
// as exact fractions of a full turn; the complex table is derived.
class DirichletCharacter {
 public:
  using Complex = std::complex<double>;

  int modulus() const { return q_; }
  int conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == q_; }
  bool is_principal() const { return order_ == 1; }
  int order() const { return order_; }
  // Deterministic index within character_group(q); documented in README.
  int index() const { return index_; }

  Complex operator()(std::int64_t n) const {
    std::int64_t r = n % q_;
    if (r < 0) r += q_;
    return values_[static_cast<std::size_t>(r)];
  }

  // chi(n) as an exact fraction of a turn: chi(n) = e(turn_num(n)/turn_den),
  // or nullopt encoded as turn_den = 0 when gcd(n, q) > 1.
  std::int64_t turn_num(std::int64_t n) const {
    std::int64_t r = n % q_; if (r < 0) r += q_;
    return turns_[static_cast<std::size_t>(r)];
  }
  std::int64_t turn_den() const { return order_; }
  bool is_coprime(std::int64_t n) const { return turns_[static_cast<std::size_t>(((n % q_) + q_) % q_)] >= 0; }

  // The primitive character mod conductor() inducing this one.
  DirichletCharacter primitive_inducing() const;

  // chi(-1); +1 for even characters, -1 for odd.
  int parity() const { return (*this)(-1).real() > 0 ? 1 : -1; }

  friend std::vector<DirichletCharacter> character_group(int q);
  friend class CharacterBuilder;

 private:
  DirichletCharacter() = default;
  int q_ = 1, conductor_ = 1, order_ = 1, index_ = 0;
  std::vector<std::int64_t> turns_;  // turns_[r] = k with chi(r) = e(k/order_), -1 if not coprime
  std::vector<Complex> values_;
};

// All phi(q) characters mod q in a deterministic order: index 0 is principal;
// the order follows the mixed-radix exponent vector over the CRT components
// of (Z/q)^*, smallest primes first.
std::vector<DirichletCharacter> character_group(int q);

// Convenience: the character mod q with the given index.
DirichletCharacter character(int q, int index);

}  // namespace selberg
