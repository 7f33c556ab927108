#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hsurf/field.hpp"
#include "hsurf/milnor.hpp"

namespace hsurf {

/// One polynomial evaluated under a FieldConfig: a JacobianContext per
/// configured field. run() evaluates a computation in every field and only
/// returns when all of them agree.
class Session {
 public:
  Session(RationalPolynomial f, FieldConfig config) : f_(std::move(f)), config_(std::move(config)) {
    config_.validate_for(f_.n(), f_.degree());
    if (config_.mode == FieldConfig::Mode::Exact) {
      exact_ = std::make_unique<JacobianContext<RationalField>>(f_);
    } else {
      for (auto p : config_.primes) {
        PrimeField field(p);
        primes_.push_back(std::make_unique<JacobianContext<PrimeField>>(f_.convert(field)));
      }
    }
  }

  const RationalPolynomial& polynomial() const noexcept { return f_; }
  const FieldConfig& config() const noexcept { return config_; }
  int n() const noexcept { return f_.n(); }
  int d() const noexcept { return f_.degree(); }

  // `fn` is called with a JacobianContext<PrimeField>& or
  // JacobianContext<RationalField>& and must return a comparable value.
  template <class Fn>
  auto run(const std::string& what, Fn&& fn) {
    if (exact_) return fn(*exact_);
    auto first = fn(*primes_.front());
    for (std::size_t i = 1; i < primes_.size(); ++i) {
      if (!(fn(*primes_[i]) == first)) {
        throw Error(ErrorKind::FieldDisagreement, what + ": results differ between " + primes_.front()->field().name() +
                                                      " and " + primes_[i]->field().name());
      }
    }
    return first;
  }

 private:
  RationalPolynomial f_;
  FieldConfig config_;
  std::unique_ptr<JacobianContext<RationalField>> exact_;
  std::vector<std::unique_ptr<JacobianContext<PrimeField>>> primes_;
};

}  // namespace hsurf
