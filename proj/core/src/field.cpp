#include "hsurf/field.hpp"

#include <sstream>

#include "hsurf/error.hpp"

namespace hsurf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MixedDegree: return "MixedDegree";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::FieldDisagreement: return "FieldDisagreement";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::DegreeBelowRange: return "DegreeBelowRange";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::ScanExhausted: return "ScanExhausted";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::NotSingular: return "NotSingular";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::MixedParameters: return "MixedParameters";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 11; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorKind::BadPrime, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_integer(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) {
    throw Error(ErrorKind::BadPrime, "denominator of " + q.get_str() + " vanishes modulo " + std::to_string(p_));
  }
  Element n = static_cast<Element>(num.get_ui());
  Element d = static_cast<Element>(den.get_ui());
  return mul(n, inv(d));
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return 1 / a;
}

FieldConfig FieldConfig::parse(const std::string& text) {
  if (text == "exact") return exact();
  FieldConfig cfg{Mode::PrimeFields, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.rfind("fp:", 0) != 0) {
      throw Error(ErrorKind::ParseError, "field item '" + item + "' is neither 'exact' nor 'fp:<prime>'");
    }
    std::uint64_t p = 0;
    try {
      p = std::stoull(item.substr(3));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad prime in field item '" + item + "'");
    }
    if (p >= (1ull << 31) || !is_prime(p)) {
      throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not a prime below 2^31");
    }
    for (auto q : cfg.primes) {
      if (q == p) throw Error(ErrorKind::BadPrime, "primes must be distinct");
    }
    cfg.primes.push_back(static_cast<std::uint32_t>(p));
  }
  if (cfg.primes.empty()) throw Error(ErrorKind::ParseError, "empty --field value");
  return cfg;
}

std::string FieldConfig::to_string() const {
  if (mode == Mode::Exact) return "exact";
  std::string out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += ',';
    out += "fp:" + std::to_string(primes[i]);
  }
  return out;
}

std::vector<std::string> FieldConfig::field_names() const {
  if (mode == Mode::Exact) return {"exact"};
  std::vector<std::string> out;
  for (auto p : primes) out.push_back("fp:" + std::to_string(p));
  return out;
}

void FieldConfig::validate_for(int n, int d) const {
  if (mode == Mode::Exact) return;
  const std::uint64_t floor = 2ull * static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(n + 1);
  for (auto p : primes) {
    if (p <= floor) {
      throw Error(ErrorKind::BadPrime, "prime " + std::to_string(p) + " must exceed 2*d*(n+1) = " + std::to_string(floor));
    }
  }
}

}  // namespace hsurf
