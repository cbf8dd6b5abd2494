#include "isomoment/pi_scaled.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace isomoment {

PiScaled::PiScaled(BigRational coeff, int half_pi_power)
    : coeff_(std::move(coeff)), half_pi_power_(half_pi_power) {
  if (coeff_ == 0) half_pi_power_ = 0;
}

double PiScaled::to_double() const {
  return isomoment::to_double(coeff_) *
         std::pow(M_PI, static_cast<double>(half_pi_power_) / 2.0);
}

PiScaled& PiScaled::operator*=(const PiScaled& o) {
  coeff_ *= o.coeff_;
  half_pi_power_ += o.half_pi_power_;
  if (coeff_ == 0) half_pi_power_ = 0;
  return *this;
}

PiScaled& PiScaled::operator/=(const PiScaled& o) {
  if (o.coeff_ == 0) throw std::domain_error("PiScaled: division by zero");
  coeff_ /= o.coeff_;
  half_pi_power_ -= o.half_pi_power_;
  if (coeff_ == 0) half_pi_power_ = 0;
  return *this;
}

PiScaled operator+(const PiScaled& a, const PiScaled& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.half_pi_power_ != b.half_pi_power_)
    throw std::domain_error("PiScaled: adding values with different pi powers");
  return PiScaled(a.coeff_ + b.coeff_, a.half_pi_power_);
}

PiScaled operator-(const PiScaled& a, const PiScaled& b) {
  return a + PiScaled(-b.coeff(), b.half_pi_power());
}

std::string to_string(const PiScaled& v) {
  std::string s = to_string(v.coeff());
  const int h = v.half_pi_power();
  if (h == 0) return s;
  s += "*pi";
  if (h == 2) return s;
  if (h % 2 == 0) return s + "^" + std::to_string(h / 2);
  return s + "^(" + std::to_string(h) + "/2)";
}

}  // namespace isomoment
