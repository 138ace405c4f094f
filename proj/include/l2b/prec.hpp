#pragma once

namespace l2b {

// Working precision (bits) for all interval/ball arithmetic.  Certified
// results stay certified at any precision; raising it only tightens them.
int working_precision();
void set_working_precision(int bits);

constexpr int kDefaultPrecision = 200;
constexpr int kMaxPrecision = 2000;

// RAII precision override.
struct PrecisionGuard {
  explicit PrecisionGuard(int bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  int saved_;
};

}  // namespace l2b
