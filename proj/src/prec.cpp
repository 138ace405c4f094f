#include "l2b/prec.hpp"

#include <algorithm>

namespace l2b {

namespace {
int g_precision = kDefaultPrecision;
}

int working_precision() { return g_precision; }

void set_working_precision(int bits) {
  g_precision = std::clamp(bits, 64, kMaxPrecision);
}

PrecisionGuard::PrecisionGuard(int bits) : saved_(g_precision) {
  set_working_precision(bits);
}

PrecisionGuard::~PrecisionGuard() { g_precision = saved_; }

}  // namespace l2b
