// Times the OpenMP kernels against the serial reference on the two heavy
// paths: building + validating a large square ring (the associativity
// sweep dominates) and a zero-divisor search on an iterated connected
// sum.  Results must match bit for bit or this exits nonzero.

#include <chrono>
#include <cstdio>
#include <string>

#include "tc/bounds.hpp"
#include "tc/ringfile.hpp"

using namespace tc;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int mismatches = 0;

void check(bool ok, const char* what) {
  if (!ok) {
    std::printf("MISMATCH: %s\n", what);
    ++mismatches;
  }
}

}  // namespace

int main() {
  const CoeffRing Z = CoeffRing::integers();
  std::printf("threads: %d\n", hardware_threads());

  {
    // 16-dimensional exterior algebra; its square has 256 basis elements,
    // so validation sweeps 255^3 ~ 16.6M triples.
    const RingPtr base = exterior_algebra(Z, {1, 3, 5, 7});

    auto t0 = Clock::now();
    SquareRing serial(base, {}, Exec::Serial);
    const double ts = ms_since(t0);

    t0 = Clock::now();
    SquareRing parallel(base, {}, Exec::Parallel);
    const double tp = ms_since(t0);

    check(serialize_ring(serial.product()) == serialize_ring(parallel.product()),
          "square tables differ");
    std::printf("square Ext(1,3,5,7):  serial %8.1f ms   parallel %8.1f ms   x%.2f\n",
                ts, tp, ts / tp);
  }

  {
    // four summands of S^1 x S^3: 10 basis elements, 9 zero-divisor
    // generators, frontier search up to the vanishing stage
    RingPtr sum = exterior_algebra(Z, {1, 3});
    for (int s = 1; s < 4; ++s)
      sum = connected_sum_ring(sum, exterior_algebra(Z, {1, 3}), 4);

    SearchOptions ser, par;
    ser.policy = Exec::Serial;
    par.policy = Exec::Parallel;

    auto t0 = Clock::now();
    SquareRing sqs(sum, {}, Exec::Serial);
    const NilResult a = zero_divisor_nilpotency(sqs, ser);
    const double ts = ms_since(t0);

    t0 = Clock::now();
    SquareRing sqp(sum, {}, Exec::Parallel);
    const NilResult b = zero_divisor_nilpotency(sqp, par);
    const double tp = ms_since(t0);

    check(a.nil == b.nil, "nilpotency differs");
    check(a.witness.has_value() == b.witness.has_value() &&
              (!a.witness ||
               a.witness->factor_indices == b.witness->factor_indices),
          "witnesses differ");
    std::printf("zcl 4-fold conn sum:  serial %8.1f ms   parallel %8.1f ms   x%.2f   (nil %d)\n",
                ts, tp, ts / tp, a.nil);
  }

  if (mismatches) {
    std::printf("FAILED: %d mismatch(es)\n", mismatches);
    return 1;
  }
  std::printf("serial and parallel kernels agree\n");
  return 0;
}
