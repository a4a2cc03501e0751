#include "aqg/fft.hpp"

#include <fftw3.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

namespace aqg::fft {
namespace {

struct PlanKey {
  int n1;
  int n2;
  int sign;
  auto operator<=>(const PlanKey&) const = default;
};

class PlanCache {
 public:
  fftw_plan get(int n1, int n2, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    const PlanKey key{n1, n2, sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    // FFTW_ESTIMATE does not read the buffers, but planning still wants valid
    // pointers.
    std::vector<fftw_complex> scratch_in(static_cast<std::size_t>(n1) * n2);
    std::vector<fftw_complex> scratch_out(scratch_in.size());
    fftw_plan plan =
        fftw_plan_dft_2d(n1, n2, scratch_in.data(), scratch_out.data(), sign,
                         FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void execute(int n1, int n2, int sign, const std::complex<double>* in,
             std::complex<double>* out) {
  fftw_plan plan = cache().get(n1, n2, sign);
  // Out-of-place c2c plans preserve their input; the const_cast is required by
  // the FFTW API only.
  fftw_execute_dft(
      plan,
      reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
      reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

void forward(int n1, int n2, const std::complex<double>* in, std::complex<double>* out) {
  execute(n1, n2, FFTW_FORWARD, in, out);
}

void inverse(int n1, int n2, const std::complex<double>* in, std::complex<double>* out) {
  execute(n1, n2, FFTW_BACKWARD, in, out);
}

}  // namespace aqg::fft
