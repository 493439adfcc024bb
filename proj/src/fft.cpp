#include "fft.hpp"

#include <map>
#include <mutex>
#include <utility>

#include <fftw3.h>

namespace holo::fft {
namespace {

struct PlanPair {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
};

// FFTW planning is not thread-safe; execution of an existing plan is.
class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plans] : plans_) {
            fftw_destroy_plan(plans.forward);
            fftw_destroy_plan(plans.backward);
        }
    }

    PlanPair get(int width, int height) {
        std::lock_guard lock(mutex_);
        auto it = plans_.find({width, height});
        if (it != plans_.end()) {
            return it->second;
        }
        // Planning with FFTW_ESTIMATE never touches the arrays, so a scratch buffer suffices.
        auto* scratch = fftw_alloc_complex(static_cast<std::size_t>(width) * height);
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        PlanPair p;
        p.forward = fftw_plan_dft_2d(height, width, scratch, scratch, FFTW_FORWARD, flags);
        p.backward = fftw_plan_dft_2d(height, width, scratch, scratch, FFTW_BACKWARD, flags);
        fftw_free(scratch);
        if (!p.forward || !p.backward) {
            throw Error("FFTW failed to create a plan");
        }
        plans_.emplace(std::make_pair(width, height), p);
        return p;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, PlanPair> plans_;
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

fftw_complex* as_fftw(std::span<complex> data) {
    return reinterpret_cast<fftw_complex*>(data.data());
}

void check_size(std::span<complex> data, int width, int height) {
    if (width <= 0 || height <= 0 || data.size() != static_cast<std::size_t>(width) * height) {
        throw Error("FFT buffer does not match its declared dimensions");
    }
}

} // namespace

void forward(std::span<complex> data, int width, int height) {
    check_size(data, width, height);
    const auto plans = cache().get(width, height);
    fftw_execute_dft(plans.forward, as_fftw(data), as_fftw(data));
}

void inverse(std::span<complex> data, int width, int height) {
    check_size(data, width, height);
    const auto plans = cache().get(width, height);
    fftw_execute_dft(plans.backward, as_fftw(data), as_fftw(data));
    const double scale = 1.0 / (static_cast<double>(width) * height);
    for (auto& c : data) {
        c *= scale;
    }
}

} // namespace holo::fft
