// Compares serial and OpenMP-parallel objectwise evaluation of functor
// pairs across the default testbed.  The serial path is the reference; the
// parallel path must reproduce its report line for line.

#include <chrono>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fpf/agj.hpp"
#include "fpf/testkit.hpp"

using namespace fpf;
using clock_type = std::chrono::steady_clock;

namespace {

double run_pass(const std::vector<std::pair<FpFunctor, FpFunctor>>& pairs,
                const Testbed& bed, bool parallel,
                std::vector<ObjectwiseReport>& out) {
    auto start = clock_type::now();
    out.clear();
    for (const auto& [f, g] : pairs)
        out.push_back(check_objectwise(f, g, bed, parallel));
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 7;
    for (const auto& ring : {ring_z(), ring_zmod(8)}) {
        Testbed bed = default_testbed(ring, seed);
        std::vector<std::pair<FpFunctor, FpFunctor>> pairs;
        for (const auto& m : bed.modules) {
            pairs.emplace_back(dual(rep_functor(m)), tensor_functor(m));
            pairs.emplace_back(satellite(rep_functor(m), 1), ext1_functor(m));
        }
        for (std::uint64_t i = 0; i < 4; ++i) {
            FpFunctor f = random_functor(ring, seed + i);
            pairs.emplace_back(dual(dual(f)), f);
        }

        std::vector<ObjectwiseReport> serial, parallel;
        double ts = run_pass(pairs, bed, false, serial);
        double tp = run_pass(pairs, bed, true, parallel);

        bool identical = serial.size() == parallel.size();
        for (size_t i = 0; identical && i < serial.size(); ++i)
            identical = serial[i].lines == parallel[i].lines &&
                        serial[i].all_agree == parallel[i].all_agree;

        int threads = 1;
#ifdef _OPENMP
        threads = omp_get_max_threads();
#endif
        std::cout << ring.to_string() << ": " << pairs.size() << " pairs x "
                  << bed.modules.size() << " modules\n"
                  << "  serial   " << ts << " s\n"
                  << "  parallel " << tp << " s (" << threads << " threads, "
                  << (tp > 0 ? ts / tp : 0.0) << "x)\n"
                  << "  reports identical: " << (identical ? "yes" : "NO")
                  << "\n";
        if (!identical) return 1;
    }
    return 0;
}
