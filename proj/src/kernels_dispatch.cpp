#include "strongmatch/kernels.hpp"

#include <cstdlib>

namespace strongmatch::kernels {

const KernelTable& active() {
    static const KernelTable* table = [] {
        const char* force = std::getenv("STRONGMATCH_FORCE_SCALAR");
        if (force && force[0] == '1') return &scalar_table();
        if (const KernelTable* t = avx2_table()) return t;
        return &scalar_table();
    }();
    return *table;
}

}  // namespace strongmatch::kernels
