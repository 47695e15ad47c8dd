#include "rkn/tableau.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "rkn/errors.hpp"

namespace rkn {

void NystromTableau::validate() const {
    if (m < 2)
        throw Error("tableau: need at least 2 stages (c must start at 0 and end at 1)");
    const auto mz = static_cast<std::size_t>(m);
    if (c.size() != mz || b.size() != mz || b_hat.size() != mz || a.size() != mz * mz)
        throw Error("tableau: coefficient sizes do not match the stage count");
    if (c.front() != 0.0 || c.back() != 1.0)
        throw Error("tableau: nodes must satisfy c[0] = 0 and c[m-1] = 1");
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            if (a_at(i, j) != 0.0)
                throw Error("tableau: a[" + std::to_string(i) + "][" + std::to_string(j) +
                            "] breaks strict lower triangularity");
    for (double x : c)
        if (!std::isfinite(x)) throw Error("tableau: non-finite node");
    for (double x : a)
        if (!std::isfinite(x)) throw Error("tableau: non-finite stage coefficient");
    for (double x : b)
        if (!std::isfinite(x)) throw Error("tableau: non-finite position weight");
    for (double x : b_hat)
        if (!std::isfinite(x)) throw Error("tableau: non-finite velocity weight");
}

}  // namespace rkn
