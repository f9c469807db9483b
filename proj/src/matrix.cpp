#include "fractalpile/matrix.hpp"

namespace fractalpile::algebra {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BigInt determinant(IntegerMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) throw ConfigurationError("determinant of an empty matrix");
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // exact by the Bareiss identity
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

} // namespace fractalpile::algebra
