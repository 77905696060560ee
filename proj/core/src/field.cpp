#include "gnch/field.hpp"

#include "gnch/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gnch {

namespace {
void require_same_size(const Field& a, const Field& b) {
    if (a.size() != b.size())
        fail(ErrorCode::MISMATCH, "field sizes differ (" + std::to_string(a.size()) +
                                      " vs " + std::to_string(b.size()) + ")");
}
}  // namespace

double field_min(const Field& f) {
    double m = f.empty() ? 0.0 : f[0];
    for (double x : f) m = std::min(m, x);
    return m;
}

double field_max(const Field& f) {
    double m = f.empty() ? 0.0 : f[0];
    for (double x : f) m = std::max(m, x);
    return m;
}

double field_max_abs(const Field& f) {
    double m = 0.0;
    for (double x : f) m = std::max(m, std::fabs(x));
    return m;
}

Field mul(const Field& a, const Field& b) {
    require_same_size(a, b);
    Field r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
    return r;
}

Field add(const Field& a, const Field& b) {
    require_same_size(a, b);
    Field r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Field sub(const Field& a, const Field& b) {
    require_same_size(a, b);
    Field r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Field scaled(const Field& a, double c) {
    Field r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

void axpy(Field& y, double c, const Field& x) {
    require_same_size(y, x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

}  // namespace gnch
