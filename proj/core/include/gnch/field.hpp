#ifndef GNCH_FIELD_HPP
#define GNCH_FIELD_HPP

#include <vector>

namespace gnch {

// Nodal values of a real function on a periodic uniform grid.
using Field = std::vector<double>;

double field_min(const Field& f);
double field_max(const Field& f);
double field_max_abs(const Field& f);

// Pointwise arithmetic. All binary forms require equal lengths.
Field mul(const Field& a, const Field& b);
Field add(const Field& a, const Field& b);
Field sub(const Field& a, const Field& b);
Field scaled(const Field& a, double c);
void axpy(Field& y, double c, const Field& x);  // y += c*x

}  // namespace gnch

#endif
