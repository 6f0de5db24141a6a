#pragma once

#include <stdexcept>
#include <string>

namespace sph {

class DegreeCapExceeded : public std::runtime_error {
public:
  DegreeCapExceeded(int degree, int cap);
};

// Process-wide degree limit for symmetric-function and Jack computations.
int degree_cap();
void set_degree_cap(int cap);
void check_degree(int degree);

}  // namespace sph
