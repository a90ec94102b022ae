#pragma once

#include <complex>

namespace rov {

using Complex = std::complex<double>;

// Parameters of one class-B problem instance: f(0)=0, f'(0)=alpha,
// f''(0)=M*beta, |z f''(z)| <= M on the unit disk, third-derivative
// direction lambda, evaluation point z0.
struct ClassBParams {
    Complex alpha;
    Complex beta;
    double M = 0.0;
    Complex lambda;
    Complex z0;
};

// Parameters of one class-P problem instance: f(0)=0, f'(0)=alpha,
// Re(z f''(z)) > -M on the unit disk, f''(0)=2*M*lambda, point z0.
struct ClassPParams {
    Complex alpha;
    double M = 0.0;
    Complex lambda;
    Complex z0;
};

}  // namespace rov
