#ifndef IREAL_NEWTON_HPP
#define IREAL_NEWTON_HPP

#include <cstddef>
#include <vector>

#include "ireal/reals.hpp"

namespace ireal::newton {

// One row of the width-versus-modulus comparison: the enclosure after
// `iteration` steps, its exact width, and the worst-case modulus bound
// (initial width halved per step) a Cauchy-style computation would certify.
struct SqrtTableRow {
  std::size_t iteration;
  Rational lower;
  Rational upper;
  Rational width;
  Rational modulus_bound;
};

// Square root of a positive rational by Newton iteration from above, paired
// with the quotient from below:
//
//   upper(0) from seed 1, upper(n) = (upper(n-1) + q/upper(n-1)) / 2,
//   lower(n) = q / upper(n)
//
// Every level encloses sqrt(q) exactly: lower^2 <= q <= upper^2, and the
// width at least halves per step, which supplies the totality certificate.
reals::Real sqrt(const Rational& q);

// Rows 1..iters of the comparison table for sqrt(q).
std::vector<SqrtTableRow> sqrt_table(const Rational& q, std::size_t iters);

}  // namespace ireal::newton

#endif
